//! Decides which small spaces are generated by labeled trees and prints the
//! certificates for the four-point classes.

use ultratree::explorer::{enumerate_dendrograms, is_ut};
use ultratree::metric::{center_of_distances, diametrical_graph, spanning_star};

fn main() {
    for n in 1..=6 {
        let classes = enumerate_dendrograms(n).unwrap();
        let ut = classes.iter().filter(|d| is_ut(&d.to_space(), 6).unwrap().is_some()).count();
        println!("n = {n}: {ut} of {} classes are tree-generated", classes.len());
    }

    println!();
    for d in enumerate_dendrograms(4).unwrap() {
        let s = d.to_space();
        let star = spanning_star(&diametrical_graph(&s)).is_some();
        print!("{d:<18} C = {:<10} star = {star:<5} ", center_of_distances(&s).to_string());
        match is_ut(&s, 6).unwrap() {
            Some(t) => {
                let edges: Vec<String> = t.edges().iter().map(|&(u, v)| format!("{}-{}", t.id(u), t.id(v))).collect();
                let labels: Vec<String> = t.labels().iter().map(ToString::to_string).collect();
                println!("tree {} labels {}", edges.join(" "), labels.join(","));
            }
            None => println!("no tree"),
        }
    }
}
