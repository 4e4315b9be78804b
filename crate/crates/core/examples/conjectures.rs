//! Runs the three conjecture campaigns on small spaces:
//! the bound `|C(X)| <= 1 + floor(log2 n)`, the all-subsets-are-spheres
//! characterization of the three-point type, and closed balls of
//! tree-generated spaces being centered spheres.

use std::time::Instant;

use ultratree::explorer::{check_closed_balls, check_con3, check_hol, ClosedBallSource};
use ultratree::rational::parse_list;

fn main() {
    println!("center sizes");
    for n in 1..=8 {
        let start = Instant::now();
        let r = check_con3(n).unwrap();
        println!(
            "  n = {n}: {:>5} classes, max |C| = {}, bound {}, {:?} ({:.2?})",
            r.classes_checked,
            r.stat("max_center_size").unwrap(),
            r.stat("bound").unwrap(),
            r.check("center_size_at_most_bound").unwrap().verdict,
            start.elapsed()
        );
        if let Some(w) = r.witnesses.iter().find(|w| w.check == "bound_attained") {
            println!("         extremal: {}", w.dendrogram.as_deref().unwrap_or("?"));
        }
    }

    println!("\nspaces in which every subset is a centered sphere");
    for n in 3..=6 {
        let start = Instant::now();
        let r = check_hol(n).unwrap();
        println!(
            "  n = {n}: {} satisfying of {} classes, {:?} ({:.2?})",
            r.stat("satisfying_classes").unwrap(),
            r.classes_checked,
            r.checks[0].verdict,
            start.elapsed()
        );
        for w in &r.witnesses {
            println!("         {} {}", w.dendrogram.as_deref().unwrap_or("?"), w.label);
        }
    }

    println!("\nclosed balls of tree-generated spaces");
    for n in 2..=6 {
        let r = check_closed_balls(&ClosedBallSource::Enumerated(n)).unwrap();
        let c = r.check("closed_balls_are_spheres").unwrap();
        println!("  n = {n}: {} UT classes of {}, {:?}", r.stat("ut_instances").unwrap(), r.classes_checked, c.verdict);
    }
    let source = ClosedBallSource::RandomTrees {
        count: 1000,
        min_n: 2,
        max_n: 12,
        pool: parse_list("0,1,2,3").unwrap(),
        seed: 2024,
    };
    let start = Instant::now();
    let r = check_closed_balls(&source).unwrap();
    for c in &r.checks {
        println!(
            "  random trees: {} {:?} ({} instances) ({:.2?})",
            c.name,
            c.verdict,
            c.passed + c.failed,
            start.elapsed()
        );
    }
}
