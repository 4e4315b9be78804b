//! Diametrical graphs: the complete multipartite structure, spanning stars
//! and the DOT rendering, plus merging parts into a two-block partition.

use ultratree::explorer::merge_parts;
use ultratree::fixtures::path_space;
use ultratree::io::diametrical_dot;
use ultratree::metric::{center_of_distances, diametrical_graph, multipartite_parts, spanning_star};
use ultratree::padic::{sample_space, SampleMetric};
use ultratree::rational::parse_list;
use ultratree::FiniteUltrametricSpace;

fn describe(name: &str, s: &FiniteUltrametricSpace) {
    let g = diametrical_graph(s);
    let parts = multipartite_parts(&g).unwrap();
    let named: Vec<Vec<&str>> = parts.parts.iter().map(|p| p.iter().map(|&i| s.point(i)).collect()).collect();
    println!("{name}: diam {}, {} edges, parts {named:?}", g.diameter(), g.edges().len());
    match spanning_star(&g) {
        Some(c) => println!("  spanning star centered at {}", s.point(c.center)),
        None => println!("  no spanning star"),
    }
    println!("  C(X) = {}", center_of_distances(s));
    let (a, b) = merge_parts(&named).unwrap();
    println!("  two-block merge: {a:?} | {b:?}");
}

fn main() {
    let s = path_space();
    describe("labeled path", &s);
    print!("{}", diametrical_dot(&s));

    // 0 and 2 agree mod 2, as do 1 and 3: two parts of two points
    let two_adic = sample_space(&parse_list("0,1,2,3").unwrap(), SampleMetric::PAdic(2)).unwrap();
    describe("2-adic sample {0, 1, 2, 3}", &two_adic);

    let plus = sample_space(&parse_list("0,1,2,3").unwrap(), SampleMetric::Plus).unwrap();
    describe("max-metric sample {0, 1, 2, 3}", &plus);
}
