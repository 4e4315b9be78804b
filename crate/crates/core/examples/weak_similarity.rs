//! Weak similarity: spaces with the same order pattern of distances are
//! matched by a point bijection and an increasing map between distance sets.

use ultratree::explorer::Dendrogram;
use ultratree::fixtures::{ids, x3};
use ultratree::metric::{validate_ultrametric, weak_similarity};
use ultratree::Rational;

fn main() {
    let q = |s: &str| s.parse::<Rational>().unwrap();
    // x2 and x3 are the close pair here, scaled and shifted
    let y = validate_ultrametric(
        ids(3),
        vec![vec![q("0"), q("9"), q("9")], vec![q("9"), q("0"), q("7/2")], vec![q("9"), q("7/2"), q("0")]],
    )
    .unwrap();
    let x = x3();
    let w = weak_similarity(&x, &y).expect("same pattern");
    println!(
        "bijection: {:?}",
        w.point_bijection.iter().enumerate().map(|(a, &b)| (x.point(a), y.point(b))).collect::<Vec<_>>()
    );
    for (rho, d) in &w.scale_map {
        println!("  f({rho}) = {d}");
    }
    println!("verifies: {}, inverse verifies: {}", w.verify(&x, &y), w.inverse().verify(&y, &x));
    println!("canonical dendrograms: {} and {}", Dendrogram::from_space(&x), Dendrogram::from_space(&y));

    let equilateral = ultratree::fixtures::equidistant(3, 1);
    println!("X3 vs equilateral: {:?}", weak_similarity(&x, &equilateral).map(|w| w.point_bijection));
}
