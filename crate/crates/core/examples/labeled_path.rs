//! The labeled path x1 - x2 - x3 - x4 with labels 2, 2, 1, 1: its distance
//! matrix, center of distances, balls and centered spheres.

use ultratree::fixtures::path_tree;
use ultratree::io::{matrix_to_csv, tree_to_json};
use ultratree::metric::{
    ball, center_of_distances, distance_set, enumerate_balls, enumerate_centered_spheres, pointwise_distance_set,
    BallKind,
};
use ultratree::tree::{canonical_labeling, distance_matrix, PathMaxIndex};
use ultratree::Rational;

fn main() {
    let tree = path_tree();
    print!("{}", tree_to_json(&tree));

    let idx = PathMaxIndex::new(&tree);
    println!("d(x1, x4) = {}", idx.dl_by_id("x1", "x4").unwrap());
    println!("d(x3, x4) = {}", idx.dl_by_id("x3", "x4").unwrap());

    let s = distance_matrix(&tree).unwrap();
    print!("\n{}", matrix_to_csv(&s));
    println!("D(X) = {}", distance_set(&s));
    for p in 0..s.len() {
        println!("D_{}(X) = {}", s.point(p), pointwise_distance_set(&s, p).unwrap());
    }
    println!("C(X) = {}", center_of_distances(&s));

    println!("\nopen balls:");
    for b in enumerate_balls(&s, BallKind::Open) {
        println!("  B({}, {}) = {:?}", s.point(b.center), b.radius, s.ids_of(&b.members));
    }
    let closed = ball(&s, s.index_of("x3").unwrap(), &Rational::from_integer(2), BallKind::Closed).unwrap();
    println!("closed ball around x3 of radius 2: {:?}", s.ids_of(&closed.members));

    println!("\ncentered spheres:");
    for c in enumerate_centered_spheres(&s) {
        println!("  {:?} center {} radius {}", s.ids_of(&c.subset), s.point(c.center), c.radius);
    }

    // relabeling with different values below the distances leaves the space alone
    let bigger = tree.relabeled(["2", "2", "1", "1/3"].map(|l| l.parse().unwrap()).to_vec()).unwrap();
    let canonical = canonical_labeling(&bigger).unwrap();
    println!("\ncanonical labels: {:?}", canonical.labels().iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(distance_matrix(&canonical).unwrap(), distance_matrix(&bigger).unwrap());
}
