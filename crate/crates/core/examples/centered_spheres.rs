//! Which subsets are centered spheres? Compares the three-point space X3,
//! where every subset is one, with an equilateral triangle and the
//! four-point space of the labeled path.

use ultratree::fixtures::{equidistant, path_space, x3};
use ultratree::metric::{all_subsets_are_spheres, scan_subsets};
use ultratree::FiniteUltrametricSpace;

fn scan(name: &str, s: &FiniteUltrametricSpace) {
    println!("{name}: every subset a sphere = {}", all_subsets_are_spheres(s).unwrap());
    for (subset, cert) in scan_subsets(s).unwrap() {
        let ids = s.ids_of(&subset);
        match cert {
            Some(c) => println!("  {ids:?} = sphere around {} of radius {}", s.point(c.center), c.radius),
            None => println!("  {ids:?} is not a centered sphere"),
        }
    }
}

fn main() {
    scan("X3", &x3());
    scan("equilateral triangle", &equidistant(3, 1));
    scan("labeled path", &path_space());
}
