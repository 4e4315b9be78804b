//! Counts weak-similarity classes of n-point ultrametric spaces and shows the
//! smallest ones as dendrograms and distance matrices.
//!
//! Run with `cargo run --release --example enumerate_classes -- 7`.

use std::time::Instant;

use ultratree::explorer::enumerate_dendrograms;
use ultratree::io::matrix_to_csv;

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(6, |a| a.parse().expect("n must be an integer"));
    for n in 1..=max_n {
        let start = Instant::now();
        let classes = enumerate_dendrograms(n).expect("within the enumeration fence");
        println!("n = {n:>2}: {:>7} classes ({:.2?})", classes.len(), start.elapsed());
    }

    println!("\nthe four-point classes:");
    for d in enumerate_dendrograms(4).unwrap() {
        println!("{d}");
        print!("{}", matrix_to_csv(&d.to_space()));
    }
}
