//! Random labeled trees: their spaces, the theorem suite over a corpus, and
//! path-maximum queries on a large tree.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ultratree::explorer::{check_theorem_suite, random_labeled_tree, random_tree_corpus};
use ultratree::io::{matrix_to_csv, tree_to_json};
use ultratree::rational::parse_list;
use ultratree::tree::{distance_matrix, PathMaxIndex};

fn main() {
    let pool = parse_list("0,1,2,3").unwrap();
    let t = random_labeled_tree(6, &pool, 42).unwrap();
    print!("{}", tree_to_json(&t));
    print!("{}", matrix_to_csv(&distance_matrix(&t).unwrap()));

    let corpus = random_tree_corpus(500, 2, 12, &pool, 1).unwrap();
    let mut failed = 0;
    for t in &corpus {
        let report = check_theorem_suite(&distance_matrix(t).unwrap(), true);
        failed += !report.all_passed() as usize;
    }
    println!("\ntheorem suite on {} random trees: {failed} failures", corpus.len());

    let n = 200_000;
    let big = random_labeled_tree(n, &parse_list("0,1,2,3,5/2,7").unwrap(), 7).unwrap();
    let start = Instant::now();
    let idx = PathMaxIndex::new(&big);
    let built = start.elapsed();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = Instant::now();
    let mut top = 0;
    for _ in 0..200_000 {
        top = top.max(idx.query_rank(rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    println!(
        "n = {n}: index built in {built:.2?}, 200000 queries in {:.2?}, largest answer {}",
        start.elapsed(),
        idx.label_values()[top as usize]
    );
}
