//! The p-adic norm and the two rational ultrametrics, and what their finite
//! samples look like.

use ultratree::explorer::{check_theorem_suite, is_ut};
use ultratree::io::matrix_to_csv;
use ultratree::metric::center_of_distances;
use ultratree::padic::{dp, dplus, sample_space, valuation, SampleMetric};
use ultratree::rational::parse_list;
use ultratree::Rational;

fn main() {
    for (t, p) in [("12", 2), ("1/6", 2), ("-75/8", 5), ("0", 3), ("49/9", 7)] {
        let t: Rational = t.parse().unwrap();
        let v = valuation(&t, p).unwrap();
        println!("|{t}|_{p} = {v} = {}", v.to_rational());
    }
    let (a, b): (Rational, Rational) = ("1/3".parse().unwrap(), "1/2".parse().unwrap());
    println!("d_2({a}, {b}) = {}", dp(&a, &b, 2).unwrap());
    println!("d+({a}, {b}) = {}", dplus(&a, &b).unwrap());

    let values = parse_list("0,1,2,3").unwrap();
    for metric in [SampleMetric::PAdic(2), SampleMetric::PAdic(3), SampleMetric::Plus] {
        let s = sample_space(&values, metric).unwrap();
        println!("\n{metric:?} on {{0, 1, 2, 3}}");
        print!("{}", matrix_to_csv(&s));
        println!("C = {}", center_of_distances(&s));
        match is_ut(&s, 6).unwrap() {
            Some(t) => println!(
                "generated by a tree with labels {:?}",
                t.labels().iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
            None => println!("not generated by any labeled tree"),
        }
        let report = check_theorem_suite(&s, false);
        println!("theorem suite: {}", if report.all_passed() { "all applicable checks pass" } else { "failures" });
    }
}
