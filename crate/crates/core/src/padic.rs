//! The p-adic valuation on rationals and two ultrametrics built on it.
//!
//! [`dp`] is the p-adic distance `|t - w|_p`; [`dplus`] is the ultrametric on
//! the non-negative rationals that is `max(a, b)` for distinct points. Both
//! feed [`sample_space`], which turns a finite list of rationals into a
//! validated [`FiniteUltrametricSpace`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::metric::{validate_ultrametric, FiniteUltrametricSpace, MetricError};
use crate::rational::Rational;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("negative input {0}")]
    NegativeInput(Rational),
    #[error("value {0} occurs twice in the sample")]
    DuplicateValue(Rational),
    #[error("sample is empty")]
    EmptySample,
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// `|t|_p`, kept as the exponent `γ` with `|t|_p = p^{-γ}`; `None` for `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicNorm {
    prime: u64,
    exponent: Option<i64>,
}

impl PAdicNorm {
    pub fn zero(prime: u64) -> Self {
        PAdicNorm { prime, exponent: None }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The valuation exponent `γ`, or `None` for the zero norm.
    pub fn exponent(&self) -> Option<i64> {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.exponent.is_none()
    }

    /// The norm as an exact rational `p^{-γ}`.
    pub fn to_rational(&self) -> Rational {
        match self.exponent {
            None => Rational::zero(),
            Some(g) => Rational::pow(&BigInt::from(self.prime), -g),
        }
    }

    /// `|t|_p · |w|_p`; panics when the primes differ.
    pub fn product(&self, other: &PAdicNorm) -> PAdicNorm {
        assert_eq!(self.prime, other.prime, "norms over different primes");
        let exponent = match (self.exponent, other.exponent) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        PAdicNorm { prime: self.prime, exponent }
    }
}

impl PartialOrd for PAdicNorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.prime != other.prime {
            return None;
        }
        Some(match (self.exponent, other.exponent) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            // larger exponent, smaller norm
            (Some(a), Some(b)) => b.cmp(&a),
        })
    }
}

impl fmt::Display for PAdicNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            None => f.write_str("0"),
            Some(g) => write!(f, "{}^{}", self.prime, -g),
        }
    }
}

pub fn check_prime(p: u64) -> Result<(), PadicError> {
    if primal_check::miller_rabin(p) {
        Ok(())
    } else {
        Err(PadicError::NotPrime(p))
    }
}

/// Exponent of `p` in a nonzero integer.
fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// The p-adic norm `|t|_p`.
pub fn valuation(t: &Rational, p: u64) -> Result<PAdicNorm, PadicError> {
    check_prime(p)?;
    if t.is_zero() {
        return Ok(PAdicNorm::zero(p));
    }
    let bp = BigInt::from(p);
    let gamma = multiplicity(t.numer(), &bp) - multiplicity(t.denom(), &bp);
    Ok(PAdicNorm { prime: p, exponent: Some(gamma) })
}

/// `d_p(t, w) = |t - w|_p` in exponent form.
pub fn dp_norm(t: &Rational, w: &Rational, p: u64) -> Result<PAdicNorm, PadicError> {
    valuation(&(t - w), p)
}

/// `d_p(t, w) = |t - w|_p` as an exact rational.
pub fn dp(t: &Rational, w: &Rational, p: u64) -> Result<Rational, PadicError> {
    dp_norm(t, w, p).map(|n| n.to_rational())
}

/// `max(a, b)` for `a ≠ b`, else 0; defined on non-negative inputs.
pub fn dplus(a: &Rational, b: &Rational) -> Result<Rational, PadicError> {
    for v in [a, b] {
        if v.is_negative() {
            return Err(PadicError::NegativeInput(v.clone()));
        }
    }
    Ok(if a == b { Rational::zero() } else { a.max(b).clone() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMetric {
    PAdic(u64),
    Plus,
}

impl SampleMetric {
    pub fn distance(&self, a: &Rational, b: &Rational) -> Result<Rational, PadicError> {
        match *self {
            SampleMetric::PAdic(p) => dp(a, b, p),
            SampleMetric::Plus => dplus(a, b),
        }
    }
}

/// The finite subspace on `values` under the chosen metric. Points are
/// named by the canonical text of their value.
pub fn sample_space(values: &[Rational], metric: SampleMetric) -> Result<FiniteUltrametricSpace, PadicError> {
    if values.is_empty() {
        return Err(PadicError::EmptySample);
    }
    match metric {
        SampleMetric::PAdic(p) => check_prime(p)?,
        SampleMetric::Plus => {
            if let Some(v) = values.iter().find(|v| v.is_negative()) {
                return Err(PadicError::NegativeInput(v.clone()));
            }
        }
    }
    let mut sorted: Vec<&Rational> = values.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(PadicError::DuplicateValue(w[0].clone()));
    }
    let matrix = values
        .iter()
        .map(|a| values.iter().map(|b| metric.distance(a, b)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let points = values.iter().map(ToString::to_string).collect();
    Ok(validate_ultrametric(points, matrix)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::center_of_distances;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        let v = valuation(&q("12"), 2).unwrap();
        assert_eq!(v.exponent(), Some(2));
        assert_eq!(v.to_rational(), q("1/4"));
        let v = valuation(&q("1/6"), 2).unwrap();
        assert_eq!(v.exponent(), Some(-1));
        assert_eq!(v.to_rational(), q("2"));
        assert!(valuation(&q("0"), 7).unwrap().is_zero());
        assert_eq!(valuation(&q("-75/8"), 5).unwrap().exponent(), Some(2));
        assert_eq!(valuation(&q("3"), 4), Err(PadicError::NotPrime(4)));
        assert_eq!(valuation(&q("3"), 1), Err(PadicError::NotPrime(1)));
        assert_eq!(valuation(&q("3"), 0), Err(PadicError::NotPrime(0)));
    }

    #[test]
    fn norm_ordering() {
        let a = valuation(&q("4"), 2).unwrap();
        let b = valuation(&q("2"), 2).unwrap();
        assert!(a < b);
        assert!(PAdicNorm::zero(2) < a);
        assert_eq!(a.partial_cmp(&valuation(&q("4"), 3).unwrap()), None);
        assert_eq!(b.to_string(), "2^-1");
    }

    #[test]
    fn distance_examples() {
        assert_eq!(dp(&q("1/3"), &q("1/2"), 2).unwrap(), q("2"));
        assert_eq!(dp(&q("5/7"), &q("5/7"), 3).unwrap(), q("0"));
        let y = q("11/5");
        assert_eq!(dp(&(&q("1/3") + &y), &(&q("1/2") + &y), 2).unwrap(), q("2"));
    }

    #[test]
    fn dplus_examples() {
        assert_eq!(dplus(&q("3"), &q("5")).unwrap(), q("5"));
        assert_eq!(dplus(&q("7/2"), &q("7/2")).unwrap(), q("0"));
        assert_eq!(dplus(&q("0"), &q("4")).unwrap(), q("4"));
        assert_eq!(dplus(&q("-1"), &q("4")), Err(PadicError::NegativeInput(q("-1"))));
    }

    #[test]
    fn two_adic_sample() {
        let values: Vec<Rational> = ["0", "1", "2", "3"].map(q).to_vec();
        let s = sample_space(&values, SampleMetric::PAdic(2)).unwrap();
        assert_eq!(s.dist(0, 2), &q("1/2"));
        assert_eq!(s.dist(1, 3), &q("1/2"));
        assert_eq!(s.dist(0, 1), &q("1"));
        assert_eq!(s.dist(2, 3), &q("1"));
        assert_eq!(center_of_distances(&s).to_string(), "{0, 1/2, 1}");
    }

    #[test]
    fn dplus_sample() {
        let values: Vec<Rational> = ["0", "1", "2", "3"].map(q).to_vec();
        let s = sample_space(&values, SampleMetric::Plus).unwrap();
        for k in 1..4 {
            assert_eq!(s.dist(0, k), &Rational::from_integer(k as i64));
            for j in 1..k {
                assert_eq!(s.dist(j, k), &Rational::from_integer(k as i64));
            }
        }
        assert_eq!(center_of_distances(&s).to_string(), "{0, 3}");
    }

    #[test]
    fn sample_errors() {
        assert_eq!(sample_space(&[q("1"), q("1")], SampleMetric::Plus), Err(PadicError::DuplicateValue(q("1"))));
        assert_eq!(sample_space(&[q("-1")], SampleMetric::Plus), Err(PadicError::NegativeInput(q("-1"))));
        assert_eq!(sample_space(&[], SampleMetric::Plus), Err(PadicError::EmptySample));
        assert_eq!(sample_space(&[q("1")], SampleMetric::PAdic(9)), Err(PadicError::NotPrime(9)));
        let single = sample_space(&[q("5")], SampleMetric::PAdic(3)).unwrap();
        assert_eq!(single.len(), 1);
    }
}
