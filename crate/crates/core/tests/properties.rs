mod common;

use common::*;
use proptest::prelude::*;
use ultratree::explorer::{enumerate_dendrograms, merge_parts, Dendrogram};
use ultratree::metric::{
    center_of_distances, enumerate_balls, is_centered_sphere, validate_ultrametric, weak_similarity, BallKind,
    FiniteUltrametricSpace,
};
use ultratree::padic::{dp, dp_norm, dplus, valuation};
use ultratree::tree::{canonical_labeling, distance_matrix, PathMaxIndex};
use ultratree::{LabeledTree, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-500i64..=500, 1i64..=500).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonneg_rational() -> impl Strategy<Value = Rational> {
    (0i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

/// Tree on `n` vertices from parent choices and labels, zero-zero edges
/// repaired by bumping the child label.
fn labeled_tree(max_n: usize) -> impl Strategy<Value = LabeledTree> {
    (1..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        (parents, prop::collection::vec(nonneg_rational(), n)).prop_map(move |(parents, mut labels)| {
            let mut edges = Vec::new();
            for (i, &p) in parents.iter().enumerate() {
                let v = i + 1;
                if labels[p].is_zero() && labels[v].is_zero() {
                    labels[v] = Rational::one();
                }
                edges.push((p, v));
            }
            LabeledTree::from_parts(ids(n), labels, edges).unwrap()
        })
    })
}

fn space() -> impl Strategy<Value = FiniteUltrametricSpace> {
    labeled_tree(9).prop_map(|t| distance_matrix(&t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rationals_round_trip_through_text(a in rational()) {
        let text = a.to_string();
        prop_assert!(!text.ends_with("/1"));
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn tree_spaces_are_ultrametric(t in labeled_tree(14)) {
        let s = distance_matrix(&t).unwrap();
        prop_assert!(triple_scan(&s.to_matrix()));
        let idx = PathMaxIndex::new(&t);
        for u in 0..t.len() {
            for v in 0..t.len() {
                prop_assert_eq!(idx.dl(u, v).unwrap(), dfs_path_max(&t, u, v));
            }
        }
    }

    #[test]
    fn tree_spaces_have_the_center_dichotomy(s in space()) {
        let c = center_of_distances(&s);
        if s.len() >= 2 {
            prop_assert_eq!(c.values(), &[Rational::zero(), s.values().last().unwrap().clone()][..]);
        } else {
            prop_assert_eq!(c.values(), &[Rational::zero()][..]);
        }
    }

    #[test]
    fn tree_space_balls_are_spheres(s in space()) {
        for kind in [BallKind::Open, BallKind::Closed] {
            for b in enumerate_balls(&s, kind) {
                let cert = is_centered_sphere(&s, &b.members).unwrap();
                prop_assert!(cert.is_some_and(|c| c.verify(&s)));
            }
        }
    }

    #[test]
    fn canonical_labeling_is_idempotent(t in labeled_tree(10)) {
        let once = canonical_labeling(&t).unwrap();
        prop_assert_eq!(canonical_labeling(&once).unwrap(), once.clone());
        prop_assert_eq!(distance_matrix(&once).unwrap(), distance_matrix(&t).unwrap());
    }

    #[test]
    fn weak_similarity_survives_relabeling(s in space(), perm_seed in any::<u64>(), scale in 1i64..7, shift in 0i64..5) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = s.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        // strictly increasing on positive values: t -> scale * t^2 + shift
        let f = |t: &Rational| if t.is_zero() { Rational::zero() } else { &(&Rational::from_integer(scale) * &(t * t)) + &Rational::from_integer(shift) };
        let mut m = vec![vec![Rational::zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                m[perm[a]][perm[b]] = f(s.dist(a, b));
            }
        }
        let y = validate_ultrametric(ids(n), m).unwrap();
        let w = weak_similarity(&s, &y).expect("relabeled copy is weakly similar");
        prop_assert!(w.verify(&s, &y));
        prop_assert!(w.inverse().verify(&y, &s));
        prop_assert_eq!(Dendrogram::from_space(&s), Dendrogram::from_space(&y));
    }

    #[test]
    fn padic_laws(a in rational(), b in rational(), c in rational(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let ab = dp(&a, &b, p).unwrap();
        prop_assert!(ab <= std::cmp::max(dp(&a, &c, p).unwrap(), dp(&c, &b, p).unwrap()));
        prop_assert_eq!(valuation(&(&a * &b), p).unwrap(), valuation(&a, p).unwrap().product(&valuation(&b, p).unwrap()));
        prop_assert_eq!(dp_norm(&a, &b, p).unwrap(), dp_norm(&b, &a, p).unwrap());
        prop_assert_eq!(ab.is_zero(), a == b);
    }

    #[test]
    fn dplus_is_ultrametric(a in nonneg_rational(), b in nonneg_rational(), c in nonneg_rational()) {
        let ab = dplus(&a, &b).unwrap();
        prop_assert!(ab <= std::cmp::max(dplus(&a, &c).unwrap(), dplus(&c, &b).unwrap()));
        prop_assert_eq!(ab, dplus(&b, &a).unwrap());
    }

    #[test]
    fn merge_keeps_the_smallest_block_size(sizes in prop::collection::vec(1usize..6, 2..8)) {
        let mut next = 0;
        let parts: Vec<Vec<usize>> = sizes.iter().map(|&k| { let p = (next..next + k).collect(); next += k; p }).collect();
        let (a, b) = merge_parts(&parts).unwrap();
        prop_assert!(!a.is_empty() && !b.is_empty());
        prop_assert!(a.len().min(b.len()) >= *sizes.iter().min().unwrap());
        let mut all: Vec<usize> = a.iter().chain(&b).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..next).collect::<Vec<_>>());
    }

    #[test]
    fn dendrogram_ignores_point_order(idx in 0usize..90, perm_seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let d = &enumerate_dendrograms(6).unwrap()[idx];
        let s = d.to_space();
        let mut perm: Vec<usize> = (0..6).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        let m: Vec<Vec<Rational>> = (0..6).map(|a| (0..6).map(|b| s.dist(perm[a], perm[b]).clone()).collect()).collect();
        let shuffled = validate_ultrametric(ids(6), m).unwrap();
        prop_assert_eq!(&Dendrogram::from_space(&shuffled), d);
    }
}
