mod common;

use common::*;
use ultratree::fixtures::{path_space, path_tree, x3};
use ultratree::metric::{
    all_subsets_are_spheres, center_of_distances, diametrical_graph, enumerate_balls, is_centered_sphere,
    multipartite_parts, restrict, spanning_star, validate_ultrametric, BallKind, MetricError,
};
use ultratree::tree::{ball_subtree, canonical_labeling, distance_matrix, PathMaxIndex, TreeError};
use ultratree::LabeledTree;

#[test]
fn path_max_matches_dfs_on_random_trees() {
    for seed in 0..200 {
        let t = random_tree(1 + (seed as usize % 30), 5, seed);
        let idx = PathMaxIndex::new(&t);
        for u in 0..t.len() {
            for v in 0..t.len() {
                assert_eq!(idx.dl(u, v).unwrap(), dfs_path_max(&t, u, v), "seed {seed}, ({u}, {v})");
            }
        }
    }
}

#[test]
fn distance_matrices_pass_the_triple_scan() {
    for seed in 0..200 {
        let t = random_tree(2 + (seed as usize % 12), 4, seed);
        let s = distance_matrix(&t).unwrap();
        assert!(triple_scan(&s.to_matrix()));
        assert_eq!(validate_ultrametric(s.points().to_vec(), s.to_matrix()).unwrap(), s);
    }
}

#[test]
fn canonical_labeling_keeps_the_space() {
    for seed in 0..100 {
        let t = random_tree(2 + (seed as usize % 10), 6, seed);
        let c = canonical_labeling(&t).unwrap();
        assert_eq!(distance_matrix(&c).unwrap(), distance_matrix(&t).unwrap());
        let distances = center_of_distances(&distance_matrix(&t).unwrap());
        assert!(distances.len() <= 2);
    }
}

#[test]
fn validation_rejects_in_order() {
    let ok = path_space().to_matrix();
    let names = |n| ultratree::fixtures::ids(n);
    let mut m = ok.clone();
    m[0][1] = r(3);
    assert!(matches!(validate_ultrametric(names(4), m), Err(MetricError::NotSymmetric { .. })));
    let mut m = ok.clone();
    m[2][3] = r(0);
    m[3][2] = r(0);
    assert!(matches!(validate_ultrametric(names(4), m), Err(MetricError::NonpositiveOffDiagonal { .. })));
    let mut m = ok.clone();
    m[2][3] = r(3);
    m[3][2] = r(3);
    assert_eq!(
        validate_ultrametric(names(4), m),
        Err(MetricError::StrongTriangleViolation { x: "x3".into(), y: "x4".into(), z: "x1".into() })
    );
    let mut m = ok;
    m[1][1] = r(1);
    assert!(matches!(validate_ultrametric(names(4), m), Err(MetricError::NonzeroDiagonal { .. })));
}

#[test]
fn path_space_pipeline() {
    let s = distance_matrix(&path_tree()).unwrap();
    assert_eq!(s, path_space());
    assert_eq!(center_of_distances(&s).to_string(), "{0, 2}");
    let g = diametrical_graph(&s);
    assert_eq!(g.edges().len(), 5);
    assert_eq!(multipartite_parts(&g).unwrap().parts, vec![vec![0], vec![1], vec![2, 3]]);
    assert_eq!(spanning_star(&g).unwrap().center, 0);
    let pair = s.subset_by_ids(["x1", "x2"]).unwrap();
    assert_eq!(is_centered_sphere(&s, &pair).unwrap(), None);
    assert!(all_subsets_are_spheres(&x3()).unwrap());
}

#[test]
fn open_balls_become_subtrees() {
    for seed in 0..60 {
        let t = random_tree(2 + (seed as usize % 9), 4, seed);
        let s = distance_matrix(&t).unwrap();
        for b in enumerate_balls(&s, BallKind::Open) {
            let ids = s.ids_of(&b.members);
            let sub = ball_subtree(&t, ids.iter().copied()).unwrap();
            // the subtree generates the restricted space
            assert_eq!(distance_matrix(&sub).unwrap(), restrict(&s, &b.members).unwrap());
        }
    }
    let t = path_tree();
    assert_eq!(ball_subtree(&t, ["x1", "x4"]), Err(TreeError::NotABall));
}

#[test]
fn degenerate_labelings_are_refused() {
    let t = LabeledTree::from_parts(ids(3), vec![r(1), r(0), r(0)], vec![(0, 1), (1, 2)]).unwrap();
    assert!(matches!(distance_matrix(&t), Err(TreeError::DegenerateLabeling { .. })));
}
