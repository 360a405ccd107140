use tropfw_core::rational::{int, parse_vector};
use tropfw_core::treespace::*;
use tropfw_core::*;

#[test]
fn four_tree_sample_meets_treespace_only_at_all_ones() {
    let trees = four_tree_unique_sample();
    for t in &trees {
        assert!(is_ultrametric(&t.coords, 4).unwrap());
    }
    let r = fw_intersect_treespace(&trees, &Budgets::default()).unwrap();
    assert_eq!(r.fw.affine_dim(), 2);
    assert_eq!(r.max_dim, 0);
    assert_eq!(r.unique_point, Some(vec![int(0); 6]));
    assert_eq!(r.unique_is_all_ones(), Some(true));
    assert_eq!(r.unique_representative(), Some(vec![int(1); 6]));
    assert_eq!(r.cones_tested, 15);
}

#[test]
fn canonical_form_of_last_tree() {
    let trees = four_tree_unique_sample();
    let q = canonicalize(&trees[3].coords).unwrap();
    let expected = parse_vector(&["0", "463/510", "463/510", "463/510", "463/510", "56653/77010"]).unwrap();
    assert_eq!(q.coords(), expected.as_slice());
}

#[test]
fn copies_of_one_tree_meet_at_that_tree() {
    let t = random_equidistant_tree(4, 5).unwrap().metric();
    let r = fw_intersect_treespace(&[t.clone(), t.clone(), t.clone()], &Budgets::default()).unwrap();
    assert_eq!(r.unique_point.as_deref(), Some(canonicalize(&t.coords).unwrap().coords()));
}

#[test]
fn small_experiment_is_deterministic_and_injects() {
    let config = Table1Config {
        pool_size: 12,
        sizes: vec![4, 5],
        trials_per_size: 4,
        seed: 3,
        injected: vec![four_tree_unique_sample()],
        ..Table1Config::default()
    };
    let a = table1_experiment(&config, &Budgets::default()).unwrap();
    let b = table1_experiment(&config, &Budgets::default()).unwrap();
    assert_eq!(a, b);
    for row in &a.rows {
        assert_eq!(row.counts.values().sum::<usize>(), 4);
    }
    assert_eq!(a.injected[0].unique_is_all_ones, Some(true));
    let empty = table1_experiment(&Table1Config { trials_per_size: 0, ..config }, &Budgets::default()).unwrap();
    assert!(empty.rows.iter().all(|r| r.counts.values().all(|&c| c == 0)));
}
