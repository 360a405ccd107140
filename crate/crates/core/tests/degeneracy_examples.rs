use tropfw_core::degeneracy::*;
use tropfw_core::fermat_weber::instances::{five_point_unique_sample, segment_sample};
use tropfw_core::*;

fn assert_confirmed(name: &str, s: &SampleMatrix) {
    let c = check_theorem_lowdim(s, &Budgets::default()).unwrap();
    assert!(c.essential, "{name}: essential");
    assert!(c.unique, "{name}: unique");
    assert_eq!(c.status, TheoremStatus::Confirmed, "{name}: {:?}", c.witness);
    assert!(verify_similar_pair(s, c.witness.pair().unwrap()));
}

#[test]
fn unique_instances_carry_witnesses() {
    for n in 4..=8 {
        assert_confirmed(&format!("circulant {n}"), &circulant_instance(n).unwrap());
    }
    assert_confirmed("three point constant", &three_point_unique_instance());
    assert_confirmed("five point sample", &five_point_unique_sample());
}

/// The stated property "no minor is tropically singular" does not hold for
/// this matrix: rows 1 and 3 agree in columns 1 and 3 (entries 1 and -1), so
/// the minor [[1,-1],[1,-1]] has both terms equal to 0. The same happens for
/// rows 2, 3 and columns 2, 3. These are the only singular minors.
#[test]
fn five_point_minors_singular_exactly_where_hand_evaluation_says() {
    let r = all_minors_report(&five_point_unique_sample().to_matrix(), &Budgets::default()).unwrap();
    let singular: Vec<_> =
        r.minors.iter().filter(|e| e.report.singular).map(|e| (e.rows.clone(), e.cols.clone())).collect();
    assert_eq!(singular, vec![(vec![1, 3], vec![1, 3]), (vec![2, 3], vec![2, 3])]);
    let raw: Vec<Vec<Rational>> = [[1i64, -1], [1, -1]]
        .iter()
        .map(|r| r.iter().map(|&x| rational::int(x)).collect())
        .collect();
    let det = tropical_determinant(&raw, &Budgets::default()).unwrap();
    assert_eq!(det.value, rational::int(0));
    assert_eq!(det.attaining_permutations, 2);
    assert!(r.any_singular && r.any_equal_terms);
}

#[test]
fn segment_witness_is_the_transposition() {
    let v = find_similar_pair(&segment_sample(), &Budgets::default());
    let expected = IndexSubsetPair::from_one_based(&[(1, 1), (2, 2)], &[(1, 2), (2, 1)]);
    assert_eq!(v.pair(), Some(&expected));
}
