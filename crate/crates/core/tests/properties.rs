//! Property tests over random exact inputs.

use proptest::prelude::*;
use tropfw_core::degeneracy::{find_similar_pair, is_similar, tropical_determinant, verify_similar_pair};
use tropfw_core::fermat_weber::{distance_constraints, fw_polytope_with, FwMethod};
use tropfw_core::rational::{int, ratio};
use tropfw_core::treespace::{is_ultrametric, random_equidistant_tree, EquidistantTree, Merge};
use tropfw_core::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

/// An `m × n` sample with `2 <= m <= max_m`, `2 <= n <= max_n`.
fn sample(max_m: usize, max_n: usize) -> impl Strategy<Value = SampleMatrix> {
    (2..=max_m, 2..=max_n)
        .prop_flat_map(|(m, n)| prop::collection::vec(point(n), m))
        .prop_map(|rows| SampleMatrix::from_raw(&rows).unwrap())
}

fn q(v: Vec<Rational>) -> QuotientPoint {
    QuotientPoint::new(v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn tropical_metric_axioms((u, v, w, t) in (2usize..=6).prop_flat_map(|n| (point(n), point(n), point(n), point(n)))) {
        let (pu, pv, pw) = (q(u.clone()), q(v.clone()), q(w));
        let duv = trop_dist(&pu, &pv).unwrap();
        prop_assert_eq!(&duv, &trop_dist(&pv, &pu).unwrap());
        prop_assert!(duv <= trop_dist(&pu, &pw).unwrap() + trop_dist(&pw, &pv).unwrap());
        let shifted_u: Vec<Rational> = u.iter().zip(&t).map(|(a, b)| a + b).collect();
        let shifted_v: Vec<Rational> = v.iter().zip(&t).map(|(a, b)| a + b).collect();
        prop_assert_eq!(&duv, &trop_dist(&q(shifted_u), &q(shifted_v)).unwrap());
        prop_assert_eq!(duv == int(0), canonicalize(&u).unwrap() == canonicalize(&v).unwrap());
        // Adding a multiple of the all-one vector changes nothing.
        let along_ones: Vec<Rational> = u.iter().map(|a| a + &t[0]).collect();
        prop_assert_eq!(trop_dist(&pu, &q(along_ones)).unwrap(), int(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lp_optimum_matches_the_best_vertex(
        (d, rows, c) in (1usize..=3).prop_flat_map(|d| (
            Just(d),
            prop::collection::vec((point(d), rational()), 0..5),
            point(d),
        ))
    ) {
        let mut h = HPolytope::bounding_box(d, &int(-5), &int(5));
        for (a, b) in rows {
            h.push(LinearConstraint::le(a, b)).unwrap();
        }
        let vertices = enumerate_vertices(&h).unwrap();
        match lp_solve(&LpProblem::minimize(c.clone(), h.clone()).unwrap()).unwrap() {
            LpOutcome::Optimal { value, witness } => {
                prop_assert!(h.contains(&witness));
                prop_assert_eq!(&value, &rational::dot(&c, &witness));
                let best = vertices.vertices.iter().map(|v| rational::dot(&c, v)).min().unwrap();
                prop_assert_eq!(value, best);
            }
            LpOutcome::Infeasible => prop_assert!(vertices.is_empty()),
            LpOutcome::Unbounded => prop_assert!(false, "a boxed LP cannot be unbounded"),
        }
    }

    #[test]
    fn lp_and_assignment_pair_oracle_agree(s in sample(5, 4)) {
        prop_assert_eq!(min_sum_lp(&s).unwrap(), min_sum_combinatorial(&s, &Budgets::default()).unwrap());
    }

    #[test]
    fn tropical_determinant_ignores_row_and_column_order(
        (k, entries, perm_seed) in (1usize..=4).prop_flat_map(|k| (
            Just(k),
            prop::collection::vec(-6i64..=6, k * k),
            any::<u64>(),
        ))
    ) {
        let m: Vec<Vec<Rational>> = entries.chunks(k).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let mut rows: Vec<usize> = (0..k).collect();
        let mut cols: Vec<usize> = (0..k).collect();
        // A permutation derived from the seed by successive swaps.
        let mut s = perm_seed;
        for i in (1..k).rev() {
            rows.swap(i, (s % (i as u64 + 1)) as usize);
            s /= 7;
            cols.swap(i, (s % (i as u64 + 1)) as usize);
            s /= 7;
        }
        let p: Vec<Vec<Rational>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
        let b = Budgets::default();
        let (a, z) = (tropical_determinant(&m, &b).unwrap(), tropical_determinant(&p, &b).unwrap());
        prop_assert_eq!(a.value, z.value);
        prop_assert_eq!(a.singular, z.singular);
        prop_assert_eq!(a.attaining_permutations, z.attaining_permutations);
    }

    #[test]
    fn equidistant_tree_metrics_and_their_cone_combinations_are_ultrametric(
        n in 3usize..=6, seed in any::<u64>(), stretch in 1i64..=5,
    ) {
        let tree = random_equidistant_tree(n, seed).unwrap();
        let metric = tree.metric();
        let topology = tree.topology();
        prop_assert!(topology.contains(&metric.coords));
        // Same merge order, reshaped heights: another point of the same cone.
        let reshaped = EquidistantTree::from_merges(
            n,
            tree.merges
                .iter()
                .map(|m| Merge { left: m.left, right: m.right, height: &m.height * &m.height + &m.height * int(stretch) })
                .collect(),
        ).unwrap();
        prop_assert_eq!(reshaped.topology(), topology.clone());
        let sum: Vec<Rational> = metric.coords.iter().zip(&reshaped.metric().coords).map(|(a, b)| a + b).collect();
        prop_assert!(is_ultrametric(&sum, n).unwrap());
        prop_assert!(topology.contains(&sum));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn appending_a_convex_combination_of_fw_vertices_makes_it_the_unique_point(
        s in sample(4, 4),
        weights in prop::collection::vec(1i64..=9, 1..=64),
    ) {
        let fw = fw_polytope(&s).unwrap();
        let vs = &fw.polytope.vertices;
        let w: Vec<Rational> = (0..vs.len()).map(|i| int(weights[i % weights.len()])).collect();
        let total: Rational = w.iter().sum();
        let mut p = vec![int(0); s.n()];
        for (v, wi) in vs.iter().zip(&w) {
            for (pj, vj) in p.iter_mut().zip(v) {
                *pj += vj * wi / &total;
            }
        }
        let augmented = s.with_row(q(p.clone())).unwrap();
        let fw2 = fw_polytope(&augmented).unwrap();
        prop_assert!(fw2.unique);
        prop_assert_eq!(&fw2.polytope.vertices, &vec![p]);
    }

    #[test]
    fn fw_set_is_convex_and_translation_equivariant(s in sample(4, 4), shift in point(4)) {
        let fw = fw_polytope(&s).unwrap();
        let vs = fw.vertices();
        let half = ratio(1, 2);
        for a in &vs {
            for b in &vs {
                let mid: Vec<Rational> = a.coords().iter().zip(b.coords()).map(|(x, y)| (x + y) * &half).collect();
                prop_assert!(is_fw_point(&q(mid), &s, &fw.d).unwrap());
            }
        }
        let w = &shift[..s.n()];
        let moved = fw_polytope(&s.translate(w).unwrap()).unwrap();
        prop_assert_eq!(&moved.d, &fw.d);
        let mut expected: Vec<Vec<Rational>> = vs.iter().map(|v| v.add(w).unwrap().into_coords()).collect();
        expected.sort();
        prop_assert_eq!(moved.polytope.vertices, expected);
    }

    #[test]
    fn k_ellipses_are_nested(s in sample(3, 3), extra in 0i64..=4, gap in 1i64..=4) {
        let d = min_sum_lp(&s).unwrap();
        let a1 = &d + int(extra);
        let a2 = &a1 + int(gap);
        let inner = k_ellipse(&EllipseSpec { foci: s.clone(), a: a1 }).unwrap();
        let outer = k_ellipse(&EllipseSpec { foci: s.clone(), a: a2 }).unwrap();
        for v in &inner.polytope.vertices {
            prop_assert!(outer.polytope.contains(v).unwrap());
        }
        let fw = fw_polytope(&s).unwrap();
        for v in &fw.polytope.vertices {
            prop_assert!(inner.polytope.contains(v).unwrap());
        }
    }

    #[test]
    fn projection_and_direct_family_agree_on_two_by_three(rows in prop::collection::vec(point(3), 2)) {
        let s = SampleMatrix::from_raw(&rows).unwrap();
        let b = Budgets::default();
        let extended = fw_polytope_with(&s, FwMethod::Extended, &b).unwrap();
        let direct = fw_polytope_with(&s, FwMethod::Direct, &b).unwrap();
        prop_assert_eq!(&extended, &direct);
        // Eliminate the distance variables with Fourier-Motzkin and compare.
        let (n, m) = (s.n(), s.m());
        let mut h = HPolytope::from_constraints(n - 1 + m, distance_constraints(&s)).unwrap();
        let mut sum = vec![int(0); n - 1];
        sum.extend(std::iter::repeat_n(int(1), m));
        h.push(LinearConstraint::eq(sum, extended.d.clone())).unwrap();
        let projected = project_out(&h, &(n - 1..n - 1 + m).collect::<Vec<_>>()).unwrap();
        let mut fm: Vec<Vec<Rational>> = enumerate_vertices(&projected)
            .unwrap()
            .vertices
            .into_iter()
            .map(|v| std::iter::once(int(0)).chain(v).collect())
            .collect();
        fm.sort();
        prop_assert_eq!(fm, extended.polytope.vertices);
    }

    #[test]
    fn similar_pairs_are_symmetric(s in sample(3, 3)) {
        if let Some(pair) = find_similar_pair(&s, &Budgets::default()).pair() {
            prop_assert!(verify_similar_pair(&s, pair));
            prop_assert!(verify_similar_pair(&s, &pair.swapped()));
            prop_assert!(is_similar(&pair.swapped(), s.m(), s.n()));
        }
    }
}
