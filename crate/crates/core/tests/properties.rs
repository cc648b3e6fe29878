use proptest::prelude::*;

use schurpos::poset::{ribbon_diagrams, ribbon_poset};
use schurpos::{
    compare_diagrams, composition_of, dominance_leq, enumerate_basic_skew, expand, mf_pattern,
    necessary_filter, ribbon_of, ComparisonResult, Composition, Partition, SkewDiagram,
};

fn composition_strategy(max_len: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn skew_strategy() -> impl Strategy<Value = SkewDiagram> {
    (1usize..=7).prop_flat_map(|n| {
        let all = enumerate_basic_skew(n).unwrap();
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rotation_preserves_expansion(d in skew_strategy()) {
        prop_assert_eq!(expand(&d).unwrap(), expand(&d.rotate180()).unwrap());
    }

    #[test]
    fn transpose_is_omega(d in skew_strategy()) {
        prop_assert_eq!(expand(&d).unwrap().omega(), expand(&d.transpose()).unwrap());
        let (rows, cols) = d.profile();
        prop_assert_eq!(d.transpose().profile(), (cols, rows));
    }

    #[test]
    fn expansion_degree_and_support(d in skew_strategy()) {
        let e = expand(&d).unwrap();
        prop_assert_eq!(e.degree(), d.size());
        let (rows, cols) = d.profile();
        // every s_nu in s_A satisfies rows(A) ≤ nu ≤ cols(A)'
        for (nu, _) in e.iter() {
            prop_assert!(dominance_leq(&rows, nu).unwrap());
            prop_assert!(dominance_leq(nu, &cols.conjugate()).unwrap());
        }
    }

    #[test]
    fn ribbon_round_trip(alpha in composition_strategy(6, 4)) {
        let d = ribbon_of(&alpha).unwrap();
        prop_assert!(d.is_ribbon());
        prop_assert_eq!(composition_of(&d).unwrap(), alpha.clone());
        prop_assert_eq!(d.num_cols() + alpha.len(), alpha.size() + 1);
        prop_assert_eq!(d.rotate180(), ribbon_of(&alpha.reverse()).unwrap());
    }

    #[test]
    fn mf_pattern_is_reversal_symmetric(alpha in composition_strategy(7, 5)) {
        prop_assert_eq!(mf_pattern(&alpha).is_some(), mf_pattern(&alpha.reverse()).is_some());
        if let Some(p) = mf_pattern(&alpha) {
            let c = p.composition();
            prop_assert!(c == alpha || c == alpha.reverse());
        }
    }

    #[test]
    fn comparison_is_antisymmetric(a in skew_strategy(), b in skew_strategy()) {
        let ab = compare_diagrams(&a, &b).unwrap();
        let ba = compare_diagrams(&b, &a).unwrap();
        prop_assert_eq!(ab.flip(), ba);
    }
}

#[test]
fn ribbon_composition_bijection_up_to_12() {
    for n in 1..=12 {
        for alpha in Composition::all(n) {
            let d = ribbon_of(&alpha).unwrap();
            assert_eq!(composition_of(&d).unwrap(), alpha);
        }
    }
}

#[test]
fn enumeration_closed_under_rotation_and_transpose() {
    for n in 1..=7 {
        let all = enumerate_basic_skew(n).unwrap();
        for d in &all {
            assert!(all.binary_search(&d.rotate180()).is_ok(), "{d}");
            assert!(all.binary_search(&d.transpose()).is_ok(), "{d}");
        }
    }
}

#[test]
fn filter_is_necessary() {
    for n in 1..=6 {
        let all = enumerate_basic_skew(n).unwrap();
        let exps: Vec<_> = all.iter().map(|d| expand(d).unwrap()).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                if exps[i].checked_sub(&exps[j]).is_some() {
                    assert!(necessary_filter(a, b).unwrap(), "{a} over {b}");
                }
            }
        }
    }
}

#[test]
fn ribbons_with_different_lengths_are_incomparable() {
    for n in 1..=8 {
        let all = Composition::all(n);
        for a in &all {
            for b in all.iter().filter(|b| b.len() != a.len()) {
                let r = compare_diagrams(&ribbon_of(a).unwrap(), &ribbon_of(b).unwrap()).unwrap();
                assert_eq!(r, ComparisonResult::Incomparable, "({a}) vs ({b})");
                let ea = expand(&ribbon_of(a).unwrap()).unwrap();
                let eb = expand(&ribbon_of(b).unwrap()).unwrap();
                assert!(ea.checked_sub(&eb).is_none() && eb.checked_sub(&ea).is_none());
            }
        }
    }
}

#[test]
fn ribbon_classes_are_closed_under_reversal() {
    for n in 2..=10 {
        for rows in 1..=n {
            let p = ribbon_poset(n, rows, false, schurpos::Strategy::default()).unwrap();
            for class in &p.classes {
                let ribbons = class.ribbons();
                for r in &ribbons {
                    assert!(ribbons.contains(&r.reverse()), "R({n},{rows}) class {ribbons:?}");
                }
                if class.expansion.is_multiplicity_free() {
                    let first = &ribbons[0];
                    assert!(ribbons.iter().all(|r| r == first || *r == first.reverse()));
                }
            }
        }
    }
}

#[test]
fn general_ribbons_have_larger_classes() {
    let p = ribbon_poset(9, 5, false, schurpos::Strategy::default()).unwrap();
    let d = ribbon_of(&Composition::new(vec![2, 3, 1, 2, 1]).unwrap()).unwrap();
    let class = &p.classes[p.class_of(&d).unwrap()];
    let mut ribbons = class.ribbons();
    ribbons.sort();
    let expected: Vec<Composition> = [[1, 2, 1, 3, 2], [1, 3, 2, 1, 2], [2, 1, 2, 3, 1], [2, 3, 1, 2, 1]]
        .iter()
        .map(|v| Composition::new(v.to_vec()).unwrap())
        .collect();
    assert_eq!(ribbons, expected);
}

#[test]
fn multiplicity_free_ribbons_form_an_order_ideal() {
    for n in 2..=10 {
        for rows in 1..=n {
            let p = ribbon_poset(n, rows, false, schurpos::Strategy::default()).unwrap();
            let mf = p.membership(|c| c.expansion.is_multiplicity_free());
            for (i, &is_mf) in mf.iter().enumerate() {
                if is_mf {
                    for j in p.order.down_set(i).iter() {
                        assert!(mf[j], "R({n},{rows}): class {j} below mf class {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn decreasing_ribbons_follow_dominance() {
    for n in 2..=10 {
        for rows in 1..=n {
            let ribbons: Vec<(Partition, SkewDiagram)> = Partition::all(n)
                .into_iter()
                .filter(|p| p.len() == rows)
                .map(|p| {
                    let d = ribbon_of(&Composition::from(p.clone())).unwrap();
                    (p, d)
                })
                .collect();
            for (pa, a) in &ribbons {
                for (pb, b) in &ribbons {
                    // [B] ≤_s [A] iff rows(A) ≤_dom rows(B)
                    let schur = compare_diagrams(a, b).unwrap().is_geq();
                    assert_eq!(schur, dominance_leq(pa, pb).unwrap(), "({pa}) vs ({pb})");
                }
            }
        }
    }
}

#[test]
fn ribbon_diagrams_count_is_binomial() {
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for n in 1..=10 {
        for rows in 1..=n {
            assert_eq!(ribbon_diagrams(n, rows, false).unwrap().len(), binom(n - 1, rows - 1));
        }
    }
}
