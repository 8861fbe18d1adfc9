mod common;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use qdet::exec::Exec;
use qdet::klw::{
    cm_weight_search, complex, complex_with, is_cohen_macaulay, Certificate, KLWComplex,
    LineWeight2,
};
use qdet::partition::Partition;

#[test]
fn duality_mirrors_terms() {
    assert!(common::check_klw_duality() > 1000);
}

#[test]
fn length_is_generic_ext() {
    assert!(common::check_klw_length() > 500);
}

#[test]
fn kronecker_vanishing_and_sharpness() {
    let (checked, sharp) = common::check_klw_vanishing();
    assert!(checked > 0 && sharp > 0);
}

#[test]
fn reflection_swaps_the_first_two_slots() {
    for s in common::klw_sweep(3, 3) {
        let t = s.reflected();
        for w1 in -1..=2 {
            for w2 in -1..=2 {
                let w = LineWeight2::new(w1, w2);
                let a = complex(&s, w);
                let b = complex(&t, w.swapped());
                assert_eq!(common::klw_profile(&a), common::klw_profile(&b), "{s} {w}");
                for (&i, terms) in &a.terms {
                    let mut x: Vec<_> = terms
                        .iter()
                        .map(|u| {
                            (
                                u.nu_circ.clone(),
                                u.mu_circ.clone(),
                                u.lambda_conj.clone(),
                                u.mult,
                            )
                        })
                        .collect();
                    let mut y: Vec<_> = b
                        .term(i)
                        .iter()
                        .map(|u| {
                            (
                                u.mu_circ.clone(),
                                u.nu_circ.clone(),
                                u.lambda_conj.clone(),
                                u.mult,
                            )
                        })
                        .collect();
                    x.sort();
                    y.sort();
                    assert_eq!(x, y, "{s} {w} F_{i}");
                }
            }
        }
    }
}

#[test]
fn reflected_k4_matches_printed_list() {
    let c = complex(&common::k(4, [4, 4], [2, 3]), LineWeight2::default());
    let r = complex(&common::k(4, [4, 4], [1, 2]), LineWeight2::default());
    assert_eq!(c.render_term(-1), "(1^4;1^4;2,1^2)⊕(2,1^2;1^4;1^4)");
    assert_eq!(r.render_term(-1), "(1^4;1^4;2,1^2)⊕(1^4;2,1^2;1^4)");
    assert_eq!(c.render_term(1), "(2^4;5,1^3;2^4)");
    assert_eq!(r.render_term(1), "(5,1^3;2^4;2^4)");
}

/// Multisets of `{μ°, ν°}` pairs with the `λ'` slot; the last slot stays put.
type Unordered = BTreeMap<i64, Vec<(Vec<i64>, Vec<i64>, Partition)>>;

fn unordered(c: &KLWComplex) -> Unordered {
    c.terms
        .iter()
        .map(|(&i, v)| {
            let mut x: Vec<_> = v
                .iter()
                .map(|u| {
                    let (a, b) = (u.mu_circ.entries().to_vec(), u.nu_circ.entries().to_vec());
                    let (a, b) = if a <= b { (a, b) } else { (b, a) };
                    (a, b, u.lambda_conj.clone())
                })
                .collect();
            x.sort();
            (i, x)
        })
        .collect()
}

#[test]
fn k5_33_12_and_k3_53_32_agree_up_to_slots() {
    let a = complex(&common::k(5, [3, 3], [1, 2]), LineWeight2::default());
    let b = complex(&common::k(3, [5, 3], [3, 2]), LineWeight2::default());
    assert_eq!(a.term(-1).len(), 1);
    assert_eq!(b.render_term(-1), "(1^3;1^3;1^3)");
    assert_eq!(a.ranks(), b.ranks());
    assert_eq!(a.length(), b.length());
    assert_eq!(a.min_index(), Some(-1));
}

#[test]
fn rigid_family_slot_permutations() {
    // K_2 (3,2) γ=(2,1) against K_2 (2,3) γ=(1,1); K_3 (2,2) γ=(1,1) alone.
    let a = complex(&common::k(2, [3, 2], [2, 1]), LineWeight2::default());
    let b = complex(&common::k(2, [2, 3], [1, 1]), LineWeight2::default());
    assert_eq!(
        a.ranks().values().sum::<BigUint>(),
        b.ranks().values().sum::<BigUint>()
    );
    assert_eq!(a.length(), b.length());
    let c = complex(&common::k(3, [2, 2], [1, 1]), LineWeight2::default());
    assert_eq!(
        unordered(&c),
        unordered(&complex(
            &common::k(3, [2, 2], [1, 1]).reflected(),
            LineWeight2::default()
        ))
    );
}

#[test]
fn cm_search_contains_untwisted_theorem_weight() {
    let s = common::k(3, [3, 3], [2, 2]);
    let r = cm_weight_search(&s, -2..=3, -2..=3, 1, Exec::default());
    assert_eq!(r.hom_ext.hom, 0);
    assert!(r.reason.is_none());
    let hit = r
        .weights
        .iter()
        .find(|c| c.weight == LineWeight2::new(0, 0))
        .unwrap();
    assert_eq!(hit.certificate, Certificate::Theorem);
    // Every reported weight is actually Cohen-Macaulay.
    for c in &r.weights {
        assert!(
            is_cohen_macaulay(&complex(&s, c.weight), r.hom_ext.ext),
            "{}",
            c.weight
        );
    }
}

#[test]
fn cm_search_twisted_long_example() {
    let s = common::k(3, [3, 3], [2, 1]);
    let r = cm_weight_search(&s, 2..=2, 1..=1, 1, Exec::Sequential);
    assert_eq!(r.weights.len(), 1);
    assert!(is_cohen_macaulay(
        &complex(&s, LineWeight2::new(2, 1)),
        r.hom_ext.ext
    ));
}

#[test]
fn cm_search_reports_nonzero_hom() {
    let r = cm_weight_search(
        &common::k(1, [2, 2], [1, 1]),
        0..=0,
        0..=0,
        0,
        Exec::Sequential,
    );
    assert!(r.weights.is_empty());
    assert!(r.reason.unwrap().contains("hom"));
}

#[test]
fn parallel_and_sequential_agree() {
    for s in common::klw_sweep(2, 3) {
        let w = LineWeight2::new(1, -1);
        assert_eq!(
            complex_with(&s, w, Exec::Parallel),
            complex_with(&s, w, Exec::Sequential)
        );
    }
}
