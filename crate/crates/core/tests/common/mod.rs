//! Exhaustive checks shared by the per-module tests and the acceptance run.
//! Each check panics on the first violation and returns how much it covered.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use qdet::bott::{bott, cohomology_qdual_twist, cohomology_s_twist, GrassmannianShape};
use qdet::characters::{kron, kronecker, kronecker_oracle, KroneckerQuery};
use qdet::klw::{complex, dual_weight, KLWComplex, KroneckerSetting, LineWeight2};
use qdet::partition::{enumerate_p, partitions, partitions_bounded, PWindow, Partition};
use qdet::tensor::{
    codim_and_fiber, kron_vanishing_check, tensor_complex, tensor_dual_weight, LineWeight3,
    TensorComplex, TensorSetting, VanishingPart,
};

/// Largest Koszul length `mγ_1β_2` computed in the `m, α_i <= 4` sweeps.
pub const KLW_KOSZUL_CAP: usize = 24;
/// Largest `γ_1γ_2γ_3` computed in the tensor duality sweep.
pub const TENSOR_KOSZUL_CAP: usize = 12;

pub fn k(m: usize, a: [usize; 2], g: [usize; 2]) -> KroneckerSetting {
    KroneckerSetting::new(m, a, g).unwrap()
}

pub fn ts(a: [usize; 3], g: [usize; 3]) -> TensorSetting {
    TensorSetting::new(a, g).unwrap()
}

/// Proper nonzero `γ < α` for `K_m`, `m <= mmax`, `α_i <= amax`.
pub fn klw_sweep(mmax: usize, amax: usize) -> Vec<KroneckerSetting> {
    let mut out = Vec::new();
    for m in 1..=mmax {
        for a1 in 1..=amax {
            for a2 in 1..=amax {
                for g1 in 0..=a1 {
                    for g2 in 0..=a2 {
                        if (g1, g2) == (0, 0) || (g1, g2) == (a1, a2) {
                            continue;
                        }
                        out.push(k(m, [a1, a2], [g1, g2]));
                    }
                }
            }
        }
    }
    out
}

/// Multiset of `(degree, rank)` per index.
pub fn klw_profile(c: &KLWComplex) -> BTreeMap<i64, Vec<(usize, BigUint)>> {
    c.terms
        .iter()
        .map(|(&i, v)| {
            let mut p: Vec<_> = v.iter().map(|s| (s.degree, s.rank(c.setting.m))).collect();
            p.sort();
            (i, p)
        })
        .collect()
}

/// `F^{ω∨}_{r-i}` has the ranks of `F^ω_i` in degrees `mγ_1β_2 - n`.
fn klw_mirror(s: &KroneckerSetting, w: LineWeight2) {
    let r = -s.euler().value();
    let top = s.koszul_length();
    let a = klw_profile(&complex(s, w));
    let b = klw_profile(&complex(s, dual_weight(s, w)));
    let mirrored: BTreeMap<i64, Vec<(usize, BigUint)>> = a
        .into_iter()
        .map(|(i, v)| {
            let mut v: Vec<_> = v.into_iter().map(|(n, rk)| (top - n, rk)).collect();
            v.sort();
            (r - i, v)
        })
        .collect();
    assert_eq!(mirrored, b, "duality fails for {s} {w}");
}

/// Every setting with `m, α_i <= 3` and `|w_i| <= 2`, then the `m = 4` or
/// `α_i = 4` settings (Koszul length capped) at every `|w_i| <= 2`.
pub fn check_klw_duality() -> usize {
    let mut checked = 0;
    for s in klw_sweep(4, 4) {
        let small = s.m <= 3 && s.alpha.iter().all(|&a| a <= 3);
        if !small && s.koszul_length() > KLW_KOSZUL_CAP {
            continue;
        }
        for w1 in -2..=2 {
            for w2 in -2..=2 {
                klw_mirror(&s, LineWeight2::new(w1, w2));
                checked += 1;
            }
        }
    }
    checked
}

/// `max{i : F_i ≠ 0} = ext(γ,β)` for the untwisted complex, `m, α_i <= 4`.
pub fn check_klw_length() -> usize {
    let mut checked = 0;
    for s in klw_sweep(4, 4) {
        if s.koszul_length() > KLW_KOSZUL_CAP {
            continue;
        }
        let he = s.hom_ext(7);
        let c = complex(&s, LineWeight2::default());
        assert_eq!(
            c.length(),
            Some(he.ext as i64),
            "length differs from ext for {s}"
        );
        checked += 1;
    }
    checked
}

/// `g(λ, μ, ν) ≠ 0` for some `λ ⊢ |μ|` with `λ_1 <= m`.
fn any_nonzero(m: usize, mu: &Partition, nu: &Partition) -> bool {
    let n = mu.size();
    partitions_bounded(n, n, m)
        .iter()
        .any(|l| kron(l, mu, nu) != 0)
}

#[derive(Debug, Default)]
pub struct KlwVanishing {
    pub checked: usize,
    pub counterexamples: usize,
    pub witnesses: usize,
}

/// The upper statement for windows twisted by `w`, or the lower one for the
/// dual windows, over sizes `<= max_size`.
pub fn klw_vanishing(
    s: &KroneckerSetting,
    w: LineWeight2,
    upper: bool,
    max_size: usize,
) -> KlwVanishing {
    let he = s.hom_ext(3);
    let [g1, g2] = s.gamma;
    let [b1, b2] = s.beta();
    let win = if upper { w } else { dual_weight(s, w) };
    let mut v = KlwVanishing::default();
    for t1 in 0..=g1 {
        for t2 in 0..=b2 {
            let shift = (b1 * t1 + g2 * t2) as i64;
            for n in 0..=max_size {
                let n_i = n as i64;
                let (predicted, boundary) = if upper {
                    (n_i > shift + he.ext as i64, n_i == shift + he.ext as i64)
                } else {
                    (n_i < shift - he.hom as i64, false)
                };
                if !predicted && !boundary {
                    continue;
                }
                let mus = enumerate_p(&PWindow::new(g1, b1, t1, win.w1).unwrap(), n);
                let nus = enumerate_p(&PWindow::new(b2, g2, t2, win.w2).unwrap(), n);
                for mu in &mus {
                    for nu in &nus {
                        let hit = any_nonzero(s.m, mu, nu);
                        if predicted {
                            v.checked += 1;
                            v.counterexamples += hit as usize;
                        } else {
                            v.witnesses += hit as usize;
                        }
                    }
                }
            }
        }
    }
    v
}

/// Both vanishing statements for `w_i ∈ {0, -1}`, `m, α_i <= 3`, sizes
/// `<= 8`, with sharpness at `w = 0`: whenever the top term of the untwisted
/// complex has a summand of degree `<= 8`, the boundary size has a nonzero
/// coefficient.
pub fn check_klw_vanishing() -> (usize, usize) {
    let (mut checked, mut sharp) = (0, 0);
    for s in klw_sweep(3, 3) {
        for w1 in [0, -1] {
            for w2 in [0, -1] {
                let w = LineWeight2::new(w1, w2);
                let up = klw_vanishing(&s, w, true, 8);
                assert_eq!(up.counterexamples, 0, "vanishing fails for {s} {w}");
                let down = klw_vanishing(&s, w, false, 8);
                assert_eq!(down.counterexamples, 0, "dual vanishing fails for {s} {w}");
                checked += up.checked + down.checked;
                if w == LineWeight2::default() {
                    let he = s.hom_ext(3);
                    let c = complex(&s, w);
                    let top = c.term(he.ext as i64);
                    assert!(!top.is_empty(), "{s}");
                    if top.iter().any(|u| u.degree <= 8) {
                        assert!(up.witnesses > 0, "no sharpness witness for {s}");
                        sharp += 1;
                    }
                }
            }
        }
    }
    (checked, sharp)
}

/// Proper nonzero `γ < α`, sorted `α_i <= amax`, `γ_i <= gmax`,
/// `γ_1γ_2γ_3 <= max_koszul`.
pub fn tensor_sweep(amax: usize, gmax: usize, max_koszul: usize) -> Vec<TensorSetting> {
    let mut out = Vec::new();
    for a1 in 1..=amax {
        for a2 in a1..=amax {
            for a3 in a2..=amax {
                let a = [a1, a2, a3];
                for g1 in 0..=a1.min(gmax) {
                    for g2 in 0..=a2.min(gmax) {
                        for g3 in 0..=a3.min(gmax) {
                            let g = [g1, g2, g3];
                            if g == [0, 0, 0] || g == a || g1 * g2 * g3 > max_koszul {
                                continue;
                            }
                            out.push(ts(a, g));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn tensor_profile(c: &TensorComplex) -> BTreeMap<i64, Vec<(usize, BigUint)>> {
    c.terms
        .iter()
        .map(|(&i, v)| {
            let mut p: Vec<_> = v.iter().map(|s| (s.degree, s.rank())).collect();
            p.sort();
            (i, p)
        })
        .collect()
}

/// Rank mirroring at `-⟨⟨γ,β⟩⟩` for `α_i <= 4`, `γ_i <= 3`, `|w_i| <= 2`.
pub fn check_tensor_duality() -> usize {
    let mut checked = 0;
    let grid: Vec<LineWeight3> = (0..125)
        .map(|k| LineWeight3::new(k % 5 - 2, k / 5 % 5 - 2, k / 25 - 2))
        .collect();
    for s in tensor_sweep(4, 3, TENSOR_KOSZUL_CAP) {
        let r = -s.form();
        let top = s.koszul_length();
        for &w in &grid {
            let a = tensor_profile(&tensor_complex(&s, w));
            let b = tensor_profile(&tensor_complex(&s, tensor_dual_weight(&s, w)));
            let mirrored: BTreeMap<i64, Vec<(usize, BigUint)>> = a
                .into_iter()
                .map(|(i, v)| {
                    let mut v: Vec<_> = v.into_iter().map(|(n, rk)| (top - n, rk)).collect();
                    v.sort();
                    (r - i, v)
                })
                .collect();
            assert_eq!(mirrored, b, "tensor duality fails for {s:?} {w}");
            checked += 1;
        }
    }
    checked
}

/// Both parts of the tensor vanishing corollary, sorted `α_i <= 3`,
/// `γ_i <= 2`, sizes `<= 6`.
pub fn check_tensor_vanishing() -> usize {
    let mut checked = 0;
    for s in tensor_sweep(3, 2, 8) {
        let cf = codim_and_fiber(&s, 2).unwrap();
        if cf.everything {
            continue;
        }
        for part in [VanishingPart::Upper, VanishingPart::Lower] {
            for w in [[0, 0, 0], [0, -1, 0], [-1, -1, -1]] {
                let r = kron_vanishing_check(
                    &s,
                    LineWeight3::new(w[0], w[1], w[2]),
                    part,
                    cf.e,
                    cf.h,
                    6,
                );
                assert!(
                    r.counterexamples.is_empty(),
                    "{s:?} {part:?} {w:?}: {:?}",
                    r.counterexamples[0]
                );
                checked += r.checked;
            }
        }
    }
    checked
}

/// S_3-symmetry and the Littlewood-Murnaghan inequality for `n <= nmax`.
pub fn check_kron_symmetry(nmax: usize) -> usize {
    let mut checked = 0;
    for n in 1..=nmax {
        let ps = partitions(n);
        for l in &ps {
            for m in &ps {
                for nu in &ps {
                    let g = kron(l, m, nu);
                    for h in [
                        kron(l, nu, m),
                        kron(m, l, nu),
                        kron(m, nu, l),
                        kron(nu, l, m),
                        kron(nu, m, l),
                    ] {
                        assert_eq!(g, h, "{l} {m} {nu}");
                    }
                    if g != 0 {
                        assert!(l.first() + n >= m.first() + nu.first(), "{l} {m} {nu}");
                    }
                    checked += 1;
                }
            }
        }
    }
    checked
}

/// The character formula against the Schur-polynomial oracle, `n <= nmax`.
pub fn check_kron_oracle(nmax: usize) -> usize {
    let mut checked = 0;
    for n in 0..=nmax {
        let ps = partitions(n);
        for l in &ps {
            for m in &ps {
                for nu in &ps {
                    let q = KroneckerQuery::new(l.clone(), m.clone(), nu.clone()).unwrap();
                    assert_eq!(kronecker(&q), kronecker_oracle(&q), "{l} | {m} | {nu}");
                    checked += 1;
                }
            }
        }
    }
    checked
}

fn padded(p: &Partition, len: usize) -> Vec<i64> {
    p.padded(len).into_iter().map(|x| x as i64).collect()
}

/// The two twisted corollaries against the general algorithm on `Gr(r, s)`
/// for `r <= rmax`, `|w| <= 3`, sizes `<= 8`.
pub fn check_bott_corollaries(rmax: usize) -> usize {
    let mut checked = 0;
    for r in 1..=rmax {
        for s in 0..=r {
            let shape = GrassmannianShape::new(r, s).unwrap();
            let q = r - s;
            for w in -3..=3 {
                for n in 0..=8 {
                    for mu in partitions_bounded(n, s, n) {
                        let a = cohomology_s_twist(shape, &mu, w).unwrap();
                        let b = bott(shape, &vec![w; q], &padded(&mu, s)).unwrap();
                        assert_eq!(a.degree(), b.degree(), "Gr({r},{s}) S^{mu} w={w}");
                        assert_eq!(a.weight(), b.weight(), "Gr({r},{s}) S^{mu} w={w}");
                        checked += 1;
                    }
                    for nu in partitions_bounded(n, q, n) {
                        let a = cohomology_qdual_twist(shape, &nu, w).unwrap();
                        let on_q: Vec<i64> = padded(&nu, q).into_iter().rev().map(|x| -x).collect();
                        let b = bott(shape, &on_q, &vec![-w; s]).unwrap();
                        assert_eq!(a.degree(), b.degree(), "Gr({r},{s}) Q*^{nu} w={w}");
                        assert_eq!(
                            a.weight().cloned(),
                            b.weight().map(|y| y.dual()),
                            "Gr({r},{s}) Q*^{nu} w={w}"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    checked
}
