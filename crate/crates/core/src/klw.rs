//! Terms of the twisted Kempf–Lascoux–Weyman complex `F^ω_•` for the
//! `m`-arrow Kronecker quiver.
//!
//! For `γ ⪯ α` and `β = α - γ`, the Koszul bundle is
//! `E^* = S_1 ⊗ Q_2^* ⊗ R_12` on `Gr(α_1, γ_1) × Gr(α_2, γ_2)`, and
//! `⋀^n E^* = ⊕ g_{μ,ν}^λ S^μ S_1 ⊗ S^ν Q_2^* ⊗ S^{λ'} R_12` over
//! `|λ| = |μ| = |ν| = n`. Each factor's cohomology is a single Schur module
//! in one degree, computed by Bott's algorithm.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bott::{bott, twisted_weight, BottOutcome, GrassmannianShape};
use crate::characters::kron;
use crate::error::{parse_err, Error, Result};
use crate::exec::Exec;
use crate::partition::{
    enumerate_p, partitions_bounded, schur_dim, schur_dim_partition, DominantWeight, PWindow,
    Partition,
};
use crate::quiver::{
    euler_form, generic_hom_ext_default, DimensionVector, EulerForm, GenericHomExt, Quiver,
};
use crate::shorthand::{self, Entry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KroneckerSetting {
    pub m: usize,
    pub alpha: [usize; 2],
    pub gamma: [usize; 2],
}

impl KroneckerSetting {
    pub fn new(m: usize, alpha: [usize; 2], gamma: [usize; 2]) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("K_m needs m >= 1".into()));
        }
        if gamma[0] > alpha[0] || gamma[1] > alpha[1] {
            return Err(Error::NotSubDimension {
                gamma: gamma.to_vec(),
                alpha: alpha.to_vec(),
            });
        }
        Ok(KroneckerSetting { m, alpha, gamma })
    }

    pub fn beta(&self) -> [usize; 2] {
        [self.alpha[0] - self.gamma[0], self.alpha[1] - self.gamma[1]]
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::kronecker(self.m)
    }

    pub fn gamma_dv(&self) -> DimensionVector {
        DimensionVector(self.gamma.to_vec())
    }

    pub fn beta_dv(&self) -> DimensionVector {
        DimensionVector(self.beta().to_vec())
    }

    pub fn euler(&self) -> EulerForm {
        euler_form(&self.quiver(), &self.gamma_dv(), &self.beta_dv()).expect("two vertices")
    }

    /// Rank of `E`, the length of the Koszul complex: `m γ_1 β_2`.
    pub fn koszul_length(&self) -> usize {
        self.m * self.gamma[0] * self.beta()[1]
    }

    pub fn hom_ext(&self, seed: u64) -> GenericHomExt {
        generic_hom_ext_default(&self.quiver(), &self.gamma_dv(), &self.beta_dv(), seed)
            .expect("well-formed setting")
    }

    /// `γ' = (β_2, β_1)`, `α' = (α_2, α_1)`: the complex is the same with the
    /// two vertex slots exchanged.
    pub fn reflected(&self) -> Self {
        let b = self.beta();
        KroneckerSetting {
            m: self.m,
            alpha: [self.alpha[1], self.alpha[0]],
            gamma: [b[1], b[0]],
        }
    }
}

impl fmt::Display for KroneckerSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K_{} alpha=({},{}) gamma=({},{})",
            self.m, self.alpha[0], self.alpha[1], self.gamma[0], self.gamma[1]
        )
    }
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct LineWeight2 {
    pub w1: i64,
    pub w2: i64,
}

impl LineWeight2 {
    pub fn new(w1: i64, w2: i64) -> Self {
        LineWeight2 { w1, w2 }
    }

    pub fn swapped(self) -> Self {
        LineWeight2::new(self.w2, self.w1)
    }
}

impl fmt::Display for LineWeight2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.w1, self.w2)
    }
}

/// `w1,w2`, `w1;w2` or `(w1;w2)`.
impl FromStr for LineWeight2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_ints(s, "line weight")?;
        match v[..] {
            [w1, w2] => Ok(LineWeight2::new(w1, w2)),
            _ => Err(parse_err("line weight", s, "expected two integers")),
        }
    }
}

pub(crate) fn parse_ints(s: &str, what: &'static str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    t.split([',', ';'])
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(what, s, format!("bad integer {x:?}")))
        })
        .collect()
}

/// `S^{μ°}R_1 ⊗ S^{ν°}R_2^* ⊗ (g S^{λ'}R_12) ⊗ A(-n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub mu_circ: DominantWeight,
    pub nu_circ: DominantWeight,
    pub lambda_conj: Partition,
    pub mult: u64,
    pub degree: usize,
}

impl Summand {
    /// `mult · dim S^{μ°}R_1 · dim S^{ν°}R_2^* · dim S^{λ'}k^m`.
    pub fn rank(&self, m: usize) -> BigUint {
        BigUint::from(self.mult)
            * schur_dim(&self.mu_circ)
            * schur_dim(&self.nu_circ)
            * schur_dim_partition(&self.lambda_conj, m)
    }

    pub fn entry(&self) -> Entry {
        Entry::new(
            vec![
                self.mu_circ.entries().to_vec(),
                self.nu_circ.entries().to_vec(),
                self.lambda_conj.parts().iter().map(|&x| x as i64).collect(),
            ],
            self.mult,
        )
    }

    fn sort_key(&self) -> (usize, &[i64], &[i64], &Partition) {
        (
            self.degree,
            self.mu_circ.entries(),
            self.nu_circ.entries(),
            &self.lambda_conj,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Weight {
    Line(LineWeight2),
    /// `ω_1 ∈ Z^{β_1}` on `Q_1`, `ω_2 ∈ Z^{γ_2}` on `S_2^*`, both dominant.
    General {
        omega1: Vec<i64>,
        omega2: Vec<i64>,
    },
}

impl Weight {
    fn to_json(&self) -> Value {
        match self {
            Weight::Line(w) => json!([w.w1, w.w2]),
            Weight::General { omega1, omega2 } => json!([omega1, omega2]),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Line(w) => w.fmt(f),
            Weight::General { omega1, omega2 } => {
                let j = |v: &[i64]| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(f, "({};{})", j(omega1), j(omega2))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KLWComplex {
    pub setting: KroneckerSetting,
    pub weight: Weight,
    /// Nonempty terms only, each sorted by degree and then `(μ°, ν°, λ')`.
    pub terms: BTreeMap<i64, Vec<Summand>>,
}

impl KLWComplex {
    pub fn term(&self, i: i64) -> &[Summand] {
        self.terms.get(&i).map_or(&[], Vec::as_slice)
    }

    /// `max{i : F_i ≠ 0}`.
    pub fn length(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn has_negative_terms(&self) -> bool {
        self.min_index().is_some_and(|i| i < 0)
    }

    pub fn term_rank(&self, i: i64) -> BigUint {
        self.term(i).iter().map(|s| s.rank(self.setting.m)).sum()
    }

    pub fn ranks(&self) -> BTreeMap<i64, BigUint> {
        self.terms.keys().map(|&i| (i, self.term_rank(i))).collect()
    }

    pub fn summand_count(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    pub fn render_term(&self, i: i64) -> String {
        let entries: Vec<Entry> = self.term(i).iter().map(Summand::entry).collect();
        shorthand::render_term(&entries, shorthand::last_slot_size)
    }

    /// One `F_i = …` line per nonzero term.
    pub fn render_shorthand(&self) -> String {
        let mut out = String::new();
        for &i in self.terms.keys() {
            out.push_str(&format!("F_{i} = {}\n", self.render_term(i)));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut terms = serde_json::Map::new();
        for (i, summands) in &self.terms {
            let list: Vec<Value> = summands
                .iter()
                .map(|s| {
                    json!({
                        "mu": s.mu_circ.entries(),
                        "nu": s.nu_circ.entries(),
                        "lambdaConj": s.lambda_conj.parts(),
                        "mult": s.mult,
                        "degree": s.degree,
                    })
                })
                .collect();
            terms.insert(i.to_string(), Value::Array(list));
        }
        json!({
            "setting": {
                "m": self.setting.m,
                "alpha": self.setting.alpha,
                "gamma": self.setting.gamma,
            },
            "weight": self.weight.to_json(),
            "terms": terms,
        })
    }
}

fn assemble(
    setting: KroneckerSetting,
    weight: Weight,
    cells: Vec<Vec<(i64, Summand)>>,
) -> KLWComplex {
    let mut terms: BTreeMap<i64, Vec<Summand>> = BTreeMap::new();
    for (i, s) in cells.into_iter().flatten() {
        terms.entry(i).or_default().push(s);
    }
    for v in terms.values_mut() {
        v.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
    KLWComplex {
        setting,
        weight,
        terms,
    }
}

/// `λ ⊢ n` with `λ_1 <= m` (so `S^{λ'}k^m ≠ 0`) and at most `rows` parts.
fn lambdas(n: usize, rows: usize, m: usize) -> Vec<Partition> {
    partitions_bounded(n, rows, m)
}

fn line_cell(
    s: &KroneckerSetting,
    w: LineWeight2,
    t1: usize,
    t2: usize,
    n: usize,
) -> Vec<(i64, Summand)> {
    let [g1, g2] = s.gamma;
    let [b1, b2] = s.beta();
    let mus = enumerate_p(
        &PWindow {
            s: g1,
            q: b1,
            t: t1,
            w: w.w1,
        },
        n,
    );
    if mus.is_empty() {
        return Vec::new();
    }
    let nus = enumerate_p(
        &PWindow {
            s: b2,
            q: g2,
            t: t2,
            w: w.w2,
        },
        n,
    );
    if nus.is_empty() {
        return Vec::new();
    }
    let index = n as i64 - (b1 * t1 + g2 * t2) as i64;
    let lams = lambdas(n, g1 * b2, s.m);
    let mut out = Vec::new();
    for mu in &mus {
        let mu_circ = twisted_weight(mu, g1, b1, t1, w.w1);
        for nu in &nus {
            let nu_circ = twisted_weight(nu, b2, g2, t2, w.w2);
            for lam in &lams {
                let g = kron(lam, mu, nu);
                if g > 0 {
                    out.push((
                        index,
                        Summand {
                            mu_circ: mu_circ.clone(),
                            nu_circ: nu_circ.clone(),
                            lambda_conj: lam.conjugate(),
                            mult: g,
                            degree: n,
                        },
                    ));
                }
            }
        }
    }
    out
}

/// The twisted complex `F^ω_•` for a line weight `ω = (w_1; w_2)`.
pub fn complex(setting: &KroneckerSetting, w: LineWeight2) -> KLWComplex {
    complex_with(setting, w, Exec::default())
}

pub fn complex_with(setting: &KroneckerSetting, w: LineWeight2, exec: Exec) -> KLWComplex {
    let [g1, _] = setting.gamma;
    let [_, b2] = setting.beta();
    let mut cells = Vec::new();
    for t1 in 0..=g1 {
        for t2 in 0..=b2 {
            for n in 0..=setting.koszul_length() {
                cells.push((t1, t2, n));
            }
        }
    }
    let out = exec.map(cells, |(t1, t2, n)| line_cell(setting, w, t1, t2, n));
    assemble(*setting, Weight::Line(w), out)
}

fn neg_rev(v: &[i64]) -> Vec<i64> {
    v.iter().rev().map(|x| -x).collect()
}

/// The twisted complex for an arbitrary dominant weight
/// `ω_1 ∈ Z^{β_1}` (on `Q_1`) and `ω_2 ∈ Z^{γ_2}` (on `S_2^*`), using the
/// general Bott algorithm on each Grassmannian.
pub fn complex_general(
    setting: &KroneckerSetting,
    omega1: &[i64],
    omega2: &[i64],
    exec: Exec,
) -> Result<KLWComplex> {
    let [a1, a2] = setting.alpha;
    let [g1, g2] = setting.gamma;
    let [b1, b2] = setting.beta();
    if omega1.len() != b1 || omega2.len() != g2 {
        return Err(Error::Precondition(format!(
            "weight needs {b1} + {g2} entries, got {} + {}",
            omega1.len(),
            omega2.len()
        )));
    }
    for w in [omega1, omega2] {
        DominantWeight::new(w.to_vec())?;
    }
    let gr1 = GrassmannianShape::new(a1, g1)?;
    let gr2 = GrassmannianShape::new(a2, g2)?;
    let omega2_s = neg_rev(omega2);
    let ns: Vec<usize> = (0..=setting.koszul_length()).collect();
    let cells = exec.map(ns, |n| {
        let mut out = Vec::new();
        // H^*(S^{ω_1}Q_1 ⊗ S^μ S_1) on the first Grassmannian.
        let firsts: Vec<(Partition, usize, DominantWeight)> = partitions_bounded(n, g1, n)
            .into_iter()
            .filter_map(|mu| {
                let mv: Vec<i64> = mu.padded(g1).into_iter().map(|x| x as i64).collect();
                match bott(gr1, omega1, &mv).expect("shapes checked") {
                    BottOutcome::Zero => None,
                    BottOutcome::NonZero {
                        cohom_degree,
                        result,
                        ..
                    } => Some((mu, cohom_degree, result)),
                }
            })
            .collect();
        if firsts.is_empty() {
            return out;
        }
        // S^{ω_2}S_2^* ⊗ S^ν Q_2^* = S^{-rev ω_2}S_2 ⊗ S^{-rev ν}Q_2; the answer
        // `S^η R_2` is `S^{-rev η} R_2^*`.
        let seconds: Vec<(Partition, usize, DominantWeight)> = partitions_bounded(n, b2, n)
            .into_iter()
            .filter_map(|nu| {
                let nv: Vec<i64> = nu.padded(b2).into_iter().map(|x| x as i64).collect();
                match bott(gr2, &neg_rev(&nv), &omega2_s).expect("shapes checked") {
                    BottOutcome::Zero => None,
                    BottOutcome::NonZero {
                        cohom_degree,
                        result,
                        ..
                    } => Some((nu, cohom_degree, result.dual())),
                }
            })
            .collect();
        let lams = lambdas(n, g1 * b2, setting.m);
        for (mu, l1, mu_circ) in &firsts {
            for (nu, l2, nu_circ) in &seconds {
                let index = n as i64 - (l1 + l2) as i64;
                for lam in &lams {
                    let g = kron(lam, mu, nu);
                    if g > 0 {
                        out.push((
                            index,
                            Summand {
                                mu_circ: mu_circ.clone(),
                                nu_circ: nu_circ.clone(),
                                lambda_conj: lam.conjugate(),
                                mult: g,
                                degree: n,
                            },
                        ));
                    }
                }
            }
        }
        out
    });
    Ok(assemble(
        *setting,
        Weight::General {
            omega1: omega1.to_vec(),
            omega2: omega2.to_vec(),
        },
        cells,
    ))
}

/// `ω^∨ = (mβ_2 - α_1 - w_1; mγ_1 - α_2 - w_2)`.
pub fn dual_weight(setting: &KroneckerSetting, w: LineWeight2) -> LineWeight2 {
    let m = setting.m as i64;
    let [a1, a2] = setting.alpha.map(|x| x as i64);
    let g1 = setting.gamma[0] as i64;
    let b2 = setting.beta()[1] as i64;
    LineWeight2::new(m * b2 - a1 - w.w1, m * g1 - a2 - w.w2)
}

/// Sufficient test for `F^ω_•` to have no term in negative homological
/// degree: `(β_1-w_1)^2 + (γ_2-w_2)^2 < 8`, or `= 8` with `β_1 ≠ γ_2`,
/// `w_1 ≠ w_2`, or `w_1 + w_2 > m - 3`.
pub fn nonneg_admissible(setting: &KroneckerSetting, w: LineWeight2) -> bool {
    let b1 = setting.beta()[0] as i64;
    let g2 = setting.gamma[1] as i64;
    let q = (b1 - w.w1).pow(2) + (g2 - w.w2).pow(2);
    q < 8 || (q == 8 && (b1 != g2 || w.w1 != w.w2 || w.w1 + w.w2 > setting.m as i64 - 3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// `ω` and `ω^∨` both pass [`nonneg_admissible`] and `hom(γ,β) = 0`.
    Theorem,
    /// The computed complex has no negative terms and length `ext(γ,β)`.
    Direct,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::Theorem => "theorem",
            Certificate::Direct => "direct",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmWeight {
    pub weight: LineWeight2,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmSearch {
    pub hom_ext: GenericHomExt,
    pub weights: Vec<CmWeight>,
    /// Why nothing was searched, if so.
    pub reason: Option<String>,
}

/// No negative terms and `max{i : F_i ≠ 0} = ext`.
pub fn is_cohen_macaulay(c: &KLWComplex, ext: usize) -> bool {
    !c.has_negative_terms() && c.length() == Some(ext as i64)
}

/// Cohen–Macaulay line weights in `w1s × w2s`. The lemma test is tried first;
/// otherwise the complex is computed.
pub fn cm_weight_search(
    setting: &KroneckerSetting,
    w1s: std::ops::RangeInclusive<i64>,
    w2s: std::ops::RangeInclusive<i64>,
    seed: u64,
    exec: Exec,
) -> CmSearch {
    let he = setting.hom_ext(seed);
    if he.hom != 0 {
        return CmSearch {
            hom_ext: he,
            weights: Vec::new(),
            reason: Some(format!("hom(gamma,beta) = {} is nonzero", he.hom)),
        };
    }
    let mut weights = Vec::new();
    for w1 in w1s {
        for w2 in w2s.clone() {
            let w = LineWeight2::new(w1, w2);
            let certificate = if nonneg_admissible(setting, w)
                && nonneg_admissible(setting, dual_weight(setting, w))
            {
                Some(Certificate::Theorem)
            } else if is_cohen_macaulay(&complex_with(setting, w, exec), he.ext) {
                Some(Certificate::Direct)
            } else {
                None
            };
            if let Some(certificate) = certificate {
                weights.push(CmWeight {
                    weight: w,
                    certificate,
                });
            }
        }
    }
    CmSearch {
        hom_ext: he,
        weights,
        reason: None,
    }
}

/// `Σ_summands (-1)^{i+r} n^r / r! · rank`, checked to be a non-negative
/// integer. `terms` yields `(i, n, rank)`.
pub(crate) fn euler_moment(
    terms: impl Iterator<Item = (i64, usize, BigUint)>,
    r: u32,
) -> Result<BigUint> {
    let mut total = BigInt::zero();
    for (i, n, rank) in terms {
        let v = BigInt::from(n).pow(r) * BigInt::from(rank);
        if (i + r as i64).rem_euclid(2) == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    let fact: BigInt = (1..=r).fold(BigInt::one(), |a, k| a * k);
    let (q, rem) = total.div_rem(&fact);
    assert!(rem.is_zero(), "degree sum {total} is not divisible by {r}!");
    assert!(!q.is_negative(), "degree sum {q} is negative");
    Ok(q.to_biguint().expect("non-negative"))
}

/// `deg(q) · deg Rep_{γ↪α}(K_m)` from the untwisted complex, for
/// `r = -⟨γ,β⟩ > 0`.
pub fn degree(setting: &KroneckerSetting) -> Result<BigUint> {
    degree_with(setting, Exec::default())
}

pub fn degree_with(setting: &KroneckerSetting, exec: Exec) -> Result<BigUint> {
    let r = -setting.euler().value();
    if r <= 0 {
        return Err(Error::Precondition(format!(
            "degree needs -<gamma,beta> > 0, got {r}"
        )));
    }
    let c = complex_with(setting, LineWeight2::default(), exec);
    let m = setting.m;
    euler_moment(
        c.terms
            .iter()
            .flat_map(|(&i, v)| v.iter().map(move |s| (i, s.degree, s.rank(m)))),
        r as u32,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize, a: [usize; 2], g: [usize; 2]) -> KroneckerSetting {
        KroneckerSetting::new(m, a, g).unwrap()
    }

    #[test]
    fn untwisted_k3_22() {
        let c = complex(&k(3, [3, 3], [2, 2]), LineWeight2::default());
        assert_eq!(c.render_term(0), "(0;0;0)⊕(1^3;1^3;2,1)⊕(2,1;1^3;1^3)");
        assert_eq!(c.render_term(1), "(2,1^2;2,1^2;2,1^2)");
        assert_eq!(c.render_term(2), "(2^3;4,1^2;2^3)");
        assert_eq!(c.terms.len(), 3);
    }

    #[test]
    fn rigid_k2() {
        let c = complex(&k(2, [2, 3], [1, 1]), LineWeight2::default());
        assert_eq!(c.render_term(0), "(0;0;0)⊕(1^2;1^2;1^2)");
        assert_eq!(c.render_term(1), "(2,1;1^3;2,1)");
        assert_eq!(c.render_term(2), "");
        assert_eq!(degree(&k(2, [2, 3], [1, 1])).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn dual_weight_examples() {
        let s = k(3, [3, 3], [2, 2]);
        assert_eq!(
            dual_weight(&s, LineWeight2::new(0, 0)),
            LineWeight2::new(0, 3)
        );
        let s = k(2, [2, 3], [1, 1]);
        assert_eq!(
            dual_weight(&s, LineWeight2::new(1, 1)),
            LineWeight2::new(1, -2)
        );
        for w1 in -3..=3 {
            for w2 in -3..=3 {
                let w = LineWeight2::new(w1, w2);
                assert_eq!(dual_weight(&s, dual_weight(&s, w)), w);
            }
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(nonneg_admissible(
            &k(3, [3, 3], [2, 2]),
            LineWeight2::new(0, 0)
        ));
        assert!(!nonneg_admissible(
            &k(5, [3, 3], [1, 2]),
            LineWeight2::new(0, 0)
        ));
        let s = k(4, [4, 4], [1, 2]);
        assert!(nonneg_admissible(&s, LineWeight2::new(3, 2)));
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(
            "2,1".parse::<LineWeight2>().unwrap(),
            LineWeight2::new(2, 1)
        );
        assert_eq!(
            "(-1;0)".parse::<LineWeight2>().unwrap(),
            LineWeight2::new(-1, 0)
        );
        assert!("1".parse::<LineWeight2>().is_err());
        assert_eq!(LineWeight2::new(2, -1).to_string(), "(2;-1)");
    }

    #[test]
    fn general_matches_line() {
        let s = k(3, [3, 3], [2, 1]);
        for (w1, w2) in [(0, 0), (2, 1), (-1, 1)] {
            let line = complex_with(&s, LineWeight2::new(w1, w2), Exec::Sequential);
            let general = complex_general(&s, &[w1; 1], &[w2; 1], Exec::Sequential).unwrap();
            assert_eq!(line.terms, general.terms);
        }
    }

    #[test]
    fn degree_precondition() {
        assert!(degree(&k(3, [3, 3], [0, 0])).is_err());
    }
}
