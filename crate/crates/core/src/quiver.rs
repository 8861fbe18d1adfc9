//! Finite quivers, dimension vectors, Euler forms, generic hom/ext and the
//! birationality criterion for the desingularization of `Rep_{γ↪α}(Q)`.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::modp::{is_prime, Matrix, DEFAULT_PRIME};

pub const DEFAULT_SAMPLES: usize = 5;

/// A quiver on vertices `0..vertices` with arrows `(tail, head)`. Parallel
/// arrows and loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(t, h)) = arrows
            .iter()
            .find(|(t, h)| *t >= vertices || *h >= vertices)
        {
            return Err(Error::Precondition(format!(
                "arrow {t}->{h} leaves the {vertices} vertices"
            )));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// The `m`-arrow Kronecker quiver `K_m`: vertices 0 and 1, `m` arrows 0→1.
    pub fn kronecker(m: usize) -> Self {
        Quiver {
            vertices: 2,
            arrows: vec![(0, 1); m],
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }
}

/// `Km` (e.g. `K3`) or a comma list of arrows `t-h` (e.g. `0-1,0-1,1-2`).
impl FromStr for Quiver {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(m) = t.strip_prefix('K').or_else(|| t.strip_prefix('k')) {
            let m: usize = m
                .parse()
                .map_err(|_| parse_err("quiver", s, "bad arrow count"))?;
            return Ok(Quiver::kronecker(m));
        }
        let mut arrows = Vec::new();
        for tok in t.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (a, b) = tok
                .split_once("->")
                .or_else(|| tok.split_once('-'))
                .ok_or_else(|| parse_err("quiver", s, format!("bad arrow {tok:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| parse_err("quiver", s, "bad vertex"))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| parse_err("quiver", s, "bad vertex"))?;
            arrows.push((a, b));
        }
        let vertices = arrows.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Quiver::new(vertices, arrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    pub fn new(v: Vec<usize>) -> Self {
        DimensionVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `self ⪯ other` componentwise.
    pub fn precedes(&self, other: &DimensionVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other - self`, if `self ⪯ other`.
    pub fn complement_in(&self, other: &DimensionVector) -> Result<DimensionVector> {
        if !self.precedes(other) {
            return Err(Error::NotSubDimension {
                gamma: self.0.clone(),
                alpha: other.0.clone(),
            });
        }
        Ok(DimensionVector(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// All `δ ⪯ self`.
    pub fn below(&self) -> Vec<DimensionVector> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=c).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(DimensionVector).collect()
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DimensionVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err("dimension vector", s, format!("bad entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimensionVector)
    }
}

/// `⟨γ,β⟩ = ⟨γ,β⟩_0 - ⟨γ,β⟩_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerForm {
    /// `Σ_v γ(v) β(v)`.
    pub dot: i64,
    /// `Σ_a γ(ta) β(ha)`, the rank of `E`.
    pub arrows: i64,
}

impl EulerForm {
    pub fn value(&self) -> i64 {
        self.dot - self.arrows
    }
}

fn check_len(q: &Quiver, v: &DimensionVector) -> Result<()> {
    if v.len() != q.vertices() {
        return Err(Error::LengthMismatch(v.len(), q.vertices()));
    }
    Ok(())
}

pub fn euler_form(
    q: &Quiver,
    gamma: &DimensionVector,
    beta: &DimensionVector,
) -> Result<EulerForm> {
    check_len(q, gamma)?;
    check_len(q, beta)?;
    let dot = gamma
        .0
        .iter()
        .zip(&beta.0)
        .map(|(a, b)| (a * b) as i64)
        .sum();
    let arrows = q
        .arrows()
        .iter()
        .map(|&(t, h)| (gamma.0[t] * beta.0[h]) as i64)
        .sum();
    Ok(EulerForm { dot, arrows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericHomExt {
    pub hom: usize,
    pub ext: usize,
    pub euler: i64,
    pub samples_used: usize,
    pub field_prime: u64,
}

impl GenericHomExt {
    /// `hom(γ,β) = 0` and `⟨γ,β⟩ < 0`: the map `q` can be birational and
    /// `Rep_{γ↪α}` is a proper subvariety.
    pub fn homext_condition(&self) -> bool {
        self.hom == 0 && self.euler < 0
    }
}

/// The matrix of `Φ: ⊕_v Hom(k^{γ_v}, k^{β_v}) → ⊕_a Hom(k^{γ_ta}, k^{β_ha})`,
/// `φ ↦ (φ_ha M_a - N_a φ_ta)`, for random representations `M` of
/// dimension `γ` and `N` of dimension `β`.
fn hom_matrix(
    q: &Quiver,
    gamma: &DimensionVector,
    beta: &DimensionVector,
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Matrix {
    let (g, b) = (&gamma.0, &beta.0);
    // Column offset of φ_v (a β_v × γ_v block, row major).
    let mut col_off = Vec::with_capacity(g.len());
    let mut cols = 0;
    for v in 0..g.len() {
        col_off.push(cols);
        cols += b[v] * g[v];
    }
    let rows: usize = q.arrows().iter().map(|&(t, h)| g[t] * b[h]).sum();
    let mut mat = Matrix::zeros(rows, cols);
    let mut row_off = 0;
    for &(t, h) in q.arrows() {
        let m_a = Matrix::random(g[h], g[t], p, rng);
        let n_a = Matrix::random(b[h], b[t], p, rng);
        // Entry (i, j) of φ_h M_a - N_a φ_t, with i < β_h and j < γ_t.
        for i in 0..b[h] {
            for j in 0..g[t] {
                let row = row_off + i * g[t] + j;
                for k in 0..g[h] {
                    mat.add(row, col_off[h] + i * g[h] + k, m_a.get(k, j), p);
                }
                for k in 0..b[t] {
                    let neg = (p - n_a.get(i, k)) % p;
                    mat.add(row, col_off[t] + k * g[t] + j, neg, p);
                }
            }
        }
        row_off += b[h] * g[t];
    }
    mat
}

/// Generic `hom` and `ext` between general representations of dimensions
/// `γ` and `β`: `hom` is the minimum kernel dimension of `Φ` over `samples`
/// random pairs over `F_prime`, and `ext = hom - ⟨γ,β⟩`. Deterministic for
/// a fixed seed.
pub fn generic_hom_ext(
    q: &Quiver,
    gamma: &DimensionVector,
    beta: &DimensionVector,
    samples: usize,
    prime: u64,
    seed: u64,
) -> Result<GenericHomExt> {
    if samples == 0 {
        return Err(Error::Precondition("at least one sample is needed".into()));
    }
    if !is_prime(prime) || prime >= 1 << 32 {
        return Err(Error::Precondition(format!(
            "{prime} is not a prime below 2^32"
        )));
    }
    let euler = euler_form(q, gamma, beta)?.value();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hom = usize::MAX;
    for _ in 0..samples {
        let mat = hom_matrix(q, gamma, beta, prime, &mut rng);
        hom = hom.min(mat.cols - mat.rank(prime));
        if hom == 0 {
            break;
        }
    }
    let ext = hom as i64 - euler;
    debug_assert!(ext >= 0, "ext = hom - euler must be non-negative");
    Ok(GenericHomExt {
        hom,
        ext: ext.max(0) as usize,
        euler,
        samples_used: samples,
        field_prime: prime,
    })
}

/// [`generic_hom_ext`] with the default prime, sample count and the given seed.
pub fn generic_hom_ext_default(
    q: &Quiver,
    gamma: &DimensionVector,
    beta: &DimensionVector,
    seed: u64,
) -> Result<GenericHomExt> {
    generic_hom_ext(q, gamma, beta, DEFAULT_SAMPLES, DEFAULT_PRIME, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Birationality {
    /// Every `δ` passes one of the two inequalities.
    Certified,
    /// `hom(γ, α-γ) > 0`, so `q` has positive-dimensional general fibres.
    HomNonzero { hom: usize },
    /// Some `δ` fails both inequalities; the criterion is one-directional.
    Inconclusive { delta: DimensionVector },
}

impl Birationality {
    pub fn certified(&self) -> bool {
        matches!(self, Birationality::Certified)
    }
}

/// Sufficient criterion for `q: Z → Rep_{γ↪α}(Q)` to be birational: with
/// `hom(γ,β) = 0`, every `δ ⪵ γ` with `2γ - δ ⪯ α` must satisfy
/// `⟨2γ-δ, β-γ+δ⟩ < ⟨γ,β⟩` or `⟨γ,β⟩ < ⟨δ, β-γ+δ⟩`.
pub fn birational_check(
    q: &Quiver,
    gamma: &DimensionVector,
    alpha: &DimensionVector,
    seed: u64,
) -> Result<Birationality> {
    let beta = gamma.complement_in(alpha)?;
    let he = generic_hom_ext_default(q, gamma, &beta, seed)?;
    if he.hom != 0 {
        return Ok(Birationality::HomNonzero { hom: he.hom });
    }
    let gb = he.euler;
    for delta in gamma.below() {
        if delta == *gamma {
            continue;
        }
        let two_g_minus_d: Vec<usize> = gamma
            .0
            .iter()
            .zip(&delta.0)
            .map(|(g, d)| 2 * g - d)
            .collect();
        let two_g_minus_d = DimensionVector(two_g_minus_d);
        if !two_g_minus_d.precedes(alpha) {
            continue;
        }
        // β - γ + δ = α - (2γ - δ) ⪰ 0.
        let rest = two_g_minus_d.complement_in(alpha)?;
        let lhs = euler_form(q, &two_g_minus_d, &rest)?.value();
        let rhs = euler_form(q, &delta, &rest)?.value();
        if !(lhs < gb || gb < rhs) {
            return Ok(Birationality::Inconclusive { delta });
        }
    }
    Ok(Birationality::Certified)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(s: &str) -> DimensionVector {
        s.parse().unwrap()
    }

    #[test]
    fn euler_examples() {
        let k3 = Quiver::kronecker(3);
        let e = euler_form(&k3, &dv("2,2"), &dv("1,1")).unwrap();
        assert_eq!((e.dot, e.arrows, e.value()), (4, 6, -2));
        assert_eq!(euler_form(&k3, &dv("0,0"), &dv("3,1")).unwrap().value(), 0);
        let k2 = Quiver::kronecker(2);
        assert_eq!(euler_form(&k2, &dv("1,1"), &dv("1,2")).unwrap().value(), -1);
        assert!(euler_form(&k2, &dv("1"), &dv("1,2")).is_err());
    }

    #[test]
    fn hom_ext_examples() {
        for m in 1..=4 {
            let km = Quiver::kronecker(m);
            let he = generic_hom_ext_default(&km, &dv("1,0"), &dv("0,1"), 1).unwrap();
            assert_eq!((he.hom, he.ext), (0, m));
        }
        let k3 = Quiver::kronecker(3);
        let he = generic_hom_ext_default(&k3, &dv("2,2"), &dv("1,1"), 7).unwrap();
        assert_eq!((he.hom, he.ext, he.euler), (0, 2, -2));
        assert!(he.homext_condition());
        // Two general K_3 representations of dimension (1,1) are not isomorphic.
        let he = generic_hom_ext_default(&k3, &dv("1,1"), &dv("1,1"), 7).unwrap();
        assert_eq!((he.hom, he.ext), (0, 1));
        let k1 = Quiver::kronecker(1);
        let he = generic_hom_ext_default(&k1, &dv("1,1"), &dv("1,1"), 7).unwrap();
        assert_eq!((he.hom, he.ext, he.euler), (1, 0, 1));
        let he = generic_hom_ext_default(&k3, &dv("0,1"), &dv("1,0"), 7).unwrap();
        assert_eq!((he.hom, he.ext), (0, 0));
        assert!(generic_hom_ext(&k3, &dv("1,1"), &dv("1,1"), 0, DEFAULT_PRIME, 0).is_err());
        assert!(generic_hom_ext(&k3, &dv("1,1"), &dv("1,1"), 1, 12, 0).is_err());
    }

    #[test]
    fn birational_examples() {
        let k3 = Quiver::kronecker(3);
        assert!(birational_check(&k3, &dv("2,2"), &dv("3,3"), 1)
            .unwrap()
            .certified());
        assert!(birational_check(&k3, &dv("2,1"), &dv("3,3"), 1)
            .unwrap()
            .certified());
        assert!(birational_check(&k3, &dv("0,0"), &dv("3,3"), 1)
            .unwrap()
            .certified());
    }

    #[test]
    fn quiver_parsing() {
        assert_eq!("K3".parse::<Quiver>().unwrap(), Quiver::kronecker(3));
        let q: Quiver = "0-1, 0->1, 1-2".parse().unwrap();
        assert_eq!(q.vertices(), 3);
        assert_eq!(q.arrows(), &[(0, 1), (0, 1), (1, 2)]);
        assert!("Kx".parse::<Quiver>().is_err());
        assert!(Quiver::new(1, vec![(0, 1)]).is_err());
    }
}
