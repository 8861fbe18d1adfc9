//! The same construction for the subspace variety `R_{γ⊂α}` of 3-tensors in
//! `R_1^* ⊗ R_2^* ⊗ R_3^*`: the Koszul bundle is `S_1^* ⊗ S_2^* ⊗ S_3^*` on
//! `Π Gr(α_k, γ_k)`, and Kronecker coefficients `g(λ_1', λ_2, λ_3)` replace
//! the Cauchy decomposition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bott::twisted_weight;
use crate::characters::kron;
use crate::error::{parse_err, Error, Result};
use crate::exec::Exec;
use crate::klw::{euler_moment, parse_ints};
use crate::modp::{Matrix, DEFAULT_PRIME};
use crate::partition::{enumerate_p, schur_dim, DominantWeight, PWindow, Partition};
use crate::shorthand::{self, Entry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSetting {
    pub alpha: [usize; 3],
    pub gamma: [usize; 3],
}

impl TensorSetting {
    pub fn new(alpha: [usize; 3], gamma: [usize; 3]) -> Result<Self> {
        if (0..3).any(|k| gamma[k] > alpha[k]) {
            return Err(Error::NotSubDimension {
                gamma: gamma.to_vec(),
                alpha: alpha.to_vec(),
            });
        }
        Ok(TensorSetting { alpha, gamma })
    }

    pub fn beta(&self) -> [usize; 3] {
        [0, 1, 2].map(|k| self.alpha[k] - self.gamma[k])
    }

    /// `Σ γ_k β_k`, the dimension of the product of Grassmannians.
    pub fn grassmannian_dim(&self) -> usize {
        let b = self.beta();
        (0..3).map(|k| self.gamma[k] * b[k]).sum()
    }

    /// Rank of `E` and the Koszul length: `γ_1 γ_2 γ_3`.
    pub fn koszul_length(&self) -> usize {
        self.gamma.iter().product()
    }

    /// `⟨⟨γ,β⟩⟩ = Σ γ_k β_k - γ_1 γ_2 γ_3 = h - e`.
    pub fn form(&self) -> i64 {
        self.grassmannian_dim() as i64 - self.koszul_length() as i64
    }

    /// Applies `σ` to the three factors: slot `k` of the result is slot
    /// `perm[k]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        TensorSetting {
            alpha: perm.map(|k| self.alpha[k]),
            gamma: perm.map(|k| self.gamma[k]),
        }
    }
}

impl fmt::Display for TensorSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = self.alpha;
        let [g1, g2, g3] = self.gamma;
        write!(f, "alpha=({a1},{a2},{a3}) gamma=({g1},{g2},{g3})")
    }
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct LineWeight3 {
    pub w: [i64; 3],
}

impl LineWeight3 {
    pub fn new(w1: i64, w2: i64, w3: i64) -> Self {
        LineWeight3 { w: [w1, w2, w3] }
    }

    pub fn permuted(self, perm: [usize; 3]) -> Self {
        LineWeight3 {
            w: perm.map(|k| self.w[k]),
        }
    }
}

impl fmt::Display for LineWeight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{};{})", self.w[0], self.w[1], self.w[2])
    }
}

impl FromStr for LineWeight3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match parse_ints(s, "line weight")?[..] {
            [a, b, c] => Ok(LineWeight3::new(a, b, c)),
            _ => Err(parse_err("line weight", s, "expected three integers")),
        }
    }
}

/// `g(λ_1', λ_2, λ_3) ⊗_k S^{λ_k°} R_k ⊗ A(-n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSummand {
    pub weights: [DominantWeight; 3],
    pub mult: u64,
    pub degree: usize,
}

impl TensorSummand {
    pub fn rank(&self) -> BigUint {
        self.weights
            .iter()
            .fold(BigUint::from(self.mult), |acc, w| acc * schur_dim(w))
    }

    pub fn entry(&self) -> Entry {
        Entry::new(
            self.weights.iter().map(|w| w.entries().to_vec()).collect(),
            self.mult,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorComplex {
    pub setting: TensorSetting,
    pub weight: LineWeight3,
    pub terms: BTreeMap<i64, Vec<TensorSummand>>,
}

impl TensorComplex {
    pub fn term(&self, i: i64) -> &[TensorSummand] {
        self.terms.get(&i).map_or(&[], Vec::as_slice)
    }

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
        self.term(i).iter().map(TensorSummand::rank).sum()
    }

    pub fn ranks(&self) -> BTreeMap<i64, BigUint> {
        self.terms.keys().map(|&i| (i, self.term_rank(i))).collect()
    }

    /// Degree of a rendered summand, recovered from the first slot:
    /// `|λ_1°| = |λ_1| + β_1 w_1`.
    fn entry_degree(&self) -> impl Fn(&Entry) -> i64 {
        let shift = self.setting.beta()[0] as i64 * self.weight.w[0];
        move |e: &Entry| e.slots[0].iter().sum::<i64>() - shift
    }

    pub fn render_term(&self, i: i64) -> String {
        let entries: Vec<Entry> = self.term(i).iter().map(TensorSummand::entry).collect();
        shorthand::render_term(&entries, self.entry_degree())
    }

    /// Canonical form of a term written by hand for this setting and weight.
    pub fn canonicalize_term(&self, s: &str) -> Result<String> {
        shorthand::canonicalize(s, 3, self.entry_degree())
    }

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
                        "lambda1": s.weights[0].entries(),
                        "lambda2": s.weights[1].entries(),
                        "lambda3": s.weights[2].entries(),
                        "mult": s.mult,
                        "degree": s.degree,
                    })
                })
                .collect();
            terms.insert(i.to_string(), Value::Array(list));
        }
        json!({
            "setting": {"alpha": self.setting.alpha, "gamma": self.setting.gamma},
            "weight": self.weight.w,
            "terms": terms,
        })
    }
}

fn tensor_cell(
    s: &TensorSetting,
    w: LineWeight3,
    t: [usize; 3],
    n: usize,
) -> Vec<(i64, TensorSummand)> {
    let g = s.gamma;
    let b = s.beta();
    let mut lists: Vec<Vec<Partition>> = Vec::with_capacity(3);
    for k in 0..3 {
        let l = enumerate_p(
            &PWindow {
                s: g[k],
                q: b[k],
                t: t[k],
                w: w.w[k],
            },
            n,
        );
        if l.is_empty() {
            return Vec::new();
        }
        lists.push(l);
    }
    let index = n as i64 - (0..3).map(|k| (b[k] * t[k]) as i64).sum::<i64>();
    let mut out = Vec::new();
    for l1 in &lists[0] {
        let l1c = l1.conjugate();
        for l2 in &lists[1] {
            for l3 in &lists[2] {
                let mult = kron(&l1c, l2, l3);
                if mult > 0 {
                    let weights = [(0, l1), (1, l2), (2, l3)]
                        .map(|(k, l)| twisted_weight(l, g[k], b[k], t[k], w.w[k]));
                    out.push((
                        index,
                        TensorSummand {
                            weights,
                            mult,
                            degree: n,
                        },
                    ));
                }
            }
        }
    }
    out
}

pub fn tensor_complex(setting: &TensorSetting, w: LineWeight3) -> TensorComplex {
    tensor_complex_with(setting, w, Exec::default())
}

pub fn tensor_complex_with(setting: &TensorSetting, w: LineWeight3, exec: Exec) -> TensorComplex {
    let g = setting.gamma;
    let mut cells = Vec::new();
    for t1 in 0..=g[0] {
        for t2 in 0..=g[1] {
            for t3 in 0..=g[2] {
                for n in 0..=setting.koszul_length() {
                    cells.push(([t1, t2, t3], n));
                }
            }
        }
    }
    let out = exec.map(cells, |(t, n)| tensor_cell(setting, w, t, n));
    let mut terms: BTreeMap<i64, Vec<TensorSummand>> = BTreeMap::new();
    for (i, s) in out.into_iter().flatten() {
        terms.entry(i).or_default().push(s);
    }
    for v in terms.values_mut() {
        v.sort_by(|a, b| (a.degree, &a.weights).cmp(&(b.degree, &b.weights)));
    }
    TensorComplex {
        setting: *setting,
        weight: w,
        terms,
    }
}

/// `ω^∨ = (γ_2γ_3 - α_1 - w_1; γ_1γ_3 - α_2 - w_2; γ_1γ_2 - α_3 - w_3)`.
pub fn tensor_dual_weight(setting: &TensorSetting, w: LineWeight3) -> LineWeight3 {
    let g = setting.gamma.map(|x| x as i64);
    let a = setting.alpha.map(|x| x as i64);
    LineWeight3 {
        w: [
            g[1] * g[2] - a[0] - w.w[0],
            g[0] * g[2] - a[1] - w.w[1],
            g[0] * g[1] - a[2] - w.w[2],
        ],
    }
}

/// `Σ (2β_i - w_i)^2 < 12`, or `= 12` with the `β_i` not all equal, the
/// `w_i` not all equal, or `Σ_{j≠i} w_j > α_i - 3` for some `i`.
pub fn tensor_nonneg_admissible(setting: &TensorSetting, w: LineWeight3) -> bool {
    let b = setting.beta().map(|x| x as i64);
    let a = setting.alpha.map(|x| x as i64);
    let q: i64 = (0..3).map(|k| (2 * b[k] - w.w[k]).pow(2)).sum();
    if q < 12 {
        return true;
    }
    if q > 12 {
        return false;
    }
    let total: i64 = w.w.iter().sum();
    b.iter().any(|&x| x != b[0])
        || w.w.iter().any(|&x| x != w.w[0])
        || (0..3).any(|i| total - w.w[i] > a[i] - 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimFiber {
    /// Codimension of `R_{γ⊂α}`: the length of the untwisted complex.
    pub e: usize,
    /// Generic fibre dimension `e + ⟨⟨γ,β⟩⟩`.
    pub h: i64,
    /// Fibre dimension estimated from the rank of `dq` at random points.
    pub probe_h: i64,
    pub probe_agrees: bool,
    /// `R_{γ⊂α}` is all of `R_α`.
    pub everything: bool,
}

/// Rank, over `F_p`, of the derivative of `Z → R_α` in the Grassmannian
/// directions at a random point: with `S_k = ⟨e_1..e_{γ_k}⟩` and a random `T`
/// vanishing on `S_1 ⊗ S_2 ⊗ S_3`, the map sends `X_k ∈ Hom(S_k, Q_k)` to
/// `T(X_1 u, v, w) + T(u, X_2 v, w) + T(u, v, X_3 w)` on `S_1 × S_2 × S_3`.
fn jacobian_rank(s: &TensorSetting, p: u64, rng: &mut ChaCha8Rng) -> usize {
    let a = s.alpha;
    let g = s.gamma;
    let b = s.beta();
    let mut t = vec![0u64; a[0] * a[1] * a[2]];
    let idx = |x: usize, y: usize, z: usize| (x * a[1] + y) * a[2] + z;
    let rand_t = Matrix::random(1, t.len(), p, rng);
    for x in 0..a[0] {
        for y in 0..a[1] {
            for z in 0..a[2] {
                if !(x < g[0] && y < g[1] && z < g[2]) {
                    t[idx(x, y, z)] = rand_t.get(0, idx(x, y, z));
                }
            }
        }
    }
    let rows = g[0] * g[1] * g[2];
    let cols = s.grassmannian_dim();
    let mut mat = Matrix::zeros(rows, cols);
    let row = |x: usize, y: usize, z: usize| (x * g[1] + y) * g[2] + z;
    let mut col = 0;
    // X_k e_u = e_{γ_k + j}: one column per (k, u, j).
    for k in 0..3 {
        for u in 0..g[k] {
            for j in 0..b[k] {
                let qv = g[k] + j;
                for x in 0..g[0] {
                    for y in 0..g[1] {
                        for z in 0..g[2] {
                            let (hit, val) = match k {
                                0 => (x == u, t[idx(qv, y, z)]),
                                1 => (y == u, t[idx(x, qv, z)]),
                                _ => (z == u, t[idx(x, y, qv)]),
                            };
                            if hit {
                                mat.add(row(x, y, z), col, val, p);
                            }
                        }
                    }
                }
                col += 1;
            }
        }
    }
    mat.rank(p)
}

/// `e` from the untwisted complex, `h = e + ⟨⟨γ,β⟩⟩`, and a Jacobian probe
/// of `h` (maximum rank over `samples` random points).
pub fn codim_and_fiber(setting: &TensorSetting, seed: u64) -> Result<CodimFiber> {
    codim_and_fiber_with(setting, seed, Exec::default())
}

pub fn codim_and_fiber_with(setting: &TensorSetting, seed: u64, exec: Exec) -> Result<CodimFiber> {
    if setting.beta().iter().all(|&x| x == 0) {
        return Err(Error::Precondition(
            "gamma = alpha: the Grassmannians are points and Z is zero".into(),
        ));
    }
    let c = tensor_complex_with(setting, LineWeight3::default(), exec);
    let e = c.length().unwrap_or(0).max(0) as usize;
    let h = e as i64 + setting.form();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = (0..crate::quiver::DEFAULT_SAMPLES)
        .map(|_| jacobian_rank(setting, DEFAULT_PRIME, &mut rng))
        .max()
        .unwrap_or(0);
    let probe_h = setting.grassmannian_dim() as i64 - rank as i64;
    Ok(CodimFiber {
        e,
        h,
        probe_h,
        probe_agrees: probe_h == h,
        everything: e == 0,
    })
}

/// `deg(q) · deg R_{γ⊂α}` from the untwisted complex, for
/// `r = -⟨⟨γ,β⟩⟩ > 0`.
pub fn tensor_degree(setting: &TensorSetting) -> Result<BigUint> {
    tensor_degree_with(setting, Exec::default())
}

pub fn tensor_degree_with(setting: &TensorSetting, exec: Exec) -> Result<BigUint> {
    let r = -setting.form();
    if r <= 0 {
        return Err(Error::Precondition(format!(
            "degree needs -<<gamma,beta>> > 0, got {r}"
        )));
    }
    let c = tensor_complex_with(setting, LineWeight3::default(), exec);
    multiplicity_of(&c, r as u32)
}

/// The moment `Σ (-1)^{i+c} n^c / c! · rank` of a computed complex. With
/// `c` the codimension this is the multiplicity of the resolved module.
pub fn multiplicity_of(c: &TensorComplex, codim: u32) -> Result<BigUint> {
    euler_moment(
        c.terms
            .iter()
            .flat_map(|(&i, v)| v.iter().map(move |s| (i, s.degree, s.rank()))),
        codim,
    )
}

/// Which half of the vanishing statement to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingPart {
    /// Windows `P(γ_k, β_k, t_k, w_k)`, sizes above `Σ β_k t_k + e`.
    Upper,
    /// Windows `P(γ_k, β_k, t_k, γ_jγ_l - α_k - w_k)`, sizes below `Σ β_k t_k - h`.
    Lower,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub checked: usize,
    /// `(λ_1, λ_2, λ_3, conjugated slot)` with a nonzero coefficient where
    /// vanishing was predicted.
    pub counterexamples: Vec<(Partition, Partition, Partition, usize)>,
    /// Nonzero coefficients exactly at the boundary size.
    pub witnesses: Vec<(Partition, Partition, Partition, usize)>,
}

/// Exhaustive check, for partitions of size at most `max_size`, that
/// `g(λ_1, λ_2, λ_3)` with the slot-`i` partition conjugated vanishes beyond
/// the bound, for every `i`. `e` and `h` are the codimension and fibre
/// dimension of the setting.
pub fn kron_vanishing_check(
    setting: &TensorSetting,
    w: LineWeight3,
    part: VanishingPart,
    e: usize,
    h: i64,
    max_size: usize,
) -> VanishingReport {
    let g = setting.gamma;
    let b = setting.beta();
    let win_w = match part {
        VanishingPart::Upper => w,
        VanishingPart::Lower => tensor_dual_weight(setting, w),
    };
    let mut report = VanishingReport::default();
    for t1 in 0..=g[0] {
        for t2 in 0..=g[1] {
            for t3 in 0..=g[2] {
                let t = [t1, t2, t3];
                let shift = (0..3).map(|k| (b[k] * t[k]) as i64).sum::<i64>();
                for n in 0..=max_size {
                    let n_i = n as i64;
                    let (predicted, boundary) = match part {
                        VanishingPart::Upper => (n_i > shift + e as i64, n_i == shift + e as i64),
                        VanishingPart::Lower => (n_i < shift - h, n_i == shift - h),
                    };
                    if !predicted && !boundary {
                        continue;
                    }
                    let lists: Vec<Vec<Partition>> = (0..3)
                        .map(|k| {
                            enumerate_p(
                                &PWindow {
                                    s: g[k],
                                    q: b[k],
                                    t: t[k],
                                    w: win_w.w[k],
                                },
                                n,
                            )
                        })
                        .collect();
                    for l1 in &lists[0] {
                        for l2 in &lists[1] {
                            for l3 in &lists[2] {
                                for slot in 0..3 {
                                    let mut ls = [l1.clone(), l2.clone(), l3.clone()];
                                    ls[slot] = ls[slot].conjugate();
                                    let v = kron(&ls[0], &ls[1], &ls[2]);
                                    let rec = (l1.clone(), l2.clone(), l3.clone(), slot);
                                    if predicted {
                                        report.checked += 1;
                                        if v != 0 {
                                            report.counterexamples.push(rec);
                                        }
                                    } else if v != 0 && slot == 0 {
                                        report.witnesses.push(rec);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// `(tensor α, tensor γ, m, quiver α, quiver γ)`.
pub type Identification = ([usize; 3], [usize; 3], usize, [usize; 2], [usize; 2]);

/// The settings that the tensor construction identifies with Kronecker
/// quiver settings.
pub const QUIVER_TYPE_IDENTIFICATIONS: [Identification; 6] = [
    ([2, 3, 4], [1, 2, 3], 2, [3, 4], [1, 1]),
    ([2, 4, 5], [1, 2, 4], 2, [4, 5], [1, 1]),
    ([2, 4, 5], [1, 3, 3], 2, [4, 5], [1, 1]),
    ([3, 3, 5], [1, 2, 4], 3, [5, 3], [3, 2]),
    ([4, 4, 4], [1, 3, 3], 4, [4, 4], [2, 3]),
    ([4, 5, 5], [1, 3, 4], 5, [4, 5], [1, 3]),
];
