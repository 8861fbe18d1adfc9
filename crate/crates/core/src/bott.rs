//! Borel–Weil–Bott on a single Grassmannian `Gr(r, s)` of `s`-planes in
//! `R = k^r`, with universal sub-bundle `S` (rank `s`) and quotient `Q`
//! (rank `q = r - s`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{bott_t, DominantWeight, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianShape {
    pub r: usize,
    pub s: usize,
}

impl GrassmannianShape {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if s > r {
            return Err(Error::Precondition(format!("Gr({r}, {s}): s > r")));
        }
        Ok(GrassmannianShape { r, s })
    }

    pub fn q(&self) -> usize {
        self.r - self.s
    }

    pub fn dim(&self) -> usize {
        self.s * self.q()
    }
}

/// The cohomology of an irreducible homogeneous bundle: zero in every
/// degree, or a single irreducible `GL(R)` module in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BottOutcome {
    Zero,
    NonZero {
        cohom_degree: usize,
        result: DominantWeight,
        /// The weight is a weight of `R^*` rather than `R`.
        dual: bool,
    },
}

impl BottOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottOutcome::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BottOutcome::Zero => None,
            BottOutcome::NonZero { cohom_degree, .. } => Some(*cohom_degree),
        }
    }

    pub fn weight(&self) -> Option<&DominantWeight> {
        match self {
            BottOutcome::Zero => None,
            BottOutcome::NonZero { result, .. } => Some(result),
        }
    }
}

/// Sorts `v` into strictly decreasing order, returning the number of
/// inversions (pairs `i < j` with `v_i < v_j`), or `None` on a repeat.
fn sort_counting_inversions(v: &mut [i64]) -> Option<usize> {
    fn merge_sort(v: &mut [i64], buf: &mut Vec<i64>) -> usize {
        let n = v.len();
        if n <= 1 {
            return 0;
        }
        let mid = n / 2;
        let mut inv = merge_sort(&mut v[..mid], buf) + merge_sort(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[i] >= v[j] {
                buf.push(v[i]);
                i += 1;
            } else {
                // v[j] jumps ahead of everything left in the first half.
                inv += mid - i;
                buf.push(v[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..]);
        v.copy_from_slice(buf);
        inv
    }
    let inv = merge_sort(v, &mut Vec::with_capacity(v.len()));
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(inv)
}

/// Cohomology of `S^μ Q ⊗ S^ν S`: form `λ = (μ, ν)`, shift by
/// `ρ = (r-1, …, 0)`, and sort. A repeated entry means everything vanishes;
/// otherwise the sorted sequence minus `ρ` is the weight, in degree equal to
/// the number of inversions.
pub fn bott(shape: GrassmannianShape, mu_on_q: &[i64], nu_on_s: &[i64]) -> Result<BottOutcome> {
    if mu_on_q.len() != shape.q() || nu_on_s.len() != shape.s {
        return Err(Error::Precondition(format!(
            "weights of length {} and {} do not fit Gr({}, {})",
            mu_on_q.len(),
            nu_on_s.len(),
            shape.r,
            shape.s
        )));
    }
    for w in [mu_on_q, nu_on_s] {
        if w.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NotDecreasing(w.to_vec()));
        }
    }
    let r = shape.r as i64;
    let mut shifted: Vec<i64> = mu_on_q
        .iter()
        .chain(nu_on_s)
        .enumerate()
        .map(|(i, &x)| x + r - 1 - i as i64)
        .collect();
    let Some(inv) = sort_counting_inversions(&mut shifted) else {
        return Ok(BottOutcome::Zero);
    };
    let eta = shifted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (r - 1 - i as i64))
        .collect();
    Ok(BottOutcome::NonZero {
        cohom_degree: inv,
        result: DominantWeight::from_vec_unchecked(eta),
        dual: false,
    })
}

/// Cohomology of `S^μ S ⊗ det^w Q`: zero unless `μ ∈ P(s, q, t, w)` for
/// some (unique) `t`, in which case it is
/// `S^{(μ_1-q, …, μ_t-q, (t+w)^q, μ_{t+1}, …, μ_s)} R` in degree `q t`.
pub fn cohomology_s_twist(shape: GrassmannianShape, mu: &Partition, w: i64) -> Result<BottOutcome> {
    let (s, q) = (shape.s, shape.q());
    if mu.len() > s {
        return Err(Error::RankTooSmall {
            parts: mu.len(),
            rank: s,
        });
    }
    Ok(match bott_t(mu, s, q, w) {
        None => BottOutcome::Zero,
        Some(t) => BottOutcome::NonZero {
            cohom_degree: q * t,
            result: twisted_weight(mu, s, q, t, w),
            dual: false,
        },
    })
}

/// Cohomology of `S^ν Q^* ⊗ det^w S^*`: the mirror image of
/// [`cohomology_s_twist`] with `s` and `q` exchanged. The weight is a weight
/// of `R^*`.
pub fn cohomology_qdual_twist(
    shape: GrassmannianShape,
    nu: &Partition,
    w: i64,
) -> Result<BottOutcome> {
    let (s, q) = (shape.s, shape.q());
    if nu.len() > q {
        return Err(Error::RankTooSmall {
            parts: nu.len(),
            rank: q,
        });
    }
    Ok(match bott_t(nu, q, s, w) {
        None => BottOutcome::Zero,
        Some(t) => BottOutcome::NonZero {
            cohom_degree: s * t,
            result: twisted_weight(nu, q, s, t, w),
            dual: true,
        },
    })
}

/// `(μ_1-q, …, μ_t-q, (t+w)^q, μ_{t+1}, …, μ_s)`.
pub(crate) fn twisted_weight(
    mu: &Partition,
    s: usize,
    q: usize,
    t: usize,
    w: i64,
) -> DominantWeight {
    let mut v = Vec::with_capacity(s + q);
    for i in 1..=t {
        v.push(mu.part(i) as i64 - q as i64);
    }
    v.extend(std::iter::repeat_n(t as i64 + w, q));
    for i in (t + 1)..=s {
        v.push(mu.part(i) as i64);
    }
    DominantWeight::from_vec_unchecked(v)
}
