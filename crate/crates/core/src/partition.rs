//! Partitions, dominant integer weights and the Bott windows `P(s, q, t, w)`.
//!
//! Text forms use exponent shorthand: `2,1^2` is `(2, 1, 1)` and `0` is the
//! empty partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping any zero parts at the tail.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `count` parts all equal to `part`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![part; count],
        }
    }

    /// `(n)`, the one-row partition.
    pub fn row(n: usize) -> Self {
        Self::rectangle(n, 1)
    }

    /// `(1^n)`, the one-column partition.
    pub fn column(n: usize) -> Self {
        Self::rectangle(1, n)
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut p = Partition { parts };
        while p.parts.last() == Some(&0) {
            p.parts.pop();
        }
        p
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The conjugate partition: `λ'_j = #{i : λ_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts: out }
    }

    /// Entries padded with zeros to `len` (which must be at least `self.len()`).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the part sequence.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Writes a sequence in exponent shorthand, `2,1^2`.
pub(crate) fn write_grouped<T: fmt::Display + PartialEq>(
    f: &mut fmt::Formatter<'_>,
    entries: &[T],
) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < entries.len() {
        let mut j = i + 1;
        while j < entries.len() && entries[j] == entries[i] {
            j += 1;
        }
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if j - i == 1 {
            write!(f, "{}", entries[i])?;
        } else {
            write!(f, "{}^{}", entries[i], j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        write_grouped(f, &self.parts)
    }
}

/// Parses `part ("," part)*` with `part := INT ("^" INT)?`, allowing a sign.
pub(crate) fn parse_grouped(s: &str, what: &'static str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(parse_err(what, s, "empty input"));
    }
    let mut out = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (tok, "1"),
        };
        let value: i64 = base
            .parse()
            .map_err(|_| parse_err(what, s, format!("bad part {base:?}")))?;
        let count: usize = exp
            .parse()
            .map_err(|_| parse_err(what, s, format!("bad exponent {exp:?}")))?;
        out.extend(std::iter::repeat_n(value, count));
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "0" {
            return Ok(Partition::empty());
        }
        let raw = parse_grouped(t, "partition")?;
        if raw.iter().any(|&x| x < 0) {
            return Err(parse_err("partition", s, "negative part"));
        }
        Partition::new(raw.into_iter().map(|x| x as usize).collect())
            .map_err(|e| parse_err("partition", s, e.to_string()))
    }
}

/// All partitions of `n` with at most `max_parts` parts, each at most
/// `max_part`, in lexicographically descending order.
pub fn partitions_bounded(n: usize, max_parts: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        cap: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        // Parts beyond `slots * cap` cannot be absorbed.
        if remaining > slots.saturating_mul(cap) {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// A weakly decreasing integer sequence of fixed length: the highest weight
/// of an irreducible `GL_rank` representation. Zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(DominantWeight { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]), "{entries:?}");
        DominantWeight { entries }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            entries: vec![0; rank],
        }
    }

    /// The weight of `S^λ` on a space of dimension `rank`.
    pub fn from_partition(p: &Partition, rank: usize) -> Result<Self> {
        if p.len() > rank {
            return Err(Error::RankTooSmall {
                parts: p.len(),
                rank,
            });
        }
        Ok(DominantWeight {
            entries: p.padded(rank).into_iter().map(|x| x as i64).collect(),
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Adds `c` to every entry (tensoring with `det^c`).
    pub fn shifted(&self, c: i64) -> Self {
        DominantWeight {
            entries: self.entries.iter().map(|x| x + c).collect(),
        }
    }

    /// Highest weight of the dual representation: negated, reversed.
    pub fn dual(&self) -> Self {
        DominantWeight {
            entries: self.entries.iter().rev().map(|x| -x).collect(),
        }
    }

    /// The partition obtained by dropping trailing zeros, if all entries are
    /// non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.entries.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Partition::from_sorted(
            self.entries.iter().map(|&x| x as usize).collect(),
        ))
    }

    /// Parses the shorthand form and pads with zeros to `rank`.
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Self> {
        let mut v = if s.trim() == "0" {
            Vec::new()
        } else {
            parse_grouped(s, "weight")?
        };
        // Trailing zeros are implicit only when no negative entry follows.
        if v.len() > rank {
            return Err(Error::RankTooSmall {
                parts: v.len(),
                rank,
            });
        }
        if v.iter().any(|&x| x < 0) && v.len() != rank {
            return Err(parse_err(
                "weight",
                s,
                "weights with negative entries must list every entry",
            ));
        }
        v.resize(rank, 0);
        DominantWeight::new(v)
    }

    /// Dimension of the irreducible representation, by the Weyl dimension
    /// formula `prod_{i<j} (η_i - η_j + j - i) / (j - i)`.
    pub fn dim(&self) -> BigUint {
        schur_dim(self)
    }
}

impl fmt::Display for DominantWeight {
    /// Non-negative weights print like partitions; otherwise every entry is
    /// written out (with exponents).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_partition() {
            Some(p) => p.fmt(f),
            None => write_grouped(f, &self.entries),
        }
    }
}

/// Dimension of the irreducible `GL_n` representation with highest weight
/// `η` (`n` = rank). Shift-invariant; rank 0 gives 1.
pub fn schur_dim(eta: &DominantWeight) -> BigUint {
    let e = eta.entries();
    let n = e.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = e[i] - e[j] + (j - i) as i64;
            debug_assert!(a > 0);
            num *= a as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// `dim S^λ(k^n)`, zero when `λ` has more than `n` parts.
pub fn schur_dim_partition(p: &Partition, n: usize) -> BigUint {
    match DominantWeight::from_partition(p, n) {
        Ok(w) => schur_dim(&w),
        Err(_) => BigUint::zero(),
    }
}

/// The Bott window `P(s, q, t, w)`: partitions with at most `s` parts such
/// that `μ_t >= q + t + w` and `μ_{t+1} <= t + w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PWindow {
    pub s: usize,
    pub q: usize,
    pub t: usize,
    pub w: i64,
}

impl PWindow {
    pub fn new(s: usize, q: usize, t: usize, w: i64) -> Result<Self> {
        if t > s {
            return Err(Error::Precondition(format!("t = {t} exceeds s = {s}")));
        }
        Ok(PWindow { s, q, t, w })
    }
}

pub fn in_p(mu: &Partition, win: &PWindow) -> bool {
    let PWindow { s, q, t, w } = *win;
    if mu.len() > s || t > s {
        return false;
    }
    let (q, ti) = (q as i64, t as i64);
    if t > 0 && (mu.part(t) as i64) < q + ti + w {
        return false;
    }
    if t < s && (mu.part(t + 1) as i64) > ti + w {
        return false;
    }
    true
}

/// The unique `t` with `μ ∈ P(s, q, t, w)`, if there is one.
///
/// `t` counts the indices `i <= s` with `μ_i - i >= q + w`; the window then
/// holds exactly when no `μ_i - i` falls in `[w, w + q - 1]`.
pub fn bott_t(mu: &Partition, s: usize, q: usize, w: i64) -> Option<usize> {
    if mu.len() > s {
        return None;
    }
    let t = (1..=s)
        .take_while(|&i| mu.part(i) as i64 - i as i64 >= q as i64 + w)
        .count();
    let win = PWindow { s, q, t, w };
    in_p(mu, &win).then_some(t)
}

/// Weakly decreasing sequences of `len` entries in `[lo, hi]` summing to
/// `total`, lexicographically descending.
fn bounded_sequences(total: usize, len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        slots: usize,
        lo: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if cap < lo {
            return;
        }
        let max_fill = slots.saturating_mul(cap);
        let min_fill = slots.saturating_mul(lo);
        if remaining > max_fill || remaining < min_fill {
            return;
        }
        let top = cap.min(remaining - (slots - 1) * lo);
        for p in (lo..=top).rev() {
            cur.push(p);
            rec(remaining - p, slots - 1, lo, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, len, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊢ size` in `P(s, q, t, w)`, lexicographically descending.
///
/// Built as a top block of `t` rows, each at least `q + t + w`, followed by
/// a bottom block of `s - t` rows, each at most `t + w`.
pub fn enumerate_p(win: &PWindow, size: usize) -> Vec<Partition> {
    let PWindow { s, q, t, w } = *win;
    if t > s {
        return Vec::new();
    }
    let top_lo = (q as i64 + t as i64 + w).max(0) as usize;
    let bottom_len = s - t;
    let bottom_hi = t as i64 + w;
    if bottom_len > 0 && bottom_hi < 0 {
        return Vec::new();
    }
    let bottom_hi = bottom_hi.max(0) as usize;
    let mut out = Vec::new();
    for top_total in (0..=size).rev() {
        let bottom_total = size - top_total;
        if bottom_len == 0 && bottom_total > 0 {
            continue;
        }
        if t == 0 && top_total > 0 {
            continue;
        }
        let tops = bounded_sequences(top_total, t, top_lo, top_total.max(top_lo));
        if tops.is_empty() {
            continue;
        }
        let bottoms = bounded_sequences(bottom_total, bottom_len, 0, bottom_hi);
        for top in &tops {
            for bottom in &bottoms {
                if let (Some(&a), Some(&b)) = (top.last(), bottom.first()) {
                    if a < b {
                        continue;
                    }
                }
                let mut v = top.clone();
                v.extend_from_slice(bottom);
                out.push(Partition::from_sorted(v));
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}
