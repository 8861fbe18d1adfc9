//! Symmetric group characters and Kronecker coefficients.
//!
//! Characters are evaluated with the Murnaghan–Nakayama rule on beta-sets.
//! Kronecker coefficients come from the class sum
//! `g = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)` in big-integer arithmetic.
//! Every memo table in this module is a concurrent map: lookups never block
//! each other and an insert only ever stores the one correct value, so the
//! results do not depend on thread interleaving.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// A conjugacy class of `S_n`, given by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    rho: Partition,
}

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        CycleType { rho }
    }

    pub fn identity(n: usize) -> Self {
        CycleType {
            rho: Partition::column(n),
        }
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn n(&self) -> usize {
        self.rho.size()
    }
}

/// `z_ρ = Π i^{m_i} m_i!`, the order of the centralizer of an element of
/// cycle type `ρ`.
pub fn centralizer_order(rho: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    let parts = rho.rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let (len, mult) = (parts[i] as u64, (j - i) as u64);
        for k in 1..=mult {
            z *= len * k;
        }
        i = j;
    }
    z
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

static CHAR_MEMO: Lazy<DashMap<(Partition, Partition), i128>> = Lazy::new(DashMap::new);

/// Removes every rim hook of length `k` from `lambda`, returning the
/// remaining shape together with the sign `(-1)^{height}`.
fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i128)> {
    let l = lambda.len();
    // Beta numbers `λ_i + l - i`, strictly decreasing.
    let beta: Vec<usize> = (1..=l).map(|i| lambda.part(i) + l - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .collect();
        out.push((Partition::from_sorted(parts), sign));
    }
    out
}

fn mn_character(lambda: &Partition, rho: &Partition) -> i128 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = CHAR_MEMO.get(&key) {
        return *v;
    }
    let k = rho.first();
    let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
    let mut total = 0i128;
    for (shape, sign) in remove_rim_hooks(lambda, k) {
        total += sign * mn_character(&shape, &rest);
    }
    CHAR_MEMO.insert(key, total);
    total
}

/// `χ^λ(ρ)`, memoized on `(λ, ρ)`.
pub fn character(lambda: &Partition, rho: &CycleType) -> Result<i128> {
    if lambda.size() != rho.n() {
        return Err(Error::SizeMismatch(lambda.size(), rho.n()));
    }
    Ok(mn_character(lambda, &rho.rho))
}

/// `dim S_λ = χ^λ(1)`.
pub fn sn_dim(lambda: &Partition) -> i128 {
    mn_character(lambda, &Partition::column(lambda.size()))
}

struct ClassData {
    classes: Vec<Partition>,
    /// `|C_ρ| = n! / z_ρ`.
    sizes: Vec<BigInt>,
    order: BigInt,
}

static CLASS_DATA: Lazy<DashMap<usize, Arc<ClassData>>> = Lazy::new(DashMap::new);
static CHAR_VECTORS: Lazy<DashMap<Partition, Arc<Vec<i128>>>> = Lazy::new(DashMap::new);

fn class_data(n: usize) -> Arc<ClassData> {
    if let Some(d) = CLASS_DATA.get(&n) {
        return Arc::clone(&d);
    }
    let order = factorial(n);
    let classes = partitions(n);
    let sizes = classes
        .iter()
        .map(|rho| BigInt::from(&order / centralizer_order(&CycleType::new(rho.clone()))))
        .collect();
    let data = Arc::new(ClassData {
        classes,
        sizes,
        order: BigInt::from(order),
    });
    CLASS_DATA.entry(n).or_insert(data).clone()
}

fn character_vector(lambda: &Partition) -> Arc<Vec<i128>> {
    if let Some(v) = CHAR_VECTORS.get(lambda) {
        return Arc::clone(&v);
    }
    let data = class_data(lambda.size());
    let v: Vec<i128> = data
        .classes
        .iter()
        .map(|rho| mn_character(lambda, rho))
        .collect();
    CHAR_VECTORS
        .entry(lambda.clone())
        .or_insert(Arc::new(v))
        .clone()
}

/// A triple of partitions of a common size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KroneckerQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl KroneckerQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        let n = lambda.size();
        for p in [&mu, &nu] {
            if p.size() != n {
                return Err(Error::SizeMismatch(n, p.size()));
            }
        }
        Ok(KroneckerQuery { lambda, mu, nu })
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    fn sorted_key(&self) -> [Partition; 3] {
        let mut k = [self.lambda.clone(), self.mu.clone(), self.nu.clone()];
        k.sort();
        k
    }
}

static KRON_MEMO: Lazy<DashMap<[Partition; 3], u64>> = Lazy::new(DashMap::new);

/// Cheap necessary conditions for `g ≠ 0`: the Littlewood–Murnaghan bound
/// `a_1 >= b_1 + c_1 - n` and the length bound `ℓ(a) <= ℓ(b) ℓ(c)`, applied
/// to every rotation of the triple and to every way of conjugating two of
/// its members (which leaves `g` unchanged).
pub fn kronecker_may_be_nonzero(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let n = lambda.size();
    let (lc, mc, nc) = (lambda.conjugate(), mu.conjugate(), nu.conjugate());
    let variants = [
        [lambda, mu, nu],
        [&lc, &mc, nu],
        [&lc, mu, &nc],
        [lambda, &mc, &nc],
    ];
    for [a, b, c] in variants {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            if x.first() + n < y.first() + z.first() {
                return false;
            }
            if x.len() > y.len() * z.len() {
                return false;
            }
        }
    }
    true
}

/// `g_{μ,ν}^λ` by the character class sum, with no pruning and no memo.
pub fn kronecker_class_sum(q: &KroneckerQuery) -> u64 {
    let n = q.n();
    let data = class_data(n);
    let (a, b, c) = (
        character_vector(&q.lambda),
        character_vector(&q.mu),
        character_vector(&q.nu),
    );
    let mut total = BigInt::zero();
    for k in 0..data.classes.len() {
        let prod = a[k] * b[k];
        if prod == 0 || c[k] == 0 {
            continue;
        }
        total += BigInt::from(prod) * BigInt::from(c[k]) * &data.sizes[k];
    }
    let (quot, rem) = total.div_rem(&data.order);
    assert!(
        rem.is_zero() && !quot.is_negative(),
        "class sum for {q:?} is not a non-negative integer: {total}/{}",
        data.order
    );
    quot.to_u64().expect("Kronecker coefficient exceeds u64")
}

/// The Kronecker coefficient `g_{μ,ν}^λ`, the multiplicity of `S_λ` in
/// `S_μ ⊗ S_ν`. Symmetric in its three arguments.
pub fn kronecker(q: &KroneckerQuery) -> u64 {
    let n = q.n();
    for (x, y, z) in [
        (&q.lambda, &q.mu, &q.nu),
        (&q.mu, &q.nu, &q.lambda),
        (&q.nu, &q.lambda, &q.mu),
    ] {
        if x.len() <= 1 {
            return u64::from(y == z);
        }
        if x.first() == 1 {
            return u64::from(*y == z.conjugate());
        }
    }
    if !kronecker_may_be_nonzero(&q.lambda, &q.mu, &q.nu) {
        return 0;
    }
    debug_assert!(n >= 2);
    let key = q.sorted_key();
    if let Some(v) = KRON_MEMO.get(&key) {
        return *v;
    }
    let g = kronecker_class_sum(q);
    KRON_MEMO.insert(key, g);
    g
}

/// Convenience wrapper for callers that already know the sizes agree.
pub fn kron(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    kronecker(&KroneckerQuery::new(lambda.clone(), mu.clone(), nu.clone()).expect("equal sizes"))
}

/// Number of entries in the character and Kronecker memo tables.
pub fn cache_sizes() -> (usize, usize) {
    (CHAR_MEMO.len(), KRON_MEMO.len())
}

// --- independent oracle -------------------------------------------------

/// Kostka number `K_{λ,τ}`: semistandard tableaux of shape `λ` and content
/// `τ`, counted by peeling horizontal strips.
fn kostka(
    lambda: &Partition,
    content: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), u64>,
) -> u64 {
    let k = content.len();
    if k == 0 {
        return u64::from(lambda.is_empty());
    }
    if let Some(&v) = memo.get(&(lambda.clone(), content.to_vec())) {
        return v;
    }
    let strip = content[k - 1];
    let mut total = 0;
    // Remove a horizontal strip of size `strip`: new shape ν with
    // λ_{i+1} <= ν_i <= λ_i.
    let parts = lambda.parts().to_vec();
    let mut cur = vec![0usize; parts.len()];
    fn rec(
        i: usize,
        left: usize,
        parts: &[usize],
        cur: &mut Vec<usize>,
        content: &[usize],
        memo: &mut HashMap<(Partition, Vec<usize>), u64>,
        total: &mut u64,
    ) {
        if i == parts.len() {
            if left == 0 {
                let shape = Partition::from_sorted(cur.clone());
                *total += kostka(&shape, content, memo);
            }
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        let hi = parts[i];
        for v in lo..=hi {
            let removed = hi - v;
            if removed > left {
                continue;
            }
            cur[i] = v;
            rec(i + 1, left - removed, parts, cur, content, memo, total);
        }
    }
    rec(
        0,
        strip,
        &parts,
        &mut cur,
        &content[..k - 1],
        memo,
        &mut total,
    );
    memo.insert((lambda.clone(), content.to_vec()), total);
    total
}

/// Calls `f` on every non-negative integer matrix with the given row and
/// column sums.
fn for_each_table(rows: &[usize], cols: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(
        r: usize,
        c: usize,
        rows: &[usize],
        col_left: &mut Vec<usize>,
        row_left: usize,
        cells: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if r == rows.len() {
            if col_left.iter().all(|&x| x == 0) {
                f(cells);
            }
            return;
        }
        let b = col_left.len();
        if c + 1 == b {
            if row_left > col_left[c] {
                return;
            }
            col_left[c] -= row_left;
            cells.push(row_left);
            let next = rows.get(r + 1).copied().unwrap_or(0);
            rec(r + 1, 0, rows, col_left, next, cells, f);
            cells.pop();
            col_left[c] += row_left;
            return;
        }
        for v in 0..=row_left.min(col_left[c]) {
            col_left[c] -= v;
            cells.push(v);
            rec(r, c + 1, rows, col_left, row_left - v, cells, f);
            cells.pop();
            col_left[c] += v;
        }
    }
    if rows.is_empty() || cols.is_empty() {
        if rows.iter().chain(cols).all(|&x| x == 0) {
            f(&[]);
        }
        return;
    }
    let mut col_left = cols.to_vec();
    rec(0, 0, rows, &mut col_left, rows[0], &mut Vec::new(), f);
}

/// `g_{μ,ν}^λ` by a route that never touches characters.
///
/// `s_λ` evaluated on the product alphabet `{x_i y_j}` (with `ℓ(μ)` x's and
/// `ℓ(ν)` y's) expands as `Σ g_{μ',ν'}^λ s_{μ'}(x) s_{ν'}(y)`. The coefficient
/// of `x^α y^β` is the sum of `K_{λ,τ}` over matrices with row sums `α`,
/// column sums `β` and entries `τ`. Leading terms are then stripped in
/// decreasing lexicographic order using Kostka numbers until the
/// coefficient of `s_μ(x) s_ν(y)` is isolated.
pub fn kronecker_oracle(q: &KroneckerQuery) -> u64 {
    let n = q.n();
    let (a, b) = (q.mu.len(), q.nu.len());
    if n == 0 {
        return 1;
    }
    let mut memo = HashMap::new();
    let alphas: Vec<Partition> = partitions(n)
        .into_iter()
        .filter(|p| p.len() <= a && p.dominates(&q.mu))
        .collect();
    let betas: Vec<Partition> = partitions(n)
        .into_iter()
        .filter(|p| p.len() <= b && p.dominates(&q.nu))
        .collect();
    // Monomial coefficients of s_λ(xy).
    let mut coeff = vec![vec![0i64; betas.len()]; alphas.len()];
    for (i, al) in alphas.iter().enumerate() {
        for (j, be) in betas.iter().enumerate() {
            let mut total = 0u64;
            for_each_table(&al.padded(a), &be.padded(b), &mut |cells| {
                let mut tau: Vec<usize> = cells.iter().copied().filter(|&x| x > 0).collect();
                tau.sort_unstable_by(|x, y| y.cmp(x));
                total += kostka(&q.lambda, &tau, &mut memo);
            });
            coeff[i][j] = total as i64;
        }
    }
    // Kostka matrices restricted to the dominance-closed index sets.
    let kx: Vec<Vec<i64>> = alphas
        .iter()
        .map(|p| {
            alphas
                .iter()
                .map(|al| kostka(p, al.parts(), &mut memo) as i64)
                .collect()
        })
        .collect();
    let ky: Vec<Vec<i64>> = betas
        .iter()
        .map(|p| {
            betas
                .iter()
                .map(|be| kostka(p, be.parts(), &mut memo) as i64)
                .collect()
        })
        .collect();
    // Both lists are lexicographically descending, so index order is the
    // reduction order.
    let mut g = vec![vec![0i64; betas.len()]; alphas.len()];
    for i in 0..alphas.len() {
        for j in 0..betas.len() {
            let mut c = coeff[i][j];
            for (i2, row) in g.iter().enumerate().take(i + 1) {
                for (j2, &gv) in row.iter().enumerate().take(j + 1) {
                    if (i2, j2) == (i, j) || gv == 0 {
                        continue;
                    }
                    c -= gv * kx[i2][i] * ky[j2][j];
                }
            }
            assert!(c >= 0, "negative leading coefficient in oracle for {q:?}");
            g[i][j] = c;
        }
    }
    let i = alphas
        .iter()
        .position(|p| *p == q.mu)
        .expect("μ indexes itself");
    let j = betas
        .iter()
        .position(|p| *p == q.nu)
        .expect("ν indexes itself");
    g[i][j] as u64
}
