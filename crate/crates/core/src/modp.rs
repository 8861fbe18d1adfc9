//! Dense linear algebra over a prime field `F_p`, `p < 2^32`.

use rand::Rng;

pub const DEFAULT_PRIME: u64 = 2_147_483_647;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn random(rows: usize, cols: usize, p: u64, rng: &mut impl Rng) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| rng.gen_range(0..p)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` (reduced mod `p`) into entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: u64, p: u64) {
        let e = &mut self.data[r * self.cols + c];
        *e = (*e + v % p) % p;
    }

    /// Rank over `F_p` by row reduction. Consumes a copy of the entries.
    pub fn rank(&self, p: u64) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + c].is_multiple_of(p)) else {
                continue;
            };
            if pivot != rank {
                for k in 0..cols {
                    a.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = inv_mod(a[rank * cols + c] % p, p);
            for k in c..cols {
                a[rank * cols + k] = a[rank * cols + k] % p * inv % p;
            }
            for r in (rank + 1)..rows {
                let f = a[r * cols + c] % p;
                if f == 0 {
                    continue;
                }
                for k in c..cols {
                    let sub = f * a[rank * cols + k] % p;
                    a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}
