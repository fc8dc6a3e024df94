//! Helpers shared by the integration targets: random structure constants and
//! small oracles that do their own arithmetic instead of calling the library.

#![allow(dead_code, clippy::needless_range_loop)]

use nilplab::algebra::Algebra;
use nilplab::exactmath::Field;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Structure constants `e_i e_j = Σ c_k e_k` over `F_p`, stored densely.
#[derive(Clone, Debug)]
pub struct Table {
    pub p: u64,
    pub dim: usize,
    pub c: Vec<Vec<Vec<u64>>>,
}

impl Table {
    pub fn entries(&self) -> Vec<(usize, usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.c[i][j][k] != 0 {
                        out.push((i, j, k, self.c[i][j][k] as i64));
                    }
                }
            }
        }
        out
    }

    pub fn algebra(&self) -> Algebra {
        let labels: Vec<String> = (0..self.dim).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Algebra::from_i64(Field::prime(self.p).unwrap(), &refs, &self.entries()).unwrap()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let s = a[i] * b[j] % self.p;
                if s == 0 {
                    continue;
                }
                for k in 0..self.dim {
                    out[k] = (out[k] + s * self.c[i][j][k]) % self.p;
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Dimensions of `A_[1], A_[2], …` computed by brute force, stopping at
    /// zero or at the first repeated term.
    pub fn weak_dims(&self) -> Vec<usize> {
        let mut basis: Vec<Vec<u64>> = (0..self.dim).map(|i| self.unit(i)).collect();
        let mut dims = vec![self.dim];
        loop {
            if basis.is_empty() {
                return dims;
            }
            let mut next = Vec::new();
            for w in &basis {
                for i in 0..self.dim {
                    next.push(self.mul(&self.unit(i), w));
                    next.push(self.mul(w, &self.unit(i)));
                }
            }
            let next = echelon_mod_p(next, self.p);
            let stable = next.len() == basis.len();
            dims.push(next.len());
            basis = next;
            if stable {
                return dims;
            }
        }
    }
}

/// Reduced row basis of the span of `rows` over `F_p`.
pub fn echelon_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let f = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = *x * f % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let m = rows[r][col];
                for c in 0..cols {
                    rows[r][c] = (rows[r][c] + p * p - m * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Rank of an integer matrix by exact rational elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let d = &f * &m[rank][c];
                m[r][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// `C(n, k)` from factorials.
pub fn binomial(n: u64, k: u64) -> BigInt {
    let fact = |m: u64| (1..=m).fold(BigInt::one(), |acc, i| acc * i);
    if k > n {
        return BigInt::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// A random algebra of dimension at most 4 over `F_2` or `F_3`. A third of
/// the draws are generic, the rest are graded (products land in strictly
/// higher basis indices, so the algebra is nilpotent) with an occasional
/// perturbation that may break nilpotence.
pub fn random_table(rng: &mut impl Rng) -> Table {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let dim = rng.gen_range(0..=4);
    let mode = rng.gen_range(0..3);
    let density = rng.gen_range(0.2..0.7);
    let mut c = vec![vec![vec![0u64; dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if !rng.gen_bool(density) {
                continue;
            }
            for k in 0..dim {
                let graded = k > i.max(j);
                let allowed = match mode {
                    0 => true,
                    1 => graded,
                    _ => graded || rng.gen_bool(0.05),
                };
                if allowed && rng.gen_bool(0.6) {
                    c[i][j][k] = rng.gen_range(1..p);
                }
            }
        }
    }
    Table { p, dim, c }
}
