use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::eliminate::{eliminate_units, BigIntegers, CheckedI64, PrimeField, Ring};
use super::SparseIntMatrix;
use crate::error::{Error, Result};

/// Nonzero part of a Smith normal form diagonal: `ones` leading 1s followed
/// by the invariant factors greater than 1, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub ones: usize,
    #[serde(with = "crate::homology::decimal_vec")]
    pub invariant_factors: Vec<BigUint>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.ones + self.invariant_factors.len()
    }

    pub fn diagonal(&self) -> Vec<BigUint> {
        std::iter::repeat_n(BigUint::one(), self.ones)
            .chain(self.invariant_factors.iter().cloned())
            .collect()
    }
}

/// Smith normal form diagonal over the integers. Runs in i64 with overflow
/// checks and restarts in arbitrary precision if anything overflows.
pub fn smith_normal_form(m: &SparseIntMatrix) -> SnfResult {
    match snf_with(&CheckedI64, m) {
        Some(r) => r,
        None => snf_with(&BigIntegers, m).expect("big integers do not overflow"),
    }
}

fn snf_with<R: Ring>(ring: &R, m: &SparseIntMatrix) -> Option<SnfResult>
where
    R::Elem: Into<BigInt>,
{
    let vectors = m
        .columns()
        .iter()
        .map(|col| col.iter().map(|&(r, v)| (r, ring.embed(v))).collect::<Vec<_>>());
    let out = eliminate_units(ring, m.rows(), vectors).ok()?;
    let residual: Vec<Vec<(u32, BigInt)>> = out
        .residual
        .into_iter()
        .map(|v| v.into_iter().map(|(c, e)| (c, e.into())).collect())
        .collect();
    let diag = dense_diagonalize(residual);
    let factors = invariant_factors(diag);
    let extra_ones = factors.iter().take_while(|d| d.is_one()).count();
    Some(SnfResult { ones: out.pivots + extra_ones, invariant_factors: factors[extra_ones..].to_vec() })
}

/// Diagonalizes a small block by unimodular row and column operations,
/// pivoting on the entry of least absolute value. Returns the nonzero
/// diagonal, not yet in divisibility order.
fn dense_diagonalize(sparse_rows: Vec<Vec<(u32, BigInt)>>) -> Vec<BigUint> {
    if sparse_rows.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<u32> = sparse_rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let width = cols.len();
    let mut a: Vec<Vec<BigInt>> = sparse_rows
        .into_iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); width];
            for (c, v) in r {
                row[cols.binary_search(&c).expect("column present")] = v;
            }
            row
        })
        .collect();
    let height = a.len();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < height.min(width) {
        let Some((pi, pj)) = min_abs_entry(&a, k) else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut dirty = false;
            for i in k + 1..height {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = a[i][k].div_floor(&a[k][k]);
                let (above, below) = a.split_at_mut(i);
                for (x, y) in below[0][k..width].iter_mut().zip(&above[k][k..width]) {
                    *x -= &q * y;
                }
                dirty |= !a[i][k].is_zero();
            }
            for j in k + 1..width {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = a[k][j].div_floor(&a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] -= t;
                }
                dirty |= !a[k][j].is_zero();
            }
            if !dirty {
                break;
            }
            // a remainder is now smaller than the pivot: move it into place
            let (pi, pj) = min_abs_in_cross(&a, k);
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
        }
        diag.push(a[k][k].magnitude().clone());
        k += 1;
    }
    diag
}

fn min_abs_entry(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &[Vec<BigInt>], k: usize) -> (usize, usize) {
    let mut best = (k, k);
    let better = |v: &BigInt, b: &BigInt| !v.is_zero() && v.abs() < b.abs();
    for (i, row) in a.iter().enumerate().skip(k) {
        if better(&row[k], &a[best.0][best.1]) {
            best = (i, k);
        }
    }
    for j in k..a[k].len() {
        if better(&a[k][j], &a[best.0][best.1]) {
            best = (k, j);
        }
    }
    best
}

/// Invariant factors of a diagonal matrix: repeated (gcd, lcm) replacement.
pub(crate) fn invariant_factors(mut d: Vec<BigUint>) -> Vec<BigUint> {
    d.retain(|x| !x.is_zero());
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

/// Rank over the field with `p` elements.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let field = PrimeField { p };
    let vectors = m.columns().iter().map(|col| {
        col.iter()
            .map(|&(r, v)| (r, field.embed(v)))
            .filter(|(_, v)| *v != 0)
            .collect::<Vec<_>>()
    });
    let out = eliminate_units(&field, m.rows(), vectors).unwrap_or_else(|_| unreachable!("field arithmetic never overflows"));
    debug_assert!(out.residual.is_empty());
    Ok(out.pivots)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(n: &BigUint) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n.clone();
    let mut p: u64 = 2;
    while n > BigUint::one() {
        if let Ok(small) = u64::try_from(&n) {
            if is_prime(small) {
                out.push(small);
                break;
            }
        }
        if (&n % p).is_zero() {
            out.push(p);
            while (&n % p).is_zero() {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    out.dedup();
    out
}
