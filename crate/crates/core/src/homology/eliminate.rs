//! Sparse elimination on unit pivots.
//!
//! Vectors are eliminated against each other using only pivots that are
//! units of the coefficient ring, chosen Markowitz-style: the live column
//! with fewest entries first, then the shortest vector holding a unit in
//! it, ties broken by lowest index. Over a field this computes the rank;
//! over the integers it strips every ±1 pivot and hands back the residual
//! block for a full Smith reduction.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) trait Ring {
    type Elem: Clone + Debug;

    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    /// `x − f·y`; `None` on overflow.
    fn sub_mul(&self, x: &Self::Elem, f: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
}

/// Integers in i64 with overflow detection.
pub(crate) struct CheckedI64;

impl Ring for CheckedI64 {
    type Elem = i64;

    fn embed(&self, v: i64) -> i64 {
        v
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn unit_inverse(&self, a: &i64) -> Option<i64> {
        (a.abs() == 1).then_some(*a)
    }
    fn mul(&self, a: &i64, b: &i64) -> Option<i64> {
        a.checked_mul(*b)
    }
    fn sub_mul(&self, x: &i64, f: &i64, y: &i64) -> Option<i64> {
        x.checked_sub(f.checked_mul(*y)?)
    }
}

pub(crate) struct BigIntegers;

impl Ring for BigIntegers {
    type Elem = BigInt;

    fn embed(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        a.abs().is_one().then(|| a.clone())
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn sub_mul(&self, x: &BigInt, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(x - f * y)
    }
}

/// The prime field with `p` elements.
pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    fn pow(&self, b: u64, mut e: u64) -> u64 {
        let m = self.p as u128;
        let mut acc: u128 = 1;
        let mut base = b as u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn mul(&self, a: &u64, b: &u64) -> Option<u64> {
        Some((*a as u128 * *b as u128 % self.p as u128) as u64)
    }
    fn sub_mul(&self, x: &u64, f: &u64, y: &u64) -> Option<u64> {
        let fy = (*f as u128 * *y as u128 % self.p as u128) as u64;
        Some((*x + self.p - fy) % self.p)
    }
}

#[derive(Debug)]
pub(crate) struct Overflow;

/// Result of eliminating every available unit pivot.
pub(crate) struct Eliminated<E> {
    pub pivots: usize,
    /// Surviving nonzero vectors, each sorted by coordinate.
    pub residual: Vec<Vec<(u32, E)>>,
}

/// Eliminates unit pivots among `vectors`, whose coordinates lie in `0..width`.
pub(crate) fn eliminate_units<R: Ring>(
    ring: &R,
    width: usize,
    vectors: impl IntoIterator<Item = Vec<(u32, R::Elem)>>,
) -> Result<Eliminated<R::Elem>, Overflow> {
    let mut rows: Vec<Vec<(u32, R::Elem)>> = vectors.into_iter().collect();
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); width];
    let mut col_nnz = vec![0u32; width];
    let mut col_done = vec![false; width];
    for (i, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(i as u32);
            col_nnz[*c as usize] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        (0..width).filter(|&c| col_nnz[c] > 0).map(|c| Reverse((col_nnz[c], c as u32))).collect();

    let mut pivots = 0;
    let mut scratch: Vec<(u32, R::Elem)> = Vec::new();
    let mut touched: Vec<u32> = Vec::new();

    while let Some(Reverse((count, c))) = heap.pop() {
        let cu = c as usize;
        if col_done[cu] || col_nnz[cu] != count || count == 0 {
            continue;
        }
        // live rows holding an entry in column c
        let mut holders: Vec<(u32, usize)> = Vec::with_capacity(count as usize);
        col_rows[cu].retain(|&r| {
            let ru = r as usize;
            if !alive[ru] {
                return false;
            }
            match rows[ru].binary_search_by_key(&c, |e| e.0) {
                Ok(pos) => {
                    holders.push((r, pos));
                    true
                }
                Err(_) => false,
            }
        });
        col_rows[cu].sort_unstable();
        col_rows[cu].dedup();
        holders.sort_unstable();
        holders.dedup();

        let pivot = holders
            .iter()
            .filter_map(|&(r, pos)| {
                let inv = ring.unit_inverse(&rows[r as usize][pos].1)?;
                Some((rows[r as usize].len(), r, inv))
            })
            .min_by_key(|(len, r, _)| (*len, *r));
        let Some((_, pr, inv)) = pivot else {
            continue;
        };
        let pivot_row = std::mem::take(&mut rows[pr as usize]);
        alive[pr as usize] = false;

        for &(r, pos) in &holders {
            if r == pr {
                continue;
            }
            let ru = r as usize;
            let factor = ring.mul(&rows[ru][pos].1, &inv).ok_or(Overflow)?;
            scratch.clear();
            touched.clear();
            let target = &rows[ru];
            let (mut i, mut j) = (0, 0);
            while i < target.len() || j < pivot_row.len() {
                let take_target = j >= pivot_row.len() || (i < target.len() && target[i].0 < pivot_row[j].0);
                let take_pivot = i >= target.len() || (j < pivot_row.len() && pivot_row[j].0 < target[i].0);
                if take_target {
                    scratch.push(target[i].clone());
                    i += 1;
                } else if take_pivot {
                    let (col, ref y) = pivot_row[j];
                    let v = ring.sub_mul(&ring.embed(0), &factor, y).ok_or(Overflow)?;
                    if !ring.is_zero(&v) {
                        scratch.push((col, v));
                        col_nnz[col as usize] += 1;
                        col_rows[col as usize].push(r);
                    }
                    touched.push(col);
                    j += 1;
                } else {
                    let col = target[i].0;
                    let v = ring.sub_mul(&target[i].1, &factor, &pivot_row[j].1).ok_or(Overflow)?;
                    if ring.is_zero(&v) {
                        col_nnz[col as usize] -= 1;
                    } else {
                        scratch.push((col, v));
                    }
                    touched.push(col);
                    i += 1;
                    j += 1;
                }
            }
            std::mem::swap(&mut rows[ru], &mut scratch);
            if rows[ru].is_empty() {
                alive[ru] = false;
            }
            for &t in &touched {
                if t != c && !col_done[t as usize] {
                    heap.push(Reverse((col_nnz[t as usize], t)));
                }
            }
        }
        for (col, _) in &pivot_row {
            col_nnz[*col as usize] -= 1;
            if *col != c && !col_done[*col as usize] {
                heap.push(Reverse((col_nnz[*col as usize], *col)));
            }
        }
        debug_assert_eq!(col_nnz[cu], 0);
        col_done[cu] = true;
        pivots += 1;
    }

    let residual = rows
        .into_iter()
        .zip(alive)
        .filter(|(r, a)| *a && !r.is_empty())
        .map(|(r, _)| r)
        .collect();
    Ok(Eliminated { pivots, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_inverse() {
        let f = PrimeField { p: 7 };
        for a in 1..7 {
            let inv = f.unit_inverse(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), Some(1));
        }
        assert_eq!(f.embed(-1), 6);
    }

    #[test]
    fn rank_over_f2_of_triangle_boundary() {
        // columns of ∂_1 for C_3 as vectors over the vertices
        let vecs = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (2, 1)], vec![(1, 1), (2, 1)]];
        let out = eliminate_units(&PrimeField { p: 2 }, 3, vecs).unwrap();
        assert_eq!(out.pivots, 2);
        assert!(out.residual.is_empty());
    }

    #[test]
    fn integers_leave_nonunit_block() {
        let vecs = vec![vec![(0u32, 2i64)], vec![(1, 1), (2, 3)]];
        let out = eliminate_units(&CheckedI64, 3, vecs).unwrap();
        assert_eq!(out.pivots, 1);
        assert_eq!(out.residual, vec![vec![(0, 2)]]);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2 + 1;
        let vecs = vec![vec![(0u32, 1i64), (1, big)], vec![(0, -3), (1, 1)]];
        assert!(eliminate_units(&CheckedI64, 2, vecs).is_err());
    }
}
