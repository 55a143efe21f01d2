//! Fraction-free sparse elimination.
//!
//! Rows are kept as primitive integer vectors (content 1, positive leading
//! coefficient). Rows are streamed into an [`Echelon`], which keeps one row per
//! pivot column with that column as its leading entry. Only the final
//! back-substitution produces rationals.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::scalar::Scalar;

pub(crate) type IntRow = Vec<(usize, BigInt)>;

/// Sparse rational row, sorted by column, no explicit zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Clears denominators and divides out the content. Input must be sorted.
fn to_primitive(row: &[(usize, Scalar)]) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (*c, q.numer() * (&lcm / q.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = lead.sign() == Sign::Minus;
    if g.is_one() && !negate {
        return;
    }
    for (_, v) in row.iter_mut() {
        if !g.is_one() {
            *v = &*v / &g;
        }
        if negate {
            *v = -&*v;
        }
    }
}

/// `a * r - b * p`, merged by column, zeros dropped.
fn combine(r: &IntRow, a: &BigInt, p: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a * &r[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &p[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &p[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminates column `col` of `r` using `p`, whose entry at `col` is `pc`.
fn eliminate(r: &IntRow, rc: &BigInt, p: &IntRow, pc: &BigInt) -> IntRow {
    let g = pc.gcd(rc);
    let a = pc / &g;
    let b = rc / &g;
    let mut out = combine(r, &a, p, &b);
    make_primitive(&mut out);
    out
}

/// Incremental row-echelon form over the rationals.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn reduce(&self, mut r: IntRow) -> IntRow {
        while let Some((c, rc)) = r.first() {
            match self.pivots.get(c) {
                Some(p) => {
                    let rc = rc.clone();
                    r = eliminate(&r, &rc, p, &p[0].1);
                }
                None => break,
            }
        }
        r
    }

    /// Adds a sparse row (any column order, repeated columns are summed).
    /// Returns `true` if the rank grew.
    pub fn insert<I>(&mut self, row: I) -> bool
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.ncols, "column {c} out of range");
            *acc.entry(c).or_insert_with(Scalar::zero) += v;
        }
        let sorted: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.insert_sorted(&sorted)
    }

    pub fn insert_sorted(&mut self, row: &[(usize, Scalar)]) -> bool {
        if self.is_full() || row.is_empty() {
            return false;
        }
        let r = self.reduce(to_primitive(row));
        match r.first() {
            Some(&(c, _)) => {
                self.pivots.insert(c, r);
                true
            }
            None => false,
        }
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.insert_sorted(&sparse)
    }

    /// True iff the dense vector lies in the row space.
    pub fn contains_dense(&self, row: &[Scalar]) -> bool {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.reduce(to_primitive(&sparse)).is_empty()
    }

    /// Fully reduced rows ordered by pivot column, leading coefficient 1.
    pub fn rref_rows(&self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            loop {
                let target = r
                    .iter()
                    .skip(1)
                    .find(|(col, _)| done.contains_key(col))
                    .map(|(col, v)| (*col, v.clone()));
                match target {
                    Some((col, v)) => {
                        let p = &done[&col];
                        r = eliminate(&r, &v, p, &p[0].1);
                    }
                    None => break,
                }
            }
            done.insert(c, r);
        }
        done.into_iter()
            .map(|(c, r)| {
                let lead = r[0].1.clone();
                let row = r
                    .into_iter()
                    .map(|(col, v)| (col, Scalar::new(v, lead.clone())))
                    .collect();
                (c, row)
            })
            .collect()
    }
}

/// Nullity of an integer matrix modulo the prime `p`. Never smaller than the
/// nullity over the rationals, so a zero here proves the rational nullity is zero.
pub(crate) fn modular_nullity(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| v.mod_floor(&pb).to_u64().expect("reduced mod p"))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        rank += 1;
    }
    ncols - rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{frac, int};

    #[test]
    fn echelon_detects_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![(0, int(2)), (1, int(4))]));
        assert!(!e.insert(vec![(1, int(-6)), (0, int(-3))]));
        assert!(e.insert(vec![(2, frac(1, 3))]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains_dense(&[int(1), int(2), int(5)]));
        assert!(!e.contains_dense(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn rref_rows_are_reduced() {
        let mut e = Echelon::new(3);
        e.insert(vec![(0, int(1)), (1, int(1)), (2, int(1))]);
        e.insert(vec![(1, int(1)), (2, int(2))]);
        let rows = e.rref_rows();
        assert_eq!(rows[0].1, vec![(0, int(1)), (2, int(-1))]);
        assert_eq!(rows[1].1, vec![(1, int(1)), (2, int(2))]);
    }

    #[test]
    fn modular_nullity_bounds() {
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(modular_nullity(&rows, 2, 1_000_000_007), 1);
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(-3)],
        ];
        assert_eq!(modular_nullity(&rows, 2, 1_000_000_007), 0);
    }
}
