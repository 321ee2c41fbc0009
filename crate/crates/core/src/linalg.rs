//! Exact linear algebra over the rationals.
//!
//! Dense routines serve the small systems (dual bases, invariant forms,
//! shuffle constraints). The sparse routines serve coboundary matrices:
//! [`sparse_rank`] runs a fraction-free elimination over the integers and
//! [`ColumnSpace`] keeps a fully reduced rational echelon basis so that it can
//! return primitives and non-membership certificates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Builds a sparse vector from an unordered accumulation map.
pub fn sparse_from_map(map: BTreeMap<usize, Scalar>) -> SparseVec {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a + s * b` for sparse vectors.
pub fn sparse_axpy(a: &SparseVec, s: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(s * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_get(v: &SparseVec, index: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&index, |(i, _)| *i).ok().map(|p| &v[p].1)
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Scalar {
    let mut acc = Scalar::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_dense(m: &[Vec<Scalar>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}` for an `rows × ncols` matrix.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[row][f];
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let pivot_row = a[c].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * p;
            }
        }
    }
    det
}

fn to_integer_column(v: &SparseVec) -> Vec<(usize, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, s) in v {
        lcm = lcm.lcm(s.denom());
    }
    let mut out: Vec<(usize, BigInt)> = v.iter().map(|(i, s)| (*i, s.numer() * (&lcm / s.denom()))).collect();
    normalize_content(&mut out);
    out
}

fn normalize_content(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a * v - b * p` for integer sparse vectors, dropping zeros.
fn int_combine(v: &[(usize, BigInt)], a: &BigInt, p: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        if j >= p.len() || (i < v.len() && v[i].0 < p[j].0) {
            out.push((v[i].0, a * &v[i].1));
            i += 1;
        } else if i >= v.len() || p[j].0 < v[i].0 {
            out.push((p[j].0, -(b * &p[j].1)));
            j += 1;
        } else {
            let x = a * &v[i].1 - b * &p[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Exact rank of the matrix whose columns are `columns`.
///
/// Fraction-free elimination over the integers: every column is scaled to a
/// primitive integer vector, reduced against the echelon basis by
/// cross-multiplication, and divided by its content after each step.
/// Sparsest columns are inserted first; pivots sit at the leading index.
pub fn sparse_rank(columns: &[SparseVec]) -> usize {
    let mut order: Vec<usize> = (0..columns.len()).collect();
    order.sort_by_key(|&j| (columns[j].len(), j));
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for j in order {
        let mut v = to_integer_column(&columns[j]);
        while let Some((lead, _)) = v.first() {
            let lead = *lead;
            match pivots.get(&lead) {
                Some(p) => {
                    let a = &p[0].1;
                    let b = &v[0].1;
                    let g = a.gcd(b);
                    let (a, b) = (a / &g, b / &g);
                    v = int_combine(&v, &a, p, &b);
                    debug_assert!(v.first().is_none_or(|(i, _)| *i > lead));
                    normalize_content(&mut v);
                }
                None => {
                    if v[0].1.is_negative() {
                        for (_, x) in v.iter_mut() {
                            *x = -&*x;
                        }
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Result of [`ColumnSpace::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coefficients `x_j` with `Σ_j x_j col_j = target`.
    Solution(SparseVec),
    /// A functional `y` with `y · col_j = 0` for all `j` and `y · target ≠ 0`.
    Certificate { functional: SparseVec, value: Scalar },
}

#[derive(Clone, Debug)]
struct Pivot {
    vector: SparseVec,
    combination: SparseVec,
}

/// Fully reduced echelon basis of a span of sparse columns.
#[derive(Clone, Debug, Default)]
pub struct ColumnSpace {
    pivots: BTreeMap<usize, Pivot>,
    columns: usize,
}

impl ColumnSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_columns(columns: &[SparseVec]) -> Self {
        let mut cs = ColumnSpace::new();
        for c in columns {
            cs.push(c);
        }
        cs
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    /// Reduces against all pivots; returns the residual and the combination
    /// `Σ_r v[r] p_r` expressed in original columns.
    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut residual = v.clone();
        let mut combo: SparseVec = Vec::new();
        for (row, coeff) in v {
            if let Some(p) = self.pivots.get(row) {
                residual = sparse_axpy(&residual, &-coeff, &p.vector);
                combo = sparse_axpy(&combo, coeff, &p.combination);
            }
        }
        (residual, combo)
    }

    /// Appends a column; returns true if it increased the rank.
    pub fn push(&mut self, column: &SparseVec) -> bool {
        let index = self.columns;
        self.columns += 1;
        let (residual, combo) = self.reduce(column);
        if residual.is_empty() {
            return false;
        }
        let (row, lead) = residual[0].clone();
        let inv = lead.recip();
        let vector: SparseVec = residual.iter().map(|(i, x)| (*i, x * &inv)).collect();
        // residual = column - combo, so new pivot = (column - combo) / lead
        let combination = sparse_axpy(&vec![(index, inv.clone())], &-inv, &combo);
        for p in self.pivots.values_mut() {
            if let Some(f) = sparse_get(&p.vector, row).cloned() {
                p.vector = sparse_axpy(&p.vector, &-&f, &vector);
                p.combination = sparse_axpy(&p.combination, &-&f, &combination);
            }
        }
        self.pivots.insert(row, Pivot { vector, combination });
        true
    }

    pub fn contains(&self, target: &SparseVec) -> bool {
        self.reduce(target).0.is_empty()
    }

    pub fn solve(&self, target: &SparseVec) -> Membership {
        let (residual, combo) = self.reduce(target);
        if residual.is_empty() {
            return Membership::Solution(combo);
        }
        let (s, value) = residual[0].clone();
        let mut functional: BTreeMap<usize, Scalar> = BTreeMap::new();
        functional.insert(s, Scalar::one());
        for (row, p) in &self.pivots {
            if let Some(x) = sparse_get(&p.vector, s) {
                *functional.entry(*row).or_insert_with(Scalar::zero) -= x;
            }
        }
        Membership::Certificate {
            functional: sparse_from_map(functional),
            value,
        }
    }
}
