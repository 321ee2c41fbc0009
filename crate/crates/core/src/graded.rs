//! Graded spaces, permutations and the Koszul sign rule.
//!
//! Every space is finite dimensional with a fixed homogeneous basis. A basis
//! vector `e_i` has degree `|e_i|` in `V` and shifted degree `|e_i| - 1` in
//! `V[1]`. All sign computations below depend only on degree parities.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parity of an integer degree.
#[inline]
pub fn odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

/// A finite-dimensional Z-graded vector space with a named homogeneous basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    degrees: Vec<i32>,
    names: Vec<String>,
}

impl GradedSpace {
    pub fn new(degrees: Vec<i32>, names: Vec<String>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Input("a graded space needs at least one basis vector".into()));
        }
        if degrees.len() != names.len() {
            return Err(Error::DimensionMismatch {
                expected: degrees.len(),
                got: names.len(),
            });
        }
        Ok(GradedSpace { degrees, names })
    }

    /// Space with basis `e0, e1, ...` of the given degrees.
    pub fn with_degrees(degrees: Vec<i32>) -> Self {
        let names = (0..degrees.len()).map(|i| format!("e{i}")).collect();
        GradedSpace { degrees, names }
    }

    /// `n`-dimensional space concentrated in degree 0.
    pub fn ungraded(n: usize) -> Self {
        Self::with_degrees(vec![0; n])
    }

    pub fn named(names: &[&str]) -> Self {
        GradedSpace {
            degrees: vec![0; names.len()],
            names: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// `|e_i|`.
    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    /// `deg(e_i) = |e_i| - 1`, the degree in `V[1]`.
    pub fn shifted(&self, i: usize) -> i32 {
        self.degrees[i] - 1
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn shifted_degrees(&self) -> Vec<i32> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_ungraded(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0)
    }

    /// Sum of shifted degrees of a basis tuple.
    pub fn tuple_shifted_degree(&self, tuple: &[usize]) -> i32 {
        tuple.iter().map(|&i| self.shifted(i)).sum()
    }

    /// Parity of the sum of shifted degrees of a basis tuple.
    pub fn tuple_parity(&self, tuple: &[usize]) -> bool {
        tuple.iter().fold(false, |acc, &i| acc ^ odd(self.shifted(i)))
    }

    /// `self ⊕ other`, basis of `self` first; names of `other` that clash
    /// get primes.
    pub fn direct_sum(&self, other: &GradedSpace) -> GradedSpace {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        let mut names = self.names.clone();
        for n in &other.names {
            let mut n = n.clone();
            while names.contains(&n) {
                n.push('\'');
            }
            names.push(n);
        }
        GradedSpace { degrees, names }
    }

    /// Dual space with the dual basis; degrees are negated.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            degrees: self.degrees.iter().map(|d| -d).collect(),
            names: self.names.iter().map(|n| format!("{n}*")).collect(),
        }
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.dim() {
            Err(Error::IndexOutOfRange { index, dim: self.dim() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GradedSpace[")?;
        for (i, (n, d)) in self.names.iter().zip(&self.degrees).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}:{d}")?;
        }
        f.write_str("]")
    }
}

/// Coordinates of an element of a graded space in its basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector {
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn new(space: &GradedSpace, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Vector { coeffs })
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Vector { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coeffs: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.coeffs[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Degree `|x|` if the vector is homogeneous and nonzero; `Ok(None)` for 0.
    pub fn degree(&self, space: &GradedSpace) -> Result<Option<i32>> {
        let mut deg = None;
        for (i, _) in self.support() {
            match deg {
                None => deg = Some(space.degree(i)),
                Some(d) if d != space.degree(i) => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn scaled(&self, s: &Scalar) -> Vector {
        Vector {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A permutation of `0..n`, stored as its image list: `sigma(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Input(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The cycle `i ↦ i+1 mod n`, i.e. `(1 2 ... n)`.
    pub fn rotation(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Perm(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn power(&self, k: usize) -> Perm {
        let mut p = Perm::identity(self.len());
        for _ in 0..k {
            p = self.compose(&p);
        }
        p
    }

    /// True when the signature is -1.
    pub fn is_odd(&self) -> bool {
        let mut odd = false;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    odd = !odd;
                }
            }
        }
        odd
    }

    /// All permutations of `0..n`, in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

/// Sign of the word `x_{order[0]} ... x_{order[k-1]}` relative to
/// `x_0 ... x_{k-1}` under the Koszul rule: one factor `(-1)^{d_a d_b}` for
/// every pair of letters whose relative order is reversed. Returns `true`
/// when the sign is negative.
pub fn rearrangement_odd(degrees: &[i32], order: &[usize]) -> bool {
    let mut neg = false;
    for p in 0..order.len() {
        if !odd(degrees[order[p]]) {
            continue;
        }
        for q in p + 1..order.len() {
            if order[p] > order[q] && odd(degrees[order[q]]) {
                neg = !neg;
            }
        }
    }
    neg
}

/// The `η` cocycle of a list of shifted degrees: `(-1)^{Σ_j (k-j) d_j}`.
pub fn eta_odd(shifted: &[i32]) -> bool {
    let k = shifted.len();
    let mut neg = false;
    for (j, &d) in shifted.iter().enumerate() {
        // 0-based position j carries weight k - 1 - j
        if odd(d) && (k - 1 - j) % 2 == 1 {
            neg = !neg;
        }
    }
    neg
}

/// `η(x_1, ..., x_k)` as a scalar `±1`, from the shifted degrees `deg(x_j)`.
pub fn eta(shifted: &[i32]) -> Scalar {
    Scalar::sign(eta_odd(shifted))
}

/// Koszul sign of rearranging `x_1 ... x_k` into `x_{σ(1)} ... x_{σ(k)}`.
pub fn koszul_sign(perm: &Perm, degrees: &[i32]) -> Result<Scalar> {
    if perm.len() != degrees.len() {
        return Err(Error::DimensionMismatch {
            expected: degrees.len(),
            got: perm.len(),
        });
    }
    Ok(Scalar::sign(rearrangement_odd(degrees, perm.images())))
}

/// Sign of a labelled arrangement: `reference` and `arranged` list the same
/// labels, `degree_of` gives each label's degree. This is the implicit sign in
/// front of a term whose letters appear in `arranged` order.
pub fn arrangement_odd<L: PartialEq + Copy>(reference: &[L], arranged: &[L], degree_of: impl Fn(L) -> i32) -> bool {
    debug_assert_eq!(reference.len(), arranged.len());
    let degs: Vec<i32> = reference.iter().map(|&l| degree_of(l)).collect();
    let order: Vec<usize> = arranged
        .iter()
        .map(|l| {
            reference
                .iter()
                .position(|r| r == l)
                .expect("label missing from reference")
        })
        .collect();
    rearrangement_odd(&degs, &order)
}

/// All strictly increasing `size`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

/// All tuples in `0..dim` of the given length, lexicographic.
pub fn tuples(dim: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut n| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = n % dim;
            n /= dim;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_examples() {
        assert!(eta(&[5]).is_one());
        assert_eq!(eta(&[1, 1]), -Scalar::one());
        assert!(eta(&[0, 0, 0, 0]).is_one());
        assert!(eta(&[]).is_one());
    }

    #[test]
    fn koszul_examples() {
        let id = Perm::identity(3);
        assert!(koszul_sign(&id, &[1, 1, 1]).unwrap().is_one());
        let swap = Perm::transposition(2, 0, 1);
        assert_eq!(koszul_sign(&swap, &[1, 1]).unwrap(), -Scalar::one());
        assert!(koszul_sign(&swap, &[0, 1]).unwrap().is_one());
        assert!(koszul_sign(&swap, &[1]).is_err());
    }

    #[test]
    fn eta_cocycle_identity_exhaustive() {
        // η(x_σ)η(x) = ε(σ) ε_{|x|}(σ) ε_x(σ), all σ ∈ S_k, k ≤ 4
        for k in 0..=4usize {
            for degs in tuples(4, k) {
                let shifted: Vec<i32> = degs.iter().map(|&d| d as i32 - 1).collect();
                let unshifted: Vec<i32> = shifted.iter().map(|d| d + 1).collect();
                for sigma in Perm::all(k) {
                    let permuted: Vec<i32> = sigma.images().iter().map(|&i| shifted[i]).collect();
                    let lhs = eta_odd(&permuted) ^ eta_odd(&shifted);
                    let rhs = sigma.is_odd()
                        ^ rearrangement_odd(&unshifted, sigma.images())
                        ^ rearrangement_odd(&shifted, sigma.images());
                    assert_eq!(lhs, rhs, "k={k} degs={shifted:?} sigma={sigma:?}");
                }
            }
        }
    }

    #[test]
    fn perm_algebra() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        for s in &all {
            assert_eq!(s.compose(&s.inverse()), Perm::identity(3));
        }
        assert_eq!(Perm::rotation(4).power(4), Perm::identity(4));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(tuples(3, 2).count(), 9);
    }

    #[test]
    fn vector_degree() {
        let v = GradedSpace::with_degrees(vec![0, 1, 1]);
        let x = Vector::new(&v, vec![0.into(), 1.into(), 2.into()]).unwrap();
        assert_eq!(x.degree(&v).unwrap(), Some(1));
        let y = Vector::new(&v, vec![1.into(), 1.into(), 0.into()]).unwrap();
        assert!(y.degree(&v).is_err());
    }
}
