//! Multilinear maps `V^k → M` between two spaces (cochains), stored sparsely
//! under the key `[i_1, ..., i_k, out]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{tuples, GradedSpace, Perm};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    source: GradedSpace,
    target: GradedSpace,
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(arity {}) {{", self.arity)?;
        for (t, c) in &self.coeffs {
            let (inputs, out) = t.split_at(self.arity);
            write!(f, " {inputs:?}->{}: {c},", out[0])?;
        }
        f.write_str(" }")
    }
}

impl Cochain {
    pub fn zero(source: &GradedSpace, target: &GradedSpace, arity: usize) -> Self {
        Cochain {
            source: source.clone(),
            target: target.clone(),
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a cochain from `(inputs, output, coefficient)` triples.
    pub fn from_entries<I>(source: &GradedSpace, target: &GradedSpace, arity: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, usize, Scalar)>,
    {
        let mut c = Cochain::zero(source, target, arity);
        for (inputs, out, v) in entries {
            if inputs.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: inputs.len(),
                });
            }
            for &i in &inputs {
                source.check_index(i)?;
            }
            target.check_index(out)?;
            let mut key = inputs;
            key.push(out);
            c.add_to(key, v);
        }
        Ok(c)
    }

    pub(crate) fn add_to(&mut self, key: Vec<usize>, value: Scalar) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, inputs: &[usize], out: usize) -> Scalar {
        let mut key = inputs.to_vec();
        key.push(out);
        self.coeffs.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `c(e_inputs)` as a coefficient vector in the target basis.
    pub fn value(&self, inputs: &[usize]) -> Vec<Scalar> {
        (0..self.target.dim()).map(|o| self.get(inputs, o)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Input("cochains on different spaces".into()));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_to(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        let mut out = Cochain::zero(&self.source, &self.target, self.arity);
        if !s.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        }
        out
    }

    /// Dimension of the ambient space `Hom(V^{⊗k}, M)`.
    pub fn ambient_dim(&self) -> usize {
        ambient_dim(self.source.dim(), self.target.dim(), self.arity)
    }

    /// Position of a key in the lexicographic enumeration of the ambient space.
    pub fn ravel(&self, key: &[usize]) -> usize {
        let n = self.source.dim();
        let mut idx = 0;
        for &i in &key[..self.arity] {
            idx = idx * n + i;
        }
        idx * self.target.dim() + key[self.arity]
    }

    pub fn unravel(&self, mut idx: usize) -> Vec<usize> {
        let n = self.source.dim();
        let m = self.target.dim();
        let mut key = vec![0; self.arity + 1];
        key[self.arity] = idx % m;
        idx /= m;
        for slot in (0..self.arity).rev() {
            key[slot] = idx % n;
            idx /= n;
        }
        key
    }

    pub fn to_sparse(&self) -> SparseVec {
        let mut v: Vec<(usize, Scalar)> = self.coeffs.iter().map(|(k, c)| (self.ravel(k), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(source: &GradedSpace, target: &GradedSpace, arity: usize, v: &SparseVec) -> Cochain {
        let mut c = Cochain::zero(source, target, arity);
        for (i, s) in v {
            let key = c.unravel(*i);
            c.add_to(key, s.clone());
        }
        c
    }

    /// `(c^σ)(x) = ε c(x_{σ^{-1}(1)}, ...)` with the permutation sign `ε`
    /// (the inputs are ungraded letters of an ordinary cochain).
    pub fn act_perm_signed(&self, sigma: &Perm) -> Cochain {
        let mut out = Cochain::zero(&self.source, &self.target, self.arity);
        let neg = sigma.is_odd();
        for (key, v) in &self.coeffs {
            let mut x: Vec<usize> = (0..self.arity).map(|j| key[sigma.apply(j)]).collect();
            x.push(key[self.arity]);
            out.add_to(x, v.clone().signed(neg));
        }
        out
    }

    /// Antisymmetric in all inputs.
    pub fn is_alternating(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            let t = Perm::transposition(self.arity, i, i + 1);
            self.act_perm_signed(&t) == *self
        })
    }

    /// Vanishing on the signed shuffles `Σ_{σ ∈ Sh(p,k-p)} sgn(σ) c(x_{σ^{-1}(1)}, ...)`.
    pub fn is_harrison(&self) -> bool {
        (1..self.arity).all(|p| {
            let mut acc = Cochain::zero(&self.source, &self.target, self.arity);
            for s in crate::forms::shuffles(p, self.arity - p) {
                for (key, v) in &self.coeffs {
                    let mut x: Vec<usize> = (0..self.arity).map(|j| key[s.apply(j)]).collect();
                    x.push(key[self.arity]);
                    acc.add_to(x, v.clone().signed(s.is_odd()));
                }
            }
            acc.is_zero()
        })
    }

    /// Every basis key of the ambient space, in enumeration order.
    pub fn ambient_keys(source_dim: usize, target_dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
        tuples(source_dim, arity).flat_map(move |t| {
            (0..target_dim).map(move |o| {
                let mut k = t.clone();
                k.push(o);
                k
            })
        })
    }
}

pub fn ambient_dim(source_dim: usize, target_dim: usize, arity: usize) -> usize {
    source_dim.pow(arity as u32) * target_dim
}
