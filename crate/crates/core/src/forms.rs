//! Sparse multilinear forms on `V[1]`: permutation action, cyclic and
//! symmetric projections, the cyclic product and the Pinczon bracket.
//!
//! A form is stored as its table of values on basis tuples. Koszul signs are
//! computed entry by entry from shifted degrees: on a nonzero entry the form
//! degree equals minus the total shifted degree of the tuple, so inhomogeneous
//! sums are handled componentwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::bilinear::BilinearForm;
use crate::error::{Error, Result};
use crate::graded::{odd, rearrangement_odd, subsets, GradedSpace, Perm, Vector};
use crate::scalar::Scalar;

/// A `k`-linear form on `V[1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiForm {
    space: GradedSpace,
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl fmt::Debug for MultiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiForm(arity {}) {{", self.arity)?;
        for (t, c) in &self.coeffs {
            write!(f, " {t:?}: {c},")?;
        }
        f.write_str(" }")
    }
}

/// Pushes `value` to the tuple `x` with `x_j = u_{σ(j)}`, with the Koszul
/// sign of rewriting the word `x` as the word `u`.
pub(crate) fn permuted_target(space: &GradedSpace, u: &[usize], sigma: &Perm) -> (Vec<usize>, bool) {
    let x: Vec<usize> = (0..u.len()).map(|j| u[sigma.apply(j)]).collect();
    let degs: Vec<i32> = x.iter().map(|&i| space.shifted(i)).collect();
    let inv = sigma.inverse();
    (x, rearrangement_odd(&degs, inv.images()))
}

/// Permutations increasing on each consecutive block of the given sizes.
pub fn block_shuffles(sizes: &[usize]) -> Vec<Perm> {
    let n: usize = sizes.iter().sum();
    let mut out = Vec::new();
    fn rec(sizes: &[usize], free: Vec<usize>, images: &mut Vec<usize>, out: &mut Vec<Perm>) {
        match sizes.split_first() {
            None => out.push(Perm::new(images.clone()).expect("block shuffle is a permutation")),
            Some((&size, rest)) => {
                for chosen in subsets(free.len(), size) {
                    let picked: Vec<usize> = chosen.iter().map(|&c| free[c]).collect();
                    let left: Vec<usize> = free.iter().copied().filter(|v| !picked.contains(v)).collect();
                    let mark = images.len();
                    images.extend(picked);
                    rec(rest, left, images, out);
                    images.truncate(mark);
                }
            }
        }
    }
    rec(sizes, (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// The `(p, q)` shuffles: permutations increasing on `0..p` and on `p..p+q`.
pub fn shuffles(p: usize, q: usize) -> Vec<Perm> {
    block_shuffles(&[p, q])
}

/// Inverses of the block shuffles. Summing `f^σ` over these turns
/// `f(x_{I_1}, x_{I_2}, ...)` into the sum over ordered set partitions
/// `I_1 ⊔ I_2 ⊔ ...` with blocks of the given sizes.
pub fn block_unshuffles(sizes: &[usize]) -> Vec<Perm> {
    block_shuffles(sizes).iter().map(Perm::inverse).collect()
}

/// Extends each permutation of `0..p` by the identity on `p..n`.
pub(crate) fn extend_perms(perms: Vec<Perm>, n: usize) -> Vec<Perm> {
    perms
        .into_iter()
        .map(|s| {
            let mut im = s.images().to_vec();
            im.extend(s.len()..n);
            Perm::new(im).expect("extended permutation")
        })
        .collect()
}

impl MultiForm {
    pub fn zero(space: &GradedSpace, arity: usize) -> Self {
        MultiForm {
            space: space.clone(),
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a form from `(tuple, value)` pairs; repeated tuples add up.
    pub fn from_entries<I>(space: &GradedSpace, arity: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut f = MultiForm::zero(space, arity);
        for (t, v) in entries {
            if t.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: t.len(),
                });
            }
            for &i in &t {
                space.check_index(i)?;
            }
            f.add_to(t, v);
        }
        Ok(f)
    }

    /// The form with value 1 on `tuple` and 0 elsewhere (`ε_{i_1} ⊗ ... ⊗ ε_{i_k}`
    /// as an evaluation table).
    pub fn indicator(space: &GradedSpace, tuple: &[usize]) -> Self {
        let mut f = MultiForm::zero(space, tuple.len());
        f.add_to(tuple.to_vec(), Scalar::one());
        f
    }

    /// A 0-form (scalar).
    pub fn constant(space: &GradedSpace, c: Scalar) -> Self {
        let mut f = MultiForm::zero(space, 0);
        f.add_to(Vec::new(), c);
        f
    }

    pub(crate) fn add_to(&mut self, tuple: Vec<usize>, value: Scalar) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(tuple) {
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

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, tuple: &[usize]) -> Scalar {
        self.coeffs.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Entries whose first index is `i`.
    pub fn entries_starting_with(&self, i: usize) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.range(vec![i]..vec![i + 1])
    }

    /// Form degree `deg Ω`, if the form is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut deg = None;
        for t in self.coeffs.keys() {
            let d = -self.space.tuple_shifted_degree(t);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn same_shape(&self, other: &MultiForm) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Input("forms live on different spaces".into()));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiForm) -> Result<MultiForm> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (t, v) in &other.coeffs {
            out.add_to(t.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiForm) -> Result<MultiForm> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> MultiForm {
        let mut out = MultiForm::zero(&self.space, self.arity);
        if s.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(t, v)| (t.clone(), v * s)).collect();
        out
    }

    /// Multilinear expansion over basis tuples; no signs.
    pub fn eval(&self, args: &[Vector]) -> Result<Scalar> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (t, v) in &self.coeffs {
            let mut term = v.clone();
            for (slot, &i) in t.iter().enumerate() {
                let c = args[slot].coeff(i);
                if c.is_zero() {
                    term = Scalar::zero();
                    break;
                }
                term *= c;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `(Ω^σ)(x_1..x_k) = ε · Ω(x_{σ^{-1}(1)}, ..., x_{σ^{-1}(k)})` with the
    /// Koszul sign `ε` of the reordering.
    pub fn act_perm(&self, sigma: &Perm) -> Result<MultiForm> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: sigma.len(),
            });
        }
        let mut out = MultiForm::zero(&self.space, self.arity);
        for (u, v) in &self.coeffs {
            let (x, neg) = permuted_target(&self.space, u, sigma);
            out.add_to(x, v.clone().signed(neg));
        }
        Ok(out)
    }

    pub(crate) fn sum_over(&self, perms: &[Perm]) -> MultiForm {
        let mut out = MultiForm::zero(&self.space, self.arity);
        for (u, v) in &self.coeffs {
            for sigma in perms {
                let (x, neg) = permuted_target(&self.space, u, sigma);
                out.add_to(x, v.clone().signed(neg));
            }
        }
        out
    }

    /// `Ω^{Cycl} = Σ_{τ ∈ Cycl} Ω^τ`.
    pub fn cyclic_sym(&self) -> MultiForm {
        if self.arity == 0 {
            return self.clone();
        }
        let rho = Perm::rotation(self.arity);
        let perms: Vec<Perm> = (0..self.arity).map(|m| rho.power(m)).collect();
        self.sum_over(&perms)
    }

    /// `Ω(x_{k+1}, x_1, ..., x_k) = ε Ω(x_1, ..., x_{k+1})` for all tuples.
    pub fn is_cyclic(&self) -> bool {
        if self.arity <= 1 {
            return true;
        }
        self.act_perm(&Perm::rotation(self.arity)).expect("arity matches") == *self
    }

    /// `Ω^{Sym} = Σ_{σ ∈ S_k} Ω^σ`.
    pub fn symmetrize(&self) -> MultiForm {
        self.sum_over(&Perm::all(self.arity))
    }

    /// Graded symmetry under every transposition of neighbours.
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            self.act_perm(&Perm::transposition(self.arity, i, i + 1))
                .expect("arity matches")
                == *self
        })
    }

    /// `(A ⊗ C)(x_1..x_{a+c}) = (-1)^{deg C · Σ_{j≤a} deg x_j} A(x_1..x_a) C(x_{a+1}..)`.
    pub fn tensor(&self, other: &MultiForm) -> Result<MultiForm> {
        if self.space != other.space {
            return Err(Error::Input("forms live on different spaces".into()));
        }
        let mut out = MultiForm::zero(&self.space, self.arity + other.arity);
        for (u, a) in &self.coeffs {
            let pu = self.space.tuple_parity(u);
            for (w, c) in &other.coeffs {
                let pw = self.space.tuple_parity(w);
                let mut t = u.clone();
                t.extend_from_slice(w);
                out.add_to(t, (a * c).signed(pu && pw));
            }
        }
        Ok(out)
    }

    /// The cyclic product `A ⊙ C = (A ⊗ C)^{Cycl}`.
    pub fn cyclic_prod(&self, other: &MultiForm) -> Result<MultiForm> {
        Ok(self.tensor(other)?.cyclic_sym())
    }

    /// The symmetric product `A · C = (A ⊗ C)^{Sym}`.
    pub fn symmetric_prod(&self, other: &MultiForm) -> Result<MultiForm> {
        Ok(self.tensor(other)?.symmetrize())
    }

    /// Contraction in the first slot: `(ι_x Ω)(y_2..y_k) = Ω(x, y_2, ..., y_k)`.
    pub fn interior(&self, x: &Vector) -> Result<MultiForm> {
        if self.arity == 0 {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        x.degree(&self.space)?;
        let mut out = MultiForm::zero(&self.space, self.arity - 1);
        for (t, v) in &self.coeffs {
            let c = x.coeff(t[0]);
            if !c.is_zero() {
                out.add_to(t[1..].to_vec(), v * c);
            }
        }
        Ok(out)
    }

    /// Vanishing on shuffle products in the first `k` slots of a
    /// `(k+1)`-form: returns the first `(p, tuple)` where
    /// `Σ_{σ ∈ Sh(p,q)} Ω^σ` does not vanish, or `None`.
    pub fn vsp_witness(&self) -> Option<(usize, Vec<usize>)> {
        if self.arity < 3 {
            return None;
        }
        let k = self.arity - 1;
        for p in 1..k {
            let perms = extend_perms(shuffles(p, k - p), k + 1);
            let summed = self.sum_over(&perms);
            if let Some((t, _)) = summed.coeffs.iter().next() {
                return Some((p, t.clone()));
            }
        }
        None
    }

    pub fn is_vsp(&self) -> bool {
        self.vsp_witness().is_none()
    }
}

/// `T(u, w) = Σ_i ε · Ω(e_i, u) Ω'(e'_i, w)`, the uncontracted tensor behind
/// both the cyclic and the symmetric brackets.
///
/// The sign is the Koszul sign of the arrangement
/// `Ω e_i u Ω' e'_i w` relative to `Ω Ω' e_i e'_i u w`.
pub(crate) fn contraction_tensor(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> MultiForm {
    let space = a.space();
    let n = space.dim();
    let mut out = MultiForm::zero(space, a.arity() + c.arity() - 2);
    for (t, va) in a.entries() {
        let i = t[0];
        let u = &t[1..];
        let di = odd(space.shifted(i));
        let pu = space.tuple_parity(u);
        for j in 0..n {
            let dji = b.dual_coeff(j, i);
            if dji.is_zero() {
                continue;
            }
            for (s, vc) in c.entries_starting_with(j) {
                let w = &s[1..];
                // deg Ω' ≡ d_j + |w|, and d_j ≡ d_i
                let deg_c = di ^ space.tuple_parity(w);
                // e'_i is normalized by b(e_i, e'_j) = δ_ij here, which differs from
                // the dual basis b(e'_j, e_i) = δ_ij by (-1)^{|e_i|}
                let neg = (di && deg_c) ^ (pu && (deg_c ^ di)) ^ !di;
                let mut x = u.to_vec();
                x.extend_from_slice(w);
                out.add_to(x, (va * vc * dji).signed(neg));
            }
        }
    }
    out
}

/// The Pinczon bracket `{Ω, Ω'} = Σ_i ι_{e_i}Ω ⊙ ι_{e'_i}Ω'` of cyclic forms.
pub fn pinczon_bracket(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> Result<MultiForm> {
    check_bracket_inputs(a, c, b)?;
    if !a.is_cyclic() {
        return Err(Error::NotCyclic("left argument".into()));
    }
    if !c.is_cyclic() {
        return Err(Error::NotCyclic("right argument".into()));
    }
    Ok(pinczon_bracket_unchecked(a, c, b))
}

pub(crate) fn pinczon_bracket_unchecked(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> MultiForm {
    if a.arity() == 0 || c.arity() == 0 {
        return MultiForm::zero(a.space(), (a.arity() + c.arity()).saturating_sub(2));
    }
    contraction_tensor(a, c, b).cyclic_sym()
}

fn check_bracket_inputs(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> Result<()> {
    if a.space() != b.space() || c.space() != b.space() {
        return Err(Error::Input("forms and bilinear form live on different spaces".into()));
    }
    Ok(())
}

/// Bracket on the symmetric quotient, evaluated on symmetric inputs
/// `Ω^{Sym}`, `Ω'^{Sym}` of arities `k+1`, `k'+1`:
/// `(k+k') / ((k+1)!(k'+1)!) · Σ_i ι_{e_i}Ω^{Sym} · ι_{e'_i}Ω'^{Sym}`,
/// with `k+k'` read as 1 when both forms are linear.
pub fn sym_bracket(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> Result<MultiForm> {
    check_bracket_inputs(a, c, b)?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric("left argument".into()));
    }
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric("right argument".into()));
    }
    if a.arity() == 0 || c.arity() == 0 {
        return Ok(MultiForm::zero(a.space(), (a.arity() + c.arity()).saturating_sub(2)));
    }
    let (k, k2) = (a.arity() - 1, c.arity() - 1);
    let factor = Scalar::from_int((k + k2).max(1) as i64) / (Scalar::factorial(k + 1) * Scalar::factorial(k2 + 1));
    Ok(contraction_tensor(a, c, b).symmetrize().scale(&factor))
}

/// The bracket on symmetric forms in its symmetric normalization,
/// `(k+k') Σ_i ι_{e_i}Ω · ι_{e'_i}Ω'`.
pub fn quotient_bracket(a: &MultiForm, c: &MultiForm, b: &BilinearForm) -> Result<MultiForm> {
    check_bracket_inputs(a, c, b)?;
    if a.arity() == 0 || c.arity() == 0 {
        return Ok(MultiForm::zero(a.space(), (a.arity() + c.arity()).saturating_sub(2)));
    }
    let k = (a.arity() + c.arity() - 2).max(1);
    Ok(contraction_tensor(a, c, b)
        .symmetrize()
        .scale(&Scalar::from_int(k as i64)))
}

/// Basis of cyclic `arity`-forms: one cyclic symmetrization per rotation
/// orbit of basis tuples, skipping orbits on which the signs force zero.
/// Orbits are listed by their lexicographically least tuple.
pub fn cyclic_form_basis(space: &GradedSpace, arity: usize) -> Vec<MultiForm> {
    let mut out = Vec::new();
    for t in crate::graded::tuples(space.dim(), arity) {
        let is_rep = (1..arity.max(1)).all(|m| {
            let rotated: Vec<usize> = (0..arity).map(|j| t[(j + m) % arity]).collect();
            rotated >= t
        });
        if !is_rep {
            continue;
        }
        let f = MultiForm::indicator(space, &t).cyclic_sym();
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}
