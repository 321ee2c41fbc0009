//! Taylor coefficients of coderivations: circle products and brackets in the
//! tensor, symmetric and pre-Lie flavors, the `Q ↔ Ω_Q` dictionary and the
//! structure equation `[Q, Q] = 0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bilinear::BilinearForm;
use crate::error::{Error, Result};
use crate::forms::{block_unshuffles, extend_perms, permuted_target, shuffles, MultiForm};
use crate::graded::{eta, GradedSpace, Perm, Vector};
use crate::scalar::Scalar;

/// A multilinear map `⊗^k V[1] → V[1]`, stored as the coefficient of `e_out`
/// in `Q(e_{i_1}, ..., e_{i_k})` under the key `[i_1, ..., i_k, out]`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiMap {
    space: GradedSpace,
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiMap(arity {}) {{", self.arity)?;
        for (t, c) in &self.coeffs {
            let (inputs, out) = t.split_at(self.arity);
            write!(f, " {inputs:?}->{}: {c},", out[0])?;
        }
        f.write_str(" }")
    }
}

/// Coalgebra the coderivation lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Tensor coalgebra with deconcatenation (`A∞`).
    Tensor,
    /// Symmetric coalgebra (`L∞`).
    Symmetric,
    /// Tensor coefficients vanishing on shuffle products (`C∞`).
    Vsp,
    /// `S(V[1]) ⊗ V[1]` (pre-`L∞`); the last input is the distinguished one.
    Prelie,
}

impl MultiMap {
    pub fn zero(space: &GradedSpace, arity: usize) -> Self {
        MultiMap {
            space: space.clone(),
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a map from `(inputs, output, coefficient)` triples.
    pub fn from_entries<I>(space: &GradedSpace, arity: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, usize, Scalar)>,
    {
        let mut m = MultiMap::zero(space, arity);
        for (inputs, out, v) in entries {
            if inputs.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: inputs.len(),
                });
            }
            for &i in inputs.iter().chain(std::iter::once(&out)) {
                space.check_index(i)?;
            }
            let mut key = inputs;
            key.push(out);
            m.add_to(key, v);
        }
        Ok(m)
    }

    /// The linear map `e_i ↦ Σ_j matrix[j][i] e_j`.
    pub fn linear(space: &GradedSpace, matrix: &[Vec<Scalar>]) -> Result<Self> {
        let n = space.dim();
        let mut entries = Vec::new();
        for j in 0..n {
            for i in 0..n {
                entries.push((vec![i], j, matrix[j][i].clone()));
            }
        }
        MultiMap::from_entries(space, 1, entries)
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

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Coefficient of `e_out` in `Q(e_inputs)`.
    pub fn get(&self, inputs: &[usize], out: usize) -> Scalar {
        let mut key = inputs.to_vec();
        key.push(out);
        self.coeffs.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `Q(e_{i_1}, ..., e_{i_k})` as a vector.
    pub fn value(&self, inputs: &[usize]) -> Vector {
        let n = self.space.dim();
        Vector::from_coeffs((0..n).map(|o| self.get(inputs, o)).collect())
    }

    /// Nonzero coefficients keyed by `[inputs..., out]`.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Map degree in the shifted grading, if nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut deg = None;
        for key in self.coeffs.keys() {
            let (inputs, out) = key.split_at(self.arity);
            let d = self.space.shifted(out[0]) - self.space.tuple_shifted_degree(inputs);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn same_shape(&self, other: &MultiMap) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Input("maps live on different spaces".into()));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_to(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> MultiMap {
        let mut out = MultiMap::zero(&self.space, self.arity);
        if !s.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        }
        out
    }

    /// Multilinear evaluation, no signs.
    pub fn apply(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.space.dim()];
        for (key, v) in &self.coeffs {
            let mut term = v.clone();
            for (slot, &i) in key[..self.arity].iter().enumerate() {
                term *= args[slot].coeff(i);
                if term.is_zero() {
                    break;
                }
            }
            out[key[self.arity]] += term;
        }
        Ok(Vector::from_coeffs(out))
    }

    /// Sums `Q^σ` over permutations of the first `σ.len()` inputs, other
    /// inputs fixed.
    pub(crate) fn sum_over_prefix(&self, perms: &[Perm]) -> MultiMap {
        let mut out = MultiMap::zero(&self.space, self.arity);
        for (key, v) in &self.coeffs {
            for sigma in perms {
                let p = sigma.len();
                let (head, tail) = key.split_at(p);
                let (mut x, neg) = permuted_target(&self.space, head, sigma);
                x.extend_from_slice(tail);
                out.add_to(x, v.clone().signed(neg));
            }
        }
        out
    }

    /// `(Q^σ)(x) = ε Q(x_{σ^{-1}(1)}, ..., x_{σ^{-1}(k)})`.
    pub fn act_perm(&self, sigma: &Perm) -> Result<MultiMap> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: sigma.len(),
            });
        }
        Ok(self.sum_over_prefix(std::slice::from_ref(sigma)))
    }

    /// `Q^{Sym} = Σ_{σ ∈ S_k} Q^σ`.
    pub fn symmetrize(&self) -> MultiMap {
        self.sum_over_prefix(&Perm::all(self.arity))
    }

    /// Graded symmetry in the first `slots` inputs.
    pub fn is_symmetric_in(&self, slots: usize) -> bool {
        (0..slots.saturating_sub(1)).all(|i| {
            let t = extend_perms(vec![Perm::transposition(slots, i, i + 1)], self.arity);
            self.sum_over_prefix(&t) == *self
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(self.arity)
    }

    /// First `(p, key)` at which `Q` does not vanish on `sh_{p,k-p}`.
    pub fn vsp_witness(&self) -> Option<(usize, Vec<usize>)> {
        for p in 1..self.arity {
            let summed = self.sum_over_prefix(&shuffles(p, self.arity - p));
            if let Some((key, _)) = summed.coeffs.iter().next() {
                return Some((p, key.clone()));
            }
        }
        None
    }

    pub fn is_vsp(&self) -> bool {
        self.vsp_witness().is_none()
    }

    fn by_output(&self) -> BTreeMap<usize, Vec<(&[usize], &Scalar)>> {
        let mut idx: BTreeMap<usize, Vec<(&[usize], &Scalar)>> = BTreeMap::new();
        for (key, v) in &self.coeffs {
            idx.entry(key[self.arity]).or_default().push((&key[..self.arity], v));
        }
        idx
    }

    fn entry_parity(&self, key: &[usize]) -> bool {
        self.space.tuple_parity(key)
    }
}

fn check_same_space(a: &MultiMap, c: &MultiMap) -> Result<()> {
    if a.space != c.space {
        return Err(Error::Input("maps live on different spaces".into()));
    }
    Ok(())
}

/// Adds `coef · (outer ∘ inner)` to `out`, where `coef` is `scale`, times
/// `(-1)^{deg outer · deg inner}` on each entry pair when `koszul` is set.
fn circle_into(out: &mut MultiMap, outer: &MultiMap, inner: &MultiMap, scale: &Scalar, koszul: bool) {
    let idx = inner.by_output();
    let k = outer.arity;
    for (key, va) in &outer.coeffs {
        let pa = outer.entry_parity(key);
        for r in 0..k {
            let Some(list) = idx.get(&key[r]) else { continue };
            let before = outer.space.tuple_parity(&key[..r]);
            for &(w, vc) in list {
                let pc = inner.space.tuple_parity(w) ^ inner.space.tuple_parity(&[key[r]]);
                let neg = (pc && before) ^ (koszul && pa && pc);
                let mut x = key[..r].to_vec();
                x.extend_from_slice(w);
                x.extend_from_slice(&key[r + 1..]);
                out.add_to(x, (va * vc * scale).signed(neg));
            }
        }
    }
}

fn result_arity(k: usize, k2: usize) -> usize {
    (k + k2).saturating_sub(1)
}

/// `(Q ∘ Q')(x) = Σ_r (-1)^{deg Q' · (|x_1| + ... + |x_r|)} Q(x_{[1,r]}, Q'(x_{[r+1,r+k']}), ...)`.
pub fn circle_tensor(q: &MultiMap, q2: &MultiMap) -> Result<MultiMap> {
    check_same_space(q, q2)?;
    let mut out = MultiMap::zero(&q.space, result_arity(q.arity, q2.arity));
    circle_into(&mut out, q, q2, &Scalar::one(), false);
    Ok(out)
}

/// `[Q, Q'] = Q ∘ Q' - (-1)^{deg Q deg Q'} Q' ∘ Q`, signs taken entry by
/// entry so inhomogeneous maps are handled componentwise.
pub fn bracket_tensor(q: &MultiMap, q2: &MultiMap) -> Result<MultiMap> {
    check_same_space(q, q2)?;
    let mut out = MultiMap::zero(&q.space, result_arity(q.arity, q2.arity));
    circle_into(&mut out, q, q2, &Scalar::one(), false);
    circle_into(&mut out, q2, q, &-Scalar::one(), true);
    Ok(out)
}

/// Raw terms `Q(Q'(t), s)` with the inner output in the first slot, before
/// summing over the partitions of the arguments.
fn sym_raw_into(out: &mut MultiMap, outer: &MultiMap, inner: &MultiMap, scale: &Scalar, koszul: bool) {
    if outer.arity == 0 {
        return;
    }
    let idx = inner.by_output();
    for (key, va) in &outer.coeffs {
        let Some(list) = idx.get(&key[0]) else { continue };
        let pa = outer.entry_parity(key);
        for &(w, vc) in list {
            let pc = inner.space.tuple_parity(w) ^ inner.space.tuple_parity(&[key[0]]);
            let mut x = w.to_vec();
            x.extend_from_slice(&key[1..]);
            out.add_to(x, (va * vc * scale).signed(koszul && pa && pc));
        }
    }
}

/// Commutator of the coderivations of `S^+(V[1])` with symmetric Taylor
/// coefficients `Q`, `Q'`:
/// `Σ_{I ⊔ J, #J = k'} ε Q(Q'(x_J), x_I) - (-1)^{deg Q deg Q'} (Q ↔ Q')`.
pub fn bracket_sym(q: &MultiMap, q2: &MultiMap) -> Result<MultiMap> {
    check_same_space(q, q2)?;
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric("left argument".into()));
    }
    if !q2.is_symmetric() {
        return Err(Error::NotSymmetric("right argument".into()));
    }
    let n = result_arity(q.arity, q2.arity);
    let mut left = MultiMap::zero(&q.space, n);
    sym_raw_into(&mut left, q, q2, &Scalar::one(), false);
    let mut right = MultiMap::zero(&q.space, n);
    sym_raw_into(&mut right, q2, q, &-Scalar::one(), true);
    let mut out = MultiMap::zero(&q.space, n);
    if q.arity > 0 {
        for (key, v) in left.sum_over_prefix(&block_unshuffles(&[q2.arity, q.arity - 1])).coeffs {
            out.add_to(key, v);
        }
    }
    if q2.arity > 0 {
        for (key, v) in right
            .sum_over_prefix(&block_unshuffles(&[q.arity, q2.arity - 1]))
            .coeffs
        {
            out.add_to(key, v);
        }
    }
    Ok(out)
}

/// The symmetric part `Q: S^k(V[1]) ⊗ V[1] → V[1]` has arity `k + 1`.
fn prelie_k(q: &MultiMap) -> Result<usize> {
    q.arity
        .checked_sub(1)
        .ok_or_else(|| Error::Input("pre-Lie maps have at least one input".into()))
}

/// `outer ∘ inner` on `S(V[1]) ⊗ V[1]`, using both terms of the coderivation
/// extension: `Q(x_I ⊗ Q'(x_J ⊗ y))` and `Q(x_I · Q'(x_J ⊗ x_j) ⊗ y)`.
fn prelie_circle_into(out: &mut MultiMap, outer: &MultiMap, inner: &MultiMap, scale: &Scalar, koszul: bool) {
    let k = outer.arity - 1;
    let k2 = inner.arity - 1;
    let idx = inner.by_output();
    let space = &outer.space;
    let mut first = MultiMap::zero(space, out.arity);
    let mut second = MultiMap::zero(space, out.arity);
    for (key, va) in &outer.coeffs {
        let pa = outer.entry_parity(key);
        // inner output in the distinguished slot
        if let Some(list) = idx.get(&key[k]) {
            let before = space.tuple_parity(&key[..k]);
            for &(w, vc) in list {
                let pc = space.tuple_parity(w) ^ space.tuple_parity(&[key[k]]);
                let neg = (pc && before) ^ (koszul && pa && pc);
                let mut x = key[..k].to_vec();
                x.extend_from_slice(w);
                x.push(key[k + 1]);
                first.add_to(x, (va * vc * scale).signed(neg));
            }
        }
        // inner output in the last symmetric slot
        if k >= 1 {
            if let Some(list) = idx.get(&key[k - 1]) {
                let before = space.tuple_parity(&key[..k - 1]);
                for &(w, vc) in list {
                    let pc = space.tuple_parity(w) ^ space.tuple_parity(&[key[k - 1]]);
                    let neg = (pc && before) ^ (koszul && pa && pc);
                    let mut x = key[..k - 1].to_vec();
                    x.extend_from_slice(w);
                    x.push(key[k]);
                    x.push(key[k + 1]);
                    second.add_to(x, (va * vc * scale).signed(neg));
                }
            }
        }
    }
    for (x, v) in first.sum_over_prefix(&block_unshuffles(&[k, k2])).coeffs {
        out.add_to(x, v);
    }
    if k >= 1 {
        for (x, v) in second.sum_over_prefix(&block_unshuffles(&[k - 1, k2, 1])).coeffs {
            out.add_to(x, v);
        }
    }
}

/// Commutator of the coderivations of `S(V[1]) ⊗ V[1]` extending
/// `Q: P^k → P^0` and `Q': P^{k'} → P^0`, as a map `P^{k+k'} → P^0`.
pub fn prelie_bracket(q: &MultiMap, q2: &MultiMap) -> Result<MultiMap> {
    check_same_space(q, q2)?;
    let k = prelie_k(q)?;
    let k2 = prelie_k(q2)?;
    if !q.is_symmetric_in(k) {
        return Err(Error::NotSymmetric("left argument in its symmetric factor".into()));
    }
    if !q2.is_symmetric_in(k2) {
        return Err(Error::NotSymmetric("right argument in its symmetric factor".into()));
    }
    let mut out = MultiMap::zero(&q.space, k + k2 + 1);
    prelie_circle_into(&mut out, q, q2, &Scalar::one(), false);
    prelie_circle_into(&mut out, q2, q, &-Scalar::one(), true);
    Ok(out)
}

/// `Ω_Q(x_1, ..., x_{k+1}) = B(Q(x_1, ..., x_k), x_{k+1})`.
pub fn omega_of(q: &MultiMap, b: &BilinearForm) -> Result<MultiForm> {
    if q.space() != b.space() {
        return Err(Error::Input("map and bilinear form live on different spaces".into()));
    }
    let n = q.space.dim();
    let mut entries = Vec::new();
    for (key, v) in &q.coeffs {
        let out = key[q.arity];
        for j in 0..n {
            let bij = b.shifted_entry(out, j);
            if !bij.is_zero() {
                let mut t = key[..q.arity].to_vec();
                t.push(j);
                entries.push((t, v * bij));
            }
        }
    }
    MultiForm::from_entries(&q.space, q.arity + 1, entries)
}

/// Inverse of [`omega_of`] on cyclic forms.
pub fn map_of(omega: &MultiForm, b: &BilinearForm) -> Result<MultiMap> {
    if !omega.is_cyclic() {
        return Err(Error::NotCyclic("map_of needs a cyclic form".into()));
    }
    map_of_any(omega, b)
}

/// `Q` with `B(Q(x_1..x_k), x_{k+1}) = Ω(x_1..x_{k+1})`, for any form.
pub(crate) fn map_of_any(omega: &MultiForm, b: &BilinearForm) -> Result<MultiMap> {
    if omega.space() != b.space() {
        return Err(Error::Input("form and bilinear form live on different spaces".into()));
    }
    let arity = omega
        .arity()
        .checked_sub(1)
        .ok_or(Error::ArityMismatch { expected: 1, got: 0 })?;
    let inv = b.shifted_inverse();
    let n = omega.space().dim();
    let mut q = MultiMap::zero(omega.space(), arity);
    for (t, v) in omega.entries() {
        let j = t[arity];
        for o in 0..n {
            let coef = &inv[j][o];
            if !coef.is_zero() {
                let mut key = t[..arity].to_vec();
                key.push(o);
                q.add_to(key, v * coef);
            }
        }
    }
    Ok(q)
}

/// B-quadratic test: cyclicity of `Ω_Q` for the tensor, symmetric and vsp
/// flavors, `B(Q(x ⊗ y_1), y_2) = B(Q(x ⊗ y_2), y_1)` for the pre-Lie flavor.
pub fn is_b_quadratic(q: &MultiMap, b: &BilinearForm, flavor: Flavor) -> Result<bool> {
    let omega = omega_of(q, b)?;
    Ok(match flavor {
        Flavor::Prelie => {
            let n = omega.arity();
            if n < 2 {
                true
            } else {
                omega.act_perm(&Perm::transposition(n, n - 2, n - 1))? == omega
            }
        }
        _ => omega.is_cyclic(),
    })
}

/// `Q(x_1..x_k) = η(x_1..x_k) q(x_1..x_k)` coefficientwise.
pub fn shift_map(q: &MultiMap) -> MultiMap {
    let mut out = MultiMap::zero(&q.space, q.arity);
    for (key, v) in &q.coeffs {
        let degs: Vec<i32> = key[..q.arity].iter().map(|&i| q.space.shifted(i)).collect();
        out.add_to(key.clone(), v * eta(&degs));
    }
    out
}

/// Inverse of [`shift_map`] (η is a sign).
pub fn unshift_map(q: &MultiMap) -> MultiMap {
    shift_map(q)
}

/// A finite sum of Taylor coefficients of one flavor.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorCoderivation {
    flavor: Flavor,
    space: GradedSpace,
    components: BTreeMap<usize, MultiMap>,
}

impl TaylorCoderivation {
    /// Collects components, adding maps of equal arity and checking the
    /// flavor's symmetry.
    pub fn new(flavor: Flavor, space: &GradedSpace, maps: Vec<MultiMap>) -> Result<Self> {
        let mut components: BTreeMap<usize, MultiMap> = BTreeMap::new();
        for m in maps {
            if m.space() != space {
                return Err(Error::Input("component lives on a different space".into()));
            }
            let merged = match components.remove(&m.arity) {
                Some(prev) => prev.add(&m)?,
                None => m,
            };
            components.insert(merged.arity, merged);
        }
        components.retain(|_, m| !m.is_zero());
        for m in components.values() {
            match flavor {
                Flavor::Tensor => {}
                Flavor::Symmetric => {
                    if !m.is_symmetric() {
                        return Err(Error::NotSymmetric(format!("component of arity {}", m.arity)));
                    }
                }
                Flavor::Vsp => {
                    if let Some((p, key)) = m.vsp_witness() {
                        return Err(Error::NotVsp(format!(
                            "component of arity {} on sh_{p},{} at {key:?}",
                            m.arity,
                            m.arity - p
                        )));
                    }
                }
                Flavor::Prelie => {
                    let k = prelie_k(m)?;
                    if !m.is_symmetric_in(k) {
                        return Err(Error::NotSymmetric(format!("component of arity {}", m.arity)));
                    }
                }
            }
        }
        Ok(TaylorCoderivation {
            flavor,
            space: space.clone(),
            components,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn components(&self) -> impl Iterator<Item = &MultiMap> {
        self.components.values()
    }

    pub fn component(&self, arity: usize) -> Option<&MultiMap> {
        self.components.get(&arity)
    }

    pub fn max_arity(&self) -> usize {
        self.components.keys().next_back().copied().unwrap_or(0)
    }

    /// Bracket of two coderivations of the same flavor, component by component.
    pub fn bracket(&self, other: &TaylorCoderivation) -> Result<TaylorCoderivation> {
        if self.flavor != other.flavor {
            return Err(Error::Input("coderivations of different flavors".into()));
        }
        let mut maps = Vec::new();
        for a in self.components.values() {
            for c in other.components.values() {
                maps.push(match self.flavor {
                    Flavor::Tensor | Flavor::Vsp => bracket_tensor(a, c)?,
                    Flavor::Symmetric => bracket_sym(a, c)?,
                    Flavor::Prelie => prelie_bracket(a, c)?,
                });
            }
        }
        let flavor = if self.flavor == Flavor::Vsp {
            Flavor::Tensor
        } else {
            self.flavor
        };
        let mut out = TaylorCoderivation::new(flavor, &self.space, maps)?;
        out.flavor = self.flavor;
        Ok(out)
    }
}

/// Outcome of [`check_structure_equation`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureReport {
    pub holds: bool,
    /// Arities of `[T, T]` that were computed.
    pub arities_checked: Vec<usize>,
    /// First nonzero coefficient: arity, `[inputs..., out]`, value.
    pub witness: Option<(usize, Vec<usize>, Scalar)>,
}

/// Computes `[T, T]` and reports its first nonzero coefficient.
pub fn check_structure_equation(t: &TaylorCoderivation) -> Result<StructureReport> {
    let square = t.bracket(t)?;
    let top = 2 * t.max_arity();
    let arities_checked: Vec<usize> = (0..top.max(1)).collect();
    let witness = square
        .components
        .values()
        .next()
        .and_then(|m| m.entries().next().map(|(k, v)| (m.arity, k.clone(), v.clone())));
    Ok(StructureReport {
        holds: witness.is_none(),
        arities_checked,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{gl2, kx2, m2};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn linear(space: &GradedSpace, m: &[[i64; 2]; 2]) -> MultiMap {
        let rows: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&v| s(v)).collect()).collect();
        MultiMap::linear(space, &rows).unwrap()
    }

    #[test]
    fn linear_brackets_are_commutators() {
        let v = GradedSpace::ungraded(2);
        let a = linear(&v, &[[0, 1], [0, 0]]);
        let b = linear(&v, &[[0, 0], [1, 0]]);
        let ab = bracket_tensor(&a, &b).unwrap();
        let ba = bracket_tensor(&b, &a).unwrap();
        assert_eq!(ab, ba.scale(&s(-1)));
        let x = Vector::basis(2, 0);
        let direct = a.apply(&[b.apply(std::slice::from_ref(&x)).unwrap()]).unwrap();
        let back = b.apply(&[a.apply(std::slice::from_ref(&x)).unwrap()]).unwrap();
        let expected: Vec<Scalar> = direct.coeffs().iter().zip(back.coeffs()).map(|(p, q)| p - q).collect();
        assert_eq!(ab.apply(&[x]).unwrap().coeffs(), &expected[..]);
        assert_eq!(
            circle_tensor(&a, &b)
                .unwrap()
                .sub(&circle_tensor(&b, &a).unwrap())
                .unwrap(),
            ab
        );
    }

    #[test]
    fn shift_round_trip() {
        let q = m2().as_map();
        assert_eq!(unshift_map(&shift_map(&q)), q);
        assert_eq!(m2().shifted_map(), shift_map(&q));
    }

    #[test]
    fn omega_round_trip() {
        for a in [m2(), gl2(), kx2()] {
            let b = a.form().unwrap();
            let q = a.shifted_map();
            let omega = omega_of(&q, b).unwrap();
            assert!(omega.is_cyclic());
            assert_eq!(map_of(&omega, b).unwrap(), q);
            assert!(is_b_quadratic(&q, b, Flavor::Tensor).unwrap());
        }
    }

    #[test]
    fn structure_equations() {
        let m = m2();
        let t = TaylorCoderivation::new(Flavor::Tensor, m.space(), vec![m.shifted_map()]).unwrap();
        assert!(check_structure_equation(&t).unwrap().holds);
        let g = gl2();
        let t = TaylorCoderivation::new(Flavor::Symmetric, g.space(), vec![g.shifted_map()]).unwrap();
        assert!(check_structure_equation(&t).unwrap().holds);
        // the associative product of M_2 is not symmetric
        assert!(TaylorCoderivation::new(Flavor::Symmetric, m.space(), vec![m.shifted_map()]).is_err());
        // degree-0 maps commute with themselves
        let v = GradedSpace::ungraded(2);
        let n = linear(&v, &[[1, 0], [0, 0]]);
        let t = TaylorCoderivation::new(Flavor::Tensor, &v, vec![n]).unwrap();
        assert!(check_structure_equation(&t).unwrap().holds);
    }

    #[test]
    fn components_merge() {
        let v = GradedSpace::ungraded(2);
        let a = linear(&v, &[[1, 0], [0, 0]]);
        let t = TaylorCoderivation::new(Flavor::Tensor, &v, vec![a.clone(), a.scale(&s(-1))]).unwrap();
        assert_eq!(t.max_arity(), 0);
        assert!(t.component(1).is_none());
        assert!(bracket_sym(&m2().shifted_map(), &gl2().shifted_map()).is_err());
    }
}
