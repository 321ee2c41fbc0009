//! Coboundary operators (Hochschild, Chevalley, Harrison, pre-Lie, Pinczon),
//! cochain bases, exact cohomology dimensions, coboundary solving and
//! order-one deformations.
//!
//! The primary coboundaries are coderivation brackets `[Q_W, C]` on the
//! semidirect product `W = V ⋉ M`, unshifted and restricted to `V` inputs
//! and `M` outputs; the classical formulas are kept alongside as an
//! independent definition.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bilinear::BilinearForm;
use crate::bisym::{bisym_bracket, BiSymForm};
use crate::cochain::Cochain;
use crate::coderiv::{bracket_sym, bracket_tensor, omega_of, prelie_bracket, shift_map, unshift_map, Flavor, MultiMap};
use crate::coefficient::{Coefficient, DualNumber};
use crate::error::{Error, Result};
use crate::forms::{pinczon_bracket, quotient_bracket, shuffles, MultiForm};
use crate::graded::{subsets, tuples, GradedSpace, Perm};
use crate::linalg::{self, ColumnSpace, Membership, SparseVec};
use crate::scalar::Scalar;
use crate::structures::{
    identity_witness, lift_cochain, semidirect_product, AlgebraKind, AlgebraStructure, Bimodule, DoubleProduct, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Hochschild,
    Chevalley,
    Harrison,
    Prelie,
    Pinczon,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Hochschild => "hochschild",
            Theory::Chevalley => "chevalley",
            Theory::Harrison => "harrison",
            Theory::Prelie => "prelie",
            Theory::Pinczon => "pinczon",
        }
    }

    /// The cochain theory governing deformations of an algebra kind.
    pub fn for_kind(kind: AlgebraKind) -> Theory {
        match kind {
            AlgebraKind::Associative => Theory::Hochschild,
            AlgebraKind::Commutative => Theory::Harrison,
            AlgebraKind::Lie => Theory::Chevalley,
            AlgebraKind::Prelie => Theory::Prelie,
        }
    }

    fn check_kind(self, kind: AlgebraKind) -> Result<()> {
        let ok = match self {
            Theory::Hochschild => matches!(kind, AlgebraKind::Associative | AlgebraKind::Commutative),
            Theory::Harrison => kind == AlgebraKind::Commutative,
            Theory::Chevalley => kind == AlgebraKind::Lie,
            Theory::Prelie => kind == AlgebraKind::Prelie,
            Theory::Pinczon => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "{} cohomology is not defined for {kind} algebras",
                self.name()
            )))
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hochschild" => Ok(Theory::Hochschild),
            "chevalley" => Ok(Theory::Chevalley),
            "harrison" => Ok(Theory::Harrison),
            "prelie" | "pre-lie" => Ok(Theory::Prelie),
            "pinczon" => Ok(Theory::Pinczon),
            other => Err(Error::Parse(format!("unknown theory `{other}`"))),
        }
    }
}

fn check_cochain(c: &Cochain, m: &Bimodule) -> Result<()> {
    if c.source() != m.base().space() || c.target() != m.space() {
        return Err(Error::Input("cochain does not match the algebra and module".into()));
    }
    Ok(())
}

/// Sign relating `[Q_W, C]` to the classical coboundary of a cochain with
/// `arity` inputs.
fn bracket_sign(theory: Theory, arity: usize) -> Scalar {
    Scalar::sign(theory == Theory::Prelie && arity % 2 == 1)
}

/// `unshift([Q_W, C[1]])` restricted to `V` inputs and `M` outputs.
fn bracket_on_semidirect(c: &Cochain, m: &Bimodule, theory: Theory) -> Result<Cochain> {
    let w = semidirect_product(m)?;
    let n = m.base().dim();
    let k = c.arity();
    let entries = c.entries().map(|(key, v)| (key[..k].to_vec(), n + key[k], v.clone()));
    let cw = shift_map(&MultiMap::from_entries(w.space(), k, entries)?);
    let q = w.shifted_map();
    let br = match theory {
        Theory::Hochschild | Theory::Harrison => bracket_tensor(&q, &cw)?,
        Theory::Chevalley => bracket_sym(&q, &cw)?,
        Theory::Prelie => prelie_bracket(&q, &cw)?,
        Theory::Pinczon => return Err(Error::Input("Pinczon coboundaries act on forms".into())),
    };
    let sign = bracket_sign(theory, k);
    let mut out = Cochain::zero(c.source(), c.target(), k + 1);
    for (key, v) in unshift_map(&br).entries() {
        if key[..=k].iter().all(|&i| i < n) && key[k + 1] >= n {
            let mut ck = key[..=k].to_vec();
            ck.push(key[k + 1] - n);
            out.add_to(ck, v * &sign);
        } else {
            return Err(Error::Input(format!("bracket leaves the cochain space at {key:?}")));
        }
    }
    Ok(out)
}

/// Hochschild coboundary for an associative (or commutative) algebra.
pub fn d_hochschild(c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    Theory::Hochschild.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    bracket_on_semidirect(c, m, Theory::Hochschild)
}

/// Chevalley–Eilenberg coboundary of an alternating cochain.
pub fn d_chevalley(c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    Theory::Chevalley.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    if !c.is_alternating() {
        return Err(Error::NotSymmetric("Chevalley cochains are alternating".into()));
    }
    bracket_on_semidirect(c, m, Theory::Chevalley)
}

/// Harrison coboundary: the Hochschild coboundary of a cochain vanishing on
/// shuffles, whose output again vanishes on shuffles.
pub fn d_harrison(c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    Theory::Harrison.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    if !c.is_harrison() {
        return Err(Error::NotVsp("Harrison cochains vanish on shuffles".into()));
    }
    let out = bracket_on_semidirect(c, m, Theory::Harrison)?;
    if !out.is_harrison() {
        return Err(Error::NotVsp("coboundary left the Harrison complex".into()));
    }
    Ok(out)
}

/// Pre-Lie coboundary of `c: Λ^k V ⊗ V → M` by the explicit four-sum formula.
pub fn d_prelie(c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    Theory::Prelie.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    check_prelie_shape(c)?;
    Ok(classical_prelie(c, m))
}

/// Pre-Lie coboundary as `[Q_W, C]` on `S(W[1]) ⊗ W[1]`.
pub fn d_prelie_bracket(c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    Theory::Prelie.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    check_prelie_shape(c)?;
    bracket_on_semidirect(c, m, Theory::Prelie)
}

fn check_prelie_shape(c: &Cochain) -> Result<()> {
    if c.arity() == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    let k = c.arity() - 1;
    let skew = (0..k.saturating_sub(1)).all(|i| {
        let t = Perm::transposition(c.arity(), i, i + 1);
        c.act_perm_signed(&t) == *c
    });
    if skew {
        Ok(())
    } else {
        Err(Error::NotSymmetric(
            "pre-Lie cochains are alternating in their first slots".into(),
        ))
    }
}

/// The coboundary of a theory, via its primary definition.
pub fn coboundary(theory: Theory, c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    match theory {
        Theory::Hochschild => d_hochschild(c, m),
        Theory::Chevalley => d_chevalley(c, m),
        Theory::Harrison => d_harrison(c, m),
        Theory::Prelie => d_prelie(c, m),
        Theory::Pinczon => Err(Error::Input("Pinczon coboundaries act on forms".into())),
    }
}

/// The independent definition: classical formulas for Hochschild, Harrison
/// and Chevalley, the coderivation bracket for pre-Lie.
pub fn coboundary_alternative(theory: Theory, c: &Cochain, m: &Bimodule) -> Result<Cochain> {
    theory.check_kind(m.base().kind())?;
    check_cochain(c, m)?;
    match theory {
        Theory::Hochschild | Theory::Harrison => Ok(classical_hochschild(c, m)),
        Theory::Chevalley => Ok(classical_chevalley(c, m)),
        Theory::Prelie => d_prelie_bracket(c, m),
        Theory::Pinczon => Err(Error::Input("Pinczon coboundaries act on forms".into())),
    }
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

fn add_scaled(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Evaluates `c` with basis arguments, except a vector in slot `slot`.
fn eval_with(c: &Cochain, args: &[usize], slot: usize, vector: &[Scalar]) -> Vec<Scalar> {
    let mut acc = vec![Scalar::zero(); c.target().dim()];
    let mut a = args.to_vec();
    for (l, x) in vector.iter().enumerate() {
        if !x.is_zero() {
            a[slot] = l;
            add_scaled(&mut acc, x, &c.value(&a));
        }
    }
    acc
}

fn cochain_from_values(c: &Cochain, arity: usize, values: impl Iterator<Item = (Vec<usize>, Vec<Scalar>)>) -> Cochain {
    let mut out = Cochain::zero(c.source(), c.target(), arity);
    for (t, v) in values {
        for (o, x) in v.into_iter().enumerate() {
            let mut key = t.clone();
            key.push(o);
            out.add_to(key, x);
        }
    }
    out
}

/// `(dc)(x_1..x_{k+1}) = x_1·c(x_2..) + Σ_i (-1)^i c(.., x_i x_{i+1}, ..)
/// + (-1)^{k+1} c(x_1..x_k)*x_{k+1}`.
pub fn classical_hochschild(c: &Cochain, m: &Bimodule) -> Cochain {
    let a = m.base();
    let (n, dm) = (a.dim(), m.dim());
    let k = c.arity();
    let values = tuples(n, k + 1).map(|x| {
        let mut acc = vec![Scalar::zero(); dm];
        let first = c.value(&x[1..]);
        add_scaled(&mut acc, &Scalar::one(), &m.act_left(&unit(n, x[0]), &first));
        for i in 0..k {
            let mut args: Vec<usize> = x[..i].to_vec();
            args.push(0);
            args.extend_from_slice(&x[i + 2..]);
            let v = eval_with(c, &args, i, a.product(x[i], x[i + 1]));
            add_scaled(&mut acc, &Scalar::sign(i % 2 == 0), &v);
        }
        let last = c.value(&x[..k]);
        add_scaled(
            &mut acc,
            &Scalar::sign(k.is_multiple_of(2)),
            &m.act_right(&last, &unit(n, x[k])),
        );
        (x, acc)
    });
    cochain_from_values(c, k + 1, values)
}

fn without(x: &[usize], skip: &[usize]) -> Vec<usize> {
    x.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &v)| v)
        .collect()
}

/// `(dc)(x_0..x_k) = Σ_i (-1)^i x_i·c(.. x̂_i ..)
/// + Σ_{i<j} (-1)^{i+j} c([x_i,x_j], .. x̂_i .. x̂_j ..)`.
pub fn classical_chevalley(c: &Cochain, m: &Bimodule) -> Cochain {
    let a = m.base();
    let (n, dm) = (a.dim(), m.dim());
    let k = c.arity();
    let values = tuples(n, k + 1).map(|x| {
        let mut acc = vec![Scalar::zero(); dm];
        for i in 0..=k {
            let v = m.act_left(&unit(n, x[i]), &c.value(&without(&x, &[i])));
            add_scaled(&mut acc, &Scalar::sign(i % 2 == 1), &v);
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let mut args = vec![0];
                args.extend(without(&x, &[i, j]));
                let v = eval_with(c, &args, 0, a.product(x[i], x[j]));
                add_scaled(&mut acc, &Scalar::sign((i + j) % 2 == 1), &v);
            }
        }
        (x, acc)
    });
    cochain_from_values(c, k + 1, values)
}

/// The four-sum formula for `c: Λ^k V ⊗ V → M` with `|c| = 1 - k`:
/// `(-1)^{|c|} dc(x_0∧..∧x_k ⊗ y) = Σ_i (-1)^i c(..x̂_i.. ⊗ x_i)*y
/// - Σ_i (-1)^i c(..x̂_i.. ⊗ q(x_i,y)) + Σ_{i<j} (-1)^{i+j} c([x_i,x_j]∧..x̂_i..x̂_j.. ⊗ y)
/// + Σ_i (-1)^i x_i·c(..x̂_i.. ⊗ y)`.
pub fn classical_prelie(c: &Cochain, m: &Bimodule) -> Cochain {
    let a = m.base();
    let (n, dm) = (a.dim(), m.dim());
    let k = c.arity() - 1;
    let overall = Scalar::sign(k.is_multiple_of(2));
    let values = tuples(n, k + 2).map(|t| {
        let (x, y) = (&t[..=k], t[k + 1]);
        let mut acc = vec![Scalar::zero(); dm];
        for i in 0..=k {
            let sign = Scalar::sign(i % 2 == 1);
            let mut args = without(x, &[i]);
            args.push(x[i]);
            let v = m.act_right(&c.value(&args), &unit(n, y));
            add_scaled(&mut acc, &sign, &v);
            let last = args.len() - 1;
            let v = eval_with(c, &args, last, a.product(x[i], y));
            add_scaled(&mut acc, &-&sign, &v);
            args[last] = y;
            let v = m.act_left(&unit(n, x[i]), &c.value(&args));
            add_scaled(&mut acc, &sign, &v);
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let mut args = vec![0];
                args.extend(without(x, &[i, j]));
                args.push(y);
                let mut bracket = a.product(x[i], x[j]).to_vec();
                add_scaled(&mut bracket, &-Scalar::one(), a.product(x[j], x[i]));
                let v = eval_with(c, &args, 0, &bracket);
                add_scaled(&mut acc, &Scalar::sign((i + j) % 2 == 1), &v);
            }
        }
        for v in acc.iter_mut() {
            *v *= &overall;
        }
        (t, acc)
    });
    cochain_from_values(c, k + 2, values)
}

/// `d_P Λ = {Ω, Λ}` on cyclic forms.
pub fn d_pinczon(lambda: &MultiForm, omega: &MultiForm, b: &BilinearForm) -> Result<MultiForm> {
    pinczon_bracket(omega, lambda, b)
}

/// `d_P Φ = {Ω, Φ}` on bi-symmetric forms.
pub fn d_pinczon_bisym(lambda: &BiSymForm, omega: &BiSymForm, b: &BilinearForm) -> Result<BiSymForm> {
    bisym_bracket(omega, lambda, b)
}

/// An ordered basis of cochains of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainBasis {
    pub theory: Theory,
    pub degree: usize,
    pub cochains: Vec<Cochain>,
}

impl CochainBasis {
    pub fn len(&self) -> usize {
        self.cochains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cochains.is_empty()
    }
}

/// `Σ_σ sgn(σ) (x_σ → out)` over the permutations of the first `len` slots.
fn alternating_cochain(
    source: &GradedSpace,
    target: &GradedSpace,
    inputs: &[usize],
    tail: &[usize],
    out: usize,
) -> Cochain {
    let len = inputs.len();
    let mut c = Cochain::zero(source, target, len + tail.len());
    for sigma in Perm::all(len) {
        let mut key: Vec<usize> = (0..len).map(|j| inputs[sigma.apply(j)]).collect();
        key.extend_from_slice(tail);
        key.push(out);
        c.add_to(key, Scalar::sign(sigma.is_odd()));
    }
    c
}

/// Deterministic basis of the degree-`k` cochains of a theory: all keys
/// (Hochschild), alternating sums over increasing tuples (Chevalley, and the
/// wedge part of pre-Lie cochains, whose degree counts all inputs), the
/// kernel of the signed shuffle sums (Harrison).
pub fn cochain_basis(theory: Theory, k: usize, m: &Bimodule) -> Result<CochainBasis> {
    theory.check_kind(m.base().kind())?;
    let (source, target) = (m.base().space(), m.space());
    let (n, dm) = (source.dim(), target.dim());
    let cochains = match theory {
        Theory::Hochschild => tuples(n, k)
            .flat_map(|t| (0..dm).map(move |o| (t.clone(), o)))
            .map(|(t, o)| Cochain::from_entries(source, target, k, [(t, o, Scalar::one())]).expect("in range"))
            .collect(),
        Theory::Chevalley => subsets(n, k)
            .into_iter()
            .flat_map(|s| (0..dm).map(move |o| (s.clone(), o)))
            .map(|(s, o)| alternating_cochain(source, target, &s, &[], o))
            .collect(),
        Theory::Prelie => {
            if k == 0 {
                Vec::new()
            } else {
                let mut out = Vec::new();
                for s in subsets(n, k - 1) {
                    for y in 0..n {
                        for o in 0..dm {
                            out.push(alternating_cochain(source, target, &s, &[y], o));
                        }
                    }
                }
                out
            }
        }
        Theory::Harrison => harrison_input_basis(n, k)
            .into_iter()
            .flat_map(|v| (0..dm).map(move |o| (v.clone(), o)))
            .map(|(v, o)| {
                let keys: Vec<Vec<usize>> = tuples(n, k).collect();
                let entries = v.into_iter().enumerate().map(|(idx, x)| (keys[idx].clone(), o, x));
                Cochain::from_entries(source, target, k, entries).expect("in range")
            })
            .collect(),
        Theory::Pinczon => unreachable!("rejected by check_kind"),
    };
    Ok(CochainBasis {
        theory,
        degree: k,
        cochains,
    })
}

/// Kernel of all signed shuffle sums on `k`-tuples of `n` letters, as
/// coefficient vectors over the tuples in lexicographic order.
fn harrison_input_basis(n: usize, k: usize) -> Vec<Vec<Scalar>> {
    let keys: Vec<Vec<usize>> = tuples(n, k).collect();
    let index: BTreeMap<Vec<usize>, usize> = keys.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rows = Vec::new();
    for p in 1..k {
        let sh = shuffles(p, k - p);
        for x in &keys {
            let mut row = vec![Scalar::zero(); keys.len()];
            for s in &sh {
                let inv = s.inverse();
                let key: Vec<usize> = (0..k).map(|l| x[inv.apply(l)]).collect();
                row[index[&key]] += Scalar::sign(s.is_odd());
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..keys.len())
            .map(|i| {
                let mut v = vec![Scalar::zero(); keys.len()];
                v[i] = Scalar::one();
                v
            })
            .collect();
    }
    linalg::nullspace(&rows, keys.len())
}

/// Dimensions in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub degrees: Vec<DegreeDims>,
    /// `d ∘ d = 0` on the images of every basis cochain that was computed.
    pub d_squared_zero: bool,
}

impl CohomologyReport {
    pub fn dims(&self, degree: usize) -> Option<&DegreeDims> {
        self.degrees.iter().find(|d| d.degree == degree)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cohomology).collect()
    }
}

/// Images of a basis under a coboundary, in ambient coordinates.
struct Differential {
    basis: Vec<Cochain>,
    images: Vec<Cochain>,
}

impl Differential {
    fn columns(&self) -> Vec<SparseVec> {
        self.images.iter().map(Cochain::to_sparse).collect()
    }

    fn rank(&self) -> usize {
        linalg::sparse_rank(&self.columns())
    }
}

fn differential(theory: Theory, k: usize, m: &Bimodule) -> Result<Differential> {
    let basis = cochain_basis(theory, k, m)?.cochains;
    let images = basis
        .iter()
        .map(|c| coboundary(theory, c, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(Differential { basis, images })
}

/// Exact dimensions of cochains, cocycles, coboundaries and cohomology.
pub fn cohomology_dims(theory: Theory, m: &Bimodule, degrees: RangeInclusive<usize>) -> Result<CohomologyReport> {
    theory.check_kind(m.base().kind())?;
    let (lo, hi) = (*degrees.start(), *degrees.end());
    let mut diffs: BTreeMap<usize, Differential> = BTreeMap::new();
    for k in lo.saturating_sub(1)..=hi {
        diffs.insert(k, differential(theory, k, m)?);
    }
    let mut d_squared_zero = true;
    for (k, d) in &diffs {
        if *k < hi {
            for img in &d.images {
                if !coboundary(theory, img, m)?.is_zero() {
                    d_squared_zero = false;
                }
            }
        }
    }
    let mut rows = Vec::new();
    for k in degrees {
        let d = &diffs[&k];
        let dim = d.basis.len();
        let cocycles = dim - d.rank();
        let coboundaries = if k == 0 || lo > k { 0 } else { diffs[&(k - 1)].rank() };
        if coboundaries > cocycles {
            return Err(Error::Input(format!("B^{k} exceeds Z^{k}: d is not a differential")));
        }
        rows.push(DegreeDims {
            degree: k,
            cochains: dim,
            cocycles,
            coboundaries,
            cohomology: cocycles - coboundaries,
        });
    }
    Ok(CohomologyReport {
        theory,
        degrees: rows,
        d_squared_zero,
    })
}

fn form_index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc * n + i)
}

fn form_to_sparse(f: &MultiForm) -> SparseVec {
    let n = f.space().dim();
    let mut v: SparseVec = f.entries().map(|(t, x)| (form_index(n, t), x.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Basis of symmetric `arity`-forms: the symmetrized indicator of each
/// non-decreasing tuple, skipping those the Koszul signs kill.
pub fn symmetric_form_basis(space: &GradedSpace, arity: usize) -> Vec<MultiForm> {
    tuples(space.dim(), arity)
        .filter(|t| t.windows(2).all(|w| w[0] <= w[1]))
        .map(|t| MultiForm::indicator(space, &t).symmetrize())
        .filter(|f| !f.is_zero())
        .collect()
}

/// `d_P Λ = {Ω, Λ}` in the given flavor: the Pinczon bracket on cyclic
/// forms, or the quotient bracket on symmetric forms.
pub fn d_pinczon_flavored(
    lambda: &MultiForm,
    omega: &MultiForm,
    b: &BilinearForm,
    flavor: Flavor,
) -> Result<MultiForm> {
    match flavor {
        Flavor::Tensor => pinczon_bracket(omega, lambda, b),
        Flavor::Symmetric => quotient_bracket(omega, lambda, b),
        other => Err(Error::Unsupported(format!(
            "Pinczon cohomology in the {other:?} flavor"
        ))),
    }
}

/// Pinczon cohomology graded by form arity: cyclic forms with the Pinczon
/// bracket (`Flavor::Tensor`) or symmetric forms with the quotient bracket
/// (`Flavor::Symmetric`, for Lie structures).
pub fn pinczon_cohomology_dims(
    omega: &MultiForm,
    b: &BilinearForm,
    flavor: Flavor,
    arities: RangeInclusive<usize>,
) -> Result<CohomologyReport> {
    if !d_pinczon_flavored(omega, omega, b, flavor)?.is_zero() {
        return Err(Error::Input("the structure form does not satisfy {Ω, Ω} = 0".into()));
    }
    let step = omega.arity().checked_sub(2).ok_or(Error::ArityMismatch {
        expected: 2,
        got: omega.arity(),
    })?;
    let (lo, hi) = (*arities.start(), *arities.end());
    let space = omega.space();
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
    let mut d_squared_zero = true;
    let mut needed: Vec<usize> = (lo..=hi).collect();
    if step > 0 {
        needed.extend((lo..=hi).filter_map(|a| a.checked_sub(step)));
    }
    needed.sort_unstable();
    needed.dedup();
    for a in needed {
        let basis = match flavor {
            Flavor::Symmetric => symmetric_form_basis(space, a),
            _ => crate::forms::cyclic_form_basis(space, a),
        };
        let images = basis
            .iter()
            .map(|l| d_pinczon_flavored(l, omega, b, flavor))
            .collect::<Result<Vec<_>>>()?;
        for img in &images {
            if !d_pinczon_flavored(img, omega, b, flavor)?.is_zero() {
                d_squared_zero = false;
            }
        }
        let cols: Vec<SparseVec> = images.iter().map(form_to_sparse).collect();
        ranks.insert(a, linalg::sparse_rank(&cols));
        dims.insert(a, basis.len());
    }
    let mut rows = Vec::new();
    for a in lo..=hi {
        let cocycles = dims[&a] - ranks[&a];
        let coboundaries = a.checked_sub(step).filter(|_| step > 0).map_or(0, |p| ranks[&p]);
        if coboundaries > cocycles {
            return Err(Error::Input(format!("B^{a} exceeds Z^{a}: d is not a differential")));
        }
        rows.push(DegreeDims {
            degree: a,
            cochains: dims[&a],
            cocycles,
            coboundaries,
            cohomology: cocycles - coboundaries,
        });
    }
    Ok(CohomologyReport {
        theory: Theory::Pinczon,
        degrees: rows,
        d_squared_zero,
    })
}

/// Outcome of [`solve_coboundary`].
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    /// A cochain `x` with `dx = c`.
    Found(Cochain),
    /// An exact functional on the cochain space vanishing on every
    /// coboundary, with its nonzero value on `c`.
    Obstructed {
        functional: Vec<(Vec<usize>, Scalar)>,
        value: Scalar,
    },
}

impl Primitive {
    pub fn is_found(&self) -> bool {
        matches!(self, Primitive::Found(_))
    }
}

/// First nonzero coefficient of `dc`, as `(inputs, output, value)`.
pub fn cocycle_defect(theory: Theory, c: &Cochain, m: &Bimodule) -> Result<Option<(Vec<usize>, usize, Scalar)>> {
    let d = coboundary(theory, c, m)?;
    let first = d.entries().next().map(|(key, v)| {
        let k = key.len() - 1;
        (key[..k].to_vec(), key[k], v.clone())
    });
    Ok(first)
}

/// Solves `dx = c` exactly for a cocycle `c`.
pub fn solve_coboundary(theory: Theory, c: &Cochain, m: &Bimodule) -> Result<Primitive> {
    if let Some((inputs, out, v)) = cocycle_defect(theory, c, m)? {
        return Err(Error::NotCocycle(format!(
            "dc{inputs:?} has coefficient {v} on basis vector {out}"
        )));
    }
    let k = c.arity();
    if k == 0 || (theory == Theory::Prelie && k == 1) {
        return obstructed_by_empty(c);
    }
    let d = differential(theory, k - 1, m)?;
    let space = ColumnSpace::from_columns(&d.columns());
    match space.solve(&c.to_sparse()) {
        Membership::Solution(x) => {
            let mut primitive = Cochain::zero(c.source(), c.target(), k - 1);
            for (j, coef) in x {
                primitive = primitive.add(&d.basis[j].scale(&coef))?;
            }
            Ok(Primitive::Found(primitive))
        }
        Membership::Certificate { functional, value } => Ok(Primitive::Obstructed {
            functional: functional.into_iter().map(|(i, x)| (c.unravel(i), x)).collect(),
            value,
        }),
    }
}

fn obstructed_by_empty(c: &Cochain) -> Result<Primitive> {
    match c.entries().next() {
        None => Ok(Primitive::Found(Cochain::zero(
            c.source(),
            c.target(),
            c.arity().saturating_sub(1),
        ))),
        Some((key, v)) => Ok(Primitive::Obstructed {
            functional: vec![(key.clone(), Scalar::one())],
            value: v.clone(),
        }),
    }
}

/// Evaluates a sparse functional on a cochain.
pub fn apply_functional(functional: &[(Vec<usize>, Scalar)], c: &Cochain) -> Scalar {
    functional
        .iter()
        .map(|(key, x)| {
            let k = key.len() - 1;
            x * &c.get(&key[..k], key[k])
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeformationKind {
    NotOrderOne,
    Trivial,
    TrueDeformation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeformationVerdict {
    pub verdict: DeformationKind,
    /// Failing identity of `q + t c` over the dual numbers.
    pub witness: Option<Witness>,
    pub primitive: Option<Primitive>,
}

/// Checks `q + t c` over `K[t]/(t²)` and, when it is a structure, whether
/// `c` is a coboundary of the adjoint complex.
pub fn deformation_check(a: &AlgebraStructure, c: &Cochain) -> Result<DeformationVerdict> {
    if c.arity() != 2 || c.source() != a.space() || c.target() != a.space() {
        return Err(Error::Input("a deformation cochain is a bilinear map V × V → V".into()));
    }
    let n = a.dim();
    let mut t = vec![vec![vec![DualNumber::zero(); n]; n]; n];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for (k, v) in cell.iter_mut().enumerate() {
                *v = DualNumber::new(a.product(i, j)[k].clone(), c.get(&[i, j], k));
            }
        }
    }
    if let Some(w) = identity_witness(a.space(), a.kind(), &t) {
        return Ok(DeformationVerdict {
            verdict: DeformationKind::NotOrderOne,
            witness: Some(w),
            primitive: None,
        });
    }
    let m = Bimodule::adjoint(a)?;
    let solved = solve_coboundary(Theory::for_kind(a.kind()), c, &m)?;
    Ok(DeformationVerdict {
        verdict: if solved.is_found() {
            DeformationKind::Trivial
        } else {
            DeformationKind::TrueDeformation
        },
        witness: None,
        primitive: Some(solved),
    })
}

/// How one form compares with another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proportionality {
    BothZero,
    Factor(Scalar),
    NotProportional,
}

/// Finds `λ` with `lhs = λ · rhs`.
pub fn proportionality(lhs: &MultiForm, rhs: &MultiForm) -> Proportionality {
    let Some((t, v)) = rhs.entries().next() else {
        return if lhs.is_zero() {
            Proportionality::BothZero
        } else {
            Proportionality::NotProportional
        };
    };
    let factor = lhs.get(t) / v.clone();
    if rhs.scale(&factor) == *lhs {
        Proportionality::Factor(factor)
    } else {
        Proportionality::NotProportional
    }
}

/// The two sides of the complex-morphism identity for the lift into a
/// double: `{Ω_Q̃, Ω_C̃}` (the quotient bracket for Lie doubles) and
/// `Ω` of the lift of the coboundary of `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftComparison {
    pub pinczon_side: MultiForm,
    pub lifted_coboundary: MultiForm,
    pub relation: Proportionality,
}

pub fn compare_lift(c: &Cochain, m: &Bimodule, double: &DoubleProduct) -> Result<LiftComparison> {
    let kind = double.algebra().kind();
    let theory = Theory::for_kind(kind);
    let b = double.form();
    let q = omega_of(&double.algebra().shifted_map(), b)?;
    let lifted = omega_of(&lift_cochain(c, double)?, b)?;
    let pinczon_side = match kind {
        AlgebraKind::Lie => quotient_bracket(&q, &lifted, b)?,
        _ => pinczon_bracket(&q, &lifted, b)?,
    };
    let theory = if theory == Theory::Harrison {
        Theory::Hochschild
    } else {
        theory
    };
    let dc = coboundary_alternative(theory, c, m)?;
    let lifted_coboundary = omega_of(&lift_cochain(&dc, double)?, b)?;
    let relation = proportionality(&pinczon_side, &lifted_coboundary);
    Ok(LiftComparison {
        pinczon_side,
        lifted_coboundary,
        relation,
    })
}

/// The factor relating the quotient bracket to the lifted Chevalley
/// coboundary for a `k`-cochain, `2 (k+2)! / (k+1)`; with the structure
/// and lifted forms divided by `2!` and `k!` it becomes `k + 2`.
pub fn lie_lift_factor(k: usize) -> Scalar {
    Scalar::from_int(2) * Scalar::factorial(k + 2) / Scalar::from_int(k as i64 + 1)
}
