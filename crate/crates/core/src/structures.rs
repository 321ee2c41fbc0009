//! Algebras given by structure constants, their identities and invariant
//! forms, bimodules, semidirect and double semidirect products, and the lift
//! of cochains to the double.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bilinear::BilinearForm;
use crate::cochain::Cochain;
use crate::coderiv::{
    check_structure_equation, is_b_quadratic, map_of_any, omega_of, shift_map, Flavor, MultiMap, TaylorCoderivation,
};
use crate::coefficient::Coefficient;
use crate::error::{Error, Result};
use crate::graded::{odd, GradedSpace};
use crate::linalg;
use crate::scalar::Scalar;

/// Dense structure constants: `table[i][j][k]` is the coefficient of `e_k`
/// in the product of `e_i` and `e_j`.
pub type Table<C> = Vec<Vec<Vec<C>>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Associative,
    Commutative,
    Lie,
    Prelie,
}

impl AlgebraKind {
    /// Coalgebra carrying the shifted product as a coderivation.
    pub fn flavor(self) -> Flavor {
        match self {
            AlgebraKind::Associative => Flavor::Tensor,
            AlgebraKind::Commutative => Flavor::Vsp,
            AlgebraKind::Lie => Flavor::Symmetric,
            AlgebraKind::Prelie => Flavor::Prelie,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Commutative => "commutative",
            AlgebraKind::Lie => "lie",
            AlgebraKind::Prelie => "prelie",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "associative" => Ok(AlgebraKind::Associative),
            "commutative" => Ok(AlgebraKind::Commutative),
            "lie" => Ok(AlgebraKind::Lie),
            "prelie" | "pre-lie" => Ok(AlgebraKind::Prelie),
            other => Err(Error::Parse(format!("unknown algebra kind `{other}`"))),
        }
    }
}

/// The identity or axiom a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Homogeneity,
    Commutativity,
    Antisymmetry,
    Associativity,
    Jacobi,
    PreLie,
    Invariance,
    LeftModule,
    RightModule,
    Bimodule,
    SymmetricBimodule,
}

/// Basis arguments on which a law fails, with the nonzero coordinates of
/// the defect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub law: Law,
    pub args: Vec<usize>,
    pub value: Vec<(usize, String)>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at {:?}:", self.law, self.args)?;
        for (i, v) in &self.value {
            write!(f, " [{i}] {v}")?;
        }
        Ok(())
    }
}

fn witness<C: Coefficient>(law: Law, args: &[usize], defect: &[C]) -> Option<Witness> {
    let value: Vec<(usize, String)> = defect
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.to_string()))
        .collect();
    (!value.is_empty()).then(|| Witness {
        law,
        args: args.to_vec(),
        value,
    })
}

fn zeros<C: Coefficient>(n: usize) -> Vec<C> {
    vec![C::zero(); n]
}

fn axpy<C: Coefficient>(acc: &mut [C], s: &C, v: &[C]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.add(&s.mul(x));
        }
    }
}

fn combine<C: Coefficient>(a: &[C], b: &[C], negate_b: bool) -> Vec<C> {
    a.iter().zip(b).map(|(x, y)| x.add(&y.signed(negate_b))).collect()
}

/// `q(x, e_j)` for a vector `x`.
fn mul_vec_basis<C: Coefficient>(t: &Table<C>, x: &[C], j: usize, out_dim: usize) -> Vec<C> {
    let mut acc = zeros(out_dim);
    for (l, xl) in x.iter().enumerate() {
        axpy(&mut acc, xl, &t[l][j]);
    }
    acc
}

/// `q(e_i, y)` for a vector `y`.
fn mul_basis_vec<C: Coefficient>(t: &Table<C>, i: usize, y: &[C], out_dim: usize) -> Vec<C> {
    let mut acc = zeros(out_dim);
    for (l, yl) in y.iter().enumerate() {
        axpy(&mut acc, yl, &t[i][l]);
    }
    acc
}

/// First violation of the kind's defining identity on basis elements, for
/// structure constants over any coefficient ring. Signs are Koszul signs in
/// the degrees of `space`.
pub fn identity_witness<C: Coefficient>(space: &GradedSpace, kind: AlgebraKind, t: &Table<C>) -> Option<Witness> {
    let n = space.dim();
    let eps = |i: usize, j: usize| odd(space.degree(i)) && odd(space.degree(j));
    for i in 0..n {
        for j in 0..n {
            for (k, c) in t[i][j].iter().enumerate() {
                if !c.is_zero() && space.degree(k) != space.degree(i) + space.degree(j) {
                    let mut d = zeros::<C>(n);
                    d[k] = c.clone();
                    return witness(Law::Homogeneity, &[i, j], &d);
                }
            }
        }
    }
    match kind {
        AlgebraKind::Commutative | AlgebraKind::Lie => {
            let (law, flip) = match kind {
                AlgebraKind::Commutative => (Law::Commutativity, true),
                _ => (Law::Antisymmetry, false),
            };
            for i in 0..n {
                for j in i..n {
                    // commutative: q(x,y) - ε q(y,x); Lie: q(x,y) + ε q(y,x)
                    let d = combine(&t[i][j], &t[j][i], flip ^ eps(i, j));
                    if let Some(w) = witness(law, &[i, j], &d) {
                        return Some(w);
                    }
                }
            }
        }
        _ => {}
    }
    let assoc = |i: usize, j: usize, k: usize| -> Vec<C> {
        let left = mul_vec_basis(t, &t[i][j], k, n);
        let right = mul_basis_vec(t, i, &t[j][k], n);
        combine(&left, &right, true)
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (law, d) = match kind {
                    AlgebraKind::Associative | AlgebraKind::Commutative => (Law::Associativity, assoc(i, j, k)),
                    AlgebraKind::Lie => {
                        // [x,[y,z]] - [[x,y],z] - ε(x,y) [y,[x,z]]
                        let a = mul_basis_vec(t, i, &t[j][k], n);
                        let b = mul_vec_basis(t, &t[i][j], k, n);
                        let c = mul_basis_vec(t, j, &t[i][k], n);
                        (Law::Jacobi, combine(&combine(&a, &b, true), &c, !eps(i, j)))
                    }
                    AlgebraKind::Prelie => (Law::PreLie, combine(&assoc(i, j, k), &assoc(j, i, k), !eps(i, j))),
                };
                if let Some(w) = witness(law, &[i, j, k], &d) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// An algebra `(V, q)` of a given kind, with an optional bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraStructure {
    space: GradedSpace,
    kind: AlgebraKind,
    table: Table<Scalar>,
    form: Option<BilinearForm>,
}

impl AlgebraStructure {
    /// Builds the structure and verifies homogeneity, the kind's symmetry and
    /// its identity.
    pub fn new(space: GradedSpace, kind: AlgebraKind, table: Table<Scalar>) -> Result<Self> {
        let a = AlgebraStructure::new_unchecked(space, kind, table)?;
        if let Some(w) = identity_witness(&a.space, a.kind, &a.table) {
            return Err(Error::InvalidStructure(w.to_string()));
        }
        Ok(a)
    }

    /// Checks only the shape of the table.
    pub fn new_unchecked(space: GradedSpace, kind: AlgebraKind, table: Table<Scalar>) -> Result<Self> {
        let n = space.dim();
        let bad = table.len() != n
            || table
                .iter()
                .any(|row| row.len() != n || row.iter().any(|v| v.len() != n));
        if bad {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: table.len(),
            });
        }
        Ok(AlgebraStructure {
            space,
            kind,
            table,
            form: None,
        })
    }

    /// Builds from sparse `(i, j, k, c_ij^k)` entries, repeated entries adding up.
    pub fn from_entries<I>(space: GradedSpace, kind: AlgebraKind, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        AlgebraStructure::new(space.clone(), kind, table_from_entries(&space, entries)?)
    }

    pub fn zero(space: GradedSpace, kind: AlgebraKind) -> Self {
        let n = space.dim();
        AlgebraStructure {
            space,
            kind,
            table: vec![vec![vec![Scalar::zero(); n]; n]; n],
            form: None,
        }
    }

    /// Attaches a form on the same space (not checked for invariance).
    pub fn with_form(mut self, b: BilinearForm) -> Result<Self> {
        if b.space() != &self.space {
            return Err(Error::Input("form lives on a different space".into()));
        }
        self.form = Some(b);
        Ok(self)
    }

    /// The same constants read as another kind, re-verified.
    pub fn as_kind(&self, kind: AlgebraKind) -> Result<Self> {
        let mut a = AlgebraStructure::new(self.space.clone(), kind, self.table.clone())?;
        a.form = self.form.clone();
        Ok(a)
    }

    /// `[x, y] = q(x, y) - (-1)^{|x||y|} q(y, x)` as a Lie algebra.
    pub fn commutator(&self) -> Result<Self> {
        let n = self.dim();
        let mut t = self.table.clone();
        for i in 0..n {
            for j in 0..n {
                let twist = odd(self.space.degree(i)) && odd(self.space.degree(j));
                for k in 0..n {
                    t[i][j][k] = &self.table[i][j][k] - self.table[j][i][k].clone().signed(twist);
                }
            }
        }
        AlgebraStructure::new(self.space.clone(), AlgebraKind::Lie, t)
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn table(&self) -> &Table<Scalar> {
        &self.table
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }

    /// Coordinates of `q(e_i, e_j)`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut acc = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut acc, &(xi * yj), &self.table[i][j]);
                }
            }
        }
        acc
    }

    /// Nonzero constants as `(i, j, k, c_ij^k)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.table[i][j][k].is_zero() {
                        out.push((i, j, k, self.table[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }

    /// The product as an unshifted bilinear map.
    pub fn as_map(&self) -> MultiMap {
        let entries = self.entries().into_iter().map(|(i, j, k, c)| (vec![i, j], k, c));
        MultiMap::from_entries(&self.space, 2, entries).expect("indices in range")
    }

    /// `Q = q[1]`, the degree-1 Taylor coefficient on `V[1]`.
    pub fn shifted_map(&self) -> MultiMap {
        shift_map(&self.as_map())
    }
}

fn table_from_entries<I>(space: &GradedSpace, entries: I) -> Result<Table<Scalar>>
where
    I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
{
    let n = space.dim();
    let mut t = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, j, k, c) in entries {
        for idx in [i, j, k] {
            space.check_index(idx)?;
        }
        t[i][j][k] += c;
    }
    Ok(t)
}

/// Verdicts of [`verify_identity`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub kind: AlgebraKind,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// `[Q, Q] = 0` for the shifted product in the kind's coalgebra.
    pub structure_equation: bool,
}

impl IdentityReport {
    pub fn agrees(&self) -> bool {
        self.holds == self.structure_equation
    }
}

/// `[Q, Q] = 0` for the shifted product, with the kind's symmetry required.
pub fn structure_equation_holds(a: &AlgebraStructure) -> Result<bool> {
    let q = a.shifted_map();
    let flavor = match a.kind {
        AlgebraKind::Commutative => {
            if !q.is_vsp() {
                return Ok(false);
            }
            Flavor::Tensor
        }
        AlgebraKind::Lie => {
            if !q.is_symmetric() {
                return Ok(false);
            }
            Flavor::Symmetric
        }
        k => k.flavor(),
    };
    let t = TaylorCoderivation::new(flavor, &a.space, vec![q])?;
    Ok(check_structure_equation(&t)?.holds)
}

/// Direct check of the kind's identity on all basis triples, cross-checked
/// against the structure equation of the shifted product.
pub fn verify_identity(a: &AlgebraStructure) -> Result<IdentityReport> {
    let witness = identity_witness(&a.space, a.kind, &a.table);
    Ok(IdentityReport {
        kind: a.kind,
        holds: witness.is_none(),
        witness,
        structure_equation: structure_equation_holds(a)?,
    })
}

/// Verdicts of [`verify_invariance`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// The shifted product is B-quadratic in the kind's flavor.
    pub b_quadratic: bool,
}

impl InvarianceReport {
    pub fn agrees(&self) -> bool {
        self.holds == self.b_quadratic
    }
}

/// Scalar defect of the invariance law on `(e_i, e_j, e_k)`.
fn invariance_defect(
    kind: AlgebraKind,
    space: &GradedSpace,
    t: &Table<Scalar>,
    g: &[Vec<Scalar>],
    i: usize,
    j: usize,
    k: usize,
) -> Scalar {
    let n = space.dim();
    let b_left = |v: &[Scalar], k: usize| -> Scalar { (0..n).map(|l| &v[l] * &g[l][k]).sum() };
    let b_right = |i: usize, v: &[Scalar]| -> Scalar { (0..n).map(|l| &g[i][l] * &v[l]).sum() };
    match kind {
        AlgebraKind::Prelie => {
            let twist = odd(space.degree(i)) && odd(space.degree(j));
            b_left(&t[i][j], k) + b_right(j, &t[i][k]).signed(twist)
        }
        _ => b_left(&t[i][j], k) - b_right(i, &t[j][k]),
    }
}

/// `b(q(x,y),z) = b(x,q(y,z))` (associative, commutative, Lie) or
/// `b(q(x,y),z) + (-1)^{|x||y|} b(y,q(x,z)) = 0` (pre-Lie) on basis triples.
pub fn verify_invariance(a: &AlgebraStructure, b: &BilinearForm) -> Result<InvarianceReport> {
    if b.space() != &a.space {
        return Err(Error::Input("form lives on a different space".into()));
    }
    let n = a.dim();
    let mut found = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let d = invariance_defect(a.kind, &a.space, &a.table, b.matrix(), i, j, k);
                if !d.is_zero() {
                    found = witness(Law::Invariance, &[i, j, k], &[d]);
                    break 'outer;
                }
            }
        }
    }
    let flavor = match a.kind {
        AlgebraKind::Commutative => Flavor::Tensor,
        k => k.flavor(),
    };
    Ok(InvarianceReport {
        holds: found.is_none(),
        witness: found,
        b_quadratic: is_b_quadratic(&a.shifted_map(), b, flavor)?,
    })
}

/// A module over an ungraded algebra: left action `x·a` and, except for Lie
/// algebras, right action `a*x`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    base: AlgebraStructure,
    space: GradedSpace,
    /// `left[i][p][r]`: coefficient of `m_r` in `e_i · m_p`.
    left: Table<Scalar>,
    /// `right[p][i][r]`: coefficient of `m_r` in `m_p * e_i`.
    right: Option<Table<Scalar>>,
}

fn check_ungraded(space: &GradedSpace, what: &str) -> Result<()> {
    if space.is_ungraded() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what} must be ungraded")))
    }
}

impl Bimodule {
    /// Builds the module and checks the kind's axioms. Lie modules take no
    /// right action; for the other kinds a missing right action is zero.
    pub fn new(
        base: &AlgebraStructure,
        space: GradedSpace,
        left: Table<Scalar>,
        right: Option<Table<Scalar>>,
    ) -> Result<Self> {
        check_ungraded(&base.space, "the algebra of a bimodule")?;
        check_ungraded(&space, "a bimodule")?;
        let (n, m) = (base.dim(), space.dim());
        let shape = |t: &Table<Scalar>, a: usize, b: usize| {
            t.len() == a && t.iter().all(|row| row.len() == b && row.iter().all(|v| v.len() == m))
        };
        if !shape(&left, n, m) {
            return Err(Error::Input("left action has the wrong shape".into()));
        }
        let right = match (base.kind, right) {
            (AlgebraKind::Lie, Some(_)) => {
                return Err(Error::Input("a Lie module has only a left action".into()));
            }
            (AlgebraKind::Lie, None) => None,
            (_, Some(r)) => {
                if !shape(&r, m, n) {
                    return Err(Error::Input("right action has the wrong shape".into()));
                }
                Some(r)
            }
            (_, None) => Some(vec![vec![vec![Scalar::zero(); m]; n]; m]),
        };
        let module = Bimodule {
            base: base.clone(),
            space,
            left,
            right,
        };
        if let Some(w) = module.axiom_witness() {
            return Err(Error::ModuleAxiom(w.to_string()));
        }
        Ok(module)
    }

    /// Builds from sparse `(i, p, r, c)` left and `(p, i, r, c)` right entries.
    pub fn from_entries(
        base: &AlgebraStructure,
        space: GradedSpace,
        left: Vec<(usize, usize, usize, Scalar)>,
        right: Option<Vec<(usize, usize, usize, Scalar)>>,
    ) -> Result<Self> {
        let (n, m) = (base.dim(), space.dim());
        let fill = |entries: Vec<(usize, usize, usize, Scalar)>, a: usize, b: usize| -> Result<Table<Scalar>> {
            let mut t = vec![vec![vec![Scalar::zero(); m]; b]; a];
            for (x, y, r, c) in entries {
                if x >= a || y >= b || r >= m {
                    return Err(Error::IndexOutOfRange {
                        index: x.max(y).max(r),
                        dim: a.max(b).max(m),
                    });
                }
                t[x][y][r] += c;
            }
            Ok(t)
        };
        let left = fill(left, n, m)?;
        let right = right.map(|r| fill(r, m, n)).transpose()?;
        Bimodule::new(base, space, left, right)
    }

    /// `M = V` with the algebra acting on itself.
    pub fn adjoint(base: &AlgebraStructure) -> Result<Self> {
        let left = base.table.clone();
        let right = match base.kind {
            AlgebraKind::Lie => None,
            _ => Some(base.table.clone()),
        };
        Bimodule::new(base, base.space.clone(), left, right)
    }

    /// The zero module of dimension `dim`.
    pub fn trivial(base: &AlgebraStructure, dim: usize) -> Result<Self> {
        let n = base.dim();
        let left = vec![vec![vec![Scalar::zero(); dim]; dim]; n];
        Bimodule::new(base, GradedSpace::ungraded(dim), left, None)
    }

    pub fn base(&self) -> &AlgebraStructure {
        &self.base
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn left_table(&self) -> &Table<Scalar> {
        &self.left
    }

    pub fn right_table(&self) -> Option<&Table<Scalar>> {
        self.right.as_ref()
    }

    /// Coordinates of `e_i · m_p`.
    pub fn left(&self, i: usize, p: usize) -> &[Scalar] {
        &self.left[i][p]
    }

    /// Coordinates of `m_p * e_i` (zero for Lie modules).
    pub fn right(&self, p: usize, i: usize) -> Vec<Scalar> {
        match &self.right {
            Some(r) => r[p][i].clone(),
            None => vec![Scalar::zero(); self.dim()],
        }
    }

    /// `x · a` for an algebra vector `x` and a module vector `a`.
    pub fn act_left(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            for (p, ap) in a.iter().enumerate() {
                if !xi.is_zero() && !ap.is_zero() {
                    axpy(&mut acc, &(xi * ap), &self.left[i][p]);
                }
            }
        }
        acc
    }

    /// `a * x`.
    pub fn act_right(&self, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim()];
        if let Some(r) = &self.right {
            for (p, ap) in a.iter().enumerate() {
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() && !ap.is_zero() {
                        axpy(&mut acc, &(xi * ap), &r[p][i]);
                    }
                }
            }
        }
        acc
    }

    /// First violation of the module axioms of the base kind.
    pub fn axiom_witness(&self) -> Option<Witness> {
        let (n, m) = (self.base.dim(), self.dim());
        let basis = |d: usize, i: usize| {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v
        };
        let q = |i: usize, j: usize| self.base.table[i][j].clone();
        for i in 0..n {
            let x = basis(n, i);
            for p in 0..m {
                let a = basis(m, p);
                if self.base.kind == AlgebraKind::Commutative {
                    let d = combine(&self.act_left(&x, &a), &self.act_right(&a, &x), true);
                    if let Some(w) = witness(Law::SymmetricBimodule, &[i, p], &d) {
                        return Some(w);
                    }
                }
                for j in 0..n {
                    let y = basis(n, j);
                    let xa = self.act_left(&x, &a);
                    let ya = self.act_left(&y, &a);
                    let checks: Vec<(Law, Vec<Scalar>)> = match self.base.kind {
                        AlgebraKind::Associative | AlgebraKind::Commutative => vec![
                            // (xy)·a = x·(y·a)
                            (
                                Law::LeftModule,
                                combine(&self.act_left(&q(i, j), &a), &self.act_left(&x, &ya), true),
                            ),
                            // (a*x)*y = a*(xy)
                            (
                                Law::RightModule,
                                combine(
                                    &self.act_right(&self.act_right(&a, &x), &y),
                                    &self.act_right(&a, &q(i, j)),
                                    true,
                                ),
                            ),
                            // (x·a)*y = x·(a*y)
                            (
                                Law::Bimodule,
                                combine(
                                    &self.act_right(&xa, &y),
                                    &self.act_left(&x, &self.act_right(&a, &y)),
                                    true,
                                ),
                            ),
                        ],
                        AlgebraKind::Lie => {
                            let lhs = self.act_left(&q(i, j), &a);
                            let rhs = combine(&self.act_left(&x, &ya), &self.act_left(&y, &xa), true);
                            vec![(Law::LeftModule, combine(&lhs, &rhs, true))]
                        }
                        AlgebraKind::Prelie => {
                            // q(x,y)·a - x·(y·a) symmetric in x, y
                            let l1 = combine(&self.act_left(&q(i, j), &a), &self.act_left(&x, &ya), true);
                            let l2 = combine(&self.act_left(&q(j, i), &a), &self.act_left(&y, &xa), true);
                            // (a*x)*y - a*q(x,y) = (x·a)*y - x·(a*y)
                            let r1 = combine(
                                &self.act_right(&self.act_right(&a, &x), &y),
                                &self.act_right(&a, &q(i, j)),
                                true,
                            );
                            let r2 = combine(
                                &self.act_right(&xa, &y),
                                &self.act_left(&x, &self.act_right(&a, &y)),
                                true,
                            );
                            vec![
                                (Law::LeftModule, combine(&l1, &l2, true)),
                                (Law::Bimodule, combine(&r1, &r2, true)),
                            ]
                        }
                    };
                    for (law, d) in checks {
                        if let Some(w) = witness(law, &[i, j, p], &d) {
                            return Some(w);
                        }
                    }
                }
            }
        }
        None
    }
}

/// The dual module `M*` in the dual basis: for associative and commutative
/// algebras `(x·f)(m) = f(m*x)` and `(f*x)(m) = f(x·m)`; for Lie and pre-Lie
/// algebras `(x·f)(m) = -f(x·m)`, with zero right action in the pre-Lie case.
pub fn dual_module(module: &Bimodule) -> Result<Bimodule> {
    let (n, m) = (module.base.dim(), module.dim());
    let mut left = vec![vec![vec![Scalar::zero(); m]; m]; n];
    let mut right = match module.base.kind {
        AlgebraKind::Associative | AlgebraKind::Commutative | AlgebraKind::Prelie => {
            Some(vec![vec![vec![Scalar::zero(); m]; n]; m])
        }
        AlgebraKind::Lie => None,
    };
    for i in 0..n {
        for p in 0..m {
            for r in 0..m {
                match module.base.kind {
                    AlgebraKind::Associative | AlgebraKind::Commutative => {
                        left[i][p][r] = module.right(r, i)[p].clone();
                        if let Some(rt) = right.as_mut() {
                            rt[p][i][r] = module.left[i][r][p].clone();
                        }
                    }
                    AlgebraKind::Lie | AlgebraKind::Prelie => {
                        left[i][p][r] = -&module.left[i][r][p];
                    }
                }
            }
        }
    }
    Bimodule::new(&module.base, module.space.dual(), left, right.take())
}

/// The dual of the adjoint module.
pub fn coadjoint(base: &AlgebraStructure) -> Result<Bimodule> {
    dual_module(&Bimodule::adjoint(base)?)
}

/// `W = V ⋉ M` on `V ⊕ M`: `(xy, x·b + a*y)` for associative, commutative
/// and pre-Lie algebras, `([x,y], x·b - y·a)` for Lie algebras.
pub fn semidirect_product(module: &Bimodule) -> Result<AlgebraStructure> {
    let base = &module.base;
    let (n, m) = (base.dim(), module.dim());
    let space = base.space.direct_sum(&module.space);
    let mut t = vec![vec![vec![Scalar::zero(); n + m]; n + m]; n + m];
    for i in 0..n {
        for j in 0..n {
            t[i][j][..n].clone_from_slice(&base.table[i][j]);
        }
        for p in 0..m {
            t[i][n + p][n..].clone_from_slice(&module.left[i][p]);
            let ay: Vec<Scalar> = match base.kind {
                AlgebraKind::Lie => module.left[i][p].iter().map(|v| -v).collect(),
                _ => module.right(p, i),
            };
            t[n + p][i][n..].clone_from_slice(&ay);
        }
    }
    AlgebraStructure::new(space, base.kind, t)
}

/// `Ṽ = W × W*` with `W = V ⋉ M`, its product and the pairing form.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleProduct {
    algebra: AlgebraStructure,
    base_dim: usize,
    module_dim: usize,
}

impl DoubleProduct {
    /// The quadratic algebra `(Ṽ, q̃, b̃)`.
    pub fn algebra(&self) -> &AlgebraStructure {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        self.algebra.form().expect("double carries its form")
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Index of `e_i ∈ V` in `Ṽ`.
    pub fn base_index(&self, i: usize) -> usize {
        i
    }

    /// Index of `m_p ∈ M` in `Ṽ`.
    pub fn module_index(&self, p: usize) -> usize {
        self.base_dim + p
    }

    pub fn into_algebra(self) -> AlgebraStructure {
        self.algebra
    }
}

/// The double semidirect product of an associative, commutative or Lie
/// algebra by a module. The result is re-verified: identity, invariance and
/// nondegeneracy of `b̃((w,f),(w',f')) = f(w') + f'(w)`.
pub fn double_product(module: &Bimodule) -> Result<DoubleProduct> {
    let kind = module.base.kind;
    if kind == AlgebraKind::Prelie {
        return Err(Error::Unsupported(
            "double semidirect products of pre-Lie algebras".into(),
        ));
    }
    let w = semidirect_product(module)?;
    let total = semidirect_product(&coadjoint(&w)?)?;
    let d = w.dim();
    let mut g = vec![vec![Scalar::zero(); 2 * d]; 2 * d];
    for i in 0..d {
        g[i][d + i] = Scalar::one();
        g[d + i][i] = Scalar::one();
    }
    let b = BilinearForm::new(total.space.clone(), g)?;
    let report = verify_invariance(&total, &b)?;
    if let Some(w) = report.witness {
        return Err(Error::InvalidStructure(format!("double is not invariant: {w}")));
    }
    Ok(DoubleProduct {
        algebra: total.with_form(b)?,
        base_dim: module.base.dim(),
        module_dim: module.dim(),
    })
}

/// The B̃-quadratic map `C̃` on `Ṽ[1]` extending a cochain `c: V^k → M`:
/// the shifted `c` with values in `M ⊂ Ṽ`, completed by the components
/// with values in `V*` that make `Ω_{C̃}` cyclic (`Ω_{C̃}` is the cyclic
/// symmetrization of `Ω` of the shifted `c`).
pub fn lift_cochain(c: &Cochain, double: &DoubleProduct) -> Result<MultiMap> {
    if c.source().dim() != double.base_dim || c.target().dim() != double.module_dim {
        return Err(Error::Input("cochain does not match the double".into()));
    }
    let space = double.algebra.space();
    let entries = c.entries().map(|(key, v)| {
        let k = c.arity();
        let inputs: Vec<usize> = key[..k].iter().map(|&i| double.base_index(i)).collect();
        (inputs, double.module_index(key[k]), v.clone())
    });
    let raw = MultiMap::from_entries(space, c.arity(), entries)?;
    let omega = omega_of(&shift_map(&raw), double.form())?.cyclic_sym();
    map_of_any(&omega, double.form())
}

/// Symmetric invariant forms, sampled for nondegeneracy.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantForms {
    /// Gram matrices spanning the space of invariant forms.
    pub basis: Vec<Vec<Vec<Scalar>>>,
    pub samples: Vec<FormSample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormSample {
    /// Coefficients of the sample on `basis`.
    pub coefficients: Vec<Scalar>,
    pub nondegenerate: bool,
}

/// Solves for all degree-0, graded symmetric, invariant bilinear forms.
pub fn invariant_form_space(a: &AlgebraStructure) -> InvariantForms {
    let n = a.dim();
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let unit = |entries: &[(usize, Scalar)]| {
        let mut r = vec![Scalar::zero(); n * n];
        for (idx, v) in entries {
            r[*idx] += v;
        }
        r
    };
    for i in 0..n {
        for j in 0..n {
            if a.space.degree(i) + a.space.degree(j) != 0 {
                rows.push(unit(&[(var(i, j), Scalar::one())]));
            } else if i <= j {
                let twist = odd(a.space.degree(i)) && odd(a.space.degree(j));
                rows.push(unit(&[
                    (var(i, j), Scalar::one()),
                    (var(j, i), -Scalar::one().signed(twist)),
                ]));
            }
        }
    }
    // invariance is linear in the Gram entries: differentiate the defect
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for (idx, slot) in row.iter_mut().enumerate() {
                    let mut g = vec![vec![Scalar::zero(); n]; n];
                    g[idx / n][idx % n] = Scalar::one();
                    *slot = invariance_defect(a.kind, &a.space, &a.table, &g, i, j, k);
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = linalg::nullspace(&rows, n * n);
    let basis: Vec<Vec<Vec<Scalar>>> = kernel
        .iter()
        .map(|v| (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect())
        .collect();
    let samples = sample_points(basis.len())
        .into_iter()
        .map(|coefficients| {
            let mut g = vec![vec![Scalar::zero(); n]; n];
            for (c, m) in coefficients.iter().zip(&basis) {
                for i in 0..n {
                    for j in 0..n {
                        g[i][j] += c * &m[i][j];
                    }
                }
            }
            FormSample {
                nondegenerate: !linalg::determinant(&g).is_zero(),
                coefficients,
            }
        })
        .collect();
    InvariantForms { basis, samples }
}

/// Unit vectors, then the nonzero points of `{-2..2}^d` for `d ≤ 2`.
fn sample_points(d: usize) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..d)
        .map(|i| (0..d).map(|j| Scalar::from_int((i == j) as i64)).collect())
        .collect();
    if d == 2 {
        for x in -2..=2i64 {
            for y in -2..=2i64 {
                let p = vec![Scalar::from_int(x), Scalar::from_int(y)];
                if (x, y) != (0, 0) && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// One point of the pencil `α tr(xy) + β tr(x)tr(y)` on `gl_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PencilSample {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub determinant: Scalar,
    /// `α(α + nβ) = 0`.
    pub on_locus: bool,
}

impl PencilSample {
    pub fn consistent(&self) -> bool {
        self.determinant.is_zero() == self.on_locus
    }
}

/// Determinants along the pencil `α tr(xy) + β tr(x)tr(y)` on `gl_n`.
pub fn trace_pencil(n: usize, points: &[(Scalar, Scalar)]) -> Vec<PencilSample> {
    let tf = crate::bilinear::trace_form_matrix(n);
    let tp = crate::bilinear::trace_product_matrix(n);
    points
        .iter()
        .map(|(alpha, beta)| {
            let g: Vec<Vec<Scalar>> = tf
                .iter()
                .zip(&tp)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| alpha * x + beta * y).collect())
                .collect();
            let nb = Scalar::from_int(n as i64) * beta;
            PencilSample {
                alpha: alpha.clone(),
                beta: beta.clone(),
                determinant: linalg::determinant(&g),
                on_locus: (alpha * &(alpha + &nb)).is_zero(),
            }
        })
        .collect()
}
