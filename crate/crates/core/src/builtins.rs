//! Built-in algebras: matrix algebras, `gl_2`, `sl_2`, `K[x]/(x²)`, the
//! pre-Lie algebra `M_2 ⋉ M_2*`, and the cochains `c_a`.

use crate::bilinear::{trace_form_matrix, BilinearForm};
use crate::cochain::Cochain;
use crate::error::Result;
use crate::graded::GradedSpace;
use crate::scalar::Scalar;
use crate::structures::{AlgebraKind, AlgebraStructure};

/// Names of the elementary matrices `e_pq`, indexed `p*n + q`.
pub fn matrix_basis_names(n: usize) -> Vec<String> {
    (0..n * n).map(|i| format!("e{}{}", i / n + 1, i % n + 1)).collect()
}

fn matrix_space(n: usize) -> GradedSpace {
    GradedSpace::new(vec![0; n * n], matrix_basis_names(n)).expect("names match degrees")
}

/// `e_pq e_rs = δ_qr e_ps`.
fn matrix_product_entries(n: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                out.push((p * n + q, q * n + s, p * n + s, Scalar::one()));
            }
        }
    }
    out
}

/// `M_n` with matrix multiplication and the trace form `tr(xy)`.
pub fn matrix_algebra(n: usize, kind: AlgebraKind) -> Result<AlgebraStructure> {
    let a = AlgebraStructure::from_entries(matrix_space(n), kind, matrix_product_entries(n))?;
    let b = BilinearForm::new(a.space().clone(), trace_form_matrix(n))?;
    a.with_form(b)
}

/// Associative `M_2`.
pub fn m2() -> AlgebraStructure {
    matrix_algebra(2, AlgebraKind::Associative).expect("M_2 is associative")
}

/// `M_2` with `q(x, y) = xy` read as a pre-Lie product.
pub fn m2_prelie() -> AlgebraStructure {
    matrix_algebra(2, AlgebraKind::Prelie).expect("M_2 is pre-Lie")
}

/// `gl_n` with the commutator and `tr(xy)`.
pub fn gl(n: usize) -> AlgebraStructure {
    let m = matrix_algebra(n, AlgebraKind::Associative).expect("M_n is associative");
    let b = m.form().cloned().expect("trace form");
    m.commutator().and_then(|g| g.with_form(b)).expect("gl_n is Lie")
}

pub fn gl2() -> AlgebraStructure {
    gl(2)
}

/// `sl_2` in the basis `(e, f, h)` with `[h,e] = 2e`, `[h,f] = -2f`,
/// `[e,f] = h`, and the trace form of the defining representation.
pub fn sl2() -> AlgebraStructure {
    let s = Scalar::from_int;
    let space = GradedSpace::named(&["e", "f", "h"]);
    let entries = vec![
        (2, 0, 0, s(2)),
        (0, 2, 0, s(-2)),
        (2, 1, 1, s(-2)),
        (1, 2, 1, s(2)),
        (0, 1, 2, s(1)),
        (1, 0, 2, s(-1)),
    ];
    let a = AlgebraStructure::from_entries(space.clone(), AlgebraKind::Lie, entries).expect("sl_2 is Lie");
    let g = vec![vec![s(0), s(1), s(0)], vec![s(1), s(0), s(0)], vec![s(0), s(0), s(2)]];
    a.with_form(BilinearForm::new(space, g).expect("nondegenerate"))
        .expect("same space")
}

/// `K[x]/(x²)` in the basis `(1, x)` with `b(1, x) = 1`.
pub fn kx2() -> AlgebraStructure {
    let one = Scalar::one;
    let space = GradedSpace::named(&["1", "x"]);
    let entries = vec![(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one())];
    let a = AlgebraStructure::from_entries(space.clone(), AlgebraKind::Commutative, entries).expect("commutative");
    let g = vec![vec![Scalar::zero(), one()], vec![one(), Scalar::zero()]];
    a.with_form(BilinearForm::new(space, g).expect("nondegenerate"))
        .expect("same space")
}

/// `W = M_2 ⊕ M_2` with `q_W(x_1 + x_2, y_1 + y_2) = x_1 y_1 - y_2 x_1` and
/// `b(x_1 + x_2, y_1 + y_2) = tr(x_1 y_2) + tr(x_2 y_1)`: the second copy
/// is `M_2*` identified with `M_2` by the trace form.
pub fn vvstar() -> AlgebraStructure {
    let n = 2;
    let d = n * n;
    let mut names = matrix_basis_names(n);
    names.extend(matrix_basis_names(n).into_iter().map(|s| format!("{s}*")));
    let space = GradedSpace::new(vec![0; 2 * d], names).expect("names match degrees");
    let mut entries = matrix_product_entries(n);
    for (i, j, k, c) in matrix_product_entries(n) {
        // y_2 x_1 with y_2 = e_i (second copy), x_1 = e_j: a product with
        // the first argument from V and the second from V*
        entries.push((j, d + i, d + k, -c));
    }
    let a = AlgebraStructure::from_entries(space.clone(), AlgebraKind::Prelie, entries).expect("pre-Lie");
    let tf = trace_form_matrix(n);
    let mut g = vec![vec![Scalar::zero(); 2 * d]; 2 * d];
    for i in 0..d {
        for j in 0..d {
            g[i][d + j] = tf[i][j].clone();
            g[d + i][j] = tf[i][j].clone();
        }
    }
    a.with_form(BilinearForm::new(space, g).expect("nondegenerate"))
        .expect("same space")
}

/// `c_a(x, y) = (1/n) tr(x) [y, a]` on `M_n`, as a cochain `M_n² → M_n`.
pub fn c_a(n: usize, a: &[Vec<Scalar>]) -> Cochain {
    let space = matrix_space(n);
    let inv_n = Scalar::ratio(1, n as i64);
    let mut entries = Vec::new();
    for p in 0..n {
        let x = p * n + p;
        for r in 0..n {
            for s in 0..n {
                let y = r * n + s;
                // [e_rs, a] = Σ_t a_st e_rt - Σ_t a_tr e_ts
                for t in 0..n {
                    entries.push((vec![x, y], r * n + t, &inv_n * &a[s][t]));
                    entries.push((vec![x, y], t * n + s, -(&inv_n * &a[t][r])));
                }
            }
        }
    }
    Cochain::from_entries(&space, &space, 2, entries).expect("indices in range")
}

/// The elementary matrix `e_pq` (zero-based) in `M_n`.
pub fn elementary(n: usize, p: usize, q: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| Scalar::from_int((i == p && j == q) as i64)).collect())
        .collect()
}

/// `f(x) = (1/n) tr(x) id` as a 1-cochain on `M_n`.
pub fn trace_projection(n: usize) -> Cochain {
    let space = matrix_space(n);
    let inv_n = Scalar::ratio(1, n as i64);
    let entries = (0..n).flat_map(|p| (0..n).map(move |r| (vec![p * n + p], r * n + r)));
    Cochain::from_entries(&space, &space, 1, entries.map(|(x, o)| (x, o, inv_n.clone()))).expect("indices in range")
}
