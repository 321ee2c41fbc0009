//! Degree-0 graded-symmetric bilinear forms, their dual bases and the
//! shifted form `B` on `V[1]`.
//!
//! Symmetry is graded: `b(y, x) = (-1)^{|x||y|} b(x, y)`, so `B` is graded
//! antisymmetric on `V[1]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{odd, GradedSpace, Vector};
use crate::linalg;
use crate::scalar::Scalar;

/// A bilinear form `b(e_i, e_j)` given by its Gram matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm {
    space: GradedSpace,
    matrix: Vec<Vec<Scalar>>,
    inverse: Vec<Vec<Scalar>>,
    /// `dual[k][j]`: coefficient of `e_k` in `e'_j`.
    dual: Vec<Vec<Scalar>>,
}

/// Outcome of [`validate_form`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormValidation {
    pub symmetric: bool,
    pub degree_zero: bool,
    pub nondegenerate: bool,
    /// First `(i, j)` violating graded symmetry.
    pub asymmetry: Option<(usize, usize)>,
    /// First `(i, j)` with `b(e_i, e_j) ≠ 0` and `|e_i| + |e_j| ≠ 0`.
    pub degree_violation: Option<(usize, usize)>,
    pub kernel_vector: Option<Vec<Scalar>>,
}

impl FormValidation {
    pub fn is_valid(&self) -> bool {
        self.symmetric && self.degree_zero && self.nondegenerate
    }
}

/// Checks graded symmetry, degree 0 and nondegeneracy of a Gram matrix.
pub fn validate_matrix(space: &GradedSpace, matrix: &[Vec<Scalar>]) -> Result<FormValidation> {
    let n = space.dim();
    if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: matrix.len(),
        });
    }
    let mut asymmetry = None;
    let mut degree_violation = None;
    for i in 0..n {
        for j in 0..n {
            let twist = odd(space.degree(i)) && odd(space.degree(j));
            if asymmetry.is_none() && matrix[i][j] != matrix[j][i].clone().signed(twist) {
                asymmetry = Some((i, j));
            }
            if degree_violation.is_none() && !matrix[i][j].is_zero() && space.degree(i) + space.degree(j) != 0 {
                degree_violation = Some((i, j));
            }
        }
    }
    let kernel = linalg::nullspace(matrix, n);
    Ok(FormValidation {
        symmetric: asymmetry.is_none(),
        degree_zero: degree_violation.is_none(),
        nondegenerate: kernel.is_empty(),
        asymmetry,
        degree_violation,
        kernel_vector: kernel.into_iter().next(),
    })
}

/// Validation report for an existing form.
pub fn validate_form(b: &BilinearForm) -> FormValidation {
    validate_matrix(&b.space, &b.matrix).expect("form has a square matrix")
}

impl BilinearForm {
    /// Builds a form, rejecting anything that is not graded symmetric,
    /// degree 0 and nondegenerate.
    pub fn new(space: GradedSpace, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let report = validate_matrix(&space, &matrix)?;
        if let Some(kernel) = report.kernel_vector {
            return Err(Error::Degenerate {
                kernel: kernel.iter().map(|x| x.to_string()).collect(),
            });
        }
        if let Some((i, j)) = report.asymmetry {
            return Err(Error::InvalidForm(format!("not graded symmetric at ({i}, {j})")));
        }
        if let Some((i, j)) = report.degree_violation {
            return Err(Error::InvalidForm(format!(
                "b(e{i}, e{j}) ≠ 0 but the degrees do not sum to 0"
            )));
        }
        let inverse = linalg::inverse(&matrix).expect("nondegenerate");
        let dual = linalg::transpose(&inverse);
        Ok(BilinearForm {
            space,
            matrix,
            inverse,
            dual,
        })
    }

    /// The identity Gram matrix on an ungraded space.
    pub fn identity(n: usize) -> Self {
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        BilinearForm::new(GradedSpace::ungraded(n), m).expect("identity is valid")
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                if !self.matrix[i][j].is_zero() {
                    acc += xi * yj * &self.matrix[i][j];
                }
            }
        }
        acc
    }

    /// Coefficient of `e_k` in the dual vector `e'_j`, where
    /// `b(e'_j, e_i) = δ_ij`.
    pub fn dual_coeff(&self, k: usize, j: usize) -> &Scalar {
        &self.dual[k][j]
    }

    /// `B(e_i, e_j) = (-1)^{deg e_i} b(e_i, e_j)`.
    pub fn shifted_entry(&self, i: usize, j: usize) -> Scalar {
        self.matrix[i][j].clone().signed(odd(self.space.shifted(i)))
    }

    /// Inverse of the shifted Gram matrix `B(e_i, e_j)`.
    pub fn shifted_inverse(&self) -> Vec<Vec<Scalar>> {
        // B = S·G with S = diag((-1)^{deg e_i}), so B^{-1} = G^{-1} S.
        let n = self.space.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.inverse[i][j].clone().signed(odd(self.space.shifted(j))))
                    .collect()
            })
            .collect()
    }
}

/// The basis `(e'_i)` with `b(e'_j, e_i) = δ_ij`.
pub fn dual_basis(b: &BilinearForm) -> Vec<Vector> {
    let n = b.space.dim();
    (0..n)
        .map(|j| Vector::from_coeffs((0..n).map(|k| b.dual[k][j].clone()).collect()))
        .collect()
}

/// `B(x, y) = (-1)^{deg x} b(x, y)` on homogeneous vectors.
pub fn shifted_b(b: &BilinearForm, x: &Vector, y: &Vector) -> Result<Scalar> {
    let dx = x.degree(&b.space)?;
    y.degree(&b.space)?;
    let value = b.eval(x, y);
    Ok(match dx {
        Some(d) => value.signed(odd(d - 1)),
        None => value,
    })
}

/// `tr(xy)` on `M_n` in the elementary basis `e_pq` (index `p*n + q`).
pub fn trace_form_matrix(n: usize) -> Vec<Vec<Scalar>> {
    let dim = n * n;
    let mut m = vec![vec![Scalar::zero(); dim]; dim];
    for p in 0..n {
        for q in 0..n {
            // tr(e_pq e_qp) = 1
            m[p * n + q][q * n + p] = Scalar::one();
        }
    }
    m
}

/// `tr(x) tr(y)` on `M_n` in the elementary basis.
pub fn trace_product_matrix(n: usize) -> Vec<Vec<Scalar>> {
    let dim = n * n;
    let mut m = vec![vec![Scalar::zero(); dim]; dim];
    for p in 0..n {
        for r in 0..n {
            m[p * n + p][r * n + r] = Scalar::one();
        }
    }
    m
}
