//! TOML documents for algebras, modules, forms and cochains.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bilinear::BilinearForm;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::forms::MultiForm;
use crate::graded::GradedSpace;
use crate::scalar::Scalar;
use crate::structures::{AlgebraKind, AlgebraStructure, Bimodule};

/// `[i, j, k, "p/q"]`: `q(e_i, e_j)` has coefficient `p/q` on `e_k`.
pub type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub kind: String,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub product: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleFile>,
}

/// Left entries `[i, p, r, c]`: `e_i · m_p` has coefficient `c` on `m_r`;
/// right entries `[p, i, r, c]`: `m_p * e_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i32>>,
    #[serde(default)]
    pub left_action: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i32>>,
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<FormEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub args: Vec<usize>,
    pub value: String,
}

/// A cochain `V^arity → M`; `target_dimension` defaults to `dimension`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_dimension: Option<usize>,
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<CochainEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub args: Vec<usize>,
    pub out: usize,
    pub value: String,
}

/// A symmetric matrix of rationals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub matrix: Vec<Vec<String>>,
}

pub fn read_toml<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn scalar(field: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|e| Error::Parse(format!("{field}: {e}")))
}

fn check(field: &str, index: usize, dim: usize) -> Result<()> {
    if index < dim {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "{field}: index {index} out of range for dimension {dim}"
        )))
    }
}

fn space(field: &str, dim: usize, degrees: &Option<Vec<i32>>, names: &Option<Vec<String>>) -> Result<GradedSpace> {
    let degrees = degrees.clone().unwrap_or_else(|| vec![0; dim]);
    if degrees.len() != dim {
        return Err(Error::Parse(format!(
            "{field}.degrees: expected {dim} entries, found {}",
            degrees.len()
        )));
    }
    let names = names
        .clone()
        .unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect());
    if names.len() != dim {
        return Err(Error::Parse(format!(
            "{field}.basis_names: expected {dim} entries, found {}",
            names.len()
        )));
    }
    GradedSpace::new(degrees, names)
}

fn entries(field: &str, raw: &[Entry], dims: (usize, usize, usize)) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    raw.iter()
        .enumerate()
        .map(|(n, (i, j, k, c))| {
            let f = format!("{field}[{n}]");
            check(&f, *i, dims.0)?;
            check(&f, *j, dims.1)?;
            check(&f, *k, dims.2)?;
            Ok((*i, *j, *k, scalar(&f, c)?))
        })
        .collect()
}

pub fn matrix(field: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, s)| scalar(&format!("{field}[{i}][{j}]"), s))
                .collect()
        })
        .collect()
}

impl AlgebraFile {
    pub fn kind(&self) -> Result<AlgebraKind> {
        self.kind.parse().map_err(|e| Error::Parse(format!("kind: {e}")))
    }

    pub fn space(&self) -> Result<GradedSpace> {
        space("algebra", self.dimension, &self.degrees, &self.basis_names)
    }

    /// Builds the algebra, with its form when one is given.
    pub fn algebra(&self) -> Result<AlgebraStructure> {
        let space = self.space()?;
        let n = self.dimension;
        let product = entries("product", &self.product, (n, n, n))?;
        let a = AlgebraStructure::from_entries(space.clone(), self.kind()?, product)?;
        match &self.form {
            Some(rows) => a.with_form(BilinearForm::new(space, matrix("form", rows)?)?),
            None => Ok(a),
        }
    }

    /// Like [`AlgebraFile::algebra`], without checking the identity.
    pub fn algebra_unchecked(&self) -> Result<AlgebraStructure> {
        let space = self.space()?;
        let n = self.dimension;
        let mut table = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, j, k, c) in entries("product", &self.product, (n, n, n))? {
            table[i][j][k] += c;
        }
        AlgebraStructure::new_unchecked(space, self.kind()?, table)
    }

    pub fn from_algebra(name: &str, a: &AlgebraStructure) -> AlgebraFile {
        let degrees = a.space().degrees().to_vec();
        AlgebraFile {
            name: name.to_string(),
            kind: a.kind().name().to_string(),
            dimension: a.dim(),
            degrees: (!a.space().is_ungraded()).then_some(degrees),
            basis_names: Some(a.space().names().to_vec()),
            product: a
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            form: a.form().map(|b| {
                b.matrix()
                    .iter()
                    .map(|r| r.iter().map(Scalar::to_string).collect())
                    .collect()
            }),
            module: None,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("algebra files serialize")
    }
}

impl ModuleFile {
    pub fn bimodule(&self, base: &AlgebraStructure) -> Result<Bimodule> {
        let m = self.dimension;
        let n = base.dim();
        let sp = space("module", m, &self.degrees, &None)?;
        let left = entries("module.left_action", &self.left_action, (n, m, m))?;
        let right = match &self.right_action {
            Some(r) => Some(entries("module.right_action", r, (m, n, m))?),
            None => None,
        };
        Bimodule::from_entries(base, sp, left, right)
    }
}

impl FormFile {
    pub fn form(&self) -> Result<MultiForm> {
        let sp = space("form", self.dimension, &self.degrees, &None)?;
        let values = self
            .entries
            .iter()
            .enumerate()
            .map(|(n, e)| {
                let f = format!("entries[{n}]");
                if e.args.len() != self.arity {
                    return Err(Error::Parse(format!("{f}: expected {} arguments", self.arity)));
                }
                for &i in &e.args {
                    check(&f, i, self.dimension)?;
                }
                Ok((e.args.clone(), scalar(&f, &e.value)?))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiForm::from_entries(&sp, self.arity, values)
    }
}

impl CochainFile {
    pub fn cochain(&self, source: &GradedSpace, target: &GradedSpace) -> Result<Cochain> {
        if self.dimension != source.dim() || self.target_dimension.unwrap_or(self.dimension) != target.dim() {
            return Err(Error::Parse(
                "cochain dimensions do not match the algebra and module".into(),
            ));
        }
        let values = self
            .entries
            .iter()
            .enumerate()
            .map(|(n, e)| {
                let f = format!("entries[{n}]");
                if e.args.len() != self.arity {
                    return Err(Error::Parse(format!("{f}: expected {} arguments", self.arity)));
                }
                for &i in &e.args {
                    check(&f, i, source.dim())?;
                }
                check(&f, e.out, target.dim())?;
                Ok((e.args.clone(), e.out, scalar(&f, &e.value)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Cochain::from_entries(source, target, self.arity, values)
    }
}
