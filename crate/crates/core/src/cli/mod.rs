//! The `pinczon` command line: verification, brackets, cohomology, doubles
//! and deformations for algebras given as TOML files or built-ins.

pub mod files;

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bilinear::{trace_form_matrix, validate_matrix, BilinearForm};
use crate::bisym::{bisym_bracket, omega_of_prelie, BiSymForm};
use crate::builtins;
use crate::cochain::Cochain;
use crate::coderiv::{omega_of, Flavor};
use crate::cohomology::{
    cohomology_dims, deformation_check, pinczon_cohomology_dims, CohomologyReport, DeformationKind, Primitive, Theory,
};
use crate::error::{Error, Result};
use crate::forms::{pinczon_bracket, quotient_bracket, MultiForm};
use crate::graded::GradedSpace;
use crate::scalar::Scalar;
use crate::structures::{
    coadjoint, double_product, verify_identity, verify_invariance, AlgebraKind, AlgebraStructure, Bimodule, Witness,
};
use files::{read_toml, AlgebraFile, CochainFile, FormFile, MatrixFile, ModuleFile};

#[derive(Parser, Debug)]
#[command(
    name = "pinczon",
    version,
    about = "Exact brackets, quadratic algebras and their cohomology"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BracketFlavor {
    Tensor,
    Symmetric,
    Prelie,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the identity, the form and its invariance.
    Check {
        /// `builtin:NAME` or an algebra file.
        algebra: String,
        /// `trace`, `identity`, `own` or a matrix file.
        #[arg(long)]
        form: Option<String>,
    },
    /// Bracket two forms (files, or `builtin:NAME` for a structure form).
    Bracket {
        left: String,
        right: String,
        #[arg(long)]
        form: Option<String>,
        #[arg(long, value_enum, default_value_t = BracketFlavor::Tensor)]
        flavor: BracketFlavor,
    },
    /// Cohomology dimensions per degree.
    Cohomology {
        algebra: String,
        #[arg(long)]
        theory: String,
        /// `adjoint`, `coadjoint`, `trivial`, `zero` or a module file.
        #[arg(long)]
        module: Option<String>,
        /// Degree range `a..b` (inclusive); form arities for `pinczon`.
        #[arg(long, default_value = "0..2")]
        degrees: String,
        #[arg(long)]
        form: Option<String>,
    },
    /// Emit the double semidirect product as an algebra file.
    Double {
        algebra: String,
        #[arg(long)]
        module: Option<String>,
    },
    /// Classify `q + t c` over the dual numbers.
    Deform {
        algebra: String,
        /// `builtin:c_a(eRS)` or a cochain file.
        cochain: String,
    },
    /// List the built-in algebras and cochains.
    ListBuiltins,
}

/// A rendered report and whether every check passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub human: String,
    pub machine: Value,
    pub passed: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human.clone(),
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.machine).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

pub const BUILTINS: [(&str, &str); 7] = [
    ("M2", "associative 2x2 matrices with tr(xy)"),
    (
        "M2-prelie",
        "2x2 matrices, q(x,y) = xy read as a pre-Lie product, with tr(xy)",
    ),
    ("gl2", "commutator bracket on 2x2 matrices with tr(xy)"),
    (
        "sl2",
        "basis e, f, h with the trace form of the defining representation",
    ),
    ("Kx2", "K[x]/(x^2), commutative, b(1,x) = 1"),
    (
        "VVstar",
        "M2 + M2* with q(x1+x2, y1+y2) = x1 y1 - y2 x1, quadratic pre-Lie",
    ),
    ("c_a(eRS)", "cochain c_a(x,y) = (1/2) tr(x) [y, a] on M2 with a = e_RS"),
];

/// Runs the command line and returns the exit status: 0 when every check
/// passes, 1 when a mathematical check fails, 2 on input errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.passed {
        0
    } else {
        1
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Check { algebra, form } => cmd_check(algebra, form.as_deref()),
        Command::Bracket {
            left,
            right,
            form,
            flavor,
        } => cmd_bracket(left, right, form.as_deref(), *flavor),
        Command::Cohomology {
            algebra,
            theory,
            module,
            degrees,
            form,
        } => cmd_cohomology(algebra, theory, module.as_deref(), degrees, form.as_deref()),
        Command::Double { algebra, module } => cmd_double(algebra, module.as_deref()),
        Command::Deform { algebra, cochain } => cmd_deform(algebra, cochain),
        Command::ListBuiltins => Ok(list_builtins()),
    }
}

/// An algebra as read, before any verification.
pub struct Loaded {
    pub name: String,
    pub algebra: AlgebraStructure,
    pub form: Option<Vec<Vec<Scalar>>>,
    pub module: Option<ModuleFile>,
}

pub fn builtin_algebra(name: &str) -> Option<AlgebraStructure> {
    Some(match name {
        "M2" => builtins::m2(),
        "M2-prelie" => builtins::m2_prelie(),
        "gl2" => builtins::gl2(),
        "sl2" => builtins::sl2(),
        "Kx2" => builtins::kx2(),
        "VVstar" => builtins::vvstar(),
        _ => return None,
    })
}

/// `c_a(eRS)` with `1 ≤ R, S ≤ 2`.
pub fn builtin_cochain(name: &str) -> Option<Cochain> {
    let inner = name.strip_prefix("c_a(e")?.strip_suffix(')')?;
    let digits: Vec<u32> = inner.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
    match digits[..] {
        [r @ 1..=2, s @ 1..=2] => Some(builtins::c_a(
            2,
            &builtins::elementary(2, r as usize - 1, s as usize - 1),
        )),
        _ => None,
    }
}

pub fn load_algebra(source: &str) -> Result<Loaded> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let a = builtin_algebra(name).ok_or_else(|| Error::Input(format!("unknown built-in `{name}`")))?;
        return Ok(Loaded {
            name: name.to_string(),
            form: a.form().map(|b| b.matrix().to_vec()),
            algebra: a,
            module: None,
        });
    }
    let file: AlgebraFile = read_toml(Path::new(source))?;
    let algebra = file.algebra_unchecked()?;
    let form = file.form.as_ref().map(|rows| files::matrix("form", rows)).transpose()?;
    Ok(Loaded {
        name: file.name,
        algebra,
        form,
        module: file.module,
    })
}

fn form_matrix(
    source: Option<&str>,
    space: &GradedSpace,
    own: Option<&Vec<Vec<Scalar>>>,
) -> Result<Option<Vec<Vec<Scalar>>>> {
    let n = space.dim();
    match source {
        None | Some("own") => Ok(own.cloned()),
        Some("none") => Ok(None),
        Some("identity") => Ok(Some(
            (0..n)
                .map(|i| (0..n).map(|j| Scalar::from_int((i == j) as i64)).collect())
                .collect(),
        )),
        Some("trace") => {
            let side = (1..=n).find(|s| s * s == n).ok_or_else(|| {
                Error::Input(format!(
                    "the trace form needs a matrix algebra; dimension {n} is not a square"
                ))
            })?;
            Ok(Some(trace_form_matrix(side)))
        }
        Some(path) => {
            let file: MatrixFile = read_toml(Path::new(path))?;
            Ok(Some(files::matrix("matrix", &file.matrix)?))
        }
    }
}

fn form_for(loaded: &Loaded, source: Option<&str>) -> Result<BilinearForm> {
    let m = form_matrix(source, loaded.algebra.space(), loaded.form.as_ref())?
        .ok_or_else(|| Error::Input("a bilinear form is required (--form)".into()))?;
    BilinearForm::new(loaded.algebra.space().clone(), m)
}

fn names(space: &GradedSpace, t: &[usize]) -> String {
    t.iter().map(|&i| space.name(i)).collect::<Vec<_>>().join(", ")
}

fn witness_json(w: &Witness, space: &GradedSpace) -> Value {
    json!({
        "law": format!("{:?}", w.law),
        "args": w.args.iter().map(|&i| space.name(i)).collect::<Vec<_>>(),
        "defect": w.value.iter().map(|(i, v)| json!([space.name(*i), v])).collect::<Vec<_>>(),
    })
}

fn witness_text(w: &Witness, space: &GradedSpace) -> String {
    let defect: Vec<String> = w.value.iter().map(|(i, v)| format!("{v}·{}", space.name(*i))).collect();
    format!(
        "{:?} fails at ({}): defect {}",
        w.law,
        names(space, &w.args),
        defect.join(" + ")
    )
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn cmd_check(source: &str, form: Option<&str>) -> Result<Report> {
    let loaded = load_algebra(source)?;
    let a = &loaded.algebra;
    let space = a.space();
    let mut human = format!("{} ({}, dimension {})\n", loaded.name, a.kind(), a.dim());
    let mut machine = serde_json::Map::new();
    machine.insert("name".into(), json!(loaded.name));
    machine.insert("kind".into(), json!(a.kind().name()));
    machine.insert("dimension".into(), json!(a.dim()));

    let id = verify_identity(a)?;
    let mut passed = id.holds;
    let _ = writeln!(human, "identity: {}", mark(id.holds));
    if let Some(w) = &id.witness {
        let _ = writeln!(human, "  {}", witness_text(w, space));
    }
    let _ = writeln!(human, "structure equation [Q,Q] = 0: {}", mark(id.structure_equation));
    machine.insert(
        "identity".into(),
        json!({
            "holds": id.holds,
            "structure_equation": id.structure_equation,
            "witness": id.witness.as_ref().map(|w| witness_json(w, space)),
        }),
    );

    if let Some(m) = form_matrix(form, space, loaded.form.as_ref())? {
        let v = validate_matrix(space, &m)?;
        let valid = v.is_valid();
        passed &= valid;
        let _ = writeln!(
            human,
            "form: {} (symmetric {}, degree 0 {}, nondegenerate {})",
            mark(valid),
            v.symmetric,
            v.degree_zero,
            v.nondegenerate
        );
        let mut form_json = json!({
            "valid": valid,
            "symmetric": v.symmetric,
            "degree_zero": v.degree_zero,
            "nondegenerate": v.nondegenerate,
            "kernel_vector": v.kernel_vector.as_ref().map(|k| k.iter().map(Scalar::to_string).collect::<Vec<_>>()),
        });
        if valid {
            let b = BilinearForm::new(space.clone(), m)?;
            let inv = verify_invariance(a, &b)?;
            passed &= inv.holds;
            let _ = writeln!(human, "invariance: {}", mark(inv.holds));
            if let Some(w) = &inv.witness {
                let _ = writeln!(human, "  {}", witness_text(w, space));
            }
            let _ = writeln!(human, "B-quadratic shifted product: {}", mark(inv.b_quadratic));
            form_json["invariance"] = json!({
                "holds": inv.holds,
                "b_quadratic": inv.b_quadratic,
                "witness": inv.witness.as_ref().map(|w| witness_json(w, space)),
            });
        }
        machine.insert("form".into(), form_json);
    } else {
        let _ = writeln!(human, "form: none");
    }

    if let Some(mf) = &loaded.module {
        let result = if id.holds {
            mf.bimodule(a).map(|_| ())
        } else {
            Err(Error::InvalidStructure("base".into()))
        };
        let ok = result.is_ok();
        passed &= ok;
        let _ = writeln!(human, "module axioms: {}", mark(ok));
        if let Err(e) = &result {
            let _ = writeln!(human, "  {e}");
        }
        machine.insert(
            "module".into(),
            json!({"holds": ok, "error": result.err().map(|e| e.to_string())}),
        );
    }
    let _ = writeln!(human, "overall: {}", mark(passed));
    machine.insert("passed".into(), json!(passed));
    Ok(Report {
        human,
        machine: Value::Object(machine),
        passed,
    })
}

/// A bracket argument: a structure form or a form from a file.
struct FormArg {
    form: MultiForm,
    own_form: Option<Vec<Vec<Scalar>>>,
}

fn load_form_arg(source: &str, flavor: BracketFlavor) -> Result<FormArg> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let a = builtin_algebra(name).ok_or_else(|| Error::Input(format!("unknown built-in `{name}`")))?;
        let b = a.form().ok_or_else(|| Error::Input(format!("{name} has no form")))?;
        let form = match flavor {
            BracketFlavor::Prelie => omega_of_prelie(&a.shifted_map(), b)?.into_form(),
            _ => omega_of(&a.shifted_map(), b)?,
        };
        return Ok(FormArg {
            form,
            own_form: Some(b.matrix().to_vec()),
        });
    }
    let file: FormFile = read_toml(Path::new(source))?;
    Ok(FormArg {
        form: file.form()?,
        own_form: None,
    })
}

fn rehome(f: &MultiForm, space: &GradedSpace) -> Result<MultiForm> {
    MultiForm::from_entries(space, f.arity(), f.entries().map(|(t, v)| (t.clone(), v.clone())))
}

pub fn cmd_bracket(left: &str, right: &str, form: Option<&str>, flavor: BracketFlavor) -> Result<Report> {
    let mut l = load_form_arg(left, flavor)?;
    let mut r = load_form_arg(right, flavor)?;
    if l.form.space().degrees() != r.form.space().degrees() {
        return Err(Error::Input("the two forms live on different spaces".into()));
    }
    // file forms adopt the basis names of a structure form
    if l.own_form.is_some() && r.own_form.is_none() {
        r.form = rehome(&r.form, l.form.space())?;
    } else if r.own_form.is_some() {
        l.form = rehome(&l.form, r.form.space())?;
    }
    let space = l.form.space().clone();
    let own = l.own_form.as_ref().or(r.own_form.as_ref());
    let m = match form {
        None if own.is_none() => form_matrix(Some("identity"), &space, None)?,
        source => form_matrix(source, &space, own)?,
    }
    .ok_or_else(|| Error::Input("a bilinear form is required (--form)".into()))?;
    let b = BilinearForm::new(space.clone(), m)?;
    let result = match flavor {
        BracketFlavor::Tensor => pinczon_bracket(&l.form, &r.form, &b)?,
        BracketFlavor::Symmetric => quotient_bracket(&l.form, &r.form, &b)?,
        BracketFlavor::Prelie => bisym_bracket(&BiSymForm::new(l.form)?, &BiSymForm::new(r.form)?, &b)?.into_form(),
    };
    let entries: Vec<(&Vec<usize>, &Scalar)> = result.entries().collect();
    let mut human = format!(
        "bracket: arity {}, {} nonzero coefficients\n",
        result.arity(),
        entries.len()
    );
    for (t, v) in &entries {
        let _ = writeln!(human, "({}) = {v}", names(&space, t));
    }
    let machine = json!({
        "arity": result.arity(),
        "zero": result.is_zero(),
        "coefficients": entries
            .iter()
            .map(|(t, v)| json!({"args": t, "value": v.to_string()}))
            .collect::<Vec<_>>(),
    });
    Ok(Report {
        human,
        machine,
        passed: true,
    })
}

pub fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("degrees must look like `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn verified(loaded: &Loaded) -> Result<std::result::Result<(), Report>> {
    let id = verify_identity(&loaded.algebra)?;
    if id.holds {
        return Ok(Ok(()));
    }
    let w = id.witness.expect("failing identity has a witness");
    let space = loaded.algebra.space();
    Ok(Err(Report {
        human: format!(
            "{} is not a {} algebra: {}\n",
            loaded.name,
            loaded.algebra.kind(),
            witness_text(&w, space)
        ),
        machine: json!({"passed": false, "identity": witness_json(&w, space)}),
        passed: false,
    }))
}

fn module_for(loaded: &Loaded, source: Option<&str>) -> Result<(String, Bimodule)> {
    let a = &loaded.algebra;
    match source {
        None => match &loaded.module {
            Some(mf) => Ok(("module from file".into(), mf.bimodule(a)?)),
            None => Ok(("adjoint".into(), Bimodule::adjoint(a)?)),
        },
        Some("adjoint") => Ok(("adjoint".into(), Bimodule::adjoint(a)?)),
        Some("coadjoint") => Ok(("coadjoint".into(), coadjoint(a)?)),
        Some("trivial") => Ok(("trivial".into(), Bimodule::trivial(a, 1)?)),
        Some("zero") => Ok(("zero".into(), Bimodule::trivial(a, 0)?)),
        Some(path) => {
            let mf: ModuleFile = read_toml(Path::new(path))?;
            Ok((path.to_string(), mf.bimodule(a)?))
        }
    }
}

fn cohomology_report(title: String, r: &CohomologyReport) -> Report {
    let mut human = format!(
        "{title}\n{:>3} {:>8} {:>8} {:>8} {:>8}\n",
        "k", "dim C", "dim Z", "dim B", "dim H"
    );
    for d in &r.degrees {
        let _ = writeln!(
            human,
            "{:>3} {:>8} {:>8} {:>8} {:>8}",
            d.degree, d.cochains, d.cocycles, d.coboundaries, d.cohomology
        );
    }
    let _ = writeln!(human, "d∘d = 0: {}", mark(r.d_squared_zero));
    Report {
        human,
        machine: json!({
            "theory": r.theory.name(),
            "degrees": r.degrees,
            "d_squared_zero": r.d_squared_zero,
        }),
        passed: r.d_squared_zero,
    }
}

pub fn cmd_cohomology(
    source: &str,
    theory: &str,
    module: Option<&str>,
    degrees: &str,
    form: Option<&str>,
) -> Result<Report> {
    let theory: Theory = theory.parse()?;
    let range = parse_degrees(degrees)?;
    let loaded = load_algebra(source)?;
    if let Err(r) = verified(&loaded)? {
        return Ok(r);
    }
    let a = &loaded.algebra;
    if theory == Theory::Pinczon {
        let b = form_for(&loaded, form)?;
        let flavor = match a.kind() {
            AlgebraKind::Lie => Flavor::Symmetric,
            AlgebraKind::Associative | AlgebraKind::Commutative => Flavor::Tensor,
            AlgebraKind::Prelie => return Err(Error::Unsupported("Pinczon cohomology of pre-Lie structures".into())),
        };
        let omega = omega_of(&a.shifted_map(), &b)?;
        let r = pinczon_cohomology_dims(&omega, &b, flavor, range)?;
        return Ok(cohomology_report(
            format!("pinczon cohomology of {} (graded by form arity)", loaded.name),
            &r,
        ));
    }
    let (mname, m) = module_for(&loaded, module)?;
    let r = cohomology_dims(theory, &m, range)?;
    Ok(cohomology_report(
        format!("{theory} cohomology of {} with coefficients in {mname}", loaded.name),
        &r,
    ))
}

pub fn cmd_double(source: &str, module: Option<&str>) -> Result<Report> {
    let loaded = load_algebra(source)?;
    if let Err(r) = verified(&loaded)? {
        return Ok(r);
    }
    let (_, m) = module_for(&loaded, module)?;
    let d = double_product(&m)?;
    let file = AlgebraFile::from_algebra(&format!("double({})", loaded.name), d.algebra());
    let human = file.to_toml();
    let machine = serde_json::to_value(&file).expect("algebra files serialize");
    Ok(Report {
        human,
        machine,
        passed: true,
    })
}

fn load_cochain(source: &str, a: &AlgebraStructure) -> Result<Cochain> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let c = builtin_cochain(name).ok_or_else(|| Error::Input(format!("unknown built-in cochain `{name}`")))?;
        if c.source().dim() != a.dim() {
            return Err(Error::Input(format!(
                "{name} lives on M2, not on a {}-dimensional algebra",
                a.dim()
            )));
        }
        let entries = c.entries().map(|(k, v)| (k[..2].to_vec(), k[2], v.clone()));
        return Cochain::from_entries(a.space(), a.space(), 2, entries);
    }
    let file: CochainFile = read_toml(Path::new(source))?;
    file.cochain(a.space(), a.space())
}

fn entries_json(c: &Cochain) -> Vec<Value> {
    c.entries()
        .map(|(k, v)| {
            let n = k.len() - 1;
            json!({"args": &k[..n], "out": k[n], "value": v.to_string()})
        })
        .collect()
}

pub fn cmd_deform(source: &str, cochain: &str) -> Result<Report> {
    let loaded = load_algebra(source)?;
    if let Err(r) = verified(&loaded)? {
        return Ok(r);
    }
    let a = &loaded.algebra;
    let space = a.space();
    let c = load_cochain(cochain, a)?;
    let v = deformation_check(a, &c)?;
    let (label, passed) = match v.verdict {
        DeformationKind::NotOrderOne => ("not an order-1 structure", false),
        DeformationKind::Trivial => ("trivial deformation", true),
        DeformationKind::TrueDeformation => ("true deformation at order 1", true),
    };
    let mut human = format!("{} + t·c over K[t]/(t²): {label}\n", loaded.name);
    let mut machine = json!({"verdict": v.verdict, "passed": passed});
    if let Some(w) = &v.witness {
        let _ = writeln!(human, "  {}", witness_text(w, space));
        machine["witness"] = witness_json(w, space);
    }
    match &v.primitive {
        Some(Primitive::Found(x)) => {
            let _ = writeln!(human, "  c = d x with x:");
            for (k, val) in x.entries() {
                let _ = writeln!(
                    human,
                    "    x({}) has {val} on {}",
                    names(space, &k[..1]),
                    space.name(k[1])
                );
            }
            machine["primitive"] = json!(entries_json(x));
        }
        Some(Primitive::Obstructed { functional, value }) => {
            let _ = writeln!(
                human,
                "  certificate: a functional vanishing on all coboundaries takes {value} on c:"
            );
            for (k, x) in functional {
                let n = k.len() - 1;
                let _ = writeln!(human, "    {x} · c({})[{}]", names(space, &k[..n]), space.name(k[n]));
            }
            machine["certificate"] = json!({
                "value": value.to_string(),
                "functional": functional
                    .iter()
                    .map(|(k, x)| json!({"key": k, "coefficient": x.to_string()}))
                    .collect::<Vec<_>>(),
            });
        }
        None => {}
    }
    Ok(Report { human, machine, passed })
}

pub fn list_builtins() -> Report {
    let mut human = String::new();
    for (name, about) in BUILTINS {
        let _ = writeln!(human, "{name:<10} {about}");
    }
    let machine = json!(BUILTINS
        .iter()
        .map(|(n, d)| json!({"name": n, "description": d}))
        .collect::<Vec<_>>());
    Report {
        human,
        machine,
        passed: true,
    }
}
