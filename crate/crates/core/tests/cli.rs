mod common;

use std::path::Path;
use std::process::Command as Process;

use pinczon::cli::files::{AlgebraFile, FormEntry, FormFile};
use pinczon::cli::{self, Format};
use pinczon::Scalar;
use rand::Rng;

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_pinczon"))
}

fn status(args: &[&str]) -> i32 {
    bin().args(args).output().unwrap().status.code().unwrap()
}

fn machine(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = bin().args(&full).output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_builtins() {
    assert_eq!(status(&["check", "builtin:M2", "--form", "trace"]), 0);
    let r = cli::cmd_check("builtin:M2-prelie", Some("trace")).unwrap();
    assert!(!r.passed);
    assert!(r.human.contains("invariance: FAIL"));
    assert_eq!(r.machine["form"]["invariance"]["witness"]["law"], "Invariance");
    assert_eq!(status(&["check", "builtin:M2-prelie", "--form", "trace"]), 1);
    for name in ["gl2", "sl2", "Kx2", "VVstar"] {
        let r = cli::cmd_check(&format!("builtin:{name}"), None).unwrap();
        assert!(r.passed, "{name}: {}", r.human);
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        "name = \"x\"\nkind = \"associative\"\ndimension = 2\nproduct = [[0, 0, 5, \"1\"]]\n",
    )
    .unwrap();
    assert_eq!(status(&["check", bad.to_str().unwrap()]), 2);
    std::fs::write(
        &bad,
        "name = \"x\"\nkind = \"associative\"\ndimension = 2\nextra = 1\nproduct = []\n",
    )
    .unwrap();
    let out = bin().args(["check", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown field `extra`"));
    std::fs::write(
        &bad,
        "name = \"x\"\nkind = \"associative\"\ndimension = 1\nproduct = [[0, 0, 0, \"1/0\"]]\n",
    )
    .unwrap();
    assert_eq!(status(&["check", bad.to_str().unwrap()]), 2);
    assert_eq!(status(&["check", "builtin:M3"]), 2);
    assert_eq!(status(&["cohomology", "builtin:M2", "--theory", "chevalley"]), 2);
    assert_eq!(
        status(&[
            "cohomology",
            "builtin:M2",
            "--theory",
            "hochschild",
            "--degrees",
            "2..1"
        ]),
        2
    );
    assert_eq!(status(&["frobnicate"]), 2);
}

#[test]
fn failing_identity_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a.toml");
    std::fs::write(
        &f,
        "name = \"x\"\nkind = \"associative\"\ndimension = 2\nproduct = [[0, 0, 1, \"1\"], [1, 0, 0, \"1\"]]\n",
    )
    .unwrap();
    let out = bin().args(["check", f.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("Associativity fails"));
}

fn betti(v: &serde_json::Value) -> Vec<u64> {
    v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["cohomology"].as_u64().unwrap())
        .collect()
}

#[test]
fn cohomology_reports() {
    let m2 = machine(&[
        "cohomology",
        "builtin:M2",
        "--theory",
        "hochschild",
        "--module",
        "adjoint",
        "--degrees",
        "0..2",
    ]);
    assert_eq!(betti(&m2), vec![1, 0, 0]);
    let gl2 = machine(&[
        "cohomology",
        "builtin:gl2",
        "--theory",
        "chevalley",
        "--module",
        "adjoint",
        "--degrees",
        "0..2",
    ]);
    assert_eq!(betti(&gl2), vec![1, 1, 0]);
    let pl = machine(&[
        "cohomology",
        "builtin:M2-prelie",
        "--theory",
        "prelie",
        "--degrees",
        "2..2",
    ]);
    assert!(betti(&pl)[0] >= 1);
    let kx = machine(&["cohomology", "builtin:Kx2", "--theory", "harrison", "--degrees", "0..3"]);
    assert_eq!(betti(&kx), vec![2, 1, 1, 0]);
    let p = machine(&["cohomology", "builtin:M2", "--theory", "pinczon", "--degrees", "0..3"]);
    assert_eq!(betti(&p), vec![1, 1, 0, 1]);
}

#[test]
fn machine_reports_are_deterministic() {
    let args = [
        "--format",
        "machine",
        "cohomology",
        "builtin:gl2",
        "--theory",
        "chevalley",
    ];
    let a = bin().args(args).output().unwrap().stdout;
    let b = bin().args(args).output().unwrap().stdout;
    assert_eq!(a, b);
    let a = cli::cmd_check("builtin:VVstar", None).unwrap().render(Format::Machine);
    let b = cli::cmd_check("builtin:VVstar", None).unwrap().render(Format::Machine);
    assert_eq!(a, b);
}

#[test]
fn doubles_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, module, dim) in [
        ("M2", "adjoint", 16),
        ("gl2", "adjoint", 16),
        ("M2", "zero", 8),
        ("Kx2", "adjoint", 8),
    ] {
        let out = dir.path().join(format!("{name}-{module}.toml"));
        let o = out.to_str().unwrap();
        assert_eq!(
            status(&["double", &format!("builtin:{name}"), "--module", module, "--out", o]),
            0
        );
        let file: AlgebraFile = toml::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(file.dimension, dim);
        let r = cli::cmd_check(o, None).unwrap();
        assert!(r.passed, "{}", r.human);
        let again = AlgebraFile::from_algebra(&file.name, &file.algebra().unwrap());
        assert_eq!(again, file);
    }
}

#[test]
fn deformations() {
    let r = cli::cmd_deform("builtin:M2-prelie", "builtin:c_a(e12)").unwrap();
    assert!(r.passed);
    assert_eq!(r.machine["verdict"], "true-deformation");
    assert!(r.machine["certificate"]["value"].as_str().is_some());
    let r = cli::cmd_deform("builtin:M2", "builtin:c_a(e12)").unwrap();
    assert!(!r.passed);
    assert_eq!(r.machine["verdict"], "not-order-one");
    assert!(r.machine["witness"]["args"].as_array().unwrap().len() == 3);
    // d x for x(e12) = e21 is a coboundary
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c.toml");
    let a = pinczon::builtins::m2();
    let m = pinczon::structures::Bimodule::adjoint(&a).unwrap();
    let x = pinczon::cochain::Cochain::from_entries(a.space(), a.space(), 1, [(vec![1], 2, Scalar::one())]).unwrap();
    let dx = pinczon::cohomology::d_hochschild(&x, &m).unwrap();
    let mut text = String::from("dimension = 4\narity = 2\n");
    for (k, v) in dx.entries() {
        text.push_str(&format!(
            "[[entries]]\nargs = [{}, {}]\nout = {}\nvalue = \"{v}\"\n",
            k[0], k[1], k[2]
        ));
    }
    std::fs::write(&f, text).unwrap();
    let r = cli::cmd_deform("builtin:M2", f.to_str().unwrap()).unwrap();
    assert_eq!(r.machine["verdict"], "trivial");
    assert!(r.machine["primitive"].as_array().is_some());
    assert_eq!(status(&["deform", "builtin:M2", "builtin:c_a(e13)"]), 2);
}

fn write_form(path: &Path, dim: usize, m: &[Vec<Scalar>]) {
    let file = FormFile {
        name: None,
        dimension: dim,
        degrees: None,
        arity: 2,
        entries: (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .map(|(i, j)| FormEntry {
                args: vec![i, j],
                value: m[i][j].to_string(),
            })
            .collect(),
    };
    std::fs::write(path, toml::to_string(&file).unwrap()).unwrap();
}

fn random_skew(dim: usize, r: &mut impl Rng) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let v = common::small(r);
            m[j][i] = -v.clone();
            m[i][j] = v;
        }
    }
    m
}

/// Σ_i ι_{e_i}A ⊙ ι_{e_i}C for 2-forms on odd letters with b = I: the
/// contraction carries `−1`, the swap another `−1`, so the result is
/// `CᵀA − AᵀC`, the commutator `AC − CA` of skew matrices.
fn dense_bracket(a: &[Vec<Scalar>], c: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for x in 0..n {
        for y in 0..n {
            for i in 0..n {
                out[x][y] -= &a[i][x] * &c[i][y];
                out[x][y] += &a[i][y] * &c[i][x];
            }
        }
    }
    out
}

#[test]
fn bracket_of_two_forms_matches_dense_expansion() {
    let mut r = common::rng(21);
    let dir = tempfile::tempdir().unwrap();
    for dim in [2, 3] {
        for _ in 0..5 {
            let (a, c) = (random_skew(dim, &mut r), random_skew(dim, &mut r));
            let (pa, pc) = (dir.path().join("a.toml"), dir.path().join("c.toml"));
            write_form(&pa, dim, &a);
            write_form(&pc, dim, &c);
            let rep = cli::cmd_bracket(
                pa.to_str().unwrap(),
                pc.to_str().unwrap(),
                Some("identity"),
                cli::BracketFlavor::Tensor,
            )
            .unwrap();
            let expected = dense_bracket(&a, &c);
            let mut got = vec![vec![Scalar::zero(); dim]; dim];
            for e in rep.machine["coefficients"].as_array().unwrap() {
                let args: Vec<usize> = e["args"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap() as usize)
                    .collect();
                got[args[0]][args[1]] = e["value"].as_str().unwrap().parse().unwrap();
            }
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn brackets_with_structure_forms() {
    let r = cli::cmd_bracket("builtin:M2", "builtin:M2", None, cli::BracketFlavor::Tensor).unwrap();
    assert_eq!(r.machine["zero"], true);
    let r = cli::cmd_bracket("builtin:gl2", "builtin:gl2", None, cli::BracketFlavor::Symmetric).unwrap();
    assert_eq!(r.machine["zero"], true);
    let r = cli::cmd_bracket("builtin:VVstar", "builtin:VVstar", None, cli::BracketFlavor::Prelie).unwrap();
    assert_eq!(r.machine["zero"], true);
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("const.toml");
    std::fs::write(
        &zero,
        "dimension = 4\narity = 0\n[[entries]]\nargs = []\nvalue = \"5\"\n",
    )
    .unwrap();
    let r = cli::cmd_bracket("builtin:M2", zero.to_str().unwrap(), None, cli::BracketFlavor::Tensor).unwrap();
    assert_eq!(r.machine["zero"], true);
}

#[test]
fn list_and_help() {
    let out = bin().arg("list-builtins").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["M2", "M2-prelie", "gl2", "sl2", "Kx2", "VVstar", "c_a"] {
        assert!(text.contains(name));
    }
    assert_eq!(status(&["--help"]), 0);
}
