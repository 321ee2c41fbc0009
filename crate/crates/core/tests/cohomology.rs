mod common;

use common::{random_combination, rng};
use pinczon::bisym::{omega_of_prelie, BiSymForm};
use pinczon::builtins::*;
use pinczon::cochain::Cochain;
use pinczon::coderiv::{is_b_quadratic, omega_of, Flavor};
use pinczon::cohomology::*;
use pinczon::graded::{tuples, GradedSpace};
use pinczon::linalg;
use pinczon::structures::*;
use pinczon::{Error, Scalar};

fn cases() -> Vec<(AlgebraStructure, Theory)> {
    vec![
        (m2(), Theory::Hochschild),
        (gl2(), Theory::Chevalley),
        (sl2(), Theory::Chevalley),
        (kx2(), Theory::Harrison),
        (kx2(), Theory::Hochschild),
        (m2_prelie(), Theory::Prelie),
    ]
}

fn modules(a: &AlgebraStructure) -> Vec<Bimodule> {
    let adj = Bimodule::adjoint(a).unwrap();
    let dual = dual_module(&adj).unwrap();
    vec![adj, dual, Bimodule::trivial(a, 2).unwrap()]
}

#[test]
fn two_definitions_agree() {
    let mut r = rng(11);
    for (a, theory) in cases() {
        for m in modules(&a) {
            for k in 0..=3 {
                let basis = cochain_basis(theory, k, &m).unwrap().cochains;
                for _ in 0..4 {
                    let Some(c) = random_combination(&basis, &mut r) else {
                        continue;
                    };
                    let primary = coboundary(theory, &c, &m).unwrap();
                    let other = coboundary_alternative(theory, &c, &m).unwrap();
                    assert_eq!(primary, other, "{theory} k={k}");
                }
            }
        }
    }
}

#[test]
fn coboundaries_square_to_zero() {
    let mut r = rng(12);
    for (a, theory) in cases() {
        for m in modules(&a) {
            for k in 0..=2 {
                let basis = cochain_basis(theory, k, &m).unwrap().cochains;
                for _ in 0..4 {
                    let Some(c) = random_combination(&basis, &mut r) else {
                        continue;
                    };
                    let dc = coboundary(theory, &c, &m).unwrap();
                    assert!(coboundary(theory, &dc, &m).unwrap().is_zero(), "{theory} k={k}");
                }
            }
        }
    }
}

#[test]
fn low_degree_formulas() {
    let a = m2();
    let m = Bimodule::adjoint(&a).unwrap();
    // a 0-cochain is an element of M: x ↦ x·m − m·x
    let e12 = Cochain::from_entries(a.space(), a.space(), 0, [(vec![], 1, Scalar::one())]).unwrap();
    let d = d_hochschild(&e12, &m).unwrap();
    for x in 0..4 {
        let mut expected = a.product(x, 1).to_vec();
        for (v, w) in expected.iter_mut().zip(a.product(1, x)) {
            *v -= w;
        }
        assert_eq!(d.value(&[x]), expected);
    }
    let g = gl2();
    let mg = Bimodule::adjoint(&g).unwrap();
    let d = d_chevalley(&e12, &mg).unwrap();
    for x in 0..4 {
        assert_eq!(d.value(&[x]), g.product(x, 1).to_vec());
    }
}

fn matrix(v: &[Scalar]) -> Vec<Vec<Scalar>> {
    vec![v[..2].to_vec(), v[2..].to_vec()]
}

fn flatten(m: &[Vec<Scalar>]) -> Vec<Scalar> {
    m.iter().flatten().cloned().collect()
}

fn tr(x: usize) -> Scalar {
    Scalar::from_int((x == 0 || x == 3) as i64)
}

#[test]
fn trace_projection_and_c_a() {
    let a = m2();
    let m = Bimodule::adjoint(&a).unwrap();
    let f = trace_projection(2);
    let df = d_hochschild(&f, &m).unwrap();
    let half = Scalar::ratio(1, 2);
    for x in 0..4 {
        for y in 0..4 {
            // (1/2)(tr(y) x − tr(xy) id + tr(x) y)
            let mut expected = vec![Scalar::zero(); 4];
            expected[x] += &half * &tr(y);
            expected[y] += &half * &tr(x);
            let trxy = a.product(x, y)[0].clone() + a.product(x, y)[3].clone();
            expected[0] -= &half * &trxy;
            expected[3] -= &half * &trxy;
            assert_eq!(df.value(&[x, y]), expected);
        }
    }
    let e12 = elementary(2, 0, 1);
    let ca = c_a(2, &e12);
    let dca = d_hochschild(&ca, &m).unwrap();
    let bracket = |z: usize| {
        let zm = matrix(pinczon::graded::Vector::basis(4, z).coeffs());
        let p = linalg::mat_mul(&zm, &e12);
        let q = linalg::mat_mul(&e12, &zm);
        p.iter()
            .zip(&q)
            .map(|(r, s)| r.iter().zip(s).map(|(u, v)| u - v).collect())
            .collect::<Vec<Vec<Scalar>>>()
    };
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                let expected = flatten(&linalg::mat_mul(&matrix(&df.value(&[x, y])), &bracket(z)));
                assert_eq!(dca.value(&[x, y, z]), expected);
            }
        }
    }
    // at (e12, e21, z) the factorization gives −(1/2)[z, a]
    for z in 0..4 {
        let expected: Vec<Scalar> = flatten(&bracket(z)).into_iter().map(|v| -(&half * &v)).collect();
        assert_eq!(dca.value(&[1, 2, z]), expected);
    }
    let mp = Bimodule::adjoint(&m2_prelie()).unwrap();
    assert!(d_prelie(&ca, &mp).unwrap().is_zero());
}

#[test]
fn basis_dimensions() {
    let dim =
        |a: &AlgebraStructure, t: Theory, k: usize| cochain_basis(t, k, &Bimodule::adjoint(a).unwrap()).unwrap().len();
    assert_eq!(dim(&m2(), Theory::Hochschild, 1), 16);
    assert_eq!(dim(&m2(), Theory::Hochschild, 2), 64);
    assert_eq!(dim(&gl2(), Theory::Chevalley, 2), 24);
    assert_eq!(dim(&m2_prelie(), Theory::Prelie, 0), 0);
    assert_eq!(dim(&m2_prelie(), Theory::Prelie, 2), 64);
    assert_eq!(dim(&m2_prelie(), Theory::Prelie, 3), 96);
    assert_eq!(dim(&kx2(), Theory::Harrison, 2), 6);
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Degree-`k` part of the free Lie superalgebra on `n` odd generators.
fn super_witt(n: usize, k: usize) -> usize {
    let total: i64 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| {
            let sign = if (k + k / d).is_multiple_of(2) { 1 } else { -1 };
            sign * mobius(d) * (n as i64).pow((k / d) as u32)
        })
        .sum();
    (total / k as i64) as usize
}

#[test]
fn harrison_basis_matches_free_lie_superalgebra() {
    for n in 1..=3 {
        let space = GradedSpace::ungraded(n);
        let a = AlgebraStructure::zero(space, AlgebraKind::Commutative);
        let m = Bimodule::trivial(&a, 1).unwrap();
        for k in 1..=4 {
            if n.pow(k as u32) > 81 {
                continue;
            }
            let basis = cochain_basis(Theory::Harrison, k, &m).unwrap();
            assert_eq!(basis.len(), super_witt(n, k), "n={n} k={k}");
            assert!(basis.cochains.iter().all(Cochain::is_harrison));
            let cols: Vec<_> = basis.cochains.iter().map(Cochain::to_sparse).collect();
            assert_eq!(linalg::sparse_rank(&cols), basis.len());
        }
    }
}

#[test]
fn harrison_rejects_and_preserves() {
    let a = kx2();
    let m = Bimodule::adjoint(&a).unwrap();
    let plain = Cochain::from_entries(a.space(), a.space(), 2, [(vec![0, 1], 0, Scalar::one())]).unwrap();
    assert!(matches!(d_harrison(&plain, &m), Err(Error::NotVsp(_))));
    let one = Cochain::from_entries(a.space(), a.space(), 1, [(vec![1], 0, Scalar::one())]).unwrap();
    assert_eq!(d_harrison(&one, &m).unwrap(), d_hochschild(&one, &m).unwrap());
    assert!(matches!(
        d_chevalley(&plain, &Bimodule::adjoint(&gl2()).unwrap()),
        Err(Error::Input(_))
    ));
}

fn betti(a: &AlgebraStructure, m: &Bimodule, t: Theory, hi: usize) -> Vec<usize> {
    let _ = a;
    let r = cohomology_dims(t, m, 0..=hi).unwrap();
    assert!(r.d_squared_zero);
    for d in &r.degrees {
        assert_eq!(d.cochains, cochain_basis(t, d.degree, m).unwrap().len());
        assert!(d.coboundaries <= d.cocycles);
    }
    r.betti()
}

#[test]
fn cohomology_of_builtins() {
    let a = m2();
    let mods = modules(&a);
    assert_eq!(betti(&a, &mods[0], Theory::Hochschild, 2), vec![1, 0, 0]);
    assert_eq!(betti(&a, &mods[1], Theory::Hochschild, 2), vec![1, 0, 0]);
    let g = gl2();
    assert_eq!(
        betti(&g, &Bimodule::adjoint(&g).unwrap(), Theory::Chevalley, 2),
        vec![1, 1, 0]
    );
    let s = sl2();
    assert_eq!(
        betti(&s, &Bimodule::adjoint(&s).unwrap(), Theory::Chevalley, 3),
        vec![0, 0, 0, 0]
    );
    let k = kx2();
    let mk = Bimodule::adjoint(&k).unwrap();
    assert_eq!(betti(&k, &mk, Theory::Harrison, 3), vec![2, 1, 1, 0]);
    assert_eq!(betti(&k, &mk, Theory::Hochschild, 3), vec![2, 1, 1, 1]);
    let p = m2_prelie();
    assert_eq!(
        betti(&p, &Bimodule::adjoint(&p).unwrap(), Theory::Prelie, 2),
        vec![0, 3, 3]
    );
}

#[test]
fn theory_kind_mismatch() {
    let m = Bimodule::adjoint(&m2()).unwrap();
    assert!(cohomology_dims(Theory::Chevalley, &m, 0..=1).is_err());
    assert!(cochain_basis(Theory::Prelie, 1, &m).is_err());
    assert_eq!("pre-lie".parse::<Theory>().unwrap(), Theory::Prelie);
    assert!("de rham".parse::<Theory>().is_err());
}

#[test]
fn coboundaries_are_solvable() {
    let mut r = rng(13);
    for (a, theory) in cases() {
        let m = Bimodule::adjoint(&a).unwrap();
        for k in 0..=2 {
            let basis = cochain_basis(theory, k, &m).unwrap().cochains;
            let Some(x) = random_combination(&basis, &mut r) else {
                continue;
            };
            let target = coboundary(theory, &x, &m).unwrap();
            match solve_coboundary(theory, &target, &m).unwrap() {
                Primitive::Found(p) => assert_eq!(coboundary(theory, &p, &m).unwrap(), target),
                other => panic!("{theory} k={k}: {other:?}"),
            }
        }
    }
}

#[test]
fn c_a_is_a_prelie_class() {
    let p = m2_prelie();
    let m = Bimodule::adjoint(&p).unwrap();
    let ca = c_a(2, &elementary(2, 0, 1));
    let Primitive::Obstructed { functional, value } = solve_coboundary(Theory::Prelie, &ca, &m).unwrap() else {
        panic!("c_a is a coboundary");
    };
    assert!(!value.is_zero());
    assert_eq!(apply_functional(&functional, &ca), value);
    for b in cochain_basis(Theory::Prelie, 1, &m).unwrap().cochains {
        let db = d_prelie(&b, &m).unwrap();
        assert!(apply_functional(&functional, &db).is_zero());
    }
    let mh = Bimodule::adjoint(&m2()).unwrap();
    assert!(matches!(
        solve_coboundary(Theory::Hochschild, &ca, &mh),
        Err(Error::NotCocycle(_))
    ));
    let (_, _, v) = cocycle_defect(Theory::Hochschild, &ca, &mh).unwrap().unwrap();
    assert!(!v.is_zero());
}

#[test]
fn trace_class_of_gl2() {
    let g = gl2();
    let m = Bimodule::adjoint(&g).unwrap();
    let f = trace_projection(2);
    assert!(d_chevalley(&f, &m).unwrap().is_zero());
    assert!(!solve_coboundary(Theory::Chevalley, &f, &m).unwrap().is_found());
}

#[test]
fn deformation_verdicts() {
    let ca = c_a(2, &elementary(2, 0, 1));
    let v = deformation_check(&m2_prelie(), &ca).unwrap();
    assert_eq!(v.verdict, DeformationKind::TrueDeformation);
    let v = deformation_check(&m2(), &ca).unwrap();
    assert_eq!(v.verdict, DeformationKind::NotOrderOne);
    assert!(v.witness.is_some());
    let a = m2();
    let m = Bimodule::adjoint(&a).unwrap();
    let x = Cochain::from_entries(
        a.space(),
        a.space(),
        1,
        [(vec![1], 2, Scalar::one()), (vec![0], 0, Scalar::from_int(3))],
    )
    .unwrap();
    let dx = d_hochschild(&x, &m).unwrap();
    assert_eq!(deformation_check(&a, &dx).unwrap().verdict, DeformationKind::Trivial);
    // rigidity: every 2-cocycle is a coboundary
    let basis = cochain_basis(Theory::Hochschild, 2, &m).unwrap().cochains;
    let images: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|c| {
            let d = d_hochschild(c, &m).unwrap();
            let keys: Vec<Vec<usize>> = Cochain::ambient_keys(4, 4, 3).collect();
            keys.iter().map(|k| d.get(&k[..3], k[3])).collect()
        })
        .collect();
    let cocycles = linalg::nullspace(&linalg::transpose(&images), basis.len());
    assert_eq!(cocycles.len(), 13);
    for z in cocycles {
        let mut c = Cochain::zero(a.space(), a.space(), 2);
        for (coef, b) in z.iter().zip(&basis) {
            c = c.add(&b.scale(coef)).unwrap();
        }
        assert_ne!(
            deformation_check(&a, &c).unwrap().verdict,
            DeformationKind::TrueDeformation
        );
        assert!(solve_coboundary(Theory::Hochschild, &c, &m).unwrap().is_found());
    }
}

#[test]
fn pinczon_complexes() {
    let mut r = rng(14);
    for (a, flavor, expected) in [
        (m2(), Flavor::Tensor, vec![1, 1, 0, 1, 0]),
        (gl2(), Flavor::Symmetric, vec![1, 1, 0, 1, 1]),
        (kx2(), Flavor::Tensor, vec![1, 2, 0, 2, 0]),
    ] {
        let b = a.form().unwrap();
        let omega = omega_of(&a.shifted_map(), b).unwrap();
        assert!(d_pinczon_flavored(&omega, &omega, b, flavor).unwrap().is_zero());
        let rep = pinczon_cohomology_dims(&omega, b, flavor, 0..=4).unwrap();
        assert!(rep.d_squared_zero);
        assert_eq!(rep.betti(), expected);
        if flavor == Flavor::Tensor {
            for arity in 1..=3 {
                let l = common::random_cyclic(a.space(), arity, &mut r);
                let dl = d_pinczon(&l, &omega, b).unwrap();
                assert!(dl.is_cyclic());
                assert!(d_pinczon(&dl, &omega, b).unwrap().is_zero());
            }
        }
    }
    let g = gl2();
    let lie = omega_of(&g.shifted_map(), g.form().unwrap()).unwrap();
    assert!(pinczon_cohomology_dims(&lie, g.form().unwrap(), Flavor::Tensor, 0..=1).is_err());
    assert!(pinczon_cohomology_dims(&lie, g.form().unwrap(), Flavor::Prelie, 0..=1).is_err());
}

#[test]
fn bisym_coboundary_squares_to_zero() {
    let mut r = rng(15);
    let v = vvstar();
    let b = v.form().unwrap();
    let phi = omega_of_prelie(&v.shifted_map(), b).unwrap();
    assert!(d_pinczon_bisym(&phi, &phi, b).unwrap().is_zero());
    for k in 0..=1 {
        let f = common::random_form(v.space(), k + 2, &mut r, 0.05);
        let lambda = BiSymForm::project(&f).unwrap();
        let d = d_pinczon_bisym(&lambda, &phi, b).unwrap();
        assert!(d_pinczon_bisym(&d, &phi, b).unwrap().is_zero());
    }
}

#[test]
fn lifts_into_doubles() {
    let mut r = rng(16);
    for (a, theory) in [
        (m2(), Theory::Hochschild),
        (kx2(), Theory::Hochschild),
        (gl2(), Theory::Chevalley),
    ] {
        let m = Bimodule::adjoint(&a).unwrap();
        let d = double_product(&m).unwrap();
        let flavor = if theory == Theory::Chevalley {
            Flavor::Symmetric
        } else {
            Flavor::Tensor
        };
        for k in 0..=2 {
            let basis = if theory == Theory::Chevalley {
                cochain_basis(theory, k, &m).unwrap().cochains
            } else {
                let dm = m.dim();
                tuples(a.dim(), k)
                    .flat_map(|t| (0..dm).map(move |o| (t.clone(), o)))
                    .map(|(t, o)| Cochain::from_entries(a.space(), m.space(), k, [(t, o, Scalar::one())]).unwrap())
                    .collect()
            };
            for _ in 0..3 {
                let c = random_combination(&basis, &mut r).unwrap();
                let lifted = lift_cochain(&c, &d).unwrap();
                assert!(is_b_quadratic(&lifted, d.form(), flavor).unwrap());
                let cmp = compare_lift(&c, &m, &d).unwrap();
                let expected = if theory == Theory::Chevalley {
                    lie_lift_factor(k)
                } else {
                    Scalar::one()
                };
                match cmp.relation {
                    Proportionality::Factor(f) => assert_eq!(f, expected, "k={k}"),
                    Proportionality::BothZero => {}
                    Proportionality::NotProportional => panic!("k={k} not proportional"),
                }
            }
        }
        let zero = Cochain::zero(a.space(), m.space(), 2);
        assert!(lift_cochain(&zero, &d).unwrap().entries().next().is_none());
    }
    assert_eq!(lie_lift_factor(0), Scalar::from_int(4));
    assert_eq!(lie_lift_factor(3), Scalar::from_int(60));
}
