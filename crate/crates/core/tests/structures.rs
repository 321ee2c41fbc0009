mod common;

use pinczon::bilinear::{trace_form_matrix, trace_product_matrix, validate_form, BilinearForm};
use pinczon::builtins::*;
use pinczon::coderiv::{is_b_quadratic, Flavor};
use pinczon::coefficient::DualNumber;
use pinczon::graded::GradedSpace;
use pinczon::structures::*;
use pinczon::{Error, Scalar};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn check_all(a: &AlgebraStructure) {
    let r = verify_identity(a).unwrap();
    assert!(r.holds, "{:?}", r.witness);
    assert!(r.agrees(), "{r:?}");
}

#[test]
fn builtin_identities_hold() {
    for a in [m2(), m2_prelie(), gl2(), sl2(), kx2(), vvstar(), gl(3)] {
        check_all(&a);
    }
}

#[test]
fn identity_failures_agree_with_structure_equation() {
    let sp = GradedSpace::ungraded(2);
    // e0 e0 = e1, e1 e0 = e0: not associative
    let t = vec![(0, 0, 1, s(1)), (1, 0, 0, s(1))];
    for kind in [AlgebraKind::Associative, AlgebraKind::Prelie] {
        let a = AlgebraStructure::new_unchecked(sp.clone(), kind, table(&sp, &t)).unwrap();
        let r = verify_identity(&a).unwrap();
        assert!(!r.holds);
        assert!(r.agrees(), "{r:?}");
    }
    // M_2 is not commutative, and its product is not a Lie bracket
    for kind in [AlgebraKind::Commutative, AlgebraKind::Lie] {
        let a = AlgebraStructure::new_unchecked(m2().space().clone(), kind, m2().table().clone()).unwrap();
        let r = verify_identity(&a).unwrap();
        assert!(!r.holds);
        assert!(r.agrees(), "{r:?}");
    }
    assert!(matches!(
        AlgebraStructure::from_entries(sp, AlgebraKind::Associative, t),
        Err(Error::InvalidStructure(_))
    ));
}

fn table(sp: &GradedSpace, entries: &[(usize, usize, usize, Scalar)]) -> Table<Scalar> {
    let n = sp.dim();
    let mut t = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, j, k, c) in entries {
        t[*i][*j][*k] += c;
    }
    t
}

#[test]
fn graded_examples() {
    // exterior algebra on one odd generator
    let sp = GradedSpace::with_degrees(vec![0, 1]);
    let ext = AlgebraStructure::from_entries(
        sp.clone(),
        AlgebraKind::Commutative,
        vec![(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1))],
    )
    .unwrap();
    check_all(&ext);
    // [x, x] = y with |x| = 1, |y| = 2
    let sp = GradedSpace::with_degrees(vec![1, 2]);
    let lie = AlgebraStructure::from_entries(sp.clone(), AlgebraKind::Lie, vec![(0, 0, 1, s(1))]).unwrap();
    check_all(&lie);
    // the same constants on even x violate antisymmetry
    let even = AlgebraStructure::new_unchecked(
        GradedSpace::with_degrees(vec![0, 0]),
        AlgebraKind::Lie,
        lie.table().clone(),
    )
    .unwrap();
    let r = verify_identity(&even).unwrap();
    assert!(r.agrees());
    assert_eq!(r.witness.unwrap().law, Law::Antisymmetry);
    // degree-violating constants
    let bad = AlgebraStructure::new_unchecked(
        sp,
        AlgebraKind::Associative,
        table(&GradedSpace::ungraded(2), &[(0, 1, 1, s(1))]),
    )
    .unwrap();
    assert_eq!(verify_identity(&bad).unwrap().witness.unwrap().law, Law::Homogeneity);
}

#[test]
fn invariance_examples() {
    let m = m2();
    let r = verify_invariance(&m, m.form().unwrap()).unwrap();
    assert!(r.holds && r.agrees());

    let g = gl2();
    let tf = trace_form_matrix(2);
    let tp = trace_product_matrix(2);
    let sum: Vec<Vec<Scalar>> = tf
        .iter()
        .zip(&tp)
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
        .collect();
    let b = BilinearForm::new(g.space().clone(), sum).unwrap();
    let r = verify_invariance(&g, &b).unwrap();
    assert!(r.holds && r.agrees());

    let p = m2_prelie();
    let r = verify_invariance(&p, p.form().unwrap()).unwrap();
    assert!(!r.holds && r.agrees());
    assert_eq!(r.witness.unwrap().law, Law::Invariance);

    let v = vvstar();
    let r = verify_invariance(&v, v.form().unwrap()).unwrap();
    assert!(r.holds && r.agrees(), "{r:?}");

    for a in [sl2(), kx2()] {
        let r = verify_invariance(&a, a.form().unwrap()).unwrap();
        assert!(r.holds && r.agrees(), "{r:?}");
    }
    let kx = kx2();
    assert!(is_b_quadratic(&kx.shifted_map(), kx.form().unwrap(), Flavor::Tensor).unwrap());
    assert!(kx.shifted_map().is_vsp());
}

#[test]
fn invariant_form_dimensions() {
    let assoc = invariant_form_space(&m2());
    assert_eq!(assoc.basis.len(), 1);
    assert!(assoc.samples.iter().all(|p| p.nondegenerate));
    let lie = invariant_form_space(&gl2());
    assert_eq!(lie.basis.len(), 2);
    assert!(lie.samples.iter().any(|p| !p.nondegenerate));
    assert!(invariant_form_space(&m2_prelie()).basis.is_empty());
    assert_eq!(invariant_form_space(&sl2()).basis.len(), 1);
}

#[test]
fn trace_pencil_locus() {
    let pts: Vec<(Scalar, Scalar)> = [(1, 0), (0, 1), (2, -1), (1, 1), (3, 2), (-2, 1), (1, -1)]
        .iter()
        .map(|&(a, b)| (s(a), s(b)))
        .collect();
    let samples = trace_pencil(2, &pts);
    assert!(samples.iter().all(|p| p.consistent()));
    assert_eq!(samples.iter().filter(|p| p.on_locus).count(), 3);
}

#[test]
fn modules_and_duals() {
    for a in [m2(), m2_prelie(), gl2(), kx2()] {
        let adj = Bimodule::adjoint(&a).unwrap();
        let dual = dual_module(&adj).unwrap();
        check_all(&semidirect_product(&adj).unwrap());
        check_all(&semidirect_product(&dual).unwrap());
        let zero = Bimodule::trivial(&a, 2).unwrap();
        let w = semidirect_product(&zero).unwrap();
        check_all(&w);
        assert_eq!(w.dim(), a.dim() + 2);
    }
    // the pre-Lie dual action is (x·f)(y) = -f(xy), with no right action
    let p = m2_prelie();
    let dual = coadjoint(&p).unwrap();
    for i in 0..4 {
        for f in 0..4 {
            for y in 0..4 {
                assert_eq!(dual.left(i, f)[y], -p.product(i, y)[f].clone());
                assert!(dual.right(f, i).iter().all(|v| v.is_zero()));
            }
        }
    }
    // the zero algebra has zero dual actions
    let z = AlgebraStructure::zero(GradedSpace::ungraded(2), AlgebraKind::Associative);
    let d = coadjoint(&z).unwrap();
    assert!(d.left_table().iter().flatten().flatten().all(|v| v.is_zero()));
}

#[test]
fn module_axioms_are_checked() {
    let a = m2();
    // e_11 acting by the identity, everything else by zero
    let left: Vec<(usize, usize, usize, Scalar)> = (0..2).map(|p| (0, p, p, s(1))).collect();
    let r = Bimodule::from_entries(&a, GradedSpace::ungraded(2), left, None);
    assert!(matches!(r, Err(Error::ModuleAxiom(_))), "{r:?}");
}

#[test]
fn doubles_are_quadratic() {
    for (a, dim) in [(m2(), 16), (gl2(), 16), (kx2(), 8)] {
        let d = double_product(&Bimodule::adjoint(&a).unwrap()).unwrap();
        let alg = d.algebra();
        assert_eq!(alg.dim(), dim);
        check_all(alg);
        let r = verify_invariance(alg, d.form()).unwrap();
        assert!(r.holds && r.agrees());
        assert!(validate_form(d.form()).is_valid());
    }
    let z = double_product(&Bimodule::trivial(&m2(), 0).unwrap()).unwrap();
    assert_eq!(z.algebra().dim(), 8);
    assert!(matches!(
        double_product(&Bimodule::adjoint(&m2_prelie()).unwrap()),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn dual_number_deformation_identity() {
    let p = m2_prelie();
    let c = c_a(2, &elementary(2, 0, 1));
    let n = p.dim();
    let mut t = vec![vec![vec![DualNumber::new(Scalar::zero(), Scalar::zero()); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t[i][j][k] = DualNumber::new(p.product(i, j)[k].clone(), c.get(&[i, j], k));
            }
        }
    }
    assert!(identity_witness(p.space(), AlgebraKind::Prelie, &t).is_none());
    assert!(identity_witness(p.space(), AlgebraKind::Associative, &t).is_some());
}
