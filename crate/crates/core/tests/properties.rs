mod common;

use common::*;
use pinczon::builtins::*;
use pinczon::coderiv::{bracket_tensor, is_b_quadratic, omega_of, Flavor, MultiMap};
use pinczon::cohomology::*;
use pinczon::forms::{pinczon_bracket, MultiForm};
use pinczon::graded::Perm;
use pinczon::structures::Bimodule;
use pinczon::Scalar;
use proptest::prelude::*;
use rand::Rng;

fn vsp_map(space: &pinczon::graded::GradedSpace, arity: usize, r: &mut impl Rng) -> Option<MultiMap> {
    let q = random_map(space, arity, r, 0.4);
    if arity < 2 {
        return Some(q);
    }
    let swapped = q.act_perm(&Perm::transposition(arity, 0, 1)).unwrap();
    [q.add(&swapped).unwrap(), q.sub(&swapped).unwrap()]
        .into_iter()
        .find(MultiMap::is_vsp)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism(seed: u64) {
        let mut r = rng(seed);
        let b = random_quadratic_space(&mut r);
        let (k, k2) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let q = random_b_quadratic(&b, k, &mut r);
        let q2 = random_b_quadratic(&b, k2, &mut r);
        let bracket = bracket_tensor(&q, &q2).unwrap();
        prop_assert!(is_b_quadratic(&bracket, &b, Flavor::Tensor).unwrap());
        let lhs = pinczon_bracket(&omega_of(&q, &b).unwrap(), &omega_of(&q2, &b).unwrap(), &b).unwrap();
        prop_assert_eq!(lhs, omega_of(&bracket, &b).unwrap());
    }

    #[test]
    fn cyclic_closure(seed: u64) {
        let mut r = rng(seed);
        let b = random_quadratic_space(&mut r);
        let x = random_cyclic(b.space(), r.gen_range(0..=3), &mut r);
        let y = random_cyclic(b.space(), r.gen_range(0..=3), &mut r);
        prop_assert!(pinczon_bracket(&x, &y, &b).unwrap().is_cyclic());
        prop_assert!(x.cyclic_prod(&y).unwrap().is_cyclic());
    }

    #[test]
    fn antisymmetry(seed: u64) {
        let mut r = rng(seed);
        let b = random_quadratic_space(&mut r);
        let (a, c) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let (da, dc) = (r.gen_range(-2..=2), r.gen_range(-2..=2));
        let x = random_homogeneous_form(b.space(), a, da, &mut r, 0.7).cyclic_sym();
        let y = random_homogeneous_form(b.space(), c, dc, &mut r, 0.7).cyclic_sym();
        let xy = pinczon_bracket(&x, &y, &b).unwrap();
        let yx = pinczon_bracket(&y, &x, &b).unwrap();
        prop_assert_eq!(xy, yx.scale(&-Scalar::sign(da * dc % 2 != 0)));
    }

    #[test]
    fn cyclic_product_is_graded_commutative(seed: u64) {
        let mut r = rng(seed);
        let b = random_quadratic_space(&mut r);
        let (a, c) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let (da, dc) = (r.gen_range(-2..=2), r.gen_range(-2..=2));
        let x = random_homogeneous_form(b.space(), a, da, &mut r, 0.7);
        let y = random_homogeneous_form(b.space(), c, dc, &mut r, 0.7);
        let xy = x.cyclic_prod(&y).unwrap();
        let yx = y.cyclic_prod(&x).unwrap();
        prop_assert_eq!(xy, yx.scale(&Scalar::sign(da * dc % 2 != 0)));
    }

    #[test]
    fn vsp_closure(seed: u64) {
        let mut r = rng(seed);
        let b = random_quadratic_space(&mut r);
        let (k, k2) = (r.gen_range(1..=2), r.gen_range(1..=2));
        if let (Some(q), Some(q2)) = (vsp_map(b.space(), k, &mut r), vsp_map(b.space(), k2, &mut r)) {
            prop_assert!(bracket_tensor(&q, &q2).unwrap().is_vsp());
        }
    }

    #[test]
    fn coboundaries_square_to_zero(seed: u64, pick in 0usize..5, k in 0usize..=2) {
        let mut r = rng(seed);
        let (a, theory) = [
            (m2(), Theory::Hochschild),
            (gl2(), Theory::Chevalley),
            (kx2(), Theory::Harrison),
            (kx2(), Theory::Hochschild),
            (m2_prelie(), Theory::Prelie),
        ][pick].clone();
        let m = Bimodule::adjoint(&a).unwrap();
        let basis = cochain_basis(theory, k, &m).unwrap().cochains;
        if let Some(c) = random_combination(&basis, &mut r) {
            let d = coboundary(theory, &c, &m).unwrap();
            prop_assert_eq!(&d, &coboundary_alternative(theory, &c, &m).unwrap());
            prop_assert!(coboundary(theory, &d, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn pinczon_coboundary_squares_to_zero(seed: u64, pick in 0usize..2) {
        let mut r = rng(seed);
        let a = [m2(), kx2()][pick].clone();
        let b = a.form().unwrap();
        let omega = omega_of(&a.shifted_map(), b).unwrap();
        let l: MultiForm = random_cyclic(a.space(), r.gen_range(1..=3), &mut r);
        let d = d_pinczon(&l, &omega, b).unwrap();
        prop_assert!(d_pinczon(&d, &omega, b).unwrap().is_zero());
    }

    #[test]
    fn scalars_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let x = Scalar::ratio(n, d);
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
    }
}
