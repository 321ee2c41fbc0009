//! Pinczon bracket of two cyclic forms, and the matching coderivation bracket.

use pinczon::bilinear::BilinearForm;
use pinczon::coderiv::{bracket_tensor, map_of, omega_of};
use pinczon::forms::{pinczon_bracket, MultiForm};
use pinczon::graded::GradedSpace;
use pinczon::{Result, Scalar};

fn main() -> Result<()> {
    let space = GradedSpace::with_degrees(vec![0, 1, -1]);
    let one = Scalar::one();
    let b = BilinearForm::new(
        space.clone(),
        vec![
            vec![one.clone(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), one.clone()],
            vec![Scalar::zero(), -one.clone(), Scalar::zero()],
        ],
    )?;
    let omega = MultiForm::indicator(&space, &[0, 1, 2]).cyclic_sym();
    let lambda = MultiForm::indicator(&space, &[0, 2]).cyclic_sym();
    println!("Ω = {omega:?}");
    println!("Λ = {lambda:?}");
    let bracket = pinczon_bracket(&omega, &lambda, &b)?;
    println!("{{Ω, Λ}} = {bracket:?}");

    let q = bracket_tensor(&map_of(&omega, &b)?, &map_of(&lambda, &b)?)?;
    println!("Ω_[Q, Q'] agrees: {}", omega_of(&q, &b)? == bracket);
    Ok(())
}
