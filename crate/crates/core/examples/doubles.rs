//! Double semidirect products and lifts of cochains into them.

use pinczon::bilinear::validate_form;
use pinczon::builtins::{gl2, m2};
use pinczon::cochain::Cochain;
use pinczon::coderiv::{is_b_quadratic, Flavor};
use pinczon::cohomology::{compare_lift, lie_lift_factor, Proportionality};
use pinczon::structures::{double_product, lift_cochain, verify_identity, verify_invariance, Bimodule};
use pinczon::{Result, Scalar};

fn main() -> Result<()> {
    for (name, a, flavor) in [("M2", m2(), Flavor::Tensor), ("gl2", gl2(), Flavor::Symmetric)] {
        let m = Bimodule::adjoint(&a)?;
        let d = double_product(&m)?;
        println!(
            "double({name}): dim {}, identity {}, invariant {}, nondegenerate {}",
            d.algebra().dim(),
            verify_identity(d.algebra())?.holds,
            verify_invariance(d.algebra(), d.form())?.holds,
            validate_form(d.form()).is_valid()
        );
        let c = Cochain::from_entries(
            a.space(),
            m.space(),
            1,
            [(vec![1], 0, Scalar::one()), (vec![3], 2, Scalar::from_int(2))],
        )?;
        println!(
            "  lift is B̃-quadratic: {}",
            is_b_quadratic(&lift_cochain(&c, &d)?, d.form(), flavor)?
        );
        let factor = match compare_lift(&c, &m, &d)?.relation {
            Proportionality::Factor(f) => f.to_string(),
            other => format!("{other:?}"),
        };
        println!("  {{Ω, Ω_c̃}} / Ω_(dc)~ = {factor}");
    }
    println!(
        "Lie factors 2(k+2)!/(k+1): {:?}",
        (0..4).map(|k| lie_lift_factor(k).to_string()).collect::<Vec<_>>()
    );
    Ok(())
}
