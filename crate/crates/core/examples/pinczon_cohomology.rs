//! Cohomology of d_P = {Ω, ·} on cyclic and symmetric forms.

use pinczon::builtins::{gl2, kx2, m2};
use pinczon::coderiv::{omega_of, Flavor};
use pinczon::cohomology::pinczon_cohomology_dims;
use pinczon::Result;

fn main() -> Result<()> {
    for (name, a, flavor) in [
        ("M2", m2(), Flavor::Tensor),
        ("Kx2", kx2(), Flavor::Tensor),
        ("gl2", gl2(), Flavor::Symmetric),
    ] {
        let b = a.form().expect("builtin form");
        let omega = omega_of(&a.shifted_map(), b)?;
        let rep = pinczon_cohomology_dims(&omega, b, flavor, 0..=4)?;
        println!("{name:<4} {flavor:?}: dim H by arity 0..4 {:?}", rep.betti());
    }
    Ok(())
}
