//! The quadratic pre-Lie algebra M_2 ⋉ M_2* and its bi-symmetric structure form.

use pinczon::bisym::{bisym_bracket, omega_of_prelie};
use pinczon::builtins::vvstar;
use pinczon::structures::{verify_identity, verify_invariance};
use pinczon::Result;

fn main() -> Result<()> {
    let v = vvstar();
    let b = v.form().expect("builtin form");
    println!("dim {}, basis {:?}", v.dim(), v.space().names());
    println!("pre-Lie identity: {}", verify_identity(&v)?.holds);
    println!("b(q(x,y),z) + b(y,q(x,z)) = 0: {}", verify_invariance(&v, b)?.holds);
    let phi = omega_of_prelie(&v.shifted_map(), b)?;
    println!("{{Φ, Φ}} = 0: {}", bisym_bracket(&phi, &phi, b)?.is_zero());
    Ok(())
}
