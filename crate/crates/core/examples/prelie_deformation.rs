//! The cocycle c_a on the pre-Lie algebra M_2 gives a true order-1 deformation.

use pinczon::builtins::{c_a, elementary, m2, m2_prelie};
use pinczon::cohomology::{cohomology_dims, d_prelie, deformation_check, Theory};
use pinczon::structures::Bimodule;
use pinczon::Result;

fn main() -> Result<()> {
    let p = m2_prelie();
    let m = Bimodule::adjoint(&p)?;
    let ca = c_a(2, &elementary(2, 0, 1));
    println!("d c_a = 0: {}", d_prelie(&ca, &m)?.is_zero());
    println!(
        "dim H^k(M2, q), k = 1..2: {:?}",
        cohomology_dims(Theory::Prelie, &m, 1..=2)?.betti()
    );

    let v = deformation_check(&p, &ca)?;
    println!("q + t c_a on pre-Lie M2: {:?}", v.verdict);
    let v = deformation_check(&m2(), &ca)?;
    println!("q + t c_a on associative M2: {:?}", v.verdict);
    if let Some(w) = v.witness {
        println!("  {:?} fails at {:?}", w.law, w.args);
    }
    Ok(())
}
