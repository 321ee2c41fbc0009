//! Hochschild cohomology of M_2 with coefficients in itself and its dual.

use pinczon::builtins::m2;
use pinczon::cohomology::{cohomology_dims, Theory};
use pinczon::structures::{dual_module, Bimodule};
use pinczon::Result;

fn main() -> Result<()> {
    let a = m2();
    let adjoint = Bimodule::adjoint(&a)?;
    let dual = dual_module(&adjoint)?;
    for (name, m) in [("adjoint", adjoint), ("dual", dual)] {
        let rep = cohomology_dims(Theory::Hochschild, &m, 0..=2)?;
        println!("{name}:");
        for d in &rep.degrees {
            println!(
                "  H^{} = {}  (C {}, Z {}, B {})",
                d.degree, d.cohomology, d.cochains, d.cocycles, d.coboundaries
            );
        }
    }
    Ok(())
}
