//! Harrison against Hochschild cohomology of the dual numbers K[x]/(x^2).

use pinczon::builtins::kx2;
use pinczon::cohomology::{cochain_basis, cohomology_dims, Theory};
use pinczon::structures::Bimodule;
use pinczon::Result;

fn main() -> Result<()> {
    let a = kx2();
    let m = Bimodule::adjoint(&a)?;
    for theory in [Theory::Harrison, Theory::Hochschild] {
        let rep = cohomology_dims(theory, &m, 0..=3)?;
        let sizes: Vec<usize> = (0..=3)
            .map(|k| cochain_basis(theory, k, &m).map(|b| b.len()))
            .collect::<Result<_>>()?;
        println!("{theory:<11} cochains {sizes:?}  dim H^0..3 {:?}", rep.betti());
    }
    Ok(())
}
