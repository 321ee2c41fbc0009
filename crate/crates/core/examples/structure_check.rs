//! Identity checks, invariance and the structure equation [Q, Q] = 0.

use pinczon::builtins::{gl2, kx2, m2, m2_prelie};
use pinczon::structures::{structure_equation_holds, verify_identity, verify_invariance};
use pinczon::Result;

fn main() -> Result<()> {
    for (name, a) in [("M2", m2()), ("gl2", gl2()), ("Kx2", kx2()), ("M2-prelie", m2_prelie())] {
        let id = verify_identity(&a)?;
        print!(
            "{name:<10} {:<12} identity {:<5} [Q,Q]=0 {:<5}",
            a.kind().name(),
            id.holds,
            structure_equation_holds(&a)?
        );
        match a.form() {
            Some(b) => {
                let inv = verify_invariance(&a, b)?;
                println!(" invariant {}", inv.holds);
                if let Some(w) = inv.witness {
                    println!("           witness {:?} at {:?}", w.law, w.args);
                }
            }
            None => println!(),
        }
    }
    Ok(())
}
