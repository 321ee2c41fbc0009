//! Chevalley cohomology of gl_2: H^1 is spanned by the trace projection.

use pinczon::builtins::{gl2, trace_projection};
use pinczon::cohomology::{cohomology_dims, d_chevalley, solve_coboundary, Primitive, Theory};
use pinczon::structures::Bimodule;
use pinczon::Result;

fn main() -> Result<()> {
    let g = gl2();
    let m = Bimodule::adjoint(&g)?;
    let rep = cohomology_dims(Theory::Chevalley, &m, 0..=3)?;
    println!("dim H^k(gl2, gl2), k = 0..3: {:?}", rep.betti());

    let f = trace_projection(2);
    println!("d f = 0: {}", d_chevalley(&f, &m)?.is_zero());
    match solve_coboundary(Theory::Chevalley, &f, &m)? {
        Primitive::Found(p) => println!("f = d {p:?}"),
        Primitive::Obstructed { functional, value } => {
            println!(
                "f is not a coboundary: a functional with {} terms vanishes on B^1 and takes {value} on f",
                functional.len()
            )
        }
    }
    Ok(())
}
