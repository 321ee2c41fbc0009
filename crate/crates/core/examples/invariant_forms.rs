//! Invariant symmetric forms on the n = 2 matrix algebras and the
//! degeneracy locus of the trace pencil on gl_2.

use pinczon::builtins::{gl2, m2, m2_prelie};
use pinczon::structures::{invariant_form_space, trace_pencil};
use pinczon::Scalar;

fn main() {
    for (name, a) in [("M2", m2()), ("gl2", gl2()), ("M2-prelie", m2_prelie())] {
        let forms = invariant_form_space(&a);
        let nondegenerate = forms.samples.iter().filter(|s| s.nondegenerate).count();
        println!(
            "{name:<10} dim {} ({nondegenerate}/{} samples nondegenerate)",
            forms.basis.len(),
            forms.samples.len()
        );
    }
    let points: Vec<(Scalar, Scalar)> = [(1, 0), (0, 1), (2, -1), (1, 1), (-2, 1)]
        .iter()
        .map(|&(a, b)| (Scalar::from_int(a), Scalar::from_int(b)))
        .collect();
    println!("α tr(xy) + β tr(x)tr(y):");
    for p in trace_pencil(2, &points) {
        println!(
            "  α={:<3} β={:<3} det={:<4} on locus {}",
            p.alpha, p.beta, p.determinant, p.on_locus
        );
    }
}
