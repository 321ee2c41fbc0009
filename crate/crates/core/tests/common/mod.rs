#![allow(dead_code)]

use pinczon::bilinear::BilinearForm;
use pinczon::coderiv::{map_of, MultiMap};
use pinczon::forms::MultiForm;
use pinczon::graded::{tuples, GradedSpace};
use pinczon::Scalar;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(r: &mut impl Rng) -> Scalar {
    Scalar::from_int(r.gen_range(-3..=3))
}

pub fn nonzero(r: &mut impl Rng) -> Scalar {
    let v = *[-2i64, -1, 1, 2, 3].choose(r).unwrap();
    Scalar::from_int(v)
}

/// A nondegenerate degree-0 symmetric form on a random space of dim ≤ 3
/// with mixed degrees.
pub fn random_quadratic_space(r: &mut impl Rng) -> BilinearForm {
    let layouts: [&[i32]; 7] = [
        &[0, 0],
        &[1, -1],
        &[0, 0, 0],
        &[1, -1, 0],
        &[2, -2, 0],
        &[0, 1, -1],
        &[-1, 0, 1],
    ];
    let degrees = layouts.choose(r).unwrap().to_vec();
    let n = degrees.len();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            if degrees[i] + degrees[j] == 0 {
                let v = if i == j {
                    nonzero(r)
                } else if degrees[i] == 0 {
                    small(r)
                } else {
                    nonzero(r)
                };
                let twist = degrees[i] % 2 != 0 && degrees[j] % 2 != 0;
                m[i][j] = v.clone();
                m[j][i] = v.signed(twist && i != j);
            }
        }
    }
    match BilinearForm::new(GradedSpace::with_degrees(degrees.clone()), m) {
        Ok(b) => b,
        Err(_) => random_quadratic_space(r),
    }
}

pub fn random_form(space: &GradedSpace, arity: usize, r: &mut impl Rng, density: f64) -> MultiForm {
    let entries: Vec<(Vec<usize>, Scalar)> = tuples(space.dim(), arity)
        .filter_map(|t| r.gen_bool(density).then(|| (t, small(r))))
        .collect();
    MultiForm::from_entries(space, arity, entries).unwrap()
}

/// Random form whose entries all have the given form degree.
pub fn random_homogeneous_form(
    space: &GradedSpace,
    arity: usize,
    degree: i32,
    r: &mut impl Rng,
    density: f64,
) -> MultiForm {
    let entries: Vec<(Vec<usize>, Scalar)> = tuples(space.dim(), arity)
        .filter(|t| -space.tuple_shifted_degree(t) == degree)
        .filter_map(|t| r.gen_bool(density).then(|| (t, small(r))))
        .collect();
    MultiForm::from_entries(space, arity, entries).unwrap()
}

pub fn random_cyclic(space: &GradedSpace, arity: usize, r: &mut impl Rng) -> MultiForm {
    random_form(space, arity, r, 0.5).cyclic_sym()
}

pub fn random_map(space: &GradedSpace, arity: usize, r: &mut impl Rng, density: f64) -> MultiMap {
    let n = space.dim();
    let mut entries = Vec::new();
    for t in tuples(n, arity) {
        for o in 0..n {
            if r.gen_bool(density) {
                entries.push((t.clone(), o, small(r)));
            }
        }
    }
    MultiMap::from_entries(space, arity, entries).unwrap()
}

pub fn random_b_quadratic(b: &BilinearForm, arity: usize, r: &mut impl Rng) -> MultiMap {
    map_of(&random_cyclic(b.space(), arity + 1, r), b).unwrap()
}

/// A random combination of a few basis cochains.
pub fn random_combination(basis: &[pinczon::cochain::Cochain], r: &mut impl Rng) -> Option<pinczon::cochain::Cochain> {
    let first = basis.first()?;
    let mut c = first.scale(&Scalar::zero());
    for _ in 0..3 {
        let b = basis.choose(r).unwrap();
        c = c.add(&b.scale(&nonzero(r))).unwrap();
    }
    Some(c)
}
