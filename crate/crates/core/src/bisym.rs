//! Bi-symmetric forms `Φ(x_1..x_k; y_1, y_2)`, graded symmetric in the `x`
//! block and in the `y` pair, with the extended Pinczon bracket.

use crate::bilinear::BilinearForm;
use crate::coderiv::{map_of_any, omega_of, MultiMap};
use crate::error::{Error, Result};
use crate::forms::{block_unshuffles, extend_perms, MultiForm};
use crate::graded::{odd, Perm};
use crate::scalar::Scalar;

/// A form of arity `k + 2`, symmetric in its first `k` and its last 2 slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSymForm {
    form: MultiForm,
}

fn symmetric_in(form: &MultiForm, start: usize, len: usize) -> bool {
    let n = form.arity();
    (start..(start + len).saturating_sub(1))
        .all(|i| form.act_perm(&Perm::transposition(n, i, i + 1)).expect("arity matches") == *form)
}

impl BiSymForm {
    pub fn new(form: MultiForm) -> Result<Self> {
        let n = form.arity();
        if n < 2 {
            return Err(Error::ArityMismatch { expected: 2, got: n });
        }
        if !symmetric_in(&form, 0, n - 2) {
            return Err(Error::NotSymmetric("x block of a bi-symmetric form".into()));
        }
        if !symmetric_in(&form, n - 2, 2) {
            return Err(Error::NotSymmetric("y pair of a bi-symmetric form".into()));
        }
        Ok(BiSymForm { form })
    }

    pub(crate) fn new_unchecked(form: MultiForm) -> Self {
        BiSymForm { form }
    }

    /// Symmetrizes an arbitrary `(k+2)`-form in both blocks (unnormalized).
    pub fn project(form: &MultiForm) -> Result<Self> {
        let n = form.arity();
        if n < 2 {
            return Err(Error::ArityMismatch { expected: 2, got: n });
        }
        let xs = extend_perms(Perm::all(n - 2), n);
        let swap = Perm::transposition(n, n - 2, n - 1);
        let f = form.sum_over(&xs);
        let f = f.add(&f.act_perm(&swap)?)?;
        Ok(BiSymForm { form: f })
    }

    /// Number of slots in the symmetric `x` block.
    pub fn k(&self) -> usize {
        self.form.arity() - 2
    }

    pub fn form(&self) -> &MultiForm {
        &self.form
    }

    pub fn into_form(self) -> MultiForm {
        self.form
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn add(&self, other: &BiSymForm) -> Result<BiSymForm> {
        Ok(BiSymForm::new_unchecked(self.form.add(&other.form)?))
    }

    pub fn scale(&self, s: &Scalar) -> BiSymForm {
        BiSymForm::new_unchecked(self.form.scale(s))
    }
}

/// `Ω_Q(x ⊗ y_1 · y_2) = B(Q(x ⊗ y_1), y_2) + B(Q(x ⊗ y_2), y_1)` for a
/// pre-Lie map `Q` of arity `k + 1`.
pub fn omega_of_prelie(q: &MultiMap, b: &BilinearForm) -> Result<BiSymForm> {
    let omega = omega_of(q, b)?;
    let n = omega.arity();
    if n < 2 {
        return Err(Error::ArityMismatch { expected: 2, got: n });
    }
    let swapped = omega.act_perm(&Perm::transposition(n, n - 2, n - 1))?;
    Ok(BiSymForm::new_unchecked(omega.add(&swapped)?))
}

/// The B-quadratic pre-Lie map with `Ω_Q = Φ`.
pub fn map_of_prelie(phi: &BiSymForm, b: &BilinearForm) -> Result<MultiMap> {
    map_of_any(&phi.form.scale(&Scalar::ratio(1, 2)), b)
}

/// `Σ_i A(.., e_i, ..) C(.., e'_i, ..)` with `e_i` in slot `slot_a` of `A`
/// and `e'_i` in slot `slot_c` of `C`. The remaining arguments are listed as
/// `A`'s in order followed by `C`'s. Signs: Koszul sign of the arrangement
/// `A (args of A) C (args of C)` relative to `A C e_i e'_i (rest)`, with
/// `b(e_i, e'_j) = δ_ij`.
fn contract(a: &MultiForm, slot_a: usize, c: &MultiForm, slot_c: usize, b: &BilinearForm) -> MultiForm {
    let space = a.space();
    let n = space.dim();
    let mut out = MultiForm::zero(space, a.arity() + c.arity() - 2);
    let mut c_by_slot: Vec<Vec<(&Vec<usize>, &Scalar)>> = vec![Vec::new(); n];
    for (t, v) in c.entries() {
        c_by_slot[t[slot_c]].push((t, v));
    }
    for (t, va) in a.entries() {
        let i = t[slot_a];
        let di = odd(space.shifted(i));
        let before_a = space.tuple_parity(&t[..slot_a]);
        let rest_a: Vec<usize> = t[..slot_a].iter().chain(&t[slot_a + 1..]).copied().collect();
        let p_rest_a = space.tuple_parity(&rest_a);
        for (j, row) in c_by_slot.iter().enumerate() {
            let dji = b.dual_coeff(j, i);
            if dji.is_zero() {
                continue;
            }
            for &(s, vc) in row {
                let deg_c = space.tuple_parity(s);
                let before_c = space.tuple_parity(&s[..slot_c]);
                // e_i moves past C, then the args of A before it move past e_i
                let mut neg = di && deg_c;
                neg ^= di && before_a;
                // args of A after e_i move past C and e'_i
                neg ^= (p_rest_a ^ before_a) && (deg_c ^ di);
                // args of A before e_i move past C and e'_i
                neg ^= before_a && (deg_c ^ di);
                // e'_i moves past the first slot_c args of C
                neg ^= di && before_c;
                neg ^= !di;
                let mut x = rest_a.clone();
                x.extend(s[..slot_c].iter().chain(&s[slot_c + 1..]));
                out.add_to(x, (va * vc * dji).signed(neg));
            }
        }
    }
    out
}

/// Reorders raw slots: target slot `j` takes raw slot `order[j]`.
fn reorder(f: &MultiForm, order: &[usize]) -> MultiForm {
    f.act_perm(&Perm::new(order.to_vec()).expect("reordering"))
        .expect("arity matches")
}

/// The extended Pinczon bracket `{Φ, Φ'}` on bi-symmetric forms, `Φ ∈ P_k`,
/// `Φ' ∈ P_{k'}`, result in `P_{k+k'}`, summed over the decompositions of
/// the `x` block:
///
/// * `Σ Φ(x_I, e_i, y_1) Φ'(x_J, e'_i, y_2) + (y_1 ↔ y_2)`,
/// * `Σ Φ(x_I, e_i, x_j) Φ'(e'_i, x_J, y_1, y_2)`,
/// * `Σ Φ(e_i, x_I, y_1, y_2) Φ'(x_J, e'_i, x_j)`.
pub fn bisym_bracket(phi: &BiSymForm, phi2: &BiSymForm, b: &BilinearForm) -> Result<BiSymForm> {
    if phi.form.space() != b.space() || phi2.form.space() != b.space() {
        return Err(Error::Input("forms and bilinear form live on different spaces".into()));
    }
    let (k, k2) = (phi.k(), phi2.k());
    let (a, c) = (&phi.form, &phi2.form);
    let n = k + k2 + 2;
    let space = b.space();
    let mut total = MultiForm::zero(space, n);

    // y pair split between the two factors: raw (x_I, y1, x_J, y2)
    let raw = contract(a, k, c, k2, b);
    let mut order: Vec<usize> = (0..k).collect();
    order.extend(k + 1..k + 1 + k2);
    order.push(k);
    order.push(k + 1 + k2);
    let t = reorder(&raw, &order).sum_over(&extend_perms(block_unshuffles(&[k, k2]), n));
    let t = t.add(&t.act_perm(&Perm::transposition(n, n - 2, n - 1))?)?;
    total = total.add(&t)?;

    // Φ' keeps the y pair: raw (x_I, x_j, x_J, y1, y2)
    if k2 >= 1 {
        let raw = contract(a, k, c, 0, b);
        let t = raw.sum_over(&extend_perms(block_unshuffles(&[k, 1, k2 - 1]), n));
        total = total.add(&t)?;
    }

    // Φ keeps the y pair: raw (x_I, y1, y2, x_J, x_j)
    if k >= 1 {
        let raw = contract(a, 0, c, k2, b);
        let mut order: Vec<usize> = (0..k - 1).collect();
        order.extend(k + 1..k + 2 + k2);
        order.push(k - 1);
        order.push(k);
        let t = reorder(&raw, &order).sum_over(&extend_perms(block_unshuffles(&[k - 1, k2, 1]), n));
        total = total.add(&t)?;
    }
    Ok(BiSymForm::new_unchecked(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::vvstar;
    use crate::graded::GradedSpace;

    #[test]
    fn projection_is_bi_symmetric() {
        let v = GradedSpace::with_degrees(vec![0, 1, -1]);
        for t in crate::graded::tuples(3, 3) {
            let p = BiSymForm::project(&MultiForm::indicator(&v, &t)).unwrap();
            assert!(BiSymForm::new(p.form().clone()).is_ok());
        }
        assert!(BiSymForm::new(MultiForm::indicator(&v, &[0, 1, 2])).is_err());
        assert!(BiSymForm::project(&MultiForm::indicator(&v, &[0])).is_err());
    }

    #[test]
    fn prelie_round_trip() {
        let a = vvstar();
        let b = a.form().unwrap();
        let q = a.shifted_map();
        let phi = omega_of_prelie(&q, b).unwrap();
        assert_eq!(phi.k(), 1);
        assert_eq!(map_of_prelie(&phi, b).unwrap(), q);
    }

    #[test]
    fn structure_form_is_closed() {
        let a = vvstar();
        let b = a.form().unwrap();
        let phi = omega_of_prelie(&a.shifted_map(), b).unwrap();
        let sq = bisym_bracket(&phi, &phi, b).unwrap();
        assert_eq!(sq.k(), 2);
        assert!(sq.is_zero());
        let doubled = bisym_bracket(&phi.scale(&Scalar::from_int(2)), &phi, b).unwrap();
        assert!(doubled.is_zero());
    }
}
