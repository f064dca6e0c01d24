//! Tensor-analogue subgroups of `G`, computed by scanning the pairing and
//! action tables of a [`TensorSquare`].
//!
//! Every set is returned through [`Subgroup::from_set`], so closure is
//! checked rather than assumed. Iterated commutators are left-normed.

use crate::error::{Error, Result};
use crate::group::{closure, Elem, FiniteGroup, Subgroup};
use crate::tensor::TensorSquare;

/// `C_G^⊗(X) = {a : a ⊗ x = 1 for all x ∈ X}`.
pub fn tensor_annihilator(ts: &TensorSquare, xs: &[Elem]) -> Result<Subgroup> {
    let g = ts.base();
    for &x in xs {
        g.check(x)?;
    }
    let set: Vec<Elem> = g.elements().filter(|&a| xs.iter().all(|&x| ts.pairing(a, x) == 0)).collect();
    Subgroup::from_set(g, set)
}

/// `Z^⊗(G)`, the annihilator of all of `G`.
pub fn tensor_center(ts: &TensorSquare) -> Result<Subgroup> {
    let all: Vec<Elem> = ts.base().elements().collect();
    tensor_annihilator(ts, &all)
}

/// All left-normed commutators `[a, g_1, ..., g_k]`, as a membership mask.
fn iterated_commutators(g: &FiniteGroup, a: Elem, k: usize) -> Vec<bool> {
    let mut layer = vec![false; g.order()];
    layer[a] = true;
    for _ in 0..k {
        let mut next = vec![false; g.order()];
        for (c, _) in layer.iter().enumerate().filter(|(_, &m)| m) {
            for h in g.elements() {
                next[g.comm(c, h)] = true;
            }
        }
        layer = next;
    }
    layer
}

/// `Z_n^⊗(G) = {a : [a, g_1, ..., g_{n-1}] ⊗ g_n = 1 for all g_i}`, `n ≥ 1`.
pub fn nth_tensor_center(ts: &TensorSquare, n: usize) -> Result<Subgroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("tensor center index must be at least 1".into()));
    }
    let g = ts.base();
    let z = tensor_center(ts)?.membership();
    let set: Vec<Elem> = g
        .elements()
        .filter(|&a| {
            iterated_commutators(g, a, n - 1)
                .iter()
                .enumerate()
                .all(|(c, &m)| !m || z[c])
        })
        .collect();
    Subgroup::from_set(g, set)
}

/// `R_2^⊗(G) = {g : [g, x] ⊗ x = 1 for all x}`.
pub fn right_2_tensor_engel(ts: &TensorSquare) -> Result<Subgroup> {
    let g = ts.base();
    let set: Vec<Elem> = g
        .elements()
        .filter(|&a| g.elements().all(|x| ts.pairing(g.comm(a, x), x) == 0))
        .collect();
    Subgroup::from_set(g, set)
}

/// `R_2(G) = {g : [g, x, x] = 1 for all x}`.
pub fn right_2_engel(g: &FiniteGroup) -> Result<Subgroup> {
    let set: Vec<Elem> = g
        .elements()
        .filter(|&a| g.elements().all(|x| g.comm(g.comm(a, x), x) == 0))
        .collect();
    Subgroup::from_set(g, set)
}

/// `C_G(G ⊗ G)`, the kernel of the action of `G` on the tensor square.
pub fn centralizer_of_tensor_square(ts: &TensorSquare) -> Result<Subgroup> {
    let g = ts.base();
    let t = ts.tsq();
    let set: Vec<Elem> = g
        .elements()
        .filter(|&a| t.generators().iter().all(|&s| ts.action(s, a) == s))
        .collect();
    Subgroup::from_set(g, set)
}

/// Subgroup generated by `{[x, y] : x, y ∈ s}`.
pub fn commutator_closure(g: &FiniteGroup, s: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for &x in s.elements() {
        for &y in s.elements() {
            comms.push(g.comm(x, y));
        }
    }
    closure(g, &comms)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fp::EnumerationLimits;
    use crate::group::{abelian, center, cyclic, dihedral, nth_center, quaternion, symmetric};
    use crate::tensor::tensor_square_direct;

    fn tsq(g: FiniteGroup) -> TensorSquare {
        tensor_square_direct(&Arc::new(g), &EnumerationLimits::default()).unwrap()
    }

    #[test]
    fn trivial_group_everything_whole() {
        let t = tsq(FiniteGroup::trivial());
        assert!(tensor_center(&t).unwrap().is_whole());
        assert!(right_2_tensor_engel(&t).unwrap().is_whole());
    }

    #[test]
    fn cyclic_two_tensor_center_is_trivial() {
        let t = tsq(cyclic(2).unwrap());
        assert!(tensor_center(&t).unwrap().is_trivial());
        assert!(centralizer_of_tensor_square(&t).unwrap().is_whole());
        assert!(right_2_tensor_engel(&t).unwrap().is_whole());
    }

    #[test]
    fn annihilator_edge_cases() {
        let t = tsq(cyclic(4).unwrap());
        assert!(tensor_annihilator(&t, &[]).unwrap().is_whole());
        let all: Vec<Elem> = (0..4).collect();
        assert_eq!(tensor_annihilator(&t, &all).unwrap(), tensor_center(&t).unwrap());
        // C4 ⊗ C4 ≅ C4 with a^i ⊗ a^j = (a⊗a)^{ij}; a^2 is killed by the even elements
        let ann = tensor_annihilator(&t, &[2]).unwrap();
        assert_eq!(ann.elements(), &[0, 2]);
        assert!(tensor_annihilator(&t, &[9]).is_err());
    }

    #[test]
    fn nth_tensor_center_contained_in_upper_central_series() {
        for g in [dihedral(8).unwrap(), quaternion(8).unwrap(), symmetric(3).unwrap(), abelian(&[2, 4]).unwrap()] {
            let g = Arc::new(g);
            let t = tensor_square_direct(&g, &EnumerationLimits::default()).unwrap();
            assert_eq!(nth_tensor_center(&t, 1).unwrap(), tensor_center(&t).unwrap());
            let mut prev = Subgroup::trivial(&g);
            for n in 1..=3 {
                let zt = nth_tensor_center(&t, n).unwrap();
                assert!(zt.is_subset_of(&nth_center(&g, n)), "{} n={n}", g.name());
                assert!(prev.is_subset_of(&zt));
                prev = zt;
            }
        }
        assert!(nth_tensor_center(&tsq(cyclic(2).unwrap()), 0).is_err());
    }

    #[test]
    fn d8_second_tensor_center_by_tuple_scan() {
        let g = Arc::new(dihedral(8).unwrap());
        let t = tensor_square_direct(&g, &EnumerationLimits::default()).unwrap();
        let scan: Vec<Elem> = g
            .elements()
            .filter(|&a| g.elements().all(|x| g.elements().all(|y| t.pairing(g.comm(a, x), y) == 0)))
            .collect();
        assert_eq!(nth_tensor_center(&t, 2).unwrap().elements(), scan.as_slice());
    }

    #[test]
    fn engel_chain() {
        for g in [symmetric(3).unwrap(), dihedral(8).unwrap(), quaternion(8).unwrap()] {
            let t = tsq(g.clone());
            let r2t = right_2_tensor_engel(&t).unwrap();
            let r2 = right_2_engel(&g).unwrap();
            assert!(center(&g).is_subset_of(&r2t));
            assert!(r2t.is_subset_of(&r2));
            assert!(tensor_center(&t).unwrap().is_subset_of(&centralizer_of_tensor_square(&t).unwrap()));
        }
        // D8 has class 2, so it is 2-Engel
        assert!(right_2_engel(&dihedral(8).unwrap()).unwrap().is_whole());
        assert!(right_2_engel(&symmetric(3).unwrap()).unwrap().is_trivial());
    }
}
