use std::sync::Arc;

use super::*;
use crate::fp::{todd_coxeter, EnumerationLimits, Presentation, Strategy, Word};
use crate::group::{abelian, alternating, cyclic, derived_subgroup, dihedral, quaternion, symmetric};

fn both(g: FiniteGroup) -> (TensorSquare, TensorSquare) {
    let g = Arc::new(g);
    let lim = EnumerationLimits::default();
    let d = tensor_square_direct(&g, &lim.with_strategy(Strategy::Felsch)).unwrap();
    let v = tensor_square_via_nu(&g, &lim).unwrap();
    (d, v)
}

#[test]
fn trivial_and_cyclic_two() {
    let (d, v) = both(FiniteGroup::trivial());
    assert_eq!((d.order(), v.order()), (1, 1));
    assert!(hypothesis_diag_trivial(&d));

    let (d, v) = both(cyclic(2).unwrap());
    assert_eq!((d.order(), v.order()), (2, 2));
    assert!(!hypothesis_diag_trivial(&v));
    assert_eq!(diagonal_subgroup(&v).order(), 2);
    assert!(pairing_isomorphism(&d, &v).is_some());
}

#[test]
fn abelian_gcd_law() {
    // |Z_2 x Z_2 ⊗ Z_2 x Z_2| = 2^4, |Z_2 x Z_4 ⊗ ...| = 2*2*2*4
    let (d, v) = both(abelian(&[2, 2]).unwrap());
    assert_eq!((d.order(), v.order()), (16, 16));
    let (d, v) = both(abelian(&[2, 4]).unwrap());
    assert_eq!((d.order(), v.order()), (32, 32));
    let (d, v) = both(cyclic(6).unwrap());
    assert_eq!((d.order(), v.order()), (6, 6));
}

#[test]
fn routes_agree_on_small_nonabelian_groups() {
    for g in [symmetric(3).unwrap(), dihedral(8).unwrap(), quaternion(8).unwrap(), dihedral(10).unwrap()] {
        let name = g.name().to_string();
        let (d, v) = both(g);
        assert_eq!(d.order(), v.order(), "{name}");
        assert!(pairing_isomorphism(&d, &v).is_some(), "{name}");
        assert!(pairing_isomorphism(&v, &d).is_some(), "{name}");
    }
}

#[test]
fn known_orders() {
    // S3 ⊗ S3 ≅ C6, D8 ⊗ D8 ≅ C2^3 x C4, |Q8 ⊗ Q8| = 64, all abelian
    let lim = EnumerationLimits::default();
    let s3 = tensor_square_via_nu(&Arc::new(symmetric(3).unwrap()), &lim).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(s3.tsq().is_abelian());
    let d8 = tensor_square_via_nu(&Arc::new(dihedral(8).unwrap()), &lim).unwrap();
    assert_eq!(d8.order(), 32);
    assert!(d8.tsq().is_abelian());
    let q8 = tensor_square_via_nu(&Arc::new(quaternion(8).unwrap()), &lim).unwrap();
    assert_eq!(q8.order(), 64);
    assert!(q8.tsq().is_abelian());
}

#[test]
fn kappa_onto_derived_subgroup() {
    let g = Arc::new(symmetric(4).unwrap());
    let t = tensor_square_via_nu(&g, &EnumerationLimits::default()).unwrap();
    assert_eq!(t.kappa().image(), derived_subgroup(&g));
    assert_eq!(t.order(), t.kappa().image().order() * t.kappa().kernel().order());
}

#[test]
fn theta_is_an_involution() {
    for g in [cyclic(2).unwrap(), symmetric(3).unwrap(), dihedral(8).unwrap()] {
        let t = tensor_square_via_nu(&Arc::new(g), &EnumerationLimits::default()).unwrap();
        let theta = theta_swap(&t).unwrap();
        for x in t.tsq().elements() {
            assert_eq!(theta.apply(theta.apply(x)), x);
        }
        for g in t.base().elements() {
            assert_eq!(theta.apply(t.pairing(g, g)), t.tsq().inv(t.pairing(g, g)));
        }
    }
}

#[test]
fn induced_hom_of_identity_is_identity() {
    let t = tensor_square_via_nu(&Arc::new(dihedral(8).unwrap()), &EnumerationLimits::default()).unwrap();
    let id: Vec<Elem> = t.base().elements().collect();
    let h = induced_hom(&t, &id).unwrap();
    assert!(t.tsq().elements().all(|x| h.apply(x) == x));
}

#[test]
fn nu_presentation_orders() {
    let lim = EnumerationLimits::default();
    let triv = Presentation::new(1, vec![Word::generator(0)]).unwrap();
    assert_eq!(todd_coxeter(&nu_presentation(&triv), &[], &lim).unwrap().ncosets(), 1);
    let c2 = Presentation::new(1, vec![Word::generator(0).pow(2)]).unwrap();
    assert_eq!(todd_coxeter(&nu_presentation(&c2), &[], &lim).unwrap().ncosets(), 8);
    let s3 = Presentation::new(
        2,
        vec![Word::from_signed(&[1, 1, 1]).unwrap(), Word::from_signed(&[2, 2]).unwrap(), Word::from_signed(&[1, 2, 1, 2]).unwrap()],
    )
    .unwrap();
    assert_eq!(todd_coxeter(&nu_presentation(&s3), &[], &lim).unwrap().ncosets(), 36 * 6);
}

#[test]
fn alternating_five_is_perfect() {
    let g = Arc::new(alternating(5).unwrap());
    let t = tensor_square_via_nu(&g, &EnumerationLimits::default()).unwrap();
    // A5 ⊗ A5 is the universal central extension SL(2,5)
    assert_eq!(t.order(), 120);
    assert!(t.kappa().is_surjective());
    assert_eq!(t.kappa().kernel().order(), t.order() / 60);
    assert!(hypothesis_diag_trivial(&t));
}
