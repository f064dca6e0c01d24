use std::sync::Arc;

use tensq_core::automorphisms::{automorphism_group, classify_all, AutBounds};
use tensq_core::fp::EnumerationLimits;
use tensq_core::group::spec::parse_group;
use tensq_core::group::{center, derived_subgroup, FiniteGroup};
use tensq_core::harness::build_tensor_square;
use tensq_core::invariants::{right_2_tensor_engel, tensor_center};
use tensq_core::tensor::{hypothesis_diag_trivial, tensor_square_via_nu, theta_swap, Construction};

fn group(s: &str) -> Arc<FiniteGroup> {
    Arc::new(parse_group(s, &EnumerationLimits::default()).unwrap())
}

#[test]
fn published_orders() {
    // S3⊗S3 ≅ C6, D8⊗D8 ≅ C2³×C4, Q8⊗Q8 ≅ C2⁴×C4
    for (s, n) in [("symmetric:3", 6), ("dihedral:8", 32), ("quaternion:8", 64), ("cyclic:7", 7)] {
        let (ts, cross) = build_tensor_square(&group(s), &EnumerationLimits::default()).unwrap();
        assert_eq!(ts.order(), n, "{s}");
        assert_eq!(ts.construction(), Construction::Direct);
        assert_eq!(cross, Some(true));
    }
}

#[test]
fn perfect_group_a5() {
    // A5⊗A5 is the Schur cover SL(2,5), and ∇ is trivial for perfect groups
    let g = group("alternating:5");
    let ts = tensor_square_via_nu(&g, &EnumerationLimits::default()).unwrap();
    assert_eq!(ts.order(), 120);
    assert_eq!(ts.kappa().kernel().order(), 2);
    assert!(hypothesis_diag_trivial(&ts));
    assert!(tensor_center(&ts).unwrap().is_trivial());
}

#[test]
fn diagonal_of_c2_is_nontrivial_and_theta_fixes_it() {
    let (ts, _) = build_tensor_square(&group("cyclic:2"), &EnumerationLimits::default()).unwrap();
    assert!(!hypothesis_diag_trivial(&ts));
    let theta = theta_swap(&ts).unwrap();
    assert_eq!(theta.apply(ts.pairing(1, 1)), ts.pairing(1, 1));
}

#[test]
fn kappa_image_is_derived_subgroup() {
    for s in ["alternating:4", "quaternion:12", "fp:2:a^5,b^4,b^-1*a*b=a^2"] {
        let g = group(s);
        let (ts, _) = build_tensor_square(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(ts.kappa().image(), derived_subgroup(&g), "{s}");
        assert_eq!(ts.order(), derived_subgroup(&g).order() * ts.kappa().kernel().order());
    }
}

#[test]
fn automorphism_counts() {
    // units mod 5, Aut(Q8) ≅ S4, Aut(S4) = S4, Aut(A5) ≅ S5, |GL(4,2)|
    for (s, n) in [("cyclic:5", 4), ("quaternion:8", 24), ("symmetric:4", 24), ("abelian:2,2,2,2", 20160)] {
        assert_eq!(automorphism_group(&group(s), &AutBounds::default()).unwrap().len(), n, "{s}");
    }
    let slow = AutBounds::slow();
    assert_eq!(automorphism_group(&group("alternating:5"), &slow).unwrap().len(), 120);
}

#[test]
fn tensor_classes_for_q8() {
    let g = group("quaternion:8");
    let (ts, _) = build_tensor_square(&g, &EnumerationLimits::default()).unwrap();
    let aut = classify_all(&ts, &AutBounds::default()).unwrap();
    let z = center(&g);
    let r2t = right_2_tensor_engel(&ts).unwrap();
    assert!(z.is_subset_of(&r2t));
    // the identity is tensor central for every group
    assert!(aut.tensor_central().contains(&aut.identity()));
    assert!(aut.tensor_central().iter().all(|i| aut.central().contains(i)));
}
