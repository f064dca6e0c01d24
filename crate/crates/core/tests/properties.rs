use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use tensq_core::automorphisms::{automorphism_group, inner, AutBounds, AutomorphismGroup};
use tensq_core::fp::EnumerationLimits;
use tensq_core::group::spec::{parse_group, GroupSpec};
use tensq_core::group::{closure, FiniteGroup};
use tensq_core::harness::build_tensor_square;
use tensq_core::tensor::{theta_swap, TensorSquare};

const SPECS: &[&str] = &[
    "cyclic:6",
    "abelian:2,2",
    "symmetric:3",
    "dihedral:8",
    "quaternion:8",
    "dihedral:10",
    "alternating:4",
    "quaternion:12",
    "fp:2:a^4,b^4,b^-1*a*b=a^-1",
];

struct Fixture {
    ts: TensorSquare,
    aut: AutomorphismGroup,
}

fn fixtures() -> &'static Vec<Fixture> {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| {
                let g = Arc::new(parse_group(s, &EnumerationLimits::default()).unwrap());
                let (ts, _) = build_tensor_square(&g, &EnumerationLimits::default()).unwrap();
                let aut = automorphism_group(&g, &AutBounds::default()).unwrap();
                Fixture { ts, aut }
            })
            .collect()
    })
}

/// A fixture index and `k` raw element picks, reduced modulo the order.
fn picks(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..SPECS.len(), prop::collection::vec(any::<usize>(), k))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pairing_is_crossed_bilinear((i, xs) in picks(3)) {
        let ts = &fixtures()[i].ts;
        let (g, t) = (ts.base(), ts.tsq());
        let n = g.order();
        let (a, b, c) = (xs[0] % n, xs[1] % n, xs[2] % n);
        // gg'⊗h = (g^g'⊗h^g')(g'⊗h)
        let lhs = ts.pairing(g.mul(a, b), c);
        let rhs = t.mul(ts.pairing(g.conj(a, b), g.conj(c, b)), ts.pairing(b, c));
        prop_assert_eq!(lhs, rhs);
        // g⊗hh' = (g⊗h')(g^h'⊗h^h')
        let lhs = ts.pairing(a, g.mul(b, c));
        let rhs = t.mul(ts.pairing(a, c), ts.pairing(g.conj(a, c), g.conj(b, c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kappa_and_action((i, xs) in picks(3)) {
        let ts = &fixtures()[i].ts;
        let g = ts.base();
        let n = g.order();
        let (a, b, c) = (xs[0] % n, xs[1] % n, xs[2] % n);
        prop_assert_eq!(ts.kappa().apply(ts.pairing(a, b)), g.comm(a, b));
        prop_assert_eq!(ts.action(ts.pairing(a, b), c), ts.pairing(g.conj(a, c), g.conj(b, c)));
    }

    #[test]
    fn theta_swaps_and_inverts((i, xs) in picks(2)) {
        let ts = &fixtures()[i].ts;
        let n = ts.base().order();
        let (a, b) = (xs[0] % n, xs[1] % n);
        let theta = theta_swap(ts).unwrap();
        prop_assert_eq!(theta.apply(ts.pairing(a, b)), ts.tsq().inv(ts.pairing(b, a)));
    }

    #[test]
    fn automorphisms_form_a_group((i, xs) in picks(3)) {
        let aut = &fixtures()[i].aut;
        let m = aut.len();
        let (a, b, c) = (xs[0] % m, xs[1] % m, xs[2] % m);
        prop_assert_eq!(aut.compose(aut.compose(a, b), c), aut.compose(a, aut.compose(b, c)));
        prop_assert_eq!(aut.compose(a, aut.inverse(a)), aut.identity());
        // a is applied first
        let x = xs[0] % aut.group().order();
        prop_assert_eq!(aut.get(aut.compose(a, b)).apply(x), aut.get(b).apply(aut.get(a).apply(x)));
    }

    #[test]
    fn conjugation_is_a_homomorphism_into_aut((i, xs) in picks(2)) {
        let aut = &fixtures()[i].aut;
        let g = aut.group();
        let (a, b) = (xs[0] % g.order(), xs[1] % g.order());
        prop_assert_eq!(aut.inner_index(g.mul(a, b)), aut.compose(aut.inner_index(a), aut.inner_index(b)));
        let t = inner(g, a).unwrap();
        prop_assert_eq!(t.apply(b), g.conj(b, a));
    }

    #[test]
    fn closures_are_subgroups((i, xs) in picks(2)) {
        let g: &FiniteGroup = fixtures()[i].ts.base();
        let n = g.order();
        let s = closure(g, &[xs[0] % n, xs[1] % n]);
        prop_assert_eq!(n % s.order(), 0);
        for &x in s.elements() {
            for &y in s.elements() {
                prop_assert!(s.contains(g.mul(x, g.inv(y))));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_tensor_square_order(d in prop::collection::vec(2usize..5, 1..3)) {
        prop_assume!(d.iter().product::<usize>() <= 16);
        let g = Arc::new(GroupSpec::Abelian(d.clone()).build(&EnumerationLimits::default()).unwrap());
        let (ts, _) = build_tensor_square(&g, &EnumerationLimits::default()).unwrap();
        let expected: usize = d.iter().map(|&a| d.iter().map(|&b| gcd(a, b)).product::<usize>()).product();
        prop_assert_eq!(ts.order(), expected);
    }

    #[test]
    fn spec_display_round_trips(i in 0..SPECS.len()) {
        let spec: GroupSpec = SPECS[i].parse().unwrap();
        let again: GroupSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(&spec, &again);
        let upper: GroupSpec = SPECS[i].to_uppercase().parse().unwrap();
        prop_assert_eq!(spec, upper);
    }
}
