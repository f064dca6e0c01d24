//! The atlas corpus: standard families, small direct products and a few
//! presentations, deduplicated up to isomorphism.

use crate::error::Result;
use crate::fp::EnumerationLimits;
use crate::group::spec::GroupSpec;
use crate::group::{fingerprint, isomorphic_small, FiniteGroup, Fingerprint, DEFAULT_ISO_BOUND};

/// Presentations of groups the standard families miss, with their orders.
pub const FP_CATALOG: &[(&str, usize)] = &[
    ("fp:2:a^8,b^2,b^-1*a*b=a^5", 16),
    ("fp:2:a^8,b^2,b^-1*a*b=a^3", 16),
    ("fp:2:a^4,b^4,b^-1*a*b=a^-1", 16),
    ("fp:3:a^4,b^2,c^2,[a,b],[b,c],c^-1*a*c=a*b", 16),
    ("fp:3:a^4,b^2,(a*b)^2,c^2=a^2,[a,c],[b,c]", 16),
    ("fp:3:a^3,b^3,c^2,[a,b],c^-1*a*c=a^-1,c^-1*b*c=b^-1", 18),
    ("fp:2:a^5,b^4,b^-1*a*b=a^2", 20),
    ("fp:2:a^7,b^3,b^-1*a*b=a^2", 21),
    ("fp:2:a^3=b^3,a^3=(a*b)^2", 24),
    ("fp:2:a^3,b^8,b^-1*a*b=a^-1", 24),
    ("fp:3:a^4,b^2,(a*b)^2,c^3,a^-1*c*a=c^-1,[b,c]", 24),
];

const SMALL_ABELIAN: &[(&str, usize)] = &[("cyclic:2", 2), ("cyclic:3", 3), ("cyclic:4", 4), ("abelian:2,2", 4)];

const SMALL_NONABELIAN: &[(&str, usize)] = &[
    ("symmetric:3", 6),
    ("dihedral:8", 8),
    ("quaternion:8", 8),
    ("dihedral:10", 10),
    ("quaternion:12", 12),
    ("alternating:4", 12),
    ("dihedral:12", 12),
];

/// Invariant factor lists `d1 | d2 | ...` with at least two factors.
fn noncyclic_abelian(max: usize) -> Vec<(Vec<usize>, usize)> {
    fn extend(prefix: &mut Vec<usize>, prod: usize, max: usize, out: &mut Vec<(Vec<usize>, usize)>) {
        if prefix.len() >= 2 {
            out.push((prefix.clone(), prod));
        }
        let last = *prefix.last().unwrap_or(&1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while prod * d <= max {
            if d % last == 0 {
                prefix.push(d);
                extend(prefix, prod * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Candidate specs of order at most `max`, before deduplication.
pub fn candidates(max: usize) -> Vec<(String, usize)> {
    let mut c: Vec<(String, usize)> = vec![("trivial".into(), 1)];
    c.extend((2..=max).map(|n| (format!("cyclic:{n}"), n)));
    for (d, n) in noncyclic_abelian(max) {
        let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        c.push((format!("abelian:{}", s.join(",")), n));
    }
    c.extend((6..=max).step_by(2).map(|n| (format!("dihedral:{n}"), n)));
    c.extend((8..=max).step_by(4).map(|n| (format!("quaternion:{n}"), n)));
    c.extend([("symmetric:4".to_string(), 24), ("alternating:4".to_string(), 12)]);
    for &(a, m) in SMALL_ABELIAN {
        for &(b, n) in SMALL_NONABELIAN {
            c.push((format!("product:({a})x({b})"), m * n));
        }
    }
    c.extend(FP_CATALOG.iter().map(|&(s, n)| (s.to_string(), n)));
    c.retain(|&(_, n)| n <= max);
    // stable, so families stay ahead of products and presentations
    c.sort_by_key(|&(_, n)| n);
    c
}

/// Canonical specs of pairwise non-isomorphic corpus groups of order at
/// most `max`, ordered by group order.
pub fn corpus(max: usize, limits: &EnumerationLimits) -> Result<Vec<String>> {
    let mut kept: Vec<(String, FiniteGroup, Fingerprint)> = Vec::new();
    for (s, _) in candidates(max) {
        let spec: GroupSpec = s.parse()?;
        let g = spec.build(limits)?;
        let fp = fingerprint(&g);
        let mut duplicate = false;
        for (_, h, hfp) in &kept {
            if *hfp == fp && isomorphic_small(&g, h, DEFAULT_ISO_BOUND)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push((spec.to_string(), g, fp));
        }
    }
    Ok(kept.into_iter().map(|(s, _, _)| s).collect())
}
