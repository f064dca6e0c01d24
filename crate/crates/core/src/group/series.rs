use std::sync::Arc;

use crate::error::{Error, Result};

use super::{closure, Elem, FiniteGroup, GroupHom, Subgroup};

/// `{z : zx = xz}` for all `x` in `of`.
pub fn centralizer(group: &FiniteGroup, of: &[Elem]) -> Subgroup {
    let elems: Vec<Elem> = group
        .elements()
        .filter(|&z| of.iter().all(|&x| group.mul(z, x) == group.mul(x, z)))
        .collect();
    Subgroup::from_sorted_unchecked(group.order(), elems)
}

pub fn center(group: &FiniteGroup) -> Subgroup {
    centralizer(group, group.generators())
}

pub fn derived_subgroup(group: &FiniteGroup) -> Subgroup {
    let mut comms: Vec<Elem> = Vec::new();
    let mut seen = vec![false; group.order()];
    for x in group.elements() {
        for y in group.elements() {
            let c = group.comm(x, y);
            if !seen[c] {
                seen[c] = true;
                comms.push(c);
            }
        }
    }
    closure(group, &comms)
}

/// Coset group `G/N` with cosets numbered by their minimal element.
pub fn quotient(group: &Arc<FiniteGroup>, normal: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    if let Some((x, g)) = normal.normal_witness(group) {
        return Err(Error::NotNormal { witness_element: x, witness_conjugator: g });
    }
    let n = group.order();
    let mut coset = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &h in normal.elements() {
            coset[group.mul(h, x)] = id;
        }
    }
    let columns: Vec<Vec<u32>> = group
        .generators()
        .iter()
        .map(|&s| reps.iter().map(|&r| coset[group.mul(r, s)]).collect())
        .collect();
    let name = format!("{}/N{}", group.name(), normal.order());
    let q = if reps.len() == 1 {
        FiniteGroup::trivial().with_name(name)
    } else {
        FiniteGroup::from_right_action(name, columns)?
    };
    // generator selection may drop redundant images, but coset numbering is
    // fixed by the columns, so the projection is just the coset lookup
    let q = Arc::new(q);
    let images: Vec<Elem> = coset.iter().map(|&c| c as usize).collect();
    let proj = GroupHom::new(group.clone(), q.clone(), images)?;
    Ok((q, proj))
}

/// Upper central series term `Z_n(G)`, with `Z_0 = 1`.
pub fn nth_center(group: &Arc<FiniteGroup>, n: usize) -> Subgroup {
    let mut current = Subgroup::trivial(group);
    for _ in 0..n {
        let (q, proj) = quotient(group, &current).expect("upper central terms are normal");
        let zq = center(&q);
        let lifted: Vec<Elem> = group.elements().filter(|&x| zq.contains(proj.apply(x))).collect();
        let next = Subgroup::from_sorted_unchecked(group.order(), lifted);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, cyclic, dihedral, isomorphic_small, symmetric};

    #[test]
    fn center_of_abelian_is_whole() {
        let g = abelian(&[2, 6]).unwrap();
        assert!(center(&g).is_whole());
    }

    #[test]
    fn derived_subgroup_of_s3() {
        let s3 = symmetric(3).unwrap();
        let d = derived_subgroup(&s3);
        // oracle: brute-force commutator set
        let mut set: Vec<Elem> = Vec::new();
        for x in s3.elements() {
            for y in s3.elements() {
                let c = s3.mul(s3.mul(s3.inv(x), s3.inv(y)), s3.mul(x, y));
                if !set.contains(&c) {
                    set.push(c);
                }
            }
        }
        set.sort();
        assert_eq!(d.elements(), &set[..]);
        assert_eq!(d.order(), 3);
    }

    #[test]
    fn upper_central_series_of_d8() {
        let d8 = Arc::new(dihedral(8).unwrap());
        assert!(nth_center(&d8, 0).is_trivial());
        assert_eq!(nth_center(&d8, 1), center(&d8));
        assert!(nth_center(&d8, 2).is_whole());
        let s3 = Arc::new(symmetric(3).unwrap());
        assert!(nth_center(&s3, 3).is_trivial());
    }

    #[test]
    fn quotients() {
        let d8 = Arc::new(dihedral(8).unwrap());
        let (q, proj) = quotient(&d8, &Subgroup::trivial(&d8)).unwrap();
        assert_eq!(q.order(), 8);
        assert!(proj.is_injective() && proj.is_surjective());

        let (q, _) = quotient(&d8, &Subgroup::whole(&d8)).unwrap();
        assert_eq!(q.order(), 1);

        let z = center(&d8);
        let (q, proj) = quotient(&d8, &z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj.kernel(), z);
        assert!(proj.is_surjective());
        assert!(isomorphic_small(&q, &abelian(&[2, 2]).unwrap(), 256).unwrap());
        // hand check of coset multiplication: r Z * r Z = r^2 Z = Z
        assert_eq!(q.mul(proj.apply(1), proj.apply(1)), 0);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = Arc::new(symmetric(3).unwrap());
        let t = closure(&s3, &[s3.generators()[0]]);
        assert!(matches!(quotient(&s3, &t), Err(Error::NotNormal { .. })));
        let _ = cyclic(2);
    }
}
