//! Standard families. Generator choices are fixed:
//!
//! * `cyclic(n)`: one generator, element `i` is `g^i`.
//! * `abelian(d1, ..., dk)`: one generator per factor, first factor least significant.
//! * `dihedral(2n)`: rotation `r` then reflection `s`; element `i + n*j` is `r^i s^j`.
//! * `quaternion(4n)`: `a` of order `2n` then `b` with `b^2 = a^n`, `a^b = a^-1`.
//! * `symmetric(n)`: the transposition `(1 2)` then the cycle `(1 2 ... n)`.
//! * `alternating(n)`: `(1 2 3)` then `(1 ... n)` for odd `n`, `(2 ... n)` for even `n`.
//! * `direct_product(G, H)`: generators of `G` followed by those of `H`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::{coset_table_to_group, todd_coxeter, EnumerationLimits, Presentation};

use super::FiniteGroup;

pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Builds a group from a multiplication rule on `0..order` (identity `0`).
pub fn from_mul_fn(
    name: impl Into<String>,
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    gens: &[usize],
) -> Result<FiniteGroup> {
    if order == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    let columns = gens
        .iter()
        .map(|&g| (0..order).map(|x| mul(x, g) as u32).collect())
        .collect();
    FiniteGroup::from_right_action(name, columns)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic order must be positive".into()));
    }
    from_mul_fn(format!("cyclic:{n}"), n, |a, b| (a + b) % n, &[1 % n])
}

pub fn abelian(factors: &[usize]) -> Result<FiniteGroup> {
    if factors.iter().any(|&d| d == 0) {
        return Err(Error::InvalidParameter("abelian factors must be positive".into()));
    }
    let order: usize = factors.iter().product();
    let mut strides = Vec::with_capacity(factors.len());
    let mut s = 1;
    for &d in factors {
        strides.push(s);
        s *= d;
    }
    let mul = |a: usize, b: usize| {
        factors
            .iter()
            .zip(&strides)
            .map(|(&d, &st)| ((a / st % d + b / st % d) % d) * st)
            .sum()
    };
    let name = format!(
        "abelian:{}",
        factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    );
    let gens: Vec<usize> = strides.iter().zip(factors).map(|(&st, &d)| if d > 1 { st } else { 0 }).collect();
    from_mul_fn(name, order, mul, &gens)
}

/// Dihedral group of the given order (symmetries of a regular `order/2`-gon).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::InvalidParameter(format!("dihedral order {order} must be even and ≥ 2")));
    }
    let n = order / 2;
    let mul = |a: usize, b: usize| {
        let (i, p) = (a % n, a / n);
        let (k, q) = (b % n, b / n);
        let rot = if p == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((p + q) % 2)
    };
    from_mul_fn(format!("dihedral:{order}"), order, mul, &[1 % n, n])
}

/// Dicyclic group of order `4n`; `quaternion(8)` is the quaternion group.
pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::InvalidParameter(format!(
            "quaternion order {order} must be a multiple of 4 and ≥ 8"
        )));
    }
    let m = order / 2;
    let n = order / 4;
    let mul = |x: usize, y: usize| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        if j == 0 {
            (i + k) % m + m * l
        } else if l == 0 {
            (i + m - k) % m + m
        } else {
            (i + m - k + n) % m
        }
    };
    from_mul_fn(format!("quaternion:{order}"), order, mul, &[1, m])
}

/// Closure of permutations given as 0-based image lists, in breadth-first order.
pub fn from_permutations(
    name: impl Into<String>,
    degree: usize,
    gens: &[Vec<usize>],
) -> Result<FiniteGroup> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidParameter(format!("{g:?} is not a permutation of degree {degree}")));
        }
    }
    let identity: Vec<u8> = (0..degree as u8).collect();
    if degree > u8::MAX as usize {
        return Err(Error::InvalidParameter("permutation degree too large".into()));
    }
    let gens8: Vec<Vec<u8>> = gens.iter().map(|g| g.iter().map(|&x| x as u8).collect()).collect();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); gens8.len()];
    let mut head = 0;
    while head < elems.len() {
        for (j, s) in gens8.iter().enumerate() {
            // apply elems[head] first, then s
            let prod: Vec<u8> = elems[head].iter().map(|&x| s[x as usize]).collect();
            let next = elems.len();
            let idx = *index.entry(prod.clone()).or_insert(next);
            if idx == next {
                elems.push(prod);
            }
            columns[j].push(idx as u32);
        }
        head += 1;
        if elems.len() > 1 << 20 {
            return Err(Error::BoundExceeded { what: "permutation group order", value: elems.len(), bound: 1 << 20 });
        }
    }
    FiniteGroup::from_right_action(name, columns)
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()];
    }
    p
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::InvalidParameter(format!("symmetric degree {n} outside 1..=5")));
    }
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())]
    };
    from_permutations(format!("symmetric:{n}"), n, &gens)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::InvalidParameter(format!("alternating degree {n} outside 1..=5")));
    }
    let gens = match n {
        1 | 2 => vec![],
        3 => vec![cycle(3, &[0, 1, 2])],
        _ if n % 2 == 1 => vec![cycle(n, &[0, 1, 2]), cycle(n, &(0..n).collect::<Vec<_>>())],
        _ => vec![cycle(n, &[0, 1, 2]), cycle(n, &(1..n).collect::<Vec<_>>())],
    };
    from_permutations(format!("alternating:{n}"), n, &gens)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let mul = |a: usize, b: usize| g.mul(a % m, b % m) + m * h.mul(a / m, b / m);
    let gens: Vec<usize> = g
        .generators()
        .iter()
        .copied()
        .chain(h.generators().iter().map(|&y| m * y))
        .collect();
    from_mul_fn(format!("product:({})x({})", g.name(), h.name()), m * n, mul, &gens)
}

/// Enumerates the presentation over the trivial subgroup.
pub fn from_presentation(
    name: impl Into<String>,
    presentation: &Presentation,
    limits: &EnumerationLimits,
) -> Result<FiniteGroup> {
    let table = todd_coxeter(presentation, &[], limits)?;
    Ok(coset_table_to_group(&table)?.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, derived_subgroup};

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(quaternion(8).unwrap().order(), 8);
        assert_eq!(abelian(&[2, 4]).unwrap().order(), 8);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()).unwrap().order(), 12);
    }

    #[test]
    fn dihedral_matches_square_symmetries() {
        // permutation model on the vertices 0..4 of a square
        let perm = from_permutations("sq", 4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).unwrap();
        let d8 = dihedral(8).unwrap();
        assert!(crate::group::isomorphic_small(&perm, &d8, 256).unwrap());
        assert_eq!(center(&d8).order(), 2);
        // r * s is a reflection: squares to the identity
        let rs = d8.mul(1, 4);
        assert_eq!(d8.mul(rs, rs), 0);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = quaternion(8).unwrap();
        let inv: Vec<_> = q.elements().filter(|&x| q.element_order(x) == 2).collect();
        assert_eq!(inv.len(), 1);
        assert_eq!(center(&q).order(), 2);
    }

    #[test]
    fn alternating_five_is_perfect() {
        let a5 = alternating(5).unwrap();
        assert_eq!(derived_subgroup(&a5).order(), 60);
        // oracle: even permutations of 5 points
        let mut even = 0;
        for p in permutations(5) {
            if parity(&p) == 0 {
                even += 1;
            }
        }
        assert_eq!(even, 60);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn parity(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    }

    #[test]
    fn invalid_parameters() {
        assert!(cyclic(0).is_err());
        assert!(dihedral(7).is_err());
        assert!(quaternion(6).is_err());
        assert!(symmetric(6).is_err());
        assert!(from_permutations("x", 3, &[vec![0, 0, 1]]).is_err());
    }
}
