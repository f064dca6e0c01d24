use serde::Serialize;

use crate::error::{Error, Result};

use super::{center, derived_subgroup, Elem, FiniteGroup};

pub const DEFAULT_ISO_BOUND: usize = 256;

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs, ascending.
    pub element_orders: Vec<(usize, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization: Vec<usize>,
}

pub fn fingerprint(group: &FiniteGroup) -> Fingerprint {
    let mut counts = std::collections::BTreeMap::new();
    for x in group.elements() {
        *counts.entry(group.element_order(x)).or_insert(0usize) += 1;
    }
    let derived = derived_subgroup(group);
    let abelianization = abelianization_invariants(group, derived.elements());
    Fingerprint {
        order: group.order(),
        element_orders: counts.into_iter().collect(),
        center_order: center(group).order(),
        derived_order: derived.order(),
        abelianization,
    }
}

fn abelianization_invariants(group: &FiniteGroup, derived: &[Elem]) -> Vec<usize> {
    let n = group.order();
    // coset labels of G' and element orders in G/G'
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] == usize::MAX {
            for &d in derived {
                coset[group.mul(d, x)] = reps.len();
            }
            reps.push(x);
        }
    }
    let orders: Vec<usize> = reps
        .iter()
        .map(|&r| {
            let (mut y, mut k) = (r, 1);
            while coset[y] != 0 {
                y = group.mul(y, r);
                k += 1;
            }
            k
        })
        .collect();
    invariants_from_orders(&orders)
}

/// Invariant factors `d1 | d2 | ... | dk` (all > 1) of a finite abelian group.
pub fn abelian_invariants(group: &FiniteGroup) -> Vec<usize> {
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
    invariants_from_orders(&orders)
}

fn invariants_from_orders(orders: &[usize]) -> Vec<usize> {
    let n = orders.len();
    let mut prime_parts: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in primes_dividing(n) {
        // c_k = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i))
        let mut ranks = Vec::new(); // ranks[k-1] = #{i : e_i >= k}
        let mut prev_log = 0u32;
        let mut pk = 1usize;
        loop {
            pk *= p;
            let c = orders.iter().filter(|&&o| pk % o == 0).count();
            let log = ilog(c, p);
            let r = log - prev_log;
            if r == 0 {
                break;
            }
            ranks.push(r);
            prev_log = log;
        }
        let mut exps = Vec::new();
        for k in 0..ranks.len() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..ranks[k] - next {
                exps.push(k as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        prime_parts.push((p, exps));
    }
    let len = prime_parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..len)
        .map(|j| {
            prime_parts
                .iter()
                .map(|(p, e)| e.get(j).map_or(1, |&k| p.pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn primes_dividing(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut c: usize, p: usize) -> u32 {
    let mut k = 0;
    while c > 1 {
        c /= p;
        k += 1;
    }
    k
}

/// Extends images of the first `images.len()` generators of `source` over the
/// subgroup they generate. Returns `None` on any conflict, or on a repeated
/// image when `injective` is set.
pub(crate) fn partial_extension(
    source: &FiniteGroup,
    target: &FiniteGroup,
    images: &[Elem],
    injective: bool,
) -> Option<Vec<Elem>> {
    const UNSET: Elem = Elem::MAX;
    let gens = &source.generators()[..images.len()];
    let mut map = vec![UNSET; source.order()];
    let mut used = vec![false; if injective { target.order() } else { 0 }];
    map[0] = 0;
    if injective {
        used[0] = true;
    }
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &s) in gens.iter().enumerate() {
            let y = source.mul(x, s);
            let img = target.mul(map[x], images[i]);
            if map[y] == UNSET {
                if injective {
                    if used[img] {
                        return None;
                    }
                    used[img] = true;
                }
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

/// Backtracking over generator images, pruned by element order and by
/// consistency on the subgroup generated so far. `visit` receives each
/// complete injective homomorphism and returns `false` to stop the search.
pub(crate) fn search_injective_homs(
    source: &FiniteGroup,
    target: &FiniteGroup,
    mut visit: impl FnMut(Vec<Elem>) -> bool,
) {
    let gens = source.generators();
    let target_orders: Vec<usize> = target.elements().map(|y| target.element_order(y)).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let o = source.element_order(g);
            target.elements().filter(|&y| target_orders[y] == o).collect()
        })
        .collect();
    if gens.is_empty() {
        visit(vec![0; source.order()]);
        return;
    }
    let mut images = Vec::with_capacity(gens.len());
    fn rec(
        source: &FiniteGroup,
        target: &FiniteGroup,
        candidates: &[Vec<Elem>],
        images: &mut Vec<Elem>,
        visit: &mut dyn FnMut(Vec<Elem>) -> bool,
    ) -> bool {
        let i = images.len();
        for &c in &candidates[i] {
            images.push(c);
            if let Some(map) = partial_extension(source, target, images, true) {
                if i + 1 == candidates.len() {
                    if !visit(map) {
                        images.pop();
                        return false;
                    }
                } else if !rec(source, target, candidates, images, visit) {
                    images.pop();
                    return false;
                }
            }
            images.pop();
        }
        true
    }
    rec(source, target, &candidates, &mut images, &mut visit);
}

/// An explicit isomorphism `g -> h` as an image table, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<Elem>> {
    if g.order() != h.order() {
        return None;
    }
    let mut found = None;
    search_injective_homs(g, h, |map| {
        found = Some(map);
        false
    });
    found
}

pub fn isomorphic_small(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<bool> {
    for grp in [g, h] {
        if grp.order() > bound {
            return Err(Error::BoundExceeded { what: "group order", value: grp.order(), bound });
        }
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(false);
    }
    Ok(find_isomorphism(g, h).is_some())
}
