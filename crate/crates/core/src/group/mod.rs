//! Concrete finite groups.
//!
//! Elements are dense indices `0..order` with the identity at `0`. A group
//! is stored as the right regular action of an irredundant generating
//! sequence: one column per generator (and one per inverse) giving `x * s`
//! for every element `x`. Every element carries a minimal word in those
//! letters, found by breadth-first search with letters tried in order
//! `g0, g0^-1, g1, g1^-1, ...`. Groups up to [`DENSE_LIMIT`] elements also
//! keep a full Cayley table; larger groups multiply by tracing words.

mod families;
mod hom;
mod iso;
mod series;
pub mod spec;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use families::*;
pub use hom::{extend_generator_images, GroupHom};
pub use iso::{
    abelian_invariants, find_isomorphism, fingerprint, isomorphic_small, Fingerprint,
    DEFAULT_ISO_BOUND,
};
pub(crate) use iso::search_injective_homs;
pub use series::{center, centralizer, derived_subgroup, nth_center, quotient};

pub type Elem = usize;

/// Largest order for which a dense Cayley table is materialised.
pub const DENSE_LIMIT: usize = 2048;
/// Associativity is checked on every triple up to this order, sampled above.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 10_000;

const NONE: u32 = u32::MAX;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    generators: Vec<Elem>,
    /// `letters[l][x] = x * letter(l)`; letter `2i` is generator `i`, `2i+1` its inverse.
    letters: Vec<Vec<u32>>,
    inverses: Vec<u32>,
    /// Breadth-first order of the minimal-word tree, identity first.
    bfs: Vec<u32>,
    parent: Vec<u32>,
    parent_letter: Vec<u16>,
    word_start: Vec<u32>,
    word_len: Vec<u16>,
    word_letters: Vec<u16>,
    cayley: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from the right regular action of candidate generators.
    ///
    /// `columns[j][x]` must be `x * c_j` for some element `c_j`, with `0` the
    /// identity, so that `c_j = columns[j][0]`. Candidates already in the
    /// subgroup generated by earlier kept ones are dropped, which leaves an
    /// irredundant generating sequence.
    pub fn from_right_action(name: impl Into<String>, columns: Vec<Vec<u32>>) -> Result<Self> {
        let name = name.into();
        let order = match columns.first() {
            Some(c) => c.len(),
            None => 1,
        };
        if order == 0 {
            return Err(Error::InvalidGroup("empty action".into()));
        }
        for col in &columns {
            check_permutation(col, order)?;
        }

        let mut kept: Vec<Vec<u32>> = Vec::new();
        let mut reached = vec![false; order];
        reached[0] = true;
        for col in columns {
            let target = col[0] as usize;
            if reached[target] {
                continue;
            }
            kept.push(col);
            reached = orbit_of_identity(&kept, order);
        }
        if reached.iter().any(|&r| !r) {
            return Err(Error::InvalidGroup(format!(
                "generators of `{name}` do not act transitively on {order} points"
            )));
        }
        Self::from_irredundant(name, kept)
    }

    fn from_irredundant(name: String, gens: Vec<Vec<u32>>) -> Result<Self> {
        let order = gens.first().map_or(1, |c| c.len());
        let generators: Vec<Elem> = gens.iter().map(|c| c[0] as usize).collect();
        let mut letters = Vec::with_capacity(2 * gens.len());
        for col in gens {
            let mut inv = vec![0u32; order];
            for (x, &y) in col.iter().enumerate() {
                inv[y as usize] = x as u32;
            }
            letters.push(col);
            letters.push(inv);
        }

        let mut parent = vec![NONE; order];
        let mut parent_letter = vec![0u16; order];
        let mut bfs = Vec::with_capacity(order);
        parent[0] = 0;
        bfs.push(0u32);
        let mut head = 0;
        while head < bfs.len() {
            let x = bfs[head] as usize;
            head += 1;
            for (l, col) in letters.iter().enumerate() {
                let y = col[x] as usize;
                if parent[y] == NONE {
                    parent[y] = x as u32;
                    parent_letter[y] = l as u16;
                    bfs.push(y as u32);
                }
            }
        }
        if bfs.len() != order {
            return Err(Error::InvalidGroup("generators do not reach every element".into()));
        }

        let mut word_start = vec![0u32; order];
        let mut word_len = vec![0u16; order];
        let mut word_letters: Vec<u16> = Vec::new();
        for &x in &bfs[1..] {
            let x = x as usize;
            let p = parent[x] as usize;
            let start = word_letters.len() as u32;
            let (ps, pl) = (word_start[p] as usize, word_len[p] as usize);
            for i in ps..ps + pl {
                word_letters.push(word_letters[i]);
            }
            word_letters.push(parent_letter[x]);
            word_start[x] = start;
            word_len[x] = (pl + 1) as u16;
        }

        let mut group = FiniteGroup {
            name,
            order,
            generators,
            letters,
            inverses: Vec::new(),
            bfs,
            parent,
            parent_letter,
            word_start,
            word_len,
            word_letters,
            cayley: None,
        };

        let inverses: Vec<u32> = (0..order)
            .map(|x| {
                let mut y = 0usize;
                for &l in group.word(x).iter().rev() {
                    y = group.letters[(l ^ 1) as usize][y] as usize;
                }
                y as u32
            })
            .collect();
        group.inverses = inverses;

        if order <= DENSE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                let row = &mut table[a * order..(a + 1) * order];
                row[0] = a as u32;
                for &b in &group.bfs[1..] {
                    let b = b as usize;
                    let p = group.parent[b] as usize;
                    let l = group.parent_letter[b] as usize;
                    row[b] = group.letters[l][row[p] as usize];
                }
            }
            group.cayley = Some(table);
        }

        group.validate()?;
        Ok(group)
    }

    /// Builds a group from a full multiplication table with `0` as identity.
    pub fn from_cayley_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup("Cayley table must be square and non-empty".into()));
        }
        for x in 0..n {
            if table[0][x] != x || table[x][0] != x {
                return Err(Error::InvalidGroup(format!("identity law fails at {x}")));
            }
        }
        let columns: Vec<Vec<u32>> = (1..n)
            .map(|e| (0..n).map(|x| table[x][e] as u32).collect())
            .collect();
        let group = Self::from_right_action(name, columns)?;
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if group.mul(a, b) != c {
                    return Err(Error::InvalidGroup(format!(
                        "table is not a group: product {a}*{b} inconsistent"
                    )));
                }
            }
        }
        Ok(group)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::InvalidGroup(format!("inverse table wrong at {x}")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_irredundant("trivial".into(), Vec::new()).expect("trivial group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> Elem {
        0
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn is_dense(&self) -> bool {
        self.cayley.is_some()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.cayley {
            return t[a * self.order + b] as usize;
        }
        let mut x = a;
        for &l in self.word(b) {
            x = self.letters[l as usize][x] as usize;
        }
        x
    }

    /// Range-checked product.
    pub fn multiply(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a] as usize
    }

    /// `x^y = y^-1 x y`.
    #[inline]
    pub fn conj(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    #[inline]
    pub fn comm(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Left-normed iterated commutator `[x, y1, ..., yk]`.
    pub fn comm_iter(&self, x: Elem, ys: &[Elem]) -> Elem {
        ys.iter().fold(x, |acc, &y| self.comm(acc, y))
    }

    pub fn conjugate(&self, x: Elem, y: Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.conj(x, y))
    }

    pub fn commutator(&self, x: Elem, y: Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.comm(x, y))
    }

    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Minimal word for `x` as letter indices (`2i` generator `i`, `2i+1` its inverse).
    #[inline]
    pub fn word(&self, x: Elem) -> &[u16] {
        let s = self.word_start[x] as usize;
        &self.word_letters[s..s + self.word_len[x] as usize]
    }

    /// Minimal word rendered with generator names `a, b, c, ...`.
    pub fn word_string(&self, x: Elem) -> String {
        let w = self.word(x);
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&l| {
                let name = generator_name((l / 2) as usize);
                if l % 2 == 1 {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Right multiplication by letter `l`, as a column over all elements.
    pub fn letter_action(&self, l: usize) -> &[u32] {
        &self.letters[l]
    }

    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    /// Elements in breadth-first order of the minimal-word tree.
    pub fn bfs_order(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bfs.iter().map(|&x| x as usize)
    }

    /// Parent of `x` in the minimal-word tree and the letter leading to `x`.
    pub fn tree_edge(&self, x: Elem) -> (Elem, usize) {
        (self.parent[x] as usize, self.parent_letter[x] as usize)
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if x < self.order {
            Ok(x)
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.order })
        }
    }

    /// Closure of `generators` has full order and the inverse table is consistent.
    pub fn verify_structure(&self) -> bool {
        closure(self, &self.generators).order() == self.order && self.validate().is_ok()
    }
}

pub fn generator_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{i}")
    }
}

fn check_permutation(col: &[u32], order: usize) -> Result<()> {
    if col.len() != order {
        return Err(Error::InvalidGroup("action columns differ in length".into()));
    }
    let mut seen = vec![false; order];
    for &y in col {
        let y = y as usize;
        if y >= order || seen[y] {
            return Err(Error::InvalidGroup("action column is not a permutation".into()));
        }
        seen[y] = true;
    }
    Ok(())
}

fn orbit_of_identity(cols: &[Vec<u32>], order: usize) -> Vec<bool> {
    let mut reached = vec![false; order];
    reached[0] = true;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for c in cols {
            let y = c[x] as usize;
            if !reached[y] {
                reached[y] = true;
                queue.push(y);
            }
        }
    }
    reached
}

/// A subgroup, stored as the sorted list of its element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<Elem>,
}

impl Subgroup {
    /// Wraps a set that the caller claims is a subgroup; closure is verified.
    pub fn from_set(group: &FiniteGroup, mut elements: Vec<Elem>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            group.check(x)?;
        }
        let mut member = vec![false; group.order()];
        for &x in &elements {
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::NotClosed { a: 0, b: 0 });
        }
        for &a in &elements {
            for &b in &elements {
                if !member[group.mul(a, b)] {
                    return Err(Error::NotClosed { a, b });
                }
            }
        }
        Ok(Subgroup { parent_order: group.order(), elements })
    }

    pub(crate) fn from_sorted_unchecked(parent_order: usize, elements: Vec<Elem>) -> Self {
        Subgroup { parent_order, elements }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { parent_order: group.order(), elements: group.elements().collect() }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup { parent_order: group.order(), elements: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Normal iff stable under conjugation by every generator of the parent.
    pub fn normal_witness(&self, group: &FiniteGroup) -> Option<(Elem, Elem)> {
        let member = self.membership();
        for &g in group.generators() {
            for &x in &self.elements {
                if !member[group.conj(x, g)] {
                    return Some((x, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        self.normal_witness(group).is_none()
    }
}

/// Smallest subgroup containing `seed`, by breadth-first product saturation.
pub fn closure(group: &FiniteGroup, seed: &[Elem]) -> Subgroup {
    let gens: Vec<Elem> = {
        let mut s: Vec<Elem> = seed.iter().copied().filter(|&x| x != 0).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let mut member = vec![false; group.order()];
    member[0] = true;
    let mut list = vec![0];
    let mut head = 0;
    while head < list.len() {
        let x = list[head];
        head += 1;
        for &s in &gens {
            let y = group.mul(x, s);
            if !member[y] {
                member[y] = true;
                list.push(y);
            }
        }
    }
    list.sort_unstable();
    Subgroup::from_sorted_unchecked(group.order(), list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inverse_laws() {
        for g in [cyclic(6).unwrap(), dihedral(8).unwrap(), symmetric(4).unwrap()] {
            for x in g.elements() {
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
            }
            assert!(g.verify_structure());
        }
    }

    #[test]
    fn multiply_rejects_out_of_range() {
        let g = cyclic(4).unwrap();
        assert_eq!(g.multiply(0, 3), Ok(3));
        assert!(matches!(g.multiply(4, 0), Err(Error::IndexOutOfRange { index: 4, order: 4 })));
    }

    #[test]
    fn cyclic_square_of_generator_has_order_two() {
        let g = cyclic(4).unwrap();
        assert_eq!(g.element_order(g.mul(1, 1)), 2);
    }

    #[test]
    fn commutator_and_conjugate_basics() {
        let a = abelian(&[2, 6]).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.comm(x, y), 0);
            }
            assert_eq!(a.conj(x, 0), x);
        }
    }

    #[test]
    fn closure_examples() {
        let g = cyclic(6).unwrap();
        assert_eq!(closure(&g, &[]).elements(), &[0]);
        assert_eq!(closure(&g, &g.elements().collect::<Vec<_>>()).order(), 6);
        let inv = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(closure(&g, &[inv]).order(), 2);
    }

    #[test]
    fn cayley_table_roundtrip() {
        let g = dihedral(8).unwrap();
        let table: Vec<Vec<usize>> =
            g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect();
        let h = FiniteGroup::from_cayley_table("copy", &table).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(h.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn bad_cayley_table_rejected() {
        // Z4 with 1*1 and 1*3 swapped: rows stay Latin at index 1 but
        // associativity or the identity law breaks.
        let mut table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        table[1][1] = 0;
        table[1][3] = 2;
        assert!(FiniteGroup::from_cayley_table("bad", &table).is_err());
    }

    #[test]
    fn words_are_minimal_and_evaluate_correctly() {
        let g = symmetric(4).unwrap();
        for x in g.elements() {
            let mut y = 0;
            for &l in g.word(x) {
                y = g.letter_action(l as usize)[y] as usize;
            }
            assert_eq!(y, x);
        }
        // breadth-first construction: word length never decreases along bfs order
        let lens: Vec<usize> = g.bfs_order().map(|x| g.word(x).len()).collect();
        assert!(lens.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn subgroup_from_set_detects_non_closure() {
        let g = cyclic(6).unwrap();
        assert!(matches!(Subgroup::from_set(&g, vec![0, 1]), Err(Error::NotClosed { .. })));
        assert!(Subgroup::from_set(&g, vec![0, 3]).is_ok());
    }
}
