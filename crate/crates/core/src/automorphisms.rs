//! `Aut(G)` by exhaustive search, with every automorphism classified as
//! inner, commuting, central, tensor commuting and tensor central.
//!
//! Products are read left to right: `αβ` applies `α` first, so
//! `(αβ)(x) = β(α(x))`. With `T_g(x) = x^g` this makes `g ↦ T_g` a
//! homomorphism, matching the right-action conventions used elsewhere.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{center, search_injective_homs, Elem, FiniteGroup};
use crate::invariants::tensor_center;
use crate::tensor::TensorSquare;

pub const DEFAULT_MAX_GROUP_ORDER: usize = 24;
pub const SLOW_MAX_GROUP_ORDER: usize = 60;
pub const DEFAULT_MAX_AUTOMORPHISMS: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutBounds {
    pub max_group_order: usize,
    pub max_automorphisms: usize,
}

impl Default for AutBounds {
    fn default() -> Self {
        AutBounds { max_group_order: DEFAULT_MAX_GROUP_ORDER, max_automorphisms: DEFAULT_MAX_AUTOMORPHISMS }
    }
}

impl AutBounds {
    pub fn slow() -> Self {
        AutBounds { max_group_order: SLOW_MAX_GROUP_ORDER, ..Self::default() }
    }
}

/// Tensor flags stay `None` until [`classify`] has seen a tensor square.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Least `g` with `α = T_g`.
    pub inner: Option<Elem>,
    pub commuting: bool,
    pub central: bool,
    pub tensor_commuting: Option<bool>,
    pub tensor_central: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Elem>,
    flags: Flags,
}

impl Automorphism {
    /// Checks that `images` is a bijective homomorphism and sets the
    /// classical flags.
    pub fn new(g: &FiniteGroup, images: Vec<Elem>) -> Result<Self> {
        if images.len() != g.order() {
            return Err(Error::InvalidParameter("image table has wrong length".into()));
        }
        let mut seen = vec![false; g.order()];
        for &y in &images {
            g.check(y)?;
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::ExtensionFailed(format!("{y} is hit twice")));
            }
        }
        for x in g.elements() {
            for &s in g.generators() {
                if images[g.mul(x, s)] != g.mul(images[x], images[s]) {
                    return Err(Error::ExtensionFailed(format!("not multiplicative at ({x}, {s})")));
                }
            }
        }
        let z = center(g).membership();
        let inner = g.elements().find(|&h| g.elements().all(|x| g.conj(x, h) == images[x]));
        Ok(Self::with_classical_flags(g, images, &z, inner))
    }

    fn with_classical_flags(g: &FiniteGroup, images: Vec<Elem>, z: &[bool], inner: Option<Elem>) -> Self {
        let flags = Flags {
            inner,
            commuting: is_commuting(g, &images),
            central: g.elements().all(|x| z[bracket(g, x, &images)]),
            tensor_commuting: None,
            tensor_central: None,
        };
        Automorphism { images, flags }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn flags(&self) -> &Flags {
        &self.flags
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }
}

/// `T_g : x ↦ x^g`.
pub fn inner(g: &FiniteGroup, h: Elem) -> Result<Automorphism> {
    g.check(h)?;
    let images: Vec<Elem> = g.elements().map(|x| g.conj(x, h)).collect();
    let z = center(g).membership();
    // least inducer: T_h = T_k iff h k^-1 is central
    let least = g.elements().find(|&k| z[g.mul(h, g.inv(k))]);
    Ok(Automorphism::with_classical_flags(g, images, &z, least))
}

/// `[x, α] = x⁻¹ α(x)`.
#[inline]
pub fn bracket(g: &FiniteGroup, x: Elem, alpha: &[Elem]) -> Elem {
    g.mul(g.inv(x), alpha[x])
}

/// `x α(x) = α(x) x` for all `x`.
pub fn is_commuting(g: &FiniteGroup, alpha: &[Elem]) -> bool {
    g.elements().all(|x| g.mul(x, alpha[x]) == g.mul(alpha[x], x))
}

/// `[x, α] ∈ Z(G)` for all `x`.
pub fn is_central(g: &FiniteGroup, alpha: &[Elem]) -> bool {
    let z = center(g).membership();
    g.elements().all(|x| z[bracket(g, x, alpha)])
}

/// `x ⊗ α(x) = 1` for all `x`.
pub fn is_tensor_commuting(ts: &TensorSquare, alpha: &[Elem]) -> bool {
    ts.base().elements().all(|x| ts.pairing(x, alpha[x]) == 0)
}

/// `[x, α] ∈ Z^⊗(G)` for all `x`.
pub fn is_tensor_central(ts: &TensorSquare, alpha: &[Elem]) -> Result<bool> {
    let z = tensor_center(ts)?.membership();
    Ok(ts.base().elements().all(|x| z[bracket(ts.base(), x, alpha)]))
}

/// All automorphisms in lexicographic order of their image tables. The
/// identity is always first: any other automorphism moves some least `x`
/// to an element that is not smaller.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    group: Arc<FiniteGroup>,
    all: Vec<Automorphism>,
    index: HashMap<Vec<Elem>, usize>,
}

pub fn automorphism_group(g: &Arc<FiniteGroup>, bounds: &AutBounds) -> Result<AutomorphismGroup> {
    if g.order() > bounds.max_group_order {
        return Err(Error::BoundExceeded { what: "group order", value: g.order(), bound: bounds.max_group_order });
    }
    let mut maps: Vec<Vec<Elem>> = Vec::new();
    let mut overflow = false;
    search_injective_homs(g, g, |map| {
        if maps.len() == bounds.max_automorphisms {
            overflow = true;
            return false;
        }
        maps.push(map);
        true
    });
    if overflow {
        return Err(Error::BoundExceeded {
            what: "automorphism count",
            value: maps.len() + 1,
            bound: bounds.max_automorphisms,
        });
    }
    maps.sort_unstable();
    let index: HashMap<Vec<Elem>, usize> = maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let z = center(g).membership();
    let mut inducer: Vec<Option<Elem>> = vec![None; maps.len()];
    for h in g.elements() {
        let t: Vec<Elem> = g.elements().map(|x| g.conj(x, h)).collect();
        let i = *index.get(&t).ok_or_else(|| Error::SubgroupViolation(format!("T_{h} missing from Aut(G)")))?;
        inducer[i].get_or_insert(h);
    }
    let all = maps
        .into_iter()
        .zip(inducer)
        .map(|(m, inner)| Automorphism::with_classical_flags(g, m, &z, inner))
        .collect();
    Ok(AutomorphismGroup { group: g.clone(), all, index })
}

/// Sets the tensor flags of every automorphism and checks that `Aut_c(G)`
/// and `Aut_c^⊗(G)` are subgroups.
pub fn classify(aut: &mut AutomorphismGroup, ts: &TensorSquare) -> Result<()> {
    if aut.group().order() != ts.base().order() {
        return Err(Error::InvalidParameter("tensor square of a different group".into()));
    }
    let zt = tensor_center(ts)?.membership();
    let g = ts.base().clone();
    for a in &mut aut.all {
        a.flags.tensor_commuting = Some(is_tensor_commuting(ts, &a.images));
        a.flags.tensor_central = Some(g.elements().all(|x| zt[bracket(&g, x, &a.images)]));
    }
    for (name, set) in [("Aut_c(G)", aut.central()), ("Aut_c⊗(G)", aut.tensor_central())] {
        if let Some(w) = aut.subgroup_witness(&set) {
            return Err(Error::SubgroupViolation(format!(
                "{name} has {} elements but generates automorphism {w} outside it",
                set.len()
            )));
        }
    }
    Ok(())
}

/// [`automorphism_group`] followed by [`classify`].
pub fn classify_all(ts: &TensorSquare, bounds: &AutBounds) -> Result<AutomorphismGroup> {
    let mut aut = automorphism_group(ts.base(), bounds)?;
    classify(&mut aut, ts)?;
    Ok(aut)
}

impl AutomorphismGroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.all[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Automorphism> {
        self.all.iter()
    }

    pub fn index_of(&self, images: &[Elem]) -> Option<usize> {
        self.index.get(images).copied()
    }

    pub const fn identity(&self) -> usize {
        0
    }

    fn lookup(&self, images: Vec<Elem>) -> usize {
        *self.index.get(&images).expect("a complete automorphism list is closed")
    }

    /// `αβ`: apply `a` first, then `b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let (fa, fb) = (&self.all[a].images, &self.all[b].images);
        self.lookup(fa.iter().map(|&x| fb[x]).collect())
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut inv = vec![0; self.group.order()];
        for (x, &y) in self.all[a].images.iter().enumerate() {
            inv[y] = x;
        }
        self.lookup(inv)
    }

    pub fn power(&self, a: usize, n: i64) -> usize {
        let base = if n < 0 { self.inverse(a) } else { a };
        let mut e = n.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(acc, sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.compose(sq, sq);
            }
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.compose(x, a);
            k += 1;
        }
        k
    }

    /// `[α, β] = α⁻¹β⁻¹αβ`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.compose(a, b);
        let ba = self.compose(b, a);
        self.compose(self.inverse(ba), ab)
    }

    /// Sorted closure of `seed` under composition.
    pub fn generate(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        member[0] = true;
        let mut list = vec![0];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in seed {
                let y = self.compose(x, s);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Greedy generating set of `⟨set⟩`: each element is kept only if the
    /// previous ones do not already produce it.
    pub fn generators_of(&self, set: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.len()];
        span[0] = true;
        for &a in set {
            if !span[a] {
                gens.push(a);
                span = vec![false; self.len()];
                for x in self.generate(&gens) {
                    span[x] = true;
                }
            }
        }
        gens
    }

    /// `None` if `set` is a subgroup, otherwise an element of `⟨set⟩`
    /// outside it.
    pub fn subgroup_witness(&self, set: &[usize]) -> Option<usize> {
        if set.is_empty() {
            return Some(0);
        }
        let mut member = vec![false; self.len()];
        for &a in set {
            member[a] = true;
        }
        self.generate(&self.generators_of(set)).into_iter().find(|&x| !member[x])
    }

    fn select(&self, pred: impl Fn(&Flags) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&i| pred(&self.all[i].flags)).collect()
    }

    pub fn inner(&self) -> Vec<usize> {
        self.select(|f| f.inner.is_some())
    }

    pub fn commuting(&self) -> Vec<usize> {
        self.select(|f| f.commuting)
    }

    pub fn central(&self) -> Vec<usize> {
        self.select(|f| f.central)
    }

    pub fn tensor_commuting(&self) -> Vec<usize> {
        self.select(|f| f.tensor_commuting == Some(true))
    }

    pub fn tensor_central(&self) -> Vec<usize> {
        self.select(|f| f.tensor_central == Some(true))
    }

    /// Index of `T_g`.
    pub fn inner_index(&self, g: Elem) -> usize {
        let grp = &self.group;
        self.lookup(grp.elements().map(|x| grp.conj(x, g)).collect())
    }
}
