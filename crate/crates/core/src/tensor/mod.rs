//! The non-abelian tensor square `G ⊗ G`.
//!
//! Two independent constructions produce a [`TensorSquare`]: the defining
//! presentation on symbols `g ⊗ h` ([`tensor_square_direct`]) and the
//! subgroup `[G, G^φ]` of `ν(G)` ([`tensor_square_via_nu`]). Both hand their
//! pairing table to a common finisher that builds and verifies the `G`-action
//! and `κ`.
//!
//! Conventions: right actions, `x^y = y⁻¹xy`, `[x, y] = x⁻¹y⁻¹xy`, and
//! `action(t, g)` is written `t^g`.

mod direct;
mod nu;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{closure, extend_generator_images, Elem, FiniteGroup, GroupHom, Subgroup};

pub use direct::tensor_square_direct;
pub use nu::{nu_presentation, tensor_square_via_nu};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Direct,
    Nu,
}

#[derive(Clone, Debug)]
pub struct TensorSquare {
    base: Arc<FiniteGroup>,
    tsq: Arc<FiniteGroup>,
    /// `pairing[g * |G| + h] = g ⊗ h`.
    pairing: Vec<u32>,
    /// `action[t * |G| + g] = t^g`.
    action: Vec<u32>,
    kappa: GroupHom,
    construction: Construction,
}

/// How the finisher learns `t^s` for a generator `t` of `T` and a generator
/// `s` of `G`.
pub(crate) enum GeneratorAction<'a> {
    /// Read `(a ⊗ b)^s = a^s ⊗ b^s` off the pairing table.
    Relabel,
    /// `(a ⊗ b)^s` for generator index `s`, supplied by the construction
    /// (e.g. conjugation inside `ν(G)`).
    Given(&'a dyn Fn(Elem, Elem, usize) -> Result<Elem>),
}

impl TensorSquare {
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn tsq(&self) -> &Arc<FiniteGroup> {
        &self.tsq
    }

    pub fn order(&self) -> usize {
        self.tsq.order()
    }

    #[inline]
    pub fn pairing(&self, g: Elem, h: Elem) -> Elem {
        self.pairing[g * self.base.order() + h] as usize
    }

    #[inline]
    pub fn action(&self, t: Elem, g: Elem) -> Elem {
        self.action[t * self.base.order() + g] as usize
    }

    pub fn kappa(&self) -> &GroupHom {
        &self.kappa
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// Some pair `(a, b)` with `a ⊗ b = t`, for every generator `t` of `T`.
    fn generator_pairs(&self) -> Result<Vec<(Elem, Elem)>> {
        pairs_for(&self.base, &self.pairing, self.tsq.generators())
    }

    /// Assembles and verifies a tensor square from a pairing table.
    pub(crate) fn assemble(
        base: Arc<FiniteGroup>,
        tsq: Arc<FiniteGroup>,
        pairing: Vec<u32>,
        construction: Construction,
        generator_action: GeneratorAction<'_>,
    ) -> Result<Self> {
        let n = base.order();
        let m = tsq.order();
        let pairs = pairs_for(&base, &pairing, tsq.generators())?;
        let p = |g: Elem, h: Elem| pairing[g * n + h] as usize;

        // defining relations on every triple
        for g in base.elements() {
            for g2 in base.elements() {
                for h in base.elements() {
                    let lhs = p(base.mul(g, g2), h);
                    let rhs = tsq.mul(p(base.conj(g, g2), base.conj(h, g2)), p(g2, h));
                    if lhs != rhs {
                        return Err(Error::ActionInconsistent(format!(
                            "first defining relation fails at ({g}, {g2}, {h})"
                        )));
                    }
                    let lhs = p(h, base.mul(g, g2));
                    let rhs = tsq.mul(p(h, g2), p(base.conj(h, g2), base.conj(g, g2)));
                    if lhs != rhs {
                        return Err(Error::ActionInconsistent(format!(
                            "second defining relation fails at ({h}, {g}, {g2})"
                        )));
                    }
                }
            }
        }

        // action of each generator of G, extended over T
        let gens = base.generators();
        let mut gen_tables: Vec<Vec<Elem>> = Vec::with_capacity(gens.len());
        for (si, &s) in gens.iter().enumerate() {
            let images: Vec<Elem> = pairs
                .iter()
                .map(|&(a, b)| match &generator_action {
                    GeneratorAction::Relabel => Ok(p(base.conj(a, s), base.conj(b, s))),
                    GeneratorAction::Given(f) => f(a, b, si),
                })
                .collect::<Result<_>>()?;
            let table = extend_generator_images(&tsq, &tsq, &images)
                .map_err(|e| Error::ActionInconsistent(format!("generator {si} does not act by a homomorphism: {e}")))?;
            let mut seen = vec![false; m];
            for &y in &table {
                if std::mem::replace(&mut seen[y], true) {
                    return Err(Error::ActionInconsistent(format!("generator {si} does not act bijectively")));
                }
            }
            gen_tables.push(table);
        }
        // letter 2i acts as generator i, letter 2i+1 by the inverse permutation
        let letter_tables: Vec<Vec<Elem>> = gen_tables
            .iter()
            .flat_map(|tab| {
                let mut inv = vec![0; m];
                for (t, &y) in tab.iter().enumerate() {
                    inv[y] = t;
                }
                [tab.clone(), inv]
            })
            .collect();

        // t^(x s) = (t^x)^s along the Cayley tree, then every edge checked
        let mut action = vec![0u32; m * n];
        for t in 0..m {
            action[t * n] = t as u32;
        }
        for x in base.bfs_order().skip(1) {
            let (parent, letter) = base.tree_edge(x);
            let tab = &letter_tables[letter];
            for t in 0..m {
                action[t * n + x] = tab[action[t * n + parent] as usize] as u32;
            }
        }
        for x in base.elements() {
            for (si, &s) in gens.iter().enumerate() {
                let xs = base.mul(x, s);
                for t in 0..m {
                    if gen_tables[si][action[t * n + x] as usize] != action[t * n + xs] as usize {
                        return Err(Error::ActionInconsistent(format!(
                            "action is not a right action at element {x}, generator {si}"
                        )));
                    }
                }
            }
        }
        for a in base.elements() {
            for b in base.elements() {
                for g in base.elements() {
                    if action[p(a, b) * n + g] as usize != p(base.conj(a, g), base.conj(b, g)) {
                        return Err(Error::ActionInconsistent(format!(
                            "(a⊗b)^g ≠ a^g⊗b^g at ({a}, {b}, {g})"
                        )));
                    }
                }
            }
        }

        let kappa_images: Vec<Elem> = pairs.iter().map(|&(a, b)| base.comm(a, b)).collect();
        let kappa = GroupHom::from_generator_images(tsq.clone(), base.clone(), &kappa_images)
            .map_err(|e| Error::ActionInconsistent(format!("κ does not extend: {e}")))?;
        for g in base.elements() {
            for h in base.elements() {
                if kappa.apply(p(g, h)) != base.comm(g, h) {
                    return Err(Error::ActionInconsistent(format!("κ(g⊗h) ≠ [g,h] at ({g}, {h})")));
                }
            }
        }

        Ok(TensorSquare { base, tsq, pairing, action, kappa, construction })
    }
}

fn pairs_for(base: &FiniteGroup, pairing: &[u32], gens: &[Elem]) -> Result<Vec<(Elem, Elem)>> {
    let n = base.order();
    let mut first = std::collections::HashMap::new();
    for (i, &t) in pairing.iter().enumerate().rev() {
        first.insert(t as usize, (i / n, i % n));
    }
    gens.iter()
        .map(|t| {
            first
                .get(t)
                .copied()
                .ok_or_else(|| Error::ActionInconsistent(format!("generator {t} of T is not a pairing value")))
        })
        .collect()
}

/// `θ(g ⊗ h) = (h ⊗ g)⁻¹`, verified to be an automorphism of `T`.
pub fn theta_swap(ts: &TensorSquare) -> Result<GroupHom> {
    let t = ts.tsq();
    let images: Vec<Elem> = ts.generator_pairs()?.iter().map(|&(a, b)| t.inv(ts.pairing(b, a))).collect();
    let theta = GroupHom::from_generator_images(t.clone(), t.clone(), &images)?;
    if !theta.is_injective() {
        return Err(Error::ExtensionFailed("θ is not injective".into()));
    }
    for g in ts.base().elements() {
        for h in ts.base().elements() {
            if theta.apply(ts.pairing(g, h)) != t.inv(ts.pairing(h, g)) {
                return Err(Error::ExtensionFailed(format!("θ(g⊗h) ≠ (h⊗g)⁻¹ at ({g}, {h})")));
            }
        }
    }
    Ok(theta)
}

/// `α ⊗ α` for an automorphism `α` of `G` given as an image table, with
/// `(α⊗α)(g ⊗ h) = α(g) ⊗ α(h)` checked on every pair.
pub fn induced_hom(ts: &TensorSquare, alpha: &[Elem]) -> Result<GroupHom> {
    let t = ts.tsq();
    if alpha.len() != ts.base().order() {
        return Err(Error::InvalidParameter("automorphism table has wrong length".into()));
    }
    let images: Vec<Elem> = ts
        .generator_pairs()?
        .iter()
        .map(|&(a, b)| ts.pairing(alpha[a], alpha[b]))
        .collect();
    let hom = GroupHom::from_generator_images(t.clone(), t.clone(), &images)?;
    for g in ts.base().elements() {
        for h in ts.base().elements() {
            if hom.apply(ts.pairing(g, h)) != ts.pairing(alpha[g], alpha[h]) {
                return Err(Error::ExtensionFailed(format!("(α⊗α)(g⊗h) ≠ α(g)⊗α(h) at ({g}, {h})")));
            }
        }
    }
    Ok(hom)
}

/// `∇(G) = ⟨x ⊗ x⟩`.
pub fn diagonal_subgroup(ts: &TensorSquare) -> Subgroup {
    let seed: Vec<Elem> = ts.base().elements().map(|x| ts.pairing(x, x)).collect();
    closure(ts.tsq(), &seed)
}

/// Whether `x ⊗ x = 1` for every `x`; the witness is the first `x` that fails.
pub fn diagonal_witness(ts: &TensorSquare) -> Option<Elem> {
    ts.base().elements().find(|&x| ts.pairing(x, x) != 0)
}

pub fn hypothesis_diag_trivial(ts: &TensorSquare) -> bool {
    diagonal_witness(ts).is_none()
}

/// An isomorphism `a.tsq -> b.tsq` carrying `a`'s pairing onto `b`'s
/// entrywise, if one exists. Both must be tensor squares of the same base
/// group (same element indices).
pub fn pairing_isomorphism(a: &TensorSquare, b: &TensorSquare) -> Option<Vec<Elem>> {
    if a.base().order() != b.base().order() || a.order() != b.order() {
        return None;
    }
    let images: Vec<Elem> = a.generator_pairs().ok()?.iter().map(|&(g, h)| b.pairing(g, h)).collect();
    let map = extend_generator_images(a.tsq(), b.tsq(), &images).ok()?;
    let mut seen = vec![false; b.order()];
    for &y in &map {
        if std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    for g in a.base().elements() {
        for h in a.base().elements() {
            if map[a.pairing(g, h)] != b.pairing(g, h) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests;
