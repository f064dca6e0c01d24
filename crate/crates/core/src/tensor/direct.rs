//! `G ⊗ G` from its defining presentation.
//!
//! Generators are the symbols `e(g,h)`, index `g·|G| + h`; relators are every
//! instance of
//!
//! ```text
//! e(gg', h)  = e(g^g', h^g') e(g', h)
//! e(g, hh')  = e(g, h') e(g^h', h^h')
//! ```
//!
//! Before enumeration, relators of length one or two eliminate generators
//! (Tietze moves), which removes most of the `|G|²` symbols.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Result;
use crate::fp::{todd_coxeter, CosetTable, EnumerationLimits, Presentation, Word};
use crate::group::{Elem, FiniteGroup};

use super::{Construction, GeneratorAction, TensorSquare};

fn sym(n: usize, g: Elem, h: Elem) -> Word {
    Word::generator(g * n + h)
}

fn defining_relators(group: &FiniteGroup) -> Vec<Word> {
    let n = group.order();
    let mut rels = Vec::with_capacity(2 * n * n * n);
    for g in group.elements() {
        for g2 in group.elements() {
            for h in group.elements() {
                let lhs = sym(n, group.mul(g, g2), h);
                let rhs = sym(n, group.conj(g, g2), group.conj(h, g2)).mul(&sym(n, g2, h));
                rels.push(lhs.mul(&rhs.inverse()));
                let lhs = sym(n, h, group.mul(g, g2));
                let rhs = sym(n, h, g2).mul(&sym(n, group.conj(h, g2), group.conj(g, g2)));
                rels.push(lhs.mul(&rhs.inverse()));
            }
        }
    }
    rels
}

/// Longest relator used to eliminate a generator.
const ELIMINATION_RELATOR_LENGTH: usize = 2;
/// Eliminations that would make some symbol's word longer than this are skipped.
const MAX_SYMBOL_WORD: usize = 1;

/// Eliminates generators that occur exactly once in a short relator.
///
/// Returns the replacement word of every original generator over the
/// surviving ones (renumbered densely) and the reduced relators.
fn eliminate_short(ngens: usize, relators: Vec<Word>) -> (Vec<Word>, Vec<Word>) {
    let mut subst: Vec<Word> = (0..ngens).map(Word::generator).collect();
    let mut live = vec![true; ngens];
    let mut rels = relators;
    loop {
        let mut changed = false;
        let mut current: Vec<Word> = rels
            .iter()
            .map(|r| r.substitute(&subst).cyclically_reduced())
            .filter(|w| !w.is_empty())
            .collect();
        current.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        current.dedup();
        let mut next = Vec::with_capacity(current.len());
        for r in current {
            let w = r.substitute(&subst).cyclically_reduced();
            if w.is_empty() {
                continue;
            }
            if w.len() <= ELIMINATION_RELATOR_LENGTH {
                if let Some(new_subst) = eliminate_once(&w, &subst) {
                    let g = (w.letters()[once_position(&w).unwrap()] / 2) as usize;
                    subst = new_subst;
                    live[g] = false;
                    changed = true;
                    continue;
                }
            }
            next.push(w);
        }
        rels = next;
        if !changed {
            break;
        }
    }
    // renumber survivors
    let mut renumber = vec![Word::default(); ngens];
    let mut k = 0;
    for (i, &is_live) in live.iter().enumerate() {
        if is_live {
            renumber[i] = Word::generator(k);
            k += 1;
        }
    }
    let subst: Vec<Word> = subst.iter().map(|s| s.substitute(&renumber)).collect();
    let mut out: BTreeSet<Word> = BTreeSet::new();
    for r in rels {
        let w = r.substitute(&renumber).cyclically_reduced();
        if !w.is_empty() {
            out.insert(cyclic_canonical(&w));
        }
    }
    (subst, out.into_iter().collect())
}

/// Position of the highest generator occurring exactly once in `w`.
fn once_position(w: &Word) -> Option<usize> {
    let l = w.letters();
    (0..l.len())
        .filter(|&i| l.iter().filter(|&&x| x / 2 == l[i] / 2).count() == 1)
        .max_by_key(|&i| l[i] / 2)
}

/// Solves `w = 1` for its highest once-occurring generator and substitutes
/// the solution into every symbol word, unless that makes one too long.
fn eliminate_once(w: &Word, subst: &[Word]) -> Option<Vec<Word>> {
    let p = once_position(w)?;
    let l = w.letters();
    // w = u x v = 1 gives x = (v u)^-1
    let rest = Word::from_letters(l[p + 1..].iter().chain(&l[..p]).copied());
    let letter = l[p];
    let value = if letter % 2 == 0 { rest.inverse() } else { rest };
    let g = (letter / 2) as usize;
    let point: Vec<Word> = (0..subst.len()).map(|i| if i == g { value.clone() } else { Word::generator(i) }).collect();
    let new: Vec<Word> = subst.iter().map(|s| s.substitute(&point)).collect();
    if new.iter().any(|s| s.len() > MAX_SYMBOL_WORD) {
        return None;
    }
    Some(new)
}

/// Least rotation of `w` or of its inverse, so cyclic conjugates and
/// inverses of a relator deduplicate.
fn cyclic_canonical(w: &Word) -> Word {
    let mut best: Option<Word> = None;
    for v in [w.clone(), w.inverse()] {
        let l = v.letters();
        for s in 0..l.len() {
            let rot = Word::from_letters(l[s..].iter().chain(&l[..s]).copied());
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Reduced presentation of `G ⊗ G` and the word of each symbol `e(g,h)`.
pub(crate) fn direct_presentation(group: &FiniteGroup) -> Result<(Presentation, Vec<Word>)> {
    let n = group.order();
    let (subst, rels) = eliminate_short(n * n, defining_relators(group));
    let ngens = subst.iter().filter_map(|w| w.max_generator()).max().map_or(0, |g| g + 1);
    Ok((Presentation::new(ngens, rels)?, subst))
}

/// Enumerates the defining presentation over the trivial subgroup.
pub fn tensor_square_direct(group: &Arc<FiniteGroup>, limits: &EnumerationLimits) -> Result<TensorSquare> {
    let n = group.order();
    let (presentation, words) = direct_presentation(group)?;
    let table: CosetTable = todd_coxeter(&presentation, &[], limits)?;
    let tsq = Arc::new(crate::fp::coset_table_to_group(&table)?.with_name(format!("{} ⊗ {}", group.name(), group.name())));
    let pairing: Vec<u32> = (0..n * n)
        .map(|i| table.trace(0, &words[i]).expect("complete table") as u32)
        .collect();
    TensorSquare::assemble(group.clone(), tsq, pairing, Construction::Direct, GeneratorAction::Relabel)
}
