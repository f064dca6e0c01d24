use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

use super::{todd_coxeter, EnumerationLimits, Letter, Presentation, Word};

fn element_word(group: &FiniteGroup, x: usize) -> Word {
    Word::from_letters(group.word(x).iter().map(|&l| l as Letter))
}

fn presents_order(ngens: usize, rels: &[Word], order: usize) -> bool {
    let Ok(p) = Presentation::new(ngens, rels.to_vec()) else {
        return false;
    };
    let limits = EnumerationLimits::default().with_max_cosets((64 * order).max(4096));
    matches!(todd_coxeter(&p, &[], &limits), Ok(t) if t.ncosets() == order)
}

/// A short presentation of `group` on its stored generators.
///
/// Candidates are the generator power relators followed by the relators read
/// off non-tree edges of the Cayley graph, shortest first. They are added
/// until enumeration returns the group order, then any relator whose removal
/// keeps the order is dropped. Every relator holds in `group` by
/// construction, so reaching the order proves the presentation is faithful.
pub fn presentation_of(group: &FiniteGroup) -> Result<Presentation> {
    let k = group.generators().len();
    let n = group.order();
    let mut powers = Vec::new();
    for (i, &g) in group.generators().iter().enumerate() {
        powers.push(Word::generator(i).pow(group.element_order(g) as i64));
    }
    let mut cayley = BTreeSet::new();
    for x in group.elements() {
        for i in 0..k {
            let l = 2 * i;
            let y = group.letter_action(l)[x] as usize;
            let mut w = element_word(group, x);
            w.push(l as Letter);
            let r = w.mul(&element_word(group, y).inverse()).cyclically_reduced();
            if !r.is_empty() {
                // canonical up to inversion
                let inv = r.inverse().cyclically_reduced();
                cayley.insert((r.len(), r.clone().min(inv)));
            }
        }
    }
    let mut candidates = powers;
    candidates.extend(cayley.into_iter().map(|(_, w)| w));

    let mut rels: Vec<Word> = Vec::new();
    let mut found = presents_order(k, &rels, n);
    for c in candidates {
        if found {
            break;
        }
        if !rels.contains(&c) {
            rels.push(c);
            found = presents_order(k, &rels, n);
        }
    }
    if !found {
        return Err(Error::InvalidGroup(format!("no presentation found for `{}`", group.name())));
    }
    let mut i = rels.len();
    while i > 0 {
        i -= 1;
        let mut trial = rels.clone();
        trial.remove(i);
        if presents_order(k, &trial, n) {
            rels = trial;
        }
    }
    Presentation::new(k, rels)
}
