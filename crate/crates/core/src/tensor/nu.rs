//! `G ⊗ G` as the subgroup `[G, G^φ]` of `ν(G)`.
//!
//! `ν(G)` is enumerated over the copy `⟨x_i⟩` of `G`. The subgroup
//! `T = [G, G^φ]` meets that copy trivially, so `T` acts regularly on the
//! orbit of the trivial coset and the orbit is a faithful copy of `T`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp::{permutation_subgroup_order, presentation_of, todd_coxeter, CosetTable, EnumerationLimits, Letter, Presentation, Word};
use crate::group::{Elem, FiniteGroup};

use super::{Construction, GeneratorAction, TensorSquare};

/// Cross-check the orbit size by Schreier–Sims up to this many cosets.
const SCHREIER_SIMS_DEGREE: usize = 4096;

const UNSET: u32 = u32::MAX;

fn shift(w: &Word, k: usize) -> Word {
    Word::from_letters(w.letters().iter().map(|&l| l + 2 * k as Letter))
}

/// `ν(G)` on generators `x_0..x_{k-1}, y_0..y_{k-1}`.
///
/// Relators: `R(x)`, `R(y)` and, for all generator indices `i, j, l`,
/// `[x_i, y_j]^{x_l} = [x_i^{x_l}, y_j^{y_l}] = [x_i, y_j]^{y_l}`.
pub fn nu_presentation(p: &Presentation) -> Presentation {
    let k = p.ngens();
    let x = |i: usize| Word::generator(i);
    let y = |i: usize| Word::generator(k + i);
    let mut rels: Vec<Word> = p.relators().to_vec();
    rels.extend(p.relators().iter().map(|r| shift(r, k)));
    for i in 0..k {
        for j in 0..k {
            let c = x(i).commutator(&y(j));
            for l in 0..k {
                let rhs = x(i).conjugate(&x(l)).commutator(&y(j).conjugate(&y(l)));
                rels.push(c.conjugate(&x(l)).mul(&rhs.inverse()));
                rels.push(c.conjugate(&y(l)).mul(&rhs.inverse()));
            }
        }
    }
    Presentation::new(2 * k, rels).expect("relators stay in range")
}

struct Orbit {
    label: Vec<u32>,
    points: Vec<usize>,
}

impl Orbit {
    fn contains(&self, p: usize) -> bool {
        self.label[p] != UNSET
    }

    fn add(&mut self, p: usize) {
        self.label[p] = 0;
        self.points.push(p);
    }
}

fn trace(table: &CosetTable, c: usize, w: &Word) -> usize {
    table.trace(c, w).expect("complete table")
}

pub fn tensor_square_via_nu(group: &Arc<FiniteGroup>, limits: &EnumerationLimits) -> Result<TensorSquare> {
    let n = group.order();
    let k = group.generators().len();
    let presentation = presentation_of(group)?;
    let nu = nu_presentation(&presentation);
    let xs: Vec<Word> = (0..k).map(Word::generator).collect();
    let table = todd_coxeter(&nu, &xs, limits)?;

    let wx: Vec<Word> = group
        .elements()
        .map(|g| Word::from_letters(group.word(g).iter().map(|&l| l as Letter)))
        .collect();
    let wy: Vec<Word> = wx.iter().map(|w| shift(w, k)).collect();
    let pair_word = |g: Elem, h: Elem| wx[g].commutator(&wy[h]);

    // grow the orbit of coset 0, keeping a pairing word only when it is new
    let mut orbit = Orbit { label: vec![UNSET; table.ncosets()], points: Vec::new() };
    orbit.add(0);
    let mut gens: Vec<Word> = Vec::new();
    for g in group.elements() {
        for h in group.elements() {
            let w = pair_word(g, h);
            if orbit.contains(trace(&table, 0, &w)) {
                continue;
            }
            gens.push(w);
            let old = orbit.points.len();
            for i in 0..old {
                let q = trace(&table, orbit.points[i], gens.last().unwrap());
                if !orbit.contains(q) {
                    orbit.add(q);
                }
            }
            let mut head = old;
            while head < orbit.points.len() {
                let p = orbit.points[head];
                head += 1;
                for s in &gens {
                    let q = trace(&table, p, s);
                    if !orbit.contains(q) {
                        orbit.add(q);
                    }
                }
            }
        }
    }
    let mut sorted = orbit.points.clone();
    sorted.sort_unstable();
    for (i, &p) in sorted.iter().enumerate() {
        orbit.label[p] = i as u32;
    }
    let m = sorted.len();
    if m * n != table.ncosets() {
        return Err(Error::ActionInconsistent(format!(
            "orbit of size {m} does not account for {} cosets of the G copy",
            table.ncosets()
        )));
    }
    if table.ncosets() <= SCHREIER_SIMS_DEGREE {
        let order = permutation_subgroup_order(&table, &gens)?;
        if order != m as u128 {
            return Err(Error::ActionInconsistent(format!(
                "T has order {order} on all cosets but orbit size {m}"
            )));
        }
    }

    let label = |c: usize| -> Result<Elem> {
        match orbit.label[c] {
            UNSET => Err(Error::ActionInconsistent(format!("coset {c} left the orbit of T"))),
            l => Ok(l as Elem),
        }
    };
    let columns: Vec<Vec<u32>> = gens
        .iter()
        .map(|w| sorted.iter().map(|&p| label(trace(&table, p, w)).map(|l| l as u32)).collect())
        .collect::<Result<_>>()?;
    let name = format!("{} ⊗ {}", group.name(), group.name());
    let tsq = Arc::new(if m == 1 { FiniteGroup::trivial().with_name(name) } else { FiniteGroup::from_right_action(name, columns)? });
    let pairing: Vec<u32> = (0..n * n)
        .map(|i| label(trace(&table, 0, &pair_word(i / n, i % n))).map(|l| l as u32))
        .collect::<Result<_>>()?;

    // (a ⊗ b)^s is conjugation by x_s (equivalently by y_s)
    let conjugate = |a: Elem, b: Elem, s: usize| -> Result<Elem> {
        let via_x = label(trace(&table, 0, &pair_word(a, b).conjugate(&Word::generator(s))))?;
        let via_y = label(trace(&table, 0, &pair_word(a, b).conjugate(&Word::generator(k + s))))?;
        if via_x != via_y {
            return Err(Error::ActionInconsistent(format!("conjugation by x_{s} and y_{s} differ on {a}⊗{b}")));
        }
        Ok(via_x)
    };
    TensorSquare::assemble(group.clone(), tsq, pairing, Construction::Nu, GeneratorAction::Given(&conjugate))
}
