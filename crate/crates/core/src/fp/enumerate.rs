//! Todd–Coxeter coset enumeration.
//!
//! Both strategies share one table and one coincidence routine. Dead cosets
//! are tracked with a union-find forest; live rows only ever point at live
//! cosets once a coincidence has been fully processed. When the table is
//! full the enumerator scans every live coset without defining (lookahead),
//! compacts, and only reports [`Error::LimitExceeded`] if that frees nothing.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::word::{inverse_letter, Letter, Presentation, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub enum Strategy {
    /// Hasselgrove–Leech–Trotter: scan and fill every relator at each coset.
    #[default]
    Hlt,
    /// Felsch: define one entry at a time and process all deductions.
    Felsch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

pub const DEFAULT_MAX_COSETS: usize = 1 << 22;

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_cosets: DEFAULT_MAX_COSETS, strategy: Strategy::Hlt }
    }
}

impl EnumerationLimits {
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_max_cosets(mut self, max_cosets: usize) -> Self {
        self.max_cosets = max_cosets;
        self
    }
}

/// Result of an enumeration. Coset `0` is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    ncosets: usize,
    table: Vec<u32>,
    complete: bool,
}

impl CosetTable {
    /// Wraps raw rows (`rows[c][letter]`, `None` for undefined entries).
    pub fn from_rows(ngens: usize, rows: &[Vec<Option<usize>>]) -> Result<Self> {
        let ncols = 2 * ngens;
        let mut table = Vec::with_capacity(rows.len() * ncols);
        let mut complete = true;
        for r in rows {
            if r.len() != ncols {
                return Err(Error::InvalidParameter("coset table row has wrong width".into()));
            }
            for e in r {
                match e {
                    Some(d) if *d < rows.len() => table.push(*d as u32),
                    Some(_) => return Err(Error::InvalidParameter("coset table entry out of range".into())),
                    None => {
                        complete = false;
                        table.push(UNDEF);
                    }
                }
            }
        }
        Ok(CosetTable { ngens, ncosets: rows.len(), table, complete })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn ncosets(&self) -> usize {
        self.ncosets
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    #[inline]
    pub fn entry(&self, coset: usize, letter: Letter) -> Option<usize> {
        match self.table[coset * 2 * self.ngens + letter as usize] {
            UNDEF => None,
            d => Some(d as usize),
        }
    }

    /// Coset reached from `coset` by reading `word`; `None` if the trace falls off the table.
    pub fn trace(&self, coset: usize, word: &Word) -> Option<usize> {
        let mut c = coset;
        for &l in word.letters() {
            c = self.entry(c, l)?;
        }
        Some(c)
    }

    /// The permutation of cosets induced by `word` on a complete table.
    pub fn permutation(&self, word: &Word) -> Result<Vec<u32>> {
        if !self.complete {
            return Err(Error::IncompleteTable);
        }
        Ok((0..self.ncosets)
            .map(|c| self.trace(c, word).expect("complete table") as u32)
            .collect())
    }

    /// Every generator column is a bijection and every relator closes at every coset.
    pub fn satisfies(&self, presentation: &Presentation) -> bool {
        if !self.complete {
            return false;
        }
        for g in 0..self.ngens {
            let mut seen = vec![false; self.ncosets];
            for c in 0..self.ncosets {
                let d = self.entry(c, 2 * g as Letter).unwrap();
                if seen[d] || self.entry(d, 2 * g as Letter + 1) != Some(c) {
                    return false;
                }
                seen[d] = true;
            }
        }
        presentation
            .relators()
            .iter()
            .all(|r| (0..self.ncosets).all(|c| self.trace(c, r) == Some(c)))
    }
}

struct Full;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    nlive: usize,
    max_cosets: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, Letter)>,
    track: bool,
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize, track: bool) -> Self {
        let ncols = 2 * ngens;
        Enumerator {
            ncols,
            table: vec![UNDEF; ncols],
            parent: vec![0],
            nlive: 1,
            max_cosets,
            queue: Vec::new(),
            deductions: Vec::new(),
            track,
        }
    }

    #[inline]
    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: Letter) -> u32 {
        self.table[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: Letter, d: u32) {
        self.table[c as usize * self.ncols + x as usize] = d;
    }

    #[inline]
    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> std::result::Result<u32, Full> {
        if self.rows() >= self.max_cosets {
            return Err(Full);
        }
        let c = self.rows() as u32;
        self.table.extend(std::iter::repeat(UNDEF).take(self.ncols));
        self.parent.push(c);
        self.nlive += 1;
        Ok(c)
    }

    fn define(&mut self, c: u32, x: Letter) -> std::result::Result<(), Full> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, inverse_letter(x), c);
        if self.track {
            self.deductions.push((c, x));
        }
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        self.nlive -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols as Letter {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                let xi = inverse_letter(x);
                self.set(d, xi, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, xi);
                    if nx != UNDEF {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, xi, mu);
                        if self.track {
                            self.deductions.push((mu, x));
                        }
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[Letter]) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, inverse_letter(w[j as usize])) != UNDEF {
                b = self.get(b, inverse_letter(w[j as usize]));
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, inverse_letter(x), f);
                if self.track {
                    self.deductions.push((f, x));
                }
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn scan(&mut self, c: u32, w: &[Letter]) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        while i <= j && self.get(f, w[i as usize]) != UNDEF {
            f = self.get(f, w[i as usize]);
            i += 1;
        }
        if i > j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j >= i && self.get(b, inverse_letter(w[j as usize])) != UNDEF {
            b = self.get(b, inverse_letter(w[j as usize]));
            j -= 1;
        }
        if j < i {
            self.coincidence(f, b);
        } else if i == j {
            let x = w[i as usize];
            self.set(f, x, b);
            self.set(b, inverse_letter(x), f);
            if self.track {
                self.deductions.push((f, x));
            }
        }
    }

    fn lookahead(&mut self, rels: &[Vec<Letter>]) {
        for c in 0..self.rows() as u32 {
            for r in rels {
                if !self.live(c) {
                    break;
                }
                self.scan(c, r);
            }
        }
    }

    /// Renumbers live cosets in increasing order. Returns the old -> new map
    /// (`UNDEF` for dead cosets).
    fn compact(&mut self) -> Vec<u32> {
        let rows = self.rows();
        let mut map = vec![UNDEF; rows];
        let mut next = 0u32;
        for c in 0..rows {
            if self.parent[c] == c as u32 {
                map[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..rows as u32 {
            if map[c as usize] == UNDEF {
                continue;
            }
            for x in 0..self.ncols as Letter {
                let d = self.get(c, x);
                table.push(if d == UNDEF { UNDEF } else { map[self.rep(d) as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.nlive = next as usize;
        let deds = std::mem::take(&mut self.deductions);
        self.deductions = deds
            .into_iter()
            .filter_map(|(c, x)| {
                let m = map[c as usize];
                (m != UNDEF).then_some((m, x))
            })
            .collect();
        map
    }

    /// Lookahead plus compaction; `current` is remapped to the first live
    /// coset at or after it.
    fn make_room(&mut self, rels: &[Vec<Letter>], current: usize) -> Result<usize> {
        self.lookahead(rels);
        let map = self.compact();
        if self.rows() >= self.max_cosets {
            return Err(Error::LimitExceeded { max_cosets: self.max_cosets });
        }
        Ok(map[current.min(map.len())..]
            .iter()
            .find(|&&m| m != UNDEF)
            .map_or(self.rows(), |&m| m as usize))
    }

    fn fill_subgroup(&mut self, rels: &[Vec<Letter>], subgroup: &[Vec<Letter>]) -> Result<()> {
        'retry: loop {
            for w in subgroup {
                if self.scan_and_fill(0, w).is_err() {
                    self.make_room(rels, 0)?;
                    continue 'retry;
                }
            }
            return Ok(());
        }
    }

    fn run_hlt(&mut self, rels: &[Vec<Letter>], subgroup: &[Vec<Letter>]) -> Result<()> {
        self.fill_subgroup(rels, subgroup)?;
        let mut c = 0usize;
        loop {
            while c < self.rows() && !self.live(c as u32) {
                c += 1;
            }
            if c >= self.rows() {
                return Ok(());
            }
            match self.process_hlt(c as u32, rels) {
                Ok(()) => c += 1,
                Err(Full) => c = self.make_room(rels, c)?,
            }
        }
    }

    fn process_hlt(&mut self, c: u32, rels: &[Vec<Letter>]) -> std::result::Result<(), Full> {
        for r in rels {
            self.scan_and_fill(c, r)?;
            if !self.live(c) {
                return Ok(());
            }
        }
        for x in 0..self.ncols as Letter {
            if self.get(c, x) == UNDEF {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn process_deductions(&mut self, conj: &[Vec<Letter>], by_first: &[Vec<usize>]) {
        while let Some((a, x)) = self.deductions.pop() {
            if !self.live(a) {
                continue;
            }
            for &k in &by_first[x as usize] {
                self.scan(a, &conj[k]);
                if !self.live(a) {
                    break;
                }
            }
            if !self.live(a) {
                continue;
            }
            let b = self.get(a, x);
            if b == UNDEF {
                continue;
            }
            for &k in &by_first[inverse_letter(x) as usize] {
                if !self.live(b) {
                    break;
                }
                self.scan(b, &conj[k]);
            }
        }
    }

    fn run_felsch(&mut self, rels: &[Vec<Letter>], subgroup: &[Vec<Letter>]) -> Result<()> {
        let mut seen = HashSet::new();
        let mut conj: Vec<Vec<Letter>> = Vec::new();
        for r in rels {
            let inv: Vec<Letter> = r.iter().rev().map(|&l| inverse_letter(l)).collect();
            for w in [r, &inv] {
                for s in 0..w.len() {
                    let rot: Vec<Letter> = w[s..].iter().chain(&w[..s]).copied().collect();
                    if seen.insert(rot.clone()) {
                        conj.push(rot);
                    }
                }
            }
        }
        let mut by_first = vec![Vec::new(); self.ncols];
        for (k, w) in conj.iter().enumerate() {
            by_first[w[0] as usize].push(k);
        }

        self.fill_subgroup(rels, subgroup)?;
        self.process_deductions(&conj, &by_first);
        let mut c = 0usize;
        loop {
            while c < self.rows() && !self.live(c as u32) {
                c += 1;
            }
            if c >= self.rows() {
                return Ok(());
            }
            let mut x = 0;
            while x < self.ncols && self.live(c as u32) {
                if self.get(c as u32, x as Letter) == UNDEF {
                    if self.define(c as u32, x as Letter).is_err() {
                        c = self.make_room(rels, c)?;
                        self.process_deductions(&conj, &by_first);
                        x = 0;
                        continue;
                    }
                    self.process_deductions(&conj, &by_first);
                }
                x += 1;
            }
            c += 1;
        }
    }

    /// Renumbers live cosets by first appearance when reading rows in order.
    fn standardize(mut self, ngens: usize) -> CosetTable {
        let rows = self.rows();
        let mut map = vec![UNDEF; rows];
        let mut order: Vec<u32> = vec![self.rep(0)];
        map[order[0] as usize] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for x in 0..self.ncols as Letter {
                let d = self.get(c, x);
                if d == UNDEF {
                    continue;
                }
                let d = self.rep(d);
                if map[d as usize] == UNDEF {
                    map[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut table = Vec::with_capacity(order.len() * self.ncols);
        let mut complete = true;
        for &c in &order {
            for x in 0..self.ncols as Letter {
                let d = self.get(c, x);
                if d == UNDEF {
                    complete = false;
                    table.push(UNDEF);
                } else {
                    let d = self.rep(d);
                    table.push(map[d as usize]);
                }
            }
        }
        CosetTable { ngens, ncosets: order.len(), table, complete }
    }
}

/// Enumerates the cosets of `<subgroup>` in the group given by `presentation`.
pub fn todd_coxeter(
    presentation: &Presentation,
    subgroup: &[Word],
    limits: &EnumerationLimits,
) -> Result<CosetTable> {
    if limits.max_cosets == 0 {
        return Err(Error::InvalidParameter("max_cosets must be at least 1".into()));
    }
    let ngens = presentation.ngens();
    for w in subgroup {
        if w.max_generator().is_some_and(|g| g >= ngens) {
            return Err(Error::InvalidParameter(format!("subgroup word {w} out of range")));
        }
    }
    let rels: Vec<Vec<Letter>> = presentation.relators().iter().map(|r| r.letters().to_vec()).collect();
    let sub: Vec<Vec<Letter>> = subgroup.iter().map(|w| w.letters().to_vec()).collect();
    let mut e = Enumerator::new(ngens, limits.max_cosets, limits.strategy == Strategy::Felsch);
    match limits.strategy {
        Strategy::Hlt => e.run_hlt(&rels, &sub)?,
        Strategy::Felsch => e.run_felsch(&rels, &sub)?,
    }
    let table = e.standardize(ngens);
    if !table.complete {
        return Err(Error::IncompleteTable);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(ngens: usize, rels: &[&[i32]]) -> Presentation {
        Presentation::new(ngens, rels.iter().map(|r| Word::from_signed(r).unwrap()).collect()).unwrap()
    }

    fn s3() -> Presentation {
        // a^3, b^2, (ab)^2
        pres(2, &[&[1, 1, 1], &[2, 2], &[1, 2, 1, 2]])
    }

    #[test]
    fn cyclic_three() {
        let p = pres(1, &[&[1, 1, 1]]);
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let lim = EnumerationLimits::default().with_strategy(s);
            let t = todd_coxeter(&p, &[], &lim).unwrap();
            assert_eq!(t.ncosets(), 3);
            assert!(t.satisfies(&p));
            let t = todd_coxeter(&p, &[Word::generator(0)], &lim).unwrap();
            assert_eq!(t.ncosets(), 1);
        }
    }

    #[test]
    fn symmetric_three() {
        let p = s3();
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let t = todd_coxeter(&p, &[], &EnumerationLimits::default().with_strategy(s)).unwrap();
            assert_eq!(t.ncosets(), 6);
            assert!(t.satisfies(&p));
            // index of <b> is 3
            let t = todd_coxeter(&p, &[Word::generator(1)], &EnumerationLimits::default().with_strategy(s)).unwrap();
            assert_eq!(t.ncosets(), 3);
            assert_eq!(t.trace(0, &Word::generator(1)), Some(0));
        }
    }

    #[test]
    fn deterministic_numbering() {
        let p = pres(2, &[&[1, 1, 1, 1, 1], &[2, 2], &[2, 1, 2, 1]]);
        let a = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        let b = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.ncosets(), 10);
    }

    #[test]
    fn limit_exceeded_is_reported() {
        let p = pres(2, &[&[1, 1, 1, 1, 1], &[2, 2], &[2, 1, 2, 1]]);
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let lim = EnumerationLimits { max_cosets: 7, strategy: s };
            assert_eq!(todd_coxeter(&p, &[], &lim), Err(Error::LimitExceeded { max_cosets: 7 }));
        }
    }

    #[test]
    fn lookahead_recovers_space() {
        // A5 = <a, b | a^2, b^3, (ab)^5>; 60 cosets, but HLT overshoots.
        let p = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2, 1, 2, 1, 2, 1, 2]]);
        let free = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(free.ncosets(), 60);
        let tight = todd_coxeter(&p, &[], &EnumerationLimits::default().with_max_cosets(64)).unwrap();
        assert_eq!(tight.ncosets(), 60);
        assert!(tight.satisfies(&p));
    }

    #[test]
    fn trivial_presentation_has_one_coset() {
        let p = pres(1, &[&[1]]);
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.ncosets(), 1);
        let p0 = Presentation::new(0, vec![]).unwrap();
        assert_eq!(todd_coxeter(&p0, &[], &EnumerationLimits::default()).unwrap().ncosets(), 1);
    }
}
