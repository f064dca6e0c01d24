//! Deterministic Schreier–Sims with explicit transversals.
//!
//! Permutations act on the right: `x^(gh) = (x^g)^h`, stored as image lists.

type Perm = Vec<u32>;

fn compose(g: &[u32], h: &[u32]) -> Perm {
    g.iter().map(|&x| h[x as usize]).collect()
}

fn invert(g: &[u32]) -> Perm {
    let mut inv = vec![0u32; g.len()];
    for (x, &y) in g.iter().enumerate() {
        inv[y as usize] = x as u32;
    }
    inv
}

fn is_identity(g: &[u32]) -> bool {
    g.iter().enumerate().all(|(x, &y)| x as u32 == y)
}

struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some((0..degree as u32).collect());
        Level { base, gens: Vec::new(), orbit: vec![base], transversal }
    }

    fn rebuild_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            i += 1;
            for s in &self.gens {
                let q = s[p as usize];
                if self.transversal[q as usize].is_none() {
                    let u = compose(self.transversal[p as usize].as_ref().unwrap(), s);
                    self.transversal[q as usize] = Some(u);
                    self.orbit.push(q);
                }
            }
        }
    }
}

pub(crate) struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub(crate) fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        let nontrivial: Vec<&Perm> = gens.iter().filter(|g| !is_identity(g)).collect();
        let Some(first) = nontrivial.first() else {
            return chain;
        };
        let base = first.iter().enumerate().find(|&(x, &y)| x as u32 != y).unwrap().0;
        let mut level = Level::new(base as u32, degree);
        level.gens = nontrivial.into_iter().cloned().collect();
        level.rebuild_orbit();
        chain.levels.push(level);
        chain.complete();
        chain
    }

    /// Sifts `h` from level `start`; returns the residue and the level where sifting stopped.
    fn strip(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let beta = h[level.base as usize];
            match &level.transversal[beta as usize] {
                None => return (h, l),
                Some(u) => h = compose(&h, &invert(u)),
            }
        }
        (h, self.levels.len())
    }

    fn find_bad_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &p in &level.orbit {
            let up = level.transversal[p as usize].as_ref().unwrap();
            for s in &level.gens {
                let q = s[p as usize];
                let uq = level.transversal[q as usize].as_ref().unwrap();
                let y = compose(&compose(up, s), &invert(uq));
                let (h, j) = self.strip(y, i + 1);
                if j < self.levels.len() || !is_identity(&h) {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            match self.find_bad_schreier_generator(i as usize) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let moved = h.iter().enumerate().find(|&(x, &y)| x as u32 != y).unwrap().0;
                        self.levels.push(Level::new(moved as u32, self.degree));
                    }
                    for l in i as usize + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    i = j as isize;
                }
            }
        }
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, g: &[u32]) -> bool {
        let (h, j) = self.strip(g.to_vec(), 0);
        j == self.levels.len() && is_identity(&h)
    }
}

/// Order of the group generated by `gens` (image lists on `degree` points).
pub fn permutation_group_order(degree: usize, gens: &[Vec<u32>]) -> u128 {
    StabilizerChain::new(degree, gens).order()
}
