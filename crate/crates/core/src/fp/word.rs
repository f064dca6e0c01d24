use std::fmt;

use crate::error::{Error, Result};
use crate::group::generator_name;

/// A letter is a generator or its inverse, packed as `2k` / `2k+1`.
pub type Letter = u32;

#[inline]
pub const fn inverse_letter(l: Letter) -> Letter {
    l ^ 1
}

/// A freely reduced word over the generators of a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Signed, 1-based form: `+k` is generator `k-1`, `-k` its inverse.
    pub fn from_signed(signed: &[i32]) -> Result<Self> {
        let mut w = Word::default();
        for &s in signed {
            if s == 0 {
                return Err(Error::InvalidParameter("signed letter 0 is not allowed".into()));
            }
            let g = (s.unsigned_abs() - 1) * 2;
            w.push(if s > 0 { g } else { g + 1 });
        }
        Ok(w)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters
            .iter()
            .map(|&l| {
                let k = (l / 2 + 1) as i32;
                if l % 2 == 0 {
                    k
                } else {
                    -k
                }
            })
            .collect()
    }

    pub fn generator(k: usize) -> Self {
        Word { letters: vec![2 * k as Letter] }
    }

    /// Appends a letter, cancelling against the last one when possible.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&inverse_letter(l)) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word { letters: self.letters.iter().rev().map(|&l| inverse_letter(l)).collect() }
    }

    pub fn mul(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::default();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `u^v = v^-1 u v`.
    pub fn conjugate(&self, by: &Word) -> Self {
        by.inverse().mul(self).mul(by)
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(&self, other: &Word) -> Self {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Removes cancelling letters across the ends.
    pub fn cyclically_reduced(&self) -> Self {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i] == inverse_letter(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// Relabels generators through `map` (generator index -> replacement word).
    pub fn substitute(&self, map: &[Word]) -> Self {
        let mut w = Word::default();
        for &l in &self.letters {
            let r = &map[(l / 2) as usize];
            if l % 2 == 0 {
                for &x in &r.letters {
                    w.push(x);
                }
            } else {
                for &x in r.letters.iter().rev() {
                    w.push(inverse_letter(x));
                }
            }
        }
        w
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&l| (l / 2) as usize).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // group runs of the same letter into powers
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * if l % 2 == 0 { 1 } else { -1 };
            let name = generator_name((l / 2) as usize);
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i = j;
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Generators and relators of a finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ngens: usize,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are cyclically reduced; empty ones are dropped.
    pub fn new(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        let mut out = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(g) = r.max_generator() {
                if g >= ngens {
                    return Err(Error::InvalidParameter(format!(
                        "relator {r} uses generator {g} but only {ngens} exist"
                    )));
                }
            }
            let r = r.cyclically_reduced();
            if !r.is_empty() {
                out.push(r);
            }
        }
        Ok(Presentation { ngens, relators: out })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.ngens).map(generator_name).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}
