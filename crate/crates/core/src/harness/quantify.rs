//! Element-tuple quantifiers: exhaustive for small groups, seeded samples
//! otherwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::Elem;

use super::report::Witness;

/// Groups up to this order are checked on every tuple.
pub const EXHAUSTIVE_ORDER: usize = 16;
/// Tuples drawn per sampled check.
pub const SAMPLE_TUPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive(usize),
    Sampled(usize),
}

impl Coverage {
    pub fn describe(&self) -> String {
        match self {
            Coverage::Exhaustive(k) => format!("exhaustive over {k} tuples"),
            Coverage::Sampled(k) => format!("{k} seeded random tuples"),
        }
    }
}

/// Stable 64-bit hash (FNV-1a), so each check draws its own stream.
fn salt_hash(salt: &str) -> u64 {
    salt.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

#[derive(Clone, Copy, Debug)]
pub struct Quantifier {
    pub order: usize,
    pub seed: u64,
}

impl Quantifier {
    fn exhaustive(&self, arity: u32) -> Option<usize> {
        let total = self.order.checked_pow(arity)?;
        (self.order <= EXHAUSTIVE_ORDER || total <= SAMPLE_TUPLES).then_some(total)
    }

    /// Runs `f` on every `K`-tuple (or on samples) until it returns a witness.
    pub fn for_all<const K: usize>(
        &self,
        salt: &str,
        mut f: impl FnMut([Elem; K]) -> Option<Witness>,
    ) -> (Option<Witness>, Coverage) {
        let n = self.order;
        if let Some(total) = self.exhaustive(K as u32) {
            let mut t = [0; K];
            for mut i in 0..total {
                for slot in t.iter_mut().rev() {
                    *slot = i % n;
                    i /= n;
                }
                if let Some(w) = f(t) {
                    return (Some(w), Coverage::Exhaustive(total));
                }
            }
            return (None, Coverage::Exhaustive(total));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ salt_hash(salt));
        for _ in 0..SAMPLE_TUPLES {
            let t: [Elem; K] = std::array::from_fn(|_| rng.gen_range(0..n));
            if let Some(w) = f(t) {
                return (Some(w), Coverage::Sampled(SAMPLE_TUPLES));
            }
        }
        (None, Coverage::Sampled(SAMPLE_TUPLES))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_for_small_orders() {
        let q = Quantifier { order: 3, seed: 0 };
        let mut seen = Vec::new();
        let (w, cov) = q.for_all::<2>("x", |t| {
            seen.push(t);
            None
        });
        assert!(w.is_none());
        assert_eq!(cov, Coverage::Exhaustive(9));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], [0, 1]);
    }

    #[test]
    fn sampling_is_seeded_and_salted() {
        let q = Quantifier { order: 60, seed: 7 };
        let collect = |salt: &str, q: Quantifier| {
            let mut v = Vec::new();
            q.for_all::<3>(salt, |t| {
                v.push(t);
                None
            });
            v
        };
        let a = collect("a", q);
        assert_eq!(a.len(), SAMPLE_TUPLES);
        assert_eq!(a, collect("a", q));
        assert_ne!(a, collect("b", q));
        assert_ne!(a, collect("a", Quantifier { order: 60, seed: 8 }));
        // pairs of a 60-element group fit in the budget, so they are exhaustive
        assert_eq!(q.for_all::<2>("a", |_| None).1, Coverage::Exhaustive(3600));
    }

    #[test]
    fn stops_at_first_witness() {
        let q = Quantifier { order: 4, seed: 0 };
        let (w, _) = q.for_all::<1>("x", |[x]| (x == 2).then(|| Witness::new("x ≠ 2")));
        assert_eq!(w.unwrap().equation, "x ≠ 2");
    }
}
