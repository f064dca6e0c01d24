//! One evaluator per registry entry.
//!
//! Sets that define the objects under test (A⊗, Aut_c⊗, the equivalence
//! sides of the tensor central criteria) are always computed over every
//! pair. Pure identities in elements go through the [`Quantifier`], which
//! samples above order 16.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::automorphisms::{bracket, AutomorphismGroup};
use crate::error::Result;
use crate::group::{center, derived_subgroup, nth_center, Elem, FiniteGroup, Subgroup};
use crate::invariants::{
    centralizer_of_tensor_square, commutator_closure, nth_tensor_center, right_2_engel, right_2_tensor_engel,
    tensor_annihilator, tensor_center,
};
use crate::tensor::{diagonal_witness, induced_hom, theta_swap, TensorSquare};

use super::quantify::{Coverage, Quantifier};
use super::report::{element_value, Witness};
use super::Status;

/// Largest `|G⊗G|·|Aut(G)|` for which every `α⊗α` is extended in full.
pub const INDUCED_FULL_BUDGET: usize = 1 << 23;
/// Extra automorphisms extended in full when only generators would be.
pub const INDUCED_SAMPLES: usize = 32;

pub(crate) struct Invariants {
    pub center: Subgroup,
    pub derived: Subgroup,
    pub upper: [Subgroup; 3],
    pub tensor: [Subgroup; 3],
    pub r2t: Subgroup,
    pub r2: Subgroup,
    pub cgt: Subgroup,
}

impl Invariants {
    pub fn compute(ts: &TensorSquare) -> Result<Self> {
        let g = ts.base();
        Ok(Invariants {
            center: center(g),
            derived: derived_subgroup(g),
            upper: [nth_center(g, 1), nth_center(g, 2), nth_center(g, 3)],
            tensor: [nth_tensor_center(ts, 1)?, nth_tensor_center(ts, 2)?, nth_tensor_center(ts, 3)?],
            r2t: right_2_tensor_engel(ts)?,
            r2: right_2_engel(g)?,
            cgt: centralizer_of_tensor_square(ts)?,
        })
    }
}

type Conclusion = std::result::Result<String, (String, Witness)>;

pub(crate) struct Evaluation {
    /// The failed hypothesis, if any.
    pub failed_hypothesis: Option<(String, Option<Witness>)>,
    /// Note on what held before the conclusion was evaluated.
    pub hypothesis_note: String,
    pub conclusion: Conclusion,
}

impl Evaluation {
    pub fn status(&self) -> Status {
        match (&self.failed_hypothesis, &self.conclusion) {
            (Some(_), _) => Status::Vacuous,
            (None, Ok(_)) => Status::Pass,
            (None, Err(_)) => Status::Fail,
        }
    }

    pub fn into_parts(self) -> (Status, String, Option<Witness>) {
        let status = self.status();
        match (self.failed_hypothesis, self.conclusion) {
            (Some((note, w)), _) => (status, note, w),
            (None, Ok(note)) => (status, join(&self.hypothesis_note, &note), None),
            (None, Err((note, w))) => (status, join(&self.hypothesis_note, &note), Some(w)),
        }
    }
}

fn join(a: &str, b: &str) -> String {
    if a.is_empty() {
        b.to_string()
    } else {
        format!("{a}; {b}")
    }
}

fn unconditional(conclusion: Conclusion) -> Evaluation {
    Evaluation { failed_hypothesis: None, hypothesis_note: "unconditional".into(), conclusion }
}

fn finish(w: Option<Witness>, cov: Coverage) -> Conclusion {
    match w {
        None => Ok(cov.describe()),
        Some(w) => Err((format!("fails ({})", cov.describe()), w)),
    }
}

fn fail(note: impl Into<String>, w: Witness) -> Conclusion {
    Err((note.into(), w))
}

pub(crate) struct Ctx<'a> {
    pub g: &'a FiniteGroup,
    pub ts: &'a TensorSquare,
    pub aut: Option<&'a AutomorphismGroup>,
    pub inv: &'a Invariants,
    pub q: Quantifier,
    pub seed: u64,
    diag: Option<Elem>,
    a_t: Vec<usize>,
    a_t_member: Vec<bool>,
    c_t_member: Vec<bool>,
}

impl<'a> Ctx<'a> {
    pub fn new(ts: &'a TensorSquare, aut: Option<&'a AutomorphismGroup>, inv: &'a Invariants, seed: u64) -> Self {
        let g = ts.base().as_ref();
        let (a_t, a_t_member, c_t_member) = match aut {
            Some(a) => {
                let a_t = a.tensor_commuting();
                let mut am = vec![false; a.len()];
                for &i in &a_t {
                    am[i] = true;
                }
                let mut cm = vec![false; a.len()];
                for i in a.tensor_central() {
                    cm[i] = true;
                }
                (a_t, am, cm)
            }
            None => Default::default(),
        };
        Ctx {
            g,
            ts,
            aut,
            inv,
            q: Quantifier { order: g.order(), seed },
            seed,
            diag: diagonal_witness(ts),
            a_t,
            a_t_member,
            c_t_member,
        }
    }

    fn aut(&self) -> &AutomorphismGroup {
        self.aut.expect("automorphism checks run only with Aut(G)")
    }

    #[inline]
    fn p(&self, a: Elem, b: Elem) -> Elem {
        self.ts.pairing(a, b)
    }

    fn t(&self) -> &FiniteGroup {
        self.ts.tsq()
    }

    fn tv(&self, x: Elem) -> Value {
        element_value(self.t(), x)
    }

    fn gv(&self, x: Elem) -> Value {
        element_value(self.g, x)
    }

    fn w(&self, equation: &str) -> Witness {
        Witness::new(equation)
    }

    fn ge(&self, w: Witness, name: &str, x: Elem) -> Witness {
        w.elem(name, "G", self.g, x)
    }

    fn apply(&self, a: usize, x: Elem) -> Elem {
        self.aut().get(a).apply(x)
    }

    fn diag_hypothesis(&self) -> Option<(String, Option<Witness>)> {
        self.diag.map(|x| {
            let w = self.ge(self.w("x⊗x = 1⊗"), "x", x).sides(self.tv(self.p(x, x)), self.tv(0));
            (format!("hypothesis x⊗x = 1⊗ fails at x = {} ({})", x, self.g.word_string(x)), Some(w))
        })
    }

    fn conditional(&self, conclusion: Conclusion) -> Evaluation {
        Evaluation {
            failed_hypothesis: self.diag_hypothesis(),
            hypothesis_note: "hypothesis x⊗x = 1⊗ holds for all x".into(),
            conclusion,
        }
    }

    fn subset(&self, what: &str, a: &Subgroup, b: &Subgroup) -> Conclusion {
        match a.elements().iter().find(|&&x| !b.contains(x)) {
            None => Ok(String::new()),
            Some(&x) => fail(format!("{what} fails"), self.ge(self.w(what), "x", x).sides(json!(true), json!(false))),
        }
    }

    fn equal_sets(&self, what: &str, a: &Subgroup, b: &Subgroup) -> Conclusion {
        self.subset(what, a, b)?;
        self.subset(what, b, a)
    }

    pub fn evaluate(&self, id: &str) -> Option<Evaluation> {
        Some(match id {
            "L1.1.i" => unconditional(self.l1_1_i()),
            "L1.1.ii" => unconditional(self.l1_1_ii()),
            "L1.1.iii" => unconditional(self.l1_1_iii()),
            "L1.1.iv" => unconditional(self.l1_1_iv()),
            "L1.1.v" => unconditional(self.l1_1_v()),
            "L1.2.i" => unconditional(self.l1_2_i()),
            "L1.2.ii" => unconditional(self.l1_2_ii()),
            "S1.kappa" => unconditional(self.s1_kappa()),
            "S1.tensor_center" => unconditional(self.s1_tensor_center()),
            "S1.nth_tensor_center" => unconditional(self.s1_nth_tensor_center()),
            "S1.r2_tensor_engel" => unconditional(self.s1_r2()),
            "S1.characteristic" => unconditional(self.s1_characteristic()),
            "L2.2" => unconditional(self.l2_2()),
            "T2.3.i" => self.conditional(self.t2_3_i()),
            "T2.3.ii" => unconditional(self.t2_3_ii()),
            "T2.3.iii" => unconditional(self.t2_3_iii()),
            "T2.3.iv" => unconditional(self.t2_3_iv()),
            "T2.3.v" => unconditional(self.t2_3_v()),
            "L2.4" => unconditional(self.l2_4()),
            "T2.5" => self.conditional(self.inner_set_equals("T_g ∈ A⊗(G) iff g ∈ R₂⊗(G)", &self.a_t_member, &self.inv.r2t)),
            "C2.6" => self.conditional(self.inner_quotient("A⊗(G) ∩ Inn(G)", &self.a_t_member, &self.inv.r2t)),
            "C2.7.full" => self.c2_7(false),
            "C2.7.inner" => self.c2_7(true),
            "L3.2" => self.conditional(self.l3_2()),
            "L3.3.i" => unconditional(self.l3_3_i()),
            "L3.3.ii" => unconditional(self.l3_3_ii()),
            "L3.3.iii" => unconditional(self.l3_3_iii()),
            "L3.3.iv" => unconditional(self.l3_3_iv()),
            "T3.4" => self.t3_4(),
            "T3.5" => unconditional(self.inner_set_equals(
                "T_g ∈ Aut_c⊗(G) iff g ∈ Z₂⊗(G)",
                &self.c_t_member,
                &self.inv.tensor[1],
            )),
            "C3.6" => unconditional(self.inner_quotient("Aut_c⊗(G) ∩ Inn(G)", &self.c_t_member, &self.inv.tensor[1])),
            "T3.7" => self.conditional(self.t3_7()),
            _ => return None,
        })
    }

    // ---- element identities in G ⊗ G

    fn l1_1_i(&self) -> Conclusion {
        let (g, t) = (self.g, self.t());
        let (w, cov) = self.q.for_all::<2>("L1.1.i", |[a, b]| {
            let l = self.ts.action(self.p(g.inv(a), b), a);
            let m = t.inv(self.p(a, b));
            let r = self.ts.action(self.p(a, g.inv(b)), b);
            if l == m && m == r {
                return None;
            }
            let (eq, x, y) = if l != m { ("(g⁻¹⊗h)^g = (g⊗h)⁻¹", l, m) } else { ("(g⊗h)⁻¹ = (g⊗h⁻¹)^h", m, r) };
            Some(self.ge(self.ge(self.w(eq), "g", a), "h", b).sides(self.tv(x), self.tv(y)))
        });
        finish(w, cov)
    }

    fn l1_1_ii(&self) -> Conclusion {
        let (g, t) = (self.g, self.t());
        let (w, cov) = self.q.for_all::<4>("L1.1.ii", |[a2, b2, a, b]| {
            let u = self.p(a2, b2);
            let l = t.conj(u, self.p(a, b));
            let r = self.ts.action(u, g.comm(a, b));
            (l != r).then(|| {
                let w = self.w("(g'⊗h')^(g⊗h) = (g'⊗h')^[g,h]");
                let w = self.ge(self.ge(self.ge(self.ge(w, "g'", a2), "h'", b2), "g", a), "h", b);
                w.sides(self.tv(l), self.tv(r))
            })
        });
        finish(w, cov)
    }

    fn l1_1_iii(&self) -> Conclusion {
        let (g, t) = (self.g, self.t());
        let (w, cov) = self.q.for_all::<3>("L1.1.iii", |[a, b, a2]| {
            let u = self.p(a, b);
            let l = self.p(a2, g.comm(a, b));
            let r = t.mul(t.inv(self.ts.action(u, a2)), u);
            (l != r).then(|| {
                let w = self.ge(self.ge(self.ge(self.w("g'⊗[g,h] = (g⊗h)^(-g')·(g⊗h)"), "g", a), "h", b), "g'", a2);
                w.sides(self.tv(l), self.tv(r))
            })
        });
        finish(w, cov)
    }

    fn l1_1_iv(&self) -> Conclusion {
        let (g, t) = (self.g, self.t());
        let (w, cov) = self.q.for_all::<3>("L1.1.iv", |[a, b, a2]| {
            let u = self.p(a, b);
            let l = self.p(g.comm(a, b), a2);
            let r = t.mul(t.inv(u), self.ts.action(u, a2));
            (l != r).then(|| {
                let w = self.ge(self.ge(self.ge(self.w("[g,h]⊗g' = (g⊗h)⁻¹·(g⊗h)^g'"), "g", a), "h", b), "g'", a2);
                w.sides(self.tv(l), self.tv(r))
            })
        });
        finish(w, cov)
    }

    fn l1_1_v(&self) -> Conclusion {
        let (g, t) = (self.g, self.t());
        let (w, cov) = self.q.for_all::<4>("L1.1.v", |[a, b, a2, b2]| {
            let l = self.p(g.comm(a, b), g.comm(a2, b2));
            let r = t.comm(self.p(a, a2), self.p(b, b2));
            (l != r).then(|| {
                let w = self.w("[g,h]⊗[g',h'] = [g⊗g', h⊗h']");
                let w = self.ge(self.ge(self.ge(self.ge(w, "g", a), "h", b), "g'", a2), "h'", b2);
                w.sides(self.tv(l), self.tv(r))
            })
        });
        if w.is_none() {
            return finish(w, cov);
        }
        // the same tuples against the form [g⊗h, g'⊗h'], to tell a misprint from an engine fault
        let (alt, _) = self.q.for_all::<4>("L1.1.v", |[a, b, a2, b2]| {
            (self.p(g.comm(a, b), g.comm(a2, b2)) != t.comm(self.p(a, b), self.p(a2, b2))).then(|| self.w(""))
        });
        let form = if alt.is_none() { "holds" } else { "also fails" };
        finish(w, cov).map_err(|(note, w)| (format!("{note}; the form [g⊗h, g'⊗h'] {form} on the same tuples"), w))
    }

    fn l1_2_i(&self) -> Conclusion {
        let t = self.t();
        let theta = match theta_swap(self.ts) {
            Ok(th) => th,
            Err(e) => return fail(format!("θ does not extend: {e}"), self.w("θ is an automorphism").sides(json!(false), json!(true))),
        };
        if let Some(x) = t.elements().find(|&x| theta.apply(theta.apply(x)) != x) {
            let w = self.w("θ²(t) = t").elem("t", "T", t, x).sides(self.tv(theta.apply(theta.apply(x))), self.tv(x));
            return fail("θ is not an involution", w);
        }
        Ok(format!("θ verified bijective on {} elements, θ² = id, θ(g⊗h) = (h⊗g)⁻¹ on all {} pairs", t.order(), self.g.order().pow(2)))
    }

    fn l1_2_ii(&self) -> Conclusion {
        let aut = self.aut();
        let all: Vec<usize> = (0..aut.len()).collect();
        let full = self.ts.order().saturating_mul(aut.len()) <= INDUCED_FULL_BUDGET;
        let targets: Vec<usize> = if full {
            all
        } else {
            let mut t = aut.generators_of(&all);
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x4c31_322e_6969);
            for _ in 0..INDUCED_SAMPLES {
                t.push(rng.gen_range(0..aut.len()));
            }
            t.sort_unstable();
            t.dedup();
            t
        };
        for &a in &targets {
            if let Err(e) = induced_hom(self.ts, aut.get(a).images()) {
                return fail(format!("α⊗α does not extend: {e}"), self.w("α⊗α is an endomorphism").auts(&[a]).sides(json!(false), json!(true)));
            }
        }
        if full {
            Ok(format!("α⊗α extended and verified for all {} automorphisms", aut.len()))
        } else {
            let gens = aut.generators_of(&(0..aut.len()).collect::<Vec<_>>()).len();
            Ok(format!(
                "α⊗α extended and verified for {} automorphisms including a generating set of size {gens}; \
                 every other α⊗α is a composite of these endomorphisms",
                targets.len()
            ))
        }
    }

    // ---- subgroup containments

    fn s1_kappa(&self) -> Conclusion {
        let g = self.g;
        let kappa = self.ts.kappa();
        let image = kappa.image();
        if image != self.inv.derived {
            return fail("image of κ differs from G'", self.w("κ(G⊗G) = G'").sides(json!(image.order()), json!(self.inv.derived.order())));
        }
        let ker = kappa.kernel().order();
        if self.ts.order() != image.order() * ker {
            return fail("|G⊗G| ≠ |G'|·|ker κ|", self.w("|G⊗G| = |G'|·|ker κ|").sides(json!(self.ts.order()), json!(image.order() * ker)));
        }
        for a in g.elements() {
            for b in g.elements() {
                if kappa.apply(self.p(a, b)) != g.comm(a, b) {
                    let w = self.ge(self.ge(self.w("κ(g⊗h) = [g,h]"), "g", a), "h", b);
                    return fail("κ(g⊗h) ≠ [g,h]", w.sides(self.gv(kappa.apply(self.p(a, b))), self.gv(g.comm(a, b))));
                }
            }
        }
        let aut = self.aut();
        for (i, al) in aut.iter().enumerate() {
            let f = al.flags();
            if f.tensor_commuting == Some(true) && !f.commuting {
                return fail("a tensor commuting automorphism is not commuting", self.w("A⊗(G) ⊆ A(G)").auts(&[i]).sides(json!(false), json!(true)));
            }
            if f.tensor_central == Some(true) && !f.central {
                return fail("a tensor central automorphism is not central", self.w("Aut_c⊗(G) ⊆ Aut_c(G)").auts(&[i]).sides(json!(false), json!(true)));
            }
        }
        Ok(format!("|G'| = {}, |ker κ| = {ker}; κ(g⊗h) = [g,h] on all pairs; A⊗ ⊆ A and Aut_c⊗ ⊆ Aut_c", image.order()))
    }

    fn s1_tensor_center(&self) -> Conclusion {
        let zt = &self.inv.tensor[0];
        let all: Vec<Elem> = self.g.elements().collect();
        let ann = match tensor_annihilator(self.ts, &all) {
            Ok(a) => a,
            Err(e) => return fail(format!("C⊗_G(G) is not a subgroup: {e}"), self.w("C⊗_G(G) is a subgroup")),
        };
        self.equal_sets("Z⊗(G) = C⊗_G(G)", zt, &ann)?;
        self.subset("Z⊗(G) ⊆ Z(G)", zt, &self.inv.center)?;
        self.subset("Z⊗(G) ⊆ C_G(G⊗G)", zt, &self.inv.cgt)?;
        Ok(format!("|Z⊗| = {}, |Z| = {}, |C_G(G⊗G)| = {}", zt.order(), self.inv.center.order(), self.inv.cgt.order()))
    }

    fn s1_nth_tensor_center(&self) -> Conclusion {
        let tc = tensor_center(self.ts).map_err(|e| (e.to_string(), self.w("Z⊗(G) is a subgroup")))?;
        self.equal_sets("Z_1⊗(G) = Z⊗(G)", &self.inv.tensor[0], &tc)?;
        for n in 0..3 {
            self.subset(&format!("Z_{}⊗(G) ⊆ Z_{}(G)", n + 1, n + 1), &self.inv.tensor[n], &self.inv.upper[n])?;
            if n < 2 {
                self.subset(&format!("Z_{}⊗(G) ⊆ Z_{}⊗(G)", n + 1, n + 2), &self.inv.tensor[n], &self.inv.tensor[n + 1])?;
            }
        }
        let o: Vec<String> = self.inv.tensor.iter().zip(&self.inv.upper).map(|(a, b)| format!("{}/{}", a.order(), b.order())).collect();
        Ok(format!("|Z_n⊗|/|Z_n| for n = 1, 2, 3: {}", o.join(", ")))
    }

    fn s1_r2(&self) -> Conclusion {
        self.subset("Z(G) ⊆ R₂⊗(G)", &self.inv.center, &self.inv.r2t)?;
        self.subset("R₂⊗(G) ⊆ R₂(G)", &self.inv.r2t, &self.inv.r2)?;
        Ok(format!("|Z| = {}, |R₂⊗| = {}, |R₂| = {}", self.inv.center.order(), self.inv.r2t.order(), self.inv.r2.order()))
    }

    fn s1_characteristic(&self) -> Conclusion {
        let aut = self.aut();
        let named = [
            ("Z⊗(G)", &self.inv.tensor[0]),
            ("Z₂⊗(G)", &self.inv.tensor[1]),
            ("Z₃⊗(G)", &self.inv.tensor[2]),
            ("R₂⊗(G)", &self.inv.r2t),
        ];
        for (name, s) in named {
            for (i, al) in aut.iter().enumerate() {
                if let Some(&x) = s.elements().iter().find(|&&x| !s.contains(al.apply(x))) {
                    let w = self.ge(self.w(&format!("α({name}) = {name}")), "x", x).auts(&[i]);
                    return fail(format!("{name} is not characteristic"), w.sides(self.gv(al.apply(x)), json!(name)));
                }
            }
        }
        Ok(format!("stable under all {} automorphisms", aut.len()))
    }

    // ---- tensor commuting automorphisms

    fn empty_note(&self) -> Option<String> {
        self.a_t.is_empty().then(|| "A⊗(G) is empty".to_string())
    }

    fn l2_2(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let t = self.t();
        let mut cov = Coverage::Exhaustive(0);
        for &a in &self.a_t {
            let (w, c) = self.q.for_all::<2>("L2.2", |[x, y]| {
                let (ax, ay) = (self.apply(a, x), self.apply(a, y));
                let (l1, r1) = (self.p(x, ay), t.inv(self.p(y, ax)));
                let (l2, r2) = (self.p(ax, y), t.inv(self.p(ay, x)));
                let (eq, l, r) = if l1 != r1 {
                    ("x⊗α(y) = (y⊗α(x))⁻¹", l1, r1)
                } else if l2 != r2 {
                    ("α(x)⊗y = (α(y)⊗x)⁻¹", l2, r2)
                } else {
                    return None;
                };
                Some(self.ge(self.ge(self.w(eq), "x", x), "y", y).auts(&[a]).sides(self.tv(l), self.tv(r)))
            });
            cov = c;
            if w.is_some() {
                return finish(w, c);
            }
        }
        Ok(format!("{} tensor commuting automorphisms, each {}", self.a_t.len(), cov.describe()))
    }

    fn membership_fail(&self, eq: &str, auts: &[usize]) -> Conclusion {
        fail(format!("{eq} fails"), self.w(eq).auts(auts).sides(json!(false), json!(true)))
    }

    fn t2_3_i(&self) -> Conclusion {
        let aut = self.aut();
        for &a in &self.a_t {
            let mut x = aut.identity();
            for n in 0..aut.element_order(a) {
                if !self.a_t_member[x] {
                    let w = self.w("αⁿ ∈ A⊗(G)").auts(&[a, x]).sides(json!(n), json!("A⊗(G)"));
                    return fail("a power leaves A⊗(G)", w);
                }
                x = aut.compose(x, a);
            }
        }
        Ok(format!("all powers of {} tensor commuting automorphisms", self.a_t.len()))
    }

    fn t2_3_ii(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let aut = self.aut();
        for &a in &self.a_t {
            for c in 0..aut.len() {
                let conj = aut.compose(aut.compose(aut.inverse(c), a), c);
                if !self.a_t_member[conj] {
                    return self.membership_fail("γ⁻¹αγ ∈ A⊗(G)", &[a, c, conj]);
                }
            }
        }
        Ok(format!("{} × {} conjugates", self.a_t.len(), aut.len()))
    }

    fn t2_3_iii(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let aut = self.aut();
        for &a in &self.a_t {
            if !self.a_t_member[aut.inverse(a)] {
                return self.membership_fail("α⁻¹ ∈ A⊗(G)", &[a, aut.inverse(a)]);
            }
        }
        Ok(format!("{} inverses", self.a_t.len()))
    }

    fn t2_3_iv(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let aut = self.aut();
        for &a in &self.a_t {
            for &b in &self.a_t {
                let cond = self.g.elements().all(|x| self.p(self.apply(a, x), self.apply(b, x)) == 0);
                // both composition orders, so the check does not depend on how αβ is read
                for ab in [aut.compose(a, b), aut.compose(b, a)] {
                    if self.a_t_member[ab] != cond {
                        let w = self.w("αβ ∈ A⊗(G) iff α(x)⊗β(x) = 1 for all x").auts(&[a, b, ab]);
                        return fail("equivalence fails", w.sides(json!(self.a_t_member[ab]), json!(cond)));
                    }
                }
            }
        }
        Ok(format!("{} ordered pairs, both composition orders", self.a_t.len().pow(2)))
    }

    fn t2_3_v(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let aut = self.aut();
        for &a in &self.a_t {
            for &b in &self.a_t {
                let ab = aut.compose(a, b);
                let mut x = aut.identity();
                for n in 0..aut.element_order(ab) {
                    for (eq, y) in [("(αβ)ⁿα ∈ A⊗(G)", aut.compose(x, a)), ("β(αβ)ⁿ ∈ A⊗(G)", aut.compose(b, x))] {
                        if !self.a_t_member[y] {
                            return fail(format!("{eq} fails"), self.w(eq).auts(&[a, b, y]).sides(json!(n), json!("A⊗(G)")));
                        }
                    }
                    x = aut.compose(x, ab);
                }
            }
        }
        Ok(format!("{} ordered pairs, n up to the order of αβ", self.a_t.len().pow(2)))
    }

    fn l2_4(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        for &a in &self.a_t {
            let images = self.aut().get(a).images();
            for x in self.g.elements() {
                let br = bracket(self.g, x, images);
                if !self.inv.cgt.contains(br) {
                    let w = self.ge(self.w("[x,α] ∈ C_G(G⊗G)"), "x", x).auts(&[a]);
                    return fail("[x,α] acts nontrivially on G⊗G", w.sides(self.gv(br), json!("C_G(G⊗G)")));
                }
            }
        }
        Ok(format!("{} automorphisms × {} elements", self.a_t.len(), self.g.order()))
    }

    /// `{g : T_g ∈ set} = target`.
    fn inner_set_equals(&self, eq: &str, member: &[bool], target: &Subgroup) -> Conclusion {
        let aut = self.aut();
        for g in self.g.elements() {
            let lhs = member[aut.inner_index(g)];
            if lhs != target.contains(g) {
                return fail("set equality fails", self.ge(self.w(eq), "g", g).sides(json!(lhs), json!(target.contains(g))));
            }
        }
        Ok(format!("{{g : T_g in the set}} has {} elements", target.order()))
    }

    /// `g ↦ T_g` maps `source` onto `set ∩ Inn(G)` with kernel `Z(G)`, the
    /// intersection is a subgroup, and the index formula holds.
    fn inner_quotient(&self, name: &str, member: &[bool], source: &Subgroup) -> Conclusion {
        let aut = self.aut();
        let g = self.g;
        let inter: Vec<usize> = aut.inner().into_iter().filter(|&i| member[i]).collect();
        if let Some(x) = aut.subgroup_witness(&inter) {
            return fail(format!("{name} is not a subgroup"), self.w(&format!("{name} is a subgroup")).auts(&[x]).sides(json!(false), json!(true)));
        }
        let z = &self.inv.center;
        if inter.len() * z.order() != source.order() {
            let w = self.w(&format!("|{name}|·|Z(G)| = |source|")).sides(json!(inter.len() * z.order()), json!(source.order()));
            return fail("index formula fails", w);
        }
        let theta: Vec<usize> = source.elements().iter().map(|&x| aut.inner_index(x)).collect();
        for (&x, &tx) in source.elements().iter().zip(&theta) {
            if !member[tx] {
                return fail(format!("T_g leaves {name}"), self.ge(self.w(&format!("T_g ∈ {name}")), "g", x).auts(&[tx]));
            }
            if (tx == aut.identity()) != z.contains(x) {
                let w = self.ge(self.w("T_g = id iff g ∈ Z(G)"), "g", x).sides(json!(tx == 0), json!(z.contains(x)));
                return fail("kernel differs from Z(G)", w);
            }
        }
        let mut hit = vec![false; aut.len()];
        for &tx in &theta {
            hit[tx] = true;
        }
        if let Some(&missed) = inter.iter().find(|&&i| !hit[i]) {
            return fail("map is not onto", self.w(&format!("g ↦ T_g onto {name}")).auts(&[missed]));
        }
        for (i, &x) in source.elements().iter().enumerate() {
            for (j, &y) in source.elements().iter().enumerate() {
                let lhs = aut.inner_index(g.mul(x, y));
                let rhs = aut.compose(theta[i], theta[j]);
                if lhs != rhs {
                    let w = self.ge(self.ge(self.w("T_(gh) = T_g T_h"), "g", x), "h", y).auts(&[lhs, rhs]);
                    return fail("g ↦ T_g is not a homomorphism", w);
                }
            }
        }
        Ok(format!(
            "|{name}| = {}, |Z| = {}, |source| = {}; hom onto with kernel Z verified",
            inter.len(),
            z.order(),
            source.order()
        ))
    }

    fn c2_7(&self, inner_only: bool) -> Evaluation {
        let aut = self.aut();
        let (name, set): (&str, Vec<usize>) = if inner_only {
            ("A⊗(G) ∩ Inn(G)", aut.inner().into_iter().filter(|&i| self.a_t_member[i]).collect())
        } else {
            ("A⊗(G)", self.a_t.clone())
        };
        let conclusion = self.equal_sets("R₂⊗(G) = Z(G)", &self.inv.r2t, &self.inv.center).map(|_| format!("|R₂⊗| = |Z| = {}", self.inv.center.order()));
        let failed_hypothesis = self.diag_hypothesis().or_else(|| {
            (set != [aut.identity()]).then(|| {
                let other: Vec<usize> = set.iter().copied().filter(|&i| i != 0).take(1).collect();
                let w = self.w(&format!("{name} = {{id}}")).auts(&other).sides(json!(set.len()), json!(1));
                (format!("hypothesis {name} = {{id}} fails: it has {} elements", set.len()), Some(w))
            })
        });
        Evaluation {
            failed_hypothesis,
            hypothesis_note: format!("hypotheses x⊗x = 1⊗ and {name} = {{id}} hold"),
            conclusion,
        }
    }

    // ---- tensor central automorphisms

    fn l3_2(&self) -> Conclusion {
        let aut = self.aut();
        for i in 0..aut.len() {
            if self.c_t_member[i] && !self.a_t_member[i] {
                return self.membership_fail("Aut_c⊗(G) ⊆ A⊗(G)", &[i]);
            }
        }
        Ok(format!("{} tensor central automorphisms", aut.tensor_central().len()))
    }

    fn all_pairs(&self, f: impl Fn(Elem, Elem) -> bool) -> bool {
        self.g.elements().all(|x| self.g.elements().all(|y| f(x, y)))
    }

    fn criterion(&self, eq: &str, f: impl Fn(&[Elem], Elem, Elem) -> bool) -> Conclusion {
        let aut = self.aut();
        for (i, al) in aut.iter().enumerate() {
            let rhs = self.all_pairs(|x, y| f(al.images(), x, y));
            if self.c_t_member[i] != rhs {
                return fail("equivalence fails", self.w(eq).auts(&[i]).sides(json!(self.c_t_member[i]), json!(rhs)));
            }
        }
        Ok(format!("{} automorphisms, all pairs", aut.len()))
    }

    fn l3_3_i(&self) -> Conclusion {
        self.criterion("α ∈ Aut_c⊗(G) iff α(y)⊗x = y⊗x", |a, x, y| self.p(a[y], x) == self.p(y, x))
    }

    fn l3_3_ii(&self) -> Conclusion {
        self.criterion("α ∈ Aut_c⊗(G) iff x⊗α(y) = (x⊗y)^[y,α]", |a, x, y| {
            self.p(x, a[y]) == self.ts.action(self.p(x, y), bracket(self.g, y, a))
        })
    }

    fn l3_3_iii(&self) -> Conclusion {
        let aut = self.aut();
        let ct = aut.tensor_central();
        let mut cov = Coverage::Exhaustive(0);
        for &a in &ct {
            let (w, c) = self.q.for_all::<2>("L3.3.iii", |[x, y]| {
                let l = self.p(self.apply(a, x), self.apply(a, y));
                let r = self.p(x, y);
                (l != r).then(|| self.ge(self.ge(self.w("(α⊗α)(x⊗y) = x⊗y"), "x", x), "y", y).auts(&[a]).sides(self.tv(l), self.tv(r)))
            });
            cov = c;
            if w.is_some() {
                return finish(w, c);
            }
        }
        Ok(format!("{} tensor central automorphisms, each {}", ct.len(), cov.describe()))
    }

    fn l3_3_iv(&self) -> Conclusion {
        if let Some(n) = self.empty_note() {
            return Ok(n);
        }
        let aut = self.aut();
        let t = self.t();
        for &a in &self.a_t {
            let sq = aut.compose(a, a);
            let im = aut.get(a).images();
            let rhs = self.all_pairs(|x, y| self.p(im[x], im[y]) == t.inv(self.p(y, x)));
            if self.c_t_member[sq] != rhs {
                let w = self.w("α² ∈ Aut_c⊗(G) iff (α⊗α)(x⊗y) = (y⊗x)⁻¹").auts(&[a, sq]);
                return fail("equivalence fails", w.sides(json!(self.c_t_member[sq]), json!(rhs)));
            }
        }
        Ok(format!("{} tensor commuting automorphisms", self.a_t.len()))
    }

    fn t3_4(&self) -> Evaluation {
        let aut = self.aut();
        let conclusion = match aut.subgroup_witness(&self.a_t) {
            None => Ok(format!("A⊗(G) is a subgroup of order {}", self.a_t.len())),
            Some(x) => fail("A⊗(G) is not a subgroup", self.w("A⊗(G) is a subgroup").auts(&[x]).sides(json!(false), json!(true))),
        };
        let mut failed = self.diag_hypothesis();
        if failed.is_none() {
            'outer: for &a in &self.a_t {
                for &b in &self.a_t {
                    let c = aut.commutator(a, b);
                    if !self.c_t_member[c] {
                        let w = self.w("[α,β] ∈ Aut_c⊗(G)").auts(&[a, b, c]).sides(json!(false), json!(true));
                        failed = Some(("hypothesis {[α,β] : α, β ∈ A⊗} ⊆ Aut_c⊗ fails".into(), Some(w)));
                        break 'outer;
                    }
                }
            }
        }
        if failed.is_none() {
            'premise: for (i, al) in aut.iter().enumerate() {
                for x in self.g.elements() {
                    let (l, r) = (self.p(al.apply(x), x), self.p(x, al.apply(x)));
                    if l == r && r != 0 {
                        let w = self.ge(self.w("α(x)⊗x = x⊗α(x) implies x⊗α(x) = 1"), "x", x).auts(&[i]).sides(self.tv(r), self.tv(0));
                        failed = Some(("hypothesis α(x)⊗x = x⊗α(x) ⇒ x⊗α(x) = 1⊗ fails".into(), Some(w)));
                        break 'premise;
                    }
                }
            }
        }
        Evaluation {
            failed_hypothesis: failed,
            hypothesis_note: "x⊗x = 1⊗, the commutator set of A⊗ lies in Aut_c⊗, and the symmetric-pairing premise all hold".into(),
            conclusion,
        }
    }

    fn t3_7(&self) -> Conclusion {
        let d = commutator_closure(self.g, &self.inv.r2t);
        self.subset("(R₂⊗(G))' ⊆ Z₂⊗(G)", &d, &self.inv.tensor[1])?;
        Ok(format!("|(R₂⊗)'| = {}, |Z₂⊗| = {}", d.order(), self.inv.tensor[1].order()))
    }
}
