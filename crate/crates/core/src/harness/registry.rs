//! The fixed list of checks run on every group.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: &'static str,
    /// The identity or claim being checked.
    pub statement: &'static str,
    /// Conditional checks are vacuous when their hypothesis fails.
    pub conditional: bool,
    /// Whether the check needs `Aut(G)`.
    pub needs_automorphisms: bool,
}

const fn check(id: &'static str, statement: &'static str) -> CheckSpec {
    CheckSpec { id, statement, conditional: false, needs_automorphisms: false }
}

const fn aut_check(id: &'static str, statement: &'static str) -> CheckSpec {
    CheckSpec { id, statement, conditional: false, needs_automorphisms: true }
}

const fn conditional(id: &'static str, statement: &'static str) -> CheckSpec {
    CheckSpec { id, statement, conditional: true, needs_automorphisms: true }
}

pub const REGISTRY: &[CheckSpec] = &[
    check("L1.1.i", "(g⁻¹⊗h)^g = (g⊗h)⁻¹ = (g⊗h⁻¹)^h"),
    check("L1.1.ii", "(g'⊗h')^(g⊗h) = (g'⊗h')^[g,h]"),
    check("L1.1.iii", "g'⊗[g,h] = (g⊗h)^(-g')·(g⊗h)"),
    check("L1.1.iv", "[g,h]⊗g' = (g⊗h)⁻¹·(g⊗h)^g'"),
    check("L1.1.v", "[g,h]⊗[g',h'] = [g⊗g', h⊗h']"),
    check("L1.2.i", "θ(g⊗h) = (h⊗g)⁻¹ extends to an automorphism θ of G⊗G"),
    aut_check("L1.2.ii", "every α ∈ Aut(G) induces an endomorphism α⊗α with (α⊗α)(g⊗h) = α(g)⊗α(h)"),
    aut_check("S1.kappa", "κ(g⊗h) = [g,h] maps G⊗G onto G'; so A⊗(G) ⊆ A(G) and Aut_c⊗(G) ⊆ Aut_c(G)"),
    check("S1.tensor_center", "Z⊗(G) = C⊗_G(G) ⊆ Z(G), and Z⊗(G) ⊆ C_G(G⊗G)"),
    check("S1.nth_tensor_center", "Z_n⊗(G) ⊆ Z_n(G) for n = 1, 2, 3, with Z_1⊗ = Z⊗ and Z_n⊗ ⊆ Z_(n+1)⊗"),
    check("S1.r2_tensor_engel", "Z(G) ⊆ R₂⊗(G) ⊆ R₂(G)"),
    aut_check("S1.characteristic", "Z⊗, Z₂⊗, Z₃⊗ and R₂⊗ are characteristic"),
    aut_check("L2.2", "for α ∈ A⊗: x⊗α(y) = (y⊗α(x))⁻¹ and α(x)⊗y = (α(y)⊗x)⁻¹"),
    conditional("T2.3.i", "if x⊗x = 1 for all x, then A⊗(G) is closed under powers"),
    aut_check("T2.3.ii", "A⊗(G) is closed under conjugation by Aut(G)"),
    aut_check("T2.3.iii", "A⊗(G) is closed under inverses"),
    aut_check("T2.3.iv", "for α, β ∈ A⊗: αβ ∈ A⊗ iff α(x)⊗β(x) = 1 for all x"),
    aut_check("T2.3.v", "for α, β ∈ A⊗: (αβ)ⁿα and β(αβ)ⁿ lie in A⊗ for all n ≥ 0"),
    aut_check("L2.4", "for α ∈ A⊗: [x,α] ∈ C_G(G⊗G) for all x"),
    conditional("T2.5", "if x⊗x = 1 for all x, then T_g ∈ A⊗(G) iff g ∈ R₂⊗(G)"),
    conditional("C2.6", "if x⊗x = 1 for all x, then A⊗(G) ∩ Inn(G) is a subgroup isomorphic to R₂⊗(G)/Z(G)"),
    conditional("C2.7.full", "if x⊗x = 1 for all x and A⊗(G) = {id}, then R₂⊗(G) = Z(G)"),
    conditional("C2.7.inner", "if x⊗x = 1 for all x and A⊗(G) ∩ Inn(G) = {id}, then R₂⊗(G) = Z(G)"),
    conditional("L3.2", "if x⊗x = 1 for all x, then Aut_c⊗(G) ⊆ A⊗(G)"),
    aut_check("L3.3.i", "α ∈ Aut_c⊗(G) iff α(y)⊗x = y⊗x for all x, y"),
    aut_check("L3.3.ii", "α ∈ Aut_c⊗(G) iff x⊗α(y) = (x⊗y)^[y,α] for all x, y"),
    aut_check("L3.3.iii", "for α ∈ Aut_c⊗(G): α⊗α is the identity"),
    aut_check("L3.3.iv", "for α ∈ A⊗: α² ∈ Aut_c⊗(G) iff (α⊗α)(x⊗y) = (y⊗x)⁻¹ for all x, y"),
    conditional(
        "T3.4",
        "if x⊗x = 1 for all x, every [α,β] with α, β ∈ A⊗ lies in Aut_c⊗, and α(x)⊗x = x⊗α(x) forces x⊗α(x) = 1, then A⊗(G) is a subgroup",
    ),
    aut_check("T3.5", "T_g ∈ Aut_c⊗(G) iff g ∈ Z₂⊗(G)"),
    aut_check("C3.6", "g ↦ T_g maps Z₂⊗(G) onto the subgroup Aut_c⊗(G) ∩ Inn(G) with kernel Z(G)"),
    conditional("T3.7", "if x⊗x = 1 for all x, then (R₂⊗(G))' ⊆ Z₂⊗(G)"),
];

pub fn lookup(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_statements_present() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
        assert!(REGISTRY.iter().all(|c| !c.statement.trim().is_empty()));
        assert_eq!(lookup("C3.6").map(|c| c.conditional), Some(false));
        assert!(lookup("X9.9").is_none());
    }

    #[test]
    fn vacuous_checks_are_exactly_the_diagonal_hypothesis_ones() {
        let cond: Vec<&str> = REGISTRY.iter().filter(|c| c.conditional).map(|c| c.id).collect();
        assert_eq!(cond, ["T2.3.i", "T2.5", "C2.6", "C2.7.full", "C2.7.inner", "L3.2", "T3.4", "T3.7"]);
    }
}
