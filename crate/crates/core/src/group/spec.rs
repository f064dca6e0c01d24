//! One-line group specifications.
//!
//! ```text
//! trivial | cyclic:6 | dihedral:8 | quaternion:8 | abelian:2,4 | symmetric:4
//! alternating:5 | product:(cyclic:2)x(symmetric:3) | perm:4:(1 2),(1 2 3 4)
//! fp:2:a^3,b^2,(a*b)^2
//! ```
//!
//! Parsing is case-insensitive and ignores whitespace except as the point
//! separator inside permutation cycles. Relators may use juxtaposition or `*`,
//! integer powers, conjugation `u^v`, left-normed commutators `[u,v,w]` and
//! relations `lhs=rhs`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::{EnumerationLimits, Presentation, Word};

use super::{
    abelian, alternating, cyclic, dihedral, direct_product, from_permutations, from_presentation, quaternion,
    symmetric, FiniteGroup,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Abelian(Vec<usize>),
    Symmetric(usize),
    Alternating(usize),
    Product(Vec<GroupSpec>),
    /// Generators as lists of 1-based cycles.
    Perm { degree: usize, gens: Vec<Vec<Vec<usize>>> },
    Fp { presentation: Presentation, relators: Vec<String> },
}

fn parse_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::Parse { spec: spec.to_string(), reason: reason.into() }
}

fn parse_usize(spec: &str, s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| parse_err(spec, format!("expected a positive integer, found `{s}`")))
}

/// Splits on `sep` at bracket depth zero.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let lower = input.trim().to_ascii_lowercase();
        let (kind, rest) = match lower.split_once(':') {
            Some((k, r)) => (k.trim().to_string(), r.to_string()),
            None => (lower.trim().to_string(), String::new()),
        };
        let compact: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
        let spec = match kind.as_str() {
            "trivial" if compact.is_empty() => GroupSpec::Trivial,
            "cyclic" => GroupSpec::Cyclic(parse_usize(input, &compact)?),
            "dihedral" => GroupSpec::Dihedral(parse_usize(input, &compact)?),
            "quaternion" => GroupSpec::Quaternion(parse_usize(input, &compact)?),
            "symmetric" => GroupSpec::Symmetric(parse_usize(input, &compact)?),
            "alternating" => GroupSpec::Alternating(parse_usize(input, &compact)?),
            "abelian" => GroupSpec::Abelian(
                compact.split(',').map(|s| parse_usize(input, s)).collect::<Result<_>>()?,
            ),
            "product" => {
                let mut factors = Vec::new();
                for part in split_top(&compact, 'x') {
                    let inner = part
                        .strip_prefix('(')
                        .and_then(|p| p.strip_suffix(')'))
                        .ok_or_else(|| parse_err(input, format!("product factor `{part}` must be parenthesised")))?;
                    factors.push(inner.parse()?);
                }
                if factors.len() < 2 {
                    return Err(parse_err(input, "a product needs at least two factors"));
                }
                GroupSpec::Product(factors)
            }
            "perm" => parse_perm(input, &rest)?,
            "fp" => parse_fp(input, &compact)?,
            _ => return Err(parse_err(input, format!("unknown group family `{kind}`"))),
        };
        Ok(spec)
    }
}

fn parse_perm(input: &str, rest: &str) -> Result<GroupSpec> {
    let (deg, gens) = rest
        .split_once(':')
        .ok_or_else(|| parse_err(input, "expected perm:<degree>:<generators>"))?;
    let degree = parse_usize(input, deg)?;
    if degree == 0 || degree > 255 {
        return Err(parse_err(input, "permutation degree must be in 1..=255"));
    }
    let mut out = Vec::new();
    for g in split_top(gens.trim(), ',') {
        let g = g.trim();
        let mut cycles = Vec::new();
        let mut s = g;
        while !s.is_empty() {
            let body_end = s.find(')').ok_or_else(|| parse_err(input, format!("unbalanced cycle in `{g}`")))?;
            let body = s[..body_end]
                .trim()
                .strip_prefix('(')
                .ok_or_else(|| parse_err(input, format!("expected `(` in `{g}`")))?;
            let pts: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ';')
                .filter(|t| !t.is_empty())
                .map(|t| parse_usize(input, t))
                .collect::<Result<_>>()?;
            if pts.iter().any(|&p| p == 0 || p > degree) {
                return Err(parse_err(input, format!("cycle point out of 1..={degree} in `{g}`")));
            }
            let mut sorted = pts.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != pts.len() {
                return Err(parse_err(input, format!("repeated point in cycle of `{g}`")));
            }
            if pts.len() > 1 {
                cycles.push(pts);
            }
            s = s[body_end + 1..].trim_start();
        }
        out.push(cycles);
    }
    Ok(GroupSpec::Perm { degree, gens: out })
}

fn parse_fp(input: &str, compact: &str) -> Result<GroupSpec> {
    let (n, rels) = compact.split_once(':').unwrap_or((compact, ""));
    let ngens = parse_usize(input, n)?;
    if ngens > 26 {
        return Err(parse_err(input, "at most 26 generators (a..z)"));
    }
    let mut words = Vec::new();
    let mut texts = Vec::new();
    if !rels.is_empty() {
        for r in split_top(rels, ',') {
            let mut p = RelParser { input, s: r.as_bytes(), pos: 0, ngens };
            words.push(p.relation()?);
            texts.push(r.to_string());
        }
    }
    let presentation = Presentation::new(ngens, words)?;
    Ok(GroupSpec::Fp { presentation, relators: texts })
}

struct RelParser<'a> {
    input: &'a str,
    s: &'a [u8],
    pos: usize,
    ngens: usize,
}

impl RelParser<'_> {
    fn err(&self, reason: impl Into<String>) -> Error {
        parse_err(self.input, format!("{} (at `{}`)", reason.into(), String::from_utf8_lossy(self.s)))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn relation(&mut self) -> Result<Word> {
        let lhs = self.expr()?;
        let w = if self.peek() == Some(b'=') {
            self.pos += 1;
            let rhs = self.expr()?;
            lhs.mul(&rhs.inverse())
        } else {
            lhs
        };
        if self.pos != self.s.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(w)
    }

    fn expr(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    w = w.mul(&self.term()?);
                }
                Some(c) if c.is_ascii_lowercase() || c == b'(' || c == b'[' || c == b'1' => {
                    w = w.mul(&self.term()?);
                }
                _ => return Ok(w),
            }
        }
    }

    fn term(&mut self) -> Result<Word> {
        let mut w = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let k = self.integer()?;
                    w = w.pow(k);
                }
                _ => {
                    let by = self.atom()?;
                    w = w.conjugate(&by);
                }
            }
        }
        Ok(w)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .filter(|k: &i64| k.unsigned_abs() <= 10_000)
            .ok_or_else(|| self.err("bad exponent"))
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                let g = (c - b'a') as usize;
                if g >= self.ngens {
                    return Err(self.err(format!("generator `{}` out of range", c as char)));
                }
                Ok(Word::generator(g))
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut w = self.expr()?;
                let mut parts = 1;
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    w = w.commutator(&self.expr()?);
                    parts += 1;
                }
                if self.peek() != Some(b']') || parts < 2 {
                    return Err(self.err("malformed commutator"));
                }
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err("expected a generator, `1`, `(` or `[`")),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        match self {
            GroupSpec::Trivial => write!(f, "trivial"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            GroupSpec::Abelian(d) => write!(f, "abelian:{}", list(d)),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| format!("({g})")).collect();
                write!(f, "product:{}", parts.join("x"))
            }
            GroupSpec::Perm { degree, gens } => {
                let gs: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            "()".to_string()
                        } else {
                            cycles
                                .iter()
                                .map(|c| {
                                    let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                                    format!("({})", pts.join(" "))
                                })
                                .collect()
                        }
                    })
                    .collect();
                write!(f, "perm:{degree}:{}", gs.join(","))
            }
            GroupSpec::Fp { presentation, relators } => {
                write!(f, "fp:{}:{}", presentation.ngens(), relators.join(","))
            }
        }
    }
}

impl GroupSpec {
    /// Constructs the group, named by the canonical spec string.
    pub fn build(&self, limits: &EnumerationLimits) -> Result<FiniteGroup> {
        let g = match self {
            GroupSpec::Trivial => FiniteGroup::trivial(),
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Quaternion(n) => quaternion(*n)?,
            GroupSpec::Abelian(d) => abelian(d)?,
            GroupSpec::Symmetric(n) => symmetric(*n)?,
            GroupSpec::Alternating(n) => alternating(*n)?,
            GroupSpec::Product(fs) => {
                let mut acc = fs[0].build(limits)?;
                for f in &fs[1..] {
                    acc = direct_product(&acc, &f.build(limits)?)?;
                }
                acc
            }
            GroupSpec::Perm { degree, gens } => {
                let perms: Vec<Vec<usize>> = gens
                    .iter()
                    .map(|cycles| {
                        let mut p: Vec<usize> = (0..*degree).collect();
                        // cycles are composed left to right
                        for c in cycles {
                            let mut step: Vec<usize> = (0..*degree).collect();
                            for (i, &x) in c.iter().enumerate() {
                                step[x - 1] = c[(i + 1) % c.len()] - 1;
                            }
                            p = p.iter().map(|&x| step[x]).collect();
                        }
                        p
                    })
                    .collect();
                from_permutations("perm", *degree, &perms)?
            }
            GroupSpec::Fp { presentation, .. } => from_presentation("fp", presentation, limits)?,
        };
        Ok(g.with_name(self.to_string()))
    }

    /// The user-supplied presentation, for `fp:` specs.
    pub fn presentation(&self) -> Option<&Presentation> {
        match self {
            GroupSpec::Fp { presentation, .. } => Some(presentation),
            _ => None,
        }
    }
}

/// Parses and builds in one step.
pub fn parse_group(spec: &str, limits: &EnumerationLimits) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphic_small;

    fn build(s: &str) -> FiniteGroup {
        parse_group(s, &EnumerationLimits::default()).unwrap()
    }

    #[test]
    fn families_parse() {
        assert_eq!(build("cyclic:6").order(), 6);
        assert_eq!(build(" Dihedral : 8 ").order(), 8);
        assert_eq!(build("quaternion:8").order(), 8);
        assert_eq!(build("abelian:2, 4").order(), 8);
        assert_eq!(build("symmetric:4").order(), 24);
        assert_eq!(build("alternating:5").order(), 60);
        assert_eq!(build("trivial").order(), 1);
    }

    #[test]
    fn products_nest() {
        let g = build("product:(cyclic:2)x(symmetric:3)");
        assert_eq!(g.order(), 12);
        assert_eq!(g.name(), "product:(cyclic:2)x(symmetric:3)");
        let h = build("product:(cyclic:2)x(product:(cyclic:2)x(cyclic:3))x(cyclic:1)");
        assert_eq!(h.order(), 12);
    }

    #[test]
    fn permutations_and_presentations() {
        let s4 = build("perm:4:(1 2),(1 2 3 4)");
        assert_eq!(s4.order(), 24);
        let s3 = build("fp:2:a^3,b^2,(a*b)^2");
        assert!(isomorphic_small(&s3, &build("symmetric:3"), 256).unwrap());
        let q8 = build("FP:2: a^4, a^2=b^2, b^-1 a b = a^-1");
        assert!(isomorphic_small(&q8, &build("quaternion:8"), 256).unwrap());
        let v4 = build("fp:2:a^2,b^2,[a,b]");
        assert!(isomorphic_small(&v4, &build("abelian:2,2"), 256).unwrap());
        let c3 = build("fp:2:a^3,b,a^b=a");
        assert_eq!(c3.order(), 3);
    }

    #[test]
    fn canonical_names_roundtrip() {
        for s in ["cyclic:6", "abelian:2,4", "perm:4:(1 2),(1 2 3 4)", "fp:2:a^3,b^2,(a*b)^2", "product:(cyclic:2)x(dihedral:6)"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
        }
        let spec: GroupSpec = "perm: 4 : (1  2) , (1 2 3 4)".parse().unwrap();
        assert_eq!(spec.to_string(), "perm:4:(1 2),(1 2 3 4)");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "cyclic:", "cyclic:x", "fp:1:b", "fp:2:a^", "product:(cyclic:2)", "perm:3:(1 4)", "lie:3", "fp:1:(a"] {
            assert!(matches!(bad.parse::<GroupSpec>(), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
