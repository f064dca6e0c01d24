//! Acceptance criteria 1 to 10, one line each.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always shown.
//! The process fails unless every criterion passes, except for criterion 3
//! whose only permitted red is the known misprint in L1.1.v: that form fails,
//! while [g,h]⊗[g',h'] = [g⊗h, g'⊗h'] holds on the same tuples and L1.1.i
//! to L1.1.iv pass exhaustively.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use tensq_core::fp::{presentation_of, todd_coxeter, EnumerationLimits, Presentation, Strategy};
use tensq_core::group::spec::{parse_group, GroupSpec};
use tensq_core::harness::{self, corpus, AtlasDocument, GroupReport, Options, Status};
use tensq_core::tensor::{nu_presentation, pairing_isomorphism, tensor_square_direct, tensor_square_via_nu};
use tensq_core::Error;

/// Wall-clock budgets per criterion.
const BUDGET_1: Duration = Duration::from_secs(5 * 60);
const BUDGET_2: Duration = Duration::from_secs(60);
const BUDGET_3_TO_6: Duration = Duration::from_secs(10 * 60);
const BUDGET_7: Duration = Duration::from_secs(15 * 60);

struct Line {
    n: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    /// A red that matches a documented discrepancy exactly.
    known_red: bool,
}

fn limits() -> EnumerationLimits {
    EnumerationLimits::default()
}

fn order_of(r: &GroupReport) -> usize {
    r.fingerprint.as_ref().map_or(0, |f| f.order)
}

fn failing(reports: &[&GroupReport], ids: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for r in reports {
        if let Some(e) = &r.error {
            out.push(format!("{}: error {e}", r.spec));
        }
        for id in ids {
            match r.check(id) {
                Some(c) if c.status == Status::Pass => {}
                Some(c) => out.push(format!("{} {id} {:?}", r.spec, c.status)),
                None => out.push(format!("{} {id} missing", r.spec)),
            }
        }
    }
    out
}

fn summary(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; {} violations, first: {}", bad.len(), bad[0])
    }
}

fn criterion_1() -> Line {
    let t = Instant::now();
    let specs = corpus::corpus(12, &limits()).expect("corpus builds");
    let mut bad = Vec::new();
    for s in &specs {
        let g = Arc::new(parse_group(s, &limits()).unwrap());
        let (d, n) = match (tensor_square_direct(&g, &limits()), tensor_square_via_nu(&g, &limits())) {
            (Ok(d), Ok(n)) => (d, n),
            (a, b) => {
                bad.push(format!("{s}: {:?} / {:?}", a.err(), b.err()));
                continue;
            }
        };
        if pairing_isomorphism(&d, &n).is_none() || pairing_isomorphism(&n, &d).is_none() {
            bad.push(format!("{s}: |direct| = {}, |ν| = {}", d.order(), n.order()));
        }
    }
    let el = t.elapsed();
    Line {
        n: 1,
        title: "direct and ν routes agree pairing-for-pairing, order ≤ 12",
        pass: bad.is_empty() && el <= BUDGET_1,
        detail: format!("{} groups in {:.1?}{}", specs.len(), el, summary(&bad)),
        known_red: false,
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_2() -> Line {
    let t = Instant::now();
    let mut lists: Vec<Vec<usize>> = (1..=16).map(|n| vec![n]).collect();
    for (s, n) in corpus::candidates(16) {
        if let Some(rest) = s.strip_prefix("abelian:") {
            assert!(n <= 16);
            lists.push(rest.split(',').map(|d| d.parse().unwrap()).collect());
        }
    }
    let mut bad = Vec::new();
    for d in &lists {
        let g = Arc::new(GroupSpec::Abelian(d.clone()).build(&limits()).unwrap());
        let expected: usize = d.iter().map(|&a| d.iter().map(|&b| gcd(a, b)).product::<usize>()).product();
        let got = harness::build_tensor_square(&g, &limits()).map(|(ts, _)| ts.order());
        if got.as_ref().ok() != Some(&expected) {
            bad.push(format!("abelian:{d:?}: {got:?} vs {expected}"));
        }
    }
    let el = t.elapsed();
    Line {
        n: 2,
        title: "|G⊗G| = ∏ gcd(d_i, d_j) for abelian groups of order ≤ 16",
        pass: bad.is_empty() && el <= BUDGET_2,
        detail: format!("{} invariant lists in {:.1?}{}", lists.len(), el, summary(&bad)),
        known_red: false,
    }
}

fn criterion_3(small: &[&GroupReport], elapsed: Duration) -> Line {
    let ids = ["L1.1.i", "L1.1.ii", "L1.1.iii", "L1.1.iv", "L1.1.v"];
    let bad = failing(small, &ids);
    let not_exhaustive: Vec<String> = small
        .iter()
        .flat_map(|r| ids.iter().filter_map(move |id| r.check(id).map(|c| (r, c))))
        .filter(|(_, c)| !c.hypothesis_note.contains("exhaustive"))
        .map(|(r, c)| format!("{} {}", r.spec, c.check_id))
        .collect();
    let misprint_only = bad.iter().all(|b| b.contains("L1.1.v"))
        && small.iter().filter_map(|r| r.check("L1.1.v")).filter(|c| c.status == Status::Fail).all(|c| {
            c.hypothesis_note.contains("the form [g⊗h, g'⊗h'] holds") && c.witness.is_some()
        });
    let groups: Vec<&str> = bad.iter().map(|b| b.split(' ').next().unwrap()).collect();
    Line {
        n: 3,
        title: "identities L1.1.i to L1.1.v on all tuples, order ≤ 16",
        pass: bad.is_empty() && not_exhaustive.is_empty() && elapsed <= BUDGET_3_TO_6,
        detail: if bad.is_empty() {
            format!("{} groups, exhaustive", small.len())
        } else {
            format!(
                "L1.1.i to L1.1.iv pass exhaustively on {} groups; L1.1.v as stated ([g⊗g', h⊗h']) fails on {:?}, \
                 where [g⊗h, g'⊗h'] holds on every tuple{}",
                small.len(),
                groups,
                if not_exhaustive.is_empty() { String::new() } else { format!("; sampled: {not_exhaustive:?}") }
            )
        },
        known_red: !bad.is_empty() && misprint_only && not_exhaustive.is_empty(),
    }
}

fn criterion_4(small: &[&GroupReport]) -> Line {
    let bad = failing(small, &["L1.2.i", "L1.2.ii"]);
    let via_generators: Vec<&str> = small
        .iter()
        .filter(|r| r.check("L1.2.ii").is_some_and(|c| c.hypothesis_note.contains("generating set")))
        .map(|r| r.spec.as_str())
        .collect();
    Line {
        n: 4,
        title: "θ is an involutive automorphism; α⊗α is an endomorphism for every α, order ≤ 16",
        pass: bad.is_empty(),
        detail: format!(
            "{} groups; α⊗α extended for every α except on {:?}, where a generating set of Aut(G) plus {} seeded \
             samples are extended and the rest are composites{}",
            small.len(),
            via_generators,
            harness::INDUCED_SAMPLES,
            summary(&bad)
        ),
        known_red: false,
    }
}

fn criterion_5(small: &[&GroupReport]) -> Line {
    let bad = failing(small, &["S1.tensor_center", "S1.nth_tensor_center", "S1.r2_tensor_engel", "S1.characteristic"]);
    Line {
        n: 5,
        title: "Z⊗ ⊆ Z, Z_n⊗ ⊆ Z_n, Z ⊆ R₂⊗ ⊆ R₂, tensor subgroups characteristic, order ≤ 16",
        pass: bad.is_empty(),
        detail: format!("{} groups{}", small.len(), summary(&bad)),
        known_red: false,
    }
}

fn criterion_6(small: &[&GroupReport], elapsed: Duration) -> Line {
    let ids = [
        "T2.3.ii", "T2.3.iii", "T2.3.iv", "T2.3.v", "L2.2", "L2.4", "L3.3.i", "L3.3.ii", "L3.3.iii", "L3.3.iv", "T3.5", "C3.6",
    ];
    let mut bad = failing(small, &ids);
    for r in small {
        let (z, a) = (r.subgroups.as_ref().unwrap(), r.automorphisms.as_ref().unwrap());
        if a.tensor_central_inner * z.center != z.tensor_center_2 {
            bad.push(format!("{}: |Aut_c⊗ ∩ Inn|·|Z| ≠ |Z₂⊗|", r.spec));
        }
    }
    Line {
        n: 6,
        title: "unconditional automorphism results, order ≤ 16",
        pass: bad.is_empty() && elapsed <= BUDGET_3_TO_6,
        detail: format!("{} groups × {} checks, corpus verified in {:.1?}{}", small.len(), ids.len(), elapsed, summary(&bad)),
        known_red: false,
    }
}

const DIAG_CONDITIONAL: [&str; 5] = ["T2.5", "C2.6", "T2.3.i", "L3.2", "T3.7"];

fn criterion_7(all: &AtlasDocument) -> Line {
    let t = Instant::now();
    let opts = Options { slow: true, ..Options::default() };
    let a5 = harness::verify_group("alternating:5", &opts);
    let el = t.elapsed();
    let mut bad = failing(&[&a5], &DIAG_CONDITIONAL);
    let mut vacuous = 0;
    for r in &all.groups {
        let hyp = r.tensor.as_ref().is_some_and(|t| t.hypothesis_diag_trivial);
        for id in DIAG_CONDITIONAL {
            let c = r.check(id).expect("complete report");
            if hyp {
                if c.status != Status::Pass {
                    bad.push(format!("{} {id} {:?} under the hypothesis", r.spec, c.status));
                }
                continue;
            }
            let witnessed = c.witness.as_ref().is_some_and(|w| w.equation == "x⊗x = 1⊗" && w.elements.len() == 1 && w.lhs != w.rhs);
            if c.status != Status::Vacuous || !witnessed {
                bad.push(format!("{} {id} {:?} without a diagonal witness", r.spec, c.status));
            } else {
                vacuous += 1;
            }
        }
    }
    Line {
        n: 7,
        title: "x⊗x = 1 conditional results on A5, vacuous with witness elsewhere",
        pass: bad.is_empty() && el <= BUDGET_7 && a5.tensor.as_ref().is_some_and(|t| t.hypothesis_diag_trivial),
        detail: format!(
            "A5 (|G⊗G| = {}) in {:.1?}; {vacuous} vacuous results with witnesses over {} corpus groups{}",
            a5.tensor.as_ref().map_or(0, |t| t.order),
            el,
            all.groups.len(),
            summary(&bad)
        ),
        known_red: false,
    }
}

fn criterion_8(small: &[&GroupReport]) -> Line {
    let mut bad = failing(small, &["S1.kappa"]);
    for r in small {
        let (t, z) = (r.tensor.as_ref().unwrap(), r.subgroups.as_ref().unwrap());
        if t.order != z.derived * t.kernel_kappa_order {
            bad.push(format!("{}: {} ≠ {}·{}", r.spec, t.order, z.derived, t.kernel_kappa_order));
        }
    }
    Line {
        n: 8,
        title: "κ maps onto G' and |G⊗G| = |G'|·|ker κ|, order ≤ 16",
        pass: bad.is_empty(),
        detail: format!("{} groups{}", small.len(), summary(&bad)),
        known_red: false,
    }
}

fn criterion_9() -> Line {
    let opts = Options::default();
    let render = |p: usize| serde_json::to_string_pretty(&harness::atlas(12, &opts, p).unwrap()).unwrap();
    let (a, b) = (render(1), render(4));
    Line {
        n: 9,
        title: "atlas up to order 12 is byte-identical across --parallel 1 and 4",
        pass: a == b,
        detail: format!("{} bytes", a.len()),
        known_red: false,
    }
}

fn criterion_10() -> Line {
    let mut presentations: Vec<(String, Presentation)> = corpus::FP_CATALOG
        .iter()
        .map(|&(s, _)| (s.to_string(), s.parse::<GroupSpec>().unwrap().presentation().unwrap().clone()))
        .collect();
    for s in corpus::corpus(24, &limits()).unwrap() {
        let g = parse_group(&s, &limits()).unwrap();
        let p = presentation_of(&g).unwrap();
        if g.order() <= 8 {
            presentations.push((format!("ν({s})"), nu_presentation(&p)));
        }
        presentations.push((format!("derived({s})"), p));
    }
    let mut bad = Vec::new();
    for (name, p) in &presentations {
        let run = |strategy: Strategy, max: usize| {
            todd_coxeter(p, &[], &limits().with_strategy(strategy).with_max_cosets(max)).map(|t| t.ncosets())
        };
        let (h, f) = (run(Strategy::Hlt, 1 << 22), run(Strategy::Felsch, 1 << 22));
        match (&h, &f) {
            (Ok(a), Ok(b)) if a == b => {
                for s in [Strategy::Hlt, Strategy::Felsch] {
                    match run(s, a - 1) {
                        Err(Error::LimitExceeded { .. }) => {}
                        other if *a > 1 => bad.push(format!("{name} {s:?} below index: {other:?}")),
                        _ => {}
                    }
                }
            }
            _ => bad.push(format!("{name}: HLT {h:?} vs Felsch {f:?}")),
        }
    }
    Line {
        n: 10,
        title: "HLT and Felsch agree; max_cosets below the index raises LimitExceeded",
        pass: bad.is_empty(),
        detail: format!("{} presentations{}", presentations.len(), summary(&bad)),
        known_red: false,
    }
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        // `cargo test -- --list` on a custom harness
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let mut lines = vec![criterion_1(), criterion_2()];

    let t = Instant::now();
    let atlas = harness::atlas(24, &Options::default(), 1).expect("atlas runs");
    let elapsed = t.elapsed();
    let small: Vec<&GroupReport> = atlas.groups.iter().filter(|r| order_of(r) <= 16).collect();
    lines.extend([
        criterion_3(&small, elapsed),
        criterion_4(&small),
        criterion_5(&small),
        criterion_6(&small, elapsed),
        criterion_7(&atlas),
        criterion_8(&small),
        criterion_9(),
        criterion_10(),
    ]);

    let mut ok = true;
    for l in &lines {
        let tag = match (l.pass, l.known_red) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known discrepancy)",
            (false, false) => "FAIL",
        };
        println!("criterion {:>2} {tag}: {} | {}", l.n, l.title, l.detail);
        ok &= l.pass || (l.known_red && l.n == 3);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
