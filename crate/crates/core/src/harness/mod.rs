//! Per-group verification, the atlas sweep and explore mode.

mod checks;
pub mod corpus;
mod quantify;
mod registry;
mod report;

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::automorphisms::{classify_all, AutBounds, AutomorphismGroup, DEFAULT_MAX_AUTOMORPHISMS, DEFAULT_MAX_GROUP_ORDER, SLOW_MAX_GROUP_ORDER};
use crate::error::{Error, Result};
use crate::fp::EnumerationLimits;
use crate::group::spec::GroupSpec;
use crate::group::{fingerprint, FiniteGroup};
use crate::tensor::{diagonal_subgroup, diagonal_witness, pairing_isomorphism, tensor_square_direct, tensor_square_via_nu, TensorSquare};

pub use checks::{INDUCED_FULL_BUDGET, INDUCED_SAMPLES};
pub use quantify::{Coverage, Quantifier, EXHAUSTIVE_ORDER, SAMPLE_TUPLES};
pub use registry::{lookup, CheckSpec, REGISTRY};
pub use report::*;

use checks::{Ctx, Invariants};

/// Groups up to this order get the direct construction; larger ones go
/// through ν(G).
pub const DIRECT_ROUTE_MAX_ORDER: usize = 16;
/// Groups up to this order are built by both routes and compared.
pub const CROSS_VALIDATE_MAX_ORDER: usize = 12;

#[derive(Clone, Debug)]
pub struct Options {
    pub limits: EnumerationLimits,
    /// Raise the group-order bound to [`SLOW_MAX_GROUP_ORDER`].
    pub slow: bool,
    pub seed: u64,
    pub timings: bool,
    pub max_automorphisms: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            limits: EnumerationLimits::default(),
            slow: false,
            seed: 0,
            timings: false,
            max_automorphisms: DEFAULT_MAX_AUTOMORPHISMS,
        }
    }
}

impl Options {
    pub fn max_group_order(&self) -> usize {
        if self.slow {
            SLOW_MAX_GROUP_ORDER
        } else {
            DEFAULT_MAX_GROUP_ORDER
        }
    }

    fn aut_bounds(&self) -> AutBounds {
        AutBounds { max_group_order: self.max_group_order(), max_automorphisms: self.max_automorphisms }
    }
}

/// Builds `G ⊗ G` by the route for its size; small groups are also built by
/// the other route and the two pairings compared. Returns the comparison
/// result when one was made.
pub fn build_tensor_square(g: &Arc<FiniteGroup>, limits: &EnumerationLimits) -> Result<(TensorSquare, Option<bool>)> {
    let primary = if g.order() <= DIRECT_ROUTE_MAX_ORDER {
        tensor_square_direct(g, limits)?
    } else {
        tensor_square_via_nu(g, limits)?
    };
    if g.order() > CROSS_VALIDATE_MAX_ORDER {
        return Ok((primary, None));
    }
    let other = tensor_square_via_nu(g, limits)?;
    let agree = pairing_isomorphism(&primary, &other).is_some() && pairing_isomorphism(&other, &primary).is_some();
    Ok((primary, Some(agree)))
}

struct Analysis {
    report: GroupReport,
    explore: Vec<ExploreEntry>,
}

fn secs(t: Instant) -> f64 {
    t.elapsed().as_secs_f64()
}

fn analyze(spec: &str, opts: &Options) -> Analysis {
    analyze_to(spec, opts, Stage::Checks)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stage {
    Invariants,
    Checks,
}

fn analyze_to(spec: &str, opts: &Options, stage: Stage) -> Analysis {
    let mut report = GroupReport {
        schema_version: SCHEMA_VERSION,
        spec: spec.trim().to_string(),
        seed: opts.seed,
        fingerprint: None,
        complete: false,
        error: None,
        tensor: None,
        subgroups: None,
        automorphisms: None,
        checks: Vec::new(),
        timings: None,
    };
    let mut explore = Vec::new();
    if let Err(e) = run(spec, opts, stage, &mut report, &mut explore) {
        report.error = Some(e.to_string());
    }
    if !opts.timings {
        report.timings = None;
    }
    Analysis { report, explore }
}

fn run(spec: &str, opts: &Options, stage: Stage, report: &mut GroupReport, explore: &mut Vec<ExploreEntry>) -> Result<()> {
    let mut timings = Timings::default();
    let t0 = Instant::now();
    let parsed: GroupSpec = spec.parse()?;
    report.spec = parsed.to_string();
    let g = Arc::new(parsed.build(&opts.limits)?);
    report.fingerprint = Some(fingerprint(&g));
    timings.group = secs(t0);
    if g.order() > opts.max_group_order() {
        return Err(Error::BoundExceeded { what: "group order", value: g.order(), bound: opts.max_group_order() });
    }

    let t1 = Instant::now();
    let (ts, cross) = build_tensor_square(&g, &opts.limits)?;
    timings.tensor_square = secs(t1);
    let dw = diagonal_witness(&ts);
    report.tensor = Some(TensorData {
        order: ts.order(),
        diagonal_order: diagonal_subgroup(&ts).order(),
        hypothesis_diag_trivial: dw.is_none(),
        diagonal_witness: dw.map(|x| ElementRef { name: "x".into(), group: "G", index: x, word: g.word_string(x) }),
        kernel_kappa_order: ts.kappa().kernel().order(),
        construction: ts.construction(),
        cross_validated: cross,
    });
    if cross == Some(false) {
        return Err(Error::InvalidGroup("direct and ν constructions of G⊗G disagree".into()));
    }
    let inv = Invariants::compute(&ts)?;
    report.subgroups = Some(SubgroupOrders {
        center: inv.center.order(),
        derived: inv.derived.order(),
        tensor_center: inv.tensor[0].order(),
        tensor_center_2: inv.tensor[1].order(),
        right_2_tensor_engel: inv.r2t.order(),
        right_2_engel: inv.r2.order(),
        centralizer_of_tensor_square: inv.cgt.order(),
    });
    if stage == Stage::Invariants {
        report.timings = Some(timings);
        report.complete = true;
        return Ok(());
    }

    let t2 = Instant::now();
    let aut = classify_all(&ts, &opts.aut_bounds());
    timings.automorphisms = secs(t2);
    let (aut, aut_error) = match aut {
        Ok(a) => {
            report.automorphisms = Some(counts(&a));
            (Some(a), None)
        }
        Err(e @ Error::BoundExceeded { .. }) => (None, Some(e)),
        Err(e) => return Err(e),
    };

    let t3 = Instant::now();
    let ctx = Ctx::new(&ts, aut.as_ref(), &inv, opts.seed);
    for c in REGISTRY {
        if c.needs_automorphisms && aut.is_none() {
            continue;
        }
        let ev = ctx.evaluate(c.id).expect("every registry id has an evaluator");
        explore.push(ExploreEntry {
            check_id: c.id.to_string(),
            hypothesis_holds: ev.failed_hypothesis.is_none(),
            conclusion_holds: ev.conclusion.is_ok(),
            witness: match (&ev.failed_hypothesis, &ev.conclusion) {
                (_, Err((_, w))) => Some(w.clone()),
                (Some((_, w)), Ok(_)) => w.clone(),
                _ => None,
            },
        });
        let (status, hypothesis_note, witness) = ev.into_parts();
        report.checks.push(CheckResult { check_id: c.id.to_string(), status, hypothesis_note, witness });
    }
    timings.checks = secs(t3);
    report.timings = Some(timings);
    match aut_error {
        Some(e) => report.error = Some(format!("automorphism checks skipped: {e}")),
        None => report.complete = true,
    }
    Ok(())
}

fn counts(a: &AutomorphismGroup) -> AutomorphismCounts {
    let inner = a.inner();
    let ta = a.tensor_commuting();
    let tc = a.tensor_central();
    AutomorphismCounts {
        aut: a.len(),
        inn: inner.len(),
        commuting: a.commuting().len(),
        tensor_commuting: ta.len(),
        central: a.central().len(),
        tensor_central: tc.len(),
        tensor_commuting_inner: inner.iter().filter(|i| ta.binary_search(i).is_ok()).count(),
        tensor_central_inner: inner.iter().filter(|i| tc.binary_search(i).is_ok()).count(),
    }
}

/// Tensor square and invariant subgroups only; no automorphisms or checks.
pub fn compute_group(spec: &str, opts: &Options) -> GroupReport {
    analyze_to(spec, opts, Stage::Invariants).report
}

/// Runs every registry check on one group.
pub fn verify_group(spec: &str, opts: &Options) -> GroupReport {
    analyze(spec, opts).report
}

fn pool(parallel: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallel.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// Verifies every corpus group of order at most `max_order`. The output
/// does not depend on `parallel`.
pub fn atlas(max_order: usize, opts: &Options, parallel: usize) -> Result<AtlasDocument> {
    if max_order > opts.max_group_order() {
        return Err(Error::BoundExceeded { what: "atlas max order", value: max_order, bound: opts.max_group_order() });
    }
    let specs = corpus::corpus(max_order, &opts.limits)?;
    let mut groups: Vec<GroupReport> = pool(parallel)?.install(|| specs.par_iter().map(|s| verify_group(s, opts)).collect());
    groups.sort_by(|a, b| a.spec.cmp(&b.spec));
    let summary = REGISTRY
        .iter()
        .map(|c| {
            let mut row = SummaryRow { check_id: c.id.to_string(), pass: 0, fail: 0, vacuous: 0 };
            for r in groups.iter().filter_map(|g| g.check(c.id)) {
                match r.status {
                    Status::Pass => row.pass += 1,
                    Status::Fail => row.fail += 1,
                    Status::Vacuous => row.vacuous += 1,
                }
            }
            row
        })
        .collect();
    let errors = groups.iter().filter(|g| g.error.is_some()).count();
    Ok(AtlasDocument { schema_version: SCHEMA_VERSION, seed: opts.seed, max_order, groups, summary, errors })
}

/// Evaluates hypothesis and conclusion separately for every check, so
/// conclusions can be inspected on groups where a hypothesis fails.
pub fn explore(specs: &[String], opts: &Options, parallel: usize) -> Result<ExploreDocument> {
    let groups = pool(parallel)?.install(|| {
        specs
            .par_iter()
            .map(|s| {
                let a = analyze(s, opts);
                ExploreRecord { spec: a.report.spec, error: a.report.error, entries: a.explore }
            })
            .collect()
    });
    Ok(ExploreDocument { schema_version: SCHEMA_VERSION, seed: opts.seed, groups })
}
