use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use tensq_core::fp::EnumerationLimits;
use tensq_core::harness::{self, GroupReport, Options, Status};

#[derive(Parser)]
#[command(name = "tensq", version, about = "Non-abelian tensor squares and tensor commuting automorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tensor square and invariant subgroups of one group.
    Compute {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run every registry check on one group.
    Verify {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every corpus group up to an order.
    Atlas {
        #[arg(long)]
        max_order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Record hypothesis and conclusion separately for each check.
    Explore {
        /// May be repeated.
        #[arg(long, required = true)]
        group: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    max_cosets: Option<usize>,
    /// Allow groups up to order 60.
    #[arg(long)]
    slow: bool,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write JSON to a path, or `-` for stdout.
    #[arg(long, value_name = "PATH|-")]
    json: Option<String>,
    /// Write JSON to a path.
    #[arg(short = 'o', value_name = "PATH", conflicts_with = "json")]
    output: Option<PathBuf>,
    /// Record wall-clock time per phase (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

impl Common {
    fn options(&self) -> Options {
        let mut limits = EnumerationLimits::default();
        if let Some(n) = self.max_cosets {
            limits = limits.with_max_cosets(n);
        }
        Options { limits, slow: self.slow, seed: self.seed, timings: self.timings, ..Options::default() }
    }

    fn target(&self) -> Option<String> {
        self.json.clone().or_else(|| self.output.as_ref().map(|p| p.display().to_string()))
    }
}

fn emit(common: &Common, value: &Value, text: impl FnOnce() -> String) -> io::Result<()> {
    let json = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
    match common.target().as_deref() {
        Some("-") => io::stdout().write_all(json.as_bytes()),
        Some(path) => {
            fs::write(path, json)?;
            print!("{}", text());
            Ok(())
        }
        None => {
            print!("{}", text());
            Ok(())
        }
    }
}

fn group_text(r: &GroupReport) -> String {
    let mut s = format!("group {}\n", r.spec);
    if let Some(t) = &r.tensor {
        s += &format!(
            "  |G⊗G| = {}  |∇(G)| = {}  |ker κ| = {}  route = {:?}\n",
            t.order, t.diagonal_order, t.kernel_kappa_order, t.construction
        );
    }
    if let Some(z) = &r.subgroups {
        s += &format!(
            "  |Z| = {}  |Z⊗| = {}  |Z₂⊗| = {}  |R₂⊗| = {}  |R₂| = {}  |C_G(G⊗G)| = {}\n",
            z.center, z.tensor_center, z.tensor_center_2, z.right_2_tensor_engel, z.right_2_engel, z.centralizer_of_tensor_square
        );
    }
    if let Some(a) = &r.automorphisms {
        s += &format!(
            "  |Aut| = {}  |Inn| = {}  |A| = {}  |A⊗| = {}  |Aut_c| = {}  |Aut_c⊗| = {}\n",
            a.aut, a.inn, a.commuting, a.tensor_commuting, a.central, a.tensor_central
        );
    }
    for c in &r.checks {
        let st = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "vacuous",
        };
        s += &format!("  {:<22} {:<8} {}\n", c.check_id, st, c.hypothesis_note);
    }
    if let Some(e) = &r.error {
        s += &format!("  error: {e}\n");
    }
    s
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    let ok = |clean: bool| if clean { ExitCode::SUCCESS } else { ExitCode::from(1) };
    match cli.command {
        Command::Compute { group, common } => {
            let r = harness::compute_group(&group, &common.options());
            emit(&common, &serde_json::to_value(&r)?, || group_text(&r))?;
            Ok(ok(r.error.is_none()))
        }
        Command::Verify { group, common } => {
            let r = harness::verify_group(&group, &common.options());
            emit(&common, &serde_json::to_value(&r)?, || group_text(&r))?;
            Ok(ok(r.is_clean()))
        }
        Command::Atlas { max_order, common } => {
            let doc = match harness::atlas(max_order, &common.options(), common.parallel) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            emit(&common, &serde_json::to_value(&doc)?, || {
                let mut s = format!("{} groups, {} errors\n", doc.groups.len(), doc.errors);
                for row in &doc.summary {
                    s += &format!("  {:<22} pass {:>3}  fail {:>3}  vacuous {:>3}\n", row.check_id, row.pass, row.fail, row.vacuous);
                }
                s
            })?;
            Ok(ok(doc.errors == 0 && doc.summary.iter().all(|r| r.fail == 0)))
        }
        Command::Explore { group, common } => {
            let doc = match harness::explore(&group, &common.options(), common.parallel) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            emit(&common, &serde_json::to_value(&doc)?, || {
                let mut s = String::new();
                for g in &doc.groups {
                    s += &format!("group {}\n", g.spec);
                    for e in &g.entries {
                        s += &format!(
                            "  {:<22} hypothesis {:<5}  conclusion {}\n",
                            e.check_id, e.hypothesis_holds, e.conclusion_holds
                        );
                    }
                    if let Some(e) = &g.error {
                        s += &format!("  error: {e}\n");
                    }
                }
                s
            })?;
            Ok(ok(doc.groups.iter().all(|g| g.error.is_none())))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
