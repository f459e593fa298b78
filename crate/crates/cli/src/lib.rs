//! Command-line frontend for `tauto-core`.

pub mod commands;
pub mod report;
pub mod selftest;

use clap::{Args, Parser, Subcommand};
use commands::{BetaChoice, CycleInput};
use report::{sha256_hex, Outcome, RunReport};
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;
use tauto_core::{Error, Result, TermOrder};

#[derive(Parser, Debug)]
#[command(name = "tauto", version, about = "Exact computations for tautological systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Run independent tasks concurrently.
    #[arg(long, global = true)]
    pub parallel: bool,

    /// Term order for Weyl-algebra Gröbner bases: degrevlex or weighted:w1,...
    #[arg(long, global = true)]
    pub order: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Instance file (JSON).
    pub instance: PathBuf,

    /// Character name from the instance, or comma-separated values.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,

    /// Value of β on the scaling element; β vanishes elsewhere.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_e: Option<String>,
}

impl SystemArgs {
    fn choice(&self) -> BetaChoice {
        BetaChoice {
            beta: self.beta.clone(),
            beta_e: self.beta_e.clone(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the presentation of τ̂ and decide whether it is nonzero.
    Build(SystemArgs),
    /// b-function of the e-less system, with symmetry check when γ is known.
    Bfun {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Duality parameters and the applicable statement.
    Dual {
        #[command(flatten)]
        sys: SystemArgs,
        /// Comma-separated values of γ.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Check that a cochain lies in the kernel of the differential.
    Cycle {
        instance: Option<PathBuf>,
        /// Cochain file with lines `[i^j] <Weyl element>`.
        #[arg(long)]
        cochain: Option<PathBuf>,
        /// The Veronese cochain ζ for gl(n) on Sym^d.
        #[arg(long, num_args = 2, value_names = ["N", "D"])]
        veronese: Option<Vec<u32>>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta_e: Option<String>,
    },
    /// Truncated homology dimensions of a weight slice.
    Profile {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        weight: i64,
        /// Bernstein-degree caps, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [6u32, 8])]
        cap: Vec<u32>,
        #[arg(long, default_value_t = tauto_core::cekoszul::DEFAULT_SLICE_LIMIT)]
        slice_limit: usize,
    },
    /// Parameter windows for linear free divisors.
    Lfd {
        /// Instance file with an "lfd" section.
        instance: Option<PathBuf>,
        #[arg(long)]
        n: Option<u32>,
        /// Roots of b_D, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        /// Values of β(e), comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        beta_e: Option<String>,
    },
    /// Run the built-in property suite.
    Selftest,
}

fn parse_order(s: Option<&str>) -> Result<Option<TermOrder>> {
    s.map(TermOrder::parse).transpose()
}

fn execute(cli: &Cli) -> (String, String, serde_json::Value, Result<Outcome>) {
    let order = parse_order(cli.order.as_deref());
    let mut hashed: Vec<Vec<u8>> = Vec::new();
    let mut flags = json!({ "order": cli.order, "parallel": cli.parallel });
    let (name, outcome) = match &cli.command {
        Command::Build(sys) => {
            flags["beta"] = json!(sys.beta);
            flags["beta_e"] = json!(sys.beta_e);
            ("build", (|| {
                let (inst, bytes) = commands::load_instance(&sys.instance)?;
                hashed.push(bytes);
                commands::cmd_build(&inst, &sys.choice(), order.clone()?.as_ref())
            })())
        }
        Command::Bfun { sys, cap } => {
            flags["beta"] = json!(sys.beta);
            flags["beta_e"] = json!(sys.beta_e);
            flags["cap"] = json!(cap);
            ("bfun", (|| {
                let (inst, bytes) = commands::load_instance(&sys.instance)?;
                hashed.push(bytes);
                commands::cmd_bfun(&inst, &sys.choice(), *cap, order.clone()?.as_ref())
            })())
        }
        Command::Dual { sys, gamma, cap } => {
            flags["beta"] = json!(sys.beta);
            flags["beta_e"] = json!(sys.beta_e);
            flags["gamma"] = json!(gamma);
            ("dual", (|| {
                let (inst, bytes) = commands::load_instance(&sys.instance)?;
                hashed.push(bytes);
                commands::cmd_dual(&inst, &sys.choice(), gamma.as_deref(), *cap)
            })())
        }
        Command::Cycle { instance, cochain, veronese, beta, beta_e } => {
            flags["veronese"] = json!(veronese);
            flags["beta"] = json!(beta);
            flags["beta_e"] = json!(beta_e);
            ("cycle", (|| match (veronese, instance, cochain) {
                (Some(v), None, None) => {
                    hashed.push(format!("veronese {} {}", v[0], v[1]).into_bytes());
                    commands::cmd_cycle(CycleInput::Veronese { n: v[0] as usize, d: v[1] })
                }
                (None, Some(path), Some(cpath)) => {
                    let (inst, bytes) = commands::load_instance(path)?;
                    hashed.push(bytes);
                    let cbytes = commands::read_file(cpath)?;
                    hashed.push(cbytes.clone());
                    let text = String::from_utf8(cbytes)
                        .map_err(|_| Error::Parse("cochain file is not UTF-8".into()))?;
                    let choice = BetaChoice { beta: beta.clone(), beta_e: beta_e.clone() };
                    commands::cmd_cycle(CycleInput::File { inst: &inst, cochain: &text, beta: &choice })
                }
                _ => Err(Error::Validation(
                    "give either --veronese N D, or an instance together with --cochain FILE".into(),
                )),
            })())
        }
        Command::Profile { sys, weight, cap, slice_limit } => {
            flags["beta"] = json!(sys.beta);
            flags["beta_e"] = json!(sys.beta_e);
            flags["weight"] = json!(weight);
            flags["cap"] = json!(cap);
            flags["slice_limit"] = json!(slice_limit);
            ("profile", (|| {
                let (inst, bytes) = commands::load_instance(&sys.instance)?;
                hashed.push(bytes);
                commands::cmd_profile(&inst, &sys.choice(), *weight, cap, *slice_limit, cli.parallel)
            })())
        }
        Command::Lfd { instance, n, roots, beta_e } => {
            flags["n"] = json!(n);
            flags["roots"] = json!(roots);
            flags["beta_e"] = json!(beta_e);
            ("lfd", (|| {
                let mut params = None;
                if let Some(path) = instance {
                    let (inst, bytes) = commands::load_instance(path)?;
                    hashed.push(bytes);
                    params = inst.lfd.clone();
                    if params.is_none() {
                        return Err(Error::Validation(format!("{} has no \"lfd\" section", path.display())));
                    }
                }
                let n = match (n, &params) {
                    (Some(n), _) => *n,
                    (None, Some(p)) => p.n,
                    _ => return Err(Error::Validation("--n is required without an instance".into())),
                };
                let roots = match (roots, &params) {
                    (Some(r), _) => commands::parse_rational_list(r)?,
                    (None, Some(p)) => p.roots_bd.clone(),
                    _ => return Err(Error::Validation("--roots is required without an instance".into())),
                };
                let betas = match (beta_e, &params) {
                    (Some(b), _) => commands::parse_rational_list(b)?,
                    (None, Some(p)) => p.beta_values.clone(),
                    _ => return Err(Error::Validation("--beta-e is required without an instance".into())),
                };
                commands::cmd_lfd(n, &roots, &betas)
            })())
        }
        Command::Selftest => ("selftest", selftest::run_selftest(cli.parallel)),
    };
    let parts: Vec<&[u8]> = hashed.iter().map(|b| b.as_slice()).collect();
    (name.to_string(), sha256_hex(&parts), flags, outcome)
}

pub fn run(cli: &Cli) -> RunReport {
    let start = Instant::now();
    let (command, input_hash, flags, outcome) = execute(cli);
    RunReport {
        command,
        input_hash,
        flags,
        outcome,
        elapsed: start.elapsed(),
    }
}
