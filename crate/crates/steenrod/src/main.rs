use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use steenrod::cache::Cache;
use steenrod::chart::Format;
use steenrod::commands::{self as cmd, CliError, Outcome};

#[derive(Parser)]
#[command(name = "steenrod", version, about = "Steenrod algebra computations, charts and checks")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// tsv, json, svg or text
    #[arg(long, global = true, default_value = "tsv")]
    format: String,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Recorded in headers; also seeds random coefficients when none is given
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply Milnor basis elements, e.g. "Sq(2)*Sq(2)"; with --dual, dual
    /// elements such as "z1^2*z2@A(2)*"
    Mul {
        expr: String,
        #[arg(long)]
        dual: bool,
    },
    #[command(subcommand)]
    Chart(ChartCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// path, list or clear
    Cache { action: String },
}

#[derive(Subcommand)]
enum ChartCmd {
    /// Ext over A, A(n) or E(n) from a cached minimal resolution
    Ext {
        #[arg(long, default_value = "A(1)")]
        algebra: String,
        /// k, moore or random:<seed>
        #[arg(long, default_value = "k")]
        coeffs: String,
        #[arg(long, default_value_t = 6)]
        smax: u32,
        #[arg(long)]
        tmax: Option<u32>,
        /// Keep only t - s <= range
        #[arg(long)]
        range: Option<u32>,
    },
    /// Cotor over a quotient of the dual algebra via the cobar complex
    Cotor {
        #[arg(long, default_value = "A(1)*")]
        coalgebra: String,
        /// k or file:<comodule.json>
        #[arg(long, default_value = "k")]
        coeffs: String,
        #[arg(long, default_value_t = 4)]
        smax: u32,
        #[arg(long, default_value_t = 16)]
        tmax: u32,
    },
    /// One page of the Cartan-Eilenberg spectral sequence of a normal pair
    SsPage {
        #[arg(long, default_value = "E(1)")]
        sub: String,
        #[arg(long, default_value = "A(1)")]
        big: String,
        #[arg(long, default_value = "k")]
        coeffs: String,
        #[arg(long, default_value_t = 2)]
        page: u32,
        #[arg(long, default_value_t = 4)]
        smax: u32,
        #[arg(long, default_value_t = 12)]
        tmax: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Hom from a finite module into free modules vanishes
    PalgFinite {
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, default_value_t = 2)]
        witness: u32,
        #[arg(long, default_value_t = 24)]
        window: u32,
        /// Negative control: kill products from this degree on
        #[arg(long)]
        degenerate_from: Option<u32>,
    },
    /// No maps from A(1)* into Cotor^k in a window of shifts
    A1Cotor {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long)]
        extend: Option<u32>,
        /// none, drop-q0-term, trivialize-source or trivialize-target
        #[arg(long, default_value = "none")]
        mutate: String,
    },
    /// No maps from the dual algebra into its bounded-length truncation
    ALeqk {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long)]
        extend: Option<u32>,
        #[arg(long, default_value = "none")]
        mutate: String,
    },
    /// Spectral sequence abutment against Ext and Cotor
    CeAbutment {
        #[arg(long, default_value = "E(1)")]
        sub: String,
        #[arg(long, default_value = "A(1)")]
        big: String,
        #[arg(long, default_value = "k")]
        coeffs: String,
        #[arg(long, default_value_t = 4)]
        smax: u32,
        #[arg(long, default_value_t = 8)]
        range: u32,
    },
    /// Hopf algebra axioms of A and its dual
    HopfAxioms {
        #[arg(long, default_value_t = 24)]
        degree: u32,
        #[arg(long, default_value_t = 16)]
        duality_degree: u32,
    },
    /// Poincare duality of A(n)
    Poincare {
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Vanishing of Hom into the Adams E2 input for H, BP or A(1)*
    AdamsE2 {
        #[arg(long, default_value = "H")]
        spec: String,
        #[arg(long, default_value_t = 12)]
        window: u32,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let format = Format::parse(&g.format)
        .ok_or_else(|| CliError::Config(format!("unknown format {:?}; expected tsv, json, svg or text", g.format)))?;
    let cache = Cache::locate(g.cache_dir.as_deref());
    let seed = g.seed;
    match &cli.command {
        Command::Mul { expr, dual } => cmd::cmd_mul(expr, *dual),
        Command::Cache { action } => cmd::cmd_cache(action, &cache),
        Command::Chart(c) => match c {
            ChartCmd::Ext { algebra, coeffs, smax, tmax, range } => cmd::cmd_chart_ext(
                &cmd::ExtChart { algebra, coeffs, s_max: *smax, t_max: *tmax, range: *range },
                format,
                seed,
                &cache,
            ),
            ChartCmd::Cotor { coalgebra, coeffs, smax, tmax } => {
                cmd::cmd_chart_cotor(coalgebra, coeffs, *smax, *tmax, format, seed)
            }
            ChartCmd::SsPage { sub, big, coeffs, page, smax, tmax } => cmd::cmd_chart_ss_page(
                &cmd::PageChart { sub, big, coeffs, page: *page, s_max: *smax, t_max: *tmax },
                format,
                seed,
            ),
        },
        Command::Verify(v) => match v {
            VerifyCmd::PalgFinite { module, witness, window, degenerate_from } => cmd::cmd_verify_palg_finite(
                &cmd::PalgParams { module, witness: *witness, window: *window, degenerate_from: *degenerate_from },
                seed,
            ),
            VerifyCmd::A1Cotor { k, degree, extend, mutate } => {
                cmd::cmd_verify_a1_cotor(*k, *degree, *extend, mutate, seed)
            }
            VerifyCmd::ALeqk { k, degree, extend, mutate } => {
                cmd::cmd_verify_a_leqk(*k, *degree, *extend, mutate, seed)
            }
            VerifyCmd::CeAbutment { sub, big, coeffs, smax, range } => cmd::cmd_verify_ce_abutment(
                &cmd::CeParams { sub, big, coeffs, s_max: *smax, range: *range },
                seed,
            ),
            VerifyCmd::HopfAxioms { degree, duality_degree } => {
                cmd::cmd_verify_hopf_axioms(*degree, *duality_degree, seed)
            }
            VerifyCmd::Poincare { n } => cmd::cmd_verify_poincare(*n, seed),
            VerifyCmd::AdamsE2 { spec, window } => cmd::cmd_verify_adams_e2(spec, *window, seed),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.global.out.clone();
    match run(cli) {
        Ok(o) => {
            let written = match &out {
                Some(p) => std::fs::write(p, &o.text),
                None => {
                    print!("{}", o.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
            ExitCode::from(o.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
