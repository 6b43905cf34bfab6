//! `easygram`: command-line access to the partition, Weingarten, group,
//! probability, cumulant and Jones machinery.
//!
//! Exit codes: 0 success, 1 domain or shape error (a JSON error object is
//! printed), 2 a verification failed, 64 bad usage.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit, error_json, Ctx, Format};

#[derive(Parser, Debug)]
#[command(name = "easygram", version, about = "Exact calculus for easy groups and their laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    /// Render exact rationals as decimal approximations.
    #[arg(long, global = true)]
    pub float: bool,

    /// Write the output document to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate or count category members on one row of points.
    Partitions {
        #[arg(value_enum)]
        action: PartitionsAction,
        #[command(flatten)]
        args: PartitionsArgs,
    },
    /// Gram matrices, determinants and ranks.
    Gram {
        #[arg(value_enum)]
        action: GramAction,
        #[command(flatten)]
        args: GramArgs,
    },
    /// Weingarten matrices and integrals.
    Wg {
        #[command(subcommand)]
        action: WgAction,
    },
    /// Enumeration oracle for finite groups of generalized permutation matrices.
    Oracle {
        #[arg(value_enum)]
        action: OracleAction,
        #[command(flatten)]
        args: OracleArgs,
    },
    /// Moments and densities of the limiting laws.
    Law {
        #[arg(value_enum)]
        action: LawAction,
        #[command(flatten)]
        args: LawArgs,
    },
    /// Classical and free cumulants.
    Cum {
        #[arg(value_enum)]
        action: CumAction,
        #[command(flatten)]
        args: CumArgs,
    },
    /// Jones polynomial of a braid closure.
    ///
    /// Letter `i` is the crossing g_i and `-i` its inverse. With this
    /// chirality the closure of "1 1 1" on two strands has
    /// V = q + q^3 - q^4; the mirror braid "-1 -1 -1" gives q ↦ 1/q.
    Jones(JonesArgs),
    /// Run the acceptance criteria.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Reference tables of exact values.
    Tables {
        #[arg(long, value_enum)]
        name: TableName,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum PartitionsAction {
    List,
    Count,
}

#[derive(Args, Debug)]
pub struct PartitionsArgs {
    /// Number of points; implied by --colors when omitted.
    #[arg(long)]
    pub points: Option<usize>,
    /// Colors of the points, `o` white and `b` black.
    #[arg(long)]
    pub colors: Option<String>,
    /// Category, e.g. p, p_even, p2, p12, nc, nc2, nc_even, nc12, cp2, p_s:3.
    #[arg(long)]
    pub class: String,
    /// Keep only partitions with this many blocks.
    #[arg(long)]
    pub blocks: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum GramAction {
    Matrix,
    Det,
    Rank,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Formula {
    Direct,
    Lindstrom,
    YoungOn,
    YoungBn,
    Difrancesco,
}

#[derive(Args, Debug)]
pub struct GramArgs {
    /// Category, e.g. p, p_even, p2, nc, nc2, cp2, p_s:3
    #[arg(long)]
    pub category: String,
    /// Points per row of the index set.
    #[arg(long)]
    pub k: usize,
    /// Colors of the points, `o` white and `b` black; the length must equal k.
    #[arg(long)]
    pub colors: Option<String>,
    /// Dimension N.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, value_enum, default_value = "direct")]
    pub formula: Formula,
    /// Work with polynomials in N.
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Subcommand, Debug)]
pub enum WgAction {
    /// The Weingarten matrix, a pseudo-inverse when the Gram matrix is singular.
    Matrix {
        #[arg(long)]
        category: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        n: u64,
    },
    /// Integral of u_{i1 j1}^{e1} … u_{ik jk}^{ek}, indices 1-based.
    Integrate {
        #[arg(long)]
        category: String,
        #[arg(long)]
        n: u64,
        /// Exponent word: `1`/`o` for u, `*`/`b` for its conjugate.
        #[arg(long)]
        exponents: String,
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
    },
    /// Moment of the truncated character u_11 + … + u_ss.
    CharMoment {
        #[arg(long)]
        category: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        s: u64,
        /// Also report the limit sum over partitions weighted by t^|π|.
        #[arg(long, requires = "t")]
        asymptotic: bool,
        #[arg(long)]
        t: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum OracleAction {
    Elements,
    Law,
    TruncLaw,
    Integrate,
    Fixdim,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum GroupName {
    Zn,
    Dn,
    Sn,
    An,
    Hn,
    Hns,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub group: GroupName,
    #[arg(long)]
    pub n: usize,
    /// Root-of-unity order for hns; the truncation level for trunc-law.
    #[arg(long)]
    pub s: Option<u32>,
    /// Exponent word for integrate, `1` for u and `*` for its conjugate.
    #[arg(long)]
    pub exponents: Option<String>,
    /// Row indices, 1-based and comma-separated.
    #[arg(long)]
    pub rows: Option<String>,
    #[arg(long)]
    pub cols: Option<String>,
    /// Word for fixdim; `--k K` is shorthand for K white points.
    #[arg(long)]
    pub colors: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum LawAction {
    Moments,
    Density,
    Invert,
}

#[derive(Args, Debug)]
pub struct LawArgs {
    /// poisson, bessel-real, bessel, gaussian, complex-gaussian, semicircle,
    /// circular, mp, free-bessel, dirac, arcsine, modified-arcsine.
    #[arg(long)]
    pub law: String,
    /// Parameter t (the location c for dirac).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub t: String,
    /// Root-of-unity order for the Bessel laws.
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub order: Option<usize>,
    /// Abscissae as A:B:STEP.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Distance above the real axis for inversion.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum CumAction {
    Classical,
    Free,
    Bp,
    Rseries,
}

#[derive(Args, Debug)]
pub struct CumArgs {
    /// Comma-separated M_1, M_2, … as integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub moments: String,
    #[arg(long)]
    pub order: Option<usize>,
    /// Treat the input as cumulants and return moments.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct JonesArgs {
    #[arg(long)]
    pub strands: usize,
    /// Letters separated by spaces, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    /// Report only the Kauffman bracket in A.
    #[arg(long)]
    pub bracket_only: bool,
    /// Number of random Markov move sequences to apply.
    #[arg(long)]
    pub check_markov: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Suite {
    All,
    Gram,
    Weingarten,
    Oracle,
    Laws,
    Cumulants,
    Jones,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum TableName {
    Determinants,
    Characters,
    Cumulants,
    Jones,
}

fn configure_threads() {
    if let Some(n) = std::env::var("EASYGRAM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    let ctx = Ctx { format: cli.format, float: cli.float };
    match commands::run(&ctx, cli.command) {
        Ok(outcome) => {
            let bytes = match outcome.doc.render(ctx.format) {
                Ok(b) => b,
                Err(e) => {
                    println!("{}", error_json("output", &e));
                    return ExitCode::from(1);
                }
            };
            if let Err(e) = emit(&bytes, cli.out.as_deref()) {
                println!("{}", error_json("output", &e.to_string()));
                return ExitCode::from(1);
            }
            ExitCode::from(if outcome.verified { 0 } else { 2 })
        }
        Err(e) => {
            println!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(1)
        }
    }
}
