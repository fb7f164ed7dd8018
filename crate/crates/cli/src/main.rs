use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cremona_cli::commands::{self, FamilyArgs};

/// Degree growth, characteristic matrices and realization checks for plane
/// birational maps.
///
/// Set CREMONA_LAB_PRECISION to change the working precision (bits) of
/// ball arithmetic.
#[derive(Parser)]
#[command(name = "cremona-lab", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Degree sequence, growth class, stability and exceptional data of a family member.
    Analyze {
        /// sigma, rho, tau, bk_fab, bk_fab3, bk_k, bk_rot, mcmullen, dg_phi,
        /// dg_phi_alpha_phi, dg_conic, henon, f_m, lin_family, or map (with --map)
        family: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 12)]
        iters: usize,
        /// Stop iterating once the degree exceeds this.
        #[arg(long, default_value_t = cremona_projmap::DEFAULT_BUDGET)]
        budget: usize,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the verification suite.
    VerifyCatalog {
        /// Glob over check ids, e.g. 'weyl.*'.
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = cremona_cli::suite::default_threads())]
        threads: usize,
    },
    /// Sample the Ω₁/Ω₂ projections of an orbit of f_{α,β} to CSV.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Affine starting point "x,y".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(short = 'N', long = "count")]
        count: usize,
        /// CSV destination (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify an integer polynomial (Salem, cyclotomic, ...).
    Salem {
        /// "t^4 - t^3 - t^2 - t + 1" or coefficients from degree 0: "1,-1,-1,-1,1".
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Coxeter-element data for W_n.
    Weyl { n: usize },
}

#[derive(Args)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Hénon polynomial coefficients from degree 0, e.g. "0,0,1".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// bk_k coefficients as j=value pairs.
    #[arg(long)]
    terms: Option<String>,
    /// f_m exponents m00,m01,m10,m11.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    /// Map literal such as "(yz:xz:xy)".
    #[arg(long)]
    map: Option<String>,
}

impl From<Params> for FamilyArgs {
    fn from(p: Params) -> Self {
        FamilyArgs {
            a: p.a,
            b: p.b,
            c: p.c,
            n: p.n,
            k: p.k,
            alpha: p.alpha,
            beta: p.beta,
            delta: p.delta,
            poly: p.poly,
            terms: p.terms,
            m: p.m,
            map: p.map,
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`| head`) instead of panicking in print!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Analyze {
            family,
            params,
            iters,
            budget,
            json,
        } => commands::analyze(&family, &params.into(), iters, budget, json.as_deref()),
        Cmd::VerifyCatalog {
            filter,
            json,
            threads,
        } => commands::verify_catalog(&filter, json.as_deref(), threads),
        Cmd::Orbit {
            alpha,
            beta,
            point,
            count,
            out,
        } => commands::orbit(&alpha, &beta, &point, count, out.as_deref()),
        Cmd::Salem { poly } => commands::salem(&poly),
        Cmd::Weyl { n } => commands::weyl(n),
    };
    match r {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
