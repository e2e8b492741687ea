//! `cherncalc`: machine-readable reports over the exact characteristic-class
//! calculus. Every value is computed in exact arithmetic and serialized as a
//! string ("p" or "p/q"); output is deterministic byte-for-byte for a fixed
//! seed. Exit codes: 0 all checks pass, 1 mismatch, 2 usage error, 3
//! enumeration infeasible under the cap.

mod commands;
mod examples;
mod report;

use clap::{ArgAction, Parser, Subcommand};
use serde_json::json;

use cherncalc::plethysm::DEFAULT_CAP;
use cherncalc::Error;

use commands::Check;
use report::emit_value;

#[derive(Parser)]
#[command(
    name = "cherncalc",
    version,
    about = "Exact characteristic-class reports: examples, positivity, plethysm"
)]
struct Cli {
    /// Emit JSON records (pass --json=false for plain text).
    #[arg(
        long,
        global = true,
        default_value_t = true,
        action = ArgAction::Set,
        num_args = 0..=1,
        default_missing_value = "true"
    )]
    json: bool,

    /// Seed for the randomized suites; fixed seed means identical output.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Cap on the tableau enumeration size.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    /// Verify asymptotic vanishing symbolically over a formal surface
    /// (coefficient classes vanish identically) instead of integrating.
    #[arg(long, global = true)]
    symbolic: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reproduce a named example and compare against its expected values.
    ///
    /// Names: notnef, tangent-pn, syzygy, hilb2p2, product-slope,
    /// hodge-identity.
    Example { name: String },

    /// Build the tableau sum W(r, a) and run its checks.
    Plethysm {
        /// Rank of the underlying space (r >= 2).
        #[arg(long)]
        r: usize,
        /// Half the number of columns (a >= 1).
        #[arg(long)]
        a: usize,
        /// Which checks to run.
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },

    /// Restrict a named example to a line; print the splitting type and
    /// positivity verdicts. Names: notnef, hilb2p2, tangent-pn.
    Restrict {
        name: String,
        /// Ambient projective dimension (tangent-pn only; default 3).
        #[arg(long)]
        n: Option<usize>,
    },

    /// Euler characteristic of a bundle expression on P^n.
    ///
    /// Expressions: O(d), T, triv(r), syz(d1,...), dual(e), det(e), end(e),
    /// sym(m,e), wedge(k,e), twist(e,d), tensor(e1,e2), dsum(e1,e2),
    /// frob(e,p,m).
    Chi {
        /// Projective dimension of the ambient space.
        #[arg(long)]
        n: usize,
        /// Bundle expression.
        #[arg(long)]
        bundle: String,
    },

    /// Hilbert polynomial chi(E(m)) of a bundle expression on P^n.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bundle: String,
    },

    /// Check that the m^{r+1} and m^r coefficients of the projective-bundle
    /// characteristic vanish for a Chern-trivial bundle of the given rank.
    AsymptoticCheck {
        /// Rank of the Chern-trivial bundle.
        #[arg(long)]
        rank: usize,
        /// Degree of the polarizing twist L.
        #[arg(long, default_value_t = 1)]
        l: i64,
    },

    /// Run every example and invariant suite; one record per line.
    Suite,
}

fn main() {
    let cli = Cli::parse();
    let as_json = cli.json;
    let outcome = match cli.cmd {
        Cmd::Example { ref name } => examples::run(name).map(|rep| {
            rep.emit(as_json);
            rep.pass()
        }),
        Cmd::Plethysm { r, a, check } => {
            commands::cmd_plethysm(r, a, check, cli.seed, cli.cap).map(|(record, pass)| {
                emit_value(&record, as_json);
                pass
            })
        }
        Cmd::Restrict { ref name, n } => commands::cmd_restrict(name, n).map(|(record, pass)| {
            emit_value(&record, as_json);
            pass
        }),
        Cmd::Chi { n, ref bundle } => commands::cmd_chi(n, bundle).map(|(record, pass)| {
            emit_value(&record, as_json);
            pass
        }),
        Cmd::Hilbert { n, ref bundle } => commands::cmd_hilbert(n, bundle).map(|(record, pass)| {
            emit_value(&record, as_json);
            pass
        }),
        Cmd::AsymptoticCheck { rank, l } => {
            commands::cmd_asymptotic(rank, l, cli.symbolic).map(|(record, pass)| {
                emit_value(&record, as_json);
                pass
            })
        }
        Cmd::Suite => commands::cmd_suite(cli.seed, cli.cap, cli.symbolic, as_json),
    };
    let code = match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Error::EnumerationTooLarge { count, cap }) => {
            emit_value(
                &json!({
                    "error": "enumeration too large",
                    "count": count.to_string(),
                    "cap": cap,
                }),
                as_json,
            );
            eprintln!("error: enumeration of {count} tableaux exceeds the cap {cap}");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
