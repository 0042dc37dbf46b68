use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hurwitz::induce::InducedQuery;
use hurwitz::record::{self, full_context, OutputRecord};
use hurwitz::rrmod::Divisor;
use hurwitz::{verify, ContextOptions, Error, HurwitzContext};

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact G-module structure of Riemann-Roch spaces on PSL(2, q) Hurwitz curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(clap::Args)]
#[command(allow_negative_numbers = true)]
struct DivisorArgs {
    r1: i64,
    r2: i64,
    r3: i64,
    r7: i64,
}

impl DivisorArgs {
    fn divisor(&self) -> Divisor {
        Divisor::new(self.r1, self.r2, self.r3, self.r7)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Admissibility of q, with group order, genus and residues.
    Classify { q: u64 },
    /// L(D) for D = r1 D1 + r2 D2 + r3 D3 + r7 D7.
    #[command(allow_negative_numbers = true)]
    Ld {
        q: u64,
        #[command(flatten)]
        divisor: DivisorArgs,
        /// Use the invariant-dimension formula (r7 mod 7 in {0, 3, 6}).
        #[arg(long)]
        fast: bool,
        /// Skip the positive-degree guard; the result is then only the Euler characteristic.
        #[arg(long = "unsafe")]
        unsafe_degree: bool,
    },
    /// L(K) for the canonical divisor, with H^1 = 2 L(K).
    Canonical { q: u64 },
    /// The ramification module and its parts from H_2, H_3, H_7.
    Gamma { q: u64 },
    /// Equivariant degree of an invariant divisor (any signs).
    #[command(allow_negative_numbers = true)]
    Degeq {
        q: u64,
        #[command(flatten)]
        divisor: DivisorArgs,
    },
    /// The character table over exact cyclotomic numbers.
    Chartable {
        q: u64,
        /// For q = p^3, define the Gauss periods through the trace to GF(p).
        #[arg(long)]
        trace_periods: bool,
    },
    /// Ind from H_l of theta_l^k.
    Induced {
        q: u64,
        l: u64,
        k: u64,
        /// Also run the reciprocity oracle and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Run every verification suite for q.
    Verify {
        q: u64,
        /// Also enumerate the group (subject to the enumeration cap).
        #[arg(long)]
        deep: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inadmissible { .. } => 2,
        Error::NonPositiveDegree { .. } | Error::DivisorOutOfDomain(_) => 3,
        Error::InvalidSubgroupOrder(_) | Error::InvalidCharacterIndex { .. } => 3,
        _ => 4,
    }
}

fn run(cmd: &Command) -> Result<OutputRecord, Error> {
    match *cmd {
        Command::Classify { q } => Ok(record::classify_record(q)),
        Command::Ld {
            q,
            ref divisor,
            fast,
            unsafe_degree,
        } => record::ld_record(
            &HurwitzContext::new(q)?,
            divisor.divisor(),
            fast,
            unsafe_degree,
        ),
        Command::Canonical { q } => record::canonical_record(&HurwitzContext::new(q)?),
        Command::Gamma { q } => record::gamma_record(&HurwitzContext::new(q)?),
        Command::Degeq { q, ref divisor } => {
            record::degeq_record(&HurwitzContext::new(q)?, divisor.divisor())
        }
        Command::Chartable { q, trace_periods } => {
            let opts = ContextOptions {
                trace_gauss_periods: trace_periods,
                ..Default::default()
            };
            record::chartable_record(&HurwitzContext::with_options(q, opts)?)
        }
        Command::Induced { q, l, k, oracle } => {
            record::induced_record(&full_context(q)?, InducedQuery::new(l, k)?, oracle)
        }
        Command::Verify { q, deep } => verify::verify(q, deep),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(rec) => {
            let text = match cli.format {
                Format::Json => rec.to_json() + "\n",
                Format::Table => rec.to_table(),
            };
            // a closed pipe is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if !rec.admissible {
                ExitCode::from(2)
            } else if !rec.passed() {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::GaussPeriodsUnavailable(_)) {
                eprintln!("hint: pass --trace-periods");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
