//! `ampleness`: ampleness verdicts for general stable bundles on P2 and the
//! Hirzebruch surfaces.
//!
//! Exit status: 0 when a report completes, 2 on malformed input (including
//! non-integral characters), 3 when a requested computation's hypotheses
//! fail, 1 on internal errors.

use std::process::ExitCode;

use ampleness_core::ampleness::{scan_bad_curves, AsymptoticMode};
use ampleness_core::report::{
    render_ample_gg, render_asymptotic, render_bad_curves, render_gg, render_invariants,
    render_obstructions, render_text, run_report, to_json, Envelope, Invariants, ReportOptions,
};
use ampleness_core::{
    ample_gg_verdict, asymptotic_ample_certificate, classify_global_generation, gieseker_character,
    necessary_obstructions, ChernCharacter, Error, Surface,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "ampleness", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, c2, logarithmic invariants, Euler characteristic.
    Invariants(Input),
    /// Necessary numerical conditions for a stable ample bundle.
    Obstructions(Input),
    /// Global generation of the general prioritary bundle.
    Gg(Input),
    /// Ampleness of the general globally generated bundle.
    AmpleGg(Input),
    /// Multiplier n with the general bundle of character n·v ample.
    Asymptotic {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        asym: AsymptoticArgs,
    },
    /// Irreducible curve classes D with chi(v(K + D)) < 0.
    BadCurves(Input),
    /// Full report for Gieseker's character (2, (2d-4)H, 2-d^2) in direct mode.
    Gieseker {
        #[arg(long)]
        d: i128,
        #[arg(long, default_value_t = 2)]
        s: i128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every section.
    Report {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        asym: AsymptoticArgs,
    },
}

#[derive(Args)]
struct Input {
    /// `P2` or `F<e>`.
    #[arg(long)]
    surface: String,
    /// Character `r:c1:ch2`, c1 written `a` (plane) or `a,b` (aE + bF).
    #[arg(long, conflicts_with = "log", required_unless_present = "log")]
    ch: Option<String>,
    /// Character by logarithmic invariants `r:nu:delta`.
    #[arg(long)]
    log: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct AsymptoticArgs {
    /// Rank of the kernel in the construction.
    #[arg(long, default_value_t = 2)]
    s: i128,
    /// Skip the normalizing twist.
    #[arg(long)]
    direct: bool,
}

impl AsymptoticArgs {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            s: self.s,
            mode: if self.direct {
                AsymptoticMode::Direct
            } else {
                AsymptoticMode::Normalized
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Input {
    fn character(&self) -> Result<ChernCharacter, Error> {
        let surface: Surface = self.surface.parse()?;
        match (&self.ch, &self.log) {
            (Some(ch), _) => ChernCharacter::parse(surface, ch),
            (None, Some(log)) => ChernCharacter::parse_log(surface, log),
            (None, None) => Err(Error::Parse("one of --ch or --log is required".into())),
        }
    }
}

fn emit<T: Serialize>(
    format: Format,
    command: &str,
    v: &ChernCharacter,
    value: T,
    text: impl FnOnce(&T) -> String,
) {
    match format {
        Format::Text => print!("{}", text(&value)),
        Format::Json => println!("{}", to_json(&Envelope::new(command, v, value))),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Invariants(input) => {
            let v = input.character()?;
            emit(input.format, "invariants", &v, Invariants::of(&v), |inv| {
                render_invariants(&v, inv)
            });
        }
        Command::Obstructions(input) => {
            let v = input.character()?;
            let o = necessary_obstructions(&v);
            emit(input.format, "obstructions", &v, o, render_obstructions);
        }
        Command::Gg(input) => {
            let v = input.character()?;
            let gg = classify_global_generation(&v)?;
            emit(input.format, "gg", &v, gg, render_gg);
        }
        Command::AmpleGg(input) => {
            let v = input.character()?;
            let cert = ample_gg_verdict(&v);
            emit(input.format, "ample-gg", &v, cert, render_ample_gg);
        }
        Command::Asymptotic { input, asym } => {
            let v = input.character()?;
            let opts = asym.options();
            let cert = asymptotic_ample_certificate(&v, opts.s, opts.mode)?;
            emit(input.format, "asymptotic", &v, cert, render_asymptotic);
        }
        Command::BadCurves(input) => {
            let v = input.character()?;
            let scan = scan_bad_curves(&v)?;
            emit(input.format, "bad-curves", &v, scan, render_bad_curves);
        }
        Command::Gieseker { d, s, format } => {
            let v = gieseker_character(d)?;
            let opts = ReportOptions {
                s,
                mode: AsymptoticMode::Direct,
            };
            print_report(&v, opts, format);
        }
        Command::Report { input, asym } => {
            let v = input.character()?;
            print_report(&v, asym.options(), input.format);
        }
    }
    Ok(())
}

fn print_report(v: &ChernCharacter, opts: ReportOptions, format: Format) {
    let report = run_report(v, opts);
    match format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Json => println!("{}", to_json(&report)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                ref e if e.is_input_error() => 2,
                Error::Precondition(_) | Error::ScanLimit { .. } => 3,
                _ => 1,
            })
        }
    }
}
