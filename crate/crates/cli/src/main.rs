use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use milnor_core::lab::{
    analyze_curve, analyze_factored, check_lemma21_identity, check_lemma41, check_thm14,
    fuzz_campaign, gen_extremal, gen_irreducible_max, structural_lemma_checks, thm11_bound,
    FactoredCurve, FuzzConfig,
};
use milnor_core::{milnor_number, parse_poly, BiPoly, Error, ExtNat};
use serde::Serialize;

mod output;

use output::{render, Format};

#[derive(Parser)]
#[command(
    name = "milnor",
    version,
    about = "Exact local invariants of plane curve singularities at the origin"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, Milnor number, tangent count and bounds at the origin.
    Analyze {
        #[arg(long)]
        poly: String,
        /// Promise that the germ is unibranch (enables the am bound).
        #[arg(long)]
        assume_unibranch: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one checker on a curve or a list of its components.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        input: CurveInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a member of a curve family with its Milnor number.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the bounds and identities on seeded random factored curves.
    Fuzz {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_factors: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 9)]
        coeff_bound: i64,
        /// Compare the first k trials against the linear-algebra oracle.
        #[arg(long, default_value_t = 0)]
        oracle_subsample: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct CurveInput {
    /// The whole curve, treated as a single component.
    #[arg(long, conflicts_with = "factors")]
    poly: Option<String>,
    /// One component; repeat for each.
    #[arg(long = "factor")]
    factors: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    #[value(name = "thm1.1")]
    Thm11,
    #[value(name = "thm1.4")]
    Thm14,
    #[value(name = "lemma2.1")]
    Lemma21,
    #[value(name = "lemmas")]
    Lemmas,
    #[value(name = "lemma4.1")]
    Lemma41,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Thm11 => "thm1.1",
            Check::Thm14 => "thm1.4",
            Check::Lemma21 => "lemma2.1",
            Check::Lemmas => "lemmas",
            Check::Lemma41 => "lemma4.1",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Extremal,
    IrreducibleMax,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Cap(e.to_string())
        }
    }
}

/// Printed output plus the exit status it implies.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn new(text: String, holds: bool) -> Self {
        Report {
            text,
            code: if holds { 0 } else { 1 },
        }
    }
}

fn parse(flag: &str, s: &str) -> Result<BiPoly, Failure> {
    parse_poly(s).map_err(|e| Failure::Input(format!("{flag} \"{s}\": {e}")))
}

fn components(input: &CurveInput) -> Result<Vec<BiPoly>, Failure> {
    match &input.poly {
        Some(p) => Ok(vec![parse("--poly", p)?]),
        None if input.factors.is_empty() => Err(Failure::Input(
            "either --poly or at least one --factor is required".into(),
        )),
        None => input.factors.iter().map(|f| parse("--factor", f)).collect(),
    }
}

#[derive(Serialize)]
struct Verdict<T: Serialize> {
    check: &'static str,
    holds: bool,
    details: T,
}

fn verdict<T: Serialize>(check: Check, holds: bool, details: T, format: Format) -> Report {
    let v = Verdict {
        check: check.name(),
        holds,
        details,
    };
    Report::new(render(&v, format), holds)
}

fn analyze(poly: &str, assume_unibranch: bool, format: Format) -> Result<Report, Failure> {
    let f = parse("--poly", poly)?;
    let r = analyze_curve(&f, assume_unibranch)?;
    Ok(Report::new(render(&r, format), r.satisfied.all_hold()))
}

fn verify(check: Check, input: &CurveInput, format: Format) -> Result<Report, Failure> {
    let parts = components(input)?;
    if let Check::Lemma41 = check {
        let [cubic, conic] = parts.as_slice() else {
            return Err(Failure::Input(
                "lemma4.1 takes exactly two components: --factor <cubic> --factor <conic>".into(),
            ));
        };
        let c = check_lemma41(cubic, conic)?;
        return Ok(verdict(check, c.holds, c, format));
    }
    let curve = FactoredCurve::new(parts)?;
    Ok(match check {
        Check::Thm11 => {
            let r = analyze_factored(&curve, false)?;
            let holds = r.satisfied.thm11.unwrap_or(true);
            verdict(check, holds, r, format)
        }
        Check::Thm14 => {
            let c = check_thm14(&curve)?;
            verdict(check, c.passes(), c, format)
        }
        Check::Lemma21 => {
            let c = check_lemma21_identity(&curve)?;
            verdict(check, c.holds, c, format)
        }
        Check::Lemmas => {
            let r = structural_lemma_checks(&curve)?;
            verdict(check, r.all_hold(), r, format)
        }
        Check::Lemma41 => unreachable!("handled above"),
    })
}

#[derive(Serialize)]
struct Generated {
    family: &'static str,
    degree: u32,
    factors: Vec<String>,
    milnor: ExtNat,
    bound: u64,
}

fn generate(family: Family, degree: u32, format: Format) -> Result<Report, Failure> {
    let (name, factors, bound) = match family {
        Family::Extremal => {
            let c = gen_extremal(degree)?;
            ("extremal", c.factors().to_vec(), thm11_bound(degree))
        }
        Family::IrreducibleMax => {
            let f = gen_irreducible_max(degree)?;
            let d = u64::from(degree);
            ("irreducible-max", vec![f], (d - 1) * (d - 2))
        }
    };
    let product: BiPoly = factors.iter().product();
    let g = Generated {
        family: name,
        degree,
        factors: factors.iter().map(|f| f.to_string()).collect(),
        milnor: milnor_number(&product)?,
        bound,
    };
    let holds = g.milnor == ExtNat::Finite(bound);
    let text = match format {
        Format::Json => render(&g, format),
        Format::Text => {
            let mut s: String = g.factors.iter().map(|f| format!("{f}\n")).collect();
            s.push_str(&format!("milnor: {}\nbound: {}\n", g.milnor, g.bound));
            s
        }
    };
    Ok(Report::new(text, holds))
}

fn fuzz(cfg: FuzzConfig, format: Format) -> Result<Report, Failure> {
    let summary = fuzz_campaign(&cfg)?;
    let code = if !summary.is_clean() {
        1
    } else if summary.skips.oracle_cap > 0 {
        3
    } else {
        0
    };
    Ok(Report {
        text: render(&summary, format),
        code,
    })
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Analyze {
            poly,
            assume_unibranch,
            format,
        } => analyze(&poly, assume_unibranch, format),
        Command::Verify {
            check,
            input,
            format,
        } => verify(check, &input, format),
        Command::Generate {
            family,
            degree,
            format,
        } => generate(family, degree, format),
        Command::Fuzz {
            trials,
            seed,
            max_factors,
            max_degree,
            coeff_bound,
            oracle_subsample,
            format,
        } => fuzz(
            FuzzConfig {
                seed,
                trials,
                max_factors,
                max_degree,
                coeff_bound,
                oracle_subsample,
            },
            format,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(r.code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
