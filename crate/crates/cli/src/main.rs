use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ffbinom::oracle::{run_sweep, sweep_instances};
use ffbinom::{Error, Field, FieldElement, Poly};
use ffbinom_cli::report::{
    analyze_report, cross_check_csv_row, render_mersenne, Format, MersenneRow, NormalizedInput,
};
use ffbinom_cli::table;

/// Irreducibility and stability of binomials x^d - a over finite fields.
#[derive(Parser)]
#[command(name = "binomials", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one binomial: orbit, verdict, first reducible iterate.
    ///
    /// Takes key=value arguments: a field (q=9, or p=3 e=2 mod=2,2,1),
    /// the degree d=2, and either a=... or the non-monic pair b=... c=...
    /// Exit code: 0 stable, 1 reducible, 2 bad input.
    Analyze(AnalyzeArgs),
    /// Regenerate the table of stable binomials.
    Table(TableArgs),
    /// Scan F_{2^m}: x^(q-1) - a against the primality of 2^m - 1.
    Mersenne(MersenneArgs),
    /// Cross-validate orbit verdicts against the factoring oracle.
    /// Nonzero exit on any disagreement.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// key=value pairs: q= or p=/e=/mod=, then d=, and a= or b=/c=
    #[arg(required = true)]
    spec: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Search for an explicit root witnessing the failure.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 3)]
    q_min: u64,
    #[arg(long, default_value_t = 27)]
    q_max: u64,
    #[arg(long, default_value_t = 2)]
    d_min: u64,
    #[arg(long, default_value_t = 10)]
    d_max: u64,
    /// Override the modulus (only meaningful for a single extension field).
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// List cells whose printed tag disagrees with recomputation.
    #[arg(long)]
    diff_paper_table: bool,
}

#[derive(Args)]
struct MersenneArgs {
    #[arg(long, default_value_t = 2)]
    m_min: u32,
    #[arg(long, default_value_t = 11)]
    m_max: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    q_min: u64,
    #[arg(long, default_value_t = 27)]
    q_max: u64,
    #[arg(long, default_value_t = 2)]
    d_min: u64,
    #[arg(long, default_value_t = 10)]
    d_max: u64,
    /// Largest iterate degree the oracle factors.
    #[arg(long, default_value_t = 4096)]
    degree_cap: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Table(args) => cmd_table(args),
        Command::Mersenne(args) => cmd_mersenne(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parsed key=value pairs for `analyze`.
struct AnalyzeSpec {
    field: Field,
    d: u64,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
}

fn parse_analyze_spec(tokens: &[String]) -> Result<AnalyzeSpec, Error> {
    let mut q = None;
    let mut p = None;
    let mut e = 1u32;
    let mut modulus: Option<Vec<u64>> = None;
    let mut d = None;
    let (mut a, mut b, mut c) = (None, None, None);
    for tok in tokens {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
        match key {
            "q" => match value.split_once('^') {
                Some((base, exp)) => {
                    p = Some(parse_u64(base)?);
                    e = parse_u64(exp)? as u32;
                }
                None => q = Some(parse_u64(value)?),
            },
            "p" => p = Some(parse_u64(value)?),
            "e" => e = parse_u64(value)? as u32,
            "mod" => {
                let coeffs: Result<Vec<u64>, Error> =
                    value.split(',').map(parse_u64).collect();
                modulus = Some(coeffs?);
            }
            "d" => d = Some(parse_u64(value)?),
            "a" => a = Some(value.to_string()),
            "b" => b = Some(value.to_string()),
            "c" => c = Some(value.to_string()),
            other => return Err(Error::Parse(format!("unknown key {other:?}"))),
        }
    }
    let field = match (q, p) {
        (Some(q), None) => Field::of_order(q)?,
        (None, Some(p)) => match modulus {
            Some(m) => Field::with_modulus(p, e, &m)?,
            None => Field::new(p, e)?,
        },
        _ => return Err(Error::Parse("give exactly one of q= or p=".into())),
    };
    let d = d.ok_or_else(|| Error::Parse("missing d=".into()))?;
    Ok(AnalyzeSpec { field, d, a, b, c })
}

fn parse_u64(s: &str) -> Result<u64, Error> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, Error> {
    let spec = parse_analyze_spec(&args.spec)?;
    let field = &spec.field;
    let (a, normalized): (FieldElement, Option<NormalizedInput>) = match (&spec.a, &spec.b) {
        (Some(a), None) => (field.parse_element(a)?, None),
        (None, Some(b)) => {
            let c = spec
                .c
                .as_deref()
                .ok_or_else(|| Error::Parse("non-monic form needs both b= and c=".into()))?;
            let b = field.parse_element(b)?;
            let c = field.parse_element(c)?;
            match ffbinom::normalize_nonmonic(&b, &c, spec.d)? {
                Some((lambda, a)) => {
                    let info = NormalizedInput {
                        b: b.to_string(),
                        c: c.to_string(),
                        lambda: lambda.to_string(),
                    };
                    (a, Some(info))
                }
                None => {
                    return Err(Error::Parse(format!(
                        "no lambda with lambda^{} = {b}: cannot conjugate to monic form",
                        spec.d - 1
                    )))
                }
            }
        }
        _ => return Err(Error::Parse("give a=..., or b=... with c=...".into())),
    };
    let report = analyze_report(&a, spec.d, normalized, args.witness)?;
    print!("{}", report.render(args.format));
    Ok(if report.stable { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    let blocks = match &args.modulus {
        None => table::build_table(args.q_min, args.q_max, args.d_min, args.d_max)?,
        Some(modulus) => {
            // an explicit modulus pins down a single field: q_min = q_max
            if args.q_min != args.q_max {
                return Err(Error::Parse(
                    "--modulus needs a single field (set q_min = q_max)".into(),
                ));
            }
            let (p, e) = ffbinom::arith::split_prime_power(args.q_min)
                .ok_or_else(|| Error::Parse(format!("{} is not a prime power", args.q_min)))?;
            let base = Field::new(p, 1)?;
            let m = Poly::parse(&base, modulus)?;
            let codes: Vec<u64> = (0..=m.degree().unwrap_or(0)).map(|i| m.coeff(i).code()).collect();
            let field = Field::with_modulus(p, e, &codes)?;
            let mut blocks = Vec::new();
            for d in table::table_degrees(field.q(), args.d_min, args.d_max) {
                blocks.push(table::build_block(&field, d)?);
            }
            blocks
        }
    };
    if args.diff_paper_table {
        let diffs = table::diff_published(&blocks);
        if diffs.is_empty() {
            println!("no tag differences against the published table");
        } else {
            println!("{} cells with a different printed tag:", diffs.len());
            for d in &diffs {
                println!(
                    "  q={} d={} a={}: published {} recomputed {}",
                    d.q,
                    d.d,
                    d.a_label,
                    if d.published_stable { "s." } else { "ns." },
                    if d.computed_stable { "s." } else { "ns." },
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let out = match args.format {
        Format::Text => table::render_text(&blocks),
        Format::Csv => table::render_csv(&blocks),
        Format::Json => table::render_json(&blocks),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_mersenne(args: MersenneArgs) -> Result<ExitCode, Error> {
    let mut rows = Vec::new();
    for m in args.m_min..=args.m_max {
        rows.push(MersenneRow::from_report(&ffbinom::mersenne_report(m)?));
    }
    print!("{}", render_mersenne(&rows, args.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let instances = sweep_instances(args.q_min, args.q_max, args.d_min, args.d_max);
    let reports = run_sweep(&instances, args.degree_cap)?;
    let disagreements = reports.iter().filter(|r| !r.agree).count();
    match args.format {
        Format::Csv => {
            println!("q,modulus,d,a,analyzer_verdict,oracle_verdict,agree");
            for r in &reports {
                println!("{}", cross_check_csv_row(r));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "q": r.field.q(),
                        "d": r.d,
                        "a": r.a.to_string(),
                        "analyzer_verdict": ffbinom_cli::report::verdict_short(&r.analyzer),
                        "oracle_verdict": ffbinom_cli::report::oracle_short(r.oracle_first_reducible),
                        "max_iterate_checked": r.max_iterate_checked,
                        "agree": r.agree,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
        }
        Format::Text => {
            for r in reports.iter().filter(|r| !r.agree) {
                println!(
                    "DISAGREE q={} d={} a={}: analyzer {} vs oracle {}",
                    r.field.q(),
                    r.d,
                    r.a,
                    ffbinom_cli::report::verdict_short(&r.analyzer),
                    ffbinom_cli::report::oracle_short(r.oracle_first_reducible),
                );
            }
        }
    }
    let summary = format!(
        "checked {} instances (cap {}): {} agreements, {} disagreements",
        reports.len(),
        args.degree_cap,
        reports.len() - disagreements,
        disagreements
    );
    // keep machine-readable stdout clean in csv/json mode
    match args.format {
        Format::Text => println!("{summary}"),
        _ => eprintln!("{summary}"),
    }
    Ok(if disagreements == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
