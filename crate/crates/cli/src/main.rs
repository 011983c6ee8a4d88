//! Single-binary command surface: evaluate statistics, emit distribution
//! coefficients and gamma reports, run identity suites, print coefficient
//! tables, scan recurrence boundaries, and cross-check the catalogued
//! integer sequence.
//!
//! Exit codes: 0 on success or an all-pass verification, 1 when a
//! verification suite fails, 2 on usage or domain errors.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use widthk::{
    closed_flag, closed_inversion_b, closed_width_a, closed_width_b, closed_width_d, compare_eq5,
    distribution, emit, group_gamma, parse_suites, recurrence_scan, run_suite, stat, stat_union,
    EnumCaps, ExecMode, Group, OeisClient, SignedPermutation, StatKind, TableFormat,
};

const MODE: ExecMode = ExecMode::Parallel;

#[derive(Parser)]
#[command(
    name = "widthk",
    version,
    about = "Exact width-k descent and inversion statistics on S_n, B_n, and D_n"
)]
struct Cli {
    /// Bound the worker threads used by parallel enumeration.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive enumeration of the group.
    #[value(name = "enum")]
    Enumerate,
    /// Closed product formula.
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one width-k statistic on a signed permutation.
    Stat {
        /// One-line word, entries separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Statistic: desA, desB, fdesB, ndesB, desD, invA, neg, nsp, invB,
        /// ddesA, peak, lpeak, or lengthB.
        #[arg(long)]
        kind: String,
        /// Width (ignored when --K is given).
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Comma list of widths; reports the cardinality of the union of
        /// the defining sets over these widths.
        #[arg(long = "K", value_name = "LIST")]
        union_widths: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Coefficients of a width-k distribution over a whole group.
    Dist {
        /// Group: S, B, or D.
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Statistic kind; defaults to the group's descent statistic.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Gamma report (JSON) for a group's width-k descent polynomial.
    Gamma {
        /// Group: S, B, or D.
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Run named identity suites; exits 1 if any comparison fails.
    Verify {
        /// Suite token (eq1..thm29) or "all".
        #[arg(long)]
        suite: String,
        /// Largest rank to check.
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Emit one of the seven coefficient tables.
    Table {
        /// Table number, 1 through 7.
        #[arg(long)]
        id: u8,
        /// csv, json, or latex.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Fetch a catalogued sequence; for the inversion-pair triangle also
    /// report how its rows line up with the catalogued terms.
    Oeis {
        /// Sequence id, e.g. A162206.
        #[arg(long)]
        seq: String,
        /// Skip the network: use the local cache or the embedded fixture.
        #[arg(long)]
        offline: bool,
        /// Largest rank for the internal halving check.
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    /// Probe the two-term coefficient recurrence and report where it holds.
    Scan {
        /// Largest rank to probe.
        #[arg(long, default_value_t = 7)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
}

/// CLI statistic tokens name the width-parameterized kinds; width 1 gives
/// the classical statistic.
fn width_kind(token: &str) -> Result<StatKind> {
    Ok(match token {
        "desA" => StatKind::DesAK,
        "desB" => StatKind::DesBK,
        "fdesB" => StatKind::FdesBK,
        "ndesB" => StatKind::NdesBK,
        "desD" => StatKind::DesDK,
        "invA" => StatKind::InvAK,
        "neg" => StatKind::NegK,
        "nsp" => StatKind::NspK,
        "invB" => StatKind::InvBK,
        "ddesA" => StatKind::DdesAK,
        "peak" => StatKind::PeakK,
        "lpeak" => StatKind::LpeakAK,
        "lengthB" => StatKind::LengthBK,
        other => bail!(
            "unknown statistic kind {other:?}; expected one of desA, desB, fdesB, ndesB, \
             desD, invA, neg, nsp, invB, ddesA, peak, lpeak, lengthB"
        ),
    })
}

fn parse_width_list(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .with_context(|| format!("bad width {t:?} in --K"))
        })
        .collect()
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn run(cli: Cli) -> Result<i32> {
    let caps = EnumCaps::default();
    match cli.command {
        Command::Stat {
            perm,
            kind,
            k,
            union_widths,
            format,
        } => {
            let w: SignedPermutation = perm.parse()?;
            let kind = width_kind(&kind)?;
            match union_widths {
                Some(list) => {
                    let ks = parse_width_list(&list)?;
                    let value = stat_union(kind, &w, &ks)?.len();
                    match format {
                        Output::Text => println!("{value}"),
                        Output::Json => println!(
                            "{{\"kind\":{},\"K\":{:?},\"value\":{value}}}",
                            json_string(kind.token()),
                            ks
                        ),
                    }
                }
                None => {
                    let value = stat(kind, &w, k)?;
                    match format {
                        Output::Text => println!("{value}"),
                        Output::Json => println!(
                            "{{\"kind\":{},\"k\":{k},\"value\":{value}}}",
                            json_string(kind.token())
                        ),
                    }
                }
            }
            Ok(0)
        }
        Command::Dist {
            group,
            n,
            k,
            kind,
            method,
            format,
        } => {
            let group: Group = group.parse()?;
            let kind = match kind {
                Some(token) => width_kind(&token)?,
                None => match group {
                    Group::Symmetric => StatKind::DesAK,
                    Group::Hyperoctahedral => StatKind::DesBK,
                    Group::EvenSigned => StatKind::DesDK,
                },
            };
            let poly = match method {
                Method::Enumerate => distribution(kind, group, n as usize, k, &caps, MODE)?,
                Method::Closed => match (kind, group) {
                    (StatKind::DesAK, Group::Symmetric) => closed_width_a(n, k, &caps, MODE)?,
                    (StatKind::DesBK, Group::Hyperoctahedral) => {
                        closed_width_b(n, k, &caps, MODE)?
                    }
                    (StatKind::FdesBK, Group::Hyperoctahedral) => closed_flag(n, k, &caps, MODE)?,
                    (StatKind::InvBK, Group::Hyperoctahedral) => closed_inversion_b(n, k)?,
                    (StatKind::DesDK, Group::EvenSigned) => {
                        closed_width_d(n, k, &caps, MODE)?.poly
                    }
                    (kind, group) => bail!(
                        "no closed form for {kind} over {group}; use --method enum"
                    ),
                },
            };
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            match format {
                Output::Text => println!("{}", coeffs.join(" ")),
                Output::Json => println!(
                    "{{\"group\":{},\"n\":{n},\"k\":{k},\"kind\":{},\"coefficients\":[{}]}}",
                    json_string(group.symbol()),
                    json_string(kind.token()),
                    coeffs.join(",")
                ),
            }
            Ok(0)
        }
        Command::Gamma { group, n, k } => {
            let group: Group = group.parse()?;
            let report = group_gamma(group, n, k, &caps, MODE)?;
            println!("{}", report.to_json());
            Ok(0)
        }
        Command::Verify {
            suite,
            nmax,
            format,
        } => {
            let suites = parse_suites(&suite)?;
            let mut all_pass = true;
            let mut json_items = Vec::new();
            for id in suites {
                let outcome = run_suite(id, nmax, &caps, MODE)?;
                all_pass &= outcome.pass;
                match format {
                    Output::Text => println!("{}", outcome.render_line()),
                    Output::Json => json_items.push(format!(
                        "{{\"suite\":{},\"pass\":{},\"checked\":{},\"detail\":{},\
                         \"counterexample\":{}}}",
                        json_string(outcome.id.token()),
                        outcome.pass,
                        outcome.checked,
                        json_string(&outcome.detail),
                        outcome
                            .counterexample
                            .as_deref()
                            .map_or("null".to_string(), json_string)
                    )),
                }
            }
            if format == Output::Json {
                println!("[{}]", json_items.join(","));
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Table { id, format } => {
            if !(1..=7).contains(&id) {
                bail!("table id {id} is out of range; expected 1 through 7");
            }
            let format: TableFormat = format
                .parse()
                .map_err(|e| anyhow!("{e}"))?;
            print!("{}", emit(id, format, &caps, MODE)?);
            Ok(0)
        }
        Command::Oeis { seq, offline, nmax } => {
            let client = OeisClient::new(offline);
            if seq == "A162206" {
                let report = compare_eq5(&client, nmax, &caps, MODE)?;
                print!("{}", report.render_text());
            } else {
                let s = client.fetch(&seq)?;
                println!(
                    "{}: {} terms (source {})",
                    s.id,
                    s.terms.len(),
                    s.source.label()
                );
            }
            Ok(0)
        }
        Command::Scan { nmax, format } => {
            let entries = recurrence_scan(nmax, &caps, MODE)?;
            match format {
                Output::Text => {
                    for e in &entries {
                        println!(
                            "{} n={} k={}{} {}",
                            e.family,
                            e.n,
                            e.k,
                            if e.stated { " (stated)" } else { "" },
                            if e.holds { "holds" } else { "fails" }
                        );
                    }
                }
                Output::Json => {
                    let items: Vec<String> = entries
                        .iter()
                        .map(|e| {
                            format!(
                                "{{\"family\":{},\"n\":{},\"k\":{},\"stated\":{},\"holds\":{}}}",
                                json_string(&e.family.to_string()),
                                e.n,
                                e.k,
                                e.stated,
                                e.holds
                            )
                        })
                        .collect();
                    println!("[{}]", items.join(","));
                }
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // A bound of 0 lets the pool pick the core count.
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: could not configure {jobs} worker threads: {e}");
            std::process::exit(2);
        }
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
