//! Command-line front end for the partial-spread bound engine.
//!
//! Subcommands: `bound` (single-instance query), `table` (grid of
//! instances), `exclude` (hole-type feasibility), `oracle` (exact search
//! with cross-checks). Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 invalid instance or failed cross-check, 2 flag
//! errors, 3 oracle capacity exceeded.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use output::{bound_text, csv_row, methods_text, MethodRecord, OutputRecord, CSV_HEADER};
use qspread::bounds::{all_method_bounds, best_bounds_for, decompose};
use qspread::oracle::{cross_check, SearchBudget, SearchMode};
use qspread::vsp::{exclude_hole_type, ExclusionStatus, HoleType};
use qspread::{Error, Natural};

#[derive(Parser)]
#[command(
    name = "qspread",
    version,
    about = "Exact bounds, certificates, and exhaustive search for partial t-spreads in F_q^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse::<Natural>().map_err(|e| e.to_string())
}

/// Inclusive range written `lo..hi` (or a single value).
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start in '{s}'"))?;
        let hi: u32 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end in '{s}'"))?;
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        Ok((lo, hi))
    } else {
        let v: u32 = s.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
        Ok((v, v))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Best lower and upper bounds for one instance
    Bound {
        /// Field order (prime power, 2..=9)
        #[arg(long)]
        q: u32,
        /// Ambient dimension
        #[arg(long)]
        n: u32,
        /// Spread dimension
        #[arg(long)]
        t: u32,
        /// Emit a JSON object instead of text
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit a CSV row (with header) instead of text
        #[arg(long)]
        csv: bool,
        /// Also list every bound method with parameters and certificates
        #[arg(long = "all-methods")]
        all_methods: bool,
    },
    /// Bound table over a (q, t, k, r) grid
    Table {
        /// Comma-separated field orders, e.g. 2,3,9
        #[arg(long = "q-list", value_delimiter = ',', required = true)]
        q_list: Vec<u32>,
        /// Inclusive t range, e.g. 3..6
        #[arg(long = "t-range", value_parser = parse_range)]
        t_range: (u32, u32),
        /// Inclusive k range, e.g. 2..3
        #[arg(long = "k-range", value_parser = parse_range)]
        k_range: (u32, u32),
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Hole-type feasibility via the quadratic hyperplane test
    Exclude {
        #[arg(long)]
        q: u32,
        /// Ambient dimension
        #[arg(long)]
        n: u32,
        /// Maximum member dimension of the hole-type
        #[arg(long)]
        t: u32,
        /// Minimum non-hole dimension of the hole-type
        #[arg(long)]
        s: u32,
        /// Hole count (decimal, arbitrary size)
        #[arg(long, value_parser = parse_natural)]
        c: Natural,
        #[arg(long)]
        json: bool,
    },
    /// Exact maximum partial-spread search with cross-checks
    Oracle {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        /// Wall-clock budget for the search
        #[arg(long = "budget-seconds", default_value_t = 60)]
        budget_seconds: u64,
        /// Write the witness spread to this file (text format)
        #[arg(long = "emit-witness")]
        emit_witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Capacity { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Bound {
            q,
            n,
            t,
            json,
            csv,
            all_methods,
        } => cmd_bound(q, n, t, json, csv, all_methods),
        Command::Table {
            q_list,
            t_range,
            k_range,
            format,
        } => cmd_table(&q_list, t_range, k_range, format),
        Command::Exclude {
            q,
            n,
            t,
            s,
            c,
            json,
        } => cmd_exclude(q, n, t, s, c, json),
        Command::Oracle {
            q,
            n,
            t,
            budget_seconds,
            emit_witness,
            json,
        } => cmd_oracle(q, n, t, budget_seconds, emit_witness, json),
    }
}

fn cmd_bound(
    q: u32,
    n: u32,
    t: u32,
    json: bool,
    csv: bool,
    all_methods: bool,
) -> Result<(), Error> {
    let inst = decompose(q, n, t)?;
    let bb = best_bounds_for(&inst);
    let record = OutputRecord::from_best(&bb);
    let methods: Option<Vec<MethodRecord>> = all_methods.then(|| {
        all_method_bounds(&inst)
            .iter()
            .map(MethodRecord::from_bound)
            .collect()
    });

    if json {
        let mut value = serde_json::to_value(&record).expect("record serializes");
        if let Some(methods) = &methods {
            value["methods"] = serde_json::to_value(methods).expect("methods serialize");
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("valid json")
        );
    } else if csv {
        println!("{CSV_HEADER}");
        println!("{}", csv_row(&record));
    } else {
        println!("{}", bound_text(&bb));
        if let Some(methods) = &methods {
            println!("{}", methods_text(methods));
        }
    }
    Ok(())
}

fn cmd_table(
    q_list: &[u32],
    (t_lo, t_hi): (u32, u32),
    (k_lo, k_hi): (u32, u32),
    format: TableFormat,
) -> Result<(), Error> {
    // Lexicographic (q, t, k, r) order; every instance validated up front.
    let mut records = Vec::new();
    for &q in q_list {
        for t in t_lo..=t_hi {
            for k in k_lo..=k_hi {
                for r in 0..t {
                    let inst = decompose(q, k * t + r, t)?;
                    records.push(OutputRecord::from_best(&best_bounds_for(&inst)));
                }
            }
        }
    }
    match format {
        TableFormat::Csv => {
            println!("{CSV_HEADER}");
            for rec in &records {
                println!("{}", csv_row(rec));
            }
        }
        TableFormat::Json => {
            println!("{}", serde_json::to_string(&records).expect("valid json"));
        }
        TableFormat::Text => {
            println!(
                " q   n  t  k  r  {:>12} {:>14} {:>14}  exact method",
                "l", "lower", "upper"
            );
            for rec in &records {
                println!(
                    "{:>2} {:>3} {:>2} {:>2} {:>2}  {:>12} {:>14} {:>14}  {:<5} {}{}",
                    rec.q,
                    rec.n,
                    rec.t,
                    rec.k,
                    rec.r,
                    rec.l,
                    rec.lower,
                    rec.upper,
                    rec.exact,
                    rec.upper_method,
                    output::render_params(&rec.params),
                );
            }
        }
    }
    Ok(())
}

fn cmd_exclude(q: u32, n: u32, t: u32, s: u32, c: Natural, json: bool) -> Result<(), Error> {
    let hole_type = HoleType::new(t, s, c.clone())?;
    let verdict = exclude_hole_type(q, n, &hole_type)?;
    if json {
        let value = match &verdict.status {
            ExclusionStatus::Excluded { witness_m, f_value } => json!({
                "q": q, "n": n, "t": t, "s": s, "c": c.to_string(),
                "status": "excluded",
                "witness_m": witness_m.to_string(),
                "f_value": f_value.to_string(),
                "trace": verdict.trace,
            }),
            ExclusionStatus::Undecided => json!({
                "q": q, "n": n, "t": t, "s": s, "c": c.to_string(),
                "status": "undecided",
                "trace": verdict.trace,
            }),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("valid json")
        );
    } else {
        match &verdict.status {
            ExclusionStatus::Excluded { witness_m, f_value } => println!(
                "hole-type (t={t}, s={s}, c={c}) in F_{q}^{n}: EXCLUDED (witness m = {witness_m}, F = {f_value})"
            ),
            ExclusionStatus::Undecided => println!(
                "hole-type (t={t}, s={s}, c={c}) in F_{q}^{n}: undecided"
            ),
        }
        for line in &verdict.trace {
            println!("  | {line}");
        }
    }
    Ok(())
}

fn cmd_oracle(
    q: u32,
    n: u32,
    t: u32,
    budget_seconds: u64,
    emit_witness: Option<PathBuf>,
    json: bool,
) -> Result<(), Error> {
    let budget = SearchBudget {
        max_seconds: Duration::from_secs(budget_seconds),
        mode: SearchMode::Exact,
        ..SearchBudget::default()
    };
    let report = cross_check(q, n, t, &budget)?;
    let witness_id = report.outcome.witness.witness_id();

    if let Some(path) = &emit_witness {
        std::fs::write(path, report.outcome.witness.to_text()).map_err(|e| {
            Error::InvalidSpread(format!("cannot write witness to {}: {e}", path.display()))
        })?;
    }

    if json {
        let value = json!({
            "q": q, "n": n, "t": t,
            "size": report.outcome.size.to_string(),
            "proven_optimal": report.outcome.proven_optimal,
            "nodes": report.outcome.nodes,
            "lower": report.bounds.lower.value.to_string(),
            "upper": report.bounds.upper.value.to_string(),
            "exact": report.bounds.exact,
            "cross_check": if report.passed() { "pass" } else { "fail" },
            "witness": witness_id,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("valid json")
        );
    } else {
        println!(
            "A_{q}({n}, {}; {t}) oracle: size {}{} ({} nodes)",
            2 * t,
            report.outcome.size,
            if report.outcome.proven_optimal {
                ", proven optimal"
            } else {
                ", budget exhausted"
            },
            report.outcome.nodes,
        );
        println!(
            "bounds: lower {}, upper {}{}",
            report.bounds.lower.value,
            report.bounds.upper.value,
            if report.bounds.exact { " (exact)" } else { "" },
        );
        println!(
            "cross-check: {} (within bounds: {}, excluded-family clear: {}, \
             standard equations: {}, hyperplane congruence: {})",
            if report.passed() { "PASS" } else { "FAIL" },
            report.within_bounds,
            report.excluded_family_clear,
            report.equations_ok,
            report.congruences_ok,
        );
        if let Some(path) = &emit_witness {
            println!("witness {witness_id} written to {}", path.display());
        }
    }
    if !report.passed() {
        return Err(Error::InvalidSpread(
            "cross-check failed: bounds/oracle disagreement".into(),
        ));
    }
    Ok(())
}
