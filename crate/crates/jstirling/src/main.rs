//! Thin command-line front end; all computation lives in the library.

use clap::{Parser, Subcommand, ValueEnum};
use jstirling::diagonal::{descent_table_gf, descent_table_rec};
use jstirling::exactpoly::IntPoly;
use jstirling::jsnumbers::{build_triangle, Kind};
use jstirling::permutations::{a_table_enum, enumerate_jsp, DescentOrder};
use jstirling::posets::{a_s_at_one, build_p_legendre, build_r};
use jstirling::verify::{check_conjecture, run_suite, Suite, VerifyReport, CONJECTURE_K_DEFAULT};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "jstirling", version, about = "Jacobi-Stirling numbers, descent polynomials, posets and bijections, all in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Gf,
    Rec,
    Enum,
    Posets,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle of Jacobi-Stirling numbers as polynomials in z
    Jstab {
        #[arg(long, value_enum, default_value = "second")]
        kind: CliKind,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the output to this file
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the descent polynomials A_{k,i}(t)
    Akt {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "rec")]
        method: TableMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Inspect the poset R_{k,S} (or the Legendre poset P_k)
    Poset {
        #[arg(long)]
        k: usize,
        /// Comma-separated subset S of 1..=k, e.g. "1,3"
        #[arg(long, default_value = "")]
        subset: String,
        /// Use the Legendre-Stirling poset P_k instead of R_{k,S}
        #[arg(long, default_value_t = false)]
        legendre: bool,
        /// List every linear extension instead of just the summary
        #[arg(long, default_value_t = false)]
        list: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// List Jacobi-Stirling permutations with their descent statistics
    Jsp {
        #[arg(long)]
        k: usize,
        /// Comma-separated values whose barred letter is removed
        #[arg(long, default_value = "")]
        bars: String,
        /// Print at most this many words
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a cross-method verification suite
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Certify real-rootedness of every A_{k,i} for 0 <= i <= k <= kmax
    Conjecture {
        #[arg(long, default_value_t = CONJECTURE_K_DEFAULT)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliKind {
    Second,
    First,
}

impl From<CliKind> for Kind {
    fn from(k: CliKind) -> Kind {
        match k {
            CliKind::Second => Kind::Second,
            CliKind::First => Kind::First,
        }
    }
}

/// A quoted CSV field with internal quotes doubled.
fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn poly_json_string(p: &IntPoly, var: &str) -> String {
    serde_json::to_string(&p.to_json(var)).expect("serializable")
}

/// Rows of (key columns, polynomial) rendered in the requested format.
fn render_poly_table(
    header: &[&str],
    rows: &[(Vec<String>, IntPoly)],
    var: &str,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (keys, p) in rows {
                let _ = writeln!(out, "{}\t{}", keys.join("\t"), p.display_with_var(var.chars().next().unwrap()));
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "{},poly", header.join(","));
            for (keys, p) in rows {
                let _ = writeln!(out, "{},{}", keys.join(","), csv_quote(&poly_json_string(p, var)));
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(keys, p)| {
                    let mut obj = serde_json::Map::new();
                    for (h, k) in header.iter().zip(keys) {
                        obj.insert((*h).to_string(), serde_json::Value::String(k.clone()));
                    }
                    obj.insert("poly".to_string(), p.to_json(var));
                    serde_json::Value::Object(obj)
                })
                .collect();
            out = serde_json::to_string_pretty(&serde_json::Value::Array(items)).expect("serializable");
            out.push('\n');
        }
    }
    out
}

fn parse_subset(s: &str) -> Result<BTreeSet<usize>, String> {
    let mut set = BTreeSet::new();
    for tok in s.split(',').filter(|t| !t.trim().is_empty()) {
        let v: usize = tok.trim().parse().map_err(|_| format!("bad subset element {tok:?}"))?;
        set.insert(v);
    }
    Ok(set)
}

fn report_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "suite {}: {} ({} cases, {} failures)", r.suite, verdict, r.cases, r.failures.len());
    for f in &r.failures {
        let _ = writeln!(out, "  FAIL {}: expected {}, got {}", f.id, f.expected, f.actual);
    }
    out
}

fn emit(text: &str, out: &Option<String>) -> Result<(), String> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| format!("cannot write {path}: {e}"))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Jstab { kind, nmax, format, out } => {
            if nmax > 40 {
                return Err("nmax too large; stay at or below 40".into());
            }
            let tri = build_triangle(kind.into(), nmax);
            let mut rows = Vec::new();
            for n in 0..=nmax {
                for k in 0..=n {
                    rows.push((
                        vec![n.to_string(), k.to_string()],
                        tri.entry(n, k).expect("in range").clone(),
                    ));
                }
            }
            emit(&render_poly_table(&["n", "k"], &rows, "z", format), &out)?;
            Ok(true)
        }
        Command::Akt { kmax, method, format, out } => {
            let table: Vec<Vec<IntPoly>> = match method {
                TableMethod::Gf => {
                    let t = descent_table_gf(kmax).map_err(|e| e.to_string())?;
                    (0..=kmax).map(|k| (0..=k).map(|i| t.poly(k, i).clone()).collect()).collect()
                }
                TableMethod::Rec => {
                    if kmax > 60 {
                        return Err("kmax too large; stay at or below 60".into());
                    }
                    let t = descent_table_rec(kmax);
                    (0..=kmax).map(|k| (0..=k).map(|i| t.poly(k, i).clone()).collect()).collect()
                }
                TableMethod::Enum => a_table_enum(kmax).map_err(|e| e.to_string())?,
                TableMethod::Posets => {
                    if kmax > 3 {
                        return Err("method posets enumerates extensions; kmax must be at most 3".into());
                    }
                    let mut t = Vec::new();
                    for k in 0..=kmax {
                        let mut row = Vec::new();
                        for i in 0..=k {
                            if k == 0 {
                                row.push(IntPoly::one());
                                continue;
                            }
                            let mut level = IntPoly::zero();
                            for s in jstirling::posets::subsets_of_size(k, i) {
                                let poset = build_r(k, &s).map_err(|e| e.to_string())?;
                                level = level.add(&poset.descent_polynomial().map_err(|e| e.to_string())?);
                            }
                            row.push(level);
                        }
                        t.push(row);
                    }
                    t
                }
            };
            let mut rows = Vec::new();
            for (k, row) in table.iter().enumerate() {
                for (i, p) in row.iter().enumerate() {
                    rows.push((vec![k.to_string(), i.to_string()], p.clone()));
                }
            }
            emit(&render_poly_table(&["k", "i"], &rows, "t", format), &out)?;
            Ok(true)
        }
        Command::Poset { k, subset, legendre, list, out } => {
            let poset = if legendre {
                if !subset.is_empty() {
                    return Err("--subset does not apply to the Legendre poset".into());
                }
                build_p_legendre(k)
            } else {
                let s = parse_subset(&subset)?;
                build_r(k, &s).map_err(|e| e.to_string())?
            };
            let mut text = String::new();
            let _ = writeln!(text, "labels: {:?}", poset.labels());
            let _ = writeln!(text, "covers: {:?}", poset.covers());
            let dp = poset.descent_polynomial().map_err(|e| e.to_string())?;
            let _ = writeln!(text, "descent polynomial: {dp}");
            let count: num_bigint::BigInt = dp.coeffs().iter().sum();
            let _ = writeln!(text, "linear extensions: {count}");
            if !legendre {
                let s = parse_subset(&subset)?;
                let _ = writeln!(text, "product formula: {}", a_s_at_one(k, &s));
            }
            if list {
                for ext in poset.linear_extensions().map_err(|e| e.to_string())? {
                    let _ = writeln!(
                        text,
                        "{}  des={}",
                        ext.word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
                        jstirling::posets::word_descents(&ext.word)
                    );
                }
            }
            emit(&text, &out)?;
            Ok(true)
        }
        Command::Jsp { k, bars, limit, out } => {
            let removed: BTreeSet<u32> = parse_subset(&bars)?.into_iter().map(|v| v as u32).collect();
            let words = enumerate_jsp(k, &removed).map_err(|e| e.to_string())?;
            let mut text = String::new();
            let _ = writeln!(text, "{} words over M_{{{k}}} minus bars {removed:?}", words.len());
            for w in words.iter().take(limit.unwrap_or(usize::MAX)) {
                let _ = writeln!(
                    text,
                    "{}  des_jacobi={} des_legendre={}",
                    w,
                    w.descents(DescentOrder::Jacobi),
                    w.descents(DescentOrder::Legendre)
                );
            }
            emit(&text, &out)?;
            Ok(true)
        }
        Command::Verify { suite, seed, format, out } => {
            let report = run_suite(suite, seed);
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("serializable");
                    s.push('\n');
                    s
                }
                _ => report_text(&report),
            };
            emit(&text, &out)?;
            Ok(report.passed())
        }
        Command::Conjecture { kmax, format, out } => {
            if kmax > 14 {
                return Err("kmax too large; stay at or below 14".into());
            }
            let report = check_conjecture(kmax);
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("serializable");
                    s.push('\n');
                    s
                }
                _ => report_text(&report),
            };
            emit(&text, &out)?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
