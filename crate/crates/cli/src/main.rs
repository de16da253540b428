use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jarr_core::oracle::OracleConfig;
use jarr_core::verify::{
    self, BipartiteReport, ChambersRecord, ChiRecord, Evidence, ModeCheck, OracleKind, Outcome,
    TableReport, VerifyReport,
};
use jarr_core::{Error, Mode};

const USAGE: u8 = 2;
const VERIFICATION: u8 = 1;

#[derive(Parser)]
#[command(
    name = "jarr",
    version,
    about = "Characteristic polynomials of the arrangements J_n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest n accepted by charpoly, chambers, verify and table.
    #[arg(long, global = true, default_value_t = 12)]
    max_n: usize,
    /// Worker threads for the oracles (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print χ_{J_n}(t).
    Charpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "corrected")]
        mode: Mode,
    },
    /// Print the number of regions and of relatively bounded regions.
    Chambers {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "corrected")]
        mode: Mode,
    },
    /// Compare both modes against brute-force oracles.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "whitney,ffield,graphs")]
        oracles: Vec<OracleKind>,
        /// Primes for the point counts (default depends on n).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// χ_{J_n} for 2 ≤ n ≤ TO with chamber counts, diffed against the published table.
    Table {
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "corrected")]
        mode: Mode,
    },
    /// Connected bipartite graphs by order and size.
    Bipartite {
        #[arg(long)]
        to: usize,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidN { .. }
            | Error::GuardExceeded { .. }
            | Error::BadModulus(_)
            | Error::BudgetExceeded { .. } => Failure::Usage(e.into()),
            other => Failure::Internal(other.into()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.into())
    }
}

fn check_n(n: usize, min: usize, max: usize) -> Result<(), Failure> {
    if n < min || n > max {
        return Err(Failure::Usage(anyhow::anyhow!(
            "n = {n} is out of range (expected {min} ≤ n ≤ {max})"
        )));
    }
    Ok(())
}

fn sign_label(n: usize) -> &'static str {
    if n.is_multiple_of(2) {
        ""
    } else {
        "-"
    }
}

fn render_chi(rec: &ChiRecord, format: Format) -> Result<String, Failure> {
    let p = rec.coeffs.to_polynomial();
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => serde_json::to_string(rec)? + "\n",
        Format::Latex => format!("\\[ \\chi_{{J_{{{}}}}}(t) = {} \\]\n", rec.n, p.to_latex()),
    })
}

fn render_chambers(rec: &ChambersRecord, format: Format) -> Result<String, Failure> {
    let c = &rec.chambers;
    let s = sign_label(rec.n);
    Ok(match format {
        Format::Text => format!(
            "total {}\t{s}χ(-1), regions\nbounded {}\t{s}χ(1), relatively bounded regions\n",
            c.total, c.bounded
        ),
        Format::Json => serde_json::to_string(rec)? + "\n",
        Format::Latex => format!(
            "\\[ r(J_{{{n}}}) = {s}\\chi_{{J_{{{n}}}}}(-1) = {} \\]\n\\[ b(J_{{{n}}}) = {s}\\chi_{{J_{{{n}}}}}(1) = {} \\]\n",
            c.total,
            c.bounded,
            n = rec.n
        ),
    })
}

fn mode_line(out: &mut String, oracle: OracleKind, check: &ModeCheck) {
    let _ = write!(
        out,
        "{:<8} {:<9} {}",
        oracle.as_str(),
        check.mode.as_str(),
        check.status
    );
    if let Some(d) = &check.first_difference {
        let _ = write!(out, "\tfirst difference {d}");
    }
    out.push('\n');
}

fn render_verify(report: &VerifyReport, format: Format) -> Result<String, Failure> {
    if format == Format::Json {
        return Ok(serde_json::to_string(report)? + "\n");
    }
    let mut out = format!("n = {}\n", report.n);
    for r in &report.reports {
        match &r.outcome {
            Outcome::Skipped { reason } => {
                let _ = writeln!(out, "{:<8} skipped: {reason}", r.oracle.as_str());
            }
            Outcome::Checked {
                corrected,
                paper,
                published,
                evidence,
            } => {
                mode_line(&mut out, r.oracle, corrected);
                mode_line(&mut out, r.oracle, paper);
                if let Some(p) = published {
                    let _ = write!(
                        out,
                        "{:<8} {:<9} {}",
                        r.oracle.as_str(),
                        "published",
                        p.status
                    );
                    if let Some(d) = &p.first_difference {
                        let _ = write!(out, "\tfirst difference {d}");
                    }
                    out.push('\n');
                }
                match evidence {
                    Evidence::Whitney { oracle, .. } => {
                        let _ = writeln!(out, "  subset sum: {}", oracle.to_polynomial());
                    }
                    Evidence::Ffield {
                        checks,
                        interpolated,
                    } => {
                        for c in checks {
                            let _ = writeln!(
                                out,
                                "  q = {}: {} points; corrected {}, paper {}",
                                c.q, c.points, c.corrected, c.paper
                            );
                        }
                        if let Some(p) = interpolated {
                            let _ = writeln!(out, "  interpolated: {}", p.to_polynomial());
                        }
                    }
                    Evidence::Graphs { rows } => {
                        let _ = writeln!(out, "  {} (order, size) classes enumerated", rows.len());
                    }
                }
            }
        }
    }
    if format == Format::Latex {
        out = out.lines().map(|l| format!("% {l}\n")).collect();
    }
    Ok(out)
}

fn render_table(report: &TableReport, format: Format) -> Result<String, Failure> {
    if format == Format::Json {
        return Ok(serde_json::to_string(report)? + "\n");
    }
    let mut out = String::new();
    for row in &report.rows {
        let p = row.polynomial();
        let n = row.n;
        match format {
            Format::Latex => {
                let _ = writeln!(
                    out,
                    "\\[ \\chi_{{J_{{{n}}}}}(t) = {} \\qquad r = {},\\ b = {} \\]",
                    p.to_latex(),
                    row.chambers.total,
                    row.chambers.bounded
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "n = {n}\t{p}\ttotal {}\tbounded {}",
                    row.chambers.total, row.chambers.bounded
                );
            }
        }
        let prefix = if format == Format::Latex { "% " } else { "  " };
        for v in &row.violations {
            let _ = writeln!(out, "{prefix}structure: {v}");
        }
        if let Some(cmp) = &row.published {
            if cmp.difference_count() == 0 {
                let _ = writeln!(out, "{prefix}published: identical");
            }
            for d in &cmp.coefficients {
                let _ = writeln!(out, "{prefix}published: {d}");
            }
            if let Some(d) = &cmp.chamber_total {
                let _ = writeln!(
                    out,
                    "{prefix}published: {d} (published polynomial gives {})",
                    cmp.published_polynomial_total
                );
            }
        }
    }
    let prefix = if format == Format::Latex { "% " } else { "" };
    let _ = writeln!(
        out,
        "{prefix}mode {}: {} differences from the published table",
        report.mode,
        report.difference_count()
    );
    Ok(out)
}

fn render_bipartite(report: &BipartiteReport, format: Format) -> Result<String, Failure> {
    let mut out = String::new();
    match format {
        Format::Json => return Ok(serde_json::to_string(report)? + "\n"),
        Format::Text => {
            let _ = writeln!(out, "order\tsize\tformula\tenumerated");
            for r in &report.rows {
                let e = r
                    .enumerated
                    .as_ref()
                    .map_or("-".to_string(), ToString::to_string);
                let _ = writeln!(out, "{}\t{}\t{}\t{e}", r.order, r.size, r.formula);
            }
            let _ = writeln!(out, "mismatches {}", report.mismatches);
        }
        Format::Latex => {
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "\\[ \\bar b_{{{},{}}} = {} \\]",
                    r.order, r.size, r.formula
                );
            }
            let _ = writeln!(out, "% mismatches {}", report.mismatches);
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let config = OracleConfig {
        workers: cli.workers,
        ..OracleConfig::default()
    };
    let format = cli.format;
    match cli.command {
        Command::Charpoly { n, mode } => {
            check_n(n, 1, cli.max_n)?;
            Ok((render_chi(&ChiRecord::new(n, mode)?, format)?, true))
        }
        Command::Chambers { n, mode } => {
            check_n(n, 1, cli.max_n)?;
            Ok((
                render_chambers(&ChambersRecord::new(n, mode)?, format)?,
                true,
            ))
        }
        Command::Verify { n, oracles, primes } => {
            check_n(n, 1, cli.max_n)?;
            if let Some(&bad) = primes
                .iter()
                .flatten()
                .find(|&&q| q < 5 || !jarr_core::oracle::is_prime(q))
            {
                return Err(Error::BadModulus(bad).into());
            }
            let report = verify::verify(n, &oracles, primes.as_deref(), &config)?;
            let ok = report.corrected_passed();
            Ok((render_verify(&report, format)?, ok))
        }
        Command::Table { to, mode } => {
            check_n(to, 2, cli.max_n)?;
            Ok((
                render_table(&verify::table_report(to, mode)?, format)?,
                true,
            ))
        }
        Command::Bipartite { to } => {
            check_n(to, 1, verify::MAX_BIPARTITE_ORDER)?;
            let report = verify::bipartite_report(to)?;
            let ok = report.mismatches == 0;
            Ok((render_bipartite(&report, format)?, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFICATION)
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {:#}", e.context("internal failure"));
            ExitCode::from(VERIFICATION)
        }
    }
}
