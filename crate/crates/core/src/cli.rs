//! Command-line driver for the `realgw` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::convert::{self, Format, InvariantTable, Kind, Provenance};
use crate::error::{Error, Result};
use crate::hodge::{hodge_integral, HodgeQuery};
use crate::localization::gw_real;
use crate::series_ids::{check_conjecture, verify_identity, Conjecture, Identity, IdentityReport};

#[derive(Debug, Parser)]
#[command(name = "realgw", version, about = "Real GW invariants of (P^3, tau_4), Hodge integrals and their identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Real GW invariant with d conjugate pairs of point constraints, by localization.
    Gw {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
    },
    /// Real enumerative counts of one degree for genera 0..=max-genus.
    Enum {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long)]
        max_genus: u32,
    },
    /// Apply the GW <-> E transform to a table file.
    Convert {
        #[arg(long)]
        input: PathBuf,
        /// Kind of the output table.
        #[arg(long, value_enum)]
        to: TargetKind,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// One Hodge integral of psi and lambda classes.
    Hodge {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: usize,
        /// Psi exponents, one per marked point; missing ones are 0.
        #[arg(long, value_delimiter = ',', num_args = 0..=1)]
        psi: Vec<u32>,
        /// Lambda indices.
        #[arg(long, value_delimiter = ',', num_args = 0..=1)]
        lambda: Vec<u32>,
    },
    /// Check the Hodge-integral identities order by order in t.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Print the bundled invariant tables.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        which: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetKind {
    E,
    Gw,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Csv,
    Markdown,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Markdown => Format::Markdown,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Identities,
    Conjectures,
    All,
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation. Exit codes: 0 success, 1 identity failure, 2 usage error.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NonConstant { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gw { genus, degree } => {
            writeln!(out, "{}", gw_real(genus, degree)?)?;
        }
        Command::Enum { degree, max_genus } => {
            let (gw, source) = gw_column(degree, max_genus)?;
            let e = convert::e_from_gw(&gw)?;
            writeln!(out, "genus,degree,value,source")?;
            for g in 0..=max_genus {
                if let Some(v) = e.get(g, degree) {
                    writeln!(out, "{g},{degree},{v},{source}")?;
                }
            }
        }
        Command::Convert { input, to, format } => {
            let tables = convert::load_tables(&input)?;
            let want = match to {
                TargetKind::E => Kind::Gw,
                TargetKind::Gw => Kind::E,
            };
            let source = tables
                .iter()
                .find(|t| t.kind == want)
                .ok_or_else(|| Error::InvalidArgument(format!("{} has no {want} table", input.display())))?;
            let result = match to {
                TargetKind::E => convert::e_from_gw(source)?,
                TargetKind::Gw => convert::gw_from_e(source)?,
            };
            write!(out, "{}", convert::emit_table(&result, format.into()))?;
        }
        Command::Hodge { g, n, mut psi, lambda } => {
            if psi.len() > n {
                return Err(Error::InvalidArgument(format!("{} psi exponents for {n} marked points", psi.len())));
            }
            psi.resize(n, 0);
            let q = HodgeQuery::new(g, psi, lambda)?;
            writeln!(out, "{}", hodge_integral(&q))?;
        }
        Command::Verify { suite, order } => {
            if order % 2 == 1 || order < 2 {
                return Err(Error::InvalidArgument(format!("order must be even and at least 2, got {order}")));
            }
            if order > 6 {
                writeln!(err, "warning: order {order} needs Hodge integrals through genus {}; this can take a long time", order / 2)?;
            }
            let mut reports: Vec<IdentityReport> = Vec::new();
            if matches!(suite, Suite::Identities | Suite::All) {
                for id in Identity::ALL {
                    reports.push(verify_identity(id, order)?);
                }
            }
            if matches!(suite, Suite::Conjectures | Suite::All) {
                for c in Conjecture::ALL {
                    reports.push(check_conjecture(c, order, 3)?);
                }
            }
            let mut failed = false;
            for r in &reports {
                writeln!(out, "{r}")?;
                failed |= !r.pass && !r.conjecture;
            }
            return Ok(if failed { 1 } else { 0 });
        }
        Command::Tables { which, format } => {
            let (gw, e) = convert::bundled(which)?;
            write!(out, "{}", convert::emit_tables(&[gw, e], format.into()))?;
        }
    }
    Ok(0)
}

/// GW column by localization for `d <= 4`, from the bundled table otherwise.
fn gw_column(degree: u32, max_genus: u32) -> Result<(InvariantTable, &'static str)> {
    if degree <= 4 {
        let mut t = InvariantTable::new(convert::Flavor::Real, Kind::Gw);
        for g in 0..=max_genus {
            t.insert(g, degree, gw_real(g, degree)?, Provenance::Computed);
        }
        return Ok((t, "computed"));
    }
    let (bundled, _) = convert::bundled(2)?;
    let mut t = InvariantTable::new(convert::Flavor::Real, Kind::Gw);
    for g in 0..=max_genus {
        let v = bundled.get(g, degree).ok_or(Error::MissingEntry { kind: "GW", genus: g, degree })?;
        t.insert(g, degree, v.clone(), Provenance::Loaded);
    }
    Ok((t, "bundled"))
}
