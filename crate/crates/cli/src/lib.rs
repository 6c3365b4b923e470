//! Command-line front end for `quotcount`.
//!
//! Every subcommand produces a [`Table`]: a list of labelled integer columns
//! indexed by `n = 0, 1, ...`, plus an optional cross-check verdict. Tables
//! render as aligned text, JSON or CSV. Big integers are always written as
//! decimal strings in JSON and CSV.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;

use quotcount::boxcounting::{self, BoxModel};
use quotcount::invariants::{self, CurveSetup};
use quotcount::PowerSeries;

pub mod render;

pub use render::{JsonReport, Table};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when a cross-check disagrees, or output could not be written.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Aligned plain text.
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "quotcount",
    version,
    about = "Exact Euler characteristics and DT/PT series of curves in threefolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct ModelArg {
    /// One-leg configurations around an infinite column (default).
    #[arg(long, conflicts_with = "plain")]
    leg: bool,
    /// Plain plane partitions.
    #[arg(long)]
    plain: bool,
}

impl ModelArg {
    fn model(&self) -> BoxModel {
        if self.plain {
            BoxModel::Plain
        } else {
            BoxModel::OneLeg
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of the MacMahon function M(q).
    Macmahon {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Count or list box configurations.
    Boxes {
        #[command(subcommand)]
        action: BoxesAction,
    },
    /// Local model series q·M(-q)/(1+q).
    LocalModel {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Euler characteristics of Quot schemes of the curve.
    #[command(allow_negative_numbers = true)]
    Quot {
        #[arg(long = "chi-y")]
        chi_y: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        order: usize,
        /// Sum over strata indexed by partitions.
        #[arg(long)]
        stratified: bool,
        /// Closed-form series (default when no route is selected).
        #[arg(long)]
        series: bool,
        /// Add the signed (Behrend-weighted) series.
        #[arg(long)]
        weighted: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Stable-pair series n_{g,C}·(1+q)^{2g-2}.
    #[command(allow_negative_numbers = true)]
    Pt {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        bps: i64,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// DT series M(-q)^{χ(Y)}·PT_C(q).
    Dt {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Both sides of the DT/PT wall-crossing identity, compared per coefficient.
    Wallcross {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct CurveArgs {
    #[arg(long = "chi-y", allow_negative_numbers = true)]
    chi_y: i64,
    #[arg(long)]
    genus: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    bps: i64,
    #[arg(long)]
    order: usize,
}

impl CurveArgs {
    fn setup(&self) -> CurveSetup {
        CurveSetup::new(self.chi_y, self.genus, self.order).with_bps(self.bps)
    }

    fn params(&self) -> BTreeMap<String, Value> {
        params([
            ("chi-y", Value::from(self.chi_y)),
            ("genus", Value::from(self.genus)),
            ("bps", Value::from(self.bps)),
            ("order", Value::from(self.order)),
        ])
    }
}

#[derive(Debug, Subcommand)]
enum BoxesAction {
    /// Number of configurations of each volume up to K.
    Count {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Every configuration of volume K in canonical text form.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        model: ModelArg,
    },
}

fn params<const N: usize>(entries: [(&str, Value); N]) -> BTreeMap<String, Value> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn model_name(model: BoxModel) -> &'static str {
    match model {
        BoxModel::OneLeg => "leg",
        BoxModel::Plain => "plain",
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "quotcount: {e}");
            EXIT_MISMATCH
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> io::Result<i32> {
    let (table, format) = match command {
        Command::Boxes {
            action: BoxesAction::Enumerate { n, model },
        } => {
            enumerate_boxes(model.model(), n, out)?;
            return Ok(EXIT_OK);
        }
        Command::Boxes {
            action: BoxesAction::Count { n, model, format },
        } => {
            let model = model.model();
            let counts = (0..=n)
                .map(|k| BigInt::from(boxcounting::count(model, k)))
                .collect();
            let label = match model {
                BoxModel::OneLeg => "one_leg",
                BoxModel::Plain => "plane_partitions",
            };
            let table = Table::new(
                "boxes count",
                params([
                    ("n", Value::from(n)),
                    ("model", Value::from(model_name(model))),
                ]),
            )
            .column(label, counts);
            (table, format.format)
        }
        Command::Macmahon { order, format } => {
            let table = Table::new("macmahon", params([("order", Value::from(order))]))
                .column("macmahon", PowerSeries::macmahon(order).into_coeffs());
            (table, format.format)
        }
        Command::LocalModel { order, format } => {
            let series = invariants::local_model_series(order as usize)
                .expect("order is at least 1 by argument validation");
            let table = Table::new("local-model", params([("order", Value::from(order))]))
                .column("local_dt", series.into_coeffs());
            (table, format.format)
        }
        Command::Quot {
            chi_y,
            genus,
            order,
            stratified,
            series,
            weighted,
            format,
        } => {
            let setup = CurveSetup::new(chi_y, genus, order);
            let series = series || !stratified;
            let mut table = Table::new(
                "quot",
                params([
                    ("chi-y", Value::from(chi_y)),
                    ("genus", Value::from(genus)),
                    ("order", Value::from(order)),
                    ("stratified", Value::from(stratified)),
                    ("series", Value::from(series)),
                    ("weighted", Value::from(weighted)),
                ]),
            );
            let mut routes = Vec::new();
            if stratified {
                let values = invariants::chi_quot_stratified_all(&setup)
                    .map_err(|e| io::Error::other(e.to_string()))?;
                routes.push(values.clone());
                table = table.column("chi_quot_stratified", values);
            }
            if series {
                let values = invariants::chi_quot_series(&setup).into_coeffs();
                routes.push(values.clone());
                table = table.column("chi_quot_series", values);
            }
            if weighted {
                table = table.column(
                    "weighted_chi_quot",
                    invariants::weighted_chi_quot_series(&setup).into_coeffs(),
                );
            }
            if let [a, b] = &routes[..] {
                table = table.verdict(a == b);
            }
            (table, format.format)
        }
        Command::Pt {
            genus,
            bps,
            order,
            format,
        } => {
            let setup = CurveSetup::new(0, genus, order).with_bps(bps);
            let table = Table::new(
                "pt",
                params([
                    ("genus", Value::from(genus)),
                    ("bps", Value::from(bps)),
                    ("order", Value::from(order)),
                ]),
            )
            .column("pt", invariants::pt_series(&setup).into_coeffs());
            (table, format.format)
        }
        Command::Dt { curve, format } => {
            let table = Table::new("dt", curve.params()).column(
                "dt",
                invariants::dt_series_conjectural(&curve.setup()).into_coeffs(),
            );
            (table, format.format)
        }
        Command::Wallcross { curve, format } => {
            let report = invariants::check_wallcross(&curve.setup());
            (
                Table::from_report("wallcross", curve.params(), report),
                format.format,
            )
        }
    };
    out.write_all(table.render(format).as_bytes())?;
    out.flush()?;
    Ok(exit_status(&table))
}

/// `EXIT_MISMATCH` when the table carries a failed cross-check.
pub fn exit_status(table: &Table) -> i32 {
    if table.verdict_value() == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn enumerate_boxes(model: BoxModel, n: u32, out: &mut dyn Write) -> io::Result<()> {
    let mut first = true;
    let mut result = Ok(());
    boxcounting::for_each_config(model, n, |config| {
        if result.is_err() {
            return;
        }
        let sep = if first { "" } else { "\n" };
        first = false;
        result = write!(out, "{sep}{config}");
    });
    result?;
    out.flush()
}
