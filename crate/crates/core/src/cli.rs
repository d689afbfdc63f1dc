//! Command-line front end. The `tamari` binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse or validation failure,
//! 3 size cap exceeded, 4 oracle mismatch or broken invariant.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cells::{enumerate_cells, is_minimal_cellular};
use crate::cubic::{phi, phi_inverse, CubicCoordinate};
use crate::error::{Error, Result};
use crate::interval_posets::{chi, chi_inverse};
use crate::io::{
    cc_text, parse_cc_text, CcJson, CellJson, IntervalJson, PosetJson, RealizationDocument, TidJson,
    TreePairJson,
};
use crate::lattice::{PosetInstance, DEFAULT_SIZE_CAP};
use crate::oracle::cross_validate;
use crate::trees::{psi, psi_inverse};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tamari", about = "Cubic coordinates of Tamari intervals")]
pub struct Cli {
    /// Largest size accepted by commands that materialize a whole lattice.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Cc,
    Tid,
    Poset,
    Interval,
    TreePair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Cc,
    Tid,
    Poset,
    Interval,
    TreePair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    Synchronized,
    New,
    MinimalCellular,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between representations of one interval.
    Convert {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long, value_enum)]
        to: Target,
        /// A file path, or the object itself inline.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Compare two coordinates: LE, GE, EQ or INCOMPARABLE.
    Compare {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Export the cubic realization of one size.
    Realize {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// For csv, edges go to a sibling `<stem>.edges.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List coordinates of one size, one per line.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        count_only: bool,
    },
    /// List cells as JSON lines.
    Cells {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
        /// Also count every coordinate inside each cell's box.
        #[arg(long)]
        interior: bool,
    },
    /// Cross-validate every construction against its brute-force oracle.
    Check {
        #[arg(long)]
        size: usize,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SizeCap { .. } => EXIT_SIZE_CAP,
        Error::Invariant(_) => EXIT_MISMATCH,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (program name first) and runs the command, writing to `out`
/// and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INVALID;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(input: &str) -> Result<String> {
    let path = Path::new(input);
    if !input.trim_start().starts_with('{') && path.is_file() {
        Ok(std::fs::read_to_string(path)?)
    } else {
        Ok(input.to_string())
    }
}

/// Reads any supported representation into its cubic coordinate.
pub fn parse_as_coordinate(source: Source, text: &str) -> Result<CubicCoordinate> {
    let text = text.trim();
    match source {
        Source::Cc if text.starts_with('{') => serde_json::from_str::<CcJson>(text)?.parse(),
        Source::Cc => parse_cc_text(text),
        Source::Tid => Ok(phi_inverse(&serde_json::from_str::<TidJson>(text)?.parse()?)),
        Source::Poset => Ok(phi_inverse(&chi_inverse(&serde_json::from_str::<PosetJson>(text)?.parse()?))),
        Source::Interval => Ok(psi(&serde_json::from_str::<IntervalJson>(text)?.parse()?)),
        Source::TreePair => Ok(psi(&serde_json::from_str::<TreePairJson>(text)?.parse()?)),
    }
}

/// Renders a coordinate as the requested representation.
pub fn render(target: Target, c: &CubicCoordinate) -> Result<String> {
    Ok(match target {
        Target::Cc => cc_text(c),
        Target::Tid => serde_json::to_string(&TidJson::from(&phi(c)))?,
        Target::Poset => serde_json::to_string(&PosetJson::from(&chi(&phi(c))))?,
        Target::Interval => serde_json::to_string(&IntervalJson::from(&psi_inverse(c)))?,
        Target::TreePair => serde_json::to_string(&TreePairJson::from(&psi_inverse(c)))?,
    })
}

fn edges_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.edges.csv"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Convert { from, to, input } => {
            let c = parse_as_coordinate(*from, &read_input(input)?)?;
            writeln!(out, "{}", render(*to, &c)?)?;
        }
        Command::Compare { first, second } => {
            let verdict = parse_cc_text(first)?.compare(&parse_cc_text(second)?)?;
            writeln!(out, "{verdict}")?;
        }
        Command::Realize { size, format, out: path } => {
            let doc = RealizationDocument::from(&PosetInstance::build(*size, cli.cap)?);
            match (format, path) {
                (Format::Json, None) => writeln!(out, "{}", doc.to_json()?)?,
                (Format::Json, Some(p)) => std::fs::write(p, doc.to_json()? + "\n")?,
                (Format::Dot, None) => write!(out, "{}", doc.to_dot())?,
                (Format::Dot, Some(p)) => std::fs::write(p, doc.to_dot())?,
                (Format::Csv, None) => write!(out, "{}\n{}", doc.vertices_csv(), doc.edges_csv())?,
                (Format::Csv, Some(p)) => {
                    std::fs::write(p, doc.vertices_csv())?;
                    std::fs::write(edges_path(p), doc.edges_csv())?;
                }
            }
        }
        Command::Enumerate { size, filter, count_only } => {
            let poset = PosetInstance::build(*size, cli.cap)?;
            let keep = |c: &&CubicCoordinate| match filter {
                Filter::All => true,
                Filter::Synchronized => c.is_synchronized(),
                Filter::New => c.is_new(),
                Filter::MinimalCellular => is_minimal_cellular(c),
            };
            let selected = poset.elements().iter().filter(keep);
            if *count_only {
                writeln!(out, "{}", selected.count())?;
            } else {
                for c in selected {
                    writeln!(out, "{}", cc_text(c))?;
                }
            }
        }
        Command::Cells { size, count_only, interior } => {
            let poset = PosetInstance::build(*size, cli.cap)?;
            let cells = enumerate_cells(&poset)?;
            if *count_only {
                writeln!(out, "{}", cells.len())?;
            } else {
                for cell in &cells {
                    let mut json = CellJson::from(cell);
                    if *interior {
                        json.interior = Some(cell.interior(&poset).len());
                    }
                    writeln!(out, "{}", serde_json::to_string(&json)?)?;
                }
            }
        }
        Command::Check { size } => {
            let report = cross_validate(*size, cli.cap)?;
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}
