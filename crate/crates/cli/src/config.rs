//! Command-line and environment configuration.
//!
//! Every option can be given as a flag or as an `INV3412_*` environment
//! variable; flags win over the environment, which wins over the defaults.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use inv3412::genfun::Style;
use serde::Serialize;

/// Largest `r` accepted without `--force`.
pub const SOFT_R_LIMIT: usize = 7;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "inv3412",
    version,
    about = "Count involutions by occurrences of the pattern 3412",
    after_help = "Options may also be set through INV3412_* environment variables \
                  (shown next to each flag). Precedence: flags > environment > defaults.\n\
                  Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource cap."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Global {
    /// Worker threads for enumeration [default: available parallelism].
    #[arg(long, global = true, env = "INV3412_THREADS")]
    #[serde(skip)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "INV3412_FORMAT")]
    pub format: Format,

    /// Write the artifact here instead of standard output.
    #[arg(short, long, global = true, env = "INV3412_OUTPUT")]
    #[serde(skip)]
    pub output: Option<PathBuf>,

    /// Largest permutation size any enumeration may reach.
    #[arg(long, global = true, default_value_t = 14, env = "INV3412_CAP")]
    pub cap: usize,

    /// Allow r above the soft limit of 7.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StyleArg {
    Canonical,
    Paper,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Style {
        match s {
            StyleArg::Canonical => Style::Canonical,
            StyleArg::Paper => Style::Paper,
        }
    }
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Solve for I_r, N_r, E_r, O_r with r = 0..=R and print closed forms and series.
    Genfun(GenfunArgs),
    /// Build the catalog of kernel shapes with capacity 1..=R.
    Shapes(ShapesArgs),
    /// Check the pipeline against brute force, validate the cell classifier,
    /// and diff the printed closed forms.
    Verify(VerifyArgs),
    /// Brute-force count tables.
    Table(TableArgs),
    /// Report the cell classification of one kernel shape.
    Classify(ClassifyArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GenfunArgs {
    #[arg(long = "r", default_value_t = 2, env = "INV3412_R_MAX")]
    pub r_max: usize,

    /// Series truncation order.
    #[arg(long, default_value_t = 40, env = "INV3412_ORDER")]
    pub order: usize,

    #[arg(long, value_enum, default_value_t = StyleArg::Canonical, env = "INV3412_STYLE")]
    pub style: StyleArg,
}

#[derive(Debug, Args, Serialize)]
pub struct ShapesArgs {
    #[arg(long = "r", default_value_t = 2, env = "INV3412_R_MAX")]
    pub r_max: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long = "r", default_value_t = 2, env = "INV3412_R_MAX")]
    pub r_max: usize,

    /// Largest n for the brute-force comparison and the classifier scan.
    #[arg(long = "n", default_value_t = 12, env = "INV3412_N_MAX")]
    pub n_max: usize,

    /// Series truncation order; raised to n if smaller.
    #[arg(long, default_value_t = 40, env = "INV3412_ORDER")]
    pub order: usize,

    /// Each shape of size s is validated on involutions of size s..=min(s + EXTRA, n).
    #[arg(long, default_value_t = 4, env = "INV3412_EXTRA")]
    pub extra: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct TableArgs {
    #[arg(long = "n", default_value_t = 12, env = "INV3412_N_MAX")]
    pub n_max: usize,

    #[arg(long = "r", default_value_t = 2, env = "INV3412_R_MAX")]
    pub r_max: usize,

    /// Split counts into even and odd involutions.
    #[arg(long)]
    pub parity: bool,

    /// Diff against the printed tables; any difference exits with status 1.
    #[arg(long)]
    pub golden: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    /// Kernel shape in one-line notation, e.g. 351624 or "3 5 1 6 2 4".
    pub shape: String,

    /// Also validate the labels on all involutions up to this size.
    #[arg(long)]
    pub validate: Option<usize>,
}
