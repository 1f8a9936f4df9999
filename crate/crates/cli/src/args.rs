use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "cube-sections", version, about = "Hyperplane sections of the unit cube")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write the rendered output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sum,
    Integral,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Formulas,
    Criteria,
    Rho,
    Props,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Section volume at distance t from the center
    Volume(VolumeArgs),
    /// Local extremality at a diagonal or sub-diagonal
    Classify(ClassifyArgs),
    /// Certified critical zeros for one order
    Roots(RootsArgs),
    /// Critical zeros over a range of dimensions
    Table(TableArgs),
    /// Plot data for V, S1, S2 along t
    Sweep(SweepArgs),
    /// Run the property suites
    Verify(VerifyArgs),
}

/// Distance from the center, either as `t` or through `z = n/2 − t√n`.
#[derive(Args, Debug, Serialize)]
#[group(required = false, multiple = false)]
pub struct Position {
    /// Distance t from the center of the cube
    #[arg(long)]
    pub t: Option<f64>,
    /// Exact z = n/2 − t√n, as `p/q` or a decimal
    #[arg(long)]
    pub z: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct VolumeArgs {
    /// Ambient dimension
    #[arg(long)]
    pub d: Option<u32>,
    /// Sub-diagonal order (defaults to d)
    #[arg(long)]
    pub n: Option<u32>,
    #[command(flatten)]
    pub pos: Position,
    #[arg(long, value_enum, default_value_t = Method::Sum)]
    pub method: Method,
    /// Explicit normal vector, comma separated; replaces the sub-diagonal
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub a: Option<Vec<f64>>,
}

#[derive(Args, Debug, Serialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: Option<u32>,
    #[command(flatten)]
    pub pos: Position,
    /// Enclosure width below which an undecided sign is reported as inconclusive
    #[arg(long)]
    pub eps: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct RootsArgs {
    /// Order of the (sub-)diagonal
    #[arg(long, alias = "d")]
    pub n: u32,
    /// Refinement width
    #[arg(long)]
    pub eps: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct TableArgs {
    #[arg(long)]
    pub dmin: u32,
    #[arg(long)]
    pub dmax: u32,
    #[arg(long)]
    pub eps: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct SweepArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: Option<u32>,
    /// Number of grid points on [0, √n/2)
    #[arg(long, default_value_t = 101)]
    pub samples: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Largest order for the sign-pattern sweep
    #[arg(long, default_value_t = 35)]
    pub dmax: u32,
    /// Random samples for the formula comparison
    #[arg(long, default_value_t = 200)]
    pub samples: u32,
}
