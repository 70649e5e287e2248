use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

const CORRESPONDENCES: &str = "\
Correspondences map the vertices A, B, C of triangle1 to vertices of triangle2:
  σ0  A→A1 B→B1 C→C1
  σ1  A→B1 B→C1 C→A1   (the B1C1A1 ordering)
  σ2  A→C1 B→A1 C→B1   (the C1A1B1 ordering)
  τ0  A→A1 B→C1 C→B1
  τ1  A→C1 B→B1 C→A1
  τ2  A→B1 B→A1 C→C1
ASCII spellings s0..s2 and t0..t2 are accepted.";

#[derive(Debug, Parser)]
#[command(
    name = "orthology-lab",
    version,
    about = "Exact orthology and homology of triangle pairs"
)]
#[command(after_help = CORRESPONDENCES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report deficits, verdicts and centers for a pair document.
    #[command(after_help = CORRESPONDENCES)]
    Check(CheckArgs),
    /// Build a derived object from a triangle document.
    Construct(ConstructArgs),
    /// Emit an exact witness pair.
    Generate(GenerateArgs),
    /// Run a seeded search over one of the open questions.
    Search(SearchArgs),
    /// Draw a planar pair and one perpendicular pencil as SVG.
    #[command(after_help = CORRESPONDENCES)]
    Render(RenderArgs),
}

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("format").args(["json", "text"])))]
pub struct CheckArgs {
    pub input: PathBuf,
    /// One correspondence, or `all`.
    #[arg(long, default_value = "all")]
    pub correspondence: String,
    /// Also report homology.
    #[arg(long)]
    pub homology: bool,
    /// JSON report (default).
    #[arg(long)]
    pub json: bool,
    /// Plain-text report.
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Medial,
    Orthocenter,
    Circumcenter,
    Circumcircle,
    Circumpedal,
    Incenter,
}

#[derive(Debug, clap::Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    pub input: PathBuf,
    /// Point for `circumpedal`, as `x,y`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
}

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("family").required(true).args(["bi_orthologic", "bi_homological"])))]
pub struct GenerateArgs {
    /// Orthologic under σ0 and σ1.
    #[arg(long)]
    pub bi_orthologic: bool,
    /// Homological under σ0 and σ1.
    #[arg(long)]
    pub bi_homological: bool,
    /// Overridden by ORTHOLOGY_LAB_SEED when set.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Triangle document path, or `random`.
    #[arg(long, default_value = "random")]
    pub base: String,
    /// Coordinate range for a random base.
    #[arg(long, default_value_t = 10)]
    pub range: u32,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct SearchArgs {
    /// Q1, Q2, Q2o, Q3 or Q4.
    #[arg(long)]
    pub question: String,
    #[arg(long)]
    pub trials: u64,
    /// Overridden by ORTHOLOGY_LAB_SEED when set.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub range: u32,
    /// Findings file (one JSON object per line). The summary goes to
    /// `<out>.summary.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value = "σ0")]
    pub correspondence: String,
}
