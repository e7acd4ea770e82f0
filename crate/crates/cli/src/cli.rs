//! Command-line surface. Defaults reproduce the reference configuration
//! (t0 = 14.137, ΔT = 1.5, 10000 iterations) so bare commands match the
//! published runs.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Numerical laboratory for zeta-zero dynamics, spectra, and claim audits",
    after_help = "Exit codes: 0 success, 2 malformed request (flags/files/paths), \
                  3 computation outside its domain."
)]
pub struct Cli {
    /// Directory for emitted files
    #[arg(
        long,
        global = true,
        env = "ZETALAB_OUTPUT_DIR",
        default_value = "zetalab-out"
    )]
    pub output_dir: PathBuf,

    /// Which file formats to emit
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        default_value = "csv,json,svg"
    )]
    pub formats: Vec<FormatKind>,

    /// Master seed; all randomness derives from it
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatKind {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate the counting-term map and record the trajectory
    Orbit(OrbitArgs),
    /// Per-step exponent series along an orbit
    Lyapunov(OrbitArgs),
    /// Post-transient samples across a step-size grid
    Bifurcation(BifurcationArgs),
    /// Shannon entropy of a probability vector
    Entropy(EntropyArgs),
    /// Random diagonal operator and its eigenvalue distribution
    Spectrum(SpectrumArgs),
    /// Inverse-ordinate spectrum λ_i = T̄₁/T̄_i from a zero table
    InverseSpectrum(ZeroTableArgs),
    /// Zero table with counting-formula comparison
    Zeros(ZerosArgs),
    /// ψ(x): direct sieve vs truncated explicit formula
    Psi(PsiArgs),
    /// Prime-counting ratio π(x)/(x/ln x) over decades
    Pnt(PntArgs),
    /// Hydrogen bound-state energies from pinned constants
    Hydrogen(HydrogenArgs),
    /// Overlap between a spectrum and the hydrogen levels
    Compare(CompareArgs),
    /// Evaluate the built-in registry of published numeric claims
    Audit,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Starting ordinate
    #[arg(long, default_value_t = 14.137)]
    pub t0: f64,
    /// Step size ΔT
    #[arg(long, default_value_t = 1.5)]
    pub dt: f64,
    /// Iteration budget
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct BifurcationArgs {
    /// Starting ordinate
    #[arg(long, default_value_t = 14.137)]
    pub t0: f64,
    /// Smallest step size of the grid
    #[arg(long, default_value_t = 1.5)]
    pub dt_min: f64,
    /// Largest step size of the grid (defaults to dt-min: single grid point)
    #[arg(long)]
    pub dt_max: Option<f64>,
    /// Number of grid points
    #[arg(long, default_value_t = 1)]
    pub dt_count: usize,
    /// Iterations per grid point
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    /// Leading iterates to discard (defaults to 10% of n; 0 keeps everything)
    #[arg(long)]
    pub transient: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    /// Uniform distribution over this many outcomes
    #[arg(long, conflicts_with = "probs")]
    pub uniform: Option<usize>,
    /// Explicit comma-separated probability vector
    #[arg(long, value_delimiter = ',')]
    pub probs: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Matrix dimension (number of eigenvalues)
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    /// Weight entries by the pair correlation over the gap grid
    #[arg(long)]
    pub use_r2: bool,
    /// Smallest normalized gap of the grid
    #[arg(long, default_value_t = 0.5)]
    pub u_min: f64,
    /// Largest normalized gap of the grid
    #[arg(long, default_value_t = 10.0)]
    pub u_max: f64,
    /// Clamp margin for the uniform sampling interval
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct ZeroTableArgs {
    /// Load ordinates from a file instead of the bundled table
    #[arg(long)]
    pub zeros_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// Compare the empirical count of ordinates ≤ T with the smoothed formula
    #[arg(long)]
    pub count_below: Option<f64>,
    /// Load ordinates from a file instead of the bundled table
    #[arg(long)]
    pub zeros_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    /// Evaluation point (must exceed 1)
    #[arg(long, default_value_t = 100.5)]
    pub x: f64,
    /// Number of conjugate zero pairs in the truncated formula
    #[arg(long, default_value_t = 100)]
    pub k: usize,
    /// Load ordinates from a file instead of the bundled table
    #[arg(long)]
    pub zeros_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PntArgs {
    /// Sieve bound
    #[arg(long, default_value_t = 1_000_000)]
    pub max: u64,
}

#[derive(Debug, Args)]
pub struct HydrogenArgs {
    /// Largest principal quantum number
    #[arg(long, default_value_t = 100)]
    pub n_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompareSource {
    /// Negated inverse-ordinate spectrum
    Inverse,
    /// Seeded random diagonal operator (correlation-weighted)
    Operator,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Largest principal quantum number on the hydrogen side
    #[arg(long, default_value_t = 100)]
    pub n_max: usize,
    /// Which spectrum to compare against the levels
    #[arg(long, value_enum, default_value_t = CompareSource::Inverse)]
    pub source: CompareSource,
}
