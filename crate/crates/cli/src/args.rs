use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_solids::{Int, SolidKind};

pub const ENV_HELP: &str = "\
Environment:
  LATTICE_SOLIDS_UNSAFE_ORACLE_CAP=<n>
      UNSAFE. Raises every oracle cap to <n>. The exhaustive oracle scans all
      vertex subsets of {0..n}^3 and its running time grows steeply with n;
      values above the defaults (tetra 3, cube 4, octa 4) can run for hours.";

#[derive(Debug, Parser)]
#[command(
    name = "lattice-solids",
    version,
    about = "Regular tetrahedra, cubes and octahedra with integer coordinates",
    after_help = ENV_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Primitive solutions of a^2 + b^2 + c^2 = 3d^2 with d <= DMAX (canonical form).
    Triples(TriplesArgs),
    /// Pairs (m, n) with m^2 - mn + n^2 = k^2.
    Omega(OmegaArgs),
    /// Count solids in {0..n}^3 for every grid size 1..=n.
    #[command(after_help = ENV_HELP)]
    Count(CountArgs),
    /// Build a triangle, its tetrahedra and optionally the cube and octahedron.
    Build(Box<BuildArgs>),
    /// Rational orthogonal matrices from cubes and tiers.
    Matrix(MatrixArgs),
    /// List the available counting strategies.
    Strategies(FormatArg),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TriplesArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=lattice_solids::diophantine::MAX_TRIPLE_BOUND))]
    pub dmax: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=lattice_solids::diophantine::MAX_OMEGA_K))]
    pub k: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(alias = "tetrahedron")]
    Tetra,
    Cube,
    #[value(alias = "octahedron")]
    Octa,
}

impl From<KindArg> for SolidKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tetra => SolidKind::Tetrahedron,
            KindArg::Cube => SolidKind::Cube,
            KindArg::Octa => SolidKind::Octahedron,
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Largest grid size; rows are emitted for 1..=N.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Also run the exhaustive oracle on every row within its cap and report agreement.
    #[arg(long)]
    pub oracle: bool,
    /// Counting strategy.
    #[arg(long, default_value = "constructive", value_parser = ["constructive", "frames", "oracle"])]
    pub method: String,
    /// Worker threads (default: one per core). Does not affect the output.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub jobs: Option<u32>,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Plane normal a,b,c,d with a^2 + b^2 + c^2 = 3d^2, primitive.
    #[arg(long, value_parser = parse_ints::<4>, allow_hyphen_values = true, value_name = "A,B,C,D")]
    pub triple: [Int; 4],
    /// Lattice coordinates m,n of the triangle.
    #[arg(long, value_parser = parse_ints::<2>, allow_hyphen_values = true, value_name = "M,N")]
    pub mn: [Int; 2],
    /// k with m^2 - mn + n^2 = k^2.
    #[arg(long, value_parser = parse_ints::<1>, allow_hyphen_values = true)]
    pub k: [Int; 1],
    /// Explicit r,s with 2(a^2 + b^2) = s^2 + 3r^2 (default: first suitable pair).
    #[arg(long, value_parser = parse_ints::<2>, allow_hyphen_values = true, value_name = "R,S")]
    pub rs: Option<[Int; 2]>,
    /// Also complete each tetrahedron to its cube.
    #[arg(long)]
    pub cube: bool,
    /// Also emit the dual octahedron of each cube (vertices at twice the scale).
    #[arg(long)]
    pub octa: bool,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["from_cube", "tier_reps", "tier_classes"])]
pub struct MatrixArgs {
    /// JSON file holding an array of 8 [x, y, z] cube vertices.
    #[arg(long, value_name = "FILE")]
    pub from_cube: Option<PathBuf>,
    /// Unordered triples (a, b, c) with a^2 + b^2 + c^2 = 3N^2, primitive.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..=lattice_solids::diophantine::MAX_TRIPLE_BOUND))]
    pub tier_reps: Option<u64>,
    /// Every tier-N orthogonal matrix up to signed permutations on either side.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..=200))]
    pub tier_classes: Option<u32>,
    /// With --from-cube: flip the last column if needed so that det = +1.
    #[arg(long, requires = "from_cube")]
    pub rotation: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

fn parse_ints<const N: usize>(s: &str) -> Result<[Int; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {}", parts.len()));
    }
    let mut out: [Int; N] = std::array::from_fn(|_| Int::default());
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not an integer"))?;
    }
    Ok(out)
}
