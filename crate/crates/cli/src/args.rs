use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tightcheck::generators::GeneratorSpec;
use tightcheck::invariants::MuConvention;
use tightcheck::limits::SweepLimits;
use tightcheck::linalg::{FieldSpec, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "tightcheck",
    version,
    about = "Exact tightness, sigma/mu-vector and Betti computations for simplicial complexes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Coefficient field: q, f2, f3, fp:<p>
    #[arg(long, global = true, default_value = "f2")]
    pub field: FieldSpec,
    /// Emit machine-readable JSON instead of a table
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex cap applied to every exponential sweep
    #[arg(long, global = true, value_name = "N")]
    pub limit: Option<usize>,
    /// Seed for seeded generators
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
    /// Mu-vector convention: corrected or raw (the literal printed numerator)
    #[arg(long = "mu-convention", global = true, default_value = "corrected")]
    pub mu_convention: MuConvention,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Mu,
    Direct,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure report: dimension, f-vector, purity, connectivity, neighbourliness, manifold status
    Check(Input),
    /// Betti numbers over the chosen field
    Betti {
        #[command(flatten)]
        input: Input,
        /// Reduced Betti numbers
        #[arg(long)]
        reduced: bool,
    },
    /// Sigma-vector
    Sigma(Input),
    /// Mu-vector
    Mu(Input),
    /// Tightness verdict
    Tight {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "mu")]
        method: MethodArg,
    },
    /// k-stackedness of a manifold with boundary
    Stacked {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
    },
    /// k-stackedness of a ball, optionally checking that its boundary is the given complex
    StackedPair {
        ball: PathBuf,
        sphere: Option<PathBuf>,
        #[arg(short)]
        k: usize,
    },
    /// Compare sigma/mu against the stacked-sphere formula (reported, not asserted)
    ConjectureB {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
    },
    /// Invariant battery: Euler relation, boundary of boundary, Morse inequalities, duality, middle-degree implication
    Props(Input),
    /// Generate a complex from a named family
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Write the .cplx text here instead of stdout
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// .cplx file; `-` or absent reads stdin
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Full simplex on d+1 vertices
    Simplex { d: usize },
    /// Boundary of the (d+1)-simplex, a d-sphere
    BoundarySimplex { d: usize },
    /// The (2d+1)-vertex handle body
    Handle { d: usize },
    /// Random stacked ball: `dim`-simplices glued one at a time (uses --seed)
    StackedBall { dim: usize, facets: usize },
    /// Simplex of dimension a joined with the boundary of the b-simplex
    JoinBall { a: usize, b: usize },
    /// Boundary of the cyclic polytope with n vertices, a dim-sphere
    Cyclic { n: usize, dim: usize },
    /// Random complex: each subset of size dim+1 kept with probability `density` (uses --seed)
    Random {
        n: usize,
        dim: usize,
        #[arg(value_parser = parse_density)]
        density: Rational,
    },
    /// The 7-vertex torus
    Csaszar,
}

impl Family {
    pub fn spec(&self, seed: u64) -> GeneratorSpec {
        match *self {
            Family::Simplex { d } => GeneratorSpec::Simplex { d },
            Family::BoundarySimplex { d } => GeneratorSpec::BoundarySimplex { d },
            Family::Handle { d } => GeneratorSpec::Handle { d },
            Family::StackedBall { dim, facets } => GeneratorSpec::StackedBall { dim, facets, seed },
            Family::JoinBall { a, b } => GeneratorSpec::JoinBall { a, b },
            Family::Cyclic { n, dim } => GeneratorSpec::Cyclic { n, dim },
            Family::Random {
                n,
                dim,
                ref density,
            } => GeneratorSpec::Random {
                n,
                dim,
                density: density.clone(),
                seed,
            },
            Family::Csaszar => GeneratorSpec::Csaszar,
        }
    }
}

/// Accepts `p/q`, an integer, or a terminating decimal such as `0.35`.
pub fn parse_density(s: &str) -> Result<Rational, String> {
    if let Some((int, frac)) = s.trim().split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(format!("invalid decimal {s:?}"));
        }
        let whole: Rational = if int.is_empty() {
            Rational::zero()
        } else {
            int.parse().map_err(|e| format!("{e}"))?
        };
        let num: i64 = frac.parse().map_err(|_| format!("invalid decimal {s:?}"))?;
        let den = 10i64.pow(frac.len() as u32);
        return Ok(whole + Rational::new(num, den).map_err(|e| e.to_string())?);
    }
    s.parse()
        .map_err(|e: tightcheck::linalg::LinalgError| e.to_string())
}

/// Resolved settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub mu_convention: MuConvention,
    pub limits: SweepLimits,
    pub seed: u64,
    #[serde(skip)]
    pub json: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldSpec::Prime(2),
            mu_convention: MuConvention::Corrected,
            limits: SweepLimits::default(),
            seed: 0,
            json: false,
        }
    }
}

impl From<&GlobalArgs> for RunConfig {
    fn from(g: &GlobalArgs) -> Self {
        RunConfig {
            field: g.field,
            mu_convention: g.mu_convention,
            limits: g.limit.map(SweepLimits::uniform).unwrap_or_default(),
            seed: g.seed.unwrap_or(0),
            json: g.json,
        }
    }
}
