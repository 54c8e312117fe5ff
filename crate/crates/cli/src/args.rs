use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use affvoa::weights::DEFAULT_CAP;

#[derive(Debug, Parser)]
#[command(
    name = "affvoa",
    version,
    about = "Singular vectors, Zhu-algebra polynomials and highest-weight classification for A_l^(1)"
)]
pub struct Cli {
    /// Emit a versioned JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for the parallel kernels (overrides AFFVOA_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Size cap on basis enumerations and modules.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a constructed vector is annihilated by e_i(0) and f_theta(1).
    VerifySingular(VectorArgs),
    /// Dimension and basis of the singular vectors of one conformal degree.
    SingularSpace(SingularSpaceArgs),
    /// Graded dimensions of the vacuum module.
    Char(CharArgs),
    /// Image of a singular vector in U(g).
    ZhuImage(VectorArgs),
    /// Zero-weight polynomials of the adjoint module generated by v'.
    ExtractP0(PipelineArgs),
    /// Highest-weight families on which the polynomials vanish.
    Classify(ClassifyArgs),
    /// Weyl dimension and weight multiplicities of V(lambda).
    Dims(WeightArgs),
    /// Restriction of V(lambda) to the rank l-1 Levi subalgebra.
    Branch(WeightArgs),
    /// Compare (f13^n f23^n)_L v'_(2,n) modulo U(g)n+ with (-1)^n (n!)^2 p(h).
    CheckLemma64(Lemma64Args),
    /// Run the U(g) relation checks and the randomized property suite.
    CheckIdentities(IdentitiesArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifySingular(_) => "verify-singular",
            Command::SingularSpace(_) => "singular-space",
            Command::Char(_) => "char",
            Command::ZhuImage(_) => "zhu-image",
            Command::ExtractP0(_) => "extract-p0",
            Command::Classify(_) => "classify",
            Command::Dims(_) => "dims",
            Command::Branch(_) => "branch",
            Command::CheckLemma64(_) => "check-lemma64",
            Command::CheckIdentities(_) => "check-identities",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VectorFamily {
    /// v_(l,n) in N_l(n-2, 0), l >= 3.
    Al,
    /// v_(2,n) in N_2(n-2, 0).
    A2,
    /// The image of v_(2,n) under the diagram involution.
    A2Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Al,
    A2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolySource {
    /// The closed-form polynomials.
    Known,
    /// Polynomials extracted from the adjoint module.
    Computed,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct VectorArgs {
    #[arg(long, value_enum)]
    pub family: VectorFamily,
    /// Rank; required for `al`, fixed to 2 otherwise.
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Reinterpret the vector at this level instead of its own.
    #[arg(long, allow_hyphen_values = true)]
    pub level: Option<String>,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct SingularSpaceArgs {
    #[arg(long)]
    pub l: usize,
    /// Level as an exact rational, e.g. -1 or 3/2.
    #[arg(long, allow_hyphen_values = true)]
    pub level: String,
    #[arg(long)]
    pub degree: u32,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct CharArgs {
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub max_degree: usize,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct PipelineArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct ClassifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = PolySource::Known)]
    pub source: PolySource,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct WeightArgs {
    #[arg(long)]
    pub l: usize,
    /// Dynkin coordinates, comma separated, e.g. 0,2,0.
    #[arg(long)]
    pub weight: String,
    /// List every weight with its multiplicity.
    #[arg(long)]
    pub multiplicities: bool,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct Lemma64Args {
    #[arg(long)]
    pub n: u32,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct IdentitiesArgs {
    #[arg(long, default_value_t = 20_241_016)]
    pub seed: u64,
    /// Random samples per property.
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,
    #[arg(long, default_value_t = 3)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 4)]
    pub max_exp: u32,
}
