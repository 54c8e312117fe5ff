use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use affvoa::{IdentityReport, WeightFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub operator: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySingularReport {
    pub rank: usize,
    pub level: String,
    pub degree: u32,
    pub weight: Vec<i64>,
    pub terms: usize,
    pub vector: String,
    pub checks: Vec<CheckLine>,
    pub singular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDim {
    pub weight: Vec<i64>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularSpaceReport {
    pub rank: usize,
    pub level: String,
    pub degree: u32,
    pub graded_dimension: usize,
    pub dimension: usize,
    pub by_weight: Vec<WeightDim>,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharReport {
    pub rank: usize,
    pub coefficients: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZhuImageReport {
    pub rank: usize,
    pub image: String,
    pub terms: usize,
    /// The closed-form `v′`, where one is available for the input.
    pub known: Option<String>,
    pub matches_known: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractP0Report {
    pub rank: usize,
    pub generator: String,
    pub module_dim: usize,
    pub zero_weight_dim: usize,
    pub weight_dims: Vec<WeightDim>,
    pub polynomials: Vec<String>,
    pub known: Vec<String>,
    pub matches_known: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub rank: usize,
    pub polynomials: Vec<String>,
    pub families: Vec<WeightFamily>,
    pub all_satisfy: bool,
    pub expected: Vec<WeightFamily>,
    pub matches_expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiplicity {
    pub weight: Vec<i64>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub rank: usize,
    pub weight: Vec<i64>,
    pub dim: u64,
    pub zero_weight_dim: u64,
    pub distinct_weights: usize,
    pub multiplicities: Option<Vec<WeightMultiplicity>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub highest: Vec<i64>,
    pub multiplicity: u64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub rank: usize,
    pub weight: Vec<i64>,
    pub dim: u64,
    pub summands: Vec<Summand>,
    pub summand_dim_total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma64Report {
    pub n: u32,
    pub computed: String,
    pub expected: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitiesReport {
    pub relations: Vec<IdentityReport>,
    pub properties: Vec<IdentityReport>,
    pub passed: bool,
}

/// The result of one subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    VerifySingular(VerifySingularReport),
    SingularSpace(SingularSpaceReport),
    Char(CharReport),
    ZhuImage(ZhuImageReport),
    ExtractP0(ExtractP0Report),
    Classify(ClassifyReport),
    Dims(DimsReport),
    Branch(BranchReport),
    CheckLemma64(Lemma64Report),
    CheckIdentities(IdentitiesReport),
}

impl Report {
    /// False when a verification subcommand found a mathematical failure.
    pub fn verdict(&self) -> bool {
        match self {
            Report::VerifySingular(r) => r.singular,
            Report::ZhuImage(r) => r.matches_known.unwrap_or(true),
            Report::ExtractP0(r) => r.matches_known,
            Report::Classify(r) => r.all_satisfy && r.matches_expected,
            Report::Branch(r) => r.dim == r.summand_dim_total,
            Report::CheckLemma64(r) => r.holds,
            Report::CheckIdentities(r) => r.passed,
            Report::SingularSpace(_) | Report::Char(_) | Report::Dims(_) => true,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<serde_json::Value> {
        match self {
            Report::VerifySingular(r) => serde_json::to_value(r),
            Report::SingularSpace(r) => serde_json::to_value(r),
            Report::Char(r) => serde_json::to_value(r),
            Report::ZhuImage(r) => serde_json::to_value(r),
            Report::ExtractP0(r) => serde_json::to_value(r),
            Report::Classify(r) => serde_json::to_value(r),
            Report::Dims(r) => serde_json::to_value(r),
            Report::Branch(r) => serde_json::to_value(r),
            Report::CheckLemma64(r) => serde_json::to_value(r),
            Report::CheckIdentities(r) => serde_json::to_value(r),
        }
    }

    /// Inverse of [`Report::to_json`], keyed by subcommand name.
    pub fn from_json(command: &str, value: serde_json::Value) -> serde_json::Result<Report> {
        use serde::de::Error as _;
        Ok(match command {
            "verify-singular" => Report::VerifySingular(serde_json::from_value(value)?),
            "singular-space" => Report::SingularSpace(serde_json::from_value(value)?),
            "char" => Report::Char(serde_json::from_value(value)?),
            "zhu-image" => Report::ZhuImage(serde_json::from_value(value)?),
            "extract-p0" => Report::ExtractP0(serde_json::from_value(value)?),
            "classify" => Report::Classify(serde_json::from_value(value)?),
            "dims" => Report::Dims(serde_json::from_value(value)?),
            "branch" => Report::Branch(serde_json::from_value(value)?),
            "check-lemma64" => Report::CheckLemma64(serde_json::from_value(value)?),
            "check-identities" => Report::CheckIdentities(serde_json::from_value(value)?),
            other => return Err(serde_json::Error::custom(format!("unknown command {other:?}"))),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        // writing to a String cannot fail
        let _ = self.write_text(&mut s);
        s
    }

    fn write_text(&self, s: &mut String) -> std::fmt::Result {
        match self {
            Report::VerifySingular(r) => {
                writeln!(
                    s,
                    "rank {}  level {}  degree {}  weight {:?}  terms {}",
                    r.rank, r.level, r.degree, r.weight, r.terms
                )?;
                for c in &r.checks {
                    writeln!(s, "{} v = {}", c.operator, c.result)?;
                }
                writeln!(s, "singular: {}", r.singular)?;
            }
            Report::SingularSpace(r) => {
                writeln!(s, "rank {}  level {}  degree {}", r.rank, r.level, r.degree)?;
                writeln!(s, "graded dimension: {}", r.graded_dimension)?;
                writeln!(s, "singular dimension: {}", r.dimension)?;
                for w in &r.by_weight {
                    writeln!(s, "  weight {:?}: {}", w.weight, w.dimension)?;
                }
                for (i, v) in r.basis.iter().enumerate() {
                    writeln!(s, "v{} = {v}", i + 1)?;
                }
            }
            Report::Char(r) => {
                let c: Vec<String> = r.coefficients.iter().map(u64::to_string).collect();
                writeln!(s, "rank {}: {}", r.rank, c.join(" "))?;
            }
            Report::ZhuImage(r) => {
                writeln!(s, "{}", r.image)?;
                if let Some(m) = r.matches_known {
                    writeln!(s, "matches closed form: {m}")?;
                }
            }
            Report::ExtractP0(r) => {
                writeln!(s, "dim R = {}  dim R_0 = {}", r.module_dim, r.zero_weight_dim)?;
                for p in &r.polynomials {
                    writeln!(s, "  {p}")?;
                }
                writeln!(s, "spans closed-form list: {}", r.matches_known)?;
            }
            Report::Classify(r) => {
                for f in &r.families {
                    writeln!(s, "{f}")?;
                }
                writeln!(
                    s,
                    "{} families; all satisfy: {}; matches expected: {}",
                    r.families.len(),
                    r.all_satisfy,
                    r.matches_expected
                )?;
            }
            Report::Dims(r) => {
                writeln!(s, "dim V({:?}) = {}", r.weight, r.dim)?;
                writeln!(s, "zero weight multiplicity: {}", r.zero_weight_dim)?;
                writeln!(s, "distinct weights: {}", r.distinct_weights)?;
                for m in r.multiplicities.iter().flatten() {
                    writeln!(s, "  {:?}: {}", m.weight, m.multiplicity)?;
                }
            }
            Report::Branch(r) => {
                for x in &r.summands {
                    writeln!(s, "{:?} x{}  dim {}", x.highest, x.multiplicity, x.dim)?;
                }
                writeln!(s, "total {} of {}", r.summand_dim_total, r.dim)?;
            }
            Report::CheckLemma64(r) => {
                writeln!(s, "computed: {}", r.computed)?;
                writeln!(s, "expected: {}", r.expected)?;
                writeln!(s, "holds: {}", r.holds)?;
            }
            Report::CheckIdentities(r) => {
                for x in r.relations.iter().chain(&r.properties) {
                    let tag = if x.passed() { "ok" } else { "FAILED" };
                    writeln!(s, "{tag:6} {:5} cases  {}", x.cases, x.name)?;
                    if let Some(f) = &x.first_failure {
                        writeln!(s, "       first failure: {f}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
