//! Batch front end for the `affvoa` library. [`run`] parses an argument
//! vector, executes one subcommand and returns the exit code together with
//! everything that would go to stdout and stderr.

pub mod args;
pub mod report;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use affvoa::rational::{fmt_rational, parse_rational};
use affvoa::weights::{branch_to_subalgebra_capped, weight_multiplicities_capped};
use affvoa::{
    check_lemma64, check_uea_relations, classify, extract_p0, family_satisfies, generate_adjoint_module,
    graded_dimensions, is_singular, known_families_a2, known_families_vl1, known_p0_vl1, known_p_a2, known_vprime_a2,
    known_vprime_l1, psi, run_property_suite, same_span, singular_space, v2n_vector, vlm_vector, weyl_dim, zhu_image,
    Error, HPolynomial, Uea, VermaVector, Weight, WeightFamily,
};

use args::{Cli, Command, Family, PipelineArgs, PolySource, VectorArgs, VectorFamily};
use report::*;

pub const SCHEMA_VERSION: &str = "1";
pub const THREADS_ENV: &str = "AFFVOA_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses `argv` (program name first) and runs the selected subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(t) => Some(t),
                Err(_) => return Outcome::usage(format!("{THREADS_ENV}={v:?} is not a thread count\n")),
            },
            Err(_) => None,
        },
    };
    let result = match threads {
        Some(0) => return Outcome::usage("thread count must be positive\n"),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, cli.cap)),
            Err(e) => return Outcome::usage(format!("cannot start thread pool: {e}\n")),
        },
        None => execute(&cli.command, cli.cap),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let code = if report.verdict() { EXIT_OK } else { EXIT_VERIFICATION };
    let stdout = if cli.json {
        match envelope(&cli.command, cli.cap, &report) {
            Ok(v) => format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values serialize")),
            Err(e) => return Outcome::usage(format!("error: cannot render JSON: {e}\n")),
        }
    } else {
        report.to_text()
    };
    let stderr = if code == EXIT_VERIFICATION {
        format!("verification failed: {}\n", cli.command.name())
    } else {
        String::new()
    };
    Outcome { code, stdout, stderr }
}

fn params<T: Serialize>(args: &T, cap: usize) -> serde_json::Result<Value> {
    let mut v = serde_json::to_value(args)?;
    if let Value::Object(map) = &mut v {
        map.insert("cap".into(), json!(cap));
    }
    Ok(v)
}

/// `{"schema", "command", "params", "result"}`.
pub fn envelope(cmd: &Command, cap: usize, report: &Report) -> serde_json::Result<Value> {
    let p = match cmd {
        Command::VerifySingular(a) | Command::ZhuImage(a) => params(a, cap)?,
        Command::SingularSpace(a) => params(a, cap)?,
        Command::Char(a) => params(a, cap)?,
        Command::ExtractP0(a) => params(a, cap)?,
        Command::Classify(a) => params(a, cap)?,
        Command::Dims(a) | Command::Branch(a) => params(a, cap)?,
        Command::CheckLemma64(a) => params(a, cap)?,
        Command::CheckIdentities(a) => params(a, cap)?,
    };
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "command": cmd.name(),
        "params": p,
        "result": report.to_json()?,
    }))
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Unsupported(msg.into())
}

fn parse_weight(l: usize, s: &str) -> affvoa::Result<Vec<i64>> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight coordinate {x:?}"))))
        .collect::<affvoa::Result<_>>()?;
    if coords.len() != l {
        return Err(Error::WeightLength { got: coords.len(), expected: l });
    }
    Ok(coords)
}

fn vector_for(a: &VectorArgs) -> affvoa::Result<VermaVector> {
    if a.n == 0 {
        return Err(bad("n must be at least 1"));
    }
    let v = own_level_vector(a)?;
    match &a.level {
        Some(k) => Ok(v.at_level(parse_rational(k)?)),
        None => Ok(v),
    }
}

fn own_level_vector(a: &VectorArgs) -> affvoa::Result<VermaVector> {
    match a.family {
        VectorFamily::Al => vlm_vector(a.l.ok_or_else(|| bad("--l is required for family al"))?, a.n),
        VectorFamily::A2 | VectorFamily::A2Psi => {
            if a.l.is_some_and(|l| l != 2) {
                return Err(bad("family a2 has rank 2"));
            }
            let v = v2n_vector(a.n)?;
            if a.family == VectorFamily::A2Psi {
                psi(&v)
            } else {
                Ok(v)
            }
        }
    }
}

fn pipeline_rank(a: &PipelineArgs) -> affvoa::Result<usize> {
    if a.n == 0 {
        return Err(bad("n must be at least 1"));
    }
    match a.family {
        Family::Al => {
            let l = a.l.ok_or_else(|| bad("--l is required for family al"))?;
            if a.n != 1 {
                return Err(bad("family al is available for n = 1"));
            }
            Ok(l)
        }
        Family::A2 => match a.l {
            Some(l) if l != 2 => Err(bad("family a2 has rank 2")),
            _ => Ok(2),
        },
    }
}

fn known_polys(a: &PipelineArgs, l: usize) -> affvoa::Result<Vec<HPolynomial>> {
    match a.family {
        Family::Al => known_p0_vl1(l),
        Family::A2 => Ok(vec![known_p_a2(a.n)?]),
    }
}

fn expected_families(a: &PipelineArgs, l: usize) -> affvoa::Result<Vec<WeightFamily>> {
    match a.family {
        Family::Al => known_families_vl1(l),
        Family::A2 => Ok(known_families_a2(a.n)),
    }
}

fn singular_vector(a: &PipelineArgs, l: usize) -> affvoa::Result<VermaVector> {
    match a.family {
        Family::Al => vlm_vector(l, 1),
        Family::A2 => v2n_vector(a.n),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn run_extract(a: &PipelineArgs, cap: usize) -> affvoa::Result<ExtractP0Report> {
    let l = pipeline_rank(a)?;
    let uea = Uea::new(l)?;
    let v = zhu_image(&singular_vector(a, l)?, &uea)?;
    let module = generate_adjoint_module(&uea, &v, cap)?;
    let polys = extract_p0(&uea, &module)?;
    let known = known_polys(a, l)?;
    Ok(ExtractP0Report {
        rank: l,
        generator: v.to_string(),
        module_dim: module.dim(),
        zero_weight_dim: module.zero_weight_space().len(),
        weight_dims: module
            .weight_dims()
            .into_iter()
            .map(|(weight, dimension)| WeightDim { weight, dimension })
            .collect(),
        matches_known: same_span(&polys, &known)?,
        polynomials: strings(&polys),
        known: strings(&known),
    })
}

/// Executes a parsed subcommand.
pub fn execute(cmd: &Command, cap: usize) -> affvoa::Result<Report> {
    Ok(match cmd {
        Command::VerifySingular(a) => {
            let v = vector_for(a)?;
            let cert = is_singular(&v)?;
            Report::VerifySingular(VerifySingularReport {
                rank: v.rank(),
                level: fmt_rational(v.level()),
                degree: v.degree().ok_or(Error::NotHomogeneous)?,
                weight: v.weight().ok_or(Error::NotHomogeneous)?,
                terms: v.len(),
                vector: v.to_string(),
                checks: cert
                    .checks
                    .iter()
                    .map(|c| CheckLine { operator: c.operator.clone(), result: c.result.to_string() })
                    .collect(),
                singular: cert.singular,
            })
        }
        Command::SingularSpace(a) => {
            let level = parse_rational(&a.level)?;
            let s = singular_space(a.l, level, a.degree, cap)?;
            Report::SingularSpace(SingularSpaceReport {
                rank: s.rank,
                level: fmt_rational(&s.level),
                degree: s.degree,
                graded_dimension: s.graded_dimension,
                dimension: s.dimension(),
                by_weight: s.by_weight.iter().map(|(w, d)| WeightDim { weight: w.clone(), dimension: *d }).collect(),
                basis: strings(&s.basis),
            })
        }
        Command::Char(a) => {
            let coefficients = graded_dimensions(a.l, a.max_degree)?
                .iter()
                .map(|c| u64::try_from(c).map_err(|_| Error::Overflow("graded dimension")))
                .collect::<affvoa::Result<_>>()?;
            Report::Char(CharReport { rank: a.l, coefficients })
        }
        Command::ZhuImage(a) => {
            let v = vector_for(a)?;
            let uea = Uea::new(v.rank())?;
            let image = zhu_image(&v, &uea)?;
            let known = match (a.family, a.n) {
                (VectorFamily::Al, 1) => Some(known_vprime_l1(&uea)?),
                (VectorFamily::A2, n) => Some(known_vprime_a2(&uea, n)?),
                _ => None,
            };
            Report::ZhuImage(ZhuImageReport {
                rank: v.rank(),
                terms: image.len(),
                matches_known: known.as_ref().map(|k| *k == image),
                known: known.map(|k| k.to_string()),
                image: image.to_string(),
            })
        }
        Command::ExtractP0(a) => Report::ExtractP0(run_extract(a, cap)?),
        Command::Classify(c) => {
            let a = &c.pipeline;
            let l = pipeline_rank(a)?;
            let polys = match c.source {
                PolySource::Known => known_polys(a, l)?,
                PolySource::Computed => {
                    let uea = Uea::new(l)?;
                    let v = zhu_image(&singular_vector(a, l)?, &uea)?;
                    extract_p0(&uea, &generate_adjoint_module(&uea, &v, cap)?)?
                }
            };
            let families = classify(&polys, l)?;
            let expected = expected_families(a, l)?;
            let all_satisfy = families
                .iter()
                .map(|f| family_satisfies(f, &polys))
                .collect::<affvoa::Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
            Report::Classify(ClassifyReport {
                rank: l,
                polynomials: strings(&polys),
                matches_expected: families == expected,
                all_satisfy,
                families,
                expected,
            })
        }
        Command::Dims(a) => {
            let lam = parse_weight(a.l, &a.weight)?;
            let table = weight_multiplicities_capped(a.l, &Weight::from_ints(&lam), cap)?;
            Report::Dims(DimsReport {
                rank: a.l,
                dim: weyl_dim(a.l, &Weight::from_ints(&lam))?,
                zero_weight_dim: table.multiplicity(&vec![0; a.l]),
                distinct_weights: table.len(),
                multiplicities: a.multiplicities.then(|| {
                    table.entries().map(|(w, m)| WeightMultiplicity { weight: w.clone(), multiplicity: *m }).collect()
                }),
                weight: lam,
            })
        }
        Command::Branch(a) => {
            let lam = parse_weight(a.l, &a.weight)?;
            let summands = branch_to_subalgebra_capped(a.l, &Weight::from_ints(&lam), cap)?;
            let summands: Vec<Summand> = summands
                .into_iter()
                .map(|s| Summand { highest: s.highest, multiplicity: s.multiplicity, dim: s.dim })
                .collect();
            Report::Branch(BranchReport {
                rank: a.l,
                dim: weyl_dim(a.l, &Weight::from_ints(&lam))?,
                summand_dim_total: summands.iter().map(|s| s.multiplicity * s.dim).sum(),
                summands,
                weight: lam,
            })
        }
        Command::CheckLemma64(a) => {
            if a.n == 0 {
                return Err(bad("n must be at least 1"));
            }
            let c = check_lemma64(&Uea::new(2)?, a.n)?;
            Report::CheckLemma64(Lemma64Report {
                n: a.n,
                holds: c.holds(),
                computed: c.computed.to_string(),
                expected: c.expected.to_string(),
            })
        }
        Command::CheckIdentities(a) => {
            let relations = check_uea_relations(a.max_rank, a.max_exp)?;
            let properties = run_property_suite(a.seed, a.cases)?;
            let passed = relations.iter().chain(&properties).all(affvoa::IdentityReport::passed);
            Report::CheckIdentities(IdentitiesReport { relations, properties, passed })
        }
    })
}
