//! Command implementations behind the `gcover` binary.

pub mod document;
pub mod problem;

use gcover::apolarity::{algebra_profile, check_cover, CoverCheck, InverseSystemBasis};
use gcover::arith::{QMatrix, Rational};
use gcover::integrator::{integrate_power, IntegratorError};
use gcover::inverse_system::{inverse_system, DualBasisWithContractions, InverseSystemError};
use gcover::mgc::{
    mgc2_ideals, mgc2_matrices, sample_and_certify, teter_variety, GenericCover, MgcError, PointOutcome,
    VarietyPresentation,
};
use thiserror::Error;

use document::{
    canonical, Certification, InputEcho, MatrixBlock, Presentation, ProfileBlock, ResultBlock, ResultDocument,
    SampledPoint,
};
use problem::{ProblemError, ProblemFile};

pub const ENGINE: &str = concat!("gcover ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ProblemError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("the ideal is not m-primary: {0}")]
    NotPrimary(String),
    #[error("gcl = 0: the algebra is Gorenstein")]
    Gorenstein,
    #[error("gcl = 1: the Teter variety is nonempty")]
    Teter,
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::NotPrimary(_) => 3,
            CliError::Gorenstein => 4,
            CliError::Teter => 5,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}

impl From<InverseSystemError> for CliError {
    fn from(e: InverseSystemError) -> Self {
        match e {
            InverseSystemError::NotMPrimary { .. } | InverseSystemError::UnitIdeal => CliError::NotPrimary(e.to_string()),
            InverseSystemError::NoGenerators | InverseSystemError::VariableCount { .. } => {
                CliError::Invalid(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<IntegratorError> for CliError {
    fn from(e: IntegratorError) -> Self {
        match e {
            IntegratorError::InverseSystem(e) => e.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<MgcError> for CliError {
    fn from(e: MgcError) -> Self {
        match e {
            MgcError::Gorenstein => CliError::Gorenstein,
            MgcError::TeterNonEmpty => CliError::Teter,
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Profile,
    Dual,
    Integrate,
    Teter,
    Mgc2,
    CheckCover,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Profile => "profile",
            Command::Dual => "dual",
            Command::Integrate => "integrate",
            Command::Teter => "teter",
            Command::Mgc2 => "mgc2",
            Command::CheckCover => "check-cover",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub power: usize,
    pub matrices: bool,
    pub certify: Option<usize>,
    pub seed: u64,
    pub degree_cap: Option<u32>,
}

impl Default for Options {
    fn default() -> Self {
        Options { power: 1, matrices: false, certify: None, seed: 0, degree_cap: None }
    }
}

fn matrix_block(m: &QMatrix) -> MatrixBlock {
    (0..m.rows()).map(|i| m.row(i).iter().map(Rational::to_string).collect()).collect()
}

fn matrices_of(d: &DualBasisWithContractions) -> Vec<MatrixBlock> {
    d.contraction_matrices().iter().map(matrix_block).collect()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

fn presentation(p: &VarietyPresentation) -> Presentation {
    Presentation {
        ambient_dim: p.ambient_dim(),
        coordinates: p.coordinates().to_vec(),
        keep: canonical(p.keep.gens()),
        remove: canonical(p.remove.gens()),
    }
}

fn certify(p: &VarietyPresentation, cover: &GenericCover, trials: usize, seed: u64) -> Certification {
    let report = sample_and_certify(p, cover, trials, seed);
    let points = report
        .points
        .iter()
        .map(|pt| SampledPoint {
            point: strings(&pt.point),
            polynomial: pt.h.to_string(),
            removed: pt.removed,
            cover: pt.is_expected_cover(report.colength),
            colength: match pt.outcome {
                PointOutcome::Cover { colength, .. } => Some(colength),
                PointOutcome::NotCover => None,
            },
        })
        .collect();
    Certification {
        seed,
        trials,
        certified_covers: report.certified_covers(),
        certified_failures: report.certified_failures(),
        all_agree: report.all_agree(),
        exhausted: report.exhausted,
        points,
    }
}

/// Runs one command on a parsed problem.
pub fn run(cmd: Command, problem: &ProblemFile, opts: &Options) -> Result<ResultDocument, CliError> {
    let dual = inverse_system(&problem.generators(), opts.degree_cap)?;
    let iperp: InverseSystemBasis = dual.to_inverse_system();
    let p = algebra_profile(&iperp);
    let profile = ProfileBlock {
        length: p.length,
        hilbert: p.hilbert.clone(),
        socle_degree: p.socle_degree,
        cm_type: p.cm_type,
        emb_dim: p.emb_dim,
    };
    let result = match cmd {
        Command::Profile => ResultBlock::Profile,
        Command::Dual => ResultBlock::Dual {
            basis: strings(dual.basis()),
            matrices: opts.matrices.then(|| matrices_of(&dual)),
        },
        Command::Integrate => {
            let ai = integrate_power(&dual, opts.power)?;
            ResultBlock::Integrate {
                power: opts.power,
                base: strings(dual.basis()),
                layers: ai.layers().iter().map(|l| strings(l)).collect(),
                h: ai.h(),
                matrices: opts.matrices.then(|| matrices_of(ai.full())),
            }
        }
        Command::Teter => {
            let tv = teter_variety(&integrate_power(&dual, 1)?)?;
            ResultBlock::Teter {
                cover: tv.cover.to_string(),
                teter: tv.is_teter(),
                a: canonical(tv.presentation.remove.gens()),
                presentation: presentation(&tv.presentation),
                certification: opts.certify.map(|n| certify(&tv.presentation, &tv.cover, n, opts.seed)),
            }
        }
        Command::Mgc2 => {
            let m = mgc2_matrices(&integrate_power(&dual, 2)?)?;
            let ids = mgc2_ideals(&m)?;
            ResultBlock::Mgc2 {
                cover: m.cover.to_string(),
                b: canonical(ids.b.gens()),
                d_hat: canonical(ids.d_hat.gens()),
                nonempty: !ids.presentation.is_empty(),
                presentation: presentation(&ids.presentation),
                certification: opts.certify.map(|n| certify(&ids.presentation, &m.cover, n, opts.seed)),
            }
        }
        Command::CheckCover => {
            let f = problem
                .dualpoly
                .as_ref()
                .ok_or_else(|| CliError::Invalid("check-cover needs a `dualpoly` statement".into()))?;
            match check_cover(&iperp, f) {
                CoverCheck::ZeroPolynomial => return Err(CliError::Invalid("the dual polynomial is zero".into())),
                CoverCheck::Rejected { witness } => ResultBlock::CheckCover {
                    dualpoly: f.to_string(),
                    cover: false,
                    colength: None,
                    length_cover: None,
                    k_f: None,
                    witness: Some(witness.to_string()),
                },
                CoverCheck::Cover(c) => ResultBlock::CheckCover {
                    dualpoly: f.to_string(),
                    cover: true,
                    colength: Some(c.colength),
                    length_cover: Some(c.length_g),
                    k_f: Some(canonical(&c.kf)),
                    witness: None,
                },
            }
        }
    };
    Ok(ResultDocument {
        engine: ENGINE.to_string(),
        command: cmd.name().to_string(),
        input: InputEcho {
            vars: problem.vars.clone(),
            ideal: strings(&problem.ideal),
            dualpoly: problem.dualpoly.as_ref().map(|f| f.to_string()),
        },
        profile,
        result,
        elapsed_ms: None,
    })
}
