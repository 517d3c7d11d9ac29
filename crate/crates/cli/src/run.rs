//! Dispatch of validated jobs to the algebra engine.

use std::time::Instant;

use frobsoc_core::error::ErrorClass;
use frobsoc_core::fuzz::{run_fuzz, FuzzReport};
use frobsoc_core::homology::{koszul_betti, socle_from_betti};
use frobsoc_core::quotient::hilbert_function;
use frobsoc_core::socle::socle_profile;
use frobsoc_core::theorem::{check_theorem, gorenstein_explore, tor1_dim, CheckError, Tor1};
use frobsoc_core::{AlgebraError, BettiTable, CISetup, HilbertFunction, Ideal, Ring, RingSpec, SocleProfile, TheoremReport};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::job::{parse_job, JobSpec, Mode};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum JobResult {
    Check {
        reports: Vec<TheoremReport>,
    },
    Explore {
        reports: Vec<TheoremReport>,
    },
    Socle {
        socle: SocleProfile,
        hilbert_function: HilbertFunction,
    },
    Betti {
        betti: BettiTable,
        grid: String,
        socle_from_betti: Vec<i64>,
    },
    Gb {
        gb: Vec<String>,
    },
    Tor1 {
        e: u32,
        q: u64,
        tor1_dim: Tor1,
    },
    Fuzz(Box<FuzzReport>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Malformed,
    Hypothesis,
    Inconsistent,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Malformed => 1,
            Status::Hypothesis => 2,
            Status::Inconsistent => 3,
        }
    }

    fn of(class: ErrorClass) -> Status {
        match class {
            ErrorClass::Malformed => Status::Malformed,
            ErrorClass::Hypothesis => Status::Hypothesis,
            ErrorClass::Internal => Status::Inconsistent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub message: String,
    /// The report whose checks disagreed, for inconsistencies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Box<TheoremReport>>,
}

/// The single document written to standard output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub version: String,
    pub status: Status,
    pub job: Option<JobSpec>,
    pub result: Option<JobResult>,
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub timing_ms: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// The report as JSON with `timing_ms` removed, for byte comparisons.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if let Value::Object(m) = &mut v {
            m.remove("timing_ms");
        }
        v.to_string()
    }
}

#[derive(Debug)]
struct Failure {
    status: Status,
    info: ErrorInfo,
}

impl Failure {
    fn at(path: &str, e: AlgebraError) -> Failure {
        Failure {
            status: Status::of(e.class()),
            info: ErrorInfo {
                message: format!("{path}: {e}"),
                report: None,
            },
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure {
            status: Status::of(e.class()),
            info: ErrorInfo {
                message: e.to_string(),
                report: None,
            },
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Algebra(e) => e.into(),
            CheckError::Inconsistent(r) => Failure {
                status: Status::Inconsistent,
                info: ErrorInfo {
                    message: format!("internal inconsistency: {}", r.0.verdict_key()),
                    report: Some(r.0),
                },
            },
        }
    }
}

fn ring_of(job: &JobSpec) -> Result<Ring, Failure> {
    let p = job.p.expect("validated");
    RingSpec::new(p, &job.vars).map_err(|e| Failure::at("$.vars", e))
}

fn ideal_of(ring: &Ring, gens: &[String], field: &str) -> Result<Ideal, Failure> {
    let mut polys = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let f = frobsoc_core::parse_poly(g, ring).map_err(|e| Failure::at(&format!("$.{field}[{k}]"), e))?;
        polys.push(f);
    }
    Ideal::new(ring, polys).map_err(|e| Failure::at(&format!("$.{field}"), e))
}

/// `C + I`, the ideal the socle, Betti and Gröbner modes act on.
fn combined(job: &JobSpec) -> Result<Ideal, Failure> {
    let ring = ring_of(job)?;
    let c = ideal_of(&ring, &job.c, "C")?;
    let i = ideal_of(&ring, &job.i, "I")?;
    Ok(c.sum(&i)?)
}

fn setups(job: &JobSpec) -> Result<Vec<CISetup>, Failure> {
    let ring = ring_of(job)?;
    let c = ideal_of(&ring, &job.c, "C")?;
    let i = ideal_of(&ring, &job.i, "I")?;
    let e = job.e.expect("validated");
    let first = match job.mode {
        Mode::Explore => CISetup::gorenstein(&ring, c, i, e, job.options.assume_gorenstein)?,
        _ => CISetup::new(&ring, c, i, e)?,
    };
    let top = job.options.all_e_up_to.unwrap_or(e);
    let mut out = Vec::new();
    for k in e..=top {
        let s = first.with_e(k)?;
        if s.q() > job.options.q_cap {
            return Err(AlgebraError::OutOfRange(format!(
                "q = {} exceeds the q cap {} (options.q-cap)",
                s.q(),
                job.options.q_cap
            ))
            .into());
        }
        out.push(s);
    }
    Ok(out)
}

fn dispatch(job: &JobSpec) -> Result<JobResult, Failure> {
    Ok(match job.mode {
        Mode::Check => {
            let mut reports = Vec::new();
            for s in setups(job)? {
                reports.push(check_theorem(&s)?);
            }
            JobResult::Check { reports }
        }
        Mode::Explore => {
            let mut reports = Vec::new();
            for s in setups(job)? {
                reports.push(gorenstein_explore(&s)?);
            }
            JobResult::Explore { reports }
        }
        Mode::Tor1 => {
            let s = setups(job)?.swap_remove(0);
            JobResult::Tor1 {
                e: s.e(),
                q: s.q(),
                tor1_dim: tor1_dim(&s)?,
            }
        }
        Mode::Socle => {
            let ideal = combined(job)?;
            JobResult::Socle {
                socle: socle_profile(&ideal)?,
                hilbert_function: hilbert_function(&ideal)?,
            }
        }
        Mode::Betti => {
            let ideal = combined(job)?;
            let betti = koszul_betti(&ideal)?;
            let mut from_betti = socle_from_betti(&ideal)?;
            from_betti.sort_unstable();
            JobResult::Betti {
                grid: betti.grid(),
                betti,
                socle_from_betti: from_betti,
            }
        }
        Mode::Gb => {
            let ideal = combined(job)?;
            JobResult::Gb {
                gb: ideal.gb().elements().iter().map(|g| g.to_string()).collect(),
            }
        }
        Mode::Fuzz => {
            let o = &job.options;
            JobResult::Fuzz(Box::new(run_fuzz(o.seed, o.count, o.profile, o.q_cap)?))
        }
    })
}

/// Reproduction data for every instance that failed a must-hold check.
fn fuzz_failure(r: &FuzzReport) -> Option<ErrorInfo> {
    if r.is_clean() {
        return None;
    }
    let lines: Vec<String> = r
        .inconsistencies
        .iter()
        .chain(&r.errors)
        .map(|&k| {
            let o = &r.instances[k as usize];
            let what = match &o.instance {
                Some(i) => format!("p={} vars={:?} C={:?} I={:?} e={}", i.p, i.vars, i.c, i.i, i.e),
                None => "generation failed".into(),
            };
            format!("seed {} index {k}: {what}", r.seed)
        })
        .collect();
    Some(ErrorInfo {
        message: format!(
            "{} inconsistencies, {} errors: {}",
            r.inconsistencies.len(),
            r.errors.len(),
            lines.join("; ")
        ),
        report: None,
    })
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Runs an already validated job.
pub fn run_job(job: &JobSpec) -> Report {
    let start = Instant::now();
    let outcome = dispatch(job);
    let timing_ms = start.elapsed().as_millis() as u64;
    let seed = (job.mode == Mode::Fuzz).then_some(job.options.seed);
    match outcome {
        Ok(result) => {
            let error = match &result {
                JobResult::Fuzz(r) => fuzz_failure(r),
                _ => None,
            };
            Report {
                schema_version: SCHEMA_VERSION,
                version: version(),
                status: if error.is_some() { Status::Inconsistent } else { Status::Ok },
                job: Some(job.clone()),
                result: Some(result),
                error,
                seed,
                timing_ms,
            }
        }
        Err(f) => Report {
            schema_version: SCHEMA_VERSION,
            version: version(),
            status: f.status,
            job: Some(job.clone()),
            result: None,
            error: Some(f.info),
            seed,
            timing_ms,
        },
    }
}

/// Validates and runs a job document.
pub fn run_document(doc: &Value) -> Report {
    match parse_job(doc) {
        Ok(job) => run_job(&job),
        Err(e) => malformed(e.to_string()),
    }
}

pub fn malformed(message: String) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        version: version(),
        status: Status::Malformed,
        job: None,
        result: None,
        error: Some(ErrorInfo { message, report: None }),
        seed: None,
        timing_ms: 0,
    }
}
