//! Seeded random setups for the equivalence checks.
//!
//! Instance `k` of a run with master seed `s` is drawn from a ChaCha8
//! stream keyed by `(s, k)`, so a single instance can be regenerated
//! without replaying the others and results do not depend on scheduling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{AlgebraError, ErrorClass, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::quotient::{is_regular_sequence, krull_dim};
use crate::ring::{monomials_of_degree, Ring, RingSpec};
use crate::socle::socle_profile;
use crate::theorem::{check_theorem, gorenstein_explore, CISetup, CheckError, TheoremReport};

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];
const PRIMES: [u64; 3] = [2, 3, 5];
const MAX_FUZZ_Q: u64 = 9;
const ATTEMPTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// Complete intersections; disagreements are inconsistencies.
    Ci,
    /// Artinian Gorenstein non-CI `C`; disagreements are findings.
    Explore,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Monomial,
    Binomial,
    Mixed,
    GorensteinNonCi,
}

/// Everything needed to rebuild a setup, with polynomials in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub index: u64,
    pub family: Family,
    pub p: u64,
    pub vars: Vec<(String, u64)>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    pub e: u32,
}

impl Instance {
    pub fn ring(&self) -> Result<Ring> {
        RingSpec::new(self.p, &self.vars)
    }

    pub fn setup(&self, profile: Profile) -> Result<CISetup> {
        let ring = self.ring()?;
        let c = Ideal::parse(&ring, &self.c)?;
        let i = Ideal::parse(&ring, &self.i)?;
        match profile {
            Profile::Ci => CISetup::new(&ring, c, i, self.e),
            Profile::Explore => CISetup::gorenstein(&ring, c, i, self.e, false),
        }
    }

    fn canonical(&self) -> String {
        let vars: Vec<String> = self.vars.iter().map(|(n, w)| format!("{n}:{w}")).collect();
        format!(
            "p={};vars={};C=[{}];I=[{}];e={}",
            self.p,
            vars.join(","),
            self.c.join(","),
            self.i.join(","),
            self.e
        )
    }
}

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws instance `index` of the run seeded by `seed`, with `q <= min(9, q_cap)`.
pub fn generate(seed: u64, index: u64, profile: Profile, q_cap: u64) -> Result<Instance> {
    let mut rng = instance_rng(seed, index);
    let q_limit = q_cap.min(MAX_FUZZ_Q);
    match profile {
        Profile::Ci => generate_ci(&mut rng, index, q_limit),
        Profile::Explore => generate_explore(&mut rng, index, q_limit),
    }
}

fn pick_p_e(rng: &mut ChaCha8Rng, q_limit: u64) -> Result<(u64, u32)> {
    let primes: Vec<u64> = PRIMES.iter().copied().filter(|&p| p <= q_limit).collect();
    let &p = primes
        .choose(rng)
        .ok_or_else(|| AlgebraError::OutOfRange(format!("q cap {q_limit} admits no characteristic")))?;
    let es: Vec<u32> = (1..=2).filter(|&e| p.pow(e) <= q_limit).collect();
    Ok((p, *es.choose(rng).expect("e = 1 always fits")))
}

fn max_exp(n: usize) -> u32 {
    if n == 2 {
        3
    } else {
        2
    }
}

fn pure_power(ring: &Ring, v: usize, a: u32) -> Polynomial {
    let mut exps = vec![0; ring.nvars()];
    exps[v] = a;
    Polynomial::term(ring, 1, ring.monomial(exps))
}

fn random_monomial(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<u32> {
    loop {
        let exps: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..=2)).collect();
        if exps.iter().any(|&a| a > 0) {
            return exps;
        }
    }
}

fn draw_ring(p: u64, n: usize, weights: Vec<u64>) -> Result<Ring> {
    let vars: Vec<(&str, u64)> = VAR_NAMES[..n].iter().copied().zip(weights).collect();
    RingSpec::new(p, &vars)
}

/// Pure powers of distinct variables, some multiplied by a power of a
/// variable no other generator uses, so the generators are pairwise coprime.
fn monomial_ci(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<Polynomial> {
    let n = ring.nvars();
    let c = rng.gen_range(0..=n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut spare = order[c..].to_vec();
    order[..c]
        .iter()
        .map(|&v| {
            let mut exps = vec![0; n];
            exps[v] = rng.gen_range(1..=max_exp(n));
            if !spare.is_empty() && rng.gen_bool(0.3) {
                let u = spare.pop().expect("checked non-empty");
                exps[u] = rng.gen_range(1..=2);
            }
            Polynomial::term(ring, 1, ring.monomial(exps))
        })
        .collect()
}

/// `u^a + λ v^b` of matching weighted degree, then pure powers of the
/// remaining variables, then a pure power of `u` if `c = n`.
fn binomial_ci(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<Polynomial> {
    let n = ring.nvars();
    let c = rng.gen_range(1..=n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let (u, v) = (order[0], order[1]);
    let (wu, wv) = (ring.weights()[u], ring.weights()[v]);
    let l = lcm(wu, wv);
    let k = if l == 1 { rng.gen_range(1..=max_exp(n)) as u64 } else { rng.gen_range(1..=2) };
    let (a, b) = ((l * k / wu) as u32, (l * k / wv) as u32);
    let lambda = rng.gen_range(1..ring.characteristic());
    let binomial = pure_power(ring, u, a)
        .checked_add(&pure_power(ring, v, b).scale(lambda))
        .expect("same ring");
    let mut gens = vec![binomial];
    for &w in order[2..].iter().take(c - 1) {
        gens.push(pure_power(ring, w, rng.gen_range(1..=max_exp(n))));
    }
    if gens.len() < c {
        gens.push(pure_power(ring, u, rng.gen_range(1..=max_exp(n))));
    }
    gens
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Pure powers and small monomials, optionally one binomial, optionally
/// the generators of `C`; then pure powers until `C + I` is m-primary.
fn lifting(rng: &mut ChaCha8Rng, ring: &Ring, c: &[Polynomial], with_binomial: bool) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let mut gens = Vec::new();
    for v in 0..n {
        if rng.gen_bool(0.6) {
            gens.push(pure_power(ring, v, rng.gen_range(1..=max_exp(n))));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let exps = random_monomial(rng, ring);
        gens.push(Polynomial::term(ring, 1, ring.monomial(exps)));
    }
    if with_binomial {
        let m1 = ring.monomial(random_monomial(rng, ring));
        let others: Vec<Vec<u32>> = monomials_of_degree(ring.weights(), m1.degree())
            .into_iter()
            .filter(|e| e.as_slice() != m1.exps())
            .collect();
        if let Some(m2) = others.choose(rng) {
            let lambda = rng.gen_range(1..ring.characteristic());
            let m2 = Polynomial::term(ring, lambda, ring.monomial(m2.clone()));
            gens.push(Polynomial::term(ring, 1, m1).checked_add(&m2)?);
        }
    }
    if rng.gen_bool(0.15) {
        gens.extend(c.iter().cloned());
    }
    loop {
        let sum = Ideal::new(ring, c.iter().chain(&gens).cloned().collect())?;
        if krull_dim(&sum)? == 0 {
            return Ok(gens);
        }
        let missing: Vec<usize> = (0..n)
            .filter(|&v| !sum.gb().leading_monomials().any(|m| m.support().eq([v])))
            .collect();
        let &v = missing
            .choose(rng)
            .ok_or_else(|| AlgebraError::Internal("positive dimension with every pure power present".into()))?;
        gens.push(pure_power(ring, v, rng.gen_range(1..=max_exp(n))));
    }
}

fn strings(gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn generate_ci(rng: &mut ChaCha8Rng, index: u64, q_limit: u64) -> Result<Instance> {
    let (p, e) = pick_p_e(rng, q_limit)?;
    let n = rng.gen_range(2..=3);
    let mut weights = vec![1; n];
    if rng.gen_bool(0.2) {
        weights[rng.gen_range(0..n)] = 2;
    }
    let ring = draw_ring(p, n, weights)?;
    let family = match rng.gen_range(0..10) {
        0..=5 => Family::Monomial,
        6..=8 => Family::Binomial,
        _ => Family::Mixed,
    };
    for _ in 0..ATTEMPTS {
        let c = match family {
            Family::Monomial => monomial_ci(rng, &ring),
            _ => binomial_ci(rng, &ring),
        };
        if !is_regular_sequence(&ring, &c)? {
            continue;
        }
        let i = lifting(rng, &ring, &c, family == Family::Mixed)?;
        return Ok(Instance {
            index,
            family,
            p,
            vars: ring_vars(&ring),
            c: strings(&c),
            i: strings(&i),
            e,
        });
    }
    Err(AlgebraError::Internal("no regular sequence drawn".into()))
}

fn ring_vars(ring: &Ring) -> Vec<(String, u64)> {
    ring.names().iter().cloned().zip(ring.weights().iter().copied()).collect()
}

/// `(x^k y, x^k z, yz, x^2k - a y^2, x^2k - b z^2)` with weights `(1, k, k)`:
/// artinian Gorenstein with Hilbert function `1, 3, 1` in steps of `k`, and
/// five generators in three variables.
fn generate_explore(rng: &mut ChaCha8Rng, index: u64, q_limit: u64) -> Result<Instance> {
    let (p, e) = pick_p_e(rng, q_limit)?;
    let k = if rng.gen_bool(0.3) { 2 } else { 1 };
    let ring = draw_ring(p, 3, vec![1, k, k])?;
    let k = k as u32;
    let mono = |exps: [u32; 3]| Polynomial::term(&ring, 1, ring.monomial(exps.to_vec()));
    for _ in 0..ATTEMPTS {
        let a = rng.gen_range(1..ring.characteristic());
        let b = rng.gen_range(1..ring.characteristic());
        let c = vec![
            mono([k, 1, 0]),
            mono([k, 0, 1]),
            mono([0, 1, 1]),
            mono([2 * k, 0, 0]).checked_sub(&mono([0, 2, 0]).scale(a))?,
            mono([2 * k, 0, 0]).checked_sub(&mono([0, 0, 2]).scale(b))?,
        ];
        if socle_profile(&Ideal::new(&ring, c.clone())?)?.ell != 1 {
            continue;
        }
        let mut i: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| Polynomial::term(&ring, 1, ring.monomial(random_monomial(rng, &ring))))
            .collect();
        if rng.gen_bool(0.3) {
            i.extend(c.iter().cloned());
        }
        return Ok(Instance {
            index,
            family: Family::GorensteinNonCi,
            p,
            vars: ring_vars(&ring),
            c: strings(&c),
            i: strings(&i),
            e,
        });
    }
    Err(AlgebraError::Internal("no Gorenstein ideal drawn".into()))
}

/// Compact per-instance verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    pub tor1_dim: u64,
    pub linkage_identity: Option<bool>,
    pub tsd_lhs: i64,
    pub tsd_rhs: i64,
    pub frobenius_additive: bool,
    pub consistent: bool,
}

impl From<&TheoremReport> for Verdict {
    fn from(r: &TheoremReport) -> Self {
        Verdict {
            cond_b: r.cond_b,
            cond_c: r.cond_c,
            cond_d: r.cond_d,
            tor1_dim: r.tor1_dim.total,
            linkage_identity: r.linkage_identity,
            tsd_lhs: r.tsd_inequality.lhs,
            tsd_rhs: r.tsd_inequality.rhs,
            frobenius_additive: r.frobenius_additive,
            consistent: r.consistent,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    /// A must-hold check failed on a complete intersection.
    Inconsistent,
    /// The conditions disagree in the Gorenstein exploration.
    Finding,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: u64,
    pub digest: String,
    pub status: Status,
    pub instance: Option<Instance>,
    pub verdict: Option<Verdict>,
    /// Full report for inconsistencies and findings.
    pub report: Option<TheoremReport>,
    pub error_class: Option<ErrorClass>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub count: u64,
    pub profile: Profile,
    pub q_cap: u64,
    pub instances_run: u64,
    /// Verdict keys such as `b=T c=T d=T tor1=0`, with counts.
    pub histogram: BTreeMap<String, u64>,
    pub linkage_checked: u64,
    pub linkage_failures: u64,
    pub tsd_failures: u64,
    /// Instances with `c = 0`, where the top-socle bound is an equality.
    pub regular_instances: u64,
    pub regular_tsd_equalities: u64,
    pub inconsistencies: Vec<u64>,
    pub findings: Vec<u64>,
    pub errors: Vec<u64>,
    pub instances: Vec<InstanceOutcome>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.inconsistencies.is_empty() && self.errors.is_empty()
    }
}

fn digest(instance: Option<&Instance>, tail: &str) -> String {
    let mut h = Sha256::new();
    h.update(instance.map(Instance::canonical).unwrap_or_default());
    h.update(b"|");
    h.update(tail);
    hex::encode(h.finalize())
}

pub fn run_instance(seed: u64, index: u64, profile: Profile, q_cap: u64) -> InstanceOutcome {
    let fail = |instance: Option<Instance>, e: AlgebraError| {
        let msg = e.to_string();
        InstanceOutcome {
            index,
            digest: digest(instance.as_ref(), &format!("error:{msg}")),
            status: Status::Error,
            instance,
            verdict: None,
            report: None,
            error_class: Some(e.class()),
            error: Some(msg),
        }
    };
    let instance = match generate(seed, index, profile, q_cap) {
        Ok(i) => i,
        Err(e) => return fail(None, e),
    };
    let setup = match instance.setup(profile) {
        Ok(s) => s,
        Err(e) => return fail(Some(instance), e),
    };
    let (status, report) = match profile {
        Profile::Ci => match check_theorem(&setup) {
            Ok(r) => (Status::Passed, r),
            Err(CheckError::Inconsistent(r)) => (Status::Inconsistent, *r.0),
            Err(CheckError::Algebra(e)) => return fail(Some(instance), e),
        },
        Profile::Explore => match gorenstein_explore(&setup) {
            Ok(r) if r.consistent => (Status::Passed, r),
            Ok(r) => (Status::Finding, r),
            Err(e) => return fail(Some(instance), e),
        },
    };
    let verdict = Verdict::from(&report);
    InstanceOutcome {
        index,
        digest: digest(Some(&instance), &format!("{verdict:?}")),
        status,
        instance: Some(instance),
        verdict: Some(verdict),
        report: (status != Status::Passed).then_some(report),
        error_class: None,
        error: None,
    }
}

/// Runs instances `0..count` in parallel and aggregates them in index order.
pub fn run_fuzz(seed: u64, count: u64, profile: Profile, q_cap: u64) -> Result<FuzzReport> {
    if count == 0 {
        return Err(AlgebraError::OutOfRange("count must be at least 1".into()));
    }
    let outcomes: Vec<InstanceOutcome> = (0..count)
        .into_par_iter()
        .map(|k| run_instance(seed, k, profile, q_cap))
        .collect();
    let mut report = FuzzReport {
        seed,
        count,
        profile,
        q_cap,
        instances_run: 0,
        histogram: BTreeMap::new(),
        linkage_checked: 0,
        linkage_failures: 0,
        tsd_failures: 0,
        regular_instances: 0,
        regular_tsd_equalities: 0,
        inconsistencies: Vec::new(),
        findings: Vec::new(),
        errors: Vec::new(),
        instances: Vec::new(),
    };
    for o in &outcomes {
        match o.status {
            Status::Inconsistent => report.inconsistencies.push(o.index),
            Status::Finding => report.findings.push(o.index),
            Status::Error => {
                report.errors.push(o.index);
                continue;
            }
            Status::Passed => {}
        }
        report.instances_run += 1;
        let v = o.verdict.as_ref().expect("verdict present unless errored");
        let t = |b: bool| if b { 'T' } else { 'F' };
        let key = format!(
            "b={} c={} d={} tor1={}",
            t(v.cond_b),
            t(v.cond_c),
            t(v.cond_d),
            if v.tor1_dim == 0 { "0" } else { ">0" }
        );
        *report.histogram.entry(key).or_default() += 1;
        if let Some(l) = v.linkage_identity {
            report.linkage_checked += 1;
            report.linkage_failures += u64::from(!l);
        }
        report.tsd_failures += u64::from(v.tsd_lhs < v.tsd_rhs);
        if o.instance.as_ref().is_some_and(|i| i.c.is_empty()) {
            report.regular_instances += 1;
            report.regular_tsd_equalities += u64::from(v.tsd_lhs == v.tsd_rhs);
        }
    }
    report.instances = outcomes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_reproducible_and_valid() {
        for k in 0..40 {
            let a = generate(7, k, Profile::Ci, 32).unwrap();
            assert_eq!(a, generate(7, k, Profile::Ci, 32).unwrap());
            assert!(a.e >= 1 && a.p.pow(a.e) <= MAX_FUZZ_Q);
            a.setup(Profile::Ci).unwrap();
        }
        assert_ne!(generate(7, 0, Profile::Ci, 32).unwrap(), generate(8, 0, Profile::Ci, 32).unwrap());
    }

    #[test]
    fn q_cap_limits_draws() {
        for k in 0..20 {
            let a = generate(3, k, Profile::Ci, 2).unwrap();
            assert_eq!((a.p, a.e), (2, 1));
        }
        assert!(matches!(generate(3, 0, Profile::Ci, 1), Err(AlgebraError::OutOfRange(_))));
    }

    #[test]
    fn explore_instances_are_gorenstein_non_ci() {
        for k in 0..10 {
            let a = generate(11, k, Profile::Explore, 32).unwrap();
            let s = a.setup(Profile::Explore).unwrap();
            assert_eq!(s.kind(), crate::theorem::RingKind::Gorenstein);
            assert!(a.setup(Profile::Ci).is_err());
        }
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let a = run_fuzz(5, 12, Profile::Ci, 32).unwrap();
        assert!(a.is_clean(), "{a:?}");
        assert_eq!(a.instances_run, 12);
        assert_eq!(a.histogram.values().sum::<u64>(), 12);
        assert_eq!(a, run_fuzz(5, 12, Profile::Ci, 32).unwrap());
        assert!(run_fuzz(5, 0, Profile::Ci, 32).is_err());
    }
}
