//! Socle degrees of Frobenius powers over complete intersections.
//!
//! For `R = P/C` with `C` generated by a homogeneous regular sequence and
//! `S = P/(C + I)` artinian, with socle degrees `d_1 <= ... <= d_l`, the
//! following are equivalent:
//!
//! * (a) `S` has finite projective dimension over `R`,
//! * (b) the socle of `P/(C + I^[q])` has dimension `l` and degrees
//!   `q d_i - (q - 1) a(R)`,
//! * (c) `(C + I)^[q] : (C^[q] : C) = C + I^[q]`,
//! * (d) `I^[q] ∩ C = (I ∩ C)^[q] + C I^[q]`.
//!
//! (a) is not computed directly; it is reported through the vanishing of
//! `Tor_1^R(S, F^e R) = (I^[q] ∩ C) / ((I ∩ C)^[q] + I^[q] C)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::homology::{a_invariant_ci, a_invariant_cm};
use crate::ideal::Ideal;
use crate::poly::{Degree, Polynomial};
use crate::quotient::{hilbert_function, is_regular_sequence, krull_dim, min_gen_degrees, quotient_dim_at};
use crate::ring::Ring;
use crate::socle::{socle_profile, top_socle_degree, SocleProfile};

/// Which hypothesis on `R = P/C` a setup was validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    CompleteIntersection,
    Gorenstein,
}

/// A validated instance: `C`, a lifting `I`, and `q = p^e`.
#[derive(Clone, Debug)]
pub struct CISetup {
    ring: Ring,
    c: Ideal,
    i: Ideal,
    e: u32,
    q: u64,
    a_r: i64,
    kind: RingKind,
}

fn q_for(ring: &Ring, e: u32) -> Result<u64> {
    if e == 0 {
        return Err(AlgebraError::OutOfRange("e must be positive".into()));
    }
    (ring.characteristic() as u64)
        .checked_pow(e)
        .ok_or(AlgebraError::ExponentOverflow)
}

fn require_artinian_sum(c: &Ideal, i: &Ideal) -> Result<()> {
    let sum = c.sum(i)?;
    if sum.is_unit() {
        return Err(AlgebraError::Hypothesis("C + I is the unit ideal".into()));
    }
    let dim = krull_dim(&sum)?;
    if dim != 0 {
        return Err(AlgebraError::Hypothesis(format!(
            "C + I is not m-primary (Krull dimension {dim})"
        )));
    }
    Ok(())
}

impl CISetup {
    /// Validates that `C`'s generators form a homogeneous regular sequence
    /// and that `C + I` is m-primary.
    pub fn new(ring: &Ring, c: Ideal, i: Ideal, e: u32) -> Result<CISetup> {
        let q = q_for(ring, e)?;
        if !is_regular_sequence(ring, c.gens())? {
            return Err(AlgebraError::Hypothesis(format!(
                "C = {c} is not generated by a regular sequence"
            )));
        }
        require_artinian_sum(&c, &i)?;
        let a_r = a_invariant_ci(ring, &c)?.value;
        Ok(CISetup {
            ring: ring.clone(),
            c,
            i,
            e,
            q,
            a_r,
            kind: RingKind::CompleteIntersection,
        })
    }

    /// Setup for the Gorenstein exploration. A regular sequence is accepted
    /// as is; an artinian `P/C` must have a one-dimensional socle; a
    /// positive-dimensional non-CI `P/C` is accepted only when
    /// `assume_gorenstein` is set, with `a(R)` read off its Hilbert series.
    pub fn gorenstein(ring: &Ring, c: Ideal, i: Ideal, e: u32, assume_gorenstein: bool) -> Result<CISetup> {
        let regular = is_regular_sequence(ring, c.gens())?;
        if regular {
            let mut s = CISetup::new(ring, c, i, e)?;
            s.kind = RingKind::CompleteIntersection;
            return Ok(s);
        }
        let q = q_for(ring, e)?;
        if c.is_unit() {
            return Err(AlgebraError::Hypothesis("C is the unit ideal".into()));
        }
        let a_r = if krull_dim(&c)? == 0 {
            let profile = socle_profile(&c)?;
            if profile.ell != 1 {
                return Err(AlgebraError::Hypothesis(format!(
                    "P/C is not Gorenstein: socle dimension {}",
                    profile.ell
                )));
            }
            profile.degrees[0]
        } else if assume_gorenstein {
            a_invariant_cm(&c)?.value
        } else {
            return Err(AlgebraError::Hypothesis(
                "cannot certify that a positive-dimensional P/C is Gorenstein".into(),
            ));
        };
        require_artinian_sum(&c, &i)?;
        Ok(CISetup {
            ring: ring.clone(),
            c,
            i,
            e,
            q,
            a_r,
            kind: RingKind::Gorenstein,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn c(&self) -> &Ideal {
        &self.c
    }

    pub fn i(&self) -> &Ideal {
        &self.i
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a_r(&self) -> i64 {
        self.a_r
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// The same `C` and `I` with a different Frobenius exponent.
    pub fn with_e(&self, e: u32) -> Result<CISetup> {
        Ok(CISetup {
            q: q_for(&self.ring, e)?,
            e,
            ..self.clone()
        })
    }
}

/// Ideals shared by the conditions, each built at most once.
struct Frobenius<'a> {
    setup: &'a CISetup,
    i_q: OnceLock<Ideal>,
    c_q: OnceLock<Ideal>,
    c_plus_i: OnceLock<Ideal>,
    c_plus_i_q: OnceLock<Ideal>,
    i_cap_c: OnceLock<Ideal>,
}

impl<'a> Frobenius<'a> {
    fn new(setup: &'a CISetup) -> Self {
        Frobenius {
            setup,
            i_q: OnceLock::new(),
            c_q: OnceLock::new(),
            c_plus_i: OnceLock::new(),
            c_plus_i_q: OnceLock::new(),
            i_cap_c: OnceLock::new(),
        }
    }

    fn cached(cell: &OnceLock<Ideal>, build: impl FnOnce() -> Result<Ideal>) -> Result<&Ideal> {
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = build()?;
        Ok(cell.get_or_init(|| v))
    }

    fn i_q(&self) -> Result<&Ideal> {
        Self::cached(&self.i_q, || self.setup.i.frobenius_power(self.setup.q))
    }

    fn c_q(&self) -> Result<&Ideal> {
        Self::cached(&self.c_q, || self.setup.c.frobenius_power(self.setup.q))
    }

    /// `C + I`, the defining ideal of `S`.
    fn c_plus_i(&self) -> Result<&Ideal> {
        Self::cached(&self.c_plus_i, || self.setup.c.sum(&self.setup.i))
    }

    /// `C + I^[q]`, the defining ideal of `F^e(S)`.
    fn c_plus_i_q(&self) -> Result<&Ideal> {
        Self::cached(&self.c_plus_i_q, || self.setup.c.sum(self.i_q()?))
    }

    fn i_cap_c(&self) -> Result<&Ideal> {
        Self::cached(&self.i_cap_c, || self.setup.i.intersect(&self.setup.c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageElement {
    pub y: String,
    pub degree: u64,
    #[serde(skip)]
    pub poly: Option<Polynomial>,
}

/// `y = (f_1 ... f_c)^(q-1)`; `y = 1` when `c = 0`.
pub fn linkage_element(setup: &CISetup) -> Result<LinkageElement> {
    let ring = &setup.ring;
    let mut prod = Polynomial::one(ring);
    for f in setup.c.gens() {
        prod = prod.checked_mul(f)?;
    }
    let y = prod.pow(setup.q - 1)?;
    let degree = match y.weighted_degree()? {
        Degree::Homogeneous(d) => d,
        Degree::NotHomogeneous => return Err(AlgebraError::Internal("inhomogeneous linkage element".into())),
    };
    Ok(LinkageElement {
        y: y.to_string(),
        degree,
        poly: Some(y),
    })
}

/// `C^[q] : C`, with `(0) : (0) = (1)`.
fn frobenius_link(f: &Frobenius<'_>) -> Result<Ideal> {
    if f.setup.c.is_zero() {
        return Ok(Ideal::unit(&f.setup.ring));
    }
    f.c_q()?.colon(&f.setup.c)
}

fn linkage_identity_in(f: &Frobenius<'_>) -> Result<bool> {
    let setup = f.setup;
    if setup.c.is_zero() {
        return Err(AlgebraError::Hypothesis("linkage identity needs c >= 1".into()));
    }
    let y = linkage_element(setup)?.poly.expect("set by linkage_element");
    let lhs = frobenius_link(f)?;
    let rhs = Ideal::new(&setup.ring, vec![y])?.sum(f.c_q()?)?;
    lhs.equals(&rhs)
}

/// Checks `C^[q] : C = (y) + C^[q]`.
pub fn linkage_identity_check(setup: &CISetup) -> Result<bool> {
    linkage_identity_in(&Frobenius::new(setup))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionB {
    pub holds: bool,
    pub socle_s: SocleProfile,
    pub socle_fqs: SocleProfile,
    pub predicted: Vec<i64>,
}

fn condition_b_in(f: &Frobenius<'_>) -> Result<ConditionB> {
    let setup = f.setup;
    let socle_s = socle_profile(f.c_plus_i()?)?;
    let socle_fqs = socle_profile(f.c_plus_i_q()?)?;
    let q = setup.q as i64;
    let mut predicted: Vec<i64> = socle_s
        .degrees
        .iter()
        .map(|d| q * d - (q - 1) * setup.a_r)
        .collect();
    predicted.sort_unstable();
    let holds = socle_s.ell == socle_fqs.ell && predicted == socle_fqs.degrees;
    Ok(ConditionB {
        holds,
        socle_s,
        socle_fqs,
        predicted,
    })
}

pub fn condition_b(setup: &CISetup) -> Result<ConditionB> {
    condition_b_in(&Frobenius::new(setup))
}

fn condition_c_in(f: &Frobenius<'_>) -> Result<bool> {
    let lhs = f.c_plus_i()?.frobenius_power(f.setup.q)?.colon(&frobenius_link(f)?)?;
    lhs.equals(f.c_plus_i_q()?)
}

/// `(C + I)^[q] : (C^[q] : C) == C + I^[q]`, with the general colon.
pub fn condition_c(setup: &CISetup) -> Result<bool> {
    condition_c_in(&Frobenius::new(setup))
}

/// The two sides of condition (d): `N = I^[q] ∩ C` and
/// `D = (I ∩ C)^[q] + C I^[q]`.
fn tor_pair(f: &Frobenius<'_>) -> Result<(Ideal, Ideal)> {
    let setup = f.setup;
    let n = f.i_q()?.intersect(&setup.c)?;
    let d = f
        .i_cap_c()?
        .frobenius_power(setup.q)?
        .sum(&setup.c.product(f.i_q()?)?)?;
    Ok((n, d))
}

fn condition_d_in(f: &Frobenius<'_>) -> Result<bool> {
    let (n, d) = tor_pair(f)?;
    n.equals(&d)
}

/// `I^[q] ∩ C == (I ∩ C)^[q] + C I^[q]`.
pub fn condition_d(setup: &CISetup) -> Result<bool> {
    condition_d_in(&Frobenius::new(setup))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tor1 {
    pub total: u64,
    /// Nonzero degree-wise dimensions of `N/D`.
    #[serde(with = "crate::serde_keys")]
    pub by_degree: BTreeMap<u64, u64>,
}

fn tor1_in(f: &Frobenius<'_>) -> Result<Tor1> {
    let setup = f.setup;
    let (n, d) = tor_pair(f)?;
    if !d.is_subset_of(&n)? {
        return Err(AlgebraError::Internal(
            "(I ∩ C)^[q] + C I^[q] is not contained in I^[q] ∩ C".into(),
        ));
    }
    if n.is_zero() {
        return Ok(Tor1::default());
    }
    // N/D is generated in degrees <= max min-generator degree of N and is
    // killed by the m-primary (C + I)^[q], so it vanishes above `bound`.
    let killer = f.c_plus_i()?.frobenius_power(setup.q)?;
    let killer_top = hilbert_function(&killer)?.top_degree().unwrap_or(0);
    let gen_top = min_gen_degrees(&n)?.into_iter().max().unwrap_or(0);
    let bound = killer_top + gen_top;
    let mut out = Tor1::default();
    for deg in 0..=bound {
        let diff = quotient_dim_at(&d, deg) as i64 - quotient_dim_at(&n, deg) as i64;
        if diff < 0 {
            return Err(AlgebraError::Internal(format!("negative dimension of N/D in degree {deg}")));
        }
        if diff > 0 {
            out.by_degree.insert(deg, diff as u64);
            out.total += diff as u64;
        }
    }
    let max_w = setup.ring.weights().iter().copied().max().unwrap_or(1);
    for deg in bound + 1..=bound + max_w {
        if quotient_dim_at(&d, deg) != quotient_dim_at(&n, deg) {
            return Err(AlgebraError::Internal(format!(
                "N/D nonzero in degree {deg}, beyond the window bound {bound}"
            )));
        }
    }
    Ok(out)
}

/// `dim_k Tor_1^R(S, F^e R)`, degree by degree, as `dim_k N/D`.
pub fn tor1_dim(setup: &CISetup) -> Result<Tor1> {
    tor1_in(&Frobenius::new(setup))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TsdCheck {
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
}

fn tsd_in(f: &Frobenius<'_>) -> Result<TsdCheck> {
    let q = f.setup.q as i64;
    let lhs = top_socle_degree(f.c_plus_i_q()?)?;
    let rhs = q * top_socle_degree(f.c_plus_i()?)? - (q - 1) * f.setup.a_r;
    Ok(TsdCheck {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// `tsd(F^e S) >= q tsd(S) - (q - 1) a(R)`.
pub fn tsd_inequality_check(setup: &CISetup) -> Result<TsdCheck> {
    tsd_in(&Frobenius::new(setup))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub ring_kind: RingKind,
    pub e: u32,
    pub q: u64,
    pub a_r: i64,
    pub socle_s: SocleProfile,
    pub socle_fqs: SocleProfile,
    pub predicted: Vec<i64>,
    /// Condition (a), finite projective dimension, read as `tor1 == 0`.
    pub cond_a_via_tor1: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    pub tor1_dim: Tor1,
    /// `C^[q] : C == (y) + C^[q]`; absent when `c = 0` or `C` is not a
    /// complete intersection.
    pub linkage_identity: Option<bool>,
    pub tsd_inequality: TsdCheck,
    /// `(C + I)^[q] == C^[q] + I^[q]`.
    pub frobenius_additive: bool,
    /// `cond_b == cond_c == cond_d == (tor1 == 0)`.
    pub consistent: bool,
}

impl TheoremReport {
    /// Whether every self-test that must hold for complete intersections did.
    pub fn all_checks_pass(&self) -> bool {
        self.consistent
            && self.linkage_identity != Some(false)
            && self.tsd_inequality.holds
            && self.frobenius_additive
    }

    pub fn verdict_key(&self) -> String {
        let t = |b: bool| if b { 'T' } else { 'F' };
        format!(
            "b={} c={} d={} tor1={}",
            t(self.cond_b),
            t(self.cond_c),
            t(self.cond_d),
            if self.tor1_dim.total == 0 { "0" } else { ">0" }
        )
    }
}

fn evaluate(setup: &CISetup) -> Result<TheoremReport> {
    let f = Frobenius::new(setup);
    let b = condition_b_in(&f)?;
    let cond_c = condition_c_in(&f)?;
    let cond_d = condition_d_in(&f)?;
    let tor1 = tor1_in(&f)?;
    let linkage_identity = if setup.kind == RingKind::CompleteIntersection && !setup.c.is_zero() {
        Some(linkage_identity_in(&f)?)
    } else {
        None
    };
    let tsd_inequality = tsd_in(&f)?;
    let frobenius_additive = f
        .c_plus_i()?
        .frobenius_power(setup.q)?
        .equals(&f.c_q()?.sum(f.i_q()?)?)?;
    let tor_zero = tor1.total == 0;
    let consistent = b.holds == cond_c && cond_c == cond_d && cond_d == tor_zero;
    Ok(TheoremReport {
        ring_kind: setup.kind,
        e: setup.e,
        q: setup.q,
        a_r: setup.a_r,
        socle_s: b.socle_s,
        socle_fqs: b.socle_fqs,
        predicted: b.predicted,
        cond_a_via_tor1: tor_zero,
        cond_b: b.holds,
        cond_c,
        cond_d,
        tor1_dim: tor1,
        linkage_identity,
        tsd_inequality,
        frobenius_additive,
        consistent,
    })
}

/// Error carrying a report whose must-hold checks failed.
#[derive(Debug)]
pub struct Inconsistency(pub Box<TheoremReport>);

#[derive(Debug)]
pub enum CheckError {
    Algebra(AlgebraError),
    Inconsistent(Inconsistency),
}

impl From<AlgebraError> for CheckError {
    fn from(e: AlgebraError) -> Self {
        CheckError::Algebra(e)
    }
}

impl std::fmt::Display for CheckError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckError::Algebra(e) => write!(f, "{e}"),
            CheckError::Inconsistent(r) => write!(
                f,
                "internal inconsistency: {} (linkage {:?}, tsd {}, additive {})",
                r.0.verdict_key(),
                r.0.linkage_identity,
                r.0.tsd_inequality.holds,
                r.0.frobenius_additive
            ),
        }
    }
}

impl std::error::Error for CheckError {}

/// Evaluates every condition for a complete-intersection setup. A failed
/// equivalence, linkage identity, top-socle inequality or Frobenius
/// additivity is reported as [`CheckError::Inconsistent`].
pub fn check_theorem(setup: &CISetup) -> std::result::Result<TheoremReport, CheckError> {
    if setup.kind != RingKind::CompleteIntersection {
        return Err(AlgebraError::Hypothesis("check_theorem needs a complete intersection".into()).into());
    }
    let report = evaluate(setup)?;
    if report.all_checks_pass() {
        Ok(report)
    } else {
        Err(CheckError::Inconsistent(Inconsistency(Box::new(report))))
    }
}

/// Evaluates the same conditions over a Gorenstein `R`, reporting rather
/// than asserting their agreement.
pub fn gorenstein_explore(setup: &CISetup) -> Result<TheoremReport> {
    evaluate(setup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ring(p: u64) -> Ring {
        RingSpec::new(p, &[("x", 1), ("y", 1)]).unwrap()
    }

    fn setup(p: u64, c: &[&str], i: &[&str], e: u32) -> CISetup {
        let r = ring(p);
        CISetup::new(&r, Ideal::parse(&r, c).unwrap(), Ideal::parse(&r, i).unwrap(), e).unwrap()
    }

    #[test]
    fn setup_validation() {
        let r = ring(2);
        let id = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        assert!(matches!(CISetup::new(&r, id(&["x"]), id(&["x"]), 1), Err(AlgebraError::Hypothesis(_))));
        assert!(matches!(CISetup::new(&r, id(&["x", "xy"]), id(&["y"]), 1), Err(AlgebraError::Hypothesis(_))));
        assert!(matches!(CISetup::new(&r, id(&["x^2"]), id(&["y"]), 0), Err(AlgebraError::OutOfRange(_))));
        assert!(matches!(CISetup::new(&r, id(&["x"]), id(&["1"]), 1), Err(AlgebraError::Hypothesis(_))));
        let s = CISetup::new(&r, id(&["x^2"]), id(&["y^3"]), 2).unwrap();
        assert_eq!((s.q(), s.a_r()), (4, 0));
    }

    #[test]
    fn linkage_element_examples() {
        let s = setup(2, &["x^2", "y^2"], &["x", "y"], 1);
        let y = linkage_element(&s).unwrap();
        assert_eq!((y.y.as_str(), y.degree), ("x^2*y^2", 4));
        let s = setup(2, &[], &["x", "y"], 3);
        let y = linkage_element(&s).unwrap();
        assert_eq!((y.y.as_str(), y.degree), ("1", 0));
        let s = setup(2, &["x^2"], &["y"], 2);
        let y = linkage_element(&s).unwrap();
        assert_eq!((y.y.as_str(), y.degree), ("x^6", 6));
    }

    #[test]
    fn linkage_identity_examples() {
        assert!(linkage_identity_check(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap());
        assert!(linkage_identity_check(&setup(2, &["x^2"], &["y"], 1)).unwrap());
        assert!(linkage_identity_check(&setup(3, &["x^2", "y^3"], &["x", "y"], 1)).unwrap());
        assert!(matches!(
            linkage_identity_check(&setup(2, &[], &["x", "y"], 1)),
            Err(AlgebraError::Hypothesis(_))
        ));
    }

    #[test]
    fn linkage_colon_matches_monomial_hand_value() {
        // (x^6, y^9) : (x^2, y^3) = (x^4 y^6, x^6, y^9) over F_3, q = 3.
        let s = setup(3, &["x^2", "y^3"], &["x", "y"], 1);
        let f = Frobenius::new(&s);
        let r = s.ring().clone();
        let expected = Ideal::parse(&r, &["x^4y^6", "x^6", "y^9"]).unwrap();
        assert!(frobenius_link(&f).unwrap().equals(&expected).unwrap());
    }

    #[test]
    fn condition_b_examples() {
        let b = condition_b(&setup(2, &["x^2"], &["y^3"], 1)).unwrap();
        assert_eq!((b.socle_s.degrees.clone(), b.predicted.clone(), b.socle_fqs.degrees.clone()), (vec![3], vec![6], vec![6]));
        assert!(b.holds);
        let b = condition_b(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap();
        assert_eq!((b.socle_s.degrees.clone(), b.predicted.clone(), b.socle_fqs.degrees.clone()), (vec![0], vec![-2], vec![2]));
        assert!(!b.holds);
        for p in [2, 3, 5] {
            let b = condition_b(&setup(p, &[], &["x", "y"], 1)).unwrap();
            let expect = 2 * p as i64 - 2;
            assert_eq!((b.predicted.clone(), b.socle_fqs.degrees.clone()), (vec![expect], vec![expect]));
            assert!(b.holds);
        }
    }

    #[test]
    fn condition_c_and_d_examples() {
        assert!(condition_c(&setup(2, &["x^2"], &["y^3"], 1)).unwrap());
        assert!(!condition_c(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap());
        assert!(condition_c(&setup(3, &[], &["x^2", "xy", "y^2"], 1)).unwrap());
        assert!(condition_d(&setup(2, &["x^2"], &["y^3"], 1)).unwrap());
        assert!(!condition_d(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap());
        assert!(condition_d(&setup(5, &[], &["x^2", "xy", "y^2"], 1)).unwrap());
    }

    #[test]
    fn tor1_examples() {
        assert_eq!(tor1_dim(&setup(2, &["x^2"], &["y^3"], 1)).unwrap().total, 0);
        let t = tor1_dim(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap();
        assert_eq!(t.total, 8);
        // x^2, y^2 | x^3, x^2y, xy^2, y^3 | x^3y, xy^3.
        assert_eq!(t.by_degree, BTreeMap::from([(2, 2), (3, 4), (4, 2)]));
        assert_eq!(tor1_dim(&setup(3, &[], &["x^2", "y"], 2)).unwrap().total, 0);
    }

    #[test]
    fn check_theorem_examples() {
        let r = check_theorem(&setup(2, &["x^2"], &["y^3"], 1)).unwrap();
        assert!(r.cond_b && r.cond_c && r.cond_d && r.tor1_dim.total == 0 && r.consistent);
        let r = check_theorem(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap();
        assert!(!r.cond_b && !r.cond_c && !r.cond_d && r.tor1_dim.total == 8 && r.consistent);
        let lifted = check_theorem(&setup(2, &["x^2"], &["x^2", "y^3"], 1)).unwrap();
        let plain = check_theorem(&setup(2, &["x^2"], &["y^3"], 1)).unwrap();
        assert_eq!(lifted.cond_b, plain.cond_b);
        assert!(lifted.cond_b && lifted.cond_c && lifted.cond_d && lifted.consistent);
    }

    #[test]
    fn tsd_examples() {
        let t = tsd_inequality_check(&setup(2, &["x^2", "y^2"], &["x", "y"], 1)).unwrap();
        assert_eq!((t.lhs, t.rhs, t.holds), (2, -2, true));
        let t = tsd_inequality_check(&setup(2, &["x^2"], &["y^3"], 1)).unwrap();
        assert_eq!((t.lhs, t.rhs, t.holds), (6, 6, true));
        let t = tsd_inequality_check(&setup(2, &[], &["x^2", "y^2"], 1)).unwrap();
        assert_eq!((t.lhs, t.rhs, t.holds), (6, 6, true));
    }

    #[test]
    fn explore_gates() {
        let r = RingSpec::new(3, &[("x", 1), ("y", 1), ("z", 1)]).unwrap();
        let id = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        // Complete intersection routed through exploration: same verdicts.
        let s = CISetup::gorenstein(&r, id(&["x^2", "y^2"]), id(&["z", "xy"]), 1, false).unwrap();
        let explored = gorenstein_explore(&s).unwrap();
        let checked = check_theorem(&CISetup::new(&r, id(&["x^2", "y^2"]), id(&["z", "xy"]), 1).unwrap()).unwrap();
        assert_eq!(explored, checked);
        // Gorenstein, not a complete intersection: Hilbert function 1, 3, 1.
        let g = id(&["xy", "xz", "yz", "x^2 - y^2", "x^2 - z^2"]);
        let s = CISetup::gorenstein(&r, g, id(&["x", "y^2"]), 1, false).unwrap();
        assert_eq!((s.kind(), s.a_r()), (RingKind::Gorenstein, 2));
        let rep = gorenstein_explore(&s).unwrap();
        assert!(rep.linkage_identity.is_none());
        // Non-Gorenstein artinian C is rejected.
        let bad = CISetup::gorenstein(&r, id(&["x^2", "xy", "y^2", "z"]), id(&["x"]), 1, false);
        assert!(matches!(bad, Err(AlgebraError::Hypothesis(_))));
        // Positive-dimensional non-CI needs the flag.
        let twisted = id(&["xy", "xz", "yz"]);
        assert!(CISetup::gorenstein(&r, twisted.clone(), id(&["x", "y", "z"]), 1, false).is_err());
        assert!(CISetup::gorenstein(&r, twisted, id(&["x", "y", "z"]), 1, true).is_ok());
    }
}
