//! Sparse polynomials with coefficients in `F_p`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::ring::{Monomial, Ring};

/// A polynomial as a list of `(coefficient, monomial)` pairs, strictly
/// descending in its ring's monomial order, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(u32, Monomial)>,
}

/// Weighted degree of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(u64),
    NotHomogeneous,
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.reduce_i64(c);
        Self::term(ring, c, ring.one())
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, 1, ring.var(i))
    }

    pub fn term(ring: &Ring, c: u32, m: Monomial) -> Self {
        let c = c % ring.characteristic();
        Polynomial {
            ring: ring.clone(),
            terms: if c == 0 { Vec::new() } else { vec![(c, m)] },
        }
    }

    pub fn monomial(ring: &Ring, exps: Vec<u32>) -> Self {
        Self::term(ring, 1, ring.monomial(exps))
    }

    /// Canonicalizes an arbitrary list of terms: sorts, combines like terms
    /// and drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(u32, Monomial)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.1, &a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            let c = c % ring.characteristic();
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = ring.add(*lc, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(u32, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|(c, _)| *c)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weighted_degree(&self) -> Result<Degree> {
        let first = self.terms.first().ok_or(AlgebraError::ZeroPolynomial)?;
        let d = first.1.degree();
        if self.terms.iter().all(|(_, m)| m.degree() == d) {
            Ok(Degree::Homogeneous(d))
        } else {
            Ok(Degree::NotHomogeneous)
        }
    }

    /// True for zero and for polynomials whose terms share one degree.
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.weighted_degree(), Ok(Degree::NotHomogeneous))
    }

    /// Largest weighted degree among the terms.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Splits into homogeneous pieces, ordered by increasing degree.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut degrees: Vec<u64> = self.terms.iter().map(|(_, m)| m.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|d| Polynomial {
                ring: self.ring.clone(),
                terms: self.terms.iter().filter(|(_, m)| m.degree() == d).cloned().collect(),
            })
            .collect()
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(1, None, other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(self.ring.neg(1), None, other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let (a, b) = (self.max_exponents(), other.max_exponents());
        if a.iter().zip(&b).any(|(x, y)| x.checked_add(*y).is_none()) {
            return Err(AlgebraError::ExponentOverflow);
        }
        Ok(self.mul_unchecked(other))
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.ring.nvars()];
        for (_, m) in &self.terms {
            for (o, e) in out.iter_mut().zip(m.exps()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// `self + c * m * other`, merged in one pass.
    pub fn add_scaled(&self, c: u32, m: Option<&Monomial>, other: &Polynomial) -> Polynomial {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_scaled(&self.ring, &self.terms, c, m, &other.terms),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(u32, Monomial)>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn into_terms(self) -> Vec<(u32, Monomial)> {
        self.terms
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &small.terms {
            acc = acc.add_scaled(*c, Some(m), large);
        }
        acc
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.ring.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (self.ring.mul(*a, c), m.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, t)| (*c, t.mul(m))).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.inv(c)),
        }
    }

    /// `self^k` by repeated squaring, with exponent overflow checks.
    pub fn pow(&self, k: u64) -> Result<Polynomial> {
        if k == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.is_monomial() {
            let (c, m) = &self.terms[0];
            let m = m.checked_pow(k).ok_or(AlgebraError::ExponentOverflow)?;
            return Ok(Polynomial::term(&self.ring, self.ring.pow(*c, k), m));
        }
        if let Some(d) = self.max_degree() {
            d.checked_mul(k).ok_or(AlgebraError::ExponentOverflow)?;
            for (_, m) in &self.terms {
                m.checked_pow(k).ok_or(AlgebraError::ExponentOverflow)?;
            }
        }
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// The `q`-th power for `q` a power of the characteristic, computed
    /// term-wise: `(sum c_i m_i)^q = sum c_i^q m_i^q`.
    pub fn q_power(&self, q: u64) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        if self.ring.log_p(q).is_none() {
            return Err(AlgebraError::NotPowerOfP { q, p });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let m = m.checked_pow(q).ok_or(AlgebraError::ExponentOverflow)?;
            terms.push((self.ring.pow(*c, q), m));
        }
        // Raising to a power preserves the order, so `terms` is still sorted.
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Re-expresses the polynomial in a ring with the same variables but a
    /// possibly different order.
    pub fn to_ring(&self, ring: &Ring) -> Polynomial {
        debug_assert_eq!(ring.nvars(), self.ring.nvars());
        debug_assert_eq!(ring.characteristic(), self.ring.characteristic());
        if same_ring(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.1, &a.1));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Embeds into `ring`, whose variables are `prefix.len()` new ones
    /// followed by this ring's, multiplying by the prefix monomial.
    pub(crate) fn embed_with_prefix(&self, ring: &Ring, prefix: &[u32]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.with_prefix(prefix, ring.weights())))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Inverse of `embed_with_prefix` for polynomials free of the first `k`
    /// variables.
    pub(crate) fn restrict_drop_prefix(&self, ring: &Ring, k: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.drop_prefix(k, ring.weights())))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Exact division by `g`; `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let (gc, gm) = g.leading_term()?;
        let ginv = self.ring.inv(*gc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((c, m)) = rest.leading_term().cloned() {
            if !gm.divides(&m) {
                return None;
            }
            let qm = gm.quotient_of(&m);
            let qc = self.ring.mul(c, ginv);
            rest = rest.add_scaled(self.ring.neg(qc), Some(&qm), g);
            quotient.push((qc, qm));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Coefficient of the monomial `m`, zero when absent.
    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(_, t)| t == m)
            .map(|(c, _)| *c)
            .unwrap_or(0)
    }
}

/// Merges two descending term lists into `a + c * m * b`.
pub(crate) fn merge_scaled(
    ring: &Ring,
    a: &[(u32, Monomial)],
    c: u32,
    m: Option<&Monomial>,
    b: &[(u32, Monomial)],
) -> Vec<(u32, Monomial)> {
    let scaled = |(oc, om): &(u32, Monomial)| -> (u32, Monomial) {
        (
            ring.mul(c, *oc),
            match m {
                Some(m) => om.mul(m),
                None => om.clone(),
            },
        )
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.iter().peekable();
    let mut b = b.iter().map(scaled).peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap().clone()),
            (None, Some(_)) => out.push(b.next().unwrap()),
            (Some(x), Some(y)) => match ring.cmp_monomials(&x.1, &y.1) {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = ring.add(x.0, y.0);
                    if s != 0 {
                        out.push((s, y.1));
                    }
                }
            },
        }
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.neg(1))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::print_poly(self))
    }
}
