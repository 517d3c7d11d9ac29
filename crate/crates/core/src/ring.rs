//! Weighted-graded polynomial rings over a prime field: the ring description,
//! exponent vectors and the monomial orders used by the engine.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Largest characteristic accepted. Products of two residues fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// A monomial order on the exponent vectors of a ring.
///
/// `WeightedRevLex` compares weighted degree first and breaks ties
/// reverse-lexicographically on the declared variable sequence: the monomial
/// with the smaller exponent in the *last* differing variable is the larger
/// one. `Block(k)` compares the first `k` variables by the weighted reverse
/// lexicographic order restricted to them, and only on a tie compares the
/// remaining variables the same way. It eliminates the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    WeightedRevLex,
    Block(usize),
}

/// A polynomial ring `F_p[x_1, ..., x_n]` with positive integer weights and a
/// fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    p: u32,
    names: Vec<String>,
    weights: Vec<u64>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingSpec>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    /// Builds a ring with the weighted reverse lexicographic order.
    pub fn new<S: AsRef<str>>(p: u64, vars: &[(S, u64)]) -> Result<Ring, AlgebraError> {
        Self::with_order(p, vars, MonomialOrder::WeightedRevLex)
    }

    pub fn with_order<S: AsRef<str>>(
        p: u64,
        vars: &[(S, u64)],
        order: MonomialOrder,
    ) -> Result<Ring, AlgebraError> {
        if !is_prime(p) || p > MAX_CHARACTERISTIC {
            return Err(AlgebraError::InvalidRing(format!(
                "characteristic {p} is not a prime below 2^31"
            )));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(AlgebraError::InvalidRing(format!(
                    "invalid variable name {name:?}"
                )));
            }
            if names.iter().any(|n| n == name) {
                return Err(AlgebraError::InvalidRing(format!(
                    "duplicate variable name {name:?}"
                )));
            }
            if *w == 0 {
                return Err(AlgebraError::InvalidRing(format!(
                    "variable {name} has weight 0; weights must be positive"
                )));
            }
            names.push(name.to_string());
            weights.push(*w);
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(AlgebraError::InvalidRing(format!(
                    "block size {k} exceeds the number of variables"
                )));
            }
        }
        Ok(Arc::new(RingSpec {
            p: p as u32,
            names,
            weights,
            order,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and characteristic, different order.
    pub fn reordered(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingSpec {
            order,
            ..self.clone()
        })
    }

    /// The ring with one extra variable of weight 1 prepended and a block
    /// order eliminating it. The new variable's name avoids all existing ones.
    pub fn with_elimination_variable(&self) -> Ring {
        let mut name = String::from("t");
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = vec![name];
        names.extend(self.names.iter().cloned());
        let mut weights = vec![1];
        weights.extend(self.weights.iter().copied());
        Arc::new(RingSpec {
            p: self.p,
            names,
            weights,
            order: MonomialOrder::Block(1),
        })
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn one(&self) -> Monomial {
        Monomial::new(vec![0; self.nvars()], &self.weights)
    }

    pub fn var(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        Monomial::new(e, &self.weights)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::WeightedRevLex => cmp_wrevlex(a.degree, b.degree, &a.exps, &b.exps),
            MonomialOrder::Block(k) => {
                let da: u64 = block_degree(&a.exps[..k], &self.weights[..k]);
                let db: u64 = block_degree(&b.exps[..k], &self.weights[..k]);
                cmp_wrevlex(da, db, &a.exps[..k], &b.exps[..k]).then_with(|| {
                    cmp_wrevlex(a.degree - da, b.degree - db, &a.exps[k..], &b.exps[k..])
                })
            }
        }
    }

    // Field arithmetic on residues in [0, p).

    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a as u64 % self.p as u64;
        let mut acc = 1u64 % self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// `Some(e)` with `q = p^e`, `e >= 0`, when `q` is a power of the characteristic.
    pub fn log_p(&self, q: u64) -> Option<u32> {
        if q == 0 {
            return None;
        }
        let mut e = 0;
        let mut r = q;
        while r.is_multiple_of(self.p as u64) {
            r /= self.p as u64;
            e += 1;
        }
        (r == 1).then_some(e)
    }
}

fn block_degree(exps: &[u32], weights: &[u64]) -> u64 {
    exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
}

fn cmp_wrevlex(da: u64, db: u64, a: &[u32], b: &[u32]) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[", self.p)?;
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{w}")?;
        }
        write!(f, "]")
    }
}

/// An exponent vector together with its cached weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, weights: &[u64]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = block_degree(&exps, weights);
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_exponent(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            exps,
            degree: self.degree.checked_add(other.degree)?,
        })
    }

    pub fn checked_pow(&self, k: u64) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| u32::try_from(a as u64 * k).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            exps,
            degree: self.degree.checked_mul(k)?,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; the caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u64]) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Drops the first `k` coordinates; their exponents must be zero.
    pub(crate) fn drop_prefix(&self, k: usize, weights: &[u64]) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        Monomial::new(self.exps[k..].to_vec(), weights)
    }

    pub(crate) fn with_prefix(&self, prefix: &[u32], weights: &[u64]) -> Monomial {
        let mut exps = prefix.to_vec();
        exps.extend_from_slice(&self.exps);
        Monomial::new(exps, weights)
    }
}

/// All exponent vectors of the given weighted degree, in lexicographic order
/// of the exponent tuples.
pub fn monomials_of_degree(weights: &[u64], degree: u64) -> Vec<Vec<u32>> {
    fn walk(weights: &[u64], idx: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == weights.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[idx];
        let max = rest / w;
        for e in 0..=max {
            cur.push(e as u32);
            walk(weights, idx + 1, rest - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(weights, 0, degree, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}
