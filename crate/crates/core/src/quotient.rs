//! Dimension counts for graded quotients `P/I`: Krull dimension, Hilbert
//! functions, standard monomials and minimal generator degrees.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::linalg::rank_of;
use crate::poly::{Degree, Polynomial};
use crate::ring::{monomials_of_degree, Monomial, Ring};

/// Degree-wise vector-space dimensions of an artinian quotient. Only nonzero
/// degrees are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    #[serde(with = "crate::serde_keys")]
    pub values: BTreeMap<u64, u64>,
    pub total: u64,
}

impl HilbertFunction {
    pub fn at(&self, d: u64) -> u64 {
        self.values.get(&d).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> Option<u64> {
        self.values.keys().next_back().copied()
    }
}

/// Krull dimension of `P/I`: the size of the largest set of variables no
/// leading monomial is supported on.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    let gb = ideal.gb();
    if gb.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for set in 0u64..(1 << n) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(best)
}

pub fn is_m_primary(ideal: &Ideal) -> Result<bool> {
    Ok(krull_dim(ideal)? == 0)
}

/// Whether the homogeneous `fs` form a regular sequence in the polynomial
/// ring, i.e. `dim P/(fs) = n - len(fs)`.
pub fn is_regular_sequence(ring: &Ring, fs: &[Polynomial]) -> Result<bool> {
    for f in fs {
        match f.weighted_degree()? {
            Degree::NotHomogeneous => return Err(AlgebraError::NotHomogeneous(f.to_string())),
            Degree::Homogeneous(_) => {}
        }
    }
    if fs.len() > ring.nvars() {
        return Ok(false);
    }
    let ideal = Ideal::new(ring, fs.to_vec())?;
    match krull_dim(&ideal) {
        Ok(d) => Ok(d + fs.len() == ring.nvars()),
        Err(AlgebraError::UnitIdeal) => Ok(false),
        Err(e) => Err(e),
    }
}

/// For each variable, the smallest pure power among the leading monomials.
fn pure_power_bounds(ideal: &Ideal) -> Option<Vec<u32>> {
    let n = ideal.ring().nvars();
    let mut bounds = vec![None::<u32>; n];
    for m in ideal.gb().leading_monomials() {
        let support: Vec<usize> = m.support().collect();
        if support.len() == 1 {
            let i = support[0];
            let e = m.exps()[i];
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    bounds.into_iter().collect()
}

/// Standard monomials of an artinian quotient grouped by degree, each group
/// in lexicographic exponent order. Empty for the unit ideal.
pub fn standard_monomials(ideal: &Ideal) -> Result<BTreeMap<u64, Vec<Monomial>>> {
    let gb = ideal.gb();
    if gb.is_unit() {
        return Ok(BTreeMap::new());
    }
    let ring = ideal.ring();
    let bounds = match pure_power_bounds(ideal) {
        Some(b) => b,
        None => return Err(AlgebraError::NotArtinian(krull_dim(ideal)?)),
    };
    let mut out: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
    let mut exps = vec![0u32; ring.nvars()];
    loop {
        let m = ring.monomial(exps.clone());
        if !gb.lt_divides(&m) {
            out.entry(m.degree()).or_default().push(m);
        }
        // Odometer over the box bounded by the pure powers.
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

pub fn hilbert_function(ideal: &Ideal) -> Result<HilbertFunction> {
    let std = standard_monomials(ideal)?;
    let values: BTreeMap<u64, u64> = std.iter().map(|(d, ms)| (*d, ms.len() as u64)).collect();
    let total = values.values().sum();
    Ok(HilbertFunction { values, total })
}

/// `dim_k (P/I)_d`, valid for any homogeneous ideal.
pub fn quotient_dim_at(ideal: &Ideal, d: u64) -> u64 {
    let ring = ideal.ring();
    let gb = ideal.gb();
    monomials_of_degree(ring.weights(), d)
        .into_iter()
        .filter(|e| !gb.lt_divides(&ring.monomial(e.clone())))
        .count() as u64
}

/// A basis of the degree-`d` part of a homogeneous ideal: one element per
/// monomial in the leading-term ideal, with that monomial as leading term.
pub fn degree_basis(ideal: &Ideal, d: u64) -> Vec<Polynomial> {
    let ring = ideal.ring();
    let gb = ideal.gb();
    let mut out = Vec::new();
    for e in monomials_of_degree(ring.weights(), d) {
        let m = ring.monomial(e);
        if let Some(g) = gb
            .elements()
            .iter()
            .find(|g| g.leading_monomial().unwrap().divides(&m))
        {
            let shift = g.leading_monomial().unwrap().quotient_of(&m);
            out.push(g.mul_monomial(&shift).to_ring(ring));
        }
    }
    out
}

/// Coordinates of homogeneous polynomials of one degree in the monomial
/// basis of that degree.
pub(crate) struct DegreeCoords {
    index: HashMap<Monomial, usize>,
}

impl DegreeCoords {
    pub(crate) fn new(ring: &Ring, d: u64) -> Self {
        let index = monomials_of_degree(ring.weights(), d)
            .into_iter()
            .enumerate()
            .map(|(i, e)| (ring.monomial(e), i))
            .collect();
        DegreeCoords { index }
    }

    pub(crate) fn from_monomials(ms: &[Monomial]) -> Self {
        DegreeCoords {
            index: ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect(),
        }
    }

    pub(crate) fn vector(&self, f: &Polynomial) -> Vec<u32> {
        let mut v = vec![0u32; self.index.len()];
        for (c, m) in f.terms() {
            let i = *self
                .index
                .get(m)
                .expect("term lies outside the coordinate basis");
            v[i] = *c;
        }
        v
    }
}

/// Degrees, with multiplicity, of a minimal homogeneous generating set of
/// `ideal` modulo `modulus` (which must be contained in `ideal`). With
/// `modulus = None` these are the minimal generator degrees of `ideal`.
///
/// At each degree `d` the multiplicity is
/// `dim I_d - dim (m*I + A)_d`, which is exact by the graded Nakayama lemma.
/// Degrees above the largest degree in the reduced Gröbner basis of `I`
/// carry no minimal generators.
pub fn min_gen_degrees_modulo(ideal: &Ideal, modulus: Option<&Ideal>) -> Result<Vec<u64>> {
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    let ring = ideal.ring();
    let p = ring.characteristic();
    let bound = ideal.gb().max_degree();
    let mut out = Vec::new();
    for d in 0..=bound {
        let basis = degree_basis(ideal, d);
        if basis.is_empty() {
            continue;
        }
        let coords = DegreeCoords::new(ring, d);
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, &w) in ring.weights().iter().enumerate() {
            if w > d {
                continue;
            }
            let x = ring.var(i);
            for b in degree_basis(ideal, d - w) {
                rows.push(coords.vector(&b.mul_monomial(&x)));
            }
        }
        if let Some(a) = modulus {
            for b in degree_basis(a, d) {
                rows.push(coords.vector(&b));
            }
        }
        let decomposable = rank_of(rows, p);
        let count = basis.len() - decomposable;
        out.extend(std::iter::repeat_n(d, count));
    }
    Ok(out)
}

pub fn min_gen_degrees(ideal: &Ideal) -> Result<Vec<u64>> {
    min_gen_degrees_modulo(ideal, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingSpec;

    fn ring(p: u64, weights: &[u64]) -> Ring {
        let names = ["x", "y", "z"];
        let vars: Vec<(&str, u64)> = weights.iter().enumerate().map(|(i, &w)| (names[i], w)).collect();
        RingSpec::new(p, &vars).unwrap()
    }

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn krull_dim_examples() {
        let r = ring(2, &[1, 1]);
        assert_eq!(krull_dim(&id(&r, &["x"])).unwrap(), 1);
        assert_eq!(krull_dim(&id(&r, &["x^2", "y^2"])).unwrap(), 0);
        assert_eq!(krull_dim(&id(&r, &["xy"])).unwrap(), 1);
        assert_eq!(krull_dim(&Ideal::zero(&r)).unwrap(), 2);
        assert!(matches!(krull_dim(&Ideal::unit(&r)), Err(AlgebraError::UnitIdeal)));
    }

    #[test]
    fn regular_sequence_examples() {
        let r = ring(2, &[1, 1]);
        let ps = |xs: &[&str]| xs.iter().map(|s| parse_poly(s, &r).unwrap()).collect::<Vec<_>>();
        assert!(is_regular_sequence(&r, &ps(&["x^2", "y^3"])).unwrap());
        assert!(!is_regular_sequence(&r, &ps(&["x", "xy"])).unwrap());
        assert!(is_regular_sequence(&r, &[]).unwrap());
        assert!(!is_regular_sequence(&r, &ps(&["1"])).unwrap());
        assert!(matches!(
            is_regular_sequence(&r, &ps(&["x^2+y"])),
            Err(AlgebraError::NotHomogeneous(_))
        ));
        assert!(matches!(
            is_regular_sequence(&r, &ps(&["0"])),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }

    #[test]
    fn m_primary_examples() {
        let r = ring(2, &[1, 1]);
        assert!(is_m_primary(&id(&r, &["x^2", "y^3"])).unwrap());
        assert!(!is_m_primary(&id(&r, &["x"])).unwrap());
        assert!(is_m_primary(&id(&r, &["x^2+y^2", "y^3"])).unwrap());
        assert!(is_m_primary(&Ideal::unit(&r)).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let r = ring(3, &[1, 1]);
        let h = hilbert_function(&id(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(h.values, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(h.total, 4);
        let h = hilbert_function(&id(&r, &["x", "y"])).unwrap();
        assert_eq!(h.values, BTreeMap::from([(0, 1)]));
        let h = hilbert_function(&id(&r, &["x^2", "y^3"])).unwrap();
        assert_eq!(h.values, BTreeMap::from([(0, 1), (1, 2), (2, 2), (3, 1)]));
        assert_eq!(h.total, 6);
        assert!(matches!(
            hilbert_function(&id(&r, &["x"])),
            Err(AlgebraError::NotArtinian(1))
        ));
        let rw = ring(3, &[1, 2]);
        // Standard monomials 1, x, y, xy: degrees 0, 1, 2, 3.
        let h = hilbert_function(&id(&rw, &["x^2", "y^2"])).unwrap();
        assert_eq!(h.values, BTreeMap::from([(0, 1), (1, 1), (2, 1), (3, 1)]));
    }

    #[test]
    fn min_gen_examples() {
        let r = ring(5, &[1, 1]);
        assert_eq!(min_gen_degrees(&id(&r, &["x^2", "xy", "y^3"])).unwrap(), vec![2, 2, 3]);
        assert_eq!(min_gen_degrees(&id(&r, &["x", "x^2"])).unwrap(), vec![1]);
        assert_eq!(min_gen_degrees(&id(&r, &["xy", "x^2", "y^2"])).unwrap(), vec![2, 2, 2]);
        assert_eq!(min_gen_degrees(&Ideal::unit(&r)).unwrap(), vec![0]);
        assert!(matches!(min_gen_degrees(&Ideal::zero(&r)), Err(AlgebraError::ZeroIdeal)));
        // Non-monomial: (x^2 + y^2, xy) needs both; its GB adds y^3.
        assert_eq!(min_gen_degrees(&id(&r, &["x^2+y^2", "xy"])).unwrap(), vec![2, 2]);
    }

    #[test]
    fn quotient_dim_matches_hilbert() {
        let r = ring(2, &[1, 2, 1]);
        let i = id(&r, &["x^3", "y^2+z^4", "xz", "z^5"]);
        let h = hilbert_function(&i).unwrap();
        for d in 0..20 {
            assert_eq!(quotient_dim_at(&i, d), h.at(d), "degree {d}");
        }
    }
}
