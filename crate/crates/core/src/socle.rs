//! Socles of artinian graded quotients `P/I`.
//!
//! The socle in degree `d` is the common kernel of the multiplication maps
//! `x_i : (P/I)_d -> (P/I)_{d + |x_i|}`, computed on standard-monomial bases.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::linalg::rank_of;
use crate::poly::Polynomial;
use crate::quotient::{hilbert_function, min_gen_degrees_modulo, standard_monomials, DegreeCoords};

/// Socle degrees `d_1 <= ... <= d_ell` with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleProfile {
    pub degrees: Vec<i64>,
    pub ell: usize,
}

impl SocleProfile {
    pub fn from_degrees(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        SocleProfile {
            ell: degrees.len(),
            degrees,
        }
    }

    pub fn top(&self) -> Option<i64> {
        self.degrees.last().copied()
    }
}

fn require_artinian(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let d = crate::quotient::krull_dim(ideal)?;
    if d != 0 {
        return Err(AlgebraError::NotArtinian(d));
    }
    Ok(())
}

pub fn socle_profile(ideal: &Ideal) -> Result<SocleProfile> {
    require_artinian(ideal)?;
    let ring = ideal.ring();
    let p = ring.characteristic();
    let gb = ideal.gb();
    let std = standard_monomials(ideal)?;
    let mut degrees = Vec::new();
    for (&d, basis) in &std {
        let targets: Vec<Option<DegreeCoords>> = ring
            .weights()
            .iter()
            .map(|w| std.get(&(d + w)).map(|ms| DegreeCoords::from_monomials(ms)))
            .collect();
        let rows: Vec<Vec<u32>> = basis
            .iter()
            .map(|m| {
                let mut row = Vec::new();
                for (i, target) in targets.iter().enumerate() {
                    if let Some(coords) = target {
                        let image = gb.reduce(&Polynomial::term(ring, 1, m.mul(&ring.var(i))));
                        row.extend(coords.vector(&image));
                    }
                }
                row
            })
            .collect();
        let rank = if rows.first().is_some_and(|r| !r.is_empty()) {
            rank_of(rows, p)
        } else {
            0
        };
        let kernel = basis.len() - rank;
        degrees.extend(std::iter::repeat_n(d as i64, kernel));
    }
    Ok(SocleProfile::from_degrees(degrees))
}

/// Largest socle degree, checked against the top degree of the Hilbert
/// function.
pub fn top_socle_degree(ideal: &Ideal) -> Result<i64> {
    let profile = socle_profile(ideal)?;
    let top = profile
        .top()
        .ok_or_else(|| AlgebraError::Internal("artinian quotient with empty socle".into()))?;
    let hf_top = hilbert_function(ideal)?.top_degree().map(|d| d as i64);
    if hf_top != Some(top) {
        return Err(AlgebraError::Internal(format!(
            "top socle degree {top} differs from top Hilbert degree {hf_top:?}"
        )));
    }
    Ok(top)
}

pub fn is_gorenstein_artinian(ideal: &Ideal) -> Result<bool> {
    Ok(socle_profile(ideal)?.ell == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityCheck {
    pub holds: bool,
    pub delta: i64,
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
}

/// For an artinian Gorenstein `A` with socle degree `delta` and `A ⊆ I`,
/// compares the minimal generator degrees of `(A : I)/A` with
/// `{delta - d_i}` where the `d_i` are the socle degrees of `P/I`.
///
/// Generators of `A : I` are counted modulo `A`: at each degree the count is
/// `dim (A:I)_d - dim (m*(A:I) + A)_d`, so generators lying in `A` and
/// generators redundant modulo `A` both drop out.
pub fn ann_duality_check(a: &Ideal, i: &Ideal) -> Result<DualityCheck> {
    let a_profile = socle_profile(a)?;
    if a_profile.ell != 1 {
        return Err(AlgebraError::Hypothesis(format!(
            "P/A is not Gorenstein: socle dimension {}",
            a_profile.ell
        )));
    }
    let delta = a_profile.degrees[0];
    if !a.is_subset_of(i)? {
        return Err(AlgebraError::Hypothesis("A is not contained in I".into()));
    }
    let colon = a.colon(i)?;
    let mut lhs: Vec<i64> = min_gen_degrees_modulo(&colon, Some(a))?
        .into_iter()
        .map(|d| d as i64)
        .collect();
    lhs.sort_unstable();
    let mut rhs: Vec<i64> = socle_profile(i)?.degrees.iter().map(|d| delta - d).collect();
    rhs.sort_unstable();
    Ok(DualityCheck {
        holds: lhs == rhs,
        delta,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::quotient_dim_at;
    use crate::ring::{Ring, RingSpec};

    fn ring(p: u64, weights: &[u64]) -> Ring {
        let names = ["x", "y", "z"];
        let vars: Vec<(&str, u64)> = weights.iter().enumerate().map(|(i, &w)| (names[i], w)).collect();
        RingSpec::new(p, &vars).unwrap()
    }

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    // Socle degrees via (I : m)/I, counted degree by degree.
    fn socle_by_colon(i: &Ideal) -> Vec<i64> {
        let m = Ideal::maximal(i.ring());
        let c = i.colon(&m).unwrap();
        let top = hilbert_function(i).unwrap().top_degree().unwrap();
        let mut out = Vec::new();
        for d in 0..=top {
            let k = quotient_dim_at(i, d) - quotient_dim_at(&c, d);
            out.extend(std::iter::repeat_n(d as i64, k as usize));
        }
        out
    }

    #[test]
    fn profile_examples() {
        let r = ring(2, &[1, 1]);
        assert_eq!(socle_profile(&id(&r, &["x^2", "y^3"])).unwrap().degrees, vec![3]);
        assert_eq!(socle_profile(&id(&r, &["x^2", "xy", "y^2"])).unwrap().degrees, vec![1, 1]);
        assert_eq!(socle_profile(&id(&r, &["x", "y"])).unwrap().degrees, vec![0]);
        assert!(matches!(socle_profile(&id(&r, &["x"])), Err(AlgebraError::NotArtinian(1))));
        assert!(matches!(socle_profile(&Ideal::unit(&r)), Err(AlgebraError::UnitIdeal)));
    }

    #[test]
    fn top_degree_and_gorenstein_examples() {
        let r = ring(2, &[1, 1]);
        assert_eq!(top_socle_degree(&id(&r, &["x^2", "y^2"])).unwrap(), 2);
        assert_eq!(top_socle_degree(&id(&r, &["x", "y"])).unwrap(), 0);
        assert_eq!(top_socle_degree(&id(&r, &["x^2", "y^3"])).unwrap(), 3);
        assert!(is_gorenstein_artinian(&id(&r, &["x^2", "y^3"])).unwrap());
        assert!(!is_gorenstein_artinian(&id(&r, &["x^2", "xy", "y^2"])).unwrap());
        assert!(is_gorenstein_artinian(&id(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn non_monomial_and_weighted_agree_with_colon() {
        let r = ring(3, &[1, 2, 1]);
        let cases: &[&[&str]] = &[
            &["x^2 + z^2", "y^2", "xz", "z^3"],
            &["x^3", "y^2 + x^4", "z^2 - xz"],
            &["xy", "xz", "yz", "x^2 - y", "x^2 - z^2"],
        ];
        for gens in cases {
            let i = id(&r, gens);
            assert_eq!(socle_profile(&i).unwrap().degrees, socle_by_colon(&i), "{gens:?}");
        }
    }

    #[test]
    fn duality_examples() {
        let r = ring(2, &[1, 1]);
        let a = id(&r, &["x^2", "y^2"]);
        let chk = ann_duality_check(&a, &id(&r, &["x", "y"])).unwrap();
        assert_eq!((chk.delta, chk.lhs.clone(), chk.rhs.clone(), chk.holds), (2, vec![2], vec![2], true));
        let chk = ann_duality_check(&a, &a).unwrap();
        assert_eq!((chk.lhs.clone(), chk.rhs.clone(), chk.holds), (vec![0], vec![0], true));
        let a3 = id(&r, &["x^3", "y^3"]);
        let chk = ann_duality_check(&a3, &id(&r, &["x^2", "xy", "y^2"])).unwrap();
        assert_eq!((chk.delta, chk.lhs.clone(), chk.rhs.clone(), chk.holds), (4, vec![3, 3], vec![3, 3], true));
        assert!(matches!(
            ann_duality_check(&id(&r, &["x^2", "xy", "y^2"]), &id(&r, &["x", "y"])),
            Err(AlgebraError::Hypothesis(_))
        ));
        assert!(matches!(
            ann_duality_check(&a, &id(&r, &["x^3", "y"])),
            Err(AlgebraError::Hypothesis(_))
        ));
    }
}
