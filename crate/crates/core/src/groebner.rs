//! Buchberger's algorithm and multivariate division.

use std::collections::BTreeSet;

use crate::error::{AlgebraError, Result};
use crate::poly::{merge_scaled, same_ring, Polynomial};
use crate::ring::{Monomial, MonomialOrder, Ring};

/// A reduced Gröbner basis: monic, auto-reduced, sorted by leading monomial
/// descending. `ring` carries the order the basis was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap())
    }

    /// True when some leading monomial divides `m`, i.e. `m` is not a
    /// standard monomial.
    pub fn lt_divides(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|l| l.divides(m))
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_full(&self.ring, &f.to_ring(&self.ring), &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn max_degree(&self) -> u64 {
        self.elements
            .iter()
            .filter_map(|g| g.max_degree())
            .max()
            .unwrap_or(0)
    }
}

/// Full reduction of `f` by `basis`: no term of the result is divisible by
/// a leading monomial of `basis`. The first basis element whose leading
/// monomial divides the current term is used.
fn reduce_full(ring: &Ring, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let heads: Vec<(u32, &Monomial)> = basis
        .iter()
        .map(|g| {
            let (c, m) = g.leading_term().expect("zero basis element");
            (ring.inv(*c), m)
        })
        .collect();
    let mut rest: Vec<(u32, Monomial)> = f.clone().into_terms();
    let mut start = 0;
    let mut out = Vec::new();
    while start < rest.len() {
        let (c, m) = &rest[start];
        let hit = heads.iter().position(|(_, lm)| lm.divides(m));
        match hit {
            None => {
                out.push(rest[start].clone());
                start += 1;
            }
            Some(i) => {
                let (inv, lm) = heads[i];
                let factor = ring.neg(ring.mul(*c, inv));
                let shift = lm.quotient_of(m);
                rest = merge_scaled(
                    ring,
                    &rest[start + 1..],
                    factor,
                    Some(&shift),
                    &basis[i].terms()[1..],
                );
                start = 0;
            }
        }
    }
    Polynomial::from_sorted_terms(ring, out)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (fc, fm) = f.leading_term().expect("zero polynomial");
    let (gc, gm) = g.leading_term().expect("zero polynomial");
    let l = fm.lcm(gm, ring.weights());
    let a = Polynomial::zero(ring).add_scaled(ring.inv(*fc), Some(&fm.quotient_of(&l)), f);
    a.add_scaled(ring.neg(ring.inv(*gc)), Some(&gm.quotient_of(&l)), g)
}

/// Remainder of `f` on division by `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring().characteristic() != gb.ring.characteristic()
        || f.ring().names() != gb.ring.names()
        || f.ring().weights() != gb.ring.weights()
    {
        return Err(AlgebraError::RingMismatch);
    }
    Ok(gb.reduce(f))
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`, with
/// respect to `order`. Zero generators are ignored.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(AlgebraError::RingMismatch);
    }
    let work = if ring.order() == order {
        ring.clone()
    } else {
        ring.reordered(order)
    };
    let gens: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_ring(&work))
        .collect();
    Ok(GroebnerBasis {
        elements: run(&work, gens),
        ring: work,
    })
}

struct PairQueue {
    pending: BTreeSet<(u64, usize, usize)>,
}

impl PairQueue {
    fn contains(&self, lcms: &[Vec<u64>], i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        self.pending.contains(&(lcms[j][i], j, i))
    }
}

fn run(ring: &Ring, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    // lcm_deg[j][i] for i < j.
    let mut lcm_deg: Vec<Vec<u64>> = Vec::new();
    let mut queue = PairQueue {
        pending: BTreeSet::new(),
    };

    let add = |h: Polynomial,
               basis: &mut Vec<Polynomial>,
               lcm_deg: &mut Vec<Vec<u64>>,
               queue: &mut PairQueue| {
        let h = h.monic();
        let j = basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        let mut row = Vec::with_capacity(j);
        for (i, g) in basis.iter().enumerate() {
            let l = g.leading_monomial().unwrap().lcm(&hm, ring.weights());
            row.push(l.degree());
            queue.pending.insert((l.degree(), j, i));
        }
        lcm_deg.push(row);
        basis.push(h);
    };

    for g in gens {
        let r = reduce_full(ring, &g, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return vec![Polynomial::one(ring)];
            }
            add(r, &mut basis, &mut lcm_deg, &mut queue);
        }
    }

    while let Some(&(deg, j, i)) = queue.pending.iter().next() {
        queue.pending.remove(&(deg, j, i));
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj, ring.weights());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !queue.contains(&lcm_deg, i, k)
                && !queue.contains(&lcm_deg, j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_full(ring, &s, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return vec![Polynomial::one(ring)];
            }
            add(r, &mut basis, &mut lcm_deg, &mut queue);
        }
    }

    interreduce(ring, basis)
}

fn interreduce(ring: &Ring, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let lms: Vec<&Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| j != i && lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i))
        })
        .collect();
    let mut minimal: Vec<Polynomial> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(g, _)| g.clone())
        .collect();
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        minimal[i] = reduce_full(ring, &minimal[i], &others).monic();
    }
    minimal.sort_by(|a, b| {
        ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingSpec;
    use proptest::prelude::*;

    fn ring(p: u64) -> Ring {
        RingSpec::new(p, &[("x", 1), ("y", 1)]).unwrap()
    }

    fn polys(ring: &Ring, xs: &[&str]) -> Vec<Polynomial> {
        xs.iter().map(|s| parse_poly(s, ring).unwrap()).collect()
    }

    fn gb(ring: &Ring, xs: &[&str]) -> GroebnerBasis {
        buchberger(ring, &polys(ring, xs), MonomialOrder::WeightedRevLex).unwrap()
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(2);
        assert_eq!(gb(&r, &["x", "y"]).elements(), polys(&r, &["x", "y"]).as_slice());
        assert_eq!(
            gb(&r, &["x^2+xy", "y^2"]).elements(),
            polys(&r, &["x^2+xy", "y^2"]).as_slice()
        );
        assert_eq!(gb(&r, &["x", "x+y"]).elements(), polys(&r, &["x", "y"]).as_slice());
        assert!(gb(&r, &[]).is_empty());
        assert!(gb(&r, &["0"]).is_empty());
        assert!(gb(&r, &["x", "x+1"]).is_unit());
    }

    // By hand: S(x^2+xy, y^2) = y^2 (x^2+xy) - x^2 y^2 = x y^3 = xy * y^2,
    // remainder 0. The leading monomials are coprime, so the product
    // criterion predicts the same.
    #[test]
    fn s_pair_of_example_reduces_to_zero() {
        let r = ring(2);
        let g = gb(&r, &["x^2+xy", "y^2"]);
        let s = s_polynomial(&g.elements()[0], &g.elements()[1]);
        assert!(g.reduce(&s).is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2);
        let g = gb(&r, &["x^2+xy", "y^2"]);
        assert_eq!(
            normal_form(&parse_poly("x^2", &r).unwrap(), &g).unwrap(),
            parse_poly("xy", &r).unwrap()
        );
        let g = gb(&r, &["x^2", "y^2"]);
        assert!(normal_form(&parse_poly("x^2y", &r).unwrap(), &g).unwrap().is_zero());
        assert_eq!(
            normal_form(&parse_poly("x+y", &r).unwrap(), &g).unwrap(),
            parse_poly("x+y", &r).unwrap()
        );
        let other = ring(3);
        assert!(matches!(
            normal_form(&parse_poly("x", &other).unwrap(), &g),
            Err(AlgebraError::RingMismatch)
        ));
    }

    #[test]
    fn block_order_basis() {
        let r = RingSpec::new(5, &[("t", 1), ("x", 1), ("y", 1)]).unwrap();
        // t*x, (1-t)*y: eliminating t leaves x*y.
        let g = buchberger(&r, &polys(&r, &["t*x", "y - t*y"]), MonomialOrder::Block(1)).unwrap();
        let free: Vec<String> = g
            .elements()
            .iter()
            .filter(|e| e.terms().iter().all(|(_, m)| m.exps()[0] == 0))
            .map(|e| e.to_string())
            .collect();
        assert_eq!(free, vec!["x*y".to_string()]);
    }

    /// A prime and generators as `(coefficient, exponents)` term lists.
    type Gens = (u64, Vec<Vec<(u32, Vec<u32>)>>);

    fn arb_gens() -> impl Strategy<Value = Gens> {
        (
            prop::sample::select(vec![2u64, 3, 5]),
            prop::collection::vec(
                prop::collection::vec((1u32..5, prop::collection::vec(0u32..3, 3)), 1..4),
                1..5,
            ),
        )
    }

    fn build(p: u64, raw: &[Vec<(u32, Vec<u32>)>]) -> (Ring, Vec<Polynomial>) {
        let r = RingSpec::new(p, &[("x", 1), ("y", 1), ("z", 1)]).unwrap();
        let gens = raw
            .iter()
            .map(|ts| {
                Polynomial::from_terms(&r, ts.iter().map(|(c, e)| (*c, r.monomial(e.clone()))).collect())
            })
            .collect();
        (r, gens)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn basis_properties((p, raw) in arb_gens()) {
            let (r, gens) = build(p, &raw);
            let g = buchberger(&r, &gens, MonomialOrder::WeightedRevLex).unwrap();
            for f in &gens {
                prop_assert!(g.reduce(f).is_zero());
            }
            let els = g.elements();
            for i in 0..els.len() {
                prop_assert_eq!(els[i].leading_coefficient(), Some(1));
                for j in 0..els.len() {
                    if i != j {
                        let lm = els[j].leading_monomial().unwrap();
                        prop_assert!(els[i].terms().iter().all(|(_, m)| !lm.divides(m)));
                    }
                    if i < j {
                        prop_assert!(g.reduce(&s_polynomial(&els[i], &els[j])).is_zero());
                        prop_assert_eq!(
                            r.cmp_monomials(els[i].leading_monomial().unwrap(), els[j].leading_monomial().unwrap()),
                            std::cmp::Ordering::Greater
                        );
                    }
                }
            }
            // Idempotence.
            let again = buchberger(&r, els, MonomialOrder::WeightedRevLex).unwrap();
            prop_assert_eq!(&again, &g);
        }

        #[test]
        fn normal_form_is_linear((p, raw) in arb_gens(), a in 0usize..4, b in 0usize..4) {
            let (r, gens) = build(p, &raw);
            let g = buchberger(&r, &gens[..1], MonomialOrder::WeightedRevLex).unwrap();
            let f = &gens[a % gens.len()];
            let h = &gens[b % gens.len()].mul_monomial(&r.var(1));
            prop_assert_eq!(g.reduce(&(f + h)), &g.reduce(f) + &g.reduce(h));
        }

        #[test]
        fn reduced_basis_is_unique(
            (p, raw) in arb_gens(),
            mix in prop::collection::vec((1u32..5, prop::collection::vec(0u32..2, 3)), 4),
        ) {
            let (r, gens) = build(p, &raw);
            // Invertible change of generators: g_i += m_i * g_{i+1} (unitriangular).
            let mut alt = gens.clone();
            for i in 0..alt.len().saturating_sub(1) {
                let (c, e) = &mix[i % mix.len()];
                alt[i] = alt[i].add_scaled(*c % p as u32, Some(&r.monomial(e.clone())), &gens[i + 1]);
            }
            alt.reverse();
            let g1 = buchberger(&r, &gens, MonomialOrder::WeightedRevLex).unwrap();
            let g2 = buchberger(&r, &alt, MonomialOrder::WeightedRevLex).unwrap();
            prop_assert_eq!(g1, g2);
        }
    }
}
