#![allow(dead_code)]

use frobsoc_core::ring::monomials_of_degree;
use frobsoc_core::{Ideal, Polynomial, Ring, RingSpec};
use proptest::prelude::*;
use proptest::sample::Index;

pub fn ring(p: u64, weights: &[u64]) -> Ring {
    let names = ["x", "y", "z", "w"];
    let vars: Vec<(&str, u64)> = weights.iter().enumerate().map(|(i, &w)| (names[i], w)).collect();
    RingSpec::new(p, &vars).unwrap()
}

pub fn monomial(r: &Ring, exps: &[u32]) -> Polynomial {
    Polynomial::term(r, 1, r.monomial(exps.to_vec()))
}

pub fn monomial_ideal(r: &Ring, gens: &[Vec<u32>]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| monomial(r, g)).collect()).unwrap()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators of a monomial ideal, sorted.
pub fn minimalize(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut g = gens.to_vec();
    g.sort();
    g.dedup();
    let mut out: Vec<Vec<u32>> = g
        .iter()
        .filter(|a| !g.iter().any(|b| b != *a && divides(b, a)))
        .cloned()
        .collect();
    out.sort();
    out
}

pub fn intersect_oracle(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let lcm = |x: &Vec<u32>, y: &Vec<u32>| x.iter().zip(y).map(|(s, t)| *s.max(t)).collect();
    let all: Vec<Vec<u32>> = a.iter().flat_map(|x| b.iter().map(move |y| lcm(x, y))).collect();
    minimalize(&all)
}

pub fn product_oracle(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let all: Vec<Vec<u32>> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(s, t)| s + t).collect()))
        .collect();
    minimalize(&all)
}

pub fn frobenius_oracle(a: &[Vec<u32>], q: u32) -> Vec<Vec<u32>> {
    minimalize(&a.iter().map(|g| g.iter().map(|e| e * q).collect()).collect::<Vec<_>>())
}

/// Reduced Gröbner basis of an ideal expected to be monomial, as exponents.
pub fn monomial_gens(i: &Ideal) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = i
        .gb()
        .elements()
        .iter()
        .map(|g| {
            assert!(g.is_monomial(), "{g} is not a monomial");
            g.leading_monomial().unwrap().exps().to_vec()
        })
        .collect();
    out.sort();
    out
}

/// A random homogeneous polynomial of weighted degree `d` with up to
/// `picks.len()` terms.
pub fn homogeneous(r: &Ring, d: u64, picks: &[(u32, Index)]) -> Polynomial {
    let basis = monomials_of_degree(r.weights(), d);
    if basis.is_empty() {
        return Polynomial::zero(r);
    }
    let p = r.characteristic();
    let terms = picks
        .iter()
        .map(|(c, ix)| (c % p, r.monomial(ix.get(&basis).clone())))
        .collect();
    Polynomial::from_terms(r, terms)
}

pub fn exps_strategy(n: usize, max: u32, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max, n), count)
}

pub type PolySpec = (u64, Vec<(u32, Index)>);

pub fn poly_specs(count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<PolySpec>> {
    prop::collection::vec((1u64..=3, prop::collection::vec((any::<u32>(), any::<Index>()), 1..=3)), count)
}

pub fn polys(r: &Ring, specs: &[PolySpec]) -> Vec<Polynomial> {
    specs.iter().map(|(d, picks)| homogeneous(r, *d, picks)).collect()
}
