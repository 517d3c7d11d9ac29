//! Graded Betti numbers of artinian quotients via Koszul homology, and
//! a-invariants.
//!
//! `beta_{i,j} = dim_k H_i(K(x_1..x_n) ⊗ P/I)_j`, computed one internal
//! degree at a time on standard-monomial bases. The Koszul differential is
//! `d(m e_S) = sum_k (-1)^k x_{s_k} m e_{S \ s_k}` for `S = {s_0 < s_1 < ...}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::linalg::rank_of;
use crate::poly::{Degree, Polynomial};
use crate::quotient::{is_regular_sequence, krull_dim, standard_monomials};
use crate::ring::{Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i64,
    pub rank: u64,
}

/// Nonzero graded Betti numbers, sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map_or(0, |e| e.rank)
    }

    /// Text grid in the usual layout: columns are homological degrees `i`,
    /// rows are `j - i`.
    pub fn grid(&self) -> String {
        if self.entries.is_empty() {
            return String::from("(empty)\n");
        }
        let rows: Vec<i64> = {
            let lo = self.entries.iter().map(|e| e.j - e.i as i64).min().unwrap();
            let hi = self.entries.iter().map(|e| e.j - e.i as i64).max().unwrap();
            (lo..=hi).collect()
        };
        let width = self
            .entries
            .iter()
            .map(|e| e.rank.to_string().len())
            .max()
            .unwrap_or(1)
            .max(self.n.to_string().len())
            + 1;
        let mut out = format!("{:>5}:", "");
        for i in 0..=self.n {
            out.push_str(&format!("{i:>width$}"));
        }
        out.push('\n');
        for r in rows {
            out.push_str(&format!("{r:>5}:"));
            for i in 0..=self.n {
                let b = self.get(i, r + i as i64);
                let cell = if b == 0 { "-".to_string() } else { b.to_string() };
                out.push_str(&format!("{cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AInvariant {
    pub value: i64,
}

struct KoszulData {
    ring: Ring,
    std: BTreeMap<u64, Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    subsets: Vec<Vec<Vec<usize>>>,
}

impl KoszulData {
    fn new(ideal: &Ideal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(AlgebraError::UnitIdeal);
        }
        let dim = krull_dim(ideal)?;
        if dim != 0 {
            return Err(AlgebraError::NotArtinian(dim));
        }
        let ring = ideal.ring().clone();
        let std = standard_monomials(ideal)?;
        let index = std
            .values()
            .flat_map(|ms| ms.iter().cloned().enumerate().map(|(i, m)| (m, i)))
            .collect();
        let n = ring.nvars();
        let mut subsets = vec![Vec::new(); n + 1];
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
            subsets[s.len()].push(s);
        }
        for level in subsets.iter_mut() {
            level.sort();
        }
        Ok(KoszulData {
            ring,
            std,
            index,
            subsets,
        })
    }

    fn weight(&self, s: &[usize]) -> u64 {
        s.iter().map(|&v| self.ring.weights()[v]).sum()
    }

    /// Basis of `(K_i ⊗ P/I)_j` as (subset index, std-monomial degree) blocks
    /// with their offsets.
    fn blocks(&self, i: usize, j: i64) -> (Vec<(usize, u64, usize)>, usize) {
        let mut out = Vec::new();
        let mut offset = 0;
        if i >= self.subsets.len() {
            return (out, 0);
        }
        for (k, s) in self.subsets[i].iter().enumerate() {
            let w = self.weight(s) as i64;
            if j < w {
                continue;
            }
            let d = (j - w) as u64;
            if let Some(ms) = self.std.get(&d) {
                out.push((k, d, offset));
                offset += ms.len();
            }
        }
        (out, offset)
    }

    /// Matrix of `d_i : (K_i)_j -> (K_{i-1})_j`, one row per basis vector of
    /// the source.
    fn differential(&self, gb_reduce: &dyn Fn(&Polynomial) -> Polynomial, i: usize, j: i64) -> Vec<Vec<u32>> {
        let (src, _) = self.blocks(i, j);
        if i == 0 {
            return src
                .iter()
                .flat_map(|(_, d, _)| self.std[d].iter().map(|_| Vec::new()))
                .collect();
        }
        let (dst, dst_len) = self.blocks(i - 1, j);
        let dst_offset: HashMap<usize, usize> = dst.iter().map(|(k, _, o)| (*k, *o)).collect();
        let dst_pos: HashMap<&Vec<usize>, usize> = self.subsets[i - 1]
            .iter()
            .enumerate()
            .map(|(k, s)| (s, k))
            .collect();
        let p = self.ring.characteristic();
        let mut rows = Vec::new();
        for (k, d, _) in &src {
            let s = &self.subsets[i][*k];
            for m in &self.std[d] {
                let mut row = vec![0u32; dst_len];
                for (pos, &v) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let Some(&off) = dst_offset.get(&dst_pos[&rest]) else {
                        continue;
                    };
                    let image = gb_reduce(&Polynomial::term(&self.ring, 1, m.mul(&self.ring.var(v))));
                    let sign = if pos % 2 == 0 { 1 } else { p - 1 };
                    for (c, t) in image.terms() {
                        let col = off + self.index[t];
                        row[col] = ((row[col] as u64 + (*c as u64) * sign as u64) % p as u64) as u32;
                    }
                }
                rows.push(row);
            }
        }
        rows
    }
}

fn rank(rows: Vec<Vec<u32>>, p: u32) -> usize {
    if rows.first().is_none_or(|r| r.is_empty()) {
        0
    } else {
        rank_of(rows, p)
    }
}

/// Matrix of the Koszul differential `d_i` in internal degree `j`
/// (row-vector convention: rows index the source basis).
pub fn koszul_differential(ideal: &Ideal, i: usize, j: i64) -> Result<Vec<Vec<u32>>> {
    let data = KoszulData::new(ideal)?;
    let gb = ideal.gb();
    Ok(data.differential(&|f| gb.reduce(f), i, j))
}

pub fn koszul_betti(ideal: &Ideal) -> Result<BettiTable> {
    let data = KoszulData::new(ideal)?;
    let gb = ideal.gb();
    let reduce = |f: &Polynomial| gb.reduce(f);
    let n = data.ring.nvars();
    let p = data.ring.characteristic();
    let top = data.std.keys().next_back().copied().unwrap_or(0);
    let bound = (top + data.ring.weight_sum()) as i64;
    let mut entries = Vec::new();
    for j in 0..=bound {
        // ranks[i] = rank of d_i in degree j; d_0 = d_{n+1} = 0.
        let mut ranks = vec![0usize; n + 2];
        for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
            *r = rank(data.differential(&reduce, i, j), p);
        }
        for i in 0..=n {
            let (_, dim) = data.blocks(i, j);
            let b = dim - ranks[i] - ranks[i + 1];
            if b > 0 {
                entries.push(BettiEntry { i, j, rank: b as u64 });
            }
        }
    }
    entries.sort_by_key(|e| (e.i, e.j));
    Ok(BettiTable { n, entries })
}

/// Twists of the last module of the minimal resolution, with multiplicity.
pub fn back_twists(ideal: &Ideal) -> Result<Vec<i64>> {
    let table = koszul_betti(ideal)?;
    Ok(twists_of(&table))
}

fn twists_of(table: &BettiTable) -> Vec<i64> {
    let mut out: Vec<i64> = table
        .entries
        .iter()
        .filter(|e| e.i == table.n)
        .flat_map(|e| std::iter::repeat_n(e.j, e.rank as usize))
        .collect();
    out.sort_unstable();
    out
}

pub fn a_invariant_poly(ring: &Ring) -> AInvariant {
    AInvariant {
        value: -(ring.weight_sum() as i64),
    }
}

/// `sum |f_i| - sum |x_i|` for a homogeneous regular sequence `f`.
pub fn a_invariant_ci(ring: &Ring, c: &Ideal) -> Result<AInvariant> {
    if !is_regular_sequence(ring, c.gens())? {
        return Err(AlgebraError::Hypothesis(format!(
            "generators {c} are not a regular sequence"
        )));
    }
    let mut total = 0i64;
    for f in c.gens() {
        match f.weighted_degree()? {
            Degree::Homogeneous(d) => total += d as i64,
            Degree::NotHomogeneous => return Err(AlgebraError::NotHomogeneous(f.to_string())),
        }
    }
    Ok(AInvariant {
        value: total - ring.weight_sum() as i64,
    })
}

/// Socle degrees read off the back twists: `{a(P) + b}`.
pub fn socle_from_betti(ideal: &Ideal) -> Result<Vec<i64>> {
    let a = a_invariant_poly(ideal.ring()).value;
    Ok(back_twists(ideal)?.into_iter().map(|b| a + b).collect())
}

/// Numerator `K(t)` of the Hilbert series `K(t) / prod (1 - t^{|x_i|})` of
/// `P/I`, from the leading-term ideal. Coefficients keyed by exponent.
pub fn hilbert_numerator(ideal: &Ideal) -> BTreeMap<i64, i64> {
    let ring = ideal.ring();
    let gens: Vec<Vec<u32>> = ideal
        .gb()
        .leading_monomials()
        .map(|m| m.exps().to_vec())
        .collect();
    let mut out = BTreeMap::new();
    numerator_rec(minimalize(gens), ring.weights(), 0, 1, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let divides = |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(x, y)| x <= y);
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

// K(P/(M, m)) = K(P/M) - t^{|m|} K(P/(M : m)).
fn numerator_rec(gens: Vec<Vec<u32>>, weights: &[u64], shift: i64, sign: i64, out: &mut BTreeMap<i64, i64>) {
    let Some((last, rest)) = gens.split_last() else {
        *out.entry(shift).or_insert(0) += sign;
        return;
    };
    let deg: i64 = last.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    let colon: Vec<Vec<u32>> = rest
        .iter()
        .map(|g| g.iter().zip(last).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    numerator_rec(rest.to_vec(), weights, shift, sign, out);
    numerator_rec(minimalize(colon), weights, shift + deg, -sign, out);
}

/// a-invariant of a Cohen-Macaulay quotient `P/I`, as the degree of its
/// Hilbert series: `deg K(t) - sum |x_i|`.
pub fn a_invariant_cm(ideal: &Ideal) -> Result<AInvariant> {
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let k = hilbert_numerator(ideal);
    let deg = *k.keys().next_back().expect("nonzero numerator for a proper ideal");
    Ok(AInvariant {
        value: deg - ideal.ring().weight_sum() as i64,
    })
}
