//! Homogeneous ideals and their algebra: sums, products, Frobenius powers,
//! intersections and colon ideals.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::parse::parse_poly;
use crate::poly::{same_ring, Polynomial};
use crate::ring::{MonomialOrder, Ring};

/// An ideal given by homogeneous generators. The reduced Gröbner basis for
/// the ring's order is computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; every other generator must be
    /// homogeneous and live in `ring`.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(AlgebraError::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.ring, &self.gens, self.ring.order())
                .expect("generators share the ideal's ring")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    /// True when every stored generator is a monomial.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(self.gb().contains(f))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gens.iter().all(|g| other.gb().contains(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gb().elements() == other.gb().elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                let h = f.checked_mul(g)?;
                if !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^[q]`, generated by the `q`-th powers of the stored generators.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.q_power(q))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() && self.ring.log_p(q).is_none() {
            return Err(AlgebraError::NotPowerOfP {
                q,
                p: self.ring.characteristic(),
            });
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let ext = self.ring.with_elimination_variable();
        let t = [1u32];
        let none = [0u32];
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(f.embed_with_prefix(&ext, &t));
        }
        for g in &other.gens {
            let g0 = g.embed_with_prefix(&ext, &none);
            let gt = g.embed_with_prefix(&ext, &t);
            gens.push(&g0 - &gt);
        }
        let gb = buchberger(&ext, &gens, MonomialOrder::Block(1))?;
        let mut out = Vec::new();
        for e in gb.elements() {
            if e.terms().iter().all(|(_, m)| m.exps()[0] == 0) {
                let r = e.restrict_drop_prefix(&self.ring, 1);
                out.extend(r.homogeneous_components());
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `(I : g)` for a single nonzero homogeneous `g`: `(I ∩ (g)) / g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if !same_ring(g.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        if g.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if self.gb().contains(g) {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gb()
            .elements()
            .iter()
            .map(|h| {
                h.exact_div(g).ok_or_else(|| {
                    AlgebraError::Internal(format!("{g} does not divide {h} in (I ∩ (g))"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = ∩_g (I : g)` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = acc.intersect(&c)?;
        }
        Ok(acc)
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.sum(j)
}

pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.product(j)
}

pub fn frobenius_power(i: &Ideal, q: u64) -> Result<Ideal> {
    i.frobenius_power(q)
}

pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersect(j)
}

pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.colon(j)
}

pub fn ideal_member(f: &Polynomial, i: &Ideal) -> Result<bool> {
    i.contains(f)
}

pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.equals(j)
}
