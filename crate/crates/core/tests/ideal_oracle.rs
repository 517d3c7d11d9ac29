mod common;

use common::*;
use frobsoc_core::Ideal;
use proptest::prelude::*;

fn colon_by(i: &[Vec<u32>], m: &[u32]) -> Vec<Vec<u32>> {
    i.iter()
        .map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect()
}

fn colon_oracle(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    b.iter()
        .map(|m| minimalize(&colon_by(a, m)))
        .reduce(|acc, next| intersect_oracle(&acc, &next))
        .unwrap()
}

/// `(p, weights, gens of A, gens of B, e)`.
type MonomialCase = (u64, Vec<u64>, Vec<Vec<u32>>, Vec<Vec<u32>>, u32);

fn monomial_case() -> impl Strategy<Value = MonomialCase> {
    (2usize..=3).prop_flat_map(|n| {
        (
            prop::sample::select(vec![2u64, 3, 5]),
            prop::collection::vec(1u64..=2, n),
            exps_strategy(n, 4, 1..=4),
            exps_strategy(n, 4, 1..=4),
            1u32..=2,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monomial_operations_match_lattice(case in monomial_case()) {
        let (p, weights, a, b, e) = case;
        let r = ring(p, &weights);
        let (ia, ib) = (monomial_ideal(&r, &a), monomial_ideal(&r, &b));
        let q = (p as u32).pow(e);
        prop_assert_eq!(monomial_gens(&ia.intersect(&ib).unwrap()), intersect_oracle(&a, &b));
        prop_assert_eq!(monomial_gens(&ia.colon(&ib).unwrap()), colon_oracle(&a, &b));
        prop_assert_eq!(monomial_gens(&ia.product(&ib).unwrap()), product_oracle(&a, &b));
        prop_assert_eq!(monomial_gens(&ia.frobenius_power(q as u64).unwrap()), frobenius_oracle(&a, q));
        let mut both = a.clone();
        both.extend(b.iter().cloned());
        prop_assert_eq!(monomial_gens(&ia.sum(&ib).unwrap()), minimalize(&both));
    }
}

type PolyCase = (u64, usize, u32, Vec<PolySpec>, Vec<PolySpec>, Vec<(u32, u32)>);

fn poly_case() -> impl Strategy<Value = PolyCase> {
    (
        prop::sample::select(vec![2u64, 3]),
        2usize..=3,
        1u32..=2,
        poly_specs(1..=3),
        poly_specs(1..=2),
        prop::collection::vec((any::<u32>(), 0u32..=1), 3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// `I^[q]` does not depend on the generating set chosen for `I`.
    #[test]
    fn frobenius_power_ignores_generating_set(case in poly_case()) {
        let (p, n, e, specs, other, mix) = case;
        let r = ring(p, &vec![1; n]);
        let gens = polys(&r, &specs);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        prop_assume!(!i.is_zero());
        let q = p.pow(e);
        let expected = i.frobenius_power(q).unwrap();

        let from_gb = Ideal::new(&r, i.gb().elements().to_vec()).unwrap();
        prop_assert!(from_gb.frobenius_power(q).unwrap().equals(&expected).unwrap());

        // Append x_k^s * g combinations of the original generators.
        let mut extended = gens.clone();
        let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let top = nonzero.iter().filter_map(|g| g.max_degree()).max().unwrap();
        let mut combo = frobsoc_core::Polynomial::zero(&r);
        for (g, (c, s)) in nonzero.iter().zip(mix.iter().cycle()) {
            let pad = top - g.max_degree().unwrap();
            let mut exps = vec![0u32; n];
            exps[(*s as usize) % n] = pad as u32;
            let m = r.monomial(exps);
            combo = combo.checked_add(&g.mul_monomial(&m).scale(c % p as u32)).unwrap();
        }
        extended.push(combo);
        let ext = Ideal::new(&r, extended).unwrap();
        prop_assert!(ext.equals(&i).unwrap());
        prop_assert!(ext.frobenius_power(q).unwrap().equals(&expected).unwrap());

        // Additivity and multiplicativity.
        let j = Ideal::new(&r, polys(&r, &other)).unwrap();
        let jq = j.frobenius_power(q).unwrap();
        prop_assert!(i.sum(&j).unwrap().frobenius_power(q).unwrap()
            .equals(&expected.sum(&jq).unwrap()).unwrap());
        prop_assert!(i.product(&j).unwrap().frobenius_power(q).unwrap()
            .equals(&expected.product(&jq).unwrap()).unwrap());
    }

    #[test]
    fn containment_laws(case in poly_case()) {
        let (p, n, e, specs, other, _) = case;
        let r = ring(p, &vec![1; n]);
        let i = Ideal::new(&r, polys(&r, &specs)).unwrap();
        let j = Ideal::new(&r, polys(&r, &other)).unwrap();
        prop_assume!(!i.is_zero() && !j.is_zero());
        let q = p.pow(e);
        let iq = i.frobenius_power(q).unwrap();
        prop_assert!(iq.is_subset_of(&i).unwrap());
        let ij = i.product(&j).unwrap();
        let cap = i.intersect(&j).unwrap();
        prop_assert!(ij.is_subset_of(&cap).unwrap());
        prop_assert!(cap.is_subset_of(&i).unwrap() && cap.is_subset_of(&j).unwrap());
        let colon = i.colon(&j).unwrap();
        prop_assert!(i.is_subset_of(&colon).unwrap());
        prop_assert!(colon.product(&j).unwrap().is_subset_of(&i).unwrap());
        prop_assert!(i.is_subset_of(&i.sum(&j).unwrap()).unwrap());
    }
}
