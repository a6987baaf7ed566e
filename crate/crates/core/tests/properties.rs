use num_bigint::BigInt;
use proptest::prelude::*;

use fano_core::arith::CoeffRing;
use fano_core::classifier::{classify, expected_dimension, normalize, pad_degrees, FanoSetup};
use fano_core::grassmann::{count_planes, planes_meet};
use fano_core::verifier::{chart_ideal, fano_points, random_instance};
use fano_core::{
    binomial, gaussian_binomial, Exec, Integers, MPoly, Monomial, PivotSet, PlaneRref, PrimeField,
    Strategy as Search, DEFAULT_BUDGET,
};

fn field() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(|p| PrimeField::new(p).unwrap())
}

type Terms = Vec<(Vec<u32>, u32)>;

fn terms(nvars: usize, max_deg: u32, p: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), 0..p), 0..6)
}

fn build(field: PrimeField, nvars: usize, terms: &[(Vec<u32>, u32)]) -> MPoly<PrimeField> {
    MPoly::from_terms(field, nvars, terms.iter().map(|(e, c)| (Monomial::new(e.clone()), *c)))
}

fn poly_triple() -> impl Strategy<Value = (PrimeField, Terms, Terms, Terms)> {
    field().prop_flat_map(|f| {
        let p = f.p();
        (Just(f), terms(3, 3, p), terms(3, 3, p), terms(3, 3, p))
    })
}

proptest! {
    #[test]
    fn polynomial_ring_axioms((f, a, b, c) in poly_triple()) {
        let (a, b, c) = (build(f, 3, &a), build(f, 3, &b), build(f, 3, &c));
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn display_parse_round_trip((f, a, _b, _c) in poly_triple()) {
        let a = build(f, 3, &a);
        let parsed = MPoly::parse(&a.to_string(), 3, f).unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        (f, a, b, _c) in poly_triple(),
        pt in prop::collection::vec(0u32..1000, 3),
    ) {
        let pt: Vec<u32> = pt.iter().map(|v| v % f.p()).collect();
        let (a, b) = (build(f, 3, &a), build(f, 3, &b));
        let (ea, eb) = (a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().evaluate(&pt).unwrap(), f.mul(ea, eb));
        prop_assert_eq!(a.add(&b).unwrap().evaluate(&pt).unwrap(), f.add(ea, eb));
    }

    #[test]
    fn integer_restriction_is_a_homomorphism(
        a in prop::collection::vec((prop::collection::vec(0u32..=2, 4), -5i64..=5), 0..5),
        b in prop::collection::vec((prop::collection::vec(0u32..=2, 4), -5i64..=5), 0..5),
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 2),
    ) {
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assume!(Integers.rank(&rows) == 2);
        let mk = |t: &[(Vec<u32>, i64)]| {
            MPoly::from_terms(Integers, 4, t.iter().map(|(e, c)| (Monomial::new(e.clone()), BigInt::from(*c))))
        };
        let (a, b) = (mk(&a), mk(&b));
        let ra = a.restrict_to_plane(&rows).unwrap();
        let rb = b.restrict_to_plane(&rows).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().restrict_to_plane(&rows).unwrap(), ra.mul(&rb).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().restrict_to_plane(&rows).unwrap(), ra.add(&rb).unwrap());
    }

    #[test]
    fn plane_canonical_form_ignores_row_operations(
        f in field(),
        rows in prop::collection::vec(prop::collection::vec(0u32..1000, 5), 2),
        mix in prop::collection::vec(0u32..1000, 4),
    ) {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|v| v % f.p()).collect()).collect();
        let mix: Vec<u32> = mix.iter().map(|v| v % f.p()).collect();
        prop_assume!(f.rank(&rows) == 2);
        prop_assume!(f.rank(&[mix[0..2].to_vec(), mix[2..4].to_vec()]) == 2);
        let combined: Vec<Vec<u32>> = (0..2)
            .map(|i| {
                (0..5)
                    .map(|j| f.add(f.mul(mix[2 * i], rows[0][j]), f.mul(mix[2 * i + 1], rows[1][j])))
                    .collect()
            })
            .collect();
        let a = PlaneRref::from_rows(f, &rows).unwrap();
        let b = PlaneRref::from_rows(f, &combined).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(planes_meet(&a, &b).unwrap());
        prop_assert_eq!(a.points().len() as u32, f.p() + 1);
    }

    #[test]
    fn meeting_is_symmetric(
        f in field(),
        a in prop::collection::vec(prop::collection::vec(0u32..1000, 4), 2),
        b in prop::collection::vec(prop::collection::vec(0u32..1000, 4), 2),
    ) {
        let reduce = |m: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            m.iter().map(|r| r.iter().map(|v| v % f.p()).collect()).collect()
        };
        let (a, b) = (reduce(&a), reduce(&b));
        prop_assume!(f.rank(&a) == 2 && f.rank(&b) == 2);
        let (a, b) = (PlaneRref::from_rows(f, &a).unwrap(), PlaneRref::from_rows(f, &b).unwrap());
        let meet = planes_meet(&a, &b).unwrap();
        prop_assert_eq!(meet, planes_meet(&b, &a).unwrap());
        let shared = a.points().iter().any(|p| b.points().contains(p));
        prop_assert_eq!(meet, shared);
    }

    #[test]
    fn gaussian_binomial_symmetry_and_limit(a in 0u64..9, b in 0u64..9, q in prop::sample::select(vec![2u64, 3, 4, 5, 8, 9])) {
        prop_assume!(b <= a);
        let g = gaussian_binomial(a, b, q).unwrap();
        prop_assert_eq!(&g, &gaussian_binomial(a, a - b, q).unwrap());
        // Counting subspaces over F_q dominates counting subsets.
        let c = binomial(a, b as i64);
        prop_assert!(g >= c);
    }

    #[test]
    fn plane_count_duality(n in 1usize..6, k in 0usize..5, f in field()) {
        prop_assume!(k < n);
        prop_assert_eq!(count_planes(n, k, f).unwrap(), count_planes(n, n - k - 1, f).unwrap());
    }

    #[test]
    fn classify_is_padding_invariant(
        n in 3u32..30,
        degrees in prop::collection::vec(1u32..7, 1..4),
        k in 1u32..6,
        extra in 0u32..6,
    ) {
        let setup = FanoSetup::new(n, degrees, k);
        prop_assume!(normalize(&setup).is_ok());
        let base = classify(&setup).unwrap();
        let padded = pad_degrees(&setup, n + extra).unwrap();
        prop_assert!(classify(&padded).unwrap().same_verdict(&base));
        prop_assert_eq!(expected_dimension(&padded), base.t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strategies_and_modes_agree(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let f = PrimeField::new(p).unwrap();
        let x = random_instance(4, &[2], f, seed).unwrap();
        let global = fano_points(&x, 1, DEFAULT_BUDGET, Search::GlobalStream, Exec::Sequential).unwrap();
        let seq = fano_points(&x, 1, DEFAULT_BUDGET, Search::Charts, Exec::Sequential).unwrap();
        let par = fano_points(&x, 1, DEFAULT_BUDGET, Search::Charts, Exec::Parallel).unwrap();
        prop_assert_eq!(&global.planes, &seq.planes);
        prop_assert_eq!(&seq.planes, &par.planes);
        prop_assert!(global.planes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn chart_ideal_zeros_are_the_contained_planes(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3])) {
        let f = PrimeField::new(p).unwrap();
        let x = random_instance(3, &[2], f, seed).unwrap();
        let found = fano_points(&x, 1, DEFAULT_BUDGET, Search::Charts, Exec::Sequential).unwrap();
        let mut from_ideals = Vec::new();
        for pivots in PivotSet::all(3, 1) {
            let ideal = chart_ideal(&x, 1, &pivots).unwrap();
            prop_assert_eq!(ideal.generators.len(), 3);
            let free = ideal.variables.len() as u32;
            for idx in 0..(p as u32).pow(free) {
                let mut rest = idx;
                let mut params = vec![0u32; free as usize];
                for slot in params.iter_mut().rev() {
                    *slot = rest % p as u32;
                    rest /= p as u32;
                }
                if ideal.vanishes_at(&params).unwrap() {
                    from_ideals.push(fano_core::grassmann::plane_from_chart(f, 3, &pivots, &params).unwrap());
                }
            }
        }
        from_ideals.sort();
        prop_assert_eq!(from_ideals, found.planes);
    }
}
