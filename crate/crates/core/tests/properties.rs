//! Algebraic invariants on random inputs.

use proptest::prelude::*;

use kzduality::combinatorics::crossing_chi;
use kzduality::masep::{h_on_window, verify_global_duality, verify_local_duality_on, Config};
use kzduality::reduction::{psi_positions, psi_rank2, rank2_sectors, rank2_shapes};
use kzduality::serialize::{laurent_from_json, laurent_to_json, zpoly_from_json, zpoly_to_json};
use kzduality::{hecke, LaurentQT, RatFuncQT, ZPoly};

fn laurent() -> impl Strategy<Value = LaurentQT> {
    prop::collection::vec((-4i64..=4, 0u32..3, -3i32..=3), 0..5)
        .prop_map(|terms| terms.into_iter().fold(LaurentQT::zero(), |acc, (c, a, b)| acc + LaurentQT::monomial(c, a, b)))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentQT> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFuncQT> {
    (laurent(), nonzero_laurent()).prop_map(|(a, b)| RatFuncQT::new(a, b).unwrap())
}

/// Polynomials in three variables of degree at most two per variable.
fn zpoly3() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((prop::array::uniform3(0u32..3), -3i64..=3, 0u32..2, -1i32..=1), 0..6).prop_map(|terms| {
        let mut f = ZPoly::zero(3);
        for (e, c, a, b) in terms {
            f.add_term(e.to_vec(), &RatFuncQT::monomial(c, a, b));
        }
        f
    })
}

/// A configuration on `width` sites with species in `0..=r`.
fn config(width: usize, r: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=r, width)
}

fn positions(occ: &[u32], r: u32) -> Vec<Vec<i64>> {
    Config::from_parts(occ).positions(r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn hecke_quadratic_and_inverse(f in zpoly3(), i in 0usize..2) {
        let t = RatFuncQT::t();
        let tf = hecke::t_op(i, &f).unwrap();
        let ttf = hecke::t_op(i, &tf).unwrap();
        // T² = (t − 1)T + t
        let rhs = &tf.scale(&(&t - &RatFuncQT::one())) + &f.scale(&t);
        prop_assert_eq!(ttf, rhs);
        prop_assert_eq!(hecke::t_inv(i, &tf).unwrap(), f);
    }

    #[test]
    fn hecke_braid(f in zpoly3()) {
        let a = hecke::t_op(0, &hecke::t_op(1, &hecke::t_op(0, &f).unwrap()).unwrap()).unwrap();
        let b = hecke::t_op(1, &hecke::t_op(0, &hecke::t_op(1, &f).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn crossing_matches_inversion_count(occ in config(9, 3)) {
        let brute = (0..occ.len())
            .flat_map(|a| (a + 1..occ.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| occ[a] > occ[b] && occ[b] > 0)
            .count() as u64;
        prop_assert_eq!(crossing_chi(&positions(&occ, 3)).unwrap(), brute);
    }

    #[test]
    fn psi_positions_is_translation_invariant(nu in config(6, 2), mu in config(6, 2), shift in 1usize..4) {
        let lists = positions(&mu, 2);
        let base = psi_positions(&nu, &lists[0], Some(&lists[1])).unwrap();
        let padded: Vec<u32> = std::iter::repeat_n(0, shift).chain(nu.iter().copied()).collect();
        let moved: Vec<Vec<i64>> = lists.iter().map(|l| l.iter().map(|x| x + shift as i64).collect()).collect();
        prop_assert_eq!(psi_positions(&padded, &moved[0], Some(&moved[1])).unwrap(), base);
    }

    #[test]
    fn h_global_duality_exact_path(
        nu in config(5, 1),
        mu in config(5, 2),
        offset in -2i64..=2,
    ) {
        let h = |a: &[u32], b: &[u32]| h_on_window(a, b);
        let ok = verify_global_duality(&h, &Config::new(offset, nu), &Config::new(0, mu), 256).unwrap();
        prop_assert!(ok);
    }

    #[test]
    fn laurent_json_round_trip(a in laurent()) {
        prop_assert_eq!(laurent_from_json(&laurent_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn zpoly_json_round_trip(f in zpoly3()) {
        prop_assert_eq!(zpoly_from_json(&zpoly_to_json(&f)).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_two_closed_form_is_locally_dual(
        shape in prop::sample::select(rank2_shapes(6)),
        seed_mu in any::<prop::sample::Index>(),
        seed_nu in any::<prop::sample::Index>(),
    ) {
        let (n, m1, m2, p) = shape;
        let (delta, epsilon) = rank2_sectors(n, m1, m2, p);
        let mus = kzduality::combinatorics::sector_enumerate(delta.parts());
        let nus = kzduality::combinatorics::sector_enumerate(epsilon.parts());
        let mu = mus[seed_mu.index(mus.len())].parts().to_vec();
        let nu = nus[seed_nu.index(nus.len())].parts().to_vec();
        let psi = |a: &[u32], b: &[u32]| psi_rank2(a, b).unwrap();
        let report = verify_local_duality_on(&psi, &[nu], &[mu]);
        prop_assert!(report.passed());
    }
}
