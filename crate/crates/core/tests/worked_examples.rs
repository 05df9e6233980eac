//! Small hand-computed values, checked through the public API.

use kzduality::asep_poly::{
    boson_normal_form, boson_trace, coefficient_cj, f_delta_rank2_closed, f_delta_sum_rank_r, mpa_f_rank2,
    mpa_f_rank_r, BosonLetter, BosonWord,
};
use kzduality::combinatorics::{crossing_chi, resonant_sector, stats_omega_indicator};
use kzduality::exact_algebra::coeff_p_poly;
use kzduality::hecke;
use kzduality::macdonald::{exchange_step_e, expand_e_in_f};
use kzduality::masep::{verify_local_duality, Config};
use kzduality::reduction::{h_observable, psi_positions, reduce_expand};
use kzduality::{Composition, Engine, LaurentQT, RatFuncQT, ZPoly};

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

/// `(1 − t)/(1 − qt)`.
fn hop() -> RatFuncQT {
    (RatFuncQT::one() - RatFuncQT::t()) * RatFuncQT::inv_one_minus(1, 1)
}

fn f02() -> ZPoly {
    &ZPoly::z_pow(&[0, 2]) + &ZPoly::z_pow(&[1, 1]).scale(&hop())
}

#[test]
fn hecke_generators_on_linear_polynomials() {
    let z1 = ZPoly::var(2, 0);
    let z2 = ZPoly::var(2, 1);
    let t = RatFuncQT::t();
    assert_eq!(hecke::t_op(0, &z1).unwrap(), z2);
    let expected = &z2.scale(&(&t - &RatFuncQT::one())) + &z1.scale(&t);
    assert_eq!(hecke::t_op(0, &z2).unwrap(), expected);
    assert_eq!(hecke::l_op(0, &z1).unwrap(), &z2 - &z1.scale(&t));
    assert_eq!(hecke::l_op(0, &z2).unwrap(), &z1.scale(&t) - &z2);
    assert_eq!(hecke::y_op(0, &ZPoly::one(2)).unwrap(), ZPoly::constant(2, t));
    let omega = hecke::omega(&ZPoly::z_pow(&[1, 3]));
    assert_eq!(omega, ZPoly::z_pow(&[3, 1]).scale(&RatFuncQT::q()));
}

#[test]
fn macdonald_two_variables() {
    let engine = Engine::new();
    let e10 = &ZPoly::var(2, 0) + &ZPoly::var(2, 1).scale(&(RatFuncQT::q() * hop()));
    assert_eq!(*engine.e(&[0, 1]).unwrap(), ZPoly::var(2, 1));
    assert_eq!(*engine.e(&[1, 0]).unwrap(), e10);
    assert_eq!(exchange_step_e(&engine, &[0, 1], 0).unwrap(), e10);
    assert!(exchange_step_e(&engine, &[0, 0], 0).is_err());
    assert_eq!(exchange_step_e(&engine, &[0, 2], 0).unwrap(), *engine.e(&[2, 0]).unwrap());
    let expansion = expand_e_in_f(&engine, &[1, 0]).unwrap();
    assert_eq!(expansion[&c("(1,0)")], RatFuncQT::one());
    assert_eq!(expansion[&c("(0,1)")], RatFuncQT::q() * hop());
}

#[test]
fn asep_polynomials_by_three_routes() {
    let engine = Engine::new();
    assert_eq!(*engine.f(&[0, 2]).unwrap(), f02());
    assert_eq!(mpa_f_rank2(&[0, 2]).unwrap(), f02());
    assert_eq!(f_delta_rank2_closed(2, 0, 1).unwrap(), f02());
    assert_eq!(f_delta_sum_rank_r(&[0, 2]).unwrap(), f02());
    assert_eq!(mpa_f_rank2(&[1, 1]).unwrap(), ZPoly::z_pow(&[1, 1]));
    assert_eq!(f_delta_rank2_closed(2, 1, 1).unwrap(), ZPoly::z_pow(&[1, 2]));
    assert_eq!(mpa_f_rank_r(&[0, 0, 3], 3).unwrap(), *engine.f(&[0, 0, 3]).unwrap());
    assert_eq!(mpa_f_rank_r(&[1, 0, 1], 3).unwrap(), ZPoly::z_pow(&[1, 0, 1]));
}

#[test]
fn boson_traces() {
    let nf = |w: Vec<BosonLetter>| boson_normal_form(&BosonWord::new(w));
    let geometric = RatFuncQT::inv_one_minus(1, 0);
    assert_eq!(boson_trace(&nf(vec![]), 0), geometric);
    let expected = &geometric - &RatFuncQT::inv_one_minus(1, 1);
    assert_eq!(boson_trace(&nf(vec![BosonLetter::PhiDagger, BosonLetter::Phi]), 0), expected);
    assert!(boson_trace(&nf(vec![BosonLetter::Phi]), 0).is_zero());
    assert_eq!(coefficient_cj(&[1, 0], &[0, 1], 1).unwrap(), expected);
    assert!(coefficient_cj(&[1, 0], &[0, 0], 1).unwrap().is_zero());
}

#[test]
fn resonance_and_reduction() {
    let engine = Engine::new();
    let g = coeff_p_poly(&f02(), 1, 1).unwrap();
    assert_eq!(g, ZPoly::z_pow(&[1, 1]).scale(&(RatFuncQT::one() - RatFuncQT::t())));
    assert!(coeff_p_poly(&ZPoly::var(2, 0), 1, 1).unwrap().is_zero());
    assert_eq!(resonant_sector(&[0, 0, 2, 2], 2).unwrap(), c("(1,1,1,1)"));
    assert_eq!(resonant_sector(&[0, 0, 1, 2], 2).unwrap(), c("(0,1,1,1)"));
    let red = reduce_expand(&engine, &[0, 2], 1, 1).unwrap();
    assert_eq!(red.entries.len(), 1);
    assert_eq!(red.entries[&c("(1,1)")].to_string(), "1-t");
}

#[test]
fn statistics() {
    assert_eq!(stats_omega_indicator(&[0, 2], &[1, 1]).unwrap(), (1, true));
    assert!(!stats_omega_indicator(&[2, 0], &[0, 1]).unwrap().1);
    assert_eq!(stats_omega_indicator(&[1, 2], &[1, 1]).unwrap(), (1, true));
    assert_eq!(crossing_chi(&[vec![2], vec![1]]).unwrap(), 1);
    assert_eq!(crossing_chi(&[vec![1], vec![2]]).unwrap(), 0);
    assert_eq!(crossing_chi(&[vec![2, 5], vec![1, 3]]).unwrap(), 3);
    assert!(crossing_chi(&[vec![2, 1]]).is_err());
}

#[test]
fn observables() {
    let nu = Config::from_parts(&[1, 0, 1]);
    assert_eq!(psi_positions(&nu.occ, &[3], None).unwrap(), LaurentQT::t());
    assert!(h_observable(&[0, 0], &[vec![], vec![]]).unwrap().is_one());
    let delta_psi = |nu: &[u32], mu: &[u32]| if nu == mu { LaurentQT::one() } else { LaurentQT::zero() };
    assert!(verify_local_duality(&delta_psi, &[0, 1, 2], &[0, 1, 2]).passed());
}
