//! ASEP polynomials `f_μ`: the basis of each sector obtained from
//! `f_{μ⁻} = E_{μ⁻}` by inverse Hecke generators.

pub mod boson;
pub mod mpa;

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::json;

pub use boson::{
    boson_normal_form, boson_trace, boson_trace_twisted, BosonLetter, BosonNormalForm, BosonWord, NormalKey,
};
pub use mpa::{coefficient_cj, f_delta_rank2_closed, f_delta_sum_rank_r, mpa_f_rank2, mpa_f_rank_r};

use crate::combinatorics::{sector_enumerate, Composition};
use crate::engine::Engine;
use crate::exact_algebra::{RatFuncQT, ZPoly};
use crate::hecke::{self, HeckeError};
use crate::macdonald::MacdonaldError;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AsepError {
    #[error(transparent)]
    Macdonald(#[from] MacdonaldError),
    #[error("unsupported shape: {0}")]
    Shape(String),
}

impl From<HeckeError> for AsepError {
    fn from(e: HeckeError) -> Self {
        AsepError::Macdonald(e.into())
    }
}

/// `f_μ` together with its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPoly {
    pub mu: Composition,
    pub poly: ZPoly,
}

/// Which descent is peeled off first when walking from `μ` down to `μ⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentChoice {
    First,
    Last,
}

fn descent(mu: &[u32], choice: DescentChoice) -> Option<usize> {
    let mut it = (0..mu.len().saturating_sub(1)).filter(|&i| mu[i] > mu[i + 1]);
    match choice {
        DescentChoice::First => it.next(),
        DescentChoice::Last => it.next_back(),
    }
}

impl Engine {
    /// `f_μ`, via `f_μ = T_i⁻¹ f_{s_i μ}` at the first descent `i` of `μ`.
    pub fn f(&self, mu: &[u32]) -> Result<Arc<ZPoly>, MacdonaldError> {
        self.check_limits(mu)?;
        if let Some(f) = self.f_cache.get(&mu.to_vec()) {
            return Ok(f);
        }
        let poly = match descent(mu, DescentChoice::First) {
            None => (*self.e(mu)?).clone(),
            Some(i) => {
                let lower = Composition::from(mu).swapped(i);
                hecke::t_inv(i, &*self.f(&lower)?)?
            }
        };
        Ok(self.f_cache.insert(mu.to_vec(), poly))
    }

    /// `f_μ` at `q = t^{-m}`; fails if `f_μ` is singular there.
    pub fn f_resonant(&self, mu: &[u32], m: i32) -> Result<Arc<ZPoly>, MacdonaldError> {
        self.f_resonant.get_or_try(&(mu.to_vec(), m), || Ok(self.f(mu)?.substitute_q(-m)?))
    }
}

pub fn asep_polynomial(engine: &Engine, mu: &[u32]) -> Result<FPoly, AsepError> {
    Ok(FPoly { mu: Composition::from(mu), poly: (*engine.f(mu)?).clone() })
}

/// `f_μ` built without the engine's cache along the path fixed by `choice`.
/// With `DescentChoice::Last` the reduced word differs from the cached one
/// whenever `μ` has two or more descents.
pub fn asep_polynomial_along(engine: &Engine, mu: &[u32], choice: DescentChoice) -> Result<ZPoly, AsepError> {
    let mut memo: HashMap<Vec<u32>, ZPoly> = HashMap::new();
    fn go(
        engine: &Engine,
        mu: &[u32],
        choice: DescentChoice,
        memo: &mut HashMap<Vec<u32>, ZPoly>,
    ) -> Result<ZPoly, AsepError> {
        if let Some(f) = memo.get(mu) {
            return Ok(f.clone());
        }
        let f = match descent(mu, choice) {
            None => (*engine.e(mu)?).clone(),
            Some(i) => {
                let lower = Composition::from(mu).swapped(i);
                hecke::t_inv(i, &go(engine, &lower, choice, memo)?)?
            }
        };
        memo.insert(mu.to_vec(), f.clone());
        Ok(f)
    }
    go(engine, mu, choice, &mut memo)
}

/// Checks the exchange relations on a sector for a supplied family `f`:
/// `T_i f_ν = f_{s_iν}` if `ν_i > ν_{i+1}`, `t f_ν` if equal, and
/// `(t − 1) f_ν + t f_{s_iν}` if `ν_i < ν_{i+1}`.
pub fn verify_exchange_with<F>(delta: &[u32], mut f: F) -> Report
where
    F: FnMut(&[u32]) -> Result<ZPoly, AsepError>,
{
    let mut report = Report::new(format!("exchange relations on sector {}", Composition::from(delta)));
    let sector = sector_enumerate(delta);
    let mut family: HashMap<Composition, ZPoly> = HashMap::new();
    for nu in &sector {
        match f(nu) {
            Ok(p) => {
                family.insert(nu.clone(), p);
            }
            Err(e) => {
                report.fail(json!({ "nu": nu.to_string(), "error": e.to_string() }));
                return report;
            }
        }
    }
    let t = RatFuncQT::t();
    for nu in &sector {
        let f_nu = &family[nu];
        for i in 0..nu.n().saturating_sub(1) {
            let lhs = match hecke::t_op(i, f_nu) {
                Ok(x) => x,
                Err(e) => {
                    report.fail(json!({ "nu": nu.to_string(), "i": i + 1, "error": e.to_string() }));
                    continue;
                }
            };
            let swapped = nu.swapped(i);
            let rhs = match nu[i].cmp(&nu[i + 1]) {
                std::cmp::Ordering::Greater => family[&swapped].clone(),
                std::cmp::Ordering::Equal => f_nu.scale(&t),
                std::cmp::Ordering::Less => {
                    &f_nu.scale(&(&t - &RatFuncQT::one())) + &family[&swapped].scale(&t)
                }
            };
            report.record(lhs == rhs, || json!({ "nu": nu.to_string(), "i": i + 1 }));
        }
    }
    report
}

pub fn verify_exchange(engine: &Engine, delta: &[u32]) -> Report {
    verify_exchange_with(delta, |nu| Ok((*engine.f(nu)?).clone()))
}

/// `f_{(μ_n, μ_1, …, μ_{n−1})}(q z_n, z_1, …, z_{n−1}) = q^{μ_n} f_μ(z)`.
pub fn verify_cyclic(engine: &Engine, mu: &[u32]) -> Result<bool, AsepError> {
    let n = mu.len();
    let mut rotated = vec![mu[n - 1]];
    rotated.extend_from_slice(&mu[..n - 1]);
    // the substitution z ↦ (q z_n, z_1, …, z_{n−1}) is exactly ω
    let lhs = hecke::omega(&*engine.f(&rotated)?);
    let rhs = engine.f(mu)?.scale(&RatFuncQT::q().pow(mu[n - 1]));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let engine = Engine::new();
        assert_eq!(*engine.f(&[1, 0, 1]).unwrap(), ZPoly::z_pow(&[1, 0, 1]));
        assert_eq!(*engine.f(&[1, 2]).unwrap(), ZPoly::z_pow(&[1, 2]));
        assert_eq!(*engine.f(&[2, 1]).unwrap(), ZPoly::z_pow(&[2, 1]));
        let c = (RatFuncQT::one() - RatFuncQT::t()) * RatFuncQT::inv_one_minus(1, 1);
        let f02 = &ZPoly::z_pow(&[0, 2]) + &ZPoly::z_pow(&[1, 1]).scale(&c);
        assert_eq!(*engine.f(&[0, 2]).unwrap(), f02);
    }

    #[test]
    fn exchange_and_cyclic() {
        let engine = Engine::new();
        assert!(verify_exchange(&engine, &[0, 1, 2]).passed());
        for mu in [&[0u32, 1][..], &[1, 2], &[0, 0], &[2, 0, 1]] {
            assert!(verify_cyclic(&engine, mu).unwrap(), "{mu:?}");
        }
    }

    #[test]
    fn corrupted_family_is_caught() {
        let engine = Engine::new();
        let target = Composition::from(vec![1, 2, 0]);
        let report = verify_exchange_with(&[0, 1, 2], |nu| {
            let mut f = (*engine.f(nu)?).clone();
            if nu == target.parts() {
                let (e, _) = f.terms().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
                f = &f - &ZPoly::monomial(e.clone(), f.coeff(&e));
            }
            Ok(f)
        });
        assert!(!report.passed());
        assert!(report.witness.unwrap().get("i").is_some());
    }

    #[test]
    fn path_independence() {
        let engine = Engine::new();
        for mu in [vec![2u32, 1, 0], vec![1, 0, 2, 0], vec![2, 0, 1, 0]] {
            let a = asep_polynomial_along(&engine, &mu, DescentChoice::First).unwrap();
            let b = asep_polynomial_along(&engine, &mu, DescentChoice::Last).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, *engine.f(&mu).unwrap());
        }
    }
}
