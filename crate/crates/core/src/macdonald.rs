//! Non-symmetric Macdonald polynomials `E_μ` and the triangular changes of
//! basis between `{E_μ}` and `{f_μ}`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinatorics::{
    compositions_bounded, dominance_compare, linear_extension_key, prec_less, reorder, sector_enumerate,
    spectral_vector, Composition, Order,
};
use crate::engine::{Engine, LimitError};
use crate::exact_algebra::{AlgebraError, LaurentQT, RatFuncQT, ZPoly};
use crate::hecke::{self, HeckeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MacdonaldError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error("spectral vectors of {0} and {1} coincide")]
    Degenerate(Composition, Composition),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("triangular expansion left a nonzero residual: {0}")]
    NonzeroResidual(String),
}

/// Compositions `ν` of length `n` with `|ν| = |λ|` and `ν⁺ <= λ` in
/// dominance, sorted increasingly along a linear extension of `≺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCone {
    pub lambda: Composition,
    pub basis: Vec<Composition>,
}

pub fn monomial_cone(lambda: &[u32]) -> MonomialCone {
    let lambda_sorted = reorder(lambda, Order::Dominant);
    let weight = lambda.iter().sum();
    let max_part = lambda_sorted.first().copied().unwrap_or(0);
    let mut basis: Vec<Composition> = compositions_bounded(weight, lambda.len(), max_part)
        .into_iter()
        .filter(|nu| {
            let np = reorder(nu, Order::Dominant);
            np == lambda_sorted || dominance_compare(&np, &lambda_sorted) == Some(std::cmp::Ordering::Less)
        })
        .collect();
    basis.sort_by_key(|nu| linear_extension_key(nu));
    MonomialCone { lambda: Composition::from(lambda_sorted), basis }
}

/// Compositions strictly below `μ` in `≺`, in decreasing linear-extension order.
fn lower_set(mu: &[u32]) -> Vec<Composition> {
    let mut lower: Vec<Composition> = monomial_cone(mu).basis.into_iter().filter(|nu| prec_less(nu, mu)).collect();
    lower.sort_by_key(|nu| Reverse(linear_extension_key(nu)));
    lower
}

impl Engine {
    /// `Y_i z^κ`; its coefficients lie in ℤ[q, t, 1/t].
    pub fn y_image(&self, i: usize, kappa: &[u32]) -> Result<Arc<ZPoly>, HeckeError> {
        self.y_images.get_or_try(&(i, kappa.to_vec()), || hecke::y_op(i, &ZPoly::z_pow(kappa)))
    }

    /// The monic non-symmetric Macdonald polynomial `E_μ`.
    pub fn e(&self, mu: &[u32]) -> Result<Arc<ZPoly>, MacdonaldError> {
        self.check_limits(mu)?;
        self.e_cache.get_or_try(&mu.to_vec(), || nonsymmetric_macdonald(self, mu))
    }

    /// `E_μ` at `q = t^{-m}`; fails if `E_μ` is singular there.
    pub fn e_resonant(&self, mu: &[u32], m: i32) -> Result<Arc<ZPoly>, MacdonaldError> {
        self.e_resonant.get_or_try(&(mu.to_vec(), m), || Ok(self.e(mu)?.substitute_q(-m)?))
    }
}

/// Solves the joint eigen-system `Y_i E = y_i(μ) E` triangularly.
///
/// Writing `E = Σ c_κ z^κ` with `c_μ = 1`, the `z^ν` coefficient of
/// `Y_i E = y_i(μ) E` reads `c_ν (y_i(ν) − y_i(μ)) = −Σ_{κ ≻ ν} c_κ [Y_i z^κ]_ν`,
/// so coefficients are determined in decreasing `≺` order, choosing for each
/// `ν` an index `i` where the spectral vectors differ.
pub fn nonsymmetric_macdonald(engine: &Engine, mu: &[u32]) -> Result<ZPoly, MacdonaldError> {
    let n = mu.len();
    let y_mu = spectral_vector(mu);
    let mut solved: Vec<(Vec<u32>, RatFuncQT)> = vec![(mu.to_vec(), RatFuncQT::one())];
    for nu in lower_set(mu) {
        let y_nu = spectral_vector(&nu);
        let i = (0..n)
            .find(|&i| y_nu.entries[i] != y_mu.entries[i])
            .ok_or_else(|| MacdonaldError::Degenerate(Composition::from(mu), nu.clone()))?;
        let mut acc = RatFuncQT::zero();
        for (kappa, c) in &solved {
            let image = engine.y_image(i, kappa)?;
            if let Some(x) = image.coeff_ref(&nu) {
                acc = &acc + &(c * x);
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = &y_nu.entries[i].to_ratfunc() - &y_mu.entries[i].to_ratfunc();
        let c_nu = -(&acc / &gap);
        solved.push((nu.into_parts(), c_nu));
    }
    Ok(ZPoly::from_terms(n, solved))
}

/// Independent construction of `E_μ`: the null vector of the stacked
/// matrices `Y_i − y_i(μ)` on `{μ} ∪ {ν ≺ μ}`, found by fraction-free
/// (Bareiss) elimination over ℤ[q, t, 1/t]. Intended for cross-checks.
pub fn nonsymmetric_macdonald_bareiss(mu: &[u32]) -> Result<ZPoly, MacdonaldError> {
    let n = mu.len();
    let mut support: Vec<Composition> = vec![Composition::from(mu)];
    support.extend(lower_set(mu));
    let index: BTreeMap<Vec<u32>, usize> = support.iter().enumerate().map(|(k, c)| (c.to_vec(), k)).collect();
    let y_mu = spectral_vector(mu);
    let cols = support.len();
    // Column 0 (the unknown c_μ = 1) moves to the right-hand side.
    let mut rows: Vec<Vec<LaurentQT>> = Vec::new();
    for i in 0..n {
        let mut block = vec![vec![LaurentQT::zero(); cols]; cols];
        for (k, kappa) in support.iter().enumerate() {
            let image = hecke::y_op(i, &ZPoly::z_pow(kappa))?;
            for (e, c) in image.terms() {
                let Some(&r) = index.get(e) else { continue };
                let entry = c.as_poly().expect("Y images have polynomial coefficients").clone();
                block[r][k] = &block[r][k] + &entry;
            }
            let y = &y_mu.entries[i];
            block[k][k] = &block[k][k] - &LaurentQT::monomial(1, y.q as u32, y.t);
        }
        for row in block {
            let mut aug: Vec<LaurentQT> = row[1..].to_vec();
            aug.push(-&row[0]);
            rows.push(aug);
        }
    }
    let x = bareiss_solve(rows, cols - 1).ok_or_else(|| MacdonaldError::Degenerate(Composition::from(mu), Composition::from(mu)))?;
    let mut terms = vec![(mu.to_vec(), RatFuncQT::one())];
    terms.extend(support[1..].iter().zip(x).map(|(c, v)| (c.to_vec(), v)));
    Ok(ZPoly::from_terms(n, terms))
}

/// Solves a consistent, full-column-rank augmented system `[A | b]` with
/// `unknowns` columns by Bareiss elimination; `None` if rank deficient or
/// inconsistent.
fn bareiss_solve(mut m: Vec<Vec<LaurentQT>>, unknowns: usize) -> Option<Vec<RatFuncQT>> {
    let rows = m.len();
    let mut prev = LaurentQT::one();
    for col in 0..unknowns {
        let piv = (col..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        for r in (col + 1)..rows {
            for j in (col + 1)..=unknowns {
                let v = &(&m[col][col] * &m[r][j]) - &(&m[r][col] * &m[col][j]);
                m[r][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][col] = LaurentQT::zero();
        }
        prev = m[col][col].clone();
    }
    if m[unknowns..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![RatFuncQT::zero(); unknowns];
    for col in (0..unknowns).rev() {
        let mut acc = RatFuncQT::from_poly(m[col][unknowns].clone());
        for j in (col + 1)..unknowns {
            acc = &acc - &(&RatFuncQT::from_poly(m[col][j].clone()) * &x[j]);
        }
        x[col] = RatFuncQT::new(acc.numer().clone(), acc.denom() * &m[col][col]).ok()?;
    }
    Some(x)
}

/// `E_{s_i μ} = t⁻¹ (T_i + (1 − t)/(1 − t·y_{i+1}(μ)/y_i(μ))) E_μ` for
/// `μ_i < μ_{i+1}`, with `y` the spectral vector of [`spectral_vector`].
///
/// The factor `t` in the ratio is forced by that normalization of `y`;
/// dropping it gives a polynomial that is not an eigenfunction.
pub fn exchange_step_e(engine: &Engine, mu: &[u32], i: usize) -> Result<ZPoly, MacdonaldError> {
    if i + 1 >= mu.len() || mu[i] >= mu[i + 1] {
        return Err(MacdonaldError::Precondition(format!(
            "exchange at bond {} needs mu_i < mu_(i+1) in {}",
            i + 1,
            Composition::from(mu)
        )));
    }
    let e = engine.e(mu)?;
    let y = spectral_vector(mu);
    let ratio = &(&y.entries[i + 1].to_ratfunc() / &y.entries[i].to_ratfunc()) * &RatFuncQT::t();
    let factor = (RatFuncQT::one() - RatFuncQT::t()).checked_div(&(RatFuncQT::one() - ratio))?;
    let mut out = hecke::t_op(i, &e)?;
    out.add_scaled(&factor, &e);
    Ok(out.scale(&RatFuncQT::t_pow(-1)))
}

/// Expands `target` in a monic triangular basis indexed by `sector`.
///
/// Members of the sector are visited in decreasing linear-extension order;
/// each coefficient is read off the residual's leading monomial and the
/// basis element is subtracted. Entries with zero coefficient are kept. The
/// residual must vanish.
pub fn triangular_expand<F>(
    target: &ZPoly,
    sector: &[u32],
    mut basis: F,
) -> Result<Vec<(Composition, RatFuncQT)>, MacdonaldError>
where
    F: FnMut(&[u32]) -> Result<Arc<ZPoly>, MacdonaldError>,
{
    let mut members = sector_enumerate(sector);
    members.sort_by_key(|nu| Reverse(linear_extension_key(nu)));
    let mut residual = target.clone();
    let mut out = Vec::with_capacity(members.len());
    for nu in members {
        let c = residual.coeff(&nu);
        if !c.is_zero() {
            let b = basis(&nu)?;
            residual.add_scaled(&-&c, &b);
        }
        out.push((nu, c));
    }
    if !residual.is_zero() {
        return Err(MacdonaldError::NonzeroResidual(residual.to_string()));
    }
    Ok(out)
}

/// `E_μ = Σ_{ν ∈ σ(μ)} c_{μ,ν} f_ν`; zero coefficients dropped.
pub fn expand_e_in_f(engine: &Engine, mu: &[u32]) -> Result<BTreeMap<Composition, RatFuncQT>, MacdonaldError> {
    let e = engine.e(mu)?;
    let pairs = triangular_expand(&e, mu, |nu| engine.f(nu))?;
    Ok(pairs.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// `f_μ = Σ_{ν ∈ σ(μ)} d_{μ,ν} E_ν`; zero coefficients dropped.
pub fn expand_f_in_e(engine: &Engine, mu: &[u32]) -> Result<BTreeMap<Composition, RatFuncQT>, MacdonaldError> {
    let f = engine.f(mu)?;
    let pairs = triangular_expand(&f, mu, |nu| engine.e(nu))?;
    Ok(pairs.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Exact check of `Y_i E = y_i(μ) E` for every `i`.
pub fn satisfies_eigen_equations(e: &ZPoly, mu: &[u32]) -> Result<bool, HeckeError> {
    let y = spectral_vector(mu);
    for (i, yi) in y.entries.iter().enumerate() {
        if hecke::y_op(i, e)? != e.scale(&yi.to_ratfunc()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monic with leading monomial `z^μ` and all other support strictly `≺ μ`.
pub fn is_monic_triangular(e: &ZPoly, mu: &[u32]) -> bool {
    e.coeff(mu).is_one() && e.support().all(|nu| nu.as_slice() == mu || prec_less(nu, mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn cones() {
        assert_eq!(monomial_cone(&[1, 0]).basis, vec![c("0,1"), c("1,0")]);
        let mut two = monomial_cone(&[2, 0]).basis;
        two.sort();
        assert_eq!(two, vec![c("0,2"), c("1,1"), c("2,0")]);
        assert_eq!(monomial_cone(&[1, 1]).basis, vec![c("1,1")]);
    }

    #[test]
    fn small_polynomials() {
        let engine = Engine::new();
        assert_eq!(*engine.e(&[0, 0]).unwrap(), ZPoly::one(2));
        assert_eq!(*engine.e(&[0, 1]).unwrap(), ZPoly::z_pow(&[0, 1]));
        let coeff = RatFuncQT::q() * (RatFuncQT::one() - RatFuncQT::t()) * RatFuncQT::inv_one_minus(1, 1);
        let expected = &ZPoly::z_pow(&[1, 0]) + &ZPoly::z_pow(&[0, 1]).scale(&coeff);
        assert_eq!(*engine.e(&[1, 0]).unwrap(), expected);
    }

    #[test]
    fn exchange_matches_direct() {
        let engine = Engine::new();
        assert_eq!(exchange_step_e(&engine, &[0, 1], 0).unwrap(), *engine.e(&[1, 0]).unwrap());
        assert_eq!(exchange_step_e(&engine, &[0, 2], 0).unwrap(), *engine.e(&[2, 0]).unwrap());
        assert!(exchange_step_e(&engine, &[0, 0], 0).is_err());
    }

    #[test]
    fn exchange_without_the_t_factor_fails() {
        let engine = Engine::new();
        let e = engine.e(&[0, 1]).unwrap();
        let ratio = RatFuncQT::q();
        let factor = (RatFuncQT::one() - RatFuncQT::t()) / (RatFuncQT::one() - ratio);
        let mut out = hecke::t_op(0, &e).unwrap();
        out.add_scaled(&factor, &e);
        let candidate = out.scale(&RatFuncQT::t_pow(-1));
        assert!(!satisfies_eigen_equations(&candidate, &[1, 0]).unwrap());
        assert!(satisfies_eigen_equations(&engine.e(&[1, 0]).unwrap(), &[1, 0]).unwrap());
    }

    #[test]
    fn bareiss_agrees_with_triangular_solve() {
        let engine = Engine::new();
        for mu in [[1u32, 0, 0], [0, 2, 1], [2, 0, 1], [1, 1, 0]] {
            assert_eq!(nonsymmetric_macdonald_bareiss(&mu).unwrap(), *engine.e(&mu).unwrap(), "{mu:?}");
        }
    }
}
