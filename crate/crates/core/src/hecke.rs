//! Polynomial realization of the affine Hecke algebra: `s_i`, `T_i`, `T_i⁻¹`,
//! the cyclic shift `ω` and the Cherednik operators `Y_i`.
//!
//! Bond and variable indices are 0-based: `T_i` acts on `(z_{i+1}, z_{i+2})`
//! in the usual 1-based notation, and `Y_i` for `i in 0..n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exact_algebra::{Exponent, RatFuncQT, ZPoly};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("numerator of the divided difference is not antisymmetric at {0:?}")]
    NotAntisymmetric(Exponent),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operator acts on {op} variables, polynomial has {poly}")]
    ArityMismatch { op: usize, poly: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeckeKind {
    Swap(usize),
    T(usize),
    Tinv(usize),
    Omega,
    OmegaInv,
    Y(usize),
    /// Applied right to left: the last entry acts first.
    Composite(Vec<HeckeOp>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeOp {
    pub kind: HeckeKind,
    pub n: usize,
}

impl HeckeOp {
    pub fn new(kind: HeckeKind, n: usize) -> Result<Self, HeckeError> {
        let check_bond = |i: usize| {
            if i + 1 < n {
                Ok(())
            } else {
                Err(HeckeError::IndexOutOfRange { index: i, n })
            }
        };
        match &kind {
            HeckeKind::Swap(i) | HeckeKind::T(i) | HeckeKind::Tinv(i) => check_bond(*i)?,
            HeckeKind::Y(i) if *i >= n => return Err(HeckeError::IndexOutOfRange { index: *i, n }),
            HeckeKind::Composite(ops) => {
                if let Some(op) = ops.iter().find(|op| op.n != n) {
                    return Err(HeckeError::ArityMismatch { op: op.n, poly: n });
                }
            }
            _ => {}
        }
        Ok(Self { kind, n })
    }

    pub fn apply(&self, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        if f.n() != self.n {
            return Err(HeckeError::ArityMismatch { op: self.n, poly: f.n() });
        }
        let h = Hecke::standard();
        match &self.kind {
            HeckeKind::Swap(i) => Ok(f.swap_vars(*i)),
            HeckeKind::T(i) => h.t_op(*i, f),
            HeckeKind::Tinv(i) => h.t_inv(*i, f),
            HeckeKind::Omega => Ok(omega(f)),
            HeckeKind::OmegaInv => Ok(omega_inv(f)),
            HeckeKind::Y(i) => h.y_op(*i, f),
            HeckeKind::Composite(ops) => {
                let mut g = f.clone();
                for op in ops.iter().rev() {
                    g = op.apply(&g)?;
                }
                Ok(g)
            }
        }
    }
}

/// `(f - s_i f) / (z_i - z_{i+1})`, computed monomial pair by monomial pair
/// after explicit antisymmetrization.
pub fn divided_difference(i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
    let anti = f - &f.swap_vars(i);
    let mut out = ZPoly::zero(f.n());
    for (e, c) in anti.terms() {
        let (a, b) = (e[i], e[i + 1]);
        if a < b {
            continue;
        }
        let mut partner = e.clone();
        partner.swap(i, i + 1);
        if a == b || anti.coeff(&partner) != -c {
            return Err(HeckeError::NotAntisymmetric(e.clone()));
        }
        // (z_i^a z_j^b - z_i^b z_j^a) / (z_i - z_j) = (z_i z_j)^b Σ_k z_i^k z_j^{a-b-1-k}
        for k in 0..(a - b) {
            let mut g = e.clone();
            g[i] = b + k;
            g[i + 1] = a - 1 - k;
            out.add_term(g, c);
        }
    }
    Ok(out)
}

/// A polynomial realization of the finite Hecke generators with parameter
/// `tau`. The standard realization has `tau = t`; any other value is only
/// used as a deliberately broken control.
#[derive(Debug, Clone)]
pub struct Hecke {
    tau: RatFuncQT,
}

impl Hecke {
    pub fn standard() -> Self {
        Self { tau: RatFuncQT::t() }
    }

    /// `T_i` built with `t^2` in place of `t`; violates `(T_i - t)(T_i + 1) = 0`.
    pub fn corrupted() -> Self {
        Self { tau: RatFuncQT::t_pow(2) }
    }

    /// `(tau z_i - z_{i+1}) * g`.
    fn times_linear(&self, i: usize, g: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero(g.n());
        for (e, c) in g.terms() {
            let mut ei = e.clone();
            ei[i] += 1;
            out.add_term(ei, &(c * &self.tau));
            let mut ej = e.clone();
            ej[i + 1] += 1;
            out.add_term(ej, &-c);
        }
        out
    }

    /// `T_i f = tau f - (tau z_i - z_{i+1}) (f - s_i f)/(z_i - z_{i+1})`.
    pub fn t_op(&self, i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        check_bond(i, f.n())?;
        let d = divided_difference(i, f)?;
        let mut out = f.scale(&self.tau);
        out.add_scaled(&-RatFuncQT::one(), &self.times_linear(i, &d));
        Ok(out)
    }

    /// `T_i⁻¹ = (T_i - (tau - 1)) / tau`, from the quadratic relation.
    pub fn t_inv(&self, i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        let tf = self.t_op(i, f)?;
        let mut out = tf;
        out.add_scaled(&-(&self.tau - &RatFuncQT::one()), f);
        Ok(out.scale(&self.tau.inv().expect("tau is nonzero")))
    }

    /// `T_i⁻¹ = tau⁻¹ (1 - (tau z_i - z_{i+1})/(z_i - z_{i+1}) (1 - s_i))`,
    /// the divided-difference form.
    pub fn t_inv_direct(&self, i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        check_bond(i, f.n())?;
        let d = divided_difference(i, f)?;
        let out = f - &self.times_linear(i, &d);
        Ok(out.scale(&self.tau.inv().expect("tau is nonzero")))
    }

    /// `𝕃_i = T_i - t`.
    pub fn l_op(&self, i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        let mut out = self.t_op(i, f)?;
        out.add_scaled(&-RatFuncQT::t(), f);
        Ok(out)
    }

    /// `Y_i = T_i ⋯ T_{n-2} ω T_0⁻¹ ⋯ T_{i-1}⁻¹` (0-based bonds), applied right to left.
    pub fn y_op(&self, i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
        let n = f.n();
        if i >= n {
            return Err(HeckeError::IndexOutOfRange { index: i, n });
        }
        let mut g = f.clone();
        for b in (0..i).rev() {
            g = self.t_inv(b, &g)?;
        }
        g = omega(&g);
        for b in (i..n - 1).rev() {
            g = self.t_op(b, &g)?;
        }
        Ok(g)
    }
}

fn check_bond(i: usize, n: usize) -> Result<(), HeckeError> {
    if i + 1 < n {
        Ok(())
    } else {
        Err(HeckeError::IndexOutOfRange { index: i, n })
    }
}

/// `(ω g)(z) = g(q z_n, z_1, …, z_{n-1})`.
pub fn omega(f: &ZPoly) -> ZPoly {
    let n = f.n();
    let mut out = ZPoly::zero(n);
    for (e, c) in f.terms() {
        let mut g = vec![0; n];
        g[n - 1] = e[0];
        g[..(n - 1)].copy_from_slice(&e[1..]);
        out.add_term(g, &(c * &RatFuncQT::monomial(1, e[0], 0)));
    }
    out
}

/// `(ω⁻¹ g)(z) = g(z_2, …, z_n, q⁻¹ z_1)`.
pub fn omega_inv(f: &ZPoly) -> ZPoly {
    let n = f.n();
    let mut out = ZPoly::zero(n);
    for (e, c) in f.terms() {
        let mut g = vec![0; n];
        g[0] = e[n - 1];
        g[1..].copy_from_slice(&e[..(n - 1)]);
        out.add_term(g, &(c / &RatFuncQT::monomial(1, e[n - 1], 0)));
    }
    out
}

/// `T_i f` in the standard realization.
pub fn t_op(i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
    Hecke::standard().t_op(i, f)
}

pub fn t_inv(i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
    Hecke::standard().t_inv(i, f)
}

pub fn l_op(i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
    Hecke::standard().l_op(i, f)
}

pub fn y_op(i: usize, f: &ZPoly) -> Result<ZPoly, HeckeError> {
    Hecke::standard().y_op(i, f)
}

/// All monomials `z^e` in `n` variables of total degree `<= max_degree`.
pub fn monomial_basis(n: usize, max_degree: u32) -> Vec<ZPoly> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for lambda in crate::combinatorics::partitions_bounded(d, n, d) {
            for e in crate::combinatorics::sector_enumerate(&lambda) {
                out.push(ZPoly::z_pow(&e));
            }
        }
    }
    out
}

/// Pseudo-random dense polynomials with small integer-and-monomial
/// coefficients, deterministic in `seed`.
pub fn random_samples(n: usize, max_degree: u32, count: usize, seed: u64) -> Vec<ZPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis: Vec<Exponent> = monomial_basis(n, max_degree)
        .into_iter()
        .map(|m| m.support().next().expect("monomial").clone())
        .collect();
    (0..count)
        .map(|_| {
            let mut f = ZPoly::zero(n);
            for e in &basis {
                let c: i64 = rng.random_range(-3..=3);
                if c == 0 {
                    continue;
                }
                let coeff = RatFuncQT::monomial(c, rng.random_range(0..=1), rng.random_range(-1..=1));
                f.add_term(e.clone(), &coeff);
            }
            f
        })
        .collect()
}

/// Checks the quadratic, braid, distant-commutation and inverse relations for
/// the realization `h`, plus commutativity of the `Y_i`, on every sample.
pub fn verify_hecke_relations(h: &Hecke, n: usize, samples: &[ZPoly]) -> Report {
    let mut report = Report::new(format!("hecke relations n={n}"));
    let t = RatFuncQT::t();
    let show = |f: &ZPoly| f.to_string();
    for f in samples {
        for i in 0..n.saturating_sub(1) {
            let ti = |g: &ZPoly| h.t_op(i, g).expect("valid bond");
            let tf = ti(f);
            // (T - t)(T + 1) f = T(Tf + f) - t(Tf + f)
            let s = &tf + f;
            let mut quad = ti(&s);
            quad.add_scaled(&-t.clone(), &s);
            if !report.record(quad.is_zero(), || json!({"relation": "quadratic", "i": i + 1, "f": show(f)})) {
                return report;
            }
            let inv = h.t_inv(i, f).expect("valid bond");
            let ok = ti(&inv) == *f && h.t_inv(i, &tf).expect("valid bond") == *f;
            if !report.record(ok, || json!({"relation": "inverse", "i": i + 1, "f": show(f)})) {
                return report;
            }
            let direct = h.t_inv_direct(i, f).expect("valid bond");
            if !report.record(direct == inv, || json!({"relation": "inverse-forms", "i": i + 1, "f": show(f)})) {
                return report;
            }
            if i + 2 < n {
                let tj = |g: &ZPoly| h.t_op(i + 1, g).expect("valid bond");
                let lhs = ti(&tj(&tf));
                let rhs = tj(&ti(&tj(f)));
                if !report.record(lhs == rhs, || json!({"relation": "braid", "i": i + 1, "f": show(f)})) {
                    return report;
                }
            }
            for j in (i + 2)..n.saturating_sub(1) {
                let tj = |g: &ZPoly| h.t_op(j, g).expect("valid bond");
                let ok = ti(&tj(f)) == tj(&tf);
                if !report.record(ok, || json!({"relation": "commutation", "i": i + 1, "j": j + 1, "f": show(f)})) {
                    return report;
                }
            }
        }
        let ys: Vec<ZPoly> = (0..n).map(|i| h.y_op(i, f).expect("valid index")).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = h.y_op(i, &ys[j]).expect("valid index");
                let rhs = h.y_op(j, &ys[i]).expect("valid index");
                if !report.record(lhs == rhs, || json!({"relation": "Y-commute", "i": i + 1, "j": j + 1, "f": show(f)})) {
                    return report;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: &[u32]) -> ZPoly {
        ZPoly::z_pow(e)
    }

    #[test]
    fn generators_on_linear_monomials() {
        assert_eq!(t_op(0, &z(&[1, 0])).unwrap(), z(&[0, 1]));
        let expected = &z(&[0, 1]).scale(&(RatFuncQT::t() - RatFuncQT::one())) + &z(&[1, 0]).scale(&RatFuncQT::t());
        assert_eq!(t_op(0, &z(&[0, 1])).unwrap(), expected);
        let sym = &z(&[2, 1]) + &z(&[1, 2]);
        assert_eq!(t_op(0, &sym).unwrap(), sym.scale(&RatFuncQT::t()));
    }

    #[test]
    fn omega_and_y_on_small_inputs() {
        assert_eq!(omega(&z(&[1, 3])), z(&[3, 1]).scale(&RatFuncQT::q()));
        assert_eq!(omega_inv(&omega(&z(&[1, 3]))), z(&[1, 3]));
        assert_eq!(y_op(0, &ZPoly::one(2)).unwrap(), ZPoly::one(2).scale(&RatFuncQT::t()));
        assert_eq!(y_op(0, &ZPoly::one(3)).unwrap(), ZPoly::one(3).scale(&RatFuncQT::t_pow(2)));
        assert_eq!(y_op(0, &z(&[0, 1])).unwrap(), z(&[0, 1]));
        assert_eq!(y_op(1, &z(&[0, 1])).unwrap(), z(&[0, 1]).scale(&RatFuncQT::q()));
    }

    #[test]
    fn l_operator_cases() {
        let t = RatFuncQT::t();
        assert_eq!(l_op(0, &z(&[1, 0])).unwrap(), &z(&[0, 1]) - &z(&[1, 0]).scale(&t));
        assert_eq!(l_op(0, &z(&[0, 1])).unwrap(), &z(&[1, 0]).scale(&t) - &z(&[0, 1]));
        assert!(l_op(0, &(&z(&[1, 0]) + &z(&[0, 1]))).unwrap().is_zero());
    }

    #[test]
    fn relations_hold_and_corruption_is_caught() {
        let basis = monomial_basis(3, 3);
        assert!(verify_hecke_relations(&Hecke::standard(), 3, &basis).passed());
        let bad = verify_hecke_relations(&Hecke::corrupted(), 3, &basis);
        assert!(!bad.passed());
        assert_eq!(bad.witness.unwrap()["relation"], "quadratic");
    }

    #[test]
    fn index_checks() {
        assert!(HeckeOp::new(HeckeKind::T(1), 2).is_err());
        let op = HeckeOp::new(HeckeKind::Composite(vec![
            HeckeOp::new(HeckeKind::T(0), 2).unwrap(),
            HeckeOp::new(HeckeKind::Tinv(0), 2).unwrap(),
        ]), 2)
        .unwrap();
        assert_eq!(op.apply(&z(&[2, 0])).unwrap(), z(&[2, 0]));
        assert!(op.apply(&ZPoly::one(3)).is_err());
    }
}
