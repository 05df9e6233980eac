//! The resonance functional `Coeff_p[c, m] = lim_{q -> t^{-m}} (1 - q t^m)^p c`.

use super::{AlgebraError, LaurentQT, RatFuncQT, ZPoly};

/// Multiplicity of the factor `1 - q t^m` in the denominator of `c`.
pub fn pole_order(c: &RatFuncQT, m: i32) -> u32 {
    split_resonant(c.denom(), m).0
}

/// `den = (1 - q t^m)^k * rest` with `rest` not divisible by the factor.
fn split_resonant(den: &LaurentQT, m: i32) -> (u32, LaurentQT) {
    let factor = LaurentQT::one_minus(1, m);
    let mut rest = den.clone();
    let mut k = 0;
    while let Some(d) = rest.div_exact(&factor) {
        rest = d;
        k += 1;
    }
    (k, rest)
}

/// `Coeff_p[c, m]` for a positive integer `m`, as a `q`-free element of ℚ(t).
///
/// Returns 0 when the pole order at `q = t^{-m}` is below `p`.
pub fn coeff_p_scalar(c: &RatFuncQT, m: i32, p: u32) -> Result<RatFuncQT, AlgebraError> {
    if m <= 0 {
        return Err(AlgebraError::NonPositiveResonance);
    }
    if c.is_zero() {
        return Ok(RatFuncQT::zero());
    }
    let (k, den) = split_resonant(c.denom(), m);
    if k > p {
        return Err(AlgebraError::PoleOrderExceeded { order: k });
    }
    if k < p {
        return Ok(RatFuncQT::zero());
    }
    let den = den.substitute_q(-m);
    debug_assert!(!den.is_zero(), "all resonant factors were removed");
    RatFuncQT::new(c.numer().substitute_q(-m), den)
}

/// A resonance value expressed in `s = t^(1/root)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resonance {
    pub value: RatFuncQT,
    pub root: u32,
}

/// `Coeff_p[c, m]` for rational `m = num / den > 0`.
///
/// Internally substitutes `t = s^den` so that `t^{-m} = s^{-num}`. When the
/// answer only involves integer powers of `t`, it is returned with `root = 1`.
pub fn coeff_p_scalar_frac(c: &RatFuncQT, num: i32, den: u32, p: u32) -> Result<Resonance, AlgebraError> {
    if num <= 0 || den == 0 {
        return Err(AlgebraError::NonPositiveResonance);
    }
    let g = num_integer::gcd(num, den as i32);
    let (num, den) = (num / g, den as i32 / g);
    let lifted = c.scale_t_exponents(den);
    let value = coeff_p_scalar(&lifted, num, p)?;
    let divisible = |x: &LaurentQT| x.terms().all(|(&(_, b), _)| b % den == 0);
    if den > 1 && divisible(value.numer()) && divisible(value.denom()) {
        let down = |x: &LaurentQT| LaurentQT::from_terms(x.terms().map(|(&(a, b), c)| ((a, b / den), c.clone())));
        let value = RatFuncQT::new(down(value.numer()), down(value.denom()))?;
        return Ok(Resonance { value, root: 1 });
    }
    Ok(Resonance { value, root: den as u32 })
}

/// Coefficient-wise `Coeff_p` on a z-polynomial; errors name the monomial.
pub fn coeff_p_poly(f: &ZPoly, m: i32, p: u32) -> Result<ZPoly, AlgebraError> {
    f.try_map_coeffs(|e, c| {
        coeff_p_scalar(c, m, p).map_err(|err| match err {
            AlgebraError::PoleOrderExceeded { order } => AlgebraError::PoleAtMonomial { order, exponent: e.clone() },
            other => other,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: u32, b: i32) -> RatFuncQT {
        RatFuncQT::from_poly(LaurentQT::one_minus(a, b))
    }

    #[test]
    fn simple_pole() {
        let c = RatFuncQT::q() * om(0, 1) * RatFuncQT::inv_one_minus(1, 1);
        let got = coeff_p_scalar(&c, 1, 1).unwrap();
        assert_eq!(got, RatFuncQT::t_pow(-1) * om(0, 1));
    }

    #[test]
    fn constants_and_regular_parts() {
        assert!(coeff_p_scalar(&RatFuncQT::one(), 3, 0).unwrap().is_one());
        assert!(coeff_p_scalar(&RatFuncQT::one(), 3, 1).unwrap().is_zero());
    }

    #[test]
    fn double_pole_exceeds() {
        let c = RatFuncQT::inv_one_minus(1, 1).pow(2);
        assert_eq!(coeff_p_scalar(&c, 1, 1), Err(AlgebraError::PoleOrderExceeded { order: 2 }));
        assert_eq!(pole_order(&c, 1), 2);
        assert_eq!(pole_order(&c, 2), 0);
    }

    #[test]
    fn polynomial_form() {
        let f = &ZPoly::z_pow(&[0, 2]) + &ZPoly::z_pow(&[1, 1]).scale(&(om(0, 1) * RatFuncQT::inv_one_minus(1, 1)));
        let g = coeff_p_poly(&f, 1, 1).unwrap();
        assert_eq!(g, ZPoly::z_pow(&[1, 1]).scale(&om(0, 1)));
        let z1 = ZPoly::var(2, 0);
        assert!(coeff_p_poly(&z1, 1, 1).unwrap().is_zero());
        assert_eq!(coeff_p_poly(&z1, 1, 0).unwrap(), z1);
    }

    #[test]
    fn fractional_resonance() {
        // 1 - q^2 t = (1 - q s)(1 + q s) with s^2 = t.
        let c = RatFuncQT::inv_one_minus(2, 1);
        let r = coeff_p_scalar_frac(&c, 1, 2, 1).unwrap();
        assert_eq!(r.root, 1);
        assert_eq!(r.value, RatFuncQT::rational(1, 2).unwrap());
        let m_int = coeff_p_scalar_frac(&RatFuncQT::inv_one_minus(1, 1), 2, 2, 1).unwrap();
        assert_eq!(m_int.value, RatFuncQT::one());
    }
}
