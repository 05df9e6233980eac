use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraError, LaurentQT};

/// An element of ℚ(q, t) in canonical form.
///
/// Invariants:
/// - `den` is a polynomial in `q` and `t` not divisible by `t`;
/// - the leading coefficient of `den` in `(deg_q, deg_t)`-lex order is positive;
/// - `num` and `den` are coprime in ℤ[q, t, 1/t], integer content included,
///   so `1/2` is stored as `num = 1, den = 2`;
/// - zero is `0/1`.
///
/// With these rules two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncQT {
    num: LaurentQT,
    den: LaurentQT,
}

impl Default for RatFuncQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFuncQT {
    pub fn zero() -> Self {
        Self { num: LaurentQT::zero(), den: LaurentQT::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentQT::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentQT::q())
    }

    pub fn t() -> Self {
        Self::from_poly(LaurentQT::t())
    }

    pub fn t_pow(k: i32) -> Self {
        Self::from_poly(LaurentQT::t_pow(k))
    }

    pub fn monomial(c: impl Into<BigInt>, dq: u32, dt: i32) -> Self {
        Self::from_poly(LaurentQT::monomial(c, dq, dt))
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentQT::constant(c))
    }

    /// The rational number `a / b`.
    pub fn rational(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, AlgebraError> {
        Self::new(LaurentQT::constant(a), LaurentQT::constant(b))
    }

    /// A Laurent polynomial viewed as a fraction with denominator 1.
    pub fn from_poly(p: LaurentQT) -> Self {
        Self { num: p, den: LaurentQT::one() }
    }

    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    /// `1 / (1 - q^a t^b)`.
    pub fn inv_one_minus(a: u32, b: i32) -> Self {
        Self::new(LaurentQT::one(), LaurentQT::one_minus(a, b)).expect("nonzero for (a, b) != (0, 0)")
    }

    /// Brings an arbitrary fraction into canonical form.
    fn normalize(num: LaurentQT, den: LaurentQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.min_t().unwrap_or(0);
        let (mut num, mut den) = (num.shift_t(-shift), den.shift_t(-shift));
        if !den.is_one() {
            let g = num.gcd_with_content(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        if den.leading_is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentQT {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQT {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentQT, LaurentQT) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_q_free(&self) -> bool {
        self.num.is_q_free() && self.den.is_q_free()
    }

    /// `self` as a Laurent polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentQT> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// `self^k` for any integer `k`.
    pub fn powi(&self, k: i32) -> Result<Self, AlgebraError> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inv()?.pow(k.unsigned_abs()))
        }
    }

    /// Multiply by `t^k`; cheap since `t` is a unit.
    pub fn shift_t(&self, k: i32) -> Self {
        Self { num: self.num.shift_t(k), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self * &Self::integer(c.clone())
    }

    /// Substitute `q -> t^k`. Fails if the denominator vanishes there.
    pub fn substitute_q(&self, k: i32) -> Result<Self, AlgebraError> {
        let den = self.den.substitute_q(k);
        if den.is_zero() {
            return Err(AlgebraError::PoleOrderExceeded { order: 1 });
        }
        Self::new(self.num.substitute_q(k), den)
    }

    /// Substitute `t -> t^k` for `k >= 1`.
    pub fn scale_t_exponents(&self, k: i32) -> Self {
        Self::normalize(self.num.scale_t_exponents(k), self.den.scale_t_exponents(k))
    }

    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        self.num.eval_f64(q, t) / self.den.eval_f64(q, t)
    }
}

impl From<LaurentQT> for RatFuncQT {
    fn from(p: LaurentQT) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFuncQT {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

// Henrici-style arithmetic: cancel through gcds of the operands' parts so the
// result only needs a gcd with the small common factor.

impl Add for &RatFuncQT {
    type Output = RatFuncQT;
    fn add(self, rhs: &RatFuncQT) -> RatFuncQT {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFuncQT::from_poly(num);
            }
            return RatFuncQT::normalize(num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFuncQT {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFuncQT {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd_with_content(&rhs.den);
        if g.is_one() {
            return RatFuncQT {
                num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                den: &self.den * &rhs.den,
            };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFuncQT::zero();
        }
        let h = num.gcd_with_content(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        let den = &(&b1 * &d1) * &g;
        let (num, den) = if den.leading_is_negative() { (-num, -den) } else { (num, den) };
        RatFuncQT { num, den }
    }
}

impl Neg for &RatFuncQT {
    type Output = RatFuncQT;
    fn neg(self) -> RatFuncQT {
        RatFuncQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFuncQT {
    type Output = RatFuncQT;
    fn sub(self, rhs: &RatFuncQT) -> RatFuncQT {
        self + &(-rhs)
    }
}

impl Mul for &RatFuncQT {
    type Output = RatFuncQT;
    fn mul(self, rhs: &RatFuncQT) -> RatFuncQT {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQT::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFuncQT::from_poly(&self.num * &rhs.num);
        }
        let cancel = |a: &LaurentQT, b: &LaurentQT| -> (LaurentQT, LaurentQT) {
            if b.is_one() {
                return (a.clone(), b.clone());
            }
            let g = a.gcd_with_content(b);
            if g.is_one() {
                (a.clone(), b.clone())
            } else {
                (a.div_exact(&g).expect("gcd divides"), b.div_exact(&g).expect("gcd divides"))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        let num = &a * &c;
        let den = &b * &d;
        let (num, den) = if den.leading_is_negative() { (-num, -den) } else { (num, den) };
        RatFuncQT { num, den }
    }
}

impl Div for &RatFuncQT {
    type Output = RatFuncQT;
    /// Panics on division by zero; see [`RatFuncQT::checked_div`].
    fn div(self, rhs: &RatFuncQT) -> RatFuncQT {
        self.checked_div(rhs).expect("division by zero in RatFuncQT")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFuncQT {
            type Output = RatFuncQT;
            fn $m(self, rhs: RatFuncQT) -> RatFuncQT {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFuncQT> for RatFuncQT {
            type Output = RatFuncQT;
            fn $m(self, rhs: &RatFuncQT) -> RatFuncQT {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFuncQT {
    type Output = RatFuncQT;
    fn neg(self) -> RatFuncQT {
        RatFuncQT { num: -self.num, den: self.den }
    }
}

impl Zero for RatFuncQT {
    fn zero() -> Self {
        RatFuncQT::zero()
    }
    fn is_zero(&self) -> bool {
        RatFuncQT::is_zero(self)
    }
}

impl One for RatFuncQT {
    fn one() -> Self {
        RatFuncQT::one()
    }
}

impl fmt::Display for RatFuncQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &LaurentQT| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Printed with a positive lowest denominator term: `1/(1-q*t)`.
        let flip = self.den.terms().next().is_some_and(|(_, c)| c.sign() == num_bigint::Sign::Minus);
        if flip {
            write!(f, "{}/{}", wrap(&-&self.num), wrap(&-&self.den))
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFuncQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: u32, b: i32) -> RatFuncQT {
        RatFuncQT::from_poly(LaurentQT::one_minus(a, b))
    }

    #[test]
    fn self_quotient_is_one() {
        assert!((om(1, 1) / om(1, 1)).is_one());
    }

    #[test]
    fn quotient_by_factor() {
        let r = om(2, 0) / om(1, 0);
        assert_eq!(r, RatFuncQT::one() + RatFuncQT::q());
    }

    #[test]
    fn common_denominator_sum() {
        let d = om(0, 1);
        let lhs = RatFuncQT::q() / d.clone() + RatFuncQT::t() / d.clone();
        let rhs = (RatFuncQT::q() + RatFuncQT::t()) / d;
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "(t+q)/(1-t)");
    }

    #[test]
    fn integer_content_is_canonical() {
        let half = RatFuncQT::rational(2, 4).unwrap();
        assert_eq!(half.numer(), &LaurentQT::one());
        assert_eq!(half.denom(), &LaurentQT::constant(2));
        assert_eq!(RatFuncQT::rational(-1, -2).unwrap(), half);
        assert!(RatFuncQT::rational(1, 0).is_err());
    }

    #[test]
    fn t_powers_live_in_numerator() {
        let x = RatFuncQT::one() / RatFuncQT::t();
        assert_eq!(x.denom(), &LaurentQT::one());
        assert_eq!(x.numer(), &LaurentQT::t_pow(-1));
    }

    #[test]
    fn cancellation_to_zero() {
        let a = RatFuncQT::inv_one_minus(1, 1);
        assert!((&a - &a).is_zero());
        // 1/(1-qt) - 1 = qt/(1-qt)
        let b = RatFuncQT::q() * RatFuncQT::inv_one_minus(1, 1);
        let lhs = a - RatFuncQT::one();
        assert_eq!(lhs, b * RatFuncQT::t());
    }
}
