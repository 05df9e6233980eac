use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dense::{self, BPoly};

/// Exponent pair `(deg_q, deg_t)` of a monomial `q^a t^b`.
pub type QtExp = (u32, i32);

/// Integer-coefficient polynomial in `q`, Laurent in `t`.
///
/// Terms are kept in a `BTreeMap` ordered lexicographically by
/// `(deg_q, deg_t)`; the last entry is the leading term. Zero coefficients are
/// never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    terms: BTreeMap<QtExp, BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^dq * t^dt`.
    pub fn monomial(c: impl Into<BigInt>, dq: u32, dt: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dt), c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        Self::monomial(1, 0, k)
    }

    /// `1 - q^a t^b`, the shape of every denominator the theory produces.
    pub fn one_minus(a: u32, b: i32) -> Self {
        Self::one() - Self::monomial(1, a, b)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (QtExp, BigInt)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: QtExp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no term carries a power of `q`.
    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|&(dq, _)| dq == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QtExp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dq: u32, dt: i32) -> BigInt {
        self.terms.get(&(dq, dt)).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&QtExp, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn min_t(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, dt)| dt).min()
    }

    pub fn max_t(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, dt)| dt).max()
    }

    pub fn max_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(dq, _)| dq).max()
    }

    /// Multiply by `t^k`.
    pub fn shift_t(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a, b + k), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitute `q -> t^k`, producing a polynomial in `t` alone.
    pub fn substitute_q(&self, k: i32) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((0, b + k * a as i32), c.clone());
        }
        out
    }

    /// Substitute `t -> t^k` (used to represent fractional powers of `t`).
    pub fn scale_t_exponents(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a, b * k), c.clone())).collect(),
        }
    }

    /// Integer content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub(crate) fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    /// Dense form after multiplying by `t^{-min_t}`; returns the shift used.
    pub(crate) fn to_dense(&self) -> (BPoly, i32) {
        let Some(tmin) = self.min_t() else {
            return (Vec::new(), 0);
        };
        let mut out: BPoly = Vec::new();
        for (&(a, b), c) in &self.terms {
            let a = a as usize;
            let b = (b - tmin) as usize;
            if out.len() <= a {
                out.resize(a + 1, Vec::new());
            }
            let row = &mut out[a];
            if row.len() <= b {
                row.resize(b + 1, BigInt::zero());
            }
            row[b] = c.clone();
        }
        (out, tmin)
    }

    pub(crate) fn from_dense(p: &BPoly, shift: i32) -> Self {
        let mut terms = BTreeMap::new();
        for (a, row) in p.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((a as u32, b as i32 + shift), c.clone());
                }
            }
        }
        Self { terms }
    }

    /// Exact quotient `self / other` in ℤ[q, t, 1/t], or `None` if the
    /// division leaves a remainder.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_monomial() {
            let (&(a, b), c) = other.leading().unwrap();
            let mut terms = BTreeMap::new();
            for (&(x, y), d) in &self.terms {
                if x < a {
                    return None;
                }
                let (quo, rem) = num_integer::Integer::div_rem(d, c);
                if !rem.is_zero() {
                    return None;
                }
                terms.insert((x - a, y - b), quo);
            }
            return Some(Self { terms });
        }
        let (pa, sa) = self.to_dense();
        let (pb, sb) = other.to_dense();
        dense::b_divexact(&pa, &pb).map(|quo| Self::from_dense(&quo, sa - sb))
    }

    /// Greatest common divisor in ℤ[q, t] after clearing `t`-Laurent content.
    /// The result is primitive with positive leading coefficient and carries
    /// no power of `t`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.gcd_with_content(other);
        if g.is_zero() {
            return g;
        }
        let c = g.content();
        g.div_exact(&Self::constant(c)).expect("content divides")
    }

    /// gcd including the integer content; positive leading coefficient.
    pub(crate) fn gcd_with_content(&self, other: &Self) -> Self {
        use num_integer::Integer;
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        if self.is_zero() {
            return other.strip_t_and_sign();
        }
        if other.is_zero() {
            return self.strip_t_and_sign();
        }
        // A monomial shares at most a power of q and an integer with anything.
        if self.is_monomial() || other.is_monomial() {
            let qmin = |p: &Self| p.terms.keys().map(|&(a, _)| a).min().unwrap();
            let c = self.content().gcd(&other.content());
            return Self::monomial(c, qmin(self).min(qmin(other)), 0);
        }
        let (pa, _) = self.to_dense();
        let (pb, _) = other.to_dense();
        if pa == pb {
            return self.strip_t_and_sign();
        }
        Self::from_dense(&dense::b_gcd(&pa, &pb), 0)
    }

    fn strip_t_and_sign(&self) -> Self {
        let shift = self.min_t().unwrap_or(0);
        let out = self.shift_t(-shift);
        if out.leading_is_negative() {
            -out
        } else {
            out
        }
    }

    /// Numeric evaluation; only used for spot checks.
    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(&(a, b), c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(a as i32) * t.powi(b))
            .sum()
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: LaurentQT) -> LaurentQT {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

impl fmt::Display for LaurentQT {
    /// Ascending `(deg_q, deg_t)` order, e.g. `1-t`, `-1+q*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            if a == 1 {
                factors.push("q".to_string());
            } else if a > 1 {
                factors.push(format!("q^{a}"));
            }
            if b == 1 {
                factors.push("t".to_string());
            } else if b != 0 {
                factors.push(format!("t^{b}"));
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_ascending() {
        assert_eq!(LaurentQT::one_minus(0, 1).to_string(), "1-t");
        assert_eq!((LaurentQT::q() * LaurentQT::t_pow(-1)).to_string(), "q*t^-1");
        assert_eq!(LaurentQT::zero().to_string(), "0");
    }

    #[test]
    fn gcd_examples() {
        let a = LaurentQT::one_minus(1, 1);
        let g = a.gcd(&a);
        assert_eq!(g, -&a);
        let b = LaurentQT::one_minus(2, 2);
        assert_eq!(b.gcd(&a), -&a);
        assert!(LaurentQT::q().gcd(&LaurentQT::t()).is_one());
        assert!(LaurentQT::zero().gcd(&LaurentQT::zero()).is_zero());
    }

    #[test]
    fn exact_division_with_negative_t_powers() {
        let a = LaurentQT::one_minus(0, 2).shift_t(-3);
        let b = LaurentQT::one_minus(0, 1);
        let quo = a.div_exact(&b).unwrap();
        assert_eq!(quo, (LaurentQT::one() + LaurentQT::t()).shift_t(-3));
        assert!(LaurentQT::one_minus(0, 2).div_exact(&LaurentQT::one_minus(1, 0)).is_none());
    }
}
