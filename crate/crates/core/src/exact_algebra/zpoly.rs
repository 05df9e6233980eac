use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, RatFuncQT};

/// Exponent vector `(e_1, …, e_n)` of a monomial `z^e`.
pub type Exponent = Vec<u32>;

/// Polynomial in `z_1..z_n` with coefficients in ℚ(q, t).
///
/// Every key has length `n` and no zero coefficient is stored, so structural
/// equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    n: usize,
    terms: BTreeMap<Exponent, RatFuncQT>,
}

impl ZPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RatFuncQT::one())
    }

    pub fn constant(n: usize, c: RatFuncQT) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exp: Exponent, c: RatFuncQT) -> Self {
        let mut out = Self::zero(exp.len());
        if !c.is_zero() {
            out.terms.insert(exp, c);
        }
        out
    }

    /// `z^exp` with coefficient 1.
    pub fn z_pow(exp: &[u32]) -> Self {
        Self::monomial(exp.to_vec(), RatFuncQT::one())
    }

    /// The variable `z_{i+1}` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, RatFuncQT::one())
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, RatFuncQT)>,
    {
        let mut out = Self::zero(n);
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &RatFuncQT)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, RatFuncQT)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    /// Coefficient of `z^exp`; zero when absent.
    pub fn coeff(&self, exp: &[u32]) -> RatFuncQT {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, exp: &[u32]) -> Option<&RatFuncQT> {
        self.terms.get(exp)
    }

    pub fn add_term(&mut self, exp: Exponent, c: &RatFuncQT) {
        debug_assert_eq!(exp.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &ZPoly) {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }

    /// `self += c * rhs`.
    pub fn add_scaled(&mut self, c: &RatFuncQT, rhs: &ZPoly) {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (e, x) in &rhs.terms {
            self.add_term(e.clone(), &(c * x));
        }
    }

    pub fn scale(&self, c: &RatFuncQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.same_arity(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.same_arity(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.same_arity(rhs)?;
        Ok(self * rhs)
    }

    fn same_arity(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.n == rhs.n {
            Ok(())
        } else {
            Err(AlgebraError::ArityMismatch(self.n, rhs.n))
        }
    }

    /// Apply a fallible map to every coefficient, dropping zeros.
    pub fn try_map_coeffs<F, E>(&self, mut f: F) -> Result<Self, E>
    where
        F: FnMut(&Exponent, &RatFuncQT) -> Result<RatFuncQT, E>,
    {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = f(e, c)?;
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn map_coeffs<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&RatFuncQT) -> RatFuncQT,
    {
        self.try_map_coeffs(|_, c| Ok::<_, std::convert::Infallible>(f(c)))
            .unwrap_or_else(|e| match e {})
    }

    /// Rename variables: the exponent of `z_j` moves to slot `perm(j)`.
    pub fn map_exponents<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[u32]) -> Exponent,
    {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(f(e), c);
        }
        out
    }

    /// Exchange `z_{i+1}` and `z_{i+2}` (0-based `i`).
    pub fn swap_vars(&self, i: usize) -> Self {
        self.map_exponents(|e| {
            let mut e = e.to_vec();
            e.swap(i, i + 1);
            e
        })
    }

    /// Substitute `q -> t^k` in every coefficient.
    pub fn substitute_q(&self, k: i32) -> Result<Self, AlgebraError> {
        self.try_map_coeffs(|e, c| {
            c.substitute_q(k).map_err(|_| AlgebraError::PoleAtMonomial { order: 1, exponent: e.clone() })
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.values().all(RatFuncQT::is_q_free)
    }

    /// `Some(c)` when `other = c * self` for a scalar `c` (both nonzero).
    pub fn proportionality(&self, other: &Self) -> Option<RatFuncQT> {
        if self.n != other.n || self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (e0, c0) = self.terms.iter().next()?;
        let ratio = &other.coeff(e0) / c0;
        if ratio.is_zero() {
            return None;
        }
        (self.scale(&ratio) == *other).then_some(ratio)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.add_scaled(&-RatFuncQT::one(), rhs);
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = ZPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

pub(crate) fn fmt_monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, a) })
        .collect();
    parts.join("*")
}

impl fmt::Display for ZPoly {
    /// Terms in ascending lexicographic exponent order, e.g.
    /// `z2^2 + (1-t)/(1-q*t)*z1*z2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = fmt_monomial(e);
            let coeff = c.to_string();
            let simple = c.is_polynomial() && c.numer().len() == 1;
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, "-1") => write!(f, "-{mono}")?,
                (false, _) if simple => write!(f, "{coeff}*{mono}")?,
                (false, _) if c.is_polynomial() => write!(f, "({coeff})*{mono}")?,
                (false, _) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly[n={}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::LaurentQT;

    #[test]
    fn extraction_and_display() {
        let c = RatFuncQT::q() * RatFuncQT::from_poly(LaurentQT::one_minus(0, 1)) * RatFuncQT::inv_one_minus(1, 1);
        let f = &ZPoly::var(2, 0) + &ZPoly::var(2, 1).scale(&c);
        assert_eq!(f.coeff(&[0, 1]), c);
        assert!(f.coeff(&[1, 0]).is_one());
        assert!(f.coeff(&[0, 2]).is_zero());
        assert_eq!(f.to_string(), "(q-q*t)/(1-q*t)*z2 + z1");
    }

    #[test]
    fn arity_is_checked() {
        assert_eq!(
            ZPoly::one(2).checked_add(&ZPoly::one(3)),
            Err(AlgebraError::ArityMismatch(2, 3))
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = ZPoly::var(3, 1);
        assert!((&x - &x).is_zero());
        let sq = &x * &x;
        assert_eq!(sq, ZPoly::z_pow(&[0, 2, 0]));
    }
}
