//! The t-boson algebra generated by `φ, φ†, k` with
//! `φφ† = 1 − tk`, `φ†φ = 1 − k`, `kφ = t⁻¹φk`, `kφ† = tφ†k`.
//!
//! These hold in the representation `k = diag(tⁱ)`, `φ_{i,i+1} = 1 − t^{i+1}`,
//! `φ†_{i+1,i} = 1` on `ℓ²(ℕ)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact_algebra::RatFuncQT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BosonLetter {
    Phi,
    PhiDagger,
    K,
    KPow(i32),
}

/// A scalar times a product of letters, read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BosonWord {
    pub scalar: RatFuncQT,
    pub letters: Vec<BosonLetter>,
}

impl BosonWord {
    pub fn new(letters: Vec<BosonLetter>) -> Self {
        Self { scalar: RatFuncQT::one(), letters }
    }

    pub fn scaled(scalar: RatFuncQT, letters: Vec<BosonLetter>) -> Self {
        Self { scalar, letters }
    }
}

/// Exponents `(a, b, c)` of the ordered monomial `φ†ᵃ kᵇ φᶜ`.
pub type NormalKey = (u32, i32, u32);

/// `Σ coeff · φ†ᵃ kᵇ φᶜ` with `a·c = 0`. These ordered monomials form a
/// basis, so equality of normal forms is equality in the algebra.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BosonNormalForm {
    terms: BTreeMap<NormalKey, RatFuncQT>,
}

impl BosonNormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), RatFuncQT::one())
    }

    /// `c · φ†ᵃ kᵇ φᶜ`, reduced if both `a` and `c` are positive.
    pub fn monomial((a, b, c): NormalKey, coeff: RatFuncQT) -> Self {
        let mut nf = Self::zero();
        nf.add_term((a, b, 0), coeff);
        for _ in 0..c {
            nf = nf.mul_letter(BosonLetter::Phi);
        }
        nf
    }

    pub fn letter(l: BosonLetter) -> Self {
        Self::one().mul_letter(l)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalKey, &RatFuncQT)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: NormalKey) -> RatFuncQT {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, key: NormalKey, c: RatFuncQT) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn scale(&self, c: &RatFuncQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Right multiplication by a single letter.
    pub fn mul_letter(&self, l: BosonLetter) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), v) in &self.terms {
            match l {
                BosonLetter::Phi if a == 0 => out.add_term((0, b, c + 1), v.clone()),
                // φ†ᵃ kᵇ φ = t^{−b} φ†^{a−1} kᵇ (1 − k), using c = 0
                BosonLetter::Phi => {
                    out.add_term((a - 1, b, 0), v.shift_t(-b));
                    out.add_term((a - 1, b + 1, 0), -v.shift_t(-b));
                }
                // φᶜ kᵉ = t^{ce} kᵉ φᶜ
                BosonLetter::K => out.add_term((a, b + 1, c), v.shift_t(c as i32)),
                BosonLetter::KPow(e) => out.add_term((a, b + e, c), v.shift_t(c as i32 * e)),
                // kᵇ φ† = tᵇ φ† kᵇ
                BosonLetter::PhiDagger if c == 0 => out.add_term((a + 1, b, 0), v.shift_t(b)),
                // φᶜ φ† = φ^{c−1} − t^c k φ^{c−1}
                BosonLetter::PhiDagger => {
                    out.add_term((a, b, c - 1), v.clone());
                    out.add_term((a, b + 1, c - 1), -v.shift_t(c as i32));
                }
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), v) in &rhs.terms {
            let mut part = self.scale(v);
            for _ in 0..a {
                part = part.mul_letter(BosonLetter::PhiDagger);
            }
            if b != 0 {
                part = part.mul_letter(BosonLetter::KPow(b));
            }
            for _ in 0..c {
                part = part.mul_letter(BosonLetter::Phi);
            }
            out.add_assign(&part);
        }
        out
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v.clone());
        }
    }

    /// The diagonal part, a Laurent polynomial in `k` keyed by exponent.
    pub fn diagonal_part(&self) -> BTreeMap<i32, RatFuncQT> {
        self.terms.iter().filter(|(&(a, _, c), _)| a == 0 && c == 0).map(|(&(_, b, _), v)| (b, v.clone())).collect()
    }
}

impl fmt::Display for BosonNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, c), v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut letters = Vec::new();
            let mut push = |name: &str, e: i64| match e {
                0 => {}
                1 => letters.push(name.to_string()),
                _ => letters.push(format!("{name}^{e}")),
            };
            push("phidag", a as i64);
            push("k", b as i64);
            push("phi", c as i64);
            if letters.is_empty() {
                write!(f, "({v})")?;
            } else {
                write!(f, "({v})*{}", letters.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BosonNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn boson_normal_form(w: &BosonWord) -> BosonNormalForm {
    let mut nf = BosonNormalForm::monomial((0, 0, 0), w.scalar.clone());
    for &l in &w.letters {
        nf = nf.mul_letter(l);
    }
    nf
}

/// `Tr(X k^{ju + c})` with `q = t^u`; unbalanced terms contribute 0 and
/// `Tr(k^{e + ju + c}) = 1 / (1 − q^j t^{e + c})`.
pub fn boson_trace_twisted(nf: &BosonNormalForm, j: u32, shift: i32) -> RatFuncQT {
    assert!(j > 0, "the twist must involve q");
    let mut acc = RatFuncQT::zero();
    for (e, v) in nf.diagonal_part() {
        acc = &acc + &(&v * &RatFuncQT::inv_one_minus(j, e + shift));
    }
    acc
}

/// `Tr(X k^{u + c})` with `q = t^u`.
pub fn boson_trace(nf: &BosonNormalForm, shift: i32) -> RatFuncQT {
    boson_trace_twisted(nf, 1, shift)
}

/// Floating-point trace of `w · k^{ju}` in the `dim`-dimensional truncation
/// of the representation, with `q = t^u`. The truncation error is of order
/// `(q^j)^dim`.
pub fn numeric_trace(w: &BosonWord, t: f64, u: f64, j: u32, dim: usize) -> f64 {
    let mut mat = vec![vec![0.0; dim]; dim];
    for (i, row) in mat.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let letter_matrix = |l: BosonLetter| {
        let mut m = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            match l {
                BosonLetter::K => m[i][i] = t.powi(i as i32),
                BosonLetter::KPow(e) => m[i][i] = t.powi(i as i32 * e),
                BosonLetter::Phi if i + 1 < dim => m[i][i + 1] = 1.0 - t.powi(i as i32 + 1),
                BosonLetter::PhiDagger if i + 1 < dim => m[i + 1][i] = 1.0,
                _ => {}
            }
        }
        m
    };
    let mul = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| {
        let mut c = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for k in 0..dim {
                if a[i][k] != 0.0 {
                    for jj in 0..dim {
                        c[i][jj] += a[i][k] * b[k][jj];
                    }
                }
            }
        }
        c
    };
    for &l in &w.letters {
        mat = mul(&mat, &letter_matrix(l));
    }
    let scalar = w.scalar.eval_f64(t.powf(u), t);
    let qj = t.powf(u * j as f64);
    (0..dim).map(|i| mat[i][i] * qj.powi(i as i32)).sum::<f64>() * scalar
}

#[cfg(test)]
mod tests {
    use super::BosonLetter::*;
    use super::*;

    fn nf(letters: Vec<BosonLetter>) -> BosonNormalForm {
        boson_normal_form(&BosonWord::new(letters))
    }

    fn poly(terms: &[(NormalKey, RatFuncQT)]) -> BosonNormalForm {
        let mut out = BosonNormalForm::zero();
        for (k, v) in terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    #[test]
    fn defining_relations() {
        let one = RatFuncQT::one();
        assert_eq!(nf(vec![Phi, PhiDagger]), poly(&[((0, 0, 0), one.clone()), ((0, 1, 0), -RatFuncQT::t())]));
        assert_eq!(nf(vec![PhiDagger, Phi]), poly(&[((0, 0, 0), one.clone()), ((0, 1, 0), -one.clone())]));
        // kφ = t⁻¹φk
        assert_eq!(nf(vec![K, Phi]), nf(vec![Phi, K]).scale(&RatFuncQT::t_pow(-1)));
        assert_eq!(nf(vec![K, PhiDagger]), poly(&[((1, 1, 0), RatFuncQT::t())]));
        // φφ† − tφ†φ = 1 − t
        let lhs = {
            let mut x = nf(vec![Phi, PhiDagger]);
            x.add_assign(&nf(vec![PhiDagger, Phi]).scale(&-RatFuncQT::t()));
            x
        };
        assert_eq!(lhs, poly(&[((0, 0, 0), RatFuncQT::one() - RatFuncQT::t())]));
    }

    #[test]
    fn multiplication_is_associative() {
        let a = nf(vec![Phi, Phi, K]);
        let b = nf(vec![PhiDagger, K, PhiDagger]);
        let c = nf(vec![Phi, PhiDagger, PhiDagger]);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b), nf(vec![Phi, Phi, K, PhiDagger, K, PhiDagger]));
    }

    #[test]
    fn traces() {
        let inv = |b| RatFuncQT::inv_one_minus(1, b);
        assert_eq!(boson_trace(&BosonNormalForm::one(), 0), inv(0));
        assert_eq!(boson_trace(&nf(vec![PhiDagger, Phi]), 0), inv(0) - inv(1));
        assert!(boson_trace(&nf(vec![Phi]), 0).is_zero());
        assert_eq!(boson_trace(&nf(vec![K, K]), 1), inv(3));
    }

    #[test]
    fn traces_match_truncated_matrices() {
        let words = [
            vec![Phi, PhiDagger, K],
            vec![PhiDagger, Phi, Phi, K, PhiDagger],
            vec![Phi, Phi, PhiDagger, PhiDagger],
            vec![PhiDagger, K, Phi, KPow(2)],
        ];
        let (t, u) = (0.6_f64, 1.5_f64);
        for w in words {
            let w = BosonWord::new(w);
            for j in 1..=2 {
                let exact = boson_trace_twisted(&boson_normal_form(&w), j, 0).eval_f64(t.powf(u), t);
                let approx = numeric_trace(&w, t, u, j, 80);
                assert!((exact - approx).abs() < 1e-9, "{w:?} j={j}: {exact} vs {approx}");
            }
        }
    }
}
