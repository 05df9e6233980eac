//! Dense integer polynomials used behind the gcd of [`LaurentQT`](super::LaurentQT).
//!
//! `UPoly` is a polynomial in `t` over ℤ (index = degree). `BPoly` is a
//! polynomial in `q` whose coefficients are `UPoly`s. Both are kept trimmed:
//! no trailing zero coefficients, and the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BPoly = Vec<UPoly>;

pub(crate) fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn u_deg(p: &UPoly) -> usize {
    p.len() - 1
}

pub(crate) fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out: UPoly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    u_trim(&mut out);
    out
}

pub(crate) fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero), i.e. the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` divided by `b`.
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = u_deg(b);
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = u_deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &lr * y;
        }
        u_trim(&mut r);
    }
    r
}

/// Exact division over ℤ; `None` when `b` does not divide `a`.
pub(crate) fn u_divexact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = u_deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = u_deg(&r);
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &c * y;
        }
        quot[shift] = c;
        u_trim(&mut r);
    }
    if r.is_empty() {
        u_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// gcd over ℤ[t], integer content included, positive leading coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return u_normalize_sign(a.clone());
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = if a.len() >= b.len() {
        (u_div_scalar(a, &ca), u_div_scalar(b, &cb))
    } else {
        (u_div_scalar(b, &cb), u_div_scalar(a, &ca))
    };
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let cr = u_content(&r);
            u_div_scalar(&r, &cr)
        };
    }
    let cx = u_content(&x);
    let x = u_div_scalar(&x, &cx);
    u_normalize_sign(u_scale(&x, &c))
}

fn u_normalize_sign(mut a: UPoly) -> UPoly {
    if a.last().is_some_and(Signed::is_negative) {
        for x in a.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    a
}

fn b_deg(p: &BPoly) -> usize {
    p.len() - 1
}

fn b_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_divexact_u(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter()
        .map(|x| u_divexact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn b_scale_u(a: &BPoly, c: &UPoly) -> BPoly {
    let mut out: BPoly = a.iter().map(|x| u_mul(x, c)).collect();
    b_trim(&mut out);
    out
}

/// Pseudo-remainder in `q` over ℤ[t].
fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let db = b_deg(b);
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = b_deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = u_mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let prod = u_mul(&lr, y);
            r[j + shift] = u_sub(&r[j + shift], &prod);
        }
        b_trim(&mut r);
    }
    r
}

/// Exact division in ℤ[q, t]; `None` when not divisible.
pub(crate) fn b_divexact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b_deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot: BPoly = vec![Vec::new(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = b_deg(&r);
        let c = u_divexact(&r[dr], lb)?;
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            let prod = u_mul(&c, y);
            r[j + shift] = u_sub(&r[j + shift], &prod);
        }
        quot[shift] = c;
        b_trim(&mut r);
    }
    if r.is_empty() {
        b_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// gcd in ℤ[q, t] by primitive PRS in `q`, content over ℤ[t] handled
/// separately. The result has positive leading coefficient.
pub(crate) fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return b_normalize_sign(a.clone());
    }
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = if a.len() >= b.len() {
        (b_divexact_u(a, &ca), b_divexact_u(b, &cb))
    } else {
        (b_divexact_u(b, &cb), b_divexact_u(a, &ca))
    };
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let cr = b_content(&r);
            b_divexact_u(&r, &cr)
        };
    }
    let cx = b_content(&x);
    let x = b_divexact_u(&x, &cx);
    b_normalize_sign(b_scale_u(&x, &c))
}

fn b_normalize_sign(mut a: BPoly) -> BPoly {
    let negative = a
        .last()
        .and_then(|c| c.last())
        .is_some_and(Signed::is_negative);
    if negative {
        for c in a.iter_mut() {
            for x in c.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UPoly {
        let mut p: UPoly = c.iter().map(|&x| BigInt::from(x)).collect();
        u_trim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_of_cyclotomic_products() {
        // (1 - t^2) and (1 - t^3) share (1 - t) only.
        let g = u_gcd(&u(&[1, 0, -1]), &u(&[1, 0, 0, -1]));
        assert_eq!(g, u(&[-1, 1]));
        assert_eq!(u_gcd(&u(&[6, 4]), &u(&[9, 6])), u(&[3, 2]));
    }

    #[test]
    fn univariate_exact_division() {
        assert_eq!(u_divexact(&u(&[1, 0, -1]), &u(&[1, -1])), Some(u(&[1, 1])));
        assert_eq!(u_divexact(&u(&[1, 0, 1]), &u(&[1, -1])), None);
    }

    #[test]
    fn bivariate_gcd_extracts_common_linear_factor() {
        // a = (1 - q t)(1 + q t), b = (1 - q t)(1 - t)
        let a: BPoly = vec![u(&[1]), vec![], u(&[0, 0, -1])];
        let b: BPoly = vec![u(&[1, -1]), u(&[0, -1, 1])];
        let g = b_gcd(&a, &b);
        assert_eq!(g, vec![u(&[-1]), u(&[0, 1])]);
        assert!(b_divexact(&a, &g).is_some());
        assert!(b_divexact(&b, &g).is_some());
    }
}
