//! Matrix-product and summation formulas for two families of `f_μ`.

use std::collections::{BTreeMap, HashMap};

use super::boson::{boson_normal_form, boson_trace_twisted, BosonLetter, BosonWord};
use super::AsepError;
use crate::combinatorics::{sector_enumerate, Composition};
use crate::exact_algebra::{LaurentQT, RatFuncQT, ZPoly};

/// One term of a site operator: `z^degree` times a pure tensor of words,
/// one word per tensor factor.
type SiteTerm = (u32, Vec<Vec<BosonLetter>>);

/// `A_0(z)` (`top = false`) or `A_r(z)` (`top = true`) for the `{0, r}`
/// family: the `r − 1` fold product of `L(z) = [[1, φ], [zφ†, z]]` applied
/// to `(1, z)`. Each path `s_0 → … → s_{r−1}` through the matrix indices
/// contributes one pure tensor.
fn rank_r_site(r: u32, top: bool) -> Vec<SiteTerm> {
    let factors = r.saturating_sub(1) as usize;
    let mut out = Vec::new();
    for path in 0u32..(1 << factors) {
        let mut s = vec![top as u32];
        s.extend((0..factors).map(|b| (path >> b) & 1));
        // the final index selects 1 or z from the vector (1, z)
        let mut degree = s[factors];
        let mut words = Vec::with_capacity(factors);
        for l in 0..factors {
            degree += s[l];
            words.push(match (s[l], s[l + 1]) {
                (0, 1) => vec![BosonLetter::Phi],
                (1, 0) => vec![BosonLetter::PhiDagger],
                _ => vec![],
            });
        }
        out.push((degree, words));
    }
    out
}

/// Site operators of the rank-two algebra: `A_0 = 1 + zφ`, `A_1 = zk`,
/// `A_2 = zφ† + z²`.
fn rank_two_site(part: u32) -> Vec<SiteTerm> {
    use BosonLetter::*;
    match part {
        0 => vec![(0, vec![vec![]]), (1, vec![vec![Phi]])],
        1 => vec![(1, vec![vec![K]])],
        _ => vec![(1, vec![vec![PhiDagger]]), (2, vec![vec![]])],
    }
}

/// `Σ_ν z^ν Π_ℓ Tr(word_ℓ · k^{twist_ℓ · u})` for the product of site
/// operators, with integer multiplicities collected before tracing.
fn trace_product(sites: &[Vec<SiteTerm>], twists: &[u32]) -> ZPoly {
    let n = sites.len();
    let mut states: BTreeMap<(Vec<u32>, Vec<Vec<BosonLetter>>), i64> = BTreeMap::new();
    states.insert((Vec::new(), vec![Vec::new(); twists.len()]), 1);
    for site in sites {
        let mut next = BTreeMap::new();
        for ((exp, words), mult) in &states {
            for (deg, add) in site {
                let mut exp = exp.clone();
                exp.push(*deg);
                let words: Vec<Vec<BosonLetter>> =
                    words.iter().zip(add).map(|(w, a)| w.iter().chain(a).copied().collect()).collect();
                *next.entry((exp, words)).or_insert(0) += mult;
            }
        }
        states = next;
    }
    let mut traces: HashMap<(usize, Vec<BosonLetter>), RatFuncQT> = HashMap::new();
    let mut out = ZPoly::zero(n);
    for ((exp, words), mult) in states {
        let mut value = RatFuncQT::integer(mult);
        for (l, w) in words.into_iter().enumerate() {
            let tr = traces
                .entry((l, w))
                .or_insert_with_key(|(l, w)| {
                    boson_trace_twisted(&boson_normal_form(&BosonWord::new(w.clone())), twists[*l], 0)
                })
                .clone();
            value = &value * &tr;
            if value.is_zero() {
                break;
            }
        }
        out.add_term(exp, &value);
    }
    out
}

/// `f_μ` for a rank-two composition, from the single-boson trace formula
/// normalized by `1 − q t^{m₁}`.
pub fn mpa_f_rank2(mu: &[u32]) -> Result<ZPoly, AsepError> {
    if mu.iter().any(|&p| p > 2) {
        return Err(AsepError::Shape(format!("{} has a part above 2", Composition::from(mu))));
    }
    let m1 = mu.iter().filter(|&&p| p == 1).count() as i32;
    let sites: Vec<_> = mu.iter().map(|&p| rank_two_site(p)).collect();
    let norm = RatFuncQT::from_poly(LaurentQT::one_minus(1, m1));
    Ok(trace_product(&sites, &[1]).scale(&norm))
}

/// `f_μ` for `μ` with parts in `{0, r}`, from the trace over `r − 1`
/// bosons with twist `k^{(r−1)u} ⊗ … ⊗ k^u`, normalized by `Π_{i<r}(1 − qⁱ)`.
pub fn mpa_f_rank_r(mu: &[u32], max_rank: u32) -> Result<ZPoly, AsepError> {
    let r = mu.iter().copied().max().unwrap_or(0);
    if mu.iter().any(|&p| p != 0 && p != r) {
        return Err(AsepError::Shape(format!("{} has two distinct nonzero parts", Composition::from(mu))));
    }
    if r > max_rank {
        return Err(AsepError::Shape(format!("rank {r} exceeds the configured maximum {max_rank}")));
    }
    if r == 0 {
        return Ok(ZPoly::one(mu.len()));
    }
    let bottom = rank_r_site(r, false);
    let top = rank_r_site(r, true);
    let sites: Vec<_> = mu.iter().map(|&p| if p == 0 { bottom.clone() } else { top.clone() }).collect();
    let twists: Vec<u32> = (1..r).rev().collect();
    let norm = (1..r).fold(RatFuncQT::one(), |acc, i| acc * RatFuncQT::from_poly(LaurentQT::one_minus(i, 0)));
    Ok(trace_product(&sites, &twists).scale(&norm))
}

/// `Tr(L(α₁,β₁) … L(α_n,β_n) k^{ju})` where `L(a, a) = 1`, `L(0, 1) = φ`,
/// `L(1, 0) = φ†`.
pub fn coefficient_cj(alpha: &[u32], beta: &[u32], j: u32) -> Result<RatFuncQT, AsepError> {
    if alpha.len() != beta.len() {
        return Err(AsepError::Shape("compositions of different lengths".into()));
    }
    if alpha.iter().chain(beta).any(|&p| p > 1) {
        return Err(AsepError::Shape("expected rank-one compositions".into()));
    }
    if alpha.iter().sum::<u32>() != beta.iter().sum::<u32>() {
        return Ok(RatFuncQT::zero());
    }
    let letters = alpha
        .iter()
        .zip(beta)
        .filter_map(|pair| match pair {
            (0, 1) => Some(BosonLetter::Phi),
            (1, 0) => Some(BosonLetter::PhiDagger),
            _ => None,
        })
        .collect();
    Ok(boson_trace_twisted(&boson_normal_form(&BosonWord::new(letters)), j, 0))
}

/// `f_δ` for `δ = (0^{n−m}, r^m)` as the nested sum over `r − 1` rank-one
/// compositions `κ_1, …, κ_{r−1}` of the sector of `δ* = (0^{n−m}, 1^m)`:
/// `Π_{i<r}(1 − qⁱ) Σ z^{δ*} Π_j C_j(κ_{j+1}, κ_j) z^{κ_j}` with `κ_r = δ*`.
pub fn f_delta_sum_rank_r(delta: &[u32]) -> Result<ZPoly, AsepError> {
    let n = delta.len();
    let r = delta.iter().copied().max().unwrap_or(0);
    let m = delta.iter().filter(|&&p| p == r && r > 0).count();
    let expected: Vec<u32> = (0..n).map(|i| if i >= n - m { r } else { 0 }).collect();
    if delta != expected.as_slice() {
        return Err(AsepError::Shape(format!("{} is not of the form (0,…,0,r,…,r)", Composition::from(delta))));
    }
    if r == 0 {
        return Ok(ZPoly::one(n));
    }
    let star: Vec<u32> = delta.iter().map(|&p| (p > 0) as u32).collect();
    let sector = sector_enumerate(&star);
    let mut cj: HashMap<(Vec<u32>, Vec<u32>, u32), RatFuncQT> = HashMap::new();
    let mut c = |a: &[u32], b: &[u32], j: u32| {
        cj.entry((a.to_vec(), b.to_vec(), j))
            .or_insert_with(|| coefficient_cj(a, b, j).expect("rank-one inputs of equal length"))
            .clone()
    };
    // partial sums keyed by κ_j: the z-polynomial accumulated for j..r−1
    let mut layer: BTreeMap<Vec<u32>, ZPoly> = BTreeMap::new();
    layer.insert(star.clone(), ZPoly::z_pow(&star));
    for j in (1..r).rev() {
        let mut next: BTreeMap<Vec<u32>, ZPoly> = BTreeMap::new();
        for kappa in &sector {
            let mut acc = ZPoly::zero(n);
            for (upper, poly) in &layer {
                let coeff = c(upper, kappa, j);
                if !coeff.is_zero() {
                    acc.add_scaled(&coeff, poly);
                }
            }
            if !acc.is_zero() {
                next.insert(kappa.to_vec(), &acc * &ZPoly::z_pow(kappa));
            }
        }
        layer = next;
    }
    let mut total = ZPoly::zero(n);
    for poly in layer.values() {
        total.add_assign_ref(poly);
    }
    let norm = (1..r).fold(RatFuncQT::one(), |acc, i| acc * RatFuncQT::from_poly(LaurentQT::one_minus(i, 0)));
    Ok(total.scale(&norm))
}

/// Elementary symmetric polynomial `e_k` in the variables `vars` of `n`.
fn elementary(n: usize, vars: &[usize], k: usize) -> ZPoly {
    let mut layers = vec![ZPoly::one(n)];
    layers.extend((0..k).map(|_| ZPoly::zero(n)));
    for &v in vars {
        let z = ZPoly::var(n, v);
        for d in (1..=k).rev() {
            let prod = &layers[d - 1] * &z;
            layers[d].add_assign_ref(&prod);
        }
    }
    layers.swap_remove(k)
}

/// Closed form of `f_δ` for `δ = (0^{n−m₁−m₂}, 1^{m₁}, 2^{m₂})`:
/// `Π_{j ≤ m₁+m₂} z_{n−j+1} Σ_i t^{im₁} Π_{j ≤ i} (1 − tʲ)/(1 − qt^{m₁+j})
/// e_i(z_1..z_{n−m₁−m₂}) e_{m₂−i}(z_{n−m₂+1}..z_n)`.
pub fn f_delta_rank2_closed(n: usize, m1: usize, m2: usize) -> Result<ZPoly, AsepError> {
    if m1 + m2 > n {
        return Err(AsepError::Shape(format!("m1 + m2 = {} exceeds n = {n}", m1 + m2)));
    }
    let zeros = n - m1 - m2;
    let front: Vec<usize> = (0..zeros).collect();
    let back: Vec<usize> = (n - m2..n).collect();
    let mut prefactor = vec![0u32; n];
    for p in prefactor.iter_mut().skip(zeros) {
        *p = 1;
    }
    let mut sum = ZPoly::zero(n);
    let mut weight = RatFuncQT::one();
    for i in 0..=m2.min(zeros) {
        if i > 0 {
            let j = i as i32;
            let ratio = RatFuncQT::from_poly(LaurentQT::one_minus(0, j)) * RatFuncQT::inv_one_minus(1, m1 as i32 + j);
            weight = weight * ratio;
        }
        let term = &elementary(n, &front, i) * &elementary(n, &back, m2 - i);
        sum.add_scaled(&(weight.shift_t((i * m1) as i32)), &term);
    }
    Ok(&sum * &ZPoly::z_pow(&prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f02() -> ZPoly {
        let c = (RatFuncQT::one() - RatFuncQT::t()) * RatFuncQT::inv_one_minus(1, 1);
        &ZPoly::z_pow(&[0, 2]) + &ZPoly::z_pow(&[1, 1]).scale(&c)
    }

    #[test]
    fn site_operators_small_rank() {
        use BosonLetter::*;
        assert_eq!(rank_r_site(1, false), vec![(0, vec![])]);
        assert_eq!(rank_r_site(1, true), vec![(1, vec![])]);
        let mut a0 = rank_r_site(2, false);
        a0.sort();
        assert_eq!(a0, vec![(0, vec![vec![]]), (1, vec![vec![Phi]])]);
        let mut a3 = rank_r_site(3, true);
        a3.sort();
        assert_eq!(
            a3,
            vec![
                (1, vec![vec![PhiDagger], vec![]]),
                (2, vec![vec![], vec![PhiDagger]]),
                (2, vec![vec![PhiDagger], vec![Phi]]),
                (3, vec![vec![], vec![]]),
            ]
        );
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(mpa_f_rank2(&[0, 2]).unwrap(), f02());
        assert_eq!(mpa_f_rank2(&[1, 1]).unwrap(), ZPoly::z_pow(&[1, 1]));
        assert_eq!(mpa_f_rank2(&[0, 0, 0]).unwrap(), ZPoly::one(3));
        assert_eq!(f_delta_rank2_closed(2, 1, 1).unwrap(), ZPoly::z_pow(&[1, 2]));
        assert_eq!(f_delta_rank2_closed(2, 0, 1).unwrap(), f02());
        assert_eq!(f_delta_rank2_closed(3, 0, 0).unwrap(), ZPoly::one(3));
    }

    #[test]
    fn rank_r_examples() {
        assert_eq!(mpa_f_rank_r(&[1, 0, 1], 3).unwrap(), ZPoly::z_pow(&[1, 0, 1]));
        assert_eq!(mpa_f_rank_r(&[0, 2], 3).unwrap(), f02());
        assert_eq!(f_delta_sum_rank_r(&[0, 2]).unwrap(), f02());
        assert_eq!(f_delta_sum_rank_r(&[0, 1, 1]).unwrap(), ZPoly::z_pow(&[0, 1, 1]));
        assert!(mpa_f_rank_r(&[0, 4], 3).is_err());
        assert!(mpa_f_rank_r(&[1, 2], 3).is_err());
    }

    #[test]
    fn cj_values() {
        let inv = |a, b| RatFuncQT::inv_one_minus(a, b);
        assert_eq!(coefficient_cj(&[0, 0], &[0, 0], 2).unwrap(), inv(2, 0));
        assert_eq!(coefficient_cj(&[1, 0], &[0, 1], 1).unwrap(), inv(1, 0) - inv(1, 1));
        assert!(coefficient_cj(&[1, 0], &[0, 0], 1).unwrap().is_zero());
    }
}
