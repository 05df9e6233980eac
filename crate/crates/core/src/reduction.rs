//! Resonance reduction `Coeff_p[f_μ, m]`, its expansion in the target
//! sector, closed-form duality coefficients `ψ(ν, μ)`, and the
//! indicator-free observables `H`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::{
    compositions_bounded, crossing_chi, indicator, linear_extension_key, omega, resonant_sector,
    resonant_sectors_generic, sector_enumerate, validate_positions, CombinatoricsError, Composition,
};
use crate::engine::Engine;
use crate::exact_algebra::{coeff_p_poly, AlgebraError, LaurentQT, RatFuncQT, ZPoly};
use crate::macdonald::MacdonaldError;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error(transparent)]
    Macdonald(#[from] MacdonaldError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("expansion left the target sectors; residual {0}")]
    NonzeroResidual(String),
    #[error("no target sector for {0} at m = {1}")]
    NoTargetSector(Composition, u32),
    #[error("sector mismatch: {0}")]
    SectorMismatch(String),
}

impl From<AlgebraError> for ReductionError {
    fn from(e: AlgebraError) -> Self {
        ReductionError::Macdonald(e.into())
    }
}

/// `Coeff_p[f_μ, m]` and its expansion `Σ_ν ψ(ν, μ) f_ν(z; t^{-m}, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub mu: Composition,
    pub m: u32,
    pub p: u32,
    pub coeff: ZPoly,
    /// Anti-partition representatives of the sectors searched.
    pub targets: Vec<Composition>,
    /// One entry per member of the target sectors, zeros included. Empty when
    /// `coeff` vanishes.
    pub entries: BTreeMap<Composition, RatFuncQT>,
}

/// Computes `g = Coeff_p[f_μ, m]` and peels off `ψ(ν, μ) f_ν(t^{-m})` from the
/// `≺`-largest target member downwards. The residual must vanish exactly.
pub fn reduce_expand(engine: &Engine, mu: &[u32], m: u32, p: u32) -> Result<Reduction, ReductionError> {
    let mu_c = Composition::from(mu);
    if m == 0 {
        return Err(CombinatoricsError::OutOfRange("m must be positive".into()).into());
    }
    let coeff = coeff_p_poly(&*engine.f(mu)?, m as i32, p)?;
    let targets = match resonant_sector(mu, m) {
        Ok(eps) => vec![eps],
        Err(_) => resonant_sectors_generic(mu, m),
    };
    let mut entries = BTreeMap::new();
    if coeff.is_zero() {
        return Ok(Reduction { mu: mu_c, m, p, coeff, targets, entries });
    }
    if targets.is_empty() {
        return Err(ReductionError::NoTargetSector(mu_c, m));
    }
    let mut members: Vec<Composition> = targets.iter().flat_map(|eps| sector_enumerate(eps)).collect();
    members.sort_by_key(|nu| std::cmp::Reverse(linear_extension_key(nu)));
    let mut residual = coeff.clone();
    for nu in members {
        let c = residual.coeff(&nu);
        if !c.is_zero() {
            let f = engine.f_resonant(&nu, m as i32)?;
            residual.add_scaled(&-&c, &f);
        }
        entries.insert(nu, c);
    }
    if !residual.is_zero() {
        return Err(ReductionError::NonzeroResidual(residual.to_string()));
    }
    Ok(Reduction { mu: mu_c, m, p, coeff, targets, entries })
}

/// Full coefficient table of a sector reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTable {
    pub delta: Composition,
    pub epsilon: Composition,
    pub m: u32,
    pub p: u32,
    /// Keyed by `(ν, μ)`; every pair of the two sectors is present.
    pub entries: BTreeMap<(Composition, Composition), RatFuncQT>,
    /// `ψ(ε⁺, δ⁺)`. Since `Ω(δ⁺, ·) = 0` this is the overall factor `d(t)`
    /// whenever the closed form applies.
    pub common_factor: RatFuncQT,
}

impl PsiTable {
    pub fn get(&self, nu: &[u32], mu: &[u32]) -> RatFuncQT {
        self.entries
            .get(&(Composition::from(nu), Composition::from(mu)))
            .cloned()
            .unwrap_or_else(RatFuncQT::zero)
    }

    pub fn sources(&self) -> Vec<Composition> {
        sector_enumerate(&self.delta)
    }

    pub fn targets(&self) -> Vec<Composition> {
        sector_enumerate(&self.epsilon)
    }
}

/// Reduces every `f_μ`, `μ ∈ σ(δ)`, and collects the table. All members must
/// land in the single sector given by the closed-form sector rule.
pub fn psi_table(engine: &Engine, delta: &[u32], m: u32, p: u32) -> Result<PsiTable, ReductionError> {
    let delta = Composition::from(delta).antidominant();
    let epsilon = resonant_sector(&delta, m)?;
    let sources = sector_enumerate(&delta);
    let reductions: Vec<Reduction> =
        sources.par_iter().map(|mu| reduce_expand(engine, mu, m, p)).collect::<Result<_, _>>()?;
    let targets = sector_enumerate(&epsilon);
    let mut entries = BTreeMap::new();
    for red in reductions {
        for nu in &targets {
            let c = red.entries.get(nu).cloned().unwrap_or_else(RatFuncQT::zero);
            entries.insert((nu.clone(), red.mu.clone()), c);
        }
        if let Some((nu, _)) = red.entries.iter().find(|(nu, c)| !c.is_zero() && !targets.contains(nu)) {
            return Err(ReductionError::SectorMismatch(format!("{} reduces onto {nu}, outside {epsilon}", red.mu)));
        }
    }
    let key = (epsilon.dominant(), delta.dominant());
    let common_factor = entries[&key].clone();
    Ok(PsiTable { delta, epsilon, m, p, entries, common_factor })
}

/// Checks `ψ(ν, μ) = d(t)·closed(ν, μ)` on every entry.
pub fn check_closed_form<F>(table: &PsiTable, mut closed: F) -> Report
where
    F: FnMut(&[u32], &[u32]) -> Result<LaurentQT, ReductionError>,
{
    let mut report = Report::new(format!("closed form on {} -> {}", table.delta, table.epsilon));
    if table.common_factor.is_zero() {
        report.fail(json!({ "error": "common factor vanishes" }));
        return report;
    }
    for ((nu, mu), value) in &table.entries {
        let expected = match closed(nu, mu) {
            Ok(v) => &table.common_factor * &RatFuncQT::from(v),
            Err(e) => {
                report.fail(json!({ "nu": nu.to_string(), "mu": mu.to_string(), "error": e.to_string() }));
                continue;
            }
        };
        report.record(*value == expected, || {
            json!({ "nu": nu.to_string(), "mu": mu.to_string(), "got": value.to_string(), "expected": expected.to_string() })
        });
    }
    report
}

/// The relation `Coeff[f_{s_iμ}] = T_i Coeff[f_μ]` (for `μ_i > μ_{i+1}`) read
/// off coefficient-wise through the exchange relations:
///
/// - `κ_i < κ_{i+1}`: `ψ(κ, s_iμ) = ψ(s_iκ, μ) + (t − 1) ψ(κ, μ)`;
/// - `κ_i = κ_{i+1}`: `ψ(κ, s_iμ) = t ψ(κ, μ)`;
/// - `κ_i > κ_{i+1}`: `ψ(κ, s_iμ) = t ψ(s_iκ, μ)`.
pub fn verify_intertwining(table: &PsiTable) -> Report {
    let mut report = Report::new(format!("Hecke intertwining of the table {} -> {}", table.delta, table.epsilon));
    let t = RatFuncQT::t();
    let t_minus_one = &t - &RatFuncQT::one();
    let targets = table.targets();
    for mu in table.sources() {
        for i in 0..mu.n().saturating_sub(1) {
            if mu[i] <= mu[i + 1] {
                continue;
            }
            let smu = mu.swapped(i);
            for kappa in &targets {
                let skappa = kappa.swapped(i);
                let expected = match kappa[i].cmp(&kappa[i + 1]) {
                    std::cmp::Ordering::Less => &table.get(&skappa, &mu) + &(&t_minus_one * &table.get(kappa, &mu)),
                    std::cmp::Ordering::Equal => &t * &table.get(kappa, &mu),
                    std::cmp::Ordering::Greater => &t * &table.get(&skappa, &mu),
                };
                report.record(table.get(kappa, &smu) == expected, || {
                    json!({ "nu": kappa.to_string(), "mu": mu.to_string(), "i": i + 1 })
                });
            }
        }
    }
    report
}

fn same_length(nu: &[u32], mu: &[u32]) -> Result<(), ReductionError> {
    if nu.len() != mu.len() {
        return Err(ReductionError::SectorMismatch(format!("lengths {} and {}", nu.len(), mu.len())));
    }
    Ok(())
}

fn t_omega_indicator(nu: &[u32], mu: &[u32]) -> LaurentQT {
    if indicator(mu, nu) {
        LaurentQT::t_pow(omega(mu, nu) as i32)
    } else {
        LaurentQT::zero()
    }
}

/// `t^{Ω(μ,ν)}·I(μ,ν)` for `μ` with parts in `{0, r}` and rank-one `ν`.
pub fn psi_rank1(nu: &[u32], mu: &[u32], r: u32) -> Result<LaurentQT, ReductionError> {
    same_length(nu, mu)?;
    if r == 0 || mu.iter().any(|&x| x != 0 && x != r) {
        return Err(ReductionError::SectorMismatch(format!("{} has parts outside {{0, {r}}}", Composition::from(mu))));
    }
    if nu.iter().any(|&x| x > 1) {
        return Err(ReductionError::SectorMismatch(format!("{} is not rank one", Composition::from(nu))));
    }
    Ok(t_omega_indicator(nu, mu))
}

/// `t^{Ω(μ,ν)}·I(μ,ν)` with the rank-two indicator.
pub fn psi_rank2(nu: &[u32], mu: &[u32]) -> Result<LaurentQT, ReductionError> {
    same_length(nu, mu)?;
    if nu.iter().chain(mu).any(|&x| x > 2) {
        return Err(ReductionError::SectorMismatch("parts must lie in {0, 1, 2}".into()));
    }
    Ok(t_omega_indicator(nu, mu))
}

/// `ν_i` on the 1-based window `1..=len`, zero outside.
fn site(nu: &[u32], i: i64) -> u32 {
    if i >= 1 && (i as usize) <= nu.len() {
        nu[i as usize - 1]
    } else {
        0
    }
}

/// `#{i < x : pred(ν_i)}` over the window.
fn count_below(nu: &[u32], x: i64, pred: impl Fn(u32) -> bool) -> i32 {
    let upto = (x - 1).clamp(0, nu.len() as i64) as usize;
    nu[..upto].iter().filter(|&&v| pred(v)).count() as i32
}

/// Position-form duality function. `x` holds the 1-particle positions and `y`
/// (if any) the 2-particle positions of `μ`, 1-based within `ν`'s window:
///
/// `Π_x Π_{i<x} t^{[ν_i ≥ 1]} · Π_y Π_{i<y} t^{[ν_i = 1][ν_y = 1]} · t^{−χ(x,y)} · I(μ,ν)`.
///
/// With `y` absent and `ν` binary this is `Π_x (Π_{i<x} t^{ν_i}) ν_x`.
pub fn psi_positions(nu: &[u32], x: &[i64], y: Option<&[i64]>) -> Result<LaurentQT, ReductionError> {
    let y = y.unwrap_or(&[]);
    let lists = [x.to_vec(), y.to_vec()];
    let chi = crossing_chi(&lists)?;
    if nu.iter().any(|&v| v > 2) {
        return Err(ReductionError::SectorMismatch("ν must have parts in {0, 1, 2}".into()));
    }
    // I(μ,ν) = 0 iff μ_k > ν_k = 0 or μ_k < ν_k = 2; μ is 1 on x, 2 on y.
    let vanishes = x.iter().any(|&k| matches!(site(nu, k), 0 | 2))
        || y.iter().any(|&k| site(nu, k) == 0)
        || nu.iter().enumerate().any(|(k, &v)| v == 2 && !y.contains(&(k as i64 + 1)));
    if vanishes {
        return Ok(LaurentQT::zero());
    }
    let mut e: i32 = x.iter().map(|&k| count_below(nu, k, |v| v >= 1)).sum();
    for &k in y {
        if site(nu, k) == 1 {
            e += count_below(nu, k, |v| v == 1);
        }
    }
    Ok(LaurentQT::t_pow(e - chi as i32))
}

/// Exponent of `H(ν, x⃗⁽¹⁾, …, x⃗⁽ʳ⁾) = Π_j Π_{x ∈ x⃗⁽ʲ⁾} Π_{i ≤ x} t^{ν_i} · t^{−χ}`.
/// Positions are 1-based within `ν`'s window and may lie outside it.
pub fn h_exponent(nu: &[u32], lists: &[Vec<i64>]) -> Result<i64, ReductionError> {
    let chi = crossing_chi(lists)? as i64;
    let mut prefix = vec![0i64; nu.len() + 1];
    for (i, &v) in nu.iter().enumerate() {
        prefix[i + 1] = prefix[i] + v as i64;
    }
    let upto = |x: i64| prefix[x.clamp(0, nu.len() as i64) as usize];
    Ok(lists.iter().flatten().map(|&x| upto(x)).sum::<i64>() - chi)
}

pub fn h_observable(nu: &[u32], lists: &[Vec<i64>]) -> Result<LaurentQT, ReductionError> {
    validate_positions(lists)?;
    Ok(LaurentQT::t_pow(h_exponent(nu, lists)? as i32))
}

/// Positions (1-based) of each species `1..=r` in `μ`.
pub fn positions_by_species(mu: &[u32], r: u32) -> Vec<Vec<i64>> {
    (1..=r)
        .map(|s| mu.iter().enumerate().filter(|(_, &v)| v == s).map(|(i, _)| i as i64 + 1).collect())
        .collect()
}

/// Sector shapes `(n, m₁, m₂, p)` with `n <= max_n`, `p >= 1`,
/// `p <= min(n − m₁ − m₂, m₂)`.
pub fn rank2_shapes(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m2 in 1..=n {
            for m1 in 0..=(n - m2) {
                for p in 1..=(n - m1 - m2).min(m2) {
                    out.push((n, m1, m2, p));
                }
            }
        }
    }
    out
}

pub fn rank2_sectors(n: usize, m1: usize, m2: usize, p: usize) -> (Composition, Composition) {
    (
        Composition::anti_partition(&[n - m1 - m2, m1, m2]),
        Composition::anti_partition(&[n - m1 - m2 - p, m1 + 2 * p, m2 - p]),
    )
}

/// `Ω + m₁(m₁−1)/2 + p(p−1)/2 + χ = Σ_x #{i<x: ν_i ≥ 1} + Σ_y #{i<y: ν_i = 1}·[ν_y = 1]`
/// on every admissible pair of every rank-two shape with `n <= max_n`.
pub fn verify_exponent_identity(max_n: usize) -> Report {
    let mut report = Report::new(format!("exponent identity, n <= {max_n}"));
    for (n, m1, m2, p) in rank2_shapes(max_n) {
        let (delta, epsilon) = rank2_sectors(n, m1, m2, p);
        let targets = sector_enumerate(&epsilon);
        for mu in sector_enumerate(&delta) {
            let lists = positions_by_species(&mu, 2);
            let chi = crossing_chi(&lists).expect("positions of a composition are valid") as i64;
            for nu in &targets {
                if !indicator(&mu, nu) {
                    continue;
                }
                let lhs = omega(&mu, nu) as i64 + (m1 * m1.saturating_sub(1) / 2 + p * (p - 1) / 2) as i64 + chi;
                let rhs: i64 = lists[0].iter().map(|&x| count_below(nu, x, |v| v >= 1) as i64).sum::<i64>()
                    + lists[1]
                        .iter()
                        .filter(|&&y| site(nu, y) == 1)
                        .map(|&y| count_below(nu, y, |v| v == 1) as i64)
                        .sum::<i64>();
                report.record(lhs == rhs, || {
                    json!({ "mu": mu.to_string(), "nu": nu.to_string(), "lhs": lhs, "rhs": rhs })
                });
            }
        }
    }
    report
}

/// `ψ = t^{−m(m−1)/2}·ψ_pos` for rank-one targets (`m` particles of species
/// `r`), and `ψ = t^{−(m₁(m₁−1) + p(p−1))/2}·ψ_pos` for rank-two shapes.
pub fn verify_psi_positions(max_n: usize) -> Report {
    let mut report = Report::new(format!("closed form vs position form, n <= {max_n}"));
    for n in 1..=max_n {
        for r in 1..=n as u32 {
            for m in 1..=(n / r as usize) {
                let delta = Composition::new([vec![0; n - m], vec![r; m]].concat());
                let epsilon = Composition::anti_partition(&[n - r as usize * m, r as usize * m]);
                let scale = -((m * (m - 1) / 2) as i32);
                for mu in sector_enumerate(&delta) {
                    let x = &positions_by_species(&mu, r)[r as usize - 1];
                    for nu in sector_enumerate(&epsilon) {
                        let lhs = psi_rank1(&nu, &mu, r).expect("valid sectors");
                        let rhs = psi_positions(&nu, x, None).expect("valid positions").shift_t(scale);
                        report.record(lhs == rhs, || json!({ "mu": mu.to_string(), "nu": nu.to_string(), "r": r }));
                    }
                }
            }
        }
    }
    for (n, m1, m2, p) in rank2_shapes(max_n) {
        let (delta, epsilon) = rank2_sectors(n, m1, m2, p);
        let scale = -((m1 * m1.saturating_sub(1) + p * (p - 1)) as i32 / 2);
        for mu in sector_enumerate(&delta) {
            let lists = positions_by_species(&mu, 2);
            for nu in sector_enumerate(&epsilon) {
                let lhs = psi_rank2(&nu, &mu).expect("valid sectors");
                let rhs = psi_positions(&nu, &lists[0], Some(&lists[1])).expect("valid positions").shift_t(scale);
                report.record(lhs == rhs, || json!({ "mu": mu.to_string(), "nu": nu.to_string() }));
            }
        }
    }
    report
}

/// Outcome of testing whether `Coeff_p[E_μ, m]` is a multiple of a single
/// `E_ν(z; t^{-m}, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureOutcome {
    /// `Coeff_p[E_μ, m] = 0`.
    NoPole,
    Proportional { nu: Composition, ratio: RatFuncQT },
    Ambiguous(Vec<Composition>),
    NoMatch,
}

impl ConjectureOutcome {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, ConjectureOutcome::Proportional { .. })
    }
}

/// Searches all `ν` of the same length and weight, parts bounded by the
/// largest part of `μ`, with `E_ν` regular at `q = t^{-m}`.
pub fn conjecture_probe(engine: &Engine, mu: &[u32], m: u32, p: u32) -> Result<ConjectureOutcome, ReductionError> {
    if m == 0 {
        return Err(CombinatoricsError::OutOfRange("m must be positive".into()).into());
    }
    let coeff = coeff_p_poly(&*engine.e(mu)?, m as i32, p)?;
    if coeff.is_zero() {
        return Ok(ConjectureOutcome::NoPole);
    }
    let weight = mu.iter().sum();
    let max_part = mu.iter().copied().max().unwrap_or(0);
    let mut hits = Vec::new();
    for nu in compositions_bounded(weight, mu.len(), max_part) {
        let Ok(e) = engine.e_resonant(&nu, m as i32) else { continue };
        if let Some(ratio) = e.proportionality(&coeff) {
            hits.push((nu, ratio));
        }
    }
    Ok(match hits.len() {
        0 => ConjectureOutcome::NoMatch,
        1 => {
            let (nu, ratio) = hits.pop().expect("one hit");
            ConjectureOutcome::Proportional { nu, ratio }
        }
        _ => ConjectureOutcome::Ambiguous(hits.into_iter().map(|(nu, _)| nu).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn one_minus_t() -> RatFuncQT {
        RatFuncQT::one() - RatFuncQT::t()
    }

    #[test]
    fn pinned_two_site_reduction() {
        let engine = Engine::new();
        let red = reduce_expand(&engine, &[0, 2], 1, 1).unwrap();
        assert_eq!(red.coeff, ZPoly::z_pow(&[1, 1]).scale(&one_minus_t()));
        assert_eq!(red.entries, BTreeMap::from([(c("(1,1)"), one_minus_t())]));
    }

    #[test]
    fn three_site_reduction_matches_closed_form() {
        let engine = Engine::new();
        let red = reduce_expand(&engine, &[0, 0, 2], 1, 1).unwrap();
        let d = red.entries[&c("(0,1,1)")].clone().checked_div(&RatFuncQT::t()).unwrap();
        assert!(!d.is_zero());
        assert_eq!(red.entries[&c("(1,0,1)")], &d * &RatFuncQT::t());
        assert!(red.entries[&c("(1,1,0)")].is_zero());
    }

    #[test]
    fn no_pole_gives_empty_expansion() {
        let engine = Engine::new();
        let red = reduce_expand(&engine, &[0, 0, 0], 1, 1).unwrap();
        assert!(red.coeff.is_zero() && red.entries.is_empty());
    }

    #[test]
    fn closed_forms() {
        let t = LaurentQT::t();
        assert_eq!(psi_rank1(&[1, 1], &[0, 2], 2).unwrap(), t);
        assert!(psi_rank1(&[0, 1], &[2, 0], 2).unwrap().is_zero());
        assert!(psi_rank1(&[1, 1], &[2, 0], 2).unwrap().is_one());
        assert!(psi_rank1(&[1, 1], &[1, 2], 2).is_err());
        assert_eq!(psi_rank2(&[1, 1], &[0, 2]).unwrap(), t);
        // pairs (1,3), (1,4) and (3,4) all have μ_i < μ_j on ν-ones
        assert_eq!(psi_rank2(&[1, 0, 1, 1], &[0, 0, 1, 2]).unwrap(), LaurentQT::t_pow(3));
        assert!(psi_rank2(&[2, 1], &[1, 2]).unwrap().is_zero());
    }

    #[test]
    fn position_forms() {
        assert_eq!(psi_positions(&[1, 0, 1], &[3], None).unwrap(), LaurentQT::t());
        assert!(psi_positions(&[0, 0, 0], &[2], None).unwrap().is_zero());
        assert!(psi_positions(&[1, 1], &[2], Some(&[1])).unwrap().is_one());
        assert!(psi_positions(&[1, 1], &[2, 1], None).is_err());
        assert_eq!(h_observable(&[0, 1], &[vec![2]]).unwrap(), LaurentQT::t());
        assert!(h_observable(&[0, 1], &[vec![], vec![]]).unwrap().is_one());
        assert_eq!(h_observable(&[0, 0], &[vec![2], vec![1]]).unwrap(), LaurentQT::t_pow(-1));
    }

    #[test]
    fn small_tables() {
        let engine = Engine::new();
        let table = psi_table(&engine, &[0, 0, 2], 1, 1).unwrap();
        assert_eq!(table.epsilon, c("(0,1,1)"));
        assert!(check_closed_form(&table, |nu, mu| psi_rank1(nu, mu, 2)).passed());
        assert!(verify_intertwining(&table).passed());
        let table = psi_table(&engine, &[0, 1, 2], 2, 1).unwrap();
        assert!(check_closed_form(&table, psi_rank2).passed());
        assert!(verify_intertwining(&table).passed());
        assert!(!check_closed_form(&table, |_, _| Ok(LaurentQT::one())).passed());
    }

    #[test]
    fn exponent_identity_and_positions() {
        assert!(verify_exponent_identity(5).passed());
        assert!(verify_psi_positions(5).passed());
    }

    #[test]
    fn conjecture_examples() {
        let engine = Engine::new();
        match conjecture_probe(&engine, &[1, 0], 1, 1).unwrap() {
            ConjectureOutcome::Proportional { nu, .. } => assert_eq!(nu, c("(0,1)")),
            other => panic!("{other:?}"),
        }
        assert_eq!(conjecture_probe(&engine, &[0, 1], 1, 1).unwrap(), ConjectureOutcome::NoPole);
        match conjecture_probe(&engine, &[0, 2], 1, 1).unwrap() {
            ConjectureOutcome::Proportional { nu, .. } => assert_eq!(nu, c("(1,1)")),
            other => panic!("{other:?}"),
        }
    }
}
