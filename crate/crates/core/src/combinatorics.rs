//! Compositions, their orders, spectral data and the statistics entering
//! duality functions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::exact_algebra::RatFuncQT;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no resonant sector found")]
    NoMatch,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("malformed positions: {0}")]
    MalformedPositions(String),
    #[error("cannot parse composition: {0}")]
    Parse(String),
}

/// A finite string of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `(0^{a_0}, 1^{a_1}, 2^{a_2}, …)` from a multiplicity list.
    pub fn anti_partition(multiplicities: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (v, &k) in multiplicities.iter().enumerate() {
            parts.extend(std::iter::repeat_n(v as u32, k));
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Largest part; 0 for the empty composition.
    pub fn rank(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    pub fn dominant(&self) -> Self {
        Self(reorder(&self.0, Order::Dominant))
    }

    pub fn antidominant(&self) -> Self {
        Self(reorder(&self.0, Order::Antidominant))
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_anti_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Exchange parts `i` and `i+1` (0-based).
    pub fn swapped(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        p.swap(i, i + 1);
        Self(p)
    }
}

impl Deref for Composition {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = CombinatoricsError;

    /// Accepts `0,2,1`, `(0,2,1)` or `0 2 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Self(Vec::new()));
        }
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| CombinatoricsError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Dominant,
    Antidominant,
}

pub fn reorder(mu: &[u32], order: Order) -> Vec<u32> {
    let mut v = mu.to_vec();
    match order {
        Order::Dominant => v.sort_unstable_by(|a, b| b.cmp(a)),
        Order::Antidominant => v.sort_unstable(),
    }
    v
}

/// Dominance comparison by partial sums; `None` when incomparable or of
/// different weight.
pub fn dominance_compare(mu: &[u32], nu: &[u32]) -> Option<Ordering> {
    if mu.len() != nu.len() {
        return None;
    }
    let (mut a, mut b) = (0u64, 0u64);
    let (mut ge, mut le) = (true, true);
    for (x, y) in mu.iter().zip(nu) {
        a += *x as u64;
        b += *y as u64;
        ge &= a >= b;
        le &= a <= b;
    }
    if a != b {
        return None;
    }
    match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// The order `≺`: first dominance of the sorted parts, then dominance of the
/// compositions themselves.
pub fn prec_compare(mu: &[u32], nu: &[u32]) -> Result<PrecOrdering, CombinatoricsError> {
    if mu.len() != nu.len() {
        return Err(CombinatoricsError::LengthMismatch(mu.len(), nu.len()));
    }
    let (mp, np) = (reorder(mu, Order::Dominant), reorder(nu, Order::Dominant));
    let outer = if mp == np { Some(Ordering::Equal) } else { dominance_compare(&mp, &np) };
    Ok(match outer {
        Some(Ordering::Greater) => PrecOrdering::Greater,
        Some(Ordering::Less) => PrecOrdering::Less,
        None => PrecOrdering::Incomparable,
        Some(Ordering::Equal) => match dominance_compare(mu, nu) {
            Some(Ordering::Greater) => PrecOrdering::Greater,
            Some(Ordering::Less) => PrecOrdering::Less,
            Some(Ordering::Equal) => PrecOrdering::Equal,
            None => PrecOrdering::Incomparable,
        },
    })
}

/// `ν ≺ μ` strictly.
pub fn prec_less(nu: &[u32], mu: &[u32]) -> bool {
    matches!(prec_compare(nu, mu), Ok(PrecOrdering::Less))
}

/// A total order key refining `≺`: if `ν ≺ μ` then `key(ν) < key(μ)`.
pub fn linear_extension_key(mu: &[u32]) -> (Vec<u32>, Vec<u32>) {
    (reorder(mu, Order::Dominant), mu.to_vec())
}

pub fn linear_extension_cmp(a: &[u32], b: &[u32]) -> Ordering {
    linear_extension_key(a).cmp(&linear_extension_key(b))
}

/// 1-based position of each part of `μ` inside `μ⁺`, with equal parts kept in
/// their left-to-right order.
pub fn stable_positions(mu: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..mu.len()).collect();
    idx.sort_by(|&a, &b| mu[b].cmp(&mu[a]));
    let mut pos = vec![0; mu.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos[i] = p + 1;
    }
    pos
}

/// The minimal-length `w` with `μ = w·μ⁺` under `(σ·v)_i = v_{σ⁻¹(i)}`, in
/// one-line notation (1-based), together with `ρ(μ) = −w·(1,…,n)`.
pub fn min_perm_and_rho(mu: &[u32]) -> (Vec<usize>, Vec<i32>) {
    let pos = stable_positions(mu);
    let mut w = vec![0; mu.len()];
    for (i, &p) in pos.iter().enumerate() {
        w[p - 1] = i + 1;
    }
    let rho = pos.iter().map(|&p| -(p as i32)).collect();
    (w, rho)
}

/// A monomial `q^a t^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QtMonomial {
    pub q: i32,
    pub t: i32,
}

impl QtMonomial {
    pub fn to_ratfunc(self) -> RatFuncQT {
        let tq = RatFuncQT::t_pow(self.t);
        if self.q >= 0 {
            tq * RatFuncQT::monomial(1, self.q as u32, 0)
        } else {
            tq / RatFuncQT::monomial(1, (-self.q) as u32, 0)
        }
    }

    /// Exponent of `t` after `q -> t^{-m}`.
    pub fn at_resonance(self, m: i32) -> i32 {
        self.t - m * self.q
    }
}

/// Eigenvalues `y_i(μ) = q^{μ_i} t^{ρ(μ)_i + n − i + 1}` of the
/// Cherednik operators on `E_μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpectralVector {
    pub entries: Vec<QtMonomial>,
}

impl SpectralVector {
    pub fn product(&self) -> QtMonomial {
        self.entries.iter().fold(QtMonomial { q: 0, t: 0 }, |acc, y| QtMonomial { q: acc.q + y.q, t: acc.t + y.t })
    }

    pub fn at_resonance(&self, m: i32) -> Vec<i32> {
        self.entries.iter().map(|y| y.at_resonance(m)).collect()
    }
}

pub fn spectral_vector(mu: &[u32]) -> SpectralVector {
    let n = mu.len() as i32;
    let (_, rho) = min_perm_and_rho(mu);
    let entries = mu
        .iter()
        .zip(&rho)
        .enumerate()
        .map(|(i, (&m, &r))| QtMonomial { q: m as i32, t: r + n - i as i32 })
        .collect();
    SpectralVector { entries }
}

/// `S_m(μ) = m·μ − ρ(μ)`.
pub fn staircase(mu: &[u32], m: i32) -> Vec<i32> {
    let (_, rho) = min_perm_and_rho(mu);
    mu.iter().zip(rho).map(|(&x, r)| m * x as i32 - r).collect()
}

/// Whether two staircases agree up to permutation.
pub fn staircases_permutable(a: &[i32], b: &[i32]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// All distinct rearrangements of `δ`, in lexicographic order.
pub fn sector_enumerate(delta: &[u32]) -> Vec<Composition> {
    let mut cur = reorder(delta, Order::Antidominant);
    let mut out = vec![Composition(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Composition(cur.clone()));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Partitions of `weight` into at most `n` parts each `<= max_part`, padded
/// with zeros to length `n`, in decreasing lexicographic order.
pub fn partitions_bounded(weight: u32, n: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, slots: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, n: usize) {
        if rem == 0 {
            let mut p = cur.clone();
            p.resize(n, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(rem)).rev() {
            cur.push(part);
            rec(rem - part, slots - 1, part, cur, out, n);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, n, max_part, &mut Vec::new(), &mut out, n);
    out
}

/// All compositions of length `n` and weight `weight` with parts `<= max_part`.
pub fn compositions_bounded(weight: u32, n: usize, max_part: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for lambda in partitions_bounded(weight, n, max_part) {
        out.extend(sector_enumerate(&lambda));
    }
    out
}

/// Ω(μ, ν) = #{i < j : μ_i < μ_j and ν_i = ν_j = 1}.
pub fn omega(mu: &[u32], nu: &[u32]) -> u32 {
    let mut count = 0;
    for j in 0..mu.len() {
        if nu[j] != 1 {
            continue;
        }
        for i in 0..j {
            if nu[i] == 1 && mu[i] < mu[j] {
                count += 1;
            }
        }
    }
    count
}

/// 0 iff some site has `μ_k > ν_k = 0` or `μ_k < ν_k = 2`. On a rank-one
/// target this is the rule "some `(μ_k, ν_k) = (r, 0)`".
pub fn indicator(mu: &[u32], nu: &[u32]) -> bool {
    !mu.iter().zip(nu).any(|(&m, &v)| (v == 0 && m > 0) || (v == 2 && m < 2))
}

pub fn stats_omega_indicator(mu: &[u32], nu: &[u32]) -> Result<(u32, bool), CombinatoricsError> {
    if mu.len() != nu.len() {
        return Err(CombinatoricsError::LengthMismatch(mu.len(), nu.len()));
    }
    Ok((omega(mu, nu), indicator(mu, nu)))
}

/// Checks that position lists are strictly increasing and pairwise disjoint.
pub fn validate_positions(lists: &[Vec<i64>]) -> Result<(), CombinatoricsError> {
    let mut seen = std::collections::BTreeSet::new();
    for (s, xs) in lists.iter().enumerate() {
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CombinatoricsError::MalformedPositions(format!("species {} not strictly increasing", s + 1)));
        }
        for &x in xs {
            if !seen.insert(x) {
                return Err(CombinatoricsError::MalformedPositions(format!("site {x} occupied twice")));
            }
        }
    }
    Ok(())
}

/// χ = #{(x, y) : x in list i, y in list j, i < j, x > y}.
pub fn crossing_chi(lists: &[Vec<i64>]) -> Result<u64, CombinatoricsError> {
    validate_positions(lists)?;
    let mut chi = 0u64;
    for (i, xs) in lists.iter().enumerate() {
        for ys in &lists[i + 1..] {
            for &x in xs {
                // ys is sorted: count entries below x.
                chi += ys.partition_point(|&y| y < x) as u64;
            }
        }
    }
    Ok(chi)
}

/// The target sector of the resonance at `q = t^{-m}` from one of the two
/// anti-partition shapes with a closed-form answer:
///
/// - `δ = (0^{n−m}, r^m)` gives `(0^{n−rm}, 1^{rm})`;
/// - `δ = (0^{n−m₁−m₂}, 1^{m₁}, 2^{m₂})` with `p = m − m₁ >= 1` gives
///   `(0^{n−m₁−m₂−p}, 1^{m₁+2p}, 2^{m₂−p})`.
pub fn resonant_sector(delta: &[u32], m: u32) -> Result<Composition, CombinatoricsError> {
    let n = delta.len();
    let d = Composition::from(delta).antidominant();
    let r = d.rank();
    if m == 0 {
        return Err(CombinatoricsError::OutOfRange("m must be positive".into()));
    }
    let two_valued = d.iter().all(|&x| x == 0 || x == r);
    if r >= 1 && two_valued && d.multiplicity(r) == m as usize {
        let rm = (r * m) as usize;
        if rm > n {
            return Err(CombinatoricsError::OutOfRange(format!("r*m = {rm} exceeds n = {n}")));
        }
        return Ok(Composition::anti_partition(&[n - rm, rm]));
    }
    if r <= 2 {
        let m1 = d.multiplicity(1);
        let m2 = d.multiplicity(2);
        let zeros = n - m1 - m2;
        let Some(p) = (m as usize).checked_sub(m1).filter(|&p| p >= 1) else {
            return Err(CombinatoricsError::OutOfRange(format!("m = {m} must exceed the number of ones {m1}")));
        };
        if p > zeros.min(m2) {
            return Err(CombinatoricsError::OutOfRange(format!("p = {p} exceeds min(n-m1-m2, m2) = {}", zeros.min(m2))));
        }
        return Ok(Composition::anti_partition(&[zeros - p, m1 + 2 * p, m2 - p]));
    }
    Err(CombinatoricsError::NoMatch)
}

/// Every sector (as an anti-partition) of the same weight with parts bounded
/// by `r(δ)`, strictly dominance-below `δ⁺`, whose partition staircase is a
/// permutation of `S_m(δ⁺)`.
pub fn resonant_sectors_generic(delta: &[u32], m: u32) -> Vec<Composition> {
    let d = Composition::from(delta);
    let dp = d.dominant();
    let target = staircase(&dp, m as i32);
    let mut out = Vec::new();
    for lambda in partitions_bounded(d.weight(), d.n(), d.rank()) {
        if dominance_compare(&lambda, &dp) != Some(Ordering::Less) {
            continue;
        }
        if staircases_permutable(&staircase(&lambda, m as i32), &target) {
            out.push(Composition::from(lambda).antidominant());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(prec_compare(&[0, 1], &[1, 0]).unwrap(), PrecOrdering::Less);
        assert_eq!(prec_compare(&[1, 1], &[2, 0]).unwrap(), PrecOrdering::Less);
        assert_eq!(prec_compare(&[2, 0, 1], &[1, 2, 0]).unwrap(), PrecOrdering::Incomparable);
        assert!(prec_compare(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn rho_and_spectral_vectors() {
        assert_eq!(min_perm_and_rho(&[0, 0, 0]), (vec![1, 2, 3], vec![-1, -2, -3]));
        assert_eq!(min_perm_and_rho(&[0, 1]), (vec![2, 1], vec![-2, -1]));
        assert_eq!(min_perm_and_rho(&[1, 0]), (vec![1, 2], vec![-1, -2]));
        let y = |mu: &[u32]| spectral_vector(mu).entries.iter().map(|m| (m.q, m.t)).collect::<Vec<_>>();
        assert_eq!(y(&[0, 0]), vec![(0, 1), (0, -1)]);
        assert_eq!(y(&[1, 0]), vec![(1, 1), (0, -1)]);
        assert_eq!(y(&[0, 1]), vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(&[0, 0, 0], 2), vec![1, 2, 3]);
        assert_eq!(staircase(&[2, 0], 1), vec![3, 2]);
        assert_eq!(staircase(&[1, 1], 1), vec![2, 3]);
    }

    #[test]
    fn resonant_sector_shapes() {
        assert_eq!(resonant_sector(&[0, 0, 2, 2], 2).unwrap(), c("1,1,1,1"));
        assert_eq!(resonant_sector(&[0, 0, 1, 2], 2).unwrap(), c("0,1,1,1"));
        assert_eq!(resonant_sector(&[0, 2], 1).unwrap(), c("1,1"));
        assert_eq!(resonant_sector(&[0, 0, 2, 2], 1).unwrap(), c("0,1,1,2"));
        assert!(resonant_sector(&[0, 1, 2], 1).is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(stats_omega_indicator(&[0, 2], &[1, 1]).unwrap(), (1, true));
        assert!(!indicator(&[2, 0], &[0, 1]));
        assert_eq!(stats_omega_indicator(&[1, 2], &[1, 1]).unwrap(), (1, true));
        assert_eq!(crossing_chi(&[vec![2], vec![1]]).unwrap(), 1);
        assert_eq!(crossing_chi(&[vec![1], vec![2]]).unwrap(), 0);
        assert_eq!(crossing_chi(&[vec![2, 5], vec![1, 3]]).unwrap(), 3);
        assert!(crossing_chi(&[vec![2, 1]]).is_err());
        assert!(crossing_chi(&[vec![1], vec![1]]).is_err());
    }

    #[test]
    fn sectors() {
        assert_eq!(sector_enumerate(&[0, 1]), vec![c("0,1"), c("1,0")]);
        assert_eq!(sector_enumerate(&[0, 2, 2]).len(), 3);
        assert_eq!(sector_enumerate(&[0, 1, 2]).len(), 6);
        assert_eq!(reorder(&[0, 2, 1], Order::Dominant), vec![2, 1, 0]);
        assert_eq!(reorder(&[0, 2, 1], Order::Antidominant), vec![0, 1, 2]);
    }
}
