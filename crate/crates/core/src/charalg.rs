//! Exact sparse formal characters.
//!
//! A [`FormalCharacter`] is a finitely supported map from weights (fundamental
//! coordinates) to non-zero integers. Terms are kept in a `BTreeMap` so
//! iteration order, and everything rendered from it, is independent of how a
//! product was scheduled across threads.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::folding::FoldedPair;
use crate::rootsys::{LieType, RootSystem, Weight, DEFAULT_ORBIT_GUARD};

pub const DEFAULT_TERM_GUARD: usize = 50_000_000;

/// Resource bounds for character computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub term_guard: usize,
    pub orbit_guard: usize,
    /// Opt-in for computations known to approach the term guard (E6 -> F4).
    pub allow_large: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            term_guard: DEFAULT_TERM_GUARD,
            orbit_guard: DEFAULT_ORBIT_GUARD,
            allow_large: false,
        }
    }
}

impl Limits {
    fn check(&self, what: &str, size: usize) -> Result<()> {
        if size > self.term_guard {
            Err(Error::Guard {
                what: what.to_string(),
                size,
                limit: self.term_guard,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    ty: LieType,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn zero(ty: LieType) -> Self {
        FormalCharacter {
            ty,
            terms: BTreeMap::new(),
        }
    }

    /// The character `e^0`.
    pub fn unit(ty: LieType) -> Self {
        let mut ch = FormalCharacter::zero(ty);
        ch.terms.insert(vec![0; ty.rank()], 1);
        ch
    }

    pub fn from_terms<I>(ty: LieType, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, i64)>,
    {
        let mut ch = FormalCharacter::zero(ty);
        for (w, m) in terms {
            if w.len() != ty.rank() {
                return Err(Error::RankMismatch {
                    expected: ty.rank(),
                    found: w.len(),
                });
            }
            ch.add_term(w, m);
        }
        Ok(ch)
    }

    fn from_map(ty: LieType, map: HashMap<Vec<i64>, i64>) -> Self {
        FormalCharacter {
            ty,
            terms: map.into_iter().filter(|(_, m)| *m != 0).collect(),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    /// Terms keyed by fundamental coordinates, in lexicographic order.
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms
            .iter()
            .map(|(w, &m)| (Weight::from_parts(self.ty, w.clone()), m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mass(&self) -> i128 {
        self.terms.values().map(|&m| i128::from(m)).sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        if w.lie_type() != self.ty {
            return 0;
        }
        self.terms.get(w.coords()).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Vec<i64>, m: i64) {
        if m == 0 {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalCharacter, k: i64) -> Result<()> {
        other.lie_type_matches(self.ty)?;
        for (w, &m) in &other.terms {
            self.add_term(w.clone(), m * k);
        }
        Ok(())
    }

    pub fn scale(&self, k: i64) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.ty);
        if k != 0 {
            out.terms = self.terms.iter().map(|(w, m)| (w.clone(), m * k)).collect();
        }
        out
    }

    /// Multiplies by `e^shift`.
    pub fn translate(&self, shift: &[i64]) -> FormalCharacter {
        FormalCharacter {
            ty: self.ty,
            terms: self
                .terms
                .iter()
                .map(|(w, &m)| (w.iter().zip(shift).map(|(a, b)| a + b).collect(), m))
                .collect(),
        }
    }

    fn lie_type_matches(&self, ty: LieType) -> Result<()> {
        if self.ty == ty {
            Ok(())
        } else {
            Err(Error::SystemMismatch {
                expected: ty,
                found: self.ty,
            })
        }
    }

    /// First weight at which a simple reflection changes the multiplicity.
    pub fn weyl_invariance_violation(&self, rs: &RootSystem) -> Option<Weight> {
        for (w, &m) in &self.terms {
            for i in 0..rs.rank() {
                if w[i] == 0 {
                    continue;
                }
                let mut r = w.clone();
                rs.reflect_coords(&mut r, i);
                if self.terms.get(&r).copied().unwrap_or(0) != m {
                    return Some(Weight::from_parts(self.ty, w.clone()));
                }
            }
        }
        None
    }

    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.weyl_invariance_violation(rs).is_none()
    }

    /// Terms at dominant weights.
    pub fn dominant_part(&self) -> BTreeMap<Vec<i64>, i64> {
        self.terms
            .iter()
            .filter(|(w, _)| w.iter().all(|&c| c >= 0))
            .map(|(w, &m)| (w.clone(), m))
            .collect()
    }

    /// Multiplies by `1 + e^step + ... + e^(d*step)`.
    pub fn times_geometric(&self, step: &[i64], d: usize, limits: &Limits) -> Result<Self> {
        let mut map: HashMap<Vec<i64>, i64> = HashMap::with_capacity(self.terms.len() * 2);
        for (w, &m) in &self.terms {
            let mut cur = w.clone();
            for k in 0..=d {
                if k > 0 {
                    for (c, s) in cur.iter_mut().zip(step) {
                        *c += s;
                    }
                }
                let e = map.entry(cur.clone()).or_insert(0);
                *e = e.checked_add(m).ok_or(Error::Overflow("character product"))?;
            }
            limits.check("character product", map.len())?;
        }
        Ok(FormalCharacter::from_map(self.ty, map))
    }
}

/// Sparse convolution of two characters over the same system.
///
/// Work is split over the terms of `a` on the current rayon pool; the partial
/// sums are exact integers, so the result does not depend on the split.
pub fn char_product(
    a: &FormalCharacter,
    b: &FormalCharacter,
    limits: &Limits,
) -> Result<FormalCharacter> {
    b.lie_type_matches(a.ty)?;
    let a_terms: Vec<(&Vec<i64>, i64)> = a.terms.iter().map(|(w, &m)| (w, m)).collect();
    let b_terms: Vec<(&Vec<i64>, i64)> = b.terms.iter().map(|(w, &m)| (w, m)).collect();
    let chunk = (a_terms.len() / (4 * rayon::current_num_threads()).max(1)).max(64);
    let partials: Vec<Result<HashMap<Vec<i64>, i64>>> = a_terms
        .par_chunks(chunk)
        .map(|part| {
            let mut map: HashMap<Vec<i64>, i64> = HashMap::new();
            for &(wa, ma) in part {
                for &(wb, mb) in &b_terms {
                    let key: Vec<i64> = wa.iter().zip(wb.iter()).map(|(x, y)| x + y).collect();
                    let prod = ma.checked_mul(mb).ok_or(Error::Overflow("character product"))?;
                    let e = map.entry(key).or_insert(0);
                    *e = e.checked_add(prod).ok_or(Error::Overflow("character product"))?;
                }
                limits.check("character product", map.len())?;
            }
            Ok(map)
        })
        .collect();
    let mut total: HashMap<Vec<i64>, i64> = HashMap::new();
    for part in partials {
        for (w, m) in part? {
            let e = total.entry(w).or_insert(0);
            *e = e.checked_add(m).ok_or(Error::Overflow("character product"))?;
        }
        limits.check("character product", total.len())?;
    }
    Ok(FormalCharacter::from_map(a.ty, total))
}

/// Multiplicities of `V(lambda)` at its dominant weights, by Freudenthal's formula.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    limits: &Limits,
) -> Result<BTreeMap<Vec<i64>, i64>> {
    lambda.check_type(rs.lie_type())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let top = lambda.coords().to_vec();
    let roots = rs.positive_weight_coords();

    // Dominant weights below lambda: closure under w -> dom(w +- alpha).
    let mut dominant: HashMap<Vec<i64>, ()> = HashMap::new();
    dominant.insert(top.clone(), ());
    let mut stack = vec![top.clone()];
    while let Some(mu) = stack.pop() {
        for alpha in roots {
            for sign in [-1i64, 1] {
                let mut nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + sign * b).collect();
                rs.make_dominant(&mut nu);
                if !dominant.contains_key(&nu) && rs.leq_coords(&nu, &top) {
                    dominant.insert(nu.clone(), ());
                    stack.push(nu);
                }
            }
        }
        limits.check("dominant weights", dominant.len())?;
    }
    let mut order: Vec<(i64, Vec<i64>)> = dominant
        .into_keys()
        .map(|w| (rs.scaled_height(&w), w))
        .collect();
    // Decreasing height from lambda.
    order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));

    let rho = vec![1i64; rs.rank()];
    let shifted = |w: &[i64]| -> Vec<i64> { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lr = shifted(&top);
    let top_norm = rs.inner(&lr, &lr);
    // (mu + k alpha, alpha) = (mu, alpha) + k (alpha, alpha)
    let root_norms: Vec<i64> = roots.iter().map(|a| rs.inner(a, a)).collect();

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::with_capacity(order.len());
    mult.insert(top.clone(), 1);
    for (_, mu) in order.iter().skip(1) {
        let mut sum: i128 = 0;
        for (alpha, &aa) in roots.iter().zip(&root_norms) {
            let mu_alpha = rs.inner(mu, alpha);
            let mut k = 1i64;
            loop {
                let mut nu: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                rs.make_dominant(&mut nu);
                let Some(&m) = mult.get(&nu) else { break };
                sum += i128::from(m) * i128::from(mu_alpha + k * aa);
                k += 1;
            }
        }
        let mr = shifted(mu);
        let denom = i128::from(top_norm - rs.inner(&mr, &mr));
        let num = 2 * sum;
        if denom <= 0 || num % denom != 0 {
            return Err(Error::Precondition(format!(
                "Freudenthal recursion is not integral at {mu:?} for {lambda}"
            )));
        }
        let m = i64::try_from(num / denom).map_err(|_| Error::Overflow("Freudenthal"))?;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    Ok(mult.into_iter().collect())
}

/// Full character of `V(lambda)`.
pub fn char_freudenthal(
    rs: &RootSystem,
    lambda: &Weight,
    limits: &Limits,
) -> Result<FormalCharacter> {
    let dom = dominant_multiplicities(rs, lambda, limits)?;
    let mut ch = FormalCharacter::zero(rs.lie_type());
    for (mu, m) in dom {
        for w in rs.orbit_coords(&mu, limits.orbit_guard)? {
            ch.terms.insert(w, m);
        }
        limits.check("character", ch.terms.len())?;
    }
    Ok(ch)
}

/// `dim V(lambda)_mu`.
pub fn weight_multiplicity(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    limits: &Limits,
) -> Result<i64> {
    mu.check_type(rs.lie_type())?;
    if !is_weight_of(rs, lambda, mu)? {
        return Ok(0);
    }
    let dom = dominant_multiplicities(rs, lambda, limits)?;
    let key = rs.dominant_representative(mu);
    Ok(dom.get(key.coords()).copied().unwrap_or(0))
}

/// Whether `mu` is a weight of `V(lambda)`: its dominant representative lies
/// below `lambda` and `lambda - mu` is in the root lattice.
pub fn is_weight_of(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<bool> {
    lambda.check_type(rs.lie_type())?;
    mu.check_type(rs.lie_type())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let dom = rs.dominant_representative(mu);
    Ok(rs.dominance_leq(&dom, lambda)? && rs.in_root_lattice(&(lambda - mu)))
}

/// Supplies irreducible characters, possibly from a cache.
pub trait CharacterProvider: Sync {
    fn character(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        limits: &Limits,
    ) -> Result<Arc<FormalCharacter>>;
}

/// In-memory memo over [`char_freudenthal`].
#[derive(Debug, Default)]
pub struct Freudenthal {
    memo: Mutex<HashMap<Weight, Arc<FormalCharacter>>>,
}

impl Freudenthal {
    pub fn new() -> Self {
        Self::default()
    }

    /// Looks up `lambda`, calling `compute` on a miss and remembering the result.
    pub fn character_with<F>(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        limits: &Limits,
        compute: F,
    ) -> Result<Arc<FormalCharacter>>
    where
        F: FnOnce(&RootSystem, &Weight, &Limits) -> Result<Arc<FormalCharacter>>,
    {
        if let Some(ch) = self.memo.lock().unwrap().get(lambda) {
            return Ok(ch.clone());
        }
        let ch = compute(rs, lambda, limits)?;
        self.memo.lock().unwrap().insert(lambda.clone(), ch.clone());
        Ok(ch)
    }
}

impl CharacterProvider for Freudenthal {
    fn character(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        limits: &Limits,
    ) -> Result<Arc<FormalCharacter>> {
        self.character_with(rs, lambda, limits, |rs, lambda, limits| {
            char_freudenthal(rs, lambda, limits).map(Arc::new)
        })
    }
}

/// Multiset of irreducible constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrDecomposition {
    entries: Vec<(Weight, u64)>,
}

impl IrrDecomposition {
    /// Builds a decomposition, merging repeated weights and ordering by
    /// decreasing height, then decreasing coordinates.
    pub fn new(rs: &RootSystem, entries: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut merged: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (w, m) in entries {
            w.check_type(rs.lie_type())?;
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.coords().to_vec()));
            }
            if m > 0 {
                *merged.entry(w.into_coords()).or_default() += m;
            }
        }
        let mut entries: Vec<(i64, Vec<i64>, u64)> = merged
            .into_iter()
            .map(|(w, m)| (rs.scaled_height(&w), w, m))
            .collect();
        entries.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        Ok(IrrDecomposition {
            entries: entries
                .into_iter()
                .map(|(_, w, m)| (Weight::from_parts(rs.lie_type(), w), m))
                .collect(),
        })
    }

    pub fn entries(&self) -> &[(Weight, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries
            .iter()
            .find(|(v, _)| v == w)
            .map_or(0, |(_, m)| *m)
    }

    pub fn highest_weights(&self) -> std::collections::BTreeSet<Weight> {
        self.entries.iter().map(|(w, _)| w.clone()).collect()
    }

    /// `sum mult * dim`.
    pub fn total_dim(&self, rs: &RootSystem) -> Result<u128> {
        let mut total: u128 = 0;
        for (w, m) in &self.entries {
            total = rs
                .weyl_dim(w)?
                .checked_mul(u128::from(*m))
                .and_then(|x| total.checked_add(x))
                .ok_or(Error::Overflow("total_dim"))?;
        }
        Ok(total)
    }

    /// Re-expands into a character.
    pub fn expand(
        &self,
        rs: &RootSystem,
        provider: &dyn CharacterProvider,
        limits: &Limits,
    ) -> Result<FormalCharacter> {
        let mut ch = FormalCharacter::zero(rs.lie_type());
        for (w, m) in &self.entries {
            let irr = provider.character(rs, w, limits)?;
            ch.add_scaled(&irr, *m as i64)?;
            limits.check("character", ch.len())?;
        }
        Ok(ch)
    }
}

/// Writes a Weyl-invariant character as a non-negative combination of
/// irreducible characters by peeling off maximal dominant terms.
///
/// Only dominant multiplicities of the constituents are needed, so no full
/// character is built.
pub fn decompose_character(
    rs: &RootSystem,
    ch: &FormalCharacter,
    limits: &Limits,
) -> Result<IrrDecomposition> {
    ch.lie_type_matches(rs.lie_type())?;
    if let Some(w) = ch.weyl_invariance_violation(rs) {
        return Err(Error::NotInvariant(w.into_coords()));
    }
    let mut remaining: BTreeMap<(i64, Vec<i64>), i64> = ch
        .dominant_part()
        .into_iter()
        .map(|(w, m)| ((rs.scaled_height(&w), w), m))
        .collect();
    let mut out = Vec::new();
    let max_steps = ch.len() + 1;
    while let Some((key, n)) = remaining.last_key_value().map(|(k, &n)| (k.clone(), n)) {
        if out.len() > max_steps {
            return Err(Error::Guard {
                what: "decomposition steps".into(),
                size: out.len(),
                limit: max_steps,
            });
        }
        let top = key.1.clone();
        if n < 0 {
            return Err(Error::NegativeCoefficient { weight: top, mult: n });
        }
        let lambda = Weight::from_parts(rs.lie_type(), top);
        for (w, m) in dominant_multiplicities(rs, &lambda, limits)? {
            let k = (rs.scaled_height(&w), w);
            let e = remaining.entry(k.clone()).or_insert(0);
            *e -= n * m;
            if *e == 0 {
                remaining.remove(&k);
            }
        }
        out.push((lambda, n as u64));
    }
    IrrDecomposition::new(rs, out)
}

/// Tensor product decomposition by Klimyk's formula: each weight `nu` of
/// `V(mu)` contributes `sign(w) * mult(nu)` at `w(lambda + nu + rho) - rho`.
pub fn klimyk_tensor(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<IrrDecomposition> {
    for w in [lambda, mu] {
        w.check_type(rs.lie_type())?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords().to_vec()));
        }
    }
    let ch_mu = provider.character(rs, mu, limits)?;
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, &m) in ch_mu.terms() {
        let mut x: Vec<i64> = lambda
            .coords()
            .iter()
            .zip(nu)
            .map(|(l, n)| l + n + 1)
            .collect();
        let steps = rs.make_dominant(&mut x);
        if x.contains(&0) {
            continue;
        }
        let sign = if steps.is_multiple_of(2) { 1 } else { -1 };
        let key: Vec<i64> = x.iter().map(|c| c - 1).collect();
        *acc.entry(key).or_insert(0) += sign * m;
    }
    let mut entries = Vec::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => return Err(Error::NegativeCoefficient { weight: w, mult: m }),
            m => entries.push((Weight::from_parts(rs.lie_type(), w), m as u64)),
        }
    }
    IrrDecomposition::new(rs, entries)
}

/// Pushes an ambient character forward along the restriction map.
pub fn restrict_character(fp: &FoldedPair, ch: &FormalCharacter) -> Result<FormalCharacter> {
    ch.lie_type_matches(fp.ambient().lie_type())?;
    let mut map: HashMap<Vec<i64>, i64> = HashMap::new();
    for (w, &m) in ch.terms() {
        *map.entry(fp.restrict_coords(w)).or_insert(0) += m;
    }
    Ok(FormalCharacter::from_map(fp.folded().lie_type(), map))
}

/// `p(ch_{d rho})` as the product over folded positive roots of
/// `(e^{-d beta/2} + ... + e^{d beta/2})^{m(beta)}`.
///
/// Each factor is taken as `1 + e^beta + ... + e^{d beta}`; the total shift
/// `-sum m(beta) d beta / 2 = -d p(rho)` is applied once at the end.
pub fn folded_rho_character(fp: &FoldedPair, d: usize, limits: &Limits) -> Result<FormalCharacter> {
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let folded = fp.folded();
    let mut ch = FormalCharacter::unit(folded.lie_type());
    // positive roots are stored by increasing height
    for (k, &m) in fp.multiplicities().iter().enumerate() {
        let beta = folded.positive_root_weight(k);
        for _ in 0..m {
            ch = ch.times_geometric(beta.coords(), d, limits)?;
        }
    }
    let shift: Vec<i64> = fp.p_rho().coords().iter().map(|c| -(d as i64) * c).collect();
    Ok(ch.translate(&shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn w(rs: &RootSystem, c: &[i64]) -> Weight {
        Weight::new(rs.lie_type(), c.to_vec()).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn c2_five_dimensional() {
        let c2 = rs("C2");
        let ch = char_freudenthal(&c2, &w(&c2, &[0, 1]), &lim()).unwrap();
        // +-e1 +- e2 and 0; e1+e2 = (0,1), e1-e2 = (2,-1)
        let expect: BTreeMap<Vec<i64>, i64> = [
            vec![0, 1],
            vec![2, -1],
            vec![-2, 1],
            vec![0, -1],
            vec![0, 0],
        ]
        .into_iter()
        .map(|k| (k, 1))
        .collect();
        assert_eq!(ch.terms(), &expect);
    }

    #[test]
    fn trivial_and_g2_seven() {
        for s in ["A1", "C2", "G2", "E6"] {
            let r = rs(s);
            let ch = char_freudenthal(&r, &Weight::zero(r.lie_type()), &lim()).unwrap();
            assert_eq!(ch, FormalCharacter::unit(r.lie_type()));
        }
        let g2 = rs("G2");
        let ch = char_freudenthal(&g2, &w(&g2, &[1, 0]), &lim()).unwrap();
        assert_eq!(ch.mass(), 7);
        assert_eq!(ch.multiplicity(&Weight::zero(g2.lie_type())), 1);
        let adj = char_freudenthal(&g2, &w(&g2, &[0, 1]), &lim()).unwrap();
        assert_eq!(adj.mass(), 14);
        assert_eq!(adj.multiplicity(&Weight::zero(g2.lie_type())), 2);
    }

    #[test]
    fn non_dominant_rejected() {
        let c2 = rs("C2");
        assert!(matches!(
            char_freudenthal(&c2, &w(&c2, &[-1, 0]), &lim()),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn product_examples() {
        let a1 = rs("A1");
        let v1 = char_freudenthal(&a1, &w(&a1, &[1]), &lim()).unwrap();
        let unit = FormalCharacter::unit(a1.lie_type());
        assert_eq!(char_product(&unit, &v1, &lim()).unwrap(), v1);
        let sq = char_product(&v1, &v1, &lim()).unwrap();
        let expect = FormalCharacter::from_terms(
            a1.lie_type(),
            [(vec![2], 1), (vec![0], 2), (vec![-2], 1)],
        )
        .unwrap();
        assert_eq!(sq, expect);

        let c2 = rs("C2");
        let a = char_freudenthal(&c2, &w(&c2, &[1, 1]), &lim()).unwrap();
        let b = char_freudenthal(&c2, &w(&c2, &[1, 0]), &lim()).unwrap();
        assert_eq!(char_product(&a, &b, &lim()).unwrap().mass(), 64);
        assert!(char_product(&a, &v1, &lim()).is_err());
    }

    #[test]
    fn product_guard() {
        let c2 = rs("C2");
        let a = char_freudenthal(&c2, &w(&c2, &[3, 3]), &lim()).unwrap();
        let tight = Limits {
            term_guard: 10,
            ..Limits::default()
        };
        assert!(matches!(char_product(&a, &a, &tight), Err(Error::Guard { .. })));
    }

    #[test]
    fn klimyk_examples() {
        let c2 = rs("C2");
        let p = Freudenthal::new();
        let dec = klimyk_tensor(&c2, &w(&c2, &[1, 1]), &w(&c2, &[1, 0]), &p, &lim()).unwrap();
        let got: Vec<(Vec<i64>, u64)> = dec
            .entries()
            .iter()
            .map(|(w, m)| (w.coords().to_vec(), *m))
            .collect();
        assert_eq!(
            got,
            vec![(vec![2, 1], 1), (vec![0, 2], 1), (vec![2, 0], 1), (vec![0, 1], 1)]
        );
        assert_eq!(dec.total_dim(&c2).unwrap(), 64);

        let lam = w(&c2, &[3, 2]);
        let triv = klimyk_tensor(&c2, &lam, &Weight::zero(c2.lie_type()), &p, &lim()).unwrap();
        assert_eq!(triv.entries(), &[(lam, 1)]);

        let a1 = rs("A1");
        let cg = klimyk_tensor(&a1, &w(&a1, &[1]), &w(&a1, &[1]), &p, &lim()).unwrap();
        assert_eq!(cg.entries(), &[(w(&a1, &[2]), 1), (w(&a1, &[0]), 1)]);
    }

    #[test]
    fn decompose_examples() {
        let c2 = rs("C2");
        let ch = char_freudenthal(&c2, &w(&c2, &[2, 1]), &lim()).unwrap();
        let dec = decompose_character(&c2, &ch, &lim()).unwrap();
        assert_eq!(dec.entries(), &[(w(&c2, &[2, 1]), 1)]);

        let two = FormalCharacter::unit(c2.lie_type()).scale(2);
        let dec = decompose_character(&c2, &two, &lim()).unwrap();
        assert_eq!(dec.entries(), &[(Weight::zero(c2.lie_type()), 2)]);

        let lopsided = FormalCharacter::from_terms(c2.lie_type(), [(vec![1, 0], 1)]).unwrap();
        assert!(matches!(
            decompose_character(&c2, &lopsided, &lim()),
            Err(Error::NotInvariant(_))
        ));

        // ch(0,1) - 2 e^0 is invariant but not effective
        let mut virt = char_freudenthal(&c2, &w(&c2, &[0, 1]), &lim()).unwrap();
        virt.add_term(vec![0, 0], -2);
        assert!(matches!(
            decompose_character(&c2, &virt, &lim()),
            Err(Error::NegativeCoefficient { .. })
        ));
    }

    #[test]
    fn multiplicity_examples() {
        let c2 = rs("C2");
        let v = w(&c2, &[1, 0]);
        // e2 = varpi_2 - varpi_1
        assert_eq!(weight_multiplicity(&c2, &v, &w(&c2, &[-1, 1]), &lim()).unwrap(), 1);
        assert_eq!(weight_multiplicity(&c2, &v, &Weight::zero(c2.lie_type()), &lim()).unwrap(), 0);
        let lam = w(&c2, &[2, 3]);
        assert_eq!(weight_multiplicity(&c2, &lam, &lam, &lim()).unwrap(), 1);
    }

    #[test]
    fn is_weight_of_examples() {
        let c2 = rs("C2");
        let v = w(&c2, &[1, 0]);
        assert!(is_weight_of(&c2, &v, &w(&c2, &[-1, 0])).unwrap());
        assert!(!is_weight_of(&c2, &v, &Weight::zero(c2.lie_type())).unwrap());
        assert!(is_weight_of(&c2, &v, &v).unwrap());
    }

    #[test]
    fn folded_rho_masses() {
        let fp = FoldedPair::from_id("A3C2").unwrap();
        assert_eq!(folded_rho_character(&fp, 1, &lim()).unwrap().mass(), 64);
        assert_eq!(folded_rho_character(&fp, 2, &lim()).unwrap().mass(), 729);
        let fp = FoldedPair::from_id("D4G2").unwrap();
        assert_eq!(folded_rho_character(&fp, 1, &lim()).unwrap().mass(), 4096);
        assert!(folded_rho_character(&fp, 0, &lim()).is_err());
    }

    #[test]
    fn folded_rho_guard_reports_size() {
        let fp = FoldedPair::from_id("A5C3").unwrap();
        let tight = Limits {
            term_guard: 50,
            ..Limits::default()
        };
        match folded_rho_character(&fp, 1, &tight) {
            Err(Error::Guard { size, limit, .. }) => {
                assert!(size > limit);
                assert_eq!(limit, 50);
            }
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    #[test]
    fn restrict_examples() {
        let fp = FoldedPair::from_id("A3C2").unwrap();
        let amb = fp.ambient();
        let ch = char_freudenthal(amb, &amb.rho(), &lim()).unwrap();
        let restricted = restrict_character(&fp, &ch).unwrap();
        assert_eq!(restricted, folded_rho_character(&fp, 1, &lim()).unwrap());
        let unit = FormalCharacter::unit(amb.lie_type());
        assert_eq!(
            restrict_character(&fp, &unit).unwrap(),
            FormalCharacter::unit(fp.folded().lie_type())
        );
        assert!(restrict_character(&fp, &restricted).is_err());
    }
}
