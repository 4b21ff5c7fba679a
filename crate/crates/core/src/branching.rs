//! Branching of `V(d rho)` to the fixed-point subalgebra and the checks built on it.
//!
//! The candidate set is `{rho_0 + beta : beta a weight of V_0(p(rho) - rho_0),
//! rho_0 + beta dominant}`. [`verify_theorem`] compares it against the
//! constituents `V_0(d mu)` of the computed branching.

use std::collections::{BTreeMap, BTreeSet};

use crate::charalg::{
    char_product, decompose_character, folded_rho_character, klimyk_tensor,
    weight_multiplicity, CharacterProvider, IrrDecomposition, Limits,
};
use crate::error::{Error, Result};
use crate::folding::FoldedPair;
use crate::rootsys::{Family, LieType, Weight};

fn require_order_two(fp: &FoldedPair, what: &str) -> Result<()> {
    if fp.order() == 2 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} needs an automorphism of order 2; {} has order {}",
            fp.id(),
            fp.order()
        )))
    }
}

fn is_large(fp: &FoldedPair) -> bool {
    fp.ambient().lie_type().family() == Family::E
}

/// `(d + 1)^{|Phi^+|}`, the dimension of `V(d rho)`.
pub fn expected_mass(fp: &FoldedPair, d: usize) -> Result<u128> {
    (d as u128 + 1)
        .checked_pow(fp.ambient().n_positive() as u32)
        .ok_or(Error::Overflow("expected mass"))
}

/// Constituents of `res V(d rho)` with a dimension audit and the central
/// condition `d p(rho) - mu` in the root lattice for every constituent.
pub fn branch_rho(
    fp: &FoldedPair,
    d: usize,
    limits: &Limits,
) -> Result<IrrDecomposition> {
    if is_large(fp) && !limits.allow_large {
        return Err(Error::Gated(format!("branching for {}", fp.id())));
    }
    let folded = fp.folded();
    let ch = folded_rho_character(fp, d, limits)?;
    let dec = decompose_character(folded, &ch, limits)?;

    let expected = expected_mass(fp, d)?;
    let actual = dec.total_dim(folded)?;
    if actual != expected {
        return Err(Error::Audit(format!(
            "{} d={d}: constituent dimensions sum to {actual}, expected {expected}",
            fp.id()
        )));
    }
    let top = fp.p_rho().scale(d as i64);
    for (mu, _) in dec.entries() {
        if !folded.in_root_lattice(&(&top - mu)) {
            return Err(Error::Audit(format!(
                "constituent {mu} of {} d={d} violates the central condition",
                fp.id()
            )));
        }
    }
    Ok(dec)
}

/// `{rho_0 + beta}` over weights `beta` of `V_0(p(rho) - rho_0)`, kept when dominant.
pub fn theorem_candidate_set(
    fp: &FoldedPair,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<BTreeSet<Weight>> {
    let folded = fp.folded();
    let defect = fp.p_rho_defect()?;
    let rho0 = fp.rho0();
    let ch = provider.character(folded, &defect, limits)?;
    Ok(ch
        .iter()
        .map(|(beta, _)| &rho0 + &beta)
        .filter(Weight::is_dominant)
        .collect())
}

/// `{p(rho) - rho_0 - sum(Psi) : Psi subset of the positive short roots}`,
/// one entry per subset.
pub fn subset_weights(fp: &FoldedPair) -> Result<Vec<Weight>> {
    require_order_two(fp, "subset weights")?;
    let folded = fp.folded();
    let short: Vec<Weight> = fp
        .short_subsystem()
        .positive()
        .iter()
        .map(|r| folded.root_to_weight(r))
        .collect();
    if short.len() >= 30 {
        return Err(Error::Guard {
            what: "subset enumeration".into(),
            size: short.len(),
            limit: 29,
        });
    }
    let top = fp.p_rho_defect()?;
    let mut out = Vec::with_capacity(1 << short.len());
    for mask in 0u32..(1 << short.len()) {
        let mut w = top.clone();
        for (i, s) in short.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w = &w - s;
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// `mu <=_s p(rho)` and `mu - (2 rho_0 - p(rho))` dominant for the short subsystem.
pub fn proposition_criterion(fp: &FoldedPair, mu: &Weight) -> Result<bool> {
    require_order_two(fp, "the short-dominance criterion")?;
    mu.check_type(fp.folded().lie_type())?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords().to_vec()));
    }
    let p_rho = fp.p_rho();
    let shift = &fp.rho0().scale(2) - &p_rho;
    Ok(fp.dominance_leq_short(mu, &p_rho)? && fp.is_dominant_short(&(mu - &shift))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchReport {
    pub pair: String,
    pub d: usize,
    pub constituents: IrrDecomposition,
    /// `{mu : V_0(d mu) is a constituent, p(rho) - mu in the root lattice}`.
    pub scaled_constituents: BTreeSet<Weight>,
    /// Scaled constituents failing the central condition for `(mu, rho)`.
    /// They can occur for `d > 1` and lie outside the saturation hypothesis.
    pub non_central: BTreeSet<Weight>,
    pub candidate_set: BTreeSet<Weight>,
    pub agreement: bool,
    /// Symmetric difference of the two sets.
    pub witnesses: Vec<Weight>,
}

/// Compares `{mu : V_0(d mu) occurs in res V(d rho)}` with the candidate set.
pub fn verify_theorem(
    fp: &FoldedPair,
    d: usize,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<BranchReport> {
    let constituents = branch_rho(fp, d, limits)?;
    let d_i = d as i64;
    let p_rho = fp.p_rho();
    let (scaled_constituents, non_central): (BTreeSet<Weight>, BTreeSet<Weight>) = constituents
        .entries()
        .iter()
        .filter(|(w, _)| w.coords().iter().all(|c| c % d_i == 0))
        .map(|(w, _)| {
            Weight::new(w.lie_type(), w.coords().iter().map(|c| c / d_i).collect())
                .expect("same rank")
        })
        .partition(|mu| fp.folded().in_root_lattice(&(&p_rho - mu)));
    let candidate_set = theorem_candidate_set(fp, provider, limits)?;
    let witnesses: Vec<Weight> = scaled_constituents
        .symmetric_difference(&candidate_set)
        .cloned()
        .collect();
    Ok(BranchReport {
        pair: fp.id(),
        d,
        constituents,
        scaled_constituents,
        non_central,
        agreement: witnesses.is_empty(),
        candidate_set,
        witnesses,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIdentityReport {
    pub pair: String,
    pub terms: usize,
    pub mass: i128,
    pub holds: bool,
}

/// `p(ch_rho) = ch_{rho_0} * ch_{p(rho) - rho_0}` as an exact character identity.
pub fn verify_tensor_identity(
    fp: &FoldedPair,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<TensorIdentityReport> {
    require_order_two(fp, "the tensor identity for res V(rho)")?;
    let folded = fp.folded();
    let lhs = folded_rho_character(fp, 1, limits)?;
    let a = provider.character(folded, &fp.rho0(), limits)?;
    let b = provider.character(folded, &fp.p_rho_defect()?, limits)?;
    let rhs = char_product(&a, &b, limits)?;
    Ok(TensorIdentityReport {
        pair: fp.id(),
        terms: lhs.len(),
        mass: lhs.mass(),
        holds: lhs == rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub pair: String,
    pub subsets: usize,
    pub character_mass: i128,
    pub holds: bool,
}

/// Subset sums against the character of `V_0(p(rho) - rho_0)`, as multisets.
pub fn verify_lemma(
    fp: &FoldedPair,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<LemmaReport> {
    let subsets = subset_weights(fp)?;
    let ch = provider.character(fp.folded(), &fp.p_rho_defect()?, limits)?;
    let mut counted: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for w in &subsets {
        *counted.entry(w.coords().to_vec()).or_default() += 1;
    }
    Ok(LemmaReport {
        pair: fp.id(),
        subsets: subsets.len(),
        character_mass: ch.mass(),
        holds: &counted == ch.terms(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionMismatch {
    pub mu: Weight,
    pub criterion: bool,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub pair: String,
    pub bound: Vec<i64>,
    pub scanned: usize,
    /// Weights where the criterion holds.
    pub accepted: usize,
    /// Weights with `mu <=_s p(rho)` rejected by the second clause.
    pub short_dominance_only: Vec<Weight>,
    pub mismatches: Vec<PropositionMismatch>,
}

impl PropositionReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Default scan bound: `p(rho)` plus 2 in every coordinate.
pub fn default_proposition_box(fp: &FoldedPair) -> Vec<i64> {
    fp.p_rho().coords().iter().map(|c| c + 2).collect()
}

/// Scans dominant `mu` with `0 <= mu_i <= bound_i` and compares the criterion
/// with `dim V_0(p(rho) - rho_0)_{mu - rho_0} > 0`.
pub fn verify_proposition(
    fp: &FoldedPair,
    bound: Option<&[i64]>,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<PropositionReport> {
    require_order_two(fp, "the short-dominance criterion")?;
    let folded = fp.folded();
    let ty = folded.lie_type();
    let bound: Vec<i64> = match bound {
        Some(b) => {
            if b.len() != ty.rank() {
                return Err(Error::RankMismatch {
                    expected: ty.rank(),
                    found: b.len(),
                });
            }
            b.to_vec()
        }
        None => default_proposition_box(fp),
    };
    if bound.iter().any(|&b| b < 0) {
        return Err(Error::Precondition("scan bounds must be non-negative".into()));
    }
    let ch = provider.character(folded, &fp.p_rho_defect()?, limits)?;
    let rho0 = fp.rho0();
    let p_rho = fp.p_rho();

    let mut report = PropositionReport {
        pair: fp.id(),
        bound: bound.clone(),
        scanned: 0,
        accepted: 0,
        short_dominance_only: vec![],
        mismatches: vec![],
    };
    let mut coords = vec![0i64; ty.rank()];
    loop {
        let mu = Weight::new(ty, coords.clone())?;
        let criterion = proposition_criterion(fp, &mu)?;
        let mult = ch.multiplicity(&(&mu - &rho0));
        report.scanned += 1;
        if criterion {
            report.accepted += 1;
        } else if fp.dominance_leq_short(&mu, &p_rho)? {
            report.short_dominance_only.push(mu.clone());
        }
        if criterion != (mult > 0) {
            report.mismatches.push(PropositionMismatch {
                mu,
                criterion,
                multiplicity: mult,
            });
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == coords.len() {
                return Ok(report);
            }
            if coords[i] < bound[i] {
                coords[i] += 1;
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialityReport {
    pub branch_set: BTreeSet<Weight>,
    pub tensor_set: BTreeSet<Weight>,
    pub candidate_set: BTreeSet<Weight>,
    pub branch_mass: u128,
    pub expected_mass: u128,
}

impl TrialityReport {
    pub fn holds(&self) -> bool {
        self.branch_set == self.tensor_set
            && self.tensor_set == self.candidate_set
            && self.branch_mass == self.expected_mass
    }
}

/// D4 -> G2: constituent sets of `res V(rho)`, of `V_0(rho_0) (x) V_0(2 rho_s)`,
/// and the candidate set.
pub fn triality_demo(
    fp: &FoldedPair,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<TrialityReport> {
    if fp.id() != "D4G2" {
        return Err(Error::Precondition(format!(
            "the triality check applies to D4G2, not {}",
            fp.id()
        )));
    }
    let folded = fp.folded();
    let branch = branch_rho(fp, 1, limits)?;
    let tensor = klimyk_tensor(folded, &fp.rho0(), &fp.p_rho_defect()?, provider, limits)?;
    Ok(TrialityReport {
        branch_set: branch.highest_weights(),
        tensor_set: tensor.highest_weights(),
        candidate_set: theorem_candidate_set(fp, provider, limits)?,
        branch_mass: branch.total_dim(folded)?,
        expected_mass: expected_mass(fp, 1)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub n: usize,
    pub pair: String,
    pub mu: Weight,
    /// `p(rho) - mu` in simple-root coordinates of the short subsystem.
    pub short_dominance: bool,
    pub multiplicity: i64,
    /// Whether `V_0(mu)` occurs in `res V(rho)`.
    pub in_branch: bool,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.short_dominance && self.multiplicity == 0 && !self.in_branch
    }
}

/// `mu = (2n - 1) varpi_1` for `A_{2n-1} -> C_n`, `n` odd: short dominance
/// holds, yet `mu - rho_0` is not a weight of `V_0(p(rho) - rho_0)`.
pub fn counterexample_demo(n: usize, limits: &Limits) -> Result<CounterexampleReport> {
    if n.is_multiple_of(2) || !(3..=5).contains(&n) {
        return Err(Error::Precondition(format!(
            "counterexample needs odd n in 3..=5, got {n}"
        )));
    }
    let ambient = LieType::new(Family::A, 2 * n - 1)?;
    let folded = LieType::new(Family::C, n)?;
    let fp = FoldedPair::from_id(&format!("{ambient}{folded}"))?;
    let mu = Weight::fundamental(folded, 0).scale(2 * n as i64 - 1);
    let short_dominance = fp.dominance_leq_short(&mu, &fp.p_rho())?;
    let multiplicity = weight_multiplicity(
        fp.folded(),
        &fp.p_rho_defect()?,
        &(&mu - &fp.rho0()),
        limits,
    )?;
    let in_branch = branch_rho(&fp, 1, limits)?.multiplicity(&mu) > 0;
    Ok(CounterexampleReport {
        n,
        pair: fp.id(),
        mu,
        short_dominance,
        multiplicity,
        in_branch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::Freudenthal;

    fn pair(id: &str) -> FoldedPair {
        FoldedPair::from_id(id).unwrap()
    }

    fn fw(fp: &FoldedPair, c: &[i64]) -> Weight {
        Weight::new(fp.folded().lie_type(), c.to_vec()).unwrap()
    }

    fn set(fp: &FoldedPair, ws: &[&[i64]]) -> BTreeSet<Weight> {
        ws.iter().map(|c| fw(fp, c)).collect()
    }

    #[test]
    fn a3c2_branch() {
        let fp = pair("A3C2");
        let dec = branch_rho(&fp, 1, &Limits::default()).unwrap();
        let got: Vec<(Vec<i64>, u64)> = dec
            .entries()
            .iter()
            .map(|(w, m)| (w.coords().to_vec(), *m))
            .collect();
        assert_eq!(
            got,
            vec![(vec![2, 1], 1), (vec![0, 2], 1), (vec![2, 0], 1), (vec![0, 1], 1)]
        );
        assert_eq!(dec.total_dim(fp.folded()).unwrap(), 64);
    }

    #[test]
    fn candidate_sets() {
        let p = Freudenthal::new();
        let lim = Limits::default();
        let fp = pair("A3C2");
        assert_eq!(
            theorem_candidate_set(&fp, &p, &lim).unwrap(),
            set(&fp, &[&[2, 1], &[0, 2], &[2, 0], &[0, 1]])
        );
        let fp = pair("A5C3");
        assert!(!theorem_candidate_set(&fp, &p, &lim).unwrap().contains(&fw(&fp, &[5, 0, 0])));
        let fp = pair("D4G2");
        let c = theorem_candidate_set(&fp, &p, &lim).unwrap();
        assert!(c.contains(&fw(&fp, &[3, 1])));
        assert!(c.contains(&fw(&fp, &[1, 1])));
    }

    #[test]
    fn subset_weight_examples() {
        let fp = pair("A3C2");
        let mut got: Vec<Vec<i64>> = subset_weights(&fp)
            .unwrap()
            .into_iter()
            .map(Weight::into_coords)
            .collect();
        got.sort();
        // +-e1, +-e2 with e1 = (1,0), e2 = (-1,1)
        assert_eq!(got, vec![vec![-1, 0], vec![-1, 1], vec![1, -1], vec![1, 0]]);
        assert_eq!(subset_weights(&pair("D4B3")).unwrap().len(), 8);
        assert!(matches!(subset_weights(&pair("D4G2")), Err(Error::Precondition(_))));
    }

    #[test]
    fn subset_weights_sum_to_zero() {
        for id in ["A3C2", "A5C3", "D4B3", "D5B4"] {
            let fp = pair(id);
            let total = subset_weights(&fp)
                .unwrap()
                .iter()
                .fold(Weight::zero(fp.folded().lie_type()), |acc, w| &acc + w);
            assert!(total.is_zero(), "{id}");
        }
    }

    #[test]
    fn criterion_examples() {
        let fp = pair("A3C2");
        assert!(proposition_criterion(&fp, &fw(&fp, &[0, 1])).unwrap());
        assert!(!proposition_criterion(&fp, &fw(&fp, &[1, 0])).unwrap());
        let fp = pair("A5C3");
        assert!(!proposition_criterion(&fp, &fw(&fp, &[5, 0, 0])).unwrap());
        assert!(proposition_criterion(&pair("D4G2"), &Weight::zero("G2".parse().unwrap())).is_err());
    }

    #[test]
    fn theorem_small_pairs() {
        let p = Freudenthal::new();
        let lim = Limits::default();
        for id in ["A3C2", "D4B3", "D4G2"] {
            let r = verify_theorem(&pair(id), 1, &p, &lim).unwrap();
            assert!(r.agreement, "{id}: {:?}", r.witnesses);
        }
    }

    #[test]
    fn tensor_identity_and_lemma_small() {
        let p = Freudenthal::new();
        let lim = Limits::default();
        for id in ["A3C2", "A5C3", "D4B3"] {
            assert!(verify_tensor_identity(&pair(id), &p, &lim).unwrap().holds, "{id}");
            assert!(verify_lemma(&pair(id), &p, &lim).unwrap().holds, "{id}");
        }
        assert!(verify_tensor_identity(&pair("D4G2"), &p, &lim).is_err());
        assert!(verify_lemma(&pair("D4G2"), &p, &lim).is_err());
    }

    #[test]
    fn proposition_scan_a3c2() {
        let p = Freudenthal::new();
        let fp = pair("A3C2");
        let r = verify_proposition(&fp, Some(&[4, 4]), &p, &Limits::default()).unwrap();
        assert_eq!(r.scanned, 25);
        assert!(r.holds(), "{:?}", r.mismatches);
        assert_eq!(r.accepted, 4);
    }

    #[test]
    fn counterexample_n3() {
        let r = counterexample_demo(3, &Limits::default()).unwrap();
        assert!(r.short_dominance);
        assert_eq!(r.multiplicity, 0);
        assert!(!r.in_branch);
        assert!(r.holds());
        assert!(counterexample_demo(4, &Limits::default()).is_err());
        assert!(counterexample_demo(1, &Limits::default()).is_err());
    }

    #[test]
    fn e6f4_is_gated() {
        assert!(matches!(
            branch_rho(&pair("E6F4"), 1, &Limits::default()),
            Err(Error::Gated(_))
        ));
    }
}
