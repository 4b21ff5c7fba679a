//! Diagram automorphisms and the folded root system of the fixed-point subalgebra.
//!
//! A folding sends each orbit of simple nodes under `theta` to one node of the
//! folded diagram. The restriction map `p` sums fundamental coordinates over an
//! orbit, and on root coordinates it sums the coefficients of the orbit. Both
//! routes are cross-checked, and the fiber sizes of `p` on positive roots are
//! audited, when a pair is constructed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Family, LieType, RootSystem, RootVector, Weight};

/// Pair identifiers accepted on the command line.
pub const SUPPORTED_PAIRS: [&str; 9] = [
    "A3C2", "A5C3", "A7C4", "A9C5", "D4B3", "D5B4", "D6B5", "E6F4", "D4G2",
];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramAutomorphism {
    permutation: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    /// Validates that `permutation` preserves the Cartan matrix of `rs`.
    pub fn new(rs: &RootSystem, permutation: Vec<usize>) -> Result<Self> {
        let n = rs.rank();
        if permutation.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "length {} for rank {n}",
                permutation.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidAutomorphism(format!(
                    "{permutation:?} is not a permutation"
                )));
            }
        }
        let cartan = rs.cartan();
        for i in 0..n {
            for j in 0..n {
                if cartan[i][j] != cartan[permutation[i]][permutation[j]] {
                    return Err(Error::InvalidAutomorphism(format!(
                        "{permutation:?} does not preserve the Cartan matrix of {}",
                        rs.lie_type()
                    )));
                }
            }
        }
        let order = permutation_order(&permutation);
        Ok(DiagramAutomorphism { permutation, order })
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// Node orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.permutation.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut orbit = vec![];
            let mut i = start;
            while !done[i] {
                done[i] = true;
                orbit.push(i);
                i = self.permutation[i];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .orbits()
            .into_iter()
            .filter(|o| o.len() > 1)
            .map(|o| {
                let mut cyc = vec![o[0]];
                let mut i = self.permutation[o[0]];
                while i != o[0] {
                    cyc.push(i);
                    i = self.permutation[i];
                }
                let s: Vec<String> = cyc.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", s.join(" "))
            })
            .collect();
        write!(f, "{}", cycles.join(""))
    }
}

fn permutation_order(p: &[usize]) -> usize {
    let mut order = 1;
    let mut cur: Vec<usize> = p.to_vec();
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| p[x]).collect();
        order += 1;
    }
    order
}

/// All non-trivial diagram automorphisms, sorted by (order, permutation).
///
/// For D4 only the 3-cycle `alpha_1 -> alpha_3 -> alpha_4` is kept; its inverse
/// yields an isomorphic folding.
pub fn enumerate_automorphisms(rs: &RootSystem) -> Vec<DiagramAutomorphism> {
    let n = rs.rank();
    let cartan = rs.cartan();
    let mut found = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_permutations(cartan, &mut perm, &mut used, &mut found);

    let triality_inverse = vec![3, 1, 0, 2];
    let is_d4 = rs.lie_type().family() == Family::D && n == 4;
    let mut out: Vec<DiagramAutomorphism> = found
        .into_iter()
        .filter(|p| !(is_d4 && *p == triality_inverse))
        .map(|p| {
            let order = permutation_order(&p);
            DiagramAutomorphism {
                permutation: p,
                order,
            }
        })
        .filter(|a| !a.is_identity())
        .collect();
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.permutation.cmp(&b.permutation)));
    out
}

fn extend_permutations(
    cartan: &[Vec<i64>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let n = cartan.len();
    let k = perm.len();
    if k == n {
        out.push(perm.clone());
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let compatible = (0..k).all(|i| {
            cartan[i][k] == cartan[perm[i]][cand] && cartan[k][i] == cartan[cand][perm[i]]
        });
        if !compatible {
            continue;
        }
        used[cand] = true;
        perm.push(cand);
        extend_permutations(cartan, perm, used, out);
        perm.pop();
        used[cand] = false;
    }
}

/// Root system of the short roots of a folded system.
#[derive(Debug, Clone)]
pub struct ShortSubsystem {
    roots: Vec<RootVector>,
    positive: Vec<RootVector>,
    simple: Vec<RootVector>,
    components: Vec<LieType>,
    /// Inverse of the matrix whose rows are the simple short roots (root coordinates).
    basis_inverse: linalg::Matrix,
}

impl ShortSubsystem {
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn simple(&self) -> &[RootVector] {
        &self.simple
    }

    /// Simple components, sorted. `D2` appears as two `A1` and `D3` as `A3`.
    pub fn components(&self) -> &[LieType] {
        &self.components
    }

    pub fn type_label(&self) -> String {
        let mut counts: BTreeMap<LieType, usize> = BTreeMap::new();
        for c in &self.components {
            *counts.entry(*c).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|(t, k)| if k == 1 { t.to_string() } else { format!("{t}^{k}") })
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Coordinates of a folded root-lattice vector in the short simple basis.
    pub fn coordinates(&self, root_coords: &[Rational64]) -> Vec<Rational64> {
        linalg::row_times(root_coords, &self.basis_inverse)
    }
}

#[derive(Debug, Clone)]
pub struct FoldedPair {
    ambient: RootSystem,
    theta: DiagramAutomorphism,
    folded: RootSystem,
    orbit_map: Vec<usize>,
    restriction: Vec<Vec<i64>>,
    /// m(beta) for each folded positive root, in the folded root order.
    multiplicities: Vec<usize>,
    short: Vec<bool>,
    short_system: ShortSubsystem,
}

impl FoldedPair {
    /// Parses identifiers such as `"A3C2"` or `"D4G2"` and folds.
    pub fn from_id(id: &str) -> Result<Self> {
        let bad = || Error::UnsupportedPair(format!("cannot parse pair id {id:?}"));
        let split = id
            .char_indices()
            .skip(1)
            .find(|(_, c)| c.is_ascii_alphabetic())
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let ambient: LieType = id[..split].parse().map_err(|_| bad())?;
        let folded: LieType = id[split..].parse().map_err(|_| bad())?;
        let rs = RootSystem::new(ambient)?;
        let order = if folded.family() == Family::G { 3 } else { 2 };
        for theta in enumerate_automorphisms(&rs).into_iter().filter(|a| a.order == order) {
            let fp = fold(&rs, &theta)?;
            if fp.folded.lie_type() == folded {
                return Ok(fp);
            }
        }
        Err(Error::UnsupportedPair(format!(
            "{ambient} has no diagram automorphism folding to {folded}"
        )))
    }

    pub fn id(&self) -> String {
        format!("{}{}", self.ambient.lie_type(), self.folded.lie_type())
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn folded(&self) -> &RootSystem {
        &self.folded
    }

    pub fn theta(&self) -> &DiagramAutomorphism {
        &self.theta
    }

    pub fn order(&self) -> usize {
        self.theta.order
    }

    pub fn orbit_map(&self) -> &[usize] {
        &self.orbit_map
    }

    pub fn restriction_matrix(&self) -> &[Vec<i64>] {
        &self.restriction
    }

    /// m(beta) for the folded positive roots, in `folded().positive_roots()` order.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn is_short(&self, k: usize) -> bool {
        self.short[k]
    }

    /// Whether folded simple root `i` is short.
    pub fn is_short_simple(&self, i: usize) -> bool {
        let idx = self
            .folded
            .positive_roots()
            .iter()
            .position(|r| r == &self.folded.simple_roots()[i])
            .expect("simple roots are positive");
        self.short[idx]
    }

    pub fn short_subsystem(&self) -> &ShortSubsystem {
        &self.short_system
    }

    /// The restriction map `p` on weights.
    pub fn restrict_weight(&self, lambda: &Weight) -> Result<Weight> {
        lambda.check_type(self.ambient.lie_type())?;
        Ok(Weight::from_parts(
            self.folded.lie_type(),
            self.restrict_coords(lambda.coords()),
        ))
    }

    pub(crate) fn restrict_coords(&self, coords: &[i64]) -> Vec<i64> {
        self.restriction
            .iter()
            .map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `p` on root coordinates.
    pub fn restrict_root(&self, v: &RootVector) -> RootVector {
        let mut out = vec![0; self.folded.rank()];
        for (i, c) in v.coords().iter().enumerate() {
            out[self.orbit_map[i]] += c;
        }
        RootVector(out)
    }

    pub fn rho0(&self) -> Weight {
        self.folded.rho()
    }

    pub fn p_rho(&self) -> Weight {
        Weight::from_parts(
            self.folded.lie_type(),
            self.restrict_coords(self.ambient.rho().coords()),
        )
    }

    /// Sum of the fundamental weights at short simple nodes.
    pub fn rho_s(&self) -> Weight {
        let coords = (0..self.folded.rank())
            .map(|i| i64::from(self.is_short_simple(i)))
            .collect();
        Weight::from_parts(self.folded.lie_type(), coords)
    }

    pub fn rho_l(&self) -> Weight {
        &self.rho0() - &self.rho_s()
    }

    /// Half the sum of the positive short roots, computed from the roots themselves.
    pub fn half_sum_short_positive(&self) -> Weight {
        let mut total = vec![0i64; self.folded.rank()];
        for r in self.short_system.positive() {
            let w = self.folded.root_to_weight(r);
            for (t, c) in total.iter_mut().zip(w.coords()) {
                *t += c;
            }
        }
        debug_assert!(total.iter().all(|c| c % 2 == 0));
        Weight::from_parts(
            self.folded.lie_type(),
            total.into_iter().map(|c| c / 2).collect(),
        )
    }

    /// `p(rho) - rho_0`, checked against `rho_s` (order 2) or `2 rho_s` (order 3).
    pub fn p_rho_defect(&self) -> Result<Weight> {
        let defect = &self.p_rho() - &self.rho0();
        let expected = self.rho_s().scale(self.order() as i64 - 1);
        if defect != expected {
            return Err(Error::Audit(format!(
                "p(rho) - rho_0 = {defect}, expected {expected}"
            )));
        }
        Ok(defect)
    }

    /// `mu <=_s lambda`: `lambda - mu` is a non-negative integral combination of
    /// positive short roots.
    pub fn dominance_leq_short(&self, mu: &Weight, lambda: &Weight) -> Result<bool> {
        let ty = self.folded.lie_type();
        mu.check_type(ty)?;
        lambda.check_type(ty)?;
        let rc = self.folded.to_root_coords(&(lambda - mu));
        Ok(self
            .short_system
            .coordinates(&rc)
            .iter()
            .all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Dominance for the short subsystem: non-negative pairing with every
    /// short simple coroot.
    pub fn is_dominant_short(&self, mu: &Weight) -> Result<bool> {
        mu.check_type(self.folded.lie_type())?;
        for beta in self.short_system.simple() {
            if self.folded.pairing(mu, beta)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Root-lattice membership in the folded system.
    pub fn in_root_lattice(&self, mu: &Weight) -> Result<bool> {
        mu.check_type(self.folded.lie_type())?;
        Ok(self.folded.in_root_lattice(mu))
    }
}

fn expected_folded_type(ambient: LieType, order: usize) -> Result<LieType> {
    let n = ambient.rank();
    let unsupported = |why: &str| Err(Error::UnsupportedPair(format!("{ambient}: {why}")));
    match (ambient.family(), order) {
        (Family::A, 2) if n % 2 == 1 => LieType::new(Family::C, n.div_ceil(2)),
        (Family::A, 2) => unsupported(
            "A_2n folds to a non-reduced BC system; only A_(2n-1) -> C_n is supported",
        ),
        (Family::D, 2) if n >= 3 => LieType::new(Family::B, n - 1),
        (Family::D, 3) if n == 4 => LieType::new(Family::G, 2),
        (Family::E, 2) if n == 6 => LieType::new(Family::F, 4),
        _ => unsupported(&format!("no supported folding of order {order}")),
    }
}

/// Folds `rs` along `theta`, verifying surjectivity of `p` onto the folded
/// positive roots and the fiber sizes.
pub fn fold(rs: &RootSystem, theta: &DiagramAutomorphism) -> Result<FoldedPair> {
    let theta = DiagramAutomorphism::new(rs, theta.permutation.clone())?;
    if theta.is_identity() {
        return Err(Error::UnsupportedPair("identity automorphism".into()));
    }
    let target = expected_folded_type(rs.lie_type(), theta.order)?;
    let orbits = theta.orbits();
    if orbits.len() != target.rank() {
        return Err(Error::UnsupportedPair(format!(
            "{} orbits cannot give {target}",
            orbits.len()
        )));
    }

    // <p(alpha_i), sum_{j in J} alpha_j^vee> for i in orbit I
    let cartan = rs.cartan();
    let k = orbits.len();
    let orbit_cartan: Vec<Vec<i64>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| orbits[b].iter().map(|&j| cartan[orbits[a][0]][j]).sum())
                .collect()
        })
        .collect();

    let folded = RootSystem::new(target)?;
    let labeling = match_labeling(&orbit_cartan, folded.cartan()).ok_or_else(|| {
        Error::UnsupportedPair(format!(
            "orbit diagram of {} under {theta} is not {target}",
            rs.lie_type()
        ))
    })?;
    let mut orbit_map = vec![0; rs.rank()];
    for (a, orbit) in orbits.iter().enumerate() {
        for &i in orbit {
            orbit_map[i] = labeling[a];
        }
    }
    let restriction: Vec<Vec<i64>> = (0..k)
        .map(|row| orbit_map.iter().map(|&m| i64::from(m == row)).collect())
        .collect();

    let short_norm = folded
        .positive_roots()
        .iter()
        .map(|r| folded.norm_of_root(r))
        .min()
        .unwrap();
    let short: Vec<bool> = folded
        .positive_roots()
        .iter()
        .map(|r| folded.norm_of_root(r) == short_norm)
        .collect();

    let mut fp = FoldedPair {
        ambient: rs.clone(),
        theta,
        folded,
        orbit_map,
        restriction,
        multiplicities: vec![],
        short,
        short_system: ShortSubsystem {
            roots: vec![],
            positive: vec![],
            simple: vec![],
            components: vec![],
            basis_inverse: vec![],
        },
    };
    fp.multiplicities = audit_fibers(&fp)?;
    fp.short_system = build_short_subsystem(&fp)?;
    Ok(fp)
}

/// First bijection `orbit -> folded node` carrying one Cartan matrix onto the other.
fn match_labeling(source: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(
        source: &[Vec<i64>],
        target: &[Vec<i64>],
        assign: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = assign.len();
        if k == source.len() {
            return true;
        }
        for cand in 0..target.len() {
            if used[cand] {
                continue;
            }
            let ok = source[k][k] == target[cand][cand]
                && (0..k).all(|i| {
                    source[i][k] == target[assign[i]][cand] && source[k][i] == target[cand][assign[i]]
                });
            if ok {
                used[cand] = true;
                assign.push(cand);
                if go(source, target, assign, used) {
                    return true;
                }
                assign.pop();
                used[cand] = false;
            }
        }
        false
    }
    if source.len() != target.len() {
        return None;
    }
    let mut assign = vec![];
    let mut used = vec![false; target.len()];
    go(source, target, &mut assign, &mut used).then_some(assign)
}

fn audit_fibers(fp: &FoldedPair) -> Result<Vec<usize>> {
    let folded = &fp.folded;
    let index: HashMap<&RootVector, usize> = folded
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let mut fibers = vec![0usize; folded.n_positive()];
    for beta in fp.ambient.positive_roots() {
        let image = fp.restrict_root(beta);
        // Same image through fundamental coordinates.
        let via_weights = fp.restrict_coords(fp.ambient.root_to_weight(beta).coords());
        if via_weights != folded.root_to_weight(&image).coords() {
            return Err(Error::Audit(format!(
                "p({beta}) disagrees between root and weight coordinates"
            )));
        }
        let k = *index.get(&image).ok_or_else(|| {
            Error::Audit(format!("p({beta}) = {image} is not a folded positive root"))
        })?;
        fibers[k] += 1;
    }
    for (k, &count) in fibers.iter().enumerate() {
        let want = if fp.short[k] { fp.theta.order } else { 1 };
        if count != want {
            return Err(Error::Audit(format!(
                "fiber over {} has {count} roots, expected {want}",
                folded.positive_roots()[k]
            )));
        }
    }
    let total: usize = fibers.iter().sum();
    if total != fp.ambient.n_positive() {
        return Err(Error::Audit(format!(
            "sum of m(beta) is {total}, expected {}",
            fp.ambient.n_positive()
        )));
    }
    Ok(fibers)
}

fn build_short_subsystem(fp: &FoldedPair) -> Result<ShortSubsystem> {
    let folded = &fp.folded;
    let positive: Vec<RootVector> = folded
        .positive_roots()
        .iter()
        .zip(&fp.short)
        .filter(|(_, &s)| s)
        .map(|(r, _)| r.clone())
        .collect();
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| RootVector(r.0.iter().map(|c| -c).collect())));
    roots.sort();

    let is_sum = |r: &RootVector| {
        positive.iter().any(|a| {
            let rest = RootVector(r.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
            positive.contains(&rest)
        })
    };
    let simple: Vec<RootVector> = positive.iter().filter(|r| !is_sum(r)).cloned().collect();

    let rank = folded.rank();
    if simple.len() != rank {
        return Err(Error::Audit(format!(
            "short subsystem has {} simple roots, expected {rank}",
            simple.len()
        )));
    }
    let basis = linalg::to_rational(&simple.iter().map(|r| r.0.clone()).collect::<Vec<_>>());
    let basis_inverse = linalg::invert(&basis)
        .ok_or_else(|| Error::Audit("short simple roots are linearly dependent".into()))?;

    let short_cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|a| {
            let aw = folded.root_to_weight(a);
            simple.iter().map(|b| folded.pairing(&aw, b)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let components = classify_simply_laced(&short_cartan)?;

    let expected = expected_short_components(folded.lie_type());
    if components != expected {
        return Err(Error::Audit(format!(
            "short subsystem of {} has components {components:?}, expected {expected:?}",
            folded.lie_type()
        )));
    }

    let sub = ShortSubsystem {
        roots,
        positive,
        simple,
        components,
        basis_inverse,
    };
    for r in &sub.positive {
        let c = sub.coordinates(&linalg::to_rational(std::slice::from_ref(&r.0))[0]);
        if !c.iter().all(|x| x.is_integer() && !x.is_negative()) {
            return Err(Error::Audit(format!(
                "short root {r} is not a non-negative combination of short simple roots"
            )));
        }
    }
    Ok(sub)
}

fn expected_short_components(folded: LieType) -> Vec<LieType> {
    let n = folded.rank();
    let t = |f, r| LieType::new(f, r).expect("valid component type");
    let mut v = match folded.family() {
        Family::C if n == 2 => vec![t(Family::A, 1); 2],
        Family::C if n == 3 => vec![t(Family::A, 3)],
        Family::C => vec![t(Family::D, n)],
        Family::B => vec![t(Family::A, 1); n],
        Family::F => vec![t(Family::D, 4)],
        Family::G => vec![t(Family::A, 2)],
        _ => vec![],
    };
    v.sort();
    v
}

/// Splits a simply-laced Cartan matrix into connected components and names them.
fn classify_simply_laced(cartan: &[Vec<i64>]) -> Result<Vec<LieType>> {
    let n = cartan.len();
    let adjacent = |i: usize, j: usize| i != j && cartan[i][j] != 0;
    for i in 0..n {
        for j in 0..n {
            if adjacent(i, j) && cartan[i][j] != -1 {
                return Err(Error::Audit("short subsystem is not simply laced".into()));
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = vec![];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut stack = vec![s];
        let mut members = vec![];
        comp[s] = id;
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if adjacent(i, j) && comp[j] == usize::MAX {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        groups.push(members);
    }
    let mut out = vec![];
    for g in groups {
        let k = g.len();
        let degree = |i: usize| g.iter().filter(|&&j| adjacent(i, j)).count();
        let edges: usize = g.iter().map(|&i| degree(i)).sum::<usize>() / 2;
        if edges != k - 1 {
            return Err(Error::Audit("short subsystem diagram has a cycle".into()));
        }
        let branch: Vec<usize> = g.iter().copied().filter(|&i| degree(i) >= 3).collect();
        let ty = match branch.as_slice() {
            [] => LieType::new(Family::A, k)?,
            [b] if degree(*b) == 3 => {
                // arm lengths from the branch node
                let mut arms: Vec<usize> = g
                    .iter()
                    .copied()
                    .filter(|&j| adjacent(*b, j))
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (*b, start, 1);
                        loop {
                            let next = g.iter().copied().find(|&x| adjacent(cur, x) && x != prev);
                            match next {
                                Some(x) => {
                                    prev = cur;
                                    cur = x;
                                    len += 1;
                                }
                                None => break len,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => LieType::new(Family::D, k)?,
                    [1, 2, 2..=4] => LieType::new(Family::E, k)?,
                    _ => return Err(Error::Audit("unrecognised short subsystem".into())),
                }
            }
            _ => return Err(Error::Audit("unrecognised short subsystem".into())),
        };
        out.push(ty);
    }
    out.sort();
    Ok(out)
}

impl FromStr for FoldedPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FoldedPair::from_id(s)
    }
}
