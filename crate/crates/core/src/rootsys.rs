//! Simple root systems in Bourbaki conventions.
//!
//! Weights are stored in the fundamental-weight basis, roots in the
//! simple-root basis. The Cartan matrix follows `cartan[i][j] = <alpha_i, alpha_j^vee>`,
//! so row `i` is the simple root `alpha_i` written in fundamental coordinates.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Default bound on the size of a Weyl orbit.
pub const DEFAULT_ORBIT_GUARD: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.as_char(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Closed-form |Phi^+|.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Bourbaki Cartan matrix, `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        match self.family {
            // alpha_n short
            Family::B => m[n - 2][n - 1] = -2,
            // alpha_n long
            Family::C => m[n - 1][n - 2] = -2,
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            Family::F => m[1][2] = -2,
            // alpha_1 short, alpha_2 long
            Family::G => m[1][0] = -3,
            _ => {}
        }
        m
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.as_char(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let bad = || Error::Precondition(format!("cannot parse Lie type {s:?}"));
        let family = chars.next().and_then(Family::from_char).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// Weight in fundamental-weight coordinates of a specific simple type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    ty: LieType,
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(ty: LieType, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != ty.rank() {
            return Err(Error::RankMismatch {
                expected: ty.rank(),
                found: coords.len(),
            });
        }
        Ok(Weight { ty, coords })
    }

    pub(crate) fn from_parts(ty: LieType, coords: Vec<i64>) -> Self {
        debug_assert_eq!(coords.len(), ty.rank());
        Weight { ty, coords }
    }

    pub fn zero(ty: LieType) -> Self {
        Weight {
            ty,
            coords: vec![0; ty.rank()],
        }
    }

    /// The fundamental weight `varpi_i` (0-based index).
    pub fn fundamental(ty: LieType, i: usize) -> Self {
        let mut w = Weight::zero(ty);
        w.coords[i] = 1;
        w
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            ty: self.ty,
            coords: self.coords.iter().map(|&c| c * k).collect(),
        }
    }

    pub fn check_type(&self, ty: LieType) -> Result<()> {
        if self.ty == ty {
            Ok(())
        } else {
            Err(Error::SystemMismatch {
                expected: ty,
                found: self.ty,
            })
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.ty, rhs.ty, "adding weights of different systems");
        Weight {
            ty: self.ty,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.ty, rhs.ty, "subtracting weights of different systems");
        Weight {
            ty: self.ty,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

/// Element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: LieType,
    cartan: Vec<Vec<i64>>,
    inv_cartan: linalg::Matrix,
    /// `inv_denom * inv(cartan)`, integral.
    inv_scaled: Vec<Vec<i64>>,
    inv_denom: i64,
    /// `(alpha_i, alpha_i) / 2`, normalized so short roots have 1.
    half_norms: Vec<i64>,
    /// Integral multiple of the invariant form on fundamental coordinates.
    form: Vec<Vec<i64>>,
    simple_roots: Vec<RootVector>,
    positive_roots: Vec<RootVector>,
    /// Positive roots in fundamental coordinates, same order.
    positive_weights: Vec<Vec<i64>>,
    /// Coroot of each positive root in the simple-coroot basis.
    positive_coroots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Result<Self> {
        let cartan = ty.cartan_matrix();
        let n = ty.rank();
        let inv_cartan = linalg::invert(&linalg::to_rational(&cartan))
            .ok_or_else(|| Error::Precondition(format!("singular Cartan matrix for {ty}")))?;
        let half_norms = symmetrizer(&cartan);

        // (varpi_i, varpi_j) = inv(A)[j][i] * d_i, cleared of denominators.
        let mut denom = 1i64;
        for row in &inv_cartan {
            for x in row {
                denom = denom.lcm(x.denom());
            }
        }
        let form: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = inv_cartan[j][i] * Rational64::from_integer(half_norms[i] * denom);
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();

        let simple_roots: Vec<RootVector> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                RootVector(v)
            })
            .collect();
        let mut positive_roots = positive_root_closure(&cartan);
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));

        let positive_weights: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|r| root_to_fundamental(&cartan, &r.0))
            .collect();
        let positive_coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|r| coroot_coefficients(&cartan, &half_norms, &r.0))
            .collect();
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();

        let inv_scaled = inv_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (*x * Rational64::from_integer(denom)).to_integer())
                    .collect()
            })
            .collect();
        let rs = RootSystem {
            ty,
            cartan,
            inv_cartan,
            inv_scaled,
            inv_denom: denom,
            half_norms,
            form,
            simple_roots,
            positive_roots,
            positive_weights,
            positive_coroots,
            root_index,
        };
        if rs.positive_roots.len() != ty.positive_root_count() {
            return Err(Error::Precondition(format!(
                "{ty}: closure produced {} positive roots, expected {}",
                rs.positive_roots.len(),
                ty.positive_root_count()
            )));
        }
        Ok(rs)
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[RootVector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn n_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// `(alpha_i, alpha_i)/2` with short simple roots normalized to 1.
    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// Positive root `k` in fundamental coordinates.
    pub fn positive_root_weight(&self, k: usize) -> Weight {
        Weight::from_parts(self.ty, self.positive_weights[k].clone())
    }

    pub(crate) fn positive_weight_coords(&self) -> &[Vec<i64>] {
        &self.positive_weights
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive_roots.last().expect("root systems are non-empty")
    }

    /// Index of `alpha` in the positive root list, or of `-alpha` with the flag set.
    fn locate_root(&self, alpha: &RootVector) -> Option<(usize, bool)> {
        if let Some(&k) = self.root_index.get(&alpha.0) {
            return Some((k, false));
        }
        let neg: Vec<i64> = alpha.0.iter().map(|c| -c).collect();
        self.root_index.get(&neg).map(|&k| (k, true))
    }

    pub fn is_root(&self, alpha: &RootVector) -> bool {
        alpha.0.len() == self.rank() && self.locate_root(alpha).is_some()
    }

    /// Squared length of a root-lattice vector with short roots of length 2.
    pub fn norm_of_root(&self, v: &RootVector) -> i64 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                total += v.0[i] * v.0[j] * self.cartan[i][j] * self.half_norms[j];
            }
        }
        total
    }

    pub fn rho(&self) -> Weight {
        Weight::from_parts(self.ty, vec![1; self.rank()])
    }

    /// Simple root `alpha_i` in fundamental coordinates.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::from_parts(self.ty, self.cartan[i].clone())
    }

    /// Converts a root-lattice vector to fundamental coordinates.
    pub fn root_to_weight(&self, v: &RootVector) -> Weight {
        Weight::from_parts(self.ty, root_to_fundamental(&self.cartan, &v.0))
    }

    /// `<lambda, alpha^vee>` for a root `alpha`.
    pub fn pairing(&self, lambda: &Weight, alpha: &RootVector) -> Result<i64> {
        lambda.check_type(self.ty)?;
        let (k, negated) = self
            .locate_root(alpha)
            .filter(|_| alpha.0.len() == self.rank())
            .ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        let v = dot(&lambda.coords, &self.positive_coroots[k]);
        Ok(if negated { -v } else { v })
    }

    /// Exact simple-root coordinates of `lambda`.
    pub fn to_root_coords(&self, lambda: &Weight) -> Vec<Rational64> {
        linalg::int_row_times(&lambda.coords, &self.inv_cartan)
    }

    /// Integral simple-root coordinates, when `lambda` lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.to_root_coords(lambda)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        self.root_lattice_coords(lambda).is_some()
    }

    /// Simple-root coordinates multiplied by a common denominator.
    pub(crate) fn root_coords_scaled(&self, coords: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| coords.iter().zip(&self.inv_scaled).map(|(c, row)| c * row[j]).sum())
            .collect()
    }


    /// Height multiplied by a common denominator.
    pub(crate) fn scaled_height(&self, coords: &[i64]) -> i64 {
        self.root_coords_scaled(coords).iter().sum()
    }

    /// `mu <= lambda` on raw coordinates of the same system.
    pub(crate) fn leq_coords(&self, mu: &[i64], lambda: &[i64]) -> bool {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        self.root_coords_scaled(&diff)
            .iter()
            .all(|&x| x >= 0 && x % self.inv_denom == 0)
    }

    /// Sum of simple-root coordinates.
    pub fn height(&self, lambda: &Weight) -> Rational64 {
        self.to_root_coords(lambda)
            .into_iter()
            .fold(Rational64::zero(), |a, b| a + b)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    /// Applies the simple reflection `s_i` in place.
    pub fn reflect_coords(&self, coords: &mut [i64], i: usize) {
        let c = coords[i];
        if c != 0 {
            for (x, a) in coords.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    pub fn reflect(&self, lambda: &Weight, i: usize) -> Weight {
        let mut coords = lambda.coords.clone();
        self.reflect_coords(&mut coords, i);
        Weight::from_parts(self.ty, coords)
    }

    /// Moves `coords` into the dominant chamber, returning the number of
    /// reflections used.
    pub fn make_dominant(&self, coords: &mut [i64]) -> usize {
        let mut steps = 0;
        while let Some(i) = coords.iter().position(|&c| c < 0) {
            self.reflect_coords(coords, i);
            steps += 1;
        }
        steps
    }

    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut coords = lambda.coords.clone();
        self.make_dominant(&mut coords);
        Weight::from_parts(lambda.ty, coords)
    }

    /// `mu <= lambda` in the dominance order.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> Result<bool> {
        mu.check_type(self.ty)?;
        lambda.check_type(self.ty)?;
        Ok(self
            .to_root_coords(&(lambda - mu))
            .iter()
            .all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Weyl dimension formula, evaluated exactly.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        lambda.check_type(self.ty)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for co in &self.positive_coroots {
            let top: i64 = lambda.coords.iter().zip(co).map(|(l, c)| (l + 1) * c).sum();
            let bottom: i64 = co.iter().sum();
            num = num
                .checked_mul(top as u128)
                .ok_or(Error::Overflow("weyl_dim"))?;
            den *= bottom as u128;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        Ok(num)
    }

    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.weyl_orbit_bounded(lambda, DEFAULT_ORBIT_GUARD)
    }

    /// Reflection closure of `lambda`, sorted.
    pub fn weyl_orbit_bounded(&self, lambda: &Weight, bound: usize) -> Result<Vec<Weight>> {
        lambda.check_type(self.ty)?;
        let orbit = self.orbit_coords(&lambda.coords, bound)?;
        let mut out: Vec<Weight> = orbit
            .into_iter()
            .map(|c| Weight::from_parts(self.ty, c))
            .collect();
        out.sort();
        Ok(out)
    }

    pub(crate) fn orbit_coords(&self, start: &[i64], bound: usize) -> Result<Vec<Vec<i64>>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.to_vec());
        queue.push_back(start.to_vec());
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w[i] == 0 {
                    continue;
                }
                let mut next = w.clone();
                self.reflect_coords(&mut next, i);
                if !seen.contains(&next) {
                    if seen.len() >= bound {
                        return Err(Error::Guard {
                            what: "Weyl orbit".into(),
                            size: seen.len() + 1,
                            limit: bound,
                        });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
            out.push(w);
        }
        Ok(out)
    }

    /// Integral multiple of the invariant inner product on fundamental coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            total += x * dot(&self.form[i], b);
        }
        total
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn root_to_fundamental(cartan: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let n = cartan.len();
    (0..n)
        .map(|j| v.iter().zip(cartan).map(|(c, row)| c * row[j]).sum())
        .collect()
}

/// Half squared lengths of simple roots, with the shortest equal to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::from_integer(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].unwrap();
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // cartan[i][j] * d_j = cartan[j][i] * d_i
                d[j] = Some(di * Rational64::new(cartan[j][i], cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = *d.iter().min().unwrap();
    d.iter()
        .map(|x| {
            let r = *x / min;
            debug_assert!(r.is_integer());
            r.to_integer()
        })
        .collect()
}

fn coroot_coefficients(cartan: &[Vec<i64>], half_norms: &[i64], v: &[i64]) -> Vec<i64> {
    let n = cartan.len();
    let mut norm = 0;
    for i in 0..n {
        for j in 0..n {
            norm += v[i] * v[j] * cartan[i][j] * half_norms[j];
        }
    }
    let half = norm / 2;
    v.iter()
        .zip(half_norms)
        .map(|(c, d)| {
            debug_assert_eq!((c * d) % half, 0);
            c * d / half
        })
        .collect()
}

/// Positive roots as the closure of the simple roots under root strings.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let n = cartan.len();
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        found.insert(v.clone());
        queue.push_back(v);
    }
    let mut out = Vec::new();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // <beta, alpha_i^vee>
            let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            let mut q = 0;
            loop {
                let mut down = beta.clone();
                down[i] -= q + 1;
                if found.contains(&down) {
                    q += 1;
                } else {
                    break;
                }
            }
            if q - pair > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if found.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
        out.push(RootVector(beta));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn w(rs: &RootSystem, c: &[i64]) -> Weight {
        Weight::new(rs.lie_type(), c.to_vec()).unwrap()
    }

    fn r(v: &[i64]) -> Rational64 {
        Rational64::new(v[0], v[1])
    }

    #[test]
    fn rank_constraints() {
        for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3"] {
            assert!(bad.parse::<LieType>().is_err(), "{bad}");
        }
        for good in ["A1", "B2", "C2", "D3", "E6", "E8", "F4", "G2"] {
            assert!(good.parse::<LieType>().is_ok(), "{good}");
        }
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let mut types = vec![];
        for n in 1..=8 {
            types.push(LieType::new(Family::A, n).unwrap());
        }
        for n in 2..=7 {
            types.push(LieType::new(Family::B, n).unwrap());
            types.push(LieType::new(Family::C, n).unwrap());
        }
        for n in 3..=7 {
            types.push(LieType::new(Family::D, n).unwrap());
        }
        for s in ["E6", "E7", "E8", "F4", "G2"] {
            types.push(ty(s));
        }
        for t in types {
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.n_positive(), t.positive_root_count(), "{t}");
            for root in rs.positive_roots() {
                assert!(root.coords().iter().all(|&c| c >= 0));
            }
        }
    }

    #[test]
    fn c2_positive_roots() {
        let rs = RootSystem::new(ty("C2")).unwrap();
        let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn g2_cartan_and_roots() {
        let rs = RootSystem::new(ty("G2")).unwrap();
        assert_eq!(rs.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs.n_positive(), 6);
        // Bourbaki PLANCHE IX: highest root 3a1 + 2a2
        assert_eq!(rs.highest_root().0, vec![3, 2]);
        assert_eq!(rs.half_norms(), &[1, 3]);
    }

    #[test]
    fn rho_is_all_ones() {
        for s in ["A3", "C2", "G2"] {
            let rs = RootSystem::new(ty(s)).unwrap();
            assert!(rs.rho().coords().iter().all(|&c| c == 1));
            for (i, a) in rs.simple_roots().iter().enumerate() {
                assert_eq!(rs.pairing(&rs.rho(), a).unwrap(), 1, "{s} alpha_{i}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        assert_eq!(c2.pairing(&w(&c2, &[1, 1]), &RootVector(vec![1, 0])).unwrap(), 1);
        // (2,1) = 3e1 + e2, 2e1 = 2a1 + a2 with coroot e1: <3e1+e2, e1> = 3
        assert_eq!(c2.pairing(&w(&c2, &[2, 1]), &RootVector(vec![2, 1])).unwrap(), 3);
        assert_eq!(c2.pairing(&w(&c2, &[2, 1]), &RootVector(vec![-2, -1])).unwrap(), -3);
        let a3 = RootSystem::new(ty("A3")).unwrap();
        let theta = a3.highest_root().clone();
        assert_eq!(theta.0, vec![1, 1, 1]);
        assert_eq!(a3.pairing(&a3.rho(), &theta).unwrap(), 3);
        assert!(matches!(
            c2.pairing(&w(&c2, &[1, 1]), &RootVector(vec![1, 2])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn root_coordinate_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        assert_eq!(c2.to_root_coords(&w(&c2, &[1, 0])), vec![r(&[1, 1]), r(&[1, 2])]);
        let g2 = RootSystem::new(ty("G2")).unwrap();
        assert_eq!(g2.to_root_coords(&w(&g2, &[1, 0])), vec![r(&[2, 1]), r(&[1, 1])]);
        let a3 = RootSystem::new(ty("A3")).unwrap();
        assert!(a3
            .to_root_coords(&Weight::zero(a3.lie_type()))
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn dominance_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        assert!(c2.dominance_leq(&w(&c2, &[0, 1]), &w(&c2, &[2, 1])).unwrap());
        assert!(!c2.dominance_leq(&w(&c2, &[1, 0]), &w(&c2, &[2, 1])).unwrap());
        assert!(c2.dominance_leq(&w(&c2, &[2, 1]), &w(&c2, &[2, 1])).unwrap());
        let b2 = RootSystem::new(ty("B2")).unwrap();
        let other = Weight::new(b2.lie_type(), vec![0, 0]).unwrap();
        assert!(matches!(
            c2.dominance_leq(&other, &w(&c2, &[1, 1])),
            Err(Error::SystemMismatch { .. })
        ));
    }

    #[test]
    fn dominant_representative_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        assert_eq!(c2.dominant_representative(&w(&c2, &[-1, 0])), w(&c2, &[1, 0]));
        assert_eq!(c2.dominant_representative(&w(&c2, &[2, 1])), w(&c2, &[2, 1]));
        let a1 = RootSystem::new(ty("A1")).unwrap();
        assert_eq!(a1.dominant_representative(&w(&a1, &[-5])), w(&a1, &[5]));
    }

    #[test]
    fn weyl_dim_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        assert_eq!(c2.weyl_dim(&w(&c2, &[0, 0])).unwrap(), 1);
        assert_eq!(c2.weyl_dim(&w(&c2, &[2, 1])).unwrap(), 35);
        let a3 = RootSystem::new(ty("A3")).unwrap();
        assert_eq!(a3.weyl_dim(&a3.rho()).unwrap(), 64);
        assert!(matches!(c2.weyl_dim(&w(&c2, &[-1, 0])), Err(Error::NotDominant(_))));
        let e8 = RootSystem::new(ty("E8")).unwrap();
        assert_eq!(e8.weyl_dim(&Weight::fundamental(e8.lie_type(), 7)).unwrap(), 248);
    }

    #[test]
    fn weyl_orbit_examples() {
        let c2 = RootSystem::new(ty("C2")).unwrap();
        let orbit = c2.weyl_orbit(&w(&c2, &[1, 0])).unwrap();
        let expect = vec![w(&c2, &[-1, 0]), w(&c2, &[-1, 1]), w(&c2, &[1, -1]), w(&c2, &[1, 0])];
        assert_eq!(orbit, expect);
        assert_eq!(c2.weyl_orbit(&Weight::zero(c2.lie_type())).unwrap().len(), 1);
        let a1 = RootSystem::new(ty("A1")).unwrap();
        assert_eq!(a1.weyl_orbit(&w(&a1, &[3])).unwrap(), vec![w(&a1, &[-3]), w(&a1, &[3])]);
        let e8 = RootSystem::new(ty("E8")).unwrap();
        assert!(matches!(
            e8.weyl_orbit_bounded(&e8.rho(), 1000),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn form_is_symmetric_and_matches_cartan() {
        for s in ["B3", "C3", "F4", "G2", "E6"] {
            let rs = RootSystem::new(ty(s)).unwrap();
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    let ai = rs.simple_root_weight(i);
                    let aj = rs.simple_root_weight(j);
                    // 2 (a_i, a_j) / (a_j, a_j) = cartan[i][j]
                    let lhs = 2 * rs.inner(ai.coords(), aj.coords());
                    let rhs = rs.cartan()[i][j] * rs.inner(aj.coords(), aj.coords());
                    assert_eq!(lhs, rhs, "{s} {i} {j}");
                    assert_eq!(rs.form[i][j], rs.form[j][i]);
                }
            }
        }
    }
}
