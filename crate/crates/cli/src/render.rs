//! Serializable views of results and their text and CSV renderings.

use std::fmt::Write as _;

use foldbranch::{FoldedPair, IrrDecomposition, Result, Weight};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairInfo {
    pub ambient: String,
    pub folded: String,
    pub order: usize,
}

impl PairInfo {
    pub fn new(fp: &FoldedPair) -> Self {
        PairInfo {
            ambient: fp.ambient().lie_type().to_string(),
            folded: fp.folded().lie_type().to_string(),
            order: fp.order(),
        }
    }

    pub fn id(&self) -> String {
        format!("{}{}", self.ambient, self.folded)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub weight: Vec<i64>,
    pub multiplicity: u64,
    pub dim: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MassAudit {
    pub expected: u128,
    pub actual: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOutput {
    pub pair: PairInfo,
    pub d: usize,
    pub constituents: Vec<Constituent>,
    pub mass_audit: MassAudit,
}

impl BranchOutput {
    pub fn new(fp: &FoldedPair, d: usize, dec: &IrrDecomposition, expected: u128) -> Result<Self> {
        let folded = fp.folded();
        let mut constituents = Vec::with_capacity(dec.len());
        for (w, m) in dec.entries() {
            constituents.push(Constituent {
                weight: w.coords().to_vec(),
                multiplicity: *m,
                dim: folded.weyl_dim(w)?,
            });
        }
        Ok(BranchOutput {
            pair: PairInfo::new(fp),
            d,
            mass_audit: MassAudit {
                expected,
                actual: dec.total_dim(folded)?,
            },
            constituents,
        })
    }

    /// Recomputes `sum multiplicity * dim` from the listed constituents.
    pub fn recomputed_mass(&self) -> Option<u128> {
        self.constituents.iter().try_fold(0u128, |acc, c| {
            acc.checked_add(u128::from(c.multiplicity).checked_mul(c.dim)?)
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "res V({}rho) from {} to {} (order {})\n",
            if self.d == 1 { String::new() } else { self.d.to_string() },
            self.pair.ambient,
            self.pair.folded,
            self.pair.order
        );
        for c in &self.constituents {
            let _ = writeln!(out, "  {:>4} x V{}  dim {}", c.multiplicity, coords(&c.weight), c.dim);
        }
        let _ = writeln!(
            out,
            "{} constituents, total dimension {} (expected {})",
            self.constituents.len(),
            self.mass_audit.actual,
            self.mass_audit.expected
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("pair,d,weight,multiplicity,dim\n");
        let id = self.pair.id();
        for c in &self.constituents {
            let w: Vec<String> = c.weight.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{id},{},\"{}\",{},{}", self.d, w.join(","), c.multiplicity, c.dim);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    /// Simple-root coordinates in the folded system.
    pub root: Vec<i64>,
    pub short: bool,
    /// Number of ambient positive roots restricting to this root.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldOutput {
    pub pair: PairInfo,
    /// Cycle notation on 1-based ambient nodes.
    pub automorphism: String,
    /// Ambient nodes (1-based) over each folded node.
    pub orbits: Vec<Vec<usize>>,
    pub short_simple: Vec<usize>,
    pub long_simple: Vec<usize>,
    pub short_subsystem: String,
    pub rho0: Vec<i64>,
    pub p_rho: Vec<i64>,
    pub rho_s: Vec<i64>,
    pub rho_l: Vec<i64>,
    pub positive_roots: Vec<RootEntry>,
}

impl FoldOutput {
    pub fn new(fp: &FoldedPair) -> Self {
        let folded = fp.folded();
        let rank = folded.rank();
        let mut orbits = vec![Vec::new(); rank];
        for (node, &j) in fp.orbit_map().iter().enumerate() {
            orbits[j].push(node + 1);
        }
        let (short_simple, long_simple): (Vec<usize>, Vec<usize>) =
            (1..=rank).partition(|&i| fp.is_short_simple(i - 1));
        let positive_roots = folded
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(k, r)| RootEntry {
                root: r.0.clone(),
                short: fp.is_short(k),
                multiplicity: fp.multiplicities()[k],
            })
            .collect();
        let own = |w: Weight| w.into_coords();
        FoldOutput {
            pair: PairInfo::new(fp),
            automorphism: fp.theta().to_string(),
            orbits,
            short_simple,
            long_simple,
            short_subsystem: fp.short_subsystem().type_label(),
            rho0: own(fp.rho0()),
            p_rho: own(fp.p_rho()),
            rho_s: own(fp.rho_s()),
            rho_l: own(fp.rho_l()),
            positive_roots,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} -> {} by {} (order {})\n",
            self.pair.ambient, self.pair.folded, self.automorphism, self.pair.order
        );
        for (i, o) in self.orbits.iter().enumerate() {
            let nodes: Vec<String> = o.iter().map(usize::to_string).collect();
            let kind = if self.short_simple.contains(&(i + 1)) { "short" } else { "long" };
            let _ = writeln!(out, "  node {} ({kind}) <- {{{}}}", i + 1, nodes.join(","));
        }
        let _ = writeln!(out, "short subsystem: {}", self.short_subsystem);
        let _ = writeln!(out, "rho_0  = {}", coords(&self.rho0));
        let _ = writeln!(out, "p(rho) = {}", coords(&self.p_rho));
        let _ = writeln!(out, "rho_s  = {}", coords(&self.rho_s));
        let _ = writeln!(out, "rho_l  = {}", coords(&self.rho_l));
        out.push_str("positive roots (simple-root coordinates), m:\n");
        for r in &self.positive_roots {
            let _ = writeln!(
                out,
                "  {} {} m={}",
                coords(&r.root),
                if r.short { "short" } else { "long " },
                r.multiplicity
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("pair,root,short,multiplicity\n");
        let id = self.pair.id();
        for r in &self.positive_roots {
            let c: Vec<String> = r.root.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{id},\"{}\",{},{}", c.join(","), r.short, r.multiplicity);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub passed: bool,
    pub summary: String,
    pub details: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub pair: PairInfo,
    pub d: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub skipped: Vec<String>,
}

impl VerifyOutput {
    pub fn to_text(&self) -> String {
        let mut out = format!("verify {} (d = {})\n", self.pair.id(), self.d);
        for c in &self.checks {
            let _ = writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.summary);
        }
        for s in &self.skipped {
            let _ = writeln!(out, "SKIP {s}");
        }
        let _ = writeln!(out, "{}", if self.passed { "all checks passed" } else { "verification failed" });
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("pair,d,suite,passed,summary\n");
        let id = self.pair.id();
        for c in &self.checks {
            let _ = writeln!(out, "{id},{},{},{},\"{}\"", self.d, c.suite, c.passed, c.summary.replace('"', "'"));
        }
        out
    }
}

pub fn coords(c: &[i64]) -> String {
    let s: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("({})", s.join(","))
}

pub fn weight_list<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> Vec<Vec<i64>> {
    ws.into_iter().map(|w| w.coords().to_vec()).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
