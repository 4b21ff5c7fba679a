//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the lines always reach stdout:
//! `cargo test -p foldbranch-cli --release --test acceptance`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use foldbranch::branching::{
    branch_rho, counterexample_demo, triality_demo, verify_lemma, verify_tensor_identity,
    verify_proposition, verify_theorem,
};
use foldbranch::charalg::{
    char_freudenthal, folded_rho_character, is_weight_of, klimyk_tensor, restrict_character,
    weight_multiplicity, Freudenthal,
};
use foldbranch::{FoldedPair, Limits, RootSystem, Weight};

type Outcome = Result<(bool, String), String>;

struct Criterion {
    id: u32,
    title: &'static str,
    run: fn() -> Outcome,
    /// Criteria whose stated expectation is known not to hold; the run must
    /// still reproduce the documented failure exactly.
    known_failure: Option<fn(&str) -> bool>,
}

fn pair(id: &str) -> FoldedPair {
    FoldedPair::from_id(id).expect("supported pair")
}

fn fw(fp: &FoldedPair, c: &[i64]) -> Weight {
    Weight::new(fp.folded().lie_type(), c.to_vec()).unwrap()
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn branching_table() -> Outcome {
    let fp = pair("A3C2");
    let p = Freudenthal::new();
    let limits = Limits::default();
    let folded = fp.folded();
    let dec = branch_rho(&fp, 1, &limits).map_err(s)?;
    let oracle = klimyk_tensor(folded, &fp.rho0(), &fp.rho_s(), &p, &limits).map_err(s)?;
    let expected: Vec<(Weight, u64)> = [[2, 1], [0, 2], [2, 0], [0, 1]]
        .iter()
        .map(|c| (fw(&fp, c), 1))
        .collect();
    let dims: Vec<u128> = dec
        .entries()
        .iter()
        .map(|(w, _)| folded.weyl_dim(w))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    let total = dec.total_dim(folded).map_err(s)?;
    let ok = dec.entries() == expected.as_slice()
        && oracle.entries() == expected.as_slice()
        && dims == [35, 14, 10, 5]
        && total == 64;
    Ok((ok, format!("dims {dims:?}, total {total}, Klimyk oracle agrees: {}", oracle == dec)))
}

fn character_identity() -> Outcome {
    let limits = Limits::default();
    let cases = [
        ("A3C2", 1),
        ("A5C3", 1),
        ("D4B3", 1),
        ("D4G2", 1),
        ("D5B4", 1),
        ("A3C2", 2),
        ("D4B3", 2),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (id, d) in cases {
        let fp = pair(id);
        let ambient = fp.ambient();
        let ch = char_freudenthal(ambient, &ambient.rho().scale(d as i64), &limits).map_err(s)?;
        let restricted = restrict_character(&fp, &ch).map_err(s)?;
        let folded = folded_rho_character(&fp, d, &limits).map_err(s)?;
        let eq = restricted == folded;
        ok &= eq;
        notes.push(format!("{id} d={d} {}", if eq { "eq" } else { "DIFF" }));
    }
    Ok((ok, notes.join(", ")))
}

fn tensor_identity() -> Outcome {
    let p = Freudenthal::new();
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for id in ["A3C2", "A5C3", "A7C4", "D4B3", "D5B4"] {
        let r = verify_tensor_identity(&pair(id), &p, &limits).map_err(s)?;
        ok &= r.holds;
        notes.push(format!("{id} {} weights", r.terms));
    }
    Ok((ok, notes.join(", ")))
}

fn lemma() -> Outcome {
    let p = Freudenthal::new();
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for (id, n) in [("A3C2", 4), ("D4B3", 8), ("A5C3", 64), ("D5B4", 16)] {
        let r = verify_lemma(&pair(id), &p, &limits).map_err(s)?;
        ok &= r.holds && r.subsets == n && r.character_mass == n as i128;
        notes.push(format!("{id} {}", r.subsets));
    }
    Ok((ok, notes.join(", ")))
}

fn proposition() -> Outcome {
    let p = Freudenthal::new();
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for id in ["A3C2", "A5C3", "D4B3"] {
        let r = verify_proposition(&pair(id), None, &p, &limits).map_err(s)?;
        ok &= r.holds();
        let witnesses: Vec<String> = r.mismatches.iter().map(|m| m.mu.to_string()).collect();
        let mut note = format!("{id} {} scanned, {} mismatches", r.scanned, r.mismatches.len());
        if !witnesses.is_empty() {
            note.push_str(&format!(" {}", witnesses.join(" ")));
        }
        notes.push(note);
    }
    Ok((ok, notes.join(", ")))
}

/// The equivalence fails for A5C3 at exactly these weights, all with the
/// criterion false and a non-zero multiplicity; the other pairs are clean.
fn proposition_known(detail: &str) -> bool {
    detail.contains("A3C2 20 scanned, 0 mismatches,")
        && detail.contains("A5C3 100 scanned, 3 mismatches (3,0,0) (1,1,0) (3,1,0),")
        && detail.ends_with("D4B3 80 scanned, 0 mismatches")
}

fn counterexample() -> Outcome {
    let r = counterexample_demo(3, &Limits::default()).map_err(s)?;
    let ok = r.mu.coords() == [5, 0, 0]
        && r.short_dominance
        && r.multiplicity == 0
        && !r.in_branch;
    Ok((
        ok,
        format!(
            "mu {}: short dominance {}, multiplicity {}, in branch {}",
            r.mu, r.short_dominance, r.multiplicity, r.in_branch
        ),
    ))
}

fn theorem() -> Outcome {
    let p = Freudenthal::new();
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for id in ["A3C2", "A5C3", "D4B3", "D5B4", "D4G2"] {
        let r = verify_theorem(&pair(id), 1, &p, &limits).map_err(s)?;
        ok &= r.agreement;
        notes.push(format!("{id} {}", r.candidate_set.len()));
    }
    let fp = pair("A3C2");
    let r1 = verify_theorem(&fp, 1, &p, &limits).map_err(s)?;
    let r2 = verify_theorem(&fp, 2, &p, &limits).map_err(s)?;
    let stable = r2.agreement && r2.scaled_constituents == r1.scaled_constituents;
    ok &= stable;
    let excluded: Vec<String> = r2.non_central.iter().map(Weight::to_string).collect();
    notes.push(format!("A3C2 d=2 stable {stable}, non-central {}", excluded.join(" ")));
    Ok((ok, notes.join(", ")))
}

fn triality() -> Outcome {
    let fp = pair("D4G2");
    let r = triality_demo(&fp, &Freudenthal::new(), &Limits::default()).map_err(s)?;
    // the defect p(rho) - rho_0 is 2 w1 for G2
    let two_w1 = fw(&fp, &[2, 0]) == fp.p_rho_defect().map_err(s)?;
    Ok((
        r.holds() && two_w1 && r.branch_mass == 4096,
        format!("{} constituents, mass {}", r.branch_set.len(), r.branch_mass),
    ))
}

fn box_weights(ty: foldbranch::LieType, bound: i64) -> Vec<Weight> {
    let r = ty.rank();
    let mut out = Vec::new();
    let mut c = vec![-bound; r];
    loop {
        out.push(Weight::new(ty, c.clone()).unwrap());
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            if c[i] < bound {
                c[i] += 1;
                break;
            }
            c[i] = -bound;
            i += 1;
        }
    }
}

fn properties() -> Outcome {
    let limits = Limits::default();
    let mut violations = 0usize;
    let mut checked = 0usize;
    for ty in ["A2", "B2", "C3", "G2", "B3"] {
        let rs = RootSystem::new(ty.parse().unwrap()).map_err(s)?;
        let t = rs.lie_type();
        for lambda in box_weights(t, 2).into_iter().filter(Weight::is_dominant) {
            let ch = char_freudenthal(&rs, &lambda, &limits).map_err(s)?;
            checked += 1;
            if ch.mass() != rs.weyl_dim(&lambda).map_err(s)? as i128 || !ch.is_weyl_invariant(&rs) {
                violations += 1;
            }
            if lambda.coords().iter().sum::<i64>() <= 2 {
                for mu in box_weights(t, 3) {
                    let m = weight_multiplicity(&rs, &lambda, &mu, &limits).map_err(s)?;
                    if is_weight_of(&rs, &lambda, &mu).map_err(s)? != (m > 0) {
                        violations += 1;
                    }
                }
            }
        }
    }
    for (id, d) in [("A3C2", 1), ("A3C2", 2), ("D4B3", 1), ("A5C3", 1), ("D4G2", 1)] {
        let fp = pair(id);
        let ch = folded_rho_character(&fp, d, &limits).map_err(s)?;
        if !ch.is_weyl_invariant(fp.folded()) {
            violations += 1;
        }
        let top = fp.p_rho().scale(d as i64);
        let dec = branch_rho(&fp, d, &limits).map_err(s)?;
        for (mu, _) in dec.entries() {
            checked += 1;
            if !fp.folded().in_root_lattice(&(&top - mu)) {
                violations += 1;
            }
        }
    }
    Ok((violations == 0, format!("{checked} characters and constituents, {violations} violations")))
}

fn run_cli(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_foldbranch"))
        .args(args)
        .args(["--threads", threads, "--format", "json"])
        .env_remove("FOLDBRANCH_CACHE_DIR")
        .output()
        .map_err(s)?;
    match out.status.code() {
        Some(0) | Some(1) => Ok(out.stdout),
        c => Err(format!("{args:?} exited with {c:?}: {}", String::from_utf8_lossy(&out.stderr))),
    }
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 11] = [
        &["branch", "A3C2"],
        &["branch", "A3C2", "--d", "2"],
        &["branch", "D4B3", "--d", "2"],
        &["branch", "D5B4"],
        &["verify", "A3C2"],
        &["verify", "A5C3"],
        &["verify", "D4B3"],
        &["verify", "D5B4"],
        &["verify", "D4G2"],
        &["verify", "A7C4", "--suite", "panyushev"],
        &["fold", "E6F4"],
    ];
    let mut differing = Vec::new();
    for args in commands {
        let a = run_cli(args, "1")?;
        let b = run_cli(args, "4")?;
        if a != b || a.is_empty() {
            differing.push(args.join(" "));
        }
    }
    Ok((
        differing.is_empty(),
        format!("{} commands, differing: {:?}", commands.len(), differing),
    ))
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "branching table A3->C2, d=1", run: branching_table, known_failure: None },
        Criterion { id: 2, title: "restricted character = folded product", run: character_identity, known_failure: None },
        Criterion { id: 3, title: "tensor identity for res V(rho)", run: tensor_identity, known_failure: None },
        Criterion { id: 4, title: "subset sums = character of V0(p(rho)-rho0)", run: lemma, known_failure: None },
        Criterion {
            id: 5,
            title: "short-dominance criterion equivalence scan",
            run: proposition,
            known_failure: Some(proposition_known),
        },
        Criterion { id: 6, title: "counterexample A5->C3, mu=5w1", run: counterexample, known_failure: None },
        Criterion { id: 7, title: "theorem agreement and d-stability", run: theorem, known_failure: None },
        Criterion { id: 8, title: "triality D4->G2", run: triality, known_failure: None },
        Criterion { id: 9, title: "property suites", run: properties, known_failure: None },
        Criterion { id: 10, title: "determinism across thread counts", run: determinism, known_failure: None },
    ];
    let mut unexpected = BTreeSet::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        let (passed, detail) = match outcome {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = if passed { "PASS" } else { "FAIL" };
        let note = match (passed, c.known_failure) {
            (false, Some(check)) if check(&detail) => " [known: documented counterexample reproduced]",
            (false, _) => {
                unexpected.insert(c.id);
                ""
            }
            (true, Some(_)) => {
                unexpected.insert(c.id);
                " [expected the documented failure]"
            }
            (true, None) => "",
        };
        println!("{tag} criterion {:>2}: {} ({detail}) [{secs:.2}s]{note}", c.id, c.title);
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
