//! On-disk cache of irreducible characters.
//!
//! One file per `(family, rank, lambda)`, named `C2_2_1.char` for `V(2,1)` of C2.
//! The first line is `family rank lambda... mass`, followed by one line
//! `c1 ... cr mult` per weight in lexicographic order of the coordinates.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use foldbranch::charalg::{char_freudenthal, CharacterProvider, Freudenthal, Limits};
use foldbranch::{Error, FormalCharacter, LieType, Result, RootSystem, Weight};
use log::{debug, warn};

pub fn file_name(lambda: &Weight) -> String {
    let ty = lambda.lie_type();
    let mut name = format!("{}{}", ty.family().as_char(), ty.rank());
    for c in lambda.coords() {
        name.push('_');
        name.push_str(&c.to_string());
    }
    name.push_str(".char");
    name
}

/// Serializes a character in the cache format.
pub fn encode(lambda: &Weight, ch: &FormalCharacter) -> String {
    let ty = lambda.lie_type();
    let mut out = format!("{} {}", ty.family().as_char(), ty.rank());
    for c in lambda.coords() {
        out.push_str(&format!(" {c}"));
    }
    out.push_str(&format!(" {}\n", ch.mass()));
    for (w, m) in ch.terms() {
        for c in w {
            out.push_str(&format!("{c} "));
        }
        out.push_str(&format!("{m}\n"));
    }
    out
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Precondition(format!("corrupt cache entry: {}", msg.into()))
}

/// Parses a cache file, checking the header against `lambda` and the mass.
pub fn decode(lambda: &Weight, text: &str) -> Result<FormalCharacter> {
    let ty = lambda.lie_type();
    let rank = ty.rank();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().ok_or_else(|| corrupt("empty"))?.split(' ').collect();
    if header.len() != rank + 3 {
        return Err(corrupt("header length"));
    }
    let head_ty: LieType = format!("{}{}", header[0], header[1]).parse()?;
    let head_lambda: Vec<i64> = header[2..2 + rank]
        .iter()
        .map(|s| s.parse().map_err(|_| corrupt("header weight")))
        .collect::<Result<_>>()?;
    let mass: i128 = header[rank + 2].parse().map_err(|_| corrupt("header mass"))?;
    if head_ty != ty || head_lambda != lambda.coords() {
        return Err(corrupt("header does not match the requested weight"));
    }
    let mut terms = Vec::new();
    for line in lines {
        let fields: Vec<i64> = line
            .split(' ')
            .map(|s| s.parse().map_err(|_| corrupt("term")))
            .collect::<Result<_>>()?;
        if fields.len() != rank + 1 {
            return Err(corrupt("term length"));
        }
        terms.push((fields[..rank].to_vec(), fields[rank]));
    }
    let ch = FormalCharacter::from_terms(ty, terms)?;
    if ch.mass() != mass {
        return Err(corrupt("mass"));
    }
    Ok(ch)
}

/// Character provider backed by a directory, falling back to Freudenthal.
#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
    memo: Freudenthal,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache {
            dir,
            memo: Freudenthal::new(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn load_or_compute(&self, rs: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<FormalCharacter> {
        let path = self.dir.join(file_name(lambda));
        if let Ok(text) = fs::read_to_string(&path) {
            match decode(lambda, &text) {
                Ok(ch) => {
                    debug!("cache hit {}", path.display());
                    return Ok(ch);
                }
                Err(e) => warn!("ignoring {}: {e}", path.display()),
            }
        }
        let ch = char_freudenthal(rs, lambda, limits)?;
        if let Err(e) = self.store(&path, lambda, &ch) {
            warn!("could not write {}: {e}", path.display());
        }
        Ok(ch)
    }

    fn store(&self, path: &Path, lambda: &Weight, ch: &FormalCharacter) -> std::io::Result<()> {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(encode(lambda, ch).as_bytes())?;
        }
        fs::rename(tmp, path)
    }
}

impl CharacterProvider for DiskCache {
    fn character(&self, rs: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<Arc<FormalCharacter>> {
        self.memo.character_with(rs, lambda, limits, |rs, lambda, limits| {
            self.load_or_compute(rs, lambda, limits).map(Arc::new)
        })
    }
}
