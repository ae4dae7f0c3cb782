//! Poset cache files.
//!
//! One JSON file per space holds the canonical symbol list, the cover
//! edges, and the graded ranks, plus a checksum over that payload. Loads
//! validate the spec echo, the checksum, and (inside
//! `BruhatPoset::from_parts`) the gradedness and an order spot-check;
//! anything inconsistent triggers a rebuild with a warning, never trust.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use isogr_core::bruhat::BruhatPoset;
use isogr_core::grassmannian::Grassmannian;
use isogr_core::Error;

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone)]
pub struct SpecEcho {
    pub lie_type: String,
    pub m: usize,
    pub n: usize,
}

#[derive(Serialize, Deserialize)]
pub struct PosetFile {
    pub spec: SpecEcho,
    pub symbols: Vec<Vec<usize>>,
    pub covers: Vec<(usize, usize)>,
    pub rank: Vec<usize>,
    #[serde(default)]
    pub checksum: Option<String>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn payload_checksum(file: &PosetFile) -> String {
    let unsigned = PosetFile {
        spec: file.spec.clone(),
        symbols: file.symbols.clone(),
        covers: file.covers.clone(),
        rank: file.rank.clone(),
        checksum: None,
    };
    let bytes = serde_json::to_vec(&unsigned).expect("serialize");
    format!("{:016x}", fnv1a64(&bytes))
}

pub fn spec_echo(spec: &Grassmannian) -> SpecEcho {
    SpecEcho {
        lie_type: spec.lie_type().to_string(),
        m: spec.m(),
        n: spec.n(),
    }
}

pub fn to_file(poset: &BruhatPoset) -> PosetFile {
    let mut file = PosetFile {
        spec: spec_echo(poset.spec()),
        symbols: poset.symbols().iter().map(|s| s.elems().to_vec()).collect(),
        covers: poset.covers().to_vec(),
        rank: (0..poset.len()).map(|i| poset.rank_of_idx(i)).collect(),
        checksum: None,
    };
    file.checksum = Some(payload_checksum(&file));
    file
}

pub fn from_file(spec: &Grassmannian, file: &PosetFile) -> Result<BruhatPoset, Error> {
    if file.spec != spec_echo(spec) {
        return Err(Error::PreconditionViolated("cache spec echo mismatch"));
    }
    match &file.checksum {
        Some(sum) if *sum == payload_checksum(file) => {}
        _ => return Err(Error::PreconditionViolated("cache checksum mismatch")),
    }
    let symbols = file
        .symbols
        .iter()
        .map(|e| spec.symbol(e))
        .collect::<Result<Vec<_>, _>>()?;
    BruhatPoset::from_parts(spec, symbols, file.covers.clone(), file.rank.clone())
}

pub fn cache_path(dir: &Path, spec: &Grassmannian) -> PathBuf {
    dir.join(format!(
        "{}_{}_{}.poset.json",
        spec.lie_type(),
        spec.m(),
        spec.n()
    ))
}

/// Loads the poset from the cache directory, or builds it (and stores it)
/// when missing or invalid. With `dir = None` the cache is bypassed and
/// results are identical.
pub fn load_or_build(
    spec: &Grassmannian,
    cap: u128,
    dir: Option<&Path>,
    warn: &mut dyn Write,
) -> Result<BruhatPoset, Error> {
    let Some(dir) = dir else {
        return BruhatPoset::build(spec, cap);
    };
    let path = cache_path(dir, spec);
    if path.exists() {
        match std::fs::read(&path) {
            Ok(bytes) => match serde_json::from_slice::<PosetFile>(&bytes) {
                Ok(file) => match from_file(spec, &file) {
                    Ok(poset) => return Ok(poset),
                    Err(e) => {
                        let _ = writeln!(
                            warn,
                            "warning: cache at {} is invalid ({e}); rebuilding",
                            path.display()
                        );
                    }
                },
                Err(e) => {
                    let _ = writeln!(
                        warn,
                        "warning: cache at {} is unreadable ({e}); rebuilding",
                        path.display()
                    );
                }
            },
            Err(e) => {
                let _ = writeln!(
                    warn,
                    "warning: cannot read cache at {} ({e}); rebuilding",
                    path.display()
                );
            }
        }
    }
    let poset = BruhatPoset::build(spec, cap)?;
    let file = to_file(&poset);
    match serde_json::to_vec(&file) {
        Ok(bytes) => {
            if let Err(e) = std::fs::create_dir_all(dir).and_then(|()| std::fs::write(&path, bytes))
            {
                let _ = writeln!(
                    warn,
                    "warning: cannot write cache at {} ({e})",
                    path.display()
                );
            }
        }
        Err(e) => {
            let _ = writeln!(warn, "warning: cannot serialize cache ({e})");
        }
    }
    Ok(poset)
}
