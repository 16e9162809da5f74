//! On-disk cache of character tables.
//!
//! The key is a SHA-256 digest of the group's sorted element list. The element
//! set determines the multiplication table, so two specs generating the same
//! permutation group share an entry; isomorphic groups on different points do
//! not.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use eigenone::{CharacterTable, CycloElement, Perm, PermGroup};
use log::{info, warn};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliResult;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub format: u32,
    pub key: String,
    pub order: usize,
    /// A representative of each class, in cycle notation.
    pub classes: Vec<String>,
    pub irr: Vec<Vec<CycloElement>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// An entry existed but was unreadable, stale or failed the spot check.
    Rejected,
}

pub fn default_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("EIGENONE_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    let base = std::env::var("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|_| std::env::var("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(|_| std::env::temp_dir());
    base.join("eigenone")
}

pub fn group_key(g: &PermGroup) -> String {
    let mut elems: Vec<&Perm> = g.elements().iter().collect();
    elems.sort_by(|a, b| a.images().cmp(b.images()));
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for p in elems {
        for &x in p.images() {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

fn load(group: &Arc<PermGroup>, path: &Path, key: &str) -> Result<CharacterTable, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if entry.format != CACHE_VERSION {
        return Err(format!(
            "version {} (expected {CACHE_VERSION})",
            entry.format
        ));
    }
    if entry.key != key || entry.order != group.order() {
        return Err("key or order mismatch".into());
    }
    let k = group.class_count();
    if entry.classes.len() != k || entry.irr.iter().any(|r| r.len() != k) {
        return Err("wrong number of classes".into());
    }
    let mut position = vec![usize::MAX; k];
    for (i, rep) in entry.classes.iter().enumerate() {
        let p = Perm::parse_cycles(rep, Some(group.degree())).map_err(|e| e.to_string())?;
        let x = group
            .index_of(&p)
            .ok_or("class representative not in group")?;
        position[group.class_of(x)] = i;
    }
    if position.contains(&usize::MAX) {
        return Err("classes do not match".into());
    }
    let irr = entry
        .irr
        .iter()
        .map(|row| position.iter().map(|&i| row[i].clone()).collect())
        .collect();
    CharacterTable::from_rows(group.clone(), irr).map_err(|e| e.to_string())
}

fn store(table: &CharacterTable, dir: &Path, key: &str) -> CliResult<()> {
    let g = table.group();
    let entry = CacheEntry {
        format: CACHE_VERSION,
        key: key.to_string(),
        order: g.order(),
        classes: g
            .conjugacy_classes()
            .iter()
            .map(|c| g.element(c.representative).to_cycle_string())
            .collect(),
        irr: table.irr().to_vec(),
    };
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{key}.json.tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    fs::rename(&tmp, entry_path(dir, key))?;
    Ok(())
}

/// The character table of `group`, from the cache in `dir` when possible.
pub fn table_for(
    group: Arc<PermGroup>,
    dir: Option<&Path>,
) -> CliResult<(CharacterTable, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((CharacterTable::compute(group)?, CacheStatus::Disabled));
    };
    let key = group_key(&group);
    let path = entry_path(dir, &key);
    let mut status = CacheStatus::Miss;
    if path.exists() {
        match load(&group, &path, &key) {
            Ok(t) => {
                info!("cache hit {key}");
                return Ok((t, CacheStatus::Hit));
            }
            Err(e) => {
                warn!("discarding cache entry {}: {e}", path.display());
                status = CacheStatus::Rejected;
            }
        }
    }
    let table = CharacterTable::compute(group)?;
    if let Err(e) = store(&table, dir, &key) {
        warn!("could not write cache entry: {e}");
    }
    Ok((table, status))
}
