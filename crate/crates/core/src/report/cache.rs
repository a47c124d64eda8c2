//! On-disk cache of closed-subsystem enumerations, one JSON file per
//! `(parent, normalization, dedup)` key. Writes go through a temporary file
//! and an atomic rename, so concurrent writers leave one complete file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::roots::RootSystem;
use crate::subalgebra::{enumerate_closed_subsystems, ClosedSubsystem};

use super::{ReportError, SCHEMA_VERSION};

#[derive(Serialize, Deserialize)]
struct Entry {
    schema_version: u32,
    g_label: String,
    normalization: String,
    dedup: bool,
    /// Root indices into the parent's sorted root list.
    subsystems: Vec<Vec<u16>>,
}

fn path_for(dir: &Path, g_label: &str, parent: &RootSystem, dedup: bool) -> PathBuf {
    let mode = if dedup { "classes" } else { "all" };
    dir.join(format!("{g_label}.{}.{mode}.v{SCHEMA_VERSION}.json", parent.normalization()))
}

fn load(path: &Path, g_label: &str, parent: &RootSystem, dedup: bool) -> Option<Vec<ClosedSubsystem>> {
    let text = fs::read_to_string(path).ok()?;
    let e: Entry = serde_json::from_str(&text).ok()?;
    let fresh = e.schema_version == SCHEMA_VERSION
        && e.g_label == g_label
        && e.normalization == parent.normalization().to_string()
        && e.dedup == dedup;
    if !fresh || e.subsystems.iter().flatten().any(|&i| i as usize >= parent.len()) {
        return None;
    }
    Some(e.subsystems.iter().map(|s| ClosedSubsystem::from_indices(parent, s)).collect())
}

fn store(dir: &Path, path: &Path, entry: &Entry) -> Result<(), ReportError> {
    let io = |e: std::io::Error| ReportError::Io(e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    serde_json::to_writer(&mut tmp, entry).map_err(|e| ReportError::Io(e.to_string()))?;
    tmp.flush().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Enumerates through the cache when `dir` is given.
pub fn cached_subsystems(
    dir: Option<&Path>,
    g_label: &str,
    parent: &RootSystem,
    dedup: bool,
) -> Result<Vec<ClosedSubsystem>, ReportError> {
    let Some(dir) = dir else {
        return Ok(enumerate_closed_subsystems(parent, dedup)?);
    };
    let path = path_for(dir, g_label, parent, dedup);
    if let Some(hit) = load(&path, g_label, parent, dedup) {
        return Ok(hit);
    }
    let found = enumerate_closed_subsystems(parent, dedup)?;
    let entry = Entry {
        schema_version: SCHEMA_VERSION,
        g_label: g_label.into(),
        normalization: parent.normalization().to_string(),
        dedup,
        subsystems: found.iter().map(|h| h.indices(parent)).collect(),
    };
    store(dir, &path, &entry)?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_type;

    #[test]
    fn hit_equals_miss() {
        let dir = tempfile::tempdir().unwrap();
        let b3 = build_type(&"B3".parse().unwrap()).unwrap();
        let miss = cached_subsystems(Some(dir.path()), "B3", &b3, true).unwrap();
        let hit = cached_subsystems(Some(dir.path()), "B3", &b3, true).unwrap();
        assert_eq!(miss, hit);
        assert_eq!(miss, enumerate_closed_subsystems(&b3, true).unwrap());
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn corrupt_file_is_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let a2 = build_type(&"A2".parse().unwrap()).unwrap();
        let path = path_for(dir.path(), "A2", &a2, false);
        fs::write(&path, "{not json").unwrap();
        let got = cached_subsystems(Some(dir.path()), "A2", &a2, false).unwrap();
        assert_eq!(got.len(), 5);
        assert!(load(&path, "A2", &a2, false).is_some());
    }
}
