//! On-disk character table cache, keyed by GroupSpec content digest.
//!
//! One JSON document per group, written atomically, canonical key order,
//! newline-terminated. A cache hit skips all table computation.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CharacterTable, LiftedCharacter};
use crate::error::TableError;

#[derive(Debug, Serialize, Deserialize)]
struct CachedCharacter {
    degree: u64,
    mults: Vec<Vec<u64>>,
    kernel_classes: Vec<u32>,
    kernel_order: u64,
    codegree: u64,
    theta: Vec<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheDocument {
    digest: String,
    order: u64,
    p: u64,
    z: u64,
    exponent: u64,
    class_sizes: Vec<u64>,
    class_orders: Vec<u64>,
    inverse_class: Vec<u32>,
    characters: Vec<CachedCharacter>,
    codegrees: Vec<u64>,
}

pub fn cache_path(dir: &Path, digest: &str) -> PathBuf {
    dir.join(format!("{digest}.table.json"))
}

pub fn store(dir: &Path, digest: &str, table: &CharacterTable) -> Result<(), TableError> {
    std::fs::create_dir_all(dir)?;
    let doc = CacheDocument {
        digest: digest.to_string(),
        order: table.order,
        p: table.p,
        z: table.z,
        exponent: table.exponent,
        class_sizes: table.class_sizes.clone(),
        class_orders: table.class_orders.clone(),
        inverse_class: table.inverse_class.clone(),
        characters: table
            .characters
            .iter()
            .zip(&table.theta)
            .map(|(c, theta)| CachedCharacter {
                degree: c.degree,
                mults: c.mults.clone(),
                kernel_classes: c.kernel_classes.clone(),
                kernel_order: c.kernel_order,
                codegree: c.codegree,
                theta: theta.clone(),
            })
            .collect(),
        codegrees: table.codegrees.clone(),
    };
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| TableError::CacheParse(e.to_string()))?;
    text.push('\n');
    let path = cache_path(dir, digest);
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}

/// Load a cached table; `Ok(None)` when absent, an error when present but
/// inconsistent with the digest.
pub fn load(dir: &Path, digest: &str) -> Result<Option<CharacterTable>, TableError> {
    let path = cache_path(dir, digest);
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let doc: CacheDocument =
        serde_json::from_str(&text).map_err(|e| TableError::CacheParse(e.to_string()))?;
    if doc.digest != digest {
        return Err(TableError::CacheParse(format!(
            "digest mismatch in {}: {} != {digest}",
            path.display(),
            doc.digest
        )));
    }
    let (characters, theta): (Vec<_>, Vec<_>) = doc
        .characters
        .into_iter()
        .map(|c| {
            (
                LiftedCharacter {
                    degree: c.degree,
                    mults: c.mults,
                    kernel_classes: c.kernel_classes,
                    kernel_order: c.kernel_order,
                    codegree: c.codegree,
                },
                c.theta,
            )
        })
        .unzip();
    Ok(Some(CharacterTable {
        order: doc.order,
        p: doc.p,
        z: doc.z,
        exponent: doc.exponent,
        class_sizes: doc.class_sizes,
        class_orders: doc.class_orders,
        inverse_class: doc.inverse_class,
        characters,
        theta,
        codegrees: doc.codegrees,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::element::{Element, Layout};
    use crate::group::{FiniteGroup, DEFAULT_ELEMENT_LIMIT};

    #[test]
    fn roundtrip_preserves_table_and_bytes() {
        let g = FiniteGroup::from_generators(
            Layout::permutation(3),
            vec![Element::from_vec(vec![1, 0, 2]), Element::from_vec(vec![1, 2, 0])],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap();
        let table = character_table(&g).unwrap();
        let dir = tempfile::tempdir().unwrap();
        store(dir.path(), "testdigest", &table).unwrap();
        let first = std::fs::read(cache_path(dir.path(), "testdigest")).unwrap();
        assert_eq!(first.last(), Some(&b'\n'));
        let loaded = load(dir.path(), "testdigest").unwrap().unwrap();
        assert_eq!(loaded.codegrees, table.codegrees);
        assert_eq!(loaded.characters, table.characters);
        assert_eq!(loaded.theta, table.theta);
        store(dir.path(), "testdigest", &loaded).unwrap();
        let second = std::fs::read(cache_path(dir.path(), "testdigest")).unwrap();
        assert_eq!(first, second);
        assert!(load(dir.path(), "otherdigest").unwrap().is_none());
    }
}
