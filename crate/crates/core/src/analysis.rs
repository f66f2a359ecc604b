//! Per-group analysis pipeline: build, character table (cache-aware), graphs,
//! and the Frobenius digraph, with computation stats for cache observability.

use std::path::PathBuf;

use thiserror::Error;

use crate::chartab::{cache, character_table, CharacterTable};
use crate::error::{BuildError, GroupError, TableError};
use crate::graph::{
    codegree_graph_from_set, frobenius_digraph, gk_graph, FrobeniusDigraph, LabeledGraph,
};
use crate::group::{derived_series, FiniteGroup, DEFAULT_ELEMENT_LIMIT};
use crate::spec::{build, GroupSpec};

pub const DEFAULT_HALL_RETRIES: usize = 64;

#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub limit: usize,
    pub hall_retries: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self { limit: DEFAULT_ELEMENT_LIMIT, hall_retries: DEFAULT_HALL_RETRIES, cache_dir: None }
    }
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Everything the checks and the CLI surface need about one group.
pub struct Analysis {
    pub digest: String,
    pub order: u64,
    pub group: FiniteGroup,
    pub table: CharacterTable,
    /// True when the table came from the cache rather than being computed.
    pub table_from_cache: bool,
    pub solvable: bool,
    pub prime_graph: LabeledGraph,
    pub codegree_graph: LabeledGraph,
    pub digraph: FrobeniusDigraph,
}

/// Build and analyze one spec. The character table is taken from the cache
/// when a cache directory is configured and holds the spec digest.
pub fn analyze(spec: &GroupSpec, config: &AnalysisConfig) -> Result<Analysis, AnalyzeError> {
    let group = build_spec(spec, config)?;
    let digest = spec.digest();
    let mut table_from_cache = false;
    let table = match &config.cache_dir {
        Some(dir) => match cache::load(dir, &digest)? {
            Some(t) => {
                table_from_cache = true;
                t
            }
            None => {
                let t = character_table(&group)?;
                cache::store(dir, &digest, &t)?;
                t
            }
        },
        None => character_table(&group)?,
    };
    assert_eq!(table.order, group.order(), "cached table order must match the group");

    // class element orders determine the prime graph, so a cache hit skips
    // the conjugacy computation entirely
    let prime_graph = gk_graph(&dedup(&table.class_orders));
    let codegree_graph = codegree_graph_from_set(&table.codegrees);
    let digraph = frobenius_digraph(&group, &codegree_graph, config.hall_retries)?;
    let (_, solvable) = derived_series(&group);
    Ok(Analysis {
        digest,
        order: group.order(),
        group,
        table,
        table_from_cache,
        solvable,
        prime_graph,
        codegree_graph,
        digraph,
    })
}

/// Build from a spec, honoring witness-specific assertion paths.
fn build_spec(spec: &GroupSpec, config: &AnalysisConfig) -> Result<FiniteGroup, BuildError> {
    if *spec == crate::spec::five_cycle_spec() {
        crate::spec::five_cycle_instance(config.limit)
    } else {
        build(spec, config.limit)
    }
}

fn dedup(values: &[u64]) -> Vec<u64> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::alias_spec;

    #[test]
    fn s4_analysis_matches_expectations() {
        let a = analyze(&alias_spec("s4").unwrap(), &AnalysisConfig::default()).unwrap();
        assert_eq!(a.order, 24);
        assert!(a.solvable);
        assert_eq!(a.table.codegrees, vec![1, 2, 3, 8]);
        assert_eq!(a.prime_graph.vertices, vec![2, 3]);
        assert!(a.prime_graph.edges.is_empty());
        assert_eq!(a.codegree_graph, a.prime_graph);
        assert_eq!(a.digraph.digraph.arcs, vec![(2, 3)]);
    }

    #[test]
    fn cache_hit_skips_table_computation() {
        let dir = tempfile::tempdir().unwrap();
        let config = AnalysisConfig {
            cache_dir: Some(dir.path().to_path_buf()),
            ..AnalysisConfig::default()
        };
        let spec = alias_spec("s3").unwrap();
        let cold = analyze(&spec, &config).unwrap();
        assert!(!cold.table_from_cache);
        let warm = analyze(&spec, &config).unwrap();
        assert!(warm.table_from_cache);
        assert_eq!(warm.table.codegrees, cold.table.codegrees);
        assert_eq!(warm.prime_graph, cold.prime_graph);
    }
}
