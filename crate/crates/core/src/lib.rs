//! Exact computation of character codegrees, codegree graphs, prime graphs,
//! and Frobenius digraphs of finite groups built from a declarative
//! construction language, with decision procedures for graph realizability
//! and minimality and a corpus verifier for the structural invariants these
//! objects satisfy.

pub mod analysis;
pub mod chartab;
pub mod checks;
pub mod element;
pub mod error;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod modular;
pub mod spec;

pub use analysis::{analyze, Analysis, AnalysisConfig};
pub use chartab::{character_table, CharacterTable};
pub use checks::{default_corpus, run_corpus, Report};
pub use element::{Element, Layout};
pub use error::{BuildError, GraphError, GroupError, TableError};
pub use graph::{Digraph, LabeledGraph};
pub use group::{FiniteGroup, SubgroupHandle};
pub use spec::{ActionSpec, GroupSpec};
