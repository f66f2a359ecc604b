//! Declarative group construction language: spec trees, content digests, and
//! the builders for the witness families.

mod build;
mod witness;

pub use build::build;
pub use witness::{
    alias_spec, builtin_aliases, five_cycle_instance, five_cycle_spec, make_frobenius,
    make_two_frobenius, qian_family, qian_family_spec,
};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::BuildError;

/// Action of a semidirect complement on its kernel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionSpec {
    /// One matrix per kernel block per complement generator, row-major,
    /// entries reduced mod the block field. The kernel must be a product of
    /// elementary abelian blocks.
    Matrix { matrices: Vec<Vec<Vec<u64>>> },
    /// Images of the kernel generators under each complement generator, as
    /// words in kernel generator indices.
    Automorphism { images: Vec<Vec<Vec<u32>>> },
}

/// Construction tree for a finite group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: u64 },
    ElementaryAbelian { p: u64, k: u32 },
    Symmetric { degree: u32 },
    Alternating { degree: u32 },
    PermutationGroup { degree: u32, generators: Vec<Vec<u32>> },
    DirectProduct { factors: Vec<GroupSpec> },
    Semidirect { kernel: Box<GroupSpec>, complement: Box<GroupSpec>, action: ActionSpec },
    /// Semidirect product verified fixed-point-free (kernel is the Frobenius
    /// kernel, complement the Frobenius complement).
    Frobenius { kernel: Box<GroupSpec>, complement: Box<GroupSpec>, action: ActionSpec },
    /// bottom ⋊ (middle ⋊ top) with both layer actions verified
    /// fixed-point-free and the result classified as 2-Frobenius.
    TwoFrobenius {
        bottom: Box<GroupSpec>,
        middle: Box<GroupSpec>,
        top: Box<GroupSpec>,
        top_on_middle: ActionSpec,
        /// One entry per complement generator: middle generators first, then
        /// top generators.
        complement_on_bottom: ActionSpec,
    },
}

impl GroupSpec {
    /// Content digest: SHA-256 of the canonical (compact JSON) serialization.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("spec serializes");
        let mut hasher = Sha256::new();
        hasher.update(canonical.as_bytes());
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, BuildError> {
        serde_json::from_str(text).map_err(|e| BuildError::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f21_spec() -> GroupSpec {
        GroupSpec::Frobenius {
            kernel: Box::new(GroupSpec::Cyclic { n: 7 }),
            complement: Box::new(GroupSpec::Cyclic { n: 3 }),
            action: ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
        }
    }

    #[test]
    fn json_roundtrip() {
        let spec = GroupSpec::DirectProduct {
            factors: vec![GroupSpec::ElementaryAbelian { p: 31, k: 2 }, f21_spec()],
        };
        let parsed = GroupSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(parsed, spec);
        assert_eq!(parsed.digest(), spec.digest());
    }

    #[test]
    fn digest_distinguishes_specs() {
        assert_ne!(
            GroupSpec::Cyclic { n: 6 }.digest(),
            GroupSpec::Cyclic { n: 7 }.digest()
        );
        assert_eq!(GroupSpec::Cyclic { n: 6 }.digest().len(), 64);
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            GroupSpec::from_json("{\"kind\": \"mystery\"}"),
            Err(BuildError::Parse(_))
        ));
    }
}
