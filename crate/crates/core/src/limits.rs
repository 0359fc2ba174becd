use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Size guards for the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_faces: usize,
    /// Generator bound for the homology and inclusion-exclusion oracles.
    pub max_oracle_generators: usize,
    pub max_oracle_variables: usize,
    pub max_power: usize,
    /// Node budget for the recursive irreducible decomposition.
    pub max_split_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 20,
            max_faces: 4096,
            max_oracle_generators: 25,
            max_oracle_variables: 14,
            max_power: 4,
            max_split_nodes: 2_000_000,
        }
    }
}

impl Limits {
    /// Vertex and face counts of an input complex.
    pub fn check_instance(&self, delta: &SimplicialComplex) -> Result<()> {
        check("vertex count", delta.n(), self.max_vertices)?;
        check("face count", delta.face_count(), self.max_faces)
    }

    /// No guards at all; for trusted internal callers.
    pub fn unlimited() -> Self {
        Limits {
            max_vertices: 64,
            max_faces: usize::MAX,
            max_oracle_generators: usize::MAX,
            max_oracle_variables: usize::MAX,
            max_power: usize::MAX,
            max_split_nodes: usize::MAX,
        }
    }
}

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Guard {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
