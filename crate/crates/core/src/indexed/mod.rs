//! Indexed canonical relations `(f, k)`: the normal form of morphisms in the
//! category generated by canonical relations modulo congenial collapse.
//! Composition adds the excess of the pair to the indices.

mod grassmannian;
mod quotient;

pub use grassmannian::{
    igraph_compose, indexed_reduce, ishift, normal_form_hyper, sabot_leq, HyperNormalForm, IndexedLagrangian,
};
pub use quotient::{deformation_family, lift_indexed, DeformationFamily};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relations::{compose, fixed_space_dim, pair_excess, reduction_relation, CanonicalRelation};
use crate::symplectic::{ReductionData, SymplecticSpace};

/// Whether negative indices are admitted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexMode {
    #[default]
    Standard,
    Extended,
}

impl IndexMode {
    pub fn check(self, index: i64) -> Result<()> {
        if self == IndexMode::Standard && index < 0 {
            return Err(Error::NegativeIndex(index));
        }
        Ok(())
    }

    fn join(self, other: IndexMode) -> IndexMode {
        if self == IndexMode::Extended || other == IndexMode::Extended {
            IndexMode::Extended
        } else {
            IndexMode::Standard
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedCanonicalRelation {
    relation: CanonicalRelation,
    index: i64,
    mode: IndexMode,
}

impl IndexedCanonicalRelation {
    pub fn new(relation: CanonicalRelation, index: i64, mode: IndexMode) -> Result<Self> {
        mode.check(index)?;
        Ok(IndexedCanonicalRelation { relation, index, mode })
    }

    /// `(f, 0)` in standard mode.
    pub fn plain(relation: CanonicalRelation) -> Self {
        IndexedCanonicalRelation {
            relation,
            index: 0,
            mode: IndexMode::Standard,
        }
    }

    pub fn identity(x: &SymplecticSpace) -> Self {
        IndexedCanonicalRelation::plain(CanonicalRelation::identity(x))
    }

    pub fn relation(&self) -> &CanonicalRelation {
        &self.relation
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn mode(&self) -> IndexMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: IndexMode) -> Result<Self> {
        mode.check(self.index)?;
        self.mode = mode;
        Ok(self)
    }

    /// Same relation and index, ignoring the mode flag.
    pub fn same_value(&self, other: &IndexedCanonicalRelation) -> bool {
        self.relation == other.relation && self.index == other.index
    }
}

/// `(f', k')(f'', k'') = (f'f'', k' + k'' + E(f', f''))`.
pub fn icompose(a: &IndexedCanonicalRelation, b: &IndexedCanonicalRelation) -> Result<IndexedCanonicalRelation> {
    let relation = compose(&a.relation, &b.relation)?;
    let excess = pair_excess(&a.relation, &b.relation)? as i64;
    #[cfg(not(feature = "mutant-negate-excess"))]
    let index = a.index + b.index + excess;
    #[cfg(feature = "mutant-negate-excess")]
    let index = a.index + b.index - excess;
    IndexedCanonicalRelation::new(relation, index, a.mode.join(b.mode))
}

/// `(f' × f'', k' + k'')`.
pub fn iproduct(a: &IndexedCanonicalRelation, b: &IndexedCanonicalRelation) -> IndexedCanonicalRelation {
    IndexedCanonicalRelation {
        relation: a.relation.product(&b.relation),
        index: a.index + b.index,
        mode: a.mode.join(b.mode),
    }
}

/// `dim(γ_f ∩ Δ_X) + k`.
pub fn itrace(a: &IndexedCanonicalRelation) -> Result<i64> {
    Ok(fixed_space_dim(&a.relation)? as i64 + a.index)
}

/// `k'·(f, k) = (f, k' + k)`.
pub fn ishift_relation(a: &IndexedCanonicalRelation, j: i64) -> Result<IndexedCanonicalRelation> {
    IndexedCanonicalRelation::new(a.relation.clone(), a.index + j, a.mode)
}

/// `((ρ^C)ᵗ, −dim C⊥)`; needs extended mode unless `C⊥ = 0`.
pub fn itranspose_reduction(rd: &ReductionData, mode: IndexMode) -> Result<IndexedCanonicalRelation> {
    let rho = reduction_relation(rd);
    IndexedCanonicalRelation::new(rho.transpose(), -(rd.perp_dim() as i64), mode)
}

/// `(f⁻¹, −k)` for an invertible relation `f`.
pub fn iinvert(a: &IndexedCanonicalRelation) -> Result<IndexedCanonicalRelation> {
    if !a.relation.is_invertible() {
        return Err(Error::NotInvertible);
    }
    IndexedCanonicalRelation::new(a.relation.transpose(), -a.index, a.mode)
}
