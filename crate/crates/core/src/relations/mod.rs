//! Linear canonical relations `X ← Y`, stored as Lagrangian subspaces of
//! `X × Ȳ` with the target block first.

mod factor;
mod rigid;

pub use factor::{factor, factor_minimal, Factorization};
pub(crate) use rigid::projector_direct;
pub use rigid::{
    graph, graph_via_compose, projector, reduced_product, reduction_relation, unit_counit, ungraph,
    ungraph_via_compose,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::symplectic::SymplecticSpace;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalRelation {
    target: SymplecticSpace,
    source: SymplecticSpace,
    body: Subspace,
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

impl CanonicalRelation {
    /// Validates that `body` is Lagrangian in `target × sourcē`.
    pub fn new(target: SymplecticSpace, source: SymplecticSpace, body: Subspace) -> Result<Self> {
        let rel = CanonicalRelation { target, source, body };
        rel.ambient().require_lagrangian(&rel.body)?;
        Ok(rel)
    }

    /// For bodies that are Lagrangian by construction.
    pub(crate) fn assemble(target: SymplecticSpace, source: SymplecticSpace, body: Subspace) -> Self {
        let rel = CanonicalRelation { target, source, body };
        assert!(
            rel.ambient().is_lagrangian(&rel.body).unwrap_or(false),
            "constructed relation body is not Lagrangian"
        );
        rel
    }

    pub fn identity(x: &SymplecticSpace) -> Self {
        CanonicalRelation {
            target: x.clone(),
            source: x.clone(),
            body: diagonal(x.dim()),
        }
    }

    /// The Lagrangian `l` of `x` as a morphism `x ← 1`.
    pub fn from_lagrangian(x: &SymplecticSpace, l: &Subspace) -> Result<Self> {
        CanonicalRelation::new(x.clone(), SymplecticSpace::unit(), l.clone())
    }

    pub fn target(&self) -> &SymplecticSpace {
        &self.target
    }

    pub fn source(&self) -> &SymplecticSpace {
        &self.source
    }

    pub fn body(&self) -> &Subspace {
        &self.body
    }

    /// `target × sourcē`, the space the body is Lagrangian in.
    pub fn ambient(&self) -> SymplecticSpace {
        self.target.product(&self.source.dual())
    }

    pub fn is_endomorphism(&self) -> bool {
        self.target == self.source
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.body == diagonal(self.target.dim())
    }

    fn target_axes(&self) -> Vec<usize> {
        range(0, self.target.dim())
    }

    fn source_axes(&self) -> Vec<usize> {
        range(self.target.dim(), self.source.dim())
    }

    /// `{y : (0, y) ∈ f}`.
    pub fn kernel(&self) -> Subspace {
        let slice = Subspace::coordinate(self.body.ambient(), &self.source_axes());
        self.body
            .intersect(&slice)
            .expect("same ambient")
            .project(&self.source_axes())
    }

    /// `{x : (x, 0) ∈ f}`.
    pub fn indeterminacy(&self) -> Subspace {
        let slice = Subspace::coordinate(self.body.ambient(), &self.target_axes());
        self.body
            .intersect(&slice)
            .expect("same ambient")
            .project(&self.target_axes())
    }

    /// Projection of the body to the source.
    pub fn domain(&self) -> Subspace {
        self.body.project(&self.source_axes())
    }

    /// Projection of the body to the target.
    pub fn image(&self) -> Subspace {
        self.body.project(&self.target_axes())
    }

    pub fn transpose(&self) -> Self {
        let axes: Vec<usize> = self.source_axes().into_iter().chain(self.target_axes()).collect();
        CanonicalRelation {
            target: self.source.clone(),
            source: self.target.clone(),
            body: self.body.project(&axes),
        }
    }

    /// The same body regarded as a morphism `X̄ ← Ȳ`.
    pub fn dual_morphism(&self) -> Self {
        CanonicalRelation {
            target: self.target.dual(),
            source: self.source.dual(),
            body: self.body.clone(),
        }
    }

    /// Monoidal product `X × X' ← Y × Y'`.
    pub fn product(&self, other: &CanonicalRelation) -> Self {
        let (nx, ny) = (self.target.dim(), self.source.dim());
        let (mx, my) = (other.target.dim(), other.source.dim());
        let raw = self.body.product(&other.body);
        let axes: Vec<usize> = range(0, nx)
            .into_iter()
            .chain(range(nx + ny, mx))
            .chain(range(nx, ny))
            .chain(range(nx + ny + mx, my))
            .collect();
        CanonicalRelation {
            target: self.target.product(&other.target),
            source: self.source.product(&other.source),
            body: raw.project(&axes),
        }
    }

    pub fn classify(&self) -> MorphismClass {
        let single_valued = self.indeterminacy().is_zero();
        let injective = self.kernel().is_zero();
        let surjective = self.image().is_full();
        let everywhere_defined = self.domain().is_full();
        MorphismClass {
            is_reduction: single_valued && surjective,
            is_coreduction: injective && everywhere_defined,
            single_valued,
            injective,
            surjective,
            everywhere_defined,
        }
    }

    pub fn is_reduction(&self) -> bool {
        self.classify().is_reduction
    }

    pub fn is_coreduction(&self) -> bool {
        self.classify().is_coreduction
    }

    /// Single-valued, injective, surjective and everywhere defined.
    pub fn is_invertible(&self) -> bool {
        let c = self.classify();
        c.is_reduction && c.is_coreduction
    }
}

/// `{(x, x)}` inside `Q^n × Q^n`.
pub(crate) fn diagonal(n: usize) -> Subspace {
    let mut m = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        m[(i, i)] = crate::linalg::int(1);
        m[(i, n + i)] = crate::linalg::int(1);
    }
    Subspace::row_space(&m)
}

/// Functional properties of a relation, and the two derived classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MorphismClass {
    /// Single-valued and surjective.
    pub is_reduction: bool,
    /// Injective and everywhere defined.
    pub is_coreduction: bool,
    pub single_valued: bool,
    pub injective: bool,
    pub surjective: bool,
    pub everywhere_defined: bool,
}

pub fn make_relation(x: &SymplecticSpace, y: &SymplecticSpace, body: &Subspace) -> Result<CanonicalRelation> {
    CanonicalRelation::new(x.clone(), y.clone(), body.clone())
}

pub fn identity(x: &SymplecticSpace) -> CanonicalRelation {
    CanonicalRelation::identity(x)
}

fn check_composable(f: &CanonicalRelation, g: &CanonicalRelation) -> Result<()> {
    if f.source != g.target {
        return Err(Error::NotComposable(format!(
            "source of dimension {} does not match target of dimension {}",
            f.source.dim(),
            g.target.dim()
        )));
    }
    Ok(())
}

/// `f ∘ g = {(x, z) : ∃y, (x, y) ∈ f, (y, z) ∈ g}`.
///
/// Elements of the fibre `(f × g) ∩ (X × Δ_Y × Z̄)` are parametrized by
/// coefficient pairs `(α, β)` on the two bases with matching `Y` parts.
pub fn compose(f: &CanonicalRelation, g: &CanonicalRelation) -> Result<CanonicalRelation> {
    check_composable(f, g)?;
    let (nx, ny, nz) = (f.target.dim(), f.source.dim(), g.source.dim());
    let fb = f.body.basis();
    let gb = g.body.basis();
    let matching = fb
        .select_cols(&range(nx, ny))
        .vstack(&gb.select_cols(&range(0, ny)).neg())?;
    let coefficients = kernel(&matching.transpose());
    let ends = fb.select_cols(&range(0, nx)).block_diag(&gb.select_cols(&range(ny, nz)));
    let body = Subspace::row_space(&coefficients.basis().mul(&ends)?);
    Ok(CanonicalRelation::assemble(f.target.clone(), g.source.clone(), body))
}

/// `dim {y : (0, y) ∈ f, (y, 0) ∈ g}`.
pub fn pair_excess(f: &CanonicalRelation, g: &CanonicalRelation) -> Result<usize> {
    check_composable(f, g)?;
    Ok(f.kernel().intersect(&g.indeterminacy())?.dim())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Congeniality {
    pub monic: bool,
    pub transversal: bool,
}

/// Monicity and transversality of a composable pair, each computed in
/// `X × Y × Y × Z` independently of the other.
pub fn congeniality(f: &CanonicalRelation, g: &CanonicalRelation) -> Result<Congeniality> {
    check_composable(f, g)?;
    let (nx, ny, nz) = (f.target.dim(), f.source.dim(), g.source.dim());
    let total = nx + 2 * ny + nz;
    let fg = f.body.product(&g.body);
    let middle = diagonal(ny).embed(nx, total);

    let monic = fg.intersect(&middle)?.is_zero();

    let outer = Subspace::coordinate(total, &range(0, nx))
        .sum(&middle)?
        .sum(&Subspace::coordinate(total, &range(nx + 2 * ny, nz)))?;
    let transversal = fg.sum(&outer)?.is_full();

    assert_eq!(monic, transversal, "monic and transversal disagree on a canonical pair");
    Ok(Congeniality { monic, transversal })
}

pub fn transpose(f: &CanonicalRelation) -> CanonicalRelation {
    f.transpose()
}

pub fn dual_morphism(f: &CanonicalRelation) -> CanonicalRelation {
    f.dual_morphism()
}

pub fn product(f: &CanonicalRelation, g: &CanonicalRelation) -> CanonicalRelation {
    f.product(g)
}

pub fn classify_morphism(f: &CanonicalRelation) -> MorphismClass {
    f.classify()
}

/// `dim(γ_f ∩ Δ_X)`.
pub fn fixed_space_dim(f: &CanonicalRelation) -> Result<usize> {
    if !f.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    Ok(f.body.intersect(&diagonal(f.target.dim()))?.dim())
}
