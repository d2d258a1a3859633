use super::{compose, diagonal, identity, CanonicalRelation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::symplectic::{ReductionData, SymplecticSpace};

/// `δ_X : X × X̄ ← 1` and `ε_X : 1 ← X̄ × X`, both with the diagonal as body.
pub fn unit_counit(x: &SymplecticSpace) -> (CanonicalRelation, CanonicalRelation) {
    let n = x.dim();
    let unit = SymplecticSpace::unit();
    let delta = CanonicalRelation::assemble(x.product(&x.dual()), unit.clone(), diagonal(n));
    let epsilon = CanonicalRelation::assemble(unit, x.dual().product(x), diagonal(n));
    (delta, epsilon)
}

/// `γ_f : X × Ȳ ← 1`; same body as `f`.
pub fn graph(f: &CanonicalRelation) -> CanonicalRelation {
    CanonicalRelation {
        target: f.ambient(),
        source: SymplecticSpace::unit(),
        body: f.body.clone(),
    }
}

/// Inverse of [`graph`], given the factors `x` and `y` of the target.
pub fn ungraph(gamma: &CanonicalRelation, x: &SymplecticSpace, y: &SymplecticSpace) -> Result<CanonicalRelation> {
    if !gamma.source.is_unit() {
        return Err(Error::NotComposable("a graph must have the unit object as source".into()));
    }
    if gamma.target != x.product(&y.dual()) {
        return Err(Error::NotComposable("graph target does not split as X × Ȳ".into()));
    }
    Ok(CanonicalRelation {
        target: x.clone(),
        source: y.clone(),
        body: gamma.body.clone(),
    })
}

/// `γ_f = (f ⊗ 1_Ȳ) δ_Y`.
pub fn graph_via_compose(f: &CanonicalRelation) -> Result<CanonicalRelation> {
    let (delta, _) = unit_counit(&f.source);
    compose(&f.product(&identity(&f.source.dual())), &delta)
}

/// `f_γ = (1_X ⊗ ε_Y)(γ ⊗ 1_Y)`.
pub fn ungraph_via_compose(
    gamma: &CanonicalRelation,
    x: &SymplecticSpace,
    y: &SymplecticSpace,
) -> Result<CanonicalRelation> {
    if !gamma.source.is_unit() {
        return Err(Error::NotComposable("a graph must have the unit object as source".into()));
    }
    let (_, epsilon) = unit_counit(y);
    compose(&identity(x).product(&epsilon), &gamma.product(&identity(y)))
}

/// `γ₁ ∗ γ₂ = (1_X ⊗ ε_Y ⊗ 1_Z̄)(γ₁ ⊗ γ₂)` for `γ₁ : X × Ȳ ← 1`,
/// `γ₂ : Y × Z̄ ← 1`.
pub fn reduced_product(
    g1: &CanonicalRelation,
    g2: &CanonicalRelation,
    y: &SymplecticSpace,
) -> Result<CanonicalRelation> {
    if !g1.source.is_unit() || !g2.source.is_unit() {
        return Err(Error::NotComposable("reduced product takes graphs with unit source".into()));
    }
    let mismatch = || Error::NotComposable("graphs do not share the middle space".into());
    let nx = g1.target.dim().checked_sub(y.dim()).ok_or_else(mismatch)?;
    let (x, y_bar) = g1.target.split(nx).map_err(|_| mismatch())?;
    let (y2, z_bar) = g2.target.split(y.dim()).map_err(|_| mismatch())?;
    if y_bar != y.dual() || y2 != *y {
        return Err(mismatch());
    }
    let (_, epsilon) = unit_counit(y);
    let contract = identity(&x).product(&epsilon).product(&identity(&z_bar));
    compose(&contract, &g1.product(g2))
}

/// `ρ^C = {(πc, c) : c ∈ C}`, the projection `C → X^C` as a relation
/// `X^C ← X`.
pub fn reduction_relation(rd: &ReductionData) -> CanonicalRelation {
    let c = rd.coisotropic.basis();
    let projected = c.mul(&rd.projection.transpose()).expect("projection has dim X columns");
    let rows = projected.hstack(c).expect("one row per basis vector of C");
    CanonicalRelation::assemble(rd.reduced.clone(), rd.ambient.clone(), Subspace::row_space(&rows))
}

/// `R^C = (ρ^C)ᵗ ρ^C = {(x, y) ∈ C × C : x − y ∈ C⊥}`.
pub fn projector(rd: &ReductionData) -> CanonicalRelation {
    let rho = reduction_relation(rd);
    compose(&rho.transpose(), &rho).expect("ρ^C is composable with its transpose")
}

/// `{(x, y) ∈ C × C : x − y ∈ C⊥}` spelled out directly; test oracle for [`projector`].
pub(crate) fn projector_direct(rd: &ReductionData) -> Subspace {
    let n = rd.ambient.dim();
    let along: Vec<Vec<_>> = rd
        .coisotropic
        .basis_vectors()
        .into_iter()
        .map(|v| v.iter().chain(v.iter()).cloned().collect())
        .collect();
    let shifts: Vec<Vec<_>> = rd
        .perp
        .basis_vectors()
        .into_iter()
        .map(|v| crate::linalg::zero_vec(n).into_iter().chain(v).collect())
        .collect();
    let rows: Vec<Vec<_>> = along.into_iter().chain(shifts).collect();
    Subspace::row_space(&Matrix::from_rows(2 * n, rows).expect("rows have 2n entries"))
}
