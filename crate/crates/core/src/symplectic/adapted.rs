use serde::Serialize;

use super::SymplecticSpace;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// A Lagrangian containing the isotropic `iso`, extended greedily by the
/// first canonical basis vectors of `M⊥` outside `M`.
pub fn extend_to_lagrangian(x: &SymplecticSpace, iso: &Subspace) -> Result<Subspace> {
    x.check_subspace(iso)?;
    x.require_isotropic(iso)?;
    let mut m = iso.clone();
    while 2 * m.dim() < x.dim() {
        let next = x
            .complement(&m)?
            .basis_vectors()
            .into_iter()
            .find(|v| !m.contains(v).unwrap_or(true))
            .expect("M⊥ is strictly larger than M while M is not Lagrangian");
        m = m.sum(&Subspace::span(x.dim(), vec![next])?)?;
    }
    Ok(m)
}

/// Lagrangian `M` with `M ∩ L = 0` and `J ≤ M`.
pub fn lagrangian_complement(x: &SymplecticSpace, l: &Subspace, j: &Subspace) -> Result<Subspace> {
    lagrangian_complement_within(x, &Subspace::full(x.dim()), l, j)
}

/// Same as [`lagrangian_complement`] inside a symplectic subspace `s` of `x`:
/// `l` must be Lagrangian in `s`, the result is Lagrangian in `s`.
///
/// Greedy: while `M` is too small, add the first canonical basis vector of
/// `s ∩ M⊥` that lies outside `M + L`.
pub fn lagrangian_complement_within(
    x: &SymplecticSpace,
    s: &Subspace,
    l: &Subspace,
    j: &Subspace,
) -> Result<Subspace> {
    x.check_subspace(s)?;
    x.check_subspace(l)?;
    x.check_subspace(j)?;
    if !l.leq(s)? || !j.leq(s)? {
        return Err(Error::Precondition("subspaces must lie in the symplectic subspace".into()));
    }
    if 2 * l.dim() != s.dim() || !x.is_isotropic(l)? {
        return Err(Error::NotLagrangian);
    }
    x.require_isotropic(j)?;
    if !j.intersect(l)?.is_zero() {
        return Err(Error::Precondition("J must meet L only in zero".into()));
    }
    let mut m = j.clone();
    while 2 * m.dim() < s.dim() {
        let candidates = x.complement(&m)?.intersect(s)?;
        let blocked = m.sum(l)?;
        let next = candidates
            .basis_vectors()
            .into_iter()
            .find(|v| !blocked.contains(v).unwrap_or(true))
            .expect("an isotropic extension outside M + L exists while M is not Lagrangian");
        m = m.sum(&Subspace::span(x.dim(), vec![next])?)?;
    }
    Ok(m)
}

/// A symplectic change of coordinates putting a (Lagrangian, isotropic)
/// pair into the normal form determined by `(dim X, dim I, dim L∩I)`.
#[derive(Clone, Debug, Serialize)]
pub struct AdaptedBasis {
    /// Maps the adapted basis to the standard basis; preserves the form.
    #[serde(skip)]
    pub transform: Matrix,
    #[serde(skip)]
    pub lagrangian_image: Subspace,
    #[serde(skip)]
    pub isotropic_image: Subspace,
    pub dim_space: usize,
    pub dim_isotropic: usize,
    pub dim_intersection: usize,
}

impl AdaptedBasis {
    /// The normal-form pair for the given invariants: `L = span(e_1..e_n)`,
    /// `I = span(e_1..e_a, e*_{a+1}..e*_{a+b})`.
    pub fn normal_form(dim_space: usize, dim_isotropic: usize, dim_intersection: usize) -> (Subspace, Subspace) {
        let n = dim_space / 2;
        let l = Subspace::coordinate(dim_space, &(0..n).collect::<Vec<_>>());
        let axes: Vec<usize> = (0..dim_intersection)
            .chain((dim_intersection..dim_isotropic).map(|i| n + i))
            .collect();
        (l, Subspace::coordinate(dim_space, &axes))
    }
}

/// Canonical basis `(e, f, g, e*, f*, g*)` with `e` spanning `I ∩ L`,
/// `(e, f, g)` spanning `L` and `(e, f*)` spanning `I`. `J`, a complement of
/// `I ∩ L` in `I`, is extended to a Lagrangian complement `M` of `L`, which
/// is then identified with the dual of `L`.
pub fn adapted_canonical_basis(x: &SymplecticSpace, l: &Subspace, i: &Subspace) -> Result<AdaptedBasis> {
    if !x.is_standard() {
        return Err(Error::Precondition("adapted basis requires the standard form".into()));
    }
    x.require_lagrangian(l)?;
    x.check_subspace(i)?;
    x.require_isotropic(i)?;

    let common = i.intersect(l)?;
    let j = i.complement_of(&common)?;
    let m = lagrangian_complement(x, l, &j)?;

    let e = common.basis_vectors();
    // f_k ∈ L with ω(f_k, j_l) = δ_kl, i.e. ω(j_l, -f_k) = δ_kl.
    let f: Vec<_> = x
        .dual_vectors(&j.basis_vectors(), l)?
        .into_iter()
        .map(|v| v.into_iter().map(|c| -c).collect())
        .collect();
    let l_perp_j = l.intersect(&x.complement(&j)?)?;
    let g = l_perp_j.complement_of(&common)?.basis_vectors();

    let lagrangian_basis: Vec<_> = e.into_iter().chain(f).chain(g).collect();
    let duals = x.dual_vectors(&lagrangian_basis, &m)?;
    let columns = Matrix::from_rows(x.dim(), lagrangian_basis.into_iter().chain(duals).collect())?;
    let basis = columns.transpose();
    let transform = basis
        .inverse()
        .ok_or_else(|| Error::Precondition("adapted vectors are dependent".into()))?;
    debug_assert!(x.is_symplectic_map(&transform)?);

    Ok(AdaptedBasis {
        lagrangian_image: l.image(&transform)?,
        isotropic_image: i.image(&transform)?,
        transform,
        dim_space: x.dim(),
        dim_isotropic: i.dim(),
        dim_intersection: common.dim(),
    })
}
