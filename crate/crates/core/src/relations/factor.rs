use serde::Serialize;

use super::{compose, diagonal, pair_excess, CanonicalRelation};
use crate::error::Result;
use crate::linalg::{unit_vec, zero_vec, Matrix, Scalar, Subspace};
use crate::symplectic::{extend_to_lagrangian, lagrangian_complement, SymplecticSpace};

/// `f = g ∘ h` with `g : X ← Q` a reduction and `h : Q ← Y` a coreduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub middle: SymplecticSpace,
    pub reduction: CanonicalRelation,
    pub coreduction: CanonicalRelation,
}

/// Outcome of checking the four factorization postconditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub reduction: bool,
    pub coreduction: bool,
    pub congenial: bool,
    pub recomposes: bool,
}

impl FactorizationCheck {
    pub fn holds(&self) -> bool {
        self.reduction && self.coreduction && self.congenial && self.recomposes
    }
}

impl Factorization {
    pub fn check(&self, f: &CanonicalRelation) -> Result<FactorizationCheck> {
        Ok(FactorizationCheck {
            reduction: self.reduction.is_reduction(),
            coreduction: self.coreduction.is_coreduction(),
            congenial: pair_excess(&self.reduction, &self.coreduction)? == 0,
            recomposes: compose(&self.reduction, &self.coreduction)? == *f,
        })
    }
}

fn rows_to_subspace(ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
    Subspace::row_space(&Matrix::from_rows(ambient, rows).expect("rows built with the ambient length"))
}

fn concat(parts: &[&[Scalar]]) -> Vec<Scalar> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// Factorization through `Q = X × Ȳ × Y`:
/// `g = {(x, (x, y, y))}`, `h = {((x', y', y), y) : (x', y') ∈ f}`.
pub fn factor(f: &CanonicalRelation) -> Factorization {
    let (x, y) = (f.target(), f.source());
    let (nx, ny) = (x.dim(), y.dim());
    let q = x.product(&y.dual()).product(y);
    let nq = q.dim();

    // g ⊂ X × Q̄: diagonal on X, diagonal on the two Y blocks.
    let g_body = diagonal(nx)
        .embed(0, nx + nq)
        .sum(&diagonal(ny).embed(2 * nx, nx + nq))
        .expect("same ambient");
    // h ⊂ Q × Ȳ: f on the first two blocks, diagonal on the last two.
    let h_body = f
        .body()
        .embed(0, nq + ny)
        .sum(&diagonal(ny).embed(nx + ny, nq + ny))
        .expect("same ambient");

    Factorization {
        reduction: CanonicalRelation::assemble(x.clone(), q.clone(), g_body),
        coreduction: CanonicalRelation::assemble(q.clone(), y.clone(), h_body),
        middle: q,
    }
}

/// Factorization through `Q = X × R^{2κ}`, `κ = dim ker f`.
///
/// The kernel `K` is completed to a symplectic subspace `V = K ⊕ W` with
/// `ω(k_i, w_j) = δ_ij` and `W` isotropic, so `V` is standard in the
/// coordinates `(a, b)` of `Σ a_i k_i + Σ b_i w_i`. Then `Y = V ⊕ V⊥` and
///
/// * `g = {(x, (x, (a, 0)))}`,
/// * `h = {((x, (a, b)), v + u) : (x, u) ∈ f, u ∈ V⊥}`.
pub fn factor_minimal(f: &CanonicalRelation) -> Result<Factorization> {
    let (x, y) = (f.target(), f.source());
    let (nx, ny) = (x.dim(), y.dim());
    let k = f.kernel();
    let kappa = k.dim();

    let extended = extend_to_lagrangian(y, &k)?;
    let m = lagrangian_complement(y, &extended, &Subspace::zero(ny))?;
    let ks = k.basis_vectors();
    let ws = y.dual_vectors(&ks, &m)?;
    let v = Subspace::span(ny, ks.iter().chain(ws.iter()).cloned().collect())?;
    let v_perp = y.complement(&v)?;

    let q = x.product(&SymplecticSpace::standard(kappa));
    let nq = q.dim();

    let mut g_rows = Vec::with_capacity(nx + kappa);
    for i in 0..nx {
        let e = unit_vec(nx, i);
        g_rows.push(concat(&[&e, &e, &zero_vec(2 * kappa)]));
    }
    for i in 0..kappa {
        g_rows.push(concat(&[&zero_vec(2 * nx), &unit_vec(2 * kappa, i)]));
    }

    let restricted = f.body().intersect(&Subspace::full(nx).product(&v_perp))?;
    let mut h_rows = Vec::with_capacity(restricted.dim() + 2 * kappa);
    for row in restricted.basis_vectors() {
        let (xp, u) = row.split_at(nx);
        h_rows.push(concat(&[xp, &zero_vec(2 * kappa), u]));
    }
    for (i, vec) in ks.iter().chain(ws.iter()).enumerate() {
        h_rows.push(concat(&[&zero_vec(nx), &unit_vec(2 * kappa, i), vec]));
    }

    Ok(Factorization {
        reduction: CanonicalRelation::assemble(x.clone(), q.clone(), rows_to_subspace(nx + nq, g_rows)),
        coreduction: CanonicalRelation::assemble(q.clone(), y.clone(), rows_to_subspace(nq + ny, h_rows)),
        middle: q,
    })
}
