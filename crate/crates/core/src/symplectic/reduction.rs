use super::SymplecticSpace;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// Everything needed to pass from `X` to the reduced space `X^C = C/C⊥`.
///
/// Reduced coordinates are coefficients with respect to `complement`, the
/// pivot-selected complement of `C⊥` in `C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionData {
    pub ambient: SymplecticSpace,
    pub coisotropic: Subspace,
    pub perp: Subspace,
    pub complement: Subspace,
    pub reduced: SymplecticSpace,
    /// `dim X^C × dim X`; valid on vectors of `C`, kills `C⊥`.
    pub projection: Matrix,
    /// `dim X × dim X^C`; columns are the basis of `complement`.
    pub section: Matrix,
}

pub fn reduction_data(x: &SymplecticSpace, c: &Subspace) -> Result<ReductionData> {
    x.check_subspace(c)?;
    let perp = x.complement(c)?;
    if !perp.leq(c)? {
        return Err(Error::NotCoisotropic);
    }
    let complement = c.complement_of(&perp)?;
    let section = complement.basis().transpose();
    let reduced = SymplecticSpace::new(x.pairing(complement.basis(), complement.basis())?)?;

    // Change of basis: complement ++ C⊥ ++ (complement of C in X).
    let outside = Subspace::full(x.dim()).complement_of(c)?;
    let change = complement
        .basis()
        .vstack(perp.basis())?
        .vstack(outside.basis())?
        .transpose();
    let inverse = change
        .inverse()
        .expect("adapted basis of X is a basis");
    let rows: Vec<usize> = (0..complement.dim()).collect();
    let projection = inverse.select_rows(&rows);

    Ok(ReductionData {
        ambient: x.clone(),
        coisotropic: c.clone(),
        perp,
        complement,
        reduced,
        projection,
        section,
    })
}

impl ReductionData {
    /// Reduced coordinates of a vector of `C`.
    pub fn project(&self, v: &[crate::linalg::Scalar]) -> Result<Vec<crate::linalg::Scalar>> {
        if !self.coisotropic.contains(v)? {
            return Err(Error::Precondition("vector is not in the coisotropic subspace".into()));
        }
        self.projection.mul_vec(v)
    }

    pub fn perp_dim(&self) -> usize {
        self.perp.dim()
    }
}

/// `L^C = (L ∩ C)/(L ∩ C⊥)` in reduced coordinates.
pub fn reduce_lagrangian(rd: &ReductionData, l: &Subspace) -> Result<Subspace> {
    rd.ambient.require_lagrangian(l)?;
    let lc = l.intersect(&rd.coisotropic)?;
    let image = lc.image(&rd.projection)?;
    debug_assert!(rd.reduced.is_lagrangian(&image)?);
    Ok(image)
}

/// `E^C(L) = dim(L ∩ C⊥)`; cross-checked against `codim(L + C)`.
pub fn excess_of_reduction(rd: &ReductionData, l: &Subspace) -> Result<usize> {
    rd.ambient.require_lagrangian(l)?;
    let by_intersection = l.intersect(&rd.perp)?.dim();
    let by_sum = l.sum(&rd.coisotropic)?.codim();
    assert_eq!(by_intersection, by_sum, "excess formulas disagree");
    Ok(by_intersection)
}

impl ReductionData {
    /// Checks the structural invariants; used by tests and the verifier.
    pub fn check_invariants(&self) -> Result<bool> {
        let x = &self.ambient;
        let ok_dims = self.reduced.dim() == self.coisotropic.dim() - self.perp.dim();
        let ok_section = self.projection.mul(&self.section)? == Matrix::identity(self.reduced.dim());
        let kills_perp = self.projection.mul(&self.perp.basis().transpose())?.is_zero();
        // ω^C(πu, πv) = ω(u, v) on a basis of C.
        let cb = self.coisotropic.basis();
        let projected = cb.mul(&self.projection.transpose())?;
        let induced = self.reduced.pairing(&projected, &projected)?;
        let original = x.pairing(cb, cb)?;
        Ok(ok_dims && ok_section && kills_perp && induced == original && self.perp.leq(&self.coisotropic)?)
    }
}
