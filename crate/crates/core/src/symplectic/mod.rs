//! Symplectic structure on exact rational spaces.
//!
//! Coordinates of the standard space of dimension `2n` are ordered
//! `(e_1..e_n, e*_1..e*_n)` with `ω(e_i, e*_j) = δ_ij`.

mod adapted;
mod reduction;

pub use adapted::{
    adapted_canonical_basis, extend_to_lagrangian, lagrangian_complement, lagrangian_complement_within, AdaptedBasis,
};
pub use reduction::{excess_of_reduction, reduce_lagrangian, reduction_data, ReductionData};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, int, kernel, Matrix, Scalar, Subspace};

/// Even-dimensional rational space together with the Gram matrix of its
/// symplectic form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticSpace {
    form: Matrix,
}

impl SymplecticSpace {
    /// Validates that `form` is square, antisymmetric and invertible.
    pub fn new(form: Matrix) -> Result<Self> {
        if !form.is_square() {
            return Err(Error::InvalidForm("form matrix is not square".into()));
        }
        if form.transpose() != form.neg() {
            return Err(Error::InvalidForm("form matrix is not antisymmetric".into()));
        }
        if form.rank() != form.rows() {
            return Err(Error::InvalidForm("form matrix is degenerate".into()));
        }
        Ok(SymplecticSpace { form })
    }

    /// `R^n × R^n*` with the standard form; `n = 0` gives the unit object.
    pub fn standard(n: usize) -> Self {
        let mut form = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(i, n + i)] = Scalar::one();
            form[(n + i, i)] = -Scalar::one();
        }
        SymplecticSpace { form }
    }

    pub fn unit() -> Self {
        SymplecticSpace::standard(0)
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn half_dim(&self) -> usize {
        self.dim() / 2
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn is_unit(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_standard(&self) -> bool {
        *self == SymplecticSpace::standard(self.half_dim())
    }

    /// Same space with the form negated.
    pub fn dual(&self) -> Self {
        SymplecticSpace {
            form: self.form.neg(),
        }
    }

    /// Cartesian product; the form is the block direct sum.
    pub fn product(&self, other: &SymplecticSpace) -> Self {
        SymplecticSpace {
            form: self.form.block_diag(&other.form),
        }
    }

    /// Splits `self = A × B` with `dim A = first`; the off-diagonal blocks of
    /// the form must vanish.
    pub fn split(&self, first: usize) -> Result<(SymplecticSpace, SymplecticSpace)> {
        if first > self.dim() {
            return Err(Error::DimensionTooLarge {
                requested: first,
                ambient: self.dim(),
            });
        }
        let head: Vec<usize> = (0..first).collect();
        let tail: Vec<usize> = (first..self.dim()).collect();
        if !self.form.select_rows(&head).select_cols(&tail).is_zero() {
            return Err(Error::InvalidForm("space is not a product at the requested split".into()));
        }
        let a = SymplecticSpace::new(self.form.select_rows(&head).select_cols(&head))?;
        let b = SymplecticSpace::new(self.form.select_rows(&tail).select_cols(&tail))?;
        Ok((a, b))
    }

    pub fn form_eval(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        Ok(dot(u, &self.form.mul_vec(v)?))
    }

    /// Matrix of pairings `ω(a_i, b_j)` between the rows of `a` and of `b`.
    pub fn pairing(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.mul(&self.form)?.mul(&b.transpose())
    }

    pub fn check_vec(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn check_subspace(&self, w: &Subspace) -> Result<()> {
        if w.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: w.ambient(),
            });
        }
        Ok(())
    }

    /// `W⊥ = {v : ω(w, v) = 0 for all w ∈ W}`.
    pub fn complement(&self, w: &Subspace) -> Result<Subspace> {
        self.check_subspace(w)?;
        Ok(kernel(&w.basis().mul(&self.form)?))
    }

    pub fn is_isotropic(&self, w: &Subspace) -> Result<bool> {
        self.check_subspace(w)?;
        Ok(self.pairing(w.basis(), w.basis())?.is_zero())
    }

    pub fn is_lagrangian(&self, w: &Subspace) -> Result<bool> {
        Ok(2 * w.dim() == self.dim() && self.is_isotropic(w)?)
    }

    pub fn is_coisotropic(&self, w: &Subspace) -> Result<bool> {
        self.complement(w)?.leq(w)
    }

    pub fn classify(&self, w: &Subspace) -> Result<SubspaceClass> {
        let perp = self.complement(w)?;
        let is_isotropic = w.leq(&perp)?;
        let is_coisotropic = perp.leq(w)?;
        let is_symplectic = w.intersect(&perp)?.is_zero();
        Ok(SubspaceClass {
            is_isotropic,
            is_coisotropic,
            is_lagrangian: is_isotropic && is_coisotropic,
            is_symplectic,
        })
    }

    pub fn require_lagrangian(&self, w: &Subspace) -> Result<()> {
        self.check_subspace(w)?;
        if self.is_lagrangian(w)? {
            Ok(())
        } else {
            Err(Error::NotLagrangian)
        }
    }

    pub fn require_isotropic(&self, w: &Subspace) -> Result<()> {
        if self.is_isotropic(w)? {
            Ok(())
        } else {
            Err(Error::NotIsotropic)
        }
    }

    /// Matrix preserving the form: `tᵀ·ω·t = ω`.
    pub fn is_symplectic_map(&self, t: &Matrix) -> Result<bool> {
        Ok(t.transpose().mul(&self.form)?.mul(t)? == self.form)
    }

    /// Vectors `d_j ∈ within` with `ω(a_i, d_j) = δ_ij` for every listed `a_i`.
    pub fn dual_vectors(&self, a: &[Vec<Scalar>], within: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        if a.is_empty() {
            return Ok(Vec::new());
        }
        let a_mat = Matrix::from_rows(self.dim(), a.to_vec())?;
        let gram = self.pairing(&a_mat, within.basis())?;
        let mut out = Vec::with_capacity(a.len());
        for j in 0..a.len() {
            let rhs: Vec<Scalar> = (0..a.len()).map(|i| if i == j { int(1) } else { int(0) }).collect();
            let coeffs = crate::linalg::solve(&gram, &rhs)?.ok_or_else(|| {
                Error::Precondition("no dual vector exists in the given subspace".into())
            })?;
            let mut v = vec![Scalar::zero(); self.dim()];
            for (c, row) in coeffs.iter().zip(within.basis_vectors()) {
                if c.is_zero() {
                    continue;
                }
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi += c * ri;
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// The class of a subspace with respect to the symplectic form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubspaceClass {
    pub is_isotropic: bool,
    pub is_coisotropic: bool,
    pub is_lagrangian: bool,
    pub is_symplectic: bool,
}

pub fn standard_space(n: usize) -> SymplecticSpace {
    SymplecticSpace::standard(n)
}

pub fn form_eval(x: &SymplecticSpace, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    x.form_eval(u, v)
}

pub fn symp_complement(x: &SymplecticSpace, w: &Subspace) -> Result<Subspace> {
    x.complement(w)
}

pub fn classify_subspace(x: &SymplecticSpace, w: &Subspace) -> Result<SubspaceClass> {
    x.classify(w)
}

pub fn dual_space(x: &SymplecticSpace) -> SymplecticSpace {
    x.dual()
}

pub fn product_space(x: &SymplecticSpace, y: &SymplecticSpace) -> SymplecticSpace {
    x.product(y)
}

/// Chow distance: the codimension of `L1 ∩ L2` in `L1`.
pub fn chow_distance(x: &SymplecticSpace, l1: &Subspace, l2: &Subspace) -> Result<usize> {
    x.require_lagrangian(l1)?;
    x.require_lagrangian(l2)?;
    Ok(l1.dim() - l1.intersect(l2)?.dim())
}
