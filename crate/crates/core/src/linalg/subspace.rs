use num_traits::Zero;

use super::matrix::Matrix;
use super::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of Q^n stored as the nonzero rows of the reduced row
/// echelon form of any spanning set. Two subspaces are equal as sets iff
/// they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// The span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref_with_pivots();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace {
            ambient: m.cols(),
            basis: r.select_rows(&keep),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        Ok(Subspace::row_space(&Matrix::from_rows(ambient, vectors)?))
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Subspace {
        let mut m = Matrix::zeros(axes.len(), ambient);
        for (i, &a) in axes.iter().enumerate() {
            m[(i, a)] = Scalar::from_integer(1.into());
        }
        Subspace::row_space(&m)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Vectors annihilated by every basis vector under the dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let constraints = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(kernel(&constraints))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        let ann = self.annihilator();
        Ok(ann.basis.mul_vec(v)?.iter().all(Zero::is_zero))
    }

    /// Inclusion `self ≤ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        let ann = other.annihilator();
        Ok(self.basis.mul(&ann.basis.transpose())?.is_zero())
    }

    /// Image under the linear map `v ↦ t·v` where `t` has `ambient` columns.
    pub fn image(&self, t: &Matrix) -> Result<Subspace> {
        if t.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: t.cols(),
            });
        }
        Ok(Subspace::row_space(&self.basis.mul(&t.transpose())?))
    }

    /// Image under the coordinate projection onto the listed axes.
    pub fn project(&self, axes: &[usize]) -> Subspace {
        Subspace::row_space(&self.basis.select_cols(axes))
    }

    /// The product `self × other` inside Q^(n+m).
    pub fn product(&self, other: &Subspace) -> Subspace {
        Subspace::row_space(&self.basis.block_diag(&other.basis))
    }

    /// Embeds into a larger ambient space, placing coordinate `i` at `offset + i`.
    pub fn embed(&self, offset: usize, ambient: usize) -> Subspace {
        let mut m = Matrix::zeros(self.dim(), ambient);
        for i in 0..self.dim() {
            for j in 0..self.ambient {
                m[(i, offset + j)] = self.basis[(i, j)].clone();
            }
        }
        Subspace::row_space(&m)
    }

    /// A complement of `inner` inside `self`, spanned by the first canonical
    /// basis rows of `self` that are independent of `inner` and of the rows
    /// already chosen. Requires `inner ≤ self`.
    pub fn complement_of(&self, inner: &Subspace) -> Result<Subspace> {
        if !inner.leq(self)? {
            return Err(Error::Precondition(
                "complement requested for a non-contained subspace".into(),
            ));
        }
        let mut acc = inner.clone();
        let mut chosen = Vec::new();
        for v in self.basis_vectors() {
            if acc.dim() == self.dim() {
                break;
            }
            if !acc.contains(&v)? {
                acc = acc.sum(&Subspace::span(self.ambient, vec![v.clone()])?)?;
                chosen.push(v);
            }
        }
        Subspace::span(self.ambient, chosen)
    }
}

/// Null space `{v : m·v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let (r, pivots) = m.rref_with_pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::from_integer(1.into());
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, f)].clone();
        }
        vectors.push(v);
    }
    Subspace::row_space(&Matrix::from_rows(n, vectors).expect("kernel rows have n entries"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn line(v: &[i64]) -> Subspace {
        Subspace::row_space(&Matrix::from_i64(&[v]))
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(2)), Subspace::zero(2));
        let k = kernel(&Matrix::from_i64(&[&[1, 2]]));
        assert_eq!(k.basis_vectors(), vec![vec![q(1, 1), q(-1, 2)]]);
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
    }

    #[test]
    fn sum_examples() {
        let a = line(&[1, 0]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.sum(&line(&[0, 1])).unwrap(), Subspace::full(2));
        let s = line(&[1, 0, 0]).sum(&line(&[1, 1, 0])).unwrap();
        assert_eq!(s, Subspace::coordinate(3, &[0, 1]));
    }

    #[test]
    fn intersect_examples() {
        let a = line(&[1, 0]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&line(&[0, 1])).unwrap(), Subspace::zero(2));
        let d = line(&[1, 1]);
        assert_eq!(Subspace::full(2).intersect(&d).unwrap(), d);
    }

    #[test]
    fn containment_examples() {
        let a = line(&[1, 0]);
        assert!(a.contains(&[q(0, 1), q(0, 1)]).unwrap());
        assert!(!a.contains(&[q(1, 1), q(1, 1)]).unwrap());
        assert!(line(&[1, 1]).leq(&Subspace::full(2)).unwrap());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = line(&[1, 0]);
        let b = line(&[1, 0, 0]);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.leq(&b).is_err());
        assert!(a.contains(&[q(1, 1)]).is_err());
    }

    #[test]
    fn complement_is_pivot_selected() {
        let big = Subspace::coordinate(3, &[0, 1, 2]);
        let inner = line(&[1, 1, 0]);
        let c = big.complement_of(&inner).unwrap();
        assert_eq!(c, Subspace::coordinate(3, &[0, 2]));
        assert!(big.complement_of(&Subspace::full(4)).is_err());
    }
}
