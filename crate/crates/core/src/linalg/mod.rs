//! Exact rational matrices and subspaces in canonical (RREF) form.

mod matrix;
mod subspace;

pub use matrix::{dot, solve, Matrix};
pub use subspace::{kernel, Subspace};

/// Arbitrary-precision rational, always in lowest terms.
pub type Scalar = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![int(0); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = int(1);
    v
}

/// Reduced row echelon form, shape preserved.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> crate::Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> crate::Result<Subspace> {
    a.intersect(b)
}

pub fn subspace_contains(a: &Subspace, v: &[Scalar]) -> crate::Result<bool> {
    a.contains(v)
}

pub fn subspace_leq(a: &Subspace, b: &Subspace) -> crate::Result<bool> {
    a.leq(b)
}
