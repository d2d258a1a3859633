use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::symplectic::{
    chow_distance, excess_of_reduction, lagrangian_complement_within, reduce_lagrangian, ReductionData, SymplecticSpace,
};

/// A Lagrangian `L = W ⊕ Y ⊕ Z` of `X` with `indexed_reduce(L, 0) = (Λ, k)`:
/// `W` lifts `Λ` into the chosen complement `J` of `C⊥` in `C`, `Y` spans the
/// first `k` canonical rows of `C⊥`, and `Z` is the annihilator of `Y` in a
/// Lagrangian complement `D` of `C⊥` inside `J⊥`.
pub fn lift_indexed(rd: &ReductionData, lambda: &Subspace, k: usize) -> Result<Subspace> {
    rd.reduced.require_lagrangian(lambda)?;
    let c = rd.perp_dim();
    if k > c {
        return Err(Error::DimensionTooLarge {
            requested: k,
            ambient: c,
        });
    }
    let x = &rd.ambient;
    let w = lambda.image(&rd.section)?;
    let y_rows: Vec<usize> = (0..k).collect();
    let y = Subspace::row_space(&rd.perp.basis().select_rows(&y_rows));
    let j_perp = x.complement(&rd.complement)?;
    let d = lagrangian_complement_within(x, &j_perp, &rd.perp, &Subspace::zero(x.dim()))?;
    let z = d.intersect(&x.complement(&y)?)?;
    let l = w.sum(&y)?.sum(&z)?;
    debug_assert!(x.is_lagrangian(&l)?);
    Ok(l)
}

/// The one-parameter family `L_t` spanned by `base_i + t·direction_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationFamily {
    #[serde(skip)]
    pub ambient: SymplecticSpace,
    #[serde(skip)]
    pub coisotropic: Subspace,
    #[serde(skip)]
    pub base: Matrix,
    #[serde(skip)]
    pub direction: Matrix,
    /// `E^C(L)`.
    pub k: usize,
    /// Drop in excess for `t ≠ 0`.
    pub q: usize,
    /// `d(L^C, Λ)`.
    pub r: usize,
}

impl DeformationFamily {
    pub fn eval(&self, t: &Scalar) -> Subspace {
        let mut m = self.base.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let step = &self.direction[(i, j)] * t;
                m[(i, j)] += step;
            }
        }
        Subspace::row_space(&m)
    }

    /// The printed bound `r ≤ k − q`, which the construction does not need.
    pub fn satisfies_printed_bound(&self) -> bool {
        self.r + self.q <= self.k
    }
}

/// Deforms the adapted basis `(e, f, g, h, i, j*)` of `L` to
/// `(e + t g*, f, g + t e*, h + t h*, i, j*)`, so that for `t ≠ 0` the
/// family reduces to `(Λ, k − q)` where `k = E^C(L)`. Requires
/// `d(L^C, Λ) ≤ q ≤ k`.
pub fn deformation_family(rd: &ReductionData, l: &Subspace, lambda: &Subspace, q: usize) -> Result<DeformationFamily> {
    let x = &rd.ambient;
    x.require_lagrangian(l)?;
    rd.reduced.require_lagrangian(lambda)?;
    let n = x.dim();
    let reduced = reduce_lagrangian(rd, l)?;
    let k = excess_of_reduction(rd, l)?;
    let r = chow_distance(&rd.reduced, &reduced, lambda)?;
    if r > q || q > k {
        return Err(Error::Precondition(format!(
            "deformation needs d(L^C, Λ) ≤ q ≤ E^C(L), got r = {r}, q = {q}, k = {k}"
        )));
    }

    // L ∩ C = W ⊕ Y with Y = L ∩ C⊥; J ⊇ W is a complement of C⊥ in C.
    let l_c = l.intersect(&rd.coisotropic)?;
    let y = l.intersect(&rd.perp)?;
    let w = l_c.complement_of(&y)?;
    let j = w.sum(&rd.coisotropic.complement_of(&w.sum(&rd.perp)?)?)?;
    let j_perp = x.complement(&j)?;
    let w_prime = j.intersect(&lambda.image(&rd.section)?.sum(&rd.perp)?)?;

    // W = span(e, f) with f spanning W ∩ W'; e* ∈ W' dual to e.
    let fixed = w.intersect(&w_prime)?;
    let e = w.complement_of(&fixed)?.basis_vectors();
    let f = fixed.basis_vectors();
    let e_star = x.dual_vectors(&e, &w_prime)?;

    // L ∩ J⊥ = Y ⊕ Z, and D ⊇ Z a Lagrangian complement of C⊥ in J⊥.
    let z = l.intersect(&j_perp)?.complement_of(&y)?;
    let d = lagrangian_complement_within(x, &j_perp, &rd.perp, &z)?;

    // C⊥ = span(g, h, i, j) with (g, h, i) spanning Y; duals taken in D.
    let ys = y.basis_vectors();
    let rest = rd.perp.complement_of(&y)?.basis_vectors();
    let perp_basis: Vec<Vec<Scalar>> = ys.iter().chain(rest.iter()).cloned().collect();
    let duals = x.dual_vectors(&perp_basis, &d)?;
    let (g, h, i) = (&ys[..r], &ys[r..q], &ys[q..k]);
    let (g_star, h_star, j_star) = (&duals[..r], &duals[r..q], &duals[k..]);

    let zero = vec![Scalar::from_integer(0.into()); n];
    let mut base = Vec::with_capacity(n / 2);
    let mut direction = Vec::with_capacity(n / 2);
    let mut push = |b: &[Scalar], dir: &[Scalar]| {
        base.push(b.to_vec());
        direction.push(dir.to_vec());
    };
    for (ea, ga) in e.iter().zip(g_star) {
        push(ea, ga);
    }
    for fa in &f {
        push(fa, &zero);
    }
    for (ga, ea) in g.iter().zip(&e_star) {
        push(ga, ea);
    }
    for (ha, hsa) in h.iter().zip(h_star) {
        push(ha, hsa);
    }
    for ia in i {
        push(ia, &zero);
    }
    for js in j_star {
        push(js, &zero);
    }
    let family = DeformationFamily {
        ambient: x.clone(),
        coisotropic: rd.coisotropic.clone(),
        base: Matrix::from_rows(n, base)?,
        direction: Matrix::from_rows(n, direction)?,
        k,
        q,
        r,
    };
    debug_assert_eq!(family.eval(&Scalar::from_integer(0.into())), *l);
    debug_assert!(x.is_lagrangian(&family.eval(&Scalar::from_integer(1.into())))?);
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexed::{indexed_reduce, IndexedLagrangian};
    use crate::linalg::{int, q as rat};
    use crate::symplectic::reduction_data;

    fn reduce(rd: &ReductionData, l: &Subspace) -> (Subspace, i64) {
        let a = indexed_reduce(rd, &IndexedLagrangian::new(rd.ambient.clone(), l.clone(), 0).unwrap()).unwrap();
        (a.lagrangian().clone(), a.index())
    }

    #[test]
    fn lifts_roundtrip() {
        let x = SymplecticSpace::standard(3);
        let c = Subspace::coordinate(6, &[0, 1, 2, 3]);
        let rd = reduction_data(&x, &c).unwrap();
        assert_eq!(rd.perp_dim(), 2);
        for axis in [0, 1] {
            let lambda = Subspace::coordinate(2, &[axis]);
            for k in 0..=2 {
                let l = lift_indexed(&rd, &lambda, k).unwrap();
                assert_eq!(reduce(&rd, &l), (lambda.clone(), k as i64));
                if k == 2 {
                    assert!(rd.perp.leq(&l).unwrap());
                }
            }
        }
        assert!(lift_indexed(&rd, &Subspace::coordinate(2, &[0]), 3).is_err());
    }

    #[test]
    fn deformation_drops_one_level() {
        // dim X = 4, C⊥ = span{e2}; L = span{e1, e2} has reduction (span{e1}, 1).
        let x = SymplecticSpace::standard(2);
        let rd = reduction_data(&x, &Subspace::coordinate(4, &[0, 1, 2])).unwrap();
        let l = Subspace::coordinate(4, &[0, 1]);
        for lambda_axis in [0, 1] {
            let lambda = Subspace::coordinate(2, &[lambda_axis]);
            let fam = deformation_family(&rd, &l, &lambda, 1).unwrap();
            assert_eq!(fam.eval(&int(0)), l);
            for t in [int(1), rat(-3, 2), rat(1, 7)] {
                let lt = fam.eval(&t);
                assert!(x.is_lagrangian(&lt).unwrap());
                assert_eq!(reduce(&rd, &lt), (lambda.clone(), 0));
            }
        }
    }

    #[test]
    fn trivial_deformation_is_constant() {
        let x = SymplecticSpace::standard(2);
        let rd = reduction_data(&x, &Subspace::coordinate(4, &[0, 1, 2])).unwrap();
        let l = Subspace::coordinate(4, &[0, 1]);
        let fam = deformation_family(&rd, &l, &Subspace::coordinate(2, &[0]), 0).unwrap();
        assert_eq!(fam.eval(&int(5)), l);
        // q = 0 needs Λ = L^C.
        assert!(deformation_family(&rd, &l, &Subspace::coordinate(2, &[1]), 0).is_err());
        assert!(deformation_family(&rd, &l, &Subspace::coordinate(2, &[0]), 2).is_err());
    }
}
