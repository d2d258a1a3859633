use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::relations::{diagonal, CanonicalRelation};
use crate::symplectic::{
    chow_distance, excess_of_reduction, reduce_lagrangian, reduction_data, ReductionData, SymplecticSpace,
};

/// A point `(L, k)` of the indexed Lagrangian Grassmannian of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedLagrangian {
    space: SymplecticSpace,
    lagrangian: Subspace,
    index: i64,
}

impl IndexedLagrangian {
    pub fn new(space: SymplecticSpace, lagrangian: Subspace, index: i64) -> Result<Self> {
        space.require_lagrangian(&lagrangian)?;
        Ok(IndexedLagrangian {
            space,
            lagrangian,
            index,
        })
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn lagrangian(&self) -> &Subspace {
        &self.lagrangian
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// The same data as a morphism `X ← 1`.
    pub fn as_relation(&self) -> CanonicalRelation {
        CanonicalRelation::assemble(self.space.clone(), SymplecticSpace::unit(), self.lagrangian.clone())
    }
}

/// `(L, k) ≤ (L', k')` iff `d(L, L') ≤ k' − k`.
pub fn sabot_leq(a: &IndexedLagrangian, b: &IndexedLagrangian) -> Result<bool> {
    if a.space != b.space {
        return Err(Error::DimensionMismatch {
            expected: a.space.dim(),
            found: b.space.dim(),
        });
    }
    let d = chow_distance(&a.space, &a.lagrangian, &b.lagrangian)? as i64;
    Ok(d <= b.index - a.index)
}

/// `(L, k) ↦ (L^C, k + E^C(L))`.
pub fn indexed_reduce(rd: &ReductionData, a: &IndexedLagrangian) -> Result<IndexedLagrangian> {
    if a.space != rd.ambient {
        return Err(Error::DimensionMismatch {
            expected: rd.ambient.dim(),
            found: a.space.dim(),
        });
    }
    let reduced = reduce_lagrangian(rd, &a.lagrangian)?;
    let excess = excess_of_reduction(rd, &a.lagrangian)? as i64;
    Ok(IndexedLagrangian {
        space: rd.reduced.clone(),
        lagrangian: reduced,
        index: a.index + excess,
    })
}

pub fn ishift(a: &IndexedLagrangian, j: i64) -> IndexedLagrangian {
    IndexedLagrangian {
        index: a.index + j,
        ..a.clone()
    }
}

/// Composition of indexed graphs `γ₁ ⊂ X × Ȳ`, `γ₂ ⊂ Y × Z̄`: reduction of
/// `γ₁ × γ₂` by `X × Δ_Y × Z̄`.
pub fn igraph_compose(g1: &IndexedLagrangian, g2: &IndexedLagrangian, y: &SymplecticSpace) -> Result<IndexedLagrangian> {
    let mismatch = || Error::NotComposable("graphs do not share the middle space".into());
    let nx = g1.space.dim().checked_sub(y.dim()).ok_or_else(mismatch)?;
    let (x, y_bar) = g1.space.split(nx).map_err(|_| mismatch())?;
    let (y2, z_bar) = g2.space.split(y.dim()).map_err(|_| mismatch())?;
    if y_bar != y.dual() || y2 != *y {
        return Err(mismatch());
    }
    let (ny, nz) = (y.dim(), z_bar.dim());
    let total = nx + 2 * ny + nz;
    let c = Subspace::coordinate(total, &(0..nx).collect::<Vec<_>>())
        .sum(&diagonal(ny).embed(nx, total))?
        .sum(&Subspace::coordinate(total, &(nx + 2 * ny..total).collect::<Vec<_>>()))?;
    let space = g1.space.product(&g2.space);
    let rd = reduction_data(&space, &c)?;
    debug_assert_eq!(rd.reduced, x.product(&z_bar));
    let both = IndexedLagrangian {
        space,
        lagrangian: g1.lagrangian.product(&g2.lagrangian),
        index: g1.index + g2.index,
    };
    indexed_reduce(&rd, &both)
}

/// The model hypersubspace `X ↞ X × R^{2k} × R^{2r} ↢ 1` with shadow `Λ`
/// and excess `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperNormalForm {
    /// `Q = X × R^{2k} × R^{2r}`.
    pub space: SymplecticSpace,
    /// `C = X × R^k × R^r`.
    pub coisotropic: Subspace,
    /// `Λ × R^k × R^{r*}`.
    pub lagrangian: Subspace,
}

pub fn normal_form_hyper(x: &SymplecticSpace, lambda: &Subspace, k: usize, r: usize) -> Result<HyperNormalForm> {
    x.require_lagrangian(lambda)?;
    let n = x.dim();
    let space = x
        .product(&SymplecticSpace::standard(k))
        .product(&SymplecticSpace::standard(r));
    let total = space.dim();
    let (k_start, r_start) = (n, n + 2 * k);
    let x_axes: Vec<usize> = (0..n).collect();
    let k_axes: Vec<usize> = (k_start..k_start + k).collect();
    let r_axes: Vec<usize> = (r_start..r_start + r).collect();
    let r_dual_axes: Vec<usize> = (r_start + r..r_start + 2 * r).collect();

    let coisotropic = Subspace::coordinate(total, &[x_axes, k_axes.clone(), r_axes].concat());
    let lagrangian = lambda
        .embed(0, total)
        .sum(&Subspace::coordinate(total, &[k_axes, r_dual_axes].concat()))?;
    Ok(HyperNormalForm {
        space,
        coisotropic,
        lagrangian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{ww_normalize, Path};
    use crate::relations::{graph, reduction_relation};
    use crate::indexed::{icompose, IndexedCanonicalRelation};

    fn x1() -> SymplecticSpace {
        SymplecticSpace::standard(1)
    }

    fn il(axis: usize, k: i64) -> IndexedLagrangian {
        IndexedLagrangian::new(x1(), Subspace::coordinate(2, &[axis]), k).unwrap()
    }

    #[test]
    fn sabot_order_examples() {
        assert!(sabot_leq(&il(0, 2), &il(0, 2)).unwrap());
        assert!(sabot_leq(&il(0, 0), &il(1, 1)).unwrap());
        assert!(!sabot_leq(&il(0, 0), &il(1, 0)).unwrap());
        assert!(!sabot_leq(&il(0, 2), &il(0, 1)).unwrap());
        let other = IndexedLagrangian::new(SymplecticSpace::standard(2), Subspace::coordinate(4, &[0, 1]), 0).unwrap();
        assert!(sabot_leq(&il(0, 0), &other).is_err());
    }

    #[test]
    fn reduction_examples() {
        let whole = reduction_data(&x1(), &Subspace::full(2)).unwrap();
        assert_eq!(indexed_reduce(&whole, &il(1, 3)).unwrap(), il(1, 3));

        let rd = reduction_data(&x1(), &Subspace::coordinate(2, &[0])).unwrap();
        let a = indexed_reduce(&rd, &il(0, 0)).unwrap();
        assert_eq!((a.lagrangian().clone(), a.index()), (Subspace::zero(0), 1));
        let b = indexed_reduce(&rd, &il(1, 0)).unwrap();
        assert_eq!((b.lagrangian().clone(), b.index()), (Subspace::zero(0), 0));
        assert_eq!(indexed_reduce(&rd, &il(0, 5)).unwrap(), ishift(&a, 5));
    }

    #[test]
    fn graph_composition_matches_icompose() {
        let x = x1();
        let line = |a| Subspace::coordinate(2, &[a]);
        let f = CanonicalRelation::new(x.clone(), x.clone(), line(0).product(&line(0))).unwrap();
        let g = CanonicalRelation::new(x.clone(), x.clone(), line(0).product(&line(1))).unwrap();
        let as_graph = |h: &CanonicalRelation| IndexedLagrangian::new(h.ambient(), graph(h).body().clone(), 0).unwrap();
        let composed = igraph_compose(&as_graph(&f), &as_graph(&g), &x).unwrap();
        let direct = icompose(&IndexedCanonicalRelation::plain(f), &IndexedCanonicalRelation::plain(g)).unwrap();
        assert_eq!(composed.index(), 1);
        assert_eq!(composed.lagrangian(), direct.relation().body());
        assert_eq!(composed.space(), &direct.relation().ambient());

        let id = CanonicalRelation::identity(&x);
        let ids = igraph_compose(&as_graph(&id), &as_graph(&id), &x).unwrap();
        assert_eq!(ids, as_graph(&id));
    }

    #[test]
    fn hyper_normal_forms() {
        let x = x1();
        let lambda = Subspace::coordinate(2, &[1]);
        let trivial = normal_form_hyper(&x, &lambda, 0, 0).unwrap();
        assert_eq!(trivial.space, x);
        assert_eq!(trivial.coisotropic, Subspace::full(2));
        assert_eq!(trivial.lagrangian, lambda);
        for (k, r) in [(1, 0), (0, 2), (2, 1)] {
            let h = normal_form_hyper(&x, &lambda, k, r).unwrap();
            let rd = reduction_data(&h.space, &h.coisotropic).unwrap();
            let reduced = indexed_reduce(&rd, &IndexedLagrangian::new(h.space.clone(), h.lagrangian.clone(), 0).unwrap())
                .unwrap();
            assert_eq!(reduced, IndexedLagrangian::new(x.clone(), lambda.clone(), k as i64).unwrap());
            // The same data as a two-step path: reduction after coreduction.
            let path = Path::new(vec![
                reduction_relation(&rd),
                CanonicalRelation::from_lagrangian(&h.space, &h.lagrangian).unwrap(),
            ])
            .unwrap();
            let nf = ww_normalize(&path).unwrap();
            assert_eq!(nf.shadow.body(), &lambda);
            assert_eq!(nf.excess, k);
        }
        assert!(normal_form_hyper(&x, &Subspace::full(2), 0, 0).is_err());
    }
}
