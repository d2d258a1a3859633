//! Relations between finite sets `{0, …, n−1}`: composition, trajectories
//! and the reduction/coreduction factorization.

pub mod census;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// A relation `X ← Y`, i.e. a subset of `X × Y`, stored densely.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteRelation {
    target_size: usize,
    source_size: usize,
    bits: Vec<bool>,
}

impl FiniteRelation {
    pub fn new(target_size: usize, source_size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rel = FiniteRelation::empty(target_size, source_size);
        for (x, y) in pairs {
            if x >= target_size || y >= source_size {
                return Err(Error::Precondition(format!(
                    "pair ({x}, {y}) out of range for {target_size} × {source_size}"
                )));
            }
            rel.bits[x * source_size + y] = true;
        }
        Ok(rel)
    }

    pub fn empty(target_size: usize, source_size: usize) -> Self {
        FiniteRelation {
            target_size,
            source_size,
            bits: vec![false; target_size * source_size],
        }
    }

    pub fn identity(n: usize) -> Self {
        FiniteRelation::new(n, n, (0..n).map(|i| (i, i))).expect("diagonal is in range")
    }

    /// The relation whose pair `(x, y)` is present iff bit `x·m + y` of `mask` is set.
    pub fn from_mask(target_size: usize, source_size: usize, mask: u64) -> Self {
        let bits = (0..target_size * source_size).map(|i| mask >> i & 1 == 1).collect();
        FiniteRelation {
            target_size,
            source_size,
            bits,
        }
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.target_size && y < self.source_size && self.bits[x * self.source_size + y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.target_size)
            .flat_map(|x| (0..self.source_size).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains(x, y))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn transpose(&self) -> Self {
        FiniteRelation::new(
            self.source_size,
            self.target_size,
            self.pairs().into_iter().map(|(x, y)| (y, x)),
        )
        .expect("transposed pairs are in range")
    }

    fn targets_of(&self, y: usize) -> usize {
        (0..self.target_size).filter(|&x| self.contains(x, y)).count()
    }

    fn sources_of(&self, x: usize) -> usize {
        (0..self.source_size).filter(|&y| self.contains(x, y)).count()
    }

    /// Each `y` is related to at most one `x`.
    pub fn is_single_valued(&self) -> bool {
        (0..self.source_size).all(|y| self.targets_of(y) <= 1)
    }

    /// Each `y` is related to some `x`.
    pub fn is_everywhere_defined(&self) -> bool {
        (0..self.source_size).all(|y| self.targets_of(y) >= 1)
    }

    /// Each `x` is related to at most one `y`.
    pub fn is_injective(&self) -> bool {
        (0..self.target_size).all(|x| self.sources_of(x) <= 1)
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.target_size).all(|x| self.sources_of(x) >= 1)
    }

    pub fn is_reduction(&self) -> bool {
        self.is_single_valued() && self.is_surjective()
    }

    pub fn is_coreduction(&self) -> bool {
        self.is_injective() && self.is_everywhere_defined()
    }
}

fn check_composable(f: &FiniteRelation, g: &FiniteRelation) -> Result<()> {
    if f.source_size != g.target_size {
        return Err(Error::NotComposable(format!(
            "source of size {} does not match target of size {}",
            f.source_size, g.target_size
        )));
    }
    Ok(())
}

/// Intermediate points `y` with `(x, y) ∈ f` and `(y, z) ∈ g`.
pub fn witnesses(f: &FiniteRelation, g: &FiniteRelation, x: usize, z: usize) -> Vec<usize> {
    (0..f.source_size).filter(|&y| f.contains(x, y) && g.contains(y, z)).collect()
}

pub fn fcompose(f: &FiniteRelation, g: &FiniteRelation) -> Result<FiniteRelation> {
    check_composable(f, g)?;
    let mut out = FiniteRelation::empty(f.target_size, g.source_size);
    for x in 0..f.target_size {
        for z in 0..g.source_size {
            out.bits[x * g.source_size + z] = (0..f.source_size).any(|y| f.contains(x, y) && g.contains(y, z));
        }
    }
    Ok(out)
}

/// Every composed pair arises through exactly one intermediate point.
pub fn fmonic(f: &FiniteRelation, g: &FiniteRelation) -> Result<bool> {
    check_composable(f, g)?;
    Ok((0..f.target_size).all(|x| (0..g.source_size).all(|z| witnesses(f, g, x, z).len() <= 1)))
}

/// All tuples `(x_0, …, x_n)` with `(x_{i−1}, x_i) ∈ f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrajectorySet {
    pub trajectories: BTreeSet<Vec<usize>>,
}

impl TrajectorySet {
    pub fn len(&self) -> usize {
        self.trajectories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trajectories.is_empty()
    }
}

pub fn ftrajectories(path: &[FiniteRelation]) -> Result<TrajectorySet> {
    let first = path
        .first()
        .ok_or_else(|| Error::Precondition("trajectories need a nonempty path".into()))?;
    for w in path.windows(2) {
        check_composable(&w[0], &w[1])?;
    }
    let mut partial: Vec<Vec<usize>> = (0..first.target_size).map(|x| vec![x]).collect();
    for f in path {
        partial = partial
            .into_iter()
            .flat_map(|t| {
                let last = *t.last().expect("tuples are nonempty");
                (0..f.source_size)
                    .filter(move |&y| f.contains(last, y))
                    .map(move |y| {
                        let mut next = t.clone();
                        next.push(y);
                        next
                    })
            })
            .collect();
    }
    Ok(TrajectorySet {
        trajectories: partial.into_iter().collect(),
    })
}

/// `f = g ∘ h` through `Q = X × Y × Y`, with `(x', y', y'')` encoded as
/// `(x'·|Y| + y')·|Y| + y''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFactorization {
    pub middle_size: usize,
    pub reduction: FiniteRelation,
    pub coreduction: FiniteRelation,
}

/// Each factorization postcondition, reported separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteFactorCheck {
    pub g_single_valued: bool,
    pub g_surjective: bool,
    pub h_injective: bool,
    pub h_everywhere_defined: bool,
    pub monic: bool,
    pub recomposes: bool,
}

impl FiniteFactorCheck {
    pub fn holds(&self) -> bool {
        self.g_single_valued
            && self.g_surjective
            && self.h_injective
            && self.h_everywhere_defined
            && self.monic
            && self.recomposes
    }
}

/// `g = {(x, (x, y, y))}`, `h = {((x', y', y), y) : (x', y') ∈ f}`.
pub fn ffactor(f: &FiniteRelation) -> FiniteFactorization {
    let (nx, ny) = (f.target_size, f.source_size);
    let encode = |x: usize, y1: usize, y2: usize| (x * ny + y1) * ny + y2;
    let nq = nx * ny * ny;
    let g_pairs = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, encode(x, y, y))));
    let h_pairs = f
        .pairs()
        .into_iter()
        .flat_map(|(x, y1)| (0..ny).map(move |y| (encode(x, y1, y), y)));
    FiniteFactorization {
        middle_size: nq,
        reduction: FiniteRelation::new(nx, nq, g_pairs).expect("encoded points are in range"),
        coreduction: FiniteRelation::new(nq, ny, h_pairs.collect::<Vec<_>>()).expect("encoded points are in range"),
    }
}

impl FiniteFactorization {
    pub fn check(&self, f: &FiniteRelation) -> FiniteFactorCheck {
        let (g, h) = (&self.reduction, &self.coreduction);
        FiniteFactorCheck {
            g_single_valued: g.is_single_valued(),
            g_surjective: g.is_surjective(),
            h_injective: h.is_injective(),
            h_everywhere_defined: h.is_everywhere_defined(),
            monic: fmonic(g, h).expect("factors compose"),
            recomposes: fcompose(g, h).expect("factors compose") == *f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_with_identity() {
        let f = FiniteRelation::new(2, 3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(fcompose(&FiniteRelation::identity(2), &f).unwrap(), f);
        assert_eq!(fcompose(&f, &FiniteRelation::identity(3)).unwrap(), f);
        assert!(fcompose(&f, &f).is_err());
    }

    #[test]
    fn two_witnesses_are_not_monic() {
        let f = FiniteRelation::new(1, 2, [(0, 0), (0, 1)]).unwrap();
        let g = FiniteRelation::new(2, 1, [(0, 0), (1, 0)]).unwrap();
        assert_eq!(fcompose(&f, &g).unwrap(), FiniteRelation::new(1, 1, [(0, 0)]).unwrap());
        assert_eq!(witnesses(&f, &g, 0, 0), vec![0, 1]);
        assert!(!fmonic(&f, &g).unwrap());
    }

    #[test]
    fn injective_functions_are_monic() {
        let f = FiniteRelation::new(3, 2, [(0, 0), (2, 1)]).unwrap();
        let g = FiniteRelation::new(2, 2, [(1, 0), (0, 1)]).unwrap();
        assert!(fmonic(&f, &g).unwrap());
    }

    #[test]
    fn trajectories() {
        let f = FiniteRelation::new(2, 2, [(0, 1), (1, 1)]).unwrap();
        let t = ftrajectories(std::slice::from_ref(&f)).unwrap();
        assert_eq!(t.trajectories, [vec![0, 1], vec![1, 1]].into_iter().collect());
        let e = FiniteRelation::empty(2, 2);
        assert!(ftrajectories(&[f.clone(), e]).unwrap().is_empty());
        let g = FiniteRelation::new(2, 1, [(1, 0)]).unwrap();
        assert!(fmonic(&f, &g).unwrap());
        let collapsed = fcompose(&f, &g).unwrap();
        assert_eq!(
            ftrajectories(&[f, g]).unwrap().len(),
            ftrajectories(&[collapsed]).unwrap().len()
        );
        assert!(ftrajectories(&[]).is_err());
    }

    #[test]
    fn factorizations() {
        let id = FiniteRelation::identity(3);
        assert!(ffactor(&id).check(&id).holds());
        let f = FiniteRelation::new(2, 3, [(0, 0), (0, 2), (1, 2)]).unwrap();
        assert!(ffactor(&f).check(&f).holds());
        // The empty relation: h has empty domain, so it is not everywhere defined.
        let e = FiniteRelation::empty(2, 2);
        let check = ffactor(&e).check(&e);
        assert!(!check.h_everywhere_defined);
        assert!(check.g_single_valued && check.g_surjective && check.h_injective && check.monic && check.recomposes);
        // Empty source: Q is empty too, so g cannot reach X.
        let e0 = FiniteRelation::empty(2, 0);
        let check = ffactor(&e0).check(&e0);
        assert!(!check.g_surjective && check.h_everywhere_defined);
        let nothing = FiniteRelation::empty(0, 0);
        assert!(ffactor(&nothing).check(&nothing).holds());
    }
}
