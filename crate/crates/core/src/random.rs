//! Seeded generators for property tests and the verification harness.
//!
//! Entries are small integers in `[−5, 5]`; Lagrangians come from a walk of
//! symplectic transvections, which keeps non-transversal configurations
//! common.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar, Subspace};
use crate::path::Path;
use crate::relations::CanonicalRelation;
use crate::symplectic::{extend_to_lagrangian, SymplecticSpace};

pub type TrialRng = ChaCha8Rng;

pub const ENTRY_BOUND: i64 = 5;

pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `index` under `master`, decorrelated by `salt`.
pub fn trial_seed(master: u64, salt: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(salt)).wrapping_add(index))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| int(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))).collect()
}

/// Adds random vectors until the span reaches dimension `dim`.
fn grow<R: Rng>(rng: &mut R, start: Subspace, dim: usize, mut draw: impl FnMut(&mut R) -> Vec<Scalar>) -> Result<Subspace> {
    let mut s = start;
    while s.dim() < dim {
        let v = draw(rng);
        if !s.contains(&v)? {
            s = s.sum(&Subspace::span(s.ambient(), vec![v])?)?;
        }
    }
    Ok(s)
}

pub fn random_subspace_with(rng: &mut impl Rng, ambient: usize, dim: usize) -> Result<Subspace> {
    if dim > ambient {
        return Err(Error::DimensionTooLarge {
            requested: dim,
            ambient,
        });
    }
    grow(rng, Subspace::zero(ambient), dim, |r| random_vector(r, ambient))
}

/// A random `dim`-dimensional subspace of `Q^ambient`, deterministic in `seed`.
pub fn random_subspace(ambient: usize, dim: usize, seed: u64) -> Result<Subspace> {
    random_subspace_with(&mut rng_from_seed(seed), ambient, dim)
}

/// A random subspace of `within` of dimension `dim`.
pub fn random_subspace_of(rng: &mut impl Rng, within: &Subspace, dim: usize) -> Result<Subspace> {
    if dim > within.dim() {
        return Err(Error::DimensionTooLarge {
            requested: dim,
            ambient: within.dim(),
        });
    }
    let basis = within.basis_vectors();
    grow(rng, Subspace::zero(within.ambient()), dim, |r| {
        let c = random_vector(r, basis.len());
        combine(&c, &basis, within.ambient())
    })
}

fn combine(coeffs: &[Scalar], vectors: &[Vec<Scalar>], n: usize) -> Vec<Scalar> {
    let mut out = vec![int(0); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// A unimodular integer matrix: a short product of elementary shears.
fn random_unimodular(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = int(rng.gen_range(-2..=2));
        let mut e = Matrix::identity(n);
        e[(i, j)] = c;
        m = m.mul(&e).expect("square");
    }
    m
}

/// `Q^{2·half_dim}` with the standard form, or (if `twisted`) with the
/// standard form pulled back along a random unimodular change of basis.
pub fn random_space(rng: &mut impl Rng, half_dim: usize, twisted: bool) -> SymplecticSpace {
    let standard = SymplecticSpace::standard(half_dim);
    if !twisted {
        return standard;
    }
    let p = random_unimodular(rng, 2 * half_dim);
    let form = p
        .transpose()
        .mul(standard.form())
        .and_then(|m| m.mul(&p))
        .expect("square");
    SymplecticSpace::new(form).expect("congruent to the standard form")
}

/// Applies `u ↦ u + c·ω(v, u)·v` to every basis vector of `w`.
fn transvect(x: &SymplecticSpace, w: &Subspace, v: &[Scalar], c: &Scalar) -> Result<Subspace> {
    let rows = w
        .basis_vectors()
        .into_iter()
        .map(|u| {
            let k = c * x.form_eval(v, &u)?;
            Ok(u.iter().zip(v).map(|(ui, vi)| ui + &k * vi).collect())
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Subspace::span(x.dim(), rows)
}

/// A Lagrangian through a random line, moved by `steps` random transvections.
pub fn random_lagrangian_steps(rng: &mut impl Rng, x: &SymplecticSpace, steps: usize) -> Result<Subspace> {
    if x.dim() == 0 {
        return Ok(Subspace::zero(0));
    }
    let line = random_subspace_with(rng, x.dim(), 1)?;
    let mut l = extend_to_lagrangian(x, &line)?;
    for _ in 0..steps {
        let v = random_vector(rng, x.dim());
        let c = int(rng.gen_range(-2..=2));
        l = transvect(x, &l, &v, &c)?;
    }
    Ok(l)
}

pub fn random_lagrangian(rng: &mut impl Rng, x: &SymplecticSpace) -> Result<Subspace> {
    let steps = rng.gen_range(0..=x.half_dim() + 1);
    random_lagrangian_steps(rng, x, steps)
}

/// A product of `steps` random transvections `u ↦ u + c·ω(v, u)·v`.
pub fn random_symplectic_matrix(rng: &mut impl Rng, x: &SymplecticSpace, steps: usize) -> Matrix {
    let n = x.dim();
    let mut t = Matrix::identity(n);
    for _ in 0..steps {
        let v = random_vector(rng, n);
        let c = int(rng.gen_range(-2..=2));
        let col = Matrix::from_rows(1, v.iter().map(|e| vec![e * &c]).collect()).expect("column");
        let row = Matrix::from_rows(n, vec![v]).expect("row").mul(x.form()).expect("square form");
        let mut step = col.mul(&row).expect("outer product");
        for i in 0..n {
            step[(i, i)] += int(1);
        }
        t = step.mul(&t).expect("square");
    }
    t
}

/// A random Lagrangian containing the isotropic subspace `iso`.
pub fn random_lagrangian_containing(rng: &mut impl Rng, x: &SymplecticSpace, iso: &Subspace) -> Result<Subspace> {
    x.require_isotropic(iso)?;
    let mut m = iso.clone();
    while m.dim() < x.half_dim() {
        let perp = x.complement(&m)?;
        let step = random_subspace_of(rng, &perp, m.dim() + 1)?;
        let v = step
            .basis_vectors()
            .into_iter()
            .find(|v| !m.contains(v).unwrap_or(true))
            .expect("a subspace larger than M leaves M");
        m = m.sum(&Subspace::span(x.dim(), vec![v])?)?;
    }
    Ok(m)
}

pub fn random_isotropic(rng: &mut impl Rng, x: &SymplecticSpace, dim: usize) -> Result<Subspace> {
    let l = random_lagrangian(rng, x)?;
    random_subspace_of(rng, &l, dim)
}

/// A coisotropic subspace whose orthogonal has dimension `perp_dim`.
pub fn random_coisotropic(rng: &mut impl Rng, x: &SymplecticSpace, perp_dim: usize) -> Result<Subspace> {
    let i = random_isotropic(rng, x, perp_dim)?;
    x.complement(&i)
}

pub fn random_relation(rng: &mut impl Rng, x: &SymplecticSpace, y: &SymplecticSpace) -> Result<CanonicalRelation> {
    let ambient = x.product(&y.dual());
    let body = random_lagrangian(rng, &ambient)?;
    CanonicalRelation::new(x.clone(), y.clone(), body)
}

/// `L₁ × L₂`: a relation with kernel `L₂` and indeterminacy `L₁`.
pub fn random_split_relation(rng: &mut impl Rng, x: &SymplecticSpace, y: &SymplecticSpace) -> Result<CanonicalRelation> {
    let l1 = random_lagrangian(rng, x)?;
    let l2 = random_lagrangian(rng, y)?;
    CanonicalRelation::new(x.clone(), y.clone(), l1.product(&l2))
}

/// A random half dimension, so that `2·h ≤ max_dim`.
pub fn random_half_dim(rng: &mut impl Rng, max_dim: usize) -> usize {
    rng.gen_range(0..=max_dim / 2)
}

/// A random space of dimension at most `max_dim`; twisted half the time.
pub fn random_space_upto(rng: &mut impl Rng, max_dim: usize) -> SymplecticSpace {
    let h = random_half_dim(rng, max_dim);
    let twisted = rng.gen_bool(0.5);
    random_space(rng, h, twisted)
}

/// Relation from a space to another, chosen among generic, split, and
/// (when the spaces agree) identity relations.
pub fn random_step(rng: &mut impl Rng, x: &SymplecticSpace, y: &SymplecticSpace) -> Result<CanonicalRelation> {
    match rng.gen_range(0..8) {
        0 if x == y => Ok(CanonicalRelation::identity(x)),
        1 | 2 => random_split_relation(rng, x, y),
        _ => random_relation(rng, x, y),
    }
}

/// A composable chain of `objects.len() − 1` relations.
pub fn random_chain(rng: &mut impl Rng, objects: &[SymplecticSpace]) -> Result<Vec<CanonicalRelation>> {
    objects.windows(2).map(|w| random_step(rng, &w[0], &w[1])).collect()
}

/// Objects of a random chain: usually independent, sometimes repeating the
/// previous one so identities and endomorphisms occur.
pub fn random_objects(rng: &mut impl Rng, count: usize, max_dim: usize) -> Vec<SymplecticSpace> {
    let mut out: Vec<SymplecticSpace> = Vec::with_capacity(count);
    for _ in 0..count {
        match out.last() {
            Some(prev) if rng.gen_bool(0.25) => out.push(prev.clone()),
            _ => out.push(random_space_upto(rng, max_dim)),
        }
    }
    out
}

/// `(f, g)` composable; a third of the time `f = L₁ × L₂`, `g = L₂ × L₃`
/// share their middle factor, forcing excess `dim L₂`.
pub fn random_composable_pair(rng: &mut impl Rng, max_dim: usize) -> Result<(CanonicalRelation, CanonicalRelation)> {
    let objs = random_objects(rng, 3, max_dim);
    if rng.gen_range(0..3) == 0 {
        let l1 = random_lagrangian(rng, &objs[0])?;
        let l2 = random_lagrangian(rng, &objs[1])?;
        let l3 = random_lagrangian(rng, &objs[2])?;
        let f = CanonicalRelation::new(objs[0].clone(), objs[1].clone(), l1.product(&l2))?;
        let g = CanonicalRelation::new(objs[1].clone(), objs[2].clone(), l2.product(&l3))?;
        return Ok((f, g));
    }
    let chain = random_chain(rng, &objs)?;
    Ok((chain[0].clone(), chain[1].clone()))
}

pub fn random_path(rng: &mut impl Rng, len: usize, max_dim: usize) -> Result<Path> {
    let objs = random_objects(rng, len + 1, max_dim);
    Path::with_object(objs[0].clone(), random_chain(rng, &objs)?)
}

/// A random length in `1..=max_len`.
pub fn random_len(rng: &mut impl Rng, max_len: usize) -> usize {
    rng.gen_range(1..=max_len.max(1))
}

/// Picks one element uniformly.
pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty choice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_examples() {
        assert_eq!(random_subspace(5, 0, 1).unwrap(), Subspace::zero(5));
        assert_eq!(random_subspace(5, 5, 1).unwrap(), Subspace::full(5));
        let a = random_subspace(4, 2, 7).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a, random_subspace(4, 2, 7).unwrap());
        assert!(random_subspace(3, 4, 0).is_err());
    }

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = rng_from_seed(3);
        for _ in 0..30 {
            let x = random_space_upto(&mut rng, 6);
            let l = random_lagrangian(&mut rng, &x).unwrap();
            assert!(x.is_lagrangian(&l).unwrap());
            let k = rng.gen_range(0..=x.half_dim());
            let c = random_coisotropic(&mut rng, &x, k).unwrap();
            assert!(x.is_coisotropic(&c).unwrap());
            assert_eq!(x.complement(&c).unwrap().dim(), k);
            let (f, g) = random_composable_pair(&mut rng, 6).unwrap();
            assert_eq!(f.source(), g.target());
        }
        let x = random_space(&mut rng, 3, true);
        let t = random_symplectic_matrix(&mut rng, &x, 3);
        assert!(x.is_symplectic_map(&t).unwrap());
        let iso = random_isotropic(&mut rng, &x, x.half_dim() / 2).unwrap();
        let l = random_lagrangian_containing(&mut rng, &x, &iso).unwrap();
        assert!(x.is_lagrangian(&l).unwrap() && iso.leq(&l).unwrap());
        let p = random_path(&mut rng, 4, 4).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn seeds_are_spread() {
        assert_ne!(trial_seed(1, 0, 0), trial_seed(1, 0, 1));
        assert_ne!(trial_seed(1, 0, 0), trial_seed(1, 1, 0));
        assert_eq!(trial_seed(9, 4, 2), trial_seed(9, 4, 2));
    }
}
