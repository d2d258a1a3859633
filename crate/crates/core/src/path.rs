//! Composable paths of canonical relations and their normal form
//! `(shadow, excess)`.

use crate::error::{Error, Result};
use crate::indexed::{icompose, IndexedCanonicalRelation};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::relations::{
    compose, factor, factor_minimal, graph, pair_excess, unit_counit, CanonicalRelation, Factorization,
};
use crate::symplectic::SymplecticSpace;

/// A finite composable list `f_1, …, f_n` with `f_i : X_{i−1} ← X_i`. The
/// empty path at `X` stands for the identity of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    object: SymplecticSpace,
    steps: Vec<CanonicalRelation>,
}

impl Path {
    pub fn new(steps: Vec<CanonicalRelation>) -> Result<Path> {
        let first = steps
            .first()
            .ok_or_else(|| Error::Precondition("a path needs at least one step; use Path::identity".into()))?;
        Path::with_object(first.target().clone(), steps)
    }

    /// A path whose target is `object`; the steps may be empty.
    pub fn with_object(object: SymplecticSpace, steps: Vec<CanonicalRelation>) -> Result<Path> {
        if let Some(first) = steps.first() {
            if *first.target() != object {
                return Err(Error::NotComposable("path object differs from the first target".into()));
            }
        }
        for (i, pair) in steps.windows(2).enumerate() {
            if pair[0].source() != pair[1].target() {
                return Err(Error::NotComposable(format!("steps {} and {} do not compose", i, i + 1)));
            }
        }
        Ok(Path { object, steps })
    }

    pub fn identity(x: &SymplecticSpace) -> Path {
        Path {
            object: x.clone(),
            steps: Vec::new(),
        }
    }

    pub fn steps(&self) -> &[CanonicalRelation] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn target(&self) -> &SymplecticSpace {
        &self.object
    }

    pub fn source(&self) -> &SymplecticSpace {
        self.steps.last().map_or(&self.object, |f| f.source())
    }

    /// The object between steps `i − 1` and `i`.
    pub fn object_at(&self, i: usize) -> &SymplecticSpace {
        if i == 0 {
            &self.object
        } else {
            self.steps[i - 1].source()
        }
    }

    /// Concatenation `p · q`.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.source() != other.target() {
            return Err(Error::NotComposable("paths do not compose".into()));
        }
        let steps = self.steps.iter().chain(other.steps.iter()).cloned().collect();
        Ok(Path {
            object: self.object.clone(),
            steps,
        })
    }
}

/// `(shadow, excess)`, the complete invariant of a path up to congenial
/// collapse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WWNormalForm {
    pub shadow: CanonicalRelation,
    pub excess: usize,
}

impl WWNormalForm {
    pub fn to_indexed(&self) -> IndexedCanonicalRelation {
        IndexedCanonicalRelation::new(self.shadow.clone(), self.excess as i64, Default::default())
            .expect("excess is nonnegative")
    }
}

/// Removes identity steps.
pub fn path_minimal(p: &Path) -> Path {
    Path {
        object: p.object.clone(),
        steps: p.steps.iter().filter(|f| !f.is_identity()).cloned().collect(),
    }
}

/// Left-to-right set-theoretic composite.
pub fn path_shadow(p: &Path) -> CanonicalRelation {
    let mut acc = CanonicalRelation::identity(&p.object);
    for f in &p.steps {
        acc = compose(&acc, f).expect("path steps compose");
    }
    acc
}

/// `{(x_1, …, x_{n−1}) : (0, x_1) ∈ f_1, (x_{i−1}, x_i) ∈ f_i, (x_{n−1}, 0) ∈ f_n}`
/// inside `X_1 ⊕ … ⊕ X_{n−1}`.
///
/// Each `f_i` is parametrized by coefficients on its canonical basis; the
/// trajectories are the image of the coefficient vectors satisfying the
/// matching conditions, and that image map is injective.
pub fn trajectory_space(p: &Path) -> Subspace {
    let n = p.len();
    if n == 0 {
        return Subspace::zero(0);
    }
    let bases: Vec<&Matrix> = p.steps.iter().map(|f| f.body().basis()).collect();
    let offsets: Vec<usize> = bases
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.rows();
            Some(o)
        })
        .collect();
    let total: usize = bases.iter().map(|b| b.rows()).sum();
    let dim_at = |i: usize| p.object_at(i).dim();

    // One constraint per coordinate of every object X_0, …, X_n.
    let n_constraints: usize = (0..=n).map(dim_at).sum();
    let mut a = Matrix::zeros(n_constraints, total);
    let mut row = 0;
    for obj in 0..=n {
        for s in 0..dim_at(obj) {
            // Source part of step obj − 1 ...
            if obj > 0 {
                let b = bases[obj - 1];
                let col = dim_at(obj - 1) + s;
                for r in 0..b.rows() {
                    a[(row, offsets[obj - 1] + r)] = b[(r, col)].clone();
                }
            }
            // ... minus the target part of step obj.
            if obj < n {
                let b = bases[obj];
                for r in 0..b.rows() {
                    a[(row, offsets[obj] + r)] = -b[(r, s)].clone();
                }
            }
            row += 1;
        }
    }

    let amb: usize = (1..n).map(dim_at).sum();
    let mut to_traj = Matrix::zeros(total, amb);
    let mut col = 0;
    for i in 1..n {
        let b = bases[i - 1];
        let tx = dim_at(i - 1);
        for s in 0..dim_at(i) {
            for r in 0..b.rows() {
                to_traj[(offsets[i - 1] + r, col + s)] = b[(r, tx + s)].clone();
            }
        }
        col += dim_at(i);
    }
    let coefficients = kernel(&a);
    Subspace::row_space(&coefficients.basis().mul(&to_traj).expect("shapes agree"))
}

pub fn ww_normalize(p: &Path) -> Result<WWNormalForm> {
    Ok(WWNormalForm {
        shadow: path_shadow(p),
        excess: trajectory_space(p).dim(),
    })
}

/// Replaces the congenial pair at `(i, i + 1)` by its composite.
pub fn collapse(p: &Path, i: usize) -> Result<Path> {
    if i + 1 >= p.len() {
        return Err(Error::Precondition(format!("no pair at position {i} in a path of length {}", p.len())));
    }
    let (f, g) = (&p.steps[i], &p.steps[i + 1]);
    if pair_excess(f, g)? != 0 {
        return Err(Error::NotCongenial(i));
    }
    let mut steps = p.steps.clone();
    steps.splice(i..i + 2, [compose(f, g)?]);
    Ok(Path {
        object: p.object.clone(),
        steps,
    })
}

/// Inserts the identity of the object at position `i`.
pub fn insert_identity(p: &Path, i: usize) -> Result<Path> {
    if i > p.len() {
        return Err(Error::Precondition(format!("position {i} is past the end of the path")));
    }
    let id = CanonicalRelation::identity(p.object_at(i));
    let mut steps = p.steps.clone();
    steps.insert(i, id);
    Ok(Path {
        object: p.object.clone(),
        steps,
    })
}

/// Entrywise monoidal product, padding the shorter path with identities.
pub fn path_product(p: &Path, q: &Path) -> Path {
    let n = p.len().max(q.len());
    let padded = |path: &Path, i: usize| {
        path.steps
            .get(i)
            .cloned()
            .unwrap_or_else(|| CanonicalRelation::identity(path.source()))
    };
    Path {
        object: p.object.product(&q.object),
        steps: (0..n).map(|i| padded(p, i).product(&padded(q, i))).collect(),
    }
}

/// `[f_1 ⊗ 1_Ȳ, …, f_n ⊗ 1_Ȳ, δ_Y]`, the path of the graph `X × Ȳ ← 1`.
pub fn graph_path(p: &Path) -> Path {
    let y = p.source().clone();
    let id_bar = CanonicalRelation::identity(&y.dual());
    let mut steps: Vec<_> = p.steps.iter().map(|f| f.product(&id_bar)).collect();
    steps.push(unit_counit(&y).0);
    Path {
        object: p.object.product(&y.dual()),
        steps,
    }
}

/// Normal form of [`graph_path`] computed from the normal form of `p`.
pub fn graph_normal_form(nf: &WWNormalForm) -> WWNormalForm {
    WWNormalForm {
        shadow: graph(&nf.shadow),
        excess: nf.excess,
    }
}

fn indexed_steps(p: &Path) -> Vec<IndexedCanonicalRelation> {
    p.steps.iter().cloned().map(IndexedCanonicalRelation::plain).collect()
}

/// `((f_1 f_2) f_3) …` with indexed composition.
pub fn fold_left(p: &Path) -> Result<IndexedCanonicalRelation> {
    indexed_steps(p)
        .iter()
        .try_fold(IndexedCanonicalRelation::identity(&p.object), |acc, f| icompose(&acc, f))
}

/// `f_1 (f_2 (f_3 …))` with indexed composition.
pub fn fold_right(p: &Path) -> Result<IndexedCanonicalRelation> {
    indexed_steps(p)
        .iter()
        .rev()
        .try_fold(IndexedCanonicalRelation::identity(p.source()), |acc, f| icompose(f, &acc))
}

/// Balanced binary association.
pub fn fold_balanced(p: &Path) -> Result<IndexedCanonicalRelation> {
    fn go(steps: &[IndexedCanonicalRelation]) -> Result<IndexedCanonicalRelation> {
        match steps.len() {
            1 => Ok(steps[0].clone()),
            n => icompose(&go(&steps[..n / 2])?, &go(&steps[n / 2..])?),
        }
    }
    if p.is_empty() {
        return Ok(IndexedCanonicalRelation::identity(&p.object));
    }
    go(&indexed_steps(p))
}

/// How each step is split into a reduction and a coreduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StepFactorization {
    /// Through `X × Ȳ × Y`.
    Product,
    /// Through `X × R^{2κ}`, `κ` the kernel dimension.
    #[default]
    Minimal,
}

impl StepFactorization {
    fn apply(self, f: &CanonicalRelation) -> Result<Factorization> {
        match self {
            StepFactorization::Product => Ok(factor(f)),
            StepFactorization::Minimal => factor_minimal(f),
        }
    }
}

/// A reduction `A` and a coreduction `B` with `[A, B]` equivalent to `p`.
pub fn path_factorize(p: &Path) -> Result<Factorization> {
    path_factorize_with(p, StepFactorization::Minimal)
}

/// Factor every step `f_i = g_i h_i`; each `(h_i, g_{i+1})` is congenial
/// because `h_i` is a coreduction, so it collapses to `m_i = h_i g_{i+1}`.
/// Recursing on `[m_1, …, m_{n−1}]` gives `(A', B')`, and then
/// `A = g_1 A'`, `B = B' h_n`.
pub fn path_factorize_with(p: &Path, method: StepFactorization) -> Result<Factorization> {
    let n = p.len();
    if n == 0 {
        let id = CanonicalRelation::identity(&p.object);
        return Ok(Factorization {
            middle: p.object.clone(),
            reduction: id.clone(),
            coreduction: id,
        });
    }
    if n == 1 {
        return method.apply(&p.steps[0]);
    }
    let facs = p.steps.iter().map(|f| method.apply(f)).collect::<Result<Vec<_>>>()?;
    let inner = facs
        .windows(2)
        .map(|w| {
            debug_assert_eq!(pair_excess(&w[0].coreduction, &w[1].reduction).ok(), Some(0));
            compose(&w[0].coreduction, &w[1].reduction)
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = path_factorize_with(&Path::new(inner)?, method)?;
    let first = &facs[0];
    let last = &facs[n - 1];
    debug_assert_eq!(pair_excess(&first.reduction, &sub.reduction).ok(), Some(0));
    debug_assert_eq!(pair_excess(&sub.coreduction, &last.coreduction).ok(), Some(0));
    Ok(Factorization {
        middle: sub.middle,
        reduction: compose(&first.reduction, &sub.reduction)?,
        coreduction: compose(&sub.coreduction, &last.coreduction)?,
    })
}
