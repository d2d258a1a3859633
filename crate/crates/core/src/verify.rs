//! Seeded property verification.
//!
//! Every law runs as independent trials; trial `i` of law `L` draws from a
//! generator seeded by `(master seed, L, i)`, so a failure is reproduced by
//! its seed alone. Failures carry the counterexample as JSON.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::finite::census::{factor_check_expected, span_bijection};
use crate::finite::{fcompose, ffactor, fmonic, ftrajectories, witnesses, FiniteRelation};
use crate::indexed::{
    deformation_family, icompose, igraph_compose, iinvert, indexed_reduce, iproduct, itrace, itranspose_reduction,
    ishift, lift_indexed, normal_form_hyper, sabot_leq, IndexMode, IndexedCanonicalRelation, IndexedLagrangian,
};
use crate::json::Json;
use crate::linalg::{int, kernel, Matrix, Scalar, Subspace};
use crate::path::{
    collapse, fold_balanced, fold_left, fold_right, graph_normal_form, graph_path, insert_identity, path_factorize, path_product,
    path_minimal, path_shadow, ww_normalize, Path,
};
use crate::random::*;
use crate::relations::projector_direct;
use crate::relations::{
    compose, congeniality, factor, factor_minimal, graph, graph_via_compose, identity, pair_excess, projector,
    reduced_product, reduction_relation, ungraph, ungraph_via_compose, unit_counit, CanonicalRelation,
};
use crate::symplectic::{
    adapted_canonical_basis, chow_distance, reduce_lagrangian, reduction_data, AdaptedBasis, ReductionData,
    SymplecticSpace,
};

/// Per-trial state: the generator, the effective limits, and the first
/// failed check.
pub struct Ctx {
    pub rng: TrialRng,
    pub max_dim: usize,
    pub mode: IndexMode,
    failure: Option<Value>,
    notes: Vec<&'static str>,
}

impl Ctx {
    fn new(seed: u64, max_dim: usize, mode: IndexMode) -> Ctx {
        Ctx {
            rng: rng_from_seed(seed),
            max_dim,
            mode,
            failure: None,
            notes: vec![],
        }
    }

    /// Records the first failing check with its counterexample.
    pub fn check(&mut self, ok: bool, what: &str, data: impl FnOnce() -> Value) {
        if !ok && self.failure.is_none() {
            self.failure = Some(json!({"check": what, "data": data()}));
        }
    }

    /// Counts an informational event in the report.
    pub fn note(&mut self, key: &'static str) {
        self.notes.push(key);
    }

    fn extended(&self) -> bool {
        self.mode == IndexMode::Extended
    }
}

type LawFn = fn(&mut Ctx) -> Result<()>;

pub struct Law {
    pub name: &'static str,
    pub suite: &'static str,
    /// Upper bound on ambient dimensions, whatever `max_dim` is requested.
    pub dim_cap: usize,
    pub statement: &'static str,
    run: LawFn,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub law: String,
    pub trial: u64,
    pub seed: u64,
    pub max_dim: usize,
    pub mode: IndexMode,
    pub counterexample: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawSummary {
    pub law: String,
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, Default)]
pub struct LawRun {
    pub summary: Option<LawSummary>,
    pub failures: Vec<Failure>,
    pub notes: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub max_dim: usize,
    pub mode: IndexMode,
    pub laws: Vec<LawSummary>,
    pub failures: Vec<Failure>,
    /// Informational counts, not failures.
    pub notes: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_dim: usize,
    pub mode: IndexMode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            trials: 20,
            max_dim: 8,
            mode: IndexMode::Standard,
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

fn run_trial(law: &Law, trial: u64, seed: u64, max_dim: usize, mode: IndexMode) -> (Option<Failure>, Vec<&'static str>) {
    let mut ctx = Ctx::new(seed, max_dim, mode);
    let outcome = catch_unwind(AssertUnwindSafe(|| (law.run)(&mut ctx)));
    let counterexample = match outcome {
        Ok(Ok(())) => ctx.failure.take(),
        Ok(Err(e)) => Some(json!({"error": e.to_string()})),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Some(json!({"panic": msg}))
        }
    };
    let failure = counterexample.map(|counterexample| Failure {
        law: law.name.to_string(),
        trial,
        seed,
        max_dim,
        mode,
        counterexample,
    });
    (failure, ctx.notes)
}

/// Runs `trials` trials of one law; trials are sharded across threads.
pub fn run_law(law: &Law, cfg: &VerifyConfig) -> LawRun {
    let max_dim = cfg.max_dim.min(law.dim_cap);
    let salt = fnv1a(law.name);
    let results: Vec<_> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(law, i, trial_seed(cfg.seed, salt, i), max_dim, cfg.mode))
        .collect();
    let mut run = LawRun::default();
    for (failure, notes) in results {
        run.failures.extend(failure);
        for n in notes {
            *run.notes.entry(format!("{}.{n}", law.name)).or_default() += 1;
        }
    }
    run.failures.sort_by_key(|f| f.trial);
    run.summary = Some(LawSummary {
        law: law.name.to_string(),
        suite: law.suite.to_string(),
        trials: cfg.trials,
        failures: run.failures.len() as u64,
    });
    run
}

pub fn find_law(name: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.name == name)
}

pub fn laws() -> &'static [Law] {
    LAWS
}

/// Suite names in registry order.
pub fn suites() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = vec![];
    for l in LAWS {
        if !out.contains(&l.suite) {
            out.push(l.suite);
        }
    }
    out
}

/// Runs every law of `suite` (or of every suite, for `"all"`).
pub fn run_suite(suite: &str, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let selected: Vec<&Law> = LAWS.iter().filter(|l| suite == "all" || l.suite == suite).collect();
    if selected.is_empty() {
        return Err(Error::Precondition(format!(
            "unknown suite {suite:?}; known suites: all, {}",
            suites().join(", ")
        )));
    }
    let start = Instant::now();
    let mut report = VerifyReport {
        suite: suite.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        max_dim: cfg.max_dim,
        mode: cfg.mode,
        laws: vec![],
        failures: vec![],
        notes: BTreeMap::new(),
        elapsed_ms: 0,
    };
    for law in selected {
        let run = run_law(law, cfg);
        report.laws.extend(run.summary);
        report.failures.extend(run.failures);
        for (k, v) in run.notes {
            *report.notes.entry(k).or_default() += v;
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Re-runs the trial that produced `failure`; returns the failure again if
/// it still fails.
pub fn replay(failure: &Failure) -> Result<Option<Failure>> {
    let law = find_law(&failure.law).ok_or_else(|| Error::Precondition(format!("unknown law {:?}", failure.law)))?;
    Ok(run_trial(law, failure.trial, failure.seed, failure.max_dim, failure.mode).0)
}

// ---------------------------------------------------------------- helpers

fn j<T: Json>(x: &T) -> Value {
    x.to_json()
}

fn random_matrix(c: &mut Ctx) -> Matrix {
    let rows = c.rng.gen_range(0..=c.max_dim);
    let cols = c.rng.gen_range(0..=c.max_dim);
    // A product through a random inner dimension makes rank deficiency common.
    let inner = c.rng.gen_range(0..=rows.max(cols));
    let a = Matrix::from_rows(inner, (0..rows).map(|_| random_vector(&mut c.rng, inner)).collect()).expect("rows");
    let b = Matrix::from_rows(cols, (0..inner).map(|_| random_vector(&mut c.rng, cols)).collect()).expect("rows");
    a.mul(&b).expect("inner dimensions agree")
}

fn space(c: &mut Ctx) -> SymplecticSpace {
    random_space_upto(&mut c.rng, c.max_dim)
}

fn nonzero_space(c: &mut Ctx) -> SymplecticSpace {
    let h = c.rng.gen_range(1..=(c.max_dim / 2).max(1));
    let twisted = c.rng.gen_bool(0.5);
    random_space(&mut c.rng, h, twisted)
}

fn coisotropic(c: &mut Ctx, x: &SymplecticSpace) -> Result<ReductionData> {
    let k = c.rng.gen_range(0..=x.half_dim());
    let co = random_coisotropic(&mut c.rng, x, k)?;
    reduction_data(x, &co)
}

/// A Lagrangian of `x` that half the time contains part of `C⊥`.
fn lagrangian_near(c: &mut Ctx, rd: &ReductionData) -> Result<Subspace> {
    if c.rng.gen_bool(0.5) {
        let k = c.rng.gen_range(0..=rd.perp_dim());
        let y = random_subspace_of(&mut c.rng, &rd.perp, k)?;
        random_lagrangian_containing(&mut c.rng, &rd.ambient, &y)
    } else {
        random_lagrangian(&mut c.rng, &rd.ambient)
    }
}

/// `L` moved by up to `steps` transvections; `d(L, result) ≤ steps`.
fn nearby(c: &mut Ctx, x: &SymplecticSpace, l: &Subspace, steps: usize) -> Result<Subspace> {
    let t = random_symplectic_matrix(&mut c.rng, x, steps);
    l.image(&t)
}

fn correlated_lagrangians(c: &mut Ctx, x: &SymplecticSpace, count: usize) -> Result<Vec<Subspace>> {
    let mut out: Vec<Subspace> = vec![];
    for _ in 0..count {
        let next = match out.last() {
            Some(prev) if c.rng.gen_bool(0.5) => {
                let steps = c.rng.gen_range(0..=2);
                let prev = prev.clone();
                nearby(c, x, &prev, steps)?
            }
            _ => random_lagrangian(&mut c.rng, x)?,
        };
        out.push(next);
    }
    Ok(out)
}

/// The relation `{(T y, y)}` of a symplectic matrix `T` of `x`.
fn symplectomorphism(x: &SymplecticSpace, t: &Matrix) -> Result<CanonicalRelation> {
    let rows = t.transpose().hstack(&Matrix::identity(x.dim()))?;
    CanonicalRelation::new(x.clone(), x.clone(), Subspace::row_space(&rows))
}

/// Three composable relations; sometimes adjacent steps share a Lagrangian
/// factor, forcing excess.
fn random_triple(c: &mut Ctx) -> Result<[CanonicalRelation; 3]> {
    let objs = random_objects(&mut c.rng, 4, c.max_dim);
    let ls = objs
        .iter()
        .map(|x| random_lagrangian(&mut c.rng, x))
        .collect::<Result<Vec<_>>>()?;
    let split = |i: usize| CanonicalRelation::new(objs[i].clone(), objs[i + 1].clone(), ls[i].product(&ls[i + 1]));
    let mut steps = random_chain(&mut c.rng, &objs)?;
    match c.rng.gen_range(0..4) {
        1 => {
            steps[0] = split(0)?;
            steps[1] = split(1)?;
        }
        2 => {
            steps[1] = split(1)?;
            steps[2] = split(2)?;
        }
        3 => {
            for (i, s) in steps.iter_mut().enumerate() {
                *s = split(i)?;
            }
        }
        _ => {}
    }
    Ok([steps[0].clone(), steps[1].clone(), steps[2].clone()])
}

fn path_json(p: &Path) -> Value {
    p.to_json()
}

fn nf_json(p: &Path) -> Value {
    match ww_normalize(p) {
        Ok(nf) => json!({"shadow": j(&nf.shadow), "excess": nf.excess}),
        Err(e) => json!({"error": e.to_string()}),
    }
}

fn random_nonzero_rational(c: &mut Ctx) -> Scalar {
    let mut p = 0;
    while p == 0 {
        p = c.rng.gen_range(-7..=7);
    }
    let q = c.rng.gen_range(1..=5);
    Scalar::new(p.into(), q.into())
}

// ---------------------------------------------------------------- linalg

fn rref_idempotent(c: &mut Ctx) -> Result<()> {
    let m = random_matrix(c);
    let r = m.rref();
    c.check(r.rref() == r, "rref(rref(m)) = rref(m)", || json!({"matrix": j(&m)}));
    Ok(())
}

fn rank_nullity(c: &mut Ctx) -> Result<()> {
    let m = random_matrix(c);
    let k = kernel(&m);
    let annihilated = k
        .basis_vectors()
        .iter()
        .all(|v| m.mul_vec(v).map(|w| w.iter().all(|x| *x == int(0))).unwrap_or(false));
    c.check(m.rank() + k.dim() == m.cols() && annihilated, "rank + nullity = cols", || {
        json!({"matrix": j(&m), "kernel": j(&k)})
    });
    Ok(())
}

fn modular_law(c: &mut Ctx) -> Result<()> {
    let n = c.rng.gen_range(0..=c.max_dim);
    let da = c.rng.gen_range(0..=n);
    let a = random_subspace_with(&mut c.rng, n, da)?;
    let b = if c.rng.gen_bool(0.5) {
        // Share part of a.
        let shared = c.rng.gen_range(0..=da);
        let part = random_subspace_of(&mut c.rng, &a, shared)?;
        let extra = c.rng.gen_range(0..=n - shared);
        part.sum(&random_subspace_with(&mut c.rng, n, extra)?)?
    } else {
        let db = c.rng.gen_range(0..=n);
        random_subspace_with(&mut c.rng, n, db)?
    };
    let (s, i) = (a.sum(&b)?, a.intersect(&b)?);
    let ok = a.dim() + b.dim() == s.dim() + i.dim() && i.leq(&a)? && i.leq(&b)? && a.leq(&s)? && b.leq(&s)?;
    c.check(ok, "dim a + dim b = dim(a+b) + dim(a∩b)", || json!({"a": j(&a), "b": j(&b)}));
    Ok(())
}

fn canonical_equality(c: &mut Ctx) -> Result<()> {
    let n = c.rng.gen_range(0..=c.max_dim);
    let d = c.rng.gen_range(0..=n);
    let a = random_subspace_with(&mut c.rng, n, d)?;
    let b = if c.rng.gen_bool(0.5) {
        random_subspace_of(&mut c.rng, &a, d)?
    } else {
        random_subspace_with(&mut c.rng, n, d)?
    };
    let structural = a == b;
    let mutual = a.leq(&b)? && b.leq(&a)?;
    c.check(structural == mutual, "a = b iff a ≤ b and b ≤ a", || json!({"a": j(&a), "b": j(&b)}));
    Ok(())
}

// ---------------------------------------------------------------- symplectic

fn double_complement(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let d = c.rng.gen_range(0..=x.dim());
    let w = random_subspace_with(&mut c.rng, x.dim(), d)?;
    let wp = x.complement(&w)?;
    let ok = x.complement(&wp)? == w && w.dim() + wp.dim() == x.dim();
    let class = x.classify(&w)?;
    let consistent = class.is_isotropic == w.leq(&wp)? && class.is_coisotropic == wp.leq(&w)?;
    c.check(ok && consistent, "(W⊥)⊥ = W, dim W + dim W⊥ = dim X", || {
        json!({"space": j(&x), "w": j(&w)})
    });
    Ok(())
}

fn reduction_laws(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let l = lagrangian_near(c, &rd)?;
    let lc = reduce_lagrangian(&rd, &l)?;
    let by_intersection = l.intersect(&rd.perp)?.dim();
    let by_sum = x.dim() - l.sum(&rd.coisotropic)?.dim();
    let data = || json!({"space": j(&x), "coisotropic": j(&rd.coisotropic), "lagrangian": j(&l)});
    c.check(rd.check_invariants()?, "reduction data invariants", data);
    c.check(rd.reduced.is_lagrangian(&lc)?, "L^C is Lagrangian", data);
    c.check(by_intersection == by_sum, "dim(L∩C⊥) = dim X − dim(L+C)", data);
    Ok(())
}

fn chow_metric(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let ls = correlated_lagrangians(c, &x, 3)?;
    let d = |a: &Subspace, b: &Subspace| chow_distance(&x, a, b);
    let (d01, d12, d02) = (d(&ls[0], &ls[1])?, d(&ls[1], &ls[2])?, d(&ls[0], &ls[2])?);
    let data = || json!({"space": j(&x), "lagrangians": ls.iter().map(j).collect::<Vec<_>>()});
    c.check(d(&ls[0], &ls[0])? == 0, "d(L, L) = 0", data);
    c.check((d01 == 0) == (ls[0] == ls[1]), "d(L, L') = 0 iff L = L'", data);
    c.check(d01 == d(&ls[1], &ls[0])?, "symmetry", data);
    c.check(d02 <= d01 + d12, "triangle inequality", data);
    Ok(())
}

fn adapted_images_ok(x: &SymplecticSpace, b: &AdaptedBasis) -> Result<bool> {
    let (l0, i0) = AdaptedBasis::normal_form(b.dim_space, b.dim_isotropic, b.dim_intersection);
    Ok(x.is_symplectic_map(&b.transform)? && b.lagrangian_image == l0 && b.isotropic_image == i0)
}

fn adapted_basis(c: &mut Ctx) -> Result<()> {
    let h = random_half_dim(&mut c.rng, c.max_dim);
    let x = SymplecticSpace::standard(h);
    let l = random_lagrangian(&mut c.rng, &x)?;
    let di = c.rng.gen_range(0..=h);
    let i = if c.rng.gen_bool(0.5) {
        // Force a nontrivial intersection with L.
        let a = c.rng.gen_range(0..=di);
        let common = random_subspace_of(&mut c.rng, &l, a)?;
        let m = random_lagrangian_containing(&mut c.rng, &x, &common)?;
        random_subspace_of(&mut c.rng, &m, di)?.sum(&common)?
    } else {
        random_isotropic(&mut c.rng, &x, di)?
    };
    let b = adapted_canonical_basis(&x, &l, &i)?;
    c.check(adapted_images_ok(&x, &b)?, "TᵀΩT = Ω and (L, I) ↦ normal form", || {
        json!({"space": j(&x), "lagrangian": j(&l), "isotropic": j(&i)})
    });
    Ok(())
}

fn adapted_normal_form(c: &mut Ctx) -> Result<()> {
    let h = random_half_dim(&mut c.rng, c.max_dim);
    let x = SymplecticSpace::standard(h);
    let di = c.rng.gen_range(0..=h);
    let a = c.rng.gen_range(0..=di);
    let (l0, i0) = AdaptedBasis::normal_form(x.dim(), di, a);
    let mut pairs = vec![];
    for _ in 0..2 {
        let steps = c.rng.gen_range(1..=h + 2);
        let t = random_symplectic_matrix(&mut c.rng, &x, steps);
        pairs.push((l0.image(&t)?, i0.image(&t)?));
    }
    let b1 = adapted_canonical_basis(&x, &pairs[0].0, &pairs[0].1)?;
    let b2 = adapted_canonical_basis(&x, &pairs[1].0, &pairs[1].1)?;
    let same = b1.lagrangian_image == b2.lagrangian_image && b1.isotropic_image == b2.isotropic_image;
    let data = || {
        json!({"space": j(&x), "pairs": pairs.iter().map(|(l, i)| json!({"lagrangian": j(l), "isotropic": j(i)})).collect::<Vec<_>>()})
    };
    c.check(
        (b1.dim_space, b1.dim_isotropic, b1.dim_intersection) == (x.dim(), di, a),
        "invariant triple is preserved by symplectic maps",
        data,
    );
    c.check(same && adapted_images_ok(&x, &b1)? && adapted_images_ok(&x, &b2)?, "equal triples give the identical normal form", data);
    Ok(())
}

fn hyper_normal_form(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let lambda = random_lagrangian(&mut c.rng, &x)?;
    for k in 0..=3 {
        for r in 0..=3 {
            let h = normal_form_hyper(&x, &lambda, k, r)?;
            let data = || json!({"space": j(&x), "lambda": j(&lambda), "k": k, "r": r});
            c.check(h.space.is_coisotropic(&h.coisotropic)?, "C is coisotropic", data);
            c.check(h.space.is_lagrangian(&h.lagrangian)?, "L is Lagrangian", data);
            let rd = reduction_data(&h.space, &h.coisotropic)?;
            let reduced = indexed_reduce(&rd, &IndexedLagrangian::new(h.space.clone(), h.lagrangian.clone(), 0)?)?;
            let expected = IndexedLagrangian::new(x.clone(), lambda.clone(), k as i64)?;
            c.check(reduced == expected, "reduces to (Λ, k)", data);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- relations

fn zigzag(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let (d, e) = unit_counit(&x);
    let id = identity(&x);
    let idb = identity(&x.dual());
    let pairs = [
        (identity(&x).product(&e), d.product(&id), id.clone()),
        (e.product(&idb), idb.product(&d), idb.clone()),
    ];
    for (i, (left, right, expected)) in pairs.iter().enumerate() {
        let composite = compose(left, right)?;
        let data = || json!({"space": j(&x), "zigzag": i});
        c.check(composite == *expected, "zigzag composite is the identity", data);
        c.check(pair_excess(left, right)? == 0, "zigzag pair has excess 0", data);
    }
    Ok(())
}

fn graph_calculus(c: &mut Ctx) -> Result<()> {
    let (f, g) = random_composable_pair(&mut c.rng, c.max_dim)?;
    let (x, y) = (f.target().clone(), f.source().clone());
    let gamma = CanonicalRelation::from_lagrangian(&f.ambient(), &random_lagrangian(&mut c.rng, &f.ambient())?)?;
    let data = || json!({"f": j(&f), "g": j(&g), "gamma": j(&gamma)});
    c.check(ungraph(&graph(&f), &x, &y)? == f, "ungraph(graph f) = f", data);
    c.check(graph(&ungraph(&gamma, &x, &y)?) == gamma, "graph(ungraph γ) = γ", data);
    c.check(graph_via_compose(&f)? == graph(&f), "graph via unit agrees", data);
    c.check(ungraph_via_compose(&graph(&f), &x, &y)? == f, "ungraph via counit agrees", data);
    let rp = reduced_product(&graph(&f), &graph(&g), &y)?;
    c.check(rp == graph(&compose(&f, &g)?), "reduced product of graphs = graph of composite", data);
    Ok(())
}

fn monic_transversal(c: &mut Ctx) -> Result<()> {
    let (f, g) = random_composable_pair(&mut c.rng, c.max_dim)?;
    let cg = congeniality(&f, &g)?;
    let e = pair_excess(&f, &g)?;
    let data = || json!({"f": j(&f), "g": j(&g), "monic": cg.monic, "transversal": cg.transversal, "excess": e});
    c.check(cg.monic == cg.transversal, "monic iff transversal", data);
    c.check(cg.monic == (e == 0), "monic iff excess 0", data);
    Ok(())
}

fn classes(c: &mut Ctx) -> Result<()> {
    let (f, g) = random_composable_pair(&mut c.rng, c.max_dim)?;
    let (a, b) = (f.classify(), f.transpose().classify());
    let swapped = a.single_valued == b.injective
        && a.injective == b.single_valued
        && a.surjective == b.everywhere_defined
        && a.everywhere_defined == b.surjective
        && a.is_reduction == b.is_coreduction;
    c.check(swapped, "classes swap under transpose", || json!({"f": j(&f)}));
    let fg = compose(&f, &g)?;
    c.check(fg.ambient().is_lagrangian(fg.body())?, "composite is Lagrangian", || {
        json!({"f": j(&f), "g": j(&g)})
    });

    // Reductions Y^{C₁} ← Y ← Z through reduced spaces, twisted by symplectomorphisms.
    let z = space(c);
    let rd2 = coisotropic(c, &z)?;
    let y = rd2.reduced.clone();
    let rd1 = coisotropic(c, &y)?;
    let steps = c.rng.gen_range(0..=2);
    let t = random_symplectic_matrix(&mut c.rng, &y, steps);
    let twist = symplectomorphism(&y, &t)?;
    let r1 = compose(&reduction_relation(&rd1), &twist)?;
    let r2 = reduction_relation(&rd2);
    let red = compose(&r1, &r2)?;
    let data = || json!({"r1": j(&r1), "r2": j(&r2)});
    c.check(r1.is_reduction() && r2.is_reduction() && red.is_reduction(), "reductions compose to a reduction", data);
    let cored = compose(&r2.transpose(), &r1.transpose())?;
    c.check(cored.is_coreduction(), "coreductions compose to a coreduction", data);

    // A coreduction on the left or a reduction on the right has no excess.
    let h = factor_minimal(&f)?.coreduction;
    let gg = factor_minimal(&g)?.reduction;
    let data = || json!({"f": j(&f), "g": j(&g)});
    c.check(pair_excess(&h, &g)? == 0, "excess(coreduction, g) = 0", data);
    c.check(pair_excess(&f, &gg)? == 0, "excess(f, reduction) = 0", data);
    Ok(())
}

fn projector_laws(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let r = projector(&rd);
    let rho = reduction_relation(&rd);
    let data = || json!({"space": j(&x), "coisotropic": j(&rd.coisotropic)});
    c.check(r.body() == &projector_direct(&rd), "R^C = {(x, y) ∈ C×C : x − y ∈ C⊥}", data);
    c.check(compose(&r, &r)? == r, "R^C is idempotent", data);
    c.check(pair_excess(&rho, &rho.transpose())? == rd.perp_dim(), "excess(ρ, ρᵗ) = dim C⊥", data);
    c.check(compose(&rho, &rho.transpose())? == identity(&rd.reduced), "ρ ρᵗ = 1", data);
    Ok(())
}

fn axiom5(c: &mut Ctx) -> Result<()> {
    let [f, g, h] = random_triple(c)?;
    let (fg, gh) = (compose(&f, &g)?, compose(&g, &h)?);
    let (e_fg, e_fg_h) = (pair_excess(&f, &g)?, pair_excess(&fg, &h)?);
    let (e_gh, e_f_gh) = (pair_excess(&g, &h)?, pair_excess(&f, &gh)?);
    let data = || {
        json!({"f": j(&f), "g": j(&g), "h": j(&h), "excesses": [e_fg, e_fg_h, e_gh, e_f_gh]})
    };
    c.check(
        (e_fg == 0 && e_fg_h == 0) == (e_gh == 0 && e_f_gh == 0),
        "(f,g), (fg,h) congenial iff (g,h), (f,gh) congenial",
        data,
    );
    c.check(e_fg + e_fg_h == e_gh + e_f_gh, "E(f,g) + E(fg,h) = E(g,h) + E(f,gh)", data);
    Ok(())
}

// ---------------------------------------------------------------- paths

fn move_invariance(c: &mut Ctx) -> Result<()> {
    let len = random_len(&mut c.rng, 4);
    let p = random_path(&mut c.rng, len, c.max_dim)?;
    let nf = ww_normalize(&p)?;
    let mut variants = vec![("minimal", path_minimal(&p))];
    for i in 0..=p.len() {
        variants.push(("insert identity", insert_identity(&p, i)?));
    }
    for i in 0..p.len().saturating_sub(1) {
        match collapse(&p, i) {
            Ok(q) => variants.push(("collapse", q)),
            Err(Error::NotCongenial(_)) => {}
            Err(e) => return Err(e),
        }
    }
    for (what, q) in variants {
        c.check(ww_normalize(&q)? == nf, what, || {
            json!({"path": path_json(&p), "moved": path_json(&q), "before": nf_json(&p), "after": nf_json(&q)})
        });
    }
    Ok(())
}

fn fold_orders(c: &mut Ctx) -> Result<()> {
    let len = random_len(&mut c.rng, 5);
    let p = random_path(&mut c.rng, len, c.max_dim)?;
    let nf = ww_normalize(&p)?.to_indexed();
    for (what, folded) in [("left", fold_left(&p)?), ("right", fold_right(&p)?), ("balanced", fold_balanced(&p)?)] {
        c.check(folded.same_value(&nf), what, || {
            json!({"path": path_json(&p), "normal_form": j(&nf), "folded": j(&folded)})
        });
    }
    Ok(())
}

fn excess_additivity(c: &mut Ctx) -> Result<()> {
    let objs = random_objects(&mut c.rng, 5, c.max_dim);
    let p = Path::new(random_chain(&mut c.rng, &objs[..3])?)?;
    let q = Path::new(random_chain(&mut c.rng, &objs[2..])?)?;
    let pq = p.concat(&q)?;
    let (np, nq, npq) = (ww_normalize(&p)?, ww_normalize(&q)?, ww_normalize(&pq)?);
    let e = pair_excess(&np.shadow, &nq.shadow)?;
    let data = || json!({"p": path_json(&p), "q": path_json(&q)});
    c.check(npq.excess == np.excess + nq.excess + e, "E([f][g]) = E([f]) + E([g]) + E(f, g)", data);
    c.check(npq.shadow == compose(&np.shadow, &nq.shadow)?, "shadow is multiplicative", data);
    Ok(())
}

fn graph_excess(c: &mut Ctx) -> Result<()> {
    let len = random_len(&mut c.rng, 3);
    let p = random_path(&mut c.rng, len, c.max_dim)?;
    let nf = ww_normalize(&p)?;
    let gp = graph_path(&p);
    c.check(ww_normalize(&gp)? == graph_normal_form(&nf), "path and its graph path have equal excess", || {
        json!({"path": path_json(&p)})
    });
    c.check(path_shadow(&gp) == graph(&nf.shadow), "graph path shadow is the graph", || {
        json!({"path": path_json(&p)})
    });
    Ok(())
}

fn path_products(c: &mut Ctx) -> Result<()> {
    let cap = c.max_dim / 2;
    let (lp, lq) = (random_len(&mut c.rng, 3), random_len(&mut c.rng, 3));
    let p = random_path(&mut c.rng, lp, cap.max(1))?;
    let q = random_path(&mut c.rng, lq, cap.max(1))?;
    let (np, nq) = (ww_normalize(&p)?, ww_normalize(&q)?);
    let pq = ww_normalize(&path_product(&p, &q))?;
    let expected = iproduct(&np.to_indexed(), &nq.to_indexed());
    c.check(pq.to_indexed().same_value(&expected), "normalize(p ⊗ q) = normalize(p) ⊗ normalize(q)", || {
        json!({"p": path_json(&p), "q": path_json(&q)})
    });
    Ok(())
}

fn factorization(c: &mut Ctx) -> Result<()> {
    let len = random_len(&mut c.rng, 4);
    let p = random_path(&mut c.rng, len, c.max_dim)?;
    let fac = path_factorize(&p)?;
    let (a, b) = (fac.reduction.classify(), fac.coreduction.classify());
    let data = || json!({"path": path_json(&p)});
    c.check(a.single_valued && a.surjective, "A is single-valued and surjective", data);
    c.check(b.injective && b.everywhere_defined, "B is injective and everywhere defined", data);
    let ab = Path::new(vec![fac.reduction.clone(), fac.coreduction.clone()])?;
    c.check(ww_normalize(&ab)? == ww_normalize(&p)?, "[A, B] has the shadow and excess of the path", || {
        json!({"path": path_json(&p), "expected": nf_json(&p), "found": nf_json(&ab)})
    });
    Ok(())
}

fn step_factorizations(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let y = space(c);
    let f = random_step(&mut c.rng, &x, &y)?;
    let data = || json!({"f": j(&f)});
    c.check(factor(&f).check(&f)?.holds(), "product factorization contract", data);
    c.check(factor_minimal(&f)?.check(&f)?.holds(), "minimal factorization contract", data);
    Ok(())
}

// ---------------------------------------------------------------- indexed

fn index(c: &mut Ctx) -> i64 {
    c.rng.gen_range(0..=3)
}

fn associativity(c: &mut Ctx) -> Result<()> {
    let [f, g, h] = random_triple(c)?;
    let mode = IndexMode::Standard;
    let a = IndexedCanonicalRelation::new(f, index(c), mode)?;
    let b = IndexedCanonicalRelation::new(g, index(c), mode)?;
    let cc = IndexedCanonicalRelation::new(h, index(c), mode)?;
    let left = icompose(&icompose(&a, &b)?, &cc)?;
    let right = icompose(&a, &icompose(&b, &cc)?)?;
    let data = || json!({"a": j(&a), "b": j(&b), "c": j(&cc), "left": j(&left), "right": j(&right)});
    c.check(left.same_value(&right), "(ab)c = a(bc)", data);
    let ida = IndexedCanonicalRelation::identity(a.relation().target());
    let idb = IndexedCanonicalRelation::identity(a.relation().source());
    c.check(
        icompose(&ida, &a)?.same_value(&a) && icompose(&a, &idb)?.same_value(&a),
        "identities are neutral",
        data,
    );
    Ok(())
}

fn end_one(c: &mut Ctx) -> Result<()> {
    let (jj, kk) = (c.rng.gen_range(0..=6), c.rng.gen_range(0..=6));
    let unit = SymplecticSpace::unit();
    let mk = |k| IndexedCanonicalRelation::new(identity(&unit), k, IndexMode::Standard);
    let (a, b) = (mk(jj)?, mk(kk)?);
    let sum = mk(jj + kk)?;
    let ok = icompose(&a, &b)?.same_value(&sum) && iproduct(&a, &b).same_value(&sum) && icompose(&b, &a)?.same_value(&sum);
    c.check(ok, "End(1) is (N, +) under composition and product", || json!({"j": jj, "k": kk}));
    Ok(())
}

fn sabot_order(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let ls = correlated_lagrangians(c, &x, 3)?;
    let mut pts = vec![];
    let mut k = index(c);
    for l in &ls {
        pts.push(IndexedLagrangian::new(x.clone(), l.clone(), k)?);
        k += c.rng.gen_range(0..=2);
    }
    if c.rng.gen_bool(0.3) {
        pts[1] = pts[0].clone();
    }
    let data = || json!({"points": pts.iter().map(j).collect::<Vec<_>>()});
    let le = |a: &IndexedLagrangian, b: &IndexedLagrangian| sabot_leq(a, b);
    c.check(le(&pts[0], &pts[0])?, "reflexive", data);
    let (ab, ba) = (le(&pts[0], &pts[1])?, le(&pts[1], &pts[0])?);
    c.check(!(ab && ba) || pts[0] == pts[1], "antisymmetric", data);
    let bc = le(&pts[1], &pts[2])?;
    c.check(!(ab && bc) || le(&pts[0], &pts[2])?, "transitive", data);
    Ok(())
}

fn reduction_pair(c: &mut Ctx) -> Result<(ReductionData, Subspace, Subspace)> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let l1 = lagrangian_near(c, &rd)?;
    let l2 = if c.rng.gen_bool(0.5) {
        let steps = c.rng.gen_range(0..=2);
        nearby(c, &x, &l1, steps)?
    } else {
        lagrangian_near(c, &rd)?
    };
    Ok((rd, l1, l2))
}

fn distance_nonincrease(c: &mut Ctx) -> Result<()> {
    let (rd, l1, l2) = reduction_pair(c)?;
    let before = chow_distance(&rd.ambient, &l1, &l2)?;
    let after = chow_distance(&rd.reduced, &reduce_lagrangian(&rd, &l1)?, &reduce_lagrangian(&rd, &l2)?)?;
    c.check(after <= before, "d(L₁^C, L₂^C) ≤ d(L₁, L₂)", || {
        json!({"space": j(&rd.ambient), "coisotropic": j(&rd.coisotropic), "l1": j(&l1), "l2": j(&l2)})
    });
    Ok(())
}

fn order_preservation(c: &mut Ctx) -> Result<()> {
    let (rd, l1, l2) = reduction_pair(c)?;
    let x = &rd.ambient;
    let d = chow_distance(x, &l1, &l2)? as i64;
    let k1 = index(c);
    let k2 = if c.rng.gen_bool(0.7) {
        k1 + d + c.rng.gen_range(0..=1)
    } else {
        index(c)
    };
    let a = IndexedLagrangian::new(x.clone(), l1.clone(), k1)?;
    let b = IndexedLagrangian::new(x.clone(), l2.clone(), k2)?;
    let (ra, rb) = (indexed_reduce(&rd, &a)?, indexed_reduce(&rd, &b)?);
    let dc = chow_distance(&rd.reduced, ra.lagrangian(), rb.lagrangian())? as i64;
    let (e1, e2) = (ra.index() - k1, rb.index() - k2);
    let data = || json!({"coisotropic": j(&rd.coisotropic), "a": j(&a), "b": j(&b)});
    c.check(dc <= d - (e1 - e2).abs(), "d(L₁^C, L₂^C) ≤ d(L₁, L₂) − |E₁ − E₂|", data);
    c.check(!sabot_leq(&a, &b)? || sabot_leq(&ra, &rb)?, "indexed reduction preserves ≤", data);
    Ok(())
}

fn shift_commutes(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let l = lagrangian_near(c, &rd)?;
    let (k, jj) = (index(c), index(c));
    let a = IndexedLagrangian::new(x.clone(), l.clone(), k)?;
    c.check(
        indexed_reduce(&rd, &ishift(&a, jj))? == ishift(&indexed_reduce(&rd, &a)?, jj),
        "reduction commutes with the shift",
        || json!({"coisotropic": j(&rd.coisotropic), "a": j(&a), "shift": jj}),
    );
    Ok(())
}

fn graph_composition(c: &mut Ctx) -> Result<()> {
    let (f, g) = random_composable_pair(&mut c.rng, c.max_dim)?;
    let a = IndexedCanonicalRelation::new(f, index(c), IndexMode::Standard)?;
    let b = IndexedCanonicalRelation::new(g, index(c), IndexMode::Standard)?;
    let as_graph = |h: &IndexedCanonicalRelation| {
        IndexedLagrangian::new(h.relation().ambient(), h.relation().body().clone(), h.index())
    };
    let composed = igraph_compose(&as_graph(&a)?, &as_graph(&b)?, a.relation().source())?;
    let direct = as_graph(&icompose(&a, &b)?)?;
    c.check(composed == direct, "graph composition = graph of icompose", || {
        json!({"a": j(&a), "b": j(&b), "via_graphs": j(&composed), "direct": j(&direct)})
    });
    Ok(())
}

fn lift_roundtrip(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let lambda = random_lagrangian(&mut c.rng, &rd.reduced)?;
    let k = c.rng.gen_range(0..=rd.perp_dim());
    let l = lift_indexed(&rd, &lambda, k)?;
    let data = || json!({"space": j(&x), "coisotropic": j(&rd.coisotropic), "lambda": j(&lambda), "k": k});
    c.check(x.is_lagrangian(&l)?, "lift is Lagrangian", data);
    let back = indexed_reduce(&rd, &IndexedLagrangian::new(x.clone(), l.clone(), 0)?)?;
    c.check(back.lagrangian() == &lambda && back.index() == k as i64, "reduce(lift(Λ, k)) = (Λ, k)", data);
    if k == rd.perp_dim() {
        c.check(rd.perp.leq(&l)?, "full lift contains C⊥", data);
    }
    Ok(())
}

fn deformation(c: &mut Ctx) -> Result<()> {
    let x = nonzero_space(c);
    let rd = coisotropic(c, &x)?;
    let l = lagrangian_near(c, &rd)?;
    let lc = reduce_lagrangian(&rd, &l)?;
    let k = l.intersect(&rd.perp)?.dim();
    let q = c.rng.gen_range(0..=k);
    let moves = c.rng.gen_range(0..=q);
    let lambda = nearby(c, &rd.reduced, &lc, moves)?;
    let fam = deformation_family(&rd, &l, &lambda, q)?;
    let data = || {
        json!({"space": j(&x), "coisotropic": j(&rd.coisotropic), "lagrangian": j(&l), "lambda": j(&lambda), "q": q})
    };
    c.check(fam.eval(&int(0)) == l, "eval(0) = L", data);
    c.check(fam.r <= q && fam.k == k, "d(L^C, Λ) ≤ q", data);
    if !fam.satisfies_printed_bound() {
        c.note("printed_bound_violated");
    }
    for _ in 0..5 {
        let t = random_nonzero_rational(c);
        let lt = fam.eval(&t);
        let tdata = || json!({"instance": data(), "t": t.to_string()});
        c.check(x.is_lagrangian(&lt)?, "eval(t) is Lagrangian", tdata);
        let red = indexed_reduce(&rd, &IndexedLagrangian::new(x.clone(), lt.clone(), 0)?)?;
        c.check(
            red.lagrangian() == &lambda && red.index() == (k - q) as i64,
            "eval(t) reduces to (Λ, k − q)",
            tdata,
        );
        c.check(
            fam.r as i64 <= k as i64 - red.index(),
            "d(L^C, Λ) ≤ E^C(L) − E^C(L_t)",
            tdata,
        );
    }
    Ok(())
}

fn negative_indices(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let rd = coisotropic(c, &x)?;
    let data = || json!({"space": j(&x), "coisotropic": j(&rd.coisotropic)});
    if !c.extended() {
        let rejected = itranspose_reduction(&rd, IndexMode::Standard).is_err();
        c.check(rejected == (rd.perp_dim() > 0), "standard mode rejects negative indices", data);
        return Ok(());
    }
    let down = itranspose_reduction(&rd, IndexMode::Extended)?;
    let rho = IndexedCanonicalRelation::plain(reduction_relation(&rd));
    let r = icompose(&down, &rho)?;
    c.check(
        r.relation() == &projector(&rd) && r.index() == -(rd.perp_dim() as i64),
        "(ρᵗ, −dim C⊥)(ρ, 0) = (R^C, −dim C⊥)",
        data,
    );
    c.check(icompose(&r, &r)?.same_value(&r), "(R^C, −dim C⊥) is idempotent", data);
    c.check(itrace(&r)? == rd.reduced.dim() as i64, "itrace = dim X^C", data);
    let back = icompose(&rho, &down)?;
    c.check(back.same_value(&IndexedCanonicalRelation::identity(&rd.reduced)), "(ρ, 0)(ρᵗ, −dim C⊥) = (1, 0)", data);
    Ok(())
}

fn inverses(c: &mut Ctx) -> Result<()> {
    let x = space(c);
    let steps = c.rng.gen_range(0..=3);
    let t = random_symplectic_matrix(&mut c.rng, &x, steps);
    let f = symplectomorphism(&x, &t)?;
    let k = index(c);
    let a = IndexedCanonicalRelation::new(f.clone(), k, c.mode)?;
    let data = || json!({"f": j(&f), "k": k});
    if c.extended() {
        let inv = iinvert(&a)?;
        c.check(inv.index() == -k, "inverse index is −k", data);
        c.check(icompose(&a, &inv)?.same_value(&IndexedCanonicalRelation::identity(&x)), "a a⁻¹ = (1, 0)", data);
    } else {
        c.check(iinvert(&a).is_err() == (k > 0), "standard mode rejects negative inverse indices", data);
    }
    if x.dim() > 0 {
        let l = random_lagrangian(&mut c.rng, &x)?;
        let split = CanonicalRelation::new(x.clone(), x.clone(), l.product(&l))?;
        let b = IndexedCanonicalRelation::new(split, 0, c.mode)?;
        c.check(matches!(iinvert(&b), Err(Error::NotInvertible)), "L × L is not invertible", data);
    }
    Ok(())
}

// ---------------------------------------------------------------- finite

fn random_finite(c: &mut Ctx, t: usize, s: usize) -> FiniteRelation {
    let density = c.rng.gen_range(0.2..0.8);
    let pairs: Vec<_> = (0..t)
        .flat_map(|x| (0..s).map(move |y| (x, y)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| c.rng.gen_bool(density))
        .collect();
    FiniteRelation::new(t, s, pairs).expect("pairs in range")
}

fn finite_laws(c: &mut Ctx) -> Result<()> {
    let len = random_len(&mut c.rng, 3);
    let sizes: Vec<usize> = (0..=len).map(|_| c.rng.gen_range(0..=4)).collect();
    let path: Vec<FiniteRelation> = sizes.windows(2).map(|w| random_finite(c, w[0], w[1])).collect();
    let n = ftrajectories(&path)?.len();
    let data = || json!({"path": path.iter().map(j).collect::<Vec<_>>()});
    for i in 0..=len {
        let mut longer = path.clone();
        longer.insert(i, FiniteRelation::identity(sizes[i]));
        c.check(ftrajectories(&longer)?.len() == n, "identity insertion preserves the count", data);
    }
    for i in 0..len.saturating_sub(1) {
        let (f, g) = (&path[i], &path[i + 1]);
        let brute = (0..f.target_size()).all(|x| (0..g.source_size()).all(|z| witnesses(f, g, x, z).len() <= 1));
        c.check(fmonic(f, g)? == brute, "fmonic = at most one witness", data);
        if brute {
            let mut shorter = path.clone();
            shorter.splice(i..i + 2, [fcompose(f, g)?]);
            c.check(ftrajectories(&shorter)?.len() == n, "monic collapse preserves the count", data);
        }
    }
    for split in 1..len {
        c.check(span_bijection(&path[..split], &path[split..]), "T(pq) ≅ T(p) ×_Y T(q)", data);
    }
    for f in &path {
        let check = ffactor(f).check(f);
        c.check(factor_check_expected(f, &check), "factorization contract", || {
            json!({"f": j(f), "check": serde_json::to_value(check).expect("serializable")})
        });
    }
    Ok(())
}

const CAP: usize = 16;

static LAWS: &[Law] = &[
    Law { name: "rref_idempotent", suite: "linalg", dim_cap: CAP, statement: "rref(rref(m)) = rref(m)", run: rref_idempotent },
    Law { name: "rank_nullity", suite: "linalg", dim_cap: CAP, statement: "rank(m) + dim ker(m) = cols(m)", run: rank_nullity },
    Law { name: "modular_law", suite: "linalg", dim_cap: CAP, statement: "dim a + dim b = dim(a+b) + dim(a∩b)", run: modular_law },
    Law { name: "canonical_equality", suite: "linalg", dim_cap: CAP, statement: "a = b iff a ≤ b and b ≤ a", run: canonical_equality },
    Law { name: "double_complement", suite: "symplectic", dim_cap: CAP, statement: "(W⊥)⊥ = W and dim W + dim W⊥ = dim X", run: double_complement },
    Law { name: "reduction", suite: "symplectic", dim_cap: CAP, statement: "L^C Lagrangian; dim(L∩C⊥) = dim X − dim(L+C)", run: reduction_laws },
    Law { name: "chow_metric", suite: "symplectic", dim_cap: CAP, statement: "Chow distance is a metric", run: chow_metric },
    Law { name: "adapted_basis", suite: "symplectic", dim_cap: CAP, statement: "adapted basis is symplectic and normalizes (L, I)", run: adapted_basis },
    Law { name: "zigzag", suite: "rigidity", dim_cap: CAP, statement: "zigzag composites are identities with excess 0", run: zigzag },
    Law { name: "graph_calculus", suite: "graph", dim_cap: CAP, statement: "graph/ungraph inverse; reduced product of graphs is the graph of the composite", run: graph_calculus },
    Law { name: "monic_transversal", suite: "monic", dim_cap: CAP, statement: "monic iff transversal", run: monic_transversal },
    Law { name: "classes", suite: "relations", dim_cap: CAP, statement: "transpose swaps classes; (co)reductions compose; excess vanishes", run: classes },
    Law { name: "projector", suite: "relations", dim_cap: CAP, statement: "R^C idempotent; ρρᵗ = 1 with excess dim C⊥", run: projector_laws },
    Law { name: "axiom5", suite: "congeniality", dim_cap: CAP, statement: "(f,g),(fg,h) congenial iff (g,h),(f,gh) congenial", run: axiom5 },
    Law { name: "move_invariance", suite: "paths", dim_cap: 6, statement: "collapse and identity moves preserve the normal form", run: move_invariance },
    Law { name: "fold_orders", suite: "paths", dim_cap: 6, statement: "every fold order equals the normal form", run: fold_orders },
    Law { name: "excess_additivity", suite: "paths", dim_cap: CAP, statement: "E([f][g]) = E([f]) + E([g]) + E(f, g)", run: excess_additivity },
    Law { name: "graph_excess", suite: "paths", dim_cap: 6, statement: "a path and its graph path have equal excess", run: graph_excess },
    Law { name: "path_product", suite: "paths", dim_cap: 8, statement: "normal forms of entrywise products multiply", run: path_products },
    Law { name: "factorization", suite: "paths", dim_cap: 4, statement: "path factorization preserves the normal form", run: factorization },
    Law { name: "step_factorizations", suite: "paths", dim_cap: 4, statement: "single-step factorizations satisfy their contract", run: step_factorizations },
    Law { name: "hyper_normal_form", suite: "classification", dim_cap: 6, statement: "normal_form_hyper(Λ, k, r) reduces to (Λ, k)", run: hyper_normal_form },
    Law { name: "adapted_normal_form", suite: "classification", dim_cap: CAP, statement: "equal invariant triples give the identical normal form", run: adapted_normal_form },
    Law { name: "associativity", suite: "indexed", dim_cap: CAP, statement: "icompose is associative and unital", run: associativity },
    Law { name: "end_one", suite: "indexed", dim_cap: CAP, statement: "End(1) is the monoid of naturals", run: end_one },
    Law { name: "graph_composition", suite: "indexed", dim_cap: CAP, statement: "igraph_compose = graph of icompose", run: graph_composition },
    Law { name: "sabot_order", suite: "sabot", dim_cap: CAP, statement: "≤ is a partial order", run: sabot_order },
    Law { name: "distance_nonincrease", suite: "sabot", dim_cap: CAP, statement: "reduction does not increase distance", run: distance_nonincrease },
    Law { name: "order_preservation", suite: "sabot", dim_cap: CAP, statement: "strengthened inequality; indexed reduction is monotone", run: order_preservation },
    Law { name: "shift_commutes", suite: "sabot", dim_cap: CAP, statement: "indexed reduction commutes with the shift", run: shift_commutes },
    Law { name: "lift_roundtrip", suite: "quotient", dim_cap: CAP, statement: "reduce(lift(Λ, k)) = (Λ, k)", run: lift_roundtrip },
    Law { name: "deformation", suite: "quotient", dim_cap: CAP, statement: "deformation families reduce to (Λ, k − q) for t ≠ 0", run: deformation },
    Law { name: "negative_indices", suite: "negative", dim_cap: CAP, statement: "(R^C, −dim C⊥) is idempotent with trace dim X^C", run: negative_indices },
    Law { name: "inverses", suite: "negative", dim_cap: CAP, statement: "(f, k)⁻¹ = (f⁻¹, −k)", run: inverses },
    Law { name: "finite", suite: "finite", dim_cap: CAP, statement: "trajectory counts, spans, monic pairs, factorizations", run: finite_laws },
];
