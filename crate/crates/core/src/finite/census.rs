//! Exhaustive enumeration over all relations between small sets.
//!
//! Relations `a ← b` are bitmasks with bit `x·b + y` set iff `(x, y)` is
//! present. Length-3 paths are counted through precomputed pair tables so
//! that the full census over sets of size ≤ 3 stays fast.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{fcompose, fmonic, ftrajectories, witnesses, FiniteFactorCheck, FiniteRelation};

const MAX_SIZE: usize = 3;
const MAX_EXAMPLES: usize = 16;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    /// Paths (or relations, or pairs) enumerated.
    pub cases: u64,
    /// Individual checks performed.
    pub checks: u64,
    pub failures: u64,
    /// The first few failures, described.
    pub examples: Vec<String>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.failures += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what());
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what);
        }
    }

    pub fn merge(mut self, other: CensusReport) -> CensusReport {
        self.cases += other.cases;
        self.checks += other.checks;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Mask {
    t: usize,
    s: usize,
    bits: u16,
}

impl Mask {
    fn get(self, x: usize, y: usize) -> bool {
        self.bits >> (x * self.s + y) & 1 == 1
    }

    fn all(t: usize, s: usize) -> impl Iterator<Item = Mask> {
        (0..1u32 << (t * s)).map(move |b| Mask { t, s, bits: b as u16 })
    }

    fn identity(n: usize) -> Mask {
        let bits = (0..n).fold(0u16, |acc, i| acc | 1 << (i * n + i));
        Mask { t: n, s: n, bits }
    }

    fn relation(self) -> FiniteRelation {
        FiniteRelation::from_mask(self.t, self.s, u64::from(self.bits))
    }

    /// For each `y`, the number of `x` with `(x, y)` present.
    fn col_degrees(self) -> [u32; MAX_SIZE] {
        let mut d = [0; MAX_SIZE];
        for (y, dy) in d.iter_mut().enumerate().take(self.s) {
            *dy = (0..self.t).filter(|&x| self.get(x, y)).count() as u32;
        }
        d
    }

    /// For each `x`, the number of `y` with `(x, y)` present.
    fn row_degrees(self) -> [u32; MAX_SIZE] {
        let mut d = [0; MAX_SIZE];
        for (x, dx) in d.iter_mut().enumerate().take(self.t) {
            *dx = (0..self.s).filter(|&y| self.get(x, y)).count() as u32;
        }
        d
    }
}

/// Composite and monic flag of `f ∘ g`, from the witness counts.
fn compose_masks(f: Mask, g: Mask) -> (Mask, bool) {
    let mut bits = 0u16;
    let mut monic = true;
    for x in 0..f.t {
        for z in 0..g.s {
            let w = (0..f.s).filter(|&y| f.get(x, y) && g.get(y, z)).count();
            if w > 0 {
                bits |= 1 << (x * g.s + z);
            }
            monic &= w <= 1;
        }
    }
    (Mask { t: f.t, s: g.s, bits }, monic)
}

/// Trajectory count by propagating multiplicities along the path.
fn count(path: &[Mask]) -> u32 {
    let mut v = vec![1u32; path[0].t];
    for f in path {
        let mut next = vec![0u32; f.s];
        for (x, &vx) in v.iter().enumerate() {
            for (y, ny) in next.iter_mut().enumerate() {
                if f.get(x, y) {
                    *ny += vx;
                }
            }
        }
        v = next;
    }
    v.iter().sum()
}

fn describe(path: &[Mask]) -> String {
    let steps: Vec<String> = path.iter().map(|m| format!("{}←{}:{:#x}", m.t, m.s, m.bits)).collect();
    format!("[{}]", steps.join(", "))
}

fn size_tuples(max_size: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..=len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max_size).map(move |s| {
                    let mut t = t.clone();
                    t.push(s);
                    t
                })
            })
            .collect();
    }
    out
}

fn paths_of(sizes: &[usize]) -> Vec<Vec<Mask>> {
    let mut out = vec![vec![]];
    for w in sizes.windows(2) {
        out = out
            .into_iter()
            .flat_map(|p| {
                Mask::all(w[0], w[1]).map(move |m| {
                    let mut p = p.clone();
                    p.push(m);
                    p
                })
            })
            .collect();
    }
    out
}

/// One length-3 path with its trajectory count and, where the move applies,
/// the counts after collapsing the first or second adjacent pair.
struct Triple {
    path: [Mask; 3],
    count: u32,
    collapsed_first: Option<u32>,
    collapsed_second: Option<u32>,
}

/// Visits every path `a ← b ← c ← d` for the given sizes using pair tables.
fn for_each_triple(sizes: [usize; 4], visit: impl Fn(&Triple, &mut CensusReport) + Sync) -> CensusReport {
    let [a, b, c, d] = sizes;
    let f3s: Vec<Mask> = Mask::all(c, d).collect();
    let deg3: Vec<[u32; MAX_SIZE]> = f3s.iter().map(|m| m.row_degrees()).collect();
    // (f2, f3) ↦ (monic, row degrees of the composite).
    let f2s: Vec<Mask> = Mask::all(b, c).collect();
    let table23: Vec<(bool, [u32; MAX_SIZE])> = f2s
        .iter()
        .flat_map(|&f2| {
            f3s.iter().map(move |&f3| {
                let (c23, monic) = compose_masks(f2, f3);
                (monic, c23.row_degrees())
            })
        })
        .collect();
    let dot = |u: &[u32; MAX_SIZE], v: &[u32; MAX_SIZE]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];

    Mask::all(a, b)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|f1| {
            let mut report = CensusReport::default();
            let cd1 = f1.col_degrees();
            for (i2, &f2) in f2s.iter().enumerate() {
                // Multiplicity of each point of the third object after two steps.
                let mut w = [0u32; MAX_SIZE];
                for (x2, wx) in w.iter_mut().enumerate().take(c) {
                    *wx = (0..b).filter(|&x1| f2.get(x1, x2)).map(|x1| cd1[x1]).sum();
                }
                let (c12, monic12) = compose_masks(f1, f2);
                let u = c12.col_degrees();
                for (i3, &f3) in f3s.iter().enumerate() {
                    let (monic23, rd23) = &table23[i2 * f3s.len() + i3];
                    let triple = Triple {
                        path: [f1, f2, f3],
                        count: dot(&w, &deg3[i3]),
                        collapsed_first: monic12.then(|| dot(&u, &deg3[i3])),
                        collapsed_second: monic23.then(|| dot(&cd1, rd23)),
                    };
                    report.cases += 1;
                    visit(&triple, &mut report);
                }
            }
            report
        })
        .reduce(CensusReport::default, CensusReport::merge)
}

fn collapse_check(t: &Triple, report: &mut CensusReport) {
    for (i, after) in [t.collapsed_first, t.collapsed_second].into_iter().enumerate() {
        if let Some(after) = after {
            report.check(after == t.count, || {
                format!("collapse at {i} of {} changes count {} → {after}", describe(&t.path), t.count)
            });
        }
    }
}

/// Every monic collapse and every identity insertion preserves the number of
/// trajectories, over all paths of length ≤ `max_len` (≤ 3) between sets of
/// size ≤ `max_size` (≤ 3).
pub fn collapse_census(max_size: usize, max_len: usize) -> CensusReport {
    assert!(max_size <= MAX_SIZE && max_len <= 3, "census is limited to sizes ≤ 3, length ≤ 3");
    let mut report = CensusReport::default();
    for len in 1..=max_len.min(2) {
        for sizes in size_tuples(max_size, len) {
            let part = paths_of(&sizes)
                .into_par_iter()
                .map(|path| {
                    let mut r = CensusReport {
                        cases: 1,
                        ..CensusReport::default()
                    };
                    let n = count(&path);
                    if len == 2 {
                        let (c, monic) = compose_masks(path[0], path[1]);
                        if monic {
                            let after = count(&[c]);
                            r.check(after == n, || format!("collapse of {} changes count {n} → {after}", describe(&path)));
                        }
                    }
                    // Identity insertion at every position, checked in both directions.
                    for i in 0..=path.len() {
                        let size = if i == 0 { path[0].t } else { path[i - 1].s };
                        let mut longer = path.clone();
                        longer.insert(i, Mask::identity(size));
                        let after = count(&longer);
                        r.check(after == n, || {
                            format!("identity at {i} in {} changes count {n} → {after}", describe(&path))
                        });
                    }
                    r
                })
                .reduce(CensusReport::default, CensusReport::merge);
            report = report.merge(part);
        }
    }
    if max_len == 3 {
        for sizes in size_tuples(max_size, 3) {
            let part = for_each_triple([sizes[0], sizes[1], sizes[2], sizes[3]], collapse_check);
            report = report.merge(part);
        }
    }
    report
}

/// Recomputes the length-3 table counts with [`ftrajectories`], [`fmonic`]
/// and [`fcompose`] on every path between sets of size ≤ `max_size`.
pub fn cross_check_tables(max_size: usize) -> CensusReport {
    assert!(max_size <= MAX_SIZE);
    let mut report = CensusReport::default();
    for sizes in size_tuples(max_size, 3) {
        let part = for_each_triple([sizes[0], sizes[1], sizes[2], sizes[3]], |t, r| {
            let rels: Vec<FiniteRelation> = t.path.iter().map(|m| m.relation()).collect();
            let n = ftrajectories(&rels).expect("path is composable").len() as u32;
            r.check(n == t.count, || format!("table count {} ≠ {n} for {}", t.count, describe(&t.path)));
            let collapsed = |i: usize| -> Option<u32> {
                fmonic(&rels[i], &rels[i + 1]).expect("composable").then(|| {
                    let mut shorter = rels.clone();
                    let c = fcompose(&rels[i], &rels[i + 1]).expect("composable");
                    shorter.splice(i..i + 2, [c]);
                    ftrajectories(&shorter).expect("composable").len() as u32
                })
            };
            r.check(collapsed(0) == t.collapsed_first && collapsed(1) == t.collapsed_second, || {
                format!("collapse tables disagree for {}", describe(&t.path))
            });
        });
        report = report.merge(part);
    }
    report
}

/// `T(p·q)` equals `{a ++ b[1..] : (a, b) ∈ T(p) ×_Y T(q)}` and the gluing
/// map is injective, so the two are in bijection.
pub fn span_bijection(p: &[FiniteRelation], q: &[FiniteRelation]) -> bool {
    let whole: Vec<FiniteRelation> = p.iter().chain(q).cloned().collect();
    let tp = ftrajectories(p).expect("composable");
    let tq = ftrajectories(q).expect("composable");
    let tpq = ftrajectories(&whole).expect("composable");
    let mut glued = std::collections::BTreeSet::new();
    let mut pairs = 0usize;
    for a in &tp.trajectories {
        for b in &tq.trajectories {
            if a.last() == b.first() {
                pairs += 1;
                glued.insert(a.iter().chain(&b[1..]).copied().collect::<Vec<_>>());
            }
        }
    }
    pairs == glued.len() && glued == tpq.trajectories
}

fn span_check(p: &[FiniteRelation], q: &[FiniteRelation], report: &mut CensusReport) {
    report.check(span_bijection(p, q), || {
        let ms: Vec<String> = p.iter().chain(q).map(|f| format!("{:?}", f.pairs())).collect();
        format!("span bijection fails at split {} of [{}]", p.len(), ms.join(", "))
    });
}

/// Exhaustive span check: every path of length 2..=`max_len` between sets of
/// size ≤ `max_size`, split at every interior point.
pub fn span_census(max_size: usize, max_len: usize) -> CensusReport {
    assert!(max_size <= MAX_SIZE);
    let mut report = CensusReport::default();
    for len in 2..=max_len {
        for sizes in size_tuples(max_size, len) {
            let part = paths_of(&sizes)
                .into_par_iter()
                .map(|path| {
                    let rels: Vec<FiniteRelation> = path.iter().map(|m| m.relation()).collect();
                    let mut r = CensusReport {
                        cases: 1,
                        ..CensusReport::default()
                    };
                    for split in 1..len {
                        span_check(&rels[..split], &rels[split..], &mut r);
                    }
                    r
                })
                .reduce(CensusReport::default, CensusReport::merge);
            report = report.merge(part);
        }
    }
    report
}

/// Random span checks: `trials` paths of length `len` between sets of size
/// exactly `size`, each relation pair present with probability ½.
pub fn span_random(size: usize, len: usize, trials: usize, seed: u64) -> CensusReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CensusReport::default();
    for _ in 0..trials {
        let rels: Vec<FiniteRelation> = (0..len)
            .map(|_| {
                let pairs = (0..size).flat_map(|x| (0..size).map(move |y| (x, y)));
                let chosen: Vec<_> = pairs.filter(|_| rng.gen_bool(0.5)).collect();
                FiniteRelation::new(size, size, chosen).expect("pairs in range")
            })
            .collect();
        report.cases += 1;
        for split in 1..len {
            span_check(&rels[..split], &rels[split..], &mut report);
        }
    }
    report
}

/// `fmonic` and `fcompose` against brute-force witness counting, on every
/// composable pair between sets of size ≤ `max_size`.
pub fn monic_census(max_size: usize) -> CensusReport {
    assert!(max_size <= MAX_SIZE);
    let mut report = CensusReport::default();
    for sizes in size_tuples(max_size, 2) {
        let f1s: Vec<Mask> = Mask::all(sizes[0], sizes[1]).collect();
        let part = f1s
            .into_par_iter()
            .map(|f| {
                let mut r = CensusReport::default();
                let fr = f.relation();
                for g in Mask::all(sizes[1], sizes[2]) {
                    r.cases += 1;
                    let gr = g.relation();
                    let mut brute_monic = true;
                    let mut brute_pairs = vec![];
                    for x in 0..f.t {
                        for z in 0..g.s {
                            let w = witnesses(&fr, &gr, x, z).len();
                            brute_monic &= w <= 1;
                            if w > 0 {
                                brute_pairs.push((x, z));
                            }
                        }
                    }
                    let brute = FiniteRelation::new(f.t, g.s, brute_pairs).expect("pairs in range");
                    r.check(fmonic(&fr, &gr).expect("composable") == brute_monic, || {
                        format!("fmonic disagrees on {}", describe(&[f, g]))
                    });
                    r.check(fcompose(&fr, &gr).expect("composable") == brute, || {
                        format!("fcompose disagrees on {}", describe(&[f, g]))
                    });
                    let (m, monic) = compose_masks(f, g);
                    r.check(m.relation() == brute && monic == brute_monic, || {
                        format!("mask composition disagrees on {}", describe(&[f, g]))
                    });
                }
                r
            })
            .reduce(CensusReport::default, CensusReport::merge);
        report = report.merge(part);
    }
    report
}

/// The contract holds for nonempty relations; the empty relation fails
/// exactly `h_everywhere_defined` when the source is nonempty, exactly
/// `g_surjective` when only the target is nonempty, and nothing when both
/// sets are empty.
pub fn factor_check_expected(f: &FiniteRelation, c: &FiniteFactorCheck) -> bool {
    let (t, s) = (f.target_size(), f.source_size());
    let others = c.g_single_valued && c.h_injective && c.monic && c.recomposes;
    if !f.is_empty() || (t == 0 && s == 0) {
        c.holds()
    } else if s > 0 {
        others && c.g_surjective && !c.h_everywhere_defined
    } else {
        others && !c.g_surjective && c.h_everywhere_defined
    }
}

/// The factorization contract on every relation between sets of size
/// ≤ `max_size`: all postconditions hold for nonempty relations; the empty
/// relation fails exactly `h_everywhere_defined` when the source is nonempty,
/// exactly `g_surjective` when only the target is nonempty, and nothing when
/// both are empty.
pub fn factor_census(max_size: usize) -> CensusReport {
    assert!(max_size <= MAX_SIZE);
    let mut report = CensusReport::default();
    for t in 0..=max_size {
        for s in 0..=max_size {
            for m in Mask::all(t, s) {
                report.cases += 1;
                let f = m.relation();
                let c = super::ffactor(&f).check(&f);
                let expected = factor_check_expected(&f, &c);
                report.check(expected, || format!("factorization of {} gives {c:?}", describe(&[m])));
            }
        }
    }
    report
}
