//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! `CANREL_ACCEPTANCE_SEED` overrides the master seed (default 0).

use std::process::ExitCode;
use std::time::Instant;

use canrel::finite::census::{
    collapse_census, cross_check_tables, factor_census, monic_census, span_census, span_random, CensusReport,
};
use canrel::indexed::IndexMode;
use canrel::verify::{find_law, run_law, Failure, VerifyConfig};

struct Outcome {
    ok: bool,
    detail: String,
    failures: Vec<Failure>,
}

fn laws(seed: u64, mode: IndexMode, runs: &[(&str, u64, usize)]) -> Outcome {
    let mut out = Outcome {
        ok: true,
        detail: String::new(),
        failures: vec![],
    };
    let mut parts = vec![];
    for &(name, trials, max_dim) in runs {
        let law = find_law(name).unwrap_or_else(|| panic!("unknown law {name}"));
        let cfg = VerifyConfig {
            seed,
            trials,
            max_dim,
            mode,
        };
        let run = run_law(law, &cfg);
        let failed = run.failures.len();
        out.ok &= failed == 0;
        parts.push(format!("{name} {}/{trials}", trials - failed as u64));
        for (k, v) in run.notes {
            parts.push(format!("{k}={v}"));
        }
        out.failures.extend(run.failures);
    }
    out.detail = parts.join(", ");
    out
}

fn census(reports: Vec<(&str, CensusReport)>) -> Outcome {
    let ok = reports.iter().all(|(_, r)| r.passed());
    let detail = reports
        .iter()
        .map(|(name, r)| format!("{name} {} cases/{} checks/{} failures", r.cases, r.checks, r.failures))
        .collect::<Vec<_>>()
        .join(", ");
    for (name, r) in &reports {
        for e in &r.examples {
            eprintln!("  {name}: {e}");
        }
    }
    Outcome {
        ok,
        detail,
        failures: vec![],
    }
}

fn main() -> ExitCode {
    let seed = std::env::var("CANREL_ACCEPTANCE_SEED")
        .ok()
        .map(|s| s.parse().expect("CANREL_ACCEPTANCE_SEED must be an integer"))
        .unwrap_or(0);
    let std = IndexMode::Standard;
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 rigidity", Box::new(move || laws(seed, std, &[("zigzag", 100, 8)]))),
        ("2 graph calculus", Box::new(move || laws(seed, std, &[("graph_calculus", 200, 8)]))),
        ("3 monic iff transversal", Box::new(move || laws(seed, std, &[("monic_transversal", 500, 8)]))),
        (
            "4 indexed category",
            Box::new(move || laws(seed, std, &[("associativity", 200, 8), ("fold_orders", 100, 8)])),
        ),
        ("5 excess additivity", Box::new(move || laws(seed, std, &[("excess_additivity", 200, 8)]))),
        (
            "6 classification",
            Box::new(move || laws(seed, std, &[("hyper_normal_form", 50, 6), ("adapted_normal_form", 100, 8)])),
        ),
        ("7 factorization", Box::new(move || laws(seed, std, &[("factorization", 100, 4)]))),
        (
            "8 metric and order",
            Box::new(move || {
                laws(
                    seed,
                    std,
                    &[("chow_metric", 300, 8), ("distance_nonincrease", 300, 8), ("order_preservation", 300, 8)],
                )
            }),
        ),
        (
            "9 quotients",
            Box::new(move || laws(seed, std, &[("lift_roundtrip", 200, 8), ("deformation", 100, 8)])),
        ),
        (
            "10 negative indices",
            Box::new(move || laws(seed, IndexMode::Extended, &[("negative_indices", 50, 8)])),
        ),
        (
            "11 finite oracle",
            Box::new(move || {
                census(vec![
                    ("collapse", collapse_census(3, 3)),
                    ("tables", cross_check_tables(2)),
                    ("span", span_census(3, 2).merge(span_census(2, 3))),
                    ("span random", span_random(4, 3, 2000, seed)),
                    ("monic", monic_census(3)),
                    ("factor", factor_census(3)),
                ])
            }),
        ),
        ("12 axiom 5", Box::new(move || laws(seed, std, &[("axiom5", 300, 8)]))),
    ];

    println!("acceptance (seed {seed})");
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        all &= o.ok;
        println!(
            "{} criterion {name}: {} [{:.1}s]",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
        for f in o.failures.iter().take(3) {
            eprintln!("  {}", serde_json::to_string(f).expect("serializable"));
        }
    }
    if all {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("some criteria failed");
        ExitCode::FAILURE
    }
}
