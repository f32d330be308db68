use crate::commands::{self, CmdResult, Failure, Outcome, SHIFT_DEGREE};
use crate::Common;
use chk_core::params::{alcove_representatives, classify_lambda, in_alcove_set, DeformParam, StabParam};
use chk_core::rational::frac;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

const MAX_DRAWS: usize = 1000;

/// Entries `n/d` with `d ≤ 6`; the last one is fixed by `Σλ = 1`.
pub fn random_lambda(rng: &mut ChaCha8Rng, l: usize) -> DeformParam {
    let head = (0..l - 1)
        .map(|_| {
            let d = rng.gen_range(1..=6i64);
            frac(rng.gen_range(-2 * d..=2 * d), d)
        })
        .collect();
    DeformParam::completing(head).expect("l ≥ 2")
}

fn draw_for(rng: &mut ChaCha8Rng, theta: &StabParam) -> Option<DeformParam> {
    (0..MAX_DRAWS).map(|_| random_lambda(rng, theta.l())).find(|lam| {
        classify_lambda(lam).in_tilde_rreg && in_alcove_set(lam, theta).unwrap_or(false)
    })
}

fn threads() -> usize {
    std::env::var("CHK_THREADS").ok().and_then(|v| v.parse().ok()).filter(|&n| n > 0).unwrap_or(0)
}

type Check = (&'static str, Result<Outcome, Failure>);

fn alcove_checks(theta: &StabParam, lam: &DeformParam, m_top: i64, window: usize, cap: (u32, u32)) -> Vec<Check> {
    let mut out: Vec<Check> = vec![
        ("fixed-points", commands::fixed_points_report(theta)),
        ("charts", commands::charts_report(theta)),
        ("homs", Ok(commands::homs_report(lam))),
        ("ch-cycles", commands::ch_report(theta, Some(lam))),
        ("shift-verify", commands::shift_report(lam, theta, SHIFT_DEGREE, 12)),
    ];
    for m in 0..=m_top {
        out.push(("abl-verify", commands::abl_report(theta, m, window, 12)));
        out.push(("gr-verify", commands::gr_report(lam, theta, m, cap)));
        if m >= 1 {
            out.push(("sections", commands::sections_report(theta, m, (8, 8))));
        }
    }
    out
}

pub fn run(c: &Common) -> CmdResult {
    let seed = c.seed.ok_or_else(|| Failure::Regime("sweep needs --seed".into()))?;
    let l = c.l.ok_or_else(|| Failure::Regime("sweep needs --l".into()))?;
    let m_top = c.m.unwrap_or(2);
    let window = c.window.unwrap_or(15);
    let cap = commands::cap(c, (5, 5))?;
    let alcoves = alcove_representatives(l)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads())
        .build()
        .map_err(|e| Failure::Io(e.to_string()))?;
    // each alcove draws from its own stream, so the report does not depend on scheduling
    let results: Vec<(StabParam, Option<DeformParam>, Vec<Check>)> = pool.install(|| {
        alcoves
            .par_iter()
            .enumerate()
            .map(|(idx, theta)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(idx as u64);
                match draw_for(&mut rng, theta) {
                    Some(lam) => {
                        let checks = alcove_checks(theta, &lam, m_top, window, cap);
                        (theta.clone(), Some(lam), checks)
                    }
                    None => (theta.clone(), None, Vec::new()),
                }
            })
            .collect()
    });

    let mut summary: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut samples = Vec::new();
    for (theta, lam, checks) in &results {
        samples.push(json!({ "theta": theta.theta(), "lambda": lam }));
        if lam.is_none() {
            failures.push(json!({ "theta": theta.theta(), "error": "no λ sample in the alcove set" }));
        }
        for (name, r) in checks {
            let e = summary.entry(name).or_default();
            e.0 += 1;
            match r {
                Ok(o) if o.ok => {}
                Ok(o) => {
                    e.1 += 1;
                    let witness = o.report.get("counterexample").cloned().unwrap_or(Value::Null);
                    failures.push(json!({ "check": name, "theta": theta.theta(), "lambda": lam, "counterexample": witness }));
                }
                Err(Failure::Regime(msg)) | Err(Failure::Io(msg)) => {
                    e.2 += 1;
                    failures.push(json!({ "check": name, "theta": theta.theta(), "lambda": lam, "error": msg }));
                }
            }
        }
    }
    let checks: BTreeMap<&str, Value> = summary
        .into_iter()
        .map(|(k, (run, failed, rejected))| (k, json!({ "run": run, "failed": failed, "rejected": rejected })))
        .collect();
    let ok = failures.is_empty();
    Ok(Outcome {
        report: json!({ "l": l, "seed": seed, "alcoves": results.len(), "samples": samples, "checks": checks, "failures": failures, "ok": ok }),
        ok,
    })
}
