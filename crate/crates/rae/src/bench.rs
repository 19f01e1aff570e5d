//! Timing argumentative ensembling on generated scenarios.

use std::time::Instant;

use rae_core::{argumentative_ensemble, generate_random_scenario, Error, GeneratorConfig, Limits, Semantics};

use crate::batch::scenario_seed;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub semantics: Vec<Semantics>,
    pub seed: u64,
    /// Scenarios per size.
    pub reps: usize,
    pub invalidity_rate: f64,
    pub tie_rate: f64,
    pub limits: Limits,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![10, 20, 30],
            semantics: vec![Semantics::SPreferred, Semantics::DPreferred],
            seed: 0,
            reps: 5,
            invalidity_rate: 0.3,
            tie_rate: 0.0,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n_models: usize,
    pub semantics: Semantics,
    pub mean_ms: f64,
    pub p95_ms: f64,
}

pub fn run_bench(cfg: &BenchConfig) -> rae_core::Result<Vec<BenchRow>> {
    if cfg.sizes.is_empty() || cfg.sizes.contains(&0) {
        return Err(Error::Config("sizes must be positive".into()));
    }
    if cfg.semantics.is_empty() || cfg.reps == 0 {
        return Err(Error::Config("need at least one semantics and one repetition".into()));
    }
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        cfg.limits.check(2 * n)?;
        let gen = GeneratorConfig {
            n_models: n,
            invalidity_rate: cfg.invalidity_rate,
            tie_rate: cfg.tie_rate,
            ..GeneratorConfig::default()
        };
        let scenarios = (0..cfg.reps)
            .map(|r| generate_random_scenario(&gen, scenario_seed(cfg.seed, &format!("bench-{n}-{r}"))))
            .collect::<rae_core::Result<Vec<_>>>()?;
        for &sem in &cfg.semantics {
            let mut times = Vec::with_capacity(cfg.reps);
            for s in &scenarios {
                let inst = s.instance()?;
                let pref = s.preference_ranking()?;
                let start = Instant::now();
                argumentative_ensemble(&inst, sem, &pref, cfg.seed, &cfg.limits)?;
                times.push(start.elapsed().as_secs_f64() * 1e3);
            }
            rows.push(BenchRow { n_models: n, semantics: sem, mean_ms: mean(&times), p95_ms: p95(&mut times) });
        }
    }
    Ok(rows)
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Nearest-rank 95th percentile.
fn p95(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let rank = (0.95 * v.len() as f64).ceil() as usize;
    v[rank.max(1) - 1]
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n_models", "semantics", "mean_ms", "p95_ms"]).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.n_models.to_string(),
            r.semantics.to_string(),
            format!("{:.4}", r.mean_ms),
            format!("{:.4}", r.p95_ms),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("csv output is utf-8")
}

/// For each size, whether s-preferred was on average no slower than
/// d-preferred. Sizes missing either semantics are skipped.
pub fn s_no_slower_than_d(rows: &[BenchRow]) -> Vec<(usize, bool)> {
    let find = |n, sem| rows.iter().find(|r| r.n_models == n && r.semantics == sem).map(|r| r.mean_ms);
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.n_models).collect();
    sizes.dedup();
    sizes
        .into_iter()
        .filter_map(|n| Some((n, find(n, Semantics::SPreferred)? <= find(n, Semantics::DPreferred)?)))
        .collect()
}
