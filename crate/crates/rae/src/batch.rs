//! Running several methods over a batch of scenarios and aggregating the
//! satisfaction rates of the desirable properties.

use std::collections::BTreeMap;
use std::time::Instant;

use rae_core::ensembling::solve;
use rae_core::{check_property, Error, Limits, PropertyId, Scenario};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::method::MethodSpec;

/// Seed for one scenario, independent of its position in the batch.
pub fn scenario_seed(master: u64, input_id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(input_id.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest is 32 bytes"))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodReport {
    pub method: String,
    pub scenarios: usize,
    /// Share of scenarios with a truth label whose aggregated label matches it.
    pub accuracy: Option<f64>,
    /// Mean over scenarios of the mean simplicity of the selected models.
    pub mean_simplicity: Option<f64>,
    pub satisfaction: BTreeMap<PropertyId, f64>,
    /// Only recorded when timing is requested.
    pub mean_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchReport {
    pub seed: u64,
    pub methods: Vec<MethodReport>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    pub limits: Limits,
    pub timing: bool,
}

#[derive(Debug, thiserror::Error)]
#[error("scenario `{input_id}`: {source}")]
pub struct BatchError {
    pub input_id: String,
    pub source: Error,
}

fn config_error(msg: &str) -> BatchError {
    BatchError { input_id: String::new(), source: Error::Config(msg.into()) }
}

#[derive(Default)]
struct Tally {
    truth_seen: usize,
    correct: usize,
    /// Per-scenario mean simplicity keyed by input id, summed in key order
    /// so the result does not depend on batch order.
    simplicity: Vec<(String, f64)>,
    simplicity_missing: bool,
    satisfied: BTreeMap<PropertyId, usize>,
    elapsed_ms: f64,
}

pub fn evaluate_batch(
    batch: &[Scenario],
    methods: &[MethodSpec],
    seed: u64,
    opts: &EvalOptions,
) -> Result<BatchReport, BatchError> {
    if batch.is_empty() {
        return Err(config_error("batch is empty"));
    }
    if methods.is_empty() {
        return Err(config_error("no methods given"));
    }
    let mut tallies: Vec<Tally> = methods.iter().map(|_| Tally::default()).collect();

    for s in batch {
        let wrap = |source| BatchError { input_id: s.input_id.clone(), source };
        let inst = s.instance().map_err(wrap)?;
        let scenario_seed = scenario_seed(seed, &s.input_id);
        for (spec, tally) in methods.iter().zip(&mut tallies) {
            let pref = spec.preference.resolve(s).map_err(wrap)?;
            let start = Instant::now();
            let sol = solve(&inst, spec.method, &pref, scenario_seed, &opts.limits).map_err(wrap)?;
            tally.elapsed_ms += start.elapsed().as_secs_f64() * 1e3;

            if let Some(truth) = inst.truth() {
                tally.truth_seen += 1;
                tally.correct += usize::from(sol.label == Some(truth));
            }
            if !sol.models.is_empty() {
                let values: Option<Vec<f64>> = sol.models.iter().map(|&i| inst.simplicity(i)).collect();
                match values {
                    Some(v) => tally.simplicity.push((s.input_id.clone(), v.iter().sum::<f64>() / v.len() as f64)),
                    None => tally.simplicity_missing = true,
                }
            }
            for p in PropertyId::ALL {
                *tally.satisfied.entry(p).or_default() += usize::from(check_property(&inst, &sol, p));
            }
        }
    }

    let n = batch.len() as f64;
    let reports = methods
        .iter()
        .zip(tallies)
        .map(|(spec, mut t)| MethodReport {
            method: spec.label().to_owned(),
            scenarios: batch.len(),
            accuracy: (t.truth_seen > 0).then(|| t.correct as f64 / t.truth_seen as f64),
            mean_simplicity: (!t.simplicity_missing && !t.simplicity.is_empty()).then(|| {
                t.simplicity.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
                t.simplicity.iter().map(|(_, v)| v).sum::<f64>() / t.simplicity.len() as f64
            }),
            satisfaction: t.satisfied.into_iter().map(|(p, c)| (p, c as f64 / n)).collect(),
            mean_time_ms: opts.timing.then(|| t.elapsed_ms / n),
        })
        .collect();
    Ok(BatchReport { seed, methods: reports })
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl BatchReport {
    pub fn rate(&self, method: &str, p: PropertyId) -> Option<f64> {
        self.methods.iter().find(|m| m.method == method).map(|m| m.satisfaction[&p])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// One row per method; absent values are empty cells.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["method".to_owned(), "acc".to_owned(), "simp".to_owned()];
        header.extend(PropertyId::ALL.iter().map(|p| p.to_string()));
        header.push("mean_time_ms".to_owned());
        w.write_record(&header).expect("in-memory write");
        for m in &self.methods {
            let mut row = vec![m.method.clone(), cell(m.accuracy), cell(m.mean_simplicity)];
            row.extend(PropertyId::ALL.iter().map(|p| m.satisfaction[p].to_string()));
            row.push(cell(m.mean_time_ms));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("csv output is utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::method::parse_method_list;
    use rae_core::{generate_random_scenario, GeneratorConfig};

    fn batch(n: u64, truth: bool) -> Vec<Scenario> {
        let cfg = GeneratorConfig { n_models: 5, with_truth: truth, ..GeneratorConfig::default() };
        (0..n).map(|seed| generate_random_scenario(&cfg, seed).unwrap()).collect()
    }

    #[test]
    fn seeds_depend_on_id_only() {
        assert_eq!(scenario_seed(1, "a"), scenario_seed(1, "a"));
        assert_ne!(scenario_seed(1, "a"), scenario_seed(1, "b"));
        assert_ne!(scenario_seed(1, "a"), scenario_seed(2, "a"));
    }

    #[test]
    fn reordering_does_not_change_rates() {
        let methods = parse_method_list("naive,arg:d-preferred,arg:s-preferred:uniform").unwrap();
        let b = batch(30, true);
        let mut r = b.clone();
        r.reverse();
        let opts = EvalOptions::default();
        assert_eq!(evaluate_batch(&b, &methods, 4, &opts).unwrap(), evaluate_batch(&r, &methods, 4, &opts).unwrap());
    }

    #[test]
    fn absent_values() {
        let methods = parse_method_list("naive").unwrap();
        let report = evaluate_batch(&batch(3, false), &methods, 0, &EvalOptions::default()).unwrap();
        assert_eq!(report.methods[0].accuracy, None);
        assert_eq!(report.methods[0].mean_time_ms, None);
        assert!(report.to_csv().lines().nth(1).unwrap().starts_with("naive,,"));

        let mut b = batch(3, true);
        for m in &mut b[1].models {
            m.properties.clear();
        }
        let report = evaluate_batch(&b, &methods, 0, &EvalOptions::default()).unwrap();
        assert_eq!(report.methods[0].mean_simplicity, None);
        assert!(report.methods[0].accuracy.is_some());
    }

    #[test]
    fn config_errors() {
        assert!(evaluate_batch(&batch(2, false), &[], 0, &EvalOptions::default()).is_err());
        let methods = parse_method_list("naive").unwrap();
        assert!(evaluate_batch(&[], &methods, 0, &EvalOptions::default()).is_err());
    }

    #[test]
    fn csv_shape() {
        let methods = parse_method_list("naive,augmented").unwrap();
        let opts = EvalOptions { timing: true, ..EvalOptions::default() };
        let csv = evaluate_batch(&batch(4, true), &methods, 0, &opts).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "method,acc,simp,non_emptiness,non_triviality,model_agreement,majority_vote,\
             counterfactual_validity,counterfactual_coherence,mean_time_ms"
        );
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().skip(1).all(|l| !l.ends_with(',')));
    }
}
