use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CounterfactualRecord, Label, ModelRecord, PreferenceSpec, Scenario};
use crate::error::{Error, Result};

const SIMPLICITY_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Parameters for synthetic scenarios.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeneratorConfig {
    pub n_models: usize,
    /// Labels are `0..label_count`.
    pub label_count: usize,
    /// Chance that a counterfactual is invalid on another model sharing its
    /// owner's prediction.
    pub invalidity_rate: f64,
    /// Chance that a model copies the rank of an earlier model.
    pub tie_rate: f64,
    /// Draw a truth label and let each model hit it with probability equal
    /// to its accuracy. Otherwise predictions are uniform and no truth is set.
    pub with_truth: bool,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            n_models: 10,
            label_count: 2,
            invalidity_rate: 0.3,
            tie_rate: 0.0,
            with_truth: false,
        }
    }
}

impl GeneratorConfig {
    pub fn check(&self) -> Result<()> {
        if self.n_models == 0 {
            return Err(Error::Config("n_models must be at least 1".into()));
        }
        if self.label_count < 2 {
            return Err(Error::Config("label_count must be at least 2".into()));
        }
        for (name, rate) in [("invalidity_rate", self.invalidity_rate), ("tie_rate", self.tie_rate)] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(Error::Config(format!("{name} must lie in [0, 1], got {rate}")));
            }
        }
        Ok(())
    }
}

fn other_label(rng: &mut ChaCha8Rng, count: usize, not: Label) -> Label {
    let pick = rng.random_range(0..count as Label - 1);
    if pick >= not {
        pick + 1
    } else {
        pick
    }
}

/// Draws a valid scenario; identical `(cfg, seed)` give identical output.
pub fn generate_random_scenario(cfg: &GeneratorConfig, seed: u64) -> Result<Scenario> {
    cfg.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = cfg.n_models;
    let k = cfg.label_count;

    let truth = cfg.with_truth.then(|| rng.random_range(0..k as Label));

    let mut models = Vec::with_capacity(n);
    let mut targets = Vec::with_capacity(n);
    let mut ranks: Vec<f64> = Vec::with_capacity(n);
    for i in 0..n {
        let accuracy = rng.random_range(600..=950) as f64 / 1000.0;
        let simplicity = SIMPLICITY_GRID[rng.random_range(0..SIMPLICITY_GRID.len())];
        let prediction = match truth {
            Some(t) if rng.random_bool(accuracy) => t,
            Some(t) => other_label(&mut rng, k, t),
            None => rng.random_range(0..k as Label),
        };
        targets.push(other_label(&mut rng, k, prediction));
        let rank = if i > 0 && rng.random_bool(cfg.tie_rate) {
            ranks[rng.random_range(0..i)]
        } else {
            rng.random_range(0..1_000_000u32) as f64 / 1_000_000.0
        };
        ranks.push(rank);
        let properties: BTreeMap<String, f64> =
            [("accuracy".into(), accuracy), ("simplicity".into(), simplicity)].into_iter().collect();
        models.push(ModelRecord { id: format!("M{}", i + 1), prediction, properties });
    }

    let mut counterfactuals = Vec::with_capacity(n);
    for i in 0..n {
        let mut predictions = BTreeMap::new();
        for j in 0..n {
            let on_x = models[j].prediction;
            let label = if j == i {
                targets[i]
            } else if on_x == models[i].prediction {
                if rng.random_bool(cfg.invalidity_rate) {
                    on_x
                } else {
                    targets[i]
                }
            } else {
                // Models that disagree with the owner classify the
                // counterfactual as its target class.
                targets[i]
            };
            predictions.insert(models[j].id.clone(), label);
        }
        counterfactuals.push(CounterfactualRecord {
            id: format!("c{}", i + 1),
            owner: models[i].id.clone(),
            predictions,
        });
    }

    let ranks = models.iter().map(|m| m.id.clone()).zip(ranks).collect();
    Ok(Scenario {
        label_set: (0..k as Label).collect(),
        input_id: format!("x-{seed}"),
        truth_label: truth,
        models,
        counterfactuals,
        preference: PreferenceSpec::Ranks { ranks },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::validate_scenario;

    fn cfg(n: usize, inv: f64, tie: f64) -> GeneratorConfig {
        GeneratorConfig { n_models: n, label_count: 2, invalidity_rate: inv, tie_rate: tie, with_truth: false }
    }

    #[test]
    fn full_ties_give_uniform_ranks() {
        let s = generate_random_scenario(&cfg(5, 0.0, 1.0), 7).unwrap();
        assert!(validate_scenario(&s).is_valid());
        let p = s.preference_ranking().unwrap();
        assert!(p.ranks().iter().all(|&r| r == p.rank(0)));
    }

    #[test]
    fn single_model() {
        let s = generate_random_scenario(&cfg(1, 0.5, 0.5), 3).unwrap();
        let inst = s.instance().unwrap();
        assert_eq!(inst.len(), 1);
        assert!(inst.is_valid_for(0, 0));
    }

    #[test]
    fn deterministic() {
        let c = GeneratorConfig { label_count: 3, with_truth: true, ..cfg(8, 0.3, 0.2) };
        assert_eq!(generate_random_scenario(&c, 11).unwrap(), generate_random_scenario(&c, 11).unwrap());
        assert_ne!(generate_random_scenario(&c, 11).unwrap(), generate_random_scenario(&c, 12).unwrap());
    }

    #[test]
    fn bad_config() {
        assert!(generate_random_scenario(&cfg(0, 0.0, 0.0), 0).is_err());
        assert!(generate_random_scenario(&cfg(3, 1.5, 0.0), 0).is_err());
        assert!(generate_random_scenario(&cfg(3, 0.0, -0.1), 0).is_err());
        assert!(generate_random_scenario(&GeneratorConfig { label_count: 1, ..cfg(3, 0.0, 0.0) }, 0).is_err());
    }

    #[test]
    fn zero_invalidity_keeps_same_label_entries_valid() {
        let s = generate_random_scenario(&cfg(9, 0.0, 0.0), 5).unwrap();
        let inst = s.instance().unwrap();
        for i in 0..9 {
            for j in 0..9 {
                if inst.prediction(i) == inst.prediction(j) {
                    assert!(inst.is_valid_for(i, j));
                }
            }
        }
    }
}
