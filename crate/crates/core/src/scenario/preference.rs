use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Scenario;
use crate::error::{Error, Result};

/// A total preorder over models expressed as numeric ranks, index-aligned
/// with the scenario's models. Higher is more preferred; equal ranks mean
/// equally preferred.
#[derive(Debug, Clone, PartialEq)]
pub struct PreferenceRanking {
    ranks: Vec<f64>,
}

impl PreferenceRanking {
    pub fn uniform(n: usize) -> Self {
        PreferenceRanking { ranks: alloc::vec![0.0; n] }
    }

    pub fn from_ranks(ranks: Vec<f64>) -> Result<Self> {
        if ranks.iter().any(|r| !r.is_finite()) {
            return Err(Error::Config("ranks must be finite".into()));
        }
        Ok(PreferenceRanking { ranks })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, i: usize) -> f64 {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[f64] {
        &self.ranks
    }

    /// Model `i` is at least as preferred as model `j`.
    pub fn at_least(&self, i: usize, j: usize) -> bool {
        self.ranks[i] >= self.ranks[j]
    }

    /// Model `i` is strictly preferred to model `j`.
    pub fn strictly(&self, i: usize, j: usize) -> bool {
        self.ranks[i] > self.ranks[j]
    }
}

/// Ranks models lexicographically over priority groups. A group's score is
/// the mean of its properties; ranks are dense (0 for the least preferred).
pub fn derive_model_preference(s: &Scenario, priority: &[Vec<String>]) -> Result<PreferenceRanking> {
    let mut seen = BTreeSet::new();
    for group in priority {
        if group.is_empty() {
            return Err(Error::Config("empty priority group".into()));
        }
        for name in group {
            if !seen.insert(name.as_str()) {
                return Err(Error::Config(format!(
                    "property `{name}` appears in more than one priority position"
                )));
            }
            if s.models.iter().any(|m| !m.properties.contains_key(name)) {
                return Err(Error::UnknownProperty(name.clone()));
            }
        }
    }

    let scores: Vec<Vec<f64>> = s
        .models
        .iter()
        .map(|m| {
            priority
                .iter()
                .map(|g| g.iter().map(|p| m.properties[p]).sum::<f64>() / g.len() as f64)
                .collect()
        })
        .collect();

    let cmp = |a: &Vec<f64>, b: &Vec<f64>| -> Ordering {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    };
    let mut distinct: Vec<&Vec<f64>> = scores.iter().collect();
    distinct.sort_by(|a, b| cmp(a, b));
    distinct.dedup_by(|a, b| cmp(a, b).is_eq());

    let ranks = scores
        .iter()
        .map(|v| distinct.partition_point(|d| cmp(d, v).is_lt()) as f64)
        .collect();
    Ok(PreferenceRanking { ranks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{ModelRecord, PreferenceSpec, Scenario};
    use alloc::string::ToString;
    use alloc::vec;

    fn table() -> Scenario {
        let acc = [0.85, 0.87, 0.86, 0.86, 0.87];
        let simp = [0.0, 0.75, 1.0, 0.5, 0.75];
        Scenario {
            label_set: vec![0, 1],
            input_id: "x".into(),
            truth_label: None,
            models: (0..5)
                .map(|i| ModelRecord {
                    id: format!("M{}", i + 1),
                    prediction: 0,
                    properties: [("accuracy".to_string(), acc[i]), ("simplicity".to_string(), simp[i])]
                        .into_iter()
                        .collect(),
                })
                .collect(),
            counterfactuals: vec![],
            preference: PreferenceSpec::Uniform,
        }
    }

    fn groups(gs: &[&[&str]]) -> Vec<Vec<String>> {
        gs.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn accuracy_then_simplicity() {
        // M2 ~ M5 > M3 > M4 > M1
        let p = derive_model_preference(&table(), &groups(&[&["accuracy"], &["simplicity"]])).unwrap();
        assert_eq!(p.ranks(), &[0.0, 3.0, 2.0, 1.0, 3.0]);
        assert!(p.at_least(1, 4) && p.at_least(4, 1));
        assert!(p.strictly(4, 2) && p.strictly(2, 3) && p.strictly(3, 0));
    }

    #[test]
    fn tied_group_uses_mean() {
        // means .425, .81, .93, .68, .81
        let p = derive_model_preference(&table(), &groups(&[&["accuracy", "simplicity"]])).unwrap();
        assert_eq!(p.ranks(), &[0.0, 2.0, 3.0, 1.0, 2.0]);
    }

    #[test]
    fn empty_priority_is_uniform() {
        let p = derive_model_preference(&table(), &[]).unwrap();
        assert!(p.ranks().iter().all(|&r| r == 0.0));
    }

    #[test]
    fn config_errors() {
        assert_eq!(
            derive_model_preference(&table(), &groups(&[&["speed"]])),
            Err(Error::UnknownProperty("speed".into()))
        );
        assert!(matches!(
            derive_model_preference(&table(), &groups(&[&["accuracy"], &["accuracy"]])),
            Err(Error::Config(_))
        ));
    }
}
