//! Small binary-label scenarios shared by unit tests.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::scenario::{CounterfactualRecord, Label, ModelRecord, PreferenceSpec, Scenario};

/// Binary scenario where `invalid` lists `(counterfactual, model)` index
/// pairs on which the counterfactual keeps the model's prediction.
pub fn binary(on_x: &[Label], invalid: &[(usize, usize)]) -> Scenario {
    let n = on_x.len();
    let models: Vec<ModelRecord> = (0..n)
        .map(|i| ModelRecord { id: format!("M{}", i + 1), prediction: on_x[i], properties: BTreeMap::new() })
        .collect();
    let counterfactuals = (0..n)
        .map(|i| CounterfactualRecord {
            id: format!("c{}", i + 1),
            owner: models[i].id.clone(),
            predictions: (0..n)
                .map(|j| {
                    let label = if invalid.contains(&(i, j)) { on_x[j] } else { 1 - on_x[j] };
                    (models[j].id.clone(), label)
                })
                .collect(),
        })
        .collect();
    Scenario {
        label_set: vec![0, 1],
        input_id: "x".to_string(),
        truth_label: None,
        models,
        counterfactuals,
        preference: PreferenceSpec::Uniform,
    }
}

pub fn loan() -> Scenario {
    binary(&[0, 0, 1], &[])
}

pub fn ex1() -> Scenario {
    binary(&[0, 0, 0, 1, 1], &[(0, 1), (1, 0), (2, 1)])
}

pub fn ex5() -> Scenario {
    let mut s = binary(&[0, 0, 0, 1, 1], &[(0, 1), (1, 0), (2, 1), (3, 2)]);
    let acc = [0.85, 0.87, 0.86, 0.86, 0.87];
    let simp = [0.0, 0.75, 1.0, 0.5, 0.75];
    for (i, m) in s.models.iter_mut().enumerate() {
        m.properties.insert("accuracy".into(), acc[i]);
        m.properties.insert("simplicity".into(), simp[i]);
    }
    s.preference = PreferenceSpec::Priority {
        priority: vec![vec![String::from("accuracy")], vec![String::from("simplicity")]],
    };
    s
}

pub fn r1() -> Scenario {
    binary(&[0, 0, 0], &[(0, 2), (1, 2)])
}

pub fn r2() -> Scenario {
    binary(&[0, 0, 0], &[(2, 0), (2, 1)])
}

pub fn empty_d_family() -> Scenario {
    binary(&[0, 1], &[])
}

pub fn incoherent_d_family() -> Scenario {
    binary(&[0, 0, 0], &[(0, 2), (1, 2), (1, 0)])
}

pub fn single() -> Scenario {
    binary(&[1], &[])
}
