//! Problem instances: models, their predictions on the input, the
//! counterfactual explanation produced for each model, and how every model
//! classifies every explanation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

mod generate;
mod preference;

pub use self::generate::{generate_random_scenario, GeneratorConfig};
pub use self::preference::{derive_model_preference, PreferenceRanking};

/// Class labels are opaque integers.
pub type Label = i64;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct ModelRecord {
    pub id: String,
    /// The model's prediction on the input.
    pub prediction: Label,
    #[cfg_attr(feature = "serde", serde(default))]
    pub properties: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct CounterfactualRecord {
    pub id: String,
    /// Id of the model this explanation was generated for.
    pub owner: String,
    /// How every model (by id) classifies this explanation.
    pub predictions: BTreeMap<String, Label>,
}

/// How the model preference is obtained.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "mode", rename_all = "lowercase"))]
pub enum PreferenceSpec {
    /// Lexicographic over groups of properties; properties within a group
    /// are equally important and are averaged.
    Priority { priority: Vec<Vec<String>> },
    /// Explicit numeric ranks, higher is more preferred.
    Ranks { ranks: BTreeMap<String, f64> },
    #[default]
    Uniform,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct Scenario {
    pub label_set: Vec<Label>,
    pub input_id: String,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub truth_label: Option<Label>,
    pub models: Vec<ModelRecord>,
    /// Index-aligned with `models`: the i-th explanation belongs to the i-th model.
    pub counterfactuals: Vec<CounterfactualRecord>,
    pub preference: PreferenceSpec,
}

impl Scenario {
    /// The model preference described by the scenario's own preference spec.
    pub fn preference_ranking(&self) -> Result<PreferenceRanking> {
        match &self.preference {
            PreferenceSpec::Uniform => Ok(PreferenceRanking::uniform(self.models.len())),
            PreferenceSpec::Priority { priority } => derive_model_preference(self, priority),
            PreferenceSpec::Ranks { ranks } => {
                let values = self
                    .models
                    .iter()
                    .map(|m| {
                        ranks.get(&m.id).copied().ok_or_else(|| {
                            Error::Config(alloc::format!("no rank given for model `{}`", m.id))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                PreferenceRanking::from_ranks(values)
            }
        }
    }

    /// Validates the scenario and builds the dense view used by the solvers.
    pub fn instance(&self) -> Result<Instance> {
        Instance::new(self)
    }
}

/// One violated scenario invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoModels,
    EmptyLabelSet,
    DuplicateLabel(Label),
    CountMismatch { models: usize, counterfactuals: usize },
    DuplicateModelId(String),
    DuplicateCounterfactualId(String),
    PredictionOutsideLabels { model: String, label: Label },
    UnknownOwner { counterfactual: String, owner: String },
    /// The i-th explanation must belong to the i-th model.
    OwnerMismatch { counterfactual: String, owner: String, expected: String },
    MissingPrediction { counterfactual: String, model: String },
    UnknownPredictionModel { counterfactual: String, model: String },
    CrossPredictionOutsideLabels { counterfactual: String, model: String, label: Label },
    /// The explanation does not change its own model's prediction.
    OwnInvalid { model: String, counterfactual: String },
    NonFiniteProperty { model: String, property: String },
    /// Models must all carry the same property names.
    PropertySetMismatch { model: String },
    TruthOutsideLabels(Label),
    MissingRank { model: String },
    NonFiniteRank { model: String },
    UnknownPreferenceProperty(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoModels => write!(f, "scenario has no models"),
            Violation::EmptyLabelSet => write!(f, "label set is empty"),
            Violation::DuplicateLabel(l) => write!(f, "label {l} appears twice in the label set"),
            Violation::CountMismatch { models, counterfactuals } => write!(
                f,
                "{models} models but {counterfactuals} counterfactuals (need exactly one per model)"
            ),
            Violation::DuplicateModelId(id) => write!(f, "duplicate model id `{id}`"),
            Violation::DuplicateCounterfactualId(id) => {
                write!(f, "duplicate counterfactual id `{id}`")
            }
            Violation::PredictionOutsideLabels { model, label } => {
                write!(f, "model `{model}` predicts {label}, which is not in the label set")
            }
            Violation::UnknownOwner { counterfactual, owner } => {
                write!(f, "counterfactual `{counterfactual}` names unknown owner `{owner}`")
            }
            Violation::OwnerMismatch { counterfactual, owner, expected } => write!(
                f,
                "counterfactual `{counterfactual}` is owned by `{owner}` but sits at the position of `{expected}`"
            ),
            Violation::MissingPrediction { counterfactual, model } => {
                write!(f, "no prediction of model `{model}` on counterfactual `{counterfactual}`")
            }
            Violation::UnknownPredictionModel { counterfactual, model } => write!(
                f,
                "counterfactual `{counterfactual}` has a prediction for unknown model `{model}`"
            ),
            Violation::CrossPredictionOutsideLabels { counterfactual, model, label } => write!(
                f,
                "model `{model}` predicts {label} on `{counterfactual}`, which is not in the label set"
            ),
            Violation::OwnInvalid { model, counterfactual } => write!(
                f,
                "counterfactual `{counterfactual}` does not change the prediction of its own model `{model}`"
            ),
            Violation::NonFiniteProperty { model, property } => {
                write!(f, "property `{property}` of model `{model}` is not finite")
            }
            Violation::PropertySetMismatch { model } => {
                write!(f, "model `{model}` does not carry the same property names as the first model")
            }
            Violation::TruthOutsideLabels(l) => write!(f, "truth label {l} is not in the label set"),
            Violation::MissingRank { model } => write!(f, "no rank given for model `{model}`"),
            Violation::NonFiniteRank { model } => write!(f, "rank of model `{model}` is not finite"),
            Violation::UnknownPreferenceProperty(p) => {
                write!(f, "preference names property `{p}` that some model lacks")
            }
        }
    }
}

/// Every invariant violation found in a scenario; empty means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every scenario invariant. Violations are data, not errors.
pub fn validate_scenario(s: &Scenario) -> ValidationReport {
    let mut out = Vec::new();

    if s.label_set.is_empty() {
        out.push(Violation::EmptyLabelSet);
    }
    let mut labels = BTreeSet::new();
    for &l in &s.label_set {
        if !labels.insert(l) {
            out.push(Violation::DuplicateLabel(l));
        }
    }
    if s.models.is_empty() {
        out.push(Violation::NoModels);
    }
    if s.models.len() != s.counterfactuals.len() {
        out.push(Violation::CountMismatch {
            models: s.models.len(),
            counterfactuals: s.counterfactuals.len(),
        });
    }

    let mut model_pos = BTreeMap::new();
    for (i, m) in s.models.iter().enumerate() {
        if model_pos.insert(m.id.as_str(), i).is_some() {
            out.push(Violation::DuplicateModelId(m.id.clone()));
        }
        if !labels.contains(&m.prediction) {
            out.push(Violation::PredictionOutsideLabels { model: m.id.clone(), label: m.prediction });
        }
        for (name, value) in &m.properties {
            if !value.is_finite() {
                out.push(Violation::NonFiniteProperty { model: m.id.clone(), property: name.clone() });
            }
        }
    }
    if let Some(first) = s.models.first() {
        for m in &s.models[1..] {
            if !m.properties.keys().eq(first.properties.keys()) {
                out.push(Violation::PropertySetMismatch { model: m.id.clone() });
            }
        }
    }

    let mut cf_ids = BTreeSet::new();
    for (i, c) in s.counterfactuals.iter().enumerate() {
        if !cf_ids.insert(c.id.as_str()) {
            out.push(Violation::DuplicateCounterfactualId(c.id.clone()));
        }
        match model_pos.get(c.owner.as_str()) {
            None => out.push(Violation::UnknownOwner {
                counterfactual: c.id.clone(),
                owner: c.owner.clone(),
            }),
            Some(&pos) if pos != i => out.push(Violation::OwnerMismatch {
                counterfactual: c.id.clone(),
                owner: c.owner.clone(),
                expected: s.models.get(i).map(|m| m.id.clone()).unwrap_or_default(),
            }),
            Some(_) => {}
        }
        for m in &s.models {
            match c.predictions.get(&m.id) {
                None => out.push(Violation::MissingPrediction {
                    counterfactual: c.id.clone(),
                    model: m.id.clone(),
                }),
                Some(l) if !labels.contains(l) => out.push(Violation::CrossPredictionOutsideLabels {
                    counterfactual: c.id.clone(),
                    model: m.id.clone(),
                    label: *l,
                }),
                Some(_) => {}
            }
        }
        for model in c.predictions.keys() {
            if !model_pos.contains_key(model.as_str()) {
                out.push(Violation::UnknownPredictionModel {
                    counterfactual: c.id.clone(),
                    model: model.clone(),
                });
            }
        }
        // Own validity: the explanation must flip its owner's prediction.
        if let Some(owner) = model_pos.get(c.owner.as_str()).map(|&p| &s.models[p]) {
            if c.predictions.get(&owner.id) == Some(&owner.prediction) {
                out.push(Violation::OwnInvalid {
                    model: owner.id.clone(),
                    counterfactual: c.id.clone(),
                });
            }
        }
    }

    if let Some(t) = s.truth_label {
        if !labels.contains(&t) {
            out.push(Violation::TruthOutsideLabels(t));
        }
    }

    match &s.preference {
        PreferenceSpec::Uniform => {}
        PreferenceSpec::Ranks { ranks } => {
            for m in &s.models {
                match ranks.get(&m.id) {
                    None => out.push(Violation::MissingRank { model: m.id.clone() }),
                    Some(r) if !r.is_finite() => {
                        out.push(Violation::NonFiniteRank { model: m.id.clone() })
                    }
                    Some(_) => {}
                }
            }
        }
        PreferenceSpec::Priority { priority } => {
            for name in priority.iter().flatten() {
                if s.models.iter().any(|m| !m.properties.contains_key(name)) {
                    out.push(Violation::UnknownPreferenceProperty(name.clone()));
                }
            }
        }
    }

    ValidationReport { violations: out }
}

/// A validated scenario in dense, index-addressed form.
///
/// Model `i` and counterfactual `i` form a pair; `cross[j][i]` is the
/// prediction of model `j` on counterfactual `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    labels: Vec<Label>,
    model_ids: Vec<String>,
    counterfactual_ids: Vec<String>,
    on_input: Vec<Label>,
    cross: Vec<Vec<Label>>,
    simplicity: Vec<Option<f64>>,
    truth: Option<Label>,
}

impl Instance {
    pub fn new(s: &Scenario) -> Result<Self> {
        let report = validate_scenario(s);
        if !report.is_valid() {
            return Err(Error::InvalidScenario(report));
        }
        let cross = s
            .models
            .iter()
            .map(|m| s.counterfactuals.iter().map(|c| c.predictions[&m.id]).collect())
            .collect();
        Ok(Instance {
            labels: s.label_set.clone(),
            model_ids: s.models.iter().map(|m| m.id.clone()).collect(),
            counterfactual_ids: s.counterfactuals.iter().map(|c| c.id.clone()).collect(),
            on_input: s.models.iter().map(|m| m.prediction).collect(),
            cross,
            simplicity: s.models.iter().map(|m| m.properties.get("simplicity").copied()).collect(),
            truth: s.truth_label,
        })
    }

    /// Number of models (and of counterfactuals).
    pub fn len(&self) -> usize {
        self.on_input.len()
    }

    pub fn is_empty(&self) -> bool {
        self.on_input.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn model_id(&self, i: usize) -> &str {
        &self.model_ids[i]
    }

    pub fn counterfactual_id(&self, i: usize) -> &str {
        &self.counterfactual_ids[i]
    }

    /// Prediction of model `i` on the input.
    pub fn prediction(&self, i: usize) -> Label {
        self.on_input[i]
    }

    /// Prediction of model `model` on counterfactual `cf`.
    pub fn prediction_on(&self, model: usize, cf: usize) -> Label {
        self.cross[model][cf]
    }

    /// Whether counterfactual `cf` changes the prediction of model `model`.
    pub fn is_valid_for(&self, cf: usize, model: usize) -> bool {
        self.cross[model][cf] != self.on_input[model]
    }

    pub fn simplicity(&self, i: usize) -> Option<f64> {
        self.simplicity[i]
    }

    pub fn truth(&self) -> Option<Label> {
        self.truth
    }
}
