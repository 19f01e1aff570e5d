//! The six desirable properties of an ensembling solution.

use core::fmt;
use core::str::FromStr;

use crate::ensembling::Solution;
use crate::error::Error;
use crate::scenario::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PropertyId {
    /// At least one model and one counterfactual are selected.
    NonEmptiness,
    /// More than one model is selected.
    NonTriviality,
    /// All selected models give the same prediction.
    ModelAgreement,
    /// Models agree, and no label has more supporters among all models than theirs.
    MajorityVote,
    /// Every selected counterfactual is valid on every selected model.
    CounterfactualValidity,
    /// A model is selected exactly when its counterfactual is.
    CounterfactualCoherence,
}

impl PropertyId {
    pub const ALL: [PropertyId; 6] = [
        PropertyId::NonEmptiness,
        PropertyId::NonTriviality,
        PropertyId::ModelAgreement,
        PropertyId::MajorityVote,
        PropertyId::CounterfactualValidity,
        PropertyId::CounterfactualCoherence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::NonEmptiness => "non_emptiness",
            PropertyId::NonTriviality => "non_triviality",
            PropertyId::ModelAgreement => "model_agreement",
            PropertyId::MajorityVote => "majority_vote",
            PropertyId::CounterfactualValidity => "counterfactual_validity",
            PropertyId::CounterfactualCoherence => "counterfactual_coherence",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.into()))
    }
}

fn agreement(inst: &Instance, sol: &Solution) -> bool {
    sol.models.windows(2).all(|w| inst.prediction(w[0]) == inst.prediction(w[1]))
}

pub fn check_property(inst: &Instance, sol: &Solution, p: PropertyId) -> bool {
    match p {
        PropertyId::NonEmptiness => !sol.models.is_empty() && !sol.counterfactuals.is_empty(),
        PropertyId::NonTriviality => sol.models.len() > 1,
        PropertyId::ModelAgreement => agreement(inst, sol),
        PropertyId::MajorityVote => {
            let Some(&first) = sol.models.first() else {
                return false;
            };
            let label = inst.prediction(first);
            let votes = |l| (0..inst.len()).filter(|&i| inst.prediction(i) == l).count();
            let own = votes(label);
            agreement(inst, sol) && inst.labels().iter().all(|&l| votes(l) <= own)
        }
        PropertyId::CounterfactualValidity => sol
            .counterfactuals
            .iter()
            .all(|&c| sol.models.iter().all(|&m| inst.is_valid_for(c, m))),
        PropertyId::CounterfactualCoherence => sol.models == sol.counterfactuals,
    }
}
