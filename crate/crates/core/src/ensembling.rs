//! Ensembling methods: majority vote, its two counterfactual-carrying
//! extensions, and selection of a largest extension of the scenario's
//! bipolar framework.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::framework::{build_baf, ArgSet};
use crate::scenario::{Instance, Label, PreferenceRanking};
use crate::semantics::{enumerate_extensions, ExtensionSet, Limits, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Naive,
    Augmented,
    Robust,
    Argumentative(Semantics),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Naive => f.write_str("naive"),
            Method::Augmented => f.write_str("augmented"),
            Method::Robust => f.write_str("robust"),
            Method::Argumentative(sem) => write!(f, "arg:{sem}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    /// `naive`, `augmented`, `robust` or `arg:<semantics>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "augmented" => Ok(Method::Augmented),
            "robust" => Ok(Method::Robust),
            _ => match s.strip_prefix("arg:") {
                Some(sem) => Ok(Method::Argumentative(sem.parse()?)),
                None => Err(Error::Config(alloc::format!("unknown method `{s}`"))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Diagnostics {
    /// Number of extensions the semantics produced; zero for the baselines.
    pub extension_count: usize,
    /// A seeded draw among two or more remaining candidates was needed.
    pub tie_broken: bool,
    pub seed: u64,
    /// The full extension family, in canonical order.
    pub extensions: ExtensionSet,
}

/// Selected models and counterfactuals (by index) and the aggregated label.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub method: Method,
    pub models: Vec<usize>,
    pub counterfactuals: Vec<usize>,
    /// `None` when no model is selected.
    pub label: Option<Label>,
    pub diagnostics: Diagnostics,
}

/// The labels with the most votes, in label-set order.
fn top_labels(inst: &Instance) -> Vec<Label> {
    let counts: Vec<(Label, usize)> = inst
        .labels()
        .iter()
        .map(|&l| (l, (0..inst.len()).filter(|&i| inst.prediction(i) == l).count()))
        .collect();
    let best = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
    counts.into_iter().filter(|&(_, c)| c == best).map(|(l, _)| l).collect()
}

/// Plurality label with a seeded uniform draw among tied labels.
fn majority_label(inst: &Instance, rng: &mut ChaCha8Rng) -> (Label, bool) {
    let top = top_labels(inst);
    if top.len() > 1 {
        (top[rng.random_range(0..top.len())], true)
    } else {
        (top[0], false)
    }
}

fn naive_with(inst: &Instance, rng: &mut ChaCha8Rng, seed: u64) -> Solution {
    let (label, tie_broken) = majority_label(inst, rng);
    Solution {
        method: Method::Naive,
        models: (0..inst.len()).filter(|&i| inst.prediction(i) == label).collect(),
        counterfactuals: Vec::new(),
        label: Some(label),
        diagnostics: Diagnostics { tie_broken, seed, ..Diagnostics::default() },
    }
}

pub fn naive_ensemble(inst: &Instance, seed: u64) -> Solution {
    naive_with(inst, &mut ChaCha8Rng::seed_from_u64(seed), seed)
}

/// Majority-vote models together with all of their counterfactuals.
pub fn augmented_ensemble(inst: &Instance, seed: u64) -> Solution {
    let mut sol = naive_ensemble(inst, seed);
    sol.method = Method::Augmented;
    sol.counterfactuals = sol.models.clone();
    sol
}

/// Majority-vote models together with those of their counterfactuals that
/// are valid on every selected model.
pub fn robust_ensemble(inst: &Instance, seed: u64) -> Solution {
    let mut sol = naive_ensemble(inst, seed);
    sol.method = Method::Robust;
    sol.counterfactuals =
        sol.models.iter().copied().filter(|&c| sol.models.iter().all(|&m| inst.is_valid_for(c, m))).collect();
    sol
}

/// Picks one largest extension of the scenario's framework under `sem`.
///
/// Among the largest extensions, those agreeing with the majority-vote label
/// (drawn with the same seed) are preferred; then, for stable and
/// d-preferred, those holding both a model and a counterfactual; any
/// remaining tie is settled by a seeded draw over the canonical order.
pub fn argumentative_ensemble(
    inst: &Instance,
    sem: Semantics,
    pref: &PreferenceRanking,
    seed: u64,
    limits: &Limits,
) -> Result<Solution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (majority, _) = majority_label(inst, &mut rng);
    let baf = build_baf(inst, pref)?;
    let extensions = enumerate_extensions(&baf, sem, limits)?;
    let m = inst.len();
    let models = baf.models();
    let cfs = baf.counterfactuals();

    let largest = extensions.iter().map(|e| e.len()).max().unwrap_or(0);
    let mut candidates: Vec<ArgSet> = extensions.iter().copied().filter(|e| e.len() == largest).collect();

    let agrees = |e: &ArgSet| {
        let ms = *e & models;
        !ms.is_empty() && ms.iter().all(|i| inst.prediction(i) == majority)
    };
    narrow(&mut candidates, agrees);
    if matches!(sem, Semantics::Stable | Semantics::DPreferred) {
        narrow(&mut candidates, |e| e.intersects(models) && e.intersects(cfs));
    }

    let tie_broken = candidates.len() > 1;
    let chosen = match candidates.len() {
        0 => ArgSet::EMPTY,
        1 => candidates[0],
        n => candidates[rng.random_range(0..n)],
    };

    let selected: Vec<usize> = (chosen & models).iter().collect();
    let label = selected.first().map(|&i| inst.prediction(i));
    debug_assert!(selected.iter().all(|&i| Some(inst.prediction(i)) == label));
    Ok(Solution {
        method: Method::Argumentative(sem),
        models: selected,
        counterfactuals: (chosen & cfs).iter().map(|p| p - m).collect(),
        label,
        diagnostics: Diagnostics { extension_count: extensions.len(), tie_broken, seed, extensions },
    })
}

/// Keeps the candidates passing `keep`, unless none do.
fn narrow(candidates: &mut Vec<ArgSet>, keep: impl Fn(&ArgSet) -> bool) {
    if candidates.iter().any(&keep) {
        candidates.retain(keep);
    }
}

/// Runs any method; the preference only affects argumentative methods.
pub fn solve(
    inst: &Instance,
    method: Method,
    pref: &PreferenceRanking,
    seed: u64,
    limits: &Limits,
) -> Result<Solution> {
    Ok(match method {
        Method::Naive => naive_ensemble(inst, seed),
        Method::Augmented => augmented_ensemble(inst, seed),
        Method::Robust => robust_ensemble(inst, seed),
        Method::Argumentative(sem) => argumentative_ensemble(inst, sem, pref, seed, limits)?,
    })
}
