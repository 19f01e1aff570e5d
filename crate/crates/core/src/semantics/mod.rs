//! Extension enumeration for bipolar frameworks under the stable, d-, s- and
//! c-preferred semantics, and for abstract frameworks under preferred
//! semantics.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::{Aaf, ArgSet, Baf, MAX_ARGUMENTS};

mod search;

use self::search::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Semantics {
    Stable,
    DPreferred,
    SPreferred,
    CPreferred,
}

impl Semantics {
    pub const ALL: [Semantics; 4] =
        [Semantics::Stable, Semantics::DPreferred, Semantics::SPreferred, Semantics::CPreferred];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Stable => "stable",
            Semantics::DPreferred => "d-preferred",
            Semantics::SPreferred => "s-preferred",
            Semantics::CPreferred => "c-preferred",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.as_str() == s)
            .ok_or_else(|| Error::Config(alloc::format!("unknown semantics `{s}`")))
    }
}

/// Budget for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    max_arguments: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_arguments: 64 }
    }
}

impl Limits {
    /// At most [`MAX_ARGUMENTS`].
    pub fn new(max_arguments: usize) -> Result<Self> {
        if max_arguments > MAX_ARGUMENTS {
            return Err(Error::Config(alloc::format!(
                "argument limit {max_arguments} exceeds the maximum of {MAX_ARGUMENTS}"
            )));
        }
        Ok(Limits { max_arguments })
    }

    pub fn max_arguments(self) -> usize {
        self.max_arguments
    }

    pub fn check(self, arguments: usize) -> Result<()> {
        if arguments > self.max_arguments {
            return Err(Error::Capacity { arguments, limit: self.max_arguments });
        }
        Ok(())
    }
}

/// Orders sets by size (largest first), then by their ascending positions.
pub fn canonical_cmp(a: &ArgSet, b: &ArgSet) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.iter().cmp(b.iter()))
}

/// A family of extensions in canonical order, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionSet {
    extensions: Vec<ArgSet>,
}

impl ExtensionSet {
    pub fn new(mut extensions: Vec<ArgSet>) -> Self {
        extensions.sort_by(canonical_cmp);
        extensions.dedup();
        ExtensionSet { extensions }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.extensions
    }

    pub fn iter(&self) -> core::slice::Iter<'_, ArgSet> {
        self.extensions.iter()
    }

    pub fn contains(&self, x: ArgSet) -> bool {
        self.extensions.contains(&x)
    }

    pub fn map(&self, f: impl FnMut(ArgSet) -> ArgSet) -> ExtensionSet {
        ExtensionSet::new(self.extensions.iter().copied().map(f).collect())
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a ArgSet;
    type IntoIter = core::slice::Iter<'a, ArgSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

fn symmetric(rel: &[ArgSet]) -> Vec<ArgSet> {
    let mut out = rel.to_vec();
    for (a, targets) in rel.iter().enumerate() {
        for b in *targets {
            out[b].insert(a);
        }
    }
    out
}

fn baf_problem(f: &Baf, sem: Semantics) -> Problem {
    let n = f.len();
    let attacks: Vec<ArgSet> = (0..n).map(|a| f.singleton_attacks(a)).collect();
    let mut conflicts = symmetric(&attacks);
    let mut problem_closure = None;
    match sem {
        Semantics::Stable | Semantics::DPreferred => {}
        Semantics::SPreferred => {
            // a and b cannot coexist when a set-attacks something b supports.
            let supported: Vec<ArgSet> = (0..n).map(|b| f.supported_by(ArgSet::singleton(b))).collect();
            for a in 0..n {
                for b in 0..n {
                    if attacks[a].intersects(supported[b]) {
                        conflicts[a].insert(b);
                        conflicts[b].insert(a);
                    }
                }
            }
        }
        Semantics::CPreferred => {
            problem_closure =
                Some((0..n).map(|a| ArgSet::singleton(a) | f.support_reach(a)).collect());
        }
    }
    let mut p = Problem::new(attacks, conflicts);
    p.closure = problem_closure;
    p.stable = sem == Semantics::Stable;
    p
}

/// Every extension of `f` under `sem`.
pub fn enumerate_extensions(f: &Baf, sem: Semantics, limits: &Limits) -> Result<ExtensionSet> {
    limits.check(f.len())?;
    let set = ExtensionSet::new(baf_problem(f, sem).solve());
    debug_assert!(set.iter().all(|&x| match sem {
        Semantics::Stable => f.is_stable(x),
        Semantics::DPreferred => f.is_d_admissible(x),
        Semantics::SPreferred => f.is_s_admissible(x),
        Semantics::CPreferred => f.is_c_admissible(x),
    }));
    Ok(set)
}

/// Every preferred extension of an abstract framework.
pub fn enumerate_preferred_aaf(f: &Aaf, limits: &Limits) -> Result<ExtensionSet> {
    limits.check(f.len())?;
    let attacks: Vec<ArgSet> = (0..f.len()).map(|a| f.targets(a)).collect();
    let conflicts = symmetric(&attacks);
    let set = ExtensionSet::new(Problem::new(attacks, conflicts).solve());
    debug_assert!(set.iter().all(|&x| f.is_admissible(x)));
    Ok(set)
}

/// Expands pair arguments into their model and counterfactual.
pub fn map_aaf_extension_to_baf(e: ArgSet, pairs: usize) -> ArgSet {
    e.iter().flat_map(|i| [i, pairs + i]).collect()
}

/// Keeps the pairs whose model and counterfactual are both present.
pub fn map_baf_extension_to_aaf(e: ArgSet, pairs: usize) -> ArgSet {
    (0..pairs).filter(|&i| e.contains(i) && e.contains(pairs + i)).collect()
}

#[cfg(test)]
mod tests;
