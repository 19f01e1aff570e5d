//! Exhaustive reference enumeration for small frameworks. Every subset is
//! tested against the framework predicates; nothing is pruned.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::framework::{Aaf, ArgSet, Baf};
use crate::semantics::{ExtensionSet, Semantics};

/// Largest framework the oracle accepts.
pub const ORACLE_MAX_ARGUMENTS: usize = 16;

fn check(arguments: usize) -> Result<()> {
    if arguments > ORACLE_MAX_ARGUMENTS {
        return Err(Error::Capacity { arguments, limit: ORACLE_MAX_ARGUMENTS });
    }
    Ok(())
}

fn subsets(n: usize) -> impl Iterator<Item = ArgSet> {
    (0u128..1 << n).map(ArgSet::from_bits)
}

fn maximal(sets: Vec<ArgSet>) -> ExtensionSet {
    let keep = sets
        .iter()
        .copied()
        .filter(|&x| !sets.iter().any(|&y| y != x && x.is_subset(y)))
        .collect();
    ExtensionSet::new(keep)
}

pub fn brute_force_extensions(f: &Baf, sem: Semantics) -> Result<ExtensionSet> {
    check(f.len())?;
    let n = f.len();
    Ok(match sem {
        Semantics::Stable => ExtensionSet::new(subsets(n).filter(|&x| f.is_stable(x)).collect()),
        Semantics::DPreferred => maximal(subsets(n).filter(|&x| f.is_d_admissible(x)).collect()),
        Semantics::SPreferred => maximal(subsets(n).filter(|&x| f.is_s_admissible(x)).collect()),
        Semantics::CPreferred => maximal(subsets(n).filter(|&x| f.is_c_admissible(x)).collect()),
    })
}

pub fn brute_force_preferred_aaf(f: &Aaf) -> Result<ExtensionSet> {
    check(f.len())?;
    Ok(maximal(subsets(f.len()).filter(|&x| f.is_admissible(x)).collect()))
}
