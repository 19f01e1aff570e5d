//! Argumentation frameworks built from a scenario: the bipolar framework over
//! models and counterfactuals, and the abstract framework over model and
//! counterfactual pairs.
//!
//! Arguments are addressed by position. In a framework over `m` pairs, model
//! `i` sits at position `i` and its counterfactual at position `m + i`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::scenario::{Instance, PreferenceRanking};

mod argset;

pub use self::argset::{ArgSet, Iter as ArgSetIter, MAX_ARGUMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArgumentKind {
    Model,
    Counterfactual,
}

/// A model or a counterfactual; `index` pairs model `i` with counterfactual `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Argument {
    pub kind: ArgumentKind,
    pub index: usize,
}

impl Argument {
    pub fn model(index: usize) -> Self {
        Argument { kind: ArgumentKind::Model, index }
    }

    pub fn counterfactual(index: usize) -> Self {
        Argument { kind: ArgumentKind::Counterfactual, index }
    }
}

fn check_capacity(arguments: usize) -> Result<()> {
    if arguments > MAX_ARGUMENTS {
        return Err(Error::Capacity { arguments, limit: MAX_ARGUMENTS });
    }
    Ok(())
}

fn default_names(pairs: usize) -> Vec<String> {
    (0..pairs)
        .map(|i| alloc::format!("M{}", i + 1))
        .chain((0..pairs).map(|i| alloc::format!("c{}", i + 1)))
        .collect()
}

/// Bipolar argumentation framework with attack and support relations.
#[derive(Debug, Clone, PartialEq)]
pub struct Baf {
    pairs: usize,
    names: Vec<String>,
    attacks: Vec<ArgSet>,
    supports: Vec<ArgSet>,
    /// Arguments reachable by one or more support edges.
    reach: Vec<ArgSet>,
    /// Everything `{a}` set-attacks, by direct, supported or indirect attack.
    set_attack: Vec<ArgSet>,
    set_attackers: Vec<ArgSet>,
}

impl Baf {
    /// Builds a framework over `pairs` model/counterfactual pairs from explicit
    /// edge lists of positions.
    pub fn from_relations(
        pairs: usize,
        attacks: &[(usize, usize)],
        supports: &[(usize, usize)],
    ) -> Result<Self> {
        let n = 2 * pairs;
        check_capacity(n)?;
        let mut att = alloc::vec![ArgSet::EMPTY; n];
        let mut sup = alloc::vec![ArgSet::EMPTY; n];
        for &(a, b) in attacks {
            assert!(a < n && b < n, "attack ({a}, {b}) outside the framework");
            att[a].insert(b);
        }
        for &(a, b) in supports {
            assert!(a < n && b < n, "support ({a}, {b}) outside the framework");
            sup[a].insert(b);
        }
        Ok(Self::from_adjacency(pairs, default_names(pairs), att, sup))
    }

    fn from_adjacency(pairs: usize, names: Vec<String>, attacks: Vec<ArgSet>, supports: Vec<ArgSet>) -> Self {
        let n = 2 * pairs;
        let reach: Vec<ArgSet> = (0..n)
            .map(|a| {
                let mut seen = ArgSet::EMPTY;
                let mut frontier = supports[a];
                while !frontier.is_empty() {
                    seen |= frontier;
                    let mut next = ArgSet::EMPTY;
                    for p in frontier {
                        next |= supports[p];
                    }
                    frontier = next - seen;
                }
                seen
            })
            .collect();

        let set_attack: Vec<ArgSet> = (0..n)
            .map(|a| {
                let mut targets = attacks[a];
                // supported: supports first, then one attack
                for y in reach[a] {
                    targets |= attacks[y];
                }
                // indirect: one attack, then supports
                for z in attacks[a] {
                    targets |= reach[z];
                }
                targets
            })
            .collect();

        let mut set_attackers = alloc::vec![ArgSet::EMPTY; n];
        for (a, targets) in set_attack.iter().enumerate() {
            for b in *targets {
                set_attackers[b].insert(a);
            }
        }

        Baf { pairs, names, attacks, supports, reach, set_attack, set_attackers }
    }

    /// Number of model/counterfactual pairs.
    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn len(&self) -> usize {
        2 * self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs == 0
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn position(&self, arg: Argument) -> usize {
        match arg.kind {
            ArgumentKind::Model => arg.index,
            ArgumentKind::Counterfactual => self.pairs + arg.index,
        }
    }

    pub fn argument(&self, pos: usize) -> Argument {
        if pos < self.pairs {
            Argument::model(pos)
        } else {
            Argument::counterfactual(pos - self.pairs)
        }
    }

    pub fn name(&self, pos: usize) -> &str {
        &self.names[pos]
    }

    /// Position of the argument with the given id.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn models(&self) -> ArgSet {
        ArgSet::full(self.pairs)
    }

    pub fn counterfactuals(&self) -> ArgSet {
        self.all() - self.models()
    }

    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.attacks[a].contains(b)
    }

    pub fn supports(&self, a: usize, b: usize) -> bool {
        self.supports[a].contains(b)
    }

    /// Direct attack edges in position order.
    pub fn attack_edges(&self) -> Vec<(usize, usize)> {
        edges(&self.attacks)
    }

    pub fn support_edges(&self) -> Vec<(usize, usize)> {
        edges(&self.supports)
    }

    /// Arguments reachable from `a` through one or more support edges.
    pub fn support_reach(&self, a: usize) -> ArgSet {
        self.reach[a]
    }

    /// Everything the singleton `{a}` set-attacks.
    pub fn singleton_attacks(&self, a: usize) -> ArgSet {
        self.set_attack[a]
    }

    /// Every `b` such that `{b}` set-attacks `a`.
    pub fn singleton_attackers(&self, a: usize) -> ArgSet {
        self.set_attackers[a]
    }

    /// Everything `x` set-attacks.
    pub fn attacked_by(&self, x: ArgSet) -> ArgSet {
        x.iter().fold(ArgSet::EMPTY, |acc, a| acc | self.set_attack[a])
    }

    /// Everything `x` directly supports.
    pub fn supported_by(&self, x: ArgSet) -> ArgSet {
        x.iter().fold(ArgSet::EMPTY, |acc, a| acc | self.supports[a])
    }

    pub fn set_attacks(&self, x: ArgSet, a: usize) -> bool {
        x.iter().any(|b| self.set_attack[b].contains(a))
    }

    pub fn set_supports(&self, x: ArgSet, a: usize) -> bool {
        x.iter().any(|b| self.supports[b].contains(a))
    }

    pub fn is_conflict_free(&self, x: ArgSet) -> bool {
        !self.attacked_by(x).intersects(x)
    }

    /// No argument is set-attacked by `x` while also being in or supported by `x`.
    pub fn is_safe(&self, x: ArgSet) -> bool {
        !self.attacked_by(x).intersects(x | self.supported_by(x))
    }

    pub fn is_closed_for_support(&self, x: ArgSet) -> bool {
        self.supported_by(x).is_subset(x)
    }

    /// Every set-attacker of `a` is set-attacked by `x`.
    pub fn defends(&self, x: ArgSet, a: usize) -> bool {
        self.set_attackers[a].is_subset(self.attacked_by(x))
    }

    fn defends_all(&self, x: ArgSet) -> bool {
        let counter = self.attacked_by(x);
        x.iter().all(|a| self.set_attackers[a].is_subset(counter))
    }

    pub fn is_d_admissible(&self, x: ArgSet) -> bool {
        self.is_conflict_free(x) && self.defends_all(x)
    }

    pub fn is_s_admissible(&self, x: ArgSet) -> bool {
        self.is_safe(x) && self.defends_all(x)
    }

    pub fn is_c_admissible(&self, x: ArgSet) -> bool {
        self.is_conflict_free(x) && self.is_closed_for_support(x) && self.defends_all(x)
    }

    /// Conflict-free and set-attacks every argument outside `x`.
    pub fn is_stable(&self, x: ArgSet) -> bool {
        self.is_conflict_free(x) && (self.all() - x).is_subset(self.attacked_by(x))
    }

    /// Graphviz rendering; attacks are labelled `-`, supports `+`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph baf {\n");
        for name in &self.names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        for (a, b) in self.attack_edges() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"-\"];", self.names[a], self.names[b]);
        }
        for (a, b) in self.support_edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"+\", style=dashed];",
                self.names[a], self.names[b]
            );
        }
        out.push_str("}\n");
        out
    }
}

fn edges(adj: &[ArgSet]) -> Vec<(usize, usize)> {
    adj.iter().enumerate().flat_map(|(a, t)| t.iter().map(move |b| (a, b))).collect()
}

/// Builds the bipolar framework for a scenario under a model preference.
///
/// Model `i` attacks model `j` when they disagree on the input and `i` is
/// at least as preferred. When counterfactual `j` fails to change the
/// prediction of model `i`, the more preferred side attacks the other (both
/// ways on ties). Each model and its own counterfactual support each other.
pub fn build_baf(inst: &Instance, pref: &PreferenceRanking) -> Result<Baf> {
    let m = inst.len();
    check_capacity(2 * m)?;
    assert_eq!(pref.len(), m, "preference does not match the scenario");
    let mut attacks = alloc::vec![ArgSet::EMPTY; 2 * m];
    let mut supports = alloc::vec![ArgSet::EMPTY; 2 * m];
    for i in 0..m {
        supports[i].insert(m + i);
        supports[m + i].insert(i);
        for j in 0..m {
            if inst.prediction(i) != inst.prediction(j) && pref.at_least(i, j) {
                attacks[i].insert(j);
            }
            if !inst.is_valid_for(j, i) {
                if pref.at_least(i, j) {
                    attacks[i].insert(m + j);
                }
                if pref.at_least(j, i) {
                    attacks[m + j].insert(i);
                }
            }
        }
    }
    let names = (0..m)
        .map(|i| String::from(inst.model_id(i)))
        .chain((0..m).map(|i| String::from(inst.counterfactual_id(i))))
        .collect();
    Ok(Baf::from_adjacency(m, names, attacks, supports))
}

/// Abstract argumentation framework; argument `i` stands for pair `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Aaf {
    names: Vec<String>,
    attacks: Vec<ArgSet>,
    attackers: Vec<ArgSet>,
}

impl Aaf {
    pub fn from_relations(n: usize, attacks: &[(usize, usize)]) -> Result<Self> {
        check_capacity(n)?;
        let mut att = alloc::vec![ArgSet::EMPTY; n];
        for &(a, b) in attacks {
            assert!(a < n && b < n, "attack ({a}, {b}) outside the framework");
            att[a].insert(b);
        }
        let names = (0..n).map(|i| alloc::format!("M{0}c{0}", i + 1)).collect();
        Ok(Self::from_adjacency(names, att))
    }

    fn from_adjacency(names: Vec<String>, attacks: Vec<ArgSet>) -> Self {
        let mut attackers = alloc::vec![ArgSet::EMPTY; attacks.len()];
        for (a, targets) in attacks.iter().enumerate() {
            for b in *targets {
                attackers[b].insert(a);
            }
        }
        Aaf { names, attacks, attackers }
    }

    pub fn len(&self) -> usize {
        self.attacks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attacks.is_empty()
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn name(&self, pos: usize) -> &str {
        &self.names[pos]
    }

    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.attacks[a].contains(b)
    }

    pub fn attack_edges(&self) -> Vec<(usize, usize)> {
        edges(&self.attacks)
    }

    pub fn attackers(&self, a: usize) -> ArgSet {
        self.attackers[a]
    }

    pub fn targets(&self, a: usize) -> ArgSet {
        self.attacks[a]
    }

    pub fn attacked_by(&self, x: ArgSet) -> ArgSet {
        x.iter().fold(ArgSet::EMPTY, |acc, a| acc | self.attacks[a])
    }

    pub fn is_conflict_free(&self, x: ArgSet) -> bool {
        !self.attacked_by(x).intersects(x)
    }

    pub fn defends(&self, x: ArgSet, a: usize) -> bool {
        self.attackers[a].is_subset(self.attacked_by(x))
    }

    pub fn is_admissible(&self, x: ArgSet) -> bool {
        let counter = self.attacked_by(x);
        self.is_conflict_free(x) && x.iter().all(|a| self.attackers[a].is_subset(counter))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph aaf {\n");
        for name in &self.names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        for (a, b) in self.attack_edges() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"-\"];", self.names[a], self.names[b]);
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the framework over pairs: pair `i` attacks pair `j` when model `i`
/// is at least as preferred and the two disagree on the input, or either
/// counterfactual fails on the other pair's model.
pub fn build_aaf(inst: &Instance, pref: &PreferenceRanking) -> Result<Aaf> {
    let m = inst.len();
    check_capacity(m)?;
    assert_eq!(pref.len(), m, "preference does not match the scenario");
    let mut attacks = alloc::vec![ArgSet::EMPTY; m];
    for i in 0..m {
        for j in 0..m {
            if i == j || !pref.at_least(i, j) {
                continue;
            }
            if inst.prediction(i) != inst.prediction(j)
                || !inst.is_valid_for(j, i)
                || !inst.is_valid_for(i, j)
            {
                attacks[i].insert(j);
            }
        }
    }
    let names = (0..m)
        .map(|i| alloc::format!("({}, {})", inst.model_id(i), inst.counterfactual_id(i)))
        .collect();
    Ok(Aaf::from_adjacency(names, attacks))
}
