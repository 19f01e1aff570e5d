//! Labelling search for the ⊆-maximal sets that are free of a symmetric
//! conflict relation, optionally closed under a support closure, and defend
//! all their members against an attack relation.

use alloc::vec::Vec;

use crate::framework::ArgSet;

#[derive(Debug)]
pub(super) struct Problem {
    pub n: usize,
    /// `attacks[a]`: what `a` attacks.
    pub attacks: Vec<ArgSet>,
    /// `attackers[a]`: what attacks `a`.
    pub attackers: Vec<ArgSet>,
    /// Symmetric; `a` may not join a set holding any of `conflicts[a]`.
    pub conflicts: Vec<ArgSet>,
    /// Reflexive closure that must come along with each member.
    pub closure: Option<Vec<ArgSet>>,
    /// Require every non-member to be attacked instead of requiring defence.
    pub stable: bool,
}

impl Problem {
    pub(super) fn new(attacks: Vec<ArgSet>, conflicts: Vec<ArgSet>) -> Self {
        let n = attacks.len();
        let mut attackers = alloc::vec![ArgSet::EMPTY; n];
        for (a, targets) in attacks.iter().enumerate() {
            for b in *targets {
                attackers[b].insert(a);
            }
        }
        Problem { n, attacks, attackers, conflicts, closure: None, stable: false }
    }

    fn closure_of(&self, x: usize) -> ArgSet {
        match &self.closure {
            Some(c) => c[x],
            None => ArgSet::singleton(x),
        }
    }

    fn union(sets: &[ArgSet], x: ArgSet) -> ArgSet {
        x.iter().fold(ArgSet::EMPTY, |acc, a| acc | sets[a])
    }

    /// Drops candidates whose closure can no longer fit in `inn | blank`.
    fn settle(&self, inn: ArgSet, mut blank: ArgSet) -> ArgSet {
        if let Some(closure) = &self.closure {
            loop {
                let room = inn | blank;
                let keep: ArgSet = blank.iter().filter(|&y| closure[y].is_subset(room)).collect();
                if keep == blank {
                    break;
                }
                blank = keep;
            }
        }
        blank
    }

    /// All ⊆-maximal solutions, in discovery order.
    pub(super) fn solve(&self) -> Vec<ArgSet> {
        let all = ArgSet::full(self.n);
        let usable: ArgSet = (0..self.n)
            .filter(|&x| {
                let c = self.closure_of(x);
                !Self::union(&self.conflicts, c).intersects(c)
            })
            .collect();
        let blank = self.settle(ArgSet::EMPTY, usable);
        let mut found = Vec::new();
        self.go(
            Node { inn: ArgSet::EMPTY, blank, out: ArgSet::EMPTY, threats: ArgSet::EMPTY },
            all,
            &mut found,
        );
        found
    }

    fn go(&self, node: Node, all: ArgSet, found: &mut Vec<ArgSet>) {
        let Node { inn, blank, out, threats } = node;
        let upper = inn | blank;
        if found.iter().any(|e| upper.is_subset(*e)) {
            return;
        }

        // Attackers of members that still need to be counter-attacked.
        let must_out = threats - out;
        // Non-members still to be attacked under stability.
        let uncovered = if self.stable { all - upper - out } else { ArgSet::EMPTY };
        let mut pick: Option<(usize, ArgSet)> = None;
        for b in must_out | uncovered {
            let options = self.attackers[b] & blank;
            if options.is_empty() {
                return;
            }
            if pick.is_none_or(|(_, best)| options.len() < best.len()) {
                pick = Some((b, options));
            }
        }

        if blank.is_empty() {
            if must_out.is_empty() && uncovered.is_empty() {
                record(found, inn);
            }
            return;
        }

        let x = match pick {
            Some((_, options)) => options.first().unwrap(),
            None => blank.first().unwrap(),
        };

        let add = self.closure_of(x);
        let inn2 = inn | add;
        let blank2 = self.settle(inn2, blank - add - Self::union(&self.conflicts, add));
        self.go(
            Node {
                inn: inn2,
                blank: blank2,
                out: out | Self::union(&self.attacks, add),
                threats: threats | Self::union(&self.attackers, add),
            },
            all,
            found,
        );

        let mut rest = blank;
        rest.remove(x);
        let rest = self.settle(inn, rest);
        self.go(Node { inn, blank: rest, out, threats }, all, found);
    }
}

#[derive(Clone, Copy)]
struct Node {
    inn: ArgSet,
    blank: ArgSet,
    /// Attacked by `inn`.
    out: ArgSet,
    /// Attackers of `inn`.
    threats: ArgSet,
}

fn record(found: &mut Vec<ArgSet>, x: ArgSet) {
    if found.iter().any(|e| x.is_subset(*e)) {
        return;
    }
    found.retain(|e| !e.is_subset(x));
    found.push(x);
}
