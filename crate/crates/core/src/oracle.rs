//! Reference semantics by exhaustive subset enumeration.
//!
//! Nothing here is clever: every subset of the arguments is tested directly
//! against the definitions, and maximality is a pairwise subset check. The
//! logic-based engines are validated against these results.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::af::{Argument, ArgumentationFramework};
use crate::error::{Error, Result};

pub const DEFAULT_ARGUMENT_BOUND: usize = 20;

/// A set of arguments produced by some semantics.
///
/// Printed as `{a,c}`; ordered lexicographically by sorted member list.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Extension(BTreeSet<Argument>);

impl Extension {
    pub fn new(members: impl IntoIterator<Item = Argument>) -> Self {
        Extension(members.into_iter().collect())
    }

    pub fn members(&self) -> &BTreeSet<Argument> {
        &self.0
    }

    pub fn contains(&self, a: &Argument) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Argument> for Extension {
    fn from_iter<I: IntoIterator<Item = Argument>>(iter: I) -> Self {
        Extension::new(iter)
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(Argument::as_str).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Subset-enumeration semantics with a cap on the number of arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ARGUMENT_BOUND,
        }
    }
}

/// Attack relation as bitmasks over argument indices.
struct Masks<'a> {
    arguments: Vec<&'a Argument>,
    attackers: Vec<u64>,
}

impl<'a> Masks<'a> {
    fn new(af: &'a ArgumentationFramework) -> Self {
        let arguments: Vec<&Argument> = af.arguments().iter().collect();
        let position = |a: &Argument| arguments.binary_search(&a).expect("declared argument");
        let mut attackers = vec![0u64; arguments.len()];
        for (from, to) in af.attacks() {
            attackers[position(to)] |= 1 << position(from);
        }
        Masks {
            arguments,
            attackers,
        }
    }

    fn subsets(&self) -> impl Iterator<Item = u64> {
        0..1u64 << self.arguments.len()
    }

    fn members(&self, set: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.arguments.len()).filter(move |i| set >> i & 1 == 1)
    }

    fn conflict_free(&self, set: u64) -> bool {
        self.members(set).all(|i| self.attackers[i] & set == 0)
    }

    fn acceptable(&self, i: usize, set: u64) -> bool {
        (0..self.arguments.len())
            .filter(|b| self.attackers[i] >> b & 1 == 1)
            .all(|b| self.attackers[b] & set != 0)
    }

    fn admissible(&self, set: u64) -> bool {
        self.conflict_free(set) && self.members(set).all(|i| self.acceptable(i, set))
    }

    fn stable(&self, set: u64) -> bool {
        self.conflict_free(set)
            && (0..self.arguments.len())
                .filter(|i| set >> i & 1 == 0)
                .all(|i| self.attackers[i] & set != 0)
    }

    fn extension(&self, set: u64) -> Extension {
        self.members(set)
            .map(|i| self.arguments[i].clone())
            .collect()
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn masks<'a>(&self, af: &'a ArgumentationFramework) -> Result<Masks<'a>> {
        let limit = self.bound.min(63);
        if af.len() > limit {
            return Err(Error::BoundExceeded {
                what: "framework",
                size: af.len(),
                bound: limit,
            });
        }
        Ok(Masks::new(af))
    }

    /// Every admissible set, in canonical order.
    pub fn admissible(&self, af: &ArgumentationFramework) -> Result<Vec<Extension>> {
        let masks = self.masks(af)?;
        let mut sets: Vec<Extension> = masks
            .subsets()
            .filter(|&s| masks.admissible(s))
            .map(|s| masks.extension(s))
            .collect();
        sets.sort();
        Ok(sets)
    }

    /// Inclusion-maximal admissible sets.
    pub fn preferred(&self, af: &ArgumentationFramework) -> Result<Vec<Extension>> {
        let masks = self.masks(af)?;
        let admissible: Vec<u64> = masks.subsets().filter(|&s| masks.admissible(s)).collect();
        let mut preferred: Vec<Extension> = admissible
            .iter()
            .filter(|&&s| !admissible.iter().any(|&t| t != s && s & t == s))
            .map(|&s| masks.extension(s))
            .collect();
        preferred.sort();
        Ok(preferred)
    }

    /// Conflict-free sets attacking every argument outside them.
    pub fn stable(&self, af: &ArgumentationFramework) -> Result<Vec<Extension>> {
        let masks = self.masks(af)?;
        let mut sets: Vec<Extension> = masks
            .subsets()
            .filter(|&s| masks.stable(s))
            .map(|s| masks.extension(s))
            .collect();
        sets.sort();
        Ok(sets)
    }

    /// Arguments that belong to no preferred extension.
    pub fn defeated(&self, af: &ArgumentationFramework) -> Result<BTreeSet<Argument>> {
        let preferred = self.preferred(af)?;
        Ok(af
            .arguments()
            .iter()
            .filter(|a| !preferred.iter().any(|e| e.contains(a)))
            .cloned()
            .collect())
    }
}

pub fn enumerate_admissible(af: &ArgumentationFramework) -> Result<Vec<Extension>> {
    Oracle::default().admissible(af)
}

pub fn preferred_oracle(af: &ArgumentationFramework) -> Result<Vec<Extension>> {
    Oracle::default().preferred(af)
}

pub fn stable_oracle(af: &ArgumentationFramework) -> Result<Vec<Extension>> {
    Oracle::default().stable(af)
}

pub fn defeated_arguments(af: &ArgumentationFramework) -> Result<BTreeSet<Argument>> {
    Oracle::default().defeated(af)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(names: &[&str]) -> Extension {
        names.iter().map(|n| Argument::new(*n).unwrap()).collect()
    }

    fn chain() -> ArgumentationFramework {
        ArgumentationFramework::from_names(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn mutual() -> ArgumentationFramework {
        ArgumentationFramework::from_names(
            ["a", "b", "c", "d", "e"],
            [
                ("a", "b"),
                ("b", "a"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("e", "c"),
            ],
        )
        .unwrap()
    }

    fn selfish() -> ArgumentationFramework {
        ArgumentationFramework::from_names(["a"], [("a", "a")]).unwrap()
    }

    fn unattacked() -> ArgumentationFramework {
        ArgumentationFramework::from_names(["a", "b"], []).unwrap()
    }

    #[test]
    fn admissible_sets() {
        assert_eq!(
            enumerate_admissible(&chain()).unwrap(),
            vec![ext(&[]), ext(&["a"]), ext(&["a", "c"])]
        );
        assert_eq!(enumerate_admissible(&selfish()).unwrap(), vec![ext(&[])]);
        assert_eq!(
            enumerate_admissible(&unattacked()).unwrap(),
            vec![ext(&[]), ext(&["a"]), ext(&["a", "b"]), ext(&["b"])]
        );
    }

    #[test]
    fn preferred_extensions() {
        assert_eq!(preferred_oracle(&chain()).unwrap(), vec![ext(&["a", "c"])]);
        assert_eq!(
            preferred_oracle(&mutual()).unwrap(),
            vec![ext(&["a"]), ext(&["b", "d"])]
        );
        assert_eq!(preferred_oracle(&selfish()).unwrap(), vec![ext(&[])]);
    }

    #[test]
    fn stable_extensions() {
        assert_eq!(stable_oracle(&chain()).unwrap(), vec![ext(&["a", "c"])]);
        assert!(stable_oracle(&selfish()).unwrap().is_empty());
        assert_eq!(
            stable_oracle(&unattacked()).unwrap(),
            vec![ext(&["a", "b"])]
        );
    }

    #[test]
    fn defeated() {
        let names = |s: BTreeSet<Argument>| s.iter().map(|a| a.to_string()).collect::<Vec<_>>();
        assert_eq!(names(defeated_arguments(&chain()).unwrap()), ["b"]);
        assert_eq!(names(defeated_arguments(&mutual()).unwrap()), ["c", "e"]);
        assert!(defeated_arguments(&unattacked()).unwrap().is_empty());
    }

    #[test]
    fn bound_exceeded() {
        let names: Vec<String> = (0..4).map(|i| format!("a{i}")).collect();
        let af = ArgumentationFramework::from_names(names.iter().map(String::as_str), []).unwrap();
        assert!(Oracle::with_bound(3).preferred(&af).unwrap_err().is_bound());
        assert!(Oracle::with_bound(4).preferred(&af).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(ext(&[]).to_string(), "{}");
        assert_eq!(ext(&["c", "a"]).to_string(), "{a,c}");
    }
}
