//! Brute-force reference implementations for the logic layer.
//!
//! These deliberately avoid the crate's own evaluation, CNF and solver code:
//! clause truth, the reduct and minimality are recomputed from their
//! definitions over explicit subsets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use argstable::logic::{Atom, Clause, Interpretation, Literal, Program};
use argstable::{Argument, ArgumentationFramework, Extension};

pub fn literal_true(l: &Literal, set: &BTreeSet<Atom>) -> bool {
    let value = set.contains(&l.atom);
    if l.negations.is_multiple_of(2) {
        value
    } else {
        !value
    }
}

pub fn clause_true(c: &Clause, set: &BTreeSet<Atom>) -> bool {
    let body = c.body().iter().all(|l| literal_true(l, set));
    let head = c.head().iter().any(|l| literal_true(l, set));
    !body || head
}

pub fn subsets(atoms: &BTreeSet<Atom>) -> Vec<BTreeSet<Atom>> {
    let atoms: Vec<&Atom> = atoms.iter().collect();
    (0u32..1 << atoms.len())
        .map(|mask| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

pub fn brute_models(p: &Program) -> Vec<BTreeSet<Atom>> {
    subsets(p.signature())
        .into_iter()
        .filter(|s| p.clauses().iter().all(|c| clause_true(c, s)))
        .collect()
}

fn sorted(mut v: Vec<BTreeSet<Atom>>) -> Vec<Interpretation> {
    v.sort();
    v.into_iter().map(Interpretation::new).collect()
}

pub fn brute_minimal(p: &Program) -> Vec<Interpretation> {
    let models = brute_models(p);
    sorted(
        models
            .iter()
            .filter(|m| !models.iter().any(|n| n != *m && n.is_subset(m)))
            .cloned()
            .collect(),
    )
}

pub fn brute_maximal(p: &Program) -> Vec<Interpretation> {
    let models = brute_models(p);
    sorted(
        models
            .iter()
            .filter(|m| !models.iter().any(|n| n != *m && m.is_subset(n)))
            .cloned()
            .collect(),
    )
}

/// The reduct, rebuilt clause by clause: `None` marks a deleted clause and an
/// empty head with an empty body is kept as a literal-free pair.
fn brute_reduct(p: &Program, s: &BTreeSet<Atom>) -> Vec<(Vec<Atom>, Vec<Atom>)> {
    p.clauses()
        .iter()
        .filter(|c| {
            !c.body()
                .iter()
                .any(|l| l.negations == 1 && s.contains(&l.atom))
        })
        .map(|c| {
            let head = c.head().iter().map(|l| l.atom.clone()).collect();
            let body = c
                .body()
                .iter()
                .filter(|l| l.negations == 0)
                .map(|l| l.atom.clone())
                .collect();
            (head, body)
        })
        .collect()
}

fn positive_true(rule: &(Vec<Atom>, Vec<Atom>), set: &BTreeSet<Atom>) -> bool {
    !rule.1.iter().all(|a| set.contains(a)) || rule.0.iter().any(|a| set.contains(a))
}

/// Stable models straight from the definition: every subset `S` that is a
/// minimal model of its own reduct.
pub fn brute_stable(p: &Program) -> Vec<Interpretation> {
    let candidates = subsets(p.signature());
    sorted(
        candidates
            .iter()
            .filter(|s| {
                let reduct = brute_reduct(p, s);
                let model = |m: &BTreeSet<Atom>| reduct.iter().all(|r| positive_true(r, m));
                model(s)
                    && !candidates
                        .iter()
                        .any(|t| t != *s && t.is_subset(s) && model(t))
            })
            .cloned()
            .collect(),
    )
}

/// Preferred extensions by definition, via the framework's own predicates.
pub fn brute_preferred(af: &ArgumentationFramework) -> Vec<Extension> {
    let args: Vec<&Argument> = af.arguments().iter().collect();
    let all: Vec<BTreeSet<Argument>> = (0u32..1 << args.len())
        .map(|mask| {
            args.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect();
    let admissible: Vec<&BTreeSet<Argument>> = all
        .iter()
        .filter(|s| af.is_admissible(s).unwrap())
        .collect();
    let mut out: Vec<Extension> = admissible
        .iter()
        .filter(|s| !admissible.iter().any(|t| t != *s && s.is_subset(t)))
        .map(|s| Extension::new(s.iter().cloned()))
        .collect();
    out.sort();
    out
}

/// Every subset of the arguments, as extensions.
pub fn all_subsets(af: &ArgumentationFramework) -> Vec<Extension> {
    let args: Vec<&Argument> = af.arguments().iter().collect();
    (0u32..1 << args.len())
        .map(|mask| {
            args.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

/// Reads back `p cnf` text into clauses of signed variables, skipping comments.
pub fn parse_dimacs(text: &str) -> (usize, Vec<Vec<i32>>) {
    let mut vars = 0;
    let mut clauses = Vec::new();
    for line in text.lines() {
        if line.starts_with('c') {
            continue;
        }
        if let Some(header) = line.strip_prefix("p cnf ") {
            let mut parts = header.split_whitespace();
            vars = parts.next().unwrap().parse().unwrap();
            continue;
        }
        let lits: Vec<i32> = line
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        assert_eq!(lits.last(), Some(&0), "clause line must end in 0");
        clauses.push(lits[..lits.len() - 1].to_vec());
    }
    (vars, clauses)
}

pub fn chain() -> ArgumentationFramework {
    ArgumentationFramework::from_names(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

pub fn mutual() -> ArgumentationFramework {
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

pub fn self_attack() -> ArgumentationFramework {
    ArgumentationFramework::from_names(["a"], [("a", "a")]).unwrap()
}

pub fn d(x: &str) -> Atom {
    Atom::new(format!("d({x})"))
}

pub fn interp(atoms: &[&str]) -> Interpretation {
    atoms.iter().map(|a| Atom::new(*a)).collect()
}

pub fn ext(names: &[&str]) -> Extension {
    names.iter().map(|n| Argument::new(*n).unwrap()).collect()
}

pub fn rule(head: &[Atom], body: &[Literal]) -> Clause {
    Clause::rule(head.iter().cloned(), body.iter().cloned()).unwrap()
}

/// Frameworks `a0..a{n-1}` with `n ≤ max_n` and a random attack density.
pub fn arb_af(max_n: usize) -> impl proptest::strategy::Strategy<Value = ArgumentationFramework> {
    use proptest::prelude::*;
    (0..=max_n, 0.1f64..0.9)
        .prop_flat_map(|(n, density)| {
            proptest::collection::vec(proptest::bool::weighted(density), n * n)
                .prop_map(move |bits| (n, bits))
        })
        .prop_map(|(n, bits)| {
            let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let attacks = (0..n * n)
                .filter(|&k| bits[k])
                .map(|k| (names[k / n].as_str(), names[k % n].as_str()));
            ArgumentationFramework::from_names(names.iter().map(String::as_str), attacks).unwrap()
        })
}

/// Programs over `p0..p{n-1}` with `1 ≤ n ≤ max_atoms`. Each clause is three
/// bitmasks: head atoms, positive body atoms, negative body atoms.
pub fn arb_program(
    max_atoms: usize,
    max_clauses: usize,
    negation: bool,
) -> impl proptest::strategy::Strategy<Value = Program> {
    use proptest::prelude::*;
    (1..=max_atoms)
        .prop_flat_map(move |n| {
            let full = 1u32 << n;
            let neg = if negation { 0..full } else { 0..1 };
            (
                Just(n),
                proptest::collection::vec((0..full, 0..full, neg), 0..=max_clauses),
            )
        })
        .prop_map(|(n, raw)| {
            let atoms: Vec<Atom> = (0..n).map(|i| Atom::new(format!("p{i}"))).collect();
            let pick = |mask: u32| -> Vec<Atom> {
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| atoms[i].clone())
                    .collect()
            };
            let clauses = raw.into_iter().filter_map(|(h, bp, bn)| {
                let body = pick(bp)
                    .into_iter()
                    .map(Literal::pos)
                    .chain(pick(bn).into_iter().map(Literal::neg));
                Clause::rule(pick(h), body).ok()
            });
            Program::new(atoms.clone(), clauses).unwrap()
        })
}
