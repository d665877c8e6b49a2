//! Encodings of an argumentation framework as propositional programs over
//! defeat atoms `d(x)`, and the conversions between extensions and sets of
//! defeat atoms.

use crate::af::{Argument, ArgumentationFramework};
use crate::error::{Error, Result};
use crate::logic::{Atom, Clause, Interpretation, Literal, Program};
use crate::oracle::Extension;

fn defeat_signature(af: &ArgumentationFramework) -> impl Iterator<Item = Atom> + '_ {
    af.arguments().iter().map(Atom::defeat)
}

fn defeat(a: &Argument) -> Atom {
    Atom::defeat(a)
}

/// Body `⋀{d(c) | c attacks b}`: all defenders against `b` are defeated.
fn defenders_defeated(af: &ArgumentationFramework, b: &Argument) -> Vec<Literal> {
    af.attackers_of(b)
        .map(|c| Literal::pos(defeat(c)))
        .collect()
}

/// For every attack `(b, a)`:
///
/// * `d(a) ← ¬d(b)` (a is defeated when an attacker stands), and
/// * `d(a) ← ⋀{d(c) | (c, b) ∈ attacks}` (a is defeated when everything that
///   could defend it against `b` is defeated).
///
/// Arguments nobody attacks contribute no clauses.
pub fn alpha(af: &ArgumentationFramework) -> Program {
    let clauses = af.attacks().iter().flat_map(|(b, a)| {
        [
            Clause::rule([defeat(a)], [Literal::neg(defeat(b))]),
            Clause::rule([defeat(a)], defenders_defeated(af, b)),
        ]
    });
    program(defeat_signature(af), clauses)
}

/// The acceptance encoding over the arguments themselves: for every attack
/// `(b, a)`, `¬b ← a` and `⋁{c | (c, b) ∈ attacks} ← a`, the latter being
/// `⊥ ← a` when `b` is unattacked. Its maximal models are the preferred
/// extensions.
pub fn beta(af: &ArgumentationFramework) -> Program {
    let clauses = af.attacks().iter().flat_map(|(b, a)| {
        let accepted = Literal::pos(Atom::accept(a));
        [
            Clause::new([Literal::neg(Atom::accept(b))], [accepted.clone()]),
            Clause::new(
                af.attackers_of(b).map(|c| Literal::pos(Atom::accept(c))),
                [accepted],
            ),
        ]
    });
    program(af.arguments().iter().map(Atom::accept), clauses)
}

/// The positive disjunctive program: for every attack `(b, a)`, the
/// disjunction `d(a) ∨ d(b)` and the rule `d(a) ← ⋀{d(c) | (c, b) ∈ attacks}`.
///
/// A self-attack yields `d(a) ∨ d(a)`, which collapses to the fact `d(a)`.
pub fn gamma(af: &ArgumentationFramework) -> Program {
    let p = program(defeat_signature(af), gamma_clauses(af));
    debug_assert!(p.is_positive());
    p
}

fn gamma_clauses(af: &ArgumentationFramework) -> impl Iterator<Item = Result<Clause>> + '_ {
    af.attacks().iter().flat_map(|(b, a)| {
        [
            Clause::rule([defeat(a), defeat(b)], []),
            Clause::rule([defeat(a)], defenders_defeated(af, b)),
        ]
    })
}

/// [`gamma`] plus `x ← ¬d(x)` for every argument, so that accepted arguments
/// appear directly in stable models.
pub fn lambda(af: &ArgumentationFramework) -> Program {
    let accept = af
        .arguments()
        .iter()
        .map(|x| Clause::rule([Atom::accept(x)], [Literal::neg(defeat(x))]));
    program(
        defeat_signature(af).chain(af.arguments().iter().map(Atom::accept)),
        gamma_clauses(af).chain(accept),
    )
}

/// Only the `d(a) ← ¬d(b)` clauses of [`alpha`]. Its stable models are the
/// images of the stable extensions.
pub fn stable_fragment(af: &ArgumentationFramework) -> Program {
    alpha(af).filtered(|c| c.body().iter().any(|l| l.negations > 0))
}

fn program(
    signature: impl IntoIterator<Item = Atom>,
    clauses: impl IntoIterator<Item = Result<Clause>>,
) -> Program {
    let clauses = clauses
        .into_iter()
        .collect::<Result<Vec<_>>>()
        .expect("every translated clause has a head or a body");
    Program::new(signature, clauses).expect("translated clauses stay within the signature")
}

/// `{d(x) | x ∈ AR \ S}`.
pub fn compl(af: &ArgumentationFramework, s: &Extension) -> Result<Interpretation> {
    if let Some(stray) = s.members().iter().find(|a| !af.contains(a)) {
        return Err(Error::UnknownArgument(stray.to_string()));
    }
    Ok(af
        .arguments()
        .iter()
        .filter(|a| !s.contains(a))
        .map(defeat)
        .collect())
}

/// `{x ∈ AR | d(x) ∉ M}`. Atoms other than defeat atoms are ignored.
pub fn decode(af: &ArgumentationFramework, m: &Interpretation) -> Extension {
    af.arguments()
        .iter()
        .filter(|a| !m.contains(&defeat(a)))
        .cloned()
        .collect()
}

/// `M ∩ AR`: the arguments whose plain atoms are true in `m`.
pub fn accepted(af: &ArgumentationFramework, m: &Interpretation) -> Extension {
    af.arguments()
        .iter()
        .filter(|a| m.contains(&Atom::accept(a)))
        .cloned()
        .collect()
}
