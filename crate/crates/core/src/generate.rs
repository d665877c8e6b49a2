//! Random frameworks and programs for property testing and benchmarking.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::af::{Argument, ArgumentationFramework};
use crate::logic::{Atom, Clause, Literal, Program};

/// `n` arguments `a0..a{n-1}`, each ordered pair (self-attacks included)
/// attacking with probability `density`.
pub fn framework<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> ArgumentationFramework {
    let arguments: Vec<Argument> = (0..n)
        .map(|i| Argument::new(format!("a{i}")).expect("valid name"))
        .collect();
    let mut attacks = Vec::new();
    for from in &arguments {
        for to in &arguments {
            if rng.gen_bool(density) {
                attacks.push((from.clone(), to.clone()));
            }
        }
    }
    ArgumentationFramework::new(arguments, attacks).expect("attacks use declared arguments")
}

/// Shape of a random program.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgramShape {
    pub atoms: usize,
    pub clauses: usize,
    pub max_head: usize,
    pub max_body: usize,
    /// Probability that a body literal is negated.
    pub negation: f64,
}

impl ProgramShape {
    pub fn positive(atoms: usize, clauses: usize) -> Self {
        ProgramShape {
            atoms,
            clauses,
            max_head: 3,
            max_body: 3,
            negation: 0.0,
        }
    }

    pub fn general(atoms: usize, clauses: usize) -> Self {
        ProgramShape {
            negation: 0.4,
            ..ProgramShape::positive(atoms, clauses)
        }
    }
}

/// A random general program over atoms `p0..p{atoms-1}`.
pub fn program<R: Rng + ?Sized>(rng: &mut R, shape: ProgramShape) -> Program {
    let atoms: Vec<Atom> = (0..shape.atoms)
        .map(|i| Atom::new(format!("p{i}")))
        .collect();
    let mut clauses = Vec::new();
    while clauses.len() < shape.clauses && !atoms.is_empty() {
        let head_len = rng.gen_range(0..=shape.max_head.min(atoms.len()));
        let body_len = rng.gen_range(0..=shape.max_body.min(atoms.len()));
        let head: Vec<Atom> = atoms.choose_multiple(rng, head_len).cloned().collect();
        let body: Vec<Literal> = atoms
            .choose_multiple(rng, body_len)
            .map(|a| {
                if rng.gen_bool(shape.negation) {
                    Literal::neg(a.clone())
                } else {
                    Literal::pos(a.clone())
                }
            })
            .collect();
        if let Ok(clause) = Clause::rule(head, body) {
            clauses.push(clause);
        }
    }
    Program::new(atoms, clauses).expect("clauses use declared atoms")
}
