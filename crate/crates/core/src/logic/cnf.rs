//! Clausal form of a program and a small DPLL solver over it.

use std::collections::BTreeMap;

use super::syntax::{Atom, Clause, Interpretation, Program};

/// Dense numbering of a signature, `1..=n` in lexicographic atom order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VarIndex {
    atoms: Vec<Atom>,
    index: BTreeMap<Atom, u32>,
}

impl VarIndex {
    pub fn new<'a>(atoms: impl IntoIterator<Item = &'a Atom>) -> Self {
        let mut sorted: Vec<Atom> = atoms.into_iter().cloned().collect();
        sorted.sort();
        sorted.dedup();
        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i as u32 + 1))
            .collect();
        VarIndex {
            atoms: sorted,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn var(&self, atom: &Atom) -> Option<u32> {
        self.index.get(atom).copied()
    }

    pub fn atom(&self, var: u32) -> Option<&Atom> {
        self.atoms.get((var as usize).checked_sub(1)?)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Atom)> {
        self.atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (i as u32 + 1, a))
    }

    /// Reads back the true atoms of a solver assignment.
    pub fn interpretation(&self, assignment: &[bool]) -> Interpretation {
        self.atoms
            .iter()
            .zip(assignment)
            .filter(|(_, &value)| value)
            .map(|(a, _)| a.clone())
            .collect()
    }

    pub fn assignment(&self, interpretation: &Interpretation) -> Vec<bool> {
        self.atoms
            .iter()
            .map(|a| interpretation.contains(a))
            .collect()
    }
}

/// A CNF formula with DIMACS-style signed literals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    /// Implication elimination: `H ← B` becomes `H ∨ ¬B`, literal by literal.
    pub fn from_program(program: &Program, vars: &VarIndex) -> Cnf {
        let clauses = program
            .clauses()
            .iter()
            .map(|c| clause_literals(c, vars))
            .collect();
        Cnf {
            num_vars: vars.len(),
            clauses,
        }
    }

    pub fn push(&mut self, clause: Vec<i32>) {
        self.clauses.push(clause);
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| value_of(lit, assignment)))
    }

    /// Finds a satisfying assignment, preferring `false` when branching.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let mut assign = vec![Value::Unset; self.num_vars];
        if dpll(&self.clauses, &mut assign) {
            Some(assign.into_iter().map(|v| v == Value::True).collect())
        } else {
            None
        }
    }
}

pub(crate) fn clause_literals(clause: &Clause, vars: &VarIndex) -> Vec<i32> {
    let signed = |atom: &Atom, positive: bool| {
        let v = vars.var(atom).expect("atom in signature") as i32;
        if positive {
            v
        } else {
            -v
        }
    };
    clause
        .head()
        .iter()
        .map(|l| signed(&l.atom, l.is_positive()))
        .chain(
            clause
                .body()
                .iter()
                .map(|l| signed(&l.atom, !l.is_positive())),
        )
        .collect()
}

fn value_of(lit: i32, assignment: &[bool]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        value
    } else {
        !value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    Unset,
    True,
    False,
}

fn lit_value(lit: i32, assign: &[Value]) -> Value {
    match (assign[lit.unsigned_abs() as usize - 1], lit > 0) {
        (Value::Unset, _) => Value::Unset,
        (Value::True, true) | (Value::False, false) => Value::True,
        _ => Value::False,
    }
}

fn set(lit: i32, assign: &mut [Value]) {
    assign[lit.unsigned_abs() as usize - 1] = if lit > 0 { Value::True } else { Value::False };
}

/// Unit propagation to fixpoint. Returns false on conflict.
fn propagate(clauses: &[Vec<i32>], assign: &mut [Value]) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unset = None;
            let mut unset_count = 0;
            let mut satisfied = false;
            for &lit in clause {
                match lit_value(lit, assign) {
                    Value::True => {
                        satisfied = true;
                        break;
                    }
                    Value::Unset => {
                        unset_count += 1;
                        unset = Some(lit);
                    }
                    Value::False => {}
                }
            }
            if satisfied {
                continue;
            }
            match unset_count {
                0 => return false,
                1 => {
                    set(unset.expect("one unset literal"), assign);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn dpll(clauses: &[Vec<i32>], assign: &mut Vec<Value>) -> bool {
    if !propagate(clauses, assign) {
        return false;
    }
    let branch = clauses
        .iter()
        .filter(|c| !c.iter().any(|&l| lit_value(l, assign) == Value::True))
        .flat_map(|c| c.iter())
        .find(|&&l| lit_value(l, assign) == Value::Unset)
        .map(|l| l.unsigned_abs() as usize);
    let Some(var) = branch else {
        // Every clause is satisfied; unconstrained variables stay false.
        for v in assign.iter_mut() {
            if *v == Value::Unset {
                *v = Value::False;
            }
        }
        return true;
    };
    for value in [Value::False, Value::True] {
        let mut trial = assign.clone();
        trial[var - 1] = value;
        if dpll(clauses, &mut trial) {
            *assign = trial;
            return true;
        }
    }
    false
}
