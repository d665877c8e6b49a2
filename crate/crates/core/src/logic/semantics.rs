//! Model-theoretic operations over programs: classical models, minimal and
//! maximal models, satisfiability, entailment, the Gelfond–Lifschitz reduct
//! and stable models.

use std::collections::BTreeSet;

use super::cnf::{Cnf, VarIndex};
use super::syntax::{Clause, Interpretation, Literal, Program};
use crate::error::{Error, Result};

/// Default cap on signature size for every enumeration in this module.
pub const DEFAULT_ATOM_BOUND: usize = 24;

/// Truth value of a clause: false only when the body holds and no head
/// literal does. Atoms absent from `interpretation` are false.
pub fn evaluate(interpretation: &Interpretation, clause: &Clause) -> bool {
    let holds = |l: &Literal| l.holds(interpretation.contains(&l.atom));
    clause.head().iter().any(holds) || !clause.body().iter().all(holds)
}

/// Whether `interpretation` satisfies every clause of `program`.
pub fn is_model(program: &Program, interpretation: &Interpretation) -> Result<bool> {
    check_within(program, interpretation)?;
    Ok(program
        .clauses()
        .iter()
        .all(|c| evaluate(interpretation, c)))
}

fn check_within(program: &Program, interpretation: &Interpretation) -> Result<()> {
    match interpretation
        .atoms()
        .iter()
        .find(|a| !program.signature().contains(*a))
    {
        Some(atom) => Err(Error::AtomOutsideSignature(atom.to_string())),
        None => Ok(()),
    }
}

/// Runs model-theoretic queries with an exhaustive bound on signature size.
///
/// Calls on programs whose signature exceeds the bound fail with
/// [`Error::BoundExceeded`] instead of running.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reasoner {
    bound: usize,
}

impl Default for Reasoner {
    fn default() -> Self {
        Reasoner {
            bound: DEFAULT_ATOM_BOUND,
        }
    }
}

impl Reasoner {
    pub fn with_bound(bound: usize) -> Self {
        Reasoner { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, program: &Program) -> Result<()> {
        let size = program.signature().len();
        if size > self.bound {
            return Err(Error::BoundExceeded {
                what: "signature",
                size,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Every interpretation over the signature that satisfies the program,
    /// found by walking all `2^n` assignments.
    pub fn models(&self, program: &Program) -> Result<Vec<Interpretation>> {
        self.check(program)?;
        let n = program.signature().len();
        if n >= 64 {
            return Err(Error::BoundExceeded {
                what: "signature",
                size: n,
                bound: 63,
            });
        }
        let vars = VarIndex::new(program.signature());
        let masks: Vec<(u64, u64)> = Cnf::from_program(program, &vars)
            .clauses
            .iter()
            .map(|clause| {
                clause.iter().fold((0u64, 0u64), |(pos, neg), &lit| {
                    let bit = 1u64 << (lit.unsigned_abs() - 1);
                    if lit > 0 {
                        (pos | bit, neg)
                    } else {
                        (pos, neg | bit)
                    }
                })
            })
            .collect();
        let mut found: Vec<Interpretation> = (0u64..1 << n)
            .filter(|&a| {
                masks
                    .iter()
                    .all(|&(pos, neg)| a & pos != 0 || !a & neg != 0)
            })
            .map(|a| {
                vars.iter()
                    .filter(|(v, _)| a >> (v - 1) & 1 == 1)
                    .map(|(_, atom)| atom.clone())
                    .collect()
            })
            .collect();
        found.sort();
        Ok(found)
    }

    /// Some model of the program, or `None` when it is inconsistent.
    pub fn find_model(&self, program: &Program) -> Result<Option<Interpretation>> {
        self.check(program)?;
        let vars = VarIndex::new(program.signature());
        Ok(Cnf::from_program(program, &vars)
            .solve()
            .map(|assignment| vars.interpretation(&assignment)))
    }

    pub fn is_unsatisfiable(&self, program: &Program) -> Result<bool> {
        Ok(self.find_model(program)?.is_none())
    }

    /// Models with no strictly smaller model.
    ///
    /// Repeatedly finds a model, shrinks it by asking for a model strictly
    /// inside it until none exists, records it, then blocks all of its
    /// supersets.
    pub fn minimal_models(&self, program: &Program) -> Result<Vec<Interpretation>> {
        self.check(program)?;
        let vars = VarIndex::new(program.signature());
        let mut cnf = Cnf::from_program(program, &vars);
        let mut found = Vec::new();
        while let Some(mut model) = cnf.solve() {
            loop {
                let mut inside = cnf.clone();
                inside.push(strictly_below(&model));
                inside.clauses.extend(stay_below(&model));
                match inside.solve() {
                    Some(smaller) => model = smaller,
                    None => break,
                }
            }
            cnf.push(strictly_below(&model));
            found.push(vars.interpretation(&model));
        }
        found.sort();
        Ok(found)
    }

    /// Models with no strictly larger model; the mirror image of
    /// [`minimal_models`](Self::minimal_models).
    pub fn maximal_models(&self, program: &Program) -> Result<Vec<Interpretation>> {
        self.check(program)?;
        let vars = VarIndex::new(program.signature());
        let mut cnf = Cnf::from_program(program, &vars);
        let mut found = Vec::new();
        while let Some(mut model) = cnf.solve() {
            loop {
                let mut outside = cnf.clone();
                outside.push(strictly_above(&model));
                outside.clauses.extend(stay_above(&model));
                match outside.solve() {
                    Some(larger) => model = larger,
                    None => break,
                }
            }
            cnf.push(strictly_above(&model));
            found.push(vars.interpretation(&model));
        }
        found.sort();
        Ok(found)
    }

    /// Whether every model of `program` satisfies every clause of `formula`.
    ///
    /// Each conjunct is checked by refutation: the program together with the
    /// negation of the clause must be inconsistent.
    pub fn entails(&self, program: &Program, formula: &[Clause]) -> Result<bool> {
        for clause in formula {
            let refutation = program.extended(negation(clause));
            if !self.is_unsatisfiable(&refutation)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimality check by logical consequence: `m` is a model and the program,
    /// with every atom outside `m` forced false, entails every atom of `m`.
    pub fn is_minimal_model_by_consequence(
        &self,
        program: &Program,
        m: &Interpretation,
    ) -> Result<bool> {
        self.check(program)?;
        if !is_model(program, m)? {
            return Ok(false);
        }
        let closed = program.extended(
            program
                .signature()
                .iter()
                .filter(|a| !m.contains(a))
                .map(|a| Clause::constraint([Literal::pos(a.clone())]).expect("non-empty")),
        );
        let conclusion: Vec<Clause> = m.atoms().iter().cloned().map(Clause::fact).collect();
        self.entails(&closed, &conclusion)
    }

    /// Whether `m` is a model of `program` with no strictly smaller model.
    pub fn is_minimal_model(&self, program: &Program, m: &Interpretation) -> Result<bool> {
        self.check(program)?;
        if !is_model(program, m)? {
            return Ok(false);
        }
        let vars = VarIndex::new(program.signature());
        let assignment = vars.assignment(m);
        let mut cnf = Cnf::from_program(program, &vars);
        cnf.push(strictly_below(&assignment));
        cnf.clauses.extend(stay_below(&assignment));
        Ok(cnf.solve().is_none())
    }

    /// Stable models: interpretations that are minimal models of their own
    /// reduct.
    ///
    /// Every stable model is a classical minimal model of the program, so the
    /// candidates are exactly those, each confirmed against its reduct.
    pub fn stable_models(&self, program: &Program) -> Result<Vec<Interpretation>> {
        require_general(program)?;
        let mut stable = Vec::new();
        for candidate in self.minimal_models(program)? {
            if self.is_stable_model(program, &candidate)? {
                stable.push(candidate);
            }
        }
        Ok(stable)
    }

    pub fn is_stable_model(&self, program: &Program, m: &Interpretation) -> Result<bool> {
        let reduct = gl_reduct(program, m)?;
        self.is_minimal_model(&reduct, m)
    }
}

/// Clause forcing some true atom of `model` to be false.
fn strictly_below(model: &[bool]) -> Vec<i32> {
    signed_vars(model, true).map(|v| -v).collect()
}

/// Units keeping every false atom of `model` false.
fn stay_below(model: &[bool]) -> impl Iterator<Item = Vec<i32>> + '_ {
    signed_vars(model, false).map(|v| vec![-v])
}

fn strictly_above(model: &[bool]) -> Vec<i32> {
    signed_vars(model, false).collect()
}

fn stay_above(model: &[bool]) -> impl Iterator<Item = Vec<i32>> + '_ {
    signed_vars(model, true).map(|v| vec![v])
}

fn signed_vars(model: &[bool], value: bool) -> impl Iterator<Item = i32> + '_ {
    model
        .iter()
        .enumerate()
        .filter(move |(_, &v)| v == value)
        .map(|(i, _)| i as i32 + 1)
}

/// `¬(H ← B)` as unit clauses: every body literal holds, every head literal fails.
fn negation(clause: &Clause) -> Vec<Clause> {
    clause
        .body()
        .iter()
        .map(|l| Clause::new([l.clone()], []).expect("non-empty"))
        .chain(
            clause
                .head()
                .iter()
                .map(|l| Clause::new([], [l.clone()]).expect("non-empty")),
        )
        .collect()
}

fn require_general(program: &Program) -> Result<()> {
    match program.clauses().iter().find(|c| !c.is_general()) {
        Some(clause) => Err(Error::NotGeneral(clause.to_string())),
        None => Ok(()),
    }
}

/// The Gelfond–Lifschitz reduct `P^S`.
///
/// Drops every clause with a body literal `not l` where `l ∈ S`, then strips
/// the remaining negative body literals. The result is negation-free.
pub fn gl_reduct(program: &Program, s: &Interpretation) -> Result<Program> {
    require_general(program)?;
    let clauses: BTreeSet<Clause> = program
        .clauses()
        .iter()
        .filter(|c| {
            !c.body()
                .iter()
                .any(|l| l.negations == 1 && s.contains(&l.atom))
        })
        .map(|c| {
            let body: Vec<Literal> = c
                .body()
                .iter()
                .filter(|l| l.negations == 0)
                .cloned()
                .collect();
            if c.head().is_empty() && body.is_empty() {
                Clause::falsum()
            } else {
                Clause::new(c.head().to_vec(), body).expect("non-empty")
            }
        })
        .collect();
    let reduct = Program::new(program.signature().iter().cloned(), clauses)?;
    debug_assert!(reduct.is_positive());
    Ok(reduct)
}

/// Convenience wrappers using the default bound.
pub fn models(program: &Program) -> Result<Vec<Interpretation>> {
    Reasoner::default().models(program)
}

pub fn minimal_models(program: &Program) -> Result<Vec<Interpretation>> {
    Reasoner::default().minimal_models(program)
}

pub fn maximal_models(program: &Program) -> Result<Vec<Interpretation>> {
    Reasoner::default().maximal_models(program)
}

pub fn is_unsatisfiable(program: &Program) -> Result<bool> {
    Reasoner::default().is_unsatisfiable(program)
}

pub fn entails(program: &Program, formula: &[Clause]) -> Result<bool> {
    Reasoner::default().entails(program, formula)
}

pub fn stable_models(program: &Program) -> Result<Vec<Interpretation>> {
    Reasoner::default().stable_models(program)
}

pub fn is_minimal_model_by_consequence(program: &Program, m: &Interpretation) -> Result<bool> {
    Reasoner::default().is_minimal_model_by_consequence(program, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Atom;

    fn atoms(names: &[&str]) -> Interpretation {
        names.iter().map(|n| Atom::new(*n)).collect()
    }

    fn rule(head: &[&str], body: &[Literal]) -> Clause {
        Clause::rule(head.iter().map(|h| Atom::new(*h)), body.iter().cloned()).unwrap()
    }

    fn sig(names: &[&str]) -> Vec<Atom> {
        names.iter().map(|n| Atom::new(*n)).collect()
    }

    /// b ← ¬a, b ← ⊤, c ← ¬b, c ← a
    fn four_rule_program() -> Program {
        Program::new(
            sig(&["a", "b", "c"]),
            [
                rule(&["b"], &[Literal::neg("a")]),
                Clause::fact("b"),
                rule(&["c"], &[Literal::neg("b")]),
                rule(&["c"], &[Literal::pos("a")]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert!(evaluate(
            &atoms(&["b"]),
            &rule(&["b"], &[Literal::neg("a")])
        ));
        let c = Clause::constraint([Literal::neg("a")]).unwrap();
        assert!(!evaluate(&atoms(&[]), &c));
        assert!(evaluate(
            &atoms(&["a", "b"]),
            &rule(&["a", "c"], &[Literal::pos("b")])
        ));
        assert!(!evaluate(&atoms(&[]), &Clause::falsum()));
    }

    #[test]
    fn is_model_rejects_foreign_atoms() {
        let p = Program::new(sig(&["a"]), []).unwrap();
        assert!(is_model(&p, &atoms(&["z"])).is_err());
    }

    #[test]
    fn models_examples() {
        let reduct = gl_reduct(&four_rule_program(), &atoms(&["b"])).unwrap();
        let found = models(&reduct).unwrap();
        assert!(found.contains(&atoms(&["b"])));
        assert!(found.contains(&atoms(&["a", "b", "c"])));

        let empty = Program::new(sig(&["a"]), []).unwrap();
        assert_eq!(models(&empty).unwrap(), vec![atoms(&[]), atoms(&["a"])]);

        let bottom = Program::from_clauses([Clause::falsum()]);
        assert!(models(&bottom).unwrap().is_empty());
    }

    #[test]
    fn minimal_models_examples() {
        let p = Program::from_clauses([rule(&["a", "b"], &[])]);
        assert_eq!(
            minimal_models(&p).unwrap(),
            vec![atoms(&["a"]), atoms(&["b"])]
        );
        assert_eq!(
            minimal_models(&Program::default()).unwrap(),
            vec![atoms(&[])]
        );
    }

    #[test]
    fn maximal_models_examples() {
        let empty = Program::new(sig(&["a", "b"]), []).unwrap();
        assert_eq!(maximal_models(&empty).unwrap(), vec![atoms(&["a", "b"])]);
        let p = Program::new(
            sig(&["a", "b"]),
            [Clause::constraint([Literal::pos("a")]).unwrap()],
        )
        .unwrap();
        assert_eq!(maximal_models(&p).unwrap(), vec![atoms(&["b"])]);
    }

    #[test]
    fn unsat_and_entailment() {
        let p = Program::from_clauses([
            Clause::fact("a"),
            Clause::constraint([Literal::pos("a")]).unwrap(),
        ]);
        assert!(is_unsatisfiable(&p).unwrap());

        let empty = Program::new(sig(&["a"]), []).unwrap();
        assert!(!entails(&empty, &[Clause::fact("a")]).unwrap());
        let fact = Program::from_clauses([Clause::fact("a")]);
        assert!(entails(&fact, &[Clause::fact("a")]).unwrap());
        assert!(entails(&fact, &[]).unwrap());
    }

    #[test]
    fn reduct_examples() {
        let reduct = gl_reduct(&four_rule_program(), &atoms(&["b"])).unwrap();
        let expected = Program::new(
            sig(&["a", "b", "c"]),
            [Clause::fact("b"), rule(&["c"], &[Literal::pos("a")])],
        )
        .unwrap();
        assert_eq!(reduct, expected);

        let positive = Program::from_clauses([rule(&["a"], &[Literal::pos("b")])]);
        assert_eq!(gl_reduct(&positive, &atoms(&["a"])).unwrap(), positive);

        let odd = Program::from_clauses([rule(&["b"], &[Literal::neg("b")])]);
        assert!(gl_reduct(&odd, &atoms(&["b"])).unwrap().is_empty());
    }

    #[test]
    fn reduct_can_produce_falsum() {
        let p = Program::from_clauses([Clause::constraint([Literal::neg("a")]).unwrap()]);
        let reduct = gl_reduct(&p, &atoms(&[])).unwrap();
        assert_eq!(reduct.clauses().iter().next(), Some(&Clause::falsum()));
        assert!(stable_models(&p).unwrap().is_empty());
    }

    #[test]
    fn stable_models_of_four_rule_program() {
        assert_eq!(
            stable_models(&four_rule_program()).unwrap(),
            vec![atoms(&["b"])]
        );
    }

    #[test]
    fn stable_models_need_general_programs() {
        let p =
            Program::from_clauses([Clause::new([Literal::neg("a")], [Literal::pos("b")]).unwrap()]);
        assert!(matches!(stable_models(&p), Err(Error::NotGeneral(_))));
    }

    #[test]
    fn bound_is_enforced() {
        let p = Program::new((0..5).map(|i| Atom::new(format!("p{i}"))), []).unwrap();
        let r = Reasoner::with_bound(4);
        assert!(r.models(&p).unwrap_err().is_bound());
        assert!(r.minimal_models(&p).unwrap_err().is_bound());
        assert!(r.stable_models(&p).unwrap_err().is_bound());
        assert!(Reasoner::with_bound(5).models(&p).is_ok());
    }

    #[test]
    fn consequence_minimality() {
        let p = Program::from_clauses([rule(&["a", "b"], &[])]);
        assert!(is_minimal_model_by_consequence(&p, &atoms(&["a"])).unwrap());
        assert!(!is_minimal_model_by_consequence(&p, &atoms(&["a", "b"])).unwrap());
        assert!(!is_minimal_model_by_consequence(&p, &atoms(&[])).unwrap());
    }
}
