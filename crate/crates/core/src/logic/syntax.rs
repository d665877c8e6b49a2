use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::af::Argument;
use crate::error::{Error, Result};

/// A propositional atom. Defeat atoms are spelled `d(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom(name.into())
    }

    /// The defeat atom `d(x)` for argument `x`.
    pub fn defeat(argument: &Argument) -> Self {
        Atom(format!("d({argument})"))
    }

    /// The plain atom `x` standing for "argument `x` is accepted".
    pub fn accept(argument: &Argument) -> Self {
        Atom(argument.as_str().to_string())
    }

    /// If this is a defeat atom `d(x)`, the name `x`.
    pub fn defeated_name(&self) -> Option<&str> {
        self.0.strip_prefix("d(")?.strip_suffix(')')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Identifier-safe rendering used in DIMACS comments: `d(a)` becomes `d_a`.
    pub fn export_name(&self) -> String {
        self.0.replace('(', "_").replace(')', "")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(name: &str) -> Self {
        Atom::new(name)
    }
}

/// An atom under zero or more default negations.
///
/// Ordinary programs only use zero or one negation. Deeper nesting shows up
/// transiently, e.g. the `¬¬d(a)` occurrences produced by [`g_transform`],
/// and is removed by [`normalize`].
///
/// [`g_transform`]: super::g_transform
/// [`normalize`]: super::normalize
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negations: u8,
}

impl Literal {
    pub fn pos(atom: impl Into<Atom>) -> Self {
        Literal {
            atom: atom.into(),
            negations: 0,
        }
    }

    pub fn neg(atom: impl Into<Atom>) -> Self {
        Literal {
            atom: atom.into(),
            negations: 1,
        }
    }

    pub fn negated(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            negations: self.negations + 1,
        }
    }

    /// Cancels double negations, leaving zero or one.
    pub fn simplified(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            negations: self.negations % 2,
        }
    }

    /// Classical polarity: true when the literal holds exactly when its atom does.
    pub fn is_positive(&self) -> bool {
        self.negations.is_multiple_of(2)
    }

    pub fn holds(&self, atom_value: bool) -> bool {
        atom_value == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.negations {
            f.write_str("not ")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl From<Atom> for Literal {
    fn from(atom: Atom) -> Self {
        Literal::pos(atom)
    }
}

/// `h1 ∨ … ∨ hm ← l1, …, ln` with `m + n > 0`.
///
/// An empty head is `⊥` (a constraint) and an empty body is `⊤`. Head and body
/// are kept sorted and duplicate-free, so `d(a) ∨ d(a)` and `d(a)` are the same
/// clause.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    head: Vec<Literal>,
    body: Vec<Literal>,
}

impl Clause {
    pub fn new(
        head: impl IntoIterator<Item = Literal>,
        body: impl IntoIterator<Item = Literal>,
    ) -> Result<Self> {
        let clause = Clause::build(head, body);
        if clause.is_empty() {
            return Err(Error::EmptyClause);
        }
        Ok(clause)
    }

    fn build(
        head: impl IntoIterator<Item = Literal>,
        body: impl IntoIterator<Item = Literal>,
    ) -> Self {
        let head: BTreeSet<Literal> = head.into_iter().collect();
        let body: BTreeSet<Literal> = body.into_iter().collect();
        Clause {
            head: head.into_iter().collect(),
            body: body.into_iter().collect(),
        }
    }

    /// A disjunctive rule with a plain-atom head.
    pub fn rule(
        head: impl IntoIterator<Item = Atom>,
        body: impl IntoIterator<Item = Literal>,
    ) -> Result<Self> {
        Clause::new(head.into_iter().map(Literal::pos), body)
    }

    pub fn fact(atom: impl Into<Atom>) -> Self {
        Clause::rule([atom.into()], []).expect("fact has a head")
    }

    pub fn constraint(body: impl IntoIterator<Item = Literal>) -> Result<Self> {
        Clause::new([], body)
    }

    /// `⊥ ← ⊤`. Never produced by parsing or translation; a reduct yields it
    /// when every body literal of a constraint is a removed negation.
    pub fn falsum() -> Self {
        Clause {
            head: Vec::new(),
            body: Vec::new(),
        }
    }

    pub fn head(&self) -> &[Literal] {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    /// Number of head atoms plus body literals.
    pub fn len(&self) -> usize {
        self.head.len() + self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head.iter().chain(&self.body).map(|l| &l.atom)
    }

    /// Heads are plain atoms and body literals carry at most one negation.
    pub fn is_general(&self) -> bool {
        self.head.iter().all(|l| l.negations == 0) && self.body.iter().all(|l| l.negations <= 1)
    }

    /// No negation anywhere.
    pub fn is_positive(&self) -> bool {
        self.head.iter().chain(&self.body).all(|l| l.negations == 0)
    }

    /// The contrapositive `¬l1 ∨ … ∨ ¬ln ← ¬h1, …, ¬hm`, double negations cancelled.
    pub fn transposed(&self) -> Self {
        Clause::build(
            self.body.iter().map(|l| l.negated().simplified()),
            self.head.iter().map(|l| l.negated().simplified()),
        )
    }

    /// The same clause with double negations cancelled.
    pub fn simplified(&self) -> Self {
        Clause::build(
            self.head.iter().map(Literal::simplified),
            self.body.iter().map(Literal::simplified),
        )
    }
}

impl fmt::Display for Clause {
    /// ASP-style text: `a v b :- c, not d.`, `a.` or `:- c.`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(":- #true.");
        }
        let head: Vec<String> = self.head.iter().map(ToString::to_string).collect();
        let body: Vec<String> = self.body.iter().map(ToString::to_string).collect();
        f.write_str(&head.join(" v "))?;
        if !body.is_empty() {
            if !head.is_empty() {
                f.write_str(" ")?;
            }
            write!(f, ":- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

/// A finite set of clauses over an explicitly declared signature.
///
/// The signature may contain atoms that occur in no clause; those atoms are
/// still ranged over when models are enumerated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    signature: BTreeSet<Atom>,
    clauses: BTreeSet<Clause>,
}

impl Program {
    pub fn new(
        signature: impl IntoIterator<Item = Atom>,
        clauses: impl IntoIterator<Item = Clause>,
    ) -> Result<Self> {
        let signature: BTreeSet<Atom> = signature.into_iter().collect();
        let clauses: BTreeSet<Clause> = clauses.into_iter().collect();
        for clause in &clauses {
            if let Some(atom) = clause.atoms().find(|a| !signature.contains(*a)) {
                return Err(Error::AtomOutsideSignature(atom.to_string()));
            }
        }
        Ok(Program { signature, clauses })
    }

    /// A program whose signature is exactly the atoms occurring in its clauses.
    pub fn from_clauses(clauses: impl IntoIterator<Item = Clause>) -> Self {
        let clauses: BTreeSet<Clause> = clauses.into_iter().collect();
        let signature = clauses.iter().flat_map(|c| c.atoms().cloned()).collect();
        Program { signature, clauses }
    }

    pub fn signature(&self) -> &BTreeSet<Atom> {
        &self.signature
    }

    pub fn clauses(&self) -> &BTreeSet<Clause> {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_general(&self) -> bool {
        self.clauses.iter().all(Clause::is_general)
    }

    pub fn is_positive(&self) -> bool {
        self.clauses.iter().all(Clause::is_positive)
    }

    /// Adds clauses, widening the signature with any new atoms.
    pub fn extended(&self, extra: impl IntoIterator<Item = Clause>) -> Program {
        let mut out = self.clone();
        for clause in extra {
            out.signature.extend(clause.atoms().cloned());
            out.clauses.insert(clause);
        }
        out
    }

    /// Union of two programs, signatures included.
    pub fn union(&self, other: &Program) -> Program {
        let mut out = self.extended(other.clauses.iter().cloned());
        out.signature.extend(other.signature.iter().cloned());
        out
    }

    /// Keeps only clauses satisfying `keep`; the signature is unchanged.
    pub fn filtered(&self, keep: impl Fn(&Clause) -> bool) -> Program {
        Program {
            signature: self.signature.clone(),
            clauses: self.clauses.iter().filter(|c| keep(c)).cloned().collect(),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for clause in &self.clauses {
            writeln!(f, "{clause}")?;
        }
        Ok(())
    }
}

/// The set of atoms an interpretation makes true.
///
/// Ordering is lexicographic over the sorted atom lists, which is also the
/// order in which every enumeration in this crate reports interpretations.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Interpretation(BTreeSet<Atom>);

impl Interpretation {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Interpretation(atoms.into_iter().collect())
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        Interpretation::new(iter)
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<&str> = self.0.iter().map(Atom::as_str).collect();
        write!(f, "{{{}}}", atoms.join(","))
    }
}
