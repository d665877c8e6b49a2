//! Copy-signatures, the `g` transform that swaps maximal and minimal models,
//! and the normalizer that rewrites its output back into general clauses.

use std::collections::BTreeMap;

use super::syntax::{Atom, Clause, Interpretation, Literal, Program};
use crate::af::{Argument, ArgumentationFramework};
use crate::error::{Error, Result};

/// A bijection between a signature and a disjoint copy of it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AtomMap {
    forward: BTreeMap<Atom, Atom>,
    backward: BTreeMap<Atom, Atom>,
}

impl AtomMap {
    pub fn new(pairs: impl IntoIterator<Item = (Atom, Atom)>) -> Result<Self> {
        let mut map = AtomMap::default();
        for (from, to) in pairs {
            if map.forward.contains_key(&from) {
                return Err(Error::AtomMap(format!("`{from}` is mapped twice")));
            }
            if map.backward.contains_key(&to) {
                return Err(Error::AtomMap(format!("`{to}` is the image of two atoms")));
            }
            map.forward.insert(from.clone(), to.clone());
            map.backward.insert(to, from);
        }
        if let Some(shared) = map.forward.keys().find(|a| map.backward.contains_key(*a)) {
            return Err(Error::AtomMap(format!(
                "`{shared}` is both an atom and an image"
            )));
        }
        Ok(map)
    }

    /// `x ↦ d(x)` for every argument of the framework.
    pub fn defeat(af: &ArgumentationFramework) -> Self {
        AtomMap::new(
            af.arguments()
                .iter()
                .map(|a| (Atom::accept(a), Atom::defeat(a))),
        )
        .expect("argument names cannot contain parentheses")
    }

    pub fn image(&self, atom: &Atom) -> Option<&Atom> {
        self.forward.get(atom)
    }

    pub fn preimage(&self, atom: &Atom) -> Option<&Atom> {
        self.backward.get(atom)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// The argument behind a defeat atom, when this is a defeat map.
    pub fn argument_of(&self, atom: &Atom) -> Option<Argument> {
        Argument::new(self.preimage(atom)?.as_str()).ok()
    }

    /// `f(signature \ m)`: the image of the atoms `m` leaves false.
    pub fn complement_image<'a>(
        &self,
        signature: impl IntoIterator<Item = &'a Atom>,
        m: &Interpretation,
    ) -> Interpretation {
        signature
            .into_iter()
            .filter(|a| !m.contains(a))
            .filter_map(|a| self.image(a).cloned())
            .collect()
    }
}

/// Replaces every atom occurrence `x` by `¬f(x)`.
///
/// Negations stack rather than cancel, so a body literal `¬x` becomes `¬¬f(x)`.
/// `f` must cover the whole signature and map it onto a disjoint copy.
pub fn g_transform(program: &Program, f: &AtomMap) -> Result<Program> {
    let image = |atom: &Atom| {
        f.image(atom)
            .cloned()
            .ok_or_else(|| Error::AtomMap(format!("`{atom}` has no image")))
    };
    let signature = program
        .signature()
        .iter()
        .map(image)
        .collect::<Result<Vec<_>>>()?;
    if let Some(clash) = signature.iter().find(|a| program.signature().contains(*a)) {
        return Err(Error::AtomMap(format!(
            "image `{clash}` is already in the signature"
        )));
    }
    let swap = |l: &Literal| -> Result<Literal> {
        Ok(Literal {
            atom: image(&l.atom)?,
            negations: l.negations + 1,
        })
    };
    let clauses = program
        .clauses()
        .iter()
        .map(|c| {
            let head = c.head().iter().map(swap).collect::<Result<Vec<_>>>()?;
            let body = c.body().iter().map(swap).collect::<Result<Vec<_>>>()?;
            Ok(if head.is_empty() && body.is_empty() {
                Clause::falsum()
            } else {
                Clause::new(head, body)?
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Program::new(signature, clauses)
}

/// Rewrites each clause into a classically equivalent general clause.
///
/// A clause whose head is `⊥` or carries a negation is replaced by its
/// contrapositive when that is a general clause; otherwise double negations
/// are cancelled in place. Models are preserved, stable models need not be.
pub fn normalize(program: &Program) -> Program {
    let clauses = program.clauses().iter().map(|c| {
        let head_negated = c.head().is_empty() || c.head().iter().any(|l| l.negations > 0);
        let transposed = c.transposed();
        if head_negated && !c.is_empty() && transposed.is_general() {
            transposed
        } else {
            c.simplified()
        }
    });
    Program::new(program.signature().iter().cloned(), clauses).expect("normalization keeps atoms")
}
