//! Preferred-extension computation through the logical encodings, the two
//! candidate checkers, and brave/cautious acceptance queries.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::af::{Argument, ArgumentationFramework};
use crate::error::{Error, Result};
use crate::logic::{is_model, Atom, Clause, Interpretation, Literal, Program, Reasoner};
use crate::oracle::{Extension, Oracle};
use crate::translate::{accepted, alpha, compl, decode, gamma, lambda, stable_fragment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Minimal models of the defeat theory.
    Alpha,
    /// Stable models of the positive disjunctive program.
    Gamma,
    /// Stable models of the program with acceptance rules, projected on the arguments.
    Lambda,
    /// Brute-force subset enumeration.
    Oracle,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Alpha, Engine::Gamma, Engine::Lambda, Engine::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Alpha => "alpha",
            Engine::Gamma => "gamma",
            Engine::Lambda => "lambda",
            Engine::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine `{s}`"))
    }
}

/// Preferred extensions found by one engine, each with the model it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub engine: Engine,
    pub extensions: Vec<Extension>,
    pub witness_models: BTreeMap<Extension, Interpretation>,
}

impl SolveReport {
    fn new(
        engine: Engine,
        witnessed: impl IntoIterator<Item = (Extension, Interpretation)>,
    ) -> Self {
        let witness_models: BTreeMap<Extension, Interpretation> = witnessed.into_iter().collect();
        SolveReport {
            engine,
            extensions: witness_models.keys().cloned().collect(),
            witness_models,
        }
    }
}

/// Outcome of checking one candidate set by the UNSAT characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreferredCheck {
    Preferred,
    /// The defeat image of the candidate violates this clause of the theory.
    NotAModel {
        violated: Clause,
    },
    /// A strictly smaller defeat set exists; here is one.
    Satisfiable {
        counter_model: Interpretation,
    },
}

impl PreferredCheck {
    pub fn is_preferred(&self) -> bool {
        matches!(self, PreferredCheck::Preferred)
    }

    pub fn counter_model(&self) -> Option<&Interpretation> {
        match self {
            PreferredCheck::Satisfiable { counter_model } => Some(counter_model),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryMode {
    Brave,
    Cautious,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryVerdict {
    pub argument: Argument,
    pub mode: QueryMode,
    pub holds: bool,
    /// A stable model witnessing a brave success or refuting a cautious query.
    pub evidence: Option<Interpretation>,
}

impl fmt::Display for QueryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let adverb = match self.mode {
            QueryMode::Brave => "bravely",
            QueryMode::Cautious => "cautiously",
        };
        write!(f, "{} is {adverb} {}", self.argument, self.holds)?;
        if let Some(evidence) = &self.evidence {
            write!(f, ", evidenced by {evidence}")?;
        }
        Ok(())
    }
}

/// Runs the engines with configurable exhaustive bounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Solver {
    pub reasoner: Reasoner,
    pub oracle: Oracle,
}

impl Solver {
    pub fn with_bounds(atoms: usize, arguments: usize) -> Self {
        Solver {
            reasoner: Reasoner::with_bound(atoms),
            oracle: Oracle::with_bound(arguments),
        }
    }

    pub fn preferred(&self, af: &ArgumentationFramework, engine: Engine) -> Result<SolveReport> {
        match engine {
            Engine::Alpha => self.preferred_via_alpha(af),
            Engine::Gamma => self.preferred_via_gamma(af),
            Engine::Lambda => self.preferred_via_lambda(af),
            Engine::Oracle => self.preferred_via_oracle(af),
        }
    }

    /// Decodes the minimal models of [`alpha`].
    pub fn preferred_via_alpha(&self, af: &ArgumentationFramework) -> Result<SolveReport> {
        let models = self.reasoner.minimal_models(&alpha(af))?;
        Ok(SolveReport::new(
            Engine::Alpha,
            models.into_iter().map(|m| (decode(af, &m), m)),
        ))
    }

    /// Decodes the stable models of [`gamma`].
    pub fn preferred_via_gamma(&self, af: &ArgumentationFramework) -> Result<SolveReport> {
        let models = self.reasoner.stable_models(&gamma(af))?;
        Ok(SolveReport::new(
            Engine::Gamma,
            models.into_iter().map(|m| (decode(af, &m), m)),
        ))
    }

    /// Projects the stable models of [`lambda`] onto the arguments.
    pub fn preferred_via_lambda(&self, af: &ArgumentationFramework) -> Result<SolveReport> {
        let models = self.reasoner.stable_models(&lambda(af))?;
        Ok(SolveReport::new(
            Engine::Lambda,
            models.into_iter().map(|m| (accepted(af, &m), m)),
        ))
    }

    /// Brute force; the witness of each extension is its defeat image.
    pub fn preferred_via_oracle(&self, af: &ArgumentationFramework) -> Result<SolveReport> {
        let extensions = self.oracle.preferred(af)?;
        let witnessed = extensions
            .into_iter()
            .map(|e| {
                let m = compl(af, &e)?;
                Ok((e, m))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SolveReport::new(Engine::Oracle, witnessed))
    }

    /// Runs every engine on its own thread.
    ///
    /// The oracle is skipped when the framework is beyond its bound.
    pub fn cross_check(&self, af: &ArgumentationFramework) -> Result<Vec<SolveReport>> {
        let engines: Vec<Engine> = Engine::ALL
            .into_iter()
            .filter(|&e| e != Engine::Oracle || af.len() <= self.oracle.bound())
            .collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = engines
                .iter()
                .map(|&engine| scope.spawn(move || self.preferred(af, engine)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("engine thread panicked"))
                .collect()
        })
    }

    /// Stable extensions from the stable models of [`stable_fragment`].
    pub fn stable_via_fragment(&self, af: &ArgumentationFramework) -> Result<Vec<Extension>> {
        let mut extensions: Vec<Extension> = self
            .reasoner
            .stable_models(&stable_fragment(af))?
            .iter()
            .map(|m| decode(af, m))
            .collect();
        extensions.sort();
        Ok(extensions)
    }

    /// `S` is preferred iff `compl(S)` is a model of the defeat theory and the
    /// theory, with `¬d(x)` for each `x ∈ S` and the clause `⋁{¬d(y) | d(y) ∈
    /// compl(S)}`, is unsatisfiable.
    ///
    /// When `S` is every argument, the final clause is the empty disjunction,
    /// so the check reduces to whether the empty set models the theory.
    pub fn check_preferred_unsat(
        &self,
        af: &ArgumentationFramework,
        s: &Extension,
    ) -> Result<PreferredCheck> {
        let theory = alpha(af);
        let image = compl(af, s)?;
        if let Some(violated) = first_violated(&theory, &image)? {
            return Ok(PreferredCheck::NotAModel { violated });
        }
        let not_smaller = if image.is_empty() {
            Clause::falsum()
        } else {
            Clause::constraint(image.atoms().iter().cloned().map(Literal::pos))?
        };
        let formula = pin_accepted(&theory, s).extended([not_smaller]);
        Ok(match self.reasoner.find_model(&formula)? {
            None => PreferredCheck::Preferred,
            Some(counter_model) => PreferredCheck::Satisfiable { counter_model },
        })
    }

    /// `S` is preferred iff `compl(S)` is a model of the defeat theory and the
    /// theory with `¬d(x)` for each `x ∈ S` entails every atom of `compl(S)`.
    pub fn check_preferred_consequence(
        &self,
        af: &ArgumentationFramework,
        s: &Extension,
    ) -> Result<bool> {
        let theory = alpha(af);
        let image = compl(af, s)?;
        if !is_model(&theory, &image)? {
            return Ok(false);
        }
        let conclusion: Vec<Clause> = image.atoms().iter().cloned().map(Clause::fact).collect();
        self.reasoner
            .entails(&pin_accepted(&theory, s), &conclusion)
    }

    /// Brave: is `a` in some preferred extension? Cautious: in all of them?
    ///
    /// Evidence is the lexicographically first stable model of [`lambda`]
    /// that contains `a` (brave success) or omits it (cautious failure).
    pub fn query(
        &self,
        af: &ArgumentationFramework,
        a: &Argument,
        mode: QueryMode,
    ) -> Result<QueryVerdict> {
        if !af.contains(a) {
            return Err(Error::UnknownArgument(a.to_string()));
        }
        let atom = Atom::accept(a);
        let models = self.reasoner.stable_models(&lambda(af))?;
        let (holds, evidence) = match mode {
            QueryMode::Brave => {
                let witness = models.into_iter().find(|m| m.contains(&atom));
                (witness.is_some(), witness)
            }
            QueryMode::Cautious => {
                let counter = models.into_iter().find(|m| !m.contains(&atom));
                (counter.is_none(), counter)
            }
        };
        Ok(QueryVerdict {
            argument: a.clone(),
            mode,
            holds,
            evidence,
        })
    }
}

/// The theory plus `⊥ ← d(x)` for every `x ∈ S`.
fn pin_accepted(theory: &Program, s: &Extension) -> Program {
    theory.extended(s.members().iter().map(|x| {
        Clause::constraint([Literal::pos(Atom::defeat(x))]).expect("non-empty constraint")
    }))
}

fn first_violated(theory: &Program, m: &Interpretation) -> Result<Option<Clause>> {
    is_model(theory, m)?;
    Ok(theory
        .clauses()
        .iter()
        .find(|c| !crate::logic::evaluate(m, c))
        .cloned())
}

pub fn preferred_via_alpha(af: &ArgumentationFramework) -> Result<SolveReport> {
    Solver::default().preferred_via_alpha(af)
}

pub fn preferred_via_gamma(af: &ArgumentationFramework) -> Result<SolveReport> {
    Solver::default().preferred_via_gamma(af)
}

pub fn preferred_via_lambda(af: &ArgumentationFramework) -> Result<SolveReport> {
    Solver::default().preferred_via_lambda(af)
}

pub fn check_preferred_unsat(af: &ArgumentationFramework, s: &Extension) -> Result<PreferredCheck> {
    Solver::default().check_preferred_unsat(af, s)
}

pub fn check_preferred_consequence(af: &ArgumentationFramework, s: &Extension) -> Result<bool> {
    Solver::default().check_preferred_consequence(af, s)
}

pub fn query(af: &ArgumentationFramework, a: &Argument, mode: QueryMode) -> Result<QueryVerdict> {
    Solver::default().query(af, a, mode)
}
