//! Propositional general programs and their semantics.

mod cnf;
mod export;
mod semantics;
mod syntax;
mod transform;

pub use cnf::{Cnf, VarIndex};
pub use export::{export_asp, export_dimacs};
pub use semantics::{
    entails, evaluate, gl_reduct, is_minimal_model_by_consequence, is_model, is_unsatisfiable,
    maximal_models, minimal_models, models, stable_models, Reasoner, DEFAULT_ATOM_BOUND,
};
pub use syntax::{Atom, Clause, Interpretation, Literal, Program};
pub use transform::{g_transform, normalize, AtomMap};
