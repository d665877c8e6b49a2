//! Preferred extensions of abstract argumentation frameworks, computed through
//! propositional encodings over defeat atoms `d(x)`.
//!
//! A framework is translated into
//!
//! * a defeat theory ([`translate::alpha`]) whose minimal models are the
//!   complements of the preferred extensions,
//! * a positive disjunctive program ([`translate::gamma`]) whose stable models
//!   are those same sets, and
//! * that program extended with `x ← not d(x)` ([`translate::lambda`]) whose
//!   stable models contain the preferred extensions directly.
//!
//! Each route is implemented in [`engines`] and checked against the
//! brute-force definitions in [`oracle`].
//!
//! ```
//! use argstable::{af::parse_apx, engines::preferred_via_gamma};
//!
//! let af = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).").unwrap();
//! let report = preferred_via_gamma(&af).unwrap();
//! let shown: Vec<String> = report.extensions.iter().map(|e| e.to_string()).collect();
//! assert_eq!(shown, ["{a,c}"]);
//! ```

pub mod af;
pub mod engines;
mod error;
pub mod generate;
pub mod logic;
pub mod oracle;
pub mod translate;

pub use af::{parse_apx, parse_tgf, Argument, ArgumentationFramework};
pub use engines::{Engine, PreferredCheck, QueryMode, QueryVerdict, SolveReport, Solver};
pub use error::{Error, Result};
pub use oracle::{Extension, Oracle};
