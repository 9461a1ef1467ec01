//! Three-valued propositional logics, categorical squares over finite models,
//! and Riemann zeta evaluation with error bounds.
//!
//! ```
//! use logizeta::{formula::parse, semantics::{is_tautology, LogicSystem}};
//!
//! let lem = parse("p | !p").unwrap();
//! assert!(is_tautology(&lem, &LogicSystem::builtin("classical").unwrap()).unwrap());
//! assert!(!is_tautology(&lem, &LogicSystem::builtin("k3").unwrap()).unwrap());
//! ```

pub mod formula;
pub mod report;
pub mod semantics;
pub mod square;
pub mod zeta;
