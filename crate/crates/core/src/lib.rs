//! Neutrosophic tropical algebra.
//!
//! Numbers `a + bI` over the extended reals, with componentwise `min` or
//! `max` as addition and componentwise `+` as multiplication. On top of the
//! scalars sit dense matrices ([`NeutroMatrix`]), a randomized law checker
//! ([`axioms`]), and two applications: all-pairs shortest paths and max-plus
//! event timing ([`solver`]).
//!
//! ```
//! use neutrotrop::{algebra, AlgebraMode, NeutroNumber};
//!
//! let x: NeutroNumber = "-8+I".parse().unwrap();
//! let z: NeutroNumber = "3+2I".parse().unwrap();
//! assert_eq!(algebra::add_min(x, z).to_string(), "-8+I");
//! assert_eq!(algebra::add_max(x, z).to_string(), "3+2I");
//! assert_eq!(algebra::mul(x, z, AlgebraMode::Min).to_string(), "-5+3I");
//! ```

pub mod algebra;
pub mod axioms;
pub mod error;
pub mod files;
pub mod literal;
pub mod matrix;
pub mod number;
pub mod scalar;
pub mod solver;

pub use algebra::{AlgebraMode, InfinityPolicy};
pub use axioms::{check_axioms, AxiomConfig, AxiomReport, Law};
pub use error::{Error, ParseError, Result};
pub use literal::{format_nn, parse_nn};
pub use matrix::{Closure, NeutroMatrix, ReductionOp};
pub use number::NeutroNumber;
pub use scalar::ExtReal;
pub use solver::{
    schedule_recurrence, shortest_paths, ScheduleTrace, ShortestPaths, WeightedDigraph,
};
