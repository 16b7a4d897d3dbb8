//! Polynomials over a prime field `F_p` that commute under composition with a
//! linear polynomial `f = ax + b`.
//!
//! The crate counts and constructs `C_d(f) = { g : deg g = d, f ∘ g = g ∘ f }`
//! and checks the construction against an exhaustive search.
//!
//! ```
//! use commutant::{count, enumerate, CommutantSpec, FieldContext, LinearPolynomial};
//!
//! let f3 = FieldContext::new(3).unwrap();
//! let f = LinearPolynomial::from_ints(f3, 1, 1).unwrap(); // x + 1
//! let spec = CommutantSpec::new(f, 6).unwrap();
//! assert_eq!(count(&spec).unwrap().count, 18u32.into());
//! assert_eq!(enumerate(&spec).unwrap().len(), 18);
//! ```

pub mod binom;
pub mod cli;
pub mod commutant;
pub mod error;
pub mod ff;
pub mod oracle;
pub mod orbits;
pub mod poly;
pub mod similarity;

pub use commutant::{count, enumerate, CommutantCount, CommutantSpec, CountBranch};
pub use error::{Error, Result};
pub use ff::{FieldContext, FpElement};
pub use oracle::{brute_force_commutant, compare_sets, OracleBudget};
pub use poly::{commutes, Degree, DensePolynomial};
pub use similarity::{canonicalize, conjugate, LinearPolynomial};
