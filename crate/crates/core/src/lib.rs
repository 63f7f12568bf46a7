//! Exact arithmetic for finite-dimensional unital algebras given by structure
//! constants, with the conjugation `d* = re d - im d`.
//!
//! * [`exact`]: rationals, dense rational matrices, nullspaces.
//! * [`algebra`]: constants, elements, products, commutator, associator,
//!   center and nucleus.
//! * [`multilinear`]: multilinear maps as tensors and substitution of one
//!   into a slot of another.
//! * [`conjugation`]: re/im split, conjugation, and the check that it
//!   reverses products.
//! * [`mappings`]: A★-linear and A★-antilinear self-maps.
//! * [`catalog`]: built-in algebras.
//! * [`expr`]: a small expression language.
//! * [`file`]: the JSON algebra file format.
//!
//! ```
//! use staralg::{catalog, expr};
//!
//! let q = catalog::builtin("quaternion").unwrap().algebra;
//! let x = expr::evaluate("conj(1 + 2*i) * j", &q, Default::default()).unwrap();
//! assert_eq!(x.to_string(), "j - 2k");
//! ```

pub mod algebra;
pub mod catalog;
pub mod conjugation;
pub mod error;
pub mod exact;
pub mod expr;
pub mod file;
pub mod mappings;
pub mod multilinear;
pub mod random;

pub use algebra::{validate_spec, Algebra, AlgebraSpec, Element};
pub use conjugation::{check_conjugation_algebra, conjugate, ConjugationReport};
pub use error::Error;
pub use exact::{parse_rational, Rational, RationalMatrix};
pub use mappings::{LinearMap, Side};
pub use multilinear::{MultiMap, Multilinear};
