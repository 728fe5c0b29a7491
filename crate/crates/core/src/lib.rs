//! Exact-arithmetic engine for Macdonald polynomials, the Gamma-operator
//! calculus, shifted Macdonald characters and the associated positivity
//! sweeps. All computations are over exact rationals; no floating point
//! anywhere.

pub mod characters;
pub mod conjectures;
pub mod macdonald;
pub mod partitions;
pub mod scalars;
pub mod symfunc;

pub use characters::ShiftedPoly;
pub use partitions::{CellStats, Partition};
pub use scalars::{Monomial, MultiPoly, RatFun, ScalarError, Var};
pub use symfunc::{Alphabet, Basis, SymFun};
