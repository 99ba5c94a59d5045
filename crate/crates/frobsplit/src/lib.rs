//! Exact computation with Frobenius splittings of graded polynomial rings
//! over prime fields.
//!
//! The crate builds up from multivariate polynomial arithmetic over F_p and
//! a Gröbner engine to the characteristic-p machinery: trace maps,
//! splittings given by premultipliers, compatibility of ideals, enumeration
//! of the finite lattice of compatibly split ideals, and the tangent-space
//! computation showing compatibly split subschemes are rigid.
//!
//! Start with the runnable examples (`cargo run --example splitting_basics`)
//! or the `frobsplit` binary, which executes commands against a scenario
//! file.

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod rigidity;
pub mod ring;
pub mod scenario;
pub mod splitting;
pub mod syzygy;

pub mod cli;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use hilbert::UniPoly;
pub use ideal::Ideal;
pub use lattice::IdealLattice;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use poly::{Monomial, Polynomial};
pub use rigidity::{HomSpace, RigidityReport};
pub use ring::{Grading, Ring};
pub use scenario::Scenario;
pub use splitting::{CompatibilityCertificate, Splitting, TraceMap};
pub use syzygy::SyzygyModule;
