//! Finite inverse semigroups: partial bijections, Cayley tables, the natural
//! partial order, congruences, groupoids, Munn semigroups and Boolean inverse
//! monoids.

pub mod bisection;
pub mod boolean;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod format;
pub mod greens;
pub mod groupoid;
pub mod hom;
pub mod local;
pub mod munn;
pub mod order;
pub mod pbij;
pub mod predicates;
pub mod report;
pub mod semigroup;
pub mod suite;
pub mod util;

pub use boolean::BooleanCertificate;
pub use congruence::Congruence;
pub use error::{Error, Result};
pub use groupoid::FiniteGroupoid;
pub use hom::Homomorphism;
pub use pbij::{enumerate_symmetric_inverse_monoid, PartialBijection};
pub use predicates::{Flag, Predicates};
pub use semigroup::{closure_from_generators, FiniteInverseSemigroup};
