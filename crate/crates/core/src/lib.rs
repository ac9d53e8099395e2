//! Exact character-level computations for noncommutative virtual structure
//! sheaves, together with the algebra they rest on: Schur functors of
//! super characters, free Lie superalgebras, NC filtrations of free algebras,
//! the NCDG differential on tensor algebras over a free ring, and quivers
//! with relations coming from truncated graded algebras.
//!
//! Everything is exact: characters carry arbitrary-precision integer
//! coefficients and all spans are computed by rational row reduction.

pub mod charring;
pub mod error;
pub mod freealg;
pub mod freelie;
pub mod linalg;
pub mod ncdgq;
pub mod ncvirt;
pub mod partition;
pub mod quiver;
pub mod random;

pub use charring::{Character, GradedClass, Monomial, RationalCharacter, SuperChar};
pub use error::{Error, Result};
pub use partition::Partition;

/// Exact rationals used for every linear-algebra computation in the crate.
pub type Rational = num_rational::BigRational;

/// Parses "3", "-1/2" and the like.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r: Rational = s.trim().parse().map_err(|_| Error::Invalid(format!("bad rational {s:?}")))?;
    Ok(r)
}
