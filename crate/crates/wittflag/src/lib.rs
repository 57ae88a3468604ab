//! Exact computation of the Z/4-graded Witt rings of complex flag
//! manifolds G/H for the classical groups, together with the polynomial
//! identities over GF(2) and the Tate cohomology bookkeeping that the
//! computation rests on.
//!
//! Modules:
//! - [`binom`]: binomial parities (Lucas) and exact cross-check values.
//! - [`gf2`]: bit-packed GF(2) linear algebra.
//! - [`f2poly`]: GF(2) polynomials, Groebner bases, regular sequences,
//!   linear-combination solving.
//! - [`relations`]: the mu/nu/xi relation families of the symmetric-power
//!   type, with index aliasing, regularity certificates and surplus
//!   reductions.
//! - [`series`]: Laurent series over GF(2) and the kernel of the
//!   evaluation maps sending exponents to symmetric functions.
//! - [`star`]: representation rings with involution, self-dual monomial
//!   enumeration, and Tate cohomology of signed modules.
//! - [`witt`]: assembly of the Witt presentations per type A/B/C/D and the
//!   exterior-algebra rank tables.

pub mod binom;
pub mod f2poly;
pub mod gf2;
pub mod relations;
pub mod series;
pub mod star;
pub mod verify;
pub mod witt;
