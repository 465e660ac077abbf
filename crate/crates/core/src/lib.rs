//! Exact computation of discriminant algebras.
//!
//! Given a commutative ring `R` (integers, rationals, residue rings, or
//! multivariate polynomials over these) and a finite free commutative
//! `R`-algebra `A` of rank `n` presented by structure constants, this crate
//! computes, with no divisions and no approximations:
//!
//! * traces, norms, characteristic polynomials and the discriminant bilinear
//!   form of `A` ([`algebra`]),
//! * the ring homomorphism from symmetric invariant tensors of `A^⊗n` to `R`
//!   realized on the orbit basis via norm-form coefficients ([`ferrand`]),
//! * the discriminant algebra of `A` as an explicit quadratic ring
//!   `R[X]/(X² − TX + N)` whose discriminant `T² − 4N` equals that of `A`,
//!   together with its standard involution, splitting tests, the product
//!   and base-change structure, and the induced maps of norm-preserving
//!   homomorphisms ([`delta`]),
//! * the combinatorial orientation bookkeeping that mirrors the splitting
//!   behaviour of these quadratic rings ([`orient`]).
//!
//! Everything is exact: the coefficient rings ([`ring`]) are arbitrary
//! precision, and the linear algebra ([`linalg`]) is division-free so that
//! residue rings with zero divisors are handled soundly.
//!
//! ```
//! use discalg::delta::discriminant_algebra;
//! use discalg::ring::Ring;
//! use discalg::FreeAlgebra;
//!
//! // Z[x]/(x⁴ + x³ + x² + x + 1), the 5th cyclotomic integers.
//! let a = FreeAlgebra::monogenic_from_ints(Ring::Integers, &[1, 1, 1, 1, 1])?;
//! let q = discriminant_algebra(&a)?;
//! assert_eq!(Ring::Integers.to_text(q.t()), "-1");
//! assert_eq!(Ring::Integers.to_text(q.n()), "-31");
//! assert_eq!(Ring::Integers.to_text(&q.disc()), "125");
//! # Ok::<(), discalg::Error>(())
//! ```

pub mod algebra;
pub mod delta;
pub mod descr;
pub mod error;
pub mod ferrand;
pub mod linalg;
pub mod orient;
pub mod ring;

pub use algebra::{AlgebraElement, AlgebraHom, FreeAlgebra};
pub use delta::{AlternatingInvariant, DeltaElement, DeltaHom, QuadraticAlgebra};
pub use error::{DivError, Error, Result};
pub use ferrand::{MultiDegree, SymmetricInvariant};
pub use linalg::Matrix;
pub use ring::{Elem, Ring, RingMap};
