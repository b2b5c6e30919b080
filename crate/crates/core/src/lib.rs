//! Exact computation and certification for the Betti-number polynomials of
//! the moduli spaces of pointed stable rational curves and of the
//! Fulton-MacPherson configuration compactifications of the projective line.
//!
//! Everything runs in arbitrary-precision integer/rational arithmetic: the
//! recurrences that produce the polynomial families, Sturm-based real-root
//! counting and isolation, interlacing and ultra-log-concavity checks,
//! truncated generating-function identities, and the tracking of the moving
//! root branches of the bivariate deformations.

pub mod arith;
pub mod branches;
pub mod error;
pub mod identities;
pub mod realroot;
pub mod recurrences;
pub mod verify;

pub use arith::{BiPoly, IntPoly, Rat, RatPoly};
pub use error::{Error, Result};
