//! Exact arithmetic for the fibonomial operator calculus.
//!
//! The crate is layered bottom-up:
//!
//! - [`seqcore`]: ψ-sequences (Fibonacci by default), F-factorials and
//!   fibonomial coefficients over arbitrary-precision integers.
//! - [`poly`]: dense rational polynomials with the F-derivative `∂_F`,
//!   the multiplication-like operator `x̂_F` and its inverse.
//! - [`opalg`]: `∂_F`-shift-invariant operators represented by truncated
//!   indicator series.
//! - [`families`]: basic and Sheffer F-polynomial sequences and the
//!   identities they satisfy.
//! - [`spectral`]: the umbral operator, the natural inner product and the
//!   number operator `A_F`.

pub mod error;
pub mod families;
pub mod opalg;
pub mod poly;
pub mod seqcore;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{Family, PolySequence, SequenceKind, ShefferScheme};
pub use opalg::{DeltaSeries, NamedOperator, OperatorSeries};
pub use poly::{Degree, Polynomial, Rational};
pub use seqcore::{PsiKind, PsiSequence};
pub use spectral::SpectralCoeffs;
