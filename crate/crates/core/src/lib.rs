//! Behavioral controller synthesis for linear differential (or difference)
//! systems, on exact polynomial-matrix algebra.
//!
//! Systems are kernel representations `R(d/dt) w = 0` over Q[x]. The same
//! algebra reads as a shift-operator model for discrete time.

pub mod behavior;
pub mod control;
pub mod error;
pub mod iopart;
pub mod minint;
pub mod polymat;

pub use behavior::Behavior;
pub use control::{Certificate, ControlProblem, SynthesisResult};
pub use error::{Error, Result, SynthesisError, Unsolvable};
pub use polymat::{Poly, PolyMatrix, Rational};
