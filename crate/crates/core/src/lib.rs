//! Symmetric Boolean functions and algebraic immunity.
//!
//! * [`gf2kernel`]: bit-packed GF(2) vectors and matrices.
//! * [`boolfn`]: truth tables, ANF, annihilator spaces, algebraic immunity.
//! * [`symfn`]: value vectors, SANF vectors and conversions between them.
//! * [`constructions`]: explicit low-degree annihilators for symmetric functions.
//! * [`surveyor`]: exhaustive surveys over all symmetric functions and report output.

pub mod boolfn;
pub mod constructions;
pub mod error;
pub mod gf2kernel;
pub mod surveyor;
pub mod symfn;

pub use boolfn::{algebraic_immunity, AiWitness, AnfCoeffs, AnnihilatorSpace, Side, TruthTable};
pub use error::{Error, Result};
pub use gf2kernel::{BitMatrix, BitVector};
pub use symfn::{SanfVector, SymValueVector};
