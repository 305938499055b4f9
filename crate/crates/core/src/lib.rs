//! Exact-arithmetic consonance measures for chords in twelve-note just scales.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! arbitrary-precision integers; the only floating-point values produced are
//! the Brefeld consonance values, which are derived from an exact integer root.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chord;
pub mod contfrac;
mod error;
pub mod measures;
pub mod rank;
pub mod rational;
pub mod scale;

pub use chord::{Chord, ChordClass, GapComposition, IntervalClassMultiset};
pub use error::Error;
pub use measures::{HarmonicityTable, MeasureKind, MeasureValue, Voicing};
pub use rank::{competition_rank, EmpiricalReference, RankedTable};
pub use rational::Rational;
pub use scale::{Scale, ScaleId, Tritone};

/// Number of notes per octave in every scale handled here.
pub const NOTES: usize = 12;
