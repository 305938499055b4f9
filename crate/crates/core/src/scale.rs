//! Twelve-note just scales: the five built-ins and the two generators.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::contfrac::{convergents_within, root_of_two};
use crate::{Error, Rational, NOTES};

/// The built-in scales, in the order they are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScaleId {
    /// Kepler's just scale (Monochord No. 2, transposed down a fifth).
    A,
    /// Wendy Carlos's super just scale.
    B,
    /// Continued-fraction approximation of equal temperament.
    C,
    /// Stolzenburg's rational tuning.
    D,
    /// Pythagorean, tritone 729/512.
    E,
}

impl ScaleId {
    pub const ALL: [ScaleId; 5] = [ScaleId::A, ScaleId::B, ScaleId::C, ScaleId::D, ScaleId::E];

    pub fn name(self) -> &'static str {
        match self {
            ScaleId::A => "A",
            ScaleId::B => "B",
            ScaleId::C => "C",
            ScaleId::D => "D",
            ScaleId::E => "E",
        }
    }

    #[rustfmt::skip]
    fn table_row(self) -> [(u32, u32); NOTES] {
        match self {
            ScaleId::A => [
                (1, 1), (16, 15), (9, 8), (6, 5), (5, 4), (4, 3),
                (45, 32), (3, 2), (8, 5), (5, 3), (16, 9), (15, 8),
            ],
            ScaleId::B => [
                (1, 1), (17, 16), (9, 8), (6, 5), (5, 4), (4, 3),
                (11, 8), (3, 2), (13, 8), (5, 3), (7, 4), (15, 8),
            ],
            ScaleId::C => [
                (1, 1), (17, 16), (9, 8), (6, 5), (5, 4), (4, 3),
                (17, 12), (3, 2), (8, 5), (5, 3), (16, 9), (15, 8),
            ],
            ScaleId::D => [
                (1, 1), (16, 15), (9, 8), (6, 5), (5, 4), (4, 3),
                (17, 12), (3, 2), (8, 5), (5, 3), (16, 9), (15, 8),
            ],
            ScaleId::E => [
                (1, 1), (256, 243), (9, 8), (32, 27), (81, 64), (4, 3),
                (729, 512), (3, 2), (128, 81), (27, 16), (16, 9), (243, 128),
            ],
        }
    }
}

impl FromStr for ScaleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(ScaleId::A),
            "B" | "b" => Ok(ScaleId::B),
            "C" | "c" => Ok(ScaleId::C),
            "D" | "d" => Ok(ScaleId::D),
            "E" | "e" => Ok(ScaleId::E),
            other => Err(Error::UnknownScale(other.to_string())),
        }
    }
}

impl fmt::Display for ScaleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which way the circle of fifths is walked to reach the tritone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tritone {
    /// Six fifths up: 729/512.
    FifthsUp,
    /// Six fifths down: 1024/729.
    FifthsDown,
}

/// A named, validated twelve-note just scale.
///
/// `ratios[n]` is the frequency ratio of the `n`th note to the bottom note.
/// Invariants: `ratios[0] = 1`, strictly increasing, every ratio in `[1, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scale {
    name: String,
    ratios: Vec<Rational>,
}

impl Scale {
    pub fn new(name: impl Into<String>, ratios: Vec<Rational>) -> Result<Self, Error> {
        let invalid = |index: usize, reason: String| Error::InvalidScale { index, reason };
        if ratios.len() != NOTES {
            return Err(invalid(
                ratios.len(),
                format!("expected {NOTES} ratios, got {}", ratios.len()),
            ));
        }
        if ratios[0] != Rational::one() {
            return Err(invalid(
                0,
                format!("bottom note must be 1/1, got {}", ratios[0]),
            ));
        }
        let two = Rational::two();
        for (i, r) in ratios.iter().enumerate() {
            if *r < Rational::one() || *r >= two {
                return Err(invalid(i, format!("ratio {r} outside [1, 2)")));
            }
            if i > 0 && *r <= ratios[i - 1] {
                return Err(invalid(
                    i,
                    format!("ratio {r} not greater than {}", ratios[i - 1]),
                ));
            }
        }
        Ok(Self {
            name: name.into(),
            ratios,
        })
    }

    pub fn builtin(id: ScaleId) -> Self {
        let ratios = id
            .table_row()
            .iter()
            .map(|&(p, q)| Rational::new(p, q).expect("static ratio"))
            .collect();
        Self::new(id.name(), ratios).expect("built-in scales are valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn ratios(&self) -> &[Rational] {
        &self.ratios
    }

    pub fn ratio(&self, index: usize) -> &Rational {
        &self.ratios[index % NOTES]
    }

    /// Ratio of `note` (any non-negative index) to the bottom note, extending by
    /// whole octaves: `ratios[note % 12] * 2^(note / 12)`.
    pub fn frequency_ratio(&self, note: usize) -> Rational {
        let octave = Rational::integer(Pow::pow(BigUint::from(2u32), note / NOTES));
        &self.ratios[note % NOTES] * &octave
    }
}

/// Looks up one of the five tabulated scales.
pub fn builtin_scale(id: &str) -> Result<Scale, Error> {
    Ok(Scale::builtin(id.parse()?))
}

/// Approximates every `2^(n/12)` by its first continued-fraction convergent within `rel_tol`.
pub fn continued_fraction_scale(rel_tol: &Rational) -> Result<Scale, Error> {
    let ratios = (0..NOTES as u32)
        .map(|n| convergents_within(&root_of_two(n, NOTES as u32), rel_tol))
        .collect::<Result<Vec<_>, _>>()?;
    Scale::new(format!("continued fraction {rel_tol}"), ratios)
}

/// Circle-of-fifths scale: the note `7k mod 12` gets `(3/2)^k`, octave-reduced into `[1, 2)`.
pub fn pythagorean_scale(tritone: Tritone) -> Scale {
    let ks = match tritone {
        Tritone::FifthsUp => -5i32..=6,
        Tritone::FifthsDown => -6i32..=5,
    };
    let fifth = Rational::new(3, 2).expect("3/2");
    let mut ratios = alloc::vec![Rational::one(); NOTES];
    for k in ks {
        let position = (7 * k).rem_euclid(NOTES as i32) as usize;
        ratios[position] = octave_reduce(fifth.pow(k));
    }
    let name = match tritone {
        Tritone::FifthsUp => "pythagorean (fifths up)",
        Tritone::FifthsDown => "pythagorean (fifths down)",
    };
    Scale::new(name, ratios).expect("circle of fifths yields a valid scale")
}

fn octave_reduce(mut r: Rational) -> Rational {
    let two = Rational::two();
    let one = Rational::one();
    while r >= two {
        r = &r / &two;
    }
    while r < one {
        r = &r * &two;
    }
    r
}
