//! Chord consonance measures over a fixed just scale.
//!
//! * symmetric harmonicity: product of `h_n` over all pairwise intervals, with
//!   `h_n = min(a_n b_n, a_(12-n) b_(12-n))`;
//! * Brefeld's consonance value and its root-free variant;
//! * Stolzenburg's relative periodicity, plain and averaged over a class.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::chord::ChordClass;
use crate::rational::lcm_all;
use crate::{Chord, Error, Rational, Scale, NOTES};

/// Decimal digits kept by the exact root behind real-valued outputs.
const ROOT_DIGITS: u32 = 18;

/// `h_1 ..= h_11` for one scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicityTable {
    h: Vec<BigUint>,
}

impl HarmonicityTable {
    pub fn new(scale: &Scale) -> Self {
        let heights: Vec<BigUint> = scale.ratios().iter().map(Rational::height).collect();
        let h = (1..NOTES)
            .map(|n| heights[n].clone().min(heights[NOTES - n].clone()))
            .collect();
        Self { h }
    }

    /// `h_n` for `n` in `1..=11`.
    pub fn get(&self, n: usize) -> Result<&BigUint, Error> {
        if (1..NOTES).contains(&n) {
            Ok(&self.h[n - 1])
        } else {
            Err(Error::IntervalOutOfRange(n))
        }
    }

    /// Values in order `h_1, ..., h_11`.
    pub fn values(&self) -> &[BigUint] {
        &self.h
    }

    pub fn symmetric_harmonicity(&self, chord: &Chord) -> BigUint {
        chord
            .pairwise_differences()
            .fold(BigUint::one(), |acc, d| acc * &self.h[d - 1])
    }

    /// `h_a h_b h_(b-a)` for the triad `(a, b)`.
    pub fn triad(&self, a: usize, b: usize) -> Result<BigUint, Error> {
        if !(1 <= a && a < b && b < NOTES) {
            return Err(Error::InvalidChord(alloc::format!("({a},{b})")));
        }
        Ok(self.get(a)? * self.get(b)? * self.get(b - a)?)
    }
}

pub fn harmonicity_table(scale: &Scale) -> HarmonicityTable {
    HarmonicityTable::new(scale)
}

pub fn symmetric_harmonicity(scale: &Scale, chord: &Chord) -> BigUint {
    HarmonicityTable::new(scale).symmetric_harmonicity(chord)
}

/// `value^(1/degree)`, from an exact integer root carried to [`ROOT_DIGITS`] places.
fn real_root(value: &BigUint, degree: u32) -> f64 {
    let scale = Pow::pow(BigUint::from(10u32), ROOT_DIGITS);
    let scaled = value * Pow::pow(&scale, degree);
    Rational::from_biguint(scaled.nth_root(degree), scale)
        .expect("scale is positive")
        .to_f64()
}

/// Reduced ratios of the higher to the lower note for every pair of notes.
fn interval_ratios(scale: &Scale, notes: &[usize]) -> Vec<Rational> {
    let freqs: Vec<Rational> = notes.iter().map(|&n| scale.frequency_ratio(n)).collect();
    let mut out = Vec::with_capacity(freqs.len() * freqs.len().saturating_sub(1) / 2);
    for i in 0..freqs.len() {
        for j in i + 1..freqs.len() {
            out.push(&freqs[j] / &freqs[i]);
        }
    }
    out
}

fn check_notes(notes: &[usize], min_len: usize) -> Result<(), Error> {
    if notes.len() < min_len || notes.windows(2).any(|w| w[0] >= w[1]) {
        Err(Error::InvalidNotes)
    } else {
        Ok(())
    }
}

/// `sqrt(a_n b_n)` for the scale's ratio at `n`.
pub fn brefeld_interval(scale: &Scale, n: usize) -> Result<f64, Error> {
    if !(1..NOTES).contains(&n) {
        return Err(Error::IntervalOutOfRange(n));
    }
    Ok(real_root(&scale.ratio(n).height(), 2))
}

/// Product of numerator times denominator over all intervals of the chord.
pub fn brefeld_modified(scale: &Scale, chord: &Chord) -> BigUint {
    brefeld_modified_notes(scale, &chord.translated(0)).expect("chord notes ascend")
}

/// As [`brefeld_modified`] for absolute, strictly increasing note indices (at least two).
pub fn brefeld_modified_notes(scale: &Scale, notes: &[usize]) -> Result<BigUint, Error> {
    check_notes(notes, 2)?;
    Ok(interval_ratios(scale, notes)
        .iter()
        .fold(BigUint::one(), |acc, r| acc * r.height()))
}

/// Geometric mean of the interval consonance values: `brefeld_modified^(1/(2m))`.
pub fn brefeld_chord(scale: &Scale, chord: &Chord) -> f64 {
    brefeld_notes(scale, &chord.translated(0)).expect("chord notes ascend")
}

pub fn brefeld_notes(scale: &Scale, notes: &[usize]) -> Result<f64, Error> {
    let m = notes.len() * notes.len().saturating_sub(1) / 2;
    Ok(real_root(
        &brefeld_modified_notes(scale, notes)?,
        2 * m as u32,
    ))
}

/// lcm of the denominators of each note's ratio to the first (lowest) note.
pub fn stolzenburg_harmonicity(scale: &Scale, notes: &[usize]) -> Result<BigUint, Error> {
    check_notes(notes, 1)?;
    let ratios: Vec<Rational> = notes.iter().map(|&n| scale.frequency_ratio(n)).collect();
    Ok(periodicity(&ratios))
}

fn periodicity(ratios: &[Rational]) -> BigUint {
    let base = &ratios[0];
    let denoms: Vec<BigUint> = ratios.iter().map(|r| (r / base).denom().clone()).collect();
    lcm_all(&denoms).expect("denominators are positive")
}

/// How a translated chord whose notes run past the octave is voiced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Voicing {
    /// Notes keep their order above the translated base; wrapped notes are an
    /// octave higher (`ratios[n % 12] * 2^(n / 12)`).
    #[default]
    Closed,
    /// Notes keep their order, but every ratio is read back into `[1, 2)`
    /// without the octave factor.
    Reduced,
    /// The chord's pitch classes are sorted within the octave starting at note 0
    /// and the lowest of them is the reference tone.
    PitchClass,
}

impl Voicing {
    pub const ALL: [Voicing; 3] = [Voicing::Closed, Voicing::Reduced, Voicing::PitchClass];

    pub fn name(self) -> &'static str {
        match self {
            Voicing::Closed => "closed",
            Voicing::Reduced => "reduced",
            Voicing::PitchClass => "pitch-class",
        }
    }
}

impl FromStr for Voicing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Voicing::ALL
            .into_iter()
            .find(|v| v.name() == s.trim())
            .ok_or_else(|| Error::UnknownVoicing(s.to_string()))
    }
}

/// Periodicity of `chord` translated by `t`, voiced per `voicing`.
pub fn translated_stolzenburg(scale: &Scale, chord: &Chord, t: usize, voicing: Voicing) -> BigUint {
    let notes = chord.translated(t);
    let ratios: Vec<Rational> = match voicing {
        Voicing::Closed => notes.iter().map(|&n| scale.frequency_ratio(n)).collect(),
        Voicing::Reduced => notes.iter().map(|&n| scale.ratio(n).clone()).collect(),
        Voicing::PitchClass => {
            let mut pcs: Vec<usize> = notes.iter().map(|n| n % NOTES).collect();
            pcs.sort_unstable();
            pcs.iter().map(|&n| scale.ratio(n).clone()).collect()
        }
    };
    periodicity(&ratios)
}

/// Mean periodicity over all twelve translations of every member of `class`.
pub fn stolzenburg_class_average(scale: &Scale, class: &ChordClass, voicing: Voicing) -> Rational {
    stolzenburg_average_over(scale, class.members(), voicing)
}

pub fn stolzenburg_average_over(scale: &Scale, members: &[Chord], voicing: Voicing) -> Rational {
    let mut total = BigUint::ZERO;
    for m in members {
        for t in 0..NOTES {
            total += translated_stolzenburg(scale, m, t, voicing);
        }
    }
    let count = BigUint::from(NOTES * members.len());
    Rational::from_biguint(total, count).expect("class is non-empty")
}

/// The measures that can populate a ranked table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    SymmetricHarmonicity,
    Brefeld,
    BrefeldModified,
    Stolzenburg,
    StolzenburgAverage,
    Empirical,
}

impl MeasureKind {
    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::SymmetricHarmonicity => "symm",
            MeasureKind::Brefeld => "brefeld",
            MeasureKind::BrefeldModified => "brefeld-mod",
            MeasureKind::Stolzenburg => "stolzenburg",
            MeasureKind::StolzenburgAverage => "stolzenburg-avg",
            MeasureKind::Empirical => "empirical",
        }
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use MeasureKind::*;
        [
            SymmetricHarmonicity,
            Brefeld,
            BrefeldModified,
            Stolzenburg,
            StolzenburgAverage,
            Empirical,
        ]
        .into_iter()
        .find(|k| k.name() == s.trim())
        .ok_or_else(|| Error::UnknownMeasure(s.to_string()))
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A measure value: exact integer, exact rational, or real.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureValue {
    Integer(BigUint),
    Exact(Rational),
    Real(f64),
}

impl MeasureValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            MeasureValue::Integer(n) => Rational::integer(n.clone()).to_f64(),
            MeasureValue::Exact(r) => r.to_f64(),
            MeasureValue::Real(x) => *x,
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self {
            MeasureValue::Integer(n) => Some(Rational::integer(n.clone())),
            MeasureValue::Exact(r) => Some(r.clone()),
            MeasureValue::Real(_) => None,
        }
    }
}

impl PartialOrd for MeasureValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => Some(a.cmp(&b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureValue::Integer(n) => write!(f, "{n}"),
            MeasureValue::Exact(r) => write!(f, "{r}"),
            MeasureValue::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Evaluates `kind` for a chord class. Class-invariant measures use any member;
/// Brefeld and plain Stolzenburg use the label voiced at note 0.
pub fn evaluate(
    scale: &Scale,
    class: &ChordClass,
    kind: MeasureKind,
    voicing: Voicing,
) -> Option<MeasureValue> {
    let label = class.label();
    Some(match kind {
        MeasureKind::SymmetricHarmonicity => {
            MeasureValue::Integer(symmetric_harmonicity(scale, label))
        }
        MeasureKind::Brefeld => MeasureValue::Real(brefeld_chord(scale, label)),
        MeasureKind::BrefeldModified => MeasureValue::Integer(brefeld_modified(scale, label)),
        MeasureKind::Stolzenburg => MeasureValue::Integer(
            stolzenburg_harmonicity(scale, &label.translated(0)).expect("label notes ascend"),
        ),
        MeasureKind::StolzenburgAverage => {
            MeasureValue::Exact(stolzenburg_class_average(scale, class, voicing))
        }
        MeasureKind::Empirical => return None,
    })
}
