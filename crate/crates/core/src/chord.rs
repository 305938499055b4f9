//! Chords based at note 0 in Z12 and their equivalence classes.
//!
//! A k-chord is stored as its offsets `(x1, ..., x(k-1))` above the base note,
//! `0 < x1 < ... < x(k-1) <= 11`. Two chords are equivalent when their pairwise
//! interval-class multisets agree; this covers translation, inversion and
//! interval-set equality at once, and for k >= 4 also merges Z-related chords.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, NOTES};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    offsets: Vec<u8>,
}

impl Chord {
    pub fn new(offsets: impl Into<Vec<u8>>) -> Result<Self, Error> {
        let offsets = offsets.into();
        let ascending = offsets.windows(2).all(|w| w[0] < w[1]);
        let in_range = offsets.first().is_some_and(|&x| x >= 1)
            && offsets.last().is_some_and(|&x| (x as usize) < NOTES);
        if !(ascending && in_range) {
            return Err(Error::InvalidChord(alloc::format!("{offsets:?}")));
        }
        Ok(Self { offsets })
    }

    /// Builds the chord based at the lowest of `pitch_classes` (taken mod 12).
    pub fn from_pitch_classes(pitch_classes: &[usize]) -> Result<Self, Error> {
        let mut pcs: Vec<usize> = pitch_classes.iter().map(|p| p % NOTES).collect();
        pcs.sort_unstable();
        pcs.dedup();
        let base = *pcs.first().ok_or(Error::InvalidNotes)?;
        Self::new(
            pcs[1..]
                .iter()
                .map(|&p| (p - base) as u8)
                .collect::<Vec<_>>(),
        )
    }

    pub fn offsets(&self) -> &[u8] {
        &self.offsets
    }

    /// Number of notes, counting the base.
    pub fn size(&self) -> usize {
        self.offsets.len() + 1
    }

    /// All notes including the base 0.
    pub fn notes(&self) -> impl Iterator<Item = u8> + '_ {
        core::iter::once(0).chain(self.offsets.iter().copied())
    }

    /// Absolute note indices of this chord translated up by `t` (no octave reduction).
    pub fn translated(&self, t: usize) -> Vec<usize> {
        self.notes().map(|x| t + x as usize).collect()
    }

    /// Differences `x_j - x_i` for all `i < j`, each in `1..=11`.
    pub fn pairwise_differences(&self) -> impl Iterator<Item = usize> + '_ {
        let notes: Vec<u8> = self.notes().collect();
        (0..notes.len()).flat_map(move |i| {
            let notes = notes.clone();
            (i + 1..notes.len()).map(move |j| (notes[j] - notes[i]) as usize)
        })
    }

    /// Moves the bottom note up an octave and re-bases at the new bottom note.
    pub fn invert(&self) -> Self {
        let first = self.offsets[0];
        let mut offsets: Vec<u8> = self.offsets[1..].iter().map(|&x| x - first).collect();
        offsets.push(NOTES as u8 - first);
        Self { offsets }
    }

    pub fn gap_composition(&self) -> GapComposition {
        let mut gaps = Vec::with_capacity(self.size());
        let mut prev = 0u8;
        for &x in &self.offsets {
            gaps.push(x - prev);
            prev = x;
        }
        gaps.push(NOTES as u8 - prev);
        GapComposition { gaps }
    }

    pub fn interval_class_multiset(&self) -> IntervalClassMultiset {
        let mut counts = [0u8; 6];
        for d in self.pairwise_differences() {
            counts[interval_class(d) - 1] += 1;
        }
        IntervalClassMultiset { counts }
    }
}

/// `min(d, 12 - d)` for a step difference `d` in `1..=11`.
pub fn interval_class(d: usize) -> usize {
    let d = d % NOTES;
    d.min(NOTES - d)
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.offsets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Parses `3,7`, `(3,7)` or `3 7`.
impl FromStr for Chord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidChord(s.to_string());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let offsets = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Chord::new(offsets).map_err(|_| bad())
    }
}

/// Consecutive step sizes of a chord, wrapping back to the octave; sums to 12.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GapComposition {
    gaps: Vec<u8>,
}

impl GapComposition {
    pub fn gaps(&self) -> &[u8] {
        &self.gaps
    }

    pub fn sorted(&self) -> Vec<u8> {
        let mut g = self.gaps.clone();
        g.sort_unstable();
        g
    }

    /// Smallest rotation of the gaps or of their reversal.
    pub fn dihedral_canonical(&self) -> Vec<u8> {
        let n = self.gaps.len();
        let mut reversed = self.gaps.clone();
        reversed.reverse();
        [&self.gaps, &reversed]
            .into_iter()
            .flat_map(|g| {
                (0..n).map(move |r| g[r..].iter().chain(&g[..r]).copied().collect::<Vec<u8>>())
            })
            .min()
            .expect("non-empty")
    }
}

/// How many pairwise intervals fall into each interval class 1..=6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalClassMultiset {
    counts: [u8; 6],
}

impl IntervalClassMultiset {
    pub fn counts(&self) -> [u8; 6] {
        self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// Interval classes in ascending order, with repetition.
    pub fn classes(&self) -> Vec<usize> {
        (1..=6)
            .flat_map(|ic| core::iter::repeat_n(ic, self.counts[ic - 1] as usize))
            .collect()
    }
}

/// One equivalence class of k-chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordClass {
    label: Chord,
    members: Vec<Chord>,
    signature: IntervalClassMultiset,
}

impl ChordClass {
    /// Lexicographically smallest member.
    pub fn label(&self) -> &Chord {
        &self.label
    }

    /// All members in T0, ascending.
    pub fn members(&self) -> &[Chord] {
        &self.members
    }

    pub fn signature(&self) -> IntervalClassMultiset {
        self.signature
    }

    pub fn contains(&self, chord: &Chord) -> bool {
        self.members.binary_search(chord).is_ok()
    }

    /// Members grouped by translation/inversion/reflection orbit. A class has more
    /// than one sub-orbit only when it merges Z-related chords.
    pub fn sub_orbits(&self) -> Vec<Vec<Chord>> {
        let mut orbits: BTreeMap<Vec<u8>, Vec<Chord>> = BTreeMap::new();
        for m in &self.members {
            orbits
                .entry(m.gap_composition().dihedral_canonical())
                .or_default()
                .push(m.clone());
        }
        let mut out: Vec<Vec<Chord>> = orbits.into_values().collect();
        out.sort();
        out
    }
}

fn check_size(k: usize) -> Result<(), Error> {
    if (2..=NOTES).contains(&k) {
        Ok(())
    } else {
        Err(Error::ChordSizeOutOfRange(k))
    }
}

/// All `C(11, k-1)` k-chords based at 0, in lexicographic order.
pub fn enumerate_chords(k: usize) -> Result<Vec<Chord>, Error> {
    check_size(k)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k - 1);
    extend(&mut current, 1, k - 1, &mut out);
    Ok(out)
}

fn extend(current: &mut Vec<u8>, next: u8, remaining: usize, out: &mut Vec<Chord>) {
    if remaining == 0 {
        out.push(Chord {
            offsets: current.clone(),
        });
        return;
    }
    for x in next..=(NOTES as u8 - remaining as u8) {
        current.push(x);
        extend(current, x + 1, remaining - 1, out);
        current.pop();
    }
}

/// Partition of all k-chords by interval-class multiset, ordered by label.
pub fn equivalence_classes(k: usize) -> Result<Vec<ChordClass>, Error> {
    let mut groups: BTreeMap<IntervalClassMultiset, Vec<Chord>> = BTreeMap::new();
    for chord in enumerate_chords(k)? {
        groups
            .entry(chord.interval_class_multiset())
            .or_default()
            .push(chord);
    }
    let mut classes: Vec<ChordClass> = groups
        .into_iter()
        .map(|(signature, members)| ChordClass {
            label: members[0].clone(),
            members,
            signature,
        })
        .collect();
    classes.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(classes)
}

/// The class of `chord`, found among `equivalence_classes(chord.size())`.
pub fn class_of(chord: &Chord) -> ChordClass {
    equivalence_classes(chord.size())
        .expect("chord sizes are always in range")
        .into_iter()
        .find(|c| c.signature == chord.interval_class_multiset())
        .expect("every chord belongs to a class")
}
