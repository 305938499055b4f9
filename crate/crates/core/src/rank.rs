//! Competition rankings of chord classes and the empirical reference rankings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::chord::{equivalence_classes, ChordClass};
use crate::measures::{evaluate, MeasureKind, MeasureValue, Voicing};
use crate::{Chord, Error, Scale};

/// `rank[i] = 1 + #{j : values[j] < values[i]}`; ties share the smallest rank.
pub fn competition_rank<T: PartialOrd>(values: &[T]) -> Vec<u32> {
    values
        .iter()
        .map(|v| 1 + values.iter().filter(|w| *w < v).count() as u32)
        .collect()
}

/// One row of measure values per class, with their ranks.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedTable {
    pub row_label: String,
    pub kind: MeasureKind,
    pub columns: Vec<Chord>,
    /// `None` only where the source has no value (empirical data).
    pub values: Vec<Option<MeasureValue>>,
    pub ranks: Vec<Option<u32>>,
}

impl RankedTable {
    fn from_values(
        row_label: String,
        kind: MeasureKind,
        columns: Vec<Chord>,
        values: Vec<MeasureValue>,
    ) -> Self {
        let ranks = competition_rank(&values).into_iter().map(Some).collect();
        Self {
            row_label,
            kind,
            columns,
            values: values.into_iter().map(Some).collect(),
            ranks,
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    fn position(&self, label: &Chord) -> Option<usize> {
        self.columns.iter().position(|c| c == label)
    }

    pub fn rank_of(&self, label: &Chord) -> Option<u32> {
        self.position(label).and_then(|i| self.ranks[i])
    }

    pub fn value_of(&self, label: &Chord) -> Option<&MeasureValue> {
        self.position(label).and_then(|i| self.values[i].as_ref())
    }
}

/// Evaluates `kind` on every class and ranks them; columns stay in class order.
pub fn rank_classes(
    scale: &Scale,
    classes: &[ChordClass],
    kind: MeasureKind,
    voicing: Voicing,
) -> RankedTable {
    let values = classes
        .iter()
        .map(|c| evaluate(scale, c, kind, voicing).expect("computable measure"))
        .collect();
    let columns = classes.iter().map(|c| c.label().clone()).collect();
    RankedTable::from_values(scale.name().to_string(), kind, columns, values)
}

fn triad_classes() -> Vec<ChordClass> {
    equivalence_classes(3).expect("3 is a valid chord size")
}

/// Symmetric harmonicity of the twelve triad classes, ranked, per scale.
pub fn triad_ranking_table(scales: &[Scale]) -> Vec<RankedTable> {
    let classes = triad_classes();
    scales
        .iter()
        .map(|s| {
            rank_classes(
                s,
                &classes,
                MeasureKind::SymmetricHarmonicity,
                Voicing::default(),
            )
        })
        .collect()
}

/// Class-averaged Stolzenburg periodicity of the twelve triad classes, ranked, per scale.
pub fn averaged_stolzenburg_table(scales: &[Scale], voicing: Voicing) -> Vec<RankedTable> {
    let classes = triad_classes();
    scales
        .iter()
        .map(|s| rank_classes(s, &classes, MeasureKind::StolzenburgAverage, voicing))
        .collect()
}

/// k-chord classes whose symmetric harmonicity is below `threshold`, ascending by value.
pub fn threshold_table(scale: &Scale, k: usize, threshold: &BigUint) -> Result<RankedTable, Error> {
    let classes = equivalence_classes(k)?;
    let full = rank_classes(
        scale,
        &classes,
        MeasureKind::SymmetricHarmonicity,
        Voicing::default(),
    );
    let mut rows: Vec<(MeasureValue, Chord)> = full
        .values
        .into_iter()
        .zip(full.columns)
        .filter_map(|(v, c)| v.map(|v| (v, c)))
        .filter(|(v, _)| matches!(v, MeasureValue::Integer(n) if n < threshold))
        .collect();
    rows.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("integers are ordered")
            .then_with(|| a.1.cmp(&b.1))
    });
    let (values, columns): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    Ok(RankedTable::from_values(
        full.row_label,
        MeasureKind::SymmetricHarmonicity,
        columns,
        values,
    ))
}

pub fn fourchord_table(scale: &Scale, threshold: &BigUint) -> RankedTable {
    threshold_table(scale, 4, threshold).expect("4 is a valid chord size")
}

/// Published listener rankings of the twelve triad classes (`None` where the
/// study had no representative of the class).
pub struct EmpiricalReference;

impl EmpiricalReference {
    pub const TRIAD_RANKS: [((u8, u8), Option<u32>); 12] = [
        ((1, 2), Some(10)),
        ((1, 3), Some(6)),
        ((1, 4), None),
        ((1, 5), Some(7)),
        ((1, 6), Some(8)),
        ((2, 4), None),
        ((2, 5), Some(3)),
        ((2, 6), Some(5)),
        ((2, 7), Some(2)),
        ((3, 6), Some(4)),
        ((3, 7), Some(1)),
        ((4, 8), Some(9)),
    ];

    /// Translation-invariant Stolzenburg rankings over the study's chords.
    /// Display only: the chord list behind it is not available.
    pub const AVERAGED_HARMONICITY_RANKS: [Option<u32>; 12] = [
        Some(9),
        Some(10),
        None,
        Some(8),
        Some(6),
        None,
        Some(4),
        Some(7),
        Some(2),
        Some(4),
        Some(1),
        Some(3),
    ];

    /// Listener ranks of four-note chords, quoted by a representative member.
    /// Display only.
    pub const FOUR_CHORD_RANKS: [((u8, u8, u8), u32); 5] = [
        ((2, 5, 9), 4),
        ((2, 5, 7), 6),
        ((1, 5, 8), 2),
        ((2, 4, 7), 1),
        ((3, 5, 9), 5),
    ];

    fn labels() -> Vec<Chord> {
        Self::TRIAD_RANKS
            .iter()
            .map(|((a, b), _)| Chord::new([*a, *b]).expect("static label"))
            .collect()
    }

    pub fn ranked_table() -> RankedTable {
        let ranks: Vec<Option<u32>> = Self::TRIAD_RANKS.iter().map(|(_, r)| *r).collect();
        RankedTable {
            row_label: "empirical".to_string(),
            kind: MeasureKind::Empirical,
            columns: Self::labels(),
            values: ranks
                .iter()
                .map(|r| r.map(|r| MeasureValue::Integer(r.into())))
                .collect(),
            ranks,
        }
    }

    pub fn averaged_harmonicity_table() -> RankedTable {
        let ranks = Self::AVERAGED_HARMONICITY_RANKS.to_vec();
        RankedTable {
            row_label: "avg harm".to_string(),
            kind: MeasureKind::Empirical,
            columns: Self::labels(),
            values: ranks
                .iter()
                .map(|r| r.map(|r| MeasureValue::Integer(r.into())))
                .collect(),
            ranks,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub label: Chord,
    pub empirical: Option<u32>,
    pub measure: Option<u32>,
    /// `None` when either side is missing.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub measure_label: String,
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    /// Classes present on both sides.
    pub fn compared(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees.is_some()).count()
    }

    pub fn agreements(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees == Some(true)).count()
    }

    /// `(empirical, measure)` rank pairs over the compared classes.
    pub fn rank_pairs(&self) -> Vec<(u32, u32)> {
        self.rows
            .iter()
            .filter_map(|r| Some((r.empirical?, r.measure?)))
            .collect()
    }
}

/// Aligns a triad ranking with the empirical ranks, class by class.
pub fn compare_to_empirical(ranked: &RankedTable) -> Comparison {
    let empirical = EmpiricalReference::ranked_table();
    let rows = empirical
        .columns
        .iter()
        .zip(&empirical.ranks)
        .map(|(label, &emp)| {
            let measure = ranked.rank_of(label);
            let agrees = match (emp, measure) {
                (Some(e), Some(m)) => Some(e == m),
                _ => None,
            };
            ComparisonRow {
                label: label.clone(),
                empirical: emp,
                measure,
                agrees,
            }
        })
        .collect();
    Comparison {
        measure_label: ranked.row_label.clone(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scale::ScaleId;
    use alloc::vec;
    use proptest::prelude::*;

    fn builtins() -> Vec<Scale> {
        ScaleId::ALL.iter().map(|&id| Scale::builtin(id)).collect()
    }

    fn ranks(t: &RankedTable) -> Vec<u32> {
        t.ranks.iter().map(|r| r.unwrap()).collect()
    }

    #[test]
    fn competition_rank_examples() {
        assert_eq!(competition_rank(&[5, 1, 5]), vec![2, 1, 2]);
        assert_eq!(competition_rank(&[3.0, 1.0, 2.0]), vec![3, 1, 2]);
        assert_eq!(competition_rank::<u32>(&[]), Vec::<u32>::new());
        assert_eq!(competition_rank(&[7, 7, 7]), vec![1, 1, 1]);
    }

    #[test]
    fn triad_rankings_for_builtin_scales() {
        let tables = triad_ranking_table(&builtins());
        assert_eq!(
            ranks(&tables[0]),
            vec![10, 8, 6, 5, 10, 7, 3, 12, 2, 9, 1, 4]
        );
        assert_eq!(
            ranks(&tables[4]),
            vec![7, 5, 7, 5, 7, 4, 2, 11, 1, 7, 3, 11]
        );
        assert_eq!(ranks(&tables[2]), ranks(&tables[3]));
        let minimal = |t: &RankedTable| {
            t.columns[t.ranks.iter().position(|r| *r == Some(1)).unwrap()].clone()
        };
        for i in [0, 2, 3] {
            assert_eq!(minimal(&tables[i]), Chord::new([3, 7]).unwrap());
        }
        for i in [1, 4] {
            assert_eq!(minimal(&tables[i]), Chord::new([2, 7]).unwrap());
        }
    }

    #[test]
    fn fourchord_threshold() {
        let a = Scale::builtin(ScaleId::A);
        let t = fourchord_table(&a, &BigUint::from(100_000_000u32));
        assert_eq!(t.len(), 7);
        assert_eq!(
            t.values[0],
            Some(MeasureValue::Integer(11_664_000u32.into()))
        );
        assert_eq!(ranks(&t), vec![1, 2, 3, 4, 5, 6, 7]);

        let c = Scale::builtin(ScaleId::C);
        let wide = fourchord_table(&c, &BigUint::from(400_000_000u32));
        let dom7 = crate::chord::class_of(&Chord::new([3, 5, 9]).unwrap());
        assert_eq!(
            wide.value_of(dom7.label()),
            Some(&MeasureValue::Integer(396_576_000u32.into()))
        );
    }

    #[test]
    fn threshold_is_monotone() {
        let a = Scale::builtin(ScaleId::A);
        let mut prev: Option<RankedTable> = None;
        for exp in 6..12u32 {
            let t = fourchord_table(&a, &BigUint::from(10u64.pow(exp)));
            if let Some(p) = prev {
                assert_eq!(&t.columns[..p.len()], p.columns.as_slice());
            }
            prev = Some(t);
        }
        assert!(threshold_table(&a, 13, &BigUint::from(1u32)).is_err());
    }

    #[test]
    fn averaged_stolzenburg_keeps_augmented_ahead_of_major() {
        for t in averaged_stolzenburg_table(&builtins(), Voicing::Closed) {
            let aug = t.rank_of(&Chord::new([4, 8]).unwrap()).unwrap();
            let maj = t.rank_of(&Chord::new([3, 7]).unwrap()).unwrap();
            assert!(aug <= maj, "{}: {aug} > {maj}", t.row_label);
        }
    }

    #[test]
    fn empirical_reference_and_comparison() {
        let emp = EmpiricalReference::ranked_table();
        assert_eq!(emp.rank_of(&Chord::new([1, 4]).unwrap()), None);
        assert_eq!(emp.rank_of(&Chord::new([3, 7]).unwrap()), Some(1));

        let c = Scale::builtin(ScaleId::C);
        let symm = triad_ranking_table(&[c]).remove(0);
        let cmp = compare_to_empirical(&symm);
        assert_eq!(cmp.compared(), 10);
        let row = |a: u8, b: u8| {
            cmp.rows
                .iter()
                .find(|r| r.label == Chord::new([a, b]).unwrap())
                .unwrap()
                .clone()
        };
        assert_eq!(row(3, 7).measure, Some(1));
        assert_eq!(row(2, 7).measure, Some(2));
        assert_eq!(row(1, 4).agrees, None);
        assert_eq!(row(1, 4).measure, Some(6));

        let self_cmp = compare_to_empirical(&emp);
        assert_eq!(self_cmp.agreements(), 10);
        assert_eq!(self_cmp.compared(), 10);
    }

    proptest! {
        #[test]
        fn distinct_values_rank_as_permutation(mut xs in proptest::collection::btree_set(any::<i64>(), 1..40)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>())
            .prop_shuffle()) {
            let r = competition_rank(&xs);
            let mut sorted = r.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=xs.len() as u32).collect::<Vec<_>>());
            // relabeling-invariant: permuting inputs permutes ranks
            xs.reverse();
            let mut rr = competition_rank(&xs);
            rr.reverse();
            prop_assert_eq!(rr, r);
        }

        #[test]
        fn ranks_depend_only_on_order(xs in proptest::collection::vec(0i64..20, 1..30), shift in -1000i64..1000) {
            let shifted: Vec<i64> = xs.iter().map(|x| 3 * x + shift).collect();
            prop_assert_eq!(competition_rank(&xs), competition_rank(&shifted));
        }
    }
}
