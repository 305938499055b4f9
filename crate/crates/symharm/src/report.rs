//! Builds the result tables behind each subcommand.

use num_bigint::BigUint;
use symharm_core::chord::{class_of, equivalence_classes};
use symharm_core::measures::{
    brefeld_modified_notes, brefeld_notes, harmonicity_table, stolzenburg_class_average,
    stolzenburg_harmonicity, symmetric_harmonicity,
};
use symharm_core::rank::{compare_to_empirical, rank_classes, threshold_table};
use symharm_core::{
    Chord, ChordClass, EmpiricalReference, Error, MeasureKind, MeasureValue, RankedTable, Scale,
    Voicing, NOTES,
};

use crate::render::{Cell, Magnitude, Table};

fn value_cell(value: Option<&MeasureValue>) -> Cell {
    match value {
        Some(MeasureValue::Integer(n)) => Cell::Int(n.clone()),
        Some(MeasureValue::Exact(r)) => Cell::Mean(r.clone()),
        Some(MeasureValue::Real(x)) => Cell::Real(*x),
        None => Cell::Missing,
    }
}

/// Thousands for triads, millions for larger chords; other measures unscaled.
fn magnitude_for(kind: MeasureKind, k: usize) -> Magnitude {
    match (kind, k) {
        (MeasureKind::SymmetricHarmonicity, 3) => Magnitude::Thousands,
        (MeasureKind::SymmetricHarmonicity, k) if k > 3 => Magnitude::Millions,
        _ => Magnitude::Units,
    }
}

fn label_header(first: &str, columns: &[Chord]) -> Vec<String> {
    std::iter::once(first.to_string())
        .chain(columns.iter().map(ToString::to_string))
        .collect()
}

fn rank_row(label: &str, ranks: &[Option<u32>]) -> Vec<Cell> {
    std::iter::once(label.into())
        .chain(ranks.iter().map(|&r| r.into()))
        .collect()
}

pub fn scales_table(scales: &[Scale]) -> Table {
    let header = std::iter::once("scale".to_string()).chain((0..NOTES).map(|n| n.to_string()));
    let mut table = Table::new("frequency ratios", header);
    for s in scales {
        let row =
            std::iter::once(s.name().into()).chain(s.ratios().iter().cloned().map(Cell::Ratio));
        table.push(row.collect());
    }
    table
}

/// With a single unlabelled scale the output does not depend on the scale's name.
pub fn intervals_table(scales: &[Scale], labelled: bool) -> Table {
    let first = if labelled { "scale" } else { "" };
    let header = std::iter::once(first.to_string()).chain((1..NOTES).map(|n| format!("h{n}")));
    let mut table = Table::new("interval harmonicities", header);
    for s in scales {
        let label = if labelled { s.name() } else { "h" };
        let h = harmonicity_table(s);
        let row = std::iter::once(label.into()).chain(h.values().iter().cloned().map(Cell::Int));
        table.push(row.collect());
    }
    table
}

pub fn rank_table(
    scale: &Scale,
    k: usize,
    kind: MeasureKind,
    voicing: Voicing,
) -> Result<Table, Error> {
    let classes = equivalence_classes(k)?;
    let ranked = rank_classes(scale, &classes, kind, voicing);
    let title = format!("{k}-note classes by {kind}, scale {}", scale.name());
    let mut table =
        Table::new(title, label_header("", &ranked.columns)).with_magnitude(magnitude_for(kind, k));
    let values = std::iter::once(kind.name().into())
        .chain(ranked.values.iter().map(|v| value_cell(v.as_ref())));
    table.push(values.collect());
    table.push(rank_row("rank", &ranked.ranks));
    if kind == MeasureKind::StolzenburgAverage {
        table.note(format!("voicing: {}", voicing.name()));
    }
    Ok(table)
}

pub fn rank_matrix(
    scales: &[Scale],
    k: usize,
    kind: MeasureKind,
    voicing: Voicing,
) -> Result<Table, Error> {
    let classes = equivalence_classes(k)?;
    let ranked: Vec<RankedTable> = scales
        .iter()
        .map(|s| rank_classes(s, &classes, kind, voicing))
        .collect();
    let columns: Vec<Chord> = classes.iter().map(|c| c.label().clone()).collect();
    let mut table = Table::new(
        format!("ranks of {k}-note classes by {kind}"),
        label_header("scale", &columns),
    );
    for r in &ranked {
        table.push(rank_row(&r.row_label, &r.ranks));
    }
    if kind == MeasureKind::StolzenburgAverage {
        table.note(format!("voicing: {}", voicing.name()));
    }
    Ok(table)
}

/// Classes below `threshold`, one row each, ascending by value.
pub fn threshold_report(scale: &Scale, k: usize, threshold: &BigUint) -> Result<Table, Error> {
    let ranked = threshold_table(scale, k, threshold)?;
    let title = format!(
        "{k}-note classes with symmetric harmonicity below {threshold}, scale {}",
        scale.name()
    );
    let kind = MeasureKind::SymmetricHarmonicity;
    let mut table =
        Table::new(title, ["class", kind.name(), "rank"]).with_magnitude(magnitude_for(kind, k));
    for ((label, value), rank) in ranked.columns.iter().zip(&ranked.values).zip(&ranked.ranks) {
        table.push(vec![
            label.to_string().into(),
            value_cell(value.as_ref()),
            (*rank).into(),
        ]);
    }
    Ok(table)
}

fn join_notes(notes: &[usize]) -> String {
    notes
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Every measure for a chord given by absolute note indices.
pub fn notes_report(scale: &Scale, notes: &[usize], voicing: Voicing) -> Result<Table, Error> {
    if notes.len() < 2 || notes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidNotes);
    }
    let chord = Chord::from_pitch_classes(notes)?;
    if chord.size() != notes.len() {
        return Err(Error::InvalidChord(format!(
            "{} repeats a pitch class",
            join_notes(notes)
        )));
    }
    let class = class_of(&chord);
    let base = scale.frequency_ratio(notes[0]);
    let ratios: Vec<String> = notes
        .iter()
        .map(|&n| (&scale.frequency_ratio(n) / &base).to_string())
        .collect();

    let title = format!("chord {} in scale {}", join_notes(notes), scale.name());
    let mut table = Table::new(title, ["measure", "value"]);
    table.push(vec!["ratios".into(), ratios.join(" ").into()]);
    table.push(vec!["class".into(), class.label().to_string().into()]);
    table.push(vec![
        "symm".into(),
        Cell::Int(symmetric_harmonicity(scale, &chord)),
    ]);
    table.push(vec![
        "brefeld".into(),
        Cell::Real(brefeld_notes(scale, notes)?),
    ]);
    table.push(vec![
        "brefeld-mod".into(),
        Cell::Int(brefeld_modified_notes(scale, notes)?),
    ]);
    table.push(vec![
        "stolzenburg".into(),
        Cell::Int(stolzenburg_harmonicity(scale, notes)?),
    ]);
    table.push(vec![
        "stolzenburg-avg".into(),
        Cell::Mean(stolzenburg_class_average(scale, &class, voicing)),
    ]);
    Ok(table)
}

pub fn class_report(scale: &Scale, class: &ChordClass, all_measures: bool) -> Table {
    let mut header = vec!["member", "symm"];
    if all_measures {
        header.extend(["brefeld", "brefeld-mod", "stolzenburg"]);
    }
    let title = format!("class {} in scale {}", class.label(), scale.name());
    let mut table = Table::new(title, header);
    for m in class.members() {
        let notes = m.translated(0);
        let mut row = vec![
            m.to_string().into(),
            Cell::Int(symmetric_harmonicity(scale, m)),
        ];
        if all_measures {
            row.push(Cell::Real(
                brefeld_notes(scale, &notes).expect("member notes ascend"),
            ));
            row.push(Cell::Int(
                brefeld_modified_notes(scale, &notes).expect("member notes ascend"),
            ));
            row.push(Cell::Int(
                stolzenburg_harmonicity(scale, &notes).expect("member notes ascend"),
            ));
        }
        table.push(row);
    }
    table.note(format!(
        "{} members, interval classes {:?}",
        class.members().len(),
        class.signature().counts()
    ));
    let orbits = class.sub_orbits();
    if orbits.len() > 1 {
        for (i, orbit) in orbits.iter().enumerate() {
            let list: Vec<String> = orbit.iter().map(ToString::to_string).collect();
            table.note(format!("sub-orbit {}: {}", i + 1, list.join(" ")));
        }
    }
    table
}

pub fn classes_table(k: usize) -> Result<Table, Error> {
    let classes = equivalence_classes(k)?;
    let mut table = Table::new(
        format!("{k}-note classes"),
        ["class", "members", "interval classes", "sub-orbits"],
    );
    for c in &classes {
        let counts = c.signature().counts().map(|n| n.to_string()).join(" ");
        let orbits = c.sub_orbits();
        let sizes = orbits
            .iter()
            .map(|o| o.len().to_string())
            .collect::<Vec<_>>()
            .join("+");
        let orbit_cell = if orbits.len() > 1 {
            let reps: Vec<String> = orbits.iter().map(|o| o[0].to_string()).collect();
            format!("{sizes}: {}", reps.join(" "))
        } else {
            sizes
        };
        table.push(vec![
            c.label().to_string().into(),
            (c.members().len() as u32).into(),
            counts.into(),
            orbit_cell.into(),
        ]);
    }
    Ok(table)
}

/// Average ranks, so tied values share the mean of the positions they span.
fn fractional_ranks(xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|x| {
            let below = xs.iter().filter(|y| *y < x).count() as f64;
            let equal = xs.iter().filter(|y| *y == x).count() as f64;
            below + (equal + 1.0) / 2.0
        })
        .collect()
}

/// Spearman's rho over paired ranks; `None` when either side is constant.
pub fn spearman(pairs: &[(u32, u32)]) -> Option<f64> {
    let a = fractional_ranks(&pairs.iter().map(|p| p.0 as f64).collect::<Vec<_>>());
    let b = fractional_ranks(&pairs.iter().map(|p| p.1 as f64).collect::<Vec<_>>());
    let n = a.len() as f64;
    let (ma, mb) = (a.iter().sum::<f64>() / n, b.iter().sum::<f64>() / n);
    let cov: f64 = a.iter().zip(&b).map(|(x, y)| (x - ma) * (y - mb)).sum();
    let va: f64 = a.iter().map(|x| (x - ma).powi(2)).sum();
    let vb: f64 = b.iter().map(|y| (y - mb).powi(2)).sum();
    (va > 0.0 && vb > 0.0).then(|| cov / (va * vb).sqrt())
}

/// Triad ranks under `kind` set against the listener rankings.
pub fn compare_table(scale: &Scale, kind: MeasureKind, voicing: Voicing) -> Table {
    let classes = equivalence_classes(3).expect("3 is a valid chord size");
    let ranked = rank_classes(scale, &classes, kind, voicing);
    let cmp = compare_to_empirical(&ranked);
    let empirical = EmpiricalReference::ranked_table();
    let reference = EmpiricalReference::averaged_harmonicity_table();

    let title = format!("triad ranks, empirical vs {kind}, scale {}", scale.name());
    let mut table = Table::new(title, label_header("", &empirical.columns));
    table.push(rank_row("empirical", &empirical.ranks));
    let measure: Vec<Option<u32>> = cmp.rows.iter().map(|r| r.measure).collect();
    table.push(rank_row(kind.name(), &measure));
    table.push(rank_row("avg harm (reference)", &reference.ranks));
    let agrees = cmp.rows.iter().map(|r| match r.agrees {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => Cell::Missing,
    });
    table.push(std::iter::once("agrees".into()).chain(agrees).collect());

    table.note(format!(
        "agreement: {} of {} classes",
        cmp.agreements(),
        cmp.compared()
    ));
    if let Some(rho) = spearman(&cmp.rank_pairs()) {
        table.note(format!(
            "extra, not a reference figure: Spearman rank correlation {rho:.3}"
        ));
    }
    table.note("the avg harm row is quoted for display and not recomputed");
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use symharm_core::ScaleId;

    #[test]
    fn spearman_extremes() {
        assert_eq!(spearman(&[(1, 1), (2, 2), (3, 3)]), Some(1.0));
        assert_eq!(spearman(&[(1, 3), (2, 2), (3, 1)]), Some(-1.0));
        assert_eq!(spearman(&[(1, 1), (2, 1)]), None);
        // tied pair shares rank 1.5
        let rho = spearman(&[(1, 1), (2, 1), (3, 2)]).unwrap();
        assert!((rho - 0.866_025_403_784_438_6).abs() < 1e-12);
    }

    #[test]
    fn notes_report_rejects_bad_input() {
        let a = Scale::builtin(ScaleId::A);
        assert!(notes_report(&a, &[0], Voicing::Closed).is_err());
        assert!(notes_report(&a, &[4, 0, 7], Voicing::Closed).is_err());
        assert!(notes_report(&a, &[0, 12], Voicing::Closed).is_err());
        assert!(notes_report(&a, &[0, 4, 16], Voicing::Closed).is_err());
        assert!(notes_report(&a, &[0, 4, 19], Voicing::Closed).is_ok());
    }
}
