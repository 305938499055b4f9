use proptest::prelude::*;
use symharm::{parse_scale, serialize_scale, ScaleFileError};
use symharm_core::{Rational, Scale, ScaleId};

/// Eleven distinct ratios strictly between 1 and 2, sorted, after 1/1.
fn scale_strategy() -> impl Strategy<Value = Scale> {
    let name = "[A-Za-z][A-Za-z0-9 _.-]{0,20}[A-Za-z0-9]";
    let ratio = (2u64..500)
        .prop_flat_map(|q| (q + 1..2 * q).prop_map(move |p| Rational::new(p, q).unwrap()));
    (name, prop::collection::btree_set(ratio, 11)).prop_map(|(name, set)| {
        let ratios = std::iter::once(Rational::one()).chain(set).collect();
        Scale::new(name, ratios).unwrap()
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(scale in scale_strategy()) {
        prop_assert_eq!(parse_scale(&serialize_scale(&scale)).unwrap(), scale);
    }

    #[test]
    fn colon_notation_reads_the_same(scale in scale_strategy()) {
        let text = serialize_scale(&scale).replace('/', ":");
        prop_assert_eq!(parse_scale(&text).unwrap(), scale);
    }
}

#[test]
fn every_builtin_round_trips() {
    for id in ScaleId::ALL {
        let s = Scale::builtin(id);
        assert_eq!(parse_scale(&serialize_scale(&s)).unwrap(), s);
    }
}

#[test]
fn name_may_start_with_a_digit_once_prefixed() {
    let s = Scale::builtin(ScaleId::D).with_name("5-limit");
    let text = serialize_scale(&s);
    assert!(text.starts_with("name: 5-limit\n"));
    assert_eq!(parse_scale(&text).unwrap().name(), "5-limit");
}

#[test]
fn missing_and_extra_tokens() {
    let twelve = "1/1 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8";
    assert_eq!(
        parse_scale(&format!("{twelve} 31/16")),
        Err(ScaleFileError::Arity(13))
    );
    assert_eq!(parse_scale(""), Err(ScaleFileError::Arity(0)));
    assert_eq!(parse_scale("only a name\n"), Err(ScaleFileError::Arity(0)));
}

#[test]
fn bottom_note_must_be_unison() {
    let err = parse_scale("17/16 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8").unwrap_err();
    assert!(
        matches!(err, ScaleFileError::Invalid { index: 0, .. }),
        "{err}"
    );
}
