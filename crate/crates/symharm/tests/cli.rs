use std::io::Write;
use std::process::{Command, Output};

fn symharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symharm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = symharm(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str]) -> String {
    let out = symharm(args);
    assert!(!out.status.success(), "{args:?} should fail");
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    err
}

fn csv_row<'a>(csv: &'a str, label: &str) -> Vec<&'a str> {
    let line = csv
        .lines()
        .find(|l| l.starts_with(&format!("{label},")))
        .unwrap_or_else(|| panic!("{label}"));
    line.split(',').skip(1).collect()
}

#[test]
fn scales_lists_five_rows_of_twelve() {
    let csv = stdout(&["scales", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 6);
    assert_eq!(csv_row(&csv, "E")[6], "729/512");
    assert_eq!(csv_row(&csv, "B")[10], "7/4");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["scales", "--format", "json"])).unwrap();
    let rows = json[0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0][2], "16/15");
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 13));
}

#[test]
fn scales_appends_a_scale_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "name: septimal\n1:1 15:14 8:7 6:5 5:4 4:3 7:5 3:2 8:5 5:3 7:4 15:8"
    )
    .unwrap();
    let csv = stdout(&[
        "scales",
        "--format",
        "csv",
        "--scale-file",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(csv.lines().count(), 7);
    assert_eq!(csv_row(&csv, "septimal")[6], "7/5");
}

#[test]
fn interval_tables() {
    let a = stdout(&["intervals", "--format", "csv"]);
    assert_eq!(
        csv_row(&a, "h"),
        ["120", "72", "15", "20", "6", "1440", "6", "20", "15", "72", "120"]
    );
    let e = stdout(&["intervals", "--scale", "E", "--format", "csv"]);
    assert_eq!(csv_row(&e, "h")[5], "373248");
    for format in ["md", "csv", "json"] {
        let c = stdout(&["intervals", "--scale", "C", "--format", format]);
        let d = stdout(&["intervals", "--scale", "D", "--format", format]);
        assert_eq!(c, d);
    }
    let all = stdout(&["intervals", "--all-scales", "--format", "csv"]);
    assert_eq!(csv_row(&all, "C"), csv_row(&all, "D"));
    assert_eq!(
        csv_row(&all, "B"),
        ["120", "28", "15", "20", "6", "88", "6", "20", "15", "28", "120"]
    );
}

#[test]
fn triad_ranking_for_kepler() {
    let csv = stdout(&[
        "rank",
        "--scale",
        "A",
        "-k",
        "3",
        "--measure",
        "symm",
        "--format",
        "csv",
    ]);
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        ",\"(1,2)\",\"(1,3)\",\"(1,4)\",\"(1,5)\",\"(1,6)\",\"(2,4)\",\"(2,5)\",\"(2,6)\",\"(2,7)\",\"(3,6)\",\"(3,7)\",\"(4,8)\""
    );
    let md = stdout(&["rank", "--scale", "A"]);
    assert!(md.contains("| symm | 1036.8 | 129.6 | 36 | 14.4 | 1036.8 | 103.68 | 6.48 | 2073.6 | 2.592 | 324 | 1.8 | 8 |"), "{md}");
    assert!(
        md.contains("| rank | 10 | 8 | 6 | 5 | 10 | 7 | 3 | 12 | 2 | 9 | 1 | 4 |"),
        "{md}"
    );
}

#[test]
fn exact_integers_in_serialized_output() {
    let csv = stdout(&["rank", "--scale", "A", "--format", "csv"]);
    assert!(csv.contains(",1036800,"), "{csv}");
    let json = stdout(&["rank", "--scale", "A", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["rows"][0][11], 1800);
}

#[test]
fn four_note_threshold_table() {
    let csv = stdout(&[
        "rank",
        "--scale",
        "A",
        "-k",
        "4",
        "--measure",
        "symm",
        "--threshold",
        "100000000",
        "--format",
        "csv",
    ]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0], "\"(2,5,9)\",11664000,1");
    assert!(rows
        .iter()
        .all(|r| r.split(',').nth_back(1).unwrap().parse::<u64>().unwrap() < 100_000_000));
    let md = stdout(&["rank", "-k", "4", "--threshold", "100000000"]);
    assert!(md.contains("| (2,5,9) | 11.7 | 1 |"), "{md}");
}

#[test]
fn averaged_periodicity_ranks() {
    let csv = stdout(&[
        "rank",
        "--scale",
        "A",
        "-k",
        "3",
        "--measure",
        "stolzenburg-avg",
        "--format",
        "csv",
    ]);
    let values = csv_row(&csv, "stolzenburg-avg");
    assert_eq!(values.len(), 12);
    assert!(values.iter().all(|v| v.contains('/')));
    assert_eq!(csv_row(&csv, "rank").len(), 12);
}

#[test]
fn chord_reports() {
    let csv = stdout(&["chord", "--notes", "0,4,7", "--format", "csv"]);
    assert_eq!(csv_row(&csv, "symm"), ["1800"]);
    assert_eq!(csv_row(&csv, "stolzenburg"), ["4"]);
    let brefeld: f64 = csv_row(&csv, "brefeld")[0].parse().unwrap();
    assert!((brefeld - 3.91).abs() < 0.005);
    assert!(stdout(&["chord", "--notes", "0,4,7"]).contains("| brefeld | 3.91 |"));

    let csv = stdout(&["chord", "--notes", "3,6,10", "--format", "csv"]);
    assert_eq!(csv_row(&csv, "stolzenburg"), ["1728"]);

    let csv = stdout(&["chord", "--class", "3,7", "--format", "csv"]);
    let members: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(members.len(), 6);
    assert!(members.iter().all(|m| m.ends_with(",1800")));
}

#[test]
fn class_listing_shows_z_related_sub_orbits() {
    let csv = stdout(&["classes", "-k", "4", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 28);
    let z = csv.lines().find(|l| l.starts_with("\"(1,3,7)\"")).unwrap();
    assert!(z.contains("8+8"), "{z}");
    let md = stdout(&["chord", "--class", "1,4,6"]);
    assert!(md.contains("sub-orbit 2"), "{md}");
    assert!(md.contains("belongs to class (1,3,7)"), "{md}");
}

#[test]
fn comparison_with_listener_ranks() {
    let csv = stdout(&["compare", "--scale", "C", "--format", "csv"]);
    assert_eq!(
        csv_row(&csv, "empirical"),
        ["10", "6", "", "7", "8", "", "3", "5", "2", "4", "1", "9"]
    );
    assert_eq!(
        csv_row(&csv, "symm"),
        ["12", "9", "6", "5", "10", "8", "3", "11", "2", "7", "1", "4"]
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["compare", "--scale", "C", "--format", "json"])).unwrap();
    let empirical = &json[0]["rows"][0];
    assert_eq!(empirical[0], "empirical");
    assert!(empirical[3].is_null() && empirical[6].is_null());
    let md = stdout(&["compare", "--scale", "C"]);
    assert!(md.contains("n/a"));
    assert!(md.contains("Spearman"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["rank", "--all-scales"][..],
        &["classes", "-k", "5", "--format", "json"],
        &["compare", "--scale", "E"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn tolerance_regenerates_scale_c() {
    assert_eq!(
        stdout(&["scales", "--tolerance", "0.01"]),
        stdout(&["scales"])
    );
    let coarse = stdout(&["scales", "--tolerance", "1/20", "--format", "csv"]);
    assert_ne!(
        csv_row(&coarse, "C"),
        csv_row(&stdout(&["scales", "--format", "csv"]), "C")
    );
}

#[test]
fn input_errors_exit_nonzero_with_one_line() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "1/1 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8").unwrap();
    let err = fails(&["intervals", "--scale-file", bad.path().to_str().unwrap()]);
    assert!(err.contains("expected 12 ratios"), "{err}");

    assert!(fails(&["chord", "--class", "3,15"]).contains("3,15"));
    assert!(fails(&["rank", "-k", "13"]).contains("13"));
    fails(&["rank", "-k", "1"]);
    fails(&["rank", "--scale", "F"]);
    fails(&["rank", "--measure", "loudness"]);
    fails(&["chord"]);
    fails(&["chord", "--notes", "4,0,7"]);
    fails(&["intervals", "--scale-file", "/nonexistent/scale.txt"]);
    fails(&["intervals", "--scale", "A", "--tolerance", "1/50"]);
}
