//! Golden-file tests: run the real binary and compare stdout byte-for-byte.

use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_evsym"))
        .args(args)
        .env_remove("EVSYM_CACHE_DIR")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        output.status.code().expect("exit code"),
    )
}

fn golden(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("golden {path:?}: {e}"))
}

fn check(name: &str, args: &[&str], want_code: i32) {
    let (stdout, code) = run(args);
    let want = golden(name);
    assert_eq!(stdout, want, "stdout drifted from golden {name}");
    assert_eq!(code, want_code, "exit code for {args:?}");
}

#[test]
fn theorem_worked_example() {
    check("theorem_21.txt", &["theorem", "2,1"], 0);
}

#[test]
fn partitions_even_rows() {
    check(
        "partitions_10_even_rows_3.txt",
        &["partitions", "10", "--even-rows", "3"],
        0,
    );
}

#[test]
fn partitions_even_cols() {
    check(
        "partitions_10_even_cols_2.txt",
        &["partitions", "10", "--even-cols", "2"],
        0,
    );
}

#[test]
fn partitions_of_zero() {
    check("partitions_0.txt", &["partitions", "0"], 0);
}

#[test]
fn ev_with_multiplicities() {
    check("ev_221.txt", &["ev", "2,2,1"], 0);
}

#[test]
fn ev_single_part() {
    check("ev_5.txt", &["ev", "5"], 0);
}

#[test]
fn conjecture_table_rendering() {
    check(
        "conjecture_221_n1.txt",
        &["conjecture", "2,2,1", "--N", "1"],
        0,
    );
}

#[test]
fn conjecture_csv_rendering() {
    check(
        "conjecture_221_n1.csv",
        &["conjecture", "2,2,1", "--N", "1", "--csv"],
        0,
    );
}

#[test]
fn chartable_published_slice() {
    // The full 15-row published layout: explicit row list (two of the rows
    // sit outside both restricted families), Ev columns in ascending order.
    check(
        "chartable_sigma10.txt",
        &[
            "chartable",
            "10",
            "--rows",
            "10;8,2;6,4;4,4,2;6,2,2;4,2,2,2;2,2,2,2,2;5,5;4,4,1,1;3,3,2,2;3,3,1,1,1,1;2,2,2,2,1,1;2,2,1,1,1,1,1,1;2,1,1,1,1,1,1,1,1;1,1,1,1,1,1,1,1,1,1",
            "--cols",
            "ev:2,2,1",
        ],
        0,
    );
}

#[test]
fn character_both_methods() {
    check(
        "character_both.txt",
        &["character", "8,2", "2,2,2,2,2", "--method", "both"],
        0,
    );
}

#[test]
fn kostka_with_inverse() {
    check("kostka_3_inverse.txt", &["kostka", "3", "--inverse"], 0);
}
