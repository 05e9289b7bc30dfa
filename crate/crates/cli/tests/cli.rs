use std::process::{Command, Output};

use serde::Deserialize;
use tableau_sign::imbalance::imbalance_table;
use tableau_sign::{ImbalanceRecord, Shape};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tableau-sign"))
        .args(args)
        .env_remove("TABLEAU_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    shape: String,
    imbalance: i64,
    v: usize,
    h: usize,
    d: usize,
    vs: usize,
    hs: usize,
    black: usize,
    white: usize,
}

impl CsvRow {
    fn into_record(self) -> ImbalanceRecord {
        ImbalanceRecord {
            shape: self.shape.parse().unwrap(),
            imbalance: self.imbalance,
            v: self.v,
            h: self.h,
            d: self.d,
            vs: self.vs,
            hs: self.hs,
            black: self.black,
            white: self.white,
        }
    }
}

fn parse_csv(text: &str) -> Vec<ImbalanceRecord> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["shape", "imbalance", "v", "h", "d", "vs", "hs", "black", "white"]);
    reader
        .deserialize::<CsvRow>()
        .map(|row| row.unwrap().into_record())
        .collect()
}

#[test]
fn imbalance_of_fig_shape() {
    let out = run(&["imbalance", "5,4,2,1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let r: ImbalanceRecord = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((r.imbalance, r.v, r.h, r.d, r.vs, r.hs), (-5, 5, 5, 2, 1, 1));
}

#[test]
fn imbalance_of_single_row_and_empty_shape() {
    for shape in ["3", ""] {
        let out = run(&["imbalance", shape, "--format", "csv"]);
        assert_eq!(code(&out), 0);
        let rows = parse_csv(&stdout(&out));
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].imbalance, 1);
        assert_eq!(rows[0].shape, shape.parse::<Shape>().unwrap());
    }
}

#[test]
fn table_three_as_csv() {
    let out = run(&["table", "3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let rows = parse_csv(&stdout(&out));
    let imbalances: Vec<i64> = rows.iter().map(|r| r.imbalance).collect();
    assert_eq!(imbalances, [1, 0, 1]);
}

#[test]
fn table_zero_is_the_empty_shape() {
    let out = run(&["table", "0", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("\"\","));
    let rows = parse_csv(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].shape, Shape::empty());
}

#[test]
fn filtered_table_gives_the_seven_fourling_rows() {
    let out = run(&["table", "12", "--filter", "fb=4,4", "--filter", "vs=1", "--filter", "hs=1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let rows = parse_csv(&stdout(&out));
    let shapes: Vec<String> = rows.iter().map(|r| r.shape.to_string()).collect();
    assert_eq!(shapes, ["(7,5)", "(6,5,1)", "(6,4,1,1)", "(5,5,2)", "(5,4,2,1)", "(4,4,3,1)", "(4,4,2,1,1)"]);
    let imbalances: Vec<i64> = rows.iter().map(|r| r.imbalance).collect();
    assert_eq!(imbalances, [5, 5, 2, 2, -5, -2, -7]);
}

#[test]
fn csv_and_json_round_trip() {
    let expected = imbalance_table(9).unwrap();
    let csv_out = run(&["table", "9", "--format", "csv"]);
    assert_eq!(parse_csv(&stdout(&csv_out)), expected);
    let json_out = run(&["table", "9", "--format", "json"]);
    let parsed: Vec<ImbalanceRecord> = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(parsed, expected);
    let raw: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert!(raw[0]["shape"].is_array());
}

#[test]
fn output_is_independent_of_jobs() {
    let one = run(&["verify", "all", "0..8", "--format", "json", "--jobs", "1"]);
    let many = run(&["verify", "all", "0..8", "--format", "json", "--jobs", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&many));
    let t1 = run(&["table", "10", "--jobs", "1"]);
    let t4 = run(&["table", "10", "--jobs", "4"]);
    assert_eq!(stdout(&t1), stdout(&t4));
}

#[test]
fn rs_of_transposition() {
    let out = run(&["rs", "2,1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["shape"], serde_json::json!([1, 1]));
    assert_eq!(v["sign_pi"], -1);
    assert_eq!((v["sign_p"].clone(), v["sign_q"].clone(), v["v"].clone()), (1.into(), 1.into(), 1.into()));
    assert_eq!(v["relation_holds"], true);
    let plain = stdout(&run(&["rs", "2,1"]));
    assert!(plain.contains("-1 = (-1)^1 * (1) * (1)  holds"), "{plain}");
}

#[test]
fn rs_of_identity_and_three_cycle() {
    let out = run(&["rs", "1,2,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["shape"], serde_json::json!([3]));
    assert_eq!(v["sign_pi"], 1);
    let out = run(&["rs", "3,1,2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["relation_holds"], true);
}

#[test]
fn verify_sweeps_pass() {
    for (claim, range) in [("total", "0..14"), ("sigma", "0..12"), ("all", "0..10")] {
        let out = run(&["verify", claim, range, "--format", "csv"]);
        assert_eq!(code(&out), 0, "{claim} {range}");
        let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
        let statuses: Vec<String> = reader.records().map(|r| r.unwrap()[4].to_string()).collect();
        assert!(!statuses.is_empty());
        assert!(statuses.iter().all(|s| s == "PASS" || s == "NOTE"), "{claim}");
    }
}

#[test]
fn verify_total_shows_powers_of_two() {
    let out = run(&["verify", "total", "0..14", "--format", "json"]);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 15);
    for (n, r) in reports.iter().enumerate() {
        assert_eq!(r["expected"], 1i64 << (n / 2));
        assert_eq!(r["pass"], true);
        assert!(r.get("elapsed").is_none());
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["imbalance", "1,2"][..],
        &["imbalance", "a,b"],
        &["rs", "1,1"],
        &["rs", "0,1"],
        &["verify", "nonsense", "0..3"],
        &["verify", "total", "5..2"],
        &["verify", "total", "zero"],
        &["table", "4", "--filter", "x=1"],
        &["table", "4", "--filter", "fb=1,2"],
        &["table", "4", "--format", "xml"],
        &["table", "--jobs", "0", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn max_n_cap_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_tableau-sign"))
        .args(["verify", "total", "0..6"])
        .env("TABLEAU_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert_eq!(code(&run(&["table", "19"])), 2);
}
