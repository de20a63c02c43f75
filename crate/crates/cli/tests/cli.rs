use std::process::{Command, Output};

use qdisc_core::exact::{rat, Poly};
use qdisc_core::verify::discriminant_by_resultant;
use qdisc_core::QuadrinomialParams;
use serde_json::Value;

fn qdisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdisc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn disc_prints_coefficients_and_values() {
    let o = qdisc(&["disc", "--n", "3", "--a", "0", "--b", "-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0,0,-27,0,4");
    assert_eq!(
        stdout(&qdisc(&["disc", "--n", "4", "--a", "0", "--b", "0"])).trim(),
        "0"
    );
    assert_eq!(
        stdout(&qdisc(&[
            "disc", "--n", "5", "--a", "0", "--b", "1", "--t", "1"
        ]))
        .trim(),
        "3233"
    );
}

#[test]
fn disc_output_reparses_to_the_same_polynomial() {
    for (n, a, b) in [(5, "3/2", "-7/4"), (8, "-2", "1/3"), (11, "1", "1")] {
        let text = stdout(&qdisc(&["disc", "--n", &n.to_string(), "--a", a, "--b", b]));
        let parsed = Poly::parse(text.trim(), 't').unwrap();
        let p = QuadrinomialParams::new(n, a.parse().unwrap(), b.parse().unwrap()).unwrap();
        assert_eq!(
            parsed,
            discriminant_by_resultant(&p.f_symbolic())
                .unwrap()
                .with_var('t')
        );
    }
}

#[test]
fn disc_rejects_bad_input_with_usage_code() {
    assert_eq!(
        qdisc(&["disc", "--n", "3", "--a", "x/2", "--b", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qdisc(&["disc", "--n", "2", "--a", "1", "--b", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qdisc(&["disc", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn roots_reports_counts_and_intervals() {
    let v: Value = serde_json::from_str(&stdout(&qdisc(&["roots", "--poly", "1,0,1"]))).unwrap();
    assert_eq!(v["count"], 0);
    assert_eq!(v["intervals"].as_array().unwrap().len(), 0);

    let v: Value = serde_json::from_str(&stdout(&qdisc(&["roots", "--poly", "0,-1,0,1"]))).unwrap();
    assert_eq!(v["count"], 3);

    let v: Value =
        serde_json::from_str(&stdout(&qdisc(&["roots", "--poly", "1,1,1,0,0,1"]))).unwrap();
    assert_eq!(v["count"], 1);
    let iv = &v["intervals"][0];
    let lo: num::BigRational = iv["lo"].as_str().unwrap().parse().unwrap();
    let hi: num::BigRational = iv["hi"].as_str().unwrap().parse().unwrap();
    assert!(lo < rat(-1) && rat(-1) <= hi);

    assert_eq!(qdisc(&["roots", "--poly", "0,0"]).status.code(), Some(2));
}

#[test]
fn verify_reports_per_degree_and_summary() {
    let o = qdisc(&["verify", "--n-max", "8", "--trials", "20", "--seed", "42"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert_eq!(out.lines().last().unwrap(), "OK 6/6");
    assert_eq!(
        out,
        stdout(&qdisc(&[
            "verify", "--n-max", "8", "--trials", "20", "--seed", "42"
        ]))
    );

    let o = qdisc(&["verify", "--n-max", "3", "--trials", "1", "--seed", "1"]);
    assert!(o.status.success());
    assert_eq!(
        qdisc(&["verify", "--n-max", "2", "--trials", "1", "--seed", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_writes_sorted_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = qdisc(&[
        "scan",
        "--n",
        "5",
        "--range",
        "1",
        "--t-range",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,a,b,t,disc,abs_disc,n_real_roots"));
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 8);
    let row = rows
        .iter()
        .find(|r| r[1] == "1" && r[2] == "1" && r[3] == "1")
        .unwrap();
    let p = QuadrinomialParams::from_ints(5, 1, 1).unwrap();
    let expected = discriminant_by_resultant(&p.f_at(&rat(1))).unwrap();
    assert_eq!(row[4], expected.to_string());
    let abs: Vec<i64> = rows.iter().map(|r| r[5].parse().unwrap()).collect();
    assert!(abs.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn scan_json_uses_string_integers_and_zero_last() {
    let o = qdisc(&[
        "scan",
        "--n",
        "4",
        "--range",
        "2",
        "--t-range",
        "2",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 24 * 2);
    assert!(recs
        .iter()
        .all(|r| r["disc"].is_string() && r["abs_disc"].is_string()));
    let zero: Vec<bool> = recs.iter().map(|r| r["abs_disc"] == "0").collect();
    let first = zero.iter().position(|z| *z).unwrap_or(zero.len());
    assert!(zero[first..].iter().all(|z| *z));
}

#[test]
fn scan_output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qdisc"))
            .args(["scan", "--n", "6", "--range", "2", "--t-range", "3"])
            .env("QDISC_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("3"));
    assert_eq!(one, run("16"));
}

#[test]
fn scan_rejects_bad_arguments() {
    assert_eq!(
        qdisc(&["scan", "--n", "5", "--range", "0", "--t-range", "1"])
            .status
            .code(),
        Some(2)
    );
    let o = qdisc(&[
        "scan",
        "--n",
        "5",
        "--range",
        "1",
        "--t-range",
        "1",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
