use std::process::{Command, Output};

fn qmf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_csv() {
    let o = qmf(&["expand", "Q2", "--order", "8", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "0,1\n1,24\n2,24\n3,96\n4,24\n5,144\n6,96\n7,192\n"
    );
}

#[test]
fn expand_bfile_with_pole() {
    let o = qmf(&["expand", "j3", "--order", "5", "--format", "bfile"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("-1 1\n0 42\n1 783\n"));
}

#[test]
fn expand_json() {
    let o = qmf(&["expand", "Delta", "--order", "3", "--format", "json"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"valuation":1,"precision":3,"coeffs":["1","-24"]}"#
    );
}

#[test]
fn expand_text() {
    let o = qmf(&["expand", "E2", "--order", "3"]);
    assert_eq!(stdout(&o), "1 - 24q - 72q^2 + O(q^3)\n");
}

#[test]
fn unknown_name_exits_2() {
    assert_eq!(qmf(&["expand", "E8"]).status.code(), Some(2));
    assert_eq!(qmf(&["scan", "nope", "--upto", "5"]).status.code(), Some(2));
    assert_eq!(qmf(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn tau_values() {
    let o = qmf(&["tau", "--which", "tau2", "--n", "5", "--method", "eta"]);
    assert_eq!(stdout(&o), "tau2(5) = -210\n");
    let o = qmf(&[
        "tau",
        "--which",
        "tau3",
        "--n",
        "7",
        "--method",
        "recursion",
    ]);
    assert_eq!(stdout(&o), "tau3(7) = -40\n");
    let o = qmf(&[
        "tau",
        "--which",
        "tau",
        "--n",
        "1",
        "--method",
        "crosscheck",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("tau(1) = 1\n"));
}

#[test]
fn tau_bfile() {
    let o = qmf(&[
        "tau", "--which", "tau", "--n", "3", "--method", "formula", "--format", "bfile",
    ]);
    assert_eq!(stdout(&o), "1 1\n2 -24\n3 252\n");
}

#[test]
fn scans() {
    for (rule, upto) in [
        ("tau2-mod24", "2000"),
        ("sigma-mod8", "5000"),
        ("tau3-mod3", "2000"),
    ] {
        let o = qmf(&["scan", rule, "--upto", upto]);
        assert!(o.status.success(), "{rule}");
        assert_eq!(stdout(&o), format!("{rule}: no violation up to {upto}\n"));
    }
}

#[test]
fn verify_suites() {
    let o = qmf(&["verify", "sl2", "--order", "0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.matches("[PASS]").count(), 9);
    assert!(!out.contains("[FAIL]"));
    let o = qmf(&["verify", "systems", "--order", "40"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("[PASS]").count(), 4);
    let o = qmf(&["verify", "identities", "--quiet"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn structural_queries() {
    let o = qmf(&["dims", "--p", "2", "--k", "8"]);
    assert!(stdout(&o).contains("dim M_8 = 3\ndim S_8 = 1\n"));
    assert_eq!(
        qmf(&["dims", "--p", "4", "--k", "8"]).status.code(),
        Some(2)
    );
    let o = qmf(&["basis", "--group", "Gamma0_2", "--k", "8"]);
    assert!(stdout(&o).starts_with("M_8(Gamma0_2) basis: Q2^4, Q2^2*R2, R2^2\n"));
    assert_eq!(
        stdout(&qmf(&["sturm", "--group", "Gamma0_2", "--k", "8"])),
        "2\n"
    );
}

#[test]
fn deterministic_output() {
    let args = ["verify", "serre"];
    assert_eq!(qmf(&args).stdout, qmf(&args).stdout);
}
