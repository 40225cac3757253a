use std::process::{Command, Output};

use circulant_core::SubproblemReport;

fn circ(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circ"))
        .args(args)
        .env("CIRC_THREADS", "2")
        .output()
        .expect("spawn circ")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_totals() {
    for (args, expected) in [
        (
            vec!["enumerate", "--p", "3", "--k", "3", "--mode", "undirected"],
            "928",
        ),
        (
            vec!["enumerate", "--p", "3", "--k", "3", "--mode", "directed"],
            "3728891",
        ),
        (
            vec!["enumerate", "--p", "5", "--k", "2", "--mode", "u"],
            "423",
        ),
        (
            vec!["selfcomp", "--p", "5", "--k", "3", "--mode", "directed"],
            "46116860227224068",
        ),
    ] {
        let out = circ(&args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out).lines().next(), Some(expected), "{args:?}");
    }
}

#[test]
fn enumerate_detail_lists_rows() {
    let out = circ(&[
        "enumerate",
        "--p",
        "5",
        "--k",
        "3",
        "--mode",
        "undirected",
        "--detail",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("A_21 = 92233720411833168"));
    assert!(text.lines().any(|l| l.starts_with("A = ")));
}

#[test]
fn csv_schema() {
    let out = circ(&[
        "--format",
        "csv",
        "enumerate",
        "--p",
        "3",
        "--k",
        "3",
        "--mode",
        "u",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("valency,count"));
    let total: u64 = lines
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 928);
}

#[test]
fn json_round_trip() {
    let out = circ(&[
        "--format",
        "json",
        "enumerate",
        "--p",
        "3",
        "--k",
        "2",
        "--mode",
        "d",
    ]);
    assert!(out.status.success());
    let parsed: SubproblemReport = serde_json::from_slice(&out.stdout).unwrap();
    let direct = circulant_core::enumerate(3, 2, circulant_core::Mode::Directed).unwrap();
    assert_eq!(parsed.combined, direct.combined);
    assert_eq!(parsed.total(), direct.total());
}

#[test]
fn identities_hold() {
    let out = circ(&["identities", "--p", "5", "--mode", "undirected"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("10/10 pass"));
}

#[test]
fn structural_and_oracles_agree() {
    let out = circ(&["structural", "--n", "27"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("g(1) = 928"));

    let out = circ(&["oracle", "criterion", "--p", "3", "--k", "3", "--mode", "u"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("928 (matches analytic)"));

    let out = circ(&["oracle", "brute", "--n", "9", "--mode", "d"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("matches analytic"));

    let out = circ(&["oracle", "appendix-a", "--p", "5", "--mode", "d"]);
    assert!(out.status.success());
}

#[test]
fn invalid_input_fails() {
    let out = circ(&["enumerate", "--p", "2"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("p must be an odd prime"));

    for args in [
        vec!["enumerate", "--p", "3", "--k", "4"],
        vec!["structural", "--n", "25"],
        vec!["oracle", "criterion", "--p", "3", "--k", "3", "--mode", "d"],
        vec!["enumerate", "--p", "3", "--mode", "sideways"],
    ] {
        assert!(!circ(&args).status.success(), "{args:?}");
    }

    let out = Command::new(env!("CARGO_BIN_EXE_circ"))
        .args(["enumerate", "--p", "3"])
        .env("CIRC_THREADS", "zero")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn golden_suite_passes() {
    let out = circ(&["golden", "--skip-long-run"]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
}
