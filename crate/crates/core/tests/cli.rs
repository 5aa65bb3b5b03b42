use rational_gauge::cli::{run_with, Report};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rational-gauge").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn compute_text() {
    let (code, out, err) = run(&[
        "compute", "--group", "SU(2)", "--b2", "2", "--space", "b-star", "--series", "6",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("polynomial algebra, 3 generators"), "{out}");
    assert!(out.contains("1/((1-t^2)^2(1-t^4))"), "{out}");
    // b_6 of Q[x1, x2, y]: x^3 monomials (4) plus x·y (2)
    assert!(out.contains("       6  6\n"), "{out}");
}

#[test]
fn compute_json_round_trips() {
    let (code, out, _) = run(&[
        "compute", "--group", "E8", "--b2", "3", "--space", "gauge", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.algebra.total, 39);
    assert_eq!(report.group.canonical, "E8");
    assert!(report.caveats.is_empty());
}

#[test]
fn tables_json_is_an_array_of_eight() {
    let (code, out, _) = run(&[
        "tables", "--group", "Sp(2)xG2", "--b2", "1", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let reports: Vec<Report> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| !r.caveats.is_empty()));
}

#[test]
fn latex_output() {
    let (code, out, _) = run(&[
        "compute", "--group", "SU(2)", "--b2", "4", "--space", "b-tilde", "--format", "latex",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\\mathbb{Q}[x_1,\\ldots ,x_{b_2}]"), "{out}");
}

#[test]
fn check_flag_reports_to_stderr() {
    let (code, out, err) = run(&[
        "compute", "--group", "E7", "--b2", "2", "--space", "bg", "--check",
    ]);
    assert_eq!(code, 0);
    assert!(
        err.starts_with("checks: ") && err.contains("passed"),
        "{err}"
    );
    assert!(!out.contains("checks"));
}

#[test]
fn unsupported_groups_exit_1() {
    for g in ["U(3)", "SO(5)", "PSU(3)", "SU(2)/Z2"] {
        let (code, out, err) = run(&["compute", "--group", g, "--b2", "1", "--space", "gauge"]);
        assert_eq!(code, 1, "{g}");
        assert!(out.is_empty());
        assert!(err.contains("simply connected"), "{g}: {err}");
    }
}

#[test]
fn bad_arguments_exit_1() {
    for args in [
        &["compute", "--group", "Foo", "--b2", "1", "--space", "gauge"][..],
        &[
            "compute", "--group", "SU(2)", "--b2", "-1", "--space", "gauge",
        ],
        &[
            "compute", "--group", "SU(2)", "--b2", "1", "--space", "nope",
        ],
        &[
            "compute", "--group", "SU(1)", "--b2", "1", "--space", "gauge",
        ],
        &[
            "compute", "--group", "SU(2)", "--b2", "1", "--space", "gauge", "--series", "100001",
        ],
        &["tables", "--b2", "1"],
        &[],
    ] {
        let (code, out, _) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"], &["compute", "--help"]] {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(!out.is_empty());
    }
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_rational-gauge");
    let status = |args: &[&str]| {
        std::process::Command::new(exe)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(
        status(&["compute", "--group", "SU(3)", "--b2", "1", "--space", "b-star"]),
        Some(0)
    );
    assert_eq!(
        status(&["compute", "--group", "U(3)", "--b2", "1", "--space", "b-star"]),
        Some(1)
    );
}
