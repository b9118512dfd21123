use std::path::Path;
use std::process::{Command, Output};

fn softsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softsim"))
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = softsim(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const T: &str = "fixtures/triples";

fn fx(name: &str) -> String {
    format!("{T}/{name}.ss")
}

#[test]
fn exact_distance_values() {
    let cases = [
        ("l", "hamming_f", "hamming_g", "5/4"),
        ("d", "hamming_f", "hamming_h", "10"),
        ("p", "cardinality_f", "cardinality_h", "19/12"),
        ("c", "cardinality_zero_a", "cardinality_zero_b", "0"),
        ("e", "superiority_f", "superiority_h", "1+sqrt(3)"),
        ("Es", "superiority_g", "superiority_h", "sqrt(3)/3"),
    ];
    for (m, a, b, want) in cases {
        let got = stdout_of(&[
            "dist",
            "--measure",
            m,
            "--a",
            &fx(a),
            "--b",
            &fx(b),
            "--exact",
        ]);
        assert_eq!(got, format!("{want}\n"), "{m} {a} {b}");
    }
}

#[test]
fn decimal_outputs() {
    let f = fx("hamming_f");
    assert_eq!(
        stdout_of(&["dist", "--measure", "d", "--a", &f, "--b", &f]),
        "0\n"
    );
    let abc = "fixtures/financial/abc.ss";
    let model = "fixtures/financial/model.ss";
    assert_eq!(
        stdout_of(&["sim", "--measure", "koczy-e", "--a", abc, "--b", model]),
        "0.150472\n"
    );
    assert_eq!(
        stdout_of(&[
            "sim",
            "--measure",
            "koczy-e",
            "--a",
            abc,
            "--b",
            model,
            "--exact"
        ]),
        "1/(4+sqrt(7))\n"
    );
    assert_eq!(
        stdout_of(&["sim", "--measure", "koczy-e", "--a", abc, "--b", model, "--output", "structured"]),
        "{\"defined\":true,\"measure\":\"koczy-e\",\"value_decimal\":\"0.150472\",\"value_exact\":\"1/(4+sqrt(7))\"}\n"
    );
}

#[test]
fn matrix_display() {
    let got = stdout_of(&[
        "dist",
        "--measure",
        "Ds",
        "--a",
        &fx("superiority_f"),
        "--b",
        &fx("superiority_h"),
        "--show-matrix",
        "--exact",
    ]);
    assert_eq!(
        got,
        "a:\ne1 0 0 0 0\ne2 0 0 0 0\ne3 0 0 0 0\nb:\ne1 0 0 0 0\ne2 0 1 1 1\ne3 0 0 0 0\n1\n"
    );
}

#[test]
fn complement_conventions() {
    let g = fx("superiority_g");
    let base = [
        "dist",
        "--measure",
        "d",
        "--a",
        g.as_str(),
        "--complement",
        "--exact",
    ];
    assert_eq!(stdout_of(&base), "4\n");
    let mut negated = base.to_vec();
    negated.extend(["--complement-convention", "negated"]);
    // two domain attributes apart, no shared attributes
    assert_eq!(stdout_of(&negated), "2\n");
}

#[test]
fn demo_financial_table() {
    let got = stdout_of(&["demo-financial"]);
    assert!(got.ends_with(
        "profile  model              measure  value     exact          significant\n\
         ABC      liquidity-problem  koczy-e  0.150472  1/(4+sqrt(7))  no\n\
         XYZ      liquidity-problem  koczy-e  0.500000  1/2            yes\n"
    ));
    let structured = stdout_of(&["demo-financial", "--output", "structured"]);
    let lines: Vec<&str> = structured.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"significant\":false"));
    assert!(lines[1].contains("\"significant\":true"));
}

#[test]
fn diagnose_matches_demo() {
    let got = stdout_of(&[
        "diagnose",
        "--model",
        "fixtures/financial/model.ss",
        "fixtures/financial/abc.ss",
        "fixtures/financial/xyz.ss",
        "--output",
        "structured",
    ]);
    assert_eq!(
        got,
        stdout_of(&["demo-financial", "--output", "structured"])
    );
}

#[test]
fn exit_codes() {
    let f = fx("hamming_f");
    let code = |args: &[&str]| softsim(args).status.code();
    assert_eq!(
        code(&["dist", "--measure", "koczy-e", "--a", &f, "--b", &f]),
        Some(2)
    );
    assert_eq!(
        code(&["dist", "--measure", "cosine", "--a", &f, "--b", &f]),
        Some(2)
    );
    assert_eq!(
        code(&["dist", "--measure", "d", "--a", "nope.ss", "--b", &f]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "dist",
            "--measure",
            "d",
            "--a",
            &f,
            "--b",
            &fx("superiority_f")
        ]),
        Some(1)
    );
    assert_eq!(
        code(&[
            "sim",
            "--measure",
            "williams-e",
            "--a",
            &f,
            "--b",
            &f,
            "--steepness",
            "0"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["diagnose", "--model", &f, &f, "--threshold", "1"]),
        Some(2)
    );
    assert_eq!(code(&["frobnicate"]), Some(2));

    // the null soft set against itself: ms-matching is 0/0
    let dir = std::env::temp_dir().join(format!("softsim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let blank = dir.join("blank.ss");
    std::fs::write(
        &blank,
        r#"{"universe":["a"],"attributes":["e1"],"map":{"e1":[]}}"#,
    )
    .unwrap();
    let blank = blank.to_str().unwrap();
    let out = softsim(&[
        "sim",
        "--measure",
        "ms-matching",
        "--a",
        blank,
        "--b",
        blank,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("undefined"));
    let void = dir.join("void.ss");
    std::fs::write(&void, r#"{"universe":["a"],"attributes":["e1"],"map":{}}"#).unwrap();
    assert_eq!(
        code(&[
            "dist",
            "--measure",
            "d",
            "--a",
            void.to_str().unwrap(),
            "--b",
            blank
        ]),
        Some(1)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_reports_are_seeded() {
    let a = stdout_of(&[
        "classify",
        "--measure",
        "c",
        "--seed",
        "4",
        "--trials",
        "50",
    ]);
    assert_eq!(
        a,
        stdout_of(&[
            "classify",
            "--measure",
            "c",
            "--seed",
            "4",
            "--trials",
            "50"
        ])
    );
    assert!(a.starts_with("measure c seed 4 trials 50\n"));
    assert!(a.contains("M5 distance zero only for equal sets: violated"));
    let s = stdout_of(&["check-sim-axioms", "--measure", "koczy-q", "--trials", "50"]);
    assert!(s.contains("s3 symmetry: held-on-sample"));
}
