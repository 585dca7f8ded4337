use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn zdgpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdgpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn dipoly_text() {
    let o = zdgpoly(&["dipoly", "75"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x^10 + 4x^21 + x^28\n");
    assert_eq!(stdout(&zdgpoly(&["dipoly", "6"])), "x + x^2\n");
    for engine in ["closed", "compressed", "brute", "auto"] {
        assert_eq!(
            stdout(&zdgpoly(&["dipoly", "15", "--engine", engine])),
            "x^2 + x^4\n",
            "{engine}"
        );
    }
}

#[test]
fn dipoly_prime_exits_2() {
    let o = zdgpoly(&["dipoly", "7"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph is empty"));
}

#[test]
fn dipoly_cap_exits_3() {
    assert_eq!(code(&zdgpoly(&["dipoly", "1000", "--engine", "brute"])), 3);
}

#[test]
fn dipoly_json_feeds_props_and_roots() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("p75.json");
    let o = zdgpoly(&["dipoly", "75", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let json = stdout(&o);
    assert!(json.contains("\"21\": \"4\"") && json.contains("\"engine\": \"compressed\""));
    fs::write(&path, &json).unwrap();
    let p = path.to_str().unwrap();

    let from_file = stdout(&zdgpoly(&["props", "--poly", p]));
    let from_n = stdout(&zdgpoly(&["props", "75"]));
    assert_eq!(from_file, from_n);

    let o = zdgpoly(&["roots", "--poly", p]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distinct real 3 (exact)"));
}

#[test]
fn props_verdicts() {
    let line = |text: &str, key: &str| -> String {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(key))
            .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
            .unwrap()
    };
    let s18 = stdout(&zdgpoly(&["props", "18"]));
    assert_eq!(line(&s18, "unimodal"), "false");
    assert_eq!(line(&s18, "logconcave"), "true");
    assert_eq!(line(&s18, "eta"), "2");

    let s30 = stdout(&zdgpoly(&["props", "30"]));
    assert_eq!(line(&s30, "logconcave"), "false");
    assert!(line(&s30, "logconcave_viol").split(',').any(|j| j == "15"));

    assert_eq!(line(&stdout(&zdgpoly(&["props", "6"])), "unimodal"), "true");
}

#[test]
fn props_json() {
    let o = zdgpoly(&["props", "30", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["logconcave"], false);
    assert!(v["logconcave_violations"]
        .as_array()
        .unwrap()
        .contains(&15.into()));
    for key in ["inc_runs", "dec_runs", "direction_changes", "eta"] {
        assert!(v[key].is_u64(), "{key}");
    }
}

#[test]
fn roots_of_small_examples() {
    let s = stdout(&zdgpoly(&["roots", "15"]));
    let zeros: Vec<&str> = s.lines().filter(|l| l.contains("residual")).collect();
    assert_eq!(zeros.len(), 4);
    assert!(zeros[2].contains("-1.000000000000i") && zeros[3].contains("+1.000000000000i"));

    let o = zdgpoly(&["roots", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.contains("residual"))
            .count(),
        1
    );
}

#[test]
fn roots_csv_and_svg() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("z75.csv");
    let svg = dir.path().join("z75.svg");
    let o = zdgpoly(&[
        "roots",
        "75",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("re,im,residual"));
    assert_eq!(lines.count(), 28);
    let svg_text = fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg") || svg_text.starts_with("<?xml"));
    assert_eq!(
        svg_text.matches("<circle").count(),
        29,
        "28 zeros plus the unit circle"
    );
}

#[test]
fn roots_non_convergence_exits_4_with_csv() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("partial.csv");
    let o = zdgpoly(&[
        "roots",
        "75",
        "--max-iter",
        "1",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 4);
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 29);
}

#[test]
fn verify_examples() {
    let o = zdgpoly(&["verify", "81..81"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(
        s.starts_with("81 MISMATCH") && s.contains("closed=MISMATCH(+x^18)"),
        "{s}"
    );

    let o = zdgpoly(&["verify", "--range", "243..243"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("243 OK"));

    let o = zdgpoly(&["verify", "4..120"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    let flagged: Vec<&str> = s.lines().filter(|l| l.contains("MISMATCH")).collect();
    assert!(
        flagged
            .iter()
            .all(|l| l.contains("[known]") && !l.contains("brute=MISMATCH")),
        "{flagged:?}"
    );
    let ns: Vec<&str> = flagged
        .iter()
        .map(|l| l.split(' ').next().unwrap())
        .collect();
    assert_eq!(
        ns,
        ["16", "64", "81"],
        "the even prime powers p^(2m), m >= 2, up to 120"
    );
}

#[test]
fn verify_rejects_backwards_range() {
    assert_ne!(code(&zdgpoly(&["verify", "10..4"])), 0);
}

#[test]
fn scan_rows_and_determinism() {
    let dir = tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert_eq!(
        code(&zdgpoly(&[
            "scan",
            "--range",
            "2..120",
            "--out",
            a.to_str().unwrap(),
            "--roots"
        ])),
        0
    );
    assert_eq!(
        code(&zdgpoly(&[
            "scan",
            "2..120",
            "--out",
            b.to_str().unwrap(),
            "--roots"
        ])),
        0
    );
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(
        rows[0],
        "n,family,gamma_i,alpha,mis_count,unimodal,logconcave,newton,eta,inc_runs,dec_runs,distinct_real_exact,engine,status"
    );
    assert!(rows.contains(&"9,PrimeSquared,1,1,2,true,true,true,1,1,0,1,compressed,ok"));
    assert!(rows.contains(&"105,PQR,22,44,4,false,false,false,4,4,3,1,compressed,ok"));
    assert!(rows.contains(&"11,EmptyGraph,,,,,,,,,,,,skipped: graph is empty"));
    let ns: Vec<u64> = rows[1..]
        .iter()
        .map(|r| r.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(ns.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["dipoly", "729", "--format", "json"][..],
        &["props", "105"],
        &["roots", "75"],
        &["verify", "60..90"],
    ] {
        assert_eq!(zdgpoly(args).stdout, zdgpoly(args).stdout, "{args:?}");
    }
}
