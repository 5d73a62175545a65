//! End to end tests that drive the compiled binary and pin down the
//! exit code contract: 0 when every requested check passes, 1 when a
//! check fails, 2 on malformed input.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zornoct"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn suite_exit_codes_follow_check_outcomes() {
    let (code, stdout, _) = run(&["suite", "--filter", "zorn-split-iso"]);
    assert_eq!(code, 0, "passing check should exit 0:\n{stdout}");
    assert!(stdout.contains("1 passed, 0 failed"));

    let (code, stdout, _) = run(&["suite", "--filter", "census-trace-zero-locus"]);
    assert_eq!(code, 1, "failing check should exit 1:\n{stdout}");
    assert!(stdout.contains("702"));
    assert!(stdout.contains("756"));

    let (code, stdout, _) = run(&["suite", "--filter", "no-such-check"]);
    assert_eq!(code, 0, "empty run has nothing failing:\n{stdout}");
    assert!(stdout.contains("0 checks"));
}

#[test]
fn seeded_suite_json_is_byte_identical() {
    let args = ["suite", "--filter", "oct-*", "--json", "--seed", "9"];
    let (c1, first, _) = run(&args);
    let (c2, second, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(first, second);
    assert!(first.contains("\"seed\": 9"));
}

#[test]
fn census_json_reports_all_match() {
    let (code, stdout, _) = run(&["census", "--q", "2,3", "--report", "json"]);
    assert_eq!(code, 0, "{stdout}");
    let reports: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let list = reports.as_array().unwrap();
    assert_eq!(list.len(), 14);
    for r in list {
        assert_eq!(r["match"], serde_json::Value::Bool(true), "{r}");
        assert_eq!(r["observed"], r["predicted"], "{r}");
    }
}

#[test]
fn mk_build_reports_a_covering_system() {
    let (code, stdout, _) = run(&[
        "mk", "build", "--f", "x^3+x+1", "--q", "2", "--a", "1", "--check-cover",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("degrees     = [3, 9, 27, 81]"));
    assert!(stdout.contains("covered: true"));
}

#[test]
fn suslin_determinant_matches_the_squared_pairing() {
    let ring = r#"{"base":{"kind":"Z"},"kind":"poly","vars":["x","y","z","a","b","c"]}"#;
    let (code, stdout, _) = run(&["suslin", "--v", "x,y,z", "--w", "a,b,c", "--ring", ring]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("match: true"));
}

#[test]
fn row_witness_pairing_reduces_to_one() {
    let (code, stdout, _) = run(&["row-witness", "--n", "3", "--field", "F5"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("pairing reduces to 1: true"));
}

#[test]
fn malformed_input_exits_two() {
    let bad_prime = r#"{"m1":["1","0","0","0"],"m2":["0","0","0","0"],"ring":{"kind":"Fp","p":4}}"#;
    let (code, _, stderr) = run(&["oct", "norm", "--u", bad_prime]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not prime"));

    let (code, _, stderr) = run(&["oct", "norm", "--u", "not json"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"));
}

#[test]
fn octonion_conjugation_round_trips_through_json() {
    let u = r#"{"m1":["2","-1","0","5"],"m2":["0","1","3","0"],"ring":{"kind":"Z"}}"#;
    let (code, once, _) = run(&["--json", "oct", "conj", "--u", u]);
    assert_eq!(code, 0);
    let (code, twice, _) = run(&["--json", "oct", "conj", "--u", once.trim()]);
    assert_eq!(code, 0);
    assert_eq!(twice.trim(), u);
}

#[test]
fn zorn_module_membership_is_enforced() {
    let ring = concat!(
        r#"{"base":{"base":{"kind":"Q"},"kind":"poly","#,
        r#""vars":["x1","y1","x2","y2","x3","y3","x4","y4"]},"#,
        r#""kind":"quot","modulus":"x1*y1 + x2*y2 + x3*y3 + x4*y4 - 1"}"#
    );
    let u = format!(
        r#"{{"a1":"0","a2":"0","ring":{ring},"xminus":["0","0","0","0"],"xplus":["1","0","0","0"]}}"#
    );
    let (code, _, stderr) = run(&[
        "zorn", "--row", "x1,x2,x3,x4", "--wit", "y1,y2,y3,y4", "norm", "--u", &u,
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("membership"));

    let member = format!(
        r#"{{"a1":"1","a2":"x1*y1","ring":{ring},"xminus":["0","0","0","0"],"xplus":["0","0","0","0"]}}"#
    );
    let (code, stdout, _) = run(&[
        "zorn", "--row", "x1,x2,x3,x4", "--wit", "y1,y2,y3,y4", "norm", "--u", &member,
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "-x2*y2 - x3*y3 - x4*y4 + 1");
}

#[test]
fn phi_check_confirms_the_automorphism() {
    let (code, stdout, _) = run(&[
        "g2", "phi", "--g", "1,2,0,0,1,0,0,0,1", "--field", "F5", "--check",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("automorphism on 64 basis pairs: ok"));
}
