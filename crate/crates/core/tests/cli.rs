//! The command-line front end, driven in process.

use std::fs;
use std::path::Path;

use conelab::cli::run;
use conelab::fixtures::{fixture, Payload};
use conelab::laws::Law;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn conelab(args: &[&str]) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("conelab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn fixtures_all_verify() {
    let r = conelab(&["fixtures", "verify", "all"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    let r = conelab(&["fixtures", "all"]);
    assert_eq!(r.code, 0);
    assert!(!r.stdout.contains("FAIL"), "{}", r.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["cone", "laws", "--dim", "2", "--samples", "10"][..],
        &["pom", "stress", "--dim", "3", "--samples", "10"],
        &["no-such-command"],
        &["lattice", "laws", "/nonexistent/lattice.json"],
        &["lattice", "laws", "catalogue:nonsense"],
        &["logic", "parse", "A & & B"],
        &["fixtures", "show", "nonsense"],
        &["cone", "op", "frobnicate"],
    ] {
        let r = conelab(args);
        assert_eq!(r.code, 2, "{args:?}: {}{}", r.stdout, r.stderr);
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(conelab(&["--help"]).code, 0);
}

#[test]
fn pom_stress_exit_codes() {
    let r = conelab(&["--json", "pom", "stress", "--dim", "2", "--samples", "200", "--seed", "7"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["violations"], 0);
    // Partial orthomodularity fails for cones in R^3; the violation is reported.
    let r = conelab(&["--json", "pom", "stress", "--dim", "3", "--samples", "1000", "--seed", "7"]);
    assert_eq!(r.code, 1);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["violations"].as_u64().unwrap() > 0);
    assert!(v["first_violation"].is_object(), "{}", r.stdout);
}

#[test]
fn proof_with_pom_rejected_in_omin() {
    let dir = tempfile::tempdir().unwrap();
    let proof = r#"{"calculus":"omin","steps":[
        {"sequent":"A |- A","rule":"axiom-id","premises":[]},
        {"sequent":"A |- A","rule":"rule-pom","premises":[0,0,0,0]}]}"#;
    let f = write(dir.path(), "bad.json", proof);
    let r = conelab(&["logic", "check", &f, "--calculus", "omin"]);
    assert_eq!(r.code, 1);
    let msg = r.stdout + &r.stderr;
    assert!(msg.contains("unknown rule") && msg.contains("step 1"), "{msg}");

    let good = r#"{"calculus":"omin","steps":[
        {"sequent":"A & B |- A","rule":"axiom-and-left","premises":[]},
        {"sequent":"A |- ~~A","rule":"axiom-dne-intro","premises":[]},
        {"sequent":"A & B |- ~~A","rule":"rule-cut","premises":[0,1]}]}"#;
    let f = write(dir.path(), "good.json", good);
    let r = conelab(&["logic", "check", &f, "--calculus", "omin"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn lattice_commands() {
    assert_eq!(conelab(&["lattice", "validate", "catalogue:MC8"]).code, 0);
    assert_eq!(conelab(&["lattice", "laws", "catalogue:boolean(2)"]).code, 0);
    let r = conelab(&["lattice", "laws", "catalogue:O6", "--law", "dsOMr"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains('a') && r.stdout.contains('b'), "{}", r.stdout);
    assert_eq!(conelab(&["lattice", "mc8", "catalogue:O6"]).code, 0);
    assert_eq!(conelab(&["lattice", "mc8", "catalogue:rb2"]).code, 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"elements":["0","a","b","1"],"hasse":[["0","a"],["a","b"],["b","1"]],
            "comp":{"0":"1","1":"0","a":"b","b":"a"},"bottom":"0","top":"1"}"#,
    );
    assert_eq!(conelab(&["lattice", "validate", &bad]).code, 1);
}

#[test]
fn cone_operations_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(dir.path(), "q.json", r#"{"dim":2,"generators":[[1,0],[0,1]]}"#);
    let h = write(dir.path(), "h.json", r#"{"dim":2,"generators":[[1,0],[-1,0],[0,1]]}"#);
    let out = dir.path().join("p.json");
    let r = conelab(&["cone", "op", "polar", &q, "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let p = conelab::PolyCone::from_json_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(p.same_set(&conelab::PolyCone::cone(2, &[&[-1, 0], &[0, -1]])).unwrap());

    let r = conelab(&["--json", "cone", "op", "leq", &q, &h]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("true"), "{}", r.stdout);
    let r = conelab(&["--json", "cone", "op", "leq", &h, &q]);
    assert!(r.stdout.contains("false"), "{}", r.stdout);
    let r = conelab(&["cone", "op", "meet", &q, &h]);
    assert_eq!(r.code, 0);
    let r = conelab(&["cone", "op", "join", &q, &write(dir.path(), "r3.json", r#"{"dim":3,"generators":[[1,0,0]]}"#)]);
    assert_eq!(r.code, 2);
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &["--json", "cone", "laws", "--dim", "3", "--samples", "40", "--seed", "5"][..],
        &["--json", "pom", "stress", "--dim", "4", "--samples", "100", "--seed", "3"],
        &["--json", "report", "table1"],
        &["--json", "fixtures", "all"],
        &["--json", "logic", "countermodel", "A & (~A | B) |- B", "--max-points", "6"],
    ] {
        let a = conelab(args);
        let b = conelab(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.code, b.code);
        serde_json::from_str::<serde_json::Value>(&a.stdout).unwrap();
    }
}

#[test]
fn svg_for_planar_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.svg");
    let p2 = dir.path().join("b.svg");
    for p in [&p1, &p2] {
        let r = conelab(&["fixtures", "show", "o6-cones", "--svg", p.to_str().unwrap()]);
        assert_eq!(r.code, 0, "{}", r.stderr);
    }
    let svg = fs::read_to_string(&p1).unwrap();
    assert_eq!(svg, fs::read_to_string(&p2).unwrap());
    assert!(svg.contains("<svg") && svg.contains(r#"width="512""#) && svg.contains(r#"height="512""#));
    assert!(svg.contains("stroke-dasharray"));
    let Payload::Cones { cones, .. } = fixture("o6-cones").unwrap().payload else {
        panic!("o6-cones holds cones");
    };
    for (name, _) in &cones {
        assert!(svg.contains(&format!(">{name}<")), "label {name} missing");
    }

    let r = conelab(&["fixtures", "show", "mc8-pom", "--svg", dir.path().join("c.svg").to_str().unwrap()]);
    assert_eq!(r.code, 2);

    let all = dir.path().join("pics");
    fs::create_dir(&all).unwrap();
    assert_eq!(conelab(&["fixtures", "all", "--svg", all.to_str().unwrap()]).code, 0);
    assert!(all.join("o6-cones.svg").exists());
    assert!(!all.join("mc8-pom.svg").exists());
}

#[test]
fn logic_and_frame_commands() {
    let r = conelab(&["logic", "parse", "A&~(B|C)"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "A & ~(B | C)"));
    // Orthomodularity has a countermodel on the hexagon's frame.
    let r = conelab(&["logic", "countermodel", "A & (~A | B) |- B", "--max-points", "6"]);
    assert_eq!(r.code, 1);
    let r = conelab(&["logic", "countermodel", "A & B |- B & A", "--max-points", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(conelab(&["frame", "closed-sets", "catalogue:O6"]).code, 0);
    assert_eq!(conelab(&["frame", "validate-cframe", "catalogue:boolean(2)"]).code, 0);
}

#[test]
fn table1_lists_every_excluded_law() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.md");
    let r = conelab(&["report", "table1", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let text = fs::read_to_string(out).unwrap();
    for law in Law::EXCLUDED_BY_CONES {
        assert!(text.contains(law.name()), "{law}");
    }
}
