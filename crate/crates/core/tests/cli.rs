//! The binary, run as a subprocess.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn whopf(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_whopf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut input = child.stdin.take().unwrap();
        input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = whopf(args, None);
    assert_eq!(r.code, 0, "{:?}: {}", args, r.stderr);
    r.stdout
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(path: &Path, text: &str) -> String {
    std::fs::write(path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn make_documents_have_expected_dims() {
    for (args, dim) in [
        (&["make", "groupoid", "--pair", "2"][..], 4),
        (&["make", "group", "--cyclic", "2"][..], 2),
        (&["make", "group", "--symmetric", "3"][..], 6),
        (&["make", "minimal", "--blocks", "2", "--g", "3,-1"][..], 16),
        (&["make", "functions", "--groups", "2,2"][..], 4),
        (&["make", "dyntwist-host", "--cyclic", "2"][..], 8),
    ] {
        assert_eq!(json(&ok(args))["dim"], dim, "{:?}", args);
    }
}

#[test]
fn validate_exit_codes() {
    let doc = ok(&["zoo", "--emit", "group_s3"]);
    assert_eq!(whopf(&["validate"], Some(&doc)).code, 0);

    let mut v = json(&doc);
    v["counit"] = serde_json::json!([[0, "2"]]);
    let r = whopf(&["validate"], Some(&v.to_string()));
    assert_eq!(r.code, 1);
    let report = json(&r.stdout);
    assert_eq!(report["passed"], false);
    let failing: Vec<&Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failing.is_empty());
    assert!(failing[0]["witness"].is_object());

    let r = whopf(&["validate"], Some("{\"schema_version\": "));
    assert_eq!(r.code, 2);
    assert_eq!(json(&r.stderr)["error"], "ParseError");
}

#[test]
fn report_sections() {
    let doc = ok(&["make", "groupoid", "--pair", "2"]);
    let r = whopf(&["report"], Some(&doc));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["traces"]["semisimple"], true);
    assert_eq!(v["traces"]["tr_s2_direct"], "4");
    assert_eq!(v["radford"]["residual"], "0");
    assert_eq!(v["integrals"]["left_dim"], 2);

    let doc = ok(&["make", "group", "--cyclic", "2"]);
    let v = json(&whopf(&["report", "--traces", "--dual"], Some(&doc)).stdout);
    assert_eq!(v["traces"]["tr_s2_direct"], "2");
    assert_eq!(v["dual"]["traces"]["tr_s2_direct"], "2");
    assert!(v.get("integrals").is_none());

    let doc = ok(&["make", "monoid"]);
    let r = whopf(&["report", "--integrals"], Some(&doc));
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["integrals"]["pair"]["error"], "NotFrobenius");
}

#[test]
fn twist_commands() {
    let doc = ok(&["make", "matrix", "--n", "2"]);
    let input = write(&scratch("m2.json"), &doc);
    let h = whopf::document::parse_algebra(&doc).unwrap();
    let t = whopf::document::TwistDocument::from_twist(&h, &whopf::twisting::Twist::trivial(&h));
    let tw = write(&scratch("trivial_twist.json"), &serde_json::to_string(&t).unwrap());
    let out = json(&ok(&["twist", &input, "--twist", &tw]));
    let orig = json(&doc);
    for key in ["mult", "comult", "unit", "counit", "antipode"] {
        assert_eq!(out[key], orig[key], "{}", key);
    }

    let z2 = write(&scratch("z2.json"), &ok(&["make", "group", "--cyclic", "2"]));
    let j = write(
        &scratch("j.json"),
        r#"{"schema_version":"1","group":[[[0,"1"]],[[1,"1"]]],"j":[[[0,0,"1"]],[[0,0,"1"]]]}"#,
    );
    assert_eq!(json(&ok(&["twist", &z2, "--dynamical", &j]))["dim"], 8);

    let mg = write(&scratch("mg.json"), &ok(&["make", "minimal", "--blocks", "2", "--g", "3,-1"]));
    let reg = ok(&["twist", &mg, "--regularize"]);
    let h = whopf::document::parse_algebra(&reg).unwrap();
    assert!(h.is_regular().unwrap());

    let bad = write(
        &scratch("bad_twist.json"),
        r#"{"schema_version":"1","theta":[[0,0,"2"]],"theta_bar":[[0,0,"1"]]}"#,
    );
    let r = whopf(&["twist", &input, "--twist", &bad], None);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stderr)["error"], "NotATwist");
}

#[test]
fn grouplike_radford_distinguished() {
    let p2 = write(&scratch("p2.json"), &ok(&["make", "matrix", "--n", "2"]));
    let swap = write(&scratch("swap.json"), r#"[[1,"1"],[2,"1"]]"#);
    let v = json(&ok(&["grouplike", "check", &p2, "--element", &swap]));
    assert_eq!(v["grouplike"], true);
    assert_eq!(v["trivial"], false);

    let not = write(&scratch("not.json"), r#"[[1,"1"]]"#);
    assert_eq!(whopf(&["grouplike", "check", &p2, "--element", &not], None).code, 1);

    let mg = write(&scratch("mg2.json"), &ok(&["make", "minimal", "--blocks", "2", "--g", "3,-1"]));
    let v = json(&ok(&["radford", &mg]));
    assert_eq!(v["regularized"], true);
    assert_eq!(v["residual"], "0");

    let v = json(&ok(&["distinguished", &p2]));
    assert!(v["alpha"].is_array() && v["a"].is_array());
    let v = json(&ok(&["integrals", &p2]));
    assert_eq!(v["left"].as_array().unwrap().len(), 2);
}

#[test]
fn dyntwist_reports() {
    let v = json(&ok(&["dyntwist", "--cyclic", "2"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["dim"], 8);
    assert_eq!(v["report"]["tr_s2_direct"], "8");
    assert_eq!(json(&ok(&["dyntwist", "--cyclic", "2", "--emit"]))["dim"], 8);
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("out.json");
    let r = whopf(&["make", "sweedler", "--out", path.to_str().unwrap()], None);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(json(&std::fs::read_to_string(&path).unwrap())["dim"], 4);
}

#[test]
fn zoo_mutation_fails_only_that_member() {
    let r = whopf(&["zoo", "--run-all", "--json", "--mutate", "pair3"], None);
    assert_eq!(r.code, 1);
    let v = json(&r.stdout);
    for row in v["rows"].as_array().unwrap() {
        let broken = row["name"] == "pair3";
        assert_eq!(row["axioms"], !broken, "{}", row["name"]);
    }
    assert_eq!(whopf(&["zoo", "--run-all", "--mutate", "nope"], None).code, 2);
}
