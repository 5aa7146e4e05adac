use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn here(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(rel)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    stdout
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&ok(&all)).unwrap()
}

fn golden(name: &str, args: &[&str]) {
    let want = std::fs::read_to_string(here(&format!("golden/{name}"))).unwrap();
    assert_eq!(ok(args), want, "{name}");
}

#[test]
fn table_snapshots() {
    let rel8 = here("data/rel8.json");
    let linear = here("data/linear.json");
    golden("analyze_55666.txt", &["analyze", "--kupisch", "5,5,6,6,6"]);
    golden("analyze_22.txt", &["analyze", "--kupisch", "2,2"]);
    golden(
        "analyze_rel8.txt",
        &["analyze", "--relations", rel8.to_str().unwrap()],
    );
    golden(
        "analyze_linear.txt",
        &["analyze", "--file", linear.to_str().unwrap()],
    );
    golden("reduce_55666.txt", &["reduce", "--kupisch", "5,5,6,6,6"]);
    golden("reduce_776.txt", &["reduce", "--kupisch", "7,7,6"]);
    golden(
        "resolve_55666_3_5.txt",
        &["resolve", "--kupisch", "5,5,6,6,6", "--module", "3,5"],
    );
    golden(
        "resolve_55666_1_1_inj.txt",
        &[
            "resolve",
            "--kupisch",
            "5,5,6,6,6",
            "--module",
            "1,1",
            "--direction",
            "inj",
        ],
    );
}

#[test]
fn relation_sources_agree() {
    let a = json(&[
        "analyze",
        "--relations",
        here("data/rel8.json").to_str().unwrap(),
    ]);
    let b = json(&["analyze", "--file", here("data/rel8.txt").to_str().unwrap()]);
    let c = json(&["analyze", "--kupisch", "4,3,2,3,2,5,4,3"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn trivial_algebra() {
    let a = json(&["analyze", "--kupisch", "2,2"]);
    for key in ["phi_dim", "findim", "gordim", "phi_dim_op", "findim_op"] {
        assert_eq!(a[key], 0, "{key}");
    }
    assert_eq!(a["self_injective"], true);
    assert_eq!(a["domdim"], "inf");
    assert_eq!(a["chain"]["depth"], 0);
    let rows = json(&["reduce", "--kupisch", "2,2"]);
    assert_eq!(rows.as_array().unwrap().len(), 1);
}

#[test]
fn detailed_example_chain_depth() {
    let a = json(&["analyze", "--kupisch", "5,5,6,6,6"]);
    assert_eq!(a["findim"], 6);
    assert_eq!(a["gldim"], "inf");
    assert_eq!(a["r"], 4);
    assert_eq!(a["chain"]["depth"], 3);
    assert_eq!(a["chain"]["end"], "self-injective");
}

#[test]
fn short_chain() {
    let rows = json(&["reduce", "--kupisch", "7,7,6"]);
    let rows = rows.as_array().unwrap();
    assert!(rows.len() <= 3);
    let last = &rows[rows.len() - 1]["algebra"][0];
    let k: Vec<u64> = last["kupisch"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert!(
        k.iter().all(|&c| c == k[0]),
        "last level {k:?} is not self-injective"
    );
    let steps = json(&["reduce", "--kupisch", "5,5,6,6,6", "--steps", "1"]);
    assert_eq!(steps.as_array().unwrap().len(), 2);
}

#[test]
fn resolutions() {
    let p = json(&["resolve", "--kupisch", "5,5,6,6,6", "--module", "1,5"]);
    assert_eq!(p["dimension"], 0);
    let steps = p["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[1]["zero"], true);

    let c = json(&["resolve", "--kupisch", "5,5,6,6,6", "--module", "1,1"]);
    let steps = c["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[2]["cycle_to"], 0);
    assert_eq!(c["dimension"], "inf");

    let m = json(&[
        "resolve",
        "--kupisch",
        "5,5,6,6,6",
        "--module",
        "3,5",
        "--max",
        "2",
    ]);
    assert_eq!(m["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn opposite() {
    assert_eq!(ok(&["op", "--kupisch", "2,3,3"]), "2,3,3\n");
    assert_eq!(ok(&["op", "--kupisch", "5,5,6,6,6"]), "6,6,6,5,5\n");
    assert_eq!(
        ok(&["op", "--kupisch", "linear:3,2,2,1"]),
        "linear:2,3,2,1\n"
    );
    let j = json(&["op", "--kupisch", "5,5,6,6,6"]);
    assert_eq!(j["kind"], "cyclic");
}

#[test]
fn left_right_symmetry_through_the_opposite() {
    for k in ["5,5,6,6,6", "2,3,3", "7,7,6", "4,3,2,3,2,5,4,3", "3,4,4,4"] {
        let op = ok(&["op", "--kupisch", k]);
        let a = json(&["analyze", "--kupisch", k]);
        let b = json(&["analyze", "--kupisch", op.trim()]);
        assert_eq!(a["findim"], b["findim_op"], "{k}");
        assert_eq!(a["phi_dim"], b["phi_dim_op"], "{k}");
        assert_eq!(a["findim"], a["findim_op"], "{k}");
        assert_eq!(a["phi_dim"], a["phi_dim_op"], "{k}");
        assert_eq!(a["r"], b["r"], "{k}");
    }
}

#[test]
fn enumeration() {
    assert_eq!(
        ok(&[
            "enumerate",
            "--vertices",
            "2",
            "--max-length",
            "4",
            "--count-only"
        ]),
        "5\n"
    );
    assert_eq!(
        ok(&[
            "enumerate",
            "--vertices",
            "2",
            "--max-length",
            "4",
            "--no-dedup",
            "--count-only"
        ]),
        "7\n"
    );
    assert_eq!(
        ok(&["enumerate", "--vertices", "2", "--kind", "linear"]),
        "linear:1,1\nlinear:2,1\n"
    );
    assert_eq!(
        ok(&["enumerate", "--vertices", "2", "--max-length", "4"]),
        "2,2\n2,3\n3,3\n3,4\n4,4\n"
    );
}

#[test]
fn verify_small_budget() {
    let (code, stdout, _) = run(&["verify", "--max-vertices", "4", "--max-length", "8"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&stdout).unwrap();
    assert!(r.get("elapsed_ms").is_none());
    let (code, stdout, _) = run(&[
        "verify",
        "--max-vertices",
        "3",
        "--theorems",
        "T2,T7p",
        "--timing",
    ]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&stdout).unwrap();
    let ids: Vec<&String> = r["theorems"].as_object().unwrap().keys().collect();
    assert_eq!(ids, ["T2", "T7p"]);
    assert!(r["elapsed_ms"].is_u64());
    let table = ok(&["verify", "--max-vertices", "3", "--format", "table"]);
    assert!(table.lines().nth(1).unwrap().starts_with("T1 "));
    assert!(table.ends_with("violations 0, mismatches 0\n"));
}

#[test]
fn input_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &["analyze", "--kupisch", "2,4"],
        &["analyze", "--kupisch", "1,2"],
        &["analyze", "--kupisch", "a,b"],
        &["analyze"],
        &["analyze", "--kupisch", "2,2", "--file", "x"],
        &["analyze", "--file", "/nonexistent/algebra"],
        &["reduce", "--kupisch", "linear:2,1"],
        &["resolve", "--kupisch", "5,5,6,6,6", "--module", "3,7"],
        &["resolve", "--kupisch", "5,5,6,6,6", "--module", "3"],
        &["verify", "--max-vertices", "1"],
        &["verify", "--max-vertices", "2", "--theorems", "T99"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, stderr) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
    let (_, _, stderr) = run(&["analyze", "--kupisch", "2,4"]);
    assert!(stderr.contains("c_1 = 2 < c_2 - 1 = 3"), "{stderr}");
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for command in ["analyze", "reduce", "resolve", "op", "enumerate", "verify"] {
        assert!(stdout.contains(command), "{command}");
    }
}
