use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use serde_json::Value;

const BASE: &str = "https://sombor.local/schemas/";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sombor(args: &[&str]) -> Run {
    sombor_with(args, &[], None)
}

fn sombor_with(args: &[&str], env: &[(&str, &Path)], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sombor"));
    cmd.args(args).env_remove("SOMBOR_CATALOG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = sombor(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

/// Validates `text` against `schemas/<name>.schema.json`.
fn check_schema(name: &str, text: &str) -> Value {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas");
    let mut registry = jsonschema::Registry::new();
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let file = path.file_name().unwrap().to_str().unwrap();
        registry = registry.add(format!("{BASE}{file}"), doc).unwrap();
    }
    let registry = registry.prepare().unwrap();
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join(format!("{name}.schema.json"))).unwrap()).unwrap();
    let validator = jsonschema::options()
        .with_base_uri(BASE)
        .with_registry(&registry)
        .offline()
        .build(&schema)
        .unwrap();
    let value: Value = serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"));
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
    value
}

#[test]
fn spectrum_of_c5() {
    let text = ok(&["spectrum", "--graph6", "Dhc", "--weighting", "psombor:2"]);
    let v = check_schema("spectrum", &text);
    assert!((v["rho"].as_f64().unwrap() - 32f64.sqrt()).abs() < 1e-9);
    let table = ok(&["spectrum", "--graph6", "Dhc", "--format", "table"]);
    assert!(table.contains(&format!("rho {}", v["rho"])));
    // graph6 on stdin
    let r = sombor_with(&["spectrum"], &[], Some("Dhc\n"));
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, text);
}

#[test]
fn rank_trees_lists_the_star_chain() {
    let table = ok(&[
        "rank",
        "--family",
        "trees",
        "--n",
        "7",
        "--k",
        "3",
        "--weighting",
        "psombor:2",
    ]);
    let star = ok(&["named", "star:7"]);
    let ds25 = ok(&["named", "double_star:2,5"]);
    let ds34 = ok(&["named", "double_star:3,4"]);
    let certs: Vec<String> = [star, ds25, ds34]
        .iter()
        .map(|g6| {
            let v = check_schema("spectrum", &ok(&["spectrum", "--graph6", g6.trim()]));
            v["certificate"].as_str().unwrap().to_string()
        })
        .collect();
    let rows: Vec<&str> = table.lines().skip(2).collect();
    for (row, c) in rows.iter().zip(&certs) {
        assert!(row.contains(c.as_str()), "{row} lacks {c}");
    }
    let json = ok(&["rank", "--family", "trees", "--n", "7", "--k", "3", "--format", "json"]);
    let v = check_schema("rank", &json);
    for (i, e) in v[0]["entries"].as_array().unwrap().iter().enumerate() {
        assert_eq!(e["certificate"].as_str().unwrap(), certs[i]);
        // table and json carry the same digits
        assert!(rows[i].contains(&e["rho"].to_string()));
    }
    let csv = ok(&["rank", "--family", "trees", "--n", "6..7", "--format", "csv"]);
    assert_eq!(
        csv.lines().next().unwrap(),
        "family,rank,certificate,rho,degree_sequence,tied"
    );
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn rank_persists_to_catalog_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalog.json");
    let args = [
        "rank",
        "--family",
        "bicyclic",
        "--n",
        "5..7",
        "--direction",
        "min",
        "--k",
        "3",
        "--format",
        "json",
    ];
    let first = sombor_with(&args, &[("SOMBOR_CATALOG", &cat)], None);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let bytes = std::fs::read_to_string(&cat).unwrap();
    let second = sombor_with(&args, &[("SOMBOR_CATALOG", &cat)], None);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&cat).unwrap(), bytes);
    let v = check_schema("catalog", &bytes);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    for n in 5..=7 {
        assert_eq!(entries.iter().filter(|e| e["n"] == n).count(), 3);
    }
    check_schema("rank", &first.stdout);
}

#[test]
fn enumerate_counts_and_listing() {
    assert_eq!(
        ok(&["enumerate", "--family", "bicyclic", "--n", "8", "--count"]).trim(),
        "236"
    );
    assert_eq!(
        ok(&["enumerate", "--family", "graphs", "--n", "5", "--m", "6", "--count"]).trim(),
        "5"
    );
    let list = ok(&["enumerate", "--family", "trees", "--n", "6"]);
    assert_eq!(list.lines().count(), 6);
    for line in list.lines() {
        ok(&["spectrum", "--graph6", line]);
    }
    let json = ok(&["enumerate", "--family", "unicyclic", "--n", "5", "--format", "json"]);
    assert_eq!(check_schema("enumerate", &json).as_array().unwrap().len(), 5);
}

#[test]
fn verify_example_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("c.json");
    let c = cat.to_str().unwrap();
    let r = sombor(&[
        "verify",
        "--theorem",
        "T5.2",
        "--n",
        "6..8",
        "--p",
        "2,3",
        "--catalog",
        c,
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("T5.2  PASS"));
    check_schema("catalog", &std::fs::read_to_string(&cat).unwrap());
    let json = ok(&[
        "verify",
        "--theorem",
        "T4.2",
        "--n",
        "6..9",
        "--p",
        "1,2,3",
        "--format",
        "json",
    ]);
    let v = check_schema("verify", &json);
    assert_eq!(v[0]["pass"], true);
    assert_eq!(v[0]["points"].as_array().unwrap().len(), 12);
    let all = ok(&["verify", "--theorem", "all", "--format", "json"]);
    let v = check_schema("verify", &all);
    assert_eq!(v.as_array().unwrap().len(), 13);
}

#[test]
fn surgery_reports() {
    let json = ok(&["kelmans", "--named", "double_star:3,4", "--v1", "0", "--v2", "1"]);
    let v = check_schema("transform", &json);
    assert_eq!(v[0]["changed"], true);
    assert!(v[0]["rho_after"].as_f64() > v[0]["rho_before"].as_f64());
    // triangle with the path 0-3-4-5 hanging at 0
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    std::fs::write(&file, r#"{"n": 6, "edges": [[0,1],[1,2],[0,2],[0,3],[3,4],[4,5]]}"#).unwrap();
    let json = ok(&[
        "kelmans",
        "--json",
        file.to_str().unwrap(),
        "--op",
        "collapse(0)",
        "--weighting",
        "adjacency",
        "--weighting",
        "psombor:1",
    ]);
    let v = check_schema("transform", &json);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["op"]["op"], "collapse");
}

#[test]
fn sweep_is_clean_and_reproducible() {
    let a = ok(&["kelmans", "--sweep", "60", "--seed", "3", "--format", "json"]);
    let v = check_schema("sweep", &a);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["changed"].as_u64().unwrap() + v["unchanged"].as_u64().unwrap(), 240);
    assert_eq!(a, ok(&["kelmans", "--sweep", "60", "--seed", "3", "--format", "json"]));
}

#[test]
fn quotient_of_u3() {
    let json = ok(&["quotient", "--named", "u3:6"]);
    let v = check_schema("quotient", &json);
    let p: Vec<f64> = v["char_poly"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (a, b) in p.iter().zip([1.0, 0.0, -90.0, 0.0, 544.0]) {
        assert!((a - b).abs() < 1e-8, "{p:?}");
    }
    assert!((v["rho"].as_f64().unwrap() - v["rho_quotient"].as_f64().unwrap()).abs() < 1e-9);
    let json = ok(&["quotient", "--named", "u:9,5,1", "--weighting", "adjacency"]);
    let v = check_schema("quotient", &json);
    assert_eq!(v["char_poly_exact"][0], "1");
    let json = ok(&[
        "quotient",
        "--named",
        "path:4",
        "--partition",
        "0,3|1,2",
        "--weighting",
        "adjacency",
    ]);
    assert_eq!(check_schema("quotient", &json)["equitable"], true);
}

#[test]
fn named_export_and_catalog_lookup() {
    let g = ok(&["named", "theta:3,2,3", "--format", "json"]);
    check_schema("graph", &g);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s5.dot");
    ok(&[
        "export",
        "--named",
        "star:5",
        "--weighting",
        "psombor:2",
        "--name",
        "S5",
        "--out",
        out.to_str().unwrap(),
    ]);
    let dot = std::fs::read_to_string(&out).unwrap();
    assert!(dot.starts_with("graph S5 {"));
    assert_eq!(dot.matches("label=\"4.12310562562\"").count(), 4);
    let cat = dir.path().join("cat.json");
    let r = sombor_with(
        &["named", "U1:8", "--format", "json"],
        &[("SOMBOR_CATALOG", &cat)],
        None,
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(check_schema("graph", &r.stdout)["n"], 8);
    assert!(std::fs::read_to_string(&cat).unwrap().contains("\"U1\""));
}

#[test]
fn discover_reports_ties_with_exit_one() {
    let json = ok(&["discover", "--family", "B1", "--n", "6..7", "--format", "json"]);
    assert_eq!(check_schema("discover", &json)["stable"], true);
    let r = sombor(&[
        "discover", "--family", "Bp1", "--n", "7", "--p", "2", "--format", "json",
    ]);
    assert_eq!(r.code, 1);
    let v = check_schema("discover", &r.stdout);
    assert_eq!(v["findings"][0]["kind"], "tie");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["rank", "--family", "trees", "--n", "7", "--k", "12"],
        vec!["rank", "--family", "graphs", "--n", "5"],
        vec!["rank", "--family", "trees", "--n", "7..5"],
        vec!["rank", "--family", "trees", "--n", "13"],
        vec!["spectrum", "--graph6", "!!"],
        vec!["spectrum", "--graph6", "Dhc", "--weighting", "psombor:0"],
        vec!["spectrum", "--graph6", "Dhc", "--format", "csv"],
        vec!["verify", "--theorem", "T9.9"],
        vec!["verify", "--theorem", "T5.2", "--n", "6", "--p", "1.5"],
        vec!["kelmans", "--named", "path:5", "--v1", "0", "--v2", "3"],
        vec!["kelmans", "--named", "path:5", "--op", "pendant_shift(0,4)"],
        vec!["kelmans", "--named", "cycle:5", "--op", "collapse(0)"],
        vec!["quotient", "--named", "path:4", "--partition", "0,1|2"],
        vec!["discover", "--family", "X9", "--n", "6"],
    ] {
        let r = sombor(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(sombor_with(&["spectrum"], &[], Some("")).code, 2);
}
