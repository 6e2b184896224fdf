use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn comb(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_comb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    // the child may exit without reading
    let _ = pipe.write_all(stdin.unwrap_or("").as_bytes());
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn recognizes_p4() {
    let g = file("Ch\n");
    let out = comb(&["recognize", path(&g)], None);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["command"], "recognize");
    assert_eq!(report["result"]["comb"]["vertex_count"], 4);
    assert!(report["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(report["timing_ms"].is_number());
}

#[test]
fn rejects_c5_with_witness() {
    let g = file("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = comb(&["recognize", path(&g)], None);
    assert_eq!(out.status.code(), Some(1));
    let witness = &json(&out)["result"]["not_comb"];
    assert_eq!(witness["kind"], "C5");
    assert_eq!(witness["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn decompose_output_validates() {
    let g = file("Ch");
    let out = comb(&["decompose", path(&g)], None);
    assert_eq!(out.status.code(), Some(0));
    let report = file(std::str::from_utf8(&out.stdout).unwrap());
    let out = comb(&["validate", "--graph", path(&g), "--decomposition", path(&report)], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["result"]["valid"], true);
}

#[test]
fn validate_reports_mislabelled_sides() {
    let g = file("Ch");
    // the path's ends sit on the clique side
    let dec = file(r#"{"n":1,"l":1,"k0":1,"A":[[],[0,3]],"X":[[1,2],[]],"M":[[]],"Y":[[],[]],"matchings":[[]]}"#);
    let out = comb(&["validate", "--graph", path(&g), "--decomposition", path(&dec)], None);
    assert_eq!(out.status.code(), Some(1));
    let codes: Vec<String> = json(&out)["result"]["invalid"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["code"].as_str().unwrap().to_string())
        .collect();
    assert!(codes.contains(&"CB4".to_string()), "{codes:?}");
}

#[test]
fn malformed_input_exits_2() {
    for text in ["4 3\n0 1\n", "C", "3 1\n0 0\n"] {
        let g = file(text);
        let out = comb(&["recognize", path(&g)], None);
        assert_eq!(out.status.code(), Some(2), "{text:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("comb: ") && err.trim_end().lines().count() == 1, "{err}");
    }
    assert_eq!(comb(&["recognize", "/nonexistent/graph"], None).status.code(), Some(2));
    assert_eq!(comb(&["bogus"], None).status.code(), Some(2));
}

#[test]
fn stdin_lines_give_one_report_each() {
    let out = comb(&["recognize", "-"], Some("Ch\nBw\n\nDhc\n"));
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<Value> = out
        .stdout
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| serde_json::from_slice(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0]["result"]["comb"].is_object());
    assert!(lines[1]["result"]["comb"].is_object());
    assert_eq!(lines[2]["result"]["not_comb"]["kind"], "C5");

    let out = comb(&["recognize", "-"], Some("Ch\n!!\n"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_prints_csv() {
    let out = comb(&["census", "--max-n", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,total,split,threshold,comb\n1,1,1,1,1\n2,2,2,2,2\n3,4,4,4,4\n4,11,9,8,9\n"
    );
    assert_eq!(comb(&["census", "--max-n", "9"], None).status.code(), Some(2));
}

#[test]
fn complement_keeps_the_format() {
    let g = file("Ch");
    let out = comb(&["complement", path(&g)], None);
    // complement edges 02, 03, 13
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "CU\n");
    let g = file("3 1\n0 1\n");
    let out = comb(&["complement", path(&g)], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3 2\n0 2\n1 2\n");
}

#[test]
fn generate_emits_a_valid_comb() {
    let params =
        file(r#"{"n":1,"l":2,"k0":1,"A":[1,2],"X":[1,1],"M":[1,2],"Y":[2,1,0],"kinds":["matched","complete"]}"#);
    let out = comb(&["generate", "--params", path(&params), "--seed", "7"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let generated = &json(&out)["result"]["generated"];
    let g = file(generated["graph6"].as_str().unwrap());
    let dec = file(&generated["decomposition"].to_string());
    let out = comb(&["validate", "--graph", path(&g), "--decomposition", path(&dec)], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    let out = comb(&["generate", "--params", path(&params), "--seed", "7", "--emit", "edgelist"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().starts_with("# decomposition: {"));
    let g = file(&text);
    assert_eq!(comb(&["recognize", path(&g)], None).status.code(), Some(0));

    let bad = file(r#"{"n":0,"l":1,"k0":3,"A":[0],"X":[0],"M":[0],"Y":[0,0]}"#);
    assert_eq!(comb(&["generate", "--params", path(&bad)], None).status.code(), Some(2));
}
