use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use gk_core::spectrum::Spectrum;
use serde_json::Value;

fn gk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gk")).args(args).env_remove("GK_DATA_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn family_spectrum_and_graph() {
    let o = gk(&["family", "--kind", "pgl2", "--q", "243", "--emit", "spectrum"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"name":"PGL2(243)","maximal_orders":[3,242,244]}"#);

    let o = gk(&["family", "--kind", "alt", "--n", "10", "--emit", "graph"]);
    assert_eq!(o.status.code(), Some(0));
    let g = json(&o);
    assert_eq!(g["vertices"], serde_json::json!([2, 3, 5, 7]));
    assert_eq!(g["edges"], serde_json::json!([[2, 3], [2, 5], [3, 5], [3, 7]]));
}

#[test]
fn family_report() {
    let o = gk(&["family", "--kind", "PSL2", "--q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["name"], "PSL2(7)");
    assert_eq!(r["s"], 3);
    assert_eq!(r["t"], 3);
    assert_eq!(r["tau"], serde_json::json!([3, 7]));
    assert_eq!(r["tau_union_of_cliques"], true);
}

#[test]
fn family_bad_input() {
    let o = gk(&["family", "--kind", "psl2", "--q", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a prime power"));
    assert_eq!(gk(&["family", "--kind", "sym", "--n", "201"]).status.code(), Some(2));
    assert_eq!(gk(&["family", "--kind", "suzuki", "--n", "8"]).status.code(), Some(2));
    assert_eq!(gk(&["family", "--kind", "alt"]).status.code(), Some(2));
}

#[test]
fn emitted_spectrum_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for args in [["--kind", "sym", "--n", "23"], ["--kind", "psl2", "--q", "1024"]] {
        let mut full = vec!["family"];
        full.extend(args);
        full.extend(["--emit", "spectrum"]);
        let first = stdout(&gk(&full));
        let path = write(dir.path(), "s.json", &first);
        let report = json(&gk(&["analyze", &path]));
        *full.last_mut().unwrap() = "graph";
        let graph = stdout(&gk(&full));
        let gpath = write(dir.path(), "g.json", &graph);
        assert_eq!(json(&gk(&["analyze", &gpath]))["edges"], report["edges"]);
        let reparsed: Spectrum = serde_json::from_str(&first).unwrap();
        assert_eq!(reparsed.to_json(), first.trim());
    }
}

#[test]
fn analyze_graph_file_and_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let octa = write(
        dir.path(),
        "octa.json",
        r#"{"vertices":[2,3,5,7,11,13],"edges":[[2,5],[2,7],[2,11],[2,13],[3,5],[3,7],[3,11],[3,13],[5,11],[5,13],[7,11],[7,13]]}"#,
    );
    let r = json(&gk(&["analyze", &octa]));
    assert_eq!(r["multipartite_parts"], serde_json::json!([2, 2, 2]));
    assert_eq!(r["srg"]["verdict"], "complete_multipartite_parts_of_two");

    let srg = gk(&["srg-classify", &octa]);
    assert_eq!(srg.status.code(), Some(0));
    assert_eq!(json(&srg)["verdict"], "complete_multipartite_parts_of_two");

    let bad = write(dir.path(), "bad.json", r#"{"vertices":[2,3],"edges":[[2,5]]}"#);
    assert_eq!(gk(&["analyze", &bad]).status.code(), Some(2));
    let junk = write(dir.path(), "junk.json", "not json");
    assert_eq!(gk(&["analyze", &junk]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(gk(&["analyze", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_corpus_directory() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(gk(&["verify-corpus", dir.path().to_str().unwrap()]).status.code(), Some(2));

    write(dir.path(), "good.json", r#"{"name":"PSL2(7)","maximal_orders":[3,4,7]}"#);
    let o = gk(&["verify-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["graphs"], 1);

    write(dir.path(), "path.json", r#"{"name":"bad","maximal_orders":[2,15,35]}"#);
    let o = gk(&["verify-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("3-5-7"));
    let summary = json(&o);
    assert_eq!(summary["failures"][0]["name"], "bad");
    assert_eq!(summary["failures"][0]["check"], "tau_union_of_cliques");
}

#[test]
fn verify_corpus_builtin() {
    let o = gk(&["verify-corpus", "--builtin", "--extra", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let summary = json(&o);
    assert_eq!(summary["graphs"], 865);
    assert_eq!(summary["failures"], serde_json::json!([]));

    let a = json(&gk(&["verify-corpus", "--builtin", "alt:5..30,psl2:..100", "--jobs", "1"]));
    let b = json(&gk(&["verify-corpus", "--builtin", "alt:5..30,psl2:..100", "--jobs", "4"]));
    assert_eq!(a["checks"], b["checks"]);
    assert_eq!(gk(&["verify-corpus", "--builtin", "alt:9..3"]).status.code(), Some(2));
}

#[test]
fn data_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "x.json", r#"{"name":"X","maximal_orders":[2,15,35]}"#);
    let o = Command::new(env!("CARGO_BIN_EXE_gk"))
        .args(["verify-corpus", "--builtin", "bundled"])
        .env("GK_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["graphs"], 1);
}

#[test]
fn realizable_multipartite_codes() {
    let o = gk(&["realizable-multipartite", "3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "not_realizable");

    let o = gk(&["realizable-multipartite", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "realizable");

    let o = gk(&["realizable-multipartite", "2,2,2"]);
    assert_eq!(json(&o)["verdict"], "realizable_solvable");

    assert_eq!(gk(&["realizable-multipartite", "3,2,2"]).status.code(), Some(3));
    assert_eq!(gk(&["realizable-multipartite", "3,x"]).status.code(), Some(2));
    assert_eq!(gk(&["realizable-multipartite", "0,3"]).status.code(), Some(2));
}
