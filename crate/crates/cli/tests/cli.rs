use std::process::{Command, Output};

use degseq::analysis::{verify_witness, StarSubdivisionWitness};
use degseq::format::from_graph6;
use degseq::SimpleGraph;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degseq"))
        .args(args)
        .env_remove("DEGSEQ_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    assert_eq!(code(out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn graph(v: &Value) -> SimpleGraph {
    from_graph6(v.as_str().expect("graph6 string")).unwrap()
}

fn reverify(cert: &Value) -> StarSubdivisionWitness {
    let g = graph(&cert["artifacts"]["graph"]);
    let w: StarSubdivisionWitness =
        serde_json::from_value(cert["artifacts"]["witness"].clone()).unwrap();
    assert_eq!(verify_witness(&g, &w), Ok(()));
    w
}

#[test]
fn check_reports_graphicality_and_profile() {
    let c = json(&run(&["check", "2,2,2,2,2"]));
    assert_eq!(c["schema"], 1);
    assert_eq!(c["verdicts"]["graphic"], true);
    assert_eq!(c["verdicts"]["omega"]["value"], 2);
    assert_eq!(c["verdicts"]["omega"]["method"], "rao-exact");
    assert_eq!(
        c["verdicts"]["profile"]["verdict"],
        "NontrivialBasicProfile"
    );
    assert_eq!(graph(&c["artifacts"]["realization"]).degrees(), vec![2; 5]);
    assert!(c["timestamp"].as_str().is_some());

    for s in ["3,3,1,1", "1"] {
        let c = json(&run(&["check", s]));
        assert_eq!(c["verdicts"]["graphic"], false);
        assert!(c["verdicts"].get("omega").is_none());
    }
    assert_eq!(code(&run(&["check", "2,x"])), 2);
}

#[test]
fn check_with_oracle_and_caps() {
    let c = json(&run(&["check", "--oracle", "2,2,2,2,2,2"]));
    assert_eq!(c["verdicts"]["chi"]["value"], 3);
    assert_eq!(c["verdicts"]["chi"]["method"], "oracle-enumeration");
    assert_eq!(c["verdicts"]["h1"]["value"], 3);
    assert_eq!(c["verdicts"]["bounds"]["sf"]["status"], "holds");

    let eight = "1,1,1,1,1,1,1,1";
    assert_eq!(code(&run(&["check", "--oracle", eight])), 3);
    assert_eq!(code(&run(&["check", "--oracle", "--max-n", "8", eight])), 3);
    let c = json(&run(&[
        "check", "--oracle", "--max-n", "8", "--force", eight,
    ]));
    assert_eq!(c["verdicts"]["chi"]["value"], 2);
    let out = Command::new(env!("CARGO_BIN_EXE_degseq"))
        .args(["check", "--oracle", eight])
        .env("DEGSEQ_ORACLE_LIMIT", "8")
        .output()
        .unwrap();
    assert_eq!(json(&out)["verdicts"]["h1"]["value"], 2);
}

#[test]
fn check_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = run(&["check", "3,3,2,2,2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(c["verdicts"]["omega"]["value"], 3);
}

#[test]
fn realize_modes() {
    let out = run(&["realize", "2,1,1", "--tree"]);
    assert_eq!(code(&out), 0);
    let line = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        from_graph6(line.trim()).unwrap(),
        SimpleGraph::from_edges(3, &[(0, 1), (0, 2)])
    );

    let err = run(&["realize", "2,2", "--tree"]);
    assert_eq!(code(&err), 4);
    assert!(String::from_utf8_lossy(&err.stderr).contains("2n - 2"));

    let out = run(&["realize", "3,3,2,2,2", "--clique", "3", "--dot"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let g = from_graph6(text.lines().next().unwrap()).unwrap();
    assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
    assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
    assert!(text.contains("graph G {"));

    assert_eq!(code(&run(&["realize", "2,2,2,2,2", "--clique", "3"])), 4);
    assert_eq!(code(&run(&["realize", "3,3,1,1"])), 4);
    assert_eq!(
        code(&run(&["realize", "2,1,1", "--tree", "--clique", "2"])),
        2
    );
}

#[test]
fn realize_bipartite() {
    let out = run(&["realize", "2,2", "--bipartite", "2,1,1"]);
    assert_eq!(code(&out), 0);
    let g = from_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(g.degrees(), vec![2, 2, 2, 1, 1]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("matching:"));

    let err = run(&["realize", "3,2", "--bipartite", "3,1,1"]);
    assert_eq!(code(&err), 4);
    assert!(String::from_utf8_lossy(&err.stderr).contains("b_1 <= b_m + 1"));
    let err = run(&["realize", "1,2", "--bipartite", "2,1"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("non-increasing"));
}

#[test]
fn hajos_certificates_reverify() {
    let c = json(&run(&["hajos", "2,2,2,2,2"]));
    assert_eq!(reverify(&c).order, 3);
    assert_eq!(c["verdicts"]["h1"]["method"], "witness-lower-bound");
    assert_eq!(c["artifacts"]["plan"]["m"], 2);

    let c = json(&run(&["hajos", "4,4,4,4,4,4,4"]));
    assert_eq!(reverify(&c).order, 4);
    assert_eq!(graph(&c["artifacts"]["graph"]).degrees(), vec![4; 7]);

    assert_eq!(code(&run(&["hajos", "2,2,2,2"])), 4);
    assert_eq!(code(&run(&["hajos", "3,3,1,1"])), 4);
}

#[test]
fn hajos_pipeline_on_graph6() {
    let c = json(&run(&["hajos", "--pipeline", "Dhc"]));
    assert_eq!(reverify(&c).order, 3);
    assert_eq!(c["artifacts"]["decomposition"]["chi"], 3);
    assert_eq!(code(&run(&["hajos", "--pipeline", "not graph6"])), 2);
}

#[test]
fn sweep_exit_codes_and_report() {
    let out = run(&["sweep", "--max-n", "5", "--checks", "sf,reed"]);
    assert_eq!(code(&out), 0);
    assert!(!out.stdout.is_empty());
    assert_eq!(
        code(&run(&["sweep", "--max-n", "3", "--checks", "hajos"])),
        0
    );
    assert_eq!(code(&run(&["sweep", "--max-n", "99"])), 3);
    assert_eq!(code(&run(&["sweep", "--checks", "nonsense"])), 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "sweep",
        "--max-n",
        "5",
        "--checks",
        "sf",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(r["checks"]["sf"]["tight_cases"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([2, 2, 2, 2, 2])));
}
