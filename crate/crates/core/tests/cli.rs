use std::process::{Command, Output};

use bsposet::complex::{bs_order_complex, SimplicialComplex};
use bsposet::{BSBounds, HasseDiagram};

fn bsposet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsposet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_all_passes() {
    let o = bsposet(&["check", "--lower", "1,3", "--upper", "3,4", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["lattice", "pure", "flag", "vd", "rao"] {
        assert!(out.lines().any(|l| l.starts_with(name) && l.contains("PASS")), "{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(bsposet(&["enumerate", "--lower", "1,3", "--upper", "3,4"]).status.code(), Some(0));
    // lower above upper
    assert_eq!(bsposet(&["count", "--lower", "4,5", "--upper", "3,4"]).status.code(), Some(2));
    // not strictly increasing
    assert_eq!(bsposet(&["count", "--lower", "3,3", "--upper", "3,4"]).status.code(), Some(2));
    assert_eq!(bsposet(&["count", "--lower", "1,x", "--upper", "3,4"]).status.code(), Some(2));
    assert_eq!(bsposet(&["frobnicate"]).status.code(), Some(2));
    let o = bsposet(&["chains", "--lower", "0,1,2,3", "--upper", "5,6,7,8", "--max-chains", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource limit"));
    let o = bsposet(&["find-bs", "--lower", "0", "--upper", "3", "--window", "1000"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["complex", "--lower", "1,3,4", "--upper", "2,5,6", "--format", "json"][..],
        &["shedding", "--lower", "1,3,4", "--upper", "2,5,6", "--format", "json"][..],
        &["hasse", "--lower", "0,2", "--upper", "3,5", "--format", "dot"][..],
    ] {
        let a = bsposet(args);
        let b = bsposet(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn complex_json_round_trips() {
    let o = bsposet(&["complex", "--lower", "1,3,4", "--upper", "2,5,6", "--format", "json"]);
    let parsed: SimplicialComplex = serde_json::from_slice(&o.stdout).unwrap();
    let expected = bs_order_complex(&BSBounds::parse("1,3,4", "2,5,6").unwrap()).unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn hasse_dot_has_five_nodes_and_five_edges() {
    let out = stdout(&bsposet(&["hasse", "--lower", "1,3", "--upper", "3,4", "--format", "dot"]));
    assert!(out.starts_with("digraph poset {"));
    let nodes = out.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
    let edges: Vec<&str> = out.lines().filter(|l| l.contains("->")).map(str::trim).collect();
    assert_eq!(nodes, 5);
    assert_eq!(
        edges,
        [
            "\"1,3\" -> \"1,4\";",
            "\"1,3\" -> \"2,3\";",
            "\"1,4\" -> \"2,4\";",
            "\"2,3\" -> \"2,4\";",
            "\"2,4\" -> \"3,4\";",
        ]
    );
}

#[test]
fn dot_for_three_coordinate_poset() {
    let out = stdout(&bsposet(&["hasse", "--lower", "1,3,4", "--upper", "2,5,6", "--format", "dot"]));
    let nodes = out.lines().filter(|l| !l.contains("->") && l.contains('"')).count();
    assert_eq!(nodes, 12);
    let shed = stdout(&bsposet(&["shedding", "--lower", "1,3,4", "--upper", "2,5,6"]));
    let vertices: Vec<&str> = shed.lines().take(6).collect();
    assert_eq!(vertices, ["1,3,6", "1,4,5", "1,5,6", "2,3,4", "2,3,6", "2,4,5"]);
}

#[test]
fn count_json_uses_decimal_strings() {
    let o = bsposet(&["count", "--lower", "0,1,2", "--upper", "2,3,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"], "10");
    assert_eq!(v["facets"], "5");
}

#[test]
fn shear_and_dual_emit_pair_arrays() {
    let v: serde_json::Value =
        serde_json::from_slice(&bsposet(&["shear", "--p", "2", "--k", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(v, serde_json::json!([[[0, 1, 2], [0]], [[0, 1, 3], [1]], [[0, 2, 3], [2]], [[1, 2, 3], [3]]]));
    let v: serde_json::Value =
        serde_json::from_slice(&bsposet(&["dual", "--lower", "1,3", "--upper", "3,4", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert_eq!(v[0], serde_json::json!([[1, 3], [1, 3]]));
}

#[test]
fn find_bs_from_file_and_from_deletion() {
    let h = HasseDiagram::from_bounds(&BSBounds::parse("2,4", "4,5").unwrap()).unwrap();
    let path = std::env::temp_dir().join(format!("bsposet-find-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&h.to_json()).unwrap()).unwrap();
    let o = bsposet(&["find-bs", "--poset", path.to_str().unwrap(), "--window", "6", "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bounds"], serde_json::json!({"lower": [0, 2], "upper": [2, 3]}));

    let o = bsposet(&["find-bs", "--lower", "1,3,4", "--upper", "2,5,6", "--delete", "2,3,4", "--window", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "absent within window 8\n");

    let o = bsposet(&["find-bs", "--poset", "/nonexistent/poset.json"]);
    assert_eq!(o.status.code(), Some(2));
}
