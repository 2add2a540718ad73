use std::path::Path;
use std::process::{Command, Output};

fn emb2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emb2"))
        .args(args)
        .env("EMB2_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn generate(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let out = emb2(&["generate", name, "-o", &p]);
    assert!(out.status.success());
    p
}

#[test]
fn classify_torus_meridian() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(dir.path(), "torus_meridian");
    let out = emb2(&["classify", &file]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Torus"));
    assert!(text.contains("Thm 1.2 (2)"));
    assert!(text.contains("Theorem 1.2 (2)"));

    let explained = stdout(&emb2(&["classify", &file, "--explain"]));
    assert!(explained.contains("trace:"));
    assert!(explained.contains("spine loop"));
}

#[test]
fn json_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(dir.path(), "klein_meridian_wedge_trivial");
    let a = emb2(&["classify", &file, "--json"]);
    let b = emb2(&["classify", &file, "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("\"case\": \"Thm 1.2 (3)(i)\""));
    assert!(!text.contains("time"));
}

#[test]
fn pinched_vertex_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pinched.json");
    // Two fans meeting only at vertex 0.
    std::fs::write(
        &path,
        r#"{"schema_version": 1, "vertices": 7,
            "triangles": [[0,1,2],[0,2,3],[0,4,5],[0,5,6]],
            "subcomplex": {"vertices": [0]}}"#,
    )
    .unwrap();
    let out = emb2(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NonManifoldVertexLink"));
}

#[test]
fn bad_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"schema_version\": 1,").unwrap();
    assert_eq!(emb2(&["classify", path.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(emb2(&["generate", "no_such_example"]).status.code(), Some(1));
    assert_eq!(emb2(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
}

#[test]
fn pi1_reports_subgroup() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(dir.path(), "genus2_wedge");
    let out = emb2(&["pi1", &file]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("HyperbolicClosed"));
    assert!(text.contains("subgroup: noncyclic"));
    let json = stdout(&emb2(&["pi1", &file, "--json"]));
    assert!(json.contains("\"NonCyclic\""));
}

#[test]
fn generate_prints_a_round_trippable_document() {
    let out = emb2(&["generate", "disk_arc"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let file = generate(dir.path(), "disk_arc");
    assert_eq!(std::fs::read(&file).unwrap(), out.stdout);
    assert!(emb2(&["validate", &file]).status.success());
}

#[test]
fn selftest_table() {
    let out = emb2(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows = text.lines().filter(|l| l.ends_with(" pass")).count();
    assert_eq!(rows, 14);
    assert!(text.contains("seed 11"));
}
