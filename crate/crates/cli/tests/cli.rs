use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn corpus(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../corpus");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn inscribe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inscribe")).args(args).output().unwrap()
}

fn inscribe_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_inscribe"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn kleetope_is_not_inscribable() {
    let out = inscribe(&["decide", "--inscribable", &corpus("kleetope_tet.pg"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["answer"], "no");
    assert_eq!(cert["graph_role"], "dual");
    assert_eq!(cert["lp_optimum"], "0/1");
}

#[test]
fn generated_graph_validates_from_stdin() {
    let generated = inscribe(&["generate", "antiprism", "4"]);
    assert_eq!(generated.status.code(), Some(0));
    let out = inscribe_stdin(&["validate", "-", "--format", "json"], &generated.stdout);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["planar_spherical"], true);
    assert_eq!(report["three_connected"], true);
    assert_eq!((report["vertices"].as_u64(), report["edges"].as_u64()), (Some(8), Some(16)));
}

#[test]
fn dual_of_cube_is_octahedron() {
    let out = inscribe(&["dual", &corpus("cube.pg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("polygraph 1\nvertices 6\n"));
    let bijection: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("# ") && l[2..].starts_with(|c: char| c.is_ascii_digit()))
        .collect();
    assert_eq!(bijection.len(), 12);
    // The output, comments included, is itself a valid graph: 6 vertices,
    // 12 edges, 8 faces.
    let check = inscribe_stdin(&["validate", "-", "--format", "json"], text.as_bytes());
    let report = json(&check);
    assert_eq!(report["faces"], 8);
    assert_eq!(report["three_connected"], true);
}

#[test]
fn generate_round_trips() {
    for spec in [&["cube"][..], &["prism", "6"], &["kleetope(octahedron)"], &["wheel", "7"]] {
        let mut args = vec!["generate"];
        args.extend_from_slice(spec);
        let first = inscribe(&args);
        assert_eq!(first.status.code(), Some(0), "{spec:?}");
        let faces = inscribe_stdin(&["faces", "-"], &first.stdout);
        assert_eq!(faces.status.code(), Some(0));
        // Re-emitting through dual twice gives the same face count back.
        let d1 = inscribe_stdin(&["dual", "-"], &first.stdout);
        let d2 = inscribe_stdin(&["dual", "-"], &d1.stdout);
        let original = json(&inscribe_stdin(&["validate", "-", "--format", "json"], &first.stdout));
        let twice = json(&inscribe_stdin(&["validate", "-", "--format", "json"], &d2.stdout));
        assert_eq!(original, twice);
    }
}

#[test]
fn decide_then_verify_and_angles() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["cube.pg", "icosahedron.pg", "prism_5.pg", "wheel_5.pg", "kleetope_tet.pg"] {
        let graph = corpus(name);
        for mode in ["--inscribable", "--circumscribable"] {
            let out = inscribe(&["decide", mode, &graph, "--format", "json"]);
            assert_eq!(out.status.code(), Some(0), "{name} {mode}");
            let cert_path = dir.path().join(format!("{name}{mode}.json"));
            std::fs::write(&cert_path, &out.stdout).unwrap();
            let cert_path = cert_path.to_string_lossy().into_owned();
            let verified = inscribe(&["verify", &cert_path, &graph]);
            assert_eq!(verified.status.code(), Some(0), "{name} {mode}");
            let angles = inscribe(&["angles", &cert_path, &graph, "--format", "json"]);
            let expect_angles = mode == "--inscribable" && json(&out)["answer"] == "yes";
            assert_eq!(angles.status.code(), Some(if expect_angles { 0 } else { 2 }), "{name} {mode}");
        }
    }
}

#[test]
fn tetrahedron_angles_are_a_third() {
    let dir = tempfile::tempdir().unwrap();
    let graph = corpus("tetrahedron.pg");
    let out = inscribe(&["decide", "--inscribable", &graph, "--format", "json"]);
    let cert = dir.path().join("cert.json");
    std::fs::write(&cert, &out.stdout).unwrap();
    let angles = json(&inscribe(&["angles", &cert.to_string_lossy(), &graph, "--format", "json"]));
    let map = angles["angles"].as_object().unwrap();
    assert_eq!(map.len(), 6);
    assert!(map.values().all(|v| v == "1/3"));
    assert!(json(&out)["angles"].as_object().unwrap().values().all(|v| v == "1/3"));
}

#[test]
fn verify_rejects_tampering_and_wrong_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = corpus("cube.pg");
    let out = inscribe(&["decide", "--inscribable", &graph, "--format", "json"]);
    let mut cert = json(&out);
    let path = dir.path().join("cert.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let path_s = path.to_string_lossy().into_owned();
    assert_eq!(inscribe(&["verify", &path_s, &corpus("octahedron.pg")]).status.code(), Some(1));

    cert["weights"]["0"] = serde_json::Value::from("1/4");
    std::fs::write(&path, serde_json::to_vec(&cert).unwrap()).unwrap();
    assert_eq!(inscribe(&["verify", &path_s, &graph]).status.code(), Some(1));

    std::fs::write(&path, b"not json").unwrap();
    assert_eq!(inscribe(&["verify", &path_s, &graph]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["decide", "--circumscribable", "--format", "json"];
    let graph = corpus("prism_5.pg");
    let a = inscribe(&[&args[..2], &[&graph], &args[2..]].concat());
    let b = inscribe(&[&args[..2], &[&graph], &args[2..]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fast_path_and_text_output() {
    let out = inscribe(&["decide", "--inscribable", "--fast-path", &corpus("octahedron.pg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("inscribable: yes\n"), "{text}");
    assert!(text.contains("4-connected"));
    let lp = stdout(&inscribe(&["decide", "--inscribable", &corpus("octahedron.pg")]));
    assert!(lp.contains("weights:"));
}

#[test]
fn exit_codes() {
    assert_eq!(inscribe(&["decide", &corpus("cube.pg")]).status.code(), Some(2));
    assert_eq!(
        inscribe(&["decide", "--inscribable", "--circumscribable", &corpus("cube.pg")]).status.code(),
        Some(2)
    );
    assert_eq!(inscribe(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(inscribe(&["generate", "blob"]).status.code(), Some(2));
    assert_eq!(inscribe(&["generate", "prism", "2"]).status.code(), Some(2));
    assert_eq!(inscribe(&["validate", "/nonexistent/file.pg"]).status.code(), Some(2));
    let capped = inscribe(&[
        "decide",
        "--circumscribable",
        "--max-iters",
        "0",
        &corpus("kleetope_tet.pg"),
    ]);
    assert_eq!(capped.status.code(), Some(3));
    let bad = inscribe_stdin(&["decide", "--inscribable", "-"], b"polygraph 1\nvertices 2\nv 0: 1\nv 1: 0\n");
    assert_eq!(bad.status.code(), Some(2));
    let both = inscribe(&["verify", "-", "-"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn non_polyhedral_input_is_reported_not_rejected_by_validate() {
    // A 4-cycle with one chord: spherical but only 2-connected.
    let text = b"polygraph 1\nvertices 4\nv 0: 1 2 3\nv 1: 2 0\nv 2: 3 0 1\nv 3: 0 2\n";
    let out = inscribe_stdin(&["validate", "-"], text);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("three_connected false"));
    assert_eq!(inscribe_stdin(&["faces", "-"], text).status.code(), Some(2));
}
