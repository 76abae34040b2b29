use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use onionpeel::generators::corpus;
use onionpeel::write_epg;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_onionpeel"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("onionpeel-it-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gen", "cycle", "4"], "").status.code(), Some(0));
    assert_eq!(run(&[], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle"], "").status.code(), Some(2));
    assert_eq!(
        run(&["oracle", "theorem1", "--k", "3"], "").status.code(),
        Some(2)
    );

    let bad = run(&["peel"], "epg 1\nv 0: 1\nv 1:\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("AsymmetricAdjacency"));

    let tiny = run(&["disk"], &write_epg(&onionpeel::gen_path(2).unwrap()));
    assert_eq!(tiny.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&tiny.stderr).contains("TooSmall"));

    let k5 =
        "epg 1\nv 0: 1 2 3 4\nv 1: 0 2 3 4\nv 2: 0 1 3 4\nv 3: 0 1 2 4\nv 4: 0 1 2 3\nouter 0 1\n";
    assert_eq!(run(&["peel"], k5).status.code(), Some(1));
}

#[test]
fn counterexample_pipeline_report() {
    let g = stdout(&run(&["gen", "counterexample", "2"], ""));
    let out = run(&["pipeline"], &g);
    assert!(out.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r["k_in"], 2);
    assert!(r["bd_width"].as_u64().unwrap() <= 4);
    assert!(r["tw_bound"].as_u64().unwrap() <= 5);
}

#[test]
fn square_triangulates_to_k4() {
    let dir = scratch("square");
    let trace = dir.join("t.json");
    let g = stdout(&run(&["gen", "cycle", "4"], ""));
    let out = run(&["triangulate", "--json", path_str(&trace)], &g);
    assert!(out.status.success());
    let t: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(
        (t["k_in"].as_u64(), t["k_out"].as_u64()),
        (Some(1), Some(2))
    );
    let k4 = stdout(&out);
    let op = run(&["oracle", "outerplanarity"], &k4);
    let v: serde_json::Value = serde_json::from_str(&stdout(&op)).unwrap();
    assert_eq!(v["outerplanarity"], 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_accepts_everything_the_tool_emits() {
    let dir = scratch("verify");
    for (name, g) in corpus(3, 12) {
        if g.vertex_count() < 3 {
            continue;
        }
        let epg = dir.join(format!("{name}.epg"));
        std::fs::write(&epg, write_epg(&g)).unwrap();
        let e = path_str(&epg);
        for cmd in ["disk", "triangulate"] {
            let out_epg = dir.join(format!("{name}.{cmd}.epg"));
            let trace = dir.join(format!("{name}.{cmd}.json"));
            let o = run(
                &[
                    cmd,
                    "--in",
                    e,
                    "--out",
                    path_str(&out_epg),
                    "--json",
                    path_str(&trace),
                ],
                "",
            );
            assert!(
                o.status.success(),
                "{name} {cmd}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
            let v = run(
                &[
                    "verify",
                    "--in",
                    path_str(&out_epg),
                    "--json",
                    path_str(&trace),
                ],
                "",
            );
            assert!(
                v.status.success(),
                "{name} {cmd}: {}",
                String::from_utf8_lossy(&v.stderr)
            );
        }
        for cmd in ["peel", "forest", "pipeline"] {
            let artifact = dir.join(format!("{name}.{cmd}.json"));
            assert!(run(&[cmd, "--in", e, "--out", path_str(&artifact)], "")
                .status
                .success());
            let v = run(&["verify", "--in", e, "--json", path_str(&artifact)], "");
            assert!(
                v.status.success(),
                "{name} {cmd}: {}",
                String::from_utf8_lossy(&v.stderr)
            );
        }
        let disk = dir.join(format!("{name}.disk.epg"));
        let bd = dir.join(format!("{name}.bd.json"));
        assert!(
            run(&["bd", "--in", path_str(&disk), "--out", path_str(&bd)], "")
                .status
                .success()
        );
        let v = run(
            &["verify", "--in", path_str(&disk), "--json", path_str(&bd)],
            "",
        );
        assert!(
            v.status.success(),
            "{name} bd: {}",
            String::from_utf8_lossy(&v.stderr)
        );
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_rejects_tampered_artifacts() {
    let dir = scratch("tamper");
    let g = stdout(&run(&["gen", "nested-triangles", "3"], ""));
    let epg = dir.join("g.epg");
    std::fs::write(&epg, &g).unwrap();
    let bd = dir.join("bd.json");
    assert!(
        run(&["bd", "--in", path_str(&epg), "--out", path_str(&bd)], "")
            .status
            .success()
    );
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&bd).unwrap()).unwrap();
    v["width"] = serde_json::json!(1);
    std::fs::write(&bd, v.to_string()).unwrap();
    let o = run(
        &["verify", "--in", path_str(&epg), "--json", path_str(&bd)],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("VerifyFailed"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dot_output() {
    let dir = scratch("dot");
    let dot = dir.join("g.dot");
    assert!(run(&["gen", "wheel", "5", "--dot", path_str(&dot)], "")
        .status
        .success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph") && text.contains("--"));
    std::fs::remove_dir_all(dir).unwrap();
}
