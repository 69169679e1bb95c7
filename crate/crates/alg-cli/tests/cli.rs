//! End-to-end tests of the `alg` binary: exit codes, output determinism,
//! format handling, and the shipped data files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use alg_cli::samples;
use alg_core::to_graph6;

fn alg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alg"))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn data_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

#[test]
fn analyze_c5_reports_documented_values() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = to_graph6(&alg_core::generators::cycle(5).unwrap()).unwrap();
    let input = write_temp(&dir, "c5.g6", &format!("{c5}\n"));
    let out = alg().args(["analyze"]).arg(&input).output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["l_alg"], 1);
    assert_eq!(json["defect"], 1);
    assert_eq!(json["oct"], 1);
    assert_eq!(json["census"]["delta3"], 0);
    assert_eq!(json["census"]["total"], 0);
    assert!(json["census"]["tau3_num"].is_null());
}

#[test]
fn analyze_example1_and_witness_values() {
    let dir = tempfile::tempdir().unwrap();
    let (g1, _) = samples::inertia_separated_pair();
    let input = write_temp(&dir, "g1.g6", &format!("{}\n", to_graph6(&g1).unwrap()));
    let out = alg().args(["analyze"]).arg(&input).output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["census"]["total"], 20);
    assert_eq!(json["census"]["delta3"], 12);
    assert_eq!(json["inertia"]["positive"], 4);
    assert_eq!(json["inertia"]["negative"], 6);
    assert_eq!(json["inertia"]["zero"], 0);

    let (_, h) = samples::defect_blind_pair();
    let input = write_temp(&dir, "h.g6", &format!("{}\n", to_graph6(&h).unwrap()));
    let out = alg().args(["analyze"]).arg(&input).output().unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["l_alg"], 4);
    assert_eq!(json["defect"], 2);
}

#[test]
fn analyze_reads_edge_lists_and_stdin() {
    use std::io::Write;
    let mut child = alg()
        .args(["analyze", "-", "--format", "table"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"# triangle\n0 1\n1 2\n0 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("l_alg"));
}

#[test]
fn analyze_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = to_graph6(&alg_core::generators::petersen()).unwrap();
    let input = write_temp(&dir, "p.g6", &format!("{petersen}\n"));
    let a = alg().args(["analyze"]).arg(&input).output().unwrap();
    let b = alg().args(["analyze"]).arg(&input).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // timings are opt-in precisely so the default output stays stable
    let timed = alg()
        .args(["analyze", "--timings"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(stdout_of(&timed).contains("timings"));
    assert!(!stdout_of(&a).contains("timings"));
}

#[test]
fn exit_codes_are_documented() {
    let dir = tempfile::tempdir().unwrap();
    // 2: parse error
    let bad = write_temp(&dir, "bad.g6", "Bww\n");
    let out = alg().args(["analyze"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // 3: resource limit names the stage
    let k9 = write_temp(
        &dir,
        "k9.g6",
        &format!(
            "{}\n",
            to_graph6(&alg_core::generators::complete(9).unwrap()).unwrap()
        ),
    );
    let out = alg().args(["analyze"]).arg(&k9).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("frustration"));
    // skipping the over-limit stages succeeds
    let out = alg()
        .args(["analyze", "--skip", "frustration,energy,vf"])
        .arg(&k9)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // 2: unknown identity, listing valid names
    let out = alg().args(["verify", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cubic-oct"));
    // 2: unknown family
    let out = alg().args(["family", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_parity_passes_on_small_catalog() {
    let out = alg()
        .args(["verify", "parity", "--n-max", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("0 violation(s)"));
}

#[test]
fn verify_accepts_explicit_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = to_graph6(&alg_core::generators::petersen()).unwrap();
    let file = write_temp(&dir, "cubics.g6", &format!("{petersen}\n"));
    let out = alg()
        .args(["verify", "cubic-oct", "--graphs"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("checked 1 instances"));
}

#[test]
fn sweep_example_pairs_summary() {
    let out = alg()
        .args(["sweep"])
        .arg(data_file("example_pairs.g6"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 4);
    assert_eq!(json["cospectral_pairs"], 2);
    assert_eq!(json["pairs_delta3_separated"], 0);
    assert_eq!(json["pairs_inertia_separated"], 1);
}

#[test]
fn sweep_writes_independent_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("out.jsonl");
    let out = alg()
        .args(["sweep"])
        .arg(data_file("example_pairs.g6"))
        .args(["--out"])
        .arg(&jsonl)
        .output()
        .unwrap();
    assert!(out.status.success());
    let body = std::fs::read_to_string(&jsonl).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["graph"]["graph6"].is_string());
        assert_eq!(v["timeout_flag"], false);
    }
}

#[test]
fn sweep_skips_malformed_and_handles_empty() {
    let dir = tempfile::tempdir().unwrap();
    let mixed = write_temp(&dir, "mixed.g6", "Bw\nnot graph6\n");
    let out = alg().args(["sweep"]).arg(&mixed).output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 1);
    assert_eq!(json["malformed_lines"], 1);

    let empty = write_temp(&dir, "empty.g6", "# nothing\n");
    let out = alg().args(["sweep"]).arg(&empty).output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 0);
}

#[test]
fn family_tables_render() {
    let out = alg()
        .args(["family", "odd-cycle", "--range", "1..4", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("k,n,l_alg,def,spectral"));

    let out = alg()
        .args(["family", "multipartite", "--parts", "2,2,2"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("| 8 |"));
    assert!(text.contains("0.75"));
}

#[test]
fn shipped_data_files_match_regeneration() {
    // example pairs
    let body = std::fs::read_to_string(data_file("example_pairs.g6")).unwrap();
    let from_file: Vec<String> = body
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    let expected: Vec<String> = samples::example_pair_graphs()
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    assert_eq!(from_file, expected);

    // atlas sample
    let body = std::fs::read_to_string(data_file("atlas_n7_m12.g6")).unwrap();
    let from_file: Vec<String> = body
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    let expected: Vec<String> = samples::atlas_sample(7, 12, true)
        .unwrap()
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    assert_eq!(
        from_file, expected,
        "regenerate with: cargo run -p alg-cli --example regenerate_data"
    );
}

#[test]
fn sweep_atlas_file_reports_correlation_band() {
    let out = alg()
        .args(["sweep"])
        .arg(data_file("atlas_n7_m12.g6"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 681);
    assert_eq!(json["malformed_lines"], 0);
    let r = json["pearson_l_def"].as_f64().unwrap();
    assert!((0.75..=0.95).contains(&r), "pearson {r} outside band");
}

#[test]
fn sweep_with_zero_cutoff_marks_timeouts() {
    let out = alg()
        .args(["sweep", "--cutoff-ms", "0"])
        .arg(data_file("example_pairs.g6"))
        .output()
        .unwrap();
    assert!(out.status.success(), "timeouts must not be fatal");
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 4);
    assert_eq!(json["timeout_instances"], 4);
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let jsonl = dir.path().join(name);
        let out = alg()
            .env("ALG_THREADS", threads)
            .args(["sweep"])
            .arg(data_file("example_pairs.g6"))
            .args(["--out"])
            .arg(&jsonl)
            .output()
            .unwrap();
        assert!(out.status.success());
        (out.stdout, std::fs::read(&jsonl).unwrap())
    };
    let (summary_a, jsonl_a) = run("1", "a.jsonl");
    let (summary_b, jsonl_b) = run("4", "b.jsonl");
    assert_eq!(summary_a, summary_b);
    assert_eq!(jsonl_a, jsonl_b);
}

#[test]
fn alg_threads_env_is_honored() {
    let out = alg()
        .env("ALG_THREADS", "1")
        .args(["sweep"])
        .arg(data_file("example_pairs.g6"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["instances"], 4);
}
