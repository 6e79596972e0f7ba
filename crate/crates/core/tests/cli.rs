use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn inputs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../inputs")
}

fn run(args: &[&str], input: &Path, threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bethe-ff"));
    cmd.args(args).arg("--input").arg(input);
    match threads {
        Some(n) => cmd.env("BETHE_FF_THREADS", n),
        None => cmd.env_remove("BETHE_FF_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout_without_time(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).lines().filter(|l| !l.starts_with("time:")).collect::<Vec<_>>().join("\n")
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn sample_inputs_pass() {
    for (task, file) in [("ff", "ff12.txt"), ("ff", "ff32.txt"), ("sp", "sp.txt"), ("chain", "chain.txt")] {
        let out = run(&[task], &inputs().join(file), None);
        let text = stdout_without_time(&out);
        assert_eq!(out.status.code(), Some(0), "{file}:\n{text}");
        assert!(text.ends_with("status: pass"), "{file}:\n{text}");
    }
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let file = inputs().join("ff12.txt");
    let first = stdout_without_time(&run(&["ff"], &file, None));
    assert_eq!(first, stdout_without_time(&run(&["ff"], &file, None)));
    assert_eq!(first, stdout_without_time(&run(&["ff"], &file, Some("4"))));
    assert!(first.contains("agreement: exact"));
}

#[test]
fn verify_with_seed_override() {
    let file = inputs().join("verify_all.txt");
    let a = run(&["verify", "--seed", "11"], &file, Some("2"));
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["verify", "--seed", "11"], &file, None);
    assert_eq!(stdout_without_time(&a), stdout_without_time(&b));
}

#[test]
fn float_backend_for_ff() {
    let out = run(&["ff", "--backend", "float"], &inputs().join("ff12.txt"), None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_without_time(&out).contains("task: ff (float)"));
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["ff"], &inputs().join("bad_key.txt"), None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("line 3"));

    // Task named twice, inconsistently.
    let out = run(&["sp"], &inputs().join("ff12.txt"), None);
    assert_eq!(out.status.code(), Some(2));

    // Wrong cardinalities for (2,3).
    let doc = temp_doc("entry = 2,3\nuC = [1]\nvC = []\nuB = []\nvB = []\nz = 2\n");
    assert_eq!(run(&["ff"], doc.path(), None).status.code(), Some(2));

    // Chain is float-only.
    let out = run(&["chain", "--backend", "rational"], &inputs().join("chain.txt"), None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["ff"], Path::new("/nonexistent/bethe-ff-input"), None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn singular_data_exits_3() {
    // u^C - u^B = -c
    let doc = temp_doc("entry = 1,2\nuC = [0, 5]\nvC = []\nuB = [1]\nvB = []\nz = 1/2\n");
    let out = run(&["ff"], doc.path(), None);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn newton_failure_exits_4() {
    // Two magnons on two sites: the only state is a descendant, with roots at
    // infinity, so no finite starting point converges.
    let doc = temp_doc("L = 2\na = 2\nb = 0\n");
    let out = run(&["chain"], doc.path(), None);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn coincident_newton_start_exits_3() {
    let doc = temp_doc("L = 2\na = 2\nb = 0\ninit = [0.3, 0.3]\n");
    assert_eq!(run(&["chain"], doc.path(), None).status.code(), Some(3));
}
