use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const S8: &str = "10101010101011000";
const T8: &str = "11010101101010000";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_flipdist"));
    c.env_remove("ASSOC_MAX_N");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compares `--json` output with `tests/golden/<name>.json`; set
/// `UPDATE_GOLDEN=1` to rewrite the file.
fn golden(name: &str, args: &[&str]) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = stdout(&run(&full));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(out, want, "golden mismatch for {name}");
}

#[test]
fn distance_of_the_size_eight_pair() {
    assert_eq!(stdout(&run(&["distance", S8, T8])), "8\n");
}

#[test]
fn greedy_length_nine() {
    let out = stdout(&run(&["greedy", S8, T8]));
    assert!(out.starts_with("length 9\ndistance 8\noverestimate 1\n"), "{out}");
    let back = stdout(&run(&["greedy", T8, S8]));
    assert!(back.starts_with("length 8\n"));
}

#[test]
fn construct_pipes_into_distance() {
    let pair = stdout(&run(&["construct", "rising", "3"]));
    assert_eq!(stdout(&run_stdin(&["distance"], &pair)), "10\n");
    let padded = stdout(&run(&["construct", "overshoot", "--pad", "2"]));
    assert_eq!(stdout(&run_stdin(&["distance"], &padded)), "8\n");
}

#[test]
fn chord_lists_are_accepted() {
    assert_eq!(stdout(&run(&["encode", "0-8,1-8,2-8,3-8,4-8,5-8,5-7"])), format!("{S8}\n"));
    assert_eq!(stdout(&run(&["decode", "11000"])), "1-3\n");
}

#[test]
fn exit_codes() {
    let domain = run(&["decode", "1-2"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("1-2 joins adjacent polygon vertices"));
    assert_eq!(run(&["distance", S8, "100"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["distance", S8]).status.code(), Some(2));
    assert_eq!(run(&["construct", "rising"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["greedy", "--tie", "sideways", S8, T8]).status.code(), Some(2));
    assert_eq!(run(&["construct", "rising", "0"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_size_guard() {
    let guarded = bin().args(["census", "5"]).env("ASSOC_MAX_N", "4").output().unwrap();
    assert_eq!(guarded.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&guarded.stderr).contains("exceeds the configured maximum 4"));
    let forced = bin().args(["census", "5", "--force"]).env("ASSOC_MAX_N", "4").output().unwrap();
    assert!(forced.status.success());
    assert_eq!(run(&["census", "11"]).status.code(), Some(1));
}

#[test]
fn census_csv_and_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("census.csv");
    let ck = dir.path().join("ck");
    let args = |threads: &str| {
        vec![
            "census".to_string(),
            "6".into(),
            "--threads".into(),
            threads.into(),
            "--block-size".into(),
            "10".into(),
            "--csv".into(),
            csv.display().to_string(),
            "--checkpoint".into(),
            ck.display().to_string(),
        ]
    };
    let first = stdout(&bin().args(args("1")).output().unwrap());
    let first_csv = std::fs::read(&csv).unwrap();
    // Resuming from a complete checkpoint reproduces the same bytes.
    let second = stdout(&bin().args(args("4")).output().unwrap());
    assert_eq!(first, second);
    assert_eq!(first_csv, std::fs::read(&csv).unwrap());
    let text = String::from_utf8(first_csv).unwrap();
    assert!(text.starts_with("s_word,t_word,distance,conflicts,greedy_length,overestimate,"));
    assert!(first.contains("class_count = "));
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.svg");
    stdout(&run(&["render", S8, T8, "-o", path.to_str().unwrap()]));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg, stdout(&run(&["render", S8, T8])));
    assert_eq!(svg.matches(r#"class="source""#).count(), 7);
    assert_eq!(svg.matches(r#"class="target""#).count(), 7);
}

#[test]
fn golden_json() {
    golden("encode", &["encode", "0-2,0-3"]);
    golden("decode", &["decode", S8]);
    golden("distance", &["distance", S8, T8]);
    golden("conflicts", &["conflicts", S8, T8]);
    golden("neighbors", &["neighbors", S8, "--target", T8]);
    golden("greedy", &["greedy", S8, T8]);
    golden("geodesics", &["geodesics", S8, T8]);
    golden("check-pair", &["check-pair", S8, T8]);
    golden("construct", &["construct", "rising", "2"]);
    golden("census", &["census", "5", "--threads", "1"]);
    golden("render", &["render", "10100", "11000"]);
}
