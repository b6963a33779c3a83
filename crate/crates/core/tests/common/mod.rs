//! Golden CLI invocations shared by the golden test and the acceptance gate.

use std::path::PathBuf;
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("gpds_1243_count", &["gpds", "--perm", "1243", "--count"]),
    ("gpds_2431", &["gpds", "--perm", "2431"]),
    ("gpds_2431_json", &["--format", "json", "gpds", "--perm", "2431"]),
    ("gpds_partial", &["gpds", "--matrix", "10/00"]),
    ("gpds_double_bruhat", &["gpds", "--u", "21", "--v", "12"]),
    ("gw_12", &["gw", "--perm", "12"]),
    ("class_132", &["class", "--perm", "132"]),
    ("class_132_json", &["--format", "json", "class", "--perm", "132"]),
    ("schubert_2431", &["schubert", "--perm", "2431"]),
    ("degree_3_terms", &["degree", "--n", "3", "--terms"]),
    ("degree_6", &["degree", "--n", "6"]),
    ("degree_2431_brute", &["degree", "--perm", "2431", "--method", "brute"]),
    ("degree_too_large", &["degree", "--n", "40"]),
    ("csm_kazhdan_lusztig", &["csm", "--word", "1,2,1", "--perm", "213"]),
    ("csm_partial", &["csm", "--matrix", "10/00"]),
    ("csm_double_bruhat", &["csm", "--u", "21", "--v", "12"]),
    ("ssm_parabolic", &["ssm", "--word", "1,2,1", "--perm", "213", "--parabolic", "1"]),
    ("ktheory_gpd", &["ktheory", "--perm", "12"]),
    ("ktheory_motivic", &["ktheory", "--perm", "213", "--word", "1,2,1"]),
    ("render_1243", &["render", "--perm", "1243", "--grid", "acjv/cjrj/chj./j..."]),
    ("render_invalid", &["render", "--perm", "12", "--grid", "cc/.."]),
    ("verify_2", &["verify", "--n", "2"]),
    ("verify_3", &["verify", "--n", "3"]),
    ("bad_permutation", &["schubert", "--perm", "1134"]),
    ("missing_boundary", &["gpds", "--count"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs the binary and renders exit status, stdout and stderr as one string.
pub fn run(threads: &str, args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_pipedream"))
        .args(["--threads", threads])
        .args(args)
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}
