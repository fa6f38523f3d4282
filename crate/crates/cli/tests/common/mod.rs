//! Subcommand cases shared by the golden tests and the acceptance run.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("validate_good", &["validate", "good_reduction.json"]),
    ("validate_bad_monotone", &["validate", "bad_monotone.json"]),
    ("validate_charts", &["validate", "charts_p2.json"]),
    ("validate_chain", &["validate", "chain_1p1_p3.json"]),
    ("validate_i0star", &["validate", "i0star.json"]),
    ("classify_genus0", &["classify", "genus0_p5.json"]),
    ("classify_charts", &["classify", "charts_p2.json"]),
    ("classify_iv_star", &["classify", "iv_star.json"]),
    ("zeta_i0star", &["zeta", "i0star.json"]),
    ("zeta_i2", &["zeta", "i2.json"]),
    ("zeta_genus0", &["zeta", "genus0_p5.json"]),
    ("zeta_multiple_fibre", &["zeta", "multiple_fibre_p3.json"]),
    ("euler_i0star", &["euler", "i0star.json"]),
    ("euler_genus0", &["euler", "genus0_p5.json"]),
    ("euler_injected", &["euler", "injected_chi.json"]),
    ("tame_point_multiple_fibre", &["tame-point", "multiple_fibre_p3.json"]),
    ("tame_point_genus0", &["tame-point", "genus0_p5.json"]),
    ("tame_point_scaled_graph", &["tame-point", "multiple_fibre_graph.json"]),
    ("check_smooth_charts", &["check-smooth", "charts_p2.json"]),
    ("check_smooth_good", &["check-smooth", "good_reduction.json"]),
    ("check_smooth_iv_star", &["check-smooth", "iv_star.json"]),
    ("restrictions_multiple_fibre", &["restrictions", "multiple_fibre_p3.json"]),
    ("restrictions_injected", &["restrictions", "injected_chi.json"]),
    ("restrictions_genus0", &["restrictions", "genus0_p5.json"]),
    ("restrictions_unclaimed", &["restrictions", "charts_p2.json"]),
    ("saito_i0star_p5", &["saito", "i0star.json"]),
    ("saito_i2", &["saito", "i2.json"]),
    ("saito_chain", &["saito", "chain_1p1_p3.json"]),
    ("saito_iv_star", &["saito", "iv_star.json"]),
    ("saito_model_rejected", &["saito", "good_reduction.json"]),
    ("scale_i2", &["scale", "i2.json", "--m", "3"]),
    ("scale_i2_dot", &["scale", "i2.json", "--m", "3", "--dot"]),
    ("contract_wild_tail", &["contract", "wild_tail_p2.json", "--vertex", "E"]),
    ("contract_all", &["contract", "blown_up_i2.json", "--all"]),
    ("contract_refused", &["contract", "iv_star.json", "--vertex", "Z"]),
    ("kodaira_i0star", &["kodaira", "--type", "I0*", "--p", "5"]),
    ("kodaira_i5", &["kodaira", "--type", "I", "--n", "5"]),
    ("kodaira_ii_star_dot", &["kodaira", "--type", "II*", "--dot"]),
    ("kodaira_iii", &["kodaira", "--type", "III"]),
    ("kodaira_unknown", &["kodaira", "--type", "V"]),
    (
        "genus1_flat",
        &["genus1", "--p", "2", "--period", "2", "--h1-tame", "true", "--jacobian", "good", "--coh-flat", "true"],
    ),
    (
        "genus1_tame_period",
        &["genus1", "--p", "2", "--period", "3", "--h1-tame", "true", "--jacobian", "mult"],
    ),
    (
        "genus1_bad_jacobian",
        &["genus1", "--p", "2", "--period", "2", "--h1-tame", "true", "--jacobian", "mult"],
    ),
    (
        "genus1_wild_h1",
        &["genus1", "--p", "3", "--period", "1", "--h1-tame", "false", "--jacobian", "good"],
    ),
    (
        "genus1_mu",
        &["genus1", "--p", "2", "--period", "4", "--h1-tame", "true", "--jacobian", "good", "--mu", "2"],
    ),
    (
        "genus1_missing",
        &["genus1", "--p", "3", "--period", "3", "--h1-tame", "true", "--jacobian", "good"],
    ),
    (
        "genus1_inconsistent",
        &[
            "genus1", "--p", "3", "--period", "3", "--h1-tame", "true", "--jacobian", "good",
            "--coh-flat", "false", "--mu", "3",
        ],
    ),
    (
        "genus1_supersingular",
        &[
            "genus1", "--p", "2", "--period", "2", "--h1-tame", "true", "--jacobian", "good",
            "--mu", "2", "--supersingular", "true",
        ],
    ),
    (
        "genus1_auto",
        &["genus1", "--p", "5", "--period", "10", "--h1-tame", "auto", "--jacobian", "mult"],
    ),
    ("error_float", &["zeta", "bad_float.json"]),
    ("error_syntax", &["zeta", "bad_syntax.json"]),
    ("error_missing_file", &["zeta", "no_such_file.json"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

/// Runs the binary from the data directory; returns the transcript.
pub fn transcript(args: &[&str], json: bool) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_logred"));
    cmd.current_dir(tests_dir().join("data")).args(args);
    if json {
        cmd.arg("--json");
    }
    let out = cmd.output().expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn golden_path(name: &str, json: bool) -> PathBuf {
    let ext = if json { "json.out" } else { "txt.out" };
    tests_dir().join("golden").join(format!("{name}.{ext}"))
}

