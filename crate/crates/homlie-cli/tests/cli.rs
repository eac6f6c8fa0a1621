//! End-to-end tests of the binary: output lines, exit codes, JSON round-trips.

use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn homlie(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn arg(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn verify_corpus_holds() {
    for name in ["A1", "A2", "A3", "S3", "H3", "H3q"] {
        let (code, stdout, _) = homlie(&["verify", arg(&data(&format!("{name}.json")))]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(
            stdout.trim(),
            "hom-Jacobi: holds; multiplicative: holds; regular: true",
            "{name}"
        );
    }
}

#[test]
fn verify_property_failure_exits_one() {
    let bad = tmp(
        "bad_jacobi.json",
        r#"{"dim": 3,
            "brackets": [{"i":0,"j":1,"coeffs":["0","2","0"]},
                         {"i":0,"j":2,"coeffs":["0","0","-2"]},
                         {"i":1,"j":2,"coeffs":["1","0","0"]}],
            "alpha": [["1","0","0"],["0","1","0"],["0","0","2"]]}"#,
    );
    let (code, stdout, _) = homlie(&["verify", arg(&bad)]);
    assert_eq!(code, 1);
    assert!(stdout.contains("hom-Jacobi: fails at [0, 1, 2]"), "{stdout}");
}

#[test]
fn input_errors_exit_two() {
    let (code, _, stderr) = homlie(&["verify", "/nonexistent/path.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "{stderr}");

    let bad = tmp("bad_rational.json", r#"{"dim": 1, "alpha": [["x"]]}"#);
    let (code, _, stderr) = homlie(&["verify", arg(&bad)]);
    assert_eq!(code, 2);
    assert!(stderr.contains("alpha[0][0]"), "{stderr}");

    let (code, _, stderr) =
        homlie(&["cohomology", arg(&data("A2.json")), "--rep", "bogus", "--degree", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown representation"), "{stderr}");
}

#[test]
fn cohomology_dims_line() {
    let (code, stdout, _) =
        homlie(&["cohomology", arg(&data("A2.json")), "--rep", "adjoint:-1", "--degree", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "dims Z=2 B=2 H=0");

    let (code, stdout, _) =
        homlie(&["cohomology", arg(&data("S3.json")), "--rep", "trivial", "--degree", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "dims Z=1 B=0 H=1");
}

#[test]
fn nijenhuis_summary_line() {
    let (code, stdout, _) =
        homlie(&["nijenhuis", arg(&data("A2.json")), "--op", arg(&data("N_diag10.json"))]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "hom-Nijenhuis: yes; deformation: valid; trivializes: yes");

    let bad = tmp(
        "not_nijenhuis.json",
        r#"{"dim": 3, "matrix": [["1","0","0"],["0","0","0"],["0","0","0"]]}"#,
    );
    let (code, stdout, _) = homlie(&["nijenhuis", arg(&data("S3.json")), "--op", arg(&bad)]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("hom-Nijenhuis: no"), "{stdout}");
}

#[test]
fn derivations_dimensions() {
    let (code, stdout, _) = homlie(&["derivations", arg(&data("S3.json")), "--grade", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("derivations grade 0: dim 3"), "{stdout}");

    let (code, stdout, _) = homlie(&["inner-derivations", arg(&data("A2.json")), "--grade", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("inner derivations grade 0: dim 2"), "{stdout}");
}

#[test]
fn structured_output_round_trips_through_verify() {
    let (code, stdout, _) = homlie(&[
        "central-extend",
        arg(&data("A1.json")),
        "--theta",
        arg(&data("theta_A1.json")),
        "--output",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["hom_jacobi"]["holds"], serde_json::Value::Bool(true));
    let algebra = serde_json::to_string(&v["algebra"]).unwrap();
    let path = tmp("extended_algebra.json", &algebra);
    let (code, stdout, _) = homlie(&["verify", arg(&path)]);
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn semidirect_and_direct_sum_verify() {
    let (code, stdout, _) =
        homlie(&["semidirect", arg(&data("A2.json")), "--rep", arg(&data("rep_A2_ad0.json"))]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dim 4"), "{stdout}");

    let (code, stdout, _) = homlie(&["direct-sum", arg(&data("A3.json")), arg(&data("H3q.json"))]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dim 5"), "{stdout}");
}

#[test]
fn morphism_check_both_routes() {
    let ident = tmp("ident2.json", r#"{"matrix": [["1","0"],["0","1"]]}"#);
    let (code, stdout, _) = homlie(&[
        "morphism-check",
        arg(&data("A2.json")),
        arg(&data("A2.json")),
        "--map",
        arg(&ident),
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "morphism: yes; graph subalgebra: yes");

    let swap = tmp("swap2.json", r#"{"matrix": [["0","1"],["1","0"]]}"#);
    let (code, stdout, _) = homlie(&[
        "morphism-check",
        arg(&data("A2.json")),
        arg(&data("A2.json")),
        "--map",
        arg(&swap),
    ]);
    assert_eq!(code, 1);
    assert_eq!(stdout.trim(), "morphism: no; graph subalgebra: no");
}

#[test]
fn derivation_extension_tracks_membership() {
    let (code, stdout, _) =
        homlie(&["derivation-extend", arg(&data("A2.json")), "--op", arg(&data("D_diag01.json"))]);
    assert_eq!(code, 0, "{stdout}");

    // diag(1,0) is hom-Nijenhuis but not an alpha-derivation of A2
    let (code, stdout, _) =
        homlie(&["derivation-extend", arg(&data("A2.json")), "--op", arg(&data("N_diag10.json"))]);
    assert_eq!(code, 1);
    assert!(stdout.contains("hom-Jacobi: fails"), "{stdout}");
}

#[test]
fn deform_samples_parameters() {
    let (code, stdout, _) = homlie(&[
        "deform",
        arg(&data("A2.json")),
        "--omega",
        arg(&data("omega_A2.json")),
        "--t",
        "1,-1,1/2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("generates-deformation: holds"), "{stdout}");
    assert!(stdout.contains("t = 1/2: hom-Jacobi: holds"), "{stdout}");
}

#[test]
fn d_squared_across_reps() {
    for rep in ["trivial", "adjoint:-1", "adjoint:0", "adjoint:1"] {
        let (code, stdout, _) =
            homlie(&["d-squared", arg(&data("H3q.json")), "--rep", rep, "--max-degree", "3"]);
        assert_eq!(code, 0, "{rep}: {stdout}");
        assert_eq!(stdout.trim(), "d∘d = 0: holds", "{rep}");
    }
}

#[test]
fn json_outputs_reparse_under_the_input_schemas() {
    // derivation bases come back as operator files
    let (code, stdout, _) =
        homlie(&["derivations", arg(&data("S3.json")), "--grade", "0", "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dim"], 3);
    for op in v["basis"].as_array().unwrap() {
        let json = serde_json::to_string(op).unwrap();
        homlie::io::matrix_from_json(&json).unwrap();
    }

    // cohomology representatives come back as cochain files
    let (code, stdout, _) = homlie(&[
        "cohomology",
        arg(&data("A2.json")),
        "--rep",
        "trivial",
        "--degree",
        "1",
        "--output",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dim_H"], 1);
    for rep in v["representatives"].as_array().unwrap() {
        let json = serde_json::to_string(rep).unwrap();
        homlie::io::cochain_from_json(&json, 2).unwrap();
    }

    // deformed algebras re-parse and re-verify
    let (code, stdout, _) = homlie(&[
        "deform",
        arg(&data("A2.json")),
        "--omega",
        arg(&data("omega_A2.json")),
        "--output",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for sample in v["samples"].as_array().unwrap() {
        let json = serde_json::to_string(&sample["algebra"]).unwrap();
        let g = homlie::io::algebra_from_json(&json).unwrap();
        assert!(g.verify_hom_jacobi().holds);
    }
}

#[test]
fn iso_check_verifies_and_rejects() {
    // theta1 = d_T(e2*) on A2 has theta1(e1,e2) = -1
    let theta1 =
        tmp("theta1.json", r#"{"degree": 2, "values": [{"i": 0, "j": 1, "value": "-1"}]}"#);
    let theta2 = tmp("theta2.json", r#"{"degree": 2, "values": []}"#);
    let f = tmp(
        "f_e2star.json",
        r#"{"degree": 1, "module_dim": 1, "values": [{"indices": [1], "coeffs": ["1"]}]}"#,
    );
    let (code, stdout, _) = homlie(&[
        "iso-check",
        arg(&data("A2.json")),
        "--theta1",
        arg(&theta1),
        "--theta2",
        arg(&theta2),
        "--f",
        arg(&f),
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("central-extension isomorphism: holds"), "{stdout}");

    let fzero = tmp("f_zero.json", r#"{"degree": 1, "module_dim": 1, "values": []}"#);
    let (code, stdout, _) = homlie(&[
        "iso-check",
        arg(&data("A2.json")),
        "--theta1",
        arg(&theta1),
        "--theta2",
        arg(&theta2),
        "--f",
        arg(&fzero),
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("not cohomologous"), "{stdout}");
}
