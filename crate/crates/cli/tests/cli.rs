use std::path::PathBuf;
use std::process::{Command, Output};

use einfty::barratt_eccles::PermSimplex;
use einfty::surjection::{parse_sum, Surjection};

fn einfty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_einfty"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = einfty(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

#[test]
fn operad_commands() {
    assert_eq!(
        stdout(&["surj", "table", "1,4,2,5,3,2,3"]),
        "1,4,2 ; 5,3 ; 2,3\ncaesuras: 3,5\n"
    );
    assert_eq!(stdout(&["be", "theta", "2"]), "1 2 | 2 1 | 1 2\n");
    assert_eq!(stdout(&["tr", "1 2 | 2 1"]), "1,2,1\n");
    assert_eq!(stdout(&["surj", "compose", "1,2", "1", "1,2"]), "1,2,3\n");
    assert_eq!(stdout(&["surj", "compose", "1,2", "2", "1,2"]), "1,2,3\n");
}

#[test]
fn bar_commands() {
    assert_eq!(
        stdout(&["bar", "admissible", "--w", "1 2", "--sizes", "2,1"]),
        "3,1,3,2,3\n"
    );
    assert_eq!(
        stdout(&["bar", "admissible", "--w", "1 2 | 2 1", "--sizes", "1,1"]),
        "2,1,2,1\n"
    );
    let h = stdout(&[
        "bar",
        "homology",
        "--algebra",
        &fixture("s2.sset"),
        "--max-grade",
        "5",
    ]);
    assert_eq!(h, "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n");
    let h = stdout(&[
        "bar",
        "homology",
        "--algebra",
        &fixture("truncated_x3.alg"),
        "--max-grade",
        "5",
    ]);
    assert_eq!(h, "0 1\n1 1\n2 0\n3 0\n4 1\n5 1\n");
}

#[test]
fn verify_suites_pass() {
    for suite in ["operads", "tr"] {
        let out = stdout(&["verify", suite, "--trials", "20"]);
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
}

#[test]
fn exit_codes() {
    // Parse errors.
    assert_eq!(einfty(&["surj", "table", "1,1,2"]).status.code(), Some(2));
    assert_eq!(einfty(&["be", "diff", "1 2 | 1 2"]).status.code(), Some(2));
    assert_eq!(einfty(&["surj", "table", "x"]).status.code(), Some(2));
    assert_eq!(einfty(&["frobnicate"]).status.code(), Some(2));
    // Domain errors.
    assert_eq!(
        einfty(&["surj", "compose", "1,2", "3", "1,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(einfty(&["verify", "nothing"]).status.code(), Some(1));
    let rp2 = fixture("rp2.sset");
    let out = einfty(&["bar", "homology", "--algebra", &rp2, "--max-grade", "2"]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "disconnected algebra is rejected"
    );
    assert!(!out.stderr.is_empty());
}

#[test]
fn outputs_round_trip() {
    let theta: PermSimplex = stdout(&["be", "theta", "3"]).trim().parse().unwrap();
    assert_eq!(theta, PermSimplex::theta(3));
    let d = stdout(&["surj", "diff", "1,2,1,3,1"]);
    let sum = parse_sum(d.trim()).unwrap();
    assert_eq!(sum.to_string(), d.trim());
    let row = stdout(&["tr", "1 2 3 | 3 1 2"]);
    let sum = parse_sum(row.trim()).unwrap();
    assert_eq!(sum.to_string(), row.trim());
    for line in stdout(&["bar", "admissible", "--w", "1 2 | 2 1", "--sizes", "2,2"]).lines() {
        let u: Surjection = line.parse().unwrap();
        assert_eq!(u.to_string(), line);
    }
}
