use std::path::PathBuf;
use std::process::Command;

fn cointerval(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cointerval"))
        .args(args)
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn golden(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

#[test]
fn exit_codes() {
    assert_eq!(cointerval(&["verify", "--context", "fincat", "--interval", "two"]).0, 0);
    let (code, out) = cointerval(&[
        "verify",
        "--context",
        "chaincat",
        "--ring",
        "Z",
        "--interval",
        "I",
        "--check",
        "representable",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("\"witness\""));
    assert_eq!(cointerval(&["verify", "--check", ""]).0, 3);
    assert_eq!(
        cointerval(&["verify", "--ring", "Zmod:6", "--context", "chaincat"]).0,
        3
    );
    assert_eq!(cointerval(&["reproduce", "cat-three"]).0, 3);
}

#[test]
fn cap_exhaustion_is_inconclusive() {
    let (code, out) = cointerval(&["verify", "--interval", "two", "--cap", "2", "--check", "representable"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn golden_comparison() {
    let path = golden("cat-two");
    assert_eq!(cointerval(&["reproduce", "cat-two", "--golden", &path]).0, 0);
    let other = golden("cat-iso");
    assert_eq!(cointerval(&["reproduce", "cat-two", "--golden", &other]).0, 1);
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("cointerval-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.cat");
    std::fs::write(&file, "obj a\ngen f: a -> b\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cointerval"))
        .args(["verify", "--input", file.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
