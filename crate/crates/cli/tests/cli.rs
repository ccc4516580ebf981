use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn rimtori(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rimtori"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn on(cmd: &str, file: &Path, extra: &[&str]) -> Output {
    let mut args = vec![cmd, "--scenario", file.to_str().unwrap()];
    args.extend_from_slice(extra);
    rimtori(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_scenario(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

const T2: &str = r#"
[[divisor]]
name = "t2"
dim_v = 2

[[divisor.component]]
name = "T"
h1 = "Z^2"
torus = true
"#;

#[test]
fn elliptic_surface_compute() {
    let o = on("compute", &scenario("elliptic_surface.toml"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "fiber: Z^2\n");
}

#[test]
fn deck_on_t2_with_s_2_4() {
    let o = on("deck", &scenario("torus_deck.toml"), &["--name", "g2"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(
        line.starts_with("g2: finite: Z/2 + Z/2; free: Z^2; total: Z/2 + Z/2 + Z^2"),
        "{line}"
    );
}

#[test]
fn builtin_square() {
    let o = on("verify-square", &scenario("resp1t2.toml"), &["--name", "resp1t2"]);
    assert_eq!(stdout(&o), "resp1t2: exact: yes; commutative: yes\n");
}

#[test]
fn threshold_on_t4() {
    let o = on(
        "vanishing",
        &scenario("threshold_t4.toml"),
        &["--name", "three_contacts"],
    );
    assert_eq!(stdout(&o), "three_contacts: threshold r* = 8\n");
}

#[test]
fn names_select_in_file_order() {
    let o = on("deck", &scenario("torus_deck.toml"), &["--name", "g6", "--name", "g1"]);
    let out = stdout(&o);
    let names: Vec<&str> = out.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(names, ["g1", "g6"]);
}

#[test]
fn zero_contact_order_is_rejected() {
    let f = temp_scenario(&format!(
        "{T2}\n[[profile]]\nname = \"bad\"\ndivisor = \"t2\"\ncontacts = [[2, 0]]\n"
    ));
    let o = on("deck", f.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nonzero entries"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn undefined_divisor_is_rejected() {
    let f = temp_scenario(&format!(
        "{T2}\n[[profile]]\nname = \"p\"\ndivisor = \"nowhere\"\ncontacts = [[1]]\n"
    ));
    let o = on("deck", f.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("nowhere") && e.contains("line"), "{e}");
}

#[test]
fn syntax_errors_carry_a_line() {
    let f = temp_scenario("[[divisor]]\nname = \"x\"\ndim_v = \n");
    let o = on("compute", f.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn unknown_fields_are_rejected() {
    let f = temp_scenario(&T2.replace("dim_v = 2", "dim_v = 2\nfoo = 1"));
    let o = on("compute", f.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("foo"), "{}", stderr(&o));
}

#[test]
fn precondition_failures_exit_3() {
    let f = scenario("edge_cases.toml");
    let o = on("vanishing", &f, &["--name", "no_contacts"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("no_contacts"));
    let o = on("invariance", &f, &["--name", "missing_flux"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("flux"));
    // the same records are fine for commands that accept them
    let o = on("finite-generation", &f, &["--name", "no_contacts"]);
    assert_eq!(
        stdout(&o),
        "no_contacts: wc span: 0; wc index: inf; finitely generated: no\n"
    );
}

#[test]
fn usage_errors() {
    let f = scenario("elliptic_surface.toml");
    assert_eq!(on("frobnicate", &f, &[]).status.code(), Some(2));
    assert_eq!(on("compute", &f, &["--name", "nope"]).status.code(), Some(2));
    assert_eq!(on("verify-square", &f, &[]).status.code(), Some(2));
    let missing = on("compute", Path::new("/definitely/not/here.toml"), &[]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn machine_output_is_deterministic_json() {
    let f = scenario("p1_times_f.toml");
    for cmd in ["compute", "deck", "invariance", "verify-square"] {
        let a = on(cmd, &f, &["--format", "machine"]);
        let b = on(cmd, &f, &["--format", "machine"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["command"], cmd);
    }
}
