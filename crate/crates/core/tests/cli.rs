use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn z4class(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4class")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn equiv_prints_witness_or_fails() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "3 1 1\n1 0 1\n0 2 2\n");
    let b = write(dir.path(), "b.txt", "3 raw\n1 1 0\n2 0 2\n");
    let c = write(dir.path(), "c.txt", "3 1 1\n1 0 0\n0 2 2\n");
    let out = z4class(&["equiv", &a, &b]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("equivalent\nwitness: perm="), "{text}");
    let out = z4class(&["equiv", &a, &c]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "inequivalent\n");
}

#[test]
fn dual_residue_and_weights() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.txt", "# example\n2 1 0\n1 1\n");
    let dual = stdout(&z4class(&["dual", &f]));
    assert!(dual.contains("2 1 0\n1 3\n"), "{dual}");
    let res = stdout(&z4class(&["residue", &f]));
    assert!(res.contains("1 1"), "{res}");
    let w = stdout(&z4class(&["weights", &f]));
    assert!(w.contains("hwe: x^2 + 3*y^2"), "{w}");
    assert!(w.contains("d_H=2 d_L=2 d_E=2"), "{w}");
}

#[test]
fn cell_length_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_string_lossy().into_owned();
    let out = z4class(&["cell", "--n", "3", "--k1", "1", "--k2", "1", "--report-filters", "--out", &out_dir]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"candidates\": 10"), "{text}");
    assert!(text.contains("N'(3,1,1) = 7"), "{text}");

    let out = z4class(&["length", "--n", "4", "--out", &out_dir]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("N'(4) = 110") && text.contains("N(4) = 145"), "{text}");
    assert!(text.contains("duality: ok"), "{text}");

    let out = z4class(&["check", "--n", "4", "--dir", &out_dir]);
    assert!(out.status.success(), "{}", stdout(&out));

    let counts = format!("{out_dir}/n4/counts.json");
    let out = z4class(&["length", "--n", "5", "--prior", &counts]);
    assert!(stdout(&out).contains("N(5) = 682"));
}

#[test]
fn bad_input_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "2 1 0\n2 1\n");
    let out = z4class(&["weights", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
    let out = z4class(&["cell", "--n", "2", "--k1", "2", "--k2", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
