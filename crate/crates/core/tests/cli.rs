use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn planiso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planiso"))
        .args(args)
        .output()
        .unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("planiso-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn canon_matches_golden() {
    let o = planiso(&["canon", data("cube.graph").to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), std::fs::read_to_string(data("cube.canon")).unwrap());
}

#[test]
fn iso_exit_codes() {
    let k4 = data("k4.graph");
    let cube = data("cube.graph");
    let o = planiso(&[
        "iso",
        k4.to_str().unwrap(),
        data("k4_relabeled.graph").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "isomorphic\n");
    let o = planiso(&["iso", k4.to_str().unwrap(), cube.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not isomorphic\n");
    let path = temp_file("c4.graph", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let o = planiso(&["iso", k4.to_str().unwrap(), path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3-connected"));
}

#[test]
fn check_reports_each_property() {
    let o = planiso(&["check", data("octahedron.graph").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "planar\n3-connected\n");

    let k33 = temp_file("k33.graph", "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    let o = planiso(&["check", "--planar", k33.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not planar\n");

    let c5 = temp_file("c5.graph", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let o = planiso(&["check", "--three-connected", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not 3-connected"));
}

#[test]
fn parse_errors_name_the_line() {
    let bad = temp_file("bad.graph", "3 2\n0 1\n1 x\n");
    let o = planiso(&["canon", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"), "{:?}", o);
}

#[test]
fn regularize_and_walk() {
    let o = planiso(&["regularize", data("k4.graph").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("12 18\n"));
    let colors: Vec<&str> = text.lines().skip_while(|l| *l != "colors").skip(1).collect();
    assert_eq!(colors.len(), 18);
    assert_eq!(colors.iter().filter(|l| l.ends_with(" 1")).count(), 12);

    let expanded = temp_file("k4x.graph", &text);
    let seq = temp_file("seq.txt", "000\n");
    let first = text
        .lines()
        .nth(20)
        .unwrap()
        .split(' ')
        .next()
        .unwrap()
        .to_string();
    let o = planiso(&[
        "uxs",
        "walk",
        expanded.to_str().unwrap(),
        "--start",
        &format!("0,{first}"),
        "--seq-file",
        seq.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{o:?}");
    assert_eq!(stdout(&o), format!("0 {first} 0 {first} 0\n"));
}

#[test]
fn gen_and_uxs_verify() {
    let o = planiso(&["gen", "--n", "9", "--seed", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("9 21\n"));
    assert_eq!(stdout(&o), stdout(&planiso(&["gen", "--n", "9", "--seed", "4"])));

    let o = planiso(&["uxs", "verify", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("pass\n"));
    let o = planiso(&["uxs", "verify", "--n", "4", "--length", "1"]);
    assert_eq!(o.status.code(), Some(1));
}
