use std::path::Path;
use std::process::{Command, Output};

fn sdcodes(args: &[&str], env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sdcodes"));
    cmd.args(args).env_remove("SDCODES_OUT_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ROW: [&str; 6] = ["--construction", "20.1", "--alphabet", "f4", "--v", "31223333300320201200"];

#[test]
fn verify_writes_a_record_that_params_and_census_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c80.txt");
    let file = file.to_str().unwrap();
    let mut args = vec!["verify"];
    args.extend(ROW);
    args.extend(["--out", file]);
    let o = sdcodes(&args, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("self-dual [80,40,14] Type I, W80 \u{3b1}=-275 \u{3b2}=0\n"));

    let o = sdcodes(&["params", "--file", file], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[80,40] Type I, W80 \u{3b1}=-275 \u{3b2}=0\n");

    let o = sdcodes(&["census", "--file", file, "--max-weight", "16"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[80,40] census to weight 16\nA_0 1\nA_14 2100\nA_16 49845\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| sdcodes(args, &[]).status.code();
    // wrong length, bad symbol, unknown alphabet, missing flag
    assert_eq!(code(&["verify", "--construction", "20.1", "--alphabet", "f4", "--v", "0123"]), Some(2));
    assert_eq!(code(&["verify", "--construction", "20.1", "--alphabet", "f2", "--v", &"2".repeat(20)]), Some(2));
    assert_eq!(code(&["verify", "--construction", "20.1", "--alphabet", "z4", "--v", "0"]), Some(2));
    assert_eq!(code(&["search", "--construction", "20.1", "--alphabet", "f2", "--target-d", "8"]), Some(2));
    assert_eq!(code(&["search", "--construction", "20.1", "--alphabet", "f2", "--target-d", "7", "--seed", "1"]), Some(2));
    assert_eq!(code(&["params", "--construction", "20.1"]), Some(2));
    // gated without --deep
    let mut census = vec!["census"];
    census.extend(ROW);
    census.extend(["--max-weight", "20"]);
    assert_eq!(code(&census), Some(2));
    // a vector that fails the conditions
    let o = sdcodes(&["verify", "--construction", "24.1", "--alphabet", "f2u", "--v", &"1".repeat(24)], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn search_uses_the_output_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "search", "--construction", "20.2", "--alphabet", "f2", "--target-d", "8", "--trials", "20000", "--seed", "7",
        "--workers", "2",
    ];
    let a = sdcodes(&args, &[("SDCODES_OUT_DIR", dir.path())]);
    assert_eq!(a.status.code(), Some(0));
    let report = stdout(&a);
    assert!(report.contains(" trials, "), "{report}");
    let found: usize = report.lines().last().unwrap().split(' ').next().unwrap().parse().unwrap();
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, found + 1);

    let b = sdcodes(&args, &[]);
    assert_eq!(stdout(&b), report);
}

#[test]
fn tables_two_and_four() {
    let o = sdcodes(&["tables", "--table", "2"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.trim_end().ends_with("19/19 rows pass"), "{out}");
    let o = sdcodes(&["tables", "--table", "4"], &[]);
    assert!(stdout(&o).trim_end().ends_with("5/5 rows pass"));
}

#[test]
fn table_five_marks_external_rows() {
    let o = sdcodes(&["tables", "--table", "5"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("10/10 rows pass, 45 marked external"));
}
