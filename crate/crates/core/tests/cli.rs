use realgw::cli::run;
use realgw::convert::TABLE2_REAL;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("realgw").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gw_value() {
    assert_eq!(call(&["gw", "--genus", "2", "--degree", "3"]), (0, "-5/24\n".into(), String::new()));
}

#[test]
fn hodge_value() {
    assert_eq!(call(&["hodge", "--g", "1", "--n", "1", "--psi", "1", "--lambda"]).1, "1/24\n");
    assert_eq!(call(&["hodge", "--g", "2", "--n", "0", "--psi", "--lambda", "1,1,1"]).1, "1/2880\n");
}

#[test]
fn tables_round_trip_bytes() {
    let (code, out, _) = call(&["tables", "--which", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, TABLE2_REAL);
    let (a, b) = (call(&["tables", "--which", "1", "--format", "markdown"]), call(&["tables", "--which", "1", "--format", "markdown"]));
    assert_eq!(a, b);
}

#[test]
fn enum_marks_sources() {
    let (code, out, _) = call(&["enum", "--degree", "3", "--max-genus", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "genus,degree,value,source\n0,3,-1,computed\n1,3,0,computed\n2,3,0,computed\n");
    let (_, out, _) = call(&["enum", "--degree", "7", "--max-genus", "4"]);
    assert!(out.contains("2,7,-10,bundled"));
}

#[test]
fn convert_file() {
    let dir = std::env::temp_dir().join(format!("realgw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e.csv");
    std::fs::write(&path, "flavor,kind\nreal,E\ngenus,degree,value\n1,4,-1\n3,4,0\n5,4,0\n").unwrap();
    let (code, out, _) = call(&["convert", "--input", path.to_str().unwrap(), "--to", "gw"]);
    assert_eq!(code, 0);
    assert_eq!(out, "flavor,kind\nreal,GW\ngenus,degree,value\n1,4,-1\n3,4,-1/3\n5,4,-19/360\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["gw", "--genus", "1"]).0, 2);
    assert_eq!(call(&["gw", "--genus", "1", "--degree", "0"]).0, 2);
    assert_eq!(call(&["tables", "--which", "3"]).0, 2);
    assert_eq!(call(&["hodge", "--g", "1", "--n", "0", "--psi"]).0, 2);
    assert_eq!(call(&["hodge", "--g", "1", "--n", "1", "--psi", "0", "--lambda", "2"]).0, 2);
    assert_eq!(call(&["verify", "--order", "3"]).0, 2);
    assert_eq!(call(&["convert", "--input", "/nonexistent/file.csv", "--to", "e"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
}

#[test]
fn verify_suite_passes() {
    let (code, out, _) = call(&["verify", "--suite", "identities", "--order", "4"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.contains("PASS")));
}
