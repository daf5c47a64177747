use std::process::Command;

fn intdiff(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_intdiff")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap().trim_end().to_string())
}

#[test]
fn reports_and_exit_codes() {
    assert_eq!(intdiff(&["norm", "i*d*i*d"]), (0, r#"{"canonical":"1 - e(0,0)"}"#.into()));
    assert_eq!(intdiff(&["mod", "hom", "M(2,1/2)", "M(3,1/2)"]), (0, r#"{"dim":2}"#.into()));
    assert_eq!(intdiff(&["mod", "ext", "M(2,0)", "M(3,0)"]), (0, r#"{"computed":2,"paper_claim":1}"#.into()));
    assert_eq!(intdiff(&["norm", "(d"]).0, 2);
    assert_eq!(intdiff(&["mod", "hom", "M(2,0)", "M(2,0)", "--lo", "3", "--hi", "8"]).0, 1);
}

#[test]
fn module_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("intdiff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (code, made) = intdiff(&["mod", "make", "M(3,1/3)", "--seed", "4"]);
    assert_eq!(code, 0);
    let path = dir.join("m.json");
    std::fs::write(&path, made).unwrap();
    let p = path.to_str().unwrap();
    let (code, out) = intdiff(&["mod", "decompose", p]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""summary":"M(3,1/3)""#), "{out}");
    assert_eq!(intdiff(&["mod", "uniserial", p]), (0, r#"{"chain_length":4,"uniserial":true}"#.into()));
    assert_eq!(intdiff(&["mod", "hom", p, "M(2,1/3)"]), (0, r#"{"dim":2}"#.into()));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn truncation_is_capped_by_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_intdiff"))
        .args(["oracle", "x", "d", "--window", "50"])
        .env("INTDIFF_MAX_DEGREE", "8")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(r#""N":8"#), "{text}");
}
