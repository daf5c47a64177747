use std::path::Path;
use std::process::Command;

const PROGRAM: &str = r#"
#include "intdiff.h"
int main(void) {
    IntdiffOperator *op = NULL;
    IntdiffStatus st = intdiff_operator_parse("d*i", &op);
    intdiff_operator_free(op);
    return st == INTDIFF_STATUS_OK ? 0 : 1;
}
"#;

#[test]
fn header_is_valid_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include.join("intdiff.h");
    assert!(header.is_file(), "missing {}", header.display());
    let src = std::env::temp_dir().join(format!("intdiff_header_{}.c", std::process::id()));
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .status();
    let _ = std::fs::remove_file(&src);
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(e) => eprintln!("skipping: no C compiler ({e})"),
    }
}
