use golodtight_wasm_demo::{analyze_text, hochster_text, rzk_oracle_text};

const C4: &str = "m 4\n1 2\n2 3\n3 4\n1 4\n";

#[test]
fn analyze_c4() {
    let r = analyze_text(C4, "q").unwrap();
    assert!(r.contains("tight: no (witness {1,3}, degree 0)"));
    assert!(!r.contains("time "));
}

#[test]
fn hochster_c4() {
    assert_eq!(
        hochster_text(C4, "q").unwrap(),
        "field Q\n{1,2,3,4} 1 1\n{1,3} 0 1\n{2,4} 0 1\n"
    );
}

#[test]
fn oracle_c4() {
    assert_eq!(rzk_oracle_text(C4, "2, q").unwrap(), "F2: predicted [1, 2, 1] computed [1, 2, 1] PASS\nQ: predicted [1, 2, 1] computed [1, 2, 1] PASS\n");
}

#[test]
fn rejects_bad_input() {
    assert!(analyze_text("1 2\n", "q").unwrap_err().contains("line 1"));
    assert!(hochster_text(C4, "4").is_err());
    assert!(rzk_oracle_text(C4, "").is_err());
    let big = "m 11\n1 2 3 4 5 6 7 8 9 10 11\n";
    assert!(analyze_text(big, "2").unwrap_err().contains("demo stops"));
}
