use std::process::{Command, Output};

fn midr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_midr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_owned()
}

#[test]
fn recompose_prints_canonical_sum() {
    let o = midr(&["--dim", "2", "recompose", "cap(Jp[1,2,1],Jp[2,3/2,0],Jp[1,5/3,0],Jp[2,1,1])"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "I[2,3/2;1,0]");
    let o = midr(&["--dim", "2", "--json", "recompose", "cap(Jp[1,2,1],Jp[2,3/2,0],Jp[1,5/3,0],Jp[2,1,1])"]);
    assert_eq!(stdout(&o), r#"{"dim":2,"form":"sum","terms":[{"alpha":["2","3/2"],"eps":[1,0]}]}"#);
}

#[test]
fn decompose_staircase() {
    let o = midr(&["--dim", "2", "decompose", "gen(X1^1/3*X2^2/3, X1^2/3*X2^1/3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cap(J[1/3,inf;0,0],J[2/3,2/3;0,0],J[inf,1/3;0,0])");
    let o = midr(&["--dim", "1", "--json", "decompose", "I[inf;0]"]);
    assert_eq!(stdout(&o), r#"{"dim":1,"form":"intersection","terms":[{"alpha":["inf"],"eps":[0]}]}"#);
}

#[test]
fn predicates_use_exit_codes() {
    assert_eq!(midr(&["--dim", "2", "member", "X1^3*X2^3/2", "I[2,3/2;1,0]"]).status.code(), Some(0));
    assert_eq!(midr(&["--dim", "2", "member", "X1^2*X2^3/2", "I[2,3/2;1,0]"]).status.code(), Some(1));
    assert_eq!(midr(&["--dim", "2", "contains", "I[1,0;0,0] + I[0,1;0,0]", "I[1,1;0,0]"]).status.code(), Some(0));
    assert_eq!(midr(&["--dim", "2", "equal", "I[1,2;0,0]", "cap(J[1,inf;0,0],J[inf,2;0,0])"]).status.code(), Some(0));
    assert_eq!(midr(&["--dim", "1", "equal", "I[0;0]", "I[inf;0]"]).status.code(), Some(1));
    assert_eq!(midr(&["--dim", "2", "irreducible", "J[1,2;0,1]"]).status.code(), Some(0));
    assert_eq!(midr(&["--dim", "2", "irreducible", "I[1,2;0,1]"]).status.code(), Some(1));
}

#[test]
fn containment_witness_output() {
    let o = midr(&["--dim", "2", "contains", "I[1,1;0,0]", "I[1,0;0,0]"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\nwitness: (1, 0)");
    let o = midr(&["--dim", "1", "--json", "contains", "I[2;1]", "I[2;0]"]);
    assert_eq!(stdout(&o), r#"{"contains":false,"witness":{"point":[{"v":"2","open":false}]}}"#);
}

#[test]
fn irreducible_reports_factors() {
    let o = midr(&["--dim", "2", "irreducible", "I[3,5/2;0,0]"]);
    assert_eq!(stdout(&o), "false\nfactors: cap(J[3,inf;0,0]) and cap(J[inf,5/2;0,0])");
}

#[test]
fn simplify_and_staircase() {
    let o = midr(&["--dim", "2", "simplify", "I[2,2;0,0] + I[1,1;0,0] + I[0,3;1,0]"]);
    assert_eq!(stdout(&o), "I[0,3;1,0] + I[1,1;0,0]");
    let o = midr(&["--dim", "2", "staircase", "I[1,2;1,0] + I[3,0;0,0]"]);
    assert_eq!(stdout(&o), "(1+, 2)\n(3, 0)");
    let o = midr(&["--dim", "2", "--json", "staircase", "I[1,1;0,0]"]);
    assert_eq!(stdout(&o), r#"[{"x":"1","y":"1","x_open":false,"y_open":false}]"#);
    let o = midr(&["--dim", "2", "staircase", "--svg", "I[1,1;0,0]"]);
    assert!(stdout(&o).starts_with("<svg"));
    assert_eq!(midr(&["--dim", "3", "staircase", "I[1,1,1;0,0,0]"]).status.code(), Some(3));
    assert_eq!(midr(&["--dim", "2", "staircase", "I[inf,1;0,0]"]).status.code(), Some(1));
}

#[test]
fn errors_map_to_exit_codes() {
    let o = midr(&["--dim", "2", "decompose", "I[2,1;1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte 7"));
    assert_eq!(midr(&["--dim", "2", "decompose", "I[2;1]"]).status.code(), Some(3));
    assert_eq!(midr(&["--dim", "2", "member", "X3", "I[2,1;1,0]"]).status.code(), Some(3));
    assert_eq!(midr(&["decompose", "I[2;1]"]).status.code(), Some(2));
    assert_eq!(midr(&["--dim", "1", "decompose", "I[-2;1]"]).status.code(), Some(2));
}

#[test]
fn quiet_suppresses_output() {
    let o = midr(&["--dim", "2", "--quiet", "member", "1", "J[0,5;0,0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}
