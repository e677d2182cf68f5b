//! End-to-end tests of the binary: golden reports, exit codes, and the
//! byte-identical-output guarantee.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn grphcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grphcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = grphcat(args);
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn fx(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn product_tensor_report_is_golden() {
    let (stdout, _, code) = run(&["product", "--cat", "stgrphs", &fx("k2.g"), &fx("k2.g")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "construction: product\n\
         category: stgrphs\n\
         vertices: 4\n\
         edges: 2\n\
         v (u1,u1)\n\
         v (u1,u2)\n\
         v (u2,u1)\n\
         v (u2,u2)\n\
         e (e,e) (u1,u1) (u2,u2)\n\
         e bar(e,e) (u1,u2) (u2,u1)\n"
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    let first = run(&["product", "--cat", "grphs", &fx("k2.g"), &fx("p3.g")]);
    let second = run(&["product", "--cat", "grphs", &fx("k2.g"), &fx("p3.g")]);
    assert_eq!(first, second);
}

#[test]
fn fmt_holds_and_fails_with_exit_codes() {
    let (stdout, _, code) = run(&["fmt", "--cat", "grphs", &fx("incl.mor")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "category: grphs\n\
         Rf: vertices=2 edges=0\n\
         I: vertices=2 edges=0\n\
         I*: vertices=2 edges=0\n\
         Rf*: vertices=2 edges=2\n\
         h: isomorphism (holds)\n"
    );

    let (stdout, _, code) = run(&["fmt", "--cat", "sigrphs", &fx("incl.mor")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("I*: vertices=2 edges=1"));
    assert!(stdout.ends_with("h: NOT isomorphism (fails)\n"));
}

#[test]
fn fmt_random_suite_holds_in_grphs() {
    let (stdout, _, code) = run(&[
        "fmt",
        "--cat",
        "stgrphs",
        "--random",
        "40",
        "--seed",
        "11",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("holds: 40"));
    assert!(stdout.contains("fails: 0"));
}

#[test]
fn fmt_dot_writes_all_eight_objects() {
    let dir = std::env::temp_dir().join("grphcat-cli-test-dot");
    let _ = std::fs::remove_dir_all(&dir);
    let (_, _, code) = run(&[
        "fmt",
        "--cat",
        "grphs",
        &fx("incl.mor"),
        "--dot",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    for name in ["a", "axa", "rf", "i", "b", "b_plus_b", "rf_star", "i_star"] {
        let dot = std::fs::read_to_string(dir.join(format!("{name}.dot"))).unwrap();
        assert!(dot.starts_with("graph {"), "{name}");
    }
}

#[test]
fn validate_contraction_depends_on_category() {
    let (stdout, _, code) = run(&["validate", "--cat", "grphs", &fx("contract.mor")]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("verdict: valid\n"));

    let (stdout, _, code) = run(&["validate", "--cat", "stgrphs", &fx("contract.mor")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("violation: e:e"));
    assert!(stdout.ends_with("verdict: invalid\n"));
}

#[test]
fn validate_objects_against_category_rules() {
    let (_, _, code) = run(&["validate", "--cat", "grphs", &fx("parallel.g")]);
    assert_eq!(code, 0);
    let (stdout, _, code) = run(&["validate", "--cat", "sigrphs", &fx("parallel.g")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("kind: graph"));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = std::env::temp_dir().join("grphcat-cli-test-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.g");
    std::fs::write(&bad, "v a\nz what\n").unwrap();
    let (_, stderr, code) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains(":2:"), "{stderr}");

    let (_, stderr, code) = run(&["validate", "/no/such/file.g"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"));
}

#[test]
fn usage_errors_exit_2() {
    let out = grphcat(&["product", "--cat", "nope", "x", "y"]);
    assert_eq!(out.status.code().unwrap(), 2);
}

#[test]
fn coproduct_report() {
    let (stdout, _, code) = run(&["coproduct", &fx("k1.g"), &fx("k1.g")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "construction: coproduct\n\
         category: grphs\n\
         vertices: 2\n\
         edges: 0\n\
         v 0.w\n\
         v 1.w\n"
    );
}

#[test]
fn equalize_and_coequalize_identity_vs_swap() {
    let (stdout, _, code) = run(&["equalize", &fx("id_k2.mor"), &fx("swap_k2.mor")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("vertices: 0\nedges: 0\n"));

    let (stdout, _, code) = run(&["coequalize", &fx("id_k2.mor"), &fx("swap_k2.mor")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("vertices: 1\nedges: 1\n"));
    assert!(stdout.contains("e e u1 u1"));
    assert!(stdout.contains("map:\np v:u1 v:u1\np v:u2 v:u1\np e:e e:e\n"));
}

#[test]
fn dot_export_is_golden() {
    let (stdout, _, code) = run(&["dot", &fx("parallel.g")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "graph {\n  \"u1\";\n  \"u2\";\n  \"u1\" -- \"u2\" [label=\"e1\"];\n  \"u1\" -- \"u2\" [label=\"e2\"];\n}\n"
    );
}

#[test]
fn deck_report_and_card_files() {
    let (stdout, _, code) = run(&["deck", "--mode", "vertex", &fx("p3.g")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "mode: vertex\n\
         source: vertices=3 edges=2\n\
         cards: 3\n\
         card 0: deleted v:a vertices=2 edges=1\n\
         card 1: deleted v:b vertices=2 edges=0\n\
         card 2: deleted v:c vertices=2 edges=1\n"
    );

    let dir = std::env::temp_dir().join("grphcat-cli-test-cards");
    let _ = std::fs::remove_dir_all(&dir);
    let (_, _, code) = run(&[
        "deck",
        "--mode",
        "edge",
        &fx("c4.g"),
        "--cards",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let card0 = std::fs::read_to_string(dir.join("card0.g")).unwrap();
    assert!(card0.contains("v a\n"));
    assert!(!card0.contains("e e1"));
}

#[test]
fn match_found_and_absent() {
    let (stdout, _, code) = run(&["match", "--mode", "vertex", &fx("k2.g"), &fx("kbar2.g")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("matching: found"));

    let (stdout, _, code) = run(&["match", "--mode", "vertex", &fx("p3.g"), &fx("k3.g")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("matching: absent"));
}

#[test]
fn reconstruct_self_case_and_counterexample_pair() {
    let (stdout, _, code) = run(&["reconstruct", "--mode", "edge", &fx("c4.g"), &fx("c4.g")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "mode: edge\n\
         decks: matched\n\
         orientation: as given\n\
         gamma: 28 parts -> 8 parts, epi\n\
         I: vertices=4 edges=4\n\
         I iso target: yes\n\
         delta: found\n\
         delta is epi: yes\n\
         delta equation: holds\n"
    );

    let (stdout, _, code) = run(&[
        "reconstruct",
        "--mode",
        "vertex",
        &fx("kbar2.g"),
        &fx("k2.g"),
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("orientation: swapped"));
    assert!(stdout.ends_with("delta: absent\n"));
}

#[test]
fn sweep_rows_and_verdict() {
    let (stdout, _, code) = run(&["sweep", "--mode", "vertex", "--max-n", "2", "--rows"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("2,vertex,3,1,0,"), "{stdout}");

    let (stdout, _, code) = run(&["sweep", "--mode", "vertex", "--max-n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("n=3: pairs=10 deck_equal_noniso=0 delta_failures=0"));
    assert!(stdout.contains("total: pairs=13 noniso=1 failures=0"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join("grphcat-cli-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let (stdout, _, code) = run(&[
        "validate",
        &fx("k2.g"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.ends_with("verdict: valid\n"));
}
