use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn tla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tla")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tla-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_traces() {
    let f = fixture("a_vee_c.tla");
    for (word, file) in [("aabbcba", "aabbcba.trace"), ("bbaabb", "bbaabb.trace"), ("", "empty.trace")] {
        let o = tla(&["run", path(&f), word, "--trace"]);
        assert_eq!(stdout(&o), golden(file), "{word:?}");
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(golden("aabbcba.trace").lines().count(), 9);
}

#[test]
fn run_verdicts_and_exit_codes() {
    let f = fixture("a_vee_c.tla");
    let o = tla(&["run", path(&f), "abc"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("accept\n", Some(0)));
    let o = tla(&["run", path(&f), "ab"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("reject\n", Some(1)));
    let o = tla(&["run", path(&f), "aabbcba", "--fast"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("accept\n", Some(0)));
    let o = tla(&["run", path(&f), "ab", "--trace"]);
    assert!(stdout(&o).ends_with("|- Reject\n"));
    assert_eq!(o.status.code(), Some(1));
    let o = tla(&["run", path(&f), "abx"]);
    assert_eq!(o.status.code(), Some(64));
    let o = tla(&["run", path(&fixture("l2_nr.tla")), "ab", "--fast"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("returning"));
}

#[test]
fn nondeterministic_trace_is_a_witness() {
    let o = tla(&["run", path(&fixture("regular_ab_abb.tla")), "abbabb", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("y0 abbabb<|\n"), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("|- Accept\n"));
}

#[test]
fn marker_loop_warns_and_rejects() {
    let o = tla(&["run", path(&fixture("marker_loop.tla")), "ab", "--trace"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("|- StepLimit\n"));
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn validate_and_classify() {
    let o = tla(&["validate", path(&fixture("a_vee_c.tla"))]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("OK\n", Some(0)));
    let bad = tmp("bad.tla");
    let text = std::fs::read_to_string(fixture("a_vee_c.tla"))
        .unwrap()
        .replace("\"q0\": [\"a\", \"b\"]", "\"q0\": [\"a\", \"b\", \"c\"]");
    std::fs::write(&bad, text).unwrap();
    let o = tla(&["validate", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "translucency blocking at (q0,c)\n");
    let o = tla(&["classify", path(&bad)]);
    assert_eq!(o.status.code(), Some(66));

    let syntax = tmp("syntax.tla");
    std::fs::write(&syntax, "{ \"format_version\": 1,\n  oops }").unwrap();
    let o = tla(&["validate", path(&syntax)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("line 2"), "{}", stdout(&o));

    for (file, name) in [
        ("a_vee_c.tla", "RDFAwtl"),
        ("l_eq.tla", "DFAwtl"),
        ("regular_ab_abb.tla", "NFAwtl"),
        ("l2_nr.tla", "nr-DFAwtl"),
        ("nrnr_skip_b.tla", "nr-nr-DFAwtl"),
        ("rowjfa_eq.tla", "ROWJFA"),
        ("loop_or_accept.tla", "RNFAwtl"),
    ] {
        assert_eq!(stdout(&tla(&["classify", path(&fixture(file))])), format!("{name}\n"));
    }
}

#[test]
fn compare_and_enumerate() {
    let f = fixture("a_vee_c.tla");
    let o = tla(&["compare", path(&f), "lang:L_vee_c", "--max-len", "7"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("equivalent up to 7\n", Some(0)));
    let o = tla(&["compare", path(&fixture("l_eq.tla")), "lang:L_geq", "--max-len", "4"]);
    assert_eq!(stdout(&o), "counterexample a (accepted by the right operand)\n");
    assert_eq!(o.status.code(), Some(2));
    let o = tla(&["compare", path(&f), "lang:L_vee", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("alphabets differ"));
    let o = tla(&["enumerate", "lang:L_2", "--max-len", "4"]);
    assert_eq!(stdout(&o), "ε\nab\naabb\n");
    let o = tla(&["enumerate", path(&f), "--max-len", "6"]);
    assert_eq!(stdout(&o).lines().count(), 56);
    let o = tla(&["enumerate", "lang:nope", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn transforms() {
    let f = fixture("a_vee_c.tla");
    let out = tmp("c.tla");
    let o = tla(&["transform", "complement", path(&f), "-o", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("construction: complement"));
    assert_eq!(stdout(&tla(&["run", path(&out), "ab"])), "accept\n");
    assert_eq!(stdout(&tla(&["run", path(&out), "abc"])), "reject\n");

    let q = tmp("q.tla");
    assert_eq!(tla(&["transform", "quotient:c", path(&f), "-o", path(&q)]).status.code(), Some(0));
    assert_eq!(stdout(&tla(&["run", path(&q), "ba"])), "accept\n");

    let s = tmp("s.tla");
    let shuffle = format!("shuffle:{}", path(&fixture("l_2eq_prime.tla")));
    let o = tla(&["transform", &shuffle, path(&fixture("l_eq.tla")), "-o", path(&s)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&tla(&["run", path(&s), "abccdddd"])), "accept\n");

    for c in [
        "embed", "nrnr-to-nfa", "to-nonreturning", "eliminate-loops", "complete-reading", "normalize", "to-plain",
        "first-letter",
    ] {
        let input = match c {
            "embed" => fixture("l_eq.tla"),
            "nrnr-to-nfa" => fixture("nrnr_skip_b.tla"),
            _ => f.clone(),
        };
        let o = tla(&["transform", c, path(&input)]);
        assert_eq!(o.status.code(), Some(0), "{c}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("{\n  \"format_version\": 1"), "{c}");
    }

    let o = tla(&["transform", "embed", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let o = tla(&["transform", "frobnicate", path(&f)]);
    assert_eq!(o.status.code(), Some(64));
    let o = tla(&["transform", "shuffle:/does/not/exist", path(&f)]);
    assert_eq!(o.status.code(), Some(66));
}

#[test]
fn usage_and_file_errors() {
    assert_eq!(tla(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(tla(&["run"]).status.code(), Some(64));
    assert_eq!(tla(&["--help"]).status.code(), Some(0));
    assert_eq!(tla(&["classify", "/does/not/exist.tla"]).status.code(), Some(66));
    let garbage = tmp("garbage.tla");
    std::fs::write(&garbage, "not json").unwrap();
    assert_eq!(tla(&["run", path(&garbage), "a"]).status.code(), Some(66));
}

#[test]
fn bench_table() {
    let o = tla(&["bench", path(&fixture("l_eq.tla")), "--lengths", "2^8,512"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("length"));
    assert!(lines[1].trim_start().starts_with("256"));
    assert!(lines[2].trim_start().starts_with("512") && lines[2].ends_with("accept"));
}
