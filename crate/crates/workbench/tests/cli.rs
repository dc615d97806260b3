use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::Rng;

use rim_core::PrefixCode;
use rim_testkit::{random_end, random_finite_morphism, random_machine, random_regular_code, rng};
use rim_workbench::{inline_machine, Config, Session, Value};

fn workbench(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rim-workbench"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_runs() {
    let o = workbench(&[], "let p = code /0*1/; let q = code { eps }; endeq p q\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "EQUIV\n");
    let o = workbench(&["-e", "let f = morph { 0 -> 0, 1 -> 10 }; imc f"], "");
    assert_eq!(stdout(&o), "{ 0, 10 }\n");
    let o = workbench(&["-e", "bdeq (code { 0, 1 }) (code /0*1/)"], "");
    assert_eq!(stdout(&o), "NOT-EQUIV witness-end: (0)\n");
}

#[test]
fn script_files_and_exit_status() {
    let dir = std::env::temp_dir().join(format!("rim-workbench-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let machine = dir.join("swap.txt");
    std::fs::write(
        &machine,
        "transducer\nstart: e\nfinal: f / eps\ne 0 -> o / eps\no 0 -> e / 00\ne 1 -> f / 01\no 1 -> f / 1\n",
    )
    .unwrap();
    let script = dir.join("run.rim");
    std::fs::write(
        &script,
        format!(
            "# swap from a file\nlet s = trans @{}\nteval s 001\ndclass s\n",
            machine.display()
        ),
    )
    .unwrap();
    let o = workbench(&[script.to_str().unwrap()], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o), "0001\nD2\n");

    let o = workbench(&[], "maximal { 0 }\nfrobnicate\nmaximal { 0, 1 }\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "NOT-MAXIMAL witness: 1\nerror (line 2): unknown command `frobnicate`\nMAXIMAL\n"
    );
    let o = workbench(&[dir.join("missing.rim").to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn flags() {
    let o = workbench(&["--rank-base", "1", "-e", "rank /0*1/ 1; unrank /0*1/ 2"], "");
    assert_eq!(stdout(&o), "1\n01\n");
    let o = workbench(&["-e", "rank /0*1/ 1; unrank /0*1/ 2"], "");
    assert_eq!(stdout(&o), "0\n001\n");

    let swap = "trans { start: e; final: f / eps; e 0 -> o / eps; o 0 -> e / 00; e 1 -> f / 01; o 1 -> f / 1 }";
    let o = workbench(&["--max-states", "1", "-e", &format!("tcompose {swap} {swap}")], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("exceeded 1 states"), "{}", stdout(&o));

    let o = workbench(&["--depth", "3", "-e", "taucheck { 0, 1 } { 00, 01, 1 } poly(1,1)"], "");
    assert_eq!(stdout(&o), "PASS-UP-TO 3\n");
    assert!(!workbench(&["--rank-base", "2", "-e", ""], "").status.success());
}

#[test]
fn transcripts_are_deterministic() {
    let mut r = rng(5);
    let mut script = String::new();
    for i in 0..20 {
        let f = random_machine(&mut r, 8);
        let g = random_machine(&mut r, 8);
        script.push_str(&format!(
            "let f{i} = {}\nlet g{i} = {}\n",
            inline_machine(&f),
            inline_machine(&g)
        ));
        script.push_str(&format!(
            "tagree f{i} g{i}\ntequiv bd f{i} g{i}\ntequiv end f{i} g{i}\ntcodes f{i}\ncrosscheck f{i} g{i} 4 3\ncompose g{i} f{i}\n"
        ));
    }
    let a = workbench(&[], &script);
    let b = workbench(&[], &script);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

/// Prints `v`, reads the printed form back, and prints again.
fn reparse(s: &mut Session, v: &Value) -> Value {
    let printed = v.to_string();
    if let Err(e) = s.eval_statement(&format!("let! rt = {printed}")) {
        panic!("`{printed}` did not re-parse: {e}");
    }
    let back = s.get("rt").unwrap().clone();
    assert_eq!(back.to_string(), printed);
    back
}

#[test]
fn printed_objects_reparse_to_equal_values() {
    let mut r = rng(21);
    let mut s = Session::new(Config::default());
    s.eval_statement("let rt = { }").unwrap();
    for _ in 0..200 {
        let c = random_regular_code(&mut r);
        match reparse(&mut s, &Value::Code(c.clone())) {
            Value::Code(back) => assert_eq!(back, c),
            other => panic!("{other:?}"),
        }
        let f = random_finite_morphism(&mut r, 10, 6);
        match reparse(&mut s, &Value::Morph(f.clone())) {
            Value::Morph(back) => assert_eq!(back, f),
            other => panic!("{other:?}"),
        }
        let m = random_machine(&mut r, 10);
        match reparse(&mut s, &Value::Trans(m.clone())) {
            Value::Trans(back) => assert_eq!(back, m),
            other => panic!("{other:?}"),
        }
        let e = random_end(&mut r, 6, 4);
        match reparse(&mut s, &Value::End(e.clone())) {
            Value::End(back) => assert_eq!(back, e),
            other => panic!("{other:?}"),
        }
        if r.gen_bool(0.2) {
            let (p, q) = (
                PrefixCode::from_regex("0*1").unwrap(),
                PrefixCode::from_regex("(0|10)*11").unwrap(),
            );
            let a = rim_core::transducer::rank_bijection(&p, &q).unwrap();
            match reparse(&mut s, &Value::Pointwise(a.clone())) {
                Value::Pointwise(back) => assert_eq!(back, a),
                other => panic!("{other:?}"),
            }
        }
    }
}
