//! Golden outputs of the command-line tool on the fixture corpus.
//!
//! `UPDATE_EXPECT=1 cargo test --test cli` rewrites `fixtures/expected/`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

const FIXTURES: [&str; 7] = [
    "triangle",
    "tetrahedron",
    "book3",
    "bowtie",
    "cone-k5",
    "rp2-6",
    "torus7",
];

fn fixture_commands() -> Vec<(&'static str, Vec<&'static str>, &'static str)> {
    vec![
        ("validate", vec!["validate"], "json"),
        ("links", vec!["links"], "json"),
        ("links-dot", vec!["links", "--dot"], "dot"),
        ("prs-find", vec!["prs", "find"], "json"),
        ("prs-count", vec!["prs", "count"], "json"),
        ("surfaces", vec!["surfaces"], "json"),
        ("dual", vec!["dual"], "json"),
        ("homology-2", vec!["homology", "--prime", "2"], "json"),
        ("homology-z", vec!["homology", "--integral"], "json"),
        ("identities-3", vec!["identities", "--prime", "3"], "json"),
        ("verdict", vec!["verdict", "--primes", "2,3,5"], "json"),
        ("gprs-find", vec!["gprs", "find"], "json"),
        ("dot", vec!["dot"], "dot"),
    ]
}

fn free_commands() -> Vec<(&'static str, Vec<&'static str>, &'static str)> {
    vec![
        ("words-1-2", vec!["words", "--windings", "1,2"], "json"),
        ("words-1-1-2", vec!["words", "--windings", "1,1,2"], "json"),
        ("words-1-2-2", vec!["words", "--windings", "1,2,2"], "json"),
        ("words-1-1-1-2", vec!["words", "--windings", "1,1,1,2"], "json"),
        ("gen-42", vec!["gen", "--seed", "42", "--vertices", "6"], "json"),
        (
            "gen-1-full",
            vec!["gen", "--seed", "1", "--vertices", "4", "--prob", "1"],
            "json",
        ),
    ]
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_embed3"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn fixture(name: &str) -> String {
    root()
        .join("fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_EXPECT").is_some();
    let dir = root().join("fixtures/expected");
    let mut cases: Vec<(String, Vec<String>, &str)> = Vec::new();
    for name in FIXTURES {
        for (slug, args, ext) in fixture_commands() {
            let mut args: Vec<String> = args.into_iter().map(String::from).collect();
            args.insert(if args[0] == "prs" || args[0] == "gprs" { 2 } else { 1 }, fixture(name));
            cases.push((format!("{name}.{slug}"), args, ext));
        }
    }
    for (slug, args, ext) in free_commands() {
        cases.push((slug.to_string(), args.into_iter().map(String::from).collect(), ext));
    }

    let codes_path = dir.join("exit_codes.txt");
    let mut codes = BTreeMap::new();
    let mut failures = Vec::new();
    for (stem, args, ext) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (stdout, stderr, code) = run(&args);
        codes.insert(stem.clone(), code);
        let path = dir.join(format!("{stem}.{ext}"));
        let body = if code == 1 { stderr } else { stdout };
        if update {
            std::fs::write(&path, &body).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(body.as_str()) {
            failures.push(stem.clone());
        }
    }
    let table: String = codes.iter().map(|(k, v)| format!("{k} {v}\n")).collect();
    if update {
        std::fs::write(&codes_path, &table).unwrap();
    } else {
        assert_eq!(
            std::fs::read_to_string(&codes_path).unwrap(),
            table,
            "exit codes changed"
        );
    }
    assert!(
        failures.is_empty(),
        "outputs differ from {}: {failures:?}",
        dir.display()
    );
}

fn verdict_of(name: &str, primes: &str) -> (serde_json::Value, i32) {
    let (stdout, _, code) = run(&["verdict", &fixture(name), "--primes", primes]);
    (serde_json::from_str(&stdout).unwrap(), code)
}

#[test]
fn verdict_exit_codes() {
    let (v, code) = verdict_of("tetrahedron", "2,3");
    assert_eq!((v["sphere3"].as_str(), code), (Some("Yes"), 0));
    let (v, code) = verdict_of("rp2-6", "2,3");
    assert_eq!((v["sphere3"].as_str(), code), (Some("No"), 0));
    let (v, code) = verdict_of("torus7", "2,3,5");
    assert_eq!((v["sphere3"].as_str(), code), (Some("Unknown"), 2));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        vec!["frobnicate"],
        vec!["validate", "--bogus"],
        vec!["homology", "x.json"],
        vec!["verdict", "x.json"],
        vec!["words"],
        vec!["prs", "maybe"],
    ] {
        let (_, stderr, code) = run(&args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!stderr.is_empty());
    }
    let (_, stderr, code) = run(&["validate", "/nonexistent/complex.json"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error:"));
    let (_, _, code) = run(&["homology", &fixture("tetrahedron"), "--prime", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn reads_stdin() {
    let out = Command::new(env!("CARGO_BIN_EXE_embed3"))
        .args(["homology", "--integral"])
        .stdin(std::fs::File::open(fixture("rp2-6")).unwrap())
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["torsion"], serde_json::json!([2]));
}

#[test]
fn sigma_documents_round_trip() {
    let dir = std::env::temp_dir().join(format!("embed3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let prs = dir.join("prs.json");
    let (stdout, _, _) = run(&["prs", "find", &fixture("rp2-6")]);
    std::fs::write(&prs, &stdout).unwrap();
    let (with_file, _, code) = run(&["surfaces", &fixture("rp2-6"), "--sigma", prs.to_str().unwrap()]);
    let (default, _, _) = run(&["surfaces", &fixture("rp2-6")]);
    assert_eq!(code, 0);
    assert_eq!(with_file, default);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_is_reproducible_and_canonical() {
    let a = run(&["gen", "--seed", "42", "--vertices", "7", "--prob", "0.4"]).0;
    let b = run(&["gen", "--seed", "42", "--vertices", "7", "--prob", "0.4"]).0;
    assert_eq!(a, b);
    let c = embed3::document::parse_complex(&a).unwrap();
    assert_eq!(embed3::document::emit_complex(&c), a);
    let (_, _, code) = run(&["gen", "--seed", "1", "--vertices", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn fixture_documents_are_canonical() {
    for name in FIXTURES {
        let text = std::fs::read_to_string(Path::new(&fixture(name))).unwrap();
        let c = embed3::document::parse_complex(&text).unwrap();
        assert_eq!(embed3::document::emit_complex(&c), text, "{name}");
    }
}
