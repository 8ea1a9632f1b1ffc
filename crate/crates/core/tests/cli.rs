use std::path::PathBuf;
use std::process::Command;

use altactor::io::{format_algebra, parse_algebra};
use altactor::witness::canonical;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_altactor"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn check_w4_fails_flexible_with_witness() {
    let (code, out, _) = run(&["check", &data("w4.alg")]);
    assert_eq!(code, 1);
    assert!(out.contains("PASS axiom-2-1"));
    assert!(out.contains("PASS axiom-2-2"));
    assert!(out.contains("FAIL flexible-E1"));
    assert!(out.contains("(x,x,x)"));
}

#[test]
fn actor_gf4_is_certified() {
    let (code, out, _) = run(&["--format", "machine", "actor", &data("gf4.alg")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["record"], "actor");
    assert_eq!(v["actor_dim"], 2);
    assert_eq!(v["exists"], true);
}

#[test]
fn check_zero3_passes() {
    assert_eq!(run(&["check", &data("zero3.alg")]).0, 0);
}

#[test]
fn data_files_are_canonical() {
    for (file, name) in [
        ("w4.alg", "w4"),
        ("gf4.alg", "gf4"),
        ("h5.alg", "h5"),
        ("zero3.alg", "zero(3)"),
    ] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let a = canonical(name).unwrap();
        assert_eq!(parse_algebra(&text).unwrap(), a, "{file}");
        assert_eq!(text, format_algebra(&a), "{file}");
    }
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "field GF(5)\ndim 2\nprod 0 0 7 1\n").unwrap();
    let (code, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(run(&["check", "/nonexistent/file.alg"]).0, 2);
    assert_eq!(run(&["check", "@nothing"]).0, 2);
    assert_eq!(run(&["check", "@w4", "--laws", "no-such-law"]).0, 2);
}

#[test]
fn canonical_output_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["canonical", "octonions"]);
    assert_eq!(code, 0);
    let path = dir.path().join("o.alg");
    std::fs::write(&path, &out).unwrap();
    assert_eq!(parse_algebra(&out).unwrap(), canonical("octonions").unwrap());
    let (code, _, _) = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["check", path.to_str().unwrap(), "--laws", "associative"]);
    assert_eq!(code, 1);
}

#[test]
fn semidirect_output_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("reg.act");
    // the regular action of gf4 on itself
    let mut text = String::from("acting @gf4\ntarget @gf4\n");
    let a = canonical("gf4").unwrap();
    for b in 0..2 {
        for x in 0..2 {
            for k in 0..2 {
                if !a.coefficient(b, x, k).is_zero() {
                    text.push_str(&format!("left {b} {x} {k} 1\nright {x} {b} {k} 1\n"));
                }
            }
        }
    }
    std::fs::write(&good, &text).unwrap();
    let (code, out, _) = run(&["semidirect", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let e = parse_algebra(&out).unwrap();
    assert_eq!(e.dim(), 4);
    assert!(out.contains("# galt: PASS"));

    let bad = dir.path().join("bad.act");
    std::fs::write(&bad, "acting @gf4\ntarget @gf4\nleft 1 1 0 1\n").unwrap();
    let (code, out, _) = run(&["semidirect", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("# galt: FAIL"));
}

#[test]
fn asoci_families_on_h5() {
    let (_, out, _) = run(&["--format", "machine", "asoci", "@h5", "--family", "regular"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let dims: Vec<u64> = v["chain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 3]);
    let (_, out, _) = run(&["--format", "machine", "soci", "@h5"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["soci"]["dim"], 1);
}

#[test]
fn identities_and_example() {
    let (code, out, _) = run(&["identities", "@h5", "--which", "b1"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL B1"));
    assert_eq!(run(&["identities", "@gf4", "--which", "I1"]).0, 0);
    assert_eq!(run(&["identities", "@gf4", "--which", "a7"]).0, 0);
    assert_eq!(run(&["identities", "@gf4", "--which", "a12"]).0, 2);
    let (code, out, _) = run(&["--format", "machine", "example51", "--p", "7"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["coefficient"], "3");
    assert_eq!(run(&["example51", "--p", "3"]).0, 2);
}

#[test]
fn witness_search_is_deterministic() {
    let args = [
        "--format",
        "machine",
        "witness",
        "--target",
        "galt-not-alt",
        "--dim",
        "4",
        "--field",
        "GF(2)",
        "--seed",
        "3",
        "--budget",
        "500",
    ];
    let (code, a, _) = run(&args);
    assert_eq!(code, 0);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(v["mode"], "random");
    assert!(v["hit_count"].as_u64().unwrap() > 0);
}

#[test]
fn machine_output_is_one_object_per_line() {
    let (_, out, _) = run(&["--format", "machine", "check", "@w4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    for l in lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["record"], "law");
        assert!(v["law"].is_string());
    }
}
