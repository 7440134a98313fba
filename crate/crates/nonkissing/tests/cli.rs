use clap::Parser;
use nonkissing::cli::{run, RunConfig};
use serde_json::Value;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");

fn go(args: &[&str]) -> (i32, String) {
    let cfg = RunConfig::try_parse_from(std::iter::once("nonkissing").chain(args.iter().copied())).unwrap();
    let out = run(&cfg);
    (out.code, out.document)
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, doc) = go(args);
    (code, serde_json::from_str(&doc).unwrap())
}

#[test]
fn facets_of_a2() {
    let (code, v) = json(&["facets", &format!("{DATA}/a2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["facets"], 5);
    assert_eq!(v["closed"], true);
}

#[test]
fn surface_of_the_loop() {
    let (code, v) = json(&["surface", &format!("{DATA}/loop.json")]);
    assert_eq!(code, 0);
    assert_eq!((v["b"].as_u64(), v["punctures"].as_u64(), v["genus"].as_i64()), (Some(1), Some(1), Some(0)));
}

#[test]
fn every_subcommand_answers() {
    for cmd in ["validate", "blossom", "dual", "walks", "facets", "flipgraph", "vectors", "fan", "polytope", "surface", "roundtrip"] {
        let (code, _) = json(&[cmd, "builtin:a:3"]);
        assert_eq!(code, 0, "{cmd}");
    }
    for cmd in ["blossom", "flipgraph", "surface"] {
        let (code, doc) = go(&[cmd, "builtin:a:2", "--format", "dot"]);
        assert_eq!(code, 0, "{cmd}");
        assert!(doc.contains("graph"), "{cmd}");
    }
}

#[test]
fn roundtrip_is_clean() {
    let (code, v) = json(&["roundtrip", &format!("{DATA}/doublepath3.json")]);
    assert_eq!(code, 0);
    for (k, x) in v.as_object().unwrap() {
        if let Some(s) = x.as_str() {
            assert_eq!(s, "ok", "{k}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(go(&["polytope", &format!("{DATA}/loop.json")]).0, 3);
    assert_eq!(go(&["facets", "builtin:double:2", "--max-facets", "10"]).0, 3);
    assert_eq!(go(&["validate", "/no/such/file.json"]).0, 1);
    assert_eq!(go(&["validate", "builtin:zzz:1"]).0, 1);
    let dir = std::env::temp_dir().join(format!("nk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"vertices":["1"],"arrows":[{"id":"a","src":"1","tgt":"1"},{"id":"b","src":"1","tgt":"1"},{"id":"c","src":"1","tgt":"1"}]}"#).unwrap();
    assert_eq!(go(&["validate", bad.to_str().unwrap()]).0, 2);
    assert!(RunConfig::try_parse_from(["nonkissing", "facets", "x", "--max-facets", "0"]).is_err());
    assert_eq!(nonkissing::cli::main_with(["nonkissing", "bogus"]), 1);
    let out = dir.join("out.json");
    assert_eq!(nonkissing::cli::main_with(["nonkissing", "validate", "builtin:a:2", "--out", out.to_str().unwrap()]), 0);
    assert!(std::fs::read_to_string(&out).unwrap().contains("vertices"));
}
