use std::path::PathBuf;

use qrat::formats::{CdgaJson, SimplicialJson};
use qrat::run;
use serde_json::Value;

fn fixtures() -> PathBuf {
    std::env::var_os("QRAT_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

fn qrat(args: &[&str]) -> qrat::Output {
    run(std::iter::once("qrat").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = qrat(args);
    assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
    assert!(out.stderr.is_empty());
    out.stdout
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["bch", "2"]), "a + b + 1/2·[a,b]\n");
    assert_eq!(ok(&["homology", &fixture("s2.json")]), "H0=1 H1=0 H2=1\n");
    assert_eq!(ok(&["lcs-weight", "x y x^-1 y^-1", "-n", "4"]), "2\n");
}

#[test]
fn relative_fixture_path() {
    // cargo runs integration tests from the package root
    assert_eq!(ok(&["homology", "fixtures/s2.json"]), "H0=1 H1=0 H2=1\n");
}

#[test]
fn malcev_commands() {
    assert_eq!(ok(&["mul", "x", "y", "-n", "2"]), "x1 + x2 + 1/2·[x1,x2]\n");
    assert_eq!(ok(&["mul", "0", "x + [x,y]", "-n", "2"]), "x1 + [x1,x2]\n");
    assert_eq!(ok(&["power", "x + y", "0", "-n", "3"]), "0\n");
    assert_eq!(ok(&["power", "x", "-1/2", "-n", "3"]), "-1/2·x1\n");
    assert_eq!(ok(&["log-word", "x^2", "-n", "3"]), "2·x1\n");
    assert_eq!(ok(&["lcs-weight", "x y x^-1 y^-1", "-n", "1"]), "exceeds 1\n");
    let hall = ok(&["hall", "2", "4"]);
    let dims: Vec<&str> = hall.lines().map(|l| l.split(['(', ')']).nth(1).unwrap()).collect();
    assert_eq!(dims, ["2", "1", "2", "3"]);
}

#[test]
fn simplicial_commands() {
    assert_eq!(ok(&["cohomology", &fixture("torus.json")]), "H0=1 H1=2 H2=1\n");
    assert_eq!(ok(&["homology", &fixture("wedge_s1_s1.json")]), "H0=1 H1=2\n");
    let apl = ok(&["apl-cohomology", &fixture("s2.json"), "--degree", "2", "--dmax", "4"]);
    assert!(apl.ends_with("H2=1 (stable from D=2; simplicial 1)\n"), "{apl}");
}

#[test]
fn sullivan_commands() {
    let s2 = fixture("s2_model.json");
    let m = ok(&["minimal-model", &s2, "--up-to", "6", "--json"]);
    let v: Value = serde_json::from_str(&m).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["model"]["differential"]["e3"], "e2^2");
    assert_eq!(ok(&["pi-rational", &s2, "--up-to", "5"]), "pi2=1 pi3=1 pi4=0 pi5=0\n");
    assert_eq!(
        ok(&["pi-rational", &fixture("cp2_model.json"), "--up-to", "6"]),
        "pi2=1 pi3=0 pi4=0 pi5=1 pi6=0\n"
    );
    assert_eq!(
        ok(&["pi-rational", &fixture("s3.json"), "--up-to", "4", "--dmax", "6"]),
        "pi2=0 pi3=1 pi4=0\n"
    );
    assert!(ok(&["check-minimal", &s2]).starts_with("minimal: true"));
    assert!(ok(&["check-minimal", &fixture("s2_with_contractible.json")]).starts_with("minimal: false"));
    assert_eq!(
        ok(&["check-realization", &s2, "--simplex-dim", "2", "--assign", "x=dt1*dt2"]),
        "true\n"
    );
    assert_eq!(
        ok(&["check-realization", &s2, "--simplex-dim", "3", "--assign", "x=t1*dt2*dt3"]),
        "false\n"
    );
}

#[test]
fn contractible_summand_is_dropped() {
    let out = ok(&["minimal-model", &fixture("s2_with_contractible.json"), "--up-to", "6", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let counts: Vec<u64> = v["generator_counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [0, 1, 1, 0, 0, 0]);
}

#[test]
fn exit_codes() {
    let usage = qrat(&["bch", "0"]);
    assert_eq!(usage.code, 2);
    let usage = qrat(&["pi-rational", &fixture("s2.json"), "--up-to", "3"]);
    assert_eq!(usage.code, 2, "{}", usage.stderr);
    let missing = qrat(&["bch"]);
    assert_eq!(missing.code, 2);
    let unknown = qrat(&["bch", "3", "--frobnicate"]);
    assert_eq!(unknown.code, 2);

    let parse = qrat(&["mul", "x +", "y", "-n", "2", "--json"]);
    assert_eq!(parse.code, 1);
    let err: Value = serde_json::from_str(&parse.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "parse");
    assert_eq!(err["error"]["position"], 3);

    let bad = qrat(&["minimal-model", &fixture("bad_d_squared.json"), "--up-to", "4", "--json"]);
    assert_eq!(bad.code, 1);
    let err: Value = serde_json::from_str(&bad.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "cdga");

    let wrong = qrat(&["homology", &fixture("s2_model.json"), "--json"]);
    assert_eq!(wrong.code, 1);
    let err: Value = serde_json::from_str(&wrong.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "json");
    assert_eq!(err["error"]["line"], 2);

    let inconclusive = qrat(&["apl-cohomology", &fixture("s2.json"), "--degree", "2", "--dmax", "2"]);
    assert_eq!(inconclusive.code, 3);
    assert!(inconclusive.stdout.contains("inconclusive"));
}

#[test]
fn emitted_json_reparses() {
    let s2 = fixture("s2_model.json");
    let s2x = fixture("s2.json");
    let commands: Vec<Vec<&str>> = vec![
        vec!["hall", "3", "3"],
        vec!["bch", "4"],
        vec!["mul", "x + 1/3*y", "[x,y] - y", "-n", "4"],
        vec!["power", "x + [x,y]", "7/3", "-n", "3"],
        vec!["log-word", "x y^-2 z", "-n", "3"],
        vec!["lcs-weight", "x y", "-n", "2"],
        vec!["homology", &s2x],
        vec!["apl-cohomology", &s2x, "--degree", "2", "--dmax", "3"],
        vec!["minimal-model", &s2, "--up-to", "5"],
        vec!["minimal-model", &s2x, "--up-to", "4", "--dmax", "4"],
        vec!["pi-rational", &s2, "--up-to", "4"],
        vec!["check-minimal", &s2, "--degree-bound", "5"],
    ];
    for mut args in commands {
        args.push("--json");
        let out = ok(&args);
        let v: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, out, "{args:?}");
        if let Some(model) = v.get("model") {
            let parsed: CdgaJson = serde_json::from_value(model.clone()).unwrap();
            let a = parsed.to_presentation().unwrap();
            assert_eq!(CdgaJson::from_presentation(&a), parsed);
            assert_eq!(serde_json::to_value(&parsed).unwrap(), *model);
        }
        if let Some(coords) = v.get("coordinates") {
            // coordinates feed back into `mul` as an element
            let n = v["class_bound"].as_u64().unwrap().to_string();
            let mut sum = String::from("0");
            for (w, c) in coords.as_object().unwrap() {
                let c = c.as_str().unwrap();
                match c.strip_prefix('-') {
                    Some(abs) => sum += &format!(" - {abs}*{w}"),
                    None => sum += &format!(" + {c}*{w}"),
                }
            }
            let back = ok(&["mul", &sum, "0", "-n", &n, "--json"]);
            assert_eq!(serde_json::from_str::<Value>(&back).unwrap()["coordinates"], *coords);
        }
    }
}

#[test]
fn fixtures_round_trip() {
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        if v.get("simplices").is_some() {
            let j: SimplicialJson = serde_json::from_str(&text).unwrap();
            let x = j.to_set().unwrap();
            x.validate().unwrap();
            assert_eq!(SimplicialJson::from_set(&x), j, "{}", path.display());
        } else {
            let j: CdgaJson = serde_json::from_str(&text).unwrap();
            let a = j.to_presentation().unwrap();
            let back = CdgaJson::from_presentation(&a);
            assert_eq!(back.to_presentation().unwrap(), a, "{}", path.display());
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let s2 = fixture("s2.json");
    let args: &[&str] = &["minimal-model", &s2, "--up-to", "4", "--dmax", "4", "--json"];
    let first = qrat(args);
    for _ in 0..3 {
        assert_eq!(qrat(args), first);
    }
}
