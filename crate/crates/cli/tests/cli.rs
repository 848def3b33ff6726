use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kummer-g2"))
}

fn stdout(args: &[&str]) -> (String, i32) {
    let out = bin().args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8"), out.status.code().unwrap_or(-1))
}

#[test]
fn singular_set_has_twelve_components() {
    let (text, code) = stdout(&["group", "singular-set"]);
    assert_eq!(code, 0);
    assert!(text.contains("components up to Γ: 12"), "{text}");
}

#[test]
fn relations_list_lattice_translations() {
    let (text, code) = stdout(&["group", "relations"]);
    assert_eq!(code, 0);
    assert!(text.contains("[alpha,beta] = τ^[0, 0, 0, 0, 0, -1, 0]"), "{text}");
}

#[test]
fn index_examples() {
    assert_eq!(stdout(&["index", "compute", "--p1", "0", "--group", "zk:2", "--chi", "1", "--dim", "1"]).0.trim(), "0");
    assert_eq!(stdout(&["index", "compute", "--p1", "0", "--group", "zk:2", "--chi", "3"]).0.trim(), "0");
    assert_eq!(stdout(&["index", "compute", "--p1", "0", "--group", "zk:2", "--chi", "-1"]).0.trim(), "-1");
    let adjoint = ["index", "compute", "--p1", "0", "--group", "zk:2", "--chi", "1", "--dim", "1", "--adjoint-trace"];
    assert_eq!(stdout(&adjoint).0.trim(), "0");
}

#[test]
fn index_rejects_bad_input() {
    assert_eq!(stdout(&["index", "compute", "--p1", "0", "--group", "zk:3", "--chi", "1"]).1, 2);
    assert_eq!(stdout(&["index", "compute", "--p1", "0", "--group", "d4", "--chi", "1"]).1, 2);
}

#[test]
fn census_then_orbits_from_file() {
    let dir = std::env::temp_dir().join(format!("kummer-g2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let census = dir.join("census.json");
    let csv = dir.join("orbits.csv");
    let (text, code) = stdout(&["census", "run", "--mode", "free", "--out", census.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("irreducible and rigid: 1024128"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&census).unwrap()).unwrap();
    assert_eq!(v["nonflat_irreducible_rigid"], "1008126");

    let (text, code) = stdout(&["symmetry", "orbits", "--census", census.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("pigeonhole bound: 246"), "{text}");
    let rows = std::fs::read_to_string(&csv).unwrap();
    let mut lines = rows.lines();
    assert_eq!(lines.next(), Some("alpha,beta,gamma,tau1,tau2,tau3,tau4,tau5,tau6,tau7"));
    let body: Vec<&str> = lines.collect();
    let mut sorted = body.clone();
    sorted.sort();
    assert_eq!(body, sorted);
    assert!(body.iter().all(|r| r.split(',').count() == 10));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_paper_json_is_stable() {
    let args = ["verify-paper", "--json", "-", "--samples", "40"];
    let (a, code) = stdout(&args);
    assert_eq!(code, 0);
    let (b, _) = stdout(&args);
    let mut va: serde_json::Value = serde_json::from_str(&a).unwrap();
    let mut vb: serde_json::Value = serde_json::from_str(&b).unwrap();
    assert_eq!(va["manifest"]["stable_sha256"], vb["manifest"]["stable_sha256"]);
    for v in [&mut va, &mut vb] {
        v["manifest"].as_object_mut().unwrap().remove("timings");
    }
    assert_eq!(va, vb);
    let keys: Vec<&String> = va.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["census_constrained", "census_free", "g2", "group", "index", "manifest", "symmetry"]);
    assert_eq!(va["census_free"]["irreducible_and_rigid"], "1024128");
}

#[test]
fn constrained_only_flags_census_claims() {
    let (a, code) = stdout(&["verify-paper", "--json", "-", "--samples", "20", "--mode", "constrained"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let claims = v["manifest"]["claims"].as_array().unwrap();
    let status = |id: &str| claims.iter().find(|c| c["id"] == id).unwrap()["status"].clone();
    assert_eq!(status("census.irreducible_rigid"), "flagged");
    assert_eq!(status("census.constrained"), "flagged");
    assert_eq!(status("group.singular_set"), "pass");
    assert!(v["census_free"].is_null());
}
