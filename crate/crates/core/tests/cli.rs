use std::process::{Command, Output};

fn srgint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srgint"))
        .args(args)
        .env_remove("SRGINT_BUDGET")
        .output()
        .expect("run srgint")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn build_writes_graph6_and_summary() {
    let out = srgint(&["build", "petersen"]);
    assert_eq!(code(&out), 0);
    let g = srgint::graph::graph6_decode(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(
        srgint::graph::is_srg(&g),
        Some(srgint::SrgParams::new(10, 3, 0, 1))
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hs.g6");
    let out = srgint(&["build", "hoffman-singleton", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let summary = json(&out);
    assert_eq!(summary["srg"], "(50,7,0,1)");
    let out = srgint(&["verify", "srg", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["params"]["k"], 7);
    assert_eq!(code(&srgint(&["build", "no-such-thing"])), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&srgint(&["verify", "srg", "path:4"])), 1);
    assert_eq!(code(&srgint(&["verify", "srg", "clebsch"])), 0);
    let out = srgint(&["verify", "design", "s-4-7-23"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out)["intersection_numbers"],
        serde_json::json!([1, 3])
    );
    let out = srgint(&["verify", "extension"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["min_degree"], 165);
}

#[test]
fn search_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("n.txt");
    let c = cert.to_str().unwrap();
    let out = srgint(&["search", "petersen", "-s", "1", "-t", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["verdict"], "unsat");
    let out = srgint(&["search", "petersen", "-s", "2", "-t", "2", "-o", c]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&srgint(&["verify", "certificate", "petersen", c])), 0);
    // the same matrix does not certify a different graph of the same order
    assert_eq!(
        code(&srgint(&["verify", "certificate", "triangular:5", c])),
        1
    );
    let out = srgint(&[
        "search",
        "shrikhande",
        "-s",
        "2",
        "-t",
        "2",
        "--budget",
        "2",
    ]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["verdict"], "unknown");
    assert_eq!(
        code(&srgint(&["search", "path:5", "-s", "1", "-t", "1"])),
        2
    );
    assert_eq!(
        code(&srgint(&[
            "search", "petersen", "-s", "1", "-t", "2", "--order", "0,1"
        ])),
        2
    );
}

#[test]
fn profiles_match() {
    let out = srgint(&["profiles", "gq39c"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["support_cap"], 30);
    assert_eq!(v["sigma_modulus"], 28);
    assert_eq!(code(&srgint(&["profiles", "hosi", "--gamma-abs", "2"])), 0);
    assert_eq!(code(&srgint(&["profiles", "gq39c", "--gamma-abs", "2"])), 2);
}
