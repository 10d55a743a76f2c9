mod common;

use common::{cliquehole, gen_profile, path_str, write};
use tempfile::tempdir;

#[test]
fn check_reports_the_example_instance() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "seven.json", "5,2,3,4,1,4,2");
    let out = cliquehole(&["check", path_str(&p)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("colorable: sum 21 ≤ bound 21"));
}

#[test]
fn check_refuses_an_over_bound_instance() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "five.json", "3,2,3,2,1");
    let out = cliquehole(&["check", path_str(&p)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not colorable: 11 > 10"));
}

#[test]
fn check_json_is_machine_readable() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "five.json", "3,2,3,2,1");
    let out = cliquehole(&["check", "--json", path_str(&p)]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["intersection_sum"], 11);
    assert_eq!(v["bound"], 10);
    assert_eq!(v["slack"], -1);
    assert_eq!(v["colorable"], false);
}

#[test]
fn malformed_or_invalid_instances_exit_2() {
    let dir = tempdir().unwrap();
    let garbage = write(dir.path(), "bad.json", "{\"version\": 1, \"m\": ");
    assert_eq!(cliquehole(&["check", path_str(&garbage)]).code, 2);
    let triangle = write(
        dir.path(),
        "tri.json",
        r#"{"version":1,"m":4,"cliques":[["a","b"],["b","c"],["c","a"],["a","d"]]}"#,
    );
    let out = cliquehole(&["check", path_str(&triangle)]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("non-consecutive intersection"),
        "{}",
        out.stderr
    );
    assert_eq!(cliquehole(&["check", "/nonexistent/x.json"]).code, 2);
}

#[test]
fn color_output_verifies_and_tampering_is_caught() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "seven.json", "5,2,3,4,1,4,2");
    let c = dir.path().join("c.json");
    let out = cliquehole(&["color", path_str(&p), "--out", path_str(&c)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        cliquehole(&["verify", path_str(&p), "--coloring", path_str(&c)]).code,
        0
    );

    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
    let a = doc["colors"]["a1_v1"].clone();
    doc["colors"]["a1_v2"] = a;
    let bad = write(dir.path(), "bad.json", &doc.to_string());
    let out = cliquehole(&["verify", path_str(&p), "--coloring", path_str(&bad)]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout.contains("edge a1_v1 -- a1_v2 is monochromatic"),
        "{}",
        out.stdout
    );

    doc["colors"].as_object_mut().unwrap().remove("a3_v1");
    let partial = write(dir.path(), "partial.json", &doc.to_string());
    let out = cliquehole(&["verify", path_str(&p), "--coloring", path_str(&partial)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not total"));
}

#[test]
fn verify_respects_k() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "c5.json", "1,1,1,1,1");
    let c = dir.path().join("c.json");
    assert_eq!(
        cliquehole(&["color", path_str(&p), "--out", path_str(&c)]).code,
        0
    );
    assert_eq!(
        cliquehole(&[
            "verify",
            path_str(&p),
            "--coloring",
            path_str(&c),
            "--k",
            "5"
        ])
        .code,
        0
    );
    // five vertices on a padded ring use all five colours
    assert_eq!(
        cliquehole(&[
            "verify",
            path_str(&p),
            "--coloring",
            path_str(&c),
            "--k",
            "3"
        ])
        .code,
        1
    );
}

#[test]
fn even_instance_uses_the_alternating_scheme() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "six.json", "2,4,2,3,3,1");
    let out = cliquehole(&["color", path_str(&p)]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("even alternating"));
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["colors"]["a1_v1"], 0);
    assert_eq!(doc["colors"]["a2_v1"], 5);
}

#[test]
fn color_refuses_over_bound_with_exit_1() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "five.json", "3,2,3,2,1");
    let out = cliquehole(&["color", path_str(&p)]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not colorable: 11 > 10"));
}

#[test]
fn illegal_scripts_exit_2() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "seven.json", "5,2,3,4,1,4,2");
    let out = cliquehole(&["color", path_str(&p), "--i-sequence", "3"]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr
            .contains("scripted pick 3 rejected at iteration 1"),
        "{}",
        out.stderr
    );
    assert_eq!(
        cliquehole(&["color", path_str(&p), "--i-sequence", "7,2"]).code,
        2
    );
    assert_eq!(
        cliquehole(&["color", path_str(&p), "--i-sequence", "0"]).code,
        2
    );
}

#[test]
fn trace_json_sits_beside_the_table() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "seven.json", "5,2,3,4,1,4,2");
    let t = dir.path().join("trace.tsv");
    let out = cliquehole(&["color", path_str(&p), "--trace", path_str(&t)]);
    assert_eq!(out.code, 0);
    let json = std::fs::read_to_string(dir.path().join("trace.tsv.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["final_counts"], serde_json::json!([1, 0, 0, 2, 0, 2, 2]));
}

#[test]
fn gen_examples() {
    let out = cliquehole(&["gen", "--m", "5", "--sum", "10", "--seed", "42"]);
    assert_eq!(out.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["m"], 5);
    let dir = tempdir().unwrap();
    let p = write(dir.path(), "g.json", &out.stdout);
    let checked = cliquehole(&["check", "--json", path_str(&p)]);
    let v: serde_json::Value = serde_json::from_str(&checked.stdout).unwrap();
    assert_eq!(v["intersection_sum"], 10);
    assert_eq!(v["slack"], 0);

    assert_eq!(
        cliquehole(&["gen", "--m", "4", "--profile", "1,4,1,4"]).code,
        2
    );
    assert_eq!(
        cliquehole(&["gen", "--m", "5", "--profile", "1,1,1,1"]).code,
        2
    );
    assert_eq!(cliquehole(&["gen", "--m", "5", "--sum", "13"]).code, 2);
}

#[test]
fn gen_with_phi_adds_private_vertices() {
    let out = cliquehole(&[
        "gen",
        "--m",
        "4",
        "--profile",
        "1,1,1,1",
        "--phi",
        "3,2,2,4",
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("p1_v1"));
    assert!(out.stdout.contains("p4_v2"));
    assert!(!out.stdout.contains("p2_v1"));
}

#[test]
fn oracle_examples() {
    let dir = tempdir().unwrap();
    let c5 = gen_profile(dir.path(), "c5.json", "1,1,1,1,1");
    let out = cliquehole(&["oracle", path_str(&c5), "--k", "3"]);
    assert_eq!((out.code, out.stdout.trim()), (0, "3-colorable: true"));
    assert_eq!(cliquehole(&["oracle", path_str(&c5), "--k", "2"]).code, 1);

    let over = gen_profile(dir.path(), "over.json", "3,2,3,2,1");
    let out = cliquehole(&["oracle", path_str(&over), "--k", "5"]);
    assert_eq!((out.code, out.stdout.trim()), (1, "5-colorable: false"));

    let big = gen_profile(dir.path(), "big.json", "4,4,4,4,4,4,4,4,4,4");
    let out = cliquehole(&["oracle", path_str(&big)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("40"));
}

#[test]
fn diagram_examples() {
    let out = cliquehole(&["diagram", "--m", "7"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().filter(|l| l.contains(" -- ")).count(), 7);
    assert!(out.stdout.contains("P7 -- P2"));
    let out = cliquehole(&["diagram", "--m", "5"]);
    assert_eq!(out.stdout.lines().filter(|l| l.contains(" -- ")).count(), 5);
    assert_eq!(cliquehole(&["diagram", "--m", "6"]).code, 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "seven.json", "5,2,3,4,1,4,2");
    let runs: Vec<(String, String)> = (0..3)
        .map(|_| {
            let t = dir.path().join("t.tsv");
            let out = cliquehole(&["color", path_str(&p), "--trace", path_str(&t)]);
            (out.stdout, std::fs::read_to_string(&t).unwrap())
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let a = cliquehole(&["gen", "--m", "9", "--sum", "33", "--seed", "5"]).stdout;
    let b = cliquehole(&["gen", "--m", "9", "--sum", "33", "--seed", "5"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn stuck_profile_exits_3_with_a_dump() {
    let dir = tempdir().unwrap();
    let p = gen_profile(dir.path(), "thirteen.json", "1,12,1,1,12,1,1,12,1,6,7,6,7");
    let out = cliquehole(&["color", path_str(&p)]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("padding stuck"));
    assert!(out.stderr.contains("68 vertices exceeds guard 26"));
    assert!(out.stdout.is_empty());
}
