use mds_bweight::cli::{self, distribution_from_json, distribution_to_json};
use mds_bweight::{b_distribution, rs_code, BigCount, DistributionQuery, FieldSpec, Mode};
use num_bigint::BigInt;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mds-bweight").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn dist_text_matches_worked_example() {
    let (code, out, _) = run(&["dist", "--q", "11", "--n", "6", "--k", "4", "--b", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("  5     60"), "{out}");
    assert!(out.contains("  6  14580"), "{out}");
    assert!(out.contains("total 14641"));
}

#[test]
fn dist_json_schema() {
    let (code, out, _) = run(&[
        "dist", "--q", "11", "--n", "6", "--k", "4", "--b", "3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["query"]["d"], 3);
    assert_eq!(v["mode"], "closed-form");
    assert_eq!(v["counts"]["5"], "60");
    assert_eq!(v["counts"]["6"], "14580");
    assert_eq!(v["total"], "14641");
    let keys: Vec<&String> = v["counts"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["0", "1", "2", "3", "4", "5", "6"]);
}

#[test]
fn dist_csv_lists_every_weight() {
    let (code, out, _) = run(&[
        "dist", "--q", "7", "--n", "5", "--d", "3", "--b", "2", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "w,count,mode");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "0,1,closed-form");
}

#[test]
fn dist_both_modes_agree() {
    let (code, out, _) = run(&[
        "dist", "--q", "7", "--n", "6", "--k", "3", "--b", "2", "--mode", "both", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let docs = v.as_array().unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["counts"], docs[1]["counts"]);
    assert_eq!(docs[1]["mode"], "brute-force");
}

#[test]
fn json_round_trip() {
    for (q, n, k, b) in [(11, 6, 4, 3), (13, 10, 4, 4), (8, 7, 3, 2), (9, 5, 2, 5)] {
        let query = DistributionQuery::mds(q, n, k, b).unwrap();
        let dist = b_distribution::<BigCount>(&query).unwrap();
        let text = distribution_to_json(&dist).to_string();
        let back = distribution_from_json(&text).unwrap();
        assert_eq!(back, dist);
    }
    assert!(distribution_from_json(
        r#"{"query":{"q":5,"n":3,"k":2,"d":2,"b":2},"mode":"closed-form","counts":{"0":"1"},"total":"7"}"#
    )
    .is_err());
}

#[test]
fn verify_special_case_matches() {
    let (code, out, _) = run(&["verify", "--q", "11", "--n", "6", "--k", "4", "--b", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("MATCH (7 weights, 14641 codewords)"), "{out}");
    assert!(out.contains("w=6   closed=14640 brute=14640 ok"), "{out}");
}

#[test]
fn verify_runs_identities() {
    let (code, out, _) = run(&[
        "verify",
        "--q",
        "11",
        "--n",
        "6",
        "--k",
        "4",
        "--b",
        "3",
        "--workers",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS full-weight-b3-k4: 14580"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn f_value_with_oracle() {
    let (code, out, _) = run(&[
        "f-value",
        "--q",
        "11",
        "--d",
        "3",
        "--b",
        "2",
        "--lengths",
        "2,3",
        "--brute",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "F = 830\nbrute = 830\nMATCH\n");

    let (code, out, _) = run(&["f-value", "--q", "11", "--d", "3", "--b", "3", "--lengths", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "10");
}

#[test]
fn f_value_field_too_small() {
    let (code, _, err) = run(&[
        "f-value",
        "--q",
        "5",
        "--d",
        "3",
        "--b",
        "3",
        "--lengths",
        "3,4",
        "--brute",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("q >="), "{err}");
}

#[test]
fn invalid_inputs_exit_2() {
    let cases: &[&[&str]] = &[
        &["dist", "--q", "5", "--n", "7", "--k", "3", "--b", "2"],
        &["dist", "--q", "6", "--n", "4", "--k", "2", "--b", "2"],
        &["dist", "--q", "11", "--n", "6", "--k", "4", "--d", "4", "--b", "2"],
        &["dist", "--q", "11", "--n", "6", "--k", "7", "--b", "2"],
        &["dist", "--q", "11", "--n", "6", "--k", "4", "--b", "0"],
        &[
            "dist",
            "--p",
            "2",
            "--m",
            "3",
            "--modulus",
            "1,1,1,1",
            "--n",
            "6",
            "--k",
            "4",
            "--b",
            "2",
        ],
        &[
            "dist", "--q", "11", "--p", "11", "--m", "1", "--n", "6", "--k", "4", "--b", "2",
        ],
        &["dist", "--n", "6", "--k", "4", "--b", "2"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let (_, _, err) = run(cases[0]);
    assert!(err.contains("n exceeds field order"), "{err}");
}

#[test]
fn enumeration_bound_exit_3() {
    let (code, _, err) = run(&[
        "verify",
        "--q",
        "13",
        "--n",
        "8",
        "--k",
        "6",
        "--b",
        "3",
        "--max-enum",
        "1000",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("exceeds the bound"), "{err}");
}

#[test]
fn table_rows_for_every_b() {
    let (code, out, _) = run(&["table", "--q", "7", "--n", "6", "--k", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "b,mode,0,1,2,3,4,5,6");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[3], "3,special-case,1,0,0,0,0,0,342");

    let (code, out, _) = run(&["table", "--q", "7", "--n", "6", "--k", "3", "--mode", "both"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("b-weight distributions").count(), 2);
}

#[test]
fn generator_file_input() {
    let field = FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
    let code = rs_code(&field, 7, 3, None).unwrap();
    let file = code.to_generator_file();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gen.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let p = path.to_str().unwrap();

    let (status, out, err) = run(&["verify", "--input", p, "--b", "3"]);
    assert_eq!(status, 0, "{err}");
    assert!(out.contains("MATCH (8 weights, 512 codewords)"), "{out}");

    let (status, out, _) = run(&["dist", "--input", p, "--b", "2", "--mode", "brute", "--format", "json"]);
    assert_eq!(status, 0);
    let back = distribution_from_json(&out).unwrap();
    assert_eq!(back.mode(), Mode::BruteForce);
    assert_eq!(back.total(), BigInt::from(512));

    let (status, _, _) = run(&["dist", "--input", p, "--q", "8", "--b", "2"]);
    assert_eq!(status, 2);
    let (status, _, _) = run(&["dist", "--input", "/nonexistent/gen.json", "--b", "2"]);
    assert_eq!(status, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("dist"));
}
