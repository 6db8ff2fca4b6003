use std::process::{Command, Output};

fn combrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_combrep")).args(args).output().expect("run combrep")
}

fn stdout_of(args: &[&str]) -> String {
    let out = combrep(args);
    assert!(out.status.success(), "combrep {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout_of(&["poly", "hl", "--shape", "1", "--n", "2", "--method", "ram-yip"]), "x1 + x2\n");
    assert_eq!(
        stdout_of(&["alcove", "chain", "--shape", "2,1,0,0", "--n", "4"]),
        "(2,3) (2,4) (1,3) (1,4) | (1,2) (1,3) (1,4)\n"
    );
    assert_eq!(stdout_of(&["crystal", "apply", "--word", "34321222342", "--i", "2"]), "34321223342\n");
    assert_eq!(
        stdout_of(&["mult", "stable", "--alpha", "1", "--beta", "1", "--degree", "6"]),
        "q + q^2 + q^3 + q^4 + q^5 + q^6 + O(q^7)\n"
    );
    assert_eq!(stdout_of(&["mult", "stable", "--alpha", "1", "--beta", "2", "--degree", "4"]), "O(q^5)\n");
}

#[test]
fn hall_littlewood_methods_agree() {
    let run = |m: &str| stdout_of(&["poly", "hl", "--shape", "2,1", "--n", "3", "--method", m]);
    let ram_yip = run("ram-yip");
    assert_eq!(ram_yip, run("tableau"));
    assert_eq!(ram_yip, run("aggregate"));
    assert!(ram_yip.contains("(2 - t - t^2)*x1*x2*x3"), "{ram_yip}");
}

#[test]
fn rsk_round_trip_through_the_cli() {
    let pq = stdout_of(&["rsk", "run", "--matrix", r#"{"entries":[[1,2,1],[2,1,2]]}"#]);
    assert_eq!(pq, "P: 1 1 / 2\nQ: 1 2 / 2\n");
    let back = stdout_of(&["rsk", "invert", "--p", "1 1 / 2", "--q", "1 2 / 2"]);
    assert_eq!(back, "biword: 1,2 2,1 2,1\nmatrix: {\"entries\":[[1,2,1],[2,1,2]]}\n");
    assert!(stdout_of(&["rsk", "verify-transpose"]).starts_with("715 matrices"));
    assert!(stdout_of(&["rsk", "verify-cauchy", "--alpha", "1", "--beta", "1"])
        .ends_with("identity holds up to degree 3\n"));
}

#[test]
fn crystal_operator_outputs() {
    assert_eq!(stdout_of(&["crystal", "apply", "--word", "21", "--i", "1", "--op", "e"]), "0\n");
    assert_eq!(stdout_of(&["crystal", "apply", "--tableau", "1 1 / 2", "--i", "1"]), "1 2 / 2\n");
    assert!(stdout_of(&["crystal", "verify-rsk"]).contains("both sides"));
}

#[test]
fn poset_commands() {
    assert!(stdout_of(&["poset", "check-differential", "--young", "6"]).ends_with("1-differential: yes\n"));
    assert!(stdout_of(&["poset", "check-sl2", "--boolean", "3"]).ends_with("sl2 structure: yes\n"));
    assert!(stdout_of(&["poset", "check-peck", "--boolean", "3"]).ends_with("Peck: yes\n"));
    assert_eq!(stdout_of(&["poset", "character", "--chain", "2"]), "q^-2 + 1 + q^2\n");

    let poset = r#"{"elements":[{"id":"a","rank":0},{"id":"b","rank":1}],"covers":[["a","b"]]}"#;
    let x = r#"{"entries":[[1,0,1,1]]}"#;
    let y = r#"{"entries":[[0,1,1,1]]}"#;
    assert!(stdout_of(&["poset", "check-sl2", "--poset", poset, "--x", x, "--y", y]).ends_with("sl2 structure: yes\n"));
    let bad_y = r#"{"entries":[[0,1,2,1]]}"#;
    let out = combrep(&["poset", "check-sl2", "--poset", poset, "--x", x, "--y", bad_y]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn repdiag_commands() {
    let solved = stdout_of(&["repdiag", "solve", "--gt-shape", "2,1", "--n", "3"]);
    assert!(solved.contains("\"labels\""));
    let check = stdout_of(&["repdiag", "check", "--diagram", solved.trim()]);
    assert_eq!(check.lines().filter(|l| l.contains(": ok")).count(), 3, "{check}");
    assert!(stdout_of(&["repdiag", "verify", "--diagram", solved.trim()]).ends_with("representation: yes\n"));
    let weights = stdout_of(&["repdiag", "weights", "--gt-shape", "1", "--n", "3"]);
    assert_eq!(weights, "1: m=(1,0) l=(1,0) rho=(1,0)\n2: m=(-1,1) l=(1,1) rho=(0,1)\n3: m=(0,-1) l=(0,1) rho=(0,0)\n");
    let gt = stdout_of(&["repdiag", "gt", "--shape", "1", "--n", "3"]);
    assert!(gt.starts_with("{\"elements\""));
}

#[test]
fn usage_errors_exit_nonzero_with_stderr() {
    for args in
        [&["bogus"][..], &["poly", "hl", "--shape", "1,1,1", "--n", "2"], &["alcove", "chain", "--shape", "2,x"]]
    {
        let out = combrep(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["alcove", "admissible", "--shape", "2,1", "--n", "3"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = ["alcove", "compress", "--shape", "3,1", "--n", "3", "--aggregates"];
    let a = stdout_of(&args);
    assert_eq!(a, stdout_of(&args));
    assert!(a.ends_with("compression holds for 15 tableaux\n"), "{a}");
}

#[test]
fn verify_all_passes_and_reports_json() {
    let out = combrep(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);

    let out = combrep(&["verify", "all", "--format", "json", "--jobs", "4", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    let ids: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"]);
}
