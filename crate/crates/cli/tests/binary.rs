use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigenperiod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["hodge", "--n", "8", "--d", "4", "--k", "1"],
    &["hodge", "--n", "9", "--d", "6", "--k", "5"],
    &["spectrum", "--d", "6", "--l", "4"],
    &["pure-locus", "--n", "8", "--d", "4", "--k", "2"],
    &["pure-locus", "--n", "7", "--d", "3", "--k", "1", "--list"],
    &[
        "pure-locus",
        "--n",
        "7",
        "--d",
        "3",
        "--k",
        "1",
        "--list",
        "--pure",
    ],
    &["compact-type", "--n", "8", "--d", "6", "--members", "1,2,3"],
    &["codim", "--n", "12", "--d", "6", "--k", "1", "--oracle"],
    &["codim", "--n", "5", "--d", "5", "--k", "2"],
    &[
        "stability",
        "--weights",
        "1/7+e,1/7+e,1/7+e,1/7+e,1/7+e,1/7+e,1/7+e,1-7e",
        "--partition",
        "1,2,3,4,5,6|7|8",
    ],
    &["blowup-loci", "--weights", "1/3,1/3,1/3,1/3,1/3,1/3"],
    &[
        "reduction",
        "--from",
        "1,1,1,1,1",
        "--to",
        "2/5+e,2/5+e,2/5+e,2/5+e,2/5+e",
    ],
    &["reduction", "--n", "8", "--d", "6", "--size", "6"],
    &["table", "check"],
    &["table", "lookup", "--n", "8", "--k", "1", "--d", "4"],
];

#[test]
fn examples_plain() {
    let o = run(&["hodge", "--n", "8", "--d", "4", "--k", "1"]);
    assert_eq!(stdout(&o), "signature: (1,5); genus: 9; regime: DividesN\n");
    let o = run(&["codim", "--n", "9", "--d", "6", "--k", "1"]);
    assert_eq!(stdout(&o), "H = not-applicable\n");
    let o = run(&["codim", "--n", "12", "--d", "6", "--k", "1", "--oracle"]);
    assert_eq!(stdout(&o), "H = 9\n");
    let o = run(&["table", "lookup", "--n", "7", "--k", "1", "--d", "2"]);
    assert!(stdout(&o).starts_with("n=7 k/d=1/2: (r,s) = (3,3); H = -\n"));
}

#[test]
fn every_command_succeeds() {
    for args in COMMANDS {
        let o = run(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!stdout(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trips_byte_identically() {
    for args in COMMANDS {
        let mut a = args.to_vec();
        a.push("--json");
        let o = run(&a);
        assert_eq!(o.status.code(), Some(0), "{a:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(text, again, "{a:?}");
    }
}

fn has_float(s: &str) -> bool {
    let b = s.as_bytes();
    (1..b.len().saturating_sub(1))
        .any(|i| b[i] == b'.' && b[i - 1].is_ascii_digit() && b[i + 1].is_ascii_digit())
        || s.contains("e-0")
}

#[test]
fn no_floating_point_anywhere() {
    for args in COMMANDS {
        for extra in [None, Some("--json")] {
            let mut a = args.to_vec();
            a.extend(extra);
            let text = stdout(&run(&a));
            assert!(!has_float(&text), "{a:?}: {text}");
        }
    }
    let csv = stdout(&run(&["spectrum", "--d", "12", "--l", "8", "--csv"]));
    assert!(csv.starts_with("alpha,eta,weight,mult\n"));
    assert!(!has_float(&csv));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["hodge", "--n", "8", "--d", "4", "--k", "4"][..],
        &["hodge", "--n", "3", "--d", "4", "--k", "1"],
        &["nonsense"],
        &["stability", "--weights", "1/3,x", "--partition", "1|2"],
        &["codim", "--n", "8", "--d", "4"],
        &["table", "lookup", "--n", "8", "--k", "0", "--d", "4"],
        &["spectrum", "--d", "4", "--l", "6", "--json", "--csv"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn library_rejections_exit_one() {
    // too many points to enumerate, wrong partition length
    for args in [
        &["pure-locus", "--n", "40", "--d", "4", "--k", "1"][..],
        &[
            "stability",
            "--weights",
            "1/2,1/2,1/2,1/2",
            "--partition",
            "1,2|3",
        ],
        &["reduction", "--n", "9", "--d", "6", "--size", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pure-locus"));
}

#[test]
fn table_check_reports_corruption() {
    let manifest = env!("CARGO_MANIFEST_DIR");
    let good = std::fs::read_to_string(format!("{manifest}/../core/data/table1.csv")).unwrap();
    let bad = good.replacen("8,1,4,1,5,5", "8,1,4,1,6,5", 1);
    assert_ne!(good, bad, "fixture row present");
    let path = std::env::temp_dir().join(format!("eigenperiod-table-{}.csv", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let o = run(&["table", "check", "--explicit", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("mismatch: n=8 k/d=1/4"), "{text}");
    assert!(text.contains("1 mismatches"), "{text}");
}

#[test]
fn table_check_pristine() {
    let o = run(&["table", "check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("49 rows validated"));
}
