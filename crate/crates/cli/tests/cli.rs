use std::path::PathBuf;
use std::process::{Command, Output};

const THEOREMS: &[&str] = &[
    "th_symm",
    "th_main",
    "th_heis",
    "prop_reform",
    "lem_ham",
    "virasoro",
    "final",
    "lem_zero",
    "lem_comp",
    "structural",
];

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-fock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn repo_file(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

/// Compares against `tests/golden/<name>`; set `UPDATE_GOLDEN=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let out = bin(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let actual = stdout(&out);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{name} differs from golden output");
}

#[test]
fn golden_default_grids() {
    for t in THEOREMS {
        golden(&format!("verify_{t}.json"), &["verify", t, "--format", "json"]);
    }
}

#[test]
fn golden_listings() {
    golden("classes_trivial_4.txt", &["classes", "--group", "trivial", "--n", "4"]);
    golden("classes_cyclic2_2.txt", &["classes", "--group", "cyclic(2)", "--n", "2"]);
    golden("classes_cyclic2_3.json", &["classes", "--group", "cyclic2", "--n", "3", "--format", "json"]);
    golden("delta_eig_trivial_3.txt", &["delta-eig", "--n", "3"]);
    golden("delta_eig_cyclic3_2.txt", &["delta-eig", "--group", "cyclic(3)", "--n", "2"]);
    golden("group_sym3.txt", &["group", "--group", "sym(3)"]);
}

#[test]
fn class_sizes_of_small_wreath_products() {
    let sizes = |group: &str, n: &str| -> Vec<u64> {
        let text = stdout(&bin(&["classes", "--group", group, "--n", n]));
        text.lines()
            .skip_while(|l| !l.starts_with("-----"))
            .skip(1)
            .take_while(|l| !l.is_empty())
            .map(|l| l.split_whitespace().rev().nth(1).unwrap().parse().unwrap())
            .collect()
    };
    assert_eq!(sizes("trivial", "4"), vec![1, 6, 3, 8, 6]);
    let b2 = sizes("cyclic(2)", "2");
    assert_eq!((b2.len(), b2.iter().sum::<u64>()), (5, 8));
    let b3 = sizes("cyclic(2)", "3");
    assert_eq!((b3.len(), b3.iter().sum::<u64>()), (10, 48));
}

#[test]
fn eigenvalue_tables() {
    let column = |n: &str| -> Vec<String> {
        stdout(&bin(&["delta-eig", "--n", n]))
            .lines()
            .skip_while(|l| !l.starts_with("-----"))
            .skip(1)
            .take_while(|l| !l.is_empty())
            .map(|l| l.split_whitespace().nth(2).unwrap().to_string())
            .collect()
    };
    // rows run from (1^n) to (n)
    assert_eq!(column("1"), ["0"]);
    assert_eq!(column("2"), ["-1", "1"]);
    assert_eq!(column("3"), ["-3", "0", "3"]);
}

#[test]
fn contract_examples_pass() {
    for args in [
        &["verify", "th_symm", "--n-max", "6"][..],
        &["verify", "virasoro", "--window", "8"],
        &["verify", "final", "--group", "cyclic2", "--n", "3"],
        &["verify", "lem_zero", "--group", "cyclic(2)", "--n", "3"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(stdout(&out).contains("\nPASS: "), "{args:?}");
    }
}

#[test]
fn group_files() {
    for file in ["docs/groups/q8.toml", "docs/groups/z4.toml"] {
        let path = repo_file(file);
        let out = bin(&["group", "--group", &path]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let out = bin(&["verify", "th_main", "--group", &path, "--n-max", "2"]);
        assert_eq!(out.status.code(), Some(0), "{file}: {}", stdout(&out));
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("wreath-fock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "size = 2\nmul = [[0, 1], [1, 0]]\ncharacters = [[1, 1], [1, 1]]\n").unwrap();
    let bad = bad.to_string_lossy().into_owned();
    for args in [
        &["verify", "no_such_identity"][..],
        &["classes"],
        &["classes", "--n", "3", "--group", "cyclic(9)"],
        &["classes", "--n", "2", "--group", "/no/such/file"],
        &["group", "--group", &bad],
        &["verify", "th_symm", "--group", "cyclic(2)"],
        &["verify", "lem_ham", "--window", "40"],
        &["verify", "all", "--format", "yaml"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = bin(&["group", "--group", &bad]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cap_limits_brute_force() {
    let out = bin(&["verify", "th_symm", "--n", "5", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
    let text = stdout(&bin(&["classes", "--n", "5", "--cap", "100"]));
    assert!(text.contains("brute_force: skipped (over cap)"), "{text}");
}

#[test]
fn out_file_matches_stdout_and_timings_are_opt_in() {
    let path = std::env::temp_dir().join(format!("wreath-fock-out-{}.json", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    let out = bin(&["verify", "lem_comp", "--format", "json", "--out", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&bin(&["verify", "lem_comp", "--format", "json"])));
    assert!(!written.contains("elapsed_ms"));
    let timed = stdout(&bin(&["verify", "lem_comp", "--format", "json", "--timings"]));
    assert!(timed.contains("\"elapsed_ms\""));
}

#[test]
fn reports_do_not_depend_on_threads_or_run() {
    let args = ["verify", "all", "--format", "json", "--n", "3", "--window", "5"];
    let first = stdout(&bin(&args));
    let second = stdout(&bin(&args));
    let mut serial = args.to_vec();
    serial.extend(["--jobs", "1"]);
    let third = stdout(&bin(&serial));
    assert!(first == second, "two runs differ");
    assert!(first == third, "single-threaded run differs");
    assert!(first.starts_with('['));
}
