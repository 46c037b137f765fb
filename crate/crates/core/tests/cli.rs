use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pole-lyapunov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn kv(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("{key} missing in\n{text}"))
        .parse()
        .unwrap()
}

#[test]
fn solve_gamow_kv() {
    let o = run(&["solve", "--gamow", "10", "--dv", "1e-3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!((kv(&out, "T0") - 0.438382161593).abs() < 1e-11);
    assert!((kv(&out, "alpha") - 1.57573822207).abs() < 1e-10);
    assert!(kv(&out, "sigma_original") < 0.0);
}

#[test]
fn solve_spectrum_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(&path, "# hbar=1 gamma0=1\n0 -1\n1 1\n").unwrap();
    let o = run(&[
        "solve",
        "--spectrum",
        path.to_str().unwrap(),
        "--dv",
        "0.01",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t0 = json["solution"]["t0"].as_f64().unwrap();
    assert!((t0 - 100f64.acosh() / 2.0).abs() < 1e-12);
    assert_eq!(json["reversed"], false);
}

#[test]
fn solve_decaying_spectrum_fails_with_hint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("decay.txt");
    std::fs::write(&path, "0 0\n1 -1\n2 -2\n").unwrap();
    let p = path.to_str().unwrap();

    let o = run(&["solve", "--spectrum", p]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("time_reverse"));

    let o = run(&["solve", "--spectrum", p, "--reverse", "--n-bath", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(kv(&out, "sigma_per_mode") > 0.0);
}

#[test]
fn sweep_csv_is_deterministic_and_order_preserving() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let sweep = |p: &std::path::Path, extra: &[&str]| {
        let mut args = vec![
            "sweep",
            "--n",
            "5,10,100",
            "--dv",
            "1e-3,1e-9",
            "--out",
            p.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        run(&args)
    };
    assert!(sweep(&a, &[]).status.success());
    assert!(sweep(&b, &["--parallel"]).status.success());
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(a, b);

    let text = String::from_utf8(a).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "N,dV,T0,h_ks_per_gamma0,sigma_prime,alpha,status");
    let keys: Vec<&str> = rows[1..]
        .iter()
        .map(|r| &r[..r.find(",").unwrap() + 5])
        .collect();
    assert_eq!(
        keys,
        ["5,1e-3", "5,1e-9", "10,1e-3", "10,1e-9", "100,1e-3", "100,1e-9"]
    );
}

#[test]
fn sweep_usage_errors() {
    assert_eq!(run(&["sweep", "--format", "xml"]).status.code(), Some(2));
    assert!(!run(&["sweep", "--n", "10,5"]).status.success());
    assert!(!run(&["sweep", "--dv", "2"]).status.success());
}

#[test]
fn table1_reports_every_cell() {
    let o = run(&["table1", "--parallel"]);
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.contains("EXCLUDED-ANOMALY"))
            .count(),
        2
    );
    assert!(out.contains("missing=0"));
    assert!(out.contains("fit dV=1e-3: h_KS = (1.5152"));
    // exit status tracks the golden comparison
    let failed = out.lines().any(|l| l.ends_with("FAIL"));
    assert_eq!(o.status.success(), !failed);
}

#[test]
fn lifetimes_and_escape() {
    let o = run(&[
        "lifetimes",
        "--alpha",
        "1",
        "--n",
        "4",
        "--hbar",
        "2",
        "--gamma0",
        "0.5",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out
        .lines()
        .any(|l| l == "2,5.00000000000e-1,2.00000000000e0"));

    let o = run(&["escape", "--gamow", "2", "--t", "1"]);
    let out = stdout(&o);
    let want = -((1.0 + 2f64.exp() + 4f64.exp()) / 3.0).ln();
    assert!((kv(&out, "gamma_escape") - want).abs() < 1e-10);
}
