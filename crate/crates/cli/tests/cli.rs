use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ccnr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccnr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .trim()
        .to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PSI_PLUS_DENSITY: &str = r#"{"kind":"density","dims":[2,2],"matrix":[
 [[0.5,0],[0,0],[0,0],[0.5,0]],
 [[0,0],[0,0],[0,0],[0,0]],
 [[0,0],[0,0],[0,0],[0,0]],
 [[0.5,0],[0,0],[0,0],[0.5,0]]]}"#;

const MIXED: &str = r#"{"kind":"density","dims":[2,2],"matrix":[
 [[0.25,0],[0,0],[0,0],[0,0]],
 [[0,0],[0.25,0],[0,0],[0,0]],
 [[0,0],[0,0],[0.25,0],[0,0]],
 [[0,0],[0,0],[0,0],[0.25,0]]]}"#;

#[test]
fn check_maximally_entangled() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "psi.json", PSI_PLUS_DENSITY);
    let o = ccnr(&["check", s(&p)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "tau").parse::<f64>().unwrap(), 2.0);
    assert_eq!(field(&text, "verdict"), "entangled_certified");
    assert_eq!(field(&text, "ppt_floor"), "-0.5");
}

#[test]
fn check_maximally_mixed_is_undecided() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "mixed.json", MIXED);
    let o = ccnr(&["check", s(&p), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["tau"].as_f64().unwrap() - 0.5).abs() < 1e-15);
    assert_eq!(v["verdict"], "undecided");
    assert_eq!(v["gamma_closed"], serde_json::Value::Null);
    assert_eq!(v["dims"], serde_json::json!([2, 2]));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{ not json");
    assert_eq!(ccnr(&["check", s(&bad)]).status.code(), Some(2));
    assert_eq!(
        ccnr(&["check", s(&dir.path().join("missing.json"))])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ccnr(&["check"]).status.code(), Some(2));

    let not_psd = write(
        &dir,
        "neg.json",
        r#"{"kind":"density","dims":[1,2],"matrix":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}"#,
    );
    let o = ccnr(&["check", s(&not_psd)]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("positive semidefinite") && err.contains("0.5"),
        "{err}"
    );

    // Loosening the tolerance admits the same file.
    let slightly = write(
        &dir,
        "slight.json",
        r#"{"kind":"density","dims":[1,2],"matrix":[[[1.000001,0],[0,0]],[[0,0],[-0.000001,0]]]}"#,
    );
    assert_eq!(ccnr(&["check", s(&slightly)]).status.code(), Some(3));
    assert_eq!(
        ccnr(&["check", s(&slightly), "--tol-psd", "1e-5"])
            .status
            .code(),
        Some(0)
    );

    let wrong_dims = write(&dir, "dims.json", MIXED);
    assert_eq!(
        ccnr(&["check", s(&wrong_dims), "--dims", "3,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ccnr(&["check", s(&wrong_dims), "--dims", "1,4"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ccnr(&["check", s(&wrong_dims), "--dims", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_inputs_never_panic() {
    let dir = TempDir::new().unwrap();
    let cases = [
        "",
        "null",
        "[]",
        r#"{"kind":"density"}"#,
        r#"{"kind":"density","dims":[0,2],"matrix":[]}"#,
        r#"{"kind":"density","dims":[2,2],"matrix":[[[1,0]]]}"#,
        r#"{"kind":"density","dims":[1,1],"matrix":[[[1e400,0]]]}"#,
        r#"{"kind":"pure","dims":[1,1],"matrix":[[0,0]]}"#,
        r#"{"kind":"density","dims":[18446744073709551615,2],"matrix":[[[1,0]]]}"#,
        r#"{"kind":"density","dims":[1,1],"matrix":[[[1,0]]],"family":{"kind":"werner","d":2,"f":9}}"#,
    ];
    for (k, text) in cases.iter().enumerate() {
        let p = write(&dir, &format!("c{k}.json"), text);
        for cmd in ["check", "schmidt", "oschmidt"] {
            let code = ccnr(&[cmd, s(&p)]).status.code();
            assert!(matches!(code, Some(2) | Some(3)), "{cmd} {text}: {code:?}");
        }
    }
}

#[test]
fn schmidt_outputs() {
    let dir = TempDir::new().unwrap();
    let psi = write(
        &dir,
        "psi.json",
        r#"{"kind":"pure","dims":[2,2],"matrix":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]}"#,
    );
    let text = stdout(&ccnr(&["schmidt", s(&psi)]));
    assert_eq!(field(&text, "schmidt_coefficients"), "0.5 0.5");
    assert_eq!(field(&text, "gamma"), "2");
    assert_eq!(field(&text, "robustness"), "1");

    let prod = write(
        &dir,
        "prod.json",
        r#"{"kind":"pure","dims":[2,2],"matrix":[[1,0],[0,0],[0,0],[0,0]]}"#,
    );
    let text = stdout(&ccnr(&["schmidt", s(&prod)]));
    assert_eq!(field(&text, "schmidt_coefficients"), "1");
    assert_eq!(field(&text, "gamma"), "1");
    assert_eq!(field(&text, "robustness"), "0");

    let out = dir.path().join("skew.json");
    let o = ccnr(&["gen", "schmidt", "0.9,0.1", "--out", s(&out)]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&ccnr(&["schmidt", s(&out), "--json"]).stdout).unwrap();
    assert!((v["gamma"].as_f64().unwrap() - 1.6).abs() < 1e-12);
    assert!((v["robustness"].as_f64().unwrap() - 0.6).abs() < 1e-12);

    let density = write(&dir, "d.json", PSI_PLUS_DENSITY);
    assert_eq!(ccnr(&["schmidt", s(&density)]).status.code(), Some(2));
}

#[test]
fn oschmidt_outputs() {
    let dir = TempDir::new().unwrap();
    let psi = write(&dir, "psi.json", PSI_PLUS_DENSITY);
    let text = stdout(&ccnr(&["oschmidt", s(&psi)]));
    assert_eq!(field(&text, "coefficients"), "0.5 0.5 0.5 0.5");
    assert_eq!(field(&text, "sum"), "2");
    assert!(field(&text, "criterion").starts_with("violated"));

    let prod = write(&dir, "prod.json", MIXED);
    let text = stdout(&ccnr(&["oschmidt", s(&prod)]));
    assert_eq!(field(&text, "coefficients"), "0.5");
    assert_eq!(field(&text, "criterion"), "satisfied");

    let qubit = dir.path().join("q.json");
    assert!(ccnr(&["gen", "qubit", "0.5", "--out", s(&qubit)])
        .status
        .success());
    let text = stdout(&ccnr(&["oschmidt", s(&qubit)]));
    let sum: f64 = field(&text, "sum").parse().unwrap();
    assert!((sum - 1.207106781).abs() < 1e-9);
}

#[test]
fn gen_then_check() {
    let dir = TempDir::new().unwrap();
    let cases: [(&[&str], f64); 4] = [
        (&["werner", "0", "--d", "2"], 1.0),
        (&["qutrit", "4"], 19.0 / 21.0 + 2.0 * 7f64.sqrt() / 21.0),
        (&["bell", "0.6,0.2,0.1,0.1"], 1.2),
        (&["isotropic", "0.25", "--d", "3"], 0.75),
    ];
    for (k, (args, tau)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("g{k}.json"));
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", s(&out)]);
        assert!(ccnr(&full).status.success(), "{args:?}");
        let v: serde_json::Value =
            serde_json::from_slice(&ccnr(&["check", s(&out), "--json"]).stdout).unwrap();
        assert!((v["tau"].as_f64().unwrap() - tau).abs() < 1e-9, "{args:?}");
    }
    let iso = dir.path().join("g3.json");
    let v: serde_json::Value =
        serde_json::from_slice(&ccnr(&["check", s(&iso), "--json"]).stdout).unwrap();
    assert_eq!(v["gamma_closed"]["value"], 1.0);
    assert_eq!(v["gamma_closed"]["family"], "isotropic");
    assert_eq!(v["verdict"], "separable_certified");
}

#[test]
fn gen_errors_and_randomness() {
    assert_eq!(ccnr(&["gen", "werner", "2"]).status.code(), Some(2));
    assert_eq!(ccnr(&["gen", "werner"]).status.code(), Some(2));
    assert_eq!(ccnr(&["gen", "qutrit", "1.5"]).status.code(), Some(2));
    assert_eq!(ccnr(&["gen", "bell", "0.5,0.5"]).status.code(), Some(2));
    assert_eq!(
        ccnr(&["gen", "qubit", "0.5", "--d", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(ccnr(&["gen", "random"]).status.code(), Some(2));
    assert_eq!(
        ccnr(&["gen", "random", "--dims", "2,2", "--rank", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ccnr(&["gen", "nonsense"]).status.code(), Some(2));

    let a = ccnr(&[
        "gen", "random", "--dims", "2,3", "--rank", "2", "--seed", "17",
    ]);
    let b = ccnr(&[
        "gen", "random", "--dims", "2,3", "--rank", "2", "--seed", "17",
    ]);
    let c = ccnr(&[
        "gen", "random", "--dims", "2,3", "--rank", "2", "--seed", "18",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);

    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "rp.json",
        &stdout(&ccnr(&[
            "gen",
            "random-pure",
            "--dims",
            "3,2",
            "--seed",
            "4",
        ])),
    );
    assert!(ccnr(&["schmidt", s(&p)]).status.success());
    assert!(ccnr(&["check", s(&p)]).status.success());
}

#[test]
fn sweep_csv() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w.csv");
    let o = ccnr(&[
        "sweep",
        "werner",
        "--d",
        "2",
        "--range",
        "-1:1:0.5",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(&out).unwrap();
    assert!(!csv.contains('\r'));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "param,tau_numeric,tau_closed,gamma_closed,ppt_floor,reduction_floor,verdict"
    );
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("-1,2,2,2,"), "{}", lines[1]);

    let q = stdout(&ccnr(&["sweep", "qutrit", "--range", "2:5:0.5"]));
    let row3 = q.lines().find(|l| l.starts_with("3,")).unwrap();
    assert!(row3.starts_with("3,1,1,,"), "{row3}");

    let iso = stdout(&ccnr(&[
        "sweep",
        "isotropic",
        "--d",
        "3",
        "--range",
        "0:1:0.25",
    ]));
    let row = iso.lines().find(|l| l.starts_with("0.25,")).unwrap();
    assert_eq!(row.split(',').nth(3), Some("1"));

    assert_eq!(
        ccnr(&["sweep", "werner", "--range", "1:0:0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ccnr(&["sweep", "werner", "--range", "-2:1:0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ccnr(&["sweep", "bell", "--d", "3", "--range", "0:1:0.5"])
            .status
            .code(),
        Some(2)
    );
}
