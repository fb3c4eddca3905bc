use std::f64::consts::PI;
use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn qls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qls")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Exponents of exp(2 pi i / 5) on components 1..4 of the order-5 square
/// with every entry distinct, as printed alongside its construction.
const GOLDEN_FIVE: [[[u32; 4]; 5]; 5] = [
    [[0, 0, 0, 0], [1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2], [4, 3, 2, 1]],
    [[2, 1, 3, 4], [3, 3, 1, 3], [4, 0, 4, 2], [0, 2, 2, 1], [1, 4, 0, 0]],
    [[4, 2, 1, 3], [0, 4, 4, 2], [1, 1, 2, 1], [2, 3, 0, 0], [3, 0, 3, 4]],
    [[1, 3, 4, 2], [2, 0, 2, 1], [3, 2, 0, 0], [4, 4, 3, 4], [0, 1, 1, 3]],
    [[3, 4, 2, 1], [4, 1, 0, 0], [0, 3, 3, 4], [1, 0, 1, 3], [2, 2, 4, 2]],
];

#[test]
fn construct_emits_the_order_five_square() {
    let out = qls(&["construct", "--order", "5", "--cardinality", "25"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r = 1.0 / 5f64.sqrt();
    for (i, row) in GOLDEN_FIVE.iter().enumerate() {
        for (j, exps) in row.iter().enumerate() {
            let cell = &doc["entries"][i][j];
            let mut want = vec![(r, 0.0)];
            want.extend(exps.iter().map(|&e| {
                let a = 2.0 * PI * e as f64 / 5.0;
                (r * a.cos(), r * a.sin())
            }));
            for (k, (re, im)) in want.into_iter().enumerate() {
                let got = (cell[k][0].as_f64().unwrap(), cell[k][1].as_f64().unwrap());
                assert!((got.0 - re).abs() <= 1e-12 && (got.1 - im).abs() <= 1e-12, "cell ({i}, {j})");
            }
        }
    }
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("method: maximal") && summary.contains("measured c: 25"), "{summary}");
}

#[test]
fn plan_marks_successor_excluded() {
    let out = qls(&["plan", "--order", "8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text.lines().find(|l| l.trim_start().starts_with("9 ")).unwrap();
    assert!(line.contains("excluded"), "{line}");
    let json = qls(&["plan", "--order", "8", "--json"]);
    let set: Value = serde_json::from_str(&stdout(&json)).unwrap();
    let open: Vec<u64> = set
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "unknown")
        .map(|e| e["c"].as_u64().unwrap())
        .collect();
    assert_eq!(open, [45, 49, 53, 55, 57, 58, 59, 61, 62, 63]);
}

#[test]
fn verify_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&qls(&["construct", "--order", "7", "--cardinality", "15", "--out", p])), 0);
    let ok = qls(&["verify", p]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("cardinality: 15"));

    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    doc["entries"][0][0] = doc["entries"][0][1].clone();
    fs::write(&path, doc.to_string()).unwrap();
    let bad = qls(&["verify", p, "--json"]);
    assert_eq!(code(&bad), 2);
    let rep: Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(rep["verification"]["pass"], false);
    assert_eq!(code(&qls(&["cardinality", p])), 2);

    fs::write(&path, "{\"schema_version\": 1, \"order\"").unwrap();
    assert_eq!(code(&qls(&["verify", p])), 1);
}

#[test]
fn achievability_exit_codes() {
    assert_eq!(code(&qls(&["construct", "--order", "8", "--cardinality", "9"])), 3);
    assert_eq!(code(&qls(&["construct", "--order", "8", "--cardinality", "45"])), 4);
    assert_eq!(code(&qls(&["construct", "--order", "6", "--cardinality", "13"])), 4);
    assert_eq!(code(&qls(&["catalog", "--order", "8", "--cardinality", "53"])), 4);
    assert_eq!(code(&qls(&["catalog", "--order", "8", "--cardinality", "9"])), 3);
    assert_eq!(code(&qls(&["construct", "--order", "3", "--cardinality", "5"])), 3);
    assert_eq!(code(&qls(&["no-such-command"])), 1);
}

#[test]
fn ambiguous_overlap_exits_five() {
    // Order 2 with the second row rotated by 1e-3: the overlap 1 - 5e-7
    // sits between "distinct" and "same" once the band is widened.
    let e: f64 = 1e-3;
    let (c, s) = (e.cos(), e.sin());
    let doc = serde_json::json!({
        "schema_version": 1,
        "order": 2,
        "entries": [
            [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
            [[[-s, 0.0], [c, 0.0]], [[c, 0.0], [s, 0.0]]],
        ]
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("amb.json");
    fs::write(&path, doc.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let out = qls(&["cardinality", p, "--tol-unit", "2e-3", "--band-low", "1e-2"]);
    assert_eq!(code(&out), 5, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&qls(&["verify", p, "--tol-unit", "2e-3", "--band-low", "1e-2"])), 5);
    assert_eq!(code(&qls(&["verify", p])), 2);
}

#[test]
fn classical_from_file_and_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let lp = dir.path().join("l.json");
    fs::write(
        &lp,
        r#"{"schema_version":1,"kind":"latin","order":3,"entries":[[0,2,1],[2,1,0],[1,0,2]]}"#,
    )
    .unwrap();
    let arg = format!("file:{}", lp.display());
    let out = qls(&["construct-classical", "--order", "3", "--latin", &arg]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["entries"][0][1][2][0], 1.0);
    assert_eq!(code(&qls(&["construct-classical", "--order", "4", "--latin", &arg])), 1);

    let cp = dir.path().join("c.json");
    let out = qls(&["catalog", "--order", "8", "--cardinality", "17", "--out", cp.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("explicit case 1"));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&cp).unwrap()).unwrap();
    let cell = &doc["entries"][4][2];
    assert!((cell[6][0].as_f64().unwrap() - 1.0 / 7.0).abs() < 1e-15);
    assert!((cell[7][0].as_f64().unwrap() - 4.0 * 3f64.sqrt() / 7.0).abs() < 1e-15);
    assert!(stdout(&qls(&["catalog", "--audit"])).contains("case 22"));
}

#[test]
fn tables_and_determinism() {
    let csv = stdout(&qls(&["table", "--max-order", "6", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("order,achievable,excluded,unknown"));
    assert_eq!(csv.lines().count(), 6);
    let md = stdout(&qls(&["table", "--max-order", "5", "--format", "md"]));
    assert!(md.contains("| 4 | 4, 6, 8, 16 | 5 |"), "{md}");
    let a = qls(&["construct", "--order", "10", "--cardinality", "38"]);
    let b = qls(&["construct", "--order", "10", "--cardinality", "38"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
