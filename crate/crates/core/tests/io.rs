use std::fs;

use qls_core::constructions::{maximal_qls, Method, Parameters};
use qls_core::io::{load_document, load_latin, load_ols, load_qls, save_qls, LatinDocument, Metadata, QlsDocument};
use qls_core::latin::{idempotent_ls, ols_pair};
use qls_core::Error;

#[test]
fn round_trip_is_lossless() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let q = maximal_qls(6).unwrap();
    let meta = Metadata {
        method: Some(Method::Maximal),
        parameters: Some(Parameters::default()),
        claimed_cardinality: Some(36),
    };
    save_qls(&q, Some(meta.clone()), &path).unwrap();
    let back = load_qls(&path).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            for (a, b) in q.get(i, j).amplitudes().iter().zip(back.get(i, j).amplitudes()) {
                assert!((a - b).norm() <= 1e-15);
            }
        }
    }
    assert_eq!(load_document(&path).unwrap().metadata, Some(meta));
}

#[test]
fn truncated_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    save_qls(&maximal_qls(4).unwrap(), None, &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert!(matches!(load_qls(&path), Err(Error::Parse(_))));
}

#[test]
fn tampered_entry_fails_verification() {
    let mut doc = QlsDocument::from_qls(&maximal_qls(4).unwrap(), None);
    doc.entries[1][2] = doc.entries[1][3].clone();
    let text = doc.to_json();
    let err = QlsDocument::from_json(&text).unwrap().to_qls(&Default::default()).unwrap_err();
    assert!(matches!(err, Error::InvalidQls(_)), "{err}");
}

#[test]
fn wrong_shape_and_version() {
    let mut doc = QlsDocument::from_qls(&maximal_qls(4).unwrap(), None);
    doc.entries.pop();
    assert!(matches!(doc.to_grid(), Err(Error::Parse(_))));
    let mut doc = QlsDocument::from_qls(&maximal_qls(4).unwrap(), None);
    doc.schema_version = 2;
    assert!(matches!(
        QlsDocument::from_json(&doc.to_json()),
        Err(Error::SchemaVersion { found: 2, expected: 1 })
    ));
}

#[test]
fn latin_files() {
    let dir = tempfile::tempdir().unwrap();
    let lp = dir.path().join("l.json");
    let op = dir.path().join("o.json");
    let l = idempotent_ls(6).unwrap();
    fs::write(&lp, LatinDocument::from_latin(&l).to_json()).unwrap();
    assert_eq!(load_latin(&lp).unwrap(), l);
    let p = ols_pair(8).unwrap();
    fs::write(&op, LatinDocument::from_ols(&p).to_json()).unwrap();
    assert_eq!(load_ols(&op).unwrap().second(), p.second());
    assert!(load_ols(&lp).is_err());
    assert!(matches!(load_latin(dir.path().join("missing.json")), Err(Error::Io(_))));
}
