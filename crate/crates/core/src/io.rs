//! JSON interchange for squares and for user-supplied Latin squares.
//!
//! A square is stored row-major as `entries[row][col][component] = [re, im]`.
//! Latin squares use the same envelope with integer cells; an orthogonal
//! pair stores `[first, second]` in each cell.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::{Method, Parameters};
use crate::error::{Error, Result};
use crate::latin::{LatinSquare, OlsPair};
use crate::numerics::{Complex, Tolerance};
use crate::square::{Grid, Qls};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Parameters>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_cardinality: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QlsDocument {
    pub schema_version: u32,
    pub order: usize,
    pub entries: Vec<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl QlsDocument {
    pub fn from_qls(q: &Qls, metadata: Option<Metadata>) -> Self {
        let v = q.order();
        let entries = (0..v)
            .map(|i| {
                (0..v)
                    .map(|j| q.get(i, j).amplitudes().iter().map(|a| [a.re, a.im]).collect())
                    .collect()
            })
            .collect();
        QlsDocument {
            schema_version: SCHEMA_VERSION,
            order: v,
            entries,
            metadata,
        }
    }

    /// The stored grid, checked for shape but not for orthonormality.
    pub fn to_grid(&self) -> Result<Grid> {
        check_version(self.schema_version)?;
        if self.entries.len() != self.order {
            return Err(Error::Parse(format!(
                "order is {} but entries has {} rows",
                self.order,
                self.entries.len()
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.iter().map(|&[re, im]| Complex::new(re, im)).collect())
                    .collect()
            })
            .collect();
        Grid::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_qls(&self, tol: &Tolerance) -> Result<Qls> {
        Qls::new(self.to_grid()?, tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let version = peek_version(text)?;
        check_version(version)?;
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn check_version(found: u32) -> Result<()> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::SchemaVersion {
            found,
            expected: SCHEMA_VERSION,
        })
    }
}

/// Reads only the version so a newer document is reported as such rather
/// than as a field mismatch.
fn peek_version(text: &str) -> Result<u32> {
    #[derive(Deserialize)]
    struct Envelope {
        schema_version: u32,
    }
    serde_json::from_str::<Envelope>(text)
        .map(|e| e.schema_version)
        .map_err(|e| Error::Parse(e.to_string()))
}

pub fn save_qls(q: &Qls, metadata: Option<Metadata>, path: impl AsRef<Path>) -> Result<()> {
    let mut text = QlsDocument::from_qls(q, metadata).to_json();
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn load_document(path: impl AsRef<Path>) -> Result<QlsDocument> {
    QlsDocument::from_json(&fs::read_to_string(path)?)
}

/// Loads and re-verifies a square with the default tolerance.
pub fn load_qls(path: impl AsRef<Path>) -> Result<Qls> {
    load_document(path)?.to_qls(&Tolerance::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatinKind {
    Latin,
    Ols,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatinEntries {
    Single(Vec<Vec<usize>>),
    Pair(Vec<Vec<[usize; 2]>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinDocument {
    pub schema_version: u32,
    pub kind: LatinKind,
    pub order: usize,
    pub entries: LatinEntries,
}

impl LatinDocument {
    pub fn from_latin(l: &LatinSquare) -> Self {
        LatinDocument {
            schema_version: SCHEMA_VERSION,
            kind: LatinKind::Latin,
            order: l.order(),
            entries: LatinEntries::Single(l.rows().to_vec()),
        }
    }

    pub fn from_ols(p: &OlsPair) -> Self {
        let t = p.order();
        let entries = (0..t)
            .map(|i| (0..t).map(|j| [p.first().get(i, j), p.second().get(i, j)]).collect())
            .collect();
        LatinDocument {
            schema_version: SCHEMA_VERSION,
            kind: LatinKind::Ols,
            order: t,
            entries: LatinEntries::Pair(entries),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        check_version(peek_version(text)?)?;
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn check_order(&self, rows: usize) -> Result<()> {
        if rows == self.order {
            Ok(())
        } else {
            Err(Error::Parse(format!("order is {} but entries has {rows} rows", self.order)))
        }
    }

    pub fn to_latin(&self) -> Result<LatinSquare> {
        match (&self.kind, &self.entries) {
            (LatinKind::Latin, LatinEntries::Single(rows)) => {
                self.check_order(rows.len())?;
                Ok(LatinSquare::new(rows.clone())?)
            }
            (LatinKind::Latin, LatinEntries::Pair(_)) => {
                Err(Error::Parse("a latin document stores one integer per cell".into()))
            }
            (LatinKind::Ols, _) => Err(Error::Parse("expected a latin document, found ols".into())),
        }
    }

    pub fn to_ols(&self) -> Result<OlsPair> {
        let rows = match (&self.kind, &self.entries) {
            (LatinKind::Ols, LatinEntries::Pair(rows)) => rows,
            (LatinKind::Ols, LatinEntries::Single(_)) => {
                return Err(Error::Parse("an ols document stores [first, second] per cell".into()))
            }
            (LatinKind::Latin, _) => return Err(Error::Parse("expected an ols document, found latin".into())),
        };
        self.check_order(rows.len())?;
        let part = |k: usize| rows.iter().map(|r| r.iter().map(|c| c[k]).collect()).collect();
        let first = LatinSquare::new(part(0))?;
        let second = LatinSquare::new(part(1))?;
        Ok(OlsPair::new(first, second)?)
    }
}

pub fn load_latin(path: impl AsRef<Path>) -> Result<LatinSquare> {
    LatinDocument::from_json(&fs::read_to_string(path)?)?.to_latin()
}

pub fn load_ols(path: impl AsRef<Path>) -> Result<OlsPair> {
    LatinDocument::from_json(&fs::read_to_string(path)?)?.to_ols()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::{cyclic_ls, ols_pair};

    #[test]
    fn latin_round_trip() {
        let l = cyclic_ls(5);
        let doc = LatinDocument::from_json(&LatinDocument::from_latin(&l).to_json()).unwrap();
        assert_eq!(doc.to_latin().unwrap(), l);
        let p = ols_pair(4).unwrap();
        let doc = LatinDocument::from_json(&LatinDocument::from_ols(&p).to_json()).unwrap();
        let back = doc.to_ols().unwrap();
        assert_eq!(back.first(), p.first());
        assert_eq!(back.second(), p.second());
        assert!(doc.to_latin().is_err());
    }

    #[test]
    fn latin_files_are_validated() {
        let text = r#"{"schema_version":1,"kind":"latin","order":2,"entries":[[0,1],[0,1]]}"#;
        let doc = LatinDocument::from_json(text).unwrap();
        assert!(matches!(doc.to_latin(), Err(Error::InvalidLatin(_))));
        let text = r#"{"schema_version":1,"kind":"ols","order":2,"entries":[[[0,0],[1,1]],[[1,1],[0,0]]]}"#;
        let doc = LatinDocument::from_json(text).unwrap();
        assert!(matches!(doc.to_ols(), Err(Error::InvalidLatin(_))));
    }

    #[test]
    fn version_is_checked_first() {
        let text = r#"{"schema_version":7,"whatever":true}"#;
        assert_eq!(
            QlsDocument::from_json(text),
            Err(Error::SchemaVersion { found: 7, expected: 1 })
        );
    }
}
