//! Matrix text format, table records, and the on-disk result cache.
//!
//! Matrix text is one row per line over the characters '0' and '1', all
//! lines the same length. The cache is a line-delimited file of JSON table
//! records, deduplicated by (n, k, method) keeping the first occurrence.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitWord, Gf2Matrix};
use crate::Method;

/// Parses matrix text: non-empty, rectangular lines over '0'/'1'.
///
/// A trailing carriage return per line is tolerated; anything else fails
/// with the 1-based line number.
pub fn parse_matrix(text: &str) -> Result<Gf2Matrix> {
    let mut rows: Vec<BitWord> = Vec::new();
    let mut width = 0usize;
    for (index, raw_line) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                reason: "empty row".into(),
            });
        }
        let mut bits = Vec::with_capacity(line.len());
        for ch in line.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        reason: format!("illegal character {other:?}, expected '0' or '1'"),
                    })
                }
            }
        }
        if rows.is_empty() {
            width = bits.len();
        } else if bits.len() != width {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("row has {} columns, expected {width}", bits.len()),
            });
        }
        rows.push(BitWord::from_bits(&bits));
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            reason: "empty input".into(),
        });
    }
    Gf2Matrix::from_rows(rows)
}

/// Renders a matrix as text, one '0'/'1' row per line, each line
/// newline-terminated. Inverse of [`parse_matrix`].
#[must_use]
pub fn render_matrix(matrix: &Gf2Matrix) -> String {
    let mut out = String::with_capacity(matrix.row_count() * (matrix.col_count() + 1));
    for row in matrix.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

/// One computed table record.
///
/// When a witness is present it is the generator matrix as row strings and
/// must describe a full-rank [n,k] LCD code of minimal distance d (checked
/// by [`TableEntry::verify_witness`], not on deserialization).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl TableEntry {
    /// Cache identity: records are deduplicated on (n, k, method).
    #[must_use]
    pub fn key(&self) -> (u64, u64, Method) {
        (self.n, self.k, self.method)
    }

    /// Materializes the witness rows, if any, as a code.
    pub fn witness_code(&self) -> Result<Option<LinearCode>> {
        let Some(rows) = &self.witness else {
            return Ok(None);
        };
        let matrix = parse_matrix(&rows.join("\n"))?;
        Ok(Some(LinearCode::new(matrix)?))
    }

    /// Checks the witness invariant: it parses to a full-rank k-by-n
    /// generator of an LCD code with minimal distance d.
    pub fn verify_witness(&self) -> Result<()> {
        let Some(code) = self.witness_code()? else {
            return Ok(());
        };
        if code.length() as u64 != self.n || code.dimension() as u64 != self.k {
            return Err(Error::Domain(format!(
                "witness is a [{},{}] generator, entry says [{},{}]",
                code.length(),
                code.dimension(),
                self.n,
                self.k
            )));
        }
        if !code.is_lcd() {
            return Err(Error::Domain("witness is not an LCD code".into()));
        }
        let d = code.min_distance()? as u64;
        if d != self.d {
            return Err(Error::Domain(format!(
                "witness has minimal distance {d}, entry says {}",
                self.d
            )));
        }
        Ok(())
    }
}

/// A persistent, append-only cache of table records.
///
/// Loading tolerates unknown trailing JSON fields and skips corrupt lines,
/// reporting them as warnings instead of failing. Duplicate (n, k, method)
/// keys keep the first occurrence.
#[derive(Debug)]
pub struct TableCache {
    path: PathBuf,
    entries: BTreeMap<(u64, u64, Method), TableEntry>,
}

impl TableCache {
    /// Opens a cache file, creating the in-memory view. A missing file is
    /// an empty cache. Returns human-readable warnings for skipped lines.
    pub fn open(path: &Path) -> Result<(Self, Vec<String>)> {
        let mut cache = Self {
            path: path.to_path_buf(),
            entries: BTreeMap::new(),
        };
        let mut warnings = Vec::new();
        let file = match File::open(path) {
            Ok(file) => file,
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => {
                return Ok((cache, warnings))
            }
            Err(err) => return Err(err.into()),
        };
        for (index, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<TableEntry>(&line) {
                Ok(entry) => {
                    cache.entries.entry(entry.key()).or_insert(entry);
                }
                Err(err) => warnings.push(format!(
                    "{}:{}: skipping corrupt cache line: {err}",
                    path.display(),
                    index + 1
                )),
            }
        }
        Ok((cache, warnings))
    }

    #[must_use]
    pub fn get(&self, n: u64, k: u64, method: Method) -> Option<&TableEntry> {
        self.entries.get(&(n, k, method))
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inserts a record and appends it to the file as one JSON line.
    /// A record whose key is already present is ignored (first one wins).
    pub fn insert(&mut self, entry: TableEntry) -> Result<bool> {
        if self.entries.contains_key(&entry.key()) {
            return Ok(false);
        }
        let mut line = serde_json::to_string(&entry).expect("table entries serialize");
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.write_all(line.as_bytes())?;
        self.entries.insert(entry.key(), entry);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let m = parse_matrix("101\n011\n").unwrap();
        assert_eq!(m, Gf2Matrix::from_entries(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(parse_matrix("10\n01\n").unwrap(), Gf2Matrix::identity(2));
        // No trailing newline required.
        assert_eq!(parse_matrix("10\n01").unwrap(), Gf2Matrix::identity(2));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_matrix("10\n0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected ragged-row error, got {other:?}"),
        }
        match parse_matrix("10\n0x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected character error, got {other:?}"),
        }
        assert!(matches!(parse_matrix(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn render_parse_round_trip() {
        let m = Gf2Matrix::from_entries(&[&[1, 0, 1, 1], &[0, 1, 0, 0]]);
        assert_eq!(parse_matrix(&render_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn entry_serialization_shape() {
        let entry = TableEntry {
            n: 3,
            k: 2,
            d: 2,
            method: Method::Profile,
            witness: Some(vec!["101".into(), "011".into()]),
        };
        let json = serde_json::to_string(&entry).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"k":2,"d":2,"method":"profile","witness":["101","011"]}"#
        );
        assert_eq!(serde_json::from_str::<TableEntry>(&json).unwrap(), entry);

        // Witness omitted entirely when absent.
        let bare = TableEntry {
            witness: None,
            ..entry.clone()
        };
        assert!(!serde_json::to_string(&bare).unwrap().contains("witness"));
    }

    #[test]
    fn load_tolerates_unknown_fields() {
        let json = r#"{"n":7,"k":2,"d":4,"method":"formula","note":"from a newer version"}"#;
        let entry: TableEntry = serde_json::from_str(json).unwrap();
        assert_eq!(entry.d, 4);
        assert_eq!(entry.witness, None);
    }

    #[test]
    fn witness_verification() {
        let good = TableEntry {
            n: 3,
            k: 2,
            d: 2,
            method: Method::Exhaustive,
            witness: Some(vec!["101".into(), "011".into()]),
        };
        good.verify_witness().unwrap();

        let wrong_d = TableEntry { d: 3, ..good.clone() };
        assert!(wrong_d.verify_witness().is_err());

        let not_lcd = TableEntry {
            n: 6,
            k: 2,
            d: 4,
            method: Method::Exhaustive,
            witness: Some(vec!["101011".into(), "010111".into()]),
        };
        assert!(not_lcd.verify_witness().is_err());
    }

    #[test]
    fn cache_dedup_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.jsonl");
        std::fs::write(
            &path,
            concat!(
                r#"{"n":9,"k":2,"d":6,"method":"profile"}"#,
                "\n",
                "this line is not json\n",
                r#"{"n":9,"k":2,"d":999,"method":"profile"}"#,
                "\n",
            ),
        )
        .unwrap();

        let (cache, warnings) = TableCache::open(&path).unwrap();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("line"));
        assert_eq!(cache.len(), 1);
        // First occurrence wins.
        assert_eq!(cache.get(9, 2, Method::Profile).unwrap().d, 6);
    }

    #[test]
    fn cache_round_trip_append() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.jsonl");
        let (mut cache, _) = TableCache::open(&path).unwrap();
        assert!(cache.is_empty());

        let entry = TableEntry {
            n: 9,
            k: 2,
            d: 6,
            method: Method::Profile,
            witness: None,
        };
        assert!(cache.insert(entry.clone()).unwrap());
        assert!(!cache.insert(entry.clone()).unwrap());

        let (reloaded, warnings) = TableCache::open(&path).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(reloaded.get(9, 2, Method::Profile), Some(&entry));
    }

    #[test]
    fn missing_cache_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let (cache, warnings) = TableCache::open(&dir.path().join("nope.jsonl")).unwrap();
        assert!(cache.is_empty());
        assert!(warnings.is_empty());
    }

    proptest! {
        #[test]
        fn round_trip_any_matrix(
            rows in proptest::collection::vec(
                proptest::collection::vec(any::<bool>(), 1..=20),
                1..=6,
            )
        ) {
            // Force rectangular input.
            let width = rows[0].len();
            let rect: Vec<BitWord> = rows
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.resize(width, false);
                    BitWord::from_bits(&r)
                })
                .collect();
            let m = Gf2Matrix::from_rows(rect).unwrap();
            prop_assert_eq!(parse_matrix(&render_matrix(&m)).unwrap(), m);
        }
    }
}
