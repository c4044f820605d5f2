//! OEIS ingestion: b-file parsing, a local verbatim-text cache, and a small
//! HTTP client for `https://oeis.org/Axxxxxx/bxxxxxx.txt`.
//!
//! Unit tests never touch the network; the client only goes online when the
//! caller allows it.

use num::bigint::BigInt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::series::Sequence;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "OEIS_CACHE_DIR";

const USER_AGENT: &str = concat!("hankelkit/", env!("CARGO_PKG_VERSION"));

/// A parsed OEIS b-file: consecutive (index, value) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub anumber: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Index of the first entry (the OEIS offset).
    pub fn offset(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    /// Sequence prefix re-indexed from 0, at most `max_terms` long.
    pub fn to_sequence(&self, max_terms: usize) -> Result<Sequence> {
        let terms = self
            .entries
            .iter()
            .take(max_terms)
            .map(|(_, v)| Rat::from_integer(v.clone()))
            .collect();
        Sequence::new(terms)
    }
}

/// Validate and normalize an A-number like `A000108` (case-insensitive,
/// digits padded to six).
pub fn normalize_anumber(raw: &str) -> Result<String> {
    let raw = raw.trim();
    let digits = raw
        .strip_prefix('A')
        .or_else(|| raw.strip_prefix('a'))
        .unwrap_or(raw);
    if digits.is_empty() || digits.len() > 6 || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::ParseError {
            line: 1,
            msg: format!("not an OEIS A-number: {raw:?}"),
        });
    }
    Ok(format!("A{digits:0>6}"))
}

/// Parse b-file text: lines `n a(n)`, `#` comments and blank lines allowed,
/// indices must be consecutive.
pub fn parse_bfile(anumber: &str, text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let idx: i64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::ParseError {
                line: lineno,
                msg: format!("bad index field: {line:?}"),
            })?;
        let value: BigInt = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::ParseError {
                line: lineno,
                msg: format!("bad value field: {line:?}"),
            })?;
        if parts.next().is_some() {
            return Err(Error::ParseError {
                line: lineno,
                msg: format!("trailing tokens: {line:?}"),
            });
        }
        if let Some((last, _)) = entries.last() {
            if idx != last + 1 {
                return Err(Error::ParseError {
                    line: lineno,
                    msg: format!("index gap: expected {}, got {idx}", last + 1),
                });
            }
        }
        entries.push((idx, value));
    }
     if entries.is_empty() {
        return Err(Error::ParseError {
            line: 1,
            msg: "no entries".to_string(),
        });
    }
    Ok(BFile {
        anumber: anumber.to_string(),
        entries,
    })
}

/// Render a b-file back to its text form (inverse of `parse_bfile`).
pub fn render_bfile(bfile: &BFile) -> String {
    let mut out = String::new();
    for (i, v) in &bfile.entries {
        out.push_str(&format!("{i} {v}\n"));
    }
    out
}

/// Cache-or-network b-file source. Cache files hold the verbatim b-file
/// text, one file per A-number, so a warm cache doubles as a fixture set.
#[derive(Debug, Clone)]
pub struct Client {
    cache_dir: PathBuf,
    offline: bool,
}

impl Client {
    /// Cache location: `$OEIS_CACHE_DIR`, else `~/.cache/hankelkit/oeis`.
    pub fn new(offline: bool) -> Self {
        let cache_dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(default_cache_dir);
        Client { cache_dir, offline }
    }

    pub fn with_cache_dir(cache_dir: impl Into<PathBuf>, offline: bool) -> Self {
        Client {
            cache_dir: cache_dir.into(),
            offline,
        }
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    fn cache_path(&self, anumber: &str) -> PathBuf {
        self.cache_dir.join(format!("{anumber}.txt"))
    }

    /// Fetch a sequence prefix of up to `max_terms` terms, from cache first,
    /// then the network (unless offline). A network success is written back
    /// to the cache via temp-file-then-rename.
    pub fn fetch(&self, anumber: &str, max_terms: usize) -> Result<Sequence> {
        let anumber = normalize_anumber(anumber)?;
        let path = self.cache_path(&anumber);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(_) if self.offline => {
                return Err(Error::NetworkError(format!(
                    "{anumber} not cached and network use is disabled"
                )))
            }
            Err(_) => {
                let text = self.download(&anumber)?;
                self.write_cache(&path, &text)?;
                text
            }
        };
        parse_bfile(&anumber, &text)?.to_sequence(max_terms)
    }

    fn download(&self, anumber: &str) -> Result<String> {
        let digits = &anumber[1..];
        let url = format!("https://oeis.org/{anumber}/b{digits}.txt");
        let client = reqwest::blocking::Client::builder()
            .user_agent(USER_AGENT)
            .timeout(Duration::from_secs(30))
            .build()
            .map_err(|e| Error::NetworkError(e.to_string()))?;
        // one retry with a short backoff
        let mut last_err = None;
        for attempt in 0..2 {
            if attempt > 0 {
                std::thread::sleep(Duration::from_millis(500));
            }
            match client.get(&url).send() {
                Ok(resp) if resp.status() == reqwest::StatusCode::NOT_FOUND => {
                    return Err(Error::NotFound(anumber.to_string()));
                }
                Ok(resp) if resp.status().is_success() => {
                    return resp.text().map_err(|e| Error::NetworkError(e.to_string()));
                }
                Ok(resp) => {
                    last_err = Some(format!("HTTP {} from {url}", resp.status()));
                }
                Err(e) => last_err = Some(e.to_string()),
            }
        }
        Err(Error::NetworkError(last_err.unwrap_or_default()))
    }

    fn write_cache(&self, path: &Path, text: &str) -> Result<()> {
        let io_err = |e: std::io::Error| Error::NetworkError(format!("cache write: {e}"));
        fs::create_dir_all(&self.cache_dir).map_err(io_err)?;
        let tmp = path.with_extension("txt.tmp");
        fs::write(&tmp, text).map_err(io_err)?;
        fs::rename(&tmp, path).map_err(io_err)?;
        Ok(())
    }
}

fn default_cache_dir() -> PathBuf {
    let home = std::env::var_os("HOME")
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    home.join(".cache").join("hankelkit").join("oeis")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple() {
        let b = parse_bfile("A000108", "0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(b.offset(), Some(0));
        assert_eq!(
            b.entries,
            vec![
                (0, BigInt::from(1)),
                (1, BigInt::from(1)),
                (2, BigInt::from(2))
            ]
        );
    }

    #[test]
    fn parse_skips_comments() {
        let b = parse_bfile("A000001", "# comment\n0 1\n").unwrap();
        assert_eq!(b.entries, vec![(0, BigInt::from(1))]);
    }

    #[test]
    fn parse_rejects_gap() {
        let err = parse_bfile("A000001", "0 1\n2 5\n").unwrap_err();
        assert!(matches!(err, Error::ParseError { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_bfile("A1", "0 x\n").is_err());
        assert!(parse_bfile("A1", "0 1 junk\n").is_err());
        assert!(parse_bfile("A1", "").is_err());
    }

    #[test]
    fn render_parse_round_trip() {
        let b = parse_bfile("A000142", "1 1\n2 2\n3 6\n4 24\n").unwrap();
        assert_eq!(parse_bfile("A000142", &render_bfile(&b)).unwrap(), b);
    }

    #[test]
    fn anumber_normalization() {
        assert_eq!(normalize_anumber("A000108").unwrap(), "A000108");
        assert_eq!(normalize_anumber("a108").unwrap(), "A000108");
        assert_eq!(normalize_anumber("984").unwrap(), "A000984");
        assert!(normalize_anumber("A12345678").is_err());
        assert!(normalize_anumber("Axyz").is_err());
    }

    #[test]
    fn nonzero_offset_reindexes_from_zero() {
        let b = parse_bfile("A000142", "1 1\n2 2\n3 6\n").unwrap();
        assert_eq!(b.offset(), Some(1));
        let s = b.to_sequence(10).unwrap();
        assert_eq!(s, Sequence::from_ints(&[1, 2, 6]));
    }

    #[test]
    fn offline_cache_behavior() {
        let dir = tempfile::tempdir().unwrap();
        let client = Client::with_cache_dir(dir.path(), true);
        // cold cache, offline: error
        assert!(matches!(
            client.fetch("A000984", 5),
            Err(Error::NetworkError(_))
        ));
        // warm the cache by hand, then fetch again
        std::fs::write(dir.path().join("A000984.txt"), "0 1\n1 2\n2 6\n3 20\n").unwrap();
        let s = client.fetch("A000984", 3).unwrap();
        assert_eq!(s, Sequence::from_ints(&[1, 2, 6]));
    }
}
