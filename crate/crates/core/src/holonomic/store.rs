//! Dense term stores and their text cache format.
//!
//! ```text
//! SEQCACHE v1 <name>
//! <n> <decimal digits> <crc32 of "<n> <digits>" as 8 hex digits>
//! ...
//! END <highest_index>
//! ```

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::exactnum::BigInt;
use crate::{Error, Result};

use super::Order2Recurrence;

const MAGIC: &str = "SEQCACHE v1";

/// Terms `a_0..=a_highest` of one sequence. Never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceStore {
    name: String,
    terms: Vec<BigInt>,
}

impl SequenceStore {
    /// Store seeded with the initial values of `rec`.
    pub fn new(rec: &Order2Recurrence) -> Self {
        SequenceStore {
            name: rec.name.clone(),
            terms: vec![rec.a0.clone(), rec.a1.clone()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn highest_index(&self) -> u64 {
        self.terms.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        self.terms.get(usize::try_from(n).ok()?)
    }

    pub(crate) fn push(&mut self, term: BigInt) {
        self.terms.push(term);
    }

    /// Checks that the stored prefix is exactly what `rec` generates.
    pub fn verify_against(&self, rec: &Order2Recurrence) -> Result<()> {
        let mismatch = |why: String| Error::StoreMismatch {
            store: format!("{} ({why})", self.name),
            recurrence: rec.name.clone(),
        };
        if self.name != rec.name {
            return Err(mismatch("different name".into()));
        }
        if self.terms[0] != rec.a0 || self.terms.get(1) != Some(&rec.a1) {
            return Err(mismatch("initial values differ".into()));
        }
        for next in 2..self.terms.len() {
            let k = BigInt::from(next as u64 - 1);
            let lhs = rec.c2.eval(&k) * &self.terms[next];
            let rhs = rec.c1.eval(&k) * &self.terms[next - 1]
                - rec.c0.eval(&k) * &self.terms[next - 2];
            if lhs != rhs || (next as u64 - 1) < rec.first_valid_n {
                return Err(mismatch(format!("term {next} violates the recurrence")));
            }
        }
        Ok(())
    }
}

fn checksum(prefix: &str) -> String {
    format!("{:08x}", crc32fast::hash(prefix.as_bytes()))
}

fn render(store: &SequenceStore) -> String {
    let mut out = format!("{MAGIC} {}\n", store.name);
    for (n, t) in store.terms.iter().enumerate() {
        let prefix = format!("{n} {t}");
        out.push_str(&format!("{prefix} {}\n", checksum(&prefix)));
    }
    out.push_str(&format!("END {}\n", store.highest_index()));
    out
}

/// Writes the store atomically (temporary file, then rename).
pub fn save_store(store: &SequenceStore, path: &Path) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(render(store).as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| Error::io(path, e))
}

pub fn load_store(path: &Path) -> Result<SequenceStore> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text, path)
}

fn parse(text: &str, path: &Path) -> Result<SequenceStore> {
    let fail = |line: usize, message: &str| Error::Format {
        path: path.to_path_buf(),
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| fail(1, "empty cache file"))?;
    let name = header
        .strip_prefix(MAGIC)
        .and_then(|rest| rest.strip_prefix(' '))
        .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace))
        .ok_or_else(|| fail(1, "expected `SEQCACHE v1 <name>`"))?;

    let mut terms = Vec::new();
    let mut end_seen = false;
    for (no, line) in lines {
        if end_seen {
            return Err(fail(no, "content after END"));
        }
        if let Some(rest) = line.strip_prefix("END ") {
            let hi: usize = rest
                .trim()
                .parse()
                .map_err(|_| fail(no, "malformed END line"))?;
            if terms.is_empty() || hi != terms.len() - 1 {
                return Err(fail(no, "END index does not match the last term"));
            }
            end_seen = true;
            continue;
        }
        let (prefix, crc) = line
            .rsplit_once(' ')
            .ok_or_else(|| fail(no, "expected `<n> <digits> <crc32>`"))?;
        if crc.len() != 8 || !crc.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(fail(no, "malformed checksum field"));
        }
        if checksum(prefix) != crc.to_ascii_lowercase() {
            return Err(Error::ChecksumMismatch {
                path: path.to_path_buf(),
                line: no,
            });
        }
        let (idx, digits) = prefix
            .split_once(' ')
            .ok_or_else(|| fail(no, "expected `<n> <digits> <crc32>`"))?;
        let idx: usize = idx.parse().map_err(|_| fail(no, "malformed index"))?;
        if idx != terms.len() {
            return Err(fail(no, "indices must increase from 0 without gaps"));
        }
        let valid_digits = {
            let d = digits.strip_prefix('-').unwrap_or(digits);
            !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_digits {
            return Err(fail(no, "malformed term"));
        }
        terms.push(BigInt::from_str(digits).map_err(|_| fail(no, "malformed term"))?);
    }
    if !end_seen {
        return Err(fail(text.lines().count() + 1, "missing END line"));
    }
    if terms.len() < 2 {
        return Err(fail(2, "a store holds at least the two initial values"));
    }
    Ok(SequenceStore {
        name: name.to_string(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::{clf, Sequence};

    fn clf_store(n: u64) -> SequenceStore {
        let mut s = Sequence::clf();
        s.extend_to(n).unwrap();
        s.into_store()
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("clf.seq");
        let store = clf_store(100);
        save_store(&store, &path).unwrap();
        let back = load_store(&path).unwrap();
        assert_eq!(back, store);
        back.verify_against(&clf()).unwrap();
        assert!(!path.with_extension("tmp").exists());
    }

    #[test]
    fn layout_is_stable() {
        let text = render(&clf_store(2));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "SEQCACHE v1 clf");
        assert_eq!(lines[1], format!("0 1 {:08x}", crc32fast::hash(b"0 1")));
        assert_eq!(lines[3], format!("2 80 {:08x}", crc32fast::hash(b"2 80")));
        assert_eq!(lines[4], "END 2");
    }

    #[test]
    fn corrupted_digit_is_detected() {
        let text = render(&clf_store(10)).replace("\n4 10816 ", "\n4 10817 ");
        let err = parse(&text, Path::new("x")).unwrap_err();
        assert!(matches!(err, Error::ChecksumMismatch { line: 6, .. }), "{err}");
    }

    #[test]
    fn empty_file_is_a_format_error() {
        let err = parse("", Path::new("x")).unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
    }

    #[test]
    fn structural_errors() {
        let good = render(&clf_store(3));
        let no_end = good.replace("END 3\n", "");
        assert!(matches!(parse(&no_end, Path::new("x")), Err(Error::Format { .. })));
        let wrong_end = good.replace("END 3", "END 9");
        assert!(matches!(parse(&wrong_end, Path::new("x")), Err(Error::Format { .. })));
        let gap: String = good
            .lines()
            .filter(|l| !l.starts_with("2 "))
            .map(|l| format!("{l}\n"))
            .collect();
        assert!(matches!(parse(&gap, Path::new("x")), Err(Error::Format { .. })));
        let bad_header = good.replace("SEQCACHE v1", "SEQCACHE v2");
        assert!(matches!(parse(&bad_header, Path::new("x")), Err(Error::Format { line: 1, .. })));
    }

    #[test]
    fn tampered_but_consistent_store_fails_verification() {
        // A store whose checksums are valid but whose values are not the
        // recurrence's is caught by the recurrence check.
        let mut store = clf_store(5);
        store.terms[4] = BigInt::from(1);
        let text = render(&store);
        let loaded = parse(&text, Path::new("x")).unwrap();
        assert!(loaded.verify_against(&clf()).is_err());
        assert!(Sequence::with_store(clf(), loaded).is_err());
    }
}
