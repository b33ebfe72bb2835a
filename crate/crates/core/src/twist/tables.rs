use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const TABLES_ENV: &str = "QUINTFORGE_TABLES";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "paper",
            Provenance::Oracle => "oracle",
        })
    }
}

/// Local root numbers `W_p(E_t)` for one curve and prime, keyed on `t mod m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootNumberTable {
    pub curve: usize,
    pub prime: u64,
    pub modulus: u64,
    pub provenance: Provenance,
    pub entries: BTreeMap<u64, i8>,
}

impl RootNumberTable {
    pub fn lookup(&self, t: i64) -> Result<i8> {
        let r = crate::arith::residue(t, self.modulus);
        self.entries
            .get(&r)
            .copied()
            .ok_or(Error::UnpopulatedEntry {
                curve: self.curve,
                prime: self.prime,
                residue: r,
                modulus: self.modulus,
            })
    }
}

fn header_field<'a>(line: &'a str, key: &str) -> Result<&'a str> {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
        .ok_or_else(|| Error::TableFormat(format!("header {line:?} lacks {key}=")))
}

/// Parses blocks of `curve=<i> p=<prime> mod=<m> provenance=<paper|oracle>`
/// followed by `<residue>:<+1|-1>` lines. `#` starts a comment.
pub fn parse_tables(text: &str) -> Result<Vec<RootNumberTable>> {
    let mut out: Vec<RootNumberTable> = vec![];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |why: String| Error::TableFormat(format!("line {}: {why}", lineno + 1));
        if line.starts_with("curve=") {
            let num = |key: &str| -> Result<u64> {
                header_field(line, key)?
                    .parse()
                    .map_err(|_| bad(format!("bad {key}")))
            };
            let provenance = match header_field(line, "provenance")? {
                "paper" => Provenance::Paper,
                "oracle" => Provenance::Oracle,
                other => return Err(bad(format!("unknown provenance {other:?}"))),
            };
            let modulus = num("mod")?;
            if modulus == 0 {
                return Err(bad("modulus must be positive".into()));
            }
            out.push(RootNumberTable {
                curve: num("curve")? as usize,
                prime: num("p")?,
                modulus,
                provenance,
                entries: BTreeMap::new(),
            });
            continue;
        }
        let table = out
            .last_mut()
            .ok_or_else(|| bad("entry before any header".into()))?;
        let (r, w) = line
            .split_once(':')
            .ok_or_else(|| bad(format!("expected residue:sign, got {line:?}")))?;
        let r: u64 = r
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad residue {r:?}")))?;
        if r >= table.modulus {
            return Err(bad(format!(
                "residue {r} not reduced mod {}",
                table.modulus
            )));
        }
        let w = match w.trim() {
            "+1" | "1" => 1,
            "-1" => -1,
            other => return Err(bad(format!("bad sign {other:?}"))),
        };
        if table.entries.insert(r, w).is_some() {
            return Err(bad(format!("duplicate residue {r}")));
        }
    }
    Ok(out)
}

/// All tables for all curves, indexed by `(curve, prime)`.
#[derive(Clone, Debug, Default)]
pub struct TableSet {
    tables: HashMap<(usize, u64), RootNumberTable>,
}

impl TableSet {
    pub fn from_tables(list: Vec<RootNumberTable>) -> Result<Self> {
        let mut tables = HashMap::new();
        for t in list {
            let key = (t.curve, t.prime);
            if tables.insert(key, t).is_some() {
                return Err(Error::TableFormat(format!(
                    "two tables for curve {} at p = {}",
                    key.0, key.1
                )));
            }
        }
        Ok(TableSet { tables })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_tables(parse_tables(text)?)
    }

    /// Reads every `*.txt` file in `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "txt"))
            .collect();
        files.sort();
        let mut all = vec![];
        for f in files {
            let text = std::fs::read_to_string(&f)?;
            all.extend(
                parse_tables(&text)
                    .map_err(|e| Error::TableFormat(format!("{}: {e}", f.display())))?,
            );
        }
        Self::from_tables(all)
    }

    /// `$QUINTFORGE_TABLES`, or `./tables`.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(TABLES_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("tables"))
    }

    pub fn load_default() -> Result<Self> {
        Self::load_dir(&Self::default_dir())
    }

    pub fn get(&self, curve: usize, prime: u64) -> Result<&RootNumberTable> {
        self.tables
            .get(&(curve, prime))
            .ok_or(Error::MissingTable { curve, prime })
    }

    pub fn iter(&self) -> impl Iterator<Item = &RootNumberTable> {
        self.tables.values()
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# comment
curve=6 p=3 mod=3 provenance=paper
0:-1
1:-1
2:+1

curve=6 p=2 mod=8 provenance=paper
1:+1  # trailing comment
2:+1
";

    #[test]
    fn parse_sample() {
        let set = TableSet::parse(SAMPLE).unwrap();
        assert_eq!(set.len(), 2);
        let t = set.get(6, 3).unwrap();
        assert_eq!(t.provenance, Provenance::Paper);
        assert_eq!(t.lookup(4).unwrap(), -1);
        assert_eq!(t.lookup(-1).unwrap(), 1);
        let t2 = set.get(6, 2).unwrap();
        assert_eq!(
            t2.lookup(3),
            Err(Error::UnpopulatedEntry {
                curve: 6,
                prime: 2,
                residue: 3,
                modulus: 8
            })
        );
        assert_eq!(
            set.get(1, 5).unwrap_err(),
            Error::MissingTable { curve: 1, prime: 5 }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_tables("1:+1").is_err());
        assert!(parse_tables("curve=1 p=2 mod=8 provenance=guess").is_err());
        assert!(parse_tables("curve=1 p=2 mod=8 provenance=oracle\n9:+1").is_err());
        assert!(parse_tables("curve=1 p=2 mod=8 provenance=oracle\n1:0").is_err());
        assert!(parse_tables("curve=1 p=2 mod=8 provenance=oracle\n1:+1\n1:-1").is_err());
        assert!(parse_tables("curve=1 p=2 provenance=oracle").is_err());
    }
}
