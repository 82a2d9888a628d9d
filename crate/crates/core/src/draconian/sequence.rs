use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A length-`n` sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DraconianSequence(pub Vec<u32>);

impl DraconianSequence {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// Converts signed entries, rejecting negatives.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        entries
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::NegativeEntry(x)))
            .collect::<Result<_>>()
            .map(DraconianSequence)
    }
}

impl From<Vec<u32>> for DraconianSequence {
    fn from(v: Vec<u32>) -> Self {
        DraconianSequence(v)
    }
}

impl fmt::Debug for DraconianSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Space-separated entries; this is the line format of sequence listings.
impl fmt::Display for DraconianSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for DraconianSequence {
    type Err = Error;

    /// Accepts whitespace- or comma-separated integers, optionally in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let signed: Vec<i64> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        DraconianSequence::from_signed(&signed)
    }
}

/// The set `𝔇(G)`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DraconianSet {
    pub graph: Graph,
    pub sequences: Vec<DraconianSequence>,
    pub count: BigUint,
}

impl DraconianSet {
    /// One sequence per line, in order. Byte-stable for identical inputs.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for seq in &self.sequences {
            s.push_str(&seq.to_string());
            s.push('\n');
        }
        s
    }

    pub fn contains(&self, seq: &[u32]) -> bool {
        self.sequences
            .binary_search_by(|p| p.0.as_slice().cmp(seq))
            .is_ok()
    }
}

/// Parses a listing produced by [`DraconianSet::to_text`].
pub fn parse_listing(text: &str) -> Result<Vec<DraconianSequence>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        let s: DraconianSequence = "(0,3,0,0)".parse().unwrap();
        assert_eq!(s.0, vec![0, 3, 0, 0]);
        assert_eq!(s.to_string(), "0 3 0 0");
        assert_eq!(format!("{s:?}"), "(0,3,0,0)");
        assert_eq!("1 2 0".parse::<DraconianSequence>().unwrap().total(), 3);
        assert_eq!(
            "1 -2".parse::<DraconianSequence>(),
            Err(Error::NegativeEntry(-2))
        );
        assert!("1 x".parse::<DraconianSequence>().is_err());
    }

    #[test]
    fn listing_parse() {
        let v = parse_listing("# header\n0 1\n1 0\n\n").unwrap();
        assert_eq!(
            v,
            vec![DraconianSequence(vec![0, 1]), DraconianSequence(vec![1, 0])]
        );
    }
}
