//! Embedded fixtures for fourteen published MSTD sets and their audit.
//!
//! The corpus ships as a checksummed text file compiled into the binary:
//! Conway's classical 8-element example plus thirteen large sets with
//! claimed cardinalities 50 through 120. Element lists are transcribed
//! exactly as printed in the source material, so one list contains a
//! printed duplicate; [`validate_corpus`] surfaces such findings rather
//! than repairing them.

use sha2::{Digest, Sha256};

use crate::set::{parse_elements, Classification, IntegerSet};

const CORPUS_TEXT: &str = include_str!("../data/corpus.txt");

/// SHA-256 of the embedded corpus file, guarding accidental edits. Any
/// deliberate change to the data must update this constant.
pub const CORPUS_SHA256: &str = "3b74477c11bdf152e22a030263f583e3ca4c73c6c3740f4d7c079d627e694301";

/// One published example set, as printed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub claimed_cardinality: u64,
    /// Element list exactly as printed, duplicates and order preserved.
    pub raw_elements: Vec<i64>,
    pub source: String,
}

/// Audit result for one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CorpusFinding {
    pub id: String,
    /// Distinct-element count of the printed list.
    pub actual_cardinality: u64,
    pub cardinality_matches: bool,
    /// Values printed more than once, ascending, each listed once.
    pub duplicates_in_print: Vec<i64>,
    pub classification: Classification,
}

fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    if hex != CORPUS_SHA256 {
        return Err(format!("checksum mismatch: expected {CORPUS_SHA256}, got {hex}"));
    }

    let mut entries = Vec::new();
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter(|l| !l.trim().is_empty())
        .peekable();
    while lines.peek().is_some() {
        let mut field = |key: &str| -> Result<String, String> {
            let line = lines.next().ok_or_else(|| format!("missing '{key}:' line"))?;
            line.strip_prefix(key)
                .and_then(|r| r.strip_prefix(':'))
                .map(|r| r.trim().to_string())
                .ok_or_else(|| format!("expected '{key}:' line, got {line:?}"))
        };
        let id = field("id")?;
        let claimed = field("claimed")?;
        let elements = field("elements")?;
        let source = field("source")?;
        entries.push(CorpusEntry {
            claimed_cardinality: claimed
                .parse()
                .map_err(|_| format!("entry {id}: bad claimed cardinality {claimed:?}"))?,
            raw_elements: parse_elements(&elements)
                .map_err(|e| format!("entry {id}: {e}"))?,
            id,
            source,
        });
    }
    Ok(entries)
}

/// All fourteen entries, in printed order. The data is compiled in and
/// checksum-verified; failure indicates a corrupted build and panics.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    parse_corpus(CORPUS_TEXT).expect("embedded corpus data is valid")
}

/// Dedupes and classifies every entry, reporting cardinality mismatches and
/// printed duplicates as findings, never as errors.
pub fn validate_corpus() -> Vec<CorpusFinding> {
    corpus_entries()
        .into_iter()
        .map(|entry| {
            let (set, _) = IntegerSet::canonical(entry.raw_elements.clone());
            let mut sorted = entry.raw_elements;
            sorted.sort_unstable();
            let mut duplicates: Vec<i64> = sorted
                .windows(2)
                .filter(|w| w[0] == w[1])
                .map(|w| w[0])
                .collect();
            duplicates.dedup();
            let actual = set.cardinality() as u64;
            CorpusFinding {
                id: entry.id,
                actual_cardinality: actual,
                cardinality_matches: actual == entry.claimed_cardinality,
                duplicates_in_print: duplicates,
                classification: set
                    .classify()
                    .expect("corpus elements are far from the integer range limits"),
            }
        })
        .collect()
}
