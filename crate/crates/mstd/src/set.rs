//! Canonical integer sets with sumset, difference set, and classification.
//!
//! [`IntegerSet`] keeps its elements strictly increasing. Sumsets and
//! difference sets run on a dense bit-row engine once the set is translated
//! to start at zero; sets wider than [`BITSET_SPAN_LIMIT`] fall back to a
//! hash-set accumulator. [`IntegerSet::naive_sumset_and_diffset`] is the
//! deliberately literal reference implementation the fast paths are tested
//! against.

use std::collections::HashSet;
use std::fmt;

use crate::dense::BitRow;
use crate::{Error, Result};

/// Spans up to this use the dense bit-row engine; wider sets take the
/// hash-set fallback.
pub const BITSET_SPAN_LIMIT: u64 = 1 << 22;

/// A finite set of signed 64-bit integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct IntegerSet {
    elements: Vec<i64>,
}

/// Verdict of comparing |A+A| against |A-A|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Label {
    #[serde(rename = "MSTD")]
    Mstd,
    #[serde(rename = "balanced")]
    Balanced,
    #[serde(rename = "difference-dominated")]
    DifferenceDominated,
}

impl Label {
    pub fn from_cardinalities(sum: u64, diff: u64) -> Label {
        match sum.cmp(&diff) {
            std::cmp::Ordering::Greater => Label::Mstd,
            std::cmp::Ordering::Equal => Label::Balanced,
            std::cmp::Ordering::Less => Label::DifferenceDominated,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Mstd => "MSTD",
            Label::Balanced => "balanced",
            Label::DifferenceDominated => "difference-dominated",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cardinalities of A+A and A-A together with the resulting label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub sum_cardinality: u64,
    pub diff_cardinality: u64,
    pub label: Label,
}

/// Parses the set text format into a raw element list, duplicates and input
/// order preserved: comma-separated decimal integers, optional whitespace,
/// optional surrounding braces, e.g. `{0, 2, 3, 4, 7, 11, 12, 14}`.
pub fn parse_elements(text: &str) -> Result<Vec<i64>> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('{') {
        body = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::Parse("unclosed '{' in set text".into()))?
            .trim();
    } else if body.ends_with('}') {
        return Err(Error::Parse("unmatched '}' in set text".into()));
    }
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Parse("empty element in set text".into()));
            }
            tok.parse::<i64>().map_err(|_| {
                Error::Parse(format!(
                    "invalid element {tok:?}: expected a decimal integer in the signed 64-bit range"
                ))
            })
        })
        .collect()
}

impl IntegerSet {
    /// Sorts and deduplicates `raw`, reporting how many duplicates were
    /// dropped.
    pub fn canonical(mut raw: Vec<i64>) -> (IntegerSet, usize) {
        let before = raw.len();
        raw.sort_unstable();
        raw.dedup();
        let dropped = before - raw.len();
        (IntegerSet { elements: raw }, dropped)
    }

    /// Parses the set text format; see [`parse_elements`]. Returns the set
    /// and the number of duplicates dropped.
    pub fn parse(text: &str) -> Result<(IntegerSet, usize)> {
        Ok(IntegerSet::canonical(parse_elements(text)?))
    }

    fn from_sorted(elements: Vec<i64>) -> IntegerSet {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntegerSet { elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    /// Smallest element. Named to stay clear of `Ord::min` on owned sets.
    pub fn min_element(&self) -> Option<i64> {
        self.elements.first().copied()
    }

    pub fn max_element(&self) -> Option<i64> {
        self.elements.last().copied()
    }

    /// `max - min`, exact even when the difference leaves the i64 range.
    pub fn span(&self) -> Option<u64> {
        let (min, max) = (self.min_element()?, self.max_element()?);
        Some((max as i128 - min as i128) as u64)
    }

    /// The set of all pairwise sums {a + b : a, b in A}.
    pub fn sumset(&self) -> Result<IntegerSet> {
        if self.is_empty() {
            return Ok(IntegerSet::from_sorted(Vec::new()));
        }
        let (min, max) = (self.min_element().unwrap(), self.max_element().unwrap());
        // Every pairwise sum lies in [2 min, 2 max]; if both endpoints are
        // representable, so is every sum.
        let low = min
            .checked_add(min)
            .ok_or(Error::Overflow { context: "sumset" })?;
        max.checked_add(max)
            .ok_or(Error::Overflow { context: "sumset" })?;
        let span = self.span().unwrap();

        let values = if span <= BITSET_SPAN_LIMIT {
            let (base, off) = self.base_row(span);
            let mut acc = BitRow::zeros(2 * span as usize + 1);
            for &k in &off {
                acc.or_shl(&base, k);
            }
            acc.iter_ones().map(|p| low + p as i64).collect()
        } else {
            let mut seen = HashSet::new();
            for (i, &a) in self.elements.iter().enumerate() {
                for &b in &self.elements[i..] {
                    seen.insert(a + b);
                }
            }
            let mut v: Vec<i64> = seen.into_iter().collect();
            v.sort_unstable();
            v
        };
        Ok(IntegerSet::from_sorted(values))
    }

    /// The set of all pairwise differences {a - b : a, b in A}.
    pub fn diffset(&self) -> Result<IntegerSet> {
        if self.is_empty() {
            return Ok(IntegerSet::from_sorted(Vec::new()));
        }
        let span = self.span().unwrap();
        // Differences lie in [-span, span].
        if span > i64::MAX as u64 {
            return Err(Error::Overflow {
                context: "difference set",
            });
        }

        let values = if span <= BITSET_SPAN_LIMIT {
            let (base, off) = self.base_row(span);
            let mut acc = BitRow::zeros(span as usize + 1);
            for &k in &off {
                acc.or_shr(&base, k);
            }
            let nonneg: Vec<i64> = acc.iter_ones().map(|p| p as i64).collect();
            let mut v: Vec<i64> = nonneg.iter().skip(1).rev().map(|&d| -d).collect();
            v.extend_from_slice(&nonneg);
            v
        } else {
            let mut seen = HashSet::new();
            for &a in &self.elements {
                for &b in &self.elements {
                    seen.insert(a - b);
                }
            }
            let mut v: Vec<i64> = seen.into_iter().collect();
            v.sort_unstable();
            v
        };
        Ok(IntegerSet::from_sorted(values))
    }

    /// Bit row of the set translated to start at 0, plus the translated
    /// elements as shift offsets. Only called for spans within the bitset
    /// engine, where `a - min` fits usize.
    fn base_row(&self, span: u64) -> (BitRow, Vec<usize>) {
        let min = self.min_element().unwrap();
        let mut base = BitRow::zeros(span as usize + 1);
        let off: Vec<usize> = self
            .elements
            .iter()
            .map(|&a| (a as i128 - min as i128) as usize)
            .collect();
        for &k in &off {
            base.set(k);
        }
        (base, off)
    }

    /// Compares |A+A| against |A-A|. The empty set is balanced with both
    /// cardinalities 0.
    pub fn classify(&self) -> Result<Classification> {
        let sum = self.sumset()?.cardinality() as u64;
        let diff = self.diffset()?.cardinality() as u64;
        Ok(Classification {
            sum_cardinality: sum,
            diff_cardinality: diff,
            label: Label::from_cardinalities(sum, diff),
        })
    }

    /// Translates the minimum to 0: A - min(A).
    pub fn normalize(&self) -> Result<IntegerSet> {
        let min = self.min_element().ok_or(Error::EmptySet {
            operation: "normalize",
        })?;
        if self.span().unwrap() > i64::MAX as u64 {
            return Err(Error::Overflow {
                context: "normalize",
            });
        }
        Ok(IntegerSet::from_sorted(
            self.elements.iter().map(|&a| a - min).collect(),
        ))
    }

    /// Mirrors the set within its own span: {min + max - a : a in A}. An
    /// involution; every reflected element lies back in [min, max], so this
    /// cannot overflow.
    pub fn reflect(&self) -> Result<IntegerSet> {
        if self.is_empty() {
            return Err(Error::EmptySet {
                operation: "reflect",
            });
        }
        let c = self.min_element().unwrap() as i128 + self.max_element().unwrap() as i128;
        Ok(IntegerSet::from_sorted(
            self.elements.iter().rev().map(|&a| (c - a as i128) as i64).collect(),
        ))
    }

    /// A + c elementwise.
    pub fn translate(&self, c: i64) -> Result<IntegerSet> {
        let shifted: Option<Vec<i64>> =
            self.elements.iter().map(|&a| a.checked_add(c)).collect();
        Ok(IntegerSet::from_sorted(shifted.ok_or(Error::Overflow {
            context: "translate",
        })?))
    }

    /// m·A elementwise. Classification is invariant under this for m != 0;
    /// m = 0 collapses any nonempty set to {0}.
    pub fn dilate(&self, m: i64) -> Result<IntegerSet> {
        let scaled: Option<Vec<i64>> =
            self.elements.iter().map(|&a| a.checked_mul(m)).collect();
        Ok(IntegerSet::canonical(scaled.ok_or(Error::Overflow { context: "dilate" })?).0)
    }

    /// Reference oracle for [`sumset`](Self::sumset) and
    /// [`diffset`](Self::diffset): literal pairwise loops into plain lists,
    /// then explicit duplicate elimination. Sums take each unordered pair
    /// once (j >= i); differences take every ordered pair off the diagonal,
    /// and 0 joins the list without an arithmetic operation.
    pub fn naive_sumset_and_diffset(&self) -> Result<(IntegerSet, IntegerSet)> {
        let n = self.elements.len();
        let mut sums = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                sums.push(
                    self.elements[i]
                        .checked_add(self.elements[j])
                        .ok_or(Error::Overflow { context: "sumset" })?,
                );
            }
        }
        let mut diffs = Vec::with_capacity(n * n);
        if n > 0 {
            diffs.push(0);
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                diffs.push(self.elements[i].checked_sub(self.elements[j]).ok_or(
                    Error::Overflow {
                        context: "difference set",
                    },
                )?);
            }
        }
        sums.sort_unstable();
        sums.dedup();
        diffs.sort_unstable();
        diffs.dedup();
        Ok((IntegerSet::from_sorted(sums), IntegerSet::from_sorted(diffs)))
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elements: &[i64]) -> IntegerSet {
        IntegerSet::canonical(elements.to_vec()).0
    }

    const CONWAY: &[i64] = &[0, 2, 3, 4, 7, 11, 12, 14];

    #[test]
    fn canonical_sorts_dedupes_and_counts() {
        let (s, dropped) = IntegerSet::canonical(vec![3, 1, 3, 0]);
        assert_eq!(s.elements(), &[0, 1, 3]);
        assert_eq!(dropped, 1);

        let (empty, dropped) = IntegerSet::canonical(vec![]);
        assert!(empty.is_empty());
        assert_eq!(dropped, 0);

        let (c, dropped) = IntegerSet::canonical(CONWAY.to_vec());
        assert_eq!(c.elements(), CONWAY);
        assert_eq!(dropped, 0);
    }

    #[test]
    fn parse_accepts_the_set_text_format() {
        let (s, _) = IntegerSet::parse("{0, 2, 3, 4, 7, 11, 12, 14}").unwrap();
        assert_eq!(s.elements(), CONWAY);
        assert_eq!(IntegerSet::parse("  { -3,0 , 5 }  ").unwrap().0.elements(), &[-3, 0, 5]);
        assert_eq!(IntegerSet::parse("7").unwrap().0.elements(), &[7]);
        assert_eq!(IntegerSet::parse("1,2,2").unwrap(), (set(&[1, 2]), 1));
        assert!(IntegerSet::parse("{}").unwrap().0.is_empty());
        assert!(IntegerSet::parse(" ").unwrap().0.is_empty());
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for bad in ["{1,,2}", "{1 2}", "{1,2", "1}", "abc", "{9223372036854775808}"] {
            assert!(IntegerSet::parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        let s = set(&[-3, 0, 5]);
        assert_eq!(s.to_string(), "{-3, 0, 5}");
        assert_eq!(IntegerSet::parse(&s.to_string()).unwrap().0, s);
        assert_eq!(set(&[]).to_string(), "{}");
    }

    #[test]
    fn sumset_small_cases() {
        assert_eq!(set(&[0]).sumset().unwrap().elements(), &[0]);
        assert_eq!(set(&[0, 1, 3]).sumset().unwrap().elements(), &[0, 1, 2, 3, 4, 6]);
    }

    #[test]
    fn sumset_conway() {
        let expected: Vec<i64> = (0..=28).filter(|v| ![1, 20, 27].contains(v)).collect();
        assert_eq!(expected.len(), 26);
        assert_eq!(set(CONWAY).sumset().unwrap().elements(), &expected[..]);
    }

    #[test]
    fn diffset_small_cases() {
        assert_eq!(set(&[5]).diffset().unwrap().elements(), &[0]);
        assert_eq!(set(&[0, 1, 3]).diffset().unwrap().elements(), &[-3, -2, -1, 0, 1, 2, 3]);
    }

    #[test]
    fn diffset_conway() {
        let pos = [1i64, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14];
        let mut expected: Vec<i64> = pos.iter().map(|&d| -d).rev().collect();
        expected.push(0);
        expected.extend_from_slice(&pos);
        assert_eq!(expected.len(), 25);
        assert_eq!(set(CONWAY).diffset().unwrap().elements(), &expected[..]);
    }

    #[test]
    fn classify_spans_all_three_labels() {
        let c = set(CONWAY).classify().unwrap();
        assert_eq!((c.sum_cardinality, c.diff_cardinality, c.label), (26, 25, Label::Mstd));

        let c = set(&[0, 1, 2, 3, 4]).classify().unwrap();
        assert_eq!((c.sum_cardinality, c.diff_cardinality, c.label), (9, 9, Label::Balanced));

        let c = set(&[0, 1, 3]).classify().unwrap();
        assert_eq!(
            (c.sum_cardinality, c.diff_cardinality, c.label),
            (6, 7, Label::DifferenceDominated)
        );

        let c = set(&[]).classify().unwrap();
        assert_eq!((c.sum_cardinality, c.diff_cardinality, c.label), (0, 0, Label::Balanced));
    }

    #[test]
    fn normalize_translates_min_to_zero() {
        assert_eq!(set(&[5, 7, 10]).normalize().unwrap().elements(), &[0, 2, 5]);
        assert_eq!(set(&[0, 1, 3]).normalize().unwrap().elements(), &[0, 1, 3]);
        assert_eq!(set(&[-4, 0, 4]).normalize().unwrap().elements(), &[0, 4, 8]);
        assert_eq!(
            set(&[]).normalize(),
            Err(Error::EmptySet { operation: "normalize" })
        );
        assert_eq!(
            set(&[i64::MIN, i64::MAX]).normalize(),
            Err(Error::Overflow { context: "normalize" })
        );
    }

    #[test]
    fn reflect_mirrors_within_span() {
        assert_eq!(set(&[0, 1, 3]).reflect().unwrap().elements(), &[0, 2, 3]);
        assert_eq!(set(&[0, 2, 4]).reflect().unwrap().elements(), &[0, 2, 4]);
        assert_eq!(
            set(CONWAY).reflect().unwrap().elements(),
            &[0, 2, 3, 7, 10, 11, 12, 14]
        );
        let s = set(&[-9, 4, 5, 30]);
        assert_eq!(s.reflect().unwrap().reflect().unwrap(), s);
        assert_eq!(
            set(&[i64::MIN, i64::MAX]).reflect().unwrap().elements(),
            &[i64::MIN, i64::MAX]
        );
        assert!(set(&[]).reflect().is_err());
    }

    #[test]
    fn translate_and_dilate() {
        assert_eq!(set(&[0, 1, 3]).translate(10).unwrap().elements(), &[10, 11, 13]);
        assert_eq!(set(&[0, 1, 3]).dilate(-2).unwrap().elements(), &[-6, -2, 0]);
        assert_eq!(set(&[4, 9]).dilate(0).unwrap().elements(), &[0]);
        assert!(set(&[i64::MAX]).translate(1).is_err());
        assert!(set(&[i64::MAX]).dilate(2).is_err());
    }

    #[test]
    fn sumset_overflow_is_an_error() {
        assert_eq!(
            set(&[i64::MAX]).sumset(),
            Err(Error::Overflow { context: "sumset" })
        );
        assert_eq!(
            set(&[i64::MIN, 0]).sumset(),
            Err(Error::Overflow { context: "sumset" })
        );
        assert!(set(&[i64::MIN, i64::MAX]).diffset().is_err());
    }

    #[test]
    fn naive_oracle_agrees_on_fixed_sets() {
        for s in [set(CONWAY), set(&[0, 1, 3]), set(&[]), set(&[7]), set(&[-5, 0, 2, 9])] {
            let (ns, nd) = s.naive_sumset_and_diffset().unwrap();
            assert_eq!(ns, s.sumset().unwrap());
            assert_eq!(nd, s.diffset().unwrap());
        }
    }

    #[test]
    fn wide_spans_take_the_hash_fallback_and_agree() {
        let s = set(&[-3, 0, 1, 9, 5_000_000, 5_000_003]);
        assert!(s.span().unwrap() > BITSET_SPAN_LIMIT);
        let (ns, nd) = s.naive_sumset_and_diffset().unwrap();
        assert_eq!(ns, s.sumset().unwrap());
        assert_eq!(nd, s.diffset().unwrap());
        let c = s.classify().unwrap();
        assert_eq!(c.sum_cardinality, ns.cardinality() as u64);
        assert_eq!(c.diff_cardinality, nd.cardinality() as u64);
    }

    #[test]
    fn singleton_and_empty_span() {
        assert_eq!(set(&[42]).span(), Some(0));
        assert_eq!(set(&[]).span(), None);
        assert_eq!(set(&[i64::MIN, i64::MAX]).span(), Some(u64::MAX));
    }
}
