//! Instrumented set verification with exact operation counts.
//!
//! [`verify`] runs the literal textbook procedure: form all pairwise sums,
//! form all pairwise differences, eliminate duplicates, count both sets,
//! compare. Every integer addition, subtraction, and dedup comparison is
//! counted, so the closed forms n(n+1)/2 and n(n-1) are testable facts
//! rather than documentation. [`bit_cost_estimate`] evaluates two bit-level
//! cost models of the same procedure; both are model numbers for reporting,
//! not timing claims.

use serde::ser::SerializeStruct;

use crate::set::{Classification, IntegerSet, Label};
use crate::{Error, Result};

/// Exact operation counts from one [`verify`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct OpCounts {
    /// Integer additions; n(n+1)/2 for an n-element set (one per unordered
    /// pair, diagonal included).
    pub additions: u64,
    /// Integer subtractions; n(n-1) (every ordered pair off the diagonal;
    /// the difference 0 joins the list without an operation).
    pub subtractions: u64,
    /// Element comparisons: one per adjacent pair in each duplicate-
    /// elimination scan plus the final cardinality comparison. Deterministic
    /// and value-independent, but implementation-defined, unlike the two
    /// closed forms above.
    pub comparisons: u64,
}

/// Everything [`verify`] learned about one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub set: IntegerSet,
    pub classification: Classification,
    pub op_counts: OpCounts,
    /// n² · max(1, ceil(log₂ max(2, |min A|))): the lower-bound model keyed
    /// to the set's first element.
    pub bit_cost_paper: u64,
    /// (3n²-n)/2 · max(1, ceil(log₂(1 + max |a|))): the per-operation model
    /// keyed to the widest element.
    pub bit_cost_practical: u64,
}

impl serde::Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 10)?;
        st.serialize_field("elements", self.set.elements())?;
        st.serialize_field("n", &(self.set.cardinality() as u64))?;
        st.serialize_field("sum_cardinality", &self.classification.sum_cardinality)?;
        st.serialize_field("diff_cardinality", &self.classification.diff_cardinality)?;
        st.serialize_field("label", self.classification.label.as_str())?;
        st.serialize_field("additions", &self.op_counts.additions)?;
        st.serialize_field("subtractions", &self.op_counts.subtractions)?;
        st.serialize_field("comparisons", &self.op_counts.comparisons)?;
        st.serialize_field("bit_cost_paper", &self.bit_cost_paper)?;
        st.serialize_field("bit_cost_practical", &self.bit_cost_practical)?;
        st.end()
    }
}

/// ceil(log₂ x) for x ≥ 1.
fn ceil_log2(x: u64) -> u32 {
    debug_assert!(x >= 1);
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Sorts, then removes duplicates, charging one comparison per adjacent
/// pair inspected (the sort itself is uncounted arrangement work).
fn dedup_counted(v: &mut Vec<i64>, comparisons: &mut u64) {
    v.sort_unstable();
    v.dedup_by(|a, b| {
        *comparisons += 1;
        a == b
    });
}

/// Runs the instrumented pairwise verification procedure.
pub fn verify(set: &IntegerSet) -> Result<VerificationReport> {
    let a = set.elements();
    let n = a.len();
    let mut additions = 0u64;
    let mut subtractions = 0u64;
    let mut comparisons = 0u64;

    let mut sums = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            additions += 1;
            sums.push(a[i].checked_add(a[j]).ok_or(Error::Overflow { context: "sumset" })?);
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
            subtractions += 1;
            diffs.push(a[i].checked_sub(a[j]).ok_or(Error::Overflow {
                context: "difference set",
            })?);
        }
    }

    dedup_counted(&mut sums, &mut comparisons);
    dedup_counted(&mut diffs, &mut comparisons);

    let sum_cardinality = sums.len() as u64;
    let diff_cardinality = diffs.len() as u64;
    comparisons += 1;
    let classification = Classification {
        sum_cardinality,
        diff_cardinality,
        label: Label::from_cardinalities(sum_cardinality, diff_cardinality),
    };

    let (bit_cost_paper, bit_cost_practical) = if n == 0 {
        (0, 0)
    } else {
        bit_cost_estimate(set)?
    };

    Ok(VerificationReport {
        set: set.clone(),
        classification,
        op_counts: OpCounts {
            additions,
            subtractions,
            comparisons,
        },
        bit_cost_paper,
        bit_cost_practical,
    })
}

/// Evaluates both bit-cost models for a nonempty set; see the field docs on
/// [`VerificationReport`]. The log factors are floored at 1 so the models
/// stay positive for sets containing 0 or 1, where log₂|min A| degenerates.
pub fn bit_cost_estimate(set: &IntegerSet) -> Result<(u64, u64)> {
    let min = set.min_element().ok_or(Error::EmptySet {
        operation: "bit_cost_estimate",
    })?;
    let n = set.cardinality() as u64;
    let max_abs = set.elements().iter().map(|a| a.unsigned_abs()).max().unwrap();

    let log_k = u64::from(ceil_log2(min.unsigned_abs().max(2))).max(1);
    let paper = n.saturating_mul(n).saturating_mul(log_k);

    let log_sup = u64::from(ceil_log2(max_abs + 1)).max(1);
    let practical = ((3 * n * n - n) / 2).saturating_mul(log_sup);

    Ok((paper, practical))
}
