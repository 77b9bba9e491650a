//! Exhaustive, descending-cardinality, and Monte Carlo exploration of the
//! subsets of [0, N-1].
//!
//! All three pipelines classify subsets as bitmasks without materializing
//! sets. Parallel scans partition the subset space into chunks whose
//! boundaries depend only on the problem size and merge per-chunk results
//! with commutative, associative operations (counts add, witnesses take the
//! lexicographic minimum), so every report is byte-identical no matter how
//! many workers run. Monte Carlo sampling draws one 64-bit word per trial
//! from a counter-based stream cipher, sequentially, for the same reason.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::mask::{
    binomial, classify_mask as classify_mask_impl, first_combination, lex_le, mask_to_set,
    next_combination, reflect_mask, unrank_colex,
};
use crate::set::{IntegerSet, Label};
use crate::{Error, Result};

/// Hard ceiling for exact enumeration: 2^30 subset classifications.
pub const EXACT_ENUMERATION_CAP: u32 = 30;

/// Subsets are machine words, so intervals stop at 64 bits.
pub const MAX_INTERVAL_BITS: u32 = 64;

/// Default ceiling on subsets charged by the descending-cardinality search.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Generator recorded in every Monte Carlo report.
pub const RNG_NAME: &str = "chacha8";

/// Exact census of the subsets of [0, N-1].
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct EnumerationReport {
    #[serde(rename = "N")]
    pub n: u32,
    pub total_subsets: u64,
    pub mstd_count: u64,
    pub mstd_count_by_cardinality: BTreeMap<u32, u64>,
    /// mstd_count / 2^N in lowest terms.
    pub probability: Ratio,
    pub probability_float: f64,
}

/// An exact rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

/// Outcome of the largest-cardinality search over [0, N-1].
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LargestResult {
    #[serde(rename = "N")]
    pub n: u32,
    /// Largest |A| over MSTD subsets, absent when none exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_cardinality: Option<u32>,
    /// The lexicographically smallest MSTD subset of that cardinality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntegerSet>,
}

/// Seeded sampling estimate of the MSTD probability at one N.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct MonteCarloReport {
    #[serde(rename = "N")]
    pub n: u32,
    pub trials: u64,
    pub seed: u64,
    pub rng: &'static str,
    pub hits: u64,
    pub estimate: f64,
    pub std_error: f64,
}

/// One probability-versus-N data point; `std_error` is 0 for exact rows.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SeriesRow {
    #[serde(rename = "N")]
    pub n: u32,
    pub method: &'static str,
    pub estimate: f64,
    pub std_error: f64,
}

/// Knobs for [`largest_mstd_cardinality_with`].
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Abort (deterministically) once the cardinality levels charged so far
    /// would exceed this many subsets. Levels are charged in full before
    /// they are scanned.
    pub node_budget: u64,
    /// Skip subsets whose mirror image within [0, N-1] precedes them; the
    /// mirror has the same classification, so only canonical
    /// representatives need classifying.
    pub prune_reflections: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            prune_reflections: true,
        }
    }
}

/// Classifies the subset of [0, n-1] encoded by the set bits of `mask`.
/// This is the primitive under every enumeration loop, exposed for testing
/// against [`IntegerSet::classify`].
pub fn classify_mask(mask: u64, n: u32) -> Result<Label> {
    if n == 0 {
        return Err(Error::EmptyInterval);
    }
    if n > MAX_INTERVAL_BITS {
        return Err(Error::IntervalTooWide {
            n,
            max: MAX_INTERVAL_BITS,
        });
    }
    if n < 64 && mask >> n != 0 {
        return Err(Error::Parse(format!(
            "mask {mask:#x} has bits outside [0, {n})"
        )));
    }
    Ok(classify_mask_impl(mask, n))
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

struct CountAcc {
    mstd: u64,
    by_card: [u64; 31],
}

impl CountAcc {
    fn new() -> Self {
        CountAcc {
            mstd: 0,
            by_card: [0; 31],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.mstd += other.mstd;
        for (a, b) in self.by_card.iter_mut().zip(other.by_card) {
            *a += b;
        }
        self
    }
}

/// Classifies every one of the 2^N subsets of [0, N-1] and aggregates
/// exactly. Refuses N beyond [`EXACT_ENUMERATION_CAP`].
pub fn enumerate_interval(n: u32) -> Result<EnumerationReport> {
    enumerate_interval_with_cap(n, EXACT_ENUMERATION_CAP)
}

/// [`enumerate_interval`] with the cap lowered; `cap` may not exceed the
/// hard cap.
pub fn enumerate_interval_with_cap(n: u32, cap: u32) -> Result<EnumerationReport> {
    if cap > EXACT_ENUMERATION_CAP {
        return Err(Error::CapTooHigh {
            requested: cap,
            hard: EXACT_ENUMERATION_CAP,
        });
    }
    if n == 0 {
        return Err(Error::EmptyInterval);
    }
    if n > cap {
        return Err(Error::ExactCapExceeded { n, cap });
    }

    let total = 1u64 << n;
    let acc = (0..total as u32)
        .into_par_iter()
        .with_min_len(1 << 12)
        .fold(CountAcc::new, |mut acc, mask| {
            if classify_mask_impl(u64::from(mask), n) == Label::Mstd {
                acc.mstd += 1;
                acc.by_card[mask.count_ones() as usize] += 1;
            }
            acc
        })
        .reduce(CountAcc::new, CountAcc::merge);

    let g = gcd(acc.mstd, total);
    Ok(EnumerationReport {
        n,
        total_subsets: total,
        mstd_count: acc.mstd,
        mstd_count_by_cardinality: acc
            .by_card
            .iter()
            .enumerate()
            .filter(|&(_, &count)| count > 0)
            .map(|(card, &count)| (card as u32, count))
            .collect(),
        probability: Ratio {
            numerator: acc.mstd / g,
            denominator: total / g,
        },
        probability_float: acc.mstd as f64 / total as f64,
    })
}

/// Finds the largest MSTD subset of [0, N-1] with default options.
pub fn largest_mstd_cardinality(n: u32) -> Result<LargestResult> {
    largest_mstd_cardinality_with(n, SearchOptions::default())
}

/// Scans cardinalities N, N-1, ... and stops at the first level holding an
/// MSTD subset; levels above the winner are proven empty. The witness is
/// the lexicographically smallest MSTD subset of the winning cardinality
/// (the smallest always survives reflection pruning: were its mirror
/// smaller, the mirror would be a smaller MSTD subset of the same size).
pub fn largest_mstd_cardinality_with(n: u32, options: SearchOptions) -> Result<LargestResult> {
    if n == 0 {
        return Err(Error::EmptyInterval);
    }
    if n > MAX_INTERVAL_BITS {
        return Err(Error::IntervalTooWide {
            n,
            max: MAX_INTERVAL_BITS,
        });
    }

    let mut charged = 0u64;
    for c in (1..=n).rev() {
        let level = binomial(n, c);
        let level_cost = u64::try_from(level).unwrap_or(u64::MAX);
        if charged.saturating_add(level_cost) > options.node_budget {
            return Err(Error::BudgetExhausted {
                n,
                budget: options.node_budget,
                charged,
                next_cardinality: c,
            });
        }
        charged += level_cost;

        if let Some(mask) = scan_level(n, c, level, options.prune_reflections) {
            return Ok(LargestResult {
                n,
                max_cardinality: Some(c),
                witness: Some(mask_to_set(mask)),
            });
        }
    }
    Ok(LargestResult {
        n,
        max_cardinality: None,
        witness: None,
    })
}

/// Lexicographically smallest MSTD mask with `c` set bits in [0, n-1], or
/// None. `level` must be C(n, c). Chunk boundaries depend only on `level`,
/// and the merge is a commutative minimum, so the result is identical for
/// any worker count.
fn scan_level(n: u32, c: u32, level: u128, prune: bool) -> Option<u64> {
    const CHUNK: u128 = 1 << 16;
    let chunks = level.div_ceil(CHUNK) as u64;

    let pick_min = |a: Option<u64>, b: Option<u64>| match (a, b) {
        (Some(x), Some(y)) => Some(if lex_le(x, y) { x } else { y }),
        (x, y) => x.or(y),
    };

    (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci as u128 * CHUNK;
            let len = CHUNK.min(level - start);
            let mut mask = if start == 0 {
                first_combination(c)
            } else {
                unrank_colex(start, c, n)
            };
            let mut best: Option<u64> = None;
            let mut i = 0;
            loop {
                if (!prune || lex_le(mask, reflect_mask(mask, n)))
                    && classify_mask_impl(mask, n) == Label::Mstd
                    && !best.is_some_and(|b| lex_le(b, mask))
                {
                    best = Some(mask);
                }
                i += 1;
                if i == len {
                    break;
                }
                mask = next_combination(mask);
            }
            best
        })
        .reduce(|| None, pick_min)
}

/// Estimates the MSTD probability at one N by sampling `trials` subsets
/// uniformly (one fair coin per element) from a stream seeded with `seed`.
pub fn mstd_probability_monte_carlo(n: u32, trials: u64, seed: u64) -> Result<MonteCarloReport> {
    if n == 0 {
        return Err(Error::EmptyInterval);
    }
    if n > MAX_INTERVAL_BITS {
        return Err(Error::IntervalTooWide {
            n,
            max: MAX_INTERVAL_BITS,
        });
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }

    let filter = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..trials {
        let mask = rng.next_u64() & filter;
        if classify_mask_impl(mask, n) == Label::Mstd {
            hits += 1;
        }
    }

    let estimate = hits as f64 / trials as f64;
    Ok(MonteCarloReport {
        n,
        trials,
        seed,
        rng: RNG_NAME,
        hits,
        estimate,
        std_error: (estimate * (1.0 - estimate) / trials as f64).sqrt(),
    })
}

/// The N-th output of a splitmix64 stream seeded with `seed`: the per-N
/// seed derivation for [`probability_series`], so each N samples an
/// independent stream while the whole series stays reproducible from one
/// seed.
fn derive_seed(seed: u64, n: u32) -> u64 {
    let mut z = seed.wrapping_add(u64::from(n).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One probability estimate per N in [n_min, n_max]: exact enumeration up
/// to the default cap, Monte Carlo with a derived per-N seed beyond it.
pub fn probability_series(
    n_min: u32,
    n_max: u32,
    trials: u64,
    seed: u64,
) -> Result<Vec<SeriesRow>> {
    probability_series_with_cap(n_min, n_max, trials, seed, EXACT_ENUMERATION_CAP)
}

/// [`probability_series`] with the exact/sampled crossover lowered.
pub fn probability_series_with_cap(
    n_min: u32,
    n_max: u32,
    trials: u64,
    seed: u64,
    exact_cap: u32,
) -> Result<Vec<SeriesRow>> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidRange { n_min, n_max });
    }
    if exact_cap > EXACT_ENUMERATION_CAP {
        return Err(Error::CapTooHigh {
            requested: exact_cap,
            hard: EXACT_ENUMERATION_CAP,
        });
    }

    (n_min..=n_max)
        .map(|n| {
            if n <= exact_cap {
                let report = enumerate_interval_with_cap(n, exact_cap)?;
                Ok(SeriesRow {
                    n,
                    method: "exact",
                    estimate: report.probability_float,
                    std_error: 0.0,
                })
            } else {
                let report = mstd_probability_monte_carlo(n, trials, derive_seed(seed, n))?;
                Ok(SeriesRow {
                    n,
                    method: "monte-carlo",
                    estimate: report.estimate,
                    std_error: report.std_error,
                })
            }
        })
        .collect()
}
