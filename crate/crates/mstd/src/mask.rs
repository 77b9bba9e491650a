//! Subsets of [0, N-1] as N-bit machine words.
//!
//! The enumeration hot loops never materialize an [`IntegerSet`]: a subset
//! is a `u64` mask, its sumset is the OR of the mask shifted left by each
//! set bit, and the nonnegative half of its difference set is the OR of the
//! mask shifted right by each set bit. Sums reach 2(N-1), so masks over
//! intervals up to N = 32 accumulate sums in a `u64` and wider ones in a
//! `u128`.
//!
//! Fixed-cardinality scans walk combinations in ascending numeric mask
//! order; [`unrank_colex`] jumps to an arbitrary rank in that same order so
//! the walk can be chunked for parallelism.

use crate::set::{IntegerSet, Label};

/// Classifies the subset of [0, n-1] encoded by `mask`. Empty masks are
/// balanced. Requires n <= 64 and mask < 2^n.
pub(crate) fn classify_mask(mask: u64, n: u32) -> Label {
    debug_assert!(n <= 64);
    debug_assert!(n == 64 || mask >> n == 0);
    if mask == 0 {
        return Label::Balanced;
    }
    let (sums, diffs_nonneg) = if n <= 32 {
        let mut sum_acc = 0u64;
        let mut diff_acc = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros();
            sum_acc |= mask << a;
            diff_acc |= mask >> a;
            rest &= rest - 1;
        }
        (u64::from(sum_acc.count_ones()), u64::from(diff_acc.count_ones()))
    } else {
        let wide = mask as u128;
        let mut sum_acc = 0u128;
        let mut diff_acc = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros();
            sum_acc |= wide << a;
            diff_acc |= mask >> a;
            rest &= rest - 1;
        }
        (u64::from(sum_acc.count_ones()), u64::from(diff_acc.count_ones()))
    };
    Label::from_cardinalities(sums, 2 * diffs_nonneg - 1)
}

/// Mirrors a subset within [0, n-1]: bit a becomes bit n-1-a.
pub(crate) fn reflect_mask(mask: u64, n: u32) -> u64 {
    debug_assert!((1..=64).contains(&n));
    mask.reverse_bits() >> (64 - n)
}

/// True when the subset `a` precedes `b` (or equals it) in lexicographic
/// order on sorted element sequences. For equal-cardinality masks this is
/// decided by the lowest differing bit: whichever set owns it has the
/// smaller leading elements.
pub(crate) fn lex_le(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d == 0 || a & d & d.wrapping_neg() != 0
}

/// The numerically smallest mask with k set bits.
pub(crate) fn first_combination(k: u32) -> u64 {
    debug_assert!((1..=64).contains(&k));
    if k == 64 {
        !0
    } else {
        (1u64 << k) - 1
    }
}

/// The next mask with the same popcount in ascending numeric order. Must
/// not be called on a level's final combination (the one whose set bits all
/// touch the top of the interval): callers advance by exact counts.
pub(crate) fn next_combination(m: u64) -> u64 {
    debug_assert!(m != 0);
    let c = m & m.wrapping_neg();
    let r = m + c;
    r | (((m ^ r) >> 2) / c)
}

/// C(n, k) exactly; 0 when k > n. Fits u128 for all n <= 64.
pub(crate) fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    acc
}

/// The mask at position `rank` (0-based) in the ascending numeric order of
/// k-bit masks over [0, n-1]. Positions chosen highest first: for each, the
/// largest c with C(c, remaining) <= remaining rank.
pub(crate) fn unrank_colex(mut rank: u128, k: u32, n: u32) -> u64 {
    debug_assert!((1..=64).contains(&k) && k <= n && n <= 64);
    debug_assert!(rank < binomial(n, k));
    let mut mask = 0u64;
    let mut c = n;
    for i in (1..=k).rev() {
        c -= 1;
        while binomial(c, i) > rank {
            c -= 1;
        }
        mask |= 1u64 << c;
        rank -= binomial(c, i);
    }
    mask
}

/// Materializes a mask's set bits as an [`IntegerSet`].
pub(crate) fn mask_to_set(mask: u64) -> IntegerSet {
    let mut elements = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        elements.push(rest.trailing_zeros() as i64);
        rest &= rest - 1;
    }
    IntegerSet::canonical(elements).0
}
