//! Dense bit rows over `Vec<u64>`.
//!
//! A [`BitRow`] represents a subset of `[0, len)` one bit per position. The
//! sumset of a set with span `s` (after translating its minimum to zero) is
//! the OR of the base row shifted left by each element; the nonnegative half
//! of the difference set is the OR of the base row shifted right by each
//! element. Both land in rows of at most `2s + 1` bits, so cardinalities
//! come out of popcounts.

pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// `self |= src << k`. Bits shifted past `self.len` must not exist; the
    /// caller sizes the row so they never do.
    pub fn or_shl(&mut self, src: &BitRow, k: usize) {
        let (wk, bk) = (k / 64, (k % 64) as u32);
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            self.words[i + wk] |= w << bk;
            if bk > 0 {
                let carry = w >> (64 - bk);
                if carry != 0 {
                    self.words[i + wk + 1] |= carry;
                }
            }
        }
        debug_assert!(self.no_stray_bits());
    }

    /// `self |= src >> k`. Bits shifted below zero are dropped.
    pub fn or_shr(&mut self, src: &BitRow, k: usize) {
        let (wk, bk) = (k / 64, (k % 64) as u32);
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 || i < wk {
                continue;
            }
            self.words[i - wk] |= w >> bk;
            if bk > 0 && i > wk {
                self.words[i - wk - 1] |= w << (64 - bk);
            }
        }
    }

    /// Set positions in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&rest| {
                    let next = rest & (rest - 1);
                    (next != 0).then_some(next)
                },
            )
            .map(move |rest| i * 64 + rest.trailing_zeros() as usize)
        })
    }

    fn no_stray_bits(&self) -> bool {
        let tail = self.len % 64;
        tail == 0 || self.words.last().is_none_or(|&w| w >> tail == 0)
    }
}
