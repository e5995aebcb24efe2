//! Minimal deterministic PRNG (SplitMix64). Verification suites and the
//! CLI need byte-identical output for identical arguments across
//! platforms and dependency upgrades, which rules out external RNGs.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn range_usize(&mut self, lo: usize, hi: usize) -> usize {
        self.range_i64(lo as i64, hi as i64) as usize
    }

    /// Random partition with at most `max_len` parts, each at most
    /// `max_part`. May be empty.
    pub fn partition(&mut self, max_len: usize, max_part: i64) -> Vec<i64> {
        let len = self.range_usize(0, max_len);
        let mut parts: Vec<i64> = (0..len).map(|_| self.range_i64(0, max_part)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        parts
    }

    /// Random non-increasing integer sequence of exactly `len` entries in
    /// `lo..=hi`.
    pub fn non_increasing(&mut self, len: usize, lo: i64, hi: i64) -> Vec<i64> {
        let mut seq: Vec<i64> = (0..len).map(|_| self.range_i64(lo, hi)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }
}
