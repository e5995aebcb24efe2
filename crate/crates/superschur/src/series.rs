//! Integer-indexed sequences of ring elements and their boundary
//! conventions. Every determinantal identity in the crate is phrased over
//! such a sequence (`k -> H_k`, `k -> h_k`, `k -> h*_k`, truncated random
//! series, ...), and the convention `value 1 at index 0, value 0 below`
//! lives here once instead of being repeated at each call site.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::poly::LaurentPoly;

pub trait SeqProvider: Sync {
    /// Variable counts of the ambient ring.
    fn dims(&self) -> (usize, usize);
    /// Value at index `k`; total (conventions included), never panics for
    /// indices the caller announced via `max_index` checks.
    fn at(&self, k: i64) -> LaurentPoly;
}

/// A finite stretch of coefficients of a formal series, populated exactly
/// for `lo <= k <= hi`.
#[derive(Debug, Clone)]
pub struct SeriesWindow {
    pub lo: i64,
    pub hi: i64,
    m: usize,
    n: usize,
    coeffs: BTreeMap<i64, LaurentPoly>,
}

impl SeriesWindow {
    pub fn build(
        m: usize,
        n: usize,
        lo: i64,
        hi: i64,
        mut f: impl FnMut(i64) -> LaurentPoly,
    ) -> Self {
        assert!(lo <= hi);
        let coeffs = (lo..=hi).map(|k| (k, f(k))).collect();
        SeriesWindow {
            lo,
            hi,
            m,
            n,
            coeffs,
        }
    }

    pub fn get(&self, k: i64) -> Option<&LaurentPoly> {
        self.coeffs.get(&k)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &LaurentPoly)> {
        self.coeffs.iter()
    }
}

/// Memoizing provider around a pure index rule.
pub struct MemoSeq {
    m: usize,
    n: usize,
    rule: Box<dyn Fn(i64) -> LaurentPoly + Sync + Send>,
    cache: Mutex<HashMap<i64, LaurentPoly>>,
}

impl MemoSeq {
    pub fn new(
        m: usize,
        n: usize,
        rule: impl Fn(i64) -> LaurentPoly + Sync + Send + 'static,
    ) -> Self {
        MemoSeq {
            m,
            n,
            rule: Box::new(rule),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl SeqProvider for MemoSeq {
    fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    fn at(&self, k: i64) -> LaurentPoly {
        let mut cache = self.cache.lock().expect("poisoned cache");
        cache.entry(k).or_insert_with(|| (self.rule)(k)).clone()
    }
}

/// Sequence given by explicit values at indices `1..=depth`, with the
/// standard convention `at(0) = 1`, `at(k) = 0` for `k < 0`. Probing above
/// `depth` is a caller bug (the duality checks validate depth first).
pub struct FiniteSeq {
    m: usize,
    n: usize,
    values: Vec<LaurentPoly>,
}

impl FiniteSeq {
    /// `values[i]` is the coefficient at index `i + 1`.
    pub fn new(m: usize, n: usize, values: Vec<LaurentPoly>) -> Self {
        assert!(values.iter().all(|v| v.dims() == (m, n)));
        FiniteSeq { m, n, values }
    }

    pub fn depth(&self) -> i64 {
        self.values.len() as i64
    }

    /// Coefficients of the multiplicative inverse series to the same
    /// depth: `b_0 = 1`, `b_k = -sum_{i=1..k} a_i b_{k-i}`.
    pub fn inverse_series(&self) -> FiniteSeq {
        let mut inv: Vec<LaurentPoly> = Vec::with_capacity(self.values.len());
        for k in 1..=self.values.len() {
            let mut acc = LaurentPoly::zero(self.m, self.n);
            for i in 1..=k {
                let b_prev = if k - i == 0 {
                    LaurentPoly::one(self.m, self.n)
                } else {
                    inv[k - i - 1].clone()
                };
                acc = &acc + &(&self.values[i - 1] * &b_prev);
            }
            inv.push(-&acc);
        }
        FiniteSeq::new(self.m, self.n, inv)
    }
}

impl SeqProvider for FiniteSeq {
    fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    fn at(&self, k: i64) -> LaurentPoly {
        if k < 0 {
            LaurentPoly::zero(self.m, self.n)
        } else if k == 0 {
            LaurentPoly::one(self.m, self.n)
        } else {
            self.values
                .get(k as usize - 1)
                .unwrap_or_else(|| panic!("probe at {} beyond window depth {}", k, self.depth()))
                .clone()
        }
    }
}
