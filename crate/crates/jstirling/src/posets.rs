//! Labeled posets, linear-extension enumeration, descent polynomials, and
//! brute-force order polynomials, together with the two specific families
//! used throughout: the Jacobi-Stirling posets `R_{k,S}` and the
//! Legendre-Stirling posets `P_k`.
//!
//! A poset is stored as cover pairs over raw integer labels; removing
//! elements does not renumber the survivors, and descents are always taken
//! in the natural integer order of the labels.

use crate::exactpoly::{factorial, IntPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset with {size} elements exceeds the enumeration guard of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("cover ({0},{1}) references a label not in the poset")]
    UnknownLabel(u32, u32),
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("subset must be contained in 1..={k}")]
    InvalidSubset { k: usize },
    #[error("labels must be positive")]
    ZeroLabel,
}

pub const EXTENSION_SIZE_LIMIT: usize = 18;
pub const ORDER_POLY_SIZE_LIMIT: usize = 10;
pub const ORDER_POLY_N_LIMIT: u32 = 12;

/// Finite poset with injective positive-integer labels, stored by its cover
/// relation.
#[derive(Debug, Clone)]
pub struct LabeledPoset {
    /// sorted ascending
    labels: Vec<u32>,
    /// (lower, upper) pairs over labels
    covers: Vec<(u32, u32)>,
    /// per element index: indices covering it from above
    up: Vec<Vec<usize>>,
    /// per element index: indices it covers from above (i.e. below it)
    down: Vec<Vec<usize>>,
}

impl LabeledPoset {
    pub fn new(labels: &[u32], covers: &[(u32, u32)]) -> Result<Self, PosetError> {
        let mut sorted: Vec<u32> = labels.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(PosetError::DuplicateLabel(w[0]));
            }
        }
        if sorted.first() == Some(&0) {
            return Err(PosetError::ZeroLabel);
        }
        let idx_of = |l: u32| sorted.binary_search(&l).ok();
        let n = sorted.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            let (li, hi_i) = match (idx_of(lo), idx_of(hi)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(PosetError::UnknownLabel(lo, hi)),
            };
            up[li].push(hi_i);
            down[hi_i].push(li);
        }
        let poset = LabeledPoset { labels: sorted, covers: covers.to_vec(), up, down };
        if poset.topological_order().is_none() {
            return Err(PosetError::Cyclic);
        }
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.down[v].len()).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Streams every linear extension exactly once, in lexicographic order
    /// of the label words.
    pub fn linear_extensions(&self) -> Result<LinearExtensionIter<'_>, PosetError> {
        if self.len() > EXTENSION_SIZE_LIMIT {
            return Err(PosetError::TooLarge { size: self.len(), limit: EXTENSION_SIZE_LIMIT });
        }
        Ok(LinearExtensionIter::new(self))
    }

    /// `sum_{pi in L(P)} t^{des(pi)+1}`, descents in natural label order.
    pub fn descent_polynomial(&self) -> Result<IntPoly, PosetError> {
        let mut hist: Vec<BigInt> = Vec::new();
        for ext in self.linear_extensions()? {
            let d = word_descents(&ext.word) + 1;
            if hist.len() <= d {
                hist.resize(d + 1, BigInt::zero());
            }
            hist[d] += 1;
        }
        Ok(IntPoly::new(hist))
    }

    /// Is `word` a linear extension of this poset?
    pub fn is_linear_extension(&self, word: &[u32]) -> bool {
        if word.len() != self.len() {
            return false;
        }
        let mut seen = BTreeSet::new();
        let pos = |l: u32, word: &[u32]| word.iter().position(|&x| x == l);
        for &l in word {
            if self.labels.binary_search(&l).is_err() || !seen.insert(l) {
                return false;
            }
        }
        self.covers
            .iter()
            .all(|&(lo, hi)| pos(lo, word).unwrap() < pos(hi, word).unwrap())
    }

    /// Counts (P,w)-partitions with parts in [n] by exhaustive assignment:
    /// weakly increasing along every cover, strictly when the lower cover
    /// carries the larger label. Pure brute-force oracle.
    pub fn order_polynomial_value(&self, n: u32) -> Result<BigInt, PosetError> {
        if self.len() > ORDER_POLY_SIZE_LIMIT {
            return Err(PosetError::TooLarge { size: self.len(), limit: ORDER_POLY_SIZE_LIMIT });
        }
        if n as usize > ORDER_POLY_N_LIMIT as usize {
            return Err(PosetError::TooLarge {
                size: n as usize,
                limit: ORDER_POLY_N_LIMIT as usize,
            });
        }
        if n == 0 {
            return Ok(if self.is_empty() { BigInt::one() } else { BigInt::zero() });
        }
        let order = self.topological_order().expect("validated at construction");
        // position of each element in the assignment order
        let mut slot = vec![0usize; self.len()];
        for (s, &v) in order.iter().enumerate() {
            slot[v] = s;
        }
        let mut values = vec![0u32; self.len()];
        let mut count = BigInt::zero();
        self.count_partitions(&order, &slot, &mut values, 0, n, &mut count);
        Ok(count)
    }

    fn count_partitions(
        &self,
        order: &[usize],
        slot: &[usize],
        values: &mut [u32],
        depth: usize,
        n: u32,
        count: &mut BigInt,
    ) {
        if depth == order.len() {
            *count += 1;
            return;
        }
        let v = order[depth];
        let mut lo = 1u32;
        for &below in &self.down[v] {
            debug_assert!(slot[below] < depth);
            let strict = self.labels[below] > self.labels[v];
            let bound = values[below] + u32::from(strict);
            lo = lo.max(bound);
        }
        for val in lo..=n {
            values[v] = val;
            self.count_partitions(order, slot, values, depth + 1, n, count);
        }
    }
}

/// A linear extension recorded as the word of labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearExtension {
    pub word: Vec<u32>,
}

pub fn word_descents(word: &[u32]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Backtracking enumerator over currently-minimal elements; candidates are
/// tried in ascending label order, so words come out lexicographically.
pub struct LinearExtensionIter<'a> {
    poset: &'a LabeledPoset,
    indeg: Vec<usize>,
    word: Vec<usize>,
    /// frame per depth: (candidate element indices sorted by label, cursor)
    stack: Vec<(Vec<usize>, usize)>,
    started: bool,
    done: bool,
}

impl<'a> LinearExtensionIter<'a> {
    fn new(poset: &'a LabeledPoset) -> Self {
        let indeg: Vec<usize> = (0..poset.len()).map(|v| poset.down[v].len()).collect();
        LinearExtensionIter {
            poset,
            indeg,
            word: Vec::new(),
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn candidates(&self) -> Vec<usize> {
        // indices are already in ascending label order
        (0..self.poset.len())
            .filter(|&v| self.indeg[v] == 0 && !self.word.contains(&v))
            .collect()
    }

    fn place(&mut self, v: usize) {
        self.word.push(v);
        for &w in &self.poset.up[v] {
            self.indeg[w] -= 1;
        }
    }

    fn unplace(&mut self) {
        let v = self.word.pop().expect("unbalanced backtrack");
        for &w in &self.poset.up[v] {
            self.indeg[w] += 1;
        }
    }
}

impl Iterator for LinearExtensionIter<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.stack.push((self.candidates(), 0));
        } else {
            // resume after the word produced last time: drop the empty frame
            // pushed by its final placement, then backtrack one element
            self.stack.pop();
            if self.stack.is_empty() {
                self.done = true;
                return None;
            }
            self.unplace();
        }
        loop {
            if self.word.len() == self.poset.len() {
                let word = self.word.iter().map(|&v| self.poset.labels[v]).collect();
                return Some(LinearExtension { word });
            }
            let (cands, cursor) = self.stack.last_mut().expect("frame");
            if *cursor < cands.len() {
                let v = cands[*cursor];
                *cursor += 1;
                self.place(v);
                self.stack.push((self.candidates(), 0));
            } else {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                self.unplace();
            }
        }
    }
}

/// The Jacobi-Stirling poset `R_{k,S}`: labels 1..3k minus `{3m-2 : m in S}`,
/// with spine 3, 6, ..., 3k, where 3m covers 3m-2 (when present), 3m-1, and
/// 3(m-1).
pub fn build_r(k: usize, s: &BTreeSet<usize>) -> Result<LabeledPoset, PosetError> {
    if k == 0 && !s.is_empty() {
        return Err(PosetError::InvalidSubset { k });
    }
    if s.iter().any(|&m| m == 0 || m > k) {
        return Err(PosetError::InvalidSubset { k });
    }
    let mut labels = Vec::new();
    let mut covers = Vec::new();
    for m in 1..=k {
        let (a, b, c) = (3 * m as u32 - 2, 3 * m as u32 - 1, 3 * m as u32);
        if !s.contains(&m) {
            labels.push(a);
            covers.push((a, c));
        }
        labels.push(b);
        labels.push(c);
        covers.push((b, c));
        if m >= 2 {
            covers.push((c - 3, c));
        }
    }
    LabeledPoset::new(&labels, &covers)
}

/// The Legendre-Stirling poset `P_k`: labels 1..3k with spine 2, 5, ...,
/// 3k-1, where 3m-1 covers 3m-2, 3m, and 3(m-1)-1.
pub fn build_p_legendre(k: usize) -> LabeledPoset {
    let mut labels = Vec::new();
    let mut covers = Vec::new();
    for m in 1..=k {
        let (a, b, c) = (3 * m as u32 - 2, 3 * m as u32 - 1, 3 * m as u32);
        labels.push(a);
        labels.push(b);
        labels.push(c);
        covers.push((a, b));
        covers.push((c, b));
        if m >= 2 {
            covers.push((b - 3, b));
        }
    }
    LabeledPoset::new(&labels, &covers).expect("P_k construction is always valid")
}

/// Product formula for the number of linear extensions of `R_{k,S}`:
/// `(3k-i)! / prod_j (3j - l_j(S))` with `l_j(S) = |{s in S : s <= j}|`.
pub fn a_s_at_one(k: usize, s: &BTreeSet<usize>) -> BigInt {
    let i = s.len();
    let mut denom = BigInt::one();
    for j in 1..=k {
        let l_j = s.iter().filter(|&&x| x <= j).count();
        denom *= BigInt::from(3 * j - l_j);
    }
    factorial((3 * k - i) as u64) / denom
}

/// Closed form `|L(R_{k,i})| = (3k-i)!/(3^{k-i} 2^i i! (k-i)!)`.
pub fn count_linext_level(k: usize, i: usize) -> BigInt {
    crate::diagonal::row_sum_closed_form(k, i)
}

/// The same count written as `2^{k-i}` times the number of partitions of
/// `[3k-i]` into `k-i` blocks of size 3 and `i` blocks of size 2.
pub fn count_linext_partition_form(k: usize, i: usize) -> BigInt {
    let partitions = factorial((3 * k - i) as u64)
        / (BigInt::from(6u32).pow((k - i) as u32)
            * factorial((k - i) as u64)
            * BigInt::from(2u32).pow(i as u32)
            * factorial(i as u64));
    BigInt::from(2u32).pow((k - i) as u32) * partitions
}

/// All subsets of {1..k} with the given cardinality.
pub fn subsets_of_size(k: usize, i: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize == i {
            out.push((1..=k).filter(|&m| mask & (1 << (m - 1)) != 0).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jsnumbers::{build_triangle, Kind};

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    fn fig1_poset() -> LabeledPoset {
        LabeledPoset::new(&[1, 2, 3], &[(2, 1), (2, 3)]).unwrap()
    }

    fn words(p: &LabeledPoset) -> Vec<Vec<u32>> {
        p.linear_extensions().unwrap().map(|e| e.word).collect()
    }

    #[test]
    fn fig1_extensions() {
        assert_eq!(words(&fig1_poset()), vec![vec![2, 1, 3], vec![2, 3, 1]]);
    }

    #[test]
    fn r_1_empty_extensions() {
        let p = build_r(1, &set(&[])).unwrap();
        assert_eq!(words(&p), vec![vec![1, 2, 3], vec![2, 1, 3]]);
    }

    #[test]
    fn chain_has_unique_extension() {
        let p = LabeledPoset::new(&[1, 2, 3], &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(words(&p), vec![vec![1, 2, 3]]);
        assert_eq!(p.descent_polynomial().unwrap(), IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn extensions_are_lexicographic_and_valid() {
        let p = build_r(2, &set(&[])).unwrap();
        let ws = words(&p);
        for w in &ws {
            assert!(p.is_linear_extension(w));
        }
        let mut sorted = ws.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ws, sorted);
        assert_eq!(BigInt::from(ws.len()), a_s_at_one(2, &set(&[])));
    }

    #[test]
    fn size_guard() {
        let labels: Vec<u32> = (1..=19).collect();
        let p = LabeledPoset::new(&labels, &[]).unwrap();
        assert!(matches!(p.linear_extensions(), Err(PosetError::TooLarge { .. })));
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(
            LabeledPoset::new(&[1, 2], &[(1, 2), (2, 1)]),
            Err(PosetError::Cyclic)
        ));
    }

    #[test]
    fn fig1_descent_polynomial() {
        assert_eq!(fig1_poset().descent_polynomial().unwrap(), IntPoly::from_i64(&[0, 0, 2]));
    }

    #[test]
    fn r_2_1_descent_polynomial() {
        // 12 extensions; coefficients frozen from this enumeration and
        // cross-checked against the generating-function route in exactpoly
        let p = build_r(2, &set(&[1])).unwrap();
        let dp = p.descent_polynomial().unwrap();
        assert_eq!(dp, IntPoly::from_i64(&[0, 1, 7, 4]));
        let total: BigInt = dp.coeffs().iter().sum();
        assert_eq!(total, BigInt::from(12));
    }

    #[test]
    fn order_polynomial_examples() {
        assert_eq!(fig1_poset().order_polynomial_value(2).unwrap(), BigInt::from(2));
        let r21 = build_r(2, &set(&[1])).unwrap();
        assert_eq!(r21.order_polynomial_value(1).unwrap(), BigInt::from(1));
        // strictness unsatisfiable on a decreasing chain longer than n
        let chain = LabeledPoset::new(&[1, 2, 3], &[(3, 2), (2, 1)]).unwrap();
        assert_eq!(chain.order_polynomial_value(2).unwrap(), BigInt::from(0));
    }

    #[test]
    fn build_r_shapes() {
        let r21 = build_r(2, &set(&[1])).unwrap();
        assert_eq!(r21.labels(), &[2, 3, 4, 5, 6]);
        let mut covers = r21.covers().to_vec();
        covers.sort_unstable();
        assert_eq!(covers, vec![(2, 3), (3, 6), (4, 6), (5, 6)]);

        let r22 = build_r(2, &set(&[2])).unwrap();
        assert_eq!(r22.labels(), &[1, 2, 3, 5, 6]);

        let r1 = build_r(1, &set(&[])).unwrap();
        assert_eq!(r1.covers(), &[(1, 3), (2, 3)]);

        // all 3m-2 removed: 2k elements remain
        let rfull = build_r(3, &set(&[1, 2, 3])).unwrap();
        assert_eq!(rfull.len(), 6);

        assert!(matches!(build_r(2, &set(&[3])), Err(PosetError::InvalidSubset { .. })));
    }

    #[test]
    fn legendre_poset_shapes() {
        let p1 = build_p_legendre(1);
        assert_eq!(words(&p1), vec![vec![1, 3, 2], vec![3, 1, 2]]);
        assert_eq!(build_p_legendre(2).len(), 6);
    }

    #[test]
    fn legendre_order_polynomial_matches_ls() {
        // Omega_{P_k}(n) = LS(n-1+k, n-1)
        for k in 1..=2usize {
            let p = build_p_legendre(k);
            let tri = build_triangle(Kind::Second, k + 5);
            for n in 1..=5u32 {
                let omega = p.order_polynomial_value(n).unwrap();
                let ls = tri.legendre_stirling(n as usize - 1 + k, n as usize - 1).unwrap();
                assert_eq!(omega, ls, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn a_s_at_one_examples() {
        assert_eq!(a_s_at_one(2, &set(&[1])), BigInt::from(12));
        assert_eq!(a_s_at_one(2, &set(&[2])), BigInt::from(8));
        assert_eq!(a_s_at_one(1, &set(&[])), BigInt::from(2));
    }

    #[test]
    fn count_linext_level_examples() {
        assert_eq!(count_linext_level(2, 1), BigInt::from(20));
        assert_eq!(count_linext_level(1, 0), BigInt::from(2));
        assert_eq!(count_linext_level(3, 0), BigInt::from(2240));
        for k in 0..=8usize {
            for i in 0..=k {
                assert_eq!(count_linext_level(k, i), count_linext_partition_form(k, i));
            }
        }
    }

    #[test]
    fn sum_identity_over_subsets() {
        // identity (3.11): sum over S of the product formula equals the
        // closed form, exactly, for k <= 8
        for k in 1..=8usize {
            for i in 0..=k {
                let mut total = BigInt::from(0);
                for s in subsets_of_size(k, i) {
                    total += a_s_at_one(k, &s);
                }
                assert_eq!(total, count_linext_level(k, i), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn descent_poly_at_one_matches_product_formula() {
        for k in 1..=3usize {
            for i in 0..=k {
                for s in subsets_of_size(k, i) {
                    let p = build_r(k, &s).unwrap();
                    let dp = p.descent_polynomial().unwrap();
                    let total: BigInt = dp.coeffs().iter().sum();
                    assert_eq!(total, a_s_at_one(k, &s), "k={k} S={s:?}");
                }
            }
        }
    }
}
