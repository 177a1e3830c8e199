//! Jacobi-Stirling and Legendre-Stirling permutations.
//!
//! Words live over the multiset `M_{k,S}` (two unbarred copies of every
//! value 1..k, one barred copy for values outside S) and must satisfy the
//! Stirling property: everything strictly between two equal letters is
//! larger. Two descent statistics apply to the same words: the Jacobi order
//! `1' < 1 < 2' < 2 < ...` and the Legendre order, which identifies a
//! barred letter with its unbarred value.
//!
//! The module enumerates these words by block insertion, tabulates descent
//! histograms, and implements the two slot-matching bijections: `phi` from
//! linear extensions of the Jacobi-Stirling poset `R_{k,S}` (descent
//! preserving) and `psi` from Legendre-Stirling permutations to linear
//! extensions of the Legendre-Stirling poset `P_k` (descent count shifts
//! by one).

use crate::exactpoly::{one_minus_t_pow, IntPoly};
use crate::posets::{build_r, LinearExtension};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("k = {k} exceeds the enumeration guard of {limit}")]
    TooLarge { k: usize, limit: usize },
    #[error("word is not a linear extension of the expected poset")]
    NotAnExtension,
    #[error("word violates the Stirling property")]
    NotAStirlingWord,
    #[error("malformed word: {0}")]
    BadWord(String),
    #[error("subset must be contained in 1..={k}")]
    InvalidSubset { k: usize },
}

pub const ENUM_K_LIMIT: usize = 6;

/// One letter of the multiset alphabet; barred letters render with a
/// trailing apostrophe, e.g. `2'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
}

impl Letter {
    pub fn plain(value: u32) -> Self {
        Letter { value, barred: false }
    }

    pub fn barred(value: u32) -> Self {
        Letter { value, barred: true }
    }

    /// Jacobi order `1' < 1 < 2' < 2 < ...`; the sentinel key 0 is below
    /// every letter.
    pub fn jacobi_key(&self) -> u64 {
        2 * self.value as u64 - u64::from(self.barred)
    }

    /// Legendre order `1' = 1 < 2' = 2 < ...`.
    pub fn legendre_key(&self) -> u64 {
        self.value as u64
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "'" } else { "" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DescentOrder {
    Jacobi,
    Legendre,
}

/// A word over the multiset alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Stirling property: whenever positions u < v < w carry the same
    /// letter at u and w, the letter at v is larger in the Jacobi order.
    pub fn is_stirling(&self) -> bool {
        let n = self.letters.len();
        for u in 0..n {
            for w in (u + 1)..n {
                if self.letters[u] == self.letters[w] {
                    for v in (u + 1)..w {
                        if self.letters[v].jacobi_key() <= self.letters[u].jacobi_key() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn descents(&self, order: DescentOrder) -> usize {
        let keys = self.keys(order);
        keys.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn keys(&self, order: DescentOrder) -> Vec<u64> {
        self.letters
            .iter()
            .map(|l| match order {
                DescentOrder::Jacobi => l.jacobi_key(),
                DescentOrder::Legendre => l.legendre_key(),
            })
            .collect()
    }

    pub fn parse(s: &str) -> Result<Word, PermError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (digits, barred) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let value: u32 = digits
                .parse()
                .map_err(|_| PermError::BadWord(format!("bad letter {tok:?}")))?;
            if value == 0 {
                return Err(PermError::BadWord("letter value must be positive".into()));
            }
            letters.push(Letter { value, barred });
        }
        Ok(Word { letters })
    }
}

/// Canonical serialization: letters space-separated, bars as apostrophes.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Slot machinery. A word of length m has slots 0..=m with sentinel letters
// below everything at both ends; slot g is a descent slot iff the key on its
// left is strictly larger than the key on its right, so the final slot of a
// nonempty word is always a descent slot and the initial slot never is.
// ---------------------------------------------------------------------------

fn slot_is_descent(keys: &[u64], gap: usize) -> bool {
    if keys.is_empty() {
        return false;
    }
    if gap == keys.len() {
        return true;
    }
    if gap == 0 {
        return false;
    }
    keys[gap - 1] > keys[gap]
}

/// Classify a gap and return its 1-based ordinal among the non-excluded
/// slots of the same type, scanning left to right.
fn slot_ordinal(keys: &[u64], gap: usize, excluded: &[usize]) -> (bool, usize) {
    debug_assert!(!excluded.contains(&gap));
    let ty = slot_is_descent(keys, gap);
    let ordinal = (0..gap)
        .filter(|&g| slot_is_descent(keys, g) == ty && !excluded.contains(&g))
        .count()
        + 1;
    (ty, ordinal)
}

/// The gap with the given type and 1-based ordinal among non-excluded slots.
fn gap_for_ordinal(keys: &[u64], descent: bool, ordinal: usize, excluded: &[usize]) -> usize {
    let mut seen = 0;
    for g in 0..=keys.len() {
        if slot_is_descent(keys, g) == descent && !excluded.contains(&g) {
            seen += 1;
            if seen == ordinal {
                return g;
            }
        }
    }
    panic!("no slot with type descent={descent}, ordinal {ordinal}");
}

fn insert_at<T: Clone>(v: &[T], gap: usize, items: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() + items.len());
    out.extend_from_slice(&v[..gap]);
    out.extend_from_slice(items);
    out.extend_from_slice(&v[gap..]);
    out
}

fn remove_at<T: Clone>(v: &[T], start: usize, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() - count);
    out.extend_from_slice(&v[..start]);
    out.extend_from_slice(&v[start + count..]);
    out
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Generalized Stirling-permutation engine: given blocks in increasing
/// Jacobi order, insert each block contiguously into every slot of every
/// word built so far. Positions are tried left to right, so the output
/// order is deterministic.
pub fn enumerate_stirling(blocks: &[(Letter, usize)]) -> Vec<Word> {
    debug_assert!(blocks.windows(2).all(|w| w[0].0.jacobi_key() < w[1].0.jacobi_key()));
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for &(letter, count) in blocks {
        let block = vec![letter; count];
        let mut next = Vec::with_capacity(words.len() * (words[0].len() + 1));
        for w in &words {
            for gap in 0..=w.len() {
                next.push(insert_at(w, gap, &block));
            }
        }
        words = next;
    }
    words.into_iter().map(Word::new).collect()
}

fn mks_blocks(k: usize, removed_bars: &BTreeSet<u32>) -> Vec<(Letter, usize)> {
    let mut blocks = Vec::new();
    for v in 1..=k as u32 {
        if !removed_bars.contains(&v) {
            blocks.push((Letter::barred(v), 1));
        }
        blocks.push((Letter::plain(v), 2));
    }
    blocks
}

/// Every Jacobi-Stirling permutation of `M_{k,S}`, where `removed_bars`
/// lists the barred values missing from the multiset.
pub fn enumerate_jsp(k: usize, removed_bars: &BTreeSet<u32>) -> Result<Vec<Word>, PermError> {
    if k > ENUM_K_LIMIT {
        return Err(PermError::TooLarge { k, limit: ENUM_K_LIMIT });
    }
    if removed_bars.iter().any(|&v| v == 0 || v as usize > k) {
        return Err(PermError::InvalidSubset { k });
    }
    Ok(enumerate_stirling(&mks_blocks(k, removed_bars)))
}

/// All subsets of the barred alphabet with the given cardinality, ordered.
pub fn bar_subsets(k: usize, i: usize) -> Vec<BTreeSet<u32>> {
    crate::posets::subsets_of_size(k, i)
        .into_iter()
        .map(|s| s.into_iter().map(|m| m as u32).collect())
        .collect()
}

/// The union `JSP_{k,i}` over all i-element bar subsets.
pub fn enumerate_jsp_level(k: usize, i: usize) -> Result<Vec<Word>, PermError> {
    let mut out = Vec::new();
    for s in bar_subsets(k, i) {
        out.extend(enumerate_jsp(k, &s)?);
    }
    Ok(out)
}

/// Brute-force oracle: all distinct multiset permutations of `M_{k,S}`
/// filtered by the Stirling property. Exponentially slower than the
/// insertion engine; for tests only.
pub fn enumerate_jsp_bruteforce(
    k: usize,
    removed_bars: &BTreeSet<u32>,
) -> Result<Vec<Word>, PermError> {
    if k > 4 {
        return Err(PermError::TooLarge { k, limit: 4 });
    }
    let mut pool: Vec<(Letter, usize)> = mks_blocks(k, removed_bars);
    let total: usize = pool.iter().map(|&(_, c)| c).sum();
    let mut cur = Vec::with_capacity(total);
    let mut out = Vec::new();
    fn go(
        pool: &mut Vec<(Letter, usize)>,
        cur: &mut Vec<Letter>,
        total: usize,
        out: &mut Vec<Word>,
    ) {
        if cur.len() == total {
            let w = Word::new(cur.clone());
            if w.is_stirling() {
                out.push(w);
            }
            return;
        }
        for idx in 0..pool.len() {
            if pool[idx].1 == 0 {
                continue;
            }
            pool[idx].1 -= 1;
            cur.push(pool[idx].0);
            go(pool, cur, total, out);
            cur.pop();
            pool[idx].1 += 1;
        }
    }
    go(&mut pool, &mut cur, total, &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Descent tables
// ---------------------------------------------------------------------------

fn histogram_poly(words: &[Word], order: DescentOrder) -> IntPoly {
    let mut hist: Vec<BigInt> = Vec::new();
    for w in words {
        let j = w.descents(order) + 1;
        if hist.len() <= j {
            hist.resize(j + 1, BigInt::zero());
        }
        hist[j] += 1;
    }
    IntPoly::new(hist)
}

/// `a'_{k,i,j}`: Jacobi-Stirling permutations in `JSP_{k,i}` with j-1
/// descents, returned as polynomials indexed `[k][i]`.
pub fn a_table_enum(k_max: usize) -> Result<Vec<Vec<IntPoly>>, PermError> {
    if k_max > 5 {
        return Err(PermError::TooLarge { k: k_max, limit: 5 });
    }
    let mut table = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut row = Vec::with_capacity(k + 1);
        for i in 0..=k {
            if k == 0 {
                row.push(IntPoly::one());
            } else {
                row.push(histogram_poly(&enumerate_jsp_level(k, i)?, DescentOrder::Jacobi));
            }
        }
        table.push(row);
    }
    Ok(table)
}

/// `b_{k,j}`: Legendre-Stirling permutations of the full `M_k` with j-1
/// Legendre descents, one polynomial per k.
pub fn b_table_enum(k_max: usize) -> Result<Vec<IntPoly>, PermError> {
    if k_max > 4 {
        return Err(PermError::TooLarge { k: k_max, limit: 4 });
    }
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        if k == 0 {
            out.push(IntPoly::one());
        } else {
            let words = enumerate_jsp(k, &BTreeSet::new())?;
            out.push(histogram_poly(&words, DescentOrder::Legendre));
        }
    }
    Ok(out)
}

/// The Jacobi-to-Legendre transform `sum_i (1-t)^i A_{k,i}(t)`, which
/// equals the alternating sum `sum_{i,l} (-1)^l binom(i,l) a_{k,i,j-l}`
/// coefficient-wise.
pub fn js_to_ls_transform(a_row: &[IntPoly]) -> IntPoly {
    let mut out = IntPoly::zero();
    for (i, a) in a_row.iter().enumerate() {
        out = out.add(&one_minus_t_pow(i).mul(a));
    }
    out
}

// ---------------------------------------------------------------------------
// The bijection phi: L(R_{k,S}) -> JSP of M_k minus the bars of S
// ---------------------------------------------------------------------------

fn natural_keys(word: &[u32]) -> Vec<u64> {
    word.iter().map(|&l| l as u64).collect()
}

fn phi_rec(k: usize, s: &BTreeSet<usize>, ext: &[u32]) -> Vec<Letter> {
    if k == 0 {
        return Vec::new();
    }
    let top = 3 * k as u32;
    debug_assert_eq!(ext.last(), Some(&top));
    let pos_b = ext.iter().position(|&l| l == top - 1).expect("3k-1 present");
    // pi' = ext minus {3k, 3k-1}; 3k is last, so every element before 3k-1
    // survives and the slot index of 3k-1 in pi' is its position in ext
    let mut pi_prime: Vec<u32> = ext[..ext.len() - 1].to_vec();
    pi_prime.remove(pos_b);
    let gap_s = pos_b;

    if !s.contains(&k) {
        let pos_a = pi_prime.iter().position(|&l| l == top - 2).expect("3k-2 present");
        let pi_second = remove_at(&pi_prime, pos_a, 1);
        let w2 = phi_rec(k - 1, s, &pi_second);

        let (ty_r, r) = slot_ordinal(&natural_keys(&pi_second), pos_a, &[]);
        let w2_word = Word::new(w2.clone());
        let g1 = gap_for_ordinal(&w2_word.keys(DescentOrder::Jacobi), ty_r, r, &[]);
        let w1 = insert_at(&w2, g1, &[Letter::barred(k as u32)]);

        let (ty_s, so) = slot_ordinal(&natural_keys(&pi_prime), gap_s, &[]);
        let w1_word = Word::new(w1.clone());
        let g2 = gap_for_ordinal(&w1_word.keys(DescentOrder::Jacobi), ty_s, so, &[]);
        insert_at(&w1, g2, &[Letter::plain(k as u32); 2])
    } else {
        let mut s_rest = s.clone();
        s_rest.remove(&k);
        let w1 = phi_rec(k - 1, &s_rest, &pi_prime);
        let (ty_s, so) = slot_ordinal(&natural_keys(&pi_prime), gap_s, &[]);
        let w1_word = Word::new(w1.clone());
        let g = gap_for_ordinal(&w1_word.keys(DescentOrder::Jacobi), ty_s, so, &[]);
        insert_at(&w1, g, &[Letter::plain(k as u32); 2])
    }
}

/// Maps a linear extension of `R_{k,S}` to a Jacobi-Stirling permutation of
/// the multiset with the bars of S removed; preserves the descent count.
pub fn phi(k: usize, s: &BTreeSet<usize>, ext: &LinearExtension) -> Result<Word, PermError> {
    let poset = build_r(k, s).map_err(|_| PermError::InvalidSubset { k })?;
    if !poset.is_linear_extension(&ext.word) {
        return Err(PermError::NotAnExtension);
    }
    Ok(Word::new(phi_rec(k, s, &ext.word)))
}

/// Checks shape and Stirling property, returning k and the removed bars.
pub fn classify_word(w: &Word) -> Result<(usize, BTreeSet<u32>), PermError> {
    let k = w.letters.iter().map(|l| l.value).max().unwrap_or(0) as usize;
    let mut plain = vec![0usize; k + 1];
    let mut bars = vec![0usize; k + 1];
    for l in &w.letters {
        if l.barred {
            bars[l.value as usize] += 1;
        } else {
            plain[l.value as usize] += 1;
        }
    }
    let mut removed = BTreeSet::new();
    for v in 1..=k {
        if plain[v] != 2 {
            return Err(PermError::BadWord(format!("value {v} appears {} times unbarred", plain[v])));
        }
        match bars[v] {
            0 => {
                removed.insert(v as u32);
            }
            1 => {}
            n => return Err(PermError::BadWord(format!("value {v} appears {n} times barred"))),
        }
    }
    if !w.is_stirling() {
        return Err(PermError::NotAStirlingWord);
    }
    Ok((k, removed))
}

fn phi_inv_rec(k: usize, letters: &[Letter]) -> Vec<u32> {
    if k == 0 {
        return Vec::new();
    }
    let kv = k as u32;
    let p1 = letters
        .iter()
        .position(|l| *l == Letter::plain(kv))
        .expect("kk block present");
    debug_assert_eq!(letters[p1 + 1], Letter::plain(kv));
    let w1 = remove_at(letters, p1, 2);
    let gap_s = p1;
    let (ty_s, so) = slot_ordinal(&Word::new(w1.clone()).keys(DescentOrder::Jacobi), gap_s, &[]);

    let bar_pos = w1.iter().position(|l| *l == Letter::barred(kv));
    let top = 3 * kv;
    match bar_pos {
        Some(pb) => {
            let w2 = remove_at(&w1, pb, 1);
            let (ty_r, r) =
                slot_ordinal(&Word::new(w2.clone()).keys(DescentOrder::Jacobi), pb, &[]);
            let pi_second = phi_inv_rec(k - 1, &w2);
            let g1 = gap_for_ordinal(&natural_keys(&pi_second), ty_r, r, &[]);
            let pi_prime = insert_at(&pi_second, g1, &[top - 2]);
            let g2 = gap_for_ordinal(&natural_keys(&pi_prime), ty_s, so, &[]);
            let mut ext = insert_at(&pi_prime, g2, &[top - 1]);
            ext.push(top);
            ext
        }
        None => {
            let pi_prime = phi_inv_rec(k - 1, &w1);
            let g = gap_for_ordinal(&natural_keys(&pi_prime), ty_s, so, &[]);
            let mut ext = insert_at(&pi_prime, g, &[top - 1]);
            ext.push(top);
            ext
        }
    }
}

/// Inverse of `phi`; recovers k and S from the word itself.
pub fn phi_inverse(w: &Word) -> Result<(usize, BTreeSet<usize>, LinearExtension), PermError> {
    let (k, removed) = classify_word(w)?;
    let s: BTreeSet<usize> = removed.iter().map(|&v| v as usize).collect();
    let word = phi_inv_rec(k, &w.letters);
    Ok((k, s, LinearExtension { word }))
}

// ---------------------------------------------------------------------------
// The bijection psi: Legendre-Stirling permutations of M_k -> L(P_k)
// ---------------------------------------------------------------------------

/// Step b of psi inserts 3k-2, which is *not* maximal in the extension
/// word, so slot bookkeeping on the image side goes by the effect of the
/// insertion on the descent count, not by the slot's raw type. The slots
/// of `keys` (excluding the final slot after 3k-1 and the reserved slot
/// immediately before 3k) split into descent-preserving and
/// descent-incrementing ones; within each class the ordinary slots (whose
/// raw type agrees with their effect) come first in position order,
/// followed by the exceptional ones (the gap right after 3k, which looks
/// like a descent slot but splits a descent, and the gap right before
/// 3k-1, which looks like a non-descent slot but absorbs the new letter).
fn step_b_image_slots(keys: &[u64], reserved: usize, v: u64) -> (Vec<usize>, Vec<usize>) {
    let m = keys.len();
    let (mut pres, mut pres_extra, mut inc, mut inc_extra) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for g in 0..m {
        if g == reserved {
            continue;
        }
        let old = g > 0 && keys[g - 1] > keys[g];
        let new = usize::from(g > 0 && keys[g - 1] > v) + usize::from(v > keys[g]);
        let preserving = new == usize::from(old);
        match (preserving, slot_is_descent(keys, g)) {
            (true, true) => pres.push(g),
            (true, false) => pres_extra.push(g),
            (false, false) => inc.push(g),
            (false, true) => inc_extra.push(g),
        }
    }
    pres.extend(pres_extra);
    inc.extend(inc_extra);
    (pres, inc)
}

/// The matching slot lists on the word side: the kk block may go into any
/// slot of `pi_b`; descent slots (including the final one) preserve the
/// Legendre descent count, non-descent slots other than the reserved slot
/// right before the bar increment it.
fn step_b_domain_slots(keys: &[u64], reserved: usize) -> (Vec<usize>, Vec<usize>) {
    let descents = (0..=keys.len())
        .filter(|&g| g != reserved && slot_is_descent(keys, g))
        .collect();
    let others = (0..=keys.len())
        .filter(|&g| g != reserved && !slot_is_descent(keys, g))
        .collect();
    (descents, others)
}

fn psi_rec(k: usize, letters: &[Letter]) -> Vec<u32> {
    if k == 0 {
        return Vec::new();
    }
    let kv = k as u32;
    let top = 3 * kv;
    let p1 = letters
        .iter()
        .position(|l| *l == Letter::plain(kv))
        .expect("kk block present");
    let pi_b = remove_at(letters, p1, 2);
    let gap_b = p1;
    let bar_idx = pi_b
        .iter()
        .position(|l| *l == Letter::barred(kv))
        .expect("bar present in full multiset");
    let special = gap_b == bar_idx; // kk sat immediately before the bar
    let step_b = if special {
        None
    } else {
        let keys = Word::new(pi_b.clone()).keys(DescentOrder::Legendre);
        let (descents, others) = step_b_domain_slots(&keys, bar_idx);
        Some(match descents.iter().position(|&g| g == gap_b) {
            Some(s) => (true, s),
            None => (false, others.iter().position(|&g| g == gap_b).expect("slot")),
        })
    };

    let pi_second = remove_at(&pi_b, bar_idx, 1);
    let (ty_r, r) = slot_ordinal(
        &Word::new(pi_second.clone()).keys(DescentOrder::Legendre),
        bar_idx,
        &[],
    );

    let mut psi1 = psi_rec(k - 1, &pi_second);
    psi1.push(top - 1);
    // the slot after 3k-1 stays forbidden for both insertions below
    let g_top = gap_for_ordinal(&natural_keys(&psi1), ty_r, r, &[psi1.len()]);
    let psi2 = insert_at(&psi1, g_top, &[top]);
    let top_idx = g_top;

    let g_c = match step_b {
        None => top_idx, // immediately before 3k
        Some((preserving, idx)) => {
            let (pres, inc) = step_b_image_slots(&natural_keys(&psi2), top_idx, (top - 2) as u64);
            if preserving {
                pres[idx]
            } else {
                inc[idx]
            }
        }
    };
    insert_at(&psi2, g_c, &[top - 2])
}

/// Maps a Legendre-Stirling permutation of the full `M_k` to a linear
/// extension of `P_k`; the extension has exactly one more descent than the
/// word has Legendre descents.
pub fn psi(w: &Word) -> Result<LinearExtension, PermError> {
    let (k, removed) = classify_word(w)?;
    if !removed.is_empty() {
        return Err(PermError::BadWord(format!(
            "Legendre-Stirling permutations need the full multiset; missing bars {removed:?}"
        )));
    }
    Ok(LinearExtension { word: psi_rec(k, &w.letters) })
}

fn psi_inv_rec(k: usize, ext: &[u32]) -> Vec<Letter> {
    if k == 0 {
        return Vec::new();
    }
    let kv = k as u32;
    let top = 3 * kv;
    let idx_c = ext.iter().position(|&l| l == top - 2).expect("3k-2 present");
    let psi2 = remove_at(ext, idx_c, 1);
    let top_idx = psi2.iter().position(|&l| l == top).expect("3k present");
    let special = idx_c == top_idx;
    let step_b = if special {
        None
    } else {
        let (pres, inc) = step_b_image_slots(&natural_keys(&psi2), top_idx, (top - 2) as u64);
        Some(match pres.iter().position(|&g| g == idx_c) {
            Some(s) => (true, s),
            None => (false, inc.iter().position(|&g| g == idx_c).expect("slot")),
        })
    };

    let psi1 = remove_at(&psi2, top_idx, 1);
    let (ty_r, r) = slot_ordinal(&natural_keys(&psi1), top_idx, &[psi1.len()]);
    debug_assert_eq!(psi1.last(), Some(&(top - 1)));
    let e_second = &psi1[..psi1.len() - 1];

    let w2 = psi_inv_rec(k - 1, e_second);
    let g1 = gap_for_ordinal(&Word::new(w2.clone()).keys(DescentOrder::Legendre), ty_r, r, &[]);
    let pi_b = insert_at(&w2, g1, &[Letter::barred(kv)]);
    let bar_idx = g1;

    let g_b = match step_b {
        None => bar_idx,
        Some((preserving, idx)) => {
            let keys = Word::new(pi_b.clone()).keys(DescentOrder::Legendre);
            let (descents, others) = step_b_domain_slots(&keys, bar_idx);
            if preserving {
                descents[idx]
            } else {
                others[idx]
            }
        }
    };
    insert_at(&pi_b, g_b, &[Letter::plain(kv); 2])
}

/// Inverse of `psi`.
pub fn psi_inverse(ext: &LinearExtension) -> Result<Word, PermError> {
    let n = ext.word.len();
    if n % 3 != 0 {
        return Err(PermError::NotAnExtension);
    }
    let k = n / 3;
    if k > 0 {
        let poset = crate::posets::build_p_legendre(k);
        if !poset.is_linear_extension(&ext.word) {
            return Err(PermError::NotAnExtension);
        }
    }
    Ok(Word::new(psi_inv_rec(k, &ext.word)))
}

// ---------------------------------------------------------------------------
// Pattern deletion (the inclusion-exclusion side of Egge's theorem)
// ---------------------------------------------------------------------------

/// True if no barred letter immediately follows an unbarred copy of its own
/// value.
pub fn is_pattern_free(w: &Word) -> bool {
    w.letters.windows(2).all(|p| {
        !(p[1].barred && !p[0].barred && p[0].value == p[1].value)
    })
}

/// Removes every barred letter that immediately follows an unbarred copy of
/// its value.
pub fn delete_bar_patterns(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if l.barred {
            if let Some(&prev) = out.last() {
                if !prev.barred && prev.value == l.value {
                    continue;
                }
            }
        }
        out.push(l);
    }
    Word::new(out)
}

/// Inserts each missing barred letter immediately after the second unbarred
/// copy of its value.
pub fn insert_missing_bars(w: &Word) -> Result<Word, PermError> {
    let (_, removed) = classify_word(w)?;
    let mut out = w.letters.clone();
    for &v in &removed {
        let mut seen = 0;
        let mut at = out.len();
        for (idx, l) in out.iter().enumerate() {
            if !l.barred && l.value == v {
                seen += 1;
                if seen == 2 {
                    at = idx + 1;
                    break;
                }
            }
        }
        out.insert(at, Letter::barred(v));
    }
    Ok(Word::new(out))
}
