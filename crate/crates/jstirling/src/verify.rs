//! Cross-method verification suites.
//!
//! Every suite runs a battery of independent cross-checks (recurrence vs
//! generating function vs enumeration vs poset counting) and returns a
//! machine-readable report instead of panicking, so the same checks back
//! both the test suite and the command-line `verify` subcommand.

use crate::diagonal::{
    self, descent_table_gf, descent_table_rec, diagonal_first, diagonal_second,
};
use crate::exactpoly::{binomial, is_real_rooted, is_unimodal, IntPoly};
use crate::jsnumbers::{build_triangle, verify_defining_identity, Kind};
use crate::permutations::{
    a_table_enum, b_table_enum, bar_subsets, enumerate_jsp, js_to_ls_transform, phi, phi_inverse,
    psi, psi_inverse, DescentOrder,
};
use crate::posets::{
    a_s_at_one, build_p_legendre, build_r, count_linext_level, count_linext_partition_form,
    subsets_of_size, word_descents, LabeledPoset,
};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub id: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        VerifyReport { suite: suite.to_string(), cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + fmt::Debug>(&mut self, id: &str, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                id: id.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn check_true(&mut self, id: &str, ok: bool) {
        self.check(id, true, ok);
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Diagonal,
    Posets,
    Bijections,
    Egge,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Identities => "identities",
            Suite::Diagonal => "diagonal",
            Suite::Posets => "posets",
            Suite::Bijections => "bijections",
            Suite::Egge => "egge",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> VerifyReport {
    match suite {
        Suite::Identities => suite_identities(),
        Suite::Diagonal => suite_diagonal(),
        Suite::Posets => suite_posets(seed),
        Suite::Bijections => suite_bijections(),
        Suite::Egge => suite_egge(),
        Suite::All => {
            let mut r = VerifyReport::new("all");
            r.absorb(suite_identities());
            r.absorb(suite_diagonal());
            r.absorb(suite_posets(seed));
            r.absorb(suite_bijections());
            r.absorb(suite_egge());
            r
        }
    }
}

// ---------------------------------------------------------------------------
// Suite: triangle identities and specializations
// ---------------------------------------------------------------------------

fn suite_identities() -> VerifyReport {
    let mut r = VerifyReport::new("identities");
    let n_max = 10;
    let second = build_triangle(Kind::Second, n_max);
    let first = build_triangle(Kind::First, n_max);

    for n in 0..=n_max {
        r.check_true(
            &format!("defining-identity/second/n={n}"),
            verify_defining_identity(Kind::Second, n).unwrap(),
        );
        r.check_true(
            &format!("defining-identity/first/n={n}"),
            verify_defining_identity(Kind::First, n).unwrap(),
        );
    }

    // leading z-coefficients follow the classical Stirling recurrences
    // (k = n is the trivial boundary column, so stop at k = n-1)
    for n in 2..=n_max {
        for k in 1..n {
            let lhs = second.stirling2(n, k).unwrap();
            let rhs = second.stirling2(n - 1, k - 1).unwrap()
                + BigInt::from(k) * second.stirling2(n - 1, k).unwrap();
            r.check(&format!("stirling2-recurrence/n={n},k={k}"), lhs, rhs);

            let lhs = first.stirling1(n, k).unwrap();
            let rhs = first.stirling1(n - 1, k - 1).unwrap()
                - BigInt::from(n - 1) * first.stirling1(n - 1, k).unwrap();
            r.check(&format!("stirling1-recurrence/n={n},k={k}"), lhs, rhs);
        }
    }

    // constant terms are central factorial numbers T(2n,2k)
    for n in 2..=n_max {
        for k in 1..n {
            let lhs = second.central_t(n, k).unwrap();
            let rhs = second.central_t(n - 1, k - 1).unwrap()
                + BigInt::from(k * k) * second.central_t(n - 1, k).unwrap();
            r.check(&format!("central-t-recurrence/n={n},k={k}"), lhs, rhs);
        }
    }

    // z = 1 specializes to Legendre-Stirling numbers
    let ls_known: &[(usize, usize, i64)] =
        &[(1, 1, 1), (2, 1, 2), (2, 2, 1), (3, 1, 4), (3, 2, 8), (3, 3, 1), (4, 2, 52)];
    for &(n, k, v) in ls_known {
        r.check(
            &format!("legendre-stirling/n={n},k={k}"),
            BigInt::from(v),
            second.legendre_stirling(n, k).unwrap(),
        );
    }

    // the two kinds are inverse triangles: sum_j JS(n,j) js(j,k) = [n=k]
    for n in 0..=8usize {
        for k in 0..=n {
            let mut acc = IntPoly::zero();
            for j in k..=n {
                acc = acc.add(&second.entry(n, j).unwrap().mul(first.entry(j, k).unwrap()));
            }
            let expected = if n == k { IntPoly::one() } else { IntPoly::zero() };
            r.check(&format!("inverse-triangles/n={n},k={k}"), expected, acc);
        }
    }

    r
}

// ---------------------------------------------------------------------------
// Suite: diagonal polynomials and descent tables
// ---------------------------------------------------------------------------

fn suite_diagonal() -> VerifyReport {
    let mut r = VerifyReport::new("diagonal");
    let k_max = 8;

    // diagonal_second / diagonal_first carry their own cross-checks against
    // the triangles and fail loudly, so a successful build is a case
    for k in 0..=6usize {
        r.check_true(&format!("diagonal-second/k={k}"), diagonal_second(k).is_ok());
        r.check_true(&format!("diagonal-first/k={k}"), diagonal_first(k).is_ok());
    }

    let gf = descent_table_gf(k_max).unwrap();
    let rec = descent_table_rec(k_max);
    r.check_true("gf-vs-recurrence/k<=8", gf.same_polys(&rec));

    for k in 0..=6usize {
        let d = diagonal_second(k).unwrap();
        for i in 0..=k {
            r.check(
                &format!("leading-coefficient/k={k},i={i}"),
                diagonal::expected_leading(k, i),
                d.coeff_poly(i).leading().cloned().unwrap(),
            );
        }
    }

    for k in 0..=k_max {
        for i in 0..=k {
            let sum: BigInt = rec.poly(k, i).coeffs().iter().sum();
            r.check(
                &format!("row-sum/k={k},i={i}"),
                diagonal::row_sum_closed_form(k, i),
                sum,
            );
            let p = rec.poly(k, i);
            r.check_true(
                &format!("support-and-positivity/k={k},i={i}"),
                p.coeffs().iter().all(|c| c >= &BigInt::zero())
                    && (k == 0 || p.valuation() == 1)
                    && p.degree() == Some(if k == 0 { 0 } else { 2 * k - i }),
            );
        }
    }

    for k in 0..=6usize {
        for i in 0..=k {
            r.check_true(
                &format!("first-kind-gf/k={k},i={i}"),
                diagonal::first_kind_gf_check(k, i).unwrap(),
            );
        }
    }

    // independent brute-force oracle for f_k(n;z)
    for k in 0..=4usize {
        let d = diagonal_second(k).unwrap();
        for n in 0..=4u32 {
            let mut evald = Vec::with_capacity(k + 1);
            for i in 0..=k {
                evald.push(d.coeff_poly(i).eval_int(n as i64).to_integer());
            }
            let expected = diagonal::f_k_oracle(k, n);
            r.check(
                &format!("fk-oracle/k={k},n={n}"),
                expected,
                IntPoly::new(evald),
            );
        }
    }

    r
}

// ---------------------------------------------------------------------------
// Suite: posets (descent polynomials, counting formulas, order polynomials)
// ---------------------------------------------------------------------------

fn suite_posets(seed: u64) -> VerifyReport {
    let mut r = VerifyReport::new("posets");
    let rec = descent_table_rec(4);

    // descent polynomial of R_{k,S} matches the Jacobi descent histogram of
    // the corresponding word family, and the level sums match A_{k,i}
    // (k = 0 is skipped: the empty poset's descent polynomial is t by the
    // des+1 convention while A_{0,0} = 1)
    for k in 1..=3usize {
        for i in 0..=k {
            let mut level = IntPoly::zero();
            for s in subsets_of_size(k, i) {
                let poset = build_r(k, &s).unwrap();
                let dp = poset.descent_polynomial().unwrap();
                let bars: std::collections::BTreeSet<u32> =
                    s.iter().map(|&m| m as u32).collect();
                let mut hist = vec![BigInt::zero(); 1];
                for w in enumerate_jsp(k, &bars).unwrap() {
                    let j = if k == 0 { 0 } else { w.descents(DescentOrder::Jacobi) + 1 };
                    if hist.len() <= j {
                        hist.resize(j + 1, BigInt::zero());
                    }
                    hist[j] += 1;
                }
                r.check(
                    &format!("descent-poly-vs-words/k={k},S={s:?}"),
                    IntPoly::new(hist),
                    dp.clone(),
                );
                let total: BigInt = dp.coeffs().iter().sum();
                r.check(&format!("ext-count-product-formula/k={k},S={s:?}"), a_s_at_one(k, &s), total);
                level = level.add(&dp);
            }
            r.check(
                &format!("level-sum-vs-a/k={k},i={i}"),
                rec.poly(k, i).clone(),
                level,
            );
        }
    }

    // the large extension count for R_{4,emptyset}, counted three ways
    let empty = std::collections::BTreeSet::new();
    let r4 = build_r(4, &empty).unwrap();
    let counted = BigInt::from(r4.linear_extensions().unwrap().count());
    r.check("r4-count/iterator-vs-product", a_s_at_one(4, &empty), counted);
    for k in 0..=8usize {
        for i in 0..=k {
            r.check(
                &format!("level-count-vs-partition-form/k={k},i={i}"),
                count_linext_level(k, i),
                count_linext_partition_form(k, i),
            );
        }
    }

    // order polynomial of P_k interpolates Legendre-Stirling numbers
    let tri = build_triangle(Kind::Second, 8);
    for k in 1..=2usize {
        let p = build_p_legendre(k);
        for n in 1..=5u32 {
            r.check(
                &format!("omega-pk-vs-ls/k={k},n={n}"),
                tri.legendre_stirling(n as usize - 1 + k, n as usize - 1).unwrap(),
                p.order_polynomial_value(n).unwrap(),
            );
        }
    }

    // Stanley's identity on random labeled posets: the order polynomial
    // series equals descent_polynomial / (1-t)^{p+1} up to order 10
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = 10u32;
    for case in 0..200 {
        let poset = random_poset(&mut rng);
        let p = poset.len();
        let dp = poset.descent_polynomial().unwrap();
        let mut ok = true;
        for n in 0..=order {
            let lhs = poset.order_polynomial_value(n).unwrap();
            let mut rhs = BigInt::zero();
            for (j, c) in dp.coeffs().iter().enumerate() {
                if j as u32 <= n {
                    rhs += c * binomial((n - j as u32) as u64 + p as u64, p as u64);
                }
            }
            if lhs != rhs {
                ok = false;
            }
        }
        r.check_true(&format!("stanley-random/case={case},size={p}"), ok);
    }

    r
}

/// A random labeled poset on at most 7 elements: random comparabilities on
/// positions, transitively closed, with labels shuffled independently.
fn random_poset(rng: &mut ChaCha8Rng) -> LabeledPoset {
    let n: usize = rng.gen_range(1..=7);
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            rel[i][j] = rng.gen_bool(0.45);
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][m] && rel[m][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] && !(0..n).any(|m| rel[i][m] && rel[m][j]) {
                covers.push((labels[i], labels[j]));
            }
        }
    }
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    LabeledPoset::new(&sorted, &covers).expect("random poset is valid")
}

// ---------------------------------------------------------------------------
// Suite: the two bijections, exhaustively for k <= 3
// ---------------------------------------------------------------------------

fn suite_bijections() -> VerifyReport {
    let mut r = VerifyReport::new("bijections");

    for k in 0..=3usize {
        for i in 0..=k {
            for s in subsets_of_size(k, i) {
                let poset = build_r(k, &s).unwrap();
                let bars: std::collections::BTreeSet<u32> =
                    s.iter().map(|&m| m as u32).collect();
                let mut expected: Vec<_> = enumerate_jsp(k, &bars).unwrap();
                expected.sort();
                let mut images = Vec::new();
                let mut descents_ok = true;
                let mut roundtrip_ok = true;
                for ext in poset.linear_extensions().unwrap() {
                    let w = phi(k, &s, &ext).unwrap();
                    if w.descents(DescentOrder::Jacobi) != word_descents(&ext.word) {
                        descents_ok = false;
                    }
                    match phi_inverse(&w) {
                        Ok((k2, s2, back)) => {
                            if (k2, &s2, &back) != (k, &s, &ext) {
                                roundtrip_ok = false;
                            }
                        }
                        Err(_) => roundtrip_ok = false,
                    }
                    images.push(w);
                }
                images.sort();
                r.check(&format!("phi-image/k={k},S={s:?}"), expected, images);
                r.check_true(&format!("phi-descents/k={k},S={s:?}"), descents_ok);
                r.check_true(&format!("phi-roundtrip/k={k},S={s:?}"), roundtrip_ok);
            }
        }
    }

    for k in 1..=3usize {
        let words = enumerate_jsp(k, &std::collections::BTreeSet::new()).unwrap();
        let poset = build_p_legendre(k);
        let mut expected: Vec<Vec<u32>> =
            poset.linear_extensions().unwrap().map(|e| e.word).collect();
        expected.sort();
        let mut images = Vec::new();
        let mut shift_ok = true;
        let mut roundtrip_ok = true;
        for w in &words {
            let ext = psi(w).unwrap();
            if word_descents(&ext.word) != w.descents(DescentOrder::Legendre) + 1 {
                shift_ok = false;
            }
            if psi_inverse(&ext).map(|b| b == *w) != Ok(true) {
                roundtrip_ok = false;
            }
            images.push(ext.word);
        }
        images.sort();
        r.check(&format!("psi-image/k={k}"), expected, images);
        r.check_true(&format!("psi-descent-shift/k={k}"), shift_ok);
        r.check_true(&format!("psi-roundtrip/k={k}"), roundtrip_ok);
    }

    r
}

// ---------------------------------------------------------------------------
// Suite: the Jacobi-to-Legendre transform and its bijective proofs
// ---------------------------------------------------------------------------

fn suite_egge() -> VerifyReport {
    let mut r = VerifyReport::new("egge");
    let a = a_table_enum(4).unwrap();
    let b = b_table_enum(4).unwrap();
    let rec = descent_table_rec(4);

    for k in 0..=4usize {
        r.check(
            &format!("transform-enum/k={k}"),
            b[k].clone(),
            js_to_ls_transform(&a[k]),
        );
        let row: Vec<IntPoly> = (0..=k).map(|i| rec.poly(k, i).clone()).collect();
        r.check(
            &format!("transform-recurrence/k={k}"),
            b[k].clone(),
            js_to_ls_transform(&row),
        );
    }

    // the descent polynomial of P_k is t * b_k(t): psi shifts descents by one
    for k in 1..=3usize {
        let dp = build_p_legendre(k).descent_polynomial().unwrap();
        r.check(
            &format!("pk-descent-poly/k={k}"),
            b[k].mul(&IntPoly::from_i64(&[0, 1])),
            dp,
        );
    }

    // pattern deletion: pattern-free Jacobi words are counted by b_k
    for k in 0..=3usize {
        let mut hist: Vec<BigInt> = vec![BigInt::zero()];
        for i in 0..=k {
            for s in bar_subsets(k, i) {
                for w in enumerate_jsp(k, &s).unwrap() {
                    if !crate::permutations::is_pattern_free(&w) {
                        continue;
                    }
                    let j = if k == 0 { 0 } else { w.descents(DescentOrder::Jacobi) + 1 };
                    if hist.len() <= j {
                        hist.resize(j + 1, BigInt::zero());
                    }
                    hist[j] += 1;
                }
            }
        }
        r.check(&format!("pattern-free-count/k={k}"), b[k].clone(), IntPoly::new(hist));
    }

    r
}

// ---------------------------------------------------------------------------
// The real-rootedness conjecture
// ---------------------------------------------------------------------------

pub const CONJECTURE_K_DEFAULT: usize = 9;

/// Checks that every `A_{k,i}` for `0 <= i <= k <= k_max` is real-rooted
/// (and, as a corollary of what real-rootedness implies, unimodal).
pub fn check_conjecture(k_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("conjecture");
    let table = descent_table_rec(k_max);
    for k in 0..=k_max {
        for i in 0..=k {
            let p = table.poly(k, i);
            r.check_true(
                &format!("real-rooted/k={k},i={i}"),
                is_real_rooted(p).unwrap(),
            );
            r.check_true(
                &format!("unimodal/k={k},i={i}"),
                is_unimodal(&p.coeffs()[p.valuation()..]),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_suite_passes() {
        let r = run_suite(Suite::Identities, 1);
        assert!(r.passed(), "failures: {:?}", r.failures);
        assert!(r.cases > 50);
    }

    #[test]
    fn diagonal_suite_passes() {
        let r = run_suite(Suite::Diagonal, 1);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn posets_suite_passes() {
        let r = run_suite(Suite::Posets, 20260823);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn posets_suite_is_seed_deterministic() {
        let a = run_suite(Suite::Posets, 7);
        let b = run_suite(Suite::Posets, 7);
        assert_eq!(a.cases, b.cases);
        assert!(a.passed() && b.passed());
    }

    #[test]
    fn bijections_suite_passes() {
        let r = run_suite(Suite::Bijections, 1);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn egge_suite_passes() {
        let r = run_suite(Suite::Egge, 1);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn conjecture_small() {
        let r = check_conjecture(5);
        assert!(r.passed(), "failures: {:?}", r.failures);
        assert_eq!(r.cases, 2 * (1 + 2 + 3 + 4 + 5 + 6));
    }

    #[test]
    fn report_serializes() {
        let r = run_suite(Suite::Egge, 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"suite\":\"egge\""));
    }
}
