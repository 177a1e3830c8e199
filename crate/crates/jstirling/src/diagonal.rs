//! Diagonal Jacobi-Stirling polynomials and their descent polynomials.
//!
//! `JS(n+k,n;z)`, viewed as a polynomial in n, splits into z-coefficients
//! `p_{k,i}(n)`; these are computed exactly by iterating
//! `p_{k,i}(n) - p_{k,i}(n-1) = n^2 p_{k-1,i}(n) + n p_{k-1,i-1}(n)`
//! with discrete summation, the constant fixed by `p_{k,i}(0) = 0`. The
//! descent polynomials `A_{k,i}(t)` with
//! `sum_n p_{k,i}(n) t^n = A_{k,i}(t)/(1-t)^{3k-i+1}` come out of either the
//! generating-function numerator transform or a direct coefficient
//! recurrence; the two routes are checked against each other in tests.

use crate::exactpoly::{self, discrete_sum, gf_numerator, ExactPolyError, IntPoly, RatPoly};
use crate::jsnumbers::{build_triangle, Kind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagonalError {
    /// The summation route and the triangle route disagree; this signals an
    /// implementation bug, never bad input.
    #[error("cross-check failure for {what} at k={k}, i={i}, n={n}: {lhs} != {rhs}")]
    CrossCheckFailure {
        what: &'static str,
        k: usize,
        i: usize,
        n: i64,
        lhs: BigRational,
        rhs: BigRational,
    },
    #[error(transparent)]
    Poly(#[from] ExactPolyError),
}

/// The family `p_{k,i}(n)` (second kind) or `q_{k,i}(n)` (first kind),
/// indexed by i = 0..=k.
#[derive(Debug, Clone)]
pub struct DiagonalPoly {
    pub k: usize,
    pub coeffs_by_i: Vec<RatPoly>,
}

impl DiagonalPoly {
    pub fn coeff_poly(&self, i: usize) -> &RatPoly {
        &self.coeffs_by_i[i]
    }
}

fn rational(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// All diagonal families for k = 0..=k_max, without the triangle
/// cross-check; shared by both public entry points and the table builders.
fn diagonal_families(k_max: usize) -> Vec<Vec<RatPoly>> {
    let mut fams: Vec<Vec<RatPoly>> = vec![vec![RatPoly::one()]];
    let n_sq = RatPoly::identity().mul(&RatPoly::identity());
    for k in 1..=k_max {
        let prev = &fams[k - 1];
        let mut cur = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut rhs = RatPoly::zero();
            if i < k {
                rhs = rhs.add(&n_sq.mul(&prev[i]));
            }
            if i >= 1 && i - 1 < k {
                rhs = rhs.add(&RatPoly::identity().mul(&prev[i - 1]));
            }
            cur.push(discrete_sum(&rhs));
        }
        fams.push(cur);
    }
    fams
}

/// `p_{k,i}(n)` for all i, cross-checked against z-coefficients extracted
/// from the second-kind triangle `JS(n+k,n;z)` at n = 1..k+3.
pub fn diagonal_second(k: usize) -> Result<DiagonalPoly, DiagonalError> {
    let coeffs_by_i = diagonal_families(k).pop().unwrap();
    let tri = build_triangle(Kind::Second, 2 * k + 3);
    for n in 1..=(k as i64 + 3) {
        let entry = tri.entry(n as usize + k, n as usize).unwrap();
        for i in 0..=k {
            let lhs = coeffs_by_i[i].eval_int(n);
            let rhs = BigRational::from(entry.coeff(i));
            if lhs != rhs {
                return Err(DiagonalError::CrossCheckFailure {
                    what: "p_{k,i} vs JS triangle",
                    k,
                    i,
                    n,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(DiagonalPoly { k, coeffs_by_i })
}

/// `q_{k,i}(n) = (-1)^i p_{k,i}(-n)`, cross-checked against the first-kind
/// triangle `js(n,n-k;z)` at n = k..k+4.
pub fn diagonal_first(k: usize) -> Result<DiagonalPoly, DiagonalError> {
    let p = diagonal_families(k).pop().unwrap();
    let coeffs_by_i: Vec<RatPoly> = p
        .iter()
        .enumerate()
        .map(|(i, pi)| {
            let q = pi.compose_neg();
            if i % 2 == 1 {
                q.scale(&rational(-1))
            } else {
                q
            }
        })
        .collect();
    let tri = build_triangle(Kind::First, k + 4);
    for n in k as i64..=(k as i64 + 4) {
        let entry = tri.entry(n as usize, n as usize - k).unwrap();
        for i in 0..=k {
            let lhs = coeffs_by_i[i].eval_int(n);
            let rhs = BigRational::from(entry.coeff(i));
            if lhs != rhs {
                return Err(DiagonalError::CrossCheckFailure {
                    what: "q_{k,i} vs js triangle",
                    k,
                    i,
                    n,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(DiagonalPoly { k, coeffs_by_i })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GfTransform,
    Recurrence,
}

/// Table of descent polynomials `A_{k,i}(t)` for 0 <= i <= k <= k_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTable {
    pub k_max: usize,
    pub method: Method,
    /// a[k][i]
    a: Vec<Vec<IntPoly>>,
}

impl DescentTable {
    pub fn poly(&self, k: usize, i: usize) -> &IntPoly {
        &self.a[k][i]
    }

    /// `a_{k,i,j}`, zero outside the stored range.
    pub fn coeff(&self, k: usize, i: usize, j: usize) -> BigInt {
        self.a[k][i].coeff(j)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &IntPoly)> {
        self.a
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(i, p)| (k, i, p)))
    }

    /// Equality of the polynomials regardless of the producing method.
    pub fn same_polys(&self, other: &DescentTable) -> bool {
        self.a == other.a
    }
}

/// `A_{k,i}(t) = (1-t)^{3k-i+1} sum_n p_{k,i}(n) t^n` via the numerator
/// transform.
pub fn descent_table_gf(k_max: usize) -> Result<DescentTable, DiagonalError> {
    let fams = diagonal_families(k_max);
    let mut a = Vec::with_capacity(k_max + 1);
    for (k, fam) in fams.iter().enumerate() {
        let mut row = Vec::with_capacity(k + 1);
        for (i, p) in fam.iter().enumerate() {
            row.push(gf_numerator(p, 3 * k - i)?);
        }
        a.push(row);
    }
    Ok(DescentTable { k_max, method: Method::GfTransform, a })
}

/// Signed-index lookup helper for the coefficient recurrence.
fn rec_get(a: &[Vec<Vec<BigInt>>], k: i64, i: i64, j: i64) -> BigInt {
    if k < 0 || i < 0 || j < 0 {
        return BigInt::zero();
    }
    let (k, i, j) = (k as usize, i as usize, j as usize);
    if i >= a[k].len() || j >= a[k][i].len() {
        return BigInt::zero();
    }
    a[k][i][j].clone()
}

/// The same table by the five-term coefficient recurrence, starting from
/// `a_{0,0,0} = 1` with zero boundary conditions.
pub fn descent_table_rec(k_max: usize) -> DescentTable {
    let mut a: Vec<Vec<Vec<BigInt>>> = vec![vec![vec![BigInt::from(1)]]];
    for k in 1..=k_max as i64 {
        let mut row: Vec<Vec<BigInt>> = Vec::with_capacity(k as usize + 1);
        for i in 0..=k {
            let width = 2 * k - i; // valid j range is 1..=2k-i
            let mut coeffs = vec![BigInt::zero(); width as usize + 1];
            for j in 1..=width {
                let m = 3 * k - i; // 3k - i
                let v = BigInt::from(j * j) * rec_get(&a, k - 1, i, j)
                    + BigInt::from(2 * (j - 1) * (m - j - 1) + (m - 2))
                        * rec_get(&a, k - 1, i, j - 1)
                    + BigInt::from((m - j) * (m - j)) * rec_get(&a, k - 1, i, j - 2)
                    + BigInt::from(j) * rec_get(&a, k - 1, i - 1, j)
                    + BigInt::from(m - j) * rec_get(&a, k - 1, i - 1, j - 1);
                coeffs[j as usize] = v;
            }
            row.push(coeffs);
        }
        a.push(row);
    }
    DescentTable {
        k_max,
        method: Method::Recurrence,
        a: a.into_iter().map(|row| row.into_iter().map(IntPoly::new).collect()).collect(),
    }
}

/// First-kind reversal: checks that the numerator of
/// `sum_{n>=1} q_{k,i}(n) t^n` over `(1-t)^{3k-i+1}` equals `(-1)^k` times
/// the reversal `j -> a_{k,i,3k-i+1-j}` of `A_{k,i}(t)`.
pub fn first_kind_gf_check(k: usize, i: usize) -> Result<bool, DiagonalError> {
    assert!(i <= k);
    let d = 3 * k - i;
    let q = diagonal_first(k)?;
    let qi = q.coeff_poly(i);
    let mut num = gf_numerator(qi, d)?;
    // the series starts at n = 1, so drop the n = 0 term of the transform
    let q0 = qi.eval_int(0);
    if !q0.is_zero() {
        num = num.sub(&exactpoly::one_minus_t_pow(d + 1).scale(&q0.to_integer()));
    }
    let a = descent_table_gf(k)?;
    let mut rev = a.poly(k, i).reversal(d + 1);
    if k % 2 == 1 {
        rev = rev.neg();
    }
    Ok(num == rev)
}

/// Leading coefficient `1/(3^{k-i} 2^i i! (k-i)!)` of `p_{k,i}`.
pub fn expected_leading(k: usize, i: usize) -> BigRational {
    let denom = BigInt::from(3u32).pow((k - i) as u32)
        * BigInt::from(2u32).pow(i as u32)
        * exactpoly::factorial(i as u64)
        * exactpoly::factorial((k - i) as u64);
    BigRational::new(BigInt::from(1), denom)
}

/// `A_{k,i}(1) = (3k-i)!/(3^{k-i} 2^i i! (k-i)!)`.
pub fn row_sum_closed_form(k: usize, i: usize) -> BigInt {
    let num = exactpoly::factorial((3 * k - i) as u64);
    let denom = BigInt::from(3u32).pow((k - i) as u32)
        * BigInt::from(2u32).pow(i as u32)
        * exactpoly::factorial(i as u64)
        * exactpoly::factorial((k - i) as u64);
    num / denom
}

/// Brute-force oracle for `f_k(n;z)` as a polynomial in z: the sum of
/// `j_1(z+j_1) ... j_k(z+j_k)` over monotone tuples `1<=j_1<=...<=j_k<=n`.
/// Test-only helper, intentionally independent of the recurrences.
pub fn f_k_oracle(k: usize, n: u32) -> IntPoly {
    fn go(k: usize, lo: u32, n: u32, acc: &IntPoly, out: &mut IntPoly) {
        if k == 0 {
            *out = out.add(acc);
            return;
        }
        for j in lo..=n {
            let factor = IntPoly::new(vec![BigInt::from(j as u64 * j as u64), BigInt::from(j)]);
            go(k - 1, j, n, &acc.mul(&factor), out);
        }
    }
    let mut out = IntPoly::zero();
    go(k, 1, n, &IntPoly::one(), &mut out);
    out
}
