//! Exact univariate polynomial arithmetic over the integers and rationals.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers
//! or rationals, and no floating point is used anywhere. Besides the basic
//! ring operations the module provides discrete summation (the inverse of
//! the forward difference), the numerator transform for rational generating
//! functions with denominator `(1-t)^{d+1}`, and Sturm-chain real-root
//! counting.

mod sturm;

pub use sturm::{is_real_rooted, real_root_count, squarefree_part};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactPolyError {
    /// The generating-function numerator transform produced a non-integer
    /// coefficient, which signals a wrong degree bound or a wrong polynomial.
    #[error("non-integer coefficient {coeff} at position {index} in gf numerator")]
    NonIntegerCoefficient { index: usize, coeff: BigRational },
    #[error("polynomial degree {degree} exceeds the stated bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be strictly below upper bound")]
    EmptyInterval,
    #[error("malformed polynomial JSON: {0}")]
    BadJson(String),
}

/// Dense univariate polynomial with integer coefficients, ascending degree.
///
/// Canonical form: the highest-index coefficient is nonzero, or the
/// coefficient vector is empty (the zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPoly::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero-extended beyond the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j) + other.coeff(j));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j) - other.coeff(j));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, c)| c * BigInt::from(j + 1))
                .collect(),
        )
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root at 0. Zero polynomial has valuation 0 by convention here.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divide by `x^m`; panics if the valuation is below `m`.
    pub fn shift_down(&self, m: usize) -> IntPoly {
        assert!(self.coeffs[..m.min(self.coeffs.len())]
            .iter()
            .all(Zero::is_zero));
        IntPoly::new(self.coeffs.iter().skip(m).cloned().collect())
    }

    /// The reversal `x^n p(1/x)`: coefficient of `x^j` becomes the input's
    /// coefficient of `x^{n-j}`. Requires `n >= deg p`.
    pub fn reversal(&self, n: usize) -> IntPoly {
        let mut out = vec![BigInt::zero(); n + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[n - j] = c.clone();
        }
        IntPoly::new(out)
    }

    /// `p(-x)`.
    pub fn compose_neg(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Gcd of the coefficients (positive), or zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Divide out the content; the leading coefficient keeps its sign.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// JSON form used by the CLI: `{"var":"t","coeffs":["0","1","1"]}`.
    pub fn to_json(&self, var: &str) -> serde_json::Value {
        serde_json::json!({
            "var": var,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<IntPoly, ExactPolyError> {
        let arr = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| ExactPolyError::BadJson("missing coeffs array".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let s = c
                .as_str()
                .ok_or_else(|| ExactPolyError::BadJson("coefficient not a string".into()))?;
            coeffs.push(
                s.parse::<BigInt>()
                    .map_err(|e| ExactPolyError::BadJson(format!("bad integer {s:?}: {e}")))?,
            );
        }
        Ok(IntPoly::new(coeffs))
    }
}

fn fmt_poly<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    coeffs: impl Iterator<Item = (usize, C)>,
    is_neg: impl Fn(&C) -> bool,
    abs: impl Fn(&C) -> String,
    is_one: impl Fn(&C) -> bool,
    var: char,
) -> fmt::Result {
    let mut first = true;
    for (j, c) in coeffs {
        let neg = is_neg(&c);
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        let a = abs(&c);
        match j {
            0 => write!(f, "{a}")?,
            _ => {
                if !is_one(&c) {
                    write!(f, "{a}")?;
                }
                if j == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{j}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Ascending-degree rendering with `t` as the variable, e.g. `t+14t^2+21t^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(
            f,
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()),
            |c| c.is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
            't',
        )
    }
}

impl IntPoly {
    /// Same rendering as `Display` but with a chosen variable letter.
    pub fn display_with_var(&self, var: char) -> String {
        struct D<'a>(&'a IntPoly, char);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_poly(
                    f,
                    self.0.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()),
                    |c| c.is_negative(),
                    |c| c.abs().to_string(),
                    |c| c.abs().is_one(),
                    self.1,
                )
            }
        }
        D(self, var).to_string()
    }
}

/// Dense univariate polynomial with rational coefficients, ascending degree.
///
/// `BigRational` keeps every entry in lowest terms with a positive
/// denominator, so canonical form only requires trimming the tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

/// Ascending-degree rendering with `n` as the variable (these polynomials
/// usually interpolate sequences), e.g. `1/6n+1/2n^2+1/3n^3`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(
            f,
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()),
            |c| c.numer().is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
            'n',
        )
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    /// `x` as a polynomial.
    pub fn identity() -> Self {
        RatPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&BigRational::from(BigInt::from(n)))
    }

    /// `p(-x)`.
    pub fn compose_neg(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact conversion to integer coefficients; `None` if any is fractional.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPoly::new(out))
    }
}

/// The polynomial `binom(x + shift, j)` of degree `j`.
fn binomial_poly(shift: i64, j: usize) -> RatPoly {
    // (x+shift)(x+shift-1)...(x+shift-j+1) / j!
    let mut p = RatPoly::one();
    for l in 0..j as i64 {
        let term = RatPoly::new(vec![
            BigRational::from(BigInt::from(shift - l)),
            BigRational::one(),
        ]);
        p = p.mul(&term);
    }
    let mut fact = BigInt::one();
    for l in 1..=j as u64 {
        fact *= l;
    }
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// Indefinite discrete sum: returns `S` with `S(n) = sum_{m=1}^{n} p(m)`
/// for every integer `n >= 0`, so in particular `S(0) = 0`.
///
/// Works through the binomial basis, where summation is an index shift:
/// `p(n) = sum_j d_j binom(n,j)` with `d_j` the forward differences of `p`
/// at 0, and `sum_{m=0}^{n} binom(m,j) = binom(n+1,j+1)`.
pub fn discrete_sum(p: &RatPoly) -> RatPoly {
    let Some(d) = p.degree() else {
        return RatPoly::zero();
    };
    // forward differences of p at 0..d
    let mut row: Vec<BigRational> = (0..=d as i64).map(|m| p.eval_int(m)).collect();
    let mut diffs = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut s = RatPoly::zero();
    for (j, dj) in diffs.iter().enumerate() {
        if dj.is_zero() {
            continue;
        }
        let mut term = binomial_poly(1, j + 1);
        if j == 0 {
            // subtract the m = 0 summand binom(0,0) = 1
            term = term.sub(&RatPoly::one());
        }
        s = s.add(&term.scale(dj));
    }
    s
}

/// Numerator of the rational generating function with denominator
/// `(1-t)^{d+1}`: returns `A(t) = (1-t)^{d+1} * sum_{n>=0} p(n) t^n`,
/// computed as `a_j = sum_{l=0}^{j} (-1)^l binom(d+1,l) p(j-l)` for
/// `j = 0..d`. Every `a_j` must come out an integer.
pub fn gf_numerator(p: &RatPoly, d: usize) -> Result<IntPoly, ExactPolyError> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(ExactPolyError::DegreeExceedsBound { degree: deg, bound: d });
        }
    }
    let vals: Vec<BigRational> = (0..=d as i64).map(|n| p.eval_int(n)).collect();
    // binomial coefficients binom(d+1, l), l = 0..=d
    let mut binoms = Vec::with_capacity(d + 1);
    let mut b = BigInt::one();
    for l in 0..=d {
        binoms.push(b.clone());
        b = &b * BigInt::from(d + 1 - l) / BigInt::from(l + 1);
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut a = BigRational::zero();
        for l in 0..=j {
            let term = BigRational::from(binoms[l].clone()) * &vals[j - l];
            if l % 2 == 0 {
                a += term;
            } else {
                a -= term;
            }
        }
        if !a.is_integer() {
            return Err(ExactPolyError::NonIntegerCoefficient { index: j, coeff: a });
        }
        coeffs.push(a.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

/// `(1-t)^e` as an integer polynomial.
pub fn one_minus_t_pow(e: usize) -> IntPoly {
    let base = IntPoly::from_i64(&[1, -1]);
    let mut acc = IntPoly::one();
    for _ in 0..e {
        acc = acc.mul(&base);
    }
    acc
}

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)` over exact rationals.
pub fn pochhammer(a: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    for l in 0..n as i64 {
        acc *= a + BigRational::from(BigInt::from(l));
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for l in 2..=n {
        acc *= l;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for l in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - l) / BigInt::from(l + 1);
    }
    acc
}

/// True if the nonzero entries of `seq` rise to a peak and then fall
/// (weakly on both sides).
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let vals: Vec<&BigInt> = seq.iter().collect();
    let mut i = 0;
    while i + 1 < vals.len() && vals[i] <= vals[i + 1] {
        i += 1;
    }
    while i + 1 < vals.len() && vals[i] >= vals[i + 1] {
        i += 1;
    }
    i + 1 >= vals.len()
}

#[cfg(test)]
mod tests;
