//! Triangles of Jacobi-Stirling numbers of both kinds, as exact polynomials
//! in the parameter z.
//!
//! The second kind satisfies `JS(n,k;z) = JS(n-1,k-1;z) + k(k+z) JS(n-1,k;z)`
//! and the first kind `js(n,k;z) = js(n-1,k-1;z) - (n-1)(n-1+z) js(n-1,k;z)`,
//! both with `JS(0,0;z) = 1` and zero outside `1 <= k <= n`. Specializing z
//! recovers classical triangles: the leading z-coefficient of `JS(n,k;z)` is
//! the Stirling number `S(n,k)`, the constant term is the central factorial
//! number `T(2n,2k)`, and `z = 1` gives the Legendre-Stirling numbers.

use crate::exactpoly::IntPoly;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JsError {
    #[error("entry ({n},{k}) out of range for triangle with n_max {n_max}")]
    IndexOutOfRange { n: usize, k: usize, n_max: usize },
    #[error("operation requires a {expected:?}-kind triangle")]
    WrongKind { expected: Kind },
    #[error("identity check limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Second,
    First,
}

/// Full triangle of Jacobi-Stirling numbers up to row `n_max`; each entry
/// is a polynomial in z.
#[derive(Debug, Clone)]
pub struct JSTriangle {
    kind: Kind,
    n_max: usize,
    /// entries[n][k] for 0 <= k <= n
    entries: Vec<Vec<IntPoly>>,
}

/// The factor multiplying the stay-in-column term of the recurrence:
/// `k(k+z)` for the second kind, `-(n-1)(n-1+z)` for the first.
fn recurrence_factor(kind: Kind, n: usize, k: usize) -> IntPoly {
    match kind {
        Kind::Second => {
            let k = BigInt::from(k);
            IntPoly::new(vec![&k * &k, k])
        }
        Kind::First => {
            let m = BigInt::from(n - 1);
            IntPoly::new(vec![-(&m * &m), -m])
        }
    }
}

pub fn build_triangle(kind: Kind, n_max: usize) -> JSTriangle {
    let mut entries: Vec<Vec<IntPoly>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let e = if n == 0 {
                IntPoly::one()
            } else if k == 0 {
                IntPoly::zero()
            } else {
                let prev: &Vec<IntPoly> = &entries[n - 1];
                let up_left = &prev[k - 1];
                let mut e = up_left.clone();
                if k <= n - 1 {
                    e = e.add(&recurrence_factor(kind, n, k).mul(&prev[k]));
                }
                e
            };
            row.push(e);
        }
        entries.push(row);
    }
    JSTriangle { kind, n_max, entries }
}

impl JSTriangle {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<&IntPoly, JsError> {
        if n > self.n_max || k > n {
            return Err(JsError::IndexOutOfRange { n, k, n_max: self.n_max });
        }
        Ok(&self.entries[n][k])
    }

    /// Leading z-coefficient of `JS(n,k;z)`: the Stirling number `S(n,k)`.
    pub fn stirling2(&self, n: usize, k: usize) -> Result<BigInt, JsError> {
        if self.kind != Kind::Second {
            return Err(JsError::WrongKind { expected: Kind::Second });
        }
        let e = self.entry(n, k)?;
        // degree in z is n-k; read that coefficient so internal zeros of the
        // triangle (k = 0 rows) report 0 rather than panic
        Ok(e.coeff(n - k))
    }

    /// Constant z-term of `JS(n,k;z)`: the central factorial number `T(2n,2k)`.
    pub fn central_t(&self, n: usize, k: usize) -> Result<BigInt, JsError> {
        if self.kind != Kind::Second {
            return Err(JsError::WrongKind { expected: Kind::Second });
        }
        Ok(self.entry(n, k)?.constant_term())
    }

    /// First-kind analogues of the two specializations above.
    pub fn stirling1(&self, n: usize, k: usize) -> Result<BigInt, JsError> {
        if self.kind != Kind::First {
            return Err(JsError::WrongKind { expected: Kind::First });
        }
        Ok(self.entry(n, k)?.coeff(n - k))
    }

    pub fn central_t1(&self, n: usize, k: usize) -> Result<BigInt, JsError> {
        if self.kind != Kind::First {
            return Err(JsError::WrongKind { expected: Kind::First });
        }
        Ok(self.entry(n, k)?.constant_term())
    }

    /// The entry evaluated at z = 1: Legendre-Stirling numbers of either kind.
    pub fn legendre_stirling(&self, n: usize, k: usize) -> Result<BigInt, JsError> {
        Ok(self.entry(n, k)?.eval(&BigInt::one()))
    }
}

/// Polynomial in x whose coefficients are polynomials in z; transient
/// structure for expanding the defining identities.
#[derive(Debug, Clone, PartialEq, Eq)]
struct XPoly(Vec<IntPoly>);

impl XPoly {
    fn one() -> Self {
        XPoly(vec![IntPoly::one()])
    }

    fn x_power(n: usize) -> Self {
        let mut v = vec![IntPoly::zero(); n + 1];
        v[n] = IntPoly::one();
        XPoly(v)
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(IntPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn add(&self, other: &XPoly) -> XPoly {
        let n = self.0.len().max(other.0.len());
        let zero = IntPoly::zero();
        XPoly(
            (0..n)
                .map(|j| {
                    self.0.get(j).unwrap_or(&zero).add(other.0.get(j).unwrap_or(&zero))
                })
                .collect(),
        )
        .trim()
    }

    /// Multiply by `x - c(z)`.
    fn mul_linear(&self, c: &IntPoly) -> XPoly {
        let mut out = vec![IntPoly::zero(); self.0.len() + 1];
        for (j, a) in self.0.iter().enumerate() {
            out[j + 1] = out[j + 1].add(a);
            out[j] = out[j].sub(&a.mul(c));
        }
        XPoly(out).trim()
    }

    fn scale(&self, c: &IntPoly) -> XPoly {
        XPoly(self.0.iter().map(|a| a.mul(c)).collect()).trim()
    }
}

/// `prod_{i=0}^{k-1} (x - i(z+i))` expanded in x with z-polynomial
/// coefficients.
fn falling_product(k: usize) -> XPoly {
    let mut p = XPoly::one();
    for i in 0..k as i64 {
        // i(z+i) = i^2 + i z
        let c = IntPoly::new(vec![BigInt::from(i * i), BigInt::from(i)]);
        p = p.mul_linear(&c);
    }
    p
}

pub const IDENTITY_N_LIMIT: usize = 12;

/// Symbolically verifies the defining identity at a given n:
/// `x^n = sum_k JS(n,k;z) prod_{i<k}(x-i(z+i))` for the second kind, and
/// `prod_{i<n}(x-i(z+i)) = sum_k js(n,k;z) x^k` for the first.
pub fn verify_defining_identity(kind: Kind, n: usize) -> Result<bool, JsError> {
    if n > IDENTITY_N_LIMIT {
        return Err(JsError::TooLarge { n, limit: IDENTITY_N_LIMIT });
    }
    let tri = build_triangle(kind, n);
    match kind {
        Kind::Second => {
            let mut rhs = XPoly(vec![]);
            for k in 0..=n {
                rhs = rhs.add(&falling_product(k).scale(&tri.entries[n][k]));
            }
            Ok(rhs == XPoly::x_power(n).trim())
        }
        Kind::First => {
            let mut rhs = XPoly(vec![]);
            for k in 0..=n {
                rhs = rhs.add(&XPoly::x_power(k).scale(&tri.entries[n][k]));
            }
            Ok(rhs == falling_product(n))
        }
    }
}
