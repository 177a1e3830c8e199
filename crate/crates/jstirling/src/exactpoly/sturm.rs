//! Exact real-root counting via Sturm chains over the integers.
//!
//! The chain is computed with signed pseudo-remainders, stripping the
//! content after every step so coefficients stay small even for the
//! degree-18 polynomials that show up at k = 9.

use super::{ExactPolyError, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Pseudo-remainder of `a` by `b`, normalized so that it equals the true
/// remainder `a mod b` times a positive constant.
fn signed_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut mult_sign = 1i8;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        // lb * r - lr * x^{dr-db} * b  kills the leading term
        r = r.scale(&lb).sub(&b.mul(&IntPoly::monomial(lr, dr - db)));
        mult_sign *= sign(&lb);
    }
    if mult_sign < 0 {
        r = r.neg();
    }
    r
}

/// Sturm chain of the primitive part of `p`.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.primitive_part()];
    let d = p.derivative();
    if !d.is_zero() {
        chain.push(d.primitive_part());
    }
    while chain.last().unwrap().degree().unwrap_or(0) > 0 {
        let n = chain.len();
        let r = signed_pseudo_rem(&chain[n - 2], &chain[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r.primitive_part());
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_rational(x: &BigRational) -> i8 {
    sign(x.numer())
}

fn variations_at(chain: &[IntPoly], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| sign_rational(&p.eval_rational(x))))
}

/// Sign variations at +infinity (`positive = true`) or -infinity.
fn variations_at_inf(chain: &[IntPoly], positive: bool) -> usize {
    variations(chain.iter().map(|p| match p.degree() {
        None => 0,
        Some(d) => {
            let s = sign(p.leading().unwrap());
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

/// Exact number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`.
pub fn real_root_count(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<usize, ExactPolyError> {
    if p.is_zero() {
        return Err(ExactPolyError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(ExactPolyError::EmptyInterval);
    }
    let chain = sturm_chain(p);
    // zero-skipping variation counts make the interval half-open on the right
    Ok(variations_at(&chain, lo) - variations_at(&chain, hi))
}

/// Distinct real roots of `p` over the whole real line.
pub fn distinct_real_root_count(p: &IntPoly) -> Result<usize, ExactPolyError> {
    if p.is_zero() {
        return Err(ExactPolyError::ZeroPolynomial);
    }
    let chain = sturm_chain(p);
    Ok(variations_at_inf(&chain, false) - variations_at_inf(&chain, true))
}

fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    while !b.is_zero() {
        let r = signed_pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// Exact quotient `a / b`; panics if the division is not exact over the
/// rationals or the quotient is not integral (it always is for a primitive
/// divisor of a, by Gauss's lemma).
fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("division by zero polynomial");
    let mut rem = a.to_rat();
    let lb = BigRational::from(b.leading().unwrap().clone());
    let mut q = vec![BigRational::zero(); a.coeffs().len().saturating_sub(db)];
    while let Some(dr) = rem.degree() {
        if dr < db {
            break;
        }
        let c = rem.leading().unwrap() / &lb;
        q[dr - db] = c.clone();
        let mut sub = vec![BigRational::zero(); dr - db];
        sub.push(c);
        rem = rem.sub(&super::RatPoly::new(sub).mul(&b.to_rat()));
    }
    assert!(rem.is_zero(), "exact_div: division was not exact");
    let q = super::RatPoly::new(q);
    q.to_int().expect("exact_div: non-integral quotient")
}

/// Squarefree part `p / gcd(p, p')`, up to a constant factor.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly, ExactPolyError> {
    if p.is_zero() {
        return Err(ExactPolyError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(p.clone());
    }
    let g = gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return Ok(p.primitive_part());
    }
    Ok(exact_div(&p.primitive_part(), &g).primitive_part())
}

/// True iff every complex root of `p` is real, decided exactly.
///
/// The known factor `t^m` is deflated first; the rest is reduced to its
/// squarefree part, whose distinct real roots are counted by a Sturm chain
/// and compared against its degree.
pub fn is_real_rooted(p: &IntPoly) -> Result<bool, ExactPolyError> {
    if p.is_zero() {
        return Err(ExactPolyError::ZeroPolynomial);
    }
    let q = p.shift_down(p.valuation());
    match q.degree() {
        None | Some(0) => return Ok(true),
        _ => {}
    }
    let sf = squarefree_part(&q)?;
    let d = sf.degree().unwrap();
    Ok(distinct_real_root_count(&sf)? == d)
}
