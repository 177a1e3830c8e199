use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ratpoly(coeffs: &[(i64, i64)]) -> RatPoly {
    RatPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
}

/// n(n+1)/2
fn triangular() -> RatPoly {
    ratpoly(&[(0, 1), (1, 2), (1, 2)])
}

/// n(n+1)(2n+1)/6
fn square_pyramidal() -> RatPoly {
    ratpoly(&[(0, 1), (1, 6), (1, 2), (1, 3)])
}

#[test]
fn mul_difference_of_squares() {
    let a = IntPoly::from_i64(&[1, 1]);
    let b = IntPoly::from_i64(&[1, -1]);
    assert_eq!(a.mul(&b), IntPoly::from_i64(&[1, 0, -1]));
}

#[test]
fn mul_zero_annihilates() {
    let p = IntPoly::from_i64(&[0, 1, 1]);
    assert_eq!(IntPoly::zero().mul(&p), IntPoly::zero());
}

#[test]
fn mul_identity() {
    let p = IntPoly::from_i64(&[0, 1, 1]);
    assert_eq!(p.mul(&IntPoly::one()), p);
}

#[test]
fn eval_examples() {
    assert_eq!(triangular().eval_int(3), rat(6, 1));
    assert_eq!(RatPoly::zero().eval_int(17), rat(0, 1));
    assert_eq!(square_pyramidal().eval_int(-1), rat(0, 1));
}

#[test]
fn discrete_sum_examples() {
    // sum of squares
    let sq = ratpoly(&[(0, 1), (0, 1), (1, 1)]);
    assert_eq!(discrete_sum(&sq), square_pyramidal());
    // sum of ones
    assert_eq!(discrete_sum(&RatPoly::one()), RatPoly::identity());
    // hockey stick: sum of triangular numbers = n(n+1)(n+2)/6
    let tetra = ratpoly(&[(0, 1), (1, 3), (1, 2), (1, 6)]);
    assert_eq!(discrete_sum(&triangular()), tetra);
}

#[test]
fn discrete_sum_difference_identity() {
    let p = ratpoly(&[(3, 2), (-1, 3), (0, 1), (5, 7), (1, 1)]);
    let s = discrete_sum(&p);
    assert_eq!(s.eval_int(0), rat(0, 1));
    for n in 1..=50 {
        assert_eq!(s.eval_int(n) - s.eval_int(n - 1), p.eval_int(n));
    }
    assert_eq!(s.degree(), Some(p.degree().unwrap() + 1));
}

#[test]
fn gf_numerator_examples() {
    // sum_{n>=0} n(n+1)(2n+1)/6 t^n = (t+t^2)/(1-t)^4
    assert_eq!(
        gf_numerator(&square_pyramidal(), 3).unwrap(),
        IntPoly::from_i64(&[0, 1, 1])
    );
    assert_eq!(
        gf_numerator(&triangular(), 2).unwrap(),
        IntPoly::from_i64(&[0, 1])
    );
    // p = n(n+1)(n+2)(12n^2+9n-1)/120, coefficients sum to 12: the number of
    // linear extensions of the poset on {2,3,4,5,6} with 3>2 and 6>3,4,5
    let p = ratpoly(&[(0, 1), (1, 3), (1, 2), (1, 6)])
        .mul(&ratpoly(&[(-1, 20), (9, 20), (12, 20)]));
    let a = gf_numerator(&p, 5).unwrap();
    let total: BigInt = a.coeffs().iter().sum();
    assert_eq!(total, BigInt::from(12));
    assert_eq!(a, IntPoly::from_i64(&[0, 1, 7, 4]));
}

#[test]
fn gf_numerator_rejects_degree_overflow() {
    assert!(matches!(
        gf_numerator(&triangular(), 1),
        Err(ExactPolyError::DegreeExceedsBound { .. })
    ));
}

#[test]
fn gf_numerator_rejects_non_integer() {
    // p(n) = n/2 is not integer-valued with the wrong bound arithmetic
    let p = ratpoly(&[(0, 1), (1, 2)]);
    assert!(matches!(
        gf_numerator(&p, 1),
        Err(ExactPolyError::NonIntegerCoefficient { .. })
    ));
}

/// Series round-trip: expanding A(t)/(1-t)^{d+1} reproduces p.
fn gf_round_trip(p: &RatPoly, d: usize) {
    let a = gf_numerator(p, d).unwrap();
    for n in 0..=(d as i64 + 5) {
        // coefficient of t^n in A(t) * sum_m binom(m+d, d) t^m
        let mut c = BigInt::from(0);
        for (j, aj) in a.coeffs().iter().enumerate() {
            if (j as i64) <= n {
                c += aj * binomial((n - j as i64) as u64 + d as u64, d as u64);
            }
        }
        assert_eq!(BigRational::from(c), p.eval_int(n), "mismatch at n={n}");
    }
}

#[test]
fn gf_round_trip_examples() {
    gf_round_trip(&square_pyramidal(), 3);
    gf_round_trip(&square_pyramidal(), 6);
    gf_round_trip(&triangular(), 2);
    gf_round_trip(&RatPoly::one(), 0);
}

#[test]
fn real_root_count_examples() {
    let lo = rat(-10, 1);
    let hi = rat(10, 1);
    let p = IntPoly::from_i64(&[0, 1, 1]); // roots 0, -1
    assert_eq!(real_root_count(&p, &lo, &hi).unwrap(), 2);
    let q = IntPoly::from_i64(&[1, 0, 1]); // no real roots
    assert_eq!(real_root_count(&q, &lo, &hi).unwrap(), 0);
    let a20 = IntPoly::from_i64(&[0, 1, 14, 21, 4]);
    let sf = squarefree_part(&a20.shift_down(1)).unwrap();
    assert_eq!(real_root_count(&sf, &rat(-100, 1), &rat(100, 1)).unwrap(), 3);
    assert!(is_real_rooted(&a20).unwrap());
}

#[test]
fn real_root_count_half_open() {
    let p = IntPoly::from_i64(&[0, 1]); // root at 0
    assert_eq!(real_root_count(&p, &rat(-1, 1), &rat(0, 1)).unwrap(), 1);
    assert_eq!(real_root_count(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 0);
}

#[test]
fn real_root_count_rejects_zero_poly() {
    assert!(matches!(
        real_root_count(&IntPoly::zero(), &rat(0, 1), &rat(1, 1)),
        Err(ExactPolyError::ZeroPolynomial)
    ));
}

#[test]
fn is_real_rooted_examples() {
    assert!(is_real_rooted(&IntPoly::from_i64(&[0, 1, 1])).unwrap());
    assert!(!is_real_rooted(&IntPoly::from_i64(&[1, 1, 1])).unwrap());
    assert!(is_real_rooted(&IntPoly::from_i64(&[0, 2, 12, 6])).unwrap());
    // repeated roots: (t+1)^2 (t-2)^3
    let p = IntPoly::from_i64(&[1, 2, 1]).mul(&IntPoly::from_i64(&[-8, 12, -6, 1]));
    assert!(is_real_rooted(&p).unwrap());
    // (t^2+1)^2 has no real roots at all
    let q = IntPoly::from_i64(&[1, 0, 1]).mul(&IntPoly::from_i64(&[1, 0, 1]));
    assert!(!is_real_rooted(&q).unwrap());
}

#[test]
fn pochhammer_identity() {
    // sum_{s=0}^{k-1} (a)_s/s! = (a+1)_{k-1}/(k-1)! at a = 2/3
    let a = rat(2, 3);
    for k in 1usize..=20 {
        let mut lhs = BigRational::from(BigInt::from(0));
        for s in 0..k {
            lhs += pochhammer(&a, s) / BigRational::from(factorial(s as u64));
        }
        let rhs = pochhammer(&(&a + BigRational::from(BigInt::from(1))), k - 1)
            / BigRational::from(factorial(k as u64 - 1));
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn json_round_trip() {
    let p = IntPoly::from_i64(&[0, 1, 1]);
    let v = p.to_json("t");
    assert_eq!(v["var"], "t");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "1", "1"]));
    assert_eq!(IntPoly::from_json(&v).unwrap(), p);
}

#[test]
fn display_ascending() {
    assert_eq!(IntPoly::from_i64(&[0, 1, 14, 21, 4]).to_string(), "t+14t^2+21t^3+4t^4");
    assert_eq!(IntPoly::from_i64(&[-1, -1]).display_with_var('z'), "-1-z");
    assert_eq!(IntPoly::from_i64(&[5, 3]).display_with_var('z'), "5+3z");
    assert_eq!(IntPoly::zero().to_string(), "0");
    assert_eq!(IntPoly::from_i64(&[0, -1]).to_string(), "-t");
}

#[test]
fn unimodal_check() {
    let to = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert!(is_unimodal(&to(&[1, 14, 21, 4])));
    assert!(is_unimodal(&to(&[1])));
    assert!(is_unimodal(&to(&[3, 3, 3])));
    assert!(!is_unimodal(&to(&[1, 5, 2, 7])));
}

proptest! {
    /// discrete_sum inverts the forward difference on random polynomials.
    #[test]
    fn prop_discrete_sum_difference(coeffs in prop::collection::vec((-20i64..20, 1i64..6), 0..6)) {
        let p = RatPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect());
        let s = discrete_sum(&p);
        prop_assert_eq!(s.eval_int(0), rat(0, 1));
        for n in 1..=20 {
            prop_assert_eq!(s.eval_int(n) - s.eval_int(n - 1), p.eval_int(n));
        }
    }

    /// gf numerator round-trips for integer-valued polynomials built in the
    /// binomial basis, including slack in the degree bound.
    #[test]
    fn prop_gf_round_trip(cs in prop::collection::vec(-9i64..10, 1..5), slack in 0usize..3) {
        let mut p = RatPoly::zero();
        for (j, &c) in cs.iter().enumerate() {
            p = p.add(&{
                let mut b = RatPoly::one();
                for l in 0..j as i64 {
                    b = b.mul(&RatPoly::new(vec![rat(-l, 1), rat(1, 1)]));
                }
                b.scale(&(rat(c, 1) / BigRational::from(factorial(j as u64))))
            });
        }
        let d = p.degree().unwrap_or(0) + slack;
        gf_round_trip(&p, d);
    }

    /// Root counting is invariant under scaling by a positive constant.
    #[test]
    fn prop_root_count_scale_invariant(coeffs in prop::collection::vec(-9i64..10, 1..7), c in 1i64..50) {
        let p = IntPoly::new(coeffs.iter().map(|&x| BigInt::from(x)).collect());
        prop_assume!(!p.is_zero());
        let lo = rat(-30, 1);
        let hi = rat(30, 1);
        let scaled = p.scale(&BigInt::from(c));
        prop_assert_eq!(
            real_root_count(&p, &lo, &hi).unwrap(),
            real_root_count(&scaled, &lo, &hi).unwrap()
        );
    }
}
