//! The Jacobi-Stirling posets R_{k,S} and the Legendre-Stirling poset P_k:
//! linear extensions, descent polynomials, the product formula for the
//! extension count, and the truncated Stanley identity relating the order
//! polynomial to the descent polynomial.
//!
//! Run with: cargo run --example poset_extensions

use jstirling::exactpoly::binomial;
use jstirling::posets::{a_s_at_one, build_p_legendre, build_r, word_descents};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;

fn main() {
    let s: BTreeSet<usize> = [1].into_iter().collect();
    let poset = build_r(2, &s).unwrap();
    println!("R_{{2,{{1}}}}: labels {:?}, covers {:?}", poset.labels(), poset.covers());
    println!("linear extensions (label words, with descent counts):");
    for ext in poset.linear_extensions().unwrap() {
        println!(
            "  {}  des={}",
            ext.word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(""),
            word_descents(&ext.word)
        );
    }
    let dp = poset.descent_polynomial().unwrap();
    println!("descent polynomial: {dp}");
    println!("extension count via product formula: {}", a_s_at_one(2, &s));

    let p2 = build_p_legendre(2);
    println!("\nP_2: labels {:?}, covers {:?}", p2.labels(), p2.covers());
    let dp2 = p2.descent_polynomial().unwrap();
    println!("descent polynomial: {dp2}");

    // Stanley: sum_n Omega(n) t^n = descent_polynomial / (1-t)^{p+1}
    println!("\ntruncated Stanley identity for P_2 (order polynomial vs series):");
    let p = p2.len();
    for n in 0..=6u32 {
        let omega = p2.order_polynomial_value(n).unwrap();
        let mut series = BigInt::zero();
        for (j, c) in dp2.coeffs().iter().enumerate() {
            if j as u32 <= n {
                series += c * binomial((n - j as u32) as u64 + p as u64, p as u64);
            }
        }
        println!("  n={n}: Omega={omega} series={series} match={}", omega == series);
    }
}
