//! The diagonal polynomials p_{k,i}(n) of JS(n+k,n;z) and their descent
//! generating polynomials A_{k,i}(t), computed two independent ways: by the
//! generating-function transform of the interpolated diagonal, and by the
//! five-term coefficient recurrence. The two tables agree exactly.
//!
//! Run with: cargo run --example diagonal_descent

use jstirling::diagonal::{
    descent_table_gf, descent_table_rec, diagonal_first, diagonal_second, row_sum_closed_form,
};
use num_bigint::BigInt;

fn main() {
    println!("p_{{k,i}}(n) for k = 2 (rational coefficients, ascending):");
    let d2 = diagonal_second(2).unwrap();
    for i in 0..=2 {
        println!("  p_{{2,{i}}} = {}", d2.coeff_poly(i));
    }

    println!("\nq_{{k,i}}(n) = (-1)^i p_{{k,i}}(-n) interpolates the first kind:");
    let q2 = diagonal_first(2).unwrap();
    for i in 0..=2 {
        println!("  q_{{2,{i}}} = {}", q2.coeff_poly(i));
    }

    let gf = descent_table_gf(4).unwrap();
    let rec = descent_table_rec(4);
    println!("\nA_{{k,i}}(t) via gf transform (identical to the recurrence: {}):", gf.same_polys(&rec));
    for k in 0..=4usize {
        for i in 0..=k {
            let p = gf.poly(k, i);
            let sum: BigInt = p.coeffs().iter().sum();
            println!(
                "  A_{{{k},{i}}} = {p}   (A(1) = {sum}, closed form {})",
                row_sum_closed_form(k, i)
            );
        }
    }
}
