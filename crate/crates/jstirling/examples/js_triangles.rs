//! Build both Jacobi-Stirling triangles and show their classical
//! specializations: Stirling numbers (leading z-coefficients), central
//! factorial numbers (constant terms), and Legendre-Stirling numbers (z=1).
//!
//! Run with: cargo run --example js_triangles

use jstirling::jsnumbers::{build_triangle, verify_defining_identity, Kind};

fn main() {
    let n_max = 6;
    let second = build_triangle(Kind::Second, n_max);
    let first = build_triangle(Kind::First, n_max);

    println!("JS(n,k;z), second kind:");
    for n in 0..=n_max {
        let row: Vec<String> = (0..=n)
            .map(|k| second.entry(n, k).unwrap().display_with_var('z'))
            .collect();
        println!("  n={n}:  {}", row.join("  |  "));
    }

    println!("\njs(n,k;z), first kind:");
    for n in 0..=4 {
        let row: Vec<String> = (0..=n)
            .map(|k| first.entry(n, k).unwrap().display_with_var('z'))
            .collect();
        println!("  n={n}:  {}", row.join("  |  "));
    }

    println!("\nSpecializations at n=5:");
    for k in 1..=5 {
        println!(
            "  k={k}: S(5,{k}) = {}, T(10,{}) = {}, LS(5,{k}) = {}",
            second.stirling2(5, k).unwrap(),
            2 * k,
            second.central_t(5, k).unwrap(),
            second.legendre_stirling(5, k).unwrap(),
        );
    }

    println!("\nDefining identity x^n = sum_k JS(n,k;z) prod_i (x - i(z+i)):");
    for n in 0..=8 {
        println!(
            "  n={n}: second {}  first {}",
            verify_defining_identity(Kind::Second, n).unwrap(),
            verify_defining_identity(Kind::First, n).unwrap(),
        );
    }
}
