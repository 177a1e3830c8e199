//! Jacobi-Stirling permutations by block insertion, their two descent
//! statistics, and the inclusion-exclusion bridge to Legendre-Stirling
//! permutations: the transform sum_i (1-t)^i A_{k,i}(t) equals the
//! Legendre descent histogram b_k(t), bijectively realized by deleting
//! each barred letter sitting right after its own second copy.
//!
//! Run with: cargo run --example word_statistics

use jstirling::permutations::{
    a_table_enum, b_table_enum, delete_bar_patterns, enumerate_jsp, insert_missing_bars,
    is_pattern_free, js_to_ls_transform, DescentOrder,
};
use std::collections::BTreeSet;

fn main() {
    let words = enumerate_jsp(2, &BTreeSet::new()).unwrap();
    println!("first Jacobi-Stirling permutations of M_2 ({} total):", words.len());
    for w in words.iter().take(8) {
        println!(
            "  {w}   des_jacobi={} des_legendre={} pattern-free={}",
            w.descents(DescentOrder::Jacobi),
            w.descents(DescentOrder::Legendre),
            is_pattern_free(w),
        );
    }

    let a = a_table_enum(3).unwrap();
    let b = b_table_enum(3).unwrap();
    println!("\ndescent histograms and the Jacobi-to-Legendre transform:");
    for k in 0..=3usize {
        for (i, p) in a[k].iter().enumerate() {
            println!("  A_{{{k},{i}}} = {p}");
        }
        println!("  sum_i (1-t)^i A_{{{k},i}} = {}  (b_{k} = {})", js_to_ls_transform(&a[k]), b[k]);
    }

    println!("\npattern deletion on a word with the pattern 2 2':");
    let w = jstirling::Word::parse("1 2 2 2' 1 1'").unwrap();
    let free = delete_bar_patterns(&w);
    println!("  {w} -> {free}, re-inserted: {}", insert_missing_bars(&free).unwrap());
}
