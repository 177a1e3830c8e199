//! Exact Sturm-chain certificates: every descent polynomial A_{k,i}(t)
//! for 0 <= i <= k <= 9 has only real roots, hence a unimodal (indeed
//! log-concave) coefficient sequence.
//!
//! Run with: cargo run --example real_rootedness

use jstirling::diagonal::descent_table_rec;
use jstirling::exactpoly::{is_real_rooted, is_unimodal, real_root_count, squarefree_part};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let k_max = 9;
    let table = descent_table_rec(k_max);
    let mut certified = 0usize;
    for k in 0..=k_max {
        for i in 0..=k {
            let p = table.poly(k, i);
            assert!(is_real_rooted(p).unwrap(), "A_{{{k},{i}}} not real-rooted");
            assert!(is_unimodal(&p.coeffs()[p.valuation()..]));
            certified += 1;
        }
    }
    println!("certified {certified} polynomials A_{{k,i}}, 0 <= i <= k <= {k_max}: all real-rooted");

    // locate the roots of A_{3,0} by counting sign variations on intervals
    let p = table.poly(3, 0);
    println!("\nA_{{3,0}} = {p}");
    let sf = squarefree_part(&p.shift_down(p.valuation())).unwrap();
    let rat = |n: i64| BigRational::from(BigInt::from(n));
    for (lo, hi) in [(-16, -4), (-4, -1), (-1, 0)] {
        let c = real_root_count(&sf, &rat(lo), &rat(hi)).unwrap();
        println!("  distinct real roots in ({lo}, {hi}]: {c}");
    }
    println!("  (plus the root at t = 0 removed by deflation)");
}
