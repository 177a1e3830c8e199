//! The two slot-matching bijections: phi sends linear extensions of
//! R_{k,S} to Jacobi-Stirling permutations preserving the descent count;
//! psi sends Legendre-Stirling permutations to linear extensions of P_k,
//! shifting the descent count by one. Both are run on their worked
//! examples and then exhaustively round-tripped at k = 2.
//!
//! Run with: cargo run --example bijections

use jstirling::permutations::{enumerate_jsp, phi, phi_inverse, psi, psi_inverse, DescentOrder, Word};
use jstirling::posets::{build_p_legendre, build_r, word_descents, LinearExtension};
use std::collections::BTreeSet;

fn main() {
    // phi on a size-9 extension of R_{3,{2}}
    let s: BTreeSet<usize> = [2].into_iter().collect();
    let ext = LinearExtension { word: vec![2, 5, 1, 3, 7, 8, 6, 9] };
    let w = phi(3, &s, &ext).unwrap();
    println!(
        "phi({:?}) = {}   (descents {} -> {})",
        ext.word,
        w,
        word_descents(&ext.word),
        w.descents(DescentOrder::Jacobi)
    );
    let (k, s_back, ext_back) = phi_inverse(&w).unwrap();
    println!("phi_inverse round-trips: {}", (k, &s_back, &ext_back) == (3, &s, &ext));

    // psi on a Legendre-Stirling permutation of M_3
    let lsp = Word::parse("2' 1 2 2 3 3 3' 1 1'").unwrap();
    let image = psi(&lsp).unwrap();
    println!(
        "\npsi({lsp}) = {:?}   (descents {} -> {})",
        image.word,
        lsp.descents(DescentOrder::Legendre),
        word_descents(&image.word)
    );
    println!("psi_inverse round-trips: {}", psi_inverse(&image).unwrap() == lsp);

    // exhaustive check at k = 2, every subset S
    println!("\nexhaustive phi round-trip at k = 2:");
    for i in 0..=2usize {
        for s in jstirling::posets::subsets_of_size(2, i) {
            let poset = build_r(2, &s).unwrap();
            let mut n = 0usize;
            for ext in poset.linear_extensions().unwrap() {
                let w = phi(2, &s, &ext).unwrap();
                assert_eq!(w.descents(DescentOrder::Jacobi), word_descents(&ext.word));
                assert_eq!(phi_inverse(&w).unwrap().2, ext);
                n += 1;
            }
            println!("  S={s:?}: {n} extensions mapped and inverted");
        }
    }

    println!("\nexhaustive psi round-trip at k = 2:");
    let words = enumerate_jsp(2, &BTreeSet::new()).unwrap();
    for w in &words {
        let e = psi(w).unwrap();
        assert_eq!(psi_inverse(&e).unwrap(), *w);
    }
    let ext_count = build_p_legendre(2).linear_extensions().unwrap().count();
    println!("  {} words <-> {} extensions of P_2", words.len(), ext_count);
}
