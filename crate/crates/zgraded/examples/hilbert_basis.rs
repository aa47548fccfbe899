//! Minimal solutions of the weight equation α·p − β·q = r: the Hilbert
//! basis of the homogeneous monoid, inhomogeneous minimal solutions, and the
//! canonical decomposition of an arbitrary solution.

use zgraded::diophantine::{
    hilbert_basis, minimal_solutions, MinimalSolutionSet, SolutionVector,
};
use zgraded::oracle::oracle_minimal_solutions;

fn main() {
    // Weight-0 monomials in xi1 (wt 1), xi2 (wt 2), eta1 (wt 3):
    // exponent vectors solving p1 + 2 p2 = 3 q1.
    let alpha = vec![1, 2];
    let beta = vec![3];
    println!("Hilbert basis of p1 + 2p2 = 3q1:");
    for sv in hilbert_basis(&alpha, &beta) {
        println!("  {sv}");
    }

    // Weight-1 monomials over xi (wt 2), eta (wt 3).
    println!("minimal solutions of 2p - 3q = 1:");
    for sv in minimal_solutions(&[2], &[3], 1) {
        println!("  {sv}");
    }

    // The brute-force oracle agrees (box-bounded exhaustive search).
    let fast = minimal_solutions(&[2], &[3], 1);
    let slow = oracle_minimal_solutions(&[2], &[3], 1, 12);
    assert_eq!(fast, slow);
    println!("oracle (box 12) agrees: {fast:?}");

    // Every solution splits as particular + N-combination of the basis.
    let set = MinimalSolutionSet::compute(vec![2], vec![3], 1);
    let sol = SolutionVector::new(vec![5], vec![3]);
    let d = set.decompose(&sol).unwrap();
    println!("decompose {sol}: particular {}", d.particular);
    for (b, k) in &d.combo {
        println!("  + {k} x {b}");
    }
    assert_eq!(d.recompose(), sol);
}
