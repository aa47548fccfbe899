//! The two filtrations (weight ideals F, augmentation-ideal powers UF),
//! truncation-coset arithmetic, and the cofinal bounds connecting them.
//!
//! The highlight is the Cauchy-profile family: the partial sums of
//! Σ ξᵢηᵢ are F-Cauchy (increment F-orders grow without bound) but not
//! UF-Cauchy (increment UF-orders are constantly 2), which is exactly why
//! the two completions must be compared through cofinal bounds rather than
//! termwise.

use zgraded::filtration::{
    bound_kl, bound_lk, convert_truncation, sequence_orders, series_order,
    truncate, Flavor,
};
use zgraded::parse::{parse_expr, parse_signature};
use zgraded::print::format_expr;
use zgraded::series::{series_mul, GradedSeries};
use zgraded::signature::WeightSignature;

fn main() {
    let sig = parse_signature("zero: x; vars: xi1:1, xi2:2, eta1:-3").unwrap();

    let f = parse_expr(&sig, "xi1*xi2*eta1 + x*xi2^2").unwrap();
    println!("f = {}", format_expr(&sig, &f));
    println!("  F-order  {}", series_order(&sig, &f, Flavor::F));
    println!("  UF-order {}", series_order(&sig, &f, Flavor::UF));

    // Truncation drops everything of order >= p and tags the coset.
    let t = truncate(&sig, &f, Flavor::F, 4);
    println!("f mod F^4 = {} (tag {:?})", format_expr(&sig, &t), t.truncation());

    // Cofinal bounds: a weight-r element of F-order >= k automatically has
    // UF-order >= l_k, and vice versa via k_l.
    for k in [2, 4, 6, 8] {
        println!("r=0: F-order >= {k}  =>  UF-order >= {}", bound_lk(&sig, 0, k).unwrap());
    }
    for l in [2, 4, 6, 8] {
        println!("r=0: UF-order >= {l} =>  F-order >= {}", bound_kl(&sig, 0, l).unwrap());
    }

    // A truncated homogeneous coset can be re-truncated in the other flavor
    // at the guaranteed order.
    let g = parse_expr(&sig, "xi1^2*xi2^2 + xi2^3*x").unwrap(); // weight 6
    let gf = truncate(&sig, &g, Flavor::F, 7);
    let guf = convert_truncation(&sig, &gf, 6).unwrap();
    println!(
        "g mod F^7 -> mod UF^{}: {}",
        guf.truncation().unwrap().order,
        format_expr(&sig, &guf)
    );

    // The Cauchy-profile family with N = 6.
    let n = 6;
    let mut graded = Vec::new();
    for i in 1..=n {
        graded.push((format!("xi{i}"), i as i64));
    }
    for i in 1..=n {
        graded.push((format!("eta{i}"), -(i as i64)));
    }
    let fam = WeightSignature::new(vec![], graded).unwrap();
    let increments: Vec<GradedSeries> = (1..=n)
        .map(|i| {
            let xi = GradedSeries::var(&fam, &format!("xi{i}")).unwrap();
            let eta = GradedSeries::var(&fam, &format!("eta{i}")).unwrap();
            series_mul(&fam, &xi, &eta).unwrap()
        })
        .collect();
    println!("increment orders of the partial sums of sum_i xi_i*eta_i:");
    for (i, (fo, uo)) in sequence_orders(&fam, &increments).iter().enumerate() {
        println!("  i={}: F={fo} UF={uo}", i + 1);
    }
}
