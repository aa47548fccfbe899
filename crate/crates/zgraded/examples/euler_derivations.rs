//! The Euler derivation and the calculus of pure-weight derivations: the
//! grading is recovered as the eigenspace decomposition of ε, and
//! commutators with ε read off the weight of a derivation.

use std::collections::BTreeMap;

use zgraded::euler::{commutator, euler_apply, Derivation};
use zgraded::parse::{parse_expr, parse_signature};
use zgraded::print::format_expr;
use zgraded::series::GradedSeries;

fn main() {
    let sig = parse_signature("zero: x; vars: xi:2, eta:-2").unwrap();

    // ε scales every term by its weight; weight-0 terms vanish.
    let f = parse_expr(&sig, "xi + x*eta + 7 + xi^2*eta").unwrap();
    println!("f      = {}", format_expr(&sig, &f));
    println!("eps(f) = {}", format_expr(&sig, &euler_apply(&sig, &f)));

    // The same field as a generator-image derivation.
    let eps = Derivation::euler(&sig);
    assert_eq!(eps.apply(&f).unwrap(), euler_apply(&sig, &f));

    // A pure-weight derivation: d = ∂/∂eta has weight 2 (eta has weight −2,
    // the image 1 has weight 0).
    let d = Derivation::new(
        &sig,
        BTreeMap::from([("eta".to_string(), GradedSeries::one())]),
        2,
    )
    .unwrap();
    println!("d(f)   = {}", format_expr(&sig, &d.apply(&f).unwrap()));

    // [ε, d] = weight(d) · d, read off on the generators.
    let c = commutator(&eps, &d).unwrap();
    println!("[eps, d] has weight {}", c.weight());
    for idx in 0..sig.num_vars() {
        println!(
            "  [eps, d]({}) = {}",
            sig.name(idx),
            format_expr(&sig, c.image(idx))
        );
    }

    // Graded Leibniz rule demonstrated on a product.
    let a = parse_expr(&sig, "x*xi").unwrap();
    let b = parse_expr(&sig, "eta + x").unwrap();
    let ab = zgraded::series::series_mul(&sig, &a, &b).unwrap();
    let lhs = d.apply(&ab).unwrap();
    let rhs = zgraded::series::series_add(
        &sig,
        &zgraded::series::series_mul(&sig, &d.apply(&a).unwrap(), &b).unwrap(),
        &zgraded::series::series_mul(&sig, &a, &d.apply(&b).unwrap()).unwrap(),
    )
    .unwrap();
    assert_eq!(lhs, rhs);
    println!("Leibniz check on (x*xi)(eta + x): ok");
}
