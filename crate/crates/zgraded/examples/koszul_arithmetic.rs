//! Basic arithmetic in a ℤ-graded supercommutative local model: the Koszul
//! sign rule, odd nilpotence, and exact rational coefficients.

use zgraded::parse::{parse_expr, parse_signature};
use zgraded::print::format_expr;
use zgraded::series::{series_mul, series_parity, series_pow};

fn main() {
    // One zero-weight variable, two odd generators, one even generator.
    let sig = parse_signature("zero: x; vars: theta1:1, theta2:1, xi:2").unwrap();

    // Odd variables anticommute: the parser lowers through the product, so
    // the sign is already normalized.
    let f = parse_expr(&sig, "theta2*theta1").unwrap();
    println!("theta2*theta1      = {}", format_expr(&sig, &f));

    // ... and square to zero.
    let g = parse_expr(&sig, "theta1*theta1").unwrap();
    println!("theta1*theta1      = {}", format_expr(&sig, &g));

    // Even elements built from odd factors are still nilpotent: (θ1θ2)² = 0.
    let t12 = parse_expr(&sig, "theta1*theta2").unwrap();
    let sq = series_pow(&sig, &t12, 2).unwrap();
    println!("(theta1*theta2)^2  = {}", format_expr(&sig, &sq));

    // Exact rationals all the way through.
    let a = parse_expr(&sig, "1/2*x + 3*xi").unwrap();
    let b = parse_expr(&sig, "2/3*x - xi").unwrap();
    let ab = series_mul(&sig, &a, &b).unwrap();
    println!("(x/2+3xi)(2x/3-xi) = {}", format_expr(&sig, &ab));

    // Parity is weight mod 2; mixed-parity sums have no parity.
    let odd = parse_expr(&sig, "theta1 + x*theta2").unwrap();
    println!(
        "parity of theta1 + x*theta2: {:?} (true = odd)",
        series_parity(&sig, &odd)
    );
    let mixed = parse_expr(&sig, "theta1 + xi").unwrap();
    println!("parity of theta1 + xi:       {:?}", series_parity(&sig, &mixed));
}
