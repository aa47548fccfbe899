//! The Borel normal form: a homogeneous series of weight r is rewritten as
//! Σ h_{pq}(x, z) ξ^p η^q over the minimal solutions (p,q), where the z
//! variables stand for the weight-0 basis monomials. Expansion substitutes
//! the z variables back and reproduces the input exactly.

use zgraded::diophantine::{borel_normal_form, expand_normal_form};
use zgraded::parse::{parse_expr, parse_signature};
use zgraded::print::{format_expr, format_normal_form};

fn main() {
    let sig = parse_signature("zero: x; vars: xi:2, eta:-2").unwrap();

    // f is homogeneous of weight 2; xi^2*eta carries one copy of the
    // weight-0 monomial xi*eta, so it folds into the coefficient of xi.
    let f = parse_expr(&sig, "xi + 3*x*xi^2*eta + xi^3*eta^2").unwrap();
    println!("f = {}", format_expr(&sig, &f));

    let nf = borel_normal_form(&sig, &f, 2).unwrap();
    println!("--- normal form ---");
    print!("{}", format_normal_form(&nf));

    let back = expand_normal_form(&sig, &nf).unwrap();
    println!("--- expanded ---");
    println!("{}", format_expr(&sig, &back));
    assert_eq!(back, f);

    // Odd variables work too; here the weight-0 monomial theta*eta becomes
    // the single z variable and the exponent cap keeps everything legal.
    let odd = parse_signature("vars: theta:1, eta:-1").unwrap();
    let g = parse_expr(&odd, "1 + 5*theta*eta").unwrap();
    println!("odd case g = {}", format_expr(&odd, &g));
    let nfo = borel_normal_form(&odd, &g, 0).unwrap();
    print!("{}", format_normal_form(&nfo));
    assert_eq!(expand_normal_form(&odd, &nfo).unwrap(), g);
}
