//! Graded morphisms by pullback on generators: validation, the base +
//! nilpotent split of zero-weight images, substitution through the jet
//! prolongation, composition, and the naive-substitution oracle.

use std::collections::BTreeMap;

use zgraded::euler::{jet_prolong, morphism_compose, GradedMorphism};
use zgraded::oracle::oracle_substitute;
use zgraded::parse::{parse_expr, parse_signature};
use zgraded::print::format_expr;

fn main() {
    let target = parse_signature("zero: x; vars: xi:2, eta:-2").unwrap();
    let source = parse_signature("zero: z; vars: zeta:2, theta:-2").unwrap();

    // Pullback: x ↦ z + ζθ (base part z, nilpotent part ζθ), ξ ↦ ζ, η ↦ θ.
    let phi = GradedMorphism::new(
        source.clone(),
        target.clone(),
        BTreeMap::from([
            ("x".to_string(), parse_expr(&source, "z + zeta*theta").unwrap()),
            ("xi".to_string(), parse_expr(&source, "zeta").unwrap()),
            ("eta".to_string(), parse_expr(&source, "theta").unwrap()),
        ]),
        None,
    )
    .unwrap();

    let xidx = target.var_index("x").unwrap();
    println!("base(x)      = {}", format_expr(&source, &phi.base_image(xidx)));
    println!("nilpotent(x) = {}", format_expr(&source, &phi.nilpotent_image(xidx)));

    // Zero-weight slots go through the jet prolongation: Taylor-expand in x
    // with an increment variable, send x to the base part and dx to the
    // nilpotent part.
    let f = parse_expr(&target, "x^2*xi + x").unwrap();
    let (ext, jet) = jet_prolong(&target, &f, 2).unwrap();
    println!("2-jet of f   = {}", format_expr(&ext, &jet));

    let pullback = phi.apply(&f).unwrap();
    println!("phi*(f)      = {}", format_expr(&source, &pullback));

    // The deliberately naive oracle substitutes full images and expands.
    assert_eq!(pullback, oracle_substitute(&phi, &f).unwrap());
    println!("matches the literal-substitution oracle");

    // Pullbacks are algebra morphisms ...
    let g = parse_expr(&target, "x + eta").unwrap();
    let fg = zgraded::series::series_mul(&target, &f, &g).unwrap();
    assert_eq!(
        phi.apply(&fg).unwrap(),
        zgraded::series::series_mul(
            &source,
            &phi.apply(&f).unwrap(),
            &phi.apply(&g).unwrap()
        )
        .unwrap()
    );
    println!("phi*(f*g) = phi*(f) * phi*(g)");

    // ... and compose contravariantly.
    let id = GradedMorphism::identity(&target, None);
    let comp = morphism_compose(&phi, &id).unwrap();
    assert_eq!(comp.apply(&f).unwrap(), pullback);
    println!("(id . phi) agrees with phi");
}
