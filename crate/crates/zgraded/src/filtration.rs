//! Filtration orders, truncation, and the cofinal bound sequences.
//!
//! Two decreasing filtrations live on the model algebra:
//!
//! * [`Flavor::F`] — the graded ideal generated by homogeneous elements of
//!   weight ≥ p. A monomial's F-order is its positive-weight contribution
//!   `Σ αᵢ pᵢ`.
//! * [`Flavor::UF`] — powers of the augmentation ideal generated by all
//!   nonzero-weight variables. A monomial's UF-order is its total degree in
//!   nonzero-weight variables `Σ pᵢ + Σ qⱼ`.
//!
//! On each weight component the two are equivalent (for finite signatures):
//! [`bound_lk`] and [`bound_kl`] realize the cofinal sequences witnessing the
//! containments in both directions, and [`convert_truncation`] re-truncates a
//! coset representative at the guaranteed order of the other flavor.

use std::fmt;

use crate::error::Error;
use crate::monomial::Monomial;
use crate::series::GradedSeries;
use crate::signature::WeightSignature;

/// The two filtration flavors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Weight-ideal filtration.
    F,
    /// Augmentation-ideal-power filtration.
    UF,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::F => write!(f, "F"),
            Flavor::UF => write!(f, "UF"),
        }
    }
}

/// Truncation tag: the series is a normal coset representative modulo the
/// order-`order` ideal of `flavor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub flavor: Flavor,
    pub order: u64,
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.flavor, self.order)
    }
}

/// A filtration order: finite, or infinite (the zero series only, by
/// separatedness).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn at_least(self, p: u64) -> bool {
        match self {
            Order::Finite(o) => o >= p,
            Order::Infinite => true,
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Order) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Order) -> std::cmp::Ordering {
        match (self, other) {
            (Order::Infinite, Order::Infinite) => std::cmp::Ordering::Equal,
            (Order::Infinite, _) => std::cmp::Ordering::Greater,
            (_, Order::Infinite) => std::cmp::Ordering::Less,
            (Order::Finite(a), Order::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(o) => write!(f, "{o}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Filtration order of a monomial in the given flavor.
///
/// Zero-weight variables contribute to neither flavor.
pub fn mono_order(sig: &WeightSignature, m: &Monomial, flavor: Flavor) -> u64 {
    match flavor {
        Flavor::F => m
            .iter()
            .map(|(i, e)| {
                let w = sig.weight(i);
                if w > 0 {
                    w as u64 * e
                } else {
                    0
                }
            })
            .sum(),
        Flavor::UF => m
            .iter()
            .map(|(i, e)| if sig.weight(i) != 0 { e } else { 0 })
            .sum(),
    }
}

/// Minimum monomial order over the stored terms; infinite for the zero
/// series.
pub fn series_order(sig: &WeightSignature, f: &GradedSeries, flavor: Flavor) -> Order {
    f.monomials()
        .map(|m| Order::Finite(mono_order(sig, m, flavor)))
        .min()
        .unwrap_or(Order::Infinite)
}

/// Drops all monomials of order ≥ `p` and tags the result with
/// `(flavor, p)`. Idempotent.
pub fn truncate(
    sig: &WeightSignature,
    f: &GradedSeries,
    flavor: Flavor,
    p: u64,
) -> GradedSeries {
    let terms = f
        .terms()
        .filter(|(m, _)| mono_order(sig, m, flavor) < p)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    GradedSeries::from_parts(terms, Some(Truncation { flavor, order: p }))
}

fn ceil_div(n: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    if n >= 0 {
        (n + d - 1) / d
    } else {
        n / d
    }
}

/// The cofinal bound `l_k = ⌈max{k(1/α_max + 1/β_max) − r/β_max, 0}⌉`.
///
/// Guarantee: every monomial of weight `r` with F-order ≥ `k` has UF-order
/// ≥ `l_k`. The formula is real-valued; orders are integers, so the ceiling
/// is the strongest valid integer bound.
pub fn bound_lk(sig: &WeightSignature, r: i64, k: u64) -> Result<u64, Error> {
    let amax = sig.alpha_max().ok_or(Error::OneSided("positive"))? as i128;
    let bmax = sig.beta_max().ok_or(Error::OneSided("negative"))? as i128;
    let num = k as i128 * (amax + bmax) - r as i128 * amax;
    Ok(ceil_div(num, amax * bmax).max(0) as u64)
}

/// The cofinal bound `k_l = ⌈max{(r + κl)/2, 0}⌉` with
/// `κ = min(α_min, β_min)`.
///
/// Guarantee: every monomial of weight `r` with UF-order ≥ `l` has F-order
/// ≥ `k_l`.
pub fn bound_kl(sig: &WeightSignature, r: i64, l: u64) -> Result<u64, Error> {
    if sig.alpha_min().is_none() {
        return Err(Error::OneSided("positive"));
    }
    if sig.beta_min().is_none() {
        return Err(Error::OneSided("negative"));
    }
    let kappa = sig.kappa().expect("both sides nonempty") as i128;
    let num = r as i128 + kappa * l as i128;
    Ok(ceil_div(num, 2).max(0) as u64)
}

/// Re-truncates a homogeneous coset representative at the guaranteed order
/// of the other flavor.
///
/// For an `(F, k)`-tagged series of weight `r` the result is tagged
/// `(UF, l_k)` and equals `truncate(g, UF, l_k)` for any untruncated `g`
/// representing the same coset; symmetrically for `UF → F` via `k_l`.
pub fn convert_truncation(
    sig: &WeightSignature,
    f: &GradedSeries,
    r: i64,
) -> Result<GradedSeries, Error> {
    let trunc = f.truncation().ok_or(Error::NotTruncated)?;
    if !f.monomials().all(|m| m.weight(sig) == r) {
        return Err(Error::NotHomogeneous(r));
    }
    let (flavor, order) = match trunc.flavor {
        Flavor::F => (Flavor::UF, bound_lk(sig, r, trunc.order)?),
        Flavor::UF => (Flavor::F, bound_kl(sig, r, trunc.order)?),
    };
    Ok(truncate(sig, f, flavor, order))
}

/// Per-term `(F-order, UF-order)` pairs for the increments of a candidate
/// Cauchy sequence; a sequence is flavor-Cauchy iff the increment orders
/// tend to infinity in that flavor.
pub fn sequence_orders(
    sig: &WeightSignature,
    increments: &[GradedSeries],
) -> Vec<(Order, Order)> {
    increments
        .iter()
        .map(|f| {
            (
                series_order(sig, f, Flavor::F),
                series_order(sig, f, Flavor::UF),
            )
        })
        .collect()
}
