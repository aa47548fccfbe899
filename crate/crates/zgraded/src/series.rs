//! Truncated sparse series with exact rational coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::filtration::{mono_order, Truncation};
use crate::monomial::{MonoProduct, Monomial};
use crate::signature::WeightSignature;
use crate::Coeff;

/// A finite sparse sum of monomials with nonzero rational coefficients.
///
/// An untruncated series is an ordinary polynomial. A series tagged with
/// `(flavor, p)` is the normal coset representative modulo the order-`p`
/// filtration ideal: every stored monomial has order < `p` in that flavor.
/// All values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    terms: BTreeMap<Monomial, Coeff>,
    truncation: Option<Truncation>,
}

impl GradedSeries {
    pub fn zero() -> GradedSeries {
        GradedSeries {
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn constant(c: Coeff) -> GradedSeries {
        GradedSeries::from_terms(vec![(Monomial::one(), c)])
    }

    pub fn one() -> GradedSeries {
        GradedSeries::constant(Coeff::one())
    }

    /// A single variable as a series.
    pub fn var(sig: &WeightSignature, name: &str) -> Result<GradedSeries, Error> {
        Ok(GradedSeries::monomial(
            Monomial::from_names(sig, &[(name, 1)])?,
            Coeff::one(),
        ))
    }

    pub fn monomial(m: Monomial, c: Coeff) -> GradedSeries {
        GradedSeries::from_terms(vec![(m, c)])
    }

    /// Builds an untruncated series, merging duplicates and pruning zeros.
    pub fn from_terms(terms: Vec<(Monomial, Coeff)>) -> GradedSeries {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            let entry = map.entry(m).or_insert_with(Coeff::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        GradedSeries {
            terms: map,
            truncation: None,
        }
    }

    /// Builds a series with an explicit truncation tag. Coefficients of
    /// duplicate monomials are merged and zeros pruned; the caller is
    /// responsible for the order invariant (use [`crate::filtration::truncate`]
    /// otherwise).
    pub(crate) fn from_parts(
        terms: Vec<(Monomial, Coeff)>,
        truncation: Option<Truncation>,
    ) -> GradedSeries {
        let mut s = GradedSeries::from_terms(terms);
        s.truncation = truncation;
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn truncation(&self) -> Option<Truncation> {
        self.truncation
    }

    /// The same terms with the truncation tag removed.
    pub fn untagged(&self) -> GradedSeries {
        GradedSeries {
            terms: self.terms.clone(),
            truncation: None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// True when every term has weight `r`. The zero series is homogeneous
    /// of every weight.
    pub fn is_homogeneous(&self, sig: &WeightSignature, r: i64) -> bool {
        self.monomials().all(|m| m.weight(sig) == r)
    }

    /// The set of weights occurring among the terms, ascending.
    pub fn occurring_weights(&self, sig: &WeightSignature) -> Vec<i64> {
        let mut ws: Vec<i64> = self.monomials().map(|m| m.weight(sig)).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Sub-series of terms of weight `r`; the truncation tag is preserved.
    pub fn weight_component(&self, sig: &WeightSignature, r: i64) -> GradedSeries {
        GradedSeries {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight(sig) == r)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn scale(&self, c: &Coeff) -> GradedSeries {
        if c.is_zero() {
            return GradedSeries {
                terms: BTreeMap::new(),
                truncation: self.truncation,
            };
        }
        GradedSeries {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn neg(&self) -> GradedSeries {
        self.scale(&-Coeff::one())
    }
}

/// Combines two optional truncation tags: the coarsest order wins and the
/// flavors must agree (untruncated counts as order ∞).
pub(crate) fn combine_truncations(
    a: Option<Truncation>,
    b: Option<Truncation>,
) -> Result<Option<Truncation>, Error> {
    match (a, b) {
        (None, t) | (t, None) => Ok(t),
        (Some(ta), Some(tb)) => {
            if ta.flavor != tb.flavor {
                return Err(Error::FlavorMismatch(ta.flavor, tb.flavor));
            }
            Ok(Some(Truncation {
                flavor: ta.flavor,
                order: ta.order.min(tb.order),
            }))
        }
    }
}

fn normalize(
    sig: &WeightSignature,
    mut terms: BTreeMap<Monomial, Coeff>,
    truncation: Option<Truncation>,
) -> GradedSeries {
    if let Some(t) = truncation {
        terms.retain(|m, _| mono_order(sig, m, t.flavor) < t.order);
    }
    terms.retain(|_, c| !c.is_zero());
    GradedSeries { terms, truncation }
}

/// `a·f + b·g`. The result carries the coarsest of the operands'
/// truncations; mixing flavors is an error.
pub fn series_linear(
    sig: &WeightSignature,
    a: &Coeff,
    f: &GradedSeries,
    b: &Coeff,
    g: &GradedSeries,
) -> Result<GradedSeries, Error> {
    let trunc = combine_truncations(f.truncation, g.truncation)?;
    let mut terms = BTreeMap::new();
    for (m, c) in &f.terms {
        let entry = terms.entry(m.clone()).or_insert_with(Coeff::zero);
        *entry += c * a;
    }
    for (m, c) in &g.terms {
        let entry = terms.entry(m.clone()).or_insert_with(Coeff::zero);
        *entry += c * b;
    }
    Ok(normalize(sig, terms, trunc))
}

/// `f + g`.
pub fn series_add(
    sig: &WeightSignature,
    f: &GradedSeries,
    g: &GradedSeries,
) -> Result<GradedSeries, Error> {
    series_linear(sig, &Coeff::one(), f, &Coeff::one(), g)
}

/// `f − g`.
pub fn series_sub(
    sig: &WeightSignature,
    f: &GradedSeries,
    g: &GradedSeries,
) -> Result<GradedSeries, Error> {
    series_linear(sig, &Coeff::one(), f, &-Coeff::one(), g)
}

/// Supercommutative product: distributes over [`Monomial::mul`] with Koszul
/// signs, truncates to the coarsest operand order, and normalizes.
pub fn series_mul(
    sig: &WeightSignature,
    f: &GradedSeries,
    g: &GradedSeries,
) -> Result<GradedSeries, Error> {
    let trunc = combine_truncations(f.truncation, g.truncation)?;
    let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
    for (m1, c1) in &f.terms {
        for (m2, c2) in &g.terms {
            match m1.mul(sig, m2) {
                MonoProduct::Zero => {}
                MonoProduct::Term(sign, m) => {
                    if let Some(t) = trunc {
                        if mono_order(sig, &m, t.flavor) >= t.order {
                            continue;
                        }
                    }
                    let mut c = c1 * c2;
                    if sign < 0 {
                        c = -c;
                    }
                    let entry = terms.entry(m).or_insert_with(Coeff::zero);
                    *entry += c;
                }
            }
        }
    }
    Ok(normalize(sig, terms, trunc))
}

/// Integer power via repeated multiplication.
pub fn series_pow(
    sig: &WeightSignature,
    f: &GradedSeries,
    e: u64,
) -> Result<GradedSeries, Error> {
    let mut acc = GradedSeries::one();
    acc.truncation = f.truncation;
    for _ in 0..e {
        acc = series_mul(sig, &acc, f)?;
    }
    Ok(acc)
}

/// Graded left partial derivative with respect to `v`.
///
/// On each monomial the variable is commuted to the front, accruing the
/// Koszul sign against the odd factors passed, and its exponent is
/// decremented with the usual numeric factor.
pub fn partial_derivative(
    sig: &WeightSignature,
    v: &str,
    f: &GradedSeries,
) -> Result<GradedSeries, Error> {
    let idx = sig.require_var(v)?;
    let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
    for (m, c) in &f.terms {
        if let Some((e, sign, rest)) = m.strip(sig, idx) {
            let mut k = c * Coeff::from_integer(e.into());
            if sign < 0 {
                k = -k;
            }
            let entry = terms.entry(rest).or_insert_with(Coeff::zero);
            *entry += k;
        }
    }
    Ok(normalize(sig, terms, f.truncation))
}

/// Parity of a nonzero parity-homogeneous series; `None` for the zero
/// series or mixed parities.
pub fn series_parity(sig: &WeightSignature, f: &GradedSeries) -> Option<bool> {
    let mut parities = f.monomials().map(|m| m.is_odd(sig));
    let first = parities.next()?;
    if parities.all(|p| p == first) {
        Some(first)
    } else {
        None
    }
}

/// Splits off the denominator-free display form of a coefficient; helper
/// shared by the printer and tests.
pub fn coeff_is_negative(c: &Coeff) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff;
    use crate::filtration::Flavor;

    fn sig2() -> WeightSignature {
        WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap()
    }

    #[test]
    fn linear_combinations() {
        let sig = sig2();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let zero = series_linear(&sig, &coeff(1, 1), &xi, &coeff(-1, 1), &xi).unwrap();
        assert!(zero.is_zero());
        let five = series_linear(&sig, &coeff(2, 1), &xi, &coeff(3, 1), &xi).unwrap();
        assert_eq!(five.coefficient(&Monomial::from_names(&sig, &[("xi", 1)]).unwrap()), coeff(5, 1));
    }

    #[test]
    fn coarsest_truncation_wins() {
        let sig = sig2();
        let f = crate::filtration::truncate(&sig, &GradedSeries::one(), Flavor::UF, 3);
        let g = crate::filtration::truncate(&sig, &GradedSeries::one(), Flavor::UF, 5);
        let s = series_add(&sig, &f, &g).unwrap();
        assert_eq!(s.truncation().unwrap().order, 3);
        let h = crate::filtration::truncate(&sig, &GradedSeries::one(), Flavor::F, 5);
        assert!(matches!(
            series_add(&sig, &f, &h),
            Err(Error::FlavorMismatch(_, _))
        ));
    }

    #[test]
    fn product_drops_truncated_terms() {
        // (1+xi)(1+eta) at (UF,2): the xi*eta term has UF-order 2 and is
        // dropped.
        let sig = sig2();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let one = GradedSeries::one();
        let f = crate::filtration::truncate(
            &sig,
            &series_add(&sig, &one, &xi).unwrap(),
            Flavor::UF,
            2,
        );
        let g = crate::filtration::truncate(
            &sig,
            &series_add(&sig, &one, &eta).unwrap(),
            Flavor::UF,
            2,
        );
        let p = series_mul(&sig, &f, &g).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert!(p
            .coefficient(&Monomial::from_names(&sig, &[("xi", 1), ("eta", 1)]).unwrap())
            .is_zero());
    }

    #[test]
    fn unit_and_sign_rule() {
        let sig = WeightSignature::new(
            vec![],
            vec![("theta1".into(), 1), ("theta2".into(), 1)],
        )
        .unwrap();
        let t1 = GradedSeries::var(&sig, "theta1").unwrap();
        let t2 = GradedSeries::var(&sig, "theta2").unwrap();
        let p12 = series_mul(&sig, &t1, &t2).unwrap();
        let p21 = series_mul(&sig, &t2, &t1).unwrap();
        assert_eq!(p21, p12.neg());
        assert!(series_mul(&sig, &t1, &t1).unwrap().is_zero());
        let f = series_add(&sig, &GradedSeries::one(), &p12).unwrap();
        assert_eq!(series_mul(&sig, &f, &GradedSeries::one()).unwrap(), f);
    }

    #[test]
    fn weight_components_partition() {
        let sig = sig2();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let xieta = series_mul(&sig, &xi, &eta).unwrap();
        let f = series_add(&sig, &xi, &xieta).unwrap();
        assert_eq!(f.weight_component(&sig, 2), xi);
        assert!(f.weight_component(&sig, 7).is_zero());
        let mut sum = GradedSeries::zero();
        for r in f.occurring_weights(&sig) {
            sum = series_add(&sig, &sum, &f.weight_component(&sig, r)).unwrap();
        }
        assert_eq!(sum, f);
    }

    #[test]
    fn partial_derivatives() {
        let sig2 = sig2();
        let xi2 = Monomial::from_names(&sig2, &[("xi", 2)]).unwrap();
        let f = GradedSeries::monomial(xi2, coeff(1, 1));
        let d = partial_derivative(&sig2, "xi", &f).unwrap();
        let xi1 = Monomial::from_names(&sig2, &[("xi", 1)]).unwrap();
        assert_eq!(d.coefficient(&xi1), coeff(2, 1));
        assert!(partial_derivative(&sig2, "xi", &GradedSeries::var(&sig2, "eta").unwrap())
            .unwrap()
            .is_zero());

        let sig = WeightSignature::new(
            vec![],
            vec![("theta1".into(), 1), ("theta2".into(), 1)],
        )
        .unwrap();
        let t1 = GradedSeries::var(&sig, "theta1").unwrap();
        let t2 = GradedSeries::var(&sig, "theta2").unwrap();
        let t12 = series_mul(&sig, &t1, &t2).unwrap();
        let d = partial_derivative(&sig, "theta2", &t12).unwrap();
        assert_eq!(d, t1.neg());
    }
}
