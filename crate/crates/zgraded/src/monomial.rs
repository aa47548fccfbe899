//! Sparse exponent vectors with the Koszul sign rule.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::signature::WeightSignature;

/// A monomial over a signature: a sparse exponent vector in canonical
/// variable order. Odd-parity variables carry exponent at most 1; zero
/// exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<usize, u64>,
}

/// Result of multiplying two monomials: either zero (an odd variable would
/// be squared) or a signed monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoProduct {
    Zero,
    Term(i32, Monomial),
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// Builds a monomial from `(name, exponent)` pairs, validating variable
    /// names and the odd-exponent cap.
    pub fn from_names(
        sig: &WeightSignature,
        pairs: &[(&str, u64)],
    ) -> Result<Monomial, Error> {
        let mut exps: BTreeMap<usize, u64> = BTreeMap::new();
        for (name, e) in pairs {
            let idx = sig.require_var(name)?;
            *exps.entry(idx).or_insert(0) += e;
        }
        Monomial::from_exps(sig, exps)
    }

    /// Builds a monomial from canonical-index exponents.
    pub fn from_exps(
        sig: &WeightSignature,
        exps: BTreeMap<usize, u64>,
    ) -> Result<Monomial, Error> {
        let mut clean = BTreeMap::new();
        for (idx, e) in exps {
            if idx >= sig.num_vars() {
                return Err(Error::SignatureMismatch(format!(
                    "variable index {idx} out of range"
                )));
            }
            if e == 0 {
                continue;
            }
            if sig.is_odd(idx) && e > 1 {
                return Err(Error::OddExponent(sig.name(idx).to_string(), e));
            }
            clean.insert(idx, e);
        }
        Ok(Monomial { exps: clean })
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, idx: usize) -> u64 {
        self.exps.get(&idx).copied().unwrap_or(0)
    }

    /// Factors in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    /// Total weight Σ weight(v)·exponent(v).
    pub fn weight(&self, sig: &WeightSignature) -> i64 {
        self.exps
            .iter()
            .map(|(&i, &e)| sig.weight(i) * e as i64)
            .sum()
    }

    /// Parity of the monomial (weight modulo 2).
    pub fn is_odd(&self, sig: &WeightSignature) -> bool {
        self.weight(sig).rem_euclid(2) == 1
    }

    /// Number of odd factors with canonical index strictly below `idx`.
    pub(crate) fn odd_factors_below(&self, sig: &WeightSignature, idx: usize) -> u64 {
        self.exps
            .range(..idx)
            .filter(|(&i, _)| sig.is_odd(i))
            .map(|(_, &e)| e)
            .sum()
    }

    /// Number of odd factors with canonical index strictly above `idx`.
    pub(crate) fn odd_factors_above(&self, sig: &WeightSignature, idx: usize) -> u64 {
        self.exps
            .range(idx + 1..)
            .filter(|(&i, _)| sig.is_odd(i))
            .map(|(_, &e)| e)
            .sum()
    }

    /// Supercommutative product with the Koszul sign.
    ///
    /// The sign counts the transpositions of odd factors needed to merge the
    /// concatenation `self · other` into canonical order; the product is
    /// [`MonoProduct::Zero`] whenever an odd variable would reach exponent 2.
    pub fn mul(&self, sig: &WeightSignature, other: &Monomial) -> MonoProduct {
        // Each odd factor of `other` moves left past the odd factors of
        // `self` with strictly larger canonical index.
        let mut swaps: u64 = 0;
        for (idx, e) in other.iter() {
            if sig.is_odd(idx) {
                if self.exponent(idx) > 0 {
                    return MonoProduct::Zero;
                }
                swaps += e * self.odd_factors_above(sig, idx);
            }
        }
        let mut exps = self.exps.clone();
        for (idx, e) in other.iter() {
            *exps.entry(idx).or_insert(0) += e;
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        MonoProduct::Term(sign, Monomial { exps })
    }

    /// Strips one power of `idx`, returning the numeric factor, the Koszul
    /// sign from commuting the variable to the front, and the remaining
    /// monomial. Returns `None` if the variable is absent.
    pub(crate) fn strip(
        &self,
        sig: &WeightSignature,
        idx: usize,
    ) -> Option<(u64, i32, Monomial)> {
        let e = self.exponent(idx);
        if e == 0 {
            return None;
        }
        let sign = if sig.is_odd(idx) && self.odd_factors_below(sig, idx) % 2 == 1 {
            -1
        } else {
            1
        };
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(&idx);
        } else {
            exps.insert(idx, e - 1);
        }
        Some((e, sign, Monomial { exps }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_sig() -> WeightSignature {
        WeightSignature::new(
            vec![],
            vec![("theta1".into(), 1), ("theta2".into(), 1)],
        )
        .unwrap()
    }

    #[test]
    fn odd_transposition_sign() {
        let sig = theta_sig();
        let t1 = Monomial::from_names(&sig, &[("theta1", 1)]).unwrap();
        let t2 = Monomial::from_names(&sig, &[("theta2", 1)]).unwrap();
        let t12 = Monomial::from_names(&sig, &[("theta1", 1), ("theta2", 1)]).unwrap();
        assert_eq!(t2.mul(&sig, &t1), MonoProduct::Term(-1, t12.clone()));
        assert_eq!(t1.mul(&sig, &t2), MonoProduct::Term(1, t12));
    }

    #[test]
    fn odd_square_vanishes() {
        let sig = theta_sig();
        let t1 = Monomial::from_names(&sig, &[("theta1", 1)]).unwrap();
        assert_eq!(t1.mul(&sig, &t1), MonoProduct::Zero);
        assert!(Monomial::from_names(&sig, &[("theta1", 2)]).is_err());
    }

    #[test]
    fn mixed_parity_products() {
        // even xi (weight 2), odd theta (weight 1)
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("theta".into(), 1)],
        )
        .unwrap();
        let xt = Monomial::from_names(&sig, &[("xi", 1), ("theta", 1)]).unwrap();
        let xi = Monomial::from_names(&sig, &[("xi", 1)]).unwrap();
        assert_eq!(xt.mul(&sig, &xt), MonoProduct::Zero);
        let xxt = Monomial::from_names(&sig, &[("xi", 2), ("theta", 1)]).unwrap();
        assert_eq!(xt.mul(&sig, &xi), MonoProduct::Term(1, xxt));
    }

    #[test]
    fn weight_is_additive() {
        let sig = WeightSignature::new(
            vec!["x".into()],
            vec![("xi1".into(), 1), ("xi2".into(), 2), ("eta1".into(), -3)],
        )
        .unwrap();
        let m = Monomial::from_names(&sig, &[("xi1", 1), ("xi2", 2), ("eta1", 1)]).unwrap();
        assert_eq!(m.weight(&sig), 1 + 4 - 3);
        assert_eq!(Monomial::one().weight(&sig), 0);
        let x3 = Monomial::from_names(&sig, &[("x", 3)]).unwrap();
        assert_eq!(x3.weight(&sig), 0);
    }
}
