//! Weight signatures: the generating data of the local model.

use std::collections::HashMap;

use crate::error::Error;

/// The generating data of a local model: zero-weight variables followed by
/// variables of nonzero integer weight.
///
/// Canonical variable order is declaration order, zero-weight variables
/// first. Derived data `α` (positive weights, declaration order) and `β`
/// (absolute values of negative weights, declaration order) parametrize the
/// weight equation `α·p − β·q = r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSignature {
    zero_vars: Vec<String>,
    graded_vars: Vec<(String, i64)>,
    index: HashMap<String, usize>,
    /// Canonical indices of the positive-weight variables, declaration order.
    positive: Vec<usize>,
    /// Canonical indices of the negative-weight variables, declaration order.
    negative: Vec<usize>,
}

impl WeightSignature {
    /// Builds a validated signature.
    ///
    /// Fails on duplicate names and on zero weights among the graded
    /// variables.
    pub fn new(
        zero_vars: Vec<String>,
        graded_vars: Vec<(String, i64)>,
    ) -> Result<WeightSignature, Error> {
        let mut index = HashMap::new();
        for (i, name) in zero_vars
            .iter()
            .chain(graded_vars.iter().map(|(n, _)| n))
            .enumerate()
        {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let nz = zero_vars.len();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, (name, w)) in graded_vars.iter().enumerate() {
            if *w == 0 {
                return Err(Error::ZeroWeight(name.clone()));
            } else if *w > 0 {
                positive.push(nz + i);
            } else {
                negative.push(nz + i);
            }
        }
        Ok(WeightSignature {
            zero_vars,
            graded_vars,
            index,
            positive,
            negative,
        })
    }

    /// Total number of variables.
    pub fn num_vars(&self) -> usize {
        self.zero_vars.len() + self.graded_vars.len()
    }

    pub fn num_zero_vars(&self) -> usize {
        self.zero_vars.len()
    }

    pub fn zero_var_names(&self) -> impl Iterator<Item = &str> {
        self.zero_vars.iter().map(|s| s.as_str())
    }

    pub fn graded_var_decls(&self) -> impl Iterator<Item = (&str, i64)> {
        self.graded_vars.iter().map(|(n, w)| (n.as_str(), *w))
    }

    /// Canonical index of a variable, if declared.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require_var(&self, name: &str) -> Result<usize, Error> {
        self.var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &str {
        let nz = self.zero_vars.len();
        if idx < nz {
            &self.zero_vars[idx]
        } else {
            &self.graded_vars[idx - nz].0
        }
    }

    /// Weight of the variable at canonical index `idx` (0 for zero-weight
    /// variables).
    pub fn weight(&self, idx: usize) -> i64 {
        let nz = self.zero_vars.len();
        if idx < nz {
            0
        } else {
            self.graded_vars[idx - nz].1
        }
    }

    /// Parity of a variable: its weight modulo 2.
    pub fn is_odd(&self, idx: usize) -> bool {
        self.weight(idx).rem_euclid(2) == 1
    }

    /// Canonical indices of the positive-weight variables.
    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    /// Canonical indices of the negative-weight variables.
    pub fn negative_indices(&self) -> &[usize] {
        &self.negative
    }

    /// Positive weights in declaration order.
    pub fn alpha(&self) -> Vec<u64> {
        self.positive.iter().map(|&i| self.weight(i) as u64).collect()
    }

    /// Absolute values of the negative weights in declaration order.
    pub fn beta(&self) -> Vec<u64> {
        self.negative
            .iter()
            .map(|&i| (-self.weight(i)) as u64)
            .collect()
    }

    pub fn alpha_max(&self) -> Option<u64> {
        self.alpha().into_iter().max()
    }

    pub fn alpha_min(&self) -> Option<u64> {
        self.alpha().into_iter().min()
    }

    pub fn beta_max(&self) -> Option<u64> {
        self.beta().into_iter().max()
    }

    pub fn beta_min(&self) -> Option<u64> {
        self.beta().into_iter().min()
    }

    /// κ = min(α_min, β_min), defined when both sides are nonempty.
    pub fn kappa(&self) -> Option<u64> {
        Some(self.alpha_min()?.min(self.beta_min()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn derived_data() {
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap();
        assert_eq!(sig.alpha(), vec![2]);
        assert_eq!(sig.beta(), vec![2]);
        assert_eq!(sig.kappa(), Some(2));

        let sig = WeightSignature::new(
            names(&["x"]),
            vec![("xi1".into(), 1), ("xi2".into(), 2), ("eta1".into(), -3)],
        )
        .unwrap();
        assert_eq!(sig.alpha(), vec![1, 2]);
        assert_eq!(sig.beta(), vec![3]);
        assert_eq!(sig.kappa(), Some(1));
        assert_eq!(sig.alpha_max(), Some(2));
        assert_eq!(sig.beta_max(), Some(3));
        assert!(sig.is_odd(sig.var_index("xi1").unwrap()));
        assert!(!sig.is_odd(sig.var_index("x").unwrap()));
        assert!(sig.is_odd(sig.var_index("eta1").unwrap()));
    }

    #[test]
    fn zero_weight_rejected() {
        let err = WeightSignature::new(vec![], vec![("xi".into(), 0)]).unwrap_err();
        assert_eq!(err, Error::ZeroWeight("xi".into()));
    }

    #[test]
    fn duplicate_rejected() {
        let err =
            WeightSignature::new(names(&["x"]), vec![("x".into(), 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateName("x".into()));
    }

    #[test]
    fn one_sided_extrema() {
        let sig = WeightSignature::new(vec![], vec![("xi".into(), 3)]).unwrap();
        assert_eq!(sig.alpha_max(), Some(3));
        assert_eq!(sig.beta_max(), None);
        assert_eq!(sig.kappa(), None);
    }
}
