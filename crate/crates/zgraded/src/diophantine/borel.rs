//! Borel normal form of a homogeneous series.
//!
//! A weight-`r` series rewrites as a finite sum over the minimal solutions
//! `M(α,β,r)` of graded monomials `ξ^p η^q`, with coefficients that are
//! series in the zero-weight variables `x` and fresh weight-0 variables
//! `z_{p'q'}` standing for the Hilbert-basis monomials `ξ^{p'} η^{q'}`.

use std::collections::BTreeMap;

use crate::diophantine::{MinimalSolutionSet, SolutionVector};
use crate::error::Error;
use crate::filtration::{truncate, Truncation};
use crate::monomial::{MonoProduct, Monomial};
use crate::series::GradedSeries;
use crate::signature::WeightSignature;
use crate::Coeff;

/// A homogeneous series in normal form: one coefficient series `h_{pq}` per
/// particular solution, over the auxiliary zero-weight signature `(x, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelNormalForm {
    weight: i64,
    /// Lex-sorted Hilbert basis `M(α,β)`; parallel to `z_names`.
    basis: Vec<SolutionVector>,
    z_names: Vec<String>,
    /// Zero-weight signature holding the original `x` variables followed by
    /// the `z` variables.
    coeff_sig: WeightSignature,
    /// `h_{pq}` per particular `(p,q) ∈ M(α,β,r)`; only nonzero entries are
    /// stored.
    components: BTreeMap<SolutionVector, GradedSeries>,
    truncation: Option<Truncation>,
}

impl BorelNormalForm {
    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn basis(&self) -> &[SolutionVector] {
        &self.basis
    }

    pub fn z_names(&self) -> &[String] {
        &self.z_names
    }

    pub fn coeff_sig(&self) -> &WeightSignature {
        &self.coeff_sig
    }

    pub fn components(&self) -> impl Iterator<Item = (&SolutionVector, &GradedSeries)> {
        self.components.iter()
    }

    pub fn truncation(&self) -> Option<Truncation> {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Assembles a normal form from parsed parts; used by the CLI reader.
    pub fn from_parts(
        sig: &WeightSignature,
        weight: i64,
        components: BTreeMap<SolutionVector, GradedSeries>,
        truncation: Option<Truncation>,
    ) -> Result<BorelNormalForm, Error> {
        let (basis, z_names, coeff_sig) = coefficient_signature(sig)?;
        for sv in components.keys() {
            if sv.p.len() != sig.positive_indices().len()
                || sv.q.len() != sig.negative_indices().len()
            {
                return Err(Error::SolutionLength {
                    expected: sig.positive_indices().len() + sig.negative_indices().len(),
                    got: sv.p.len() + sv.q.len(),
                });
            }
        }
        Ok(BorelNormalForm {
            weight,
            basis,
            z_names,
            coeff_sig,
            components,
            truncation,
        })
    }
}

/// Fresh zero-weight names that do not collide with the signature.
fn fresh_names(sig: &WeightSignature, stem: &str, count: usize) -> Vec<String> {
    let mut prefix = stem.to_string();
    'outer: loop {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        for n in &names {
            if sig.var_index(n).is_some() {
                prefix.push('_');
                continue 'outer;
            }
        }
        return names;
    }
}

/// The auxiliary signature `(x, z)` for the coefficient series, together
/// with the sorted basis and the `z` names.
pub(crate) fn coefficient_signature(
    sig: &WeightSignature,
) -> Result<(Vec<SolutionVector>, Vec<String>, WeightSignature), Error> {
    let alpha = sig.alpha();
    let beta = sig.beta();
    let basis = crate::diophantine::hilbert_basis(&alpha, &beta);
    let z_names = fresh_names(sig, "z", basis.len());
    let mut zero_vars: Vec<String> = sig.zero_var_names().map(String::from).collect();
    zero_vars.extend(z_names.iter().cloned());
    let coeff_sig = WeightSignature::new(zero_vars, vec![])?;
    Ok((basis, z_names, coeff_sig))
}

/// The graded monomial `ξ^p η^q` of a solution vector, or `None` when an
/// odd variable would exceed exponent 1 (the monomial is zero in the
/// algebra).
pub(crate) fn graded_monomial(
    sig: &WeightSignature,
    sv: &SolutionVector,
) -> Option<Monomial> {
    let mut exps = BTreeMap::new();
    for (&idx, &e) in sig.positive_indices().iter().zip(&sv.p) {
        if e > 0 {
            exps.insert(idx, e);
        }
    }
    for (&idx, &e) in sig.negative_indices().iter().zip(&sv.q) {
        if e > 0 {
            exps.insert(idx, e);
        }
    }
    Monomial::from_exps(sig, exps).ok()
}

/// Multiplies `start · f₁ · f₂ · …` with the Koszul sign rule; `None` if the
/// product vanishes.
fn ordered_product<'a>(
    sig: &WeightSignature,
    start: Monomial,
    factors: impl Iterator<Item = &'a Monomial>,
) -> Option<(i32, Monomial)> {
    let mut sign = 1;
    let mut acc = start;
    for f in factors {
        match acc.mul(sig, f) {
            MonoProduct::Zero => return None,
            MonoProduct::Term(s, m) => {
                sign *= s;
                acc = m;
            }
        }
    }
    Some((sign, acc))
}

/// Rewrites a homogeneous weight-`r` series in Borel normal form.
///
/// Each term's graded exponent vector is decomposed canonically; the combo
/// becomes a `z`-monomial and the particular part indexes the component.
/// Koszul reordering signs are absorbed into the stored coefficients so
/// that [`expand_normal_form`] reproduces the input exactly.
pub fn borel_normal_form(
    sig: &WeightSignature,
    f: &GradedSeries,
    r: i64,
) -> Result<BorelNormalForm, Error> {
    if !f.is_homogeneous(sig, r) {
        return Err(Error::NotHomogeneous(r));
    }
    let (basis, z_names, coeff_sig) = coefficient_signature(sig)?;
    let set = MinimalSolutionSet::compute(sig.alpha(), sig.beta(), r);
    let nzv = sig.num_zero_vars();

    let mut components: BTreeMap<SolutionVector, BTreeMap<Monomial, Coeff>> =
        BTreeMap::new();
    for (m, c) in f.terms() {
        let mut x_exps = BTreeMap::new();
        let mut sv = SolutionVector::zero(
            sig.positive_indices().len(),
            sig.negative_indices().len(),
        );
        for (idx, e) in m.iter() {
            if idx < nzv {
                x_exps.insert(idx, e);
            } else if let Some(k) = sig.positive_indices().iter().position(|&i| i == idx)
            {
                sv.p[k] = e;
            } else {
                let k = sig
                    .negative_indices()
                    .iter()
                    .position(|&i| i == idx)
                    .expect("graded variable is positive or negative");
                sv.q[k] = e;
            }
        }
        let decomp = set.decompose(&sv)?;

        // Reconstruct the term in expansion order to capture the Koszul
        // sign the expansion will produce.
        let combo_monos: Vec<Monomial> = decomp
            .combo
            .iter()
            .flat_map(|(b, k)| {
                let mono = graded_monomial(sig, b).expect("legal decomposition factor");
                std::iter::repeat(mono).take(*k as usize)
            })
            .collect();
        let particular_mono =
            graded_monomial(sig, &decomp.particular).expect("legal particular");
        let x_mono = Monomial::from_exps(sig, x_exps.clone())?;
        let (sign, rebuilt) = ordered_product(
            sig,
            x_mono,
            combo_monos.iter().chain(std::iter::once(&particular_mono)),
        )
        .expect("decomposition preserves odd exponent caps");
        debug_assert_eq!(&rebuilt, m);

        // h-term over (x, z): same x exponents, z exponents from the combo.
        let mut h_exps = x_exps;
        for (b, k) in &decomp.combo {
            let j = basis.binary_search(b).expect("combo element is basic");
            h_exps.insert(nzv + j, *k);
        }
        let h_mono = Monomial::from_exps(&coeff_sig, h_exps)?;
        let coeff = if sign < 0 { -c.clone() } else { c.clone() };
        let entry = components
            .entry(decomp.particular)
            .or_default()
            .entry(h_mono)
            .or_insert_with(num_traits::Zero::zero);
        *entry += coeff;
    }

    let components = components
        .into_iter()
        .map(|(sv, terms)| {
            (
                sv,
                GradedSeries::from_terms(terms.into_iter().collect()),
            )
        })
        .filter(|(_, h)| !h.is_zero())
        .collect();
    Ok(BorelNormalForm {
        weight: r,
        basis,
        z_names,
        coeff_sig,
        components,
        truncation: f.truncation(),
    })
}

/// Substitutes `z_{p'q'} ↦ ξ^{p'} η^{q'}` and multiplies out; the truncation
/// tag is preserved. Substitutions that would square an odd variable
/// contribute zero.
pub fn expand_normal_form(
    sig: &WeightSignature,
    nf: &BorelNormalForm,
) -> Result<GradedSeries, Error> {
    let nzv = sig.num_zero_vars();
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    for (particular, h) in &nf.components {
        let particular_mono = match graded_monomial(sig, particular) {
            Some(m) => m,
            None => continue,
        };
        for (hm, hc) in h.terms() {
            let mut x_exps = BTreeMap::new();
            let mut factors: Vec<Monomial> = Vec::new();
            let mut bad = false;
            for (idx, e) in hm.iter() {
                if idx < nzv {
                    x_exps.insert(idx, e);
                } else {
                    let j = idx - nzv;
                    let b = nf
                        .basis
                        .get(j)
                        .ok_or_else(|| Error::UnknownBasisIndex(nf.coeff_sig.name(idx).to_string()))?;
                    match graded_monomial(sig, b) {
                        Some(mono) => {
                            factors.extend(std::iter::repeat(mono).take(e as usize))
                        }
                        None => {
                            bad = true;
                            break;
                        }
                    }
                }
            }
            if bad {
                continue;
            }
            let x_mono = Monomial::from_exps(sig, x_exps)?;
            if let Some((sign, m)) = ordered_product(
                sig,
                x_mono,
                factors.iter().chain(std::iter::once(&particular_mono)),
            ) {
                let c = if sign < 0 { -hc.clone() } else { hc.clone() };
                terms.push((m, c));
            }
        }
    }
    let out = GradedSeries::from_terms(terms);
    Ok(match nf.truncation {
        Some(t) => truncate(sig, &out, t.flavor, t.order),
        None => out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{series_add, series_mul};
    use crate::coeff;

    #[test]
    fn single_basis_element() {
        // xi wt 2, eta wt -2, f = xi + xi^2 eta (weight 2):
        // basis {(1;1)} -> z, particulars {(1;0)}, h = 1 + z.
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let xi2eta = GradedSeries::monomial(
            Monomial::from_names(&sig, &[("xi", 2), ("eta", 1)]).unwrap(),
            coeff(1, 1),
        );
        let f = series_add(&sig, &xi, &xi2eta).unwrap();
        let nf = borel_normal_form(&sig, &f, 2).unwrap();
        assert_eq!(nf.basis(), &[SolutionVector::new(vec![1], vec![1])]);
        let comps: Vec<_> = nf.components().collect();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, &SolutionVector::new(vec![1], vec![0]));
        let h = comps[0].1;
        assert_eq!(h.num_terms(), 2); // 1 + z0
        assert_eq!(expand_normal_form(&sig, &nf).unwrap(), f);
    }

    #[test]
    fn weight_zero_series_in_z() {
        // xi wt 1, eta wt -1 (both odd): f = xi*eta, weight 0.
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 1), ("eta".into(), -1)],
        )
        .unwrap();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let f = series_mul(&sig, &xi, &eta).unwrap();
        let nf = borel_normal_form(&sig, &f, 0).unwrap();
        // particular is the zero solution; h = z0.
        let comps: Vec<_> = nf.components().collect();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].0.is_zero());
        assert_eq!(expand_normal_form(&sig, &nf).unwrap(), f);
    }

    #[test]
    fn zero_series() {
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap();
        let nf = borel_normal_form(&sig, &GradedSeries::zero(), 3).unwrap();
        assert!(nf.is_zero());
        assert!(expand_normal_form(&sig, &nf).unwrap().is_zero());
    }

    #[test]
    fn non_homogeneous_rejected() {
        let sig = WeightSignature::new(
            vec![],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let f = series_add(&sig, &xi, &GradedSeries::one()).unwrap();
        assert!(matches!(
            borel_normal_form(&sig, &f, 2),
            Err(Error::NotHomogeneous(2))
        ));
    }
}
