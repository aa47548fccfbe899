//! Euler derivation, pure-weight derivations with commutators, graded
//! morphisms via pullback on generators, and jet-prolongation substitution.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::Error;
use crate::filtration::{mono_order, truncate, Flavor, Truncation};
use crate::monomial::Monomial;
use crate::series::{
    combine_truncations, series_add, series_linear, series_mul, series_pow,
    series_sub, GradedSeries,
};
use crate::signature::WeightSignature;
use crate::Coeff;

/// Applies the Euler derivation `ε = Σ αᵢ ξᵢ ∂_{ξᵢ} − Σ βⱼ ηⱼ ∂_{ηⱼ}`:
/// every term is scaled by its weight.
pub fn euler_apply(sig: &WeightSignature, f: &GradedSeries) -> GradedSeries {
    let terms = f
        .terms()
        .map(|(m, c)| {
            (
                m.clone(),
                c * Coeff::from_integer(m.weight(sig).into()),
            )
        })
        .collect();
    let mut out = GradedSeries::from_terms(terms);
    if let Some(t) = f.truncation() {
        out = truncate(sig, &out, t.flavor, t.order);
    }
    out
}

/// True iff `ε(f) = r·f`, equivalently every term has weight `r`.
pub fn is_homogeneous(sig: &WeightSignature, f: &GradedSeries, r: i64) -> bool {
    f.is_homogeneous(sig, r)
}

/// A derivation of pure weight, stored by its images on the generators and
/// extended by the graded Leibniz rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    sig: WeightSignature,
    images: Vec<GradedSeries>,
    weight: i64,
}

impl Derivation {
    /// Builds a validated pure-weight derivation. Variables without an
    /// entry map to zero. Every term of `images[v]` must have weight
    /// `weight(v) + w`.
    pub fn new(
        sig: &WeightSignature,
        images: BTreeMap<String, GradedSeries>,
        w: i64,
    ) -> Result<Derivation, Error> {
        let mut by_index = vec![GradedSeries::zero(); sig.num_vars()];
        for (name, img) in images {
            let idx = sig.require_var(&name)?;
            let expected = sig.weight(idx) + w;
            for m in img.monomials() {
                let found = m.weight(sig);
                if found != expected {
                    return Err(Error::WeightViolation {
                        var: name.clone(),
                        found,
                        expected,
                    });
                }
            }
            by_index[idx] = img;
        }
        Ok(Derivation {
            sig: sig.clone(),
            images: by_index,
            weight: w,
        })
    }

    /// The Euler vector field as a derivation: `v ↦ weight(v)·v`.
    pub fn euler(sig: &WeightSignature) -> Derivation {
        let images = (0..sig.num_vars())
            .map(|idx| {
                let w = sig.weight(idx);
                if w == 0 {
                    GradedSeries::zero()
                } else {
                    let m = Monomial::from_exps(sig, BTreeMap::from([(idx, 1)]))
                        .expect("single variable");
                    GradedSeries::monomial(m, Coeff::from_integer(w.into()))
                }
            })
            .collect();
        Derivation {
            sig: sig.clone(),
            images,
            weight: 0,
        }
    }

    pub fn signature(&self) -> &WeightSignature {
        &self.sig
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// Parity of the derivation: declared weight modulo 2.
    pub fn is_odd(&self) -> bool {
        self.weight.rem_euclid(2) == 1
    }

    pub fn image(&self, idx: usize) -> &GradedSeries {
        &self.images[idx]
    }

    /// Extends the generator images to a series by the graded Leibniz rule
    /// `d(fg) = d(f)·g + (−1)^{p(d)p(f)} f·d(g)`.
    pub fn apply(&self, f: &GradedSeries) -> Result<GradedSeries, Error> {
        let sig = &self.sig;
        let mut acc = GradedSeries::zero();
        for (m, c) in f.terms() {
            let dm = self.apply_monomial(m)?;
            acc = series_linear(sig, &Coeff::one(), &acc, c, &dm)?;
        }
        if let Some(t) = f.truncation() {
            acc = truncate(sig, &acc, t.flavor, t.order);
        }
        Ok(acc)
    }

    fn apply_monomial(&self, m: &Monomial) -> Result<GradedSeries, Error> {
        let sig = &self.sig;
        let Some((idx, e)) = m.iter().next() else {
            return Ok(GradedSeries::zero());
        };
        // m = v^e · rest in canonical order.
        let mut rest_exps: BTreeMap<usize, u64> = m.iter().collect();
        rest_exps.remove(&idx);
        let rest = Monomial::from_exps(sig, rest_exps)?;
        let rest_series = GradedSeries::monomial(rest.clone(), Coeff::one());

        // d(v^e) = e · v^{e-1} · d(v); for odd v necessarily e = 1.
        let dv = &self.images[idx];
        let d_pow = if e == 1 {
            dv.clone()
        } else {
            let vm1 = Monomial::from_exps(sig, BTreeMap::from([(idx, e - 1)]))?;
            series_mul(
                sig,
                &GradedSeries::monomial(vm1, Coeff::from_integer(e.into())),
                dv,
            )?
        };
        let term1 = series_mul(sig, &d_pow, &rest_series)?;

        let d_rest = self.apply_monomial(&rest)?;
        let v_pow = GradedSeries::monomial(
            Monomial::from_exps(sig, BTreeMap::from([(idx, e)]))?,
            Coeff::one(),
        );
        let mut term2 = series_mul(sig, &v_pow, &d_rest)?;
        let head_odd = sig.is_odd(idx) && e % 2 == 1;
        if self.is_odd() && head_odd {
            term2 = term2.neg();
        }
        series_add(sig, &term1, &term2)
    }
}

/// Graded commutator `[d₁, d₂] = d₁∘d₂ − (−1)^{p(d₁)p(d₂)} d₂∘d₁`, stored by
/// its action on the generators; the weight is `w₁ + w₂`.
pub fn commutator(d1: &Derivation, d2: &Derivation) -> Result<Derivation, Error> {
    if d1.sig != d2.sig {
        return Err(Error::SignatureMismatch(
            "commutator of derivations over different signatures".into(),
        ));
    }
    let sig = &d1.sig;
    let sign_flip = d1.is_odd() && d2.is_odd();
    let mut images = BTreeMap::new();
    for idx in 0..sig.num_vars() {
        let a = d1.apply(d2.image(idx))?;
        let b = d2.apply(d1.image(idx))?;
        let img = if sign_flip {
            series_add(sig, &a, &b)?
        } else {
            series_sub(sig, &a, &b)?
        };
        images.insert(sig.name(idx).to_string(), img);
    }
    Derivation::new(sig, images, d1.weight + d2.weight)
}

/// A graded morphism between local models, stored contravariantly by its
/// pullback images on the target generators.
///
/// Invariants: every image term preserves the weight of its generator;
/// nonzero-weight generators land in the augmentation ideal of the source
/// (no base terms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMorphism {
    source: WeightSignature,
    target: WeightSignature,
    images: Vec<GradedSeries>,
    trunc: Option<Truncation>,
}

impl GradedMorphism {
    /// Builds a validated morphism from one pullback image per target
    /// variable.
    pub fn new(
        source: WeightSignature,
        target: WeightSignature,
        pullback_images: BTreeMap<String, GradedSeries>,
        trunc: Option<Truncation>,
    ) -> Result<GradedMorphism, Error> {
        let mut images = vec![GradedSeries::zero(); target.num_vars()];
        let mut seen = vec![false; target.num_vars()];
        for (name, img) in pullback_images {
            let idx = target.require_var(&name)?;
            let expected = target.weight(idx);
            for m in img.monomials() {
                // Checked before weight preservation for the sharper
                // diagnostic: a base term on a graded generator always also
                // violates the weight.
                if expected != 0 && mono_order(&source, m, Flavor::UF) == 0 {
                    return Err(Error::ConstantTermOnGraded(name.clone()));
                }
                let found = m.weight(&source);
                if found != expected {
                    return Err(Error::WeightViolation {
                        var: name.clone(),
                        found,
                        expected,
                    });
                }
            }
            images[idx] = img;
            seen[idx] = true;
        }
        if let Some(idx) = seen.iter().position(|s| !s) {
            return Err(Error::SignatureMismatch(format!(
                "missing pullback image for target variable `{}`",
                target.name(idx)
            )));
        }
        Ok(GradedMorphism {
            source,
            target,
            images,
            trunc,
        })
    }

    /// The identity morphism of a signature.
    pub fn identity(
        sig: &WeightSignature,
        trunc: Option<Truncation>,
    ) -> GradedMorphism {
        let images = (0..sig.num_vars())
            .map(|idx| {
                GradedSeries::monomial(
                    Monomial::from_exps(sig, BTreeMap::from([(idx, 1)]))
                        .expect("single variable"),
                    Coeff::one(),
                )
            })
            .collect();
        GradedMorphism {
            source: sig.clone(),
            target: sig.clone(),
            images,
            trunc,
        }
    }

    pub fn source(&self) -> &WeightSignature {
        &self.source
    }

    pub fn target(&self) -> &WeightSignature {
        &self.target
    }

    pub fn truncation(&self) -> Option<Truncation> {
        self.trunc
    }

    pub fn image(&self, target_idx: usize) -> &GradedSeries {
        &self.images[target_idx]
    }

    /// Base part of a pullback image: the terms free of graded variables
    /// (UF-order 0). Zero for nonzero-weight generators.
    pub fn base_image(&self, target_idx: usize) -> GradedSeries {
        let terms = self.images[target_idx]
            .terms()
            .filter(|(m, _)| mono_order(&self.source, m, Flavor::UF) == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedSeries::from_terms(terms)
    }

    /// Nilpotent part of a pullback image: the terms in the augmentation
    /// ideal (UF-order ≥ 1).
    pub fn nilpotent_image(&self, target_idx: usize) -> GradedSeries {
        let terms = self.images[target_idx]
            .terms()
            .filter(|(m, _)| mono_order(&self.source, m, Flavor::UF) >= 1)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedSeries::from_terms(terms)
    }

    /// Pullback of a series on the target: the algebra-morphism
    /// substitution.
    ///
    /// Zero-weight slots are filled through the jet prolongation: the
    /// coefficient polynomial is Taylor-expanded with increment variables,
    /// the base point goes to the base part of the image and the increment
    /// to the nilpotent part. Graded variables substitute directly. The
    /// result carries the coarsest of the morphism's and the operand's
    /// truncations.
    pub fn apply(&self, f: &GradedSeries) -> Result<GradedSeries, Error> {
        let trunc = combine_truncations(self.trunc, f.truncation())?;
        let src = &self.source;
        let tgt = &self.target;
        let nzv = tgt.num_zero_vars();

        let jet_order = f
            .monomials()
            .map(|m| m.iter().filter(|(i, _)| *i < nzv).map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0);
        let (ext, jet) = jet_prolong(tgt, &f.untagged(), jet_order)?;

        // Substitution values per extended-signature variable index:
        // x_i -> base part, Δx_i -> nilpotent part, graded -> full image.
        let ext_nzv = ext.num_zero_vars();
        let n_delta = ext_nzv - nzv;
        debug_assert_eq!(n_delta, nzv);
        let value = |ext_idx: usize| -> GradedSeries {
            if ext_idx < nzv {
                self.base_image(ext_idx)
            } else if ext_idx < ext_nzv {
                self.nilpotent_image(ext_idx - nzv)
            } else {
                self.images[nzv + (ext_idx - ext_nzv)].clone()
            }
        };

        let mut acc = GradedSeries::zero();
        for (m, c) in jet.terms() {
            let mut term = GradedSeries::constant(c.clone());
            if let Some(t) = trunc {
                term = truncate(src, &term, t.flavor, t.order);
            }
            for (ext_idx, e) in m.iter() {
                let v = value(ext_idx);
                term = series_mul(src, &term, &series_pow(src, &v, e)?)?;
                if term.is_zero() {
                    break;
                }
            }
            acc = series_add(src, &acc, &term)?;
        }
        Ok(match trunc {
            Some(t) => truncate(src, &acc, t.flavor, t.order),
            None => acc.untagged(),
        })
    }
}

/// Composition of morphisms `φ: A → B` and `ψ: B → C` (of local models) into
/// `ψ∘φ: A → C`; pullbacks compose contravariantly, so the composite images
/// are `φ*` applied to the images of `ψ*`.
pub fn morphism_compose(
    phi: &GradedMorphism,
    psi: &GradedMorphism,
) -> Result<GradedMorphism, Error> {
    if phi.target != psi.source {
        return Err(Error::SignatureMismatch(
            "inner morphism target differs from outer morphism source".into(),
        ));
    }
    let trunc = combine_truncations(phi.trunc, psi.trunc)?;
    let mut images = BTreeMap::new();
    for idx in 0..psi.target.num_vars() {
        let img = phi.apply(psi.image(idx))?;
        images.insert(psi.target.name(idx).to_string(), img.untagged());
    }
    GradedMorphism::new(phi.source.clone(), psi.target.clone(), images, trunc)
}

/// Extends the signature with fresh zero-weight increment variables and
/// Taylor-expands the zero-weight coefficients, keeping total increment
/// degree ≤ `order`. Exact once `order` reaches the coefficient degree.
///
/// Returns the extended signature (increments named `d<var>`, with
/// underscores appended to the stem on collision) and the prolonged series.
pub fn jet_prolong(
    sig: &WeightSignature,
    f: &GradedSeries,
    order: u64,
) -> Result<(WeightSignature, GradedSeries), Error> {
    let nzv = sig.num_zero_vars();
    let mut stem = "d".to_string();
    let delta_names: Vec<String> = loop {
        let names: Vec<String> = sig
            .zero_var_names()
            .map(|n| format!("{stem}{n}"))
            .collect();
        if names.iter().all(|n| sig.var_index(n).is_none()) {
            break names;
        }
        stem.push('_');
    };
    let mut zero_vars: Vec<String> = sig.zero_var_names().map(String::from).collect();
    zero_vars.extend(delta_names);
    let graded: Vec<(String, i64)> = sig
        .graded_var_decls()
        .map(|(n, w)| (n.to_string(), w))
        .collect();
    let ext = WeightSignature::new(zero_vars, graded)?;

    let binom = |n: u64, k: u64| -> Coeff {
        let mut acc = Coeff::one();
        for i in 0..k {
            acc = acc * Coeff::new((n - i).into(), (i + 1).into());
        }
        acc
    };

    let mut out: Vec<(Monomial, Coeff)> = Vec::new();
    for (m, c) in f.terms() {
        // Remap to the extended signature: zero-var indices coincide,
        // graded indices shift by the number of increments.
        let base: Vec<(usize, u64)> = m
            .iter()
            .map(|(i, e)| if i < nzv { (i, e) } else { (i + nzv, e) })
            .collect();
        let zero_part: Vec<(usize, u64)> =
            base.iter().copied().filter(|(i, _)| *i < nzv).collect();

        // Expand Π (x_i + Δx_i)^{a_i} over the zero-weight factors.
        let mut expansions: Vec<(BTreeMap<usize, u64>, Coeff, u64)> =
            vec![(BTreeMap::new(), c.clone(), 0)];
        for &(i, a) in &zero_part {
            let mut next = Vec::new();
            for (exps, coeff, ddeg) in &expansions {
                for k in 0..=a {
                    if ddeg + k > order {
                        break;
                    }
                    let mut e2 = exps.clone();
                    if a - k > 0 {
                        e2.insert(i, a - k);
                    }
                    if k > 0 {
                        e2.insert(nzv + i, k);
                    }
                    next.push((e2, coeff * binom(a, k), ddeg + k));
                }
            }
            expansions = next;
        }
        for (mut exps, coeff, _) in expansions {
            for &(i, e) in base.iter().filter(|(i, _)| *i >= nzv) {
                exps.insert(i, e);
            }
            out.push((Monomial::from_exps(&ext, exps)?, coeff));
        }
    }
    let mut series = GradedSeries::from_terms(out);
    if let Some(t) = f.truncation() {
        series = truncate(&ext, &series, t.flavor, t.order);
    }
    Ok((ext, series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff;
    use crate::series::partial_derivative;

    fn sig22() -> WeightSignature {
        WeightSignature::new(
            vec!["x".into()],
            vec![("xi".into(), 2), ("eta".into(), -2)],
        )
        .unwrap()
    }

    #[test]
    fn euler_examples() {
        let sig = sig22();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        assert_eq!(euler_apply(&sig, &xi), xi.scale(&coeff(2, 1)));
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let xieta = series_mul(&sig, &xi, &eta).unwrap();
        assert!(euler_apply(&sig, &xieta).is_zero());
        let x = GradedSeries::var(&sig, "x").unwrap();
        assert!(euler_apply(&sig, &x).is_zero());
        assert!(euler_apply(&sig, &GradedSeries::one()).is_zero());
    }

    #[test]
    fn euler_matches_weighted_partials() {
        let sig = sig22();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let f = series_add(
            &sig,
            &series_mul(&sig, &xi, &series_mul(&sig, &xi, &eta).unwrap()).unwrap(),
            &xi,
        )
        .unwrap();
        // ε(f) = 2·ξ∂_ξ f − 2·η∂_η f
        let via_partials = series_linear(
            &sig,
            &coeff(2, 1),
            &series_mul(&sig, &xi, &partial_derivative(&sig, "xi", &f).unwrap()).unwrap(),
            &coeff(-2, 1),
            &series_mul(&sig, &eta, &partial_derivative(&sig, "eta", &f).unwrap())
                .unwrap(),
        )
        .unwrap();
        assert_eq!(euler_apply(&sig, &f), via_partials);
    }

    #[test]
    fn homogeneity_checks() {
        let sig = sig22();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let xi2eta = series_mul(&sig, &series_mul(&sig, &xi, &xi).unwrap(), &eta).unwrap();
        assert!(is_homogeneous(&sig, &xi2eta, 2));
        let f = series_add(&sig, &xi, &xi2eta).unwrap();
        assert!(is_homogeneous(&sig, &f, 2));
        assert!(!is_homogeneous(&sig, &f, 0));
        assert!(is_homogeneous(&sig, &GradedSeries::zero(), 5));
    }

    #[test]
    fn derivation_validation() {
        let sig = sig22();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        // xi ↦ eta at weight 0 violates purity (−2 ≠ 2).
        let err = Derivation::new(
            &sig,
            BTreeMap::from([("xi".to_string(), eta.clone())]),
            0,
        )
        .unwrap_err();
        assert!(matches!(err, Error::WeightViolation { .. }));
        // xi ↦ 1 at weight −2 is pure.
        Derivation::new(
            &sig,
            BTreeMap::from([("xi".to_string(), GradedSeries::one())]),
            -2,
        )
        .unwrap();
        // the Euler images are pure of weight 0
        Derivation::new(
            &sig,
            BTreeMap::from([
                ("xi".to_string(), xi.scale(&coeff(2, 1))),
                ("eta".to_string(), eta.scale(&coeff(-2, 1))),
            ]),
            0,
        )
        .unwrap();
    }

    #[test]
    fn euler_derivation_agrees() {
        let sig = sig22();
        let e = Derivation::euler(&sig);
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let x = GradedSeries::var(&sig, "x").unwrap();
        let mut f = series_mul(&sig, &xi, &eta).unwrap();
        f = series_add(&sig, &f, &series_mul(&sig, &x, &xi).unwrap()).unwrap();
        f = series_add(&sig, &f, &GradedSeries::one()).unwrap();
        assert_eq!(e.apply(&f).unwrap(), euler_apply(&sig, &f));
    }

    #[test]
    fn commutator_with_euler_scales() {
        let sig = sig22();
        let e = Derivation::euler(&sig);
        // v = ∂_eta has weight 2: images eta ↦ 1.
        let v = Derivation::new(
            &sig,
            BTreeMap::from([("eta".to_string(), GradedSeries::one())]),
            2,
        )
        .unwrap();
        let c = commutator(&e, &v).unwrap();
        assert_eq!(c.weight(), 2);
        for idx in 0..sig.num_vars() {
            assert_eq!(c.image(idx), &v.image(idx).scale(&coeff(2, 1)));
        }
        // [d, d] = 0 for even d
        let dd = commutator(&v, &v).unwrap();
        for idx in 0..sig.num_vars() {
            assert!(dd.image(idx).is_zero());
        }
    }

    fn src_sig() -> WeightSignature {
        WeightSignature::new(
            vec!["z".into()],
            vec![("zeta".into(), 2), ("theta".into(), -2)],
        )
        .unwrap()
    }

    fn base_morphism() -> GradedMorphism {
        // x ↦ z + zeta*theta, xi ↦ zeta, eta ↦ theta
        let src = src_sig();
        let tgt = sig22();
        let z = GradedSeries::var(&src, "z").unwrap();
        let zeta = GradedSeries::var(&src, "zeta").unwrap();
        let theta = GradedSeries::var(&src, "theta").unwrap();
        let zt = series_mul(&src, &zeta, &theta).unwrap();
        GradedMorphism::new(
            src.clone(),
            tgt,
            BTreeMap::from([
                ("x".to_string(), series_add(&src, &z, &zt).unwrap()),
                ("xi".to_string(), zeta),
                ("eta".to_string(), theta),
            ]),
            None,
        )
        .unwrap()
    }

    #[test]
    fn morphism_validation() {
        let src = src_sig();
        let tgt = sig22();
        let zeta = GradedSeries::var(&src, "zeta").unwrap();
        let bad = series_add(&src, &GradedSeries::one(), &zeta).unwrap();
        let err = GradedMorphism::new(
            src.clone(),
            tgt,
            BTreeMap::from([("xi".to_string(), bad)]),
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ConstantTermOnGraded(_)));
    }

    #[test]
    fn taylor_substitution_on_square() {
        // φ: x ↦ z + ζθ; f = x² → z² + 2zζθ + ζ²θ² (ζ, θ even of weights ±2).
        let phi = base_morphism();
        let tgt = phi.target().clone();
        let src = phi.source().clone();
        let x2 = GradedSeries::monomial(
            Monomial::from_names(&tgt, &[("x", 2)]).unwrap(),
            coeff(1, 1),
        );
        let got = phi.apply(&x2).unwrap();
        let z = GradedSeries::var(&src, "z").unwrap();
        let zt = series_mul(
            &src,
            &GradedSeries::var(&src, "zeta").unwrap(),
            &GradedSeries::var(&src, "theta").unwrap(),
        )
        .unwrap();
        let expected = series_pow(&src, &series_add(&src, &z, &zt).unwrap(), 2).unwrap();
        assert_eq!(got, expected);
        // base/nilpotent split of the zero-weight image
        let xidx = tgt.var_index("x").unwrap();
        assert_eq!(phi.base_image(xidx), z);
        assert_eq!(phi.nilpotent_image(xidx), zt);
    }

    #[test]
    fn identity_and_constants() {
        let sig = sig22();
        let id = GradedMorphism::identity(&sig, None);
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let x = GradedSeries::var(&sig, "x").unwrap();
        let f = series_add(&sig, &series_mul(&sig, &x, &xi).unwrap(), &xi).unwrap();
        assert_eq!(id.apply(&f).unwrap(), f);
        let c = GradedSeries::constant(coeff(7, 3));
        assert_eq!(id.apply(&c).unwrap(), c);
    }

    #[test]
    fn composition_with_identity() {
        let phi = base_morphism();
        let id_src = GradedMorphism::identity(phi.source(), None);
        let id_tgt = GradedMorphism::identity(phi.target(), None);
        assert_eq!(morphism_compose(&id_src, &phi).unwrap(), phi);
        assert_eq!(morphism_compose(&phi, &id_tgt).unwrap(), phi);
    }

    #[test]
    fn jet_examples() {
        let sig = sig22();
        let x2 = GradedSeries::monomial(
            Monomial::from_names(&sig, &[("x", 2)]).unwrap(),
            coeff(1, 1),
        );
        let (ext, j) = jet_prolong(&sig, &x2, 2).unwrap();
        // x² + 2x·dx + dx²
        let x = GradedSeries::var(&ext, "x").unwrap();
        let dx = GradedSeries::var(&ext, "dx").unwrap();
        let expected = series_pow(&ext, &series_add(&ext, &x, &dx).unwrap(), 2).unwrap();
        assert_eq!(j, expected);

        // no zero-weight variables: unchanged
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let (ext2, j2) = jet_prolong(&sig, &xi, 3).unwrap();
        assert_eq!(j2, GradedSeries::var(&ext2, "xi").unwrap());
    }
}
