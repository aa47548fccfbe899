//! Canonical pretty-printing, and the text format for Borel normal forms.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::diophantine::borel::BorelNormalForm;
use crate::diophantine::SolutionVector;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::parse::{parse_expr, parse_trunc};
use crate::series::GradedSeries;
use crate::signature::WeightSignature;
use crate::Coeff;

fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(sig: &WeightSignature, m: &Monomial) -> String {
    m.iter()
        .map(|(i, e)| {
            if e == 1 {
                sig.name(i).to_string()
            } else {
                format!("{}^{}", sig.name(i), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical printing: terms sorted by weight, then by the canonical
/// monomial order; coefficients as reduced fractions. Inverse of
/// [`parse_expr`] on the printed text.
pub fn format_expr(sig: &WeightSignature, f: &GradedSeries) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &Coeff)> = f.terms().collect();
    terms.sort_by_key(|(m, _)| (m.weight(sig), (*m).clone()));

    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_one() {
            out.push_str(&format_coeff(&abs));
        } else if abs.is_one() {
            out.push_str(&format_monomial(sig, m));
        } else {
            out.push_str(&format_coeff(&abs));
            out.push('*');
            out.push_str(&format_monomial(sig, m));
        }
    }
    out
}

/// Serializes a Borel normal form:
///
/// ```text
/// weight: 2
/// trunc: UF:4        # only when tagged
/// z0 := p=(0,3) q=(2)
/// h[p=(1) q=(0)] := 1 + z0
/// ```
///
/// Lines are stable: `z` legend in basis order, components in solution
/// order.
pub fn format_normal_form(nf: &BorelNormalForm) -> String {
    let mut out = format!("weight: {}\n", nf.weight());
    if let Some(t) = nf.truncation() {
        out.push_str(&format!("trunc: {t}\n"));
    }
    for (name, sv) in nf.z_names().iter().zip(nf.basis()) {
        out.push_str(&format!("{name} := {sv}\n"));
    }
    for (sv, h) in nf.components() {
        out.push_str(&format!(
            "h[{sv}] := {}\n",
            format_expr(nf.coeff_sig(), h)
        ));
    }
    out
}

fn parse_solution_vector(text: &str, line: usize) -> Result<SolutionVector, Error> {
    let err = |msg: String| Error::parse(line, 1, msg);
    let parse_side = |s: &str, tag: &str| -> Result<Vec<u64>, Error> {
        let s = s.trim();
        let body = s
            .strip_prefix(&format!("{tag}=("))
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err(format!("expected `{tag}=(..)`, found `{s}`")))?;
        if body.trim().is_empty() {
            return Ok(vec![]);
        }
        body.split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| err(format!("invalid entry `{}`", x.trim())))
            })
            .collect()
    };
    let mut parts = text.trim().splitn(2, char::is_whitespace);
    let p_part = parts.next().unwrap_or("");
    let q_part = parts.next().unwrap_or("");
    Ok(SolutionVector::new(
        parse_side(p_part, "p")?,
        parse_side(q_part, "q")?,
    ))
}

/// Reads the [`format_normal_form`] text format back, validating the `z`
/// legend against the Hilbert basis derived from `sig`.
pub fn parse_normal_form(
    sig: &WeightSignature,
    text: &str,
) -> Result<BorelNormalForm, Error> {
    let mut weight: Option<i64> = None;
    let mut trunc = None;
    let mut legend: Vec<(String, SolutionVector)> = Vec::new();
    let mut components: BTreeMap<SolutionVector, GradedSeries> = BTreeMap::new();
    // The coefficient signature is derived, not read; built lazily so the
    // legend can be checked against it.
    let mut coeff_sig: Option<(Vec<SolutionVector>, Vec<String>, WeightSignature)> = None;

    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| Error::parse(line, 1, msg);
        if let Some(w) = content.strip_prefix("weight:") {
            weight = Some(
                w.trim()
                    .parse()
                    .map_err(|_| err(format!("invalid weight `{}`", w.trim())))?,
            );
        } else if let Some(t) = content.strip_prefix("trunc:") {
            trunc = Some(parse_trunc(t.trim())?);
        } else if let Some(rest) = content.strip_prefix("h[") {
            let (sv_text, h_text) = rest
                .split_once("] :=")
                .ok_or_else(|| err("expected `h[..] := expr`".into()))?;
            let sv = parse_solution_vector(sv_text, line)?;
            if coeff_sig.is_none() {
                coeff_sig =
                    Some(crate::diophantine::borel::coefficient_signature(sig)?);
            }
            let derived = coeff_sig.as_ref().expect("just initialized");
            let h = parse_expr(&derived.2, h_text.trim())?;
            components.insert(sv, h);
        } else if let Some((name, sv_text)) = content.split_once(":=") {
            legend.push((
                name.trim().to_string(),
                parse_solution_vector(sv_text, line)?,
            ));
        } else {
            return Err(err(format!("unrecognized line `{content}`")));
        }
    }

    let weight =
        weight.ok_or_else(|| Error::parse(1, 1, "missing `weight:` line"))?;
    let nf = BorelNormalForm::from_parts(sig, weight, components, trunc)?;
    // Validate the legend against the derived basis.
    for (name, sv) in &legend {
        match nf.z_names().iter().position(|n| n == name) {
            Some(i) if &nf.basis()[i] == sv => {}
            _ => return Err(Error::UnknownBasisIndex(name.clone())),
        }
    }
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff;
    use crate::diophantine::borel::{borel_normal_form, expand_normal_form};
    use crate::parse::parse_signature;
    use crate::series::{series_add, series_mul};

    #[test]
    fn format_basics() {
        let sig = parse_signature("vars: theta1:1, theta2:1").unwrap();
        assert_eq!(format_expr(&sig, &GradedSeries::zero()), "0");
        let f = parse_expr(&sig, "theta2*theta1").unwrap();
        assert_eq!(format_expr(&sig, &f), "-theta1*theta2");
    }

    #[test]
    fn format_sorts_and_reduces() {
        let sig = parse_signature("zero: x; vars: xi:2, eta:-2").unwrap();
        let f = parse_expr(&sig, "2/4*xi + eta - x^2 + 1").unwrap();
        let s = format_expr(&sig, &f);
        assert_eq!(s, "eta + 1 - x^2 + 1/2*xi");
        assert_eq!(parse_expr(&sig, &s).unwrap(), f);
    }

    #[test]
    fn roundtrip_samples() {
        let sig = parse_signature("zero: x, y; vars: xi1:1, xi2:2, eta1:-3").unwrap();
        for text in [
            "3/2*x^2*xi1 - eta1",
            "x*y - y*x + xi2^3",
            "-5 + xi1*eta1 - 7/3*xi2*x",
            "xi1*xi2*eta1",
        ] {
            let f = parse_expr(&sig, text).unwrap();
            assert_eq!(parse_expr(&sig, &format_expr(&sig, &f)).unwrap(), f);
        }
    }

    #[test]
    fn normal_form_roundtrip_through_text() {
        let sig = parse_signature("zero: x; vars: xi:2, eta:-2").unwrap();
        let xi = GradedSeries::var(&sig, "xi").unwrap();
        let eta = GradedSeries::var(&sig, "eta").unwrap();
        let xi2eta = series_mul(&sig, &series_mul(&sig, &xi, &xi).unwrap(), &eta).unwrap();
        let f = series_add(&sig, &xi, &xi2eta.scale(&coeff(3, 2))).unwrap();
        let nf = borel_normal_form(&sig, &f, 2).unwrap();
        let text = format_normal_form(&nf);
        let nf2 = parse_normal_form(&sig, &text).unwrap();
        assert_eq!(expand_normal_form(&sig, &nf2).unwrap(), f);
        assert_eq!(format_normal_form(&nf2), text);
    }
}
