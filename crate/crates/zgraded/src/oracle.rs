//! Deliberately naive reference implementations, kept independent of the
//! code paths they validate. Used by the property tests and the `--verify`
//! CLI flag.

use crate::diophantine::SolutionVector;
use crate::error::Error;
use crate::euler::GradedMorphism;
use crate::filtration::{truncate, Flavor};
use crate::monomial::Monomial;
use crate::series::{combine_truncations, series_add, series_mul, GradedSeries};
use crate::signature::WeightSignature;

/// Decides filtration-ideal membership directly from the definitions.
///
/// `F`: searches the sub-multisets of the nonzero-weight factors of `m` for
/// one of total weight ≥ `p` (the homogeneous generator the monomial is a
/// multiple of). `UF`: counts nonzero-weight factors.
pub fn oracle_ideal_membership(
    sig: &WeightSignature,
    m: &Monomial,
    flavor: Flavor,
    p: u64,
) -> bool {
    match flavor {
        Flavor::UF => {
            let count: u64 = m
                .iter()
                .filter(|(i, _)| sig.weight(*i) != 0)
                .map(|(_, e)| e)
                .sum();
            count >= p
        }
        Flavor::F => {
            let factors: Vec<(i64, u64)> = m
                .iter()
                .filter(|(i, _)| sig.weight(*i) != 0)
                .map(|(i, e)| (sig.weight(i), e))
                .collect();
            // Suffix sums of the positive contributions let the search stop
            // early on hopeless branches.
            let mut positive_left: Vec<i64> = vec![0; factors.len() + 1];
            for i in (0..factors.len()).rev() {
                let (w, e) = factors[i];
                positive_left[i] =
                    positive_left[i + 1] + if w > 0 { w * e as i64 } else { 0 };
            }
            fn search(
                factors: &[(i64, u64)],
                positive_left: &[i64],
                i: usize,
                acc: i64,
                p: i64,
            ) -> bool {
                if acc >= p {
                    return true;
                }
                if i == factors.len() || acc + positive_left[i] < p {
                    return false;
                }
                let (w, e) = factors[i];
                (0..=e).rev().any(|k| {
                    search(factors, positive_left, i + 1, acc + w * k as i64, p)
                })
            }
            search(&factors, &positive_left, 0, 0, p as i64)
        }
    }
}

/// Box-bounded exhaustive search for the componentwise-minimal solutions of
/// `α·p − β·q = r` with all components ≤ `box_bound`. Complete only
/// relative to the box; the zero vector is excluded when `r = 0`.
pub fn oracle_minimal_solutions(
    alpha: &[u64],
    beta: &[u64],
    r: i64,
    box_bound: u64,
) -> Vec<SolutionVector> {
    let n = alpha.len();
    let m = beta.len();
    let width = n + m;
    // Bucket the q grid by β·q, then scan the p grid for matching values,
    // collecting every solution bucketed by total component sum.
    let qgrid = grid(m, box_bound);
    let mut by_value: std::collections::HashMap<i64, Vec<usize>> =
        std::collections::HashMap::new();
    for (qi, q) in qgrid.iter().enumerate() {
        let v: i64 = beta.iter().zip(q).map(|(&b, &x)| b as i64 * x as i64).sum();
        by_value.entry(v).or_default().push(qi);
    }
    let max_sum = (width as u64 * box_bound) as usize;
    let mut by_sum: Vec<Vec<u64>> = vec![Vec::new(); max_sum + 1];
    for p in grid(n, box_bound) {
        let v: i64 = alpha.iter().zip(&p).map(|(&a, &x)| a as i64 * x as i64).sum();
        if let Some(qis) = by_value.get(&(v - r)) {
            let psum: u64 = p.iter().sum();
            for &qi in qis {
                let q = &qgrid[qi];
                let total = (psum + q.iter().sum::<u64>()) as usize;
                if r == 0 && total == 0 {
                    continue;
                }
                by_sum[total].extend_from_slice(&p);
                by_sum[total].extend_from_slice(q);
            }
        }
    }
    // Minimality filter in nondecreasing total-sum order: a solution can
    // only be dominated by one of strictly smaller component sum, so
    // comparing against the already-accepted minimal elements is exhaustive.
    let mut minimal: Vec<u64> = Vec::new();
    if width == 0 {
        return Vec::new();
    }
    for bucket in &by_sum {
        for cand in bucket.chunks(width) {
            let dominated = minimal
                .chunks(width)
                .any(|b| b.iter().zip(cand).all(|(x, y)| x <= y));
            if !dominated {
                minimal.extend_from_slice(cand);
            }
        }
    }
    let mut out: Vec<SolutionVector> = minimal
        .chunks(width)
        .map(|row| SolutionVector::new(row[..n].to_vec(), row[n..].to_vec()))
        .collect();
    out.sort();
    out
}

/// All vectors of the given length with components `0..=bound`.
fn grid(len: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Literal substitution: every target variable is replaced by its full
/// pullback image and the result expanded by plain multiplication, with no
/// base/increment split. Reference for `GradedMorphism::apply`.
pub fn oracle_substitute(
    phi: &GradedMorphism,
    f: &GradedSeries,
) -> Result<GradedSeries, Error> {
    let src = phi.source();
    let trunc = combine_truncations(phi.truncation(), f.truncation())?;
    let mut acc = GradedSeries::zero();
    for (m, c) in f.terms() {
        let mut term = GradedSeries::constant(c.clone());
        if let Some(t) = trunc {
            term = truncate(src, &term, t.flavor, t.order);
        }
        for (idx, e) in m.iter() {
            for _ in 0..e {
                term = series_mul(src, &term, phi.image(idx))?;
            }
        }
        acc = series_add(src, &acc, &term)?;
    }
    Ok(match trunc {
        Some(t) => truncate(src, &acc, t.flavor, t.order),
        None => acc.untagged(),
    })
}
