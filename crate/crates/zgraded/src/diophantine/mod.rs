//! Minimal solutions of the weight equation `α·p − β·q = r`, the Hilbert
//! basis of the weight-0 solution monoid, canonical decomposition, and the
//! Borel normal form.
//!
//! The equation's nonnegative solutions form the set `S(α,β,r)`; its
//! componentwise-minimal elements `M(α,β,r)` and the minimal nonzero
//! solutions `M(α,β)` of the homogeneous equation are both finite (Dickson),
//! and every solution splits as a particular element of `M(α,β,r)` plus an
//! ℕ-combination of `M(α,β)`.

pub(crate) mod borel;

pub use borel::{borel_normal_form, expand_normal_form, BorelNormalForm};

use std::fmt;

use crate::error::Error;

/// A nonnegative solution of `α·p − β·q = r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionVector {
    pub p: Vec<u64>,
    pub q: Vec<u64>,
}

impl SolutionVector {
    pub fn new(p: Vec<u64>, q: Vec<u64>) -> SolutionVector {
        SolutionVector { p, q }
    }

    pub fn zero(n: usize, m: usize) -> SolutionVector {
        SolutionVector {
            p: vec![0; n],
            q: vec![0; m],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().chain(self.q.iter()).all(|&x| x == 0)
    }

    /// Componentwise order: true iff `self ≤ other` in every coordinate.
    pub fn dominated_by(&self, other: &SolutionVector) -> bool {
        other.dominates(self)
    }

    /// Componentwise order: true iff `self ≥ other` in every coordinate.
    pub fn dominates(&self, other: &SolutionVector) -> bool {
        self.p.len() == other.p.len()
            && self.q.len() == other.q.len()
            && self.p.iter().zip(&other.p).all(|(a, b)| a >= b)
            && self.q.iter().zip(&other.q).all(|(a, b)| a >= b)
    }

    pub fn defect(&self, alpha: &[u64], beta: &[u64]) -> i128 {
        let pos: i128 = self
            .p
            .iter()
            .zip(alpha)
            .map(|(&x, &a)| x as i128 * a as i128)
            .sum();
        let neg: i128 = self
            .q
            .iter()
            .zip(beta)
            .map(|(&x, &b)| x as i128 * b as i128)
            .sum();
        pos - neg
    }

    fn checked_sub(&self, other: &SolutionVector) -> Option<SolutionVector> {
        if !self.dominates(other) {
            return None;
        }
        Some(SolutionVector {
            p: self.p.iter().zip(&other.p).map(|(a, b)| a - b).collect(),
            q: self.q.iter().zip(&other.q).map(|(a, b)| a - b).collect(),
        })
    }

    fn add_scaled(&mut self, other: &SolutionVector, k: u64) {
        for (a, b) in self.p.iter_mut().zip(&other.p) {
            *a += b * k;
        }
        for (a, b) in self.q.iter_mut().zip(&other.q) {
            *a += b * k;
        }
    }
}

impl fmt::Display for SolutionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "p=({}) q=({})", join(&self.p), join(&self.q))
    }
}

/// Minimal nonzero solutions of a single homogeneous equation
/// `Σ cᵢ xᵢ = 0` with nonzero integer coefficients.
///
/// Frontier completion by total degree with componentwise-dominance pruning,
/// confined to the per-coordinate box `xᵢ ≤ max |cⱼ|` over the opposite-sign
/// coefficients (outside it no minimal solution exists; certified against
/// the exhaustive oracle in the test suite).
fn minimal_homogeneous(coeffs: &[i64]) -> Vec<Vec<u64>> {
    let n = coeffs.len();
    let bounds: Vec<u64> = coeffs
        .iter()
        .map(|&c| {
            coeffs
                .iter()
                .filter(|&&d| (c > 0) != (d > 0))
                .map(|&d| d.unsigned_abs())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let defect = |v: &[u64]| -> i128 {
        v.iter()
            .zip(coeffs)
            .map(|(&x, &c)| x as i128 * c as i128)
            .sum()
    };
    let mut minimal: Vec<Vec<u64>> = Vec::new();
    // (vector, smallest coordinate allowed to grow next): each vector is
    // reached exactly once, along its sorted increment sequence.
    let mut frontier: Vec<(Vec<u64>, usize)> = vec![(vec![0; n], 0)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (v, start) in frontier {
            for i in start..n {
                if v[i] + 1 > bounds[i] {
                    continue;
                }
                let mut w = v.clone();
                w[i] += 1;
                if minimal
                    .iter()
                    .any(|s| s.iter().zip(&w).all(|(a, b)| a <= b))
                {
                    continue;
                }
                if defect(&w) == 0 {
                    minimal.push(w);
                } else {
                    next.push((w, i));
                }
            }
        }
        frontier = next;
    }
    minimal.sort();
    minimal
}

/// The Hilbert basis `M(α,β)`: componentwise-minimal nonzero solutions of
/// `α·p = β·q`. Returns the empty set when either side is empty.
pub fn hilbert_basis(alpha: &[u64], beta: &[u64]) -> Vec<SolutionVector> {
    let n = alpha.len();
    let coeffs: Vec<i64> = alpha
        .iter()
        .map(|&a| a as i64)
        .chain(beta.iter().map(|&b| -(b as i64)))
        .collect();
    minimal_homogeneous(&coeffs)
        .into_iter()
        .map(|v| SolutionVector::new(v[..n].to_vec(), v[n..].to_vec()))
        .collect()
}

/// The set `M(α,β,r)` of componentwise-minimal solutions of
/// `α·p − β·q = r`. For `r = 0` this is the singleton zero solution.
///
/// For `r ≠ 0` the instance is homogenized with a slack variable `t` of
/// coefficient `−r`; minimal inhomogeneous solutions are exactly the
/// minimal homogeneous solutions with `t = 1`.
pub fn minimal_solutions(alpha: &[u64], beta: &[u64], r: i64) -> Vec<SolutionVector> {
    let n = alpha.len();
    let m = beta.len();
    if r == 0 {
        return vec![SolutionVector::zero(n, m)];
    }
    let coeffs: Vec<i64> = alpha
        .iter()
        .map(|&a| a as i64)
        .chain(beta.iter().map(|&b| -(b as i64)))
        .chain(std::iter::once(-r))
        .collect();
    let mut out: Vec<SolutionVector> = minimal_homogeneous(&coeffs)
        .into_iter()
        .filter(|v| v[n + m] == 1)
        .map(|v| SolutionVector::new(v[..n].to_vec(), v[n..n + m].to_vec()))
        .collect();
    out.sort();
    out
}

/// The instance data of Appendix-B combinatorics: `M(α,β,r)` plus the
/// Hilbert basis `M(α,β)`, both sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSolutionSet {
    alpha: Vec<u64>,
    beta: Vec<u64>,
    r: i64,
    particular: Vec<SolutionVector>,
    homogeneous_basis: Vec<SolutionVector>,
}

/// Result of [`MinimalSolutionSet::decompose`]: `sol = particular + Σ mult·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub particular: SolutionVector,
    /// Nonzero multiplicities over basis elements, in basis (lex) order.
    pub combo: Vec<(SolutionVector, u64)>,
}

impl Decomposition {
    pub fn recompose(&self) -> SolutionVector {
        let mut out = self.particular.clone();
        for (b, k) in &self.combo {
            out.add_scaled(b, *k);
        }
        out
    }
}

impl MinimalSolutionSet {
    pub fn compute(alpha: Vec<u64>, beta: Vec<u64>, r: i64) -> MinimalSolutionSet {
        let particular = minimal_solutions(&alpha, &beta, r);
        let homogeneous_basis = hilbert_basis(&alpha, &beta);
        MinimalSolutionSet {
            alpha,
            beta,
            r,
            particular,
            homogeneous_basis,
        }
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn weight(&self) -> i64 {
        self.r
    }

    pub fn particular(&self) -> &[SolutionVector] {
        &self.particular
    }

    pub fn homogeneous_basis(&self) -> &[SolutionVector] {
        &self.homogeneous_basis
    }

    /// Canonical decomposition `sol = particular + Σ mult·b`.
    ///
    /// Particulars are tried in lex order; for each, the multiplicity vector
    /// over the lex-sorted basis is minimized lexicographically. The
    /// decomposition exists for every solution of the instance.
    pub fn decompose(&self, sol: &SolutionVector) -> Result<Decomposition, Error> {
        if sol.p.len() != self.alpha.len() || sol.q.len() != self.beta.len() {
            return Err(Error::SolutionLength {
                expected: self.alpha.len() + self.beta.len(),
                got: sol.p.len() + sol.q.len(),
            });
        }
        if sol.defect(&self.alpha, &self.beta) != self.r as i128 {
            return Err(Error::NotASolution);
        }
        // Coordinate coverage of basis suffixes, for dead-end pruning.
        let nm = self.alpha.len() + self.beta.len();
        let flat = |s: &SolutionVector| -> Vec<u64> {
            s.p.iter().chain(s.q.iter()).copied().collect()
        };
        let basis: Vec<Vec<u64>> = self.homogeneous_basis.iter().map(&flat).collect();
        let mut coverage = vec![0u64; basis.len() + 1];
        for (k, b) in basis.iter().enumerate().rev() {
            let mut mask = coverage[k + 1];
            for (c, &x) in b.iter().enumerate() {
                if x > 0 {
                    mask |= 1 << c;
                }
            }
            coverage[k] = mask;
        }

        fn residual_mask(rem: &[u64]) -> u64 {
            rem.iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .fold(0u64, |m, (c, _)| m | (1 << c))
        }

        fn search(
            basis: &[Vec<u64>],
            coverage: &[u64],
            k: usize,
            rem: &mut [u64],
            counts: &mut Vec<u64>,
        ) -> bool {
            let mask = residual_mask(rem);
            if mask == 0 {
                counts.extend(std::iter::repeat(0).take(basis.len() - k));
                return true;
            }
            if k == basis.len() || mask & !coverage[k] != 0 {
                return false;
            }
            let b = &basis[k];
            let max = b
                .iter()
                .zip(rem.iter())
                .filter(|(&bx, _)| bx > 0)
                .map(|(&bx, &rx)| rx / bx)
                .min()
                .unwrap_or(0);
            for count in 0..=max {
                if count > 0 {
                    for (r, &bx) in rem.iter_mut().zip(b.iter()) {
                        *r -= bx;
                    }
                }
                counts.push(count);
                if search(basis, coverage, k + 1, rem, counts) {
                    return true;
                }
                counts.pop();
            }
            // undo the `max` subtractions
            for (r, &bx) in rem.iter_mut().zip(b.iter()) {
                *r += bx * max;
            }
            false
        }

        for particular in &self.particular {
            let Some(residual) = sol.checked_sub(particular) else {
                continue;
            };
            let mut rem = flat(&residual);
            debug_assert_eq!(rem.len(), nm);
            let mut counts = Vec::with_capacity(basis.len());
            if search(&basis, &coverage, 0, &mut rem, &mut counts) {
                let combo = self
                    .homogeneous_basis
                    .iter()
                    .zip(&counts)
                    .filter(|(_, &c)| c > 0)
                    .map(|(b, &c)| (b.clone(), c))
                    .collect();
                return Ok(Decomposition {
                    particular: particular.clone(),
                    combo,
                });
            }
        }
        // Lemma-level guarantee: S = M(α,β,r) + S(α,β), so a valid solution
        // always decomposes; reaching this point means the inputs violated
        // the instance.
        Err(Error::NotASolution)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(p: &[u64], q: &[u64]) -> SolutionVector {
        SolutionVector::new(p.to_vec(), q.to_vec())
    }

    #[test]
    fn basis_examples() {
        assert_eq!(hilbert_basis(&[1], &[1]), vec![sv(&[1], &[1])]);
        assert_eq!(
            hilbert_basis(&[1, 2], &[3]),
            vec![sv(&[0, 3], &[2]), sv(&[1, 1], &[1]), sv(&[3, 0], &[1])]
        );
        assert_eq!(hilbert_basis(&[2], &[3]), vec![sv(&[3], &[2])]);
        assert_eq!(hilbert_basis(&[], &[2]), vec![]);
    }

    #[test]
    fn minimal_solution_examples() {
        assert_eq!(minimal_solutions(&[2], &[3], 1), vec![sv(&[2], &[1])]);
        assert_eq!(minimal_solutions(&[2], &[3], 0), vec![sv(&[0], &[0])]);
        assert_eq!(minimal_solutions(&[2], &[2], 2), vec![sv(&[1], &[0])]);
        assert_eq!(minimal_solutions(&[], &[2], 3), vec![]);
    }

    #[test]
    fn minimality_is_pairwise() {
        let basis = hilbert_basis(&[1, 2, 3], &[2, 4]);
        for a in &basis {
            for b in &basis {
                if a != b {
                    assert!(!a.dominates(b), "{a} dominates {b}");
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let set = MinimalSolutionSet::compute(vec![2], vec![3], 1);
        let d = set.decompose(&sv(&[5], &[3])).unwrap();
        assert_eq!(d.particular, sv(&[2], &[1]));
        assert_eq!(d.combo, vec![(sv(&[3], &[2]), 1)]);
        assert_eq!(d.recompose(), sv(&[5], &[3]));

        // already minimal
        let d = set.decompose(&sv(&[2], &[1])).unwrap();
        assert!(d.combo.is_empty());

        let set = MinimalSolutionSet::compute(vec![1], vec![1], 0);
        let d = set.decompose(&sv(&[4], &[4])).unwrap();
        assert_eq!(d.particular, sv(&[0], &[0]));
        assert_eq!(d.combo, vec![(sv(&[1], &[1]), 4)]);

        assert_eq!(
            set.decompose(&sv(&[4], &[3])).unwrap_err(),
            Error::NotASolution
        );
    }
}
