//! Bar-length vectors and their combinatorial genericity.
//!
//! A linkage is generic when no subset of bar lengths sums to exactly half
//! the perimeter. Genericity is what makes the configuration spaces
//! manifolds and the subset-sum Betti recursion valid, so the check is
//! exposed with a witness.

use crate::error::LinkageError;
use crate::tol::TAU_GEN;
use serde::{Deserialize, Serialize};

/// A polygonal linkage: the cyclic sequence of bar lengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Linkage {
    lengths: Vec<f64>,
}

impl Linkage {
    /// Validates positivity and the minimum bar count.
    pub fn new(lengths: Vec<f64>) -> Result<Self, LinkageError> {
        if lengths.len() < 3 {
            return Err(LinkageError::TooFewBars(lengths.len()));
        }
        for (i, &l) in lengths.iter().enumerate() {
            if !(l > 0.0) || !l.is_finite() {
                return Err(LinkageError::NonPositiveLength { index: i + 1, value: l });
            }
        }
        Ok(Self { lengths })
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn perimeter(&self) -> f64 {
        self.lengths.iter().sum()
    }

    pub fn max_length(&self) -> f64 {
        self.lengths.iter().cloned().fold(0.0, f64::max)
    }

    /// The moduli space is nonempty iff no bar is longer than the rest
    /// combined, i.e. every length stays below half the perimeter.
    pub fn has_nonempty_moduli(&self) -> bool {
        let half = self.perimeter() / 2.0;
        self.lengths.iter().all(|&l| l < half)
    }

    /// Genericity check: no subset sums to half the perimeter within the
    /// tolerance. Returns the offending subset (1-based indices) otherwise.
    ///
    /// The subset search runs over all 2^n subsets; the first failing
    /// subset in lexicographic order is reported.
    pub fn genericity_witness(&self) -> Option<Vec<usize>> {
        let half = self.perimeter() / 2.0;
        let margin = TAU_GEN * self.perimeter();
        let mut chosen = Vec::new();
        fn dfs(
            lengths: &[f64],
            start: usize,
            sum: f64,
            half: f64,
            margin: f64,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if !chosen.is_empty() && (sum - half).abs() <= margin {
                return true;
            }
            for i in start..lengths.len() {
                // prune: adding everything that remains cannot reach half
                chosen.push(i + 1);
                if dfs(lengths, i + 1, sum + lengths[i], half, margin, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        if dfs(&self.lengths, 0, 0.0, half, margin, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    /// True iff no subset of lengths hits half the perimeter.
    pub fn is_generic(&self) -> bool {
        self.genericity_witness().is_none()
    }
}

/// Spec'd query form: genericity flag plus the witness subset when false.
pub fn is_generic(linkage: &Linkage) -> (bool, Option<Vec<usize>>) {
    match linkage.genericity_witness() {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(Linkage::new(vec![1.0, 2.0]).is_err());
        assert!(Linkage::new(vec![1.0, -2.0, 3.0]).is_err());
        assert!(Linkage::new(vec![1.0, 0.0, 3.0]).is_err());
    }

    #[test]
    fn equilateral_pentagon_is_generic() {
        let l = Linkage::new(vec![1.0; 5]).unwrap();
        assert!(l.is_generic());
        assert!(l.has_nonempty_moduli());
    }

    #[test]
    fn equilateral_hexagon_witness() {
        let l = Linkage::new(vec![1.0; 6]).unwrap();
        let (ok, witness) = is_generic(&l);
        assert!(!ok);
        assert_eq!(witness.unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn near_degenerate_pentagon_is_generic() {
        // one bar close to the sum of the others, still generic
        let l = Linkage::new(vec![1.0, 1.0, 1.0, 1.0, 4.0 - 0.01]).unwrap();
        assert!(l.is_generic());
        assert!(l.has_nonempty_moduli());
    }

    #[test]
    fn pythagorean_quadrilateral_is_not_generic() {
        // {3,6} and {4,5} both sum to half of 18
        let l = Linkage::new(vec![3.0, 4.0, 5.0, 6.0]).unwrap();
        let (ok, witness) = is_generic(&l);
        assert!(!ok);
        let w = witness.unwrap();
        let sum: f64 = w.iter().map(|&i| l.lengths()[i - 1]).sum();
        assert!((sum - 9.0).abs() < 1e-12);
    }

    #[test]
    fn empty_moduli_detected() {
        let l = Linkage::new(vec![10.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(!l.has_nonempty_moduli());
    }
}
