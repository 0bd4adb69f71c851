//! Bott's theorem on Grassmannians.
//!
//! On `G(r, n)` let `S` be the dual of the universal subbundle (so `det S =
//! O(1)`) and `Q` the universal quotient. For `α = (β, γ)` with `β` of length
//! `r` and `γ` of length `n - r`, both weakly decreasing, the bundle
//!
//! ```text
//! V(α) = Σ^β S ⊗ Σ^γ Q*
//! ```
//!
//! has cohomology computed from `α + ρ`, `ρ = (n, n-1, …, 1)`: a repeated
//! entry kills everything, otherwise the cohomology sits in the single degree
//! given by the number of inversions and is the irreducible `GL(n)` module of
//! highest weight `sort(α + ρ) - ρ`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::symfunc::{weyl_dimension, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BottError {
    #[error("weight block {0} is not weakly decreasing")]
    NotDominantInBlock(&'static str),
    #[error("need 0 < r < n with |beta| = r and |gamma| = n - r (got n={n}, r={r}, |beta|={beta}, |gamma|={gamma})")]
    BadShape {
        n: usize,
        r: usize,
        beta: usize,
        gamma: usize,
    },
    #[error("complex has no terms")]
    EmptyComplex,
}

/// `Σ^β S ⊗ Σ^γ Q*` on `G(r, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottInput {
    pub n: usize,
    pub r: usize,
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
}

impl BottInput {
    pub fn new(n: usize, r: usize, beta: Vec<i64>, gamma: Vec<i64>) -> Result<Self, BottError> {
        let input = Self { n, r, beta, gamma };
        input.validate()?;
        Ok(input)
    }

    /// The structure sheaf of `G(r, n)`.
    pub fn trivial(n: usize, r: usize) -> Result<Self, BottError> {
        Self::new(n, r, vec![0; r], vec![0; n.saturating_sub(r)])
    }

    /// `O(d)` on `P^m = G(1, m+1)`.
    pub fn line_bundle(m: usize, d: i64) -> Result<Self, BottError> {
        Self::new(m + 1, 1, vec![d], vec![0; m])
    }

    pub fn validate(&self) -> Result<(), BottError> {
        if self.r == 0 || self.r >= self.n || self.beta.len() != self.r || self.gamma.len() != self.n - self.r {
            return Err(BottError::BadShape {
                n: self.n,
                r: self.r,
                beta: self.beta.len(),
                gamma: self.gamma.len(),
            });
        }
        if !Weight::new(self.beta.clone()).is_dominant() {
            return Err(BottError::NotDominantInBlock("beta"));
        }
        if !Weight::new(self.gamma.clone()).is_dominant() {
            return Err(BottError::NotDominantInBlock("gamma"));
        }
        Ok(())
    }

    /// `α = (β, γ)`.
    pub fn alpha(&self) -> Vec<i64> {
        self.beta.iter().chain(&self.gamma).copied().collect()
    }

    /// Dimension of the Grassmannian.
    pub fn grassmannian_dimension(&self) -> usize {
        self.r * (self.n - self.r)
    }

    /// The input for `V(α)^* ⊗ ω`, with `ω = O(-n)`.
    pub fn serre_dual(&self) -> Self {
        let n = self.n as i64;
        Self {
            n: self.n,
            r: self.r,
            beta: self.beta.iter().rev().map(|b| -b - n).collect(),
            gamma: self.gamma.iter().rev().map(|g| -g).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BottOutcome {
    AllVanish,
    Cohomology {
        degree: usize,
        weight: Vec<i64>,
        dimension: u64,
    },
}

impl BottOutcome {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, BottOutcome::AllVanish)
    }

    /// `Σ (-1)^i h^i`.
    pub fn euler_characteristic(&self) -> i128 {
        match self {
            BottOutcome::AllVanish => 0,
            BottOutcome::Cohomology { degree, dimension, .. } => {
                let d = *dimension as i128;
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

pub fn bott_cohomology(input: &BottInput) -> Result<BottOutcome, BottError> {
    input.validate()?;
    let n = input.n;
    let shifted: Vec<i64> = input
        .alpha()
        .iter()
        .enumerate()
        .map(|(i, a)| a + (n - i) as i64)
        .collect();
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if shifted[i] == shifted[j] {
                return Ok(BottOutcome::AllVanish);
            }
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weight: Vec<i64> = sorted.iter().enumerate().map(|(i, s)| s - (n - i) as i64).collect();
    let dimension = weyl_dimension(&Weight::new(weight.clone()), n);
    Ok(BottOutcome::Cohomology {
        degree: inversions,
        weight,
        dimension,
    })
}

/// Tensor with `O(t) = (det S)^t`.
pub fn twist_by_hyperplane(input: &BottInput, t: i64) -> BottInput {
    BottInput {
        beta: input.beta.iter().map(|b| b + t).collect(),
        ..input.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    AllTermsVanish,
    SingleSurvivor { term: usize, outcome: BottOutcome },
    Inconclusive { survivors: Vec<usize> },
}

/// What the cohomology of the terms of a resolution says about the resolved
/// sheaf, without looking at any differential.
pub fn complex_vanishing(terms: &[BottInput]) -> Result<Verdict, BottError> {
    if terms.is_empty() {
        return Err(BottError::EmptyComplex);
    }
    let mut survivors = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let o = bott_cohomology(t)?;
        if !o.is_vanishing() {
            survivors.push((i, o));
        }
    }
    Ok(match survivors.len() {
        0 => Verdict::AllTermsVanish,
        1 => {
            let (term, outcome) = survivors.pop().unwrap();
            Verdict::SingleSurvivor { term, outcome }
        }
        _ => Verdict::Inconclusive {
            survivors: survivors.into_iter().map(|(i, _)| i).collect(),
        },
    })
}

/// Terms of the conic and local-freeness complexes.
pub mod suites {
    use super::{twist_by_hyperplane, BottInput};

    /// `Ω¹_{P²}(t) = S^{-1}(t) ⊗ Q*`.
    pub fn omega_p2(t: i64) -> BottInput {
        BottInput::new(3, 1, vec![t - 1], vec![1, 0]).unwrap()
    }

    /// `Sym² T_{P²}(-1) ⊗ O(t)`, using `T(-1) = Q` and `Sym² Q = Σ^{(0,-2)} Q*`.
    pub fn sym2_tangent_p2(t: i64) -> BottInput {
        twist_by_hyperplane(&BottInput::new(3, 1, vec![0], vec![0, -2]).unwrap(), t)
    }

    /// `Q*(-j)` on `G(2,4)`.
    pub fn quot_dual_g24(j: i64) -> BottInput {
        BottInput::new(4, 2, vec![-j, -j], vec![1, 0]).unwrap()
    }

    /// The two terms whose vanishing gives `H^•(Q*|_q) = 0` on the plane branch.
    pub fn conic_plane_branch() -> Vec<BottInput> {
        vec![omega_p2(-1), omega_p2(1)]
    }

    /// Koszul terms on the Grassmannian branch.
    pub fn conic_grassmannian_branch() -> Vec<BottInput> {
        (0..4).map(quot_dual_g24).collect()
    }

    /// Terms for the local-freeness computation.
    pub fn locfree_plane_case() -> Vec<BottInput> {
        vec![sym2_tangent_p2(-3), sym2_tangent_p2(-1)]
    }
}
