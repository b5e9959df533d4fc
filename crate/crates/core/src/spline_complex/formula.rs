//! The ideal-theoretic oracle:
//! `dim C_d = Σ_τ C(d - (r+1) n_τ + 2, 2) + HF(S/J, d)` with `J = ⟨G_τ^(r+1)⟩`.

use super::{SplineError, StarComplex};
use crate::hilbert::{binomial_truncated, hilbert_data, postulation_from_values, HilbertData, Multiplicity, QPoly};

/// Hilbert data of `S/J` plus the edge degrees, enough to evaluate the
/// spline dimension in any degree.
#[derive(Clone, Debug)]
pub struct FormulaOracle {
    r: u32,
    degrees: Vec<u32>,
    quotient: HilbertData,
}

impl FormulaOracle {
    pub fn new(c: &StarComplex, r: u32) -> Result<Self, SplineError> {
        for i in 0..c.num_edges() {
            let found = c.smoothness(i);
            if found != r {
                return Err(SplineError::MixedSmoothness {
                    expected: r,
                    edge: i,
                    found,
                });
            }
        }
        let quotient = hilbert_data(&c.j_ideal())?;
        Ok(FormulaOracle {
            r,
            degrees: c.degrees(),
            quotient,
        })
    }

    pub fn smoothness(&self) -> u32 {
        self.r
    }

    /// Hilbert data of `S/J`.
    pub fn quotient(&self) -> &HilbertData {
        &self.quotient
    }

    /// `Σ_τ C(d - (r+1) n_τ + 2, 2)`, truncated binomials.
    pub fn edge_part(&self, d: u32) -> u64 {
        self.degrees
            .iter()
            .map(|&n| binomial_truncated(d as i64 - ((self.r + 1) * n) as i64 + 2, 2) as u64)
            .sum()
    }

    pub fn dim(&self, d: u32) -> u64 {
        self.edge_part(d) + self.quotient.value(d)
    }

    /// Hilbert polynomial of the spline module (binomials as polynomials).
    pub fn hilbert_polynomial(&self) -> QPoly {
        self.degrees.iter().fold(self.quotient.hp.clone(), |acc, &n| {
            acc.add(&QPoly::binomial(2 - ((self.r + 1) * n) as i64, 2))
        })
    }

    /// Largest `d ≥ 0` where the spline dimension differs from its Hilbert
    /// polynomial, or `-1`.
    pub fn postulation(&self) -> i64 {
        let edge_bound = self
            .degrees
            .iter()
            .map(|&n| ((self.r + 1) * n) as i64 - 3)
            .max()
            .unwrap_or(0);
        let bound = self.quotient.postulation.max(edge_bound).max(0) + 1;
        let values: Vec<u64> = (0..=bound as u32).map(|d| self.dim(d)).collect();
        postulation_from_values(&values, &self.hilbert_polynomial())
    }

    /// Multiplicity of `S/J`.
    pub fn multiplicity(&self) -> &Multiplicity {
        &self.quotient.multiplicity
    }
}

/// `dim C^r_d` from the Hilbert function of `S/J`.
pub fn dim_formula(c: &StarComplex, r: u32, d: u32) -> Result<u64, SplineError> {
    Ok(FormulaOracle::new(c, r)?.dim(d))
}
