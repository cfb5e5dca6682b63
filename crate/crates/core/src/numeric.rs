//! Double-precision recomputation of exact rank and solvability decisions.
//! Float results never decide anything; they only flag disagreement.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::deformation::LinearDecision;
use crate::field::FieldElem;
use crate::laurent::FieldMatrix;

/// Relative threshold for a singular value to count as nonzero.
pub const TOLERANCE: f64 = 1e-8;

fn embed(a: &FieldMatrix, extra: Option<&[FieldElem]>) -> DMatrix<Complex64> {
    let (r, c) = a.shape();
    let cols = c + usize::from(extra.is_some());
    DMatrix::from_fn(r, cols, |i, j| match extra {
        Some(b) if j == c => b[i].complex_embed(),
        _ => a[(i, j)].complex_embed(),
    })
}

fn numeric_rank(m: DMatrix<Complex64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    let cut = TOLERANCE * top.max(1.0);
    sv.iter().filter(|&&s| s > cut).count()
}

pub fn float_rank(a: &FieldMatrix) -> usize {
    numeric_rank(embed(a, None))
}

/// `Ax = b` is solvable iff appending `b` does not raise the rank.
pub fn float_solvable(a: &FieldMatrix, b: &[FieldElem]) -> bool {
    numeric_rank(embed(a, Some(b))) == float_rank(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FloatCheck {
    pub label: String,
    pub exact_rank: usize,
    pub float_rank: usize,
    pub exact_solvable: Option<bool>,
    pub float_solvable: Option<bool>,
}

impl FloatCheck {
    pub fn agrees(&self) -> bool {
        self.exact_rank == self.float_rank && self.exact_solvable == self.float_solvable
    }
}

pub fn cross_check(decisions: &[LinearDecision]) -> Vec<FloatCheck> {
    decisions
        .iter()
        .map(|d| FloatCheck {
            label: d.label.clone(),
            exact_rank: d.rank,
            float_rank: float_rank(&d.matrix),
            exact_solvable: d.solvable,
            float_solvable: d.rhs.as_ref().map(|b| float_solvable(&d.matrix, b)),
        })
        .collect()
}

/// Human-readable warnings for every disagreement.
pub fn disagreements(checks: &[FloatCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.agrees())
        .map(|c| {
            format!(
                "float check disagrees on {}: exact rank {} / solvable {:?}, float rank {} / solvable {:?}",
                c.label, c.exact_rank, c.exact_solvable, c.float_rank, c.float_solvable
            )
        })
        .collect()
}
