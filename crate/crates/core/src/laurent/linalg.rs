//! Gaussian elimination over a [`crate::field::Field`] with a fixed pivot
//! order (first nonzero entry, top to bottom, left to right).

use crate::field::FieldElem;
use crate::matrix::{Matrix, Ring};
use crate::{Error, Result};

pub type FieldMatrix = Matrix<FieldElem>;

/// Reduced row echelon form `r = e · a` with `e` invertible.
#[derive(Clone, Debug)]
pub struct Rref {
    pub r: FieldMatrix,
    pub e: FieldMatrix,
    pub pivots: Vec<usize>,
}

/// Outcome of solving `a x = b`.
#[derive(Clone, Debug)]
pub enum Solution {
    Solved {
        particular: Vec<FieldElem>,
        kernel: Vec<Vec<FieldElem>>,
    },
    /// `y` with `yᵀ a = 0` and `yᵀ b ≠ 0`.
    Inconsistent { certificate: Vec<FieldElem> },
}

impl Solution {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Solution::Solved { .. })
    }
}

pub fn rref(a: &FieldMatrix) -> Result<Rref> {
    let (m, n) = a.shape();
    let zero = a.zero_elem().clone();
    let mut r = a.clone();
    let mut e = Matrix::identity(m, zero);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        r.swap_rows(row, p);
        e.swap_rows(row, p);
        let inv = r[(row, col)].try_inv()?;
        r.scale_row(row, &inv);
        e.scale_row(row, &inv);
        for i in 0..m {
            if i != row && !r[(i, col)].is_zero() {
                let f = r[(i, col)].neg();
                r.add_row_multiple(i, row, &f);
                e.add_row_multiple(i, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok(Rref { r, e, pivots })
}

pub fn rank(a: &FieldMatrix) -> Result<usize> {
    Ok(rref(a)?.pivots.len())
}

/// Basis of `{x : a x = 0}`, one vector per non-pivot column, with a 1 in
/// that column.
pub fn kernel_basis(a: &FieldMatrix) -> Result<Vec<Vec<FieldElem>>> {
    let red = rref(a)?;
    Ok(kernel_from(&red, a.cols(), a.zero_elem()))
}

fn kernel_from(red: &Rref, n: usize, zero: &FieldElem) -> Vec<Vec<FieldElem>> {
    (0..n)
        .filter(|c| !red.pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero.clone(); n];
            v[free] = zero.one_like();
            for (i, &p) in red.pivots.iter().enumerate() {
                v[p] = red.r[(i, free)].neg();
            }
            v
        })
        .collect()
}

pub fn solve(a: &FieldMatrix, b: &[FieldElem]) -> Result<Solution> {
    let (m, n) = a.shape();
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {}, expected {m}",
            b.len()
        )));
    }
    let zero = a.zero_elem().clone();
    let red = rref(a)?;
    let eb = red.e.mul_vec(b);
    let rank = red.pivots.len();
    if let Some(i) = (rank..m).find(|&i| !eb[i].is_zero()) {
        return Ok(Solution::Inconsistent {
            certificate: red.e.row(i).to_vec(),
        });
    }
    let mut particular = vec![zero.clone(); n];
    for (i, &p) in red.pivots.iter().enumerate() {
        particular[p] = eb[i].clone();
    }
    Ok(Solution::Solved {
        particular,
        kernel: kernel_from(&red, n, &zero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtConjugation, Field, RootChoice};
    use proptest::prelude::*;

    fn dot(v: &[FieldElem], w: &[FieldElem], field: &Field) -> FieldElem {
        v.iter().zip(w).fold(field.zero(), |acc, (x, y)| acc.add(&x.mul(y)))
    }

    fn kz() -> Field {
        let q = Field::rationals();
        q.extension(
            &[q.from_int(1), q.from_int(-6), q.from_int(1)],
            ExtConjugation::Real,
            RootChoice::LargestModulus,
        )
        .unwrap()
    }

    fn jacobian_at_root() -> FieldMatrix {
        // torus bundle J with σ₁ trivial, evaluated at z with z² = 6z − 1
        let k = kz();
        let z = k.generator().unwrap();
        let c = |n: i64| k.from_int(n);
        Matrix::from_rows(
            vec![vec![c(0), z.sub(&c(1)), c(-2)], vec![c(0), c(-2), z.sub(&c(5))]],
            k.zero(),
        )
    }

    #[test]
    fn rank_and_kernel_at_root() {
        let a = jacobian_at_root();
        assert_eq!(rank(&a).unwrap(), 1);
        let k = kz();
        let z = k.generator().unwrap();
        let ker = kernel_basis(&a).unwrap();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.mul_vec(v).iter().all(FieldElem::is_zero));
        }
        // the span contains (1,0,0) and (0,2,z−1)
        let want = vec![k.zero(), k.from_int(2), z.sub(&k.one())];
        assert!(a.mul_vec(&want).iter().all(FieldElem::is_zero));
        let span = Matrix::from_rows(vec![ker[0].clone(), ker[1].clone(), want], k.zero());
        assert_eq!(rank(&span).unwrap(), 2);
        let e1 = vec![k.one(), k.zero(), k.zero()];
        let span = Matrix::from_rows(vec![ker[0].clone(), ker[1].clone(), e1], k.zero());
        assert_eq!(rank(&span).unwrap(), 2);
    }

    #[test]
    fn identity_solve() {
        let q = Field::rationals();
        let id = Matrix::identity(3, q.zero());
        let b = vec![q.from_int(1), q.from_int(-2), q.from_int(5)];
        match solve(&id, &b).unwrap() {
            Solution::Solved { particular, kernel } => {
                assert_eq!(particular, b);
                assert!(kernel.is_empty());
            }
            Solution::Inconsistent { .. } => panic!("identity system is solvable"),
        }
    }

    #[test]
    fn inconsistent_certificate() {
        let a = jacobian_at_root();
        let k = kz();
        let b = vec![k.one(), k.zero()];
        let Solution::Inconsistent { certificate } = solve(&a, &b).unwrap() else {
            panic!("expected an inconsistent system");
        };
        for j in 0..3 {
            assert!(dot(&certificate, &a.column(j), &k).is_zero());
        }
        assert!(!dot(&certificate, &b, &k).is_zero());
    }

    #[test]
    fn zero_divisor_propagates() {
        let q = Field::rationals();
        let k = q
            .extension(
                &[q.from_int(-1), q.zero(), q.one()],
                ExtConjugation::Unmarked,
                RootChoice::LargestModulus,
            )
            .unwrap();
        let s = k.generator().unwrap();
        let a = Matrix::from_rows(vec![vec![s.sub(&k.one()), k.one()]], k.zero());
        assert_eq!(rank(&a), Err(Error::ReducibleMinpoly));
    }

    proptest! {
        #[test]
        fn solve_round_trip(entries in prop::collection::vec(-3i64..=3, 12), x in prop::collection::vec(-3i64..=3, 4)) {
            let q = Field::rationals();
            let a = Matrix::from_fn(3, 4, q.zero(), |i, j| q.from_int(entries[i * 4 + j]));
            let x: Vec<FieldElem> = x.iter().map(|&v| q.from_int(v)).collect();
            let b = a.mul_vec(&x);
            let Solution::Solved { particular, kernel } = solve(&a, &b).unwrap() else {
                return Err(TestCaseError::fail("consistent system reported unsolvable"));
            };
            prop_assert_eq!(a.mul_vec(&particular), b);
            prop_assert_eq!(kernel.len(), 4 - rank(&a).unwrap());
            for v in kernel {
                prop_assert!(a.mul_vec(&v).iter().all(FieldElem::is_zero));
            }
        }
    }
}
