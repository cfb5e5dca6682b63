use super::LaurentPoly;
use crate::matrix::{combinations, smith_normal_form, Matrix, Ring, SmithDecomposition};
use crate::{Error, Result};

pub type LaurentMatrix = Matrix<LaurentPoly>;

/// Smith form over `K[t^±1]` together with its invariant factors listed in
/// descending divisibility `r₀, r₁, …` with `r_{i+1} | r_i`.
#[derive(Clone, Debug)]
pub struct SmithDecompositionR {
    pub decomposition: SmithDecomposition<LaurentPoly>,
    pub factors: Vec<LaurentPoly>,
}

impl SmithDecompositionR {
    /// Product of the `j` factors of smallest divisibility, which equals the
    /// GCD of the `j`-minors up to a unit.
    pub fn product_of_smallest(&self, j: usize) -> Option<LaurentPoly> {
        let n = self.factors.len();
        if j > n {
            return None;
        }
        let field = self.decomposition.d.zero_elem().field().clone();
        Some(
            self.factors[n - j..]
                .iter()
                .fold(LaurentPoly::one(&field), |acc, r| acc.mul(r)),
        )
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Unit-normalized GCD of all `k×k` minors: 1 for `k = 0`, 0 when every
/// minor vanishes.
pub fn minors_gcd(a: &LaurentMatrix, k: usize) -> Result<LaurentPoly> {
    let (m, n) = a.shape();
    let field = a.zero_elem().field().clone();
    if k > m.min(n) {
        return Err(Error::OrderTooLarge {
            order: k,
            rows: m,
            cols: n,
        });
    }
    if k == 0 {
        return Ok(LaurentPoly::one(&field));
    }
    let mut g = LaurentPoly::zero(&field);
    for rows in combinations(m, k) {
        for cols in combinations(n, k) {
            let minor = a.submatrix(&rows, &cols).determinant();
            if minor.is_zero() {
                continue;
            }
            g = if g.is_zero() {
                minor.normalized()?
            } else {
                g.gcd(&minor)?
            };
            if g.is_constant() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

pub fn smith_normal_form_laurent(a: &LaurentMatrix) -> Result<SmithDecompositionR> {
    let decomposition = smith_normal_form(a)?;
    let mut factors = decomposition
        .invariant_factors()
        .iter()
        .map(LaurentPoly::normalized)
        .collect::<Result<Vec<_>>>()?;
    factors.reverse();
    Ok(SmithDecompositionR { decomposition, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::matrix::EuclideanDomain;
    use proptest::prelude::*;

    fn lp(f: &Field, low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(f, low, c)
    }

    fn torus_sigma1(f: &Field) -> LaurentMatrix {
        Matrix::from_rows(
            vec![
                vec![lp(f, 0, &[]), lp(f, 0, &[-1, 1]), lp(f, 0, &[-2])],
                vec![lp(f, 0, &[]), lp(f, 0, &[-2]), lp(f, 0, &[-5, 1])],
            ],
            LaurentPoly::zero(f),
        )
    }

    #[test]
    fn minors_of_small_matrices() {
        let q = Field::rationals();
        let j = torus_sigma1(&q);
        assert_eq!(minors_gcd(&j, 2).unwrap(), lp(&q, 0, &[1, -6, 1]));
        assert_eq!(minors_gcd(&j, 1).unwrap(), lp(&q, 0, &[1]));
        assert_eq!(minors_gcd(&j, 0).unwrap(), lp(&q, 0, &[1]));
        assert!(matches!(minors_gcd(&j, 3), Err(Error::OrderTooLarge { .. })));
        let id = Matrix::identity(2, LaurentPoly::zero(&q));
        assert_eq!(minors_gcd(&id, 2).unwrap(), lp(&q, 0, &[1]));
        let z = Matrix::zeros(2, 2, LaurentPoly::zero(&q));
        assert!(minors_gcd(&z, 1).unwrap().is_zero());
    }

    #[test]
    fn smith_over_laurent_ring() {
        let q = Field::rationals();
        let j = torus_sigma1(&q);
        let s = smith_normal_form_laurent(&j).unwrap();
        assert_eq!(s.factors, vec![lp(&q, 0, &[1, -6, 1]), lp(&q, 0, &[1])]);
        let z = Matrix::zeros(2, 3, LaurentPoly::zero(&q));
        assert!(smith_normal_form_laurent(&z).unwrap().factors.is_empty());
        let one = Matrix::from_rows(vec![vec![lp(&q, 0, &[-1, 1])]], LaurentPoly::zero(&q));
        assert_eq!(
            smith_normal_form_laurent(&one).unwrap().factors,
            vec![lp(&q, 0, &[-1, 1])]
        );
    }

    fn arb_matrix() -> impl Strategy<Value = LaurentMatrix> {
        (1usize..=3, 1usize..=4).prop_flat_map(|(m, n)| {
            prop::collection::vec((-1i64..=1, prop::collection::vec(-2i64..=2, 0..3)), m * n).prop_map(move |entries| {
                let f = Field::cyclotomic(2);
                Matrix::from_fn(m, n, LaurentPoly::zero(&f), |i, j| {
                    let (low, c) = &entries[i * n + j];
                    lp(&f, *low, c)
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn smith_agrees_with_minors(a in arb_matrix()) {
            let s = smith_normal_form_laurent(&a).unwrap();
            let d = &s.decomposition;
            prop_assert_eq!(d.u.mul(&a).mul(&d.v), d.d.clone());
            prop_assert!(d.d.is_diagonal());
            prop_assert!(d.u.determinant().is_unit() && d.v.determinant().is_unit());
            let ones = Matrix::identity(a.rows(), a.zero_elem().clone());
            prop_assert_eq!(d.u.mul(&d.u_inv), ones);
            for w in s.factors.windows(2) {
                prop_assert!(w[1].divides(&w[0]).unwrap());
            }
            for j in 0..=a.rows().min(a.cols()) {
                let g = minors_gcd(&a, j).unwrap();
                match s.product_of_smallest(j) {
                    Some(p) => prop_assert!(p.associated(&g).unwrap()),
                    None => prop_assert!(g.is_zero()),
                }
            }
        }
    }
}
