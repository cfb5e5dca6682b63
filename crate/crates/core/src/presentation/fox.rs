//! Free differential calculus on `ℤF_n`.

use super::group_ring::GroupRingElem;
use super::word::FreeWord;
use crate::{Error, Result};

/// Integral group ring of a free group.
pub type IntGroupRing = GroupRingElem<i64>;

/// `∂(S_g^k)/∂S_g`: `1 + S + … + S^{k-1}` for `k > 0`, and
/// `-(S^{-1} + … + S^{k})` for `k < 0`.
fn power_derivative(g: usize, k: i64) -> IntGroupRing {
    let mut out = IntGroupRing::zero();
    if k > 0 {
        for l in 0..k {
            out.add_term(FreeWord::power(g, l), &1);
        }
    } else {
        for l in 1..=-k {
            out.add_term(FreeWord::power(g, -l), &-1);
        }
    }
    out
}

/// Fox derivative `∂w/∂S_i` of a word over a free group of rank `arity`.
pub fn fox_derivative(w: &FreeWord, i: usize, arity: usize) -> Result<IntGroupRing> {
    if i >= arity {
        return Err(Error::IndexOutOfRange { index: i, arity });
    }
    if let Some(g) = w.max_generator() {
        if g >= arity {
            return Err(Error::IndexOutOfRange { index: g, arity });
        }
    }
    let mut out = IntGroupRing::zero();
    let mut prefix = FreeWord::identity();
    for &(g, e) in w.letters() {
        if g == i {
            out = out.add(&power_derivative(g, e).left_mul_word(&prefix));
        }
        prefix = prefix.mul(&FreeWord::power(g, e));
    }
    Ok(out)
}

/// Fox derivative extended linearly to group-ring elements.
pub fn fox_derivative_linear(e: &IntGroupRing, i: usize, arity: usize) -> Result<IntGroupRing> {
    let mut out = IntGroupRing::zero();
    for (w, c) in e.terms() {
        out = out.add(&fox_derivative(w, i, arity)?.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(raw: &[(usize, i64)]) -> FreeWord {
        FreeWord::reduce(raw)
    }

    #[test]
    fn basic_rules() {
        // ∂(S0 S1)/∂S1 = S0
        let d = fox_derivative(&word(&[(0, 1), (1, 1)]), 1, 2).unwrap();
        assert_eq!(d, IntGroupRing::monomial(word(&[(0, 1)]), 1));
        // ∂(S0^-1)/∂S0 = -S0^-1
        let d = fox_derivative(&word(&[(0, -1)]), 0, 1).unwrap();
        assert_eq!(d, IntGroupRing::monomial(word(&[(0, -1)]), -1));
        // ∂S_i/∂S_j = δ_ij
        assert_eq!(
            fox_derivative(&word(&[(1, 1)]), 1, 2).unwrap(),
            IntGroupRing::monomial(FreeWord::identity(), 1)
        );
        assert!(fox_derivative(&word(&[(1, 1)]), 0, 2).unwrap().is_zero());
        assert!(fox_derivative(&FreeWord::identity(), 0, 1).unwrap().is_zero());
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            fox_derivative(&word(&[(0, 1)]), 2, 2),
            Err(Error::IndexOutOfRange { index: 2, arity: 2 })
        );
    }

    #[test]
    fn power_expansion() {
        // ∂(x^3)/∂x = 1 + x + x^2, ∂(x^-2)/∂x = -x^-1 - x^-2
        let d = fox_derivative(&word(&[(0, 3)]), 0, 1).unwrap();
        assert_eq!(d.len(), 3);
        for l in 0..3 {
            assert_eq!(d.coefficient(&FreeWord::power(0, l)), Some(&1));
        }
        let d = fox_derivative(&word(&[(0, -2)]), 0, 1).unwrap();
        assert_eq!(d.coefficient(&FreeWord::power(0, -1)), Some(&-1));
        assert_eq!(d.coefficient(&FreeWord::power(0, -2)), Some(&-1));
    }

    fn fundamental_formula_holds(w: &FreeWord, arity: usize) -> bool {
        let mut lhs = IntGroupRing::zero();
        for i in 0..arity {
            let s_minus_one =
                IntGroupRing::monomial(FreeWord::generator(i), 1).sub(&IntGroupRing::monomial(FreeWord::identity(), 1));
            lhs = lhs.add(&fox_derivative(w, i, arity).unwrap().mul(&s_minus_one));
        }
        let rhs = IntGroupRing::monomial(w.clone(), 1).sub(&IntGroupRing::monomial(FreeWord::identity(), 1));
        lhs == rhs
    }

    proptest! {
        #[test]
        fn fundamental_formula(raw in prop::collection::vec((0usize..3, prop_oneof![-3i64..=-1, 1i64..=3]), 0..30)) {
            prop_assert!(fundamental_formula_holds(&FreeWord::reduce(&raw), 3));
        }

        #[test]
        fn product_rule(a in prop::collection::vec((0usize..3, -2i64..=2), 0..8),
                        b in prop::collection::vec((0usize..3, -2i64..=2), 0..8),
                        i in 0usize..3) {
            let (u, v) = (FreeWord::reduce(&a), FreeWord::reduce(&b));
            let lhs = fox_derivative(&u.mul(&v), i, 3).unwrap();
            let rhs = fox_derivative(&u, i, 3).unwrap()
                .add(&fox_derivative(&v, i, 3).unwrap().left_mul_word(&u));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn linear_over_sums(a in prop::collection::vec((0usize..2, -2i64..=2), 0..6),
                            b in prop::collection::vec((0usize..2, -2i64..=2), 0..6),
                            ca in -3i64..=3, cb in -3i64..=3) {
            let e = IntGroupRing::monomial(FreeWord::reduce(&a), ca)
                .add(&IntGroupRing::monomial(FreeWord::reduce(&b), cb));
            let lhs = fox_derivative_linear(&e, 0, 2).unwrap();
            let rhs = fox_derivative(&FreeWord::reduce(&a), 0, 2).unwrap().scale(&ca)
                .add(&fox_derivative(&FreeWord::reduce(&b), 0, 2).unwrap().scale(&cb));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
