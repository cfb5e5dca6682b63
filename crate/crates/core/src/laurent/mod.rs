//! Laurent polynomials `K[t^±1]` over a [`Field`], matrices over them, and
//! exact linear algebra over `K`.

mod linalg;
mod matrix;
mod roots;

pub use linalg::{kernel_basis, rank, rref, solve, FieldMatrix, Rref, Solution};
pub use matrix::{minors_gcd, smith_normal_form_laurent, LaurentMatrix, SmithDecompositionR};
pub use roots::rational_roots;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::field::{fmt_rational, Field, FieldElem};
use crate::matrix::{EuclideanDomain, Ring};
use crate::{Error, Result};

/// `Σ c_k t^k` stored densely from the lowest exponent. No leading or
/// trailing zero coefficients are kept; the zero polynomial has none.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly {
    field: Field,
    low: i64,
    coeffs: Vec<FieldElem>,
}

/// Order of vanishing: a count, or `Infinite` for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Multiplicity::Finite(k) => Some(k),
            Multiplicity::Infinite => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(k) => s.serialize_u32(*k),
            Multiplicity::Infinite => s.serialize_str("inf"),
        }
    }
}

impl LaurentPoly {
    /// `Σ coeffs[i] t^{low+i}`.
    pub fn new(field: &Field, low: i64, coeffs: Vec<FieldElem>) -> LaurentPoly {
        let mut p = LaurentPoly {
            field: field.clone(),
            low,
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(field: &Field, low: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(field, low, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> LaurentPoly {
        LaurentPoly::new(field, 0, Vec::new())
    }

    pub fn one(field: &Field) -> LaurentPoly {
        LaurentPoly::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> LaurentPoly {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: FieldElem, k: i64) -> LaurentPoly {
        let field = c.field().clone();
        LaurentPoly::new(&field, k, vec![c])
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> LaurentPoly {
        LaurentPoly::monomial(field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElem::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `high − low`; the Euclidean size.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeff(&self, k: i64) -> FieldElem {
        let i = k - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            self.field.zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &FieldElem)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.coeffs.len() == 1 && self.low == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    fn check(&self, other: &LaurentPoly) {
        assert!(self.field == other.field, "Laurent polynomials over different fields");
    }

    pub fn scale(&self, c: &FieldElem) -> LaurentPoly {
        LaurentPoly::new(&self.field, self.low, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// `t^k · self`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            field: self.field.clone(),
            low: if self.is_zero() { 0 } else { self.low + k },
            coeffs: self.coeffs.clone(),
        }
    }

    /// Returns `(g, u)` with `self = u · g`, `g` of lowest exponent 0 and
    /// leading coefficient 1, and `u = c·t^n` a unit. Zero gives `(0, 1)`.
    pub fn normalize_unit(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        let Some(lead) = self.leading_coefficient() else {
            return Ok((self.clone(), LaurentPoly::one(&self.field)));
        };
        let inv = lead.try_inv()?;
        let g = LaurentPoly::new(&self.field, 0, self.coeffs.iter().map(|c| c.mul(&inv)).collect());
        Ok((g, LaurentPoly::monomial(lead.clone(), self.low)))
    }

    /// The canonical associate.
    pub fn normalized(&self) -> Result<LaurentPoly> {
        Ok(self.normalize_unit()?.0)
    }

    /// Equal up to a unit `c·t^n`.
    pub fn associated(&self, other: &LaurentPoly) -> Result<bool> {
        Ok(self.normalized()? == other.normalized()?)
    }

    /// Unit-normalized GCD. Errors when both inputs are zero.
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = std::mem::replace(&mut b, r);
        }
        a.normalized()
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InternalInconsistency(format!(
                "{divisor} does not divide {self}"
            )))
        }
    }

    /// The evaluation `t ↦ z`, where `z` lives in an extension of the
    /// coefficient field.
    pub fn evaluate_at(&self, z: &FieldElem) -> Result<FieldElem> {
        let kz = z.field();
        if self.is_zero() {
            return Ok(kz.zero());
        }
        if z.is_zero() {
            if self.low < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(if self.low == 0 {
                kz.lift(&self.coeffs[0])?
            } else {
                kz.zero()
            });
        }
        let mut acc = kz.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(&kz.lift(c)?);
        }
        Ok(acc.mul(&z.pow(self.low)?))
    }

    /// `D(Σ c_k t^k) = Σ k c_k t^k`.
    pub fn derivation_d(&self) -> LaurentPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&self.field.from_int(self.low + i as i64)))
            .collect();
        LaurentPoly::new(&self.field, self.low, coeffs)
    }

    /// `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> LaurentPoly {
        match self.high_exponent() {
            None => self.clone(),
            Some(high) => LaurentPoly::new(&self.field, -high, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// `Σ c̄_k t^{−k}`.
    pub fn conjugate_bar(&self) -> Result<LaurentPoly> {
        let conj = self
            .coeffs
            .iter()
            .map(FieldElem::conjugate)
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::new(&self.field, self.low, conj).invert_variable())
    }

    /// `f(a·t)`.
    pub fn substitute_scaled(&self, a: &FieldElem) -> Result<LaurentPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| Ok(c.mul(&a.pow(self.low + i as i64)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::new(&self.field, self.low, coeffs))
    }

    /// Largest `k` with `minpoly^k | self`; infinite for zero. `minpoly`
    /// must be a non-unit over the same field.
    pub fn root_multiplicity(&self, minpoly: &LaurentPoly) -> Result<Multiplicity> {
        self.check(minpoly);
        if minpoly.is_zero() || minpoly.is_monomial() {
            return Err(Error::InvalidMinpoly(format!("{minpoly} is not a proper polynomial")));
        }
        if self.is_zero() {
            return Ok(Multiplicity::Infinite);
        }
        let mut f = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = f.div_rem(minpoly)?;
            if !r.is_zero() {
                return Ok(Multiplicity::Finite(k));
            }
            f = q;
            k += 1;
        }
    }

    /// Order of vanishing at `z` as the least `k` with `(D^k f)(z) ≠ 0`.
    pub fn vanishing_order_at(&self, z: &FieldElem) -> Result<Multiplicity> {
        if self.is_zero() {
            return Ok(Multiplicity::Infinite);
        }
        let mut f = self.clone();
        let mut k = 0;
        while f.evaluate_at(z)?.is_zero() {
            f = f.derivation_d();
            k += 1;
        }
        Ok(Multiplicity::Finite(k))
    }

    /// Coefficients as rationals, when they all lie in ℚ.
    pub fn rational_coefficients(&self) -> Option<Vec<(i64, BigRational)>> {
        self.terms().map(|(k, c)| c.as_rational().map(|q| (k, q))).collect()
    }

    /// Integer coefficients when they all lie in ℤ.
    pub fn integer_coefficients(&self) -> Option<Vec<(i64, BigInt)>> {
        self.rational_coefficients()?
            .into_iter()
            .map(|(k, q)| q.is_integer().then(|| (k, q.to_integer())))
            .collect()
    }
}

impl Ring for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        LaurentPoly::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        LaurentPoly::one(&self.field)
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exponent().max(other.high_exponent()).expect("nonzero");
        let coeffs = (low..=high).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        LaurentPoly::new(&self.field, low, coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero(&self.field);
        }
        let zero = self.field.zero();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        LaurentPoly::new(&self.field, self.low + other.low, out)
    }

    fn neg(&self) -> Self {
        LaurentPoly::new(&self.field, self.low, self.coeffs.iter().map(Ring::neg).collect())
    }

    fn from_int_like(&self, n: i64) -> Self {
        LaurentPoly::constant(self.field.from_int(n))
    }
}

impl EuclideanDomain for LaurentPoly {
    fn euclid_cmp(&self, other: &Self) -> Ordering {
        match (self.span(), other.span()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }

    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((self.clone(), self.clone()));
        }
        // divide the underlying ordinary polynomials, then restore the shifts
        let db = divisor.coeffs.len() - 1;
        let lead_inv = divisor.coeffs[db].try_inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(db)];
        while rem.len() > db {
            let k = rem.len() - 1;
            let c = rem[k].mul(&lead_inv);
            if !c.is_zero() {
                for (j, y) in divisor.coeffs.iter().enumerate() {
                    rem[k - db + j] = rem[k - db + j].sub(&c.mul(y));
                }
                quot[k - db] = c;
            }
            rem.pop();
        }
        let q = LaurentPoly::new(&self.field, self.low - divisor.low, quot);
        let r = LaurentPoly::new(&self.field, self.low, rem);
        Ok((q, r))
    }

    fn normalizing_unit(&self) -> Result<(Self, Self)> {
        let Some(lead) = self.leading_coefficient() else {
            return Ok((self.one_like(), self.one_like()));
        };
        let unit = LaurentPoly::monomial(lead.try_inv()?, -self.low);
        let unit_inv = LaurentPoly::monomial(lead.clone(), self.low);
        Ok((unit, unit_inv))
    }

    fn is_unit(&self) -> bool {
        self.is_monomial()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let (negative, coef) = match c.as_rational() {
                Some(q) if q < BigRational::from_integer(0.into()) => (true, fmt_rational(&-q)),
                Some(q) => (false, fmt_rational(&q)),
                None => (false, format!("({c})")),
            };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            match (mono.is_empty(), coef.as_str()) {
                (true, _) => out.push_str(&coef),
                (false, "1") => out.push_str(&mono),
                (false, _) => {
                    out.push_str(&coef);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtConjugation, RootChoice};
    use proptest::prelude::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(&q(), low, c)
    }

    fn golden_ratio_field() -> Field {
        let q = q();
        q.extension(
            &[q.from_int(1), q.from_int(-6), q.from_int(1)],
            ExtConjugation::Real,
            RootChoice::LargestModulus,
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        assert_eq!(lp(0, &[-1, 1]).mul(&lp(0, &[1, 1])), lp(0, &[-1, 0, 1]));
        assert_eq!(lp(0, &[1, -6, 1]).to_string(), "t^2-6*t+1");
        assert_eq!(lp(-1, &[-1, 0, 2]).to_string(), "2*t-t^-1");
        assert_eq!(lp(0, &[]).to_string(), "0");
        assert_eq!(lp(0, &[3]).add(&lp(0, &[-3])), lp(0, &[]));
        assert_eq!(lp(2, &[0, 0, 1, 0]), lp(4, &[1]));
    }

    #[test]
    fn unit_normalization() {
        let f = lp(-1, &[1, -1]); // −t⁻¹(t − 1)
        let (g, u) = f.normalize_unit().unwrap();
        assert_eq!(g, lp(0, &[-1, 1]));
        assert_eq!(u, lp(-1, &[-1]));
        let (g, u) = lp(1, &[2, -12, 2]).normalize_unit().unwrap();
        assert_eq!(g, lp(0, &[1, -6, 1]));
        assert_eq!(u, lp(1, &[2]));
        assert_eq!(u.mul(&g), lp(1, &[2, -12, 2]));
    }

    #[test]
    fn gcds() {
        assert_eq!(lp(0, &[1, -6, 1]).gcd(&lp(0, &[-6, 2])).unwrap(), lp(0, &[1]));
        let f = lp(-3, &[5, 10]);
        assert_eq!(f.gcd(&lp(0, &[])).unwrap(), f.normalized().unwrap());
        assert_eq!(lp(0, &[-1, 1]).gcd(&lp(0, &[-1, 0, 1])).unwrap(), lp(0, &[-1, 1]));
        assert_eq!(lp(0, &[]).gcd(&lp(0, &[])), Err(Error::GcdOfZeros));
    }

    #[test]
    fn evaluation() {
        let f = lp(0, &[1, -6, 1]);
        let k = golden_ratio_field();
        let z = k.generator().unwrap();
        assert!(f.evaluate_at(&z).unwrap().is_zero());
        assert_eq!(f.evaluate_at(&q().one()).unwrap(), q().from_int(-4));
        let g = lp(-2, &[1, 4, 7]);
        assert_eq!(g.evaluate_at(&q().one()).unwrap(), q().from_int(12));
        assert_eq!(lp(-1, &[1]).evaluate_at(&q().zero()), Err(Error::DivisionByZero));
        // t⁻¹ at z is 6 − z
        assert_eq!(lp(-1, &[1]).evaluate_at(&z).unwrap(), k.from_int(6).sub(&z));
    }

    #[test]
    fn derivation() {
        assert!(lp(0, &[7]).derivation_d().is_zero());
        assert_eq!(lp(0, &[1, -6, 1]).derivation_d(), lp(1, &[-6, 2]));
        assert_eq!(lp(-1, &[1]).derivation_d(), lp(-1, &[-1]));
    }

    #[test]
    fn multiplicities() {
        let m = lp(0, &[1, -6, 1]);
        assert_eq!(m.root_multiplicity(&m).unwrap(), Multiplicity::Finite(1));
        let l = lp(0, &[-1, 1]);
        assert_eq!(l.mul(&l).root_multiplicity(&l).unwrap(), Multiplicity::Finite(2));
        assert_eq!(lp(0, &[]).root_multiplicity(&l).unwrap(), Multiplicity::Infinite);
        assert_eq!(m.root_multiplicity(&l).unwrap(), Multiplicity::Finite(0));
        assert_eq!(Multiplicity::Infinite.to_string(), "inf");
    }

    #[test]
    fn bar_and_inversion() {
        let f = lp(0, &[1, -6, 1]);
        assert_eq!(f.conjugate_bar().unwrap(), lp(-2, &[1, -6, 1]));
        assert_eq!(lp(0, &[-2, 1]).invert_variable(), lp(-1, &[1, -2]));
        let k4 = Field::cyclotomic(4);
        let i = k4.zeta_power(1);
        let g = LaurentPoly::new(&k4, 1, vec![i.clone()]);
        assert_eq!(g.conjugate_bar().unwrap(), LaurentPoly::new(&k4, -1, vec![i.neg()]));
    }

    #[test]
    fn scaled_substitution() {
        let f = lp(-1, &[1, -6, 1]);
        let g = f.substitute_scaled(&q().from_int(2)).unwrap();
        assert_eq!(
            g,
            LaurentPoly::new(
                &q(),
                -1,
                vec![
                    q().from_rational(BigRational::new(1.into(), 2.into())),
                    q().from_int(-6),
                    q().from_int(2)
                ]
            )
        );
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..=3, prop::collection::vec(-5i64..=5, 0..5)).prop_map(|(low, c)| lp(low, &c))
    }

    fn arb_k2_poly() -> impl Strategy<Value = LaurentPoly> {
        (-2i64..=2, prop::collection::vec(-4i64..=4, 0..4))
            .prop_map(|(low, c)| LaurentPoly::from_ints(&Field::cyclotomic(2), low, &c))
    }

    proptest! {
        #[test]
        fn leibniz_and_linearity(f in arb_poly(), g in arb_poly()) {
            let d = |p: &LaurentPoly| p.derivation_d();
            prop_assert_eq!(d(&f.mul(&g)), d(&f).mul(&g).add(&f.mul(&d(&g))));
            prop_assert_eq!(d(&f.add(&g)), d(&f).add(&d(&g)));
        }

        #[test]
        fn evaluation_is_homomorphism(f in arb_poly(), g in arb_poly(), c in 1i64..5) {
            let k = golden_ratio_field();
            let z = k.generator().unwrap().add(&k.from_int(c));
            let ev = |p: &LaurentPoly| p.evaluate_at(&z).unwrap();
            prop_assert_eq!(ev(&f.mul(&g)), ev(&f).mul(&ev(&g)));
            prop_assert_eq!(ev(&f.add(&g)), ev(&f).add(&ev(&g)));
        }

        #[test]
        fn order_drops_under_d(k in 1u32..4, g in arb_k2_poly()) {
            let field = Field::cyclotomic(2);
            let m = LaurentPoly::from_ints(&field, 0, &[1, -6, 1]);
            prop_assume!(!g.is_zero());
            let base = g.root_multiplicity(&m).unwrap().finite().unwrap();
            let f = (0..k).fold(g.clone(), |acc, _| acc.mul(&m));
            let r = f.root_multiplicity(&m).unwrap().finite().unwrap();
            prop_assert_eq!(r, k + base);
            prop_assert_eq!(f.derivation_d().root_multiplicity(&m).unwrap().finite().unwrap() + 1, r);
            let z = field.extension(&[field.from_int(1), field.from_int(-6), field.from_int(1)], ExtConjugation::Real, RootChoice::LargestModulus).unwrap().generator().unwrap();
            prop_assert_eq!(f.vanishing_order_at(&z).unwrap(), Multiplicity::Finite(r));
        }

        #[test]
        fn division_identity(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let (quo, rem) = f.div_rem(&g).unwrap();
            prop_assert_eq!(quo.mul(&g).add(&rem), f);
            prop_assert!(rem.is_zero() || rem.span() < g.span());
        }

        #[test]
        fn gcd_divides_both(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            let d = f.gcd(&g).unwrap();
            prop_assert!(d.divides(&f).unwrap() && d.divides(&g).unwrap());
            prop_assert_eq!(d.gcd(&f.mul(&g)).unwrap(), d.clone());
        }
    }
}
