use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;
use crate::field::QPoly;
use crate::{Error, Result};

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if Zero::is_zero(&(&n % &d)) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a nonzero Laurent polynomial over a cyclotomic field,
/// with multiplicities, ascending.
///
/// A rational `r` is a root exactly when it is a root of every
/// ℚ-coordinate polynomial, so the rational root theorem is applied to
/// their GCD.
pub fn rational_roots(f: &LaurentPoly) -> Result<Vec<(BigRational, u32)>> {
    let field = f.field();
    if field.has_extension() {
        return Err(Error::FieldMismatch(
            "rational root scan needs a cyclotomic coefficient field".into(),
        ));
    }
    let Some(low) = f.low_exponent() else {
        return Err(Error::ZeroPolynomial);
    };
    let high = f.high_exponent().expect("nonzero");
    let mut g = QPoly::zero();
    for j in 0..field.cyclotomic_degree().max(1) {
        let coords: Vec<BigRational> = (low..=high).map(|k| f.coeff(k).coords()[0].coeff(j)).collect();
        g = g.gcd(&QPoly::new(coords));
    }
    let Some(deg) = g.degree() else {
        return Ok(Vec::new());
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let scale = BigRational::from_integer(g.denominator_lcm());
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
    let mut roots = Vec::new();
    for p in divisors(&ints[0]) {
        for q in divisors(&ints[deg]) {
            if !One::is_one(&p.gcd(&q)) {
                continue;
            }
            for sign in [-1, 1] {
                let r = BigRational::new(&p * sign, q.clone());
                if Zero::is_zero(&g.eval(&r)) {
                    let linear = LaurentPoly::new(field, 0, vec![field.from_rational(-r.clone()), field.one()]);
                    let k = f.root_multiplicity(&linear)?.finite().expect("nonzero polynomial");
                    roots.push((r, k));
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
