//! Exact arithmetic in ℚ(ζ_m) and in one simple extension
//! `ℚ(ζ_m)[s]/(f(s))` holding an algebraic evaluation point.
//!
//! The extension polynomial is not checked for irreducibility. Every
//! inversion runs an extended Euclid against it and reports
//! [`Error::ReducibleMinpoly`] when it meets a zero divisor.

mod embed;
mod parse;
mod qpoly;

pub use embed::{complex_roots, RootChoice};
pub use parse::parse_polynomial;
pub use qpoly::{cyclotomic_polynomial, QPoly};

pub(crate) use qpoly::{fmt_rational, fmt_terms, rat};

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::matrix::Ring;
use crate::{Error, Result};

/// How complex conjugation acts on the adjoined root `s`, when the user
/// vouches that the extension is stable under conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtConjugation {
    /// Conjugation on the extension level is undefined.
    #[default]
    Unmarked,
    /// `s̄ = s` (a real root).
    Real,
    /// `s̄ = s⁻¹` (a root on the unit circle).
    Unitary,
}

#[derive(Clone, Debug)]
struct Extension {
    /// Monic, coefficients in the cyclotomic level, low to high.
    minpoly: Vec<QPoly>,
    conjugation: ExtConjugation,
    root: Complex64,
}

#[derive(Debug)]
pub struct FieldDescriptor {
    order: u64,
    cyclotomic: QPoly,
    zeta_powers: Vec<QPoly>,
    ext: Option<Extension>,
}

/// Shared handle to a [`FieldDescriptor`].
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldDescriptor>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && match (&self.0.ext, &other.0.ext) {
                    (None, None) => true,
                    (Some(a), Some(b)) => a.minpoly == b.minpoly && a.conjugation == b.conjugation,
                    _ => false,
                })
    }
}

impl Eq for Field {}

/// An element of a [`Field`]: coordinates in the power basis `1, s, …,
/// s^{d−1}` of the extension, each a polynomial in `ζ_m` of degree below
/// `φ(m)`.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    coords: Vec<QPoly>,
}

fn trim(mut v: Vec<QPoly>) -> Vec<QPoly> {
    while v.last().is_some_and(QPoly::is_zero) {
        v.pop();
    }
    v
}

impl FieldDescriptor {
    fn ext_degree(&self) -> usize {
        self.ext.as_ref().map_or(1, |e| e.minpoly.len() - 1)
    }

    fn cyc_reduce(&self, p: &QPoly) -> QPoly {
        match p.degree() {
            Some(d) if d >= self.cyclotomic.degree().unwrap_or(0) => p.rem(&self.cyclotomic),
            _ => p.clone(),
        }
    }

    fn cyc_mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.cyc_reduce(&a.mul(b))
    }

    fn cyc_inv(&self, a: &QPoly) -> Option<QPoly> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(&self.cyclotomic);
        debug_assert!(g == QPoly::one(), "cyclotomic polynomials are irreducible");
        Some(self.cyc_reduce(&s))
    }

    fn cyc_conj(&self, a: &QPoly) -> QPoly {
        let m = self.order as usize;
        a.coeffs().iter().enumerate().fold(QPoly::zero(), |acc, (k, c)| {
            acc.add(&self.zeta_powers[(m - k % m) % m].scale(c))
        })
    }

    fn zeta_embedding(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI / self.order as f64)
    }

    // Polynomials over the cyclotomic level, as trimmed coefficient vectors.

    fn cpoly_sub(&self, a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
        let n = a.len().max(b.len());
        let zero = QPoly::zero();
        trim(
            (0..n)
                .map(|k| a.get(k).unwrap_or(&zero).sub(b.get(k).unwrap_or(&zero)))
                .collect(),
        )
    }

    fn cpoly_mul(&self, a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&self.cyc_mul(x, y));
                }
            }
        }
        trim(out)
    }

    fn cpoly_div_rem(&self, a: &[QPoly], b: &[QPoly]) -> (Vec<QPoly>, Vec<QPoly>) {
        let db = b.len() - 1;
        let lead_inv = self
            .cyc_inv(&b[db])
            .expect("trimmed divisor has a nonzero leading coefficient");
        let mut rem = a.to_vec();
        let mut quot = vec![QPoly::zero(); a.len().saturating_sub(db)];
        while rem.len() > db {
            let k = rem.len() - 1;
            let c = self.cyc_mul(&rem[k], &lead_inv);
            if !c.is_zero() {
                for (j, y) in b.iter().enumerate() {
                    rem[k - db + j] = rem[k - db + j].sub(&self.cyc_mul(&c, y));
                }
                quot[k - db] = c;
            }
            rem.pop();
            rem = trim(rem);
        }
        (trim(quot), rem)
    }

    /// Reduces a coefficient vector modulo the monic extension polynomial
    /// and pads it to the extension degree.
    fn ext_reduce(&self, v: Vec<QPoly>) -> Vec<QPoly> {
        let d = self.ext_degree();
        let mut v = trim(v);
        if let Some(ext) = &self.ext {
            while v.len() > d {
                let k = v.len() - 1;
                let c = v[k].clone();
                for j in 0..d {
                    v[k - d + j] = v[k - d + j].sub(&self.cyc_mul(&c, &ext.minpoly[j]));
                }
                v.pop();
            }
        }
        v.resize(d, QPoly::zero());
        v
    }

    fn ext_mul(&self, a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
        self.ext_reduce(self.cpoly_mul(&trim(a.to_vec()), &trim(b.to_vec())))
    }

    fn ext_inv(&self, a: &[QPoly]) -> Result<Vec<QPoly>> {
        let a = trim(a.to_vec());
        if a.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let Some(ext) = &self.ext else {
            let inv = self.cyc_inv(&a[0]).ok_or(Error::DivisionByZero)?;
            return Ok(vec![inv]);
        };
        let (mut r0, mut r1) = (ext.minpoly.clone(), a);
        let (mut t0, mut t1): (Vec<QPoly>, Vec<QPoly>) = (Vec::new(), vec![QPoly::one()]);
        while !r1.is_empty() {
            let (q, r) = self.cpoly_div_rem(&r0, &r1);
            let t2 = self.cpoly_sub(&t0, &self.cpoly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.len() != 1 {
            return Err(Error::ReducibleMinpoly);
        }
        let unit = self.cyc_inv(&r0[0]).expect("nonzero gcd");
        Ok(self.ext_reduce(self.cpoly_mul(&t0, &[unit])))
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field::cyclotomic(1)
    }

    /// ℚ(ζ_m); `m = 1` and `m = 2` give ℚ.
    pub fn cyclotomic(m: u64) -> Field {
        let cyclotomic = cyclotomic_polynomial(m);
        let mut zeta_powers = Vec::with_capacity(m as usize);
        let mut x = QPoly::one();
        let zeta = QPoly::from_ints(&[0, 1]).rem(&cyclotomic);
        for _ in 0..m {
            zeta_powers.push(x.clone());
            x = x.mul(&zeta).rem(&cyclotomic);
        }
        Field(Arc::new(FieldDescriptor {
            order: m,
            cyclotomic,
            zeta_powers,
            ext: None,
        }))
    }

    /// `self[s]/(minpoly)`. `self` must be a cyclotomic field and the
    /// coefficients must live in it. The polynomial is made monic; it must
    /// have positive degree and a nonzero constant term.
    pub fn extension(&self, minpoly: &[FieldElem], conjugation: ExtConjugation, root: RootChoice) -> Result<Field> {
        if self.0.ext.is_some() {
            return Err(Error::InvalidMinpoly("nested extensions are not supported".into()));
        }
        let mut coeffs = Vec::with_capacity(minpoly.len());
        for c in minpoly {
            if c.field != *self {
                return Err(Error::FieldMismatch(
                    "minimal polynomial coefficients must lie in the base field".into(),
                ));
            }
            coeffs.push(c.coords[0].clone());
        }
        let coeffs = trim(coeffs);
        if coeffs.len() < 2 {
            return Err(Error::InvalidMinpoly("degree must be at least 1".into()));
        }
        if coeffs[0].is_zero() {
            return Err(Error::InvalidMinpoly("constant term must be nonzero".into()));
        }
        let lead_inv = self.0.cyc_inv(coeffs.last().expect("nonempty")).expect("trimmed");
        let monic: Vec<QPoly> = coeffs.iter().map(|c| self.0.cyc_mul(c, &lead_inv)).collect();
        let zeta = self.0.zeta_embedding();
        let embedded: Vec<Complex64> = monic.iter().map(|c| c.eval_complex(zeta)).collect();
        let root = root.select(&complex_roots(&embedded));
        let ext = Extension {
            minpoly: monic,
            conjugation,
            root,
        };
        let field = Field(Arc::new(FieldDescriptor {
            order: self.0.order,
            cyclotomic: self.0.cyclotomic.clone(),
            zeta_powers: self.0.zeta_powers.clone(),
            ext: Some(ext),
        }));
        field.check_conjugation()?;
        Ok(field)
    }

    fn check_conjugation(&self) -> Result<()> {
        let Some(ext) = &self.0.ext else { return Ok(()) };
        let conj: Vec<QPoly> = ext.minpoly.iter().map(|c| self.0.cyc_conj(c)).collect();
        let ok = match ext.conjugation {
            ExtConjugation::Unmarked => true,
            ExtConjugation::Real => conj == ext.minpoly,
            ExtConjugation::Unitary => {
                // s^d · f̄(1/s) must be a scalar multiple of f
                let rev: Vec<QPoly> = conj.into_iter().rev().collect();
                let lead_inv = self.0.cyc_inv(rev.last().expect("degree >= 1"));
                lead_inv
                    .is_some_and(|inv| rev.iter().map(|c| self.0.cyc_mul(c, &inv)).collect::<Vec<_>>() == ext.minpoly)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMinpoly(
                "extension is not stable under the declared conjugation".into(),
            ))
        }
    }

    pub fn cyclotomic_order(&self) -> u64 {
        self.0.order
    }

    /// `φ(m)`, the degree of ℚ(ζ_m) over ℚ.
    pub fn cyclotomic_degree(&self) -> usize {
        self.0.cyclotomic.degree().unwrap_or(0)
    }

    pub fn extension_degree(&self) -> usize {
        self.0.ext_degree()
    }

    pub fn has_extension(&self) -> bool {
        self.0.ext.is_some()
    }

    pub fn conjugation(&self) -> ExtConjugation {
        self.0.ext.as_ref().map_or(ExtConjugation::Unmarked, |e| e.conjugation)
    }

    /// The designated complex root of the extension polynomial.
    pub fn designated_root(&self) -> Option<Complex64> {
        self.0.ext.as_ref().map(|e| e.root)
    }

    /// The cyclotomic field below the extension (or `self`).
    pub fn base(&self) -> Field {
        if self.0.ext.is_none() {
            return self.clone();
        }
        Field::cyclotomic(self.0.order)
    }

    /// Monic extension polynomial over [`Field::base`], low to high.
    pub fn minpoly(&self) -> Option<Vec<FieldElem>> {
        let base = self.base();
        self.0
            .ext
            .as_ref()
            .map(|e| e.minpoly.iter().map(|c| base.from_cyclotomic(c.clone())).collect())
    }

    fn elem(&self, coords: Vec<QPoly>) -> FieldElem {
        FieldElem {
            field: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(vec![QPoly::zero(); self.0.ext_degree()])
    }

    pub fn one(&self) -> FieldElem {
        self.from_cyclotomic(QPoly::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        self.from_rational(rat(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        self.from_rational(BigRational::from_integer(n.clone()))
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElem {
        self.from_cyclotomic(QPoly::constant(q))
    }

    /// An element of the cyclotomic level given as a polynomial in `ζ_m`.
    pub fn from_cyclotomic(&self, p: QPoly) -> FieldElem {
        let mut coords = vec![QPoly::zero(); self.0.ext_degree()];
        coords[0] = self.0.cyc_reduce(&p);
        self.elem(coords)
    }

    /// `ζ_m^k`.
    pub fn zeta_power(&self, k: i64) -> FieldElem {
        let m = self.0.order as i64;
        self.from_cyclotomic(self.0.zeta_powers[k.rem_euclid(m) as usize].clone())
    }

    /// The class of `s`, the adjoined root. Errors without an extension.
    pub fn generator(&self) -> Result<FieldElem> {
        if self.0.ext.is_none() {
            return Err(Error::FieldMismatch("field has no extension level".into()));
        }
        Ok(self.elem(self.0.ext_reduce(vec![QPoly::zero(), QPoly::one()])))
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coords(&self, coords: Vec<QPoly>) -> FieldElem {
        let coords = coords.iter().map(|c| self.0.cyc_reduce(c)).collect();
        self.elem(self.0.ext_reduce(coords))
    }

    /// Embeds an element of the base cyclotomic field.
    pub fn lift(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.field == *self {
            return Ok(a.clone());
        }
        if a.field.has_extension() || a.field.cyclotomic_order() != self.cyclotomic_order() {
            return Err(Error::FieldMismatch(format!(
                "cannot lift an element of Q(zeta_{}) into Q(zeta_{})",
                a.field.cyclotomic_order(),
                self.cyclotomic_order()
            )));
        }
        Ok(self.from_cyclotomic(a.coords[0].clone()))
    }
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[QPoly] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(QPoly::is_zero)
    }

    /// Lies in the cyclotomic level (no `s` component).
    pub fn is_cyclotomic(&self) -> bool {
        self.coords[1..].iter().all(QPoly::is_zero)
    }

    /// The cyclotomic coordinate, when the element lies in that level.
    pub fn cyclotomic_part(&self) -> Option<&QPoly> {
        self.is_cyclotomic().then(|| &self.coords[0])
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        let c = self.cyclotomic_part()?;
        c.is_constant().then(|| c.coeff(0))
    }

    fn check(&self, other: &FieldElem) {
        assert!(self.field == other.field, "arithmetic on elements of different fields");
    }

    pub fn try_inv(&self) -> Result<FieldElem> {
        Ok(self.field.elem(self.field.0.ext_inv(&self.coords)?))
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other);
        Ok(self.mul(&other.try_inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<FieldElem> {
        let base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugation: `ζ ↦ ζ⁻¹` on the cyclotomic level; on the
    /// extension level as declared by [`ExtConjugation`].
    pub fn conjugate(&self) -> Result<FieldElem> {
        let d = &self.field.0;
        let conj: Vec<QPoly> = self.coords.iter().map(|c| d.cyc_conj(c)).collect();
        if self.is_cyclotomic() {
            return Ok(self.field.elem(conj));
        }
        match self.field.conjugation() {
            ExtConjugation::Unmarked => Err(Error::ConjugationUnavailable),
            ExtConjugation::Real => Ok(self.field.elem(conj)),
            ExtConjugation::Unitary => {
                let s_inv = self.field.generator()?.try_inv()?;
                let mut acc = self.field.zero();
                let mut power = self.field.one();
                for c in conj {
                    acc = acc.add(&self.field.from_cyclotomic(c).mul(&power));
                    power = power.mul(&s_inv);
                }
                Ok(acc)
            }
        }
    }

    /// Image under `ζ_m ↦ e^{2πi/m}` and `s ↦` the designated root.
    pub fn complex_embed(&self) -> Complex64 {
        let zeta = self.field.0.zeta_embedding();
        let root = self.field.designated_root().unwrap_or(Complex64::new(0.0, 0.0));
        self.coords
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * root + c.eval_complex(zeta))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Ring for FieldElem {
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect();
        self.field.elem(coords)
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect();
        self.field.elem(coords)
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let d = &self.field.0;
        let coords = if d.ext.is_none() {
            vec![d.cyc_mul(&self.coords[0], &other.coords[0])]
        } else {
            d.ext_mul(&self.coords, &other.coords)
        };
        self.field.elem(coords)
    }

    fn neg(&self) -> Self {
        self.field.elem(self.coords.iter().map(QPoly::neg).collect())
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.field.from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring:path) => {
        impl std::ops::$tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                $ring(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, Ring::add);
forward_binop!(Sub, sub, Ring::sub);
forward_binop!(Mul, mul, Ring::mul);

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        Ring::neg(self)
    }
}

/// Cyclotomic coordinate rendered as a polynomial in `z = ζ_m`.
fn fmt_cyclotomic(c: &QPoly) -> String {
    let terms = c.coeffs().iter().enumerate().rev().map(|(k, q)| (k as i64, q.clone()));
    fmt_terms(terms, "z")
}

/// Renders a cyclotomic-level coefficient so it can be followed by `*var`.
pub(crate) fn fmt_coefficient(c: &QPoly) -> (String, bool) {
    if c.is_constant() {
        (fmt_rational(&c.coeff(0)), true)
    } else {
        (format!("({})", fmt_cyclotomic(c)), false)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_cyclotomic() {
            return write!(f, "{}", fmt_cyclotomic(&self.coords[0]));
        }
        let mut parts = Vec::new();
        for (k, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            let (coef, _) = fmt_coefficient(c);
            parts.push(match (mono.is_empty(), coef.as_str()) {
                (true, _) => coef,
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                (false, _) => format!("{coef}*{mono}"),
            });
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 && !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self})")
    }
}
