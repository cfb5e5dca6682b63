use super::character::{Character, CharacterAlpha};
use crate::alexander::jacobian;
use crate::field::{Field, FieldElem};
use crate::laurent::{kernel_basis, rank, FieldMatrix, LaurentMatrix};
use crate::matrix::{Matrix, Ring};
use crate::presentation::{FreeWord, Presentation};
use crate::{Error, Result};

/// A 1-cochain on the free group with values in the module `C_χ`.
pub trait OneCochain: Send + Sync {
    fn module(&self) -> &Character;
    fn eval(&self, w: &FreeWord) -> FieldElem;
}

/// A 1-cochain in `C_χ` determined by its values on the generators through
/// `d(γ₁γ₂) = d(γ₁) + χ(γ₁) d(γ₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleVec {
    values: Vec<FieldElem>,
    chi: Character,
}

impl CocycleVec {
    pub fn new(values: Vec<FieldElem>, chi: Character) -> Result<CocycleVec> {
        if values.len() != chi.arity() {
            return Err(Error::DimensionMismatch(format!(
                "{} cocycle values for {} generators",
                values.len(),
                chi.arity()
            )));
        }
        Ok(CocycleVec { values, chi })
    }

    /// The coboundary `γ ↦ (χ(γ) − 1) x`.
    pub fn coboundary(chi: &Character, x: &FieldElem) -> CocycleVec {
        let values = chi.values().iter().map(|v| v.sub(&v.one_like()).mul(x)).collect();
        CocycleVec {
            values,
            chi: chi.clone(),
        }
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn scale(&self, c: &FieldElem) -> CocycleVec {
        CocycleVec {
            values: self.values.iter().map(|v| v.mul(c)).collect(),
            chi: self.chi.clone(),
        }
    }

    pub fn add(&self, other: &CocycleVec) -> CocycleVec {
        CocycleVec {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect(),
            chi: self.chi.clone(),
        }
    }

    /// Vanishes on every relator.
    pub fn is_cocycle(&self, p: &Presentation) -> bool {
        p.relators().iter().all(|r| self.eval(r).is_zero())
    }

    /// Lies on the coboundary line.
    pub fn is_coboundary(&self) -> Result<bool> {
        let b = coboundary_vector(&self.chi);
        let m = Matrix::from_rows(vec![b, self.values.clone()], self.chi.field().zero());
        Ok(rank(&m)? <= 1)
    }
}

/// `d(w)` by the cocycle rule.
pub fn cocycle_eval(d: &CocycleVec, w: &FreeWord) -> FieldElem {
    let field = d.chi.field();
    let mut acc = field.zero();
    let mut prefix = field.one();
    for &(g, e) in w.letters() {
        let one_letter = if e > 0 {
            d.chi.eval(&FreeWord::generator(g))
        } else {
            d.chi.eval(&FreeWord::power(g, -1))
        };
        let step = if e > 0 {
            d.values[g].clone()
        } else {
            // d(S⁻¹) = −χ(S)⁻¹ d(S)
            one_letter.mul(&d.values[g]).neg()
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.add(&prefix.mul(&step));
            prefix = prefix.mul(&one_letter);
        }
    }
    acc
}

impl OneCochain for CocycleVec {
    fn module(&self) -> &Character {
        &self.chi
    }

    fn eval(&self, w: &FreeWord) -> FieldElem {
        cocycle_eval(self, w)
    }
}

/// A homomorphism to `(K, +)`: a 1-cocycle with trivial coefficients.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    values: Vec<FieldElem>,
    chi: Character,
}

impl Homomorphism {
    pub fn new(values: Vec<FieldElem>) -> Homomorphism {
        let chi = Character::trivial(values[0].field(), values.len());
        Homomorphism { values, chi }
    }

    /// `h = a·φ`.
    pub fn scaled_phi(phi: &[i64], a: &FieldElem) -> Homomorphism {
        let field = a.field();
        Homomorphism::new(phi.iter().map(|&x| field.from_int(x).mul(a)).collect())
    }
}

impl OneCochain for Homomorphism {
    fn module(&self) -> &Character {
        &self.chi
    }

    fn eval(&self, w: &FreeWord) -> FieldElem {
        let e = w.exponent_sums(self.values.len());
        let field = self.chi.field();
        e.iter()
            .zip(&self.values)
            .fold(field.zero(), |acc, (&k, v)| acc.add(&v.mul(&field.from_int(k))))
    }
}

/// `γ ↦ u(γ) v(γ)` with coefficients in `C_{χ_u χ_v}`.
pub struct ProductCochain<'a> {
    u: &'a dyn OneCochain,
    v: &'a dyn OneCochain,
    chi: Character,
}

impl<'a> ProductCochain<'a> {
    pub fn new(u: &'a dyn OneCochain, v: &'a dyn OneCochain) -> ProductCochain<'a> {
        let chi = u.module().mul(v.module());
        ProductCochain { u, v, chi }
    }
}

impl OneCochain for ProductCochain<'_> {
    fn module(&self) -> &Character {
        &self.chi
    }

    fn eval(&self, w: &FreeWord) -> FieldElem {
        self.u.eval(w).mul(&self.v.eval(w))
    }
}

/// `(χ(S₁) − 1, …, χ(Sₙ) − 1)`, spanning the coboundaries.
pub fn coboundary_vector(chi: &Character) -> Vec<FieldElem> {
    chi.values().iter().map(|v| v.sub(&v.one_like())).collect()
}

/// `J^{φσ}(z)`: the twisted Jacobian of `α`'s twist evaluated at `z`.
pub fn evaluated_jacobian(p: &Presentation, alpha: &CharacterAlpha) -> Result<FieldMatrix> {
    let j: LaurentMatrix = jacobian(p, alpha.twist());
    j.try_map(alpha.field().zero(), |e| e.evaluate_at(alpha.z()))
}

/// `(DJ^{φσ})(z)`.
pub fn evaluated_d_jacobian(p: &Presentation, alpha: &CharacterAlpha) -> Result<FieldMatrix> {
    let j: LaurentMatrix = jacobian(p, alpha.twist());
    j.try_map(alpha.field().zero(), |e| e.derivation_d().evaluate_at(alpha.z()))
}

/// `χ(∂R_j/∂S_i)` computed directly in the group ring.
pub fn character_matrix(p: &Presentation, chi: &Character, field: &Field) -> FieldMatrix {
    let fox = p.fox_jacobian();
    Matrix::from_fn(p.relators().len(), p.arity(), field.zero(), |j, i| {
        chi.eval_ring(&fox[j][i])
    })
}

/// `dim H¹(π; C_α) = n − rk J^{φσ}(z) − 1` for nontrivial `α`.
pub fn dim_h1(p: &Presentation, alpha: &CharacterAlpha) -> Result<usize> {
    if alpha.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let a = evaluated_jacobian(p, alpha)?;
    let r = rank(&a)?;
    p.arity()
        .checked_sub(r + 1)
        .ok_or_else(|| Error::InternalInconsistency(format!("rank {r} leaves no room for the coboundaries")))
}

/// A cocycle representing a generator of `H¹(π; C_α)` when it is
/// one-dimensional. Deterministic: kernel vectors in pivot order, reduced
/// modulo the coboundary line by clearing the first nonzero coordinate of
/// the coboundary vector, first nonzero coordinate scaled to 1.
pub fn cocycle_generator(p: &Presentation, alpha: &CharacterAlpha) -> Result<CocycleVec> {
    let dim = dim_h1(p, alpha)?;
    if dim != 1 {
        return Err(Error::UnexpectedH1Dimension {
            expected: 1,
            found: dim,
        });
    }
    let a = evaluated_jacobian(p, alpha)?;
    let b = coboundary_vector(alpha.character());
    let q = b.iter().position(|x| !x.is_zero()).expect("nontrivial character");
    let bq_inv = b[q].try_inv()?;
    for v in kernel_basis(&a)? {
        let f = v[q].mul(&bq_inv);
        let w: Vec<FieldElem> = v.iter().zip(&b).map(|(x, y)| x.sub(&f.mul(y))).collect();
        if let Some(lead) = w.iter().find(|x| !x.is_zero()) {
            let inv = lead.try_inv()?;
            let values = w.iter().map(|x| x.mul(&inv)).collect();
            return CocycleVec::new(values, alpha.character().clone());
        }
    }
    Err(Error::InternalInconsistency(
        "no kernel vector outside the coboundary line".into(),
    ))
}
