use crate::alexander::TwistSetup;
use crate::field::{Field, FieldElem};
use crate::matrix::Ring;
use crate::presentation::{FreeWord, IntGroupRing, Presentation};
use crate::{Error, Result};

/// A homomorphism from the free group into `K^*`, stored by its values on
/// the generators. It is a character of the presented group when it kills
/// every relator.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    values: Vec<FieldElem>,
    inverses: Vec<FieldElem>,
}

impl Character {
    pub fn new(values: Vec<FieldElem>) -> Result<Character> {
        let inverses = values.iter().map(FieldElem::try_inv).collect::<Result<Vec<_>>>()?;
        Ok(Character { values, inverses })
    }

    pub fn trivial(field: &Field, arity: usize) -> Character {
        Character {
            values: vec![field.one(); arity],
            inverses: vec![field.one(); arity],
        }
    }

    pub fn field(&self) -> &Field {
        self.values[0].field()
    }

    pub fn arity(&self) -> usize {
        self.values.len()
    }

    /// Values on the generators.
    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn eval(&self, w: &FreeWord) -> FieldElem {
        let mut acc = self.values[0].one_like();
        for &(g, e) in w.letters() {
            let base = if e > 0 { &self.values[g] } else { &self.inverses[g] };
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(base);
            }
        }
        acc
    }

    /// Linear extension to `ℤF`.
    pub fn eval_ring(&self, e: &IntGroupRing) -> FieldElem {
        let field = self.field();
        e.map_linear(&field.zero(), |w, &c| self.eval(w).mul(&field.from_int(c)))
    }

    pub fn mul(&self, other: &Character) -> Character {
        Character {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect(),
            inverses: self
                .inverses
                .iter()
                .zip(&other.inverses)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Character {
        Character {
            values: self.inverses.clone(),
            inverses: self.values.clone(),
        }
    }

    pub fn kills_relators(&self, p: &Presentation) -> bool {
        p.relators().iter().all(|r| self.eval(r).is_one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `α(γ) = σ(p(γ)) z^{φ(γ)}`; the `Minus` variant is `γ ↦ α(γ⁻¹)`,
/// realized with `σ̄` and `z⁻¹`.
#[derive(Clone, Debug)]
pub struct CharacterAlpha {
    tw: TwistSetup,
    z: FieldElem,
    sign: Sign,
    chi: Character,
}

impl CharacterAlpha {
    /// `z` must lie in a field whose cyclotomic level is the one of `tw`.
    pub fn new(p: &Presentation, tw: TwistSetup, z: FieldElem) -> Result<CharacterAlpha> {
        CharacterAlpha::build(p, tw, z, Sign::Plus)
    }

    fn build(p: &Presentation, tw: TwistSetup, z: FieldElem, sign: Sign) -> Result<CharacterAlpha> {
        let kz = z.field().clone();
        if kz.cyclotomic_order() != tw.order() {
            return Err(Error::FieldMismatch(format!(
                "evaluation point lives over Q(zeta_{}), the twist needs Q(zeta_{})",
                kz.cyclotomic_order(),
                tw.order()
            )));
        }
        if p.arity() != tw.splitting().arity() {
            return Err(Error::DimensionMismatch(
                "presentation and splitting have different arity".into(),
            ));
        }
        let n = p.arity();
        let values = (0..n)
            .map(|g| {
                let mut e = vec![0; n];
                e[g] = 1;
                let s = kz.lift(&tw.sigma_value(&e))?;
                Ok(s.mul(&z.pow(tw.splitting().phi_of(&e))?))
            })
            .collect::<Result<Vec<_>>>()?;
        let chi = Character::new(values)?;
        if !chi.kills_relators(p) {
            return Err(Error::InternalInconsistency("alpha does not kill the relators".into()));
        }
        Ok(CharacterAlpha { tw, z, sign, chi })
    }

    /// `α⁻ = α ∘ inv`, as the character attached to `σ̄` and `z⁻¹`.
    pub fn minus(&self, p: &Presentation) -> Result<CharacterAlpha> {
        let sigma_bar: Vec<i64> = self.tw.sigma().iter().map(|e| -e).collect();
        let tw = TwistSetup::new(self.tw.splitting().clone(), sigma_bar)?;
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        CharacterAlpha::build(p, tw, self.z.try_inv()?, sign)
    }

    pub fn twist(&self) -> &TwistSetup {
        &self.tw
    }

    pub fn z(&self) -> &FieldElem {
        &self.z
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn field(&self) -> &Field {
        self.z.field()
    }

    pub fn is_trivial(&self) -> bool {
        self.tw.is_trivial() && self.z.is_one()
    }

    pub fn eval(&self, w: &FreeWord) -> FieldElem {
        self.chi.eval(w)
    }
}
