use super::character::{Character, CharacterAlpha};
use super::cocycle::{
    character_matrix, evaluated_d_jacobian, evaluated_jacobian, CocycleVec, Homomorphism, OneCochain,
};
use crate::field::FieldElem;
use crate::laurent::{solve, FieldMatrix, Solution};
use crate::matrix::Ring;
use crate::presentation::{FreeWord, IntGroupRing, Presentation};
use crate::{Error, Result};

/// A normalized 2-cochain with values in `C_χ`.
pub trait TwoCochain {
    fn module(&self) -> &Character;
    fn eval(&self, g1: &FreeWord, g2: &FreeWord) -> FieldElem;

    /// Linear extension in the first slot.
    fn eval_linear(&self, eta: &IntGroupRing, g2: &FreeWord) -> FieldElem {
        let field = self.module().field();
        eta.map_linear(&field.zero(), |w, &c| self.eval(w, g2).mul(&field.from_int(c)))
    }
}

/// `(u ∪ v)(γ₁, γ₂) = u(γ₁) · χ_v(γ₁) v(γ₂)`.
pub struct Cup<'a> {
    u: &'a dyn OneCochain,
    v: &'a dyn OneCochain,
    chi: Character,
}

impl<'a> Cup<'a> {
    pub fn new(u: &'a dyn OneCochain, v: &'a dyn OneCochain) -> Cup<'a> {
        let chi = u.module().mul(v.module());
        Cup { u, v, chi }
    }
}

impl TwoCochain for Cup<'_> {
    fn module(&self) -> &Character {
        &self.chi
    }

    fn eval(&self, g1: &FreeWord, g2: &FreeWord) -> FieldElem {
        self.u.eval(g1).mul(&self.v.module().eval(g1)).mul(&self.v.eval(g2))
    }
}

/// `df(γ₁, γ₂) = χ(γ₁) f(γ₂) − f(γ₁γ₂) + f(γ₁)`.
pub struct Coboundary<'a> {
    f: &'a dyn OneCochain,
}

impl<'a> Coboundary<'a> {
    pub fn new(f: &'a dyn OneCochain) -> Coboundary<'a> {
        Coboundary { f }
    }
}

impl TwoCochain for Coboundary<'_> {
    fn module(&self) -> &Character {
        self.f.module()
    }

    fn eval(&self, g1: &FreeWord, g2: &FreeWord) -> FieldElem {
        let chi = self.f.module();
        chi.eval(g1)
            .mul(&self.f.eval(g2))
            .sub(&self.f.eval(&g1.mul(g2)))
            .add(&self.f.eval(g1))
    }
}

/// Sum of 2-cochains over one module.
pub struct Sum<'a> {
    parts: Vec<&'a dyn TwoCochain>,
}

impl<'a> Sum<'a> {
    pub fn new(parts: Vec<&'a dyn TwoCochain>) -> Result<Sum<'a>> {
        let Some(first) = parts.first() else {
            return Err(Error::DimensionMismatch("empty sum of cochains".into()));
        };
        if parts.iter().any(|c| c.module() != first.module()) {
            return Err(Error::FieldMismatch(
                "summands have different coefficient modules".into(),
            ));
        }
        Ok(Sum { parts })
    }
}

impl TwoCochain for Sum<'_> {
    fn module(&self) -> &Character {
        self.parts[0].module()
    }

    fn eval(&self, g1: &FreeWord, g2: &FreeWord) -> FieldElem {
        self.parts
            .iter()
            .fold(self.module().field().zero(), |acc, c| acc.add(&c.eval(g1, g2)))
    }
}

pub struct Neg<'a>(pub &'a dyn TwoCochain);

impl TwoCochain for Neg<'_> {
    fn module(&self) -> &Character {
        self.0.module()
    }

    fn eval(&self, g1: &FreeWord, g2: &FreeWord) -> FieldElem {
        self.0.eval(g1, g2).neg()
    }
}

/// The zero 2-cochain in `C_χ`.
pub struct ZeroCochain(pub Character);

impl TwoCochain for ZeroCochain {
    fn module(&self) -> &Character {
        &self.0
    }

    fn eval(&self, _: &FreeWord, _: &FreeWord) -> FieldElem {
        self.0.field().zero()
    }
}

/// Solvability of a linear obstruction system with its witness: a solution
/// or an inconsistency certificate.
#[derive(Clone, Debug)]
pub struct ObstructionResult {
    pub solvable: bool,
    pub solution: Solution,
    pub matrix: FieldMatrix,
    pub rhs: Vec<FieldElem>,
}

impl ObstructionResult {
    fn from_system(matrix: FieldMatrix, rhs: Vec<FieldElem>) -> Result<ObstructionResult> {
        let solution = solve(&matrix, &rhs)?;
        Ok(ObstructionResult {
            solvable: solution.is_solvable(),
            solution,
            matrix,
            rhs,
        })
    }
}

/// `c` is a coboundary iff some `a_i` satisfy
/// `Σ_i χ(∂R_j/∂S_i) a_i + Σ_i c(∂R_j/∂S_i, S_i) = 0` for every relator.
pub fn two_cocycle_is_coboundary(p: &Presentation, c: &dyn TwoCochain) -> Result<ObstructionResult> {
    let chi = c.module();
    let field = chi.field();
    let a = character_matrix(p, chi, field);
    let fox = p.fox_jacobian();
    let rhs = fox
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(field.zero(), |acc, (i, e)| {
                    acc.add(&c.eval_linear(e, &FreeWord::generator(i)))
                })
                .neg()
        })
        .collect();
    ObstructionResult::from_system(a, rhs)
}

/// Both derivations of the obstruction to extending `d₊` to second order.
#[derive(Clone, Debug)]
pub struct CupObstruction {
    /// `J(z) x = −a (DJ)(z) d₊`.
    pub derivative_path: ObstructionResult,
    /// The coboundary criterion applied to `(aφ) ∪ d₊`.
    pub generic_path: ObstructionResult,
}

impl CupObstruction {
    pub fn solvable(&self) -> bool {
        self.derivative_path.solvable
    }
}

pub fn cup_obstruction(p: &Presentation, alpha: &CharacterAlpha, d: &CocycleVec) -> Result<CupObstruction> {
    cup_obstruction_scaled(p, alpha, d, &alpha.field().one())
}

/// As [`cup_obstruction`] with `h = a·φ`. The two paths must agree.
pub fn cup_obstruction_scaled(
    p: &Presentation,
    alpha: &CharacterAlpha,
    d: &CocycleVec,
    a: &FieldElem,
) -> Result<CupObstruction> {
    if a.is_zero() {
        return Err(Error::ZeroScale);
    }
    if d.character() != alpha.character() || !d.is_cocycle(p) {
        return Err(Error::NotACocycle);
    }
    let j = evaluated_jacobian(p, alpha)?;
    let dj = evaluated_d_jacobian(p, alpha)?;
    let rhs: Vec<FieldElem> = dj.mul_vec(d.values()).iter().map(|x| x.mul(a).neg()).collect();
    let derivative_path = ObstructionResult::from_system(j, rhs)?;
    let h = Homomorphism::scaled_phi(alpha.twist().splitting().phi(), a);
    let generic_path = two_cocycle_is_coboundary(p, &Cup::new(&h, d))?;
    if derivative_path.solvable != generic_path.solvable {
        return Err(Error::InternalInconsistency(format!(
            "obstruction system is {} but the cup product is {}a coboundary",
            if derivative_path.solvable {
                "solvable"
            } else {
                "unsolvable"
            },
            if generic_path.solvable { "" } else { "not " }
        )));
    }
    Ok(CupObstruction {
        derivative_path,
        generic_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deformation::cocycle::{cocycle_generator, ProductCochain};
    use crate::deformation::tests::{kz_quadratic, torus};
    use crate::laurent::Solution;

    #[test]
    fn zero_and_coboundaries_are_coboundaries() {
        let (p, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let a = CharacterAlpha::new(&p, tw, k.generator().unwrap()).unwrap();
        let zero = two_cocycle_is_coboundary(&p, &ZeroCochain(a.character().clone())).unwrap();
        match zero.solution {
            Solution::Solved { particular, .. } => assert!(particular.iter().all(FieldElem::is_zero)),
            Solution::Inconsistent { .. } => panic!("zero cochain is a coboundary"),
        }
        // c = −df with f = d₊ · h, a_i = f(S_i) is a witness
        let d = cocycle_generator(&p, &a).unwrap();
        let h = Homomorphism::scaled_phi(a.twist().splitting().phi(), &k.from_int(3));
        let f = ProductCochain::new(&d, &h);
        let df = Coboundary::new(&f);
        let c = Neg(&df);
        let res = two_cocycle_is_coboundary(&p, &c).unwrap();
        assert!(res.solvable);
        let witness: Vec<FieldElem> = (0..3).map(|i| f.eval(&FreeWord::generator(i))).collect();
        let lhs = res.matrix.mul_vec(&witness);
        assert_eq!(lhs, res.rhs);
    }

    #[test]
    fn cup_antisymmetry() {
        let (p, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let a = CharacterAlpha::new(&p, tw, k.generator().unwrap()).unwrap();
        let d = cocycle_generator(&p, &a).unwrap();
        let h = Homomorphism::scaled_phi(a.twist().splitting().phi(), &k.one());
        let (hd, dh) = (Cup::new(&h, &d), Cup::new(&d, &h));
        let sum = Sum::new(vec![&hd, &dh]).unwrap();
        let f = ProductCochain::new(&h, &d);
        let witness: Vec<FieldElem> = (0..3).map(|i| f.eval(&FreeWord::generator(i))).collect();
        let res = two_cocycle_is_coboundary(&p, &sum).unwrap();
        assert!(res.solvable);
        assert_eq!(res.matrix.mul_vec(&witness), res.rhs);
        // and pointwise: z₁∪z₂ + z₂∪z₁ + df = 0
        let df = Coboundary::new(&f);
        let words = [
            FreeWord::generator(0),
            FreeWord::reduce(&[(1, 2), (0, -1)]),
            FreeWord::reduce(&[(2, -1), (0, 3)]),
        ];
        for g1 in &words {
            for g2 in &words {
                assert!(sum.eval(g1, g2).add(&df.eval(g1, g2)).is_zero());
            }
        }
    }

    #[test]
    fn obstruction_at_simple_zero() {
        let (p, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let z = k.generator().unwrap();
        let a = CharacterAlpha::new(&p, tw, z.clone()).unwrap();
        let d = cocycle_generator(&p, &a).unwrap();
        let res = cup_obstruction(&p, &a, &d).unwrap();
        assert!(!res.solvable());
        assert!(!res.generic_path.solvable);
        // DJ(z)·(0, 2, z − 1) = (2z, z² − z)
        let spec = d.scale(&k.from_int(2));
        let dj = evaluated_d_jacobian(&p, &a).unwrap();
        assert_eq!(
            dj.mul_vec(spec.values()),
            vec![z.mul(&k.from_int(2)), z.mul(&z).sub(&z)]
        );
        let lhs = k.from_int(-4).mul(&z).sub(&z.mul(&z).sub(&z).mul(&z.sub(&k.one())));
        assert_eq!(lhs, z.mul(&k.from_int(4).mul(&z).add(&k.from_int(4))).neg());
        assert!(!lhs.is_zero());
    }

    #[test]
    fn obstruction_preconditions() {
        let (p, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let a = CharacterAlpha::new(&p, tw, k.generator().unwrap()).unwrap();
        let d = cocycle_generator(&p, &a).unwrap();
        assert!(matches!(
            cup_obstruction_scaled(&p, &a, &d, &k.zero()),
            Err(Error::ZeroScale)
        ));
        let bad = CocycleVec::new(vec![k.one(), k.one(), k.one()], a.character().clone()).unwrap();
        assert!(matches!(cup_obstruction(&p, &a, &bad), Err(Error::NotACocycle)));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]
        #[test]
        fn verdict_invariant_under_class_and_scale(
            sigma in 0usize..4,
            r in -5i64..6,
            c in 1i64..7,
            num in 1i64..9,
            den in 1i64..5,
            neg in proptest::bool::ANY,
        ) {
            let exps = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1]][sigma];
            let (p, tw) = torus(&exps);
            let k = kz_quadratic(&tw);
            let z = if sigma == 0 { k.generator().unwrap() } else { k.one() };
            let a = CharacterAlpha::new(&p, tw, z).unwrap();
            let d = cocycle_generator(&p, &a).unwrap();
            let base = cup_obstruction(&p, &a, &d).unwrap().solvable();
            let shift = CocycleVec::coboundary(a.character(), &k.from_int(r));
            let scale = k.from_int(if neg { -c } else { c });
            let moved = d.scale(&scale).add(&shift);
            let a_scale = k.from_int(num).try_div(&k.from_int(den)).unwrap();
            let res = cup_obstruction_scaled(&p, &a, &moved, &a_scale).unwrap();
            proptest::prop_assert_eq!(res.solvable(), base);
            proptest::prop_assert_eq!(res.generic_path.solvable, base);
        }
    }
}
