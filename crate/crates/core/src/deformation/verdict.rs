use serde::Serialize;

use super::character::CharacterAlpha;
use super::cocycle::{cocycle_generator, dim_h1, evaluated_jacobian, CocycleVec};
use super::obstruction::{cup_obstruction, CupObstruction};
use crate::alexander::{alexander_sequence, is_symmetric, AlexanderSequence, TwistSetup};
use crate::field::FieldElem;
use crate::laurent::{rank, FieldMatrix, LaurentPoly, Multiplicity};
use crate::matrix::Ring;
use crate::presentation::Presentation;
use crate::{Error, Result};

/// Coordinates of a cocycle class in the basis `d₀, d₊, d₋`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadConePoint {
    pub a0: FieldElem,
    pub a_plus: FieldElem,
    pub a_minus: FieldElem,
}

impl QuadConePoint {
    /// `a₀ a₊ = 0` and `a₀ a₋ = 0`.
    pub fn in_quadratic_cone(&self) -> bool {
        self.a0.mul(&self.a_plus).is_zero() && self.a0.mul(&self.a_minus).is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    TrivialAlpha,
    PositiveRankNa,
    NotAZeroRigid,
    SimpleZeroDeformable,
    HigherOrderInconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::TrivialAlpha => "TRIVIAL_ALPHA",
            Verdict::PositiveRankNa => "POSITIVE_RANK_NA",
            Verdict::NotAZeroRigid => "NOT_A_ZERO_RIGID",
            Verdict::SimpleZeroDeformable => "SIMPLE_ZERO_DEFORMABLE",
            Verdict::HigherOrderInconclusive => "HIGHER_ORDER_INCONCLUSIVE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dimensions of the components of the representation variety through
/// `ρ_α` that the verdict asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub dims: Vec<u32>,
    pub transverse: bool,
}

/// One exact rank or solvability decision, kept for numerical cross-checks.
#[derive(Clone, Debug)]
pub struct LinearDecision {
    pub label: String,
    pub matrix: FieldMatrix,
    pub rhs: Option<Vec<FieldElem>>,
    pub rank: usize,
    pub solvable: Option<bool>,
}

impl LinearDecision {
    fn rank_of(label: &str, matrix: FieldMatrix) -> Result<LinearDecision> {
        let r = rank(&matrix)?;
        Ok(LinearDecision {
            label: label.to_string(),
            matrix,
            rhs: None,
            rank: r,
            solvable: None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct DeformabilityReport {
    pub verdict: Verdict,
    pub alexander: AlexanderSequence,
    pub symmetric: bool,
    pub zero_order: Option<Multiplicity>,
    pub dim_h1_plus: Option<usize>,
    pub dim_h1_minus: Option<usize>,
    pub cocycle: Option<CocycleVec>,
    pub obstruction: Option<CupObstruction>,
    pub components: Components,
    pub decisions: Vec<LinearDecision>,
    pub warnings: Vec<String>,
}

impl DeformabilityReport {
    pub fn obstruction_solvable(&self) -> Option<bool> {
        self.obstruction.as_ref().map(CupObstruction::solvable)
    }
}

/// Monic polynomial of `z` over the cyclotomic level when it is known:
/// `t − z` for cyclotomic `z`, the extension polynomial when `z` is the
/// adjoined root.
pub fn point_minpoly(z: &FieldElem) -> Result<Option<LaurentPoly>> {
    let kz = z.field();
    let base = kz.base();
    if let Some(c) = z.cyclotomic_part() {
        let c = base.from_cyclotomic(c.clone());
        return Ok(Some(LaurentPoly::new(&base, 0, vec![c.neg(), base.one()])));
    }
    if *z == kz.generator()? {
        let coeffs = kz.minpoly().expect("extension present");
        return Ok(Some(LaurentPoly::new(&base, 0, coeffs)));
    }
    Ok(None)
}

/// `ord_z Δ`: multiplicity of the minimal polynomial of `z` when known,
/// cross-checked against the least `k` with `(D^k Δ)(z) ≠ 0`.
pub fn zero_order(alpha: &CharacterAlpha, delta0: &LaurentPoly) -> Result<Multiplicity> {
    let by_derivatives = delta0.vanishing_order_at(alpha.z())?;
    if let Some(m) = point_minpoly(alpha.z())? {
        let by_division = delta0.root_multiplicity(&m)?;
        if by_division != by_derivatives {
            return Err(Error::InternalInconsistency(format!(
                "order of vanishing {by_division} by division but {by_derivatives} by derivatives"
            )));
        }
    }
    Ok(by_derivatives)
}

/// `dim H¹` must be the least `l` with `Δ_l(z) ≠ 0`.
fn check_dimension(alpha: &CharacterAlpha, seq: &AlexanderSequence, dim: usize) -> Result<()> {
    let mut l = 0;
    while seq.delta(l).evaluate_at(alpha.z())?.is_zero() {
        l += 1;
    }
    if l != dim {
        return Err(Error::InternalInconsistency(format!(
            "dim H^1 = {dim} but the first Alexander polynomial not vanishing at z is Delta_{l}"
        )));
    }
    Ok(())
}

pub fn deformability_verdict(p: &Presentation, tw: &TwistSetup, z: &FieldElem) -> Result<DeformabilityReport> {
    let betti = tw.splitting().h1().betti();
    if betti != 1 {
        return Err(Error::NotRationalHomologyCircle { betti });
    }
    let alexander = alexander_sequence(p, tw)?;
    let delta0 = alexander.deltas()[0].clone();
    let alpha = CharacterAlpha::new(p, tw.clone(), z.clone())?;
    let mut warnings = Vec::new();
    let symmetric = if delta0.is_zero() {
        false
    } else {
        is_symmetric(&delta0)?.0
    };
    if !delta0.is_zero() && !symmetric {
        warnings.push(format!("Delta_0 = {delta0} is not symmetric"));
    }
    let mut report = DeformabilityReport {
        verdict: Verdict::TrivialAlpha,
        alexander,
        symmetric,
        zero_order: None,
        dim_h1_plus: None,
        dim_h1_minus: None,
        cocycle: None,
        obstruction: None,
        components: Components {
            dims: vec![3],
            transverse: false,
        },
        decisions: Vec::new(),
        warnings,
    };
    if alpha.is_trivial() {
        if !delta0.is_zero() {
            report.zero_order = Some(zero_order(&alpha, &delta0)?);
        }
        return Ok(report);
    }
    if delta0.is_zero() {
        report.verdict = Verdict::PositiveRankNa;
        report.zero_order = Some(Multiplicity::Infinite);
        report.components.dims = Vec::new();
        return Ok(report);
    }
    let order = zero_order(&alpha, &delta0)?;
    report.zero_order = Some(order);

    let minus = alpha.minus(p)?;
    let seq_minus = alexander_sequence(p, minus.twist())?;
    let order_minus = zero_order(&minus, &seq_minus.deltas()[0])?;
    if order_minus != order {
        return Err(Error::InternalInconsistency(format!(
            "z is a zero of order {order} for alpha but {order_minus} for its inverse"
        )));
    }
    let dim_plus = dim_h1(p, &alpha)?;
    let dim_minus = dim_h1(p, &minus)?;
    check_dimension(&alpha, &report.alexander, dim_plus)?;
    check_dimension(&minus, &seq_minus, dim_minus)?;
    report.dim_h1_plus = Some(dim_plus);
    report.dim_h1_minus = Some(dim_minus);
    report.decisions.push(LinearDecision::rank_of(
        "rank J(z) for alpha+",
        evaluated_jacobian(p, &alpha)?,
    )?);
    report.decisions.push(LinearDecision::rank_of(
        "rank J(z) for alpha-",
        evaluated_jacobian(p, &minus)?,
    )?);

    match order {
        Multiplicity::Finite(0) => {
            report.verdict = Verdict::NotAZeroRigid;
        }
        Multiplicity::Finite(1) => {
            if dim_plus != 1 || dim_minus != 1 {
                return Err(Error::InternalInconsistency(format!(
                    "simple zero with dim H^1(C+) = {dim_plus}, dim H^1(C-) = {dim_minus}"
                )));
            }
            let d = cocycle_generator(p, &alpha)?;
            let obstruction = cup_obstruction(p, &alpha, &d)?;
            if obstruction.solvable() {
                return Err(Error::InternalInconsistency(
                    "the cup product of phi and d+ is a coboundary at a simple zero".into(),
                ));
            }
            let path = &obstruction.derivative_path;
            report.decisions.push(LinearDecision {
                label: "obstruction system J(z) x = -(DJ)(z) d+".into(),
                matrix: path.matrix.clone(),
                rhs: Some(path.rhs.clone()),
                rank: rank(&path.matrix)?,
                solvable: Some(path.solvable),
            });
            report.verdict = Verdict::SimpleZeroDeformable;
            report.components = Components {
                dims: vec![4, 3],
                transverse: true,
            };
            report.cocycle = Some(d);
            report.obstruction = Some(obstruction);
        }
        _ => {
            report.verdict = Verdict::HigherOrderInconclusive;
            report.components.dims = Vec::new();
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deformation::tests::{kz_quadratic, torus};

    #[test]
    fn quadratic_cone() {
        let (_, tw) = torus(&[0, 0, 0]);
        let k = tw.field().clone();
        let pt = |a: i64, b: i64, c: i64| QuadConePoint {
            a0: k.from_int(a),
            a_plus: k.from_int(b),
            a_minus: k.from_int(c),
        };
        assert!(pt(1, 0, 0).in_quadratic_cone());
        assert!(pt(0, 1, 1).in_quadratic_cone());
        assert!(!pt(1, 1, 0).in_quadratic_cone());
    }

    #[test]
    fn verdicts_on_torus_bundle() {
        let (p, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let r = deformability_verdict(&p, &tw, &k.generator().unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::SimpleZeroDeformable);
        assert_eq!(r.zero_order, Some(Multiplicity::Finite(1)));
        assert_eq!(r.components.dims, vec![4, 3]);
        assert!(r.symmetric);
        let r = deformability_verdict(&p, &tw, &tw.field().from_int(2)).unwrap();
        assert_eq!(r.verdict, Verdict::NotAZeroRigid);
        assert_eq!((r.dim_h1_plus, r.dim_h1_minus), (Some(0), Some(0)));
        let r = deformability_verdict(&p, &tw, &tw.field().one()).unwrap();
        assert_eq!(r.verdict, Verdict::TrivialAlpha);
        assert_eq!(r.zero_order, Some(Multiplicity::Finite(0)));
        let (p, tw) = torus(&[0, 1, 1]);
        let r = deformability_verdict(&p, &tw, &tw.field().one()).unwrap();
        assert_eq!(r.verdict, Verdict::SimpleZeroDeformable);
    }

    #[test]
    fn point_minpolys() {
        let (_, tw) = torus(&[0, 0, 0]);
        let k = kz_quadratic(&tw);
        let s = k.generator().unwrap();
        assert_eq!(point_minpoly(&s).unwrap().unwrap().to_string(), "t^2-6*t+1");
        assert_eq!(point_minpoly(&k.from_int(2)).unwrap().unwrap().to_string(), "t-2");
        assert!(point_minpoly(&s.add(&k.one())).unwrap().is_none());
    }

    proptest::proptest! {
        #[test]
        fn cone_detects_transversality(eps in -50i64..50) {
            let (_, tw) = torus(&[0, 0, 0]);
            let k = tw.field().clone();
            let q = QuadConePoint { a0: k.one(), a_plus: k.from_int(eps), a_minus: k.zero() };
            proptest::prop_assert_eq!(q.in_quadratic_cone(), eps == 0);
        }

        #[test]
        fn same_order_for_inverse(sigma in 0usize..4, num in -9i64..10, den in 1i64..6) {
            let exps = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1]][sigma];
            let (p, tw) = torus(&exps);
            let k = tw.field().clone();
            let z = k.from_int(num).try_div(&k.from_int(den)).unwrap();
            proptest::prop_assume!(!z.is_zero());
            let r = deformability_verdict(&p, &tw, &z).unwrap();
            proptest::prop_assert_eq!(r.dim_h1_plus, r.dim_h1_minus);
        }
    }
}
