//! Machine-readable and text rendering of a deformability run.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::alexander::TwistSetup;
use crate::deformation::{point_minpoly, Components, DeformabilityReport, Verdict};
use crate::field::FieldElem;
use crate::laurent::Multiplicity;
use crate::numeric::FloatCheck;
use crate::Result;

/// An integer that serializes as a JSON number when it fits in `u64`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Count {
    Small(u64),
    Big(String),
}

impl From<&BigInt> for Count {
    fn from(b: &BigInt) -> Count {
        b.to_u64().map_or_else(|| Count::Big(b.to_string()), Count::Small)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Summary {
    pub torsion: Vec<Count>,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaSummary {
    pub order: u64,
    pub torsion_exponents: Vec<i64>,
}

/// Stable-key report. Field order is the output order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub presentation: String,
    pub h1: H1Summary,
    pub sigma: SigmaSummary,
    pub phi: Vec<i64>,
    pub z_minpoly: Option<String>,
    pub delta: Vec<String>,
    pub symmetric: bool,
    pub zero_order: Option<Multiplicity>,
    pub dim_h1_plus: Option<usize>,
    pub dim_h1_minus: Option<usize>,
    pub obstruction_solvable: Option<bool>,
    pub verdict: Verdict,
    pub rationale: String,
    pub components: Components,
    pub warnings: Vec<String>,
    pub float_check: Option<Vec<FloatCheck>>,
}

fn rationale(r: &DeformabilityReport) -> Result<String> {
    Ok(match r.verdict {
        Verdict::TrivialAlpha => {
            let d0 = &r.alexander.deltas()[0];
            let one = d0.field().one();
            let v = d0.evaluate_at(&one)?;
            if v.is_zero() {
                "alpha is trivial; Delta_0(1) = 0".to_string()
            } else {
                format!("alpha is trivial and Delta_0(1) = {v} is nonzero, so it is not a zero of the Alexander invariant")
            }
        }
        Verdict::PositiveRankNa => "Delta_0 vanishes identically; the twisted Alexander module has positive rank".into(),
        Verdict::NotAZeroRigid => {
            "z is not a zero of Delta_0; only the 3-dimensional abelian component passes through rho_alpha".into()
        }
        Verdict::SimpleZeroDeformable => {
            "z is a simple zero of Delta_0; dim H^1 is 1 for alpha and its inverse and the cup product obstruction is nonzero"
                .into()
        }
        Verdict::HigherOrderInconclusive => format!(
            "z is a zero of order {} of Delta_0; no conclusion is drawn",
            r.zero_order.expect("order is known")
        ),
    })
}

impl AnalysisReport {
    pub fn new(
        presentation: &str,
        tw: &TwistSetup,
        z: &FieldElem,
        r: &DeformabilityReport,
        float_check: Option<Vec<FloatCheck>>,
    ) -> Result<AnalysisReport> {
        let s = tw.splitting();
        let mut warnings = r.warnings.clone();
        if let Some(checks) = &float_check {
            warnings.extend(crate::numeric::disagreements(checks));
        }
        Ok(AnalysisReport {
            presentation: presentation.to_string(),
            h1: H1Summary {
                torsion: s.h1().torsion_invariants().iter().map(Count::from).collect(),
                betti: s.h1().betti(),
            },
            sigma: SigmaSummary {
                order: tw.order(),
                torsion_exponents: tw.sigma().to_vec(),
            },
            phi: s.phi().to_vec(),
            z_minpoly: point_minpoly(z)?.map(|m| m.to_string()),
            delta: r.alexander.deltas().iter().map(ToString::to_string).collect(),
            symmetric: r.symmetric,
            zero_order: r.zero_order,
            dim_h1_plus: r.dim_h1_plus,
            dim_h1_minus: r.dim_h1_minus,
            obstruction_solvable: r.obstruction_solvable(),
            verdict: r.verdict,
            rationale: rationale(r)?,
            components: r.components.clone(),
            warnings,
            float_check,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "n/a".to_string(), ToString::to_string)
        }
        let list = |v: &[String]| format!("[{}]", v.join(", "));
        let torsion: Vec<String> = self
            .h1
            .torsion
            .iter()
            .map(|c| match c {
                Count::Small(n) => n.to_string(),
                Count::Big(s) => s.clone(),
            })
            .collect();
        let exps: Vec<String> = self.sigma.torsion_exponents.iter().map(ToString::to_string).collect();
        let phi: Vec<String> = self.phi.iter().map(ToString::to_string).collect();
        let dims: Vec<String> = self.components.dims.iter().map(ToString::to_string).collect();
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "presentation: {}", self.presentation).unwrap();
        writeln!(w, "h1.torsion: {}", list(&torsion)).unwrap();
        writeln!(w, "h1.betti: {}", self.h1.betti).unwrap();
        writeln!(w, "sigma.order: {}", self.sigma.order).unwrap();
        writeln!(w, "sigma.torsion_exponents: {}", list(&exps)).unwrap();
        writeln!(w, "phi: {}", list(&phi)).unwrap();
        writeln!(w, "z_minpoly: {}", opt(&self.z_minpoly)).unwrap();
        for (k, d) in self.delta.iter().enumerate() {
            writeln!(w, "delta_{k}: {d}").unwrap();
        }
        writeln!(w, "symmetric: {}", self.symmetric).unwrap();
        writeln!(w, "zero_order: {}", opt(&self.zero_order)).unwrap();
        writeln!(w, "dim_h1_plus: {}", opt(&self.dim_h1_plus)).unwrap();
        writeln!(w, "dim_h1_minus: {}", opt(&self.dim_h1_minus)).unwrap();
        writeln!(w, "obstruction_solvable: {}", opt(&self.obstruction_solvable)).unwrap();
        writeln!(w, "verdict: {}", self.verdict).unwrap();
        writeln!(w, "rationale: {}", self.rationale).unwrap();
        writeln!(w, "components.dims: {}", list(&dims)).unwrap();
        writeln!(w, "components.transverse: {}", self.components.transverse).unwrap();
        for warning in &self.warnings {
            writeln!(w, "warning: {warning}").unwrap();
        }
        if let Some(checks) = &self.float_check {
            for c in checks {
                writeln!(
                    w,
                    "float_check: {}: rank {}/{}, solvable {}/{}, {}",
                    c.label,
                    c.exact_rank,
                    c.float_rank,
                    opt(&c.exact_solvable),
                    opt(&c.float_solvable),
                    if c.agrees() { "agree" } else { "DISAGREE" }
                )
                .unwrap();
            }
        }
        out
    }
}
