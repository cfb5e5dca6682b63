use num_complex::Complex64;

/// Which complex root of an extension polynomial the embedding uses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RootChoice {
    /// Largest modulus; ties broken by larger real part, then larger
    /// imaginary part.
    LargestModulus,
    /// The root closest to a given point.
    Near(Complex64),
}

const TIE: f64 = 1e-9;

impl RootChoice {
    pub(crate) fn select(&self, roots: &[Complex64]) -> Complex64 {
        let mut best = roots[0];
        for &r in &roots[1..] {
            let better = match self {
                RootChoice::LargestModulus => {
                    let (a, b) = (r.norm(), best.norm());
                    if (a - b).abs() > TIE * (1.0 + b) {
                        a > b
                    } else if (r.re - best.re).abs() > TIE * (1.0 + b) {
                        r.re > best.re
                    } else {
                        r.im > best.im
                    }
                }
                RootChoice::Near(p) => (r - p).norm() < (best - p).norm(),
            };
            if better {
                best = r;
            }
        }
        best
    }
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial with coefficients listed low to high
/// (Durand–Kerner, then Newton polishing). The leading coefficient must be
/// nonzero.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return vec![-monic[0]];
    }
    let bound = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * bound / seed.norm().powi(k as i32))
        .collect();
    for _ in 0..2000 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let (p, _) = horner(&monic, roots[i]);
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (roots[i] - roots[j]));
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-8, 1e-8);
                shift = f64::INFINITY;
                continue;
            }
            let delta = p / denom;
            roots[i] -= delta;
            shift = shift.max(delta.norm() / (1.0 + roots[i].norm()));
        }
        if shift < 1e-15 {
            break;
        }
    }
    for r in roots.iter_mut() {
        for _ in 0..5 {
            let (p, dp) = horner(&monic, *r);
            if dp.norm() == 0.0 {
                break;
            }
            *r -= p / dp;
        }
    }
    roots
}
