use num_traits::{Signed, ToPrimitive, Zero};

use super::H1Structure;
use crate::{Error, Result};

/// A choice of isomorphism `H₁ ≅ tors(H₁) ⊕ ℤ`: the projection `p`, the
/// generator `φ` of `hom(H₁, ℤ)`, and the section `s_p` with
/// `s_p ∘ φ = Id − p`.
///
/// Torsion elements are written in the canonical torsion generators
/// `T_i` of order `d_i`; all exponent vectors are over the presentation's
/// generators.
#[derive(Clone, Debug)]
pub struct SplittingData {
    h1: H1Structure,
    torsion: Vec<i64>,
    phi: Vec<i64>,
    /// `p[i][g]`: coefficient of `T_i` in `p(S_g)`, reduced into `0..d_i`.
    p: Vec<Vec<i64>>,
    s_p_image: Vec<i64>,
    torsion_generators: Vec<Vec<i64>>,
}

fn to_i64(x: &num_bigint::BigInt) -> i64 {
    x.to_i64().expect("homology data fits in i64")
}

/// Splitting read off the Smith basis change: `φ` is the free coordinate
/// and `s_p(1)` the free basis vector, with the sign of `φ` fixed so that
/// its first nonzero value on the generators is positive.
pub fn canonical_splitting(h: &H1Structure) -> Result<SplittingData> {
    if h.betti() != 1 {
        return Err(Error::NotRationalHomologyCircle { betti: h.betti() });
    }
    let snf = h.basis_change();
    let n = h.arity();
    let f = h.free_slots()[0];
    let mut phi: Vec<i64> = (0..n).map(|g| to_i64(&snf.v[(g, f)])).collect();
    let mut s_p_image: Vec<i64> = (0..n).map(|g| to_i64(&snf.v_inv[(f, g)])).collect();
    if phi.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        phi.iter_mut().for_each(|x| *x = -*x);
        s_p_image.iter_mut().for_each(|x| *x = -*x);
    }
    let torsion: Vec<i64> = h.torsion_invariants().iter().map(to_i64).collect();
    let p = h
        .torsion_slots()
        .iter()
        .zip(&torsion)
        .map(|(&slot, &d)| (0..n).map(|g| to_i64(&snf.v[(g, slot)]).rem_euclid(d)).collect())
        .collect();
    let torsion_generators = h
        .torsion_slots()
        .iter()
        .map(|&slot| (0..n).map(|g| to_i64(&snf.v_inv[(slot, g)])).collect())
        .collect();
    Ok(SplittingData {
        h1: h.clone(),
        torsion,
        phi,
        p,
        s_p_image,
        torsion_generators,
    })
}

/// The splitting with projection `p₂ = p₁ + ψ∘φ`, where `p₁` is the
/// canonical one and `ψ(1)` is given in torsion coordinates.
pub fn alternate_splitting(h: &H1Structure, psi: &[i64]) -> Result<SplittingData> {
    canonical_splitting(h)?.shifted(psi)
}

impl SplittingData {
    pub fn h1(&self) -> &H1Structure {
        &self.h1
    }

    pub fn arity(&self) -> usize {
        self.phi.len()
    }

    pub fn torsion_invariants(&self) -> &[i64] {
        &self.torsion
    }

    /// `φ` on the generators.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Torsion projection matrix, one row per torsion generator.
    pub fn projection(&self) -> &[Vec<i64>] {
        &self.p
    }

    pub fn s_p_image(&self) -> &[i64] {
        &self.s_p_image
    }

    pub fn torsion_generators(&self) -> &[Vec<i64>] {
        &self.torsion_generators
    }

    pub fn phi_of(&self, exponents: &[i64]) -> i64 {
        self.phi.iter().zip(exponents).map(|(a, b)| a * b).sum()
    }

    /// `p` of an exponent vector, in torsion coordinates reduced mod `d_i`.
    pub fn p_of(&self, exponents: &[i64]) -> Vec<i64> {
        self.p
            .iter()
            .zip(&self.torsion)
            .map(|(row, &d)| row.iter().zip(exponents).map(|(a, b)| a * b).sum::<i64>().rem_euclid(d))
            .collect()
    }

    /// Exponent vector of a torsion element given in torsion coordinates.
    pub fn torsion_element(&self, coords: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.arity()];
        for (c, gen) in coords.iter().zip(&self.torsion_generators) {
            for (o, x) in out.iter_mut().zip(gen) {
                *o += c * x;
            }
        }
        out
    }

    /// `p₂ = p + ψ∘φ` and `s_{p₂}(1) = s_p(1) − ψ(1)`.
    pub fn shifted(&self, psi: &[i64]) -> Result<SplittingData> {
        if psi.len() != self.torsion.len() {
            return Err(Error::InvalidTorsionElement(format!(
                "expected {} torsion coordinates, got {}",
                self.torsion.len(),
                psi.len()
            )));
        }
        for (&c, &d) in psi.iter().zip(&self.torsion) {
            if !(0..d).contains(&c) {
                return Err(Error::InvalidTorsionElement(format!("coordinate {c} outside 0..{d}")));
            }
        }
        let p = self
            .p
            .iter()
            .zip(psi.iter().zip(&self.torsion))
            .map(|(row, (&c, &d))| {
                row.iter()
                    .zip(&self.phi)
                    .map(|(x, f)| (x + c * f).rem_euclid(d))
                    .collect()
            })
            .collect();
        let shift = self.torsion_element(psi);
        let s_p_image = self.s_p_image.iter().zip(&shift).map(|(s, x)| s - x).collect();
        Ok(SplittingData {
            p,
            s_p_image,
            ..self.clone()
        })
    }

    /// The splitting for `−φ`: `s_p(1)` is replaced by its inverse.
    pub fn negated(&self) -> SplittingData {
        SplittingData {
            phi: self.phi.iter().map(|x| -x).collect(),
            s_p_image: self.s_p_image.iter().map(|x| -x).collect(),
            ..self.clone()
        }
    }

    /// Checks `s_p∘φ + p = Id` on every generator class, `φ(s_p(1)) = 1`,
    /// and `p(s_p(1)) = 0`, by testing membership in the relation lattice.
    pub fn verify(&self) -> bool {
        let n = self.arity();
        if self.phi_of(&self.s_p_image) != 1 || self.p_of(&self.s_p_image).iter().any(|&x| x != 0) {
            return false;
        }
        (0..n).all(|g| {
            let mut e = vec![0i64; n];
            e[g] = 1;
            let phi = self.phi_of(&e);
            let tors = self.torsion_element(&self.p_of(&e));
            let residual: Vec<i64> = (0..n).map(|k| e[k] - phi * self.s_p_image[k] - tors[k]).collect();
            self.h1.is_trivial_class(&residual)
        })
    }

    /// Whether `φ` is onto ℤ (its values on the generators have gcd 1).
    pub fn phi_is_surjective(&self) -> bool {
        let g = self.phi.iter().fold(num_bigint::BigInt::zero(), |acc, &x| {
            num_integer::Integer::gcd(&acc, &num_bigint::BigInt::from(x))
        });
        g.abs() == num_bigint::BigInt::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::h1_structure;
    use crate::presentation::parse_presentation;

    const TORUS_BUNDLE: &str = "gens: m a b\nrels:\nm a m^-1 b^-2 a^-1\nm b m^-1 b^-2 a^-1 b^-2 a^-1 b^-1\n";

    fn torus() -> H1Structure {
        h1_structure(&parse_presentation(TORUS_BUNDLE).unwrap())
    }

    /// Torsion coordinates of the class of a single generator.
    fn class_of(s: &SplittingData, g: usize) -> Vec<i64> {
        let mut e = vec![0; s.arity()];
        e[g] = 1;
        s.p_of(&e)
    }

    fn same_class(s: &SplittingData, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        s.h1().is_trivial_class(&diff)
    }

    #[test]
    fn torus_bundle_canonical() {
        let s = canonical_splitting(&torus()).unwrap();
        assert_eq!(s.phi(), &[1, 0, 0]);
        assert!(s.verify());
        assert!(s.phi_is_surjective());
        // p(μ) = 0, p(α) = α, p(β) = β
        assert!(class_of(&s, 0).iter().all(|&x| x == 0));
        assert!(same_class(&s, &s.torsion_element(&class_of(&s, 1)), &[0, 1, 0]));
        assert!(same_class(&s, &s.torsion_element(&class_of(&s, 2)), &[0, 0, 1]));
        assert!(same_class(&s, s.s_p_image(), &[1, 0, 0]));
    }

    #[test]
    fn free_cyclic_group() {
        let h = h1_structure(&parse_presentation("gens: x").unwrap());
        let s = canonical_splitting(&h).unwrap();
        assert_eq!(s.phi(), &[1]);
        assert_eq!(s.s_p_image(), &[1]);
        assert!(s.projection().is_empty());
        assert!(s.verify());
    }

    #[test]
    fn betti_zero_rejected() {
        let h = h1_structure(&parse_presentation("gens: x\nrels: x^2").unwrap());
        assert_eq!(
            canonical_splitting(&h).unwrap_err(),
            Error::NotRationalHomologyCircle { betti: 0 }
        );
    }

    #[test]
    fn alternate_splittings_of_torus_bundle() {
        let h = torus();
        let base = canonical_splitting(&h).unwrap();
        let same = alternate_splitting(&h, &[0, 0]).unwrap();
        assert_eq!(same.projection(), base.projection());
        assert_eq!(same.s_p_image(), base.s_p_image());
        // ψ(1) = α: p₂(μ) = α, φ unchanged
        let alpha = class_of(&base, 1);
        let s2 = alternate_splitting(&h, &alpha).unwrap();
        assert_eq!(s2.phi(), base.phi());
        assert!(same_class(&s2, &s2.torsion_element(&class_of(&s2, 0)), &[0, 1, 0]));
        for psi in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let s = alternate_splitting(&h, &psi).unwrap();
            assert!(s.verify(), "psi = {psi:?}");
            assert!(s.negated().verify());
        }
    }

    #[test]
    fn invalid_torsion_elements() {
        let h = torus();
        assert!(matches!(
            alternate_splitting(&h, &[0]),
            Err(Error::InvalidTorsionElement(_))
        ));
        assert!(matches!(
            alternate_splitting(&h, &[2, 0]),
            Err(Error::InvalidTorsionElement(_))
        ));
        assert!(matches!(
            alternate_splitting(&h, &[-1, 0]),
            Err(Error::InvalidTorsionElement(_))
        ));
    }

    #[test]
    fn negation_inverts_section() {
        let s = canonical_splitting(&torus()).unwrap();
        let neg = s.negated();
        assert_eq!(neg.phi(), &[-1, 0, 0]);
        let inv: Vec<i64> = s.s_p_image().iter().map(|x| -x).collect();
        assert_eq!(neg.s_p_image(), &inv[..]);
        assert!(neg.verify());
    }

    #[test]
    fn verify_detects_bad_section() {
        let s = canonical_splitting(&torus()).unwrap();
        let broken = SplittingData {
            s_p_image: vec![1, 1, 0],
            ..s
        };
        assert!(!broken.verify());
    }
}
