//! First homology over ℤ: abelianization, Smith normal form, and the
//! splitting `H₁ ≅ tors(H₁) ⊕ ℤ`.

mod splitting;

pub use splitting::{alternate_splitting, canonical_splitting, SplittingData};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{smith_normal_form, Matrix, SmithDecomposition};
use crate::presentation::Presentation;

pub type IntMatrix = Matrix<BigInt>;
pub type SmithDecompositionZ = SmithDecomposition<BigInt>;

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| BigInt::from(x)).collect()
            })
            .collect::<Vec<Vec<BigInt>>>();
        if data.is_empty() {
            Matrix::zeros(0, cols, BigInt::zero())
        } else {
            Matrix::from_rows(data, BigInt::zero())
        }
    }
}

/// Exponent-sum matrix: entry `(j, i)` is the total exponent of generator
/// `i` in relator `j`. Its cokernel on row vectors is `H₁`.
pub fn abelianized_matrix(p: &Presentation) -> IntMatrix {
    let n = p.arity();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    IntMatrix::from_i64_rows(&rows, n)
}

pub fn smith_normal_form_int(a: &IntMatrix) -> SmithDecompositionZ {
    smith_normal_form(a).expect("integer division by a nonzero pivot cannot fail")
}

/// `H₁ ≅ ⊕ ℤ/dᵢ ⊕ ℤ^betti`, together with the basis change realizing it.
///
/// With `U·A·V = D`, an exponent vector `e` (row vector over the
/// generators) has coordinates `e·V` in the canonical decomposition.
#[derive(Clone, Debug)]
pub struct H1Structure {
    torsion: Vec<BigInt>,
    betti: usize,
    /// Canonical coordinate slots (columns of `V`) carrying the torsion
    /// summands, aligned with `torsion`.
    torsion_slots: Vec<usize>,
    free_slots: Vec<usize>,
    snf: SmithDecompositionZ,
    arity: usize,
}

impl H1Structure {
    pub fn torsion_invariants(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn betti(&self) -> usize {
        self.betti
    }

    pub fn basis_change(&self) -> &SmithDecompositionZ {
        &self.snf
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn torsion_slots(&self) -> &[usize] {
        &self.torsion_slots
    }

    pub fn free_slots(&self) -> &[usize] {
        &self.free_slots
    }

    /// `|tors H₁|`.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Exponent of the torsion subgroup (the largest invariant), or 1.
    pub fn torsion_exponent(&self) -> u64 {
        self.torsion
            .last()
            .map_or(1, |d| d.to_u64().expect("torsion exponent fits in u64"))
    }

    /// Canonical coordinates `e·V` of an exponent vector.
    pub fn coordinates(&self, exponents: &[i64]) -> Vec<BigInt> {
        assert_eq!(exponents.len(), self.arity, "exponent vector length");
        let v = &self.snf.v;
        (0..v.cols())
            .map(|j| {
                exponents
                    .iter()
                    .enumerate()
                    .fold(BigInt::zero(), |acc, (i, &e)| acc + &v[(i, j)] * BigInt::from(e))
            })
            .collect()
    }

    /// Whether the exponent vector represents the identity of `H₁`.
    pub fn is_trivial_class(&self, exponents: &[i64]) -> bool {
        let coords = self.coordinates(exponents);
        let diag = self.snf.diagonal();
        coords.iter().enumerate().all(|(j, c)| match diag.get(j) {
            Some(d) if !Zero::is_zero(d) => Zero::is_zero(&(c % d)),
            _ => Zero::is_zero(c),
        })
    }
}

pub fn h1_structure(p: &Presentation) -> H1Structure {
    let a = abelianized_matrix(p);
    let snf = smith_normal_form_int(&a);
    let diag = snf.diagonal();
    let n = p.arity();
    let mut torsion = Vec::new();
    let mut torsion_slots = Vec::new();
    let mut free_slots = Vec::new();
    for j in 0..n {
        match diag.get(j) {
            Some(d) if Zero::is_zero(d) => free_slots.push(j),
            Some(d) if One::is_one(d) => {}
            Some(d) => {
                torsion.push(d.abs());
                torsion_slots.push(j);
            }
            None => free_slots.push(j),
        }
    }
    H1Structure {
        torsion,
        betti: free_slots.len(),
        torsion_slots,
        free_slots,
        snf,
        arity: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    pub(crate) const TORUS_BUNDLE: &str = "gens: m a b\nrels:\nm a m^-1 b^-2 a^-1\nm b m^-1 b^-2 a^-1 b^-2 a^-1 b^-1\n";

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn abelianization_of_torus_bundle() {
        let p = parse_presentation(TORUS_BUNDLE).unwrap();
        let a = abelianized_matrix(&p);
        assert_eq!(a, IntMatrix::from_i64_rows(&[vec![0, 0, -2], vec![0, -2, -4]], 3));
    }

    #[test]
    fn abelianization_degenerate() {
        let p = parse_presentation("gens: x").unwrap();
        assert_eq!(abelianized_matrix(&p).shape(), (0, 1));
        let p = parse_presentation("gens: x\nrels: x x").unwrap();
        assert_eq!(abelianized_matrix(&p), IntMatrix::from_i64_rows(&[vec![2]], 1));
    }

    #[test]
    fn smith_of_torus_bundle_relations() {
        let a = IntMatrix::from_i64_rows(&[vec![0, 0, -2], vec![0, -2, -4]], 3);
        let s = smith_normal_form_int(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.diagonal(), ints(&[2, 2]));
        assert_eq!(s.rank(), 2);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
    }

    #[test]
    fn smith_identity_and_zero() {
        let id = IntMatrix::identity(3, BigInt::zero());
        assert_eq!(smith_normal_form_int(&id).d, id);
        let z = IntMatrix::zeros(2, 3, BigInt::zero());
        let s = smith_normal_form_int(&z);
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn h1_examples() {
        let h = h1_structure(&parse_presentation(TORUS_BUNDLE).unwrap());
        assert_eq!(h.torsion_invariants(), &ints(&[2, 2])[..]);
        assert_eq!(h.betti(), 1);
        assert_eq!(h.torsion_order(), BigInt::from(4));
        assert_eq!(h.torsion_exponent(), 2);

        let h = h1_structure(&parse_presentation("gens: x").unwrap());
        assert!(h.torsion_invariants().is_empty());
        assert_eq!(h.betti(), 1);

        let h = h1_structure(&parse_presentation("gens: x\nrels: x^2").unwrap());
        assert_eq!(h.torsion_invariants(), &ints(&[2])[..]);
        assert_eq!(h.betti(), 0);
    }

    #[test]
    fn trivial_classes() {
        let h = h1_structure(&parse_presentation(TORUS_BUNDLE).unwrap());
        assert!(h.is_trivial_class(&[0, 2, 0]));
        assert!(h.is_trivial_class(&[0, 0, -2]));
        assert!(!h.is_trivial_class(&[0, 1, 0]));
        assert!(!h.is_trivial_class(&[1, 0, 0]));
    }

    #[test]
    fn mixed_torsion() {
        // Z/2 ⊕ Z/6 ⊕ Z
        let p = parse_presentation("gens: x y w\nrels:\nx^2\ny^6\nx y x^-1 y^-1").unwrap();
        let h = h1_structure(&p);
        assert_eq!(h.torsion_invariants(), &ints(&[2, 6])[..]);
        assert_eq!(h.betti(), 1);
        assert_eq!(h.torsion_exponent(), 6);
    }
}
