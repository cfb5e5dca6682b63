use std::collections::BTreeMap;

use super::word::FreeWord;
use crate::matrix::Ring;

/// Finite formal combination `Σ c_w · w` of free words. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRingElem<C> {
    terms: BTreeMap<FreeWord, C>,
}

impl<C> Default for GroupRingElem<C> {
    fn default() -> Self {
        GroupRingElem { terms: BTreeMap::new() }
    }
}

impl<C: Ring> GroupRingElem<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: FreeWord, coeff: C) -> Self {
        let mut e = Self::zero();
        e.add_term(word, &coeff);
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &FreeWord) -> Option<&C> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: FreeWord, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c = c.add(coeff);
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.mul(k));
        }
        out
    }

    /// Bilinear extension of word concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), &a.mul(b));
            }
        }
        out
    }

    /// Left multiplication by a single word.
    pub fn left_mul_word(&self, w: &FreeWord) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(u, c)| (w.mul(u), c.clone())).collect(),
        }
    }

    /// Applies a linear map determined by its values on words.
    pub fn map_linear<T: Ring>(&self, zero: &T, f: impl Fn(&FreeWord, &C) -> T) -> T {
        self.terms
            .iter()
            .fold(zero.zero_like(), |acc, (w, c)| acc.add(&f(w, c)))
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> GroupRingElem<D> {
        let mut out = GroupRingElem::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }
}
