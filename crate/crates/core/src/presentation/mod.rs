//! Finite presentations `⟨S₁,…,S_n | R₁,…,R_m⟩`, free words, group rings
//! and Fox derivatives.

mod fox;
mod group_ring;
mod parse;
mod word;

pub use fox::{fox_derivative, fox_derivative_linear, IntGroupRing};
pub use group_ring::GroupRingElem;
pub use parse::parse_presentation;
pub use word::FreeWord;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    /// Relators are reduced; every generator index must be declared.
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let arity = generators.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= arity {
                    return Err(Error::IndexOutOfRange { index: g, arity });
                }
            }
        }
        let relators = relators.iter().map(|r| FreeWord::reduce(r.letters())).collect();
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Number of generators `n`.
    pub fn arity(&self) -> usize {
        self.generators.len()
    }

    /// `n - m`; manifold presentations of rational homology circles have
    /// deficiency one.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// `∂R_j/∂S_i` for all relators and generators, row-major.
    pub fn fox_jacobian(&self) -> Vec<Vec<IntGroupRing>> {
        let n = self.arity();
        self.relators
            .iter()
            .map(|r| {
                (0..n)
                    .map(|i| fox_derivative(r, i, n).expect("relators use declared generators"))
                    .collect()
            })
            .collect()
    }

    /// Renders a word with the declared generator names.
    pub fn format_word(&self, w: &FreeWord) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{}", self.generators[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
