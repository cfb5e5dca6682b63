use std::fmt;

/// A reduced word in a free group, stored run-length as
/// `(generator index, nonzero exponent)` with distinct adjacent generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: usize) -> Self {
        FreeWord {
            letters: vec![(index, 1)],
        }
    }

    pub fn power(index: usize, exponent: i64) -> Self {
        Self::reduce(&[(index, exponent)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: &[(usize, i64)]) -> Self {
        let mut letters: Vec<(usize, i64)> = Vec::with_capacity(raw.len());
        for &(g, e) in raw {
            push_letter(&mut letters, g, e);
        }
        FreeWord { letters }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        for &(g, e) in &other.letters {
            push_letter(&mut letters, g, e);
        }
        FreeWord { letters }
    }

    /// Exponent sums per generator (image in the abelianization `ℤⁿ`).
    pub fn exponent_sums(&self, arity: usize) -> Vec<i64> {
        let mut sums = vec![0; arity];
        for &(g, e) in &self.letters {
            sums[g] += e;
        }
        sums
    }
}

fn push_letter(letters: &mut Vec<(usize, i64)>, g: usize, e: i64) {
    if e == 0 {
        return;
    }
    match letters.last_mut() {
        Some((last, exp)) if *last == g => {
            *exp += e;
            if *exp == 0 {
                letters.pop();
            }
        }
        _ => letters.push((g, e)),
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "S{g}")?;
            } else {
                write!(f, "S{g}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancellation_and_merge() {
        assert!(FreeWord::reduce(&[(0, 1), (0, -1)]).is_identity());
        assert_eq!(FreeWord::reduce(&[(0, 2), (0, -1)]).letters(), &[(0, 1)]);
        assert_eq!(
            FreeWord::reduce(&[(0, 1), (1, 2), (1, -2), (0, 3)]).letters(),
            &[(0, 4)]
        );
        assert!(FreeWord::reduce(&[(1, 0)]).is_identity());
    }

    #[test]
    fn word_times_inverse_is_identity() {
        let w = FreeWord::reduce(&[(0, 1), (2, -3), (1, 2)]);
        assert!(w.mul(&w.inverse()).is_identity());
        assert!(w.inverse().mul(&w).is_identity());
    }

    pub(crate) fn raw_word(arity: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
        prop::collection::vec((0..arity, prop_oneof![-3i64..=-1, 1i64..=3]), 0..max_len)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(raw in raw_word(3, 20)) {
            let w = FreeWord::reduce(&raw);
            prop_assert_eq!(FreeWord::reduce(w.letters()), w.clone());
            for pair in w.letters().windows(2) {
                prop_assert_ne!(pair[0].0, pair[1].0);
            }
        }

        #[test]
        fn multiplication_is_associative(a in raw_word(3, 10), b in raw_word(3, 10), c in raw_word(3, 10)) {
            let (a, b, c) = (FreeWord::reduce(&a), FreeWord::reduce(&b), FreeWord::reduce(&c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn product_matches_reduced_concatenation(a in raw_word(3, 10), b in raw_word(3, 10)) {
            let joined: Vec<_> = a.iter().chain(b.iter()).copied().collect();
            prop_assert_eq!(FreeWord::reduce(&a).mul(&FreeWord::reduce(&b)), FreeWord::reduce(&joined));
        }
    }
}
