use std::fmt;

use crate::error::{Error, Result};
use crate::matchcore::Partition;

/// A permutation of `{1..n}` in one-line notation: `images[i-1] = w(i)`.
///
/// Composition is as functions: `(a.compose(&b))(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Simple transposition `s_i = (i i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { n, i });
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Product of the given cycles, each `a_1 → a_2 → … → a_1`. The cycles
    /// must be disjoint.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cyc in cycles {
            for (idx, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle entry {a} for n = {n}")));
                }
                used[a] = true;
                images[a - 1] = cyc[(idx + 1) % cyc.len()];
            }
        }
        Ok(Self { images })
    }

    /// Cycle notation `"(1 2)(3 4 5)"` (needs `n`) or one-line `"2 1 4 5 3"`.
    /// An empty string or `"()"` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let w = if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk.strip_prefix('(').ok_or_else(bad)?;
                let cyc = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
            }
            Self::from_cycles(n, &cycles)?
        } else if s.is_empty() {
            Self::identity(n)
        } else {
            let images = s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Self::from_one_line(images)?
        };
        if w.n() != n {
            return Err(Error::InvalidPermutation(format!(
                "{s} acts on {} points, expected {n}",
                w.n()
            )));
        }
        Ok(w)
    }

    /// Canonical element of a conjugacy class: cycles on consecutive blocks
    /// `(1 2 … λ_1)(λ_1+1 …)…`.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let n = cycle_type.size();
        let mut images = Vec::with_capacity(n);
        let mut start = 1;
        for &len in cycle_type.parts() {
            for j in 0..len {
                images.push(if j + 1 == len { start } else { start + j + 1 });
            }
            start += len;
        }
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Reduced word `[a_1, …, a_m]` with `self = s_{a_1} ∘ … ∘ s_{a_m}`,
    /// found by bubble-sorting the one-line notation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut letters = Vec::new();
        // w ← w ∘ s_i removes the descent at i
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        letters
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parsing_both_notations() {
        let a = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
        let b = Permutation::parse("2 1 4 5 3", 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(Permutation::parse("()", 3).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse("1 1 2", 3).is_err());
        assert!(Permutation::parse("2 1", 3).is_err());
    }

    #[test]
    fn class_representative_has_type() {
        for n in 1..=8 {
            for p in crate::matchcore::partitions(n) {
                assert_eq!(Permutation::class_representative(&p).cycle_type(), p);
            }
        }
    }

    #[test]
    fn simple_product_convention() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        let w = s1.compose(&s2);
        // s1(s2(3)) = s1(2) = 1
        assert_eq!(w.apply(3), 1);
        assert_eq!(w.reduced_word(), vec![1, 2]);
        assert!(Permutation::simple(3, 3).is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..8).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_one_line(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn reduced_word_multiplies_back(w in arb_perm()) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.inversions());
            let n = w.n();
            let prod = word.iter().fold(Permutation::identity(n), |acc, &i| {
                acc.compose(&Permutation::simple(n, i).unwrap())
            });
            prop_assert_eq!(prod, w.clone());
            prop_assert!(w.compose(&w.inverse()).is_identity());
        }
    }
}
