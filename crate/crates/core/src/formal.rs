//! Finite formal linear combinations over an ordered basis family.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Ring;

/// `Σ c_b · b` with no zero coefficients stored. Iteration follows the `Ord`
/// of the basis type, so output order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<B: Ord, C> {
    terms: BTreeMap<B, C>,
}

impl<B: Ord, C> Default for FormalSum<B, C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone, C: Ring> FormalSum<B, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(basis: B, coef: C) -> Self {
        let mut s = Self::zero();
        s.add_term(basis, coef);
        s
    }

    pub fn basis(basis: B) -> Self {
        Self::from_term(basis, C::one())
    }

    pub fn add_term(&mut self, basis: B, coef: C) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(basis) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + coef;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c.clone() * scale.clone());
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn coef(&self, basis: &B) -> C {
        self.terms.get(basis).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&B, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &B> {
        self.terms.keys()
    }

    /// Remove and return the smallest term.
    pub fn pop_first(&mut self) -> Option<(B, C)> {
        self.terms.pop_first()
    }

    /// Largest basis element under `Ord`.
    pub fn leading(&self) -> Option<(&B, &C)> {
        self.terms.iter().next_back()
    }

    /// Relabel basis elements, merging coefficients that collide.
    pub fn map_basis<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> B2) -> FormalSum<B2, C> {
        let mut out = FormalSum::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    pub fn map_coefs<C2: Ring>(&self, mut f: impl FnMut(&C) -> C2) -> FormalSum<B, C2> {
        let mut out = FormalSum::zero();
        for (b, c) in self.iter() {
            out.add_term(b.clone(), f(c));
        }
        out
    }

    /// Extend `f` linearly: `Σ c_b · f(b)`.
    pub fn linear_map<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> FormalSum<B2, C>) -> FormalSum<B2, C> {
        let mut out = FormalSum::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Coefficient vector against an ordered basis; `None` if some term is
    /// not in `basis`.
    pub fn coordinates(&self, basis: &[B]) -> Option<Vec<C>> {
        let mut coords = vec![C::zero(); basis.len()];
        let mut seen = 0;
        for (i, b) in basis.iter().enumerate() {
            if let Some(c) = self.terms.get(b) {
                coords[i] = c.clone();
                seen += 1;
            }
        }
        (seen == self.terms.len()).then_some(coords)
    }
}

impl<B: Ord + Clone, C: Ring> FromIterator<(B, C)> for FormalSum<B, C> {
    fn from_iter<I: IntoIterator<Item = (B, C)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (b, c) in iter {
            s.add_term(b, c);
        }
        s
    }
}

impl<B: Ord, C> IntoIterator for FormalSum<B, C> {
    type Item = (B, C);
    type IntoIter = btree_map::IntoIter<B, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord + Clone, C: Ring> Add for FormalSum<B, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (b, c) in rhs {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone, C: Ring> Sub for FormalSum<B, C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (b, c) in rhs {
            self.add_term(b, -c);
        }
        self
    }
}

impl<B: Ord + Clone, C: Ring> Neg for FormalSum<B, C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.into_iter().map(|(b, c)| (b, -c)).collect()
    }
}

impl<B: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for FormalSum<B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut s: FormalSum<u8, i64> = FormalSum::from_term(1, 2);
        s.add_term(2, 1);
        s.add_term(1, -2);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coef(&1), 0);
        assert_eq!(s.coef(&2), 1);
        s.add_term(3, 0);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn map_basis_merges() {
        let s: FormalSum<u8, i64> = [(1, 1), (2, 1), (3, -1)].into_iter().collect();
        let t = s.map_basis(|b| b % 2);
        assert_eq!(t.coef(&1), 0);
        assert_eq!(t.coef(&0), 1);
        assert!(t.keys().all(|&b| b == 0));
    }

    #[test]
    fn coordinates_reject_foreign_terms() {
        let s: FormalSum<u8, i64> = [(1, 3), (5, -1)].into_iter().collect();
        assert_eq!(s.coordinates(&[5, 1]), Some(vec![-1, 3]));
        assert_eq!(s.coordinates(&[1]), None);
    }
}
