use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::linalg::Matrix;
use crate::matchcore::{
    check_degree, check_even, enumerate_dotted, enumerate_noncrossing, Arc, DottedMatching, StandardMatching,
};
use crate::{BigInt, MatchingSum, Rational};

/// Largest `n` accepted by [`quotient_project_oracle`].
pub const ORACLE_MAX_N: usize = 8;

/// Every Type I and Type II relation among dotted matchings with `k`
/// undotted arcs, written as `Σ(unnested terms) - Σ(nested terms)`.
pub fn relations(n: usize, k: usize) -> Result<Vec<MatchingSum>> {
    check_even(n)?;
    check_degree(n, k)?;
    let mut out = Vec::new();
    for b in enumerate_noncrossing(n)? {
        let arcs = b.arcs();
        for c in 0..arcs.len() {
            let Some(o) = b.parent(c) else { continue };
            let (il, jk) = (arcs[o], arcs[c]);
            let ij = Arc::new(il.left(), jk.left()).expect("child gap is even");
            let kl = Arc::new(jk.right(), il.right()).expect("child gap is even");
            let others: Vec<usize> = (0..arcs.len()).filter(|&x| x != o && x != c).collect();
            let base = DottedMatching::all_undotted(b.clone());
            for mask in 0u32..(1 << others.len()) {
                let mut flags = vec![false; arcs.len()];
                for (bit, &x) in others.iter().enumerate() {
                    flags[x] = mask & (1 << bit) != 0;
                }
                let spectators_undotted = others.iter().filter(|&&x| !flags[x]).count();
                let with = |a: (Arc, bool), b: (Arc, bool)| {
                    DottedMatching::from_flags(base.matching().clone(), flags.clone())
                        .expect("flag count matches")
                        .rewire(&[o, c], &[a, b])
                        .expect("relation partners are noncrossing")
                };
                let mut r = MatchingSum::zero();
                if spectators_undotted + 1 == k {
                    r.add_term(with((ij, true), (kl, false)), 1);
                    r.add_term(with((ij, false), (kl, true)), 1);
                    r.add_term(with((il, true), (jk, false)), -1);
                    r.add_term(with((il, false), (jk, true)), -1);
                } else if spectators_undotted == k {
                    r.add_term(with((ij, true), (kl, true)), 1);
                    r.add_term(with((il, true), (jk, true)), -1);
                } else {
                    continue;
                }
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Coordinates of every dotted-matching generator in the standard basis of
/// the quotient by all relations, computed by exact elimination.
#[derive(Clone, Debug)]
pub struct QuotientProjection {
    pub n: usize,
    pub k: usize,
    pub generators: Vec<DottedMatching>,
    pub basis: Vec<StandardMatching>,
    pub relation_count: usize,
    pub relation_rank: usize,
    index: HashMap<DottedMatching, usize>,
    coords: Vec<Vec<Rational>>,
}

impl QuotientProjection {
    /// Dimension of the span of generators modulo relations.
    pub fn dimension(&self) -> usize {
        self.generators.len() - self.relation_rank
    }

    pub fn coordinates(&self, g: &DottedMatching) -> Option<&[Rational]> {
        self.index.get(g).map(|&i| self.coords[i].as_slice())
    }

    pub fn projection(&self, g: &DottedMatching) -> Option<FormalSum<StandardMatching, Rational>> {
        let c = self.coordinates(g)?;
        Some(self.basis.iter().cloned().zip(c.iter().cloned()).collect())
    }
}

/// Builds the space on all dotted matchings with `k` undotted arcs, the
/// relation subspace, and the reduced echelon form of the relation matrix
/// with nonstandard generators ordered first. The standard matchings are
/// independent modulo relations iff no pivot lands in a standard column,
/// and they span iff every nonstandard column is a pivot.
pub fn quotient_project_oracle(n: usize, k: usize) -> Result<QuotientProjection> {
    check_even(n)?;
    check_degree(n, k)?;
    if n > ORACLE_MAX_N {
        return Err(Error::DimensionMismatch(format!(
            "oracle limited to n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let all = enumerate_dotted(n, k)?;
    let (standard, nonstandard): (Vec<_>, Vec<_>) = all.into_iter().partition(DottedMatching::is_standard);
    let basis: Vec<StandardMatching> = crate::matchcore::enumerate_standard(n, k)?;
    debug_assert_eq!(basis.len(), standard.len());

    let mut generators = nonstandard;
    let split = generators.len();
    generators.extend(basis.iter().map(|m| m.as_dotted().clone()));
    let index: HashMap<DottedMatching, usize> = generators.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();

    let rels = relations(n, k)?;
    let rat = |c: i64| Rational::from_integer(BigInt::from(c));
    let mut rel_matrix = Matrix::<Rational>::zeros(rels.len(), generators.len());
    for (r, rel) in rels.iter().enumerate() {
        for (g, c) in rel.iter() {
            rel_matrix[(r, index[g])] = rat(*c);
        }
    }
    let ech = rel_matrix.rref();
    let relation_rank = ech.rank();
    let dimension = generators.len() - relation_rank;
    if dimension != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "quotient dimension {dimension} but {} standard matchings for (n, k) = ({n}, {k})",
            basis.len()
        )));
    }
    if ech.pivots.iter().any(|&p| p >= split) {
        return Err(Error::DimensionMismatch(format!(
            "standard matchings are dependent modulo relations for (n, k) = ({n}, {k})"
        )));
    }

    let width = basis.len();
    let mut coords = vec![vec![Rational::zero(); width]; generators.len()];
    for (row, &p) in ech.pivots.iter().enumerate() {
        // g_p + Σ_std a_c·std_c ∈ R, so g_p ≡ -Σ a_c·std_c
        for (c, slot) in coords[p].iter_mut().enumerate() {
            let a = &ech.reduced[(row, split + c)];
            if !a.is_zero() {
                *slot = -a.clone();
            }
        }
    }
    for c in 0..width {
        coords[split + c][c] = Rational::one();
    }

    Ok(QuotientProjection {
        n,
        k,
        generators,
        basis,
        relation_count: rels.len(),
        relation_rank,
        index,
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchcore::syt_count;

    #[test]
    fn oracle_dimensions() {
        assert_eq!(quotient_project_oracle(4, 1).unwrap().dimension(), 3);
        assert_eq!(quotient_project_oracle(4, 2).unwrap().dimension(), 2);
        assert_eq!(quotient_project_oracle(6, 3).unwrap().dimension(), 5);
        for n in (0..=6).step_by(2) {
            for k in 0..=n / 2 {
                let q = quotient_project_oracle(n, k).unwrap();
                assert_eq!(q.dimension() as u64, syt_count(n, k).unwrap());
            }
        }
        assert!(quotient_project_oracle(10, 1).is_err());
    }

    #[test]
    fn generator_counts() {
        let total: usize = (0..=4)
            .map(|k| quotient_project_oracle(8, k).unwrap().generators.len())
            .sum();
        assert_eq!(total, 224);
    }

    #[test]
    fn oracle_matches_type1_example() {
        let q = quotient_project_oracle(4, 1).unwrap();
        let g: DottedMatching = "(1,4) (2,3)*".parse().unwrap();
        let p = q.projection(&g).unwrap();
        let coef = |s: &str| p.coef(&s.parse::<StandardMatching>().unwrap());
        let r = |x: i64| Rational::from_integer(BigInt::from(x));
        assert_eq!(coef("(1,4)* (2,3)"), r(-1));
        assert_eq!(coef("(1,2)* (3,4)"), r(1));
        assert_eq!(coef("(1,2) (3,4)*"), r(1));
    }
}
