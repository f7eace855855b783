//! Two-row tabloids, polytabloids `e_T`, matching generators `e_M`, and the
//! comparison of the Specht module with the matching module.
//!
//! A two-row tabloid is determined by its bottom row, so tabloids are keyed
//! by that set. The line-diagram map `ψ` sends `l_U` to the tabloid with
//! bottom row `U`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::linalg::Matrix;
use crate::linediag::{expand, LineDiagramVector};
use crate::matchcore::{
    colex_cmp, enumerate_standard, kostka_two_row, phi, standard_tableaux, syt_count, Partition, StandardMatching,
    TwoRowTableau,
};
use crate::permutation::Permutation;
use crate::scalar::sign_pow;
use crate::snaction::{class_inner_product, rational_to_int, Representation};
use crate::{BigInt, Int, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tabloid {
    n: usize,
    bottom: Vec<usize>,
}

impl Tabloid {
    pub fn new(n: usize, mut bottom: Vec<usize>) -> Result<Self> {
        bottom.sort_unstable();
        if bottom.windows(2).any(|w| w[0] == w[1]) || bottom.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidUndotSet(bottom));
        }
        Ok(Self { n, bottom })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top(&self) -> Vec<usize> {
        (1..=self.n).filter(|x| self.bottom.binary_search(x).is_err()).collect()
    }

    /// `w · {T} = {w(T)}`.
    pub fn permute(&self, w: &Permutation) -> Self {
        let mut bottom: Vec<usize> = self.bottom.iter().map(|&x| w.apply(x)).collect();
        bottom.sort_unstable();
        Self { n: self.n, bottom }
    }
}

impl Ord for Tabloid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| colex_cmp(&self.bottom, &other.bottom))
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `top|bottom`, digits concatenated below ten points and space separated
/// otherwise.
impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n < 10 { "" } else { " " };
        let row = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
        write!(f, "{}|{}", row(&self.top()), row(&self.bottom))
    }
}

pub type TabloidVector = FormalSum<Tabloid, Int>;

pub fn permute_tabloids(w: &Permutation, v: &TabloidVector) -> TabloidVector {
    v.map_basis(|t| t.permute(w))
}

/// Signed sum over the group generated by the given disjoint transpositions,
/// starting from the tabloid with bottom row `bottom`.
fn signed_swaps(n: usize, bottom: &[usize], swaps: &[(usize, usize)]) -> TabloidVector {
    let mut out = TabloidVector::zero();
    for mask in 0u64..(1 << swaps.len()) {
        let mut set = bottom.to_vec();
        for (b, &(x, y)) in swaps.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for v in set.iter_mut() {
                    if *v == x {
                        *v = y;
                    } else if *v == y {
                        *v = x;
                    }
                }
            }
        }
        set.sort_unstable();
        out.add_term(Tabloid { n, bottom: set }, sign_pow(mask.count_ones() as usize));
    }
    out
}

/// `e_T = Σ_{w ∈ Col(T)} sign(w) {w(T)}`.
pub fn polytabloid(t: &TwoRowTableau) -> TabloidVector {
    let columns: Vec<(usize, usize)> = t.columns().into_iter().take(t.k()).collect();
    signed_swaps(t.n(), t.bottom(), &columns)
}

/// `e_M`: the signed orbit of `{φ(M)}` under the transpositions of the
/// undotted arcs.
pub fn matching_generator(m: &StandardMatching) -> TabloidVector {
    let arcs: Vec<(usize, usize)> = m.undotted_arcs().map(|a| (a.left(), a.right())).collect();
    signed_swaps(m.n(), phi(m).bottom(), &arcs)
}

/// `l_U ↦ {bottom row U}`, coefficients unchanged.
pub fn psi(v: &LineDiagramVector) -> TabloidVector {
    v.map_basis(|u| Tabloid {
        n: u.n(),
        bottom: u.elements().to_vec(),
    })
}

/// Exact rank of a list of tabloid vectors.
pub fn span_rank(vectors: &[TabloidVector]) -> usize {
    let mut support: Vec<&Tabloid> = vectors.iter().flat_map(|v| v.keys()).collect();
    support.sort();
    support.dedup();
    if vectors.is_empty() || support.is_empty() {
        return 0;
    }
    let m = Matrix::from_fn(vectors.len(), support.len(), |r, c| {
        BigInt::from(vectors[r].coef(support[c]))
    });
    m.rank_fraction_free()
}

/// Ranks and witnesses behind the equality of the Specht module and the
/// matching module in degree `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleEqualityReport {
    pub n: usize,
    pub k: usize,
    pub expected: usize,
    pub polytabloid_rank: usize,
    pub matching_rank: usize,
    pub union_rank: usize,
    /// `e_{M_0} = e_{T_0}` for the unnested witness pair.
    pub witness_equal: bool,
    /// `ψ(L_M) = e_M` for every standard `M`.
    pub psi_agrees: bool,
}

impl ModuleEqualityReport {
    pub fn passed(&self) -> bool {
        self.polytabloid_rank == self.expected
            && self.matching_rank == self.expected
            && self.union_rank == self.expected
            && self.witness_equal
            && self.psi_agrees
    }
}

/// `M_0`: undotted `(1,2),…,(2k-1,2k)` followed by dotted unnested arcs.
/// `T_0`: bottom row `2,4,…,2k`.
pub fn witness_pair(n: usize, k: usize) -> Result<(StandardMatching, TwoRowTableau)> {
    crate::matchcore::check_degree(n, k)?;
    let pairs: Vec<(usize, usize)> = (0..n / 2).map(|a| (2 * a + 1, 2 * a + 2)).collect();
    let dotted: Vec<(usize, usize)> = pairs[k..].to_vec();
    let m = StandardMatching::try_from(crate::DottedMatching::from_pairs(n, &pairs, &dotted)?)?;
    let t = TwoRowTableau::new(n, (1..=k).map(|a| 2 * a).collect())?;
    Ok((m, t))
}

pub fn verify_module_equality(n: usize, k: usize) -> Result<ModuleEqualityReport> {
    let expected = syt_count(n, k)? as usize;
    let e_t: Vec<TabloidVector> = standard_tableaux(n, k)?.iter().map(polytabloid).collect();
    let basis = enumerate_standard(n, k)?;
    let e_m: Vec<TabloidVector> = basis.iter().map(matching_generator).collect();
    let psi_agrees = basis.iter().zip(&e_m).all(|(m, g)| psi(&expand(m)) == *g);
    let (m0, t0) = witness_pair(n, k)?;
    let witness_equal = matching_generator(&m0) == polytabloid(&t0);
    let union: Vec<TabloidVector> = e_t.iter().chain(&e_m).cloned().collect();
    Ok(ModuleEqualityReport {
        n,
        k,
        expected,
        polytabloid_rank: span_rank(&e_t),
        matching_rank: span_rank(&e_m),
        union_rank: span_rank(&union),
        witness_equal,
        psi_agrees,
    })
}

/// `e_M` for every matching with all arcs undotted, in canonical order.
pub fn emit_top_degree_basis(n: usize) -> Result<Vec<TabloidVector>> {
    crate::matchcore::check_even(n)?;
    Ok(enumerate_standard(n, n / 2)?.iter().map(matching_generator).collect())
}

/// The Specht module `S^{(n-k,k)}` spanned by the standard polytabloids,
/// with the `S_n` action computed by expressing `w · e_T` in that basis.
///
/// Coordinates are solved on the rows of the standard tabloids and then
/// checked against every tabloid coordinate.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    n: usize,
    k: usize,
    tableaux: Vec<TwoRowTableau>,
    /// Inverse of the square block of standard-tabloid rows.
    block_inverse: Matrix<Int>,
}

impl SpechtModule {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let tableaux = standard_tableaux(n, k)?;
        let d = tableaux.len();
        let block = Matrix::from_fn(d, d, |r, c| {
            let row = Tabloid {
                n,
                bottom: tableaux[r].bottom().to_vec(),
            };
            Rational::from_integer(polytabloid(&tableaux[c]).coef(&row).into())
        });
        let inverse = block
            .solve(&Matrix::identity(d))
            .ok_or_else(|| Error::CheckFailed(format!("standard polytabloids of ({},{k}) are dependent", n - k)))?;
        let block_inverse = to_int_matrix(&inverse)?;
        Ok(Self {
            n,
            k,
            tableaux,
            block_inverse,
        })
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[TwoRowTableau] {
        &self.tableaux
    }

    /// Matrix of `w` in the polytabloid basis.
    pub fn matrix(&self, w: &Permutation) -> Result<Matrix<Int>> {
        if w.n() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "expected {} points, got {}",
                self.n,
                w.n()
            )));
        }
        let d = self.dimension();
        let basis: Vec<TabloidVector> = self.tableaux.iter().map(polytabloid).collect();
        let images: Vec<TabloidVector> = basis.iter().map(|v| permute_tabloids(w, v)).collect();
        let rows: Vec<Tabloid> = self
            .tableaux
            .iter()
            .map(|t| Tabloid {
                n: self.n,
                bottom: t.bottom().to_vec(),
            })
            .collect();
        let image_block = Matrix::from_fn(d, d, |r, c| images[c].coef(&rows[r]));
        let x = &self.block_inverse * &image_block;
        for (c, image) in images.iter().enumerate() {
            let mut rebuilt = TabloidVector::zero();
            for (r, v) in basis.iter().enumerate() {
                rebuilt.add_scaled(v, &x[(r, c)]);
            }
            if rebuilt != *image {
                return Err(Error::CheckFailed(format!(
                    "S^({},{}) is not closed under {w}",
                    self.n - self.k,
                    self.k
                )));
            }
        }
        Ok(x)
    }

    pub fn character(&self, cycle_type: &Partition) -> Result<Int> {
        if cycle_type.size() != self.n {
            return Err(Error::InvalidPartition(format!(
                "{cycle_type} is not a partition of {}",
                self.n
            )));
        }
        Ok(self.matrix(&Permutation::class_representative(cycle_type))?.trace())
    }

    pub fn character_table_row(&self) -> Result<Vec<(Partition, Int)>> {
        crate::matchcore::partitions(self.n)
            .into_iter()
            .map(|p| Ok((p.clone(), self.character(&p)?)))
            .collect()
    }
}

fn to_int_matrix(m: &Matrix<Rational>) -> Result<Matrix<Int>> {
    let rows: Option<Vec<Vec<Int>>> = m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(rational_to_int).collect())
        .collect();
    let rows = rows.ok_or_else(|| Error::CheckFailed("non-integral matrix".into()))?;
    Ok(if rows.is_empty() {
        Matrix::zeros(0, m.cols())
    } else {
        Matrix::from_rows(rows)
    })
}

pub fn specht_character(n: usize, k: usize, cycle_type: &Partition) -> Result<Int> {
    SpechtModule::new(n, k)?.character(cycle_type)
}

/// For each degree `k ≤ n/2`, certifies with character inner products that
/// the matching representation is the irreducible `(n-k,k)`.
pub fn graded_decomposition(n: usize) -> Result<Vec<(usize, Partition)>> {
    crate::matchcore::check_even(n)?;
    let one = Rational::from_integer(1.into());
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let chi = Representation::new(n, k)?.character_table_row()?;
        let specht = SpechtModule::new(n, k)?.character_table_row()?;
        let own = class_inner_product(&chi, &chi)?;
        let cross = class_inner_product(&chi, &specht)?;
        if own != one || cross != one {
            return Err(Error::CheckFailed(format!(
                "degree {k}: <chi,chi> = {own}, <chi,specht> = {cross}"
            )));
        }
        out.push((k, Partition::two_row(n, k)?));
    }
    Ok(out)
}

/// Two-row partitions `μ` of `n` with `K_{μ,(n/2,n/2)} = 1`, in decreasing
/// order of the first row.
pub fn expected_multiplicity_one(n: usize) -> Result<Vec<Partition>> {
    crate::matchcore::check_even(n)?;
    let lambda = Partition::two_row(n, n / 2)?;
    let mut out = Vec::new();
    for mu in crate::matchcore::partitions(n) {
        if mu.rows() <= 2 && kostka_two_row(&mu, &lambda)? == 1 {
            out.push(mu);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linediag::{permute_diagram, UndotSet};

    fn sm(s: &str) -> StandardMatching {
        s.parse().unwrap()
    }

    fn tab(n: usize, bottom: &[usize]) -> Tabloid {
        Tabloid::new(n, bottom.to_vec()).unwrap()
    }

    /// Terms written as `top|bottom` strings.
    fn vector(n: usize, terms: &[(&str, Int)]) -> TabloidVector {
        terms
            .iter()
            .map(|(s, c)| {
                let bottom = s.split('|').nth(1).unwrap();
                let set = bottom.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect();
                (Tabloid::new(n, set).unwrap(), *c)
            })
            .collect()
    }

    #[test]
    fn polytabloids_of_shape_two_two() {
        let t1 = TwoRowTableau::new(4, vec![2, 4]).unwrap();
        let t2 = TwoRowTableau::new(4, vec![3, 4]).unwrap();
        assert_eq!(
            polytabloid(&t1),
            vector(4, &[("13|24", 1), ("23|14", -1), ("14|23", -1), ("24|13", 1)])
        );
        assert_eq!(
            polytabloid(&t2),
            vector(4, &[("12|34", 1), ("23|14", -1), ("14|23", -1), ("34|12", 1)])
        );
        assert_eq!(
            polytabloid(&TwoRowTableau::single_row(5)),
            TabloidVector::basis(tab(5, &[]))
        );
    }

    #[test]
    fn matching_generators_of_shape_two_two() {
        let nest = matching_generator(&sm("(1,4) (2,3)"));
        assert_eq!(
            nest,
            vector(4, &[("12|34", 1), ("24|13", -1), ("13|24", -1), ("34|12", 1)])
        );
        let unnest = matching_generator(&sm("(1,2) (3,4)"));
        assert_eq!(unnest, polytabloid(&TwoRowTableau::new(4, vec![2, 4]).unwrap()));
        assert_eq!(
            matching_generator(&sm("(1,2)* (3,4)*")),
            TabloidVector::basis(tab(4, &[]))
        );
    }

    #[test]
    fn psi_examples() {
        let empty = LineDiagramVector::basis(UndotSet::empty(4));
        assert_eq!(psi(&empty), TabloidVector::basis(tab(4, &[])));
        let v = psi(&expand(&sm("(1,2) (3,4)*")));
        let expected: TabloidVector = [(tab(4, &[2]), 1), (tab(4, &[1]), -1)].into_iter().collect();
        assert_eq!(v, expected);
    }

    #[test]
    fn psi_intertwines_the_actions() {
        let w = Permutation::parse("(1 3 6)(2 5)", 6).unwrap();
        for m in enumerate_standard(6, 2).unwrap() {
            let l = expand(&m);
            assert_eq!(psi(&permute_diagram(&w, &l)), permute_tabloids(&w, &psi(&l)));
        }
    }

    #[test]
    fn ranks() {
        let t: Vec<TabloidVector> = standard_tableaux(4, 2).unwrap().iter().map(polytabloid).collect();
        assert_eq!(span_rank(&t), 2);
        assert_eq!(span_rank(&[t[0].clone(), t[0].clone()]), 1);
        let m: Vec<TabloidVector> = enumerate_standard(6, 3)
            .unwrap()
            .iter()
            .map(matching_generator)
            .collect();
        assert_eq!(span_rank(&m), 5);
        assert_eq!(span_rank(&[]), 0);
    }

    #[test]
    fn module_equality_small() {
        for n in (2..=6).step_by(2) {
            for k in 0..=n / 2 {
                let r = verify_module_equality(n, k).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
        assert_eq!(verify_module_equality(4, 2).unwrap().union_rank, 2);
        assert_eq!(verify_module_equality(6, 0).unwrap().union_rank, 1);
    }

    #[test]
    fn witness_pair_shape() {
        let (m, t) = witness_pair(8, 2).unwrap();
        assert_eq!(m.to_string(), "(1,2) (3,4) (5,6)* (7,8)*");
        assert_eq!(t.bottom(), &[2, 4]);
    }

    #[test]
    fn top_degree_basis() {
        let two = emit_top_degree_basis(2).unwrap();
        assert_eq!(two, vec![vector(2, &[("1|2", 1), ("2|1", -1)])]);
        let four = emit_top_degree_basis(4).unwrap();
        assert_eq!(four.len(), 2);
        assert_eq!(four[1], matching_generator(&sm("(1,4) (2,3)")));
        let six = emit_top_degree_basis(6).unwrap();
        assert_eq!((six.len(), span_rank(&six)), (5, 5));
    }

    #[test]
    fn specht_characters_agree_with_chart() {
        for n in (2..=6).step_by(2) {
            for k in 0..=n / 2 {
                let a = Representation::new(n, k).unwrap().character_table_row().unwrap();
                let b = SpechtModule::new(n, k).unwrap().character_table_row().unwrap();
                assert_eq!(a, b, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn decompositions() {
        let p = |s: &str| -> Partition { s.parse().unwrap() };
        assert_eq!(graded_decomposition(2).unwrap(), vec![(0, p("2")), (1, p("1,1"))]);
        assert_eq!(
            graded_decomposition(4).unwrap(),
            vec![(0, p("4")), (1, p("3,1")), (2, p("2,2"))]
        );
        assert_eq!(expected_multiplicity_one(4).unwrap(), vec![p("4"), p("3,1"), p("2,2")]);
        assert_eq!(specht_character(2, 1, &p("2")).unwrap(), -1);
    }

    #[test]
    fn tabloid_display() {
        assert_eq!(tab(4, &[2, 4]).to_string(), "13|24");
        assert_eq!(tab(10, &[10]).to_string(), "1 2 3 4 5 6 7 8 9|10");
    }
}
