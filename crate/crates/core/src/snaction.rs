//! The `S_n` action on standard matchings given by the transposition chart,
//! its representation matrices, Coxeter checks and characters.
//!
//! For `s_i` and a standard matching `M`:
//!
//! 1. `i` and `i+1` both lie on dotted arcs: `s_i·M = M`.
//! 2. `(i, i+1)` is an undotted arc: `s_i·M = -M`.
//! 3. `i`, `i+1` lie on arcs `(i,j)`, `(i+1,k)`, exactly one dotted:
//!    `s_i·M = M + M'`, where `M'` has undotted `(i,i+1)` and dotted `(j,k)`.
//! 4. Both of those arcs undotted: `s_i·M = M + M'`, where `M'` has undotted
//!    `(i,i+1)` and `(j,k)`.
//!
//! Permutations act with the rightmost letter of a word applied first, so
//! `(s_1 s_2)·M = s_1·(s_2·M)`.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::homology::reduce_to_standard;
use crate::linediag::{expand, permute_diagram, LineDiagramVector};
use crate::matchcore::{enumerate_standard, partitions, Arc, Partition, StandardMatching};
use crate::{BigInt, Int, IntMatrix, MatchingSum, Rational, StandardSum};

pub use crate::permutation::Permutation;

/// `s_i · M`, reduced to the standard basis.
pub fn act_simple(i: usize, m: &StandardMatching) -> Result<StandardSum> {
    let n = m.n();
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { n, i });
    }
    let matching = m.matching();
    let (a, b) = (matching.arc_index(i), matching.arc_index(i + 1));
    let (da, db) = (m.is_dotted(a), m.is_dotted(b));
    if a == b {
        let sign = if da { 1 } else { -1 };
        return Ok(FormalSum::from_term(m.clone(), sign));
    }
    if da && db {
        return Ok(FormalSum::basis(m.clone()));
    }
    let (j, k) = (matching.mate(i), matching.mate(i + 1));
    let rewired = m.rewire(&[a, b], &[(Arc::new(i, i + 1)?, false), (Arc::new(j, k)?, da || db)])?;
    let mut sum = MatchingSum::basis(m.as_dotted().clone());
    sum.add_term(rewired, 1);
    reduce_to_standard(&sum)
}

/// Linear extension of [`act_simple`].
pub fn act_simple_sum(i: usize, v: &StandardSum) -> Result<StandardSum> {
    let mut out = StandardSum::zero();
    for (m, c) in v.iter() {
        out.add_scaled(&act_simple(i, m)?, c);
    }
    Ok(out)
}

/// `w · v`, applying the letters of a reduced word of `w` right to left.
pub fn act_permutation(w: &Permutation, v: &StandardSum) -> Result<StandardSum> {
    if let Some((m, _)) = v.leading() {
        if m.n() != w.n() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} points acting on matchings of {} vertices",
                w.n(),
                m.n()
            )));
        }
    }
    let mut out = v.clone();
    for &i in w.reduced_word().iter().rev() {
        out = act_simple_sum(i, &out)?;
    }
    Ok(out)
}

/// The degree-`k` representation: ordered standard basis and the matrices of
/// the simple transpositions.
#[derive(Clone, Debug)]
pub struct Representation {
    n: usize,
    k: usize,
    basis: Vec<StandardMatching>,
    generators: Vec<IntMatrix>,
}

impl Representation {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let basis = enumerate_standard(n, k)?;
        let generators = (1..n).map(|i| matrix_of(&basis, i)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            k,
            basis,
            generators,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardMatching] {
        &self.basis
    }

    /// Matrix of `s_i`, `1 ≤ i < n`.
    pub fn generator(&self, i: usize) -> Result<&IntMatrix> {
        if i == 0 || i >= self.n {
            return Err(Error::GeneratorOutOfRange { n: self.n, i });
        }
        Ok(&self.generators[i - 1])
    }

    pub fn matrix(&self, w: &Permutation) -> Result<IntMatrix> {
        if w.n() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "expected {} points, got {}",
                self.n,
                w.n()
            )));
        }
        let mut out = IntMatrix::identity(self.dimension());
        for i in w.reduced_word() {
            out = times_sparse(&out, &self.generators[i - 1]);
        }
        Ok(out)
    }

    /// Trace at the consecutive-block representative of `cycle_type`.
    pub fn character(&self, cycle_type: &Partition) -> Result<Int> {
        if cycle_type.size() != self.n {
            return Err(Error::InvalidPartition(format!(
                "{cycle_type} is not a partition of {}",
                self.n
            )));
        }
        Ok(self.matrix(&Permutation::class_representative(cycle_type))?.trace())
    }

    /// Character values over all cycle types, in the order of [`partitions`].
    pub fn character_table_row(&self) -> Result<Vec<(Partition, Int)>> {
        partitions(self.n)
            .into_iter()
            .map(|p| Ok((p.clone(), self.character(&p)?)))
            .collect()
    }

    /// Checks `s_i² = 1`, `(s_i s_{i+1})³ = 1` and `(s_i s_j)² = 1` for
    /// `|i - j| ≥ 2`.
    pub fn verify_coxeter(&self) -> CoxeterReport {
        let mut report = CoxeterReport {
            n: self.n,
            k: self.k,
            checked: 0,
            failures: Vec::new(),
        };
        let g = &self.generators;
        for i in 1..self.n {
            for j in i..self.n {
                let exponent = if j == i + 1 { 3 } else { 2 };
                let base = if i == j {
                    g[i - 1].clone()
                } else {
                    &g[i - 1] * &g[j - 1]
                };
                report.checked += 1;
                if !base.pow(exponent).is_identity() {
                    report.failures.push(CoxeterWitness {
                        n: self.n,
                        k: self.k,
                        i,
                        j,
                    });
                }
            }
        }
        report
    }
}

/// `a · g` for a generator matrix `g` with few nonzeros per column.
fn times_sparse(a: &IntMatrix, g: &IntMatrix) -> IntMatrix {
    let d = g.cols();
    let mut out = IntMatrix::zeros(a.rows(), d);
    for c in 0..d {
        for t in (0..g.rows()).filter(|&t| g[(t, c)] != 0) {
            let v = g[(t, c)];
            for r in 0..a.rows() {
                out[(r, c)] += a[(r, t)] * v;
            }
        }
    }
    out
}

fn matrix_of(basis: &[StandardMatching], i: usize) -> Result<IntMatrix> {
    let columns = basis
        .iter()
        .map(|m| {
            act_simple(i, m)?
                .coordinates(basis)
                .ok_or_else(|| Error::CheckFailed(format!("s_{i} maps {m} outside the degree basis")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(basis.len(), &columns))
}

/// Matrix of `s_i` in degree `k`; column `c` holds the coordinates of
/// `s_i · basis[c]`.
pub fn rep_matrix(n: usize, k: usize, i: usize) -> Result<IntMatrix> {
    let basis = enumerate_standard(n, k)?;
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { n, i });
    }
    matrix_of(&basis, i)
}

pub fn permutation_matrix(n: usize, k: usize, w: &Permutation) -> Result<IntMatrix> {
    Representation::new(n, k)?.matrix(w)
}

/// A failed Coxeter relation between `s_i` and `s_j` (`i == j` for the
/// involution relation).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CoxeterWitness {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterReport {
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub failures: Vec<CoxeterWitness>,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_coxeter(n: usize, k: usize) -> Result<CoxeterReport> {
    Ok(Representation::new(n, k)?.verify_coxeter())
}

pub fn character(n: usize, k: usize, cycle_type: &Partition) -> Result<Int> {
    Representation::new(n, k)?.character(cycle_type)
}

/// `⟨χ, ψ⟩ = Σ_λ χ(λ) ψ(λ) / z_λ` for class functions listed over the same
/// cycle types.
pub fn class_inner_product(chi: &[(Partition, Int)], psi: &[(Partition, Int)]) -> Result<Rational> {
    if chi.len() != psi.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} classes",
            chi.len(),
            psi.len()
        )));
    }
    let mut total = Rational::zero();
    for ((p, a), (q, b)) in chi.iter().zip(psi) {
        if p != q {
            return Err(Error::DimensionMismatch(format!("class {p} paired with {q}")));
        }
        let z = BigInt::from(p.centralizer_size());
        total += Rational::new(BigInt::from(*a) * BigInt::from(*b), z);
    }
    Ok(total)
}

/// `⟨χ, χ⟩` for the degree-`k` character; exactly `1` iff irreducible.
pub fn irreducibility_check(n: usize, k: usize) -> Result<Rational> {
    let row = Representation::new(n, k)?.character_table_row()?;
    class_inner_product(&row, &row)
}

/// A chart image whose expansion disagrees with the permuted expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistencyWitness {
    pub matching: StandardMatching,
    pub i: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistencyReport {
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub failures: Vec<ConsistencyWitness>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Linear extension of [`expand`].
pub fn expand_sum(v: &StandardSum) -> LineDiagramVector {
    let mut out = LineDiagramVector::zero();
    for (m, c) in v.iter() {
        out.add_scaled(&expand(m), c);
    }
    out
}

/// Compares `expand(s_i · M)` with `s_i · expand(M)` for every standard `M`
/// of degree `k` and every `i`.
pub fn chart_diagram_consistency(n: usize, k: usize) -> Result<ConsistencyReport> {
    let basis = enumerate_standard(n, k)?;
    let mut report = ConsistencyReport {
        n,
        k,
        checked: 0,
        failures: Vec::new(),
    };
    for m in &basis {
        let lm = expand(m);
        for i in 1..n {
            let s = Permutation::simple(n, i)?;
            report.checked += 1;
            if expand_sum(&act_simple(i, m)?) != permute_diagram(&s, &lm) {
                report.failures.push(ConsistencyWitness { matching: m.clone(), i });
            }
        }
    }
    Ok(report)
}

impl fmt::Display for CoxeterWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} s_{} s_{}", self.n, self.k, self.i, self.j)
    }
}

/// Converts an exactly integral rational.
pub fn rational_to_int(q: &Rational) -> Option<Int> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}
