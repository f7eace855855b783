//! Line diagrams and the signed expansion `L_M` of a standard matching in
//! the product basis of `H_*((S^2)^n)`.
//!
//! A line diagram on `n` strands is identified with its undot set, the
//! positions of its undotted strands. Each undotted arc `(l, r)` of a
//! matching contributes the factor `l_{r} - l_{l}`; dotted arcs contribute a
//! pair of dotted strands.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::linalg::Matrix;
use crate::matchcore::{colex_cmp, enumerate_standard, Arc, DottedMatching, StandardMatching};
use crate::permutation::Permutation;
use crate::scalar::sign_pow;
use crate::Int;

/// Undotted strand positions of a line diagram on `n` strands, increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UndotSet {
    n: usize,
    set: Vec<usize>,
}

impl UndotSet {
    pub fn new(n: usize, mut set: Vec<usize>) -> Result<Self> {
        set.sort_unstable();
        if set.windows(2).any(|w| w[0] == w[1]) || set.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidUndotSet(set));
        }
        Ok(Self { n, set })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, set: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.binary_search(&x).is_ok()
    }

    /// `{ w(x) : x ∈ U }`.
    pub fn permute(&self, w: &Permutation) -> Self {
        let mut set: Vec<usize> = self.set.iter().map(|&x| w.apply(x)).collect();
        set.sort_unstable();
        Self { n: self.n, set }
    }
}

/// Colex order within one cardinality (see [`compare_undot_sets`]).
impl Ord for UndotSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| colex_cmp(&self.set, &other.set))
    }
}

impl PartialOrd for UndotSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UndotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.set.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Signed sum of line diagrams, all with the same number of undotted strands.
pub type LineDiagramVector = FormalSum<UndotSet, Int>;

/// `S < S'` iff at the largest position where the increasing listings
/// differ, `S` has the smaller entry.
pub fn compare_undot_sets(s: &UndotSet, t: &UndotSet) -> Result<Ordering> {
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch(s.len(), t.len()));
    }
    Ok(colex_cmp(&s.set, &t.set))
}

/// Every set holding exactly one endpoint of each undotted arc, in
/// increasing order.
pub fn undot_sets(m: &StandardMatching) -> Vec<UndotSet> {
    undot_sets_of(m)
}

fn undot_sets_of(m: &DottedMatching) -> Vec<UndotSet> {
    let arcs: Vec<Arc> = m.undotted_arcs().collect();
    let mut out = Vec::with_capacity(1 << arcs.len());
    for mask in 0u32..(1 << arcs.len()) {
        let set = arcs
            .iter()
            .enumerate()
            .map(|(i, a)| if mask & (1 << i) != 0 { a.left() } else { a.right() })
            .collect();
        out.push(UndotSet::new(m.n(), set).expect("distinct endpoints"));
    }
    out.sort();
    out
}

/// Number of elements of `u` that are left endpoints of their arc in `m`.
pub fn left_count(m: &StandardMatching, u: &UndotSet) -> Result<usize> {
    left_count_of(m, u)
}

fn left_count_of(m: &DottedMatching, u: &UndotSet) -> Result<usize> {
    let invalid = || Error::InvalidUndotSet(u.set.clone());
    if u.n != m.n() || u.len() != m.undotted_count() {
        return Err(invalid());
    }
    let mut lefts = 0;
    for a in m.undotted_arcs() {
        match (u.contains(a.left()), u.contains(a.right())) {
            (true, false) => lefts += 1,
            (false, true) => {}
            _ => return Err(invalid()),
        }
    }
    Ok(lefts)
}

/// `L_M = Σ_{U} (-1)^{Λ_M(U)} l_U`.
pub fn expand(m: &StandardMatching) -> LineDiagramVector {
    expand_dotted(m)
}

/// The same signed expansion for an arbitrary dotted matching: the image of
/// its homology class under the component embedding that flips the left
/// endpoint of every arc.
pub fn expand_dotted(m: &DottedMatching) -> LineDiagramVector {
    undot_sets_of(m)
        .into_iter()
        .map(|u| {
            let sign = sign_pow(left_count_of(m, &u).expect("generated from m"));
            (u, sign)
        })
        .collect()
}

/// Image under the global embedding of `X_n` that flips every odd
/// coordinate. Differs from [`expand_dotted`] by `(-1)^e`, where `e` counts
/// undotted arcs with even left endpoint.
pub fn global_embedding(m: &DottedMatching) -> LineDiagramVector {
    let even_left = m.undotted_arcs().filter(|a| a.left() % 2 == 0).count();
    expand_dotted(m).scale(&sign_pow(even_left))
}

/// Insert the arc `(i, j)` into `m` (vertices `≥ i` shift by one, `≥ j-1`
/// by two), producing a matching on `n + 2` vertices.
pub fn insert_arc(m: &StandardMatching, i: usize, j: usize, dotted: bool) -> Result<StandardMatching> {
    let n = m.n();
    if !(1 <= i && i < j && j <= n + 2) {
        return Err(Error::InvalidInsertion(format!("({i},{j}) outside 1..={}", n + 2)));
    }
    let shift = |x: usize| insertion_shift(x, i, j);
    let mut pairs: Vec<(Arc, bool)> = Vec::with_capacity(n / 2 + 1);
    for (a, &d) in m.arcs().iter().zip(m.dotted_flags()) {
        let b = Arc::new(shift(a.left()), shift(a.right())).map_err(|e| Error::InvalidInsertion(e.to_string()))?;
        pairs.push((b, d));
    }
    pairs.push((
        Arc::new(i, j).map_err(|e| Error::InvalidInsertion(e.to_string()))?,
        dotted,
    ));
    let matching = crate::matchcore::NoncrossingMatching::new(n + 2, pairs.iter().map(|p| p.0).collect())
        .map_err(|e| Error::InvalidInsertion(e.to_string()))?;
    let dotted_arcs: Vec<Arc> = pairs.iter().filter(|p| p.1).map(|p| p.0).collect();
    let dm = DottedMatching::new(matching, &dotted_arcs)?;
    StandardMatching::try_from(dm).map_err(|e| Error::InvalidInsertion(e.to_string()))
}

fn insertion_shift(x: usize, i: usize, j: usize) -> usize {
    if x < i {
        x
    } else if x < j - 1 {
        x + 1
    } else {
        x + 2
    }
}

/// Checks `expand` of the enlarged matching against the arc-insertion
/// formula applied to `expand(m)`: a dotted arc only reindexes strands; an
/// undotted arc doubles each term, `+` with `j` undotted and `-` with `i`
/// undotted.
pub fn insert_arc_consistency(m: &StandardMatching, i: usize, j: usize, dotted: bool) -> Result<bool> {
    let bigger = insert_arc(m, i, j, dotted)?;
    let n2 = m.n() + 2;
    let mut predicted = LineDiagramVector::zero();
    for (u, c) in expand(m).iter() {
        // x < i stays, i <= x < j-1 moves to x+1, the rest to x+2
        let base: Vec<usize> = u.set.iter().map(|&x| insertion_shift(x, i, j)).collect();
        if dotted {
            predicted.add_term(UndotSet::new(n2, base)?, *c);
        } else {
            let mut with_j = base.clone();
            with_j.push(j);
            let mut with_i = base;
            with_i.push(i);
            predicted.add_term(UndotSet::new(n2, with_j)?, *c);
            predicted.add_term(UndotSet::new(n2, with_i)?, -*c);
        }
    }
    Ok(predicted == expand(&bigger))
}

/// `w · l_U = l_{w(U)}`, coefficients unchanged.
pub fn permute_diagram(w: &Permutation, v: &LineDiagramVector) -> LineDiagramVector {
    v.map_basis(|u| u.permute(w))
}

/// All `k`-subsets of `{1..n}` in increasing colex order.
pub fn all_undot_sets(n: usize, k: usize) -> Vec<UndotSet> {
    let mut out = Vec::new();
    fn go(n: usize, k: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<UndotSet>) {
        if cur.len() == k {
            out.push(UndotSet { n, set: cur.clone() });
            return;
        }
        for v in next..=n {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Matrix of `M ↦ L_M` in degree `k`: one row per standard matching in
/// canonical order, one column per `k`-subset in decreasing colex order.
pub fn expansion_matrix(n: usize, k: usize) -> Result<(Vec<StandardMatching>, Vec<UndotSet>, Matrix<Int>)> {
    let basis = enumerate_standard(n, k)?;
    let mut columns = all_undot_sets(n, k);
    columns.reverse();
    let rows: Vec<Vec<Int>> = basis
        .iter()
        .map(|m| {
            let e = expand(m);
            columns.iter().map(|u| e.coef(u)).collect()
        })
        .collect();
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, columns.len())
    } else {
        Matrix::from_rows(rows)
    };
    Ok((basis, columns, matrix))
}

/// True iff the expansion matrix, with rows listed by decreasing leading
/// undot set and columns by decreasing colex order, is in row echelon form
/// with every pivot equal to `+1`, and the pivot of row `M` sits in the
/// column of its leading undot set `U_M`.
pub fn echelon_certificate(n: usize, k: usize) -> Result<bool> {
    let (basis, columns, matrix) = expansion_matrix(n, k)?;
    let mut last_pivot: Option<usize> = None;
    for r in (0..basis.len()).rev() {
        let row = matrix.row(r);
        let Some(p) = row.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        if row[p] != 1 || columns[p].set != basis[r].leading_undot_set() {
            return Ok(false);
        }
        if last_pivot.is_some_and(|q| p <= q) {
            return Ok(false);
        }
        last_pivot = Some(p);
    }
    Ok(true)
}
