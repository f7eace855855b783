use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use super::{check_degree, check_even};
use crate::error::{Error, Result};

/// An arc `(left, right)` of a matching, `left < right`, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Arc {
    left: usize,
    right: usize,
}

impl Arc {
    /// Endpoints may be given in either order. Noncrossing arcs always span an
    /// even number of interior vertices, so endpoints of equal parity are
    /// rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        let (left, right) = if a < b { (a, b) } else { (b, a) };
        if left == 0 || left == right || (right - left) % 2 == 0 {
            return Err(Error::InvalidArc(a, b));
        }
        Ok(Self { left, right })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn touches(&self, v: usize) -> bool {
        self.left == v || self.right == v
    }

    /// `other` lies strictly below `self`.
    pub fn encloses(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        (self.left < other.left && other.left < self.right && self.right < other.right)
            || (other.left < self.left && self.left < other.right && other.right < self.right)
    }

    pub fn other_end(&self, v: usize) -> usize {
        if v == self.left {
            self.right
        } else {
            self.left
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// A perfect noncrossing matching of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NoncrossingMatching {
    n: usize,
    arcs: Vec<Arc>,
}

impl NoncrossingMatching {
    pub fn new(n: usize, mut arcs: Vec<Arc>) -> Result<Self> {
        check_even(n)?;
        arcs.sort();
        let mut seen = vec![false; n + 1];
        for a in &arcs {
            for v in [a.left, a.right] {
                if v > n || seen[v] {
                    return Err(Error::NotPerfect(n));
                }
                seen[v] = true;
            }
        }
        if arcs.len() * 2 != n {
            return Err(Error::NotPerfect(n));
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if a.crosses(b) {
                    return Err(Error::Crossing(a.left, a.right, b.left, b.right));
                }
            }
        }
        Ok(Self { n, arcs })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let arcs = pairs.iter().map(|&(a, b)| Arc::new(a, b)).collect::<Result<Vec<_>>>()?;
        Self::new(n, arcs)
    }

    /// `(1,2), (3,4), …, (n-1,n)`.
    pub fn unnested(n: usize) -> Result<Self> {
        check_even(n)?;
        Ok(Self {
            n,
            arcs: (0..n / 2)
                .map(|i| Arc {
                    left: 2 * i + 1,
                    right: 2 * i + 2,
                })
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Index of the arc incident to vertex `v`.
    pub fn arc_index(&self, v: usize) -> usize {
        self.arcs
            .iter()
            .position(|a| a.touches(v))
            .unwrap_or_else(|| panic!("vertex {v} not in 1..={}", self.n))
    }

    pub fn mate(&self, v: usize) -> usize {
        self.arcs[self.arc_index(v)].other_end(v)
    }

    /// Index of the innermost arc strictly enclosing arc `idx`.
    pub fn parent(&self, idx: usize) -> Option<usize> {
        let a = self.arcs[idx];
        // arcs are sorted by left endpoint, so the last encloser is innermost
        self.arcs.iter().rposition(|b| b.encloses(&a))
    }

    /// Number of arcs strictly enclosing arc `idx`.
    pub fn depth(&self, idx: usize) -> usize {
        let a = self.arcs[idx];
        self.arcs.iter().filter(|b| b.encloses(&a)).count()
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(Arc::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A noncrossing matching with a dot flag on each arc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DottedMatching {
    matching: NoncrossingMatching,
    dotted: Vec<bool>, // parallel to matching.arcs
}

impl DottedMatching {
    pub fn from_flags(matching: NoncrossingMatching, dotted: Vec<bool>) -> Result<Self> {
        if dotted.len() != matching.arcs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} dot flags for {} arcs",
                dotted.len(),
                matching.arcs.len()
            )));
        }
        Ok(Self { matching, dotted })
    }

    pub fn new(matching: NoncrossingMatching, dotted_arcs: &[Arc]) -> Result<Self> {
        let mut dotted = vec![false; matching.arcs.len()];
        for d in dotted_arcs {
            let idx = matching
                .arcs
                .iter()
                .position(|a| a == d)
                .ok_or(Error::UnknownDottedArc(d.left, d.right))?;
            dotted[idx] = true;
        }
        Ok(Self { matching, dotted })
    }

    pub fn from_pairs(n: usize, arcs: &[(usize, usize)], dotted: &[(usize, usize)]) -> Result<Self> {
        let matching = NoncrossingMatching::from_pairs(n, arcs)?;
        let dotted = dotted
            .iter()
            .map(|&(a, b)| Arc::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(matching, &dotted)
    }

    pub fn all_dotted(matching: NoncrossingMatching) -> Self {
        let dotted = vec![true; matching.arcs.len()];
        Self { matching, dotted }
    }

    pub fn all_undotted(matching: NoncrossingMatching) -> Self {
        let dotted = vec![false; matching.arcs.len()];
        Self { matching, dotted }
    }

    pub fn n(&self) -> usize {
        self.matching.n
    }

    pub fn matching(&self) -> &NoncrossingMatching {
        &self.matching
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.matching.arcs
    }

    pub fn dotted_flags(&self) -> &[bool] {
        &self.dotted
    }

    pub fn is_dotted(&self, idx: usize) -> bool {
        self.dotted[idx]
    }

    /// Number of undotted arcs; the homological degree is `2k`.
    pub fn undotted_count(&self) -> usize {
        self.dotted.iter().filter(|d| !**d).count()
    }

    pub fn dotted_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs()
            .iter()
            .zip(&self.dotted)
            .filter(|(_, d)| **d)
            .map(|(a, _)| *a)
    }

    pub fn undotted_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs()
            .iter()
            .zip(&self.dotted)
            .filter(|(_, d)| !**d)
            .map(|(a, _)| *a)
    }

    pub fn is_standard(&self) -> bool {
        (0..self.dotted.len()).all(|i| !self.dotted[i] || self.matching.parent(i).is_none())
    }

    /// Right endpoints of the undotted arcs, increasing.
    pub fn leading_undot_set(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.undotted_arcs().map(|a| a.right).collect();
        u.sort_unstable();
        u
    }

    /// Replace the arcs at `remove` by `add`, keeping every other arc and its
    /// dot. Fails if the result is not a noncrossing perfect matching.
    pub fn rewire(&self, remove: &[usize], add: &[(Arc, bool)]) -> Result<Self> {
        let mut pairs: Vec<(Arc, bool)> = self
            .arcs()
            .iter()
            .zip(&self.dotted)
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, (a, d))| (*a, *d))
            .collect();
        pairs.extend_from_slice(add);
        pairs.sort();
        let matching = NoncrossingMatching::new(self.n(), pairs.iter().map(|p| p.0).collect())?;
        Ok(Self {
            matching,
            dotted: pairs.iter().map(|p| p.1).collect(),
        })
    }
}

impl fmt::Display for DottedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs()
            .iter()
            .zip(&self.dotted)
            .map(|(a, d)| if *d { format!("{a}*") } else { a.to_string() })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses the plain format `(1,6)* (2,3) (4,5)`; `n` is twice the arc count.
impl FromStr for DottedMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArc(0, 0);
        let mut arcs = Vec::new();
        let mut dotted = Vec::new();
        for tok in s.split_whitespace() {
            let (body, dot) = match tok.strip_suffix('*') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            let arc = Arc::new(a, b)?;
            arcs.push(arc);
            if dot {
                dotted.push(arc);
            }
        }
        let matching = NoncrossingMatching::new(2 * arcs.len(), arcs)?;
        DottedMatching::new(matching, &dotted)
    }
}

/// A dotted matching in which no dotted arc lies below another arc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardMatching(DottedMatching);

impl StandardMatching {
    pub fn into_dotted(self) -> DottedMatching {
        self.0
    }

    pub fn as_dotted(&self) -> &DottedMatching {
        &self.0
    }

    pub(crate) fn new_unchecked(m: DottedMatching) -> Self {
        debug_assert!(m.is_standard(), "{m} is not standard");
        Self(m)
    }
}

impl TryFrom<DottedMatching> for StandardMatching {
    type Error = Error;

    fn try_from(m: DottedMatching) -> Result<Self> {
        for i in 0..m.dotted.len() {
            if m.dotted[i] && m.matching.parent(i).is_some() {
                let a = m.arcs()[i];
                return Err(Error::NotStandard(a.left, a.right));
            }
        }
        Ok(Self(m))
    }
}

impl Deref for StandardMatching {
    type Target = DottedMatching;
    fn deref(&self) -> &DottedMatching {
        &self.0
    }
}

impl fmt::Display for StandardMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardMatching {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<DottedMatching>()?.try_into()
    }
}

/// Order on equal-size subsets listed increasingly: compare the largest
/// elements first, and the first difference from the top decides. Subsets of
/// different sizes are ordered by size.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// All noncrossing perfect matchings of `{1..n}`.
///
/// Order: vertex 1 is paired with `2, 4, …, n` in turn; for each choice the
/// matchings of the enclosed block vary slowest and those of the block to
/// the right fastest.
pub fn enumerate_noncrossing(n: usize) -> Result<Vec<NoncrossingMatching>> {
    check_even(n)?;
    Ok(block_matchings(1, n)
        .into_iter()
        .map(|arcs| {
            let mut arcs = arcs;
            arcs.sort();
            NoncrossingMatching { n, arcs }
        })
        .collect())
}

fn block_matchings(first: usize, last: usize) -> Vec<Vec<Arc>> {
    if first > last {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for right in (first + 1..=last).step_by(2) {
        let inner = block_matchings(first + 1, right - 1);
        let outer = block_matchings(right + 1, last);
        for i in &inner {
            for o in &outer {
                let mut arcs = Vec::with_capacity(1 + i.len() + o.len());
                arcs.push(Arc { left: first, right });
                arcs.extend_from_slice(i);
                arcs.extend_from_slice(o);
                out.push(arcs);
            }
        }
    }
    out
}

pub fn is_standard(m: &DottedMatching) -> bool {
    m.is_standard()
}

/// Every dotted matching on `n` vertices with exactly `k` undotted arcs.
pub fn enumerate_dotted(n: usize, k: usize) -> Result<Vec<DottedMatching>> {
    check_even(n)?;
    check_degree(n, k)?;
    let arcs = n / 2;
    let mut out = Vec::new();
    for m in enumerate_noncrossing(n)? {
        for mask in 0u32..(1 << arcs) {
            if (arcs - mask.count_ones() as usize) != k {
                continue;
            }
            let dotted = (0..arcs).map(|i| mask & (1 << i) != 0).collect();
            out.push(DottedMatching {
                matching: m.clone(),
                dotted,
            });
        }
    }
    Ok(out)
}

/// Standard dotted matchings with `k` undotted arcs, sorted increasingly by
/// their leading undot set under [`colex_cmp`].
pub fn enumerate_standard(n: usize, k: usize) -> Result<Vec<StandardMatching>> {
    let mut out: Vec<StandardMatching> = enumerate_dotted(n, k)?
        .into_iter()
        .filter(DottedMatching::is_standard)
        .map(StandardMatching)
        .collect();
    out.sort_by(|a, b| colex_cmp(&a.leading_undot_set(), &b.leading_undot_set()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(s: &str) -> DottedMatching {
        s.parse().unwrap()
    }

    /// Every perfect matching of 1..=n, noncrossing or not.
    fn all_perfect(n: usize) -> Vec<Vec<(usize, usize)>> {
        fn go(free: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if free.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for j in 1..free.len() {
                let rest: Vec<usize> = free[1..].iter().copied().filter(|&v| v != free[j]).collect();
                for mut tail in go(&rest) {
                    tail.push((free[0], free[j]));
                    out.push(tail);
                }
            }
            out
        }
        go(&(1..=n).collect::<Vec<_>>())
    }

    fn brute_noncrossing(n: usize) -> Vec<NoncrossingMatching> {
        let mut v: Vec<NoncrossingMatching> = all_perfect(n)
            .into_iter()
            .filter(|pairs| {
                pairs
                    .iter()
                    .all(|&(a, b)| pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
            })
            .map(|pairs| NoncrossingMatching::from_pairs(n, &pairs).unwrap())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_noncrossing(0).unwrap().len(), 1);
        let two = enumerate_noncrossing(2).unwrap();
        assert_eq!(two, vec![NoncrossingMatching::from_pairs(2, &[(1, 2)]).unwrap()]);
        let four = enumerate_noncrossing(4).unwrap();
        assert_eq!(
            four,
            vec![
                NoncrossingMatching::from_pairs(4, &[(1, 2), (3, 4)]).unwrap(),
                NoncrossingMatching::from_pairs(4, &[(1, 4), (2, 3)]).unwrap(),
            ]
        );
        assert_eq!(all_perfect(6).len(), 15);
        assert_eq!(enumerate_noncrossing(6).unwrap().len(), 5);
        assert_eq!(enumerate_noncrossing(3), Err(Error::OddVertexCount(3)));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in (0..=10).step_by(2) {
            let mut fast = enumerate_noncrossing(n).unwrap();
            fast.sort();
            assert_eq!(fast, brute_noncrossing(n), "n = {n}");
        }
    }

    #[test]
    fn arcs_have_opposite_parity() {
        for n in (2..=12).step_by(2) {
            for m in enumerate_noncrossing(n).unwrap() {
                assert!(m.arcs().iter().all(|a| (a.left() + a.right()) % 2 == 1));
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Arc::new(1, 3), Err(Error::InvalidArc(1, 3))));
        assert!(matches!(Arc::new(0, 1), Err(Error::InvalidArc(..))));
        assert!(matches!(
            NoncrossingMatching::from_pairs(8, &[(1, 4), (2, 7), (3, 6), (5, 8)]),
            Err(Error::Crossing(..))
        ));
        assert!(matches!(
            NoncrossingMatching::from_pairs(4, &[(1, 2)]),
            Err(Error::NotPerfect(4))
        ));
        assert!(matches!(
            DottedMatching::from_pairs(4, &[(1, 2), (3, 4)], &[(1, 4)]),
            Err(Error::UnknownDottedArc(1, 4))
        ));
    }

    #[test]
    fn standardness() {
        assert!(dm("(1,2)* (3,4)*").is_standard());
        assert!(!dm("(1,4) (2,3)*").is_standard());
        assert!(dm("(1,4)* (2,3)").is_standard());
        assert!(!dm("(1,4)* (2,3)*").is_standard());
        assert!(matches!(
            StandardMatching::try_from(dm("(1,6) (2,3) (4,5)*")),
            Err(Error::NotStandard(4, 5))
        ));
    }

    #[test]
    fn standard_enumeration_examples() {
        let s = enumerate_standard(4, 2).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].to_string(), "(1,2) (3,4)");
        assert_eq!(s[1].to_string(), "(1,4) (2,3)");
        let s = enumerate_standard(4, 0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to_string(), "(1,2)* (3,4)*");
        assert_eq!(enumerate_standard(6, 2).unwrap().len(), 9);
        assert_eq!(enumerate_standard(0, 0).unwrap().len(), 1);
        assert!(matches!(
            enumerate_standard(4, 3),
            Err(Error::DegreeOutOfRange { n: 4, k: 3 })
        ));
    }

    #[test]
    fn nesting_queries() {
        let m = dm("(1,6) (2,5) (3,4) (7,8)");
        assert_eq!(m.matching().parent(2), Some(1));
        assert_eq!(m.matching().parent(1), Some(0));
        assert_eq!(m.matching().parent(0), None);
        assert_eq!(m.matching().depth(2), 2);
        assert_eq!(m.matching().mate(5), 2);
    }

    #[test]
    fn plain_format_round_trip() {
        let m = dm("(1,6)* (2,3) (4,5)");
        assert_eq!(m.to_string(), "(1,6)* (2,3) (4,5)");
        assert_eq!(m.n(), 6);
        assert_eq!(m.undotted_count(), 2);
    }

    #[test]
    fn colex_order() {
        assert_eq!(colex_cmp(&[1, 4], &[2, 4]), Ordering::Less);
        assert_eq!(colex_cmp(&[2, 3], &[1, 4]), Ordering::Less);
        assert_eq!(colex_cmp(&[2, 3], &[2, 3]), Ordering::Equal);
    }
}
