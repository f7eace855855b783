use std::fmt;

use super::check_degree;
use super::matching::{colex_cmp, Arc, DottedMatching, NoncrossingMatching, StandardMatching};
use crate::error::{Error, Result};

/// Standard tableau of shape `(n-k, k)`, stored by its bottom row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoRowTableau {
    n: usize,
    bottom: Vec<usize>,
}

impl TwoRowTableau {
    /// `bottom` must be a strictly increasing subset of `1..=n` whose `i`-th
    /// entry exceeds the `i`-th entry of the complementary top row.
    pub fn new(n: usize, bottom: Vec<usize>) -> Result<Self> {
        let reject = |why: &str| Err(Error::NotStandardTableau(format!("n = {n}, bottom {bottom:?}: {why}")));
        if bottom.windows(2).any(|w| w[0] >= w[1]) {
            return reject("bottom row not strictly increasing");
        }
        if bottom.iter().any(|&b| b == 0 || b > n) {
            return reject("entry out of range");
        }
        if 2 * bottom.len() > n {
            return reject("bottom row longer than top row");
        }
        let top: Vec<usize> = (1..=n).filter(|v| !bottom.contains(v)).collect();
        if bottom.iter().zip(&top).any(|(b, t)| b <= t) {
            return reject("column does not increase");
        }
        Ok(Self { n, bottom })
    }

    pub fn single_row(n: usize) -> Self {
        Self { n, bottom: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.bottom.len()
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top(&self) -> Vec<usize> {
        (1..=self.n).filter(|v| !self.bottom.contains(v)).collect()
    }

    /// Height-two columns as `(top, bottom)` pairs.
    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.top().into_iter().zip(self.bottom.iter().copied()).collect()
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.top()), row(&self.bottom))
    }
}

/// Bottom row = right endpoints of the undotted arcs.
pub fn phi(m: &DottedMatching) -> TwoRowTableau {
    TwoRowTableau {
        n: m.n(),
        bottom: m.leading_undot_set(),
    }
}

/// Inverse of [`phi`] on standard matchings.
pub fn theta(t: &TwoRowTableau) -> StandardMatching {
    let n = t.n;
    let mut matched = vec![false; n + 1];
    let mut arcs = Vec::with_capacity(n / 2);
    let mut dotted = Vec::new();
    // bottom entries left to right, each joined undotted to the nearest
    // unmatched vertex on its left
    for &j in &t.bottom {
        let i = (1..j)
            .rev()
            .find(|&i| !matched[i])
            .expect("standard tableau always has a partner");
        matched[i] = true;
        matched[j] = true;
        arcs.push(Arc::new(i, j).expect("unmatched gap is even"));
    }
    // leftover vertices paired left to right with dotted arcs
    let mut v = 1;
    while v <= n {
        if matched[v] {
            v += 1;
            continue;
        }
        let w = (v + 1..=n).find(|&w| !matched[w]).expect("even number of leftovers");
        matched[v] = true;
        matched[w] = true;
        let a = Arc::new(v, w).expect("unmatched gap is even");
        arcs.push(a);
        dotted.push(a);
    }
    let matching = NoncrossingMatching::new(n, arcs).expect("theta produces a noncrossing matching");
    StandardMatching::new_unchecked(DottedMatching::new(matching, &dotted).expect("dotted arcs belong"))
}

/// All standard tableaux of shape `(n-k, k)`, bottom rows in colex order.
pub fn standard_tableaux(n: usize, k: usize) -> Result<Vec<TwoRowTableau>> {
    check_degree(n, k)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<TwoRowTableau>) {
        if cur.len() == k {
            if let Ok(t) = TwoRowTableau::new(n, cur.clone()) {
                out.push(t);
            }
            return;
        }
        for v in next..=n {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 1, &mut cur, &mut out);
    out.sort_by(|a, b| colex_cmp(&a.bottom, &b.bottom));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchcore::enumerate_standard;

    #[test]
    fn phi_examples() {
        let m: DottedMatching = "(1,2)* (3,4)*".parse().unwrap();
        assert_eq!(phi(&m), TwoRowTableau::single_row(4));
        let m: DottedMatching = "(1,4)* (2,3) (5,6)".parse().unwrap();
        let t = phi(&m);
        assert_eq!(t.bottom(), &[3, 6]);
        assert_eq!(t.top(), vec![1, 2, 4, 5]);
        let m: DottedMatching = "(1,4) (2,3)".parse().unwrap();
        assert_eq!(phi(&m).bottom(), &[3, 4]);
    }

    #[test]
    fn theta_examples() {
        let t = TwoRowTableau::new(6, vec![5]).unwrap();
        assert_eq!(theta(&t).to_string(), "(1,2)* (3,6)* (4,5)");
        let t = TwoRowTableau::single_row(6);
        assert_eq!(theta(&t).to_string(), "(1,2)* (3,4)* (5,6)*");
        let t = TwoRowTableau::new(4, vec![2, 4]).unwrap();
        assert_eq!(theta(&t).to_string(), "(1,2) (3,4)");
    }

    #[test]
    fn rejects_nonstandard_tableaux() {
        assert!(TwoRowTableau::new(4, vec![1, 4]).is_err());
        assert!(TwoRowTableau::new(4, vec![3, 2]).is_err());
        assert!(TwoRowTableau::new(4, vec![2, 3, 4]).is_err());
        assert!(TwoRowTableau::new(4, vec![5]).is_err());
    }

    #[test]
    fn bijection_exhaustive() {
        for n in (0..=10).step_by(2) {
            for k in 0..=n / 2 {
                let tabs = standard_tableaux(n, k).unwrap();
                let mats = enumerate_standard(n, k).unwrap();
                assert_eq!(tabs.len(), mats.len());
                for t in &tabs {
                    let m = theta(t);
                    assert!(m.is_standard());
                    assert_eq!(m.undotted_count(), k);
                    assert_eq!(&phi(&m), t);
                }
                for m in &mats {
                    assert_eq!(&theta(&phi(m)), m);
                }
                // canonical orders correspond
                let images: Vec<_> = mats.iter().map(|m| phi(m)).collect();
                assert_eq!(images, tabs);
            }
        }
    }
}
