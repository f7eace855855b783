use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// `(n-k, k)`, or `(n)` when `k = 0`.
    pub fn two_row(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::DegreeOutOfRange { n, k });
        }
        Self::new(vec![n - k, k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// `i`-th part, 0-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Size of the centralizer of a permutation with this cycle type,
    /// `Π_i i^{m_i} m_i!`.
    pub fn centralizer_size(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&q| q == p).count();
            for m in 1..=mult {
                z *= (p as u128) * (m as u128);
            }
            i += mult;
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `3,2,1`, `(3,2,1)` or `3 2 1`; parts are sorted into decreasing
/// order.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
