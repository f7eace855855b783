//! Matchings, dottings and two-row tableaux, together with the bijection
//! between standard dotted matchings and standard tableaux and the counting
//! formulas that size every homology degree.
//!
//! Vertices are 1-based and arcs are stored with `left < right`, sorted by
//! left endpoint.

mod counting;
mod matching;
mod partition;
mod tableau;

pub use counting::{binomial, catalan, kostka_two_row, springer_dimension, syt_count};
pub use matching::{
    colex_cmp, enumerate_dotted, enumerate_noncrossing, enumerate_standard, is_standard, Arc, DottedMatching,
    NoncrossingMatching, StandardMatching,
};
pub use partition::{partitions, Partition};
pub use tableau::{phi, standard_tableaux, theta, TwoRowTableau};

use crate::error::{Error, Result};

pub(crate) fn check_even(n: usize) -> Result<()> {
    if n % 2 == 1 {
        Err(Error::OddVertexCount(n as i64))
    } else {
        Ok(())
    }
}

pub(crate) fn check_degree(n: usize, k: usize) -> Result<()> {
    if 2 * k > n {
        Err(Error::DegreeOutOfRange { n, k })
    } else {
        Ok(())
    }
}
