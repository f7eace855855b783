//! Rewriting arbitrary dotted matchings to the standard basis with the
//! Type I and Type II relations, and an independent linear-algebra oracle
//! for the quotient they present.
//!
//! Both relations live at a nested pair: an outer arc `(i,l)` whose
//! immediate child is `(j,k)`, paired with the unnested arcs `(i,j)`,
//! `(k,l)`. With every other arc and dot fixed,
//!
//! * Type I: `[(i,j)*,(k,l)] + [(i,j),(k,l)*] = [(i,l)*,(j,k)] + [(i,l),(j,k)*]`
//! * Type II: `[(i,j)*,(k,l)*] = [(i,l)*,(j,k)*]`
//!
//! A dotted arc that has a parent is exactly a nonstandard feature, so each
//! rewrite eliminates the nested-dotted term: Type I solves for
//! `[(i,l),(j,k)*]`, Type II replaces `[(i,l)*,(j,k)*]`.

mod quotient;

pub use quotient::{quotient_project_oracle, relations, QuotientProjection, ORACLE_MAX_N};

use std::fmt;

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::matchcore::{Arc, DottedMatching, StandardMatching};
use crate::{Int, MatchingSum, StandardSum};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SiteKind {
    /// Undotted outer arc over a dotted inner arc.
    TypeI,
    /// Two nested dotted arcs.
    TypeII,
}

/// A nested pair `(i,l) ⊃ (j,k)`, `i < j < k < l`, with `(j,k)` dotted and
/// an immediate child of `(i,l)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RewriteSite {
    pub kind: SiteKind,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl RewriteSite {
    pub fn outer(&self) -> Arc {
        Arc::new(self.i, self.l).expect("site arcs are valid")
    }

    pub fn inner(&self) -> Arc {
        Arc::new(self.j, self.k).expect("site arcs are valid")
    }
}

impl fmt::Display for RewriteSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SiteKind::TypeI => "I",
            SiteKind::TypeII => "II",
        };
        write!(f, "type {kind} at ({},{}) over ({},{})", self.i, self.l, self.j, self.k)
    }
}

/// Order in which [`reduce_with`] picks among the sites of a matching.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SiteStrategy {
    /// Deepest nested dotted arc first, ties broken by smallest left end.
    #[default]
    InnermostLeftmost,
    /// Shallowest nested dotted arc first, ties broken by largest left end.
    OutermostRightmost,
}

/// Every rewrite site, ordered innermost then leftmost. Empty iff `m` is
/// standard.
pub fn find_sites(m: &DottedMatching) -> Vec<RewriteSite> {
    let nc = m.matching();
    let mut sites: Vec<(usize, RewriteSite)> = (0..m.arcs().len())
        .filter(|&c| m.is_dotted(c))
        .filter_map(|c| {
            let p = nc.parent(c)?;
            let (outer, inner) = (m.arcs()[p], m.arcs()[c]);
            let kind = if m.is_dotted(p) {
                SiteKind::TypeII
            } else {
                SiteKind::TypeI
            };
            let site = RewriteSite {
                kind,
                i: outer.left(),
                j: inner.left(),
                k: inner.right(),
                l: outer.right(),
            };
            Some((nc.depth(c), site))
        })
        .collect();
    sites.sort_by(|(da, a), (db, b)| db.cmp(da).then(a.j.cmp(&b.j)));
    sites.into_iter().map(|(_, s)| s).collect()
}

/// Indices of the outer and inner arcs, checking that the inner arc is an
/// immediate child of the outer one.
fn locate(m: &DottedMatching, site: &RewriteSite) -> Result<(usize, usize)> {
    let mismatch = |why: &str| Error::SiteMismatch(format!("{site} in {m}: {why}"));
    if !(site.i < site.j && site.j < site.k && site.k < site.l) {
        return Err(mismatch("vertices not increasing"));
    }
    let outer = m.arcs().iter().position(|a| a.left() == site.i && a.right() == site.l);
    let inner = m.arcs().iter().position(|a| a.left() == site.j && a.right() == site.k);
    let (Some(o), Some(c)) = (outer, inner) else {
        return Err(mismatch("arcs not present"));
    };
    if m.matching().parent(c) != Some(o) {
        return Err(mismatch("inner arc is not an immediate child"));
    }
    Ok((o, c))
}

fn replace_pair(m: &DottedMatching, o: usize, c: usize, first: (Arc, bool), second: (Arc, bool)) -> DottedMatching {
    m.rewire(&[o, c], &[first, second])
        .expect("relation partners are noncrossing")
}

/// Solve the Type I relation for the nested-dotted term:
/// `[(i,l),(j,k)*] = -[(i,l)*,(j,k)] + [(i,j)*,(k,l)] + [(i,j),(k,l)*]`.
pub fn apply_type1(m: &DottedMatching, site: &RewriteSite) -> Result<MatchingSum> {
    let (o, c) = locate(m, site)?;
    if m.is_dotted(o) || !m.is_dotted(c) {
        return Err(Error::SiteMismatch(format!(
            "{site} in {m}: expected undotted outer over dotted inner"
        )));
    }
    let (ij, kl, il, jk) = site_arcs(site);
    let mut out = FormalSum::zero();
    out.add_term(replace_pair(m, o, c, (il, true), (jk, false)), -1);
    out.add_term(replace_pair(m, o, c, (ij, true), (kl, false)), 1);
    out.add_term(replace_pair(m, o, c, (ij, false), (kl, true)), 1);
    Ok(out)
}

/// `[(i,l)*,(j,k)*] = [(i,j)*,(k,l)*]`.
pub fn apply_type2(m: &DottedMatching, site: &RewriteSite) -> Result<MatchingSum> {
    let (o, c) = locate(m, site)?;
    if !m.is_dotted(o) || !m.is_dotted(c) {
        return Err(Error::SiteMismatch(format!("{site} in {m}: expected two dotted arcs")));
    }
    let (ij, kl, _, _) = site_arcs(site);
    Ok(FormalSum::basis(replace_pair(m, o, c, (ij, true), (kl, true))))
}

pub fn apply_site(m: &DottedMatching, site: &RewriteSite) -> Result<MatchingSum> {
    match site.kind {
        SiteKind::TypeI => apply_type1(m, site),
        SiteKind::TypeII => apply_type2(m, site),
    }
}

fn site_arcs(site: &RewriteSite) -> (Arc, Arc, Arc, Arc) {
    let a = |x, y| Arc::new(x, y).expect("site arcs are valid");
    (
        a(site.i, site.j),
        a(site.k, site.l),
        a(site.i, site.l),
        a(site.j, site.k),
    )
}

/// `Σ` over dotted arcs of the number of arcs enclosing it; zero exactly on
/// standard matchings and strictly decreased by every rewrite.
pub fn nesting_measure(m: &DottedMatching) -> usize {
    (0..m.arcs().len())
        .filter(|&i| m.is_dotted(i))
        .map(|i| m.matching().depth(i))
        .sum()
}

/// Shared `(n, k)` of all terms, or an error if they disagree.
pub fn degree_of(v: &MatchingSum) -> Result<Option<(usize, usize)>> {
    let mut deg = None;
    for (m, _) in v.iter() {
        let d = (m.n(), m.undotted_count());
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => {
                return Err(Error::Inhomogeneous(format!("terms of (n, k) = {e:?} and {d:?}")));
            }
            _ => {}
        }
    }
    Ok(deg)
}

pub fn reduce_to_standard(v: &MatchingSum) -> Result<StandardSum> {
    reduce_with(v, SiteStrategy::default())
}

/// Rewrite until only standard matchings remain.
pub fn reduce_with(v: &MatchingSum, strategy: SiteStrategy) -> Result<StandardSum> {
    degree_of(v)?;
    let mut pending = v.clone();
    let mut done = StandardSum::zero();
    while let Some((m, c)) = pending.pop_first() {
        let sites = find_sites(&m);
        let site = match strategy {
            SiteStrategy::InnermostLeftmost => sites.first(),
            SiteStrategy::OutermostRightmost => sites.last(),
        };
        let Some(site) = site else {
            done.add_term(StandardMatching::new_unchecked(m), c);
            continue;
        };
        let before = nesting_measure(&m);
        let image = apply_site(&m, site)?;
        for (t, _) in image.iter() {
            assert!(
                nesting_measure(t) < before,
                "rewrite of {m} at {site} did not decrease the measure"
            );
            debug_assert_eq!(t.undotted_count(), m.undotted_count());
        }
        pending.add_scaled(&image, &c);
    }
    Ok(done)
}

/// Convenience: reduce a single generator.
pub fn reduce_matching(m: &DottedMatching) -> StandardSum {
    reduce_to_standard(&FormalSum::basis(m.clone())).expect("a single term is homogeneous")
}

pub fn standard_sum_as_dotted(v: &StandardSum) -> MatchingSum {
    v.map_basis(|m| m.as_dotted().clone())
}

pub fn coefficient_sum(v: &StandardSum) -> Int {
    v.iter().map(|(_, c)| *c).sum()
}
