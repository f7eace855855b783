//! Serde wire formats. Field order in each struct is the emitted key order.
//!
//! * matching: `{"n":6,"arcs":[[1,6],[2,3],[4,5]],"dotted":[[1,6]]}`
//! * tableau: `{"n":6,"bottom":[3,6]}`
//! * matching sum: `{"terms":[{"coef":-1,"matching":{…}}]}`
//! * line-diagram vector: `{"n":4,"terms":[{"coef":1,"undot":[2,4]}]}`
//! * tabloid vector: `{"n":4,"k":2,"terms":[{"coef":1,"bottom":[2,4]}]}`

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linediag::{LineDiagramVector, UndotSet};
use crate::matchcore::{DottedMatching, NoncrossingMatching, StandardMatching, TwoRowTableau};
use crate::specht::{Tabloid, TabloidVector};
use crate::{Int, MatchingSum, StandardSum};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default)]
    pub dotted: Vec<[usize; 2]>,
}

impl From<&DottedMatching> for MatchingJson {
    fn from(m: &DottedMatching) -> Self {
        Self {
            n: m.n(),
            arcs: m.arcs().iter().map(|a| [a.left(), a.right()]).collect(),
            dotted: m.dotted_arcs().map(|a| [a.left(), a.right()]).collect(),
        }
    }
}

impl TryFrom<&MatchingJson> for DottedMatching {
    type Error = Error;
    fn try_from(j: &MatchingJson) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = j.arcs.iter().map(|a| (a[0], a[1])).collect();
        let matching = NoncrossingMatching::from_pairs(j.n, &pairs)?;
        let dotted = j
            .dotted
            .iter()
            .map(|a| crate::Arc::new(a[0], a[1]))
            .collect::<Result<Vec<_>>>()?;
        DottedMatching::new(matching, &dotted)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauJson {
    pub n: usize,
    pub bottom: Vec<usize>,
}

impl From<&TwoRowTableau> for TableauJson {
    fn from(t: &TwoRowTableau) -> Self {
        Self {
            n: t.n(),
            bottom: t.bottom().to_vec(),
        }
    }
}

impl TryFrom<&TableauJson> for TwoRowTableau {
    type Error = Error;
    fn try_from(j: &TableauJson) -> Result<Self> {
        TwoRowTableau::new(j.n, j.bottom.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingTermJson {
    pub coef: Int,
    pub matching: MatchingJson,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingSumJson {
    pub terms: Vec<MatchingTermJson>,
}

impl From<&MatchingSum> for MatchingSumJson {
    fn from(v: &MatchingSum) -> Self {
        Self::from_terms(v.iter().map(|(m, c)| (m, *c)))
    }
}

impl From<&StandardSum> for MatchingSumJson {
    fn from(v: &StandardSum) -> Self {
        Self::from_terms(v.iter().map(|(m, c)| (m.as_dotted(), *c)))
    }
}

impl MatchingSumJson {
    fn from_terms<'a>(terms: impl Iterator<Item = (&'a DottedMatching, Int)>) -> Self {
        Self {
            terms: terms
                .map(|(m, coef)| MatchingTermJson {
                    coef,
                    matching: m.into(),
                })
                .collect(),
        }
    }

    /// Repeated matchings are summed; the result must be homogeneous.
    pub fn to_sum(&self) -> Result<MatchingSum> {
        let mut out = MatchingSum::zero();
        for t in &self.terms {
            out.add_term(DottedMatching::try_from(&t.matching)?, t.coef);
        }
        crate::homology::degree_of(&out)?;
        Ok(out)
    }

    pub fn to_standard_sum(&self) -> Result<StandardSum> {
        let mut out = StandardSum::zero();
        for (m, c) in self.to_sum()?.iter() {
            out.add_term(StandardMatching::try_from(m.clone())?, *c);
        }
        Ok(out)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UndotTermJson {
    pub coef: Int,
    pub undot: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineDiagramJson {
    pub n: usize,
    pub terms: Vec<UndotTermJson>,
}

impl LineDiagramJson {
    pub fn new(n: usize, v: &LineDiagramVector) -> Self {
        Self {
            n,
            terms: v
                .iter()
                .map(|(u, c)| UndotTermJson {
                    coef: *c,
                    undot: u.elements().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_vector(&self) -> Result<LineDiagramVector> {
        let mut out = LineDiagramVector::zero();
        for t in &self.terms {
            out.add_term(UndotSet::new(self.n, t.undot.clone())?, t.coef);
        }
        Ok(out)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TabloidTermJson {
    pub coef: Int,
    pub bottom: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TabloidVectorJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<TabloidTermJson>,
}

impl TabloidVectorJson {
    pub fn new(n: usize, k: usize, v: &TabloidVector) -> Self {
        Self {
            n,
            k,
            terms: v
                .iter()
                .map(|(t, c)| TabloidTermJson {
                    coef: *c,
                    bottom: t.bottom().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_vector(&self) -> Result<TabloidVector> {
        let mut out = TabloidVector::zero();
        for t in &self.terms {
            if t.bottom.len() != self.k {
                return Err(Error::CardinalityMismatch(t.bottom.len(), self.k));
            }
            out.add_term(Tabloid::new(self.n, t.bottom.clone())?, t.coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(s: &str) -> DottedMatching {
        s.parse().unwrap()
    }

    #[test]
    fn matching_key_order() {
        let j = MatchingJson::from(&dm("(1,6)* (2,3) (4,5)"));
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"n":6,"arcs":[[1,6],[2,3],[4,5]],"dotted":[[1,6]]}"#
        );
        assert_eq!(DottedMatching::try_from(&j).unwrap(), dm("(1,6)* (2,3) (4,5)"));
    }

    #[test]
    fn invalid_matchings_are_rejected() {
        let crossing: MatchingJson = serde_json::from_str(r#"{"n":4,"arcs":[[1,3],[2,4]],"dotted":[]}"#).unwrap();
        assert!(DottedMatching::try_from(&crossing).is_err());
        let stray: MatchingJson = serde_json::from_str(r#"{"n":4,"arcs":[[1,2],[3,4]],"dotted":[[1,4]]}"#).unwrap();
        assert!(DottedMatching::try_from(&stray).is_err());
        assert!(serde_json::from_str::<MatchingJson>(r#"{"n":2,"arcs":[[1,2]],"extra":1}"#).is_err());
    }

    #[test]
    fn sums_round_trip() {
        let v: MatchingSum = [(dm("(1,4) (2,3)*"), 1), (dm("(1,2)* (3,4)"), -1)]
            .into_iter()
            .collect();
        let text = serde_json::to_string(&MatchingSumJson::from(&v)).unwrap();
        assert!(text.starts_with(r#"{"terms":[{"coef":"#));
        let back: MatchingSumJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_sum().unwrap(), v);
        assert!(back.to_standard_sum().is_err());
    }

    #[test]
    fn inhomogeneous_sum_is_rejected() {
        let v = MatchingSumJson {
            terms: vec![
                MatchingTermJson {
                    coef: 1,
                    matching: (&dm("(1,2) (3,4)")).into(),
                },
                MatchingTermJson {
                    coef: 1,
                    matching: (&dm("(1,2)* (3,4)")).into(),
                },
            ],
        };
        assert!(matches!(v.to_sum(), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn vector_formats() {
        let l: LineDiagramVector = [(UndotSet::new(4, vec![2, 4]).unwrap(), 1)].into_iter().collect();
        let j = LineDiagramJson::new(4, &l);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"n":4,"terms":[{"coef":1,"undot":[2,4]}]}"#
        );
        assert_eq!(j.to_vector().unwrap(), l);
        let t = crate::specht::psi(&l);
        let j = TabloidVectorJson::new(4, 2, &t);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"n":4,"k":2,"terms":[{"coef":1,"bottom":[2,4]}]}"#
        );
        assert_eq!(j.to_vector().unwrap(), t);
        let tab = TableauJson::from(&TwoRowTableau::new(6, vec![3, 6]).unwrap());
        assert_eq!(serde_json::to_string(&tab).unwrap(), r#"{"n":6,"bottom":[3,6]}"#);
    }
}
