//! Sweeps of the library's invariants over every `(n, k)` up to a bound.
//!
//! Checks are independent and may run in parallel; the report lists them in
//! a fixed order and contains nothing that depends on scheduling.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use springerrep::homology::{quotient_project_oracle, reduce_matching, ORACLE_MAX_N};
use springerrep::json::MatchingJson;
use springerrep::linediag::echelon_certificate;
use springerrep::matchcore::{
    binomial, catalan, enumerate_noncrossing, enumerate_standard, phi, springer_dimension, standard_tableaux,
    syt_count, theta, Partition,
};
use springerrep::snaction::{chart_diagram_consistency, irreducibility_check, verify_coxeter};
use springerrep::specht::{expected_multiplicity_one, graded_decomposition, verify_module_equality};
use springerrep::Rational;

/// Largest accepted `--max-n`.
pub const HARD_MAX_N: usize = 12;
/// Above this bound the sweep warns about run time.
pub const WARN_MAX_N: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counting,
    Bijection,
    Oracle,
    Echelon,
    Coxeter,
    Consistency,
    Irreducibility,
    Equality,
    Decomposition,
    Dimension,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Counting,
        Suite::Bijection,
        Suite::Oracle,
        Suite::Echelon,
        Suite::Coxeter,
        Suite::Consistency,
        Suite::Irreducibility,
        Suite::Equality,
        Suite::Decomposition,
        Suite::Dimension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Bijection => "bijection",
            Suite::Oracle => "oracle",
            Suite::Echelon => "echelon",
            Suite::Coxeter => "coxeter",
            Suite::Consistency => "consistency",
            Suite::Irreducibility => "irreducibility",
            Suite::Equality => "equality",
            Suite::Decomposition => "decomposition",
            Suite::Dimension => "dimension",
        }
    }

    /// Whether the suite runs once per `n` rather than once per `(n, k)`.
    fn per_n(self) -> bool {
        matches!(
            self,
            Suite::Counting | Suite::Bijection | Suite::Decomposition | Suite::Dimension
        )
    }

    /// Effective bound for a requested `max_n`.
    pub fn bound(self, max_n: usize) -> usize {
        match self {
            Suite::Oracle => max_n.min(ORACLE_MAX_N),
            _ => max_n,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Parses a suite name, or `all` for every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        out.push(part.trim().parse()?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Check {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = (Suite, &Check)> {
        self.suites
            .iter()
            .flat_map(|s| s.checks.iter().filter(|c| !c.passed).map(move |c| (s.suite, c)))
    }

    /// One line per check followed by a per-suite summary.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<15} {:>3} {:>3}  {:<6} {}\n",
            "suite", "n", "k", "status", "detail"
        ));
        for s in &self.suites {
            for c in &s.checks {
                let k = c.k.map_or("-".to_string(), |k| k.to_string());
                let status = if c.passed { "ok" } else { "FAIL" };
                out.push_str(&format!(
                    "{:<15} {:>3} {:>3}  {:<6} {}\n",
                    s.suite, c.n, k, status, c.detail
                ));
            }
        }
        out.push('\n');
        for s in &self.suites {
            let ok = s.checks.iter().filter(|c| c.passed).count();
            let status = if s.passed { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<15} n<={:<3} {:>4}/{:<4} {}\n",
                s.suite,
                s.max_n,
                ok,
                s.checks.len(),
                status
            ));
        }
        out.push_str(&format!("overall {}\n", if self.passed { "ok" } else { "FAIL" }));
        out
    }
}

/// Runs the suites for every even `n` in `2..=max_n` on the current rayon
/// pool.
pub fn run(suites: &[Suite], max_n: usize) -> Report {
    let mut tasks: Vec<(Suite, usize, Option<usize>)> = Vec::new();
    for &suite in suites {
        for n in (2..=suite.bound(max_n)).step_by(2) {
            if suite.per_n() {
                tasks.push((suite, n, None));
            } else {
                tasks.extend((0..=n / 2).map(|k| (suite, n, Some(k))));
            }
        }
    }
    let results: Vec<Check> = tasks.par_iter().map(|&(suite, n, k)| run_check(suite, n, k)).collect();
    let mut reports: Vec<SuiteReport> = Vec::new();
    for (&(suite, _, _), check) in tasks.iter().zip(results) {
        match reports.last_mut() {
            Some(r) if r.suite == suite => r.checks.push(check),
            _ => reports.push(SuiteReport {
                suite,
                max_n: suite.bound(max_n),
                passed: true,
                checks: vec![check],
            }),
        }
    }
    for r in &mut reports {
        r.passed = r.checks.iter().all(|c| c.passed);
    }
    Report {
        max_n,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    }
}

pub fn run_check(suite: Suite, n: usize, k: Option<usize>) -> Check {
    let outcome = match (suite, k) {
        (Suite::Counting, _) => counting(n),
        (Suite::Bijection, _) => bijection(n),
        (Suite::Decomposition, _) => decomposition(n),
        (Suite::Dimension, _) => dimension(n),
        (Suite::Oracle, Some(k)) => oracle(n, k),
        (Suite::Echelon, Some(k)) => echelon(n, k),
        (Suite::Coxeter, Some(k)) => coxeter(n, k),
        (Suite::Consistency, Some(k)) => consistency(n, k),
        (Suite::Irreducibility, Some(k)) => irreducibility(n, k),
        (Suite::Equality, Some(k)) => equality(n, k),
        (_, None) => Err(format!("{suite} needs a degree")),
    };
    match outcome {
        Ok(Outcome {
            passed,
            detail,
            witness,
        }) => Check {
            n,
            k,
            passed,
            detail,
            witness,
        },
        Err(e) => Check {
            n,
            k,
            passed: false,
            detail: format!("error: {e}"),
            witness: None,
        },
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    witness: Option<Value>,
}

impl Outcome {
    fn pass(detail: String) -> Self {
        Self {
            passed: true,
            detail,
            witness: None,
        }
    }

    fn check(passed: bool, detail: String) -> Self {
        Self {
            passed,
            detail,
            witness: None,
        }
    }

    fn fail(detail: String, witness: Value) -> Self {
        Self {
            passed: false,
            detail,
            witness: Some(witness),
        }
    }
}

type CheckResult = Result<Outcome, String>;

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn counting(n: usize) -> CheckResult {
    let matchings = enumerate_noncrossing(n).map_err(err)?.len() as u64;
    let mut counts = Vec::new();
    let mut passed = matchings == catalan(n / 2);
    for k in 0..=n / 2 {
        let got = enumerate_standard(n, k).map_err(err)?.len() as u64;
        let want = binomial(n, k) - if k == 0 { 0 } else { binomial(n, k - 1) };
        passed &= got == want;
        counts.push(got.to_string());
    }
    Ok(Outcome::check(
        passed,
        format!("matchings {matchings}, standard by degree [{}]", counts.join(" ")),
    ))
}

fn bijection(n: usize) -> CheckResult {
    let mut total = 0;
    for k in 0..=n / 2 {
        for t in standard_tableaux(n, k).map_err(err)? {
            if phi(&theta(&t)) != t {
                return Ok(Outcome::fail(
                    format!("phi(theta(T)) != T at k={k}"),
                    json!({ "tableau": t.bottom() }),
                ));
            }
            total += 1;
        }
        for m in enumerate_standard(n, k).map_err(err)? {
            if theta(&phi(&m)) != m {
                let w = serde_json::to_value(MatchingJson::from(m.as_dotted())).map_err(err)?;
                return Ok(Outcome::fail(
                    format!("theta(phi(M)) != M at k={k}"),
                    json!({ "matching": w }),
                ));
            }
        }
    }
    Ok(Outcome::pass(format!("{total} round trips each way")))
}

fn oracle(n: usize, k: usize) -> CheckResult {
    let q = quotient_project_oracle(n, k).map_err(err)?;
    for g in &q.generators {
        let reduced = reduce_matching(g).map_coefs(|c| Rational::from_integer((*c).into()));
        if Some(reduced) != q.projection(g) {
            let w = serde_json::to_value(MatchingJson::from(g)).map_err(err)?;
            return Ok(Outcome::fail(
                "rewriting disagrees with quotient projection".into(),
                json!({ "generator": w }),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{} generators, {} relations of rank {}, quotient dimension {}",
        q.generators.len(),
        q.relation_count,
        q.relation_rank,
        q.dimension()
    )))
}

fn echelon(n: usize, k: usize) -> CheckResult {
    let ok = echelon_certificate(n, k).map_err(err)?;
    Ok(Outcome::check(
        ok,
        format!("{} rows with unit pivots", syt_count(n, k).map_err(err)?),
    ))
}

fn coxeter(n: usize, k: usize) -> CheckResult {
    let r = verify_coxeter(n, k).map_err(err)?;
    match r.failures.first() {
        None => Ok(Outcome::pass(format!("{} relations", r.checked))),
        Some(w) => Ok(Outcome::fail(
            format!("{} of {} relations fail", r.failures.len(), r.checked),
            json!({ "n": w.n, "k": w.k, "i": w.i, "j": w.j }),
        )),
    }
}

fn consistency(n: usize, k: usize) -> CheckResult {
    let r = chart_diagram_consistency(n, k).map_err(err)?;
    match r.failures.first() {
        None => Ok(Outcome::pass(format!("{} identities", r.checked))),
        Some(w) => {
            let m = serde_json::to_value(MatchingJson::from(w.matching.as_dotted())).map_err(err)?;
            Ok(Outcome::fail(
                format!("{} of {} identities fail", r.failures.len(), r.checked),
                json!({ "matching": m, "i": w.i }),
            ))
        }
    }
}

fn irreducibility(n: usize, k: usize) -> CheckResult {
    let v = irreducibility_check(n, k).map_err(err)?;
    let one = Rational::from_integer(1.into());
    Ok(Outcome::check(v == one, format!("<chi,chi> = {v}")))
}

fn equality(n: usize, k: usize) -> CheckResult {
    let r = verify_module_equality(n, k).map_err(err)?;
    let detail = format!(
        "ranks e_T {} e_M {} union {} expected {}, witness {}, psi {}",
        r.polytabloid_rank,
        r.matching_rank,
        r.union_rank,
        r.expected,
        if r.witness_equal { "ok" } else { "FAIL" },
        if r.psi_agrees { "ok" } else { "FAIL" }
    );
    Ok(Outcome::check(r.passed(), detail))
}

fn decomposition(n: usize) -> CheckResult {
    let found: Vec<Partition> = graded_decomposition(n)
        .map_err(err)?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let mut sorted = found.clone();
    sorted.sort_by(|a, b| b.parts().cmp(a.parts()));
    let expected = expected_multiplicity_one(n).map_err(err)?;
    let shown: Vec<String> = found.iter().map(|p| p.to_string()).collect();
    Ok(Outcome::check(
        sorted == expected,
        format!("degrees carry {}", shown.join(" ")),
    ))
}

fn dimension(n: usize) -> CheckResult {
    let half = Partition::two_row(n, n / 2).map_err(err)?;
    let dim = springer_dimension(&half);
    let mut top = 0;
    let mut total = 0;
    for k in 0..=n / 2 {
        let d = syt_count(n, k).map_err(err)?;
        if d > 0 {
            top = k;
        }
        total += d;
    }
    let passed = dim == n / 2 && top == n / 2 && total == binomial(n, n / 2);
    Ok(Outcome::check(
        passed,
        format!("dim {dim}, top degree {}, total rank {total}", 2 * top),
    ))
}
