//! Acceptance criteria, one line each. All comparisons are exact; the only
//! tolerances are the wall-clock budgets below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use springerrep::homology::{quotient_project_oracle, reduce_matching};
use springerrep::linediag::echelon_certificate;
use springerrep::matchcore::{
    enumerate_noncrossing, enumerate_standard, partitions, phi, springer_dimension, standard_tableaux, syt_count,
    theta, Partition,
};
use springerrep::snaction::{
    chart_diagram_consistency, irreducibility_check, rep_matrix, verify_coxeter, Representation,
};
use springerrep::specht::{graded_decomposition, verify_module_equality};
use springerrep::{IntMatrix, Rational};

const COUNTING_BUDGET: Duration = Duration::from_secs(5);
const BIJECTION_BUDGET: Duration = Duration::from_secs(10);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const CONSISTENCY_BUDGET: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn degrees(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).step_by(2).flat_map(|n| (0..=n / 2).map(move |k| (n, k)))
}

/// Pascal's triangle, independent of the library's counting module.
fn pascal(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

fn within(budget: Duration, start: Instant, detail: String) -> Verdict {
    let took = start.elapsed();
    if took <= budget {
        Ok(format!(
            "{detail} in {:.2}s (budget {}s)",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    } else {
        Err(format!(
            "{detail} but took {:.2}s (budget {}s)",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    }
}

fn counting() -> Verdict {
    let start = Instant::now();
    let catalan = [1usize, 2, 5, 14, 42];
    for (idx, n) in (2..=10).step_by(2).enumerate() {
        let got = enumerate_noncrossing(n).map_err(|e| e.to_string())?.len();
        if got != catalan[idx] {
            return Err(format!("n={n}: {got} noncrossing matchings, expected {}", catalan[idx]));
        }
        for k in 0..=n / 2 {
            let want = pascal(n, k) - if k == 0 { 0 } else { pascal(n, k - 1) };
            let got = enumerate_standard(n, k).map_err(|e| e.to_string())?.len() as u64;
            if got != want {
                return Err(format!("(n,k)=({n},{k}): {got} standard matchings, expected {want}"));
            }
        }
    }
    within(
        COUNTING_BUDGET,
        start,
        "Catalan 1,2,5,14,42 and C(n,k)-C(n,k-1) for n<=10".into(),
    )
}

fn bijection() -> Verdict {
    let start = Instant::now();
    let mut count = 0;
    for (n, k) in degrees(10) {
        for t in standard_tableaux(n, k).map_err(|e| e.to_string())? {
            if phi(&theta(&t)) != t {
                return Err(format!("phi(theta(T)) != T for {t}"));
            }
        }
        for m in enumerate_standard(n, k).map_err(|e| e.to_string())? {
            if theta(&phi(&m)) != m {
                return Err(format!("theta(phi(M)) != M for {m}"));
            }
            count += 1;
        }
    }
    within(
        BIJECTION_BUDGET,
        start,
        format!("{count} pairs round-trip both ways for n<=10"),
    )
}

fn rewriting_oracle() -> Verdict {
    let start = Instant::now();
    let mut generators = 0;
    for (n, k) in degrees(8) {
        let q = quotient_project_oracle(n, k).map_err(|e| e.to_string())?;
        if q.dimension() as u64 != syt_count(n, k).map_err(|e| e.to_string())? {
            return Err(format!("(n,k)=({n},{k}): quotient dimension {}", q.dimension()));
        }
        for g in &q.generators {
            let reduced = reduce_matching(g).map_coefs(|c| Rational::from_integer((*c).into()));
            if Some(reduced) != q.projection(g) {
                return Err(format!("rewriting and quotient projection differ on {g}"));
            }
            generators += 1;
        }
    }
    within(
        ORACLE_BUDGET,
        start,
        format!("{generators} generators agree, dimensions = syt_count, n<=8"),
    )
}

fn echelon() -> Verdict {
    for (n, k) in degrees(8) {
        if !echelon_certificate(n, k).map_err(|e| e.to_string())? {
            return Err(format!("no echelon certificate at (n,k)=({n},{k})"));
        }
    }
    Ok("unit pivots at U_M for every (n,k), n<=8".into())
}

fn representation() -> Verdict {
    let mut relations = 0;
    for (n, k) in degrees(10) {
        let r = verify_coxeter(n, k).map_err(|e| e.to_string())?;
        if let Some(w) = r.failures.first() {
            return Err(format!("Coxeter relation fails at {w}"));
        }
        relations += r.checked;
    }
    let pinned = IntMatrix::from_rows(vec![vec![-1, 1], vec![0, 1]]);
    if rep_matrix(4, 2, 1).map_err(|e| e.to_string())? != pinned {
        return Err("rep_matrix(4,2,1) != [[-1,1],[0,1]]".into());
    }
    let rep = Representation::new(4, 2).map_err(|e| e.to_string())?;
    let classes = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
    let mut traces = Vec::new();
    for c in classes {
        let p: Partition = c.parse().map_err(|e: springerrep::Error| e.to_string())?;
        traces.push(rep.character(&p).map_err(|e| e.to_string())?);
    }
    if traces != [2, 0, 2, -1, 0] {
        return Err(format!("S_4 traces {traces:?}, expected [2, 0, 2, -1, 0]"));
    }
    Ok(format!(
        "{relations} Coxeter relations for n<=10, pinned matrix, traces (2,0,2,-1,0)"
    ))
}

fn central_identity() -> Verdict {
    let start = Instant::now();
    let mut identities = 0;
    for (n, k) in degrees(8) {
        let r = chart_diagram_consistency(n, k).map_err(|e| e.to_string())?;
        if let Some(w) = r.failures.first() {
            return Err(format!(
                "expand(s_{}·M) != s_{}·expand(M) for M = {}",
                w.i, w.i, w.matching
            ));
        }
        identities += r.checked;
    }
    within(CONSISTENCY_BUDGET, start, format!("{identities} identities for n<=8"))
}

fn irreducibility() -> Verdict {
    let one = Rational::from_integer(1.into());
    for (n, k) in degrees(10) {
        let v = irreducibility_check(n, k).map_err(|e| e.to_string())?;
        if v != one {
            return Err(format!("<chi,chi> = {v} at (n,k)=({n},{k})"));
        }
    }
    Ok("<chi,chi> = 1 exactly for every (n,k), n<=10".into())
}

fn module_equality() -> Verdict {
    for (n, k) in degrees(8) {
        let r = verify_module_equality(n, k).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{r:?}"));
        }
    }
    Ok("ranks agree with syt_count, e_M0 = e_T0, psi(L_M) = e_M for n<=8".into())
}

fn multiplicity() -> Verdict {
    for n in (2..=10).step_by(2) {
        let mut found: Vec<Partition> = graded_decomposition(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        // two-row partitions with first row at least n/2, by direct listing
        let mut expected: Vec<Partition> = partitions(n)
            .into_iter()
            .filter(|p| p.rows() <= 2 && p.part(0) >= n / 2)
            .collect();
        found.sort_by(|a, b| a.parts().cmp(b.parts()));
        expected.sort_by(|a, b| a.parts().cmp(b.parts()));
        if found != expected {
            return Err(format!("n={n}: {found:?} vs {expected:?}"));
        }
        let kostka: Vec<u64> = expected
            .iter()
            .map(|mu| springerrep::matchcore::kostka_two_row(mu, &Partition::two_row(n, n / 2).unwrap()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if kostka.iter().any(|&x| x != 1) {
            return Err(format!("n={n}: Kostka numbers {kostka:?}"));
        }
    }
    Ok("each (n-k,k) appears once, matching Kostka numbers, n<=10".into())
}

fn dimension_formula() -> Verdict {
    for n in (2..=12).step_by(2) {
        let half = Partition::new(vec![n / 2, n / 2]).map_err(|e| e.to_string())?;
        let dim = springer_dimension(&half);
        if dim != n / 2 {
            return Err(format!("n={n}: dimension {dim}"));
        }
        let top = (0..=n / 2)
            .filter(|&k| syt_count(n, k).unwrap_or(0) > 0)
            .max()
            .unwrap_or(0);
        if 2 * top != 2 * dim {
            return Err(format!("n={n}: top degree {} vs 2·dim {}", 2 * top, 2 * dim));
        }
    }
    Ok("dim = n/2 and top homology degree = n for n<=12".into())
}

fn determinism() -> Verdict {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_springerrep"))
            .args(["verify", "--suite", "all", "--max-n", "8", "--format", "json"])
            .env("SPRINGERREP_THREADS", threads)
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let four = run("4")?;
    if !one.status.success() || !four.status.success() {
        return Err(format!("exit statuses {} and {}", one.status, four.status));
    }
    if one.stdout != four.stdout {
        return Err("reports differ between 1 and 4 threads".into());
    }
    Ok(format!("{} identical bytes with 1 and 4 threads", one.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("counting", counting),
        ("bijection", bijection),
        ("rewriting oracle", rewriting_oracle),
        ("echelon certificate", echelon),
        ("representation", representation),
        ("chart vs diagram action", central_identity),
        ("irreducibility", irreducibility),
        ("module equality", module_equality),
        ("multiplicity pattern", multiplicity),
        ("dimension formula", dimension_formula),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {:<24} PASS  {detail}", i + 1, name),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {:<24} FAIL  {detail}", i + 1, name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
