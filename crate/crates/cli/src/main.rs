use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use springerrep::homology::reduce_to_standard;
use springerrep::json::{LineDiagramJson, MatchingJson, MatchingSumJson, TableauJson, TabloidVectorJson};
use springerrep::matchcore::{enumerate_dotted, enumerate_standard, phi, standard_tableaux, theta};
use springerrep::snaction::{act_permutation, expand_sum, Permutation, Representation};
use springerrep::specht::{emit_top_degree_basis, matching_generator, polytabloid, TabloidVector};
use springerrep::{DottedMatching, IntMatrix, MatchingSum, Partition, StandardSum};
use springerrep_cli::verify::{self, Suite, HARD_MAX_N, WARN_MAX_N};

#[derive(Parser)]
#[command(
    name = "springerrep",
    version,
    about = "Exact homology and S_n action for two-row Springer fibers"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List standard dotted matchings in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Number of undotted arcs; all degrees when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Include nonstandard dottings.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Tabulate phi and theta and check both round trips.
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Rewrite a matching or matching sum to the standard basis.
    Reduce {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Signed line-diagram expansion of a standard matching or sum.
    Expand {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Act on a standard matching or sum by s_i or a permutation.
    Act {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        element: ElementArg,
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Representation matrix in the canonical standard basis.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        element: ElementArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Character value at a cycle type, or the whole character.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma separated parts, e.g. 3,2,1.
        #[arg(long)]
        cycle_type: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Polytabloids e_T and matching generators e_M.
    Specht {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Emit::Both)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rank comparison of the Specht and matching modules.
    VerifyEquality {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Matching generators in top degree (all arcs undotted).
    TopBasis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites for every n up to a bound.
    Verify {
        /// Suite name, comma separated list, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct InputArg {
    /// JSON file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ElementArg {
    /// Simple transposition s_i.
    #[arg(long)]
    gen: Option<usize>,
    /// Cycle notation "(1 2)(3 4 5)" or one-line "2 1 4 5 3".
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    #[value(name = "eT")]
    Et,
    #[value(name = "eM")]
    Em,
    Both,
}

enum Failure {
    /// Bad arguments or input; exit status 2.
    Invalid(String),
    /// A verification did not hold; exit status 1. Carries the output to
    /// emit, which includes the witness.
    Check(String),
}

type Outcome = Result<String, Failure>;

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let (text, code) = match dispatch(&cli.command) {
        Ok(text) => (text, 0),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(text)) => (text, 1),
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SPRINGERREP_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("SPRINGERREP_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Enumerate { n, k, all, format } => enumerate(*n, *k, *all, *format),
        Command::Bijection { n, k, format } => bijection(*n, *k, *format),
        Command::Reduce { input, format } => {
            let v = read_sum(&input.input)?;
            emit_sum(&reduce_to_standard(&v).map_err(invalid)?, *format)
        }
        Command::Expand { input, format } => {
            let v = read_standard(&input.input)?;
            let n = sum_n(&v).unwrap_or(0);
            let l = expand_sum(&v);
            match format {
                Format::Json => Ok(line(&LineDiagramJson::new(n, &l))),
                _ => Ok(l.iter().map(|(u, c)| format!("{c:+} l{u}\n")).collect()),
            }
        }
        Command::Act {
            n,
            k,
            element,
            input,
            format,
        } => {
            let v = read_standard(&input.input)?;
            if let Some((m, _)) = v.leading() {
                if n.is_some_and(|n| n != m.n()) || k.is_some_and(|k| k != m.undotted_count()) {
                    return Err(invalid(format!(
                        "input has n = {}, k = {}, which disagrees with --n/--k",
                        m.n(),
                        m.undotted_count()
                    )));
                }
            }
            let size = sum_n(&v).or(*n).ok_or_else(|| invalid("empty input needs --n"))?;
            let w = element.permutation(size)?;
            emit_sum(&act_permutation(&w, &v).map_err(invalid)?, *format)
        }
        Command::Matrix { n, k, element, format } => {
            let rep = Representation::new(*n, *k).map_err(invalid)?;
            let w = element.permutation(*n)?;
            let m = rep.matrix(&w).map_err(invalid)?;
            Ok(emit_matrix(&rep, &w, &m, *format))
        }
        Command::Character {
            n,
            k,
            cycle_type,
            format,
        } => character(*n, *k, cycle_type.as_deref(), *format),
        Command::Specht { n, k, emit, format } => specht(*n, *k, *emit, *format),
        Command::VerifyEquality { max_n, format } => run_verify(&[Suite::Equality], *max_n, *format),
        Command::TopBasis { n, format } => top_basis(*n, *format),
        Command::Verify { suite, max_n, format } => {
            let suites = verify::parse_suites(suite).map_err(invalid)?;
            run_verify(&suites, *max_n, *format)
        }
    }
}

impl ElementArg {
    fn permutation(&self, n: usize) -> Result<Permutation, Failure> {
        match (&self.gen, &self.perm) {
            (Some(i), _) => Permutation::simple(n, *i).map_err(invalid),
            (None, Some(p)) => Permutation::parse(p, n).map_err(invalid),
            (None, None) => Err(invalid("one of --gen or --perm is required")),
        }
    }
}

fn line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| invalid(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?;
    }
    Ok(text)
}

/// Accepts a matching sum `{"terms":[…]}` or a single matching.
fn read_sum(path: &str) -> Result<MatchingSum, Failure> {
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| invalid(format!("{path}: {e}")))?;
    if value.get("terms").is_some() {
        let sum: MatchingSumJson = serde_json::from_value(value).map_err(|e| invalid(format!("{path}: {e}")))?;
        sum.to_sum().map_err(invalid)
    } else {
        let m: MatchingJson = serde_json::from_value(value).map_err(|e| invalid(format!("{path}: {e}")))?;
        Ok(MatchingSum::basis(DottedMatching::try_from(&m).map_err(invalid)?))
    }
}

fn read_standard(path: &str) -> Result<StandardSum, Failure> {
    let v = read_sum(path)?;
    let mut out = StandardSum::zero();
    for (m, c) in v.iter() {
        let s = springerrep::StandardMatching::try_from(m.clone()).map_err(invalid)?;
        out.add_term(s, *c);
    }
    Ok(out)
}

fn sum_n(v: &StandardSum) -> Option<usize> {
    v.leading().map(|(m, _)| m.n())
}

fn emit_sum(v: &StandardSum, format: Format) -> Outcome {
    match format {
        Format::Json => Ok(line(&MatchingSumJson::from(v))),
        _ => Ok(v.iter().map(|(m, c)| format!("{c:+} {m}\n")).collect()),
    }
}

fn enumerate(n: usize, k: Option<usize>, all: bool, format: Format) -> Outcome {
    let degrees: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n / 2).collect(),
    };
    let mut matchings: Vec<DottedMatching> = Vec::new();
    for k in degrees {
        if all {
            matchings.extend(enumerate_dotted(n, k).map_err(invalid)?);
        } else {
            matchings.extend(
                enumerate_standard(n, k)
                    .map_err(invalid)?
                    .into_iter()
                    .map(|m| m.into_dotted()),
            );
        }
    }
    Ok(match format {
        Format::Json => line(&matchings.iter().map(MatchingJson::from).collect::<Vec<_>>()),
        _ => matchings.iter().map(|m| format!("{m}\n")).collect(),
    })
}

fn bijection(n: usize, k: Option<usize>, format: Format) -> Outcome {
    let degrees: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n / 2).collect(),
    };
    let mut rows = Vec::new();
    for k in degrees {
        let basis = enumerate_standard(n, k).map_err(invalid)?;
        let tableaux = standard_tableaux(n, k).map_err(invalid)?;
        for t in &tableaux {
            if phi(&theta(t)) != *t {
                return Err(Failure::Check(pretty(
                    &json!({ "failure": "phi(theta(T)) != T", "tableau": TableauJson::from(t) }),
                )));
            }
        }
        for m in basis {
            let t = phi(&m);
            if theta(&t) != m {
                return Err(Failure::Check(pretty(
                    &json!({ "failure": "theta(phi(M)) != M", "matching": MatchingJson::from(m.as_dotted()) }),
                )));
            }
            rows.push((m, t));
        }
    }
    Ok(match format {
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|(m, t)| json!({ "matching": MatchingJson::from(m.as_dotted()), "tableau": TableauJson::from(t) }))
                .collect();
            line(&table)
        }
        _ => rows.iter().map(|(m, t)| format!("{m}\t{t}\n")).collect(),
    })
}

fn emit_matrix(rep: &Representation, w: &Permutation, m: &IntMatrix, format: Format) -> String {
    let rows = m.to_rows();
    match format {
        Format::Csv => rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Json => line(&json!({
            "n": rep.n(),
            "k": rep.k(),
            "permutation": w.one_line(),
            "basis": rep.basis().iter().map(|b| MatchingJson::from(b.as_dotted())).collect::<Vec<_>>(),
            "matrix": rows,
        })),
        Format::Plain => {
            let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
            rows.iter()
                .map(|r| r.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
                .collect()
        }
    }
}

fn character(n: usize, k: usize, cycle_type: Option<&str>, format: Format) -> Outcome {
    let rep = Representation::new(n, k).map_err(invalid)?;
    let values: Vec<(Partition, i64)> = match cycle_type {
        Some(s) => {
            let p: Partition = s.parse().map_err(invalid)?;
            vec![(p.clone(), rep.character(&p).map_err(invalid)?)]
        }
        None => rep.character_table_row().map_err(invalid)?,
    };
    Ok(match format {
        Format::Json => line(
            &values
                .iter()
                .map(|(p, c)| json!({ "cycle_type": p.parts(), "value": c }))
                .collect::<Vec<_>>(),
        ),
        _ if cycle_type.is_some() => format!("{}\n", values[0].1),
        _ => values.iter().map(|(p, c)| format!("{p}\t{c}\n")).collect(),
    })
}

fn plain_vector(v: &TabloidVector) -> String {
    v.iter()
        .map(|(t, c)| format!("{c:+} {t}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn specht(n: usize, k: usize, emit: Emit, format: Format) -> Outcome {
    let mut entries: Vec<Value> = Vec::new();
    let mut plain = String::new();
    if emit != Emit::Em {
        for t in standard_tableaux(n, k).map_err(invalid)? {
            let v = polytabloid(&t);
            plain.push_str(&format!("e_T {t}: {}\n", plain_vector(&v)));
            entries.push(
                json!({ "kind": "eT", "tableau": TableauJson::from(&t), "vector": TabloidVectorJson::new(n, k, &v) }),
            );
        }
    }
    if emit != Emit::Et {
        for m in enumerate_standard(n, k).map_err(invalid)? {
            let v = matching_generator(&m);
            plain.push_str(&format!("e_M {m}: {}\n", plain_vector(&v)));
            entries.push(json!({
                "kind": "eM",
                "matching": MatchingJson::from(m.as_dotted()),
                "vector": TabloidVectorJson::new(n, k, &v),
            }));
        }
    }
    Ok(match format {
        Format::Json => line(&entries),
        _ => plain,
    })
}

fn top_basis(n: usize, format: Format) -> Outcome {
    let vectors = emit_top_degree_basis(n).map_err(invalid)?;
    let basis = enumerate_standard(n, n / 2).map_err(invalid)?;
    Ok(match format {
        Format::Json => line(
            &basis
                .iter()
                .zip(&vectors)
                .map(|(m, v)| json!({ "matching": MatchingJson::from(m.as_dotted()), "vector": TabloidVectorJson::new(n, n / 2, v) }))
                .collect::<Vec<_>>(),
        ),
        _ => basis.iter().zip(&vectors).map(|(m, v)| format!("{m}: {}\n", plain_vector(v))).collect(),
    })
}

fn run_verify(suites: &[Suite], max_n: usize, format: Format) -> Outcome {
    if max_n > HARD_MAX_N {
        return Err(invalid(format!("--max-n {max_n} exceeds {HARD_MAX_N}")));
    }
    if max_n > WARN_MAX_N {
        eprintln!("warning: --max-n {max_n} above {WARN_MAX_N} can take a long time");
    }
    let report = verify::run(suites, max_n);
    let text = match format {
        Format::Json => pretty(&report),
        _ => report.to_table(),
    };
    if report.passed {
        Ok(text)
    } else {
        let witnesses: Vec<Value> = report
            .failures()
            .map(|(s, c)| json!({ "suite": s, "n": c.n, "k": c.k, "detail": c.detail, "witness": c.witness }))
            .collect();
        eprint!("{}", pretty(&witnesses));
        Err(Failure::Check(text))
    }
}
