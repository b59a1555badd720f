//! Command-line front end. [`run`] does all the work and returns the
//! captured output so it can be tested without spawning a process.
//!
//! Exit codes: 0 feasible (or success), 1 self-check failure, 2 usage or
//! input error, 3 infeasible.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{parse_graph, parse_weights, Family, Graph};
use crate::landmark::{check_landmarks, is_landmark_set, Method, Model, ProblemSpec, Solution};
use crate::oracle::Oracle;
use crate::weights::{format_ratio, Weights};
use crate::wheel::{
    self, check_condition, cycle_bits, cyclic_string_is_valid, derive_boundary_sets, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CliOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CliOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "kmetric", version, about = "Minimum k-redundant landmark sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a minimum-weight landmark set.
    Solve(SolveArgs),
    /// Check whether a given set is a landmark set.
    Verify(VerifyArgs),
    /// Print minimum cardinalities (unit weights) over a range of n.
    Table(TableArgs),
    /// Run the built-in consistency checks.
    Selfcheck,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyName {
    Path,
    Clique,
    Bipartite,
    Wheel,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
enum MethodArg {
    #[default]
    Auto,
    ClosedForm,
    Dp,
    Oracle,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    #[arg(long, value_enum, conflicts_with = "graph")]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    /// Size of the first part of a complete bipartite graph.
    #[arg(long)]
    a: Option<usize>,
    /// Size of the second part of a complete bipartite graph.
    #[arg(long)]
    b: Option<usize>,
    /// Edge-list file: header "n m", then one "u v" per line.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ProblemArgs {
    #[arg(long)]
    k: usize,
    /// ap (all pairs) or nl (non-landmarks).
    #[arg(long, value_parser = parse_model)]
    model: Model,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    problem: ProblemArgs,
    /// One decimal weight per line.
    #[arg(long)]
    weights: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    method: MethodArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    problem: ProblemArgs,
    /// Comma-separated 0-based vertex ids.
    #[arg(long, allow_hyphen_values = true)]
    landmarks: String,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[command(flatten)]
    problem: ProblemArgs,
    /// Inclusive range of n, as `a..b` or `a-b`.
    #[arg(long, value_parser = parse_range)]
    range: RangeInclusive<usize>,
    /// First part size for bipartite tables (b = n - a).
    #[arg(long)]
    a: Option<usize>,
}

fn parse_model(s: &str) -> std::result::Result<Model, String> {
    s.parse::<Model>().map_err(|e| e.to_string())
}

fn parse_landmarks(s: &str) -> std::result::Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a vertex id"))
        })
        .collect()
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..")
        .or_else(|| s.split_once('-'))
        .ok_or_else(|| format!("`{s}` is not a range like 5..9"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: usize = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct SolveJson<'a> {
    status: &'a str,
    n: usize,
    k: usize,
    model: &'a str,
    method: &'a str,
    cardinality: Option<usize>,
    weight: Option<String>,
    landmarks: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ViolationJson {
    u: usize,
    v: usize,
    separations: usize,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    feasible: bool,
    n: usize,
    k: usize,
    model: &'a str,
    violation: Option<ViolationJson>,
    min_separations: Option<usize>,
}

enum Instance {
    Family(Family),
    Custom(Graph),
}

impl Instance {
    fn order(&self) -> usize {
        match self {
            Instance::Family(f) => f.order().unwrap_or(0),
            Instance::Custom(g) => g.order(),
        }
    }

    fn graph(&self) -> Result<Graph> {
        match self {
            Instance::Family(f) => Graph::from_family(*f),
            Instance::Custom(g) => Ok(g.clone()),
        }
    }
}

fn family_of(
    name: FamilyName,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
) -> std::result::Result<Family, String> {
    let need_n = || n.ok_or_else(|| "--n is required for this family".to_string());
    Ok(match name {
        FamilyName::Path => Family::Path(need_n()?),
        FamilyName::Clique => Family::Clique(need_n()?),
        FamilyName::Wheel => Family::Wheel(need_n()?),
        FamilyName::Bipartite => match (a, b, n) {
            (Some(a), Some(b), _) => Family::Bipartite(a, b),
            (Some(a), None, Some(n)) if n > a => Family::Bipartite(a, n - a),
            _ => return Err("--a and --b are required for bipartite graphs".into()),
        },
    })
}

fn load_instance(args: &InstanceArgs) -> std::result::Result<Instance, String> {
    match (&args.graph, args.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let g = parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(Instance::Custom(g))
        }
        (None, Some(name)) => {
            let family = family_of(name, args.n, args.a, args.b)?;
            match family {
                Family::Path(n) | Family::Clique(n) if n < 2 => {
                    Err(format!("{family} needs n >= 2"))
                }
                Family::Wheel(n) if n < 4 => Err(format!("{family} needs n >= 4")),
                Family::Bipartite(a, b) if a == 0 || b == 0 || a + b < 3 => {
                    Err(format!("{family} needs a, b >= 1 and a + b >= 3"))
                }
                _ => Ok(Instance::Family(family)),
            }
        }
        (None, None) => Err("one of --family or --graph is required".into()),
    }
}

/// Parses arguments (the first item is the program name) and runs the
/// command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput::ok(EXIT_OK, text)
                }
                _ => CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Selfcheck => cmd_selfcheck(),
    }
}

fn solve_instance(
    instance: &Instance,
    spec: &ProblemSpec,
    method: MethodArg,
) -> std::result::Result<Solution, String> {
    let result = match (method, instance) {
        (MethodArg::Oracle, _) | (MethodArg::Auto, Instance::Custom(_)) => {
            let g = instance.graph().map_err(|e| e.to_string())?;
            Oracle::default().min_weight(&g, spec)
        }
        (MethodArg::Auto, Instance::Family(f)) => crate::solve(*f, spec),
        (MethodArg::ClosedForm, Instance::Family(f)) => {
            let sol = crate::solve(*f, spec).map_err(|e| e.to_string())?;
            if sol.method() != Method::ClosedForm {
                return Err(format!(
                    "no closed form for {f} with k = {}, model {}; it is solved by {}",
                    spec.k,
                    spec.model,
                    sol.method().as_str()
                ));
            }
            Ok(sol)
        }
        (MethodArg::Dp, Instance::Family(Family::Wheel(n))) if *n >= 9 => {
            match Variant::for_problem(spec.model, spec.k) {
                Some(variant) => spec
                    .weights_for(*n)
                    .and_then(|w| wheel::wheel_dp(*n, variant, &w)),
                None => {
                    return Err(format!(
                        "the DP does not cover k = {} with model {}",
                        spec.k, spec.model
                    ))
                }
            }
        }
        (MethodArg::Dp, _) => return Err("the DP method needs --family wheel with n >= 9".into()),
        (MethodArg::ClosedForm, Instance::Custom(_)) => {
            return Err("custom graphs have no closed form; use --method oracle".into())
        }
    };
    result.map_err(|e| e.to_string())
}

fn cmd_solve(args: &SolveArgs) -> CliOutput {
    let instance = match load_instance(&args.instance) {
        Ok(i) => i,
        Err(e) => return CliOutput::usage(e),
    };
    let n = instance.order();
    let mut spec = match ProblemSpec::new(args.problem.model, args.problem.k) {
        Ok(s) => s,
        Err(e) => return CliOutput::usage(e),
    };
    if let Some(path) = &args.weights {
        let weights = fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|text| {
                parse_weights(&text, n).map_err(|e| format!("{}: {e}", path.display()))
            });
        match weights {
            Ok(w) => spec = spec.with_weights(w),
            Err(e) => return CliOutput::usage(e),
        }
    }
    let sol = match solve_instance(&instance, &spec, args.method) {
        Ok(s) => s,
        Err(e) => return CliOutput::usage(e),
    };
    let json = SolveJson {
        status: if sol.is_feasible() {
            "feasible"
        } else {
            "infeasible"
        },
        n,
        k: spec.k,
        model: spec.model.as_str(),
        method: sol.method().as_str(),
        cardinality: sol.cardinality(),
        weight: sol.weight().map(|w| format_ratio(&w)),
        landmarks: sol.landmarks().map(<[usize]>::to_vec),
    };
    let code = if sol.is_feasible() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    CliOutput::ok(code, to_json_line(&json))
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain structs serialize");
    s.push('\n');
    s
}

fn cmd_verify(args: &VerifyArgs) -> CliOutput {
    let graph =
        match load_instance(&args.instance).and_then(|i| i.graph().map_err(|e| e.to_string())) {
            Ok(g) => g,
            Err(e) => return CliOutput::usage(e),
        };
    let n = graph.order();
    let landmarks: Vec<usize> = match parse_landmarks(&args.landmarks) {
        Ok(list) => list
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        Err(e) => return CliOutput::usage(e),
    };
    if let Some(&v) = landmarks.iter().find(|&&v| v >= n) {
        return CliOutput::usage(Error::VertexOutOfRange { vertex: v, n });
    }
    if args.problem.k == 0 {
        return CliOutput::usage("k must be at least 1");
    }
    let d = graph.distances();
    let report = match check_landmarks(&d, &landmarks, args.problem.model, args.problem.k) {
        Ok(r) => r,
        Err(e) => return CliOutput::usage(e),
    };
    let json = VerifyJson {
        feasible: report.feasible,
        n,
        k: args.problem.k,
        model: args.problem.model.as_str(),
        violation: report.violation.map(|v| ViolationJson {
            u: v.u,
            v: v.v,
            separations: v.separations,
        }),
        min_separations: report.min_separations,
    };
    let code = if report.feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    CliOutput::ok(code, to_json_line(&json))
}

fn cmd_table(args: &TableArgs) -> CliOutput {
    let spec = match ProblemSpec::new(args.problem.model, args.problem.k) {
        Ok(s) => s,
        Err(e) => return CliOutput::usage(e),
    };
    let mut out = String::new();
    for n in args.range.clone() {
        let family = match family_of(args.family, Some(n), args.a, None) {
            Ok(f) => f,
            Err(e) => return CliOutput::usage(e),
        };
        match crate::solve(family, &spec) {
            Ok(sol) => match sol.cardinality() {
                Some(c) => writeln!(out, "{n}\t{c}").unwrap(),
                None => writeln!(out, "{n}\tinf").unwrap(),
            },
            Err(e) => return CliOutput::usage(format!("n = {n}: {e}")),
        }
    }
    CliOutput::ok(EXIT_OK, out)
}

struct Report {
    text: String,
    failures: usize,
}

impl Report {
    fn check(&mut self, name: &str, ok: bool) {
        let tag = if ok { "ok  " } else { "FAIL" };
        writeln!(self.text, "{tag} {name}").unwrap();
        if !ok {
            self.failures += 1;
        }
    }
}

fn texts(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn cmd_selfcheck() -> CliOutput {
    let mut r = Report {
        text: String::new(),
        failures: 0,
    };
    let oracle = Oracle::default();

    let ap2: Vec<String> = (0..16u32)
        .filter(|m| m.count_ones() >= 2)
        .map(|m| wheel::strings::mask_to_string(m, 4))
        .collect();
    let ap2: Vec<&str> = ap2.iter().map(String::as_str).collect();
    let listed = [
        (Variant::ApK2, texts(&ap2)),
        (
            Variant::ApK3,
            texts(&["1111", "1110", "1101", "1011", "0111"]),
        ),
        (
            Variant::NlK2,
            texts(&["111", "110", "101", "100", "011", "010", "001"]),
        ),
        (Variant::NlK34, texts(&["11", "10", "01"])),
    ];
    for (variant, expected) in &listed {
        let sets = derive_boundary_sets(*variant);
        r.check(
            &format!("boundary strings {variant}"),
            sets.string_texts() == *expected,
        );
        r.check(
            &format!("at most 11 boundary strings {variant}"),
            sets.strings.len() <= 11,
        );
    }
    let pairs: BTreeSet<(String, String)> = [
        ("11", "11"),
        ("11", "10"),
        ("11", "01"),
        ("10", "11"),
        ("10", "01"),
        ("01", "11"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    r.check(
        "boundary pairs NL k=3,4",
        derive_boundary_sets(Variant::NlK34).pair_texts() == pairs,
    );

    for n in 9..=11 {
        let g = Graph::wheel(n).expect("n >= 4");
        let d = g.distances();
        for variant in Variant::ALL {
            let agree = (0..1u32 << (n - 1)).all(|mask| {
                let set: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).collect();
                let by_window = cyclic_string_is_valid(variant, &cycle_bits(&set, n));
                let by_condition = check_condition(variant, &set, n).unwrap_or(false);
                let by_distance = variant
                    .ks()
                    .iter()
                    .all(|&k| is_landmark_set(&d, &set, variant.model(), k) == by_window);
                by_window == by_condition && by_distance
            });
            r.check(
                &format!("window rule = local condition = distances, wheel n={n} {variant}"),
                agree,
            );
        }
    }

    let same_weight = |family: Family, spec: &ProblemSpec| -> bool {
        let fast = crate::solve(family, spec);
        let slow = Graph::from_family(family).and_then(|g| oracle.min_weight(&g, spec));
        matches!((fast, slow), (Ok(a), Ok(b)) if a.weight() == b.weight())
    };
    for model in Model::BOTH {
        let path_ok =
            (1..=10).all(|k| same_weight(Family::Path(9), &ProblemSpec::new(model, k).unwrap()));
        r.check(&format!("path n=9 all k {model}: solver = oracle"), path_ok);
        let complete_ok = (1..=7).all(|k| {
            let spec = ProblemSpec::new(model, k).unwrap();
            same_weight(Family::Clique(6), &spec) && same_weight(Family::Bipartite(3, 4), &spec)
        });
        r.check(
            &format!("clique n=6 and K(3,4) all k {model}: solver = oracle"),
            complete_ok,
        );
    }
    for variant in Variant::ALL {
        let ok = (9..=11).all(|n| {
            variant.ks().iter().all(|&k| {
                let spec = ProblemSpec::new(variant.model(), k).unwrap();
                let weights = Weights::from_integers(
                    &(0..n as u64).map(|i| 1 + (i * 7) % 5).collect::<Vec<_>>(),
                );
                same_weight(Family::Wheel(n), &spec.with_weights(weights))
            })
        });
        r.check(&format!("wheel n=9..11 {variant}: DP = oracle"), ok);
    }

    let summary = if r.failures == 0 {
        "all checks passed\n".to_string()
    } else {
        format!("{} checks failed\n", r.failures)
    };
    r.text.push_str(&summary);
    let code = if r.failures == 0 {
        EXIT_OK
    } else {
        EXIT_SELFCHECK
    };
    CliOutput::ok(code, r.text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> CliOutput {
        run(std::iter::once("kmetric").chain(args.split_whitespace()))
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..9").unwrap(), 5..=9);
        assert_eq!(parse_range("5-9").unwrap(), 5..=9);
        assert_eq!(parse_range("5..=9").unwrap(), 5..=9);
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn landmark_lists() {
        assert_eq!(parse_landmarks("0, 2,4").unwrap(), vec![0, 2, 4]);
        assert!(parse_landmarks("0,-1").is_err());
        assert_eq!(parse_landmarks("").unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn solve_wheel() {
        let out = run_args("solve --family wheel --n 9 --k 2 --model ap");
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with(r#"{"status":"feasible","n":9,"k":2,"model":"ap","method":"dp","cardinality":4,"weight":"4/1""#));
    }

    #[test]
    fn verify_path_ends() {
        let out = run_args("verify --family path --n 5 --k 2 --model ap --landmarks 0,4");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with(r#"{"feasible":true"#));
        assert_eq!(
            run_args("verify --family path --n 5 --k 2 --model ap --landmarks 0,7").code,
            EXIT_USAGE
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run_args("solve --family wheel --k 2 --model ap").code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args("solve --family wheel --n 9 --k 2 --model xx").code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args("solve --family path --n 9 --k 2 --model ap --method dp").code,
            EXIT_USAGE
        );
        assert_eq!(run_args("frobnicate").code, EXIT_USAGE);
        assert_eq!(run_args("--help").code, EXIT_OK);
    }
}
