//! Command-line front end. Reports are rendered either as JSON with the
//! fixed top-level keys `command`, `input`, `result`, `timing_ms`, or as a
//! fixed-width two-column table.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::density::{self, CatalogEntry, SearchLimits};
use crate::error::{Error, Result};
use crate::orbits;
use crate::parabolic::{self, sorted_coordinates};
use crate::rootset::RootSet;
use crate::rootsys::{build_root_system, RootDatum, TypeLabel};
use crate::sympair::{cartan_decomposition, CartanDecomposition, InvolutionSpec};
use crate::weyl::DEFAULT_GROUP_GUARD;

#[derive(Debug, Parser)]
#[command(
    name = "flagpair",
    version,
    about = "Parabolic pairs and closed orbits for symmetric pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root system summary.
    Roots(TypeArgs),
    /// Cartan decomposition of a grading.
    Pair(GradedArgs),
    /// Exhaustive check that no parabolic pair satisfies the condition.
    VerifyNonhermitian {
        #[command(flatten)]
        graded: GradedArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Exhaustive search and classification of satisfying pairs.
    ClassifyPairs {
        #[command(flatten)]
        graded: GradedArgs,
        /// Compact simple roots (1-based, as listed by `pair`) spanning the
        /// Levi of q; "" is the Borel b_K. Omit to search every q.
        #[arg(long, value_parser = parse_index_list)]
        q: Option<IndexList>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Closed K-orbits on G/P1 x G/P2.
    CountOrbits {
        #[command(flatten)]
        graded: GradedArgs,
        /// Simple roots (1-based) defining P1; "" is the Borel.
        #[arg(long, value_parser = parse_index_list)]
        p1: IndexList,
        /// Simple roots (1-based) defining P2; "" is the Borel.
        #[arg(long, value_parser = parse_index_list)]
        p2: IndexList,
        /// Maximum coset-space size.
        #[arg(long, default_value_t = DEFAULT_GROUP_GUARD)]
        guard: u128,
    },
    /// Hermitian check, classification for q = b_K and orbit counts in one report.
    SeedReport {
        #[command(flatten)]
        graded: GradedArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, default_value_t = DEFAULT_GROUP_GUARD)]
        guard: u128,
    },
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Type label, one of A-G.
    #[arg(value_parser = parse_type_label)]
    type_label: TypeLabel,
    rank: usize,
}

#[derive(Debug, Args)]
struct GradedArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Comma list of 0/1 over the simple roots (1 = noncompact).
    #[arg(long, value_parser = parse_grading)]
    grading: Grading,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = parabolic::DEFAULT_PARABOLIC_GUARD)]
    parabolic_guard: u128,
    #[arg(long, default_value_t = SearchLimits::default().pair_guard)]
    pair_guard: u128,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            parabolic_guard: self.parabolic_guard,
            pair_guard: self.pair_guard,
        }
    }
}

#[derive(Debug, Clone)]
struct Grading(Vec<u8>);

/// Zero-based indices parsed from a 1-based comma list.
#[derive(Debug, Clone)]
struct IndexList(Vec<usize>);

fn parse_type_label(s: &str) -> std::result::Result<TypeLabel, String> {
    s.parse::<TypeLabel>().map_err(|e| e.to_string())
}

fn parse_grading(s: &str) -> std::result::Result<Grading, String> {
    s.split(',')
        .map(|t| match t.trim() {
            "0" => Ok(0),
            "1" => Ok(1),
            other => Err(format!("grading entries must be 0 or 1, got {other:?}")),
        })
        .collect::<std::result::Result<Vec<u8>, String>>()
        .map(Grading)
}

fn parse_index_list(s: &str) -> std::result::Result<IndexList, String> {
    if s.trim().is_empty() {
        return Ok(IndexList(Vec::new()));
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(format!("expected a 1-based index, got {:?}", t.trim())),
        })
        .collect::<std::result::Result<Vec<usize>, String>>()
        .map(IndexList)
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    input: Value,
    result: Value,
    timing_ms: u64,
}

/// Parse `argv` (including the program name) and execute it.
///
/// Exit codes: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                RunOutcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    let (name, input, result) = match execute(&cli.command) {
        Ok(v) => v,
        Err(e) => {
            return RunOutcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {}: {}\n", e.name(), e),
            }
        }
    };
    let envelope = Envelope {
        command: name,
        input,
        result,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    let rendered = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&envelope).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Table => render_table(&envelope),
    };
    match cli.out {
        Some(path) => match std::fs::write(&path, &rendered) {
            Ok(()) => RunOutcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => RunOutcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: Io: cannot write {}: {e}\n", path.display()),
            },
        },
        None => RunOutcome {
            code: 0,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}

fn execute(cmd: &Command) -> Result<(&'static str, Value, Value)> {
    match cmd {
        Command::Roots(t) => {
            let d = build_root_system(t.type_label, t.rank)?;
            Ok(("roots", type_input(t), roots_result(&d)))
        }
        Command::Pair(g) => {
            let d = build_root_system(g.ty.type_label, g.ty.rank)?;
            let dec = decompose(&d, g)?;
            Ok(("pair", graded_input(g), pair_result(&dec)))
        }
        Command::VerifyNonhermitian { graded, limits } => {
            let d = build_root_system(graded.ty.type_label, graded.ty.rank)?;
            let dec = decompose(&d, graded)?;
            let rep = density::verify_no_pairs(&dec, limits.limits())?;
            let result = json!({
                "hermitian": dec.is_hermitian(),
                "delta_k_type": dec.delta_k_type(),
                "no_pairs": rep.no_pairs,
                "pairs_checked": rep.pairs_checked as u64,
                "parabolic_subsets": rep.parabolic_subsets,
                "satisfying_pairs": rep.satisfying_pairs,
                "witness": rep.witness.as_ref().map(|w| entry_json(&d, w)),
            });
            Ok(("verify-nonhermitian", graded_input(graded), result))
        }
        Command::ClassifyPairs { graded, q, limits } => {
            let d = build_root_system(graded.ty.type_label, graded.ty.rank)?;
            let dec = decompose(&d, graded)?;
            let qk = match q {
                Some(list) => Some(dec.standard_compact_parabolic(&list.0)?),
                None => None,
            };
            let cat = density::search_satisfying_pairs(&dec, qk.as_ref(), limits.limits())?;
            let pairs: Vec<Value> = cat.entries().map(|e| entry_json(&d, e)).collect();
            let result = json!({
                "hermitian": dec.is_hermitian(),
                "delta_k_type": dec.delta_k_type(),
                "q": qk.as_ref().map(|s| sorted_coordinates(&d, s)),
                "parabolic_subsets": cat.parabolic_subsets,
                "pairs_checked": cat.pairs_checked as u64,
                "ordered_pairs": cat.total(),
                "type1": cat.type1_pairs.len(),
                "type2": cat.type2_pairs.len(),
                "unmatched": cat.unmatched.len(),
                "pairs": pairs,
            });
            let mut input = graded_input(graded);
            input["q"] = q.as_ref().map(|l| one_based(&l.0)).into();
            Ok(("classify-pairs", input, result))
        }
        Command::CountOrbits {
            graded,
            p1,
            p2,
            guard,
        } => {
            let d = build_root_system(graded.ty.type_label, graded.ty.rank)?;
            let dec = decompose(&d, graded)?;
            let rep = orbits::count_closed_orbits_double_guarded(&dec, &p1.0, &p2.0, *guard)?;
            let result = orbit_json(&dec, &rep);
            let mut input = graded_input(graded);
            input["p1"] = one_based(&p1.0).into();
            input["p2"] = one_based(&p2.0).into();
            Ok(("count-orbits", input, result))
        }
        Command::SeedReport {
            graded,
            limits,
            guard,
        } => {
            let d = build_root_system(graded.ty.type_label, graded.ty.rank)?;
            let dec = decompose(&d, graded)?;
            let result = seed_report(&dec, limits.limits(), *guard)?;
            Ok(("seed-report", graded_input(graded), result))
        }
    }
}

fn decompose<'a>(d: &'a RootDatum, g: &GradedArgs) -> Result<CartanDecomposition<'a>> {
    cartan_decomposition(d, &InvolutionSpec::from_grading(&g.grading.0))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn type_input(t: &TypeArgs) -> Value {
    json!({ "type": t.type_label.to_string(), "rank": t.rank })
}

fn graded_input(g: &GradedArgs) -> Value {
    let mut v = type_input(&g.ty);
    v["grading"] = g.grading.0.clone().into();
    v
}

fn coords_of(d: &RootDatum, roots: &[usize]) -> Vec<Vec<i64>> {
    roots.iter().map(|&r| d.root(r).to_vec()).collect()
}

fn roots_result(d: &RootDatum) -> Value {
    let positive: Vec<Vec<i64>> = d
        .positive_roots()
        .iter()
        .map(|r| d.root(r).to_vec())
        .collect();
    json!({
        "type_label": d.type_label().to_string(),
        "rank": d.rank(),
        "cartan_matrix": d.cartan_matrix(),
        "root_count": d.num_roots(),
        "positive_count": d.positive_count(),
        "weyl_order": d.cartan_type().weyl_order() as u64,
        "positive_roots": positive,
    })
}

fn set_size(s: Option<&RootSet>) -> Value {
    s.map(|s| s.len()).into()
}

fn pair_result(dec: &CartanDecomposition<'_>) -> Value {
    let d = dec.base();
    let factors: Vec<String> = dec
        .factor_partition()
        .iter()
        .map(|block| {
            let simple: Vec<usize> = dec
                .compact_simple()
                .iter()
                .copied()
                .filter(|&r| block.contains(r))
                .collect();
            d.subsystem_type_label(&simple)
        })
        .collect();
    json!({
        "hermitian": dec.is_hermitian(),
        "center_dim": dec.center_dim(),
        "s_component_count": dec.s_component_count(),
        "delta_k_type": dec.delta_k_type(),
        "delta_k_size": dec.delta_k().len(),
        "delta_s_size": dec.delta_s().len(),
        "s_plus_size": set_size(dec.s_plus()),
        "s_minus_size": set_size(dec.s_minus()),
        "compact_simple": coords_of(d, dec.compact_simple()),
        "factors": factors,
        "center_functional": dec.center_functional(),
        "s_plus": dec.s_plus().map(|s| sorted_coordinates(d, s)),
    })
}

fn entry_json(d: &RootDatum, e: &CatalogEntry) -> Value {
    json!({
        "p1": e.p1.coordinate_list(d),
        "p2": e.p2.coordinate_list(d),
        "q": sorted_coordinates(d, &e.q_roots),
        "tag": e.tag,
        "sign": e.note.sign,
        "orientation": e.note.orientation,
        "swapped": e.note.swapped,
    })
}

fn orbit_json(dec: &CartanDecomposition<'_>, rep: &orbits::OrbitCountReport) -> Value {
    json!({
        "delta_k_type": dec.delta_k_type(),
        "equal_rank": rep.equal_rank,
        "p1": one_based(&rep.j1),
        "p2": one_based(&rep.j2),
        "count1": rep.count1,
        "count2": rep.count2,
        "product": rep.product as u64,
    })
}

fn seed_report(dec: &CartanDecomposition<'_>, limits: SearchLimits, guard: u128) -> Result<Value> {
    let d = dec.base();
    let mut out = json!({
        "hermitian": dec.is_hermitian(),
        "center_dim": dec.center_dim(),
        "s_component_count": dec.s_component_count(),
        "delta_k_type": dec.delta_k_type(),
        "classification": Value::Null,
        "orbit_counts": Value::Null,
    });
    if !dec.is_hermitian() {
        return Ok(out);
    }
    let bk = dec.compact_positive();
    let cat = density::search_satisfying_pairs(dec, Some(&bk), limits)?;
    out["classification"] = json!({
        "q": sorted_coordinates(d, &bk),
        "ordered_pairs": cat.total(),
        "type1": cat.type1_pairs.len(),
        "type2": cat.type2_pairs.len(),
        "unmatched": cat.unmatched.len(),
    });
    let (p1, p2) = density::construct_type1(dec, &bk, crate::sympair::Sign::Plus)?;
    let j1 = p1
        .standard_form()
        .map(|s| s.j.clone())
        .ok_or(Error::NotParabolic)?;
    let j2 = p2
        .standard_form()
        .map(|s| s.j.clone())
        .ok_or(Error::NotParabolic)?;
    let rep = orbits::count_closed_orbits_double_guarded(dec, &j1, &j2, guard)?;
    let mut counts = orbit_json(dec, &rep);
    counts["pair"] = json!({
        "p1": p1.coordinate_list(d),
        "p2": p2.coordinate_list(d),
    });
    out["orbit_counts"] = counts;
    Ok(out)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, val, rows);
            }
        }
        Value::Array(items) if !is_flat(v) => {
            for (i, val) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), val, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar_text(other))),
    }
}

fn render_table(env: &Envelope<'_>) -> String {
    let mut rows = vec![("command".to_string(), env.command.to_string())];
    flatten("input", &env.input, &mut rows);
    flatten("result", &env.result, &mut rows);
    rows.push(("timing_ms".to_string(), env.timing_ms.to_string()));
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}
