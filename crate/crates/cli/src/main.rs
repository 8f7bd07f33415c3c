//! `polygroth`: build polyadic structures, check them, and compute their
//! group completions from the command line.
//!
//! Exit codes: 0 success, 1 mathematical failure (report still printed),
//! 2 usage or configuration error.

use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

use polygroth::completion::{
    build_completion, check_universal_factorization, partition_classes, render_class, BuildOptions, ClassAlgebra,
    QuerMode, TargetGroup, WellDefinedness,
};
use polygroth::products::{builtin_quiver, hetero_power};
use polygroth::table::CayleyTable;
use polygroth::worked::{recipe_by_name, AnyRecipe, StructureRecipe, RECIPES};
use polygroth::{check_total_associativity, AssocVerdict, CheckMode, PolyadicStructure, QuiverSpec, Value};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] polygroth::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use polygroth::Error as E;
        match self {
            CliError::Lib(
                E::NotAHomomorphism(_)
                | E::QuerNotFound(_)
                | E::QuerFormulaFailsVerification(_)
                | E::BoundExhausted(_)
                | E::NotFound { .. }
                | E::NotUnique(_)
                | E::TargetNotAGroup(_),
            ) => 1,
            _ => 2,
        }
    }
}

type CliResult = Result<bool, CliError>;

#[derive(Parser)]
#[command(name = "polygroth", version, about = "Polyadic semigroups and their group completions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QuerChoice {
    Componentwise,
    Post,
    Search,
}

/// `exhaustive` or `sampled:<count>:<seed>`.
fn parse_mode(s: &str) -> Result<CheckMode, String> {
    if s == "exhaustive" {
        return Ok(CheckMode::Exhaustive);
    }
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["sampled", count, seed] => {
            let count = count.parse().map_err(|_| format!("bad sample count `{count}`"))?;
            let seed = seed.parse().map_err(|_| format!("bad seed `{seed}`"))?;
            Ok(CheckMode::sampled(count, seed))
        }
        ["sampled", ..] => Err("sampled mode needs a seed: sampled:<count>:<seed>".into()),
        _ => Err(format!("expected `exhaustive` or `sampled:<count>:<seed>`, got `{s}`")),
    }
}

#[derive(Args, Clone)]
struct Common {
    /// Recipe name (see `structures list`) or `table:<path>`.
    #[arg(long)]
    structure: String,
    /// Truncation bound of the double domain.
    #[arg(long)]
    bound: Option<usize>,
    /// `exhaustive` or `sampled:<count>:<seed>`.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<CheckMode>,
    #[arg(long, value_enum)]
    output: Option<Output>,
}

#[derive(Subcommand)]
enum Command {
    /// Check total associativity of a structure or of its hetero power.
    AssocCheck {
        #[command(flatten)]
        common: Common,
        /// Built-in quiver name or serialized quiver spec.
        #[arg(long)]
        quiver: Option<String>,
    },
    /// Build the group completion and print its report.
    Complete {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        quiver: Option<String>,
        #[arg(long, value_enum)]
        quer: Option<QuerChoice>,
    },
    /// List canonical class representatives within the bound.
    Classes {
        #[command(flatten)]
        common: Common,
    },
    /// Print the quer of every class.
    Quer {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        quiver: Option<String>,
        #[arg(long, value_enum)]
        quer: Option<QuerChoice>,
    },
    /// Check that a monoid map factors through the binary completion.
    UniversalCheck {
        #[command(flatten)]
        common: Common,
        /// `integers` or `integers-mod-<k>`.
        #[arg(long, default_value = "integers")]
        target: String,
    },
    /// Built-in structures.
    Structures {
        #[command(subcommand)]
        action: StructuresAction,
    },
}

#[derive(Subcommand)]
enum StructuresAction {
    List {
        #[arg(long, value_enum)]
        output: Option<Output>,
    },
}

fn load(common: &Common) -> Result<AnyRecipe, CliError> {
    if let Some(path) = common.structure.strip_prefix("table:") {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        let name = Path::new(path)
            .file_stem()
            .map_or_else(|| "table".to_string(), |s| s.to_string_lossy().into_owned());
        let table = CayleyTable::parse(&text)?;
        return Ok(AnyRecipe::Finite(StructureRecipe::finite(table.into_structure(name))?));
    }
    Ok(recipe_by_name(&common.structure, common.bound)?)
}

fn quiver_for(arg: Option<&str>, arity: usize) -> Result<(String, QuiverSpec), CliError> {
    let name = arg.map_or_else(|| format!("componentwise-{arity}"), str::to_string);
    let q = match builtin_quiver(&name) {
        Ok(q) => q,
        Err(polygroth::Error::UnknownQuiver(_)) if name.contains("<-") => QuiverSpec::from_str(&name)?,
        Err(e) => return Err(e.into()),
    };
    if q.input_arity() != arity {
        return Err(polygroth::Error::ArityMismatch {
            expected: arity,
            got: q.input_arity(),
        }
        .into());
    }
    Ok((name, q))
}

fn quer_mode(choice: Option<QuerChoice>, quiver: &QuiverSpec, name: &str, classes: usize) -> QuerMode {
    match choice {
        Some(QuerChoice::Componentwise) => QuerMode::ComponentwiseFormula,
        Some(QuerChoice::Post) => QuerMode::PostFormula,
        Some(QuerChoice::Search) => QuerMode::Search(classes),
        None if quiver.is_componentwise() => QuerMode::ComponentwiseFormula,
        None if name == "post-ternary" => QuerMode::PostFormula,
        None => QuerMode::Search(classes),
    }
}

fn build_options(mode: Option<CheckMode>, default_samples: usize) -> BuildOptions {
    match mode {
        Some(CheckMode::Sampled { count, seed }) => BuildOptions { samples: count, seed },
        _ => BuildOptions {
            samples: default_samples,
            seed: 0,
        },
    }
}

fn print_json(v: &Json) {
    println!("{}", serde_json::to_string_pretty(v).expect("plain data serializes"));
}

fn pair<V: Value>(s: &PolyadicStructure<V>, d: &polygroth::Double<V>) -> [String; 2] {
    [s.render(&d.top), s.render(&d.bottom)]
}

fn assoc_report<W: Value>(
    s: &PolyadicStructure<W>,
    structure: &str,
    quiver: Option<&str>,
    mode: CheckMode,
    output: Output,
) -> CliResult {
    let verdict = check_total_associativity(s, mode)?;
    match output {
        Output::Text => {
            println!("structure: {structure}");
            if let Some(q) = quiver {
                println!("quiver: {q}");
            }
            println!("arity: {}", s.arity());
            println!("associativity: {verdict}");
        }
        Output::Json => {
            let counterexample = verdict.counterexample().map(|c| {
                json!({
                    "tuple": c.tuple.iter().map(|v| s.render(v)).collect::<Vec<_>>(),
                    "placements": [c.placements.0 + 1, c.placements.1 + 1],
                    "results": [s.render(&c.results.0), s.render(&c.results.1)],
                })
            });
            let (kind, count) = match &verdict {
                AssocVerdict::ProvedExhaustive { tuples } => ("proved-exhaustive", Some(*tuples)),
                AssocVerdict::PassedSampled { count } => ("passed-sampled", Some(*count as u64)),
                AssocVerdict::Failed(_) => ("failed", None),
            };
            print_json(&json!({
                "structure": structure,
                "quiver": quiver,
                "arity": s.arity(),
                "verdict": kind,
                "checked": count,
                "counterexample": counterexample,
            }));
        }
    }
    Ok(verdict.holds())
}

fn assoc_check<V: Value>(recipe: &StructureRecipe<V>, common: &Common, quiver: Option<&str>) -> CliResult {
    let s = &recipe.structure;
    let mode = common.mode.unwrap_or(if s.carrier().is_finite() {
        CheckMode::Exhaustive
    } else {
        CheckMode::sampled(1000, 0)
    });
    let output = common.output.unwrap_or(Output::Text);
    match quiver {
        None => assoc_report(s, &recipe.name, None, mode, output),
        Some(arg) => {
            let (name, q) = quiver_for(Some(arg), s.arity())?;
            let doubles = hetero_power(s, &q)?;
            assoc_report(doubles.structure(), &recipe.name, Some(&name), mode, output)
        }
    }
}

fn complete<V: Value>(recipe: &StructureRecipe<V>, common: &Common, quiver: Option<&str>, quer: Option<QuerChoice>) -> CliResult {
    let (name, q) = quiver_for(quiver, recipe.structure.arity())?;
    let mode = quer_mode(quer, &q, &name, recipe.domain().len());
    log::info!("completing {} with {name}, quer mode {mode:?}", recipe.name);
    let k = build_completion(recipe.class_space(), &q, &name, mode, build_options(common.mode, 1000))?;
    match common.output.unwrap_or(Output::Json) {
        Output::Json => println!("{}", k.to_json()),
        Output::Text => {
            let alg = &k.algebra;
            println!("K0^({},{}) of {} via {}", k.m, k.n, recipe.name, k.quiver_name);
            println!("classes: {}", k.classes().len());
            for c in k.classes() {
                println!("  {}", alg.render(&c.representative));
            }
            for qo in k.quers.iter().flatten() {
                println!("  quer {} = {}", alg.render(&qo.class), alg.render(&qo.quer));
            }
            println!("associative: {}", k.report.associative);
            println!("well-defined: {}", k.report.well_defined);
            println!("group: {}", k.report.group);
        }
    }
    Ok(k.is_group())
}

fn classes<V: Value>(recipe: &StructureRecipe<V>, common: &Common) -> CliResult {
    let space = recipe.class_space();
    let p = partition_classes(&space.base, space.domain, &space.decision, space.canonical.as_ref())?;
    let s = &recipe.structure;
    match common.output.unwrap_or(Output::Text) {
        Output::Text => {
            for c in &p.classes {
                println!("{}", render_class(s, &c.representative));
            }
        }
        Output::Json => print_json(&json!({
            "structure": recipe.name,
            "bound": recipe.limit,
            "classes": p.classes.iter().map(|c| json!({
                "rep": pair(s, &c.representative),
                "members": c.members.len(),
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(true)
}

fn quer<V: Value>(recipe: &StructureRecipe<V>, common: &Common, quiver: Option<&str>, choice: Option<QuerChoice>) -> CliResult {
    let (name, q) = quiver_for(quiver, recipe.structure.arity())?;
    let alg = ClassAlgebra::new(recipe.class_space(), q.clone())?;
    let output = common.output.unwrap_or(Output::Text);
    let opts = build_options(common.mode, 1000);
    if let WellDefinedness::Counterexample(c) = alg.check_well_definedness(opts.samples, opts.seed)? {
        match output {
            Output::Text => println!("class product via {name} is not well defined: {c}"),
            Output::Json => print_json(&json!({ "structure": recipe.name, "quiver": name, "well_defined": c.to_string() })),
        }
        return Ok(false);
    }
    let mode = quer_mode(choice, &q, &name, alg.partition().len());
    let reps: Vec<_> = alg.partition().representatives().cloned().collect();
    let mut rows = Vec::with_capacity(reps.len());
    for c in &reps {
        rows.push(alg.quer(c, mode)?);
    }
    let s = alg.base();
    match output {
        Output::Text => {
            for r in &rows {
                let slots: String = r.slots.iter().map(|&ok| if ok { '+' } else { '-' }).collect();
                println!("{} -> {}  slots {slots}", alg.render(&r.class), alg.render(&r.quer));
            }
        }
        Output::Json => print_json(&json!({
            "structure": recipe.name,
            "quiver": name,
            "quer": rows.iter().map(|r| json!({
                "class": pair(s, &r.class),
                "quer": pair(s, &r.quer),
                "slots": r.slots,
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(true)
}

fn universal<V: Value>(
    recipe: &StructureRecipe<V>,
    common: &Common,
    target_name: &str,
    phi: Arc<dyn Fn(&V) -> BigInt + Send + Sync>,
) -> CliResult {
    if recipe.structure.arity() != 2 {
        return Err(CliError::Usage(format!(
            "universal-check needs a binary structure; {} is {}-ary",
            recipe.name,
            recipe.structure.arity()
        )));
    }
    let target = TargetGroup::from_str(target_name).map_err(|e| CliError::Usage(e.to_string()))?;
    let (name, q) = quiver_for(None, 2)?;
    let k = build_completion(recipe.class_space(), &q, &name, QuerMode::ComponentwiseFormula, build_options(None, 1000))?;
    let opts = build_options(common.mode, 100);
    let outcome = if k.is_group() {
        check_universal_factorization(&k, &target, phi, opts.samples, opts.seed).map(|v| v.samples)
    } else {
        Err(polygroth::Error::TargetNotAGroup(format!("completion of {} is {}", recipe.name, k.report.group)))
    };
    let (ok, detail) = match outcome {
        Ok(n) => (true, format!("verified on {n} samples")),
        Err(e @ (polygroth::Error::NotAHomomorphism(_) | polygroth::Error::TargetNotAGroup(_))) => (false, e.to_string()),
        Err(e) => return Err(e.into()),
    };
    match common.output.unwrap_or(Output::Text) {
        Output::Text => println!("factorization of {} through {target_name}: {detail}", recipe.name),
        Output::Json => print_json(&json!({
            "structure": recipe.name,
            "target": target_name,
            "holds": ok,
            "detail": detail,
        })),
    }
    Ok(ok)
}

fn structures_list(output: Option<Output>) -> CliResult {
    match output.unwrap_or(Output::Text) {
        Output::Text => {
            for (name, about, bound) in RECIPES {
                println!("{name:<14} bound {bound:<4} {about}");
            }
        }
        Output::Json => print_json(&json!(RECIPES
            .iter()
            .map(|(name, about, bound)| json!({ "name": name, "description": about, "default_bound": bound }))
            .collect::<Vec<_>>())),
    }
    Ok(true)
}

macro_rules! with_recipe {
    ($recipe:expr, $r:ident => $body:expr) => {
        match $recipe {
            AnyRecipe::Integer($r) => $body,
            AnyRecipe::Complex($r) => $body,
            AnyRecipe::Finite($r) => $body,
        }
    };
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::AssocCheck { common, quiver } => {
            with_recipe!(load(&common)?, r => assoc_check(&r, &common, quiver.as_deref()))
        }
        Command::Complete { common, quiver, quer } => {
            with_recipe!(load(&common)?, r => complete(&r, &common, quiver.as_deref(), quer))
        }
        Command::Classes { common } => with_recipe!(load(&common)?, r => classes(&r, &common)),
        Command::Quer { common, quiver, quer: choice } => {
            with_recipe!(load(&common)?, r => quer(&r, &common, quiver.as_deref(), choice))
        }
        Command::UniversalCheck { common, target } => match load(&common)? {
            AnyRecipe::Integer(r) => universal(&r, &common, &target, Arc::new(|v: &BigInt| v.clone())),
            AnyRecipe::Finite(r) => universal(&r, &common, &target, Arc::new(|v: &u32| BigInt::from(*v))),
            AnyRecipe::Complex(r) => Err(CliError::Usage(format!("{} has no integer-valued monoid map", r.name))),
        },
        Command::Structures {
            action: StructuresAction::List { output },
        } => structures_list(output),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("POLYGROTH_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("POLYGROTH_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
