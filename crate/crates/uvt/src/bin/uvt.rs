//! Thin command-line front end: `analyze` one graph, `census` a graph6
//! file, or query a permutation `group` given by generators. All heavy
//! lifting lives in the library.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use uvt::census::{self, CensusOptions};
use uvt::classify::{self, Budgets};
use uvt::grouptheory::{self, GroupJson, PermGroup};

#[derive(Parser)]
#[command(name = "uvt", about = "Classify graphs along the Cayley / UVT / VT chain")]
struct Cli {
    /// Branch-and-bound node budget for clique searches
    #[arg(long, global = true)]
    budget_clique: Option<u64>,
    /// Node budget for k-uniform cover searches
    #[arg(long, global = true)]
    budget_cover: Option<u64>,
    /// Cap on full group-element enumeration
    #[arg(long, global = true)]
    max_group: Option<usize>,
    /// Worker threads for the census
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format for census summaries
    #[arg(long, global = true, value_parser = ["json", "csv"])]
    format: Option<String>,
    /// Cache directory for per-graph census results
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Disable the census cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph: a graph6 line or a named construction
    /// (petersen, kneser:n:k, johnson:n:k, circulant:n:a,b,..,
    /// line:<inner>, complement:<inner>)
    Analyze { input: String },
    /// Classify every graph in a graph6/sparse6 file and print summary rows
    Census {
        file: PathBuf,
        /// Write one JSON report per graph to this path
        #[arg(long)]
        log: Option<PathBuf>,
        /// Opt-in k-uniform pass with this multiplicity
        #[arg(long)]
        kuvt: Option<usize>,
    },
    /// Query a group given as JSON {degree, generators: [[images], ...]}
    Group {
        file: PathBuf,
        #[command(subcommand)]
        query: GroupQuery,
    },
}

#[derive(Subcommand)]
enum GroupQuery {
    /// Group order
    Order,
    /// Uniform-transitivity decision with witness
    Uniform,
    /// Clique number of the derangement graph minus the degree
    Omega,
    /// All nontrivial block systems
    Blocks,
    /// k-uniform transitivity decision
    Kuvt { k: usize },
}

// flags win over UVT_*-prefixed environment variables, which win over
// defaults
fn env_or<T: std::str::FromStr>(flag: Option<T>, var: &str) -> Option<T> {
    flag.or_else(|| std::env::var(var).ok().and_then(|v| v.parse().ok()))
}

fn budgets_from(cli: &Cli) -> Budgets {
    let defaults = Budgets::default();
    Budgets {
        clique_nodes: env_or(cli.budget_clique, "UVT_BUDGET_CLIQUE")
            .unwrap_or(defaults.clique_nodes),
        cover_nodes: env_or(cli.budget_cover, "UVT_BUDGET_COVER").unwrap_or(defaults.cover_nodes),
        max_group: env_or(cli.max_group, "UVT_MAX_GROUP").unwrap_or(defaults.max_group),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), Box<dyn std::error::Error>> {
    let budgets = budgets_from(cli);
    match &cli.command {
        Command::Analyze { input } => {
            let graph = census::parse_construction(input)?;
            let report = classify::classify_graph(&graph, input, &budgets);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(())
        }
        Command::Census { file, log, kuvt } => {
            let threads = env_or(cli.threads, "UVT_THREADS").unwrap_or(1);
            let no_cache = cli.no_cache || std::env::var("UVT_NO_CACHE").is_ok();
            let cache = if no_cache {
                None
            } else {
                Some(
                    env_or(cli.cache.clone(), "UVT_CACHE")
                        .unwrap_or_else(|| PathBuf::from(".uvt-cache")),
                )
            };
            let opts = CensusOptions {
                budgets,
                threads,
                cache,
                kuvt: *kuvt,
            };
            let out = census::run_census(file, &opts)?;
            if let Some(log_path) = log {
                let mut lines = String::new();
                for r in &out.reports {
                    lines.push_str(&serde_json::to_string(r)?);
                    lines.push('\n');
                }
                std::fs::write(log_path, lines)?;
            }
            let format = env_or(cli.format.clone(), "UVT_FORMAT").unwrap_or_else(|| "csv".into());
            if format == "json" {
                println!("{}", serde_json::to_string_pretty(&out.rows)?);
            } else {
                print!("{}", census::census_csv(&out.rows));
            }
            Ok(())
        }
        Command::Group { file, query } => {
            let text = std::fs::read_to_string(file)?;
            let parsed: GroupJson = serde_json::from_str(&text)?;
            let group: PermGroup = parsed.into_group()?;
            let json = run_group_query(&group, query, &budgets)?;
            println!("{}", serde_json::to_string_pretty(&json)?);
            Ok(())
        }
    }
}

fn run_group_query(
    group: &PermGroup,
    query: &GroupQuery,
    budgets: &Budgets,
) -> Result<serde_json::Value, Box<dyn std::error::Error>> {
    use serde_json::json;
    let value = match query {
        GroupQuery::Order => json!({
            "degree": group.degree(),
            "order": group.order().to_string(),
        }),
        GroupQuery::Uniform => match classify::is_uniformly_transitive(group, budgets)? {
            classify::UvtDecision::Yes(s) => json!({
                "status": "yes",
                "witness": s.perms,
            }),
            classify::UvtDecision::No { omega_id } => json!({
                "status": "no",
                "omega_id": omega_id,
            }),
            classify::UvtDecision::Inconclusive {
                lower,
                upper,
                reason,
            } => json!({
                "status": "inconclusive",
                "lower": lower,
                "upper": upper,
                "reason": reason,
            }),
        },
        GroupQuery::Omega => {
            let report = classify::omega_deficit_of_group(group, budgets)?;
            serde_json::to_value(&report)?
        }
        GroupQuery::Blocks => {
            let systems = grouptheory::all_block_systems(group)?;
            json!({
                "degree": group.degree(),
                "systems": systems
                    .iter()
                    .map(|s| json!({
                        "block_size": s.block_size(),
                        "blocks": s.blocks,
                    }))
                    .collect::<Vec<_>>(),
            })
        }
        GroupQuery::Kuvt { k } => match classify::k_uvt(group, *k, budgets)? {
            classify::KuvtDecision::Yes(s) => json!({
                "status": "yes",
                "k": k,
                "witness": s.perms,
            }),
            classify::KuvtDecision::No => json!({"status": "no", "k": k}),
            classify::KuvtDecision::Inconclusive { reason } => json!({
                "status": "inconclusive",
                "k": k,
                "reason": reason,
            }),
        },
    };
    Ok(value)
}
