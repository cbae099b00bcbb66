mod cache;
mod matroid_file;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use primzono::{
    construct_dk, delta_2k_capped, enumerate_generators, enumerate_vertices, grid_size,
    multicriteria_solve, skeleton_diameter_of_records, CountingOracle, Error, GeneratorSet,
    IntVec, Norm, Objective, Result, VertexRecord, ZonotopeSummary, DEFAULT_BASIS_CAP,
    DEFAULT_GENERATOR_CAP, DEFAULT_VERTEX_CAP,
};

#[derive(Parser)]
#[command(name = "primzono", version, about = "Primitive zonotopes: generators, vertices, diameters, and multicriteria matroid optimization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the primitive generator set of the selected family
    Generators(FamilyArgs),
    /// Enumerate all vertices with sign vectors and witness normals
    Vertices(VertexArgs),
    /// Vertex count, skeleton diameter, and grid embedding size
    Summary(VertexArgs),
    /// One certified diameter lower-bound record
    Delta(DeltaArgs),
    /// The largest-diameter lattice polygon table up to --kmax
    DeltaTable(DeltaTableArgs),
    /// Solve a convex multicriteria matroid problem via greedy counterparts
    MatroidSolve(MatroidArgs),
    /// Run the baked-in reference checks
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Ambient dimension d
    #[arg(short = 'd', long = "dim")]
    dim: usize,
    /// Norm bound p
    #[arg(short = 'p', long = "norm-bound")]
    norm_bound: u64,
    /// Norm selector q: a positive integer or "inf"
    #[arg(short = 'q', long = "norm", default_value = "inf")]
    norm: String,
    /// Use the positive family (componentwise nonnegative generators)
    #[arg(long)]
    positive: bool,
    /// Output format
    #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
    format: String,
    /// Abort if the generator count exceeds this cap
    #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
    generator_cap: usize,
}

#[derive(Args)]
struct VertexArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Cache directory (default: $PRIMZONO_CACHE, then ~/.cache/primzono)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the on-disk cache entirely
    #[arg(long)]
    no_cache: bool,
    /// Abort if the vertex count exceeds this cap
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct DeltaArgs {
    /// Ambient dimension d
    #[arg(short = 'd', long = "dim")]
    dim: usize,
    /// Grid size k
    #[arg(short = 'k', long)]
    k: i64,
    #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
    format: String,
}

#[derive(Args)]
struct DeltaTableArgs {
    /// Largest k to tabulate
    #[arg(long)]
    kmax: u64,
    #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
    format: String,
}

#[derive(Args)]
struct MatroidArgs {
    /// Matroid spec file (uniform / graphic / explicit)
    #[arg(long)]
    matroid: PathBuf,
    /// Weights CSV, d rows by n columns with entries in {0,…,p}
    #[arg(long)]
    weights: PathBuf,
    /// Norm bound p of the weighting
    #[arg(short = 'p', long = "norm-bound")]
    norm_bound: u64,
    /// Built-in convex objective
    #[arg(long, value_parser = ["squared-norm", "max-coordinate", "linear"], default_value = "squared-norm")]
    objective: String,
    /// Coefficients for --objective linear, comma-separated
    #[arg(long)]
    linear: Option<String>,
    /// Cross-check the result against exhaustive basis enumeration
    #[arg(long)]
    verify_bruteforce: bool,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Include the long-running checks (m(5,1), ~half an hour)
    #[arg(long)]
    long: bool,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn set_threads(threads: Option<usize>) {
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
}

fn family(args: &FamilyArgs) -> Result<GeneratorSet> {
    let q = Norm::parse(&args.norm)?;
    enumerate_generators(args.dim, args.norm_bound, q, args.positive, args.generator_cap)
}

/// Enumerate vertices, consulting and refreshing the cache when enabled.
fn vertices_cached(args: &VertexArgs, g: &GeneratorSet) -> Result<Vec<VertexRecord>> {
    let cache = if args.no_cache {
        None
    } else {
        cache::Cache::resolve(args.cache_dir.clone())
    };
    if let Some(c) = &cache {
        if let Some(records) = c.load(g) {
            return Ok(records);
        }
    }
    let records = enumerate_vertices(g, args.vertex_cap)?;
    if let Some(c) = &cache {
        c.store(g, &records);
    }
    Ok(records)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Generators(args) => {
            let g = family(&args)?;
            match args.format.as_str() {
                "csv" => print!("{}", output::generators_csv(&g)),
                _ => println!("{}", serde_json::to_string_pretty(&output::generators_json(&g)).unwrap()),
            }
            Ok(0)
        }
        Command::Vertices(args) => {
            set_threads(args.threads);
            let g = family(&args.family)?;
            let records = vertices_cached(&args, &g)?;
            match args.family.format.as_str() {
                "csv" => print!("{}", output::vertices_csv(&g, &records)),
                _ => println!(
                    "{}",
                    serde_json::to_string_pretty(&output::vertices_json(&g, &records)).unwrap()
                ),
            }
            Ok(0)
        }
        Command::Summary(args) => {
            set_threads(args.threads);
            let g = family(&args.family)?;
            let records = vertices_cached(&args, &g)?;
            let diameter = skeleton_diameter_of_records(&records)?;
            let (grid_k, translation) = grid_size(&g)?;
            let summary = ZonotopeSummary {
                generator_count: g.len(),
                vertex_count: records.len(),
                diameter,
                grid_k,
                translation,
            };
            match args.family.format.as_str() {
                "csv" => print!("{}", output::summary_csv(&summary)),
                _ => println!(
                    "{}",
                    serde_json::to_string_pretty(&output::summary_json(&g, &summary)).unwrap()
                ),
            }
            Ok(0)
        }
        Command::Delta(args) => {
            let record = if args.dim == 2 {
                if args.k < 1 {
                    return Err(Error::InvalidInput("k must be at least 1".into()));
                }
                delta_2k_capped(args.k as u64, 100)?
            } else {
                construct_dk(args.dim, args.k)?
            };
            match args.format.as_str() {
                "csv" => print!("{}", output::delta_csv(std::slice::from_ref(&record))),
                _ => println!("{}", serde_json::to_string_pretty(&output::delta_json(&record)).unwrap()),
            }
            Ok(0)
        }
        Command::DeltaTable(args) => {
            let records: Vec<_> = (1..=args.kmax)
                .map(|k| delta_2k_capped(k, args.kmax.max(100)))
                .collect::<Result<_>>()?;
            match args.format.as_str() {
                "csv" => print!("{}", output::delta_csv(&records)),
                _ => {
                    let rows: Vec<_> = records.iter().map(output::delta_json).collect();
                    println!("{}", serde_json::to_string_pretty(&json!({ "table": rows })).unwrap());
                }
            }
            Ok(0)
        }
        Command::MatroidSolve(args) => {
            set_threads(args.threads);
            let matroid = matroid_file::parse_matroid(&args.matroid)?;
            let columns = matroid_file::parse_weights(&args.weights)?;
            let d = columns.first().map_or(0, |c| c.dim());
            let objective = match args.objective.as_str() {
                "max-coordinate" => Objective::MaxCoordinate,
                "linear" => {
                    let raw = args.linear.ok_or_else(|| {
                        Error::InvalidInput("--objective linear requires --linear c1,c2,…".into())
                    })?;
                    let coeffs: Vec<i64> = raw
                        .split(',')
                        .map(|t| t.trim().parse())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::InvalidInput("bad --linear coefficients".into()))?;
                    if coeffs.len() != d {
                        return Err(Error::InvalidInput(format!(
                            "--linear needs {d} coefficients, got {}",
                            coeffs.len()
                        )));
                    }
                    Objective::Linear(IntVec(coeffs))
                }
                _ => Objective::SquaredNorm,
            };
            let counted = CountingOracle::new(matroid.as_ref());
            let sol = multicriteria_solve(
                &counted,
                &columns,
                &objective,
                args.norm_bound,
                DEFAULT_GENERATOR_CAP,
                DEFAULT_VERTEX_CAP,
            )?;
            let mut indicator = vec![0u8; columns.len()];
            for &e in &sol.basis {
                indicator[e] = 1;
            }
            let mut doc = json!({
                "basis": sol.basis,
                "indicator": indicator,
                "projection": sol.projection,
                "objective": args.objective,
                "value": sol.value.to_string(),
                "counterparts": sol.counterparts,
                "oracle_queries": counted.calls(),
            });
            if args.verify_bruteforce {
                let best = primzono::enumerate_bases(matroid.as_ref(), DEFAULT_BASIS_CAP)?
                    .iter()
                    .map(|b| {
                        let mut acc = IntVec::zero(d);
                        for &e in b {
                            acc = acc.checked_add(&columns[e])?;
                        }
                        objective.eval(&acc)
                    })
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .max()
                    .ok_or_else(|| Error::InvalidInput("matroid has no bases".into()))?;
                if best != sol.value {
                    return Err(Error::OracleInconsistency(format!(
                        "greedy value {} differs from exhaustive optimum {best}",
                        sol.value
                    )));
                }
                doc["verified"] = json!(true);
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(0)
        }
        Command::Verify(args) => {
            set_threads(args.threads);
            let checks = if args.long {
                primzono::verify::run_long()
            } else {
                primzono::verify::run_quick()
            };
            let mut failures = 0;
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!("{tag}  {}: {}", c.name, c.detail);
                if !c.passed {
                    failures += 1;
                }
            }
            println!("{} checks, {} failed", checks.len(), failures);
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}
