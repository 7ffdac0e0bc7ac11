use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use kneser_core::bounds::{b_of_r, proven_lower_bound, BoundReport, BOUND_CSV_HEADER};
use kneser_core::reductions::{
    prime_induction_refute, pullback_coloring, validate_induction_witness, InductionOutcome, InductionParams,
    ProjectionMap,
};
use kneser_core::solver::{chromatic_scan, find_monochromatic_support, ChiOutcome, DEFAULT_NODE_BUDGET};
use kneser_core::sweeps::{
    sweep_cap_vector, sweep_conjectures, sweep_transversal_prime, sweep_wide, write_csv, write_jsonl, ConjectureFamily,
    SweepConfig, SweepGrid, SweepSummary, Verdict, DEFAULT_WIDE_K,
};
use kneser_core::tverberg::{
    check_bln_property, colorful_partitions, has_tverberg_partition, tverberg_existence_sweep, OccurrenceOptions,
    PointConfig,
};
use kneser_core::{
    build_minimal_supports, is_proper, Coloring, Error, Hypergraph, HypergraphSpec, Partition, SVector, SolverConfig,
};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kneser",
    version,
    about = "Generalized Kneser hypergraphs: generation, exact coloring, bounds and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Single-threaded, reproducible output.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Write the main artifact here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a hypergraph and write it out.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "hkg")]
        format: Format,
    },
    /// Exact chromatic number with a witness coloring.
    Chi {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Search every palette size from 1 instead of starting at the proven bound.
        #[arg(long)]
        audit: bool,
    },
    /// Bound formulas for a cap vector.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        /// Uniform intersection parameter; caps are `s - 1`.
        #[arg(long, conflicts_with = "svector")]
        s: Option<u32>,
        /// Comma-separated per-element caps.
        #[arg(long)]
        svector: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        no_header: bool,
    },
    /// Check whether a coloring is proper.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// JSON array of colors, one per vertex.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Pull a coloring of KG or KG_s back to the transversal hypergraph.
    Pullback {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        coloring: PathBuf,
        /// Target partition (`1,2/3,4/5`); defaults to consecutive blocks of the cap sizes.
        #[arg(long = "target-partition")]
        target_partition: Option<String>,
    },
    /// Extract a monochromatic hyperedge of KG^{r1 r2}(n,k;P) by the two-stage prime induction.
    Refute(RefuteArgs),
    /// Tverberg partition checks.
    Tverberg {
        #[command(subcommand)]
        command: TverbergCommand,
    },
    /// Parameter sweeps against the known and conjectured values.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Hkg,
}

#[derive(Args, Clone, Default)]
struct SpecArgs {
    /// Spec JSON file; overrides the other spec flags.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// KG, KG_s, KG_partition, KG_stable, KG_wide, KG_avoidA or KG_setsystem.
    #[arg(long, default_value = "KG")]
    family: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Uniform caps `s - 1`.
    #[arg(long, conflicts_with = "svector")]
    s: Option<u32>,
    /// Comma-separated per-element caps.
    #[arg(long)]
    svector: Option<String>,
    /// Parts as `1,2/3,4/5`.
    #[arg(long, conflicts_with = "blocks")]
    partition: Option<String>,
    /// Consecutive block sizes, e.g. `2,2,1`.
    #[arg(long)]
    blocks: Option<String>,
    #[arg(long)]
    stable_s: Option<u32>,
    #[arg(long)]
    wide_t: Option<u32>,
    /// Comma-separated elements of the avoided set.
    #[arg(long)]
    avoid: Option<String>,
    /// Explicit sets as `1,2/3,4`.
    #[arg(long)]
    sets: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Hypergraph file in hkg format instead of a spec.
    #[arg(long)]
    hkg: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node budget.
    #[arg(long, env = "KNESER_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct RefuteArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    r1: u32,
    #[arg(long)]
    r2: u32,
    /// Part-size bound for the `r1` stage; defaults to b(r1).
    #[arg(long)]
    b1: Option<u32>,
    /// Part-size bound for the `r2` stage; defaults to b(r2).
    #[arg(long)]
    b2: Option<u32>,
    /// Parts as `1,2/3,4/5`; defaults to singletons.
    #[arg(long, conflicts_with = "blocks")]
    partition: Option<String>,
    #[arg(long)]
    blocks: Option<String>,
    /// Coloring of the transversal hypergraph's vertices.
    #[arg(long, conflicts_with = "random")]
    coloring: Option<PathBuf>,
    /// Draw a uniformly random coloring with this many colors.
    #[arg(long)]
    random: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "KNESER_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum TverbergCommand {
    /// Whether a point sequence admits an r-part Tverberg partition, and
    /// optionally compare occurring partitions with the colorful ones.
    Check {
        /// PointConfig JSON.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        bln: bool,
        /// With --bln, scan every subsequence of length (r-1)(d+1)+1.
        #[arg(long)]
        all_subsequences: bool,
    },
    /// List the colorful partitions of [(r-1)(d+1)+1].
    Colorful {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
    /// Random configurations of size N and N-1 versus the existence of Tverberg partitions.
    Existence {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Which {
    All,
    TransversalPrime,
    CapVector,
    Stable,
    Parts,
    Avoiding,
    Wide,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "all")]
    which: Which,
    /// Comma-separated r values.
    #[arg(long)]
    r_values: Option<String>,
    /// Comma-separated k values.
    #[arg(long)]
    k_values: Option<String>,
    /// Comma-separated k values for the wide sweep.
    #[arg(long)]
    wide_k: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    n_max_r2: Option<u32>,
    /// Every consecutive-block partition instead of maximal blocks.
    #[arg(long)]
    all_compositions: bool,
    /// Unseeded search budget per row.
    #[arg(long, default_value_t = SweepConfig::default().audit_budget)]
    audit_budget: u64,
    #[arg(long, env = "KNESER_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Also write JSON lines here.
    #[arg(long)]
    jsonl: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = if cli.deterministic { 1 } else { cli.threads.max(1) };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_CONFIG);
    }
    let ctx = Ctx { threads, output: cli.output.clone() };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|c| c.downcast_ref::<Error>().is_some_and(Error::is_budget));
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_CONFIG })
        }
    }
}

struct Ctx {
    threads: usize,
    output: Option<PathBuf>,
}

impl Ctx {
    /// Writes the artifact to `--output`, or stdout.
    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.output {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn run(ctx: &Ctx, cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Gen { spec, format } => cmd_gen(ctx, &spec, format),
        Command::Chi { input, budget, audit } => cmd_chi(ctx, &input, budget.budget, audit),
        Command::Bounds { n, k, r, s, svector, format, no_header } => {
            cmd_bounds(ctx, n, k, r, s, svector.as_deref(), format, no_header)
        }
        Command::Verify { input, coloring } => cmd_verify(&input, &coloring),
        Command::Pullback { spec, coloring, target_partition } => {
            cmd_pullback(ctx, &spec, &coloring, target_partition.as_deref())
        }
        Command::Refute(args) => cmd_refute(ctx, &args),
        Command::Tverberg { command } => cmd_tverberg(ctx, command),
        Command::Sweep(args) => cmd_sweep(ctx, &args),
    }
}

fn parse_list(s: &str) -> anyhow::Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().with_context(|| format!("not a nonnegative integer: {t:?}")))
        .collect()
}

fn parse_lists(s: &str) -> anyhow::Result<Vec<Vec<u32>>> {
    s.split('/').map(parse_list).collect()
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn build_spec(a: &SpecArgs) -> anyhow::Result<HypergraphSpec> {
    if let Some(path) = &a.spec {
        return Ok(HypergraphSpec::from_json(&read(path)?)?);
    }
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| anyhow!("--{name} is required without --spec"));
    let (n, k, r) = (need(a.n, "n")?, need(a.k, "k")?, need(a.r, "r")?);
    let mut doc = json!({ "family": a.family, "n": n, "k": k, "r": r });
    if let Some(s) = a.s {
        if s < 2 {
            bail!("--s must be at least 2");
        }
        doc["svector"] = json!(vec![s - 1; n as usize]);
    }
    if let Some(sv) = &a.svector {
        doc["svector"] = json!(parse_list(sv)?);
    }
    if let Some(p) = &a.partition {
        doc["partition"] = json!(parse_lists(p)?);
    }
    if let Some(b) = &a.blocks {
        doc["partition"] = json!(Partition::consecutive(&parse_list(b)?)?.to_lists());
    }
    if let Some(s) = a.stable_s {
        doc["stable_s"] = json!(s);
    }
    if let Some(t) = a.wide_t {
        doc["wide_t"] = json!(t);
    }
    if let Some(av) = &a.avoid {
        doc["avoid_A"] = json!(parse_list(av)?);
    }
    if let Some(sets) = &a.sets {
        doc["set_system"] = json!(parse_lists(sets)?);
    }
    Ok(HypergraphSpec::from_json(&doc.to_string())?)
}

fn load_hypergraph(input: &InputArgs) -> anyhow::Result<Hypergraph> {
    match &input.hkg {
        Some(path) => Ok(Hypergraph::from_hkg(&read(path)?)?),
        None => Ok(build_minimal_supports(&build_spec(&input.spec)?)?),
    }
}

fn cmd_gen(ctx: &Ctx, spec: &SpecArgs, format: Format) -> anyhow::Result<u8> {
    let spec = build_spec(spec)?;
    let hg = build_minimal_supports(&spec)?;
    let text = match format {
        Format::Hkg => hg.to_hkg(),
        Format::Json => {
            let vertices: Vec<Vec<u32>> = hg.vertices().iter().map(|v| v.to_vec()).collect();
            let doc = json!({
                "spec": serde_json::from_str::<serde_json::Value>(&spec.to_json())?,
                "vertices": vertices,
                "supports": hg.supports(),
            });
            format!("{doc}\n")
        }
        Format::Csv => bail!("gen writes hkg or json"),
    };
    ctx.emit(&text)?;
    eprintln!("{}: {} vertices, {} supports", spec.label(), hg.num_vertices(), hg.num_supports());
    Ok(EXIT_OK)
}

fn cmd_chi(ctx: &Ctx, input: &InputArgs, budget: u64, audit: bool) -> anyhow::Result<u8> {
    let hg = load_hypergraph(input)?;
    let cfg = SolverConfig::default().with_budget(budget).with_threads(ctx.threads);
    let seed = if audit { None } else { hg.spec().and_then(proven_lower_bound) };
    let start = seed.map_or(1, |b| b.value.max(1) as u32);
    match chromatic_scan(&hg, start, &cfg) {
        ChiOutcome::Exact(res) => {
            let cert = match seed {
                Some(b) if !res.search_certified() => format!("seeded by {}", b.source),
                _ => "search".to_string(),
            };
            println!("chi={}", res.chi);
            eprintln!(
                "{} vertices, {} supports, {} nodes, lower bound: {cert}",
                hg.num_vertices(),
                hg.num_supports(),
                res.nodes
            );
            ctx.emit(&format!("{}\n", res.to_json()))?;
            Ok(EXIT_OK)
        }
        ChiOutcome::Inconclusive { refuted_below, nodes, .. } => {
            println!("chi>={refuted_below} (inconclusive after {nodes} nodes)");
            Ok(EXIT_BUDGET)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    ctx: &Ctx,
    n: u32,
    k: u32,
    r: u32,
    s: Option<u32>,
    svector: Option<&str>,
    format: Format,
    no_header: bool,
) -> anyhow::Result<u8> {
    let sv = match (s, svector) {
        (Some(s), _) if s >= 2 => SVector::uniform(n, s - 1, r)?,
        (Some(_), _) => bail!("--s must be at least 2"),
        (None, Some(list)) => SVector::new(parse_list(list)?, r)?,
        (None, None) => bail!("one of --s or --svector is required"),
    };
    if sv.len() != n as usize {
        bail!("svector has {} entries, expected n={n}", sv.len());
    }
    let report = BoundReport::new(k, r, sv)?;
    let text = match format {
        Format::Csv if no_header => format!("{}\n", report.csv_row()),
        Format::Csv => format!("{BOUND_CSV_HEADER}\n{}\n", report.csv_row()),
        Format::Json => format!("{}\n", serde_json::to_string(&report)?),
        Format::Hkg => bail!("bounds writes csv or json"),
    };
    ctx.emit(&text)?;
    Ok(EXIT_OK)
}

fn load_coloring(path: &Path, hg: &Hypergraph) -> anyhow::Result<Coloring> {
    let c = Coloring::from_json(&read(path)?)?;
    if c.len() != hg.num_vertices() {
        return Err(Error::LengthMismatch { expected: hg.num_vertices(), found: c.len() }.into());
    }
    Ok(c)
}

fn cmd_verify(input: &InputArgs, coloring: &Path) -> anyhow::Result<u8> {
    let hg = load_hypergraph(input)?;
    let c = load_coloring(coloring, &hg)?;
    match find_monochromatic_support(&c, &hg)? {
        None => {
            println!("proper: {} colors on {} vertices", c.num_colors_used(), hg.num_vertices());
            Ok(EXIT_OK)
        }
        Some(m) => {
            let sets: Vec<Vec<u32>> = m.support.iter().map(|&v| hg.vertices()[v as usize].to_vec()).collect();
            println!("not proper: color {} on support {:?}", m.color, sets);
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_pullback(ctx: &Ctx, spec: &SpecArgs, coloring: &Path, target: Option<&str>) -> anyhow::Result<u8> {
    let source = build_spec(spec)?;
    let src_hg = build_minimal_supports(&source)?;
    let c = load_coloring(coloring, &src_hg)?;
    let pmap = match target {
        Some(p) => {
            let lists = parse_lists(p)?;
            let n = lists.iter().map(|l| l.len() as u32).sum();
            ProjectionMap::new(Partition::from_lists(n, &lists)?)
        }
        None => match &source.svector {
            Some(sv) => ProjectionMap::from_svector(sv)?,
            None => ProjectionMap::new(Partition::singletons(source.n)?),
        },
    };
    let pb = pullback_coloring(&c, &source, &pmap)?;
    let source_proper = is_proper(&c, &src_hg)?;
    let target_proper = is_proper(&pb.coloring, &pb.target)?;
    ctx.emit(&format!("{}\n", pb.coloring.to_json()))?;
    eprintln!(
        "pullback onto {} vertices: source proper={source_proper}, pullback proper={target_proper}",
        pb.target.num_vertices()
    );
    Ok(if source_proper && !target_proper { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_refute(ctx: &Ctx, a: &RefuteArgs) -> anyhow::Result<u8> {
    let partition = match (&a.partition, &a.blocks) {
        (Some(p), _) => Partition::from_lists(a.n, &parse_lists(p)?)?,
        (None, Some(b)) => Partition::consecutive(&parse_list(b)?)?,
        (None, None) => Partition::singletons(a.n)?,
    };
    let r = a.r1 * a.r2;
    let spec = HypergraphSpec::transversal(a.n, a.k, r, partition.clone())?;
    let hg = build_minimal_supports(&spec)?;
    let coloring = match (&a.coloring, a.random) {
        (Some(path), _) => load_coloring(path, &hg)?,
        (None, Some(l)) if l >= 1 => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            Coloring::new((0..hg.num_vertices()).map(|_| rng.gen_range(1..=l)).collect(), l)?
        }
        _ => bail!("one of --coloring or --random L (L >= 1) is required"),
    };
    let params = InductionParams {
        n: a.n,
        k: a.k,
        r1: a.r1,
        r2: a.r2,
        b1: a.b1.map_or_else(|| b_of_r(a.r1 as u64).map(|b| b as u32), Ok)?,
        b2: a.b2.map_or_else(|| b_of_r(a.r2 as u64).map(|b| b as u32), Ok)?,
        budget: a.budget,
    };
    match prime_induction_refute(&coloring, &partition, params)? {
        InductionOutcome::Witness(w) => {
            let check = validate_induction_witness(&w, &coloring, a.n, a.k, &partition);
            ctx.emit(&format!("{}\n", w.to_json()))?;
            match check {
                Ok(()) => {
                    eprintln!("monochromatic hyperedge of color {}: {:?}; trace valid", w.color, w.sets);
                    Ok(EXIT_OK)
                }
                Err(why) => {
                    eprintln!("witness failed validation: {why}");
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        InductionOutcome::ColoringIsProper => {
            println!("VIOLATION: coloring with {} colors is proper below the bound", coloring.m());
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_tverberg(ctx: &Ctx, cmd: TverbergCommand) -> anyhow::Result<u8> {
    match cmd {
        TverbergCommand::Check { points, r, bln, all_subsequences } => {
            let config = PointConfig::from_json(&read(&points)?)?;
            let exists = has_tverberg_partition(&config, r);
            println!("tverberg_partition({r})={exists}");
            if bln {
                let opts = OccurrenceOptions { all_subsequences, ..Default::default() };
                let report = check_bln_property(&config, r, opts)?;
                eprintln!("occurring vs colorful: {}", report.verdict);
                ctx.emit(&format!("{}\n", report.to_json()))?;
            }
            Ok(EXIT_OK)
        }
        TverbergCommand::Colorful { r, d } => {
            let parts = colorful_partitions(r, d);
            let text: String = parts.iter().map(|p| format!("{p:?}\n")).collect();
            ctx.emit(&text)?;
            eprintln!("{} colorful partitions", parts.len());
            Ok(EXIT_OK)
        }
        TverbergCommand::Existence { r, d, trials, seed } => {
            let report = tverberg_existence_sweep(r, d, trials, seed);
            ctx.emit(&format!("{}\n", serde_json::to_string(&report)?))?;
            eprintln!(
                "{}/{} of size {} partitionable, {}/{} of size {}",
                report.full_partitionable,
                trials,
                report.n_hat,
                report.reduced_partitionable,
                trials,
                report.n_hat - 1
            );
            Ok(if report.holds() { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn cmd_sweep(ctx: &Ctx, a: &SweepArgs) -> anyhow::Result<u8> {
    let mut grid = SweepGrid::default();
    if let Some(v) = &a.r_values {
        grid.r_values = parse_list(v)?;
    }
    if let Some(v) = &a.k_values {
        grid.k_values = parse_list(v)?;
    }
    if let Some(v) = a.n_max {
        grid.n_max = v;
    }
    if let Some(v) = a.n_max_r2 {
        grid.n_max_r2 = v;
    }
    grid.all_compositions = a.all_compositions;
    let wide_k = match &a.wide_k {
        Some(v) => parse_list(v)?,
        None => DEFAULT_WIDE_K.to_vec(),
    };
    if grid.r_values.iter().any(|&r| r < 2) || grid.k_values.contains(&0) || wide_k.contains(&0) {
        bail!("grid needs r >= 2 and k >= 1");
    }
    let cfg =
        SweepConfig { audit_budget: a.audit_budget, node_budget: a.budget, threads: ctx.threads, ..Default::default() };
    let rows = match a.which {
        Which::All => {
            let mut rows = sweep_transversal_prime(&grid, &cfg);
            rows.extend(sweep_cap_vector(&grid, &cfg));
            for w in [ConjectureFamily::Stable, ConjectureFamily::Parts, ConjectureFamily::Avoiding] {
                rows.extend(sweep_conjectures(&grid, w, &cfg));
            }
            rows.extend(sweep_wide(&grid, &wide_k, &cfg));
            rows
        }
        Which::TransversalPrime => sweep_transversal_prime(&grid, &cfg),
        Which::CapVector => sweep_cap_vector(&grid, &cfg),
        Which::Stable => sweep_conjectures(&grid, ConjectureFamily::Stable, &cfg),
        Which::Parts => sweep_conjectures(&grid, ConjectureFamily::Parts, &cfg),
        Which::Avoiding => sweep_conjectures(&grid, ConjectureFamily::Avoiding, &cfg),
        Which::Wide => sweep_wide(&grid, &wide_k, &cfg),
    };
    let mut csv = Vec::new();
    write_csv(&rows, &mut csv)?;
    ctx.emit(std::str::from_utf8(&csv)?)?;
    if let Some(path) = &a.jsonl {
        let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_jsonl(&rows, std::io::BufWriter::new(f))?;
    }
    let summary = SweepSummary::of(&rows);
    eprintln!("{summary}");
    Ok(if summary.has_failures() {
        EXIT_VIOLATION
    } else if rows.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}
