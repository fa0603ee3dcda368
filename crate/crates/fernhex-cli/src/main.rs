//! Command-line front end: build and render regions, count tilings with a
//! chosen engine, evaluate the closed-form products exactly, run the
//! verification suites, and benchmark the engines.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails,
//! 2 on invalid input.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fernhex::{
    cored_count, count_tilings_with, fern_base_point, fern_cells, fern_cored_count,
    fern_cored_hexagon, fern_ratio, hexagon, macmahon_count, run_suite, semihex_count,
    trapezoid_count, two_lobe_ratio, EngineCaps, EngineKind, FernSpec, GridConfig, SuiteKind,
    TriRegion,
};
use num_rational::BigRational;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fernhex",
    version,
    about = "Exact lozenge-tiling enumeration of fern-cored hexagons"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a region and emit JSON, character art, or SVG
    Region(RegionArgs),
    /// Count the lozenge tilings of a region exactly
    Count(CountArgs),
    /// Evaluate a closed-form expression exactly
    ///
    /// Names: P a b c | s b1 b2 ... | trapezoid m n x1 ... xn |
    /// cored x y z m | two-lobe-ratio x y z a b |
    /// theorem21-ratio x y z a1 ... ak | fc-count x y z a1 ... ak |
    /// g x y z a1 ... ak
    Formula {
        name: String,
        #[arg(trailing_var_arg = true)]
        args: Vec<u32>,
    },
    /// Run verification suites over parameter grids
    Verify(VerifyArgs),
    /// Time the counting engines over region families
    Bench(BenchArgs),
}

#[derive(Args)]
struct BuilderFlags {
    /// First hexagon core parameter
    #[arg(long, default_value_t = 0)]
    x: u32,
    /// Second hexagon core parameter
    #[arg(long, default_value_t = 0)]
    y: u32,
    /// Third hexagon core parameter
    #[arg(long, default_value_t = 0)]
    z: u32,
    /// Fern lobe sizes, comma separated (a leading 0 starts with a down lobe)
    #[arg(long, value_delimiter = ',')]
    lobes: Option<Vec<u32>>,
    /// Single triangular core of side m (m = 0 gives the plain hexagon)
    #[arg(long, conflicts_with = "lobes")]
    m: Option<u32>,
}

impl BuilderFlags {
    fn spec(&self) -> Result<FernSpec, String> {
        let lobes = match (&self.lobes, self.m) {
            (Some(lobes), None) => lobes.clone(),
            (None, Some(m)) => vec![m],
            (None, None) => return Err("one of --lobes or --m is required".into()),
            (Some(_), Some(_)) => unreachable!("clap conflict"),
        };
        FernSpec::new(lobes).map_err(|e| e.to_string())
    }

    /// The region together with the removed fern cells (for rendering).
    fn build(&self) -> Result<(TriRegion, TriRegion), String> {
        let spec = self.spec()?;
        let region =
            fern_cored_hexagon(self.x, self.y, self.z, &spec).map_err(|e| e.to_string())?;
        let hole = fern_cells(fern_base_point(self.x, self.y, self.z), &spec);
        Ok((region, hole))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Dp,
    Kasteleyn,
    Ryser,
    Auto,
}

impl From<EngineArg> for EngineKind {
    fn from(value: EngineArg) -> EngineKind {
        match value {
            EngineArg::Dp => EngineKind::FrontierDp,
            EngineArg::Kasteleyn => EngineKind::Kasteleyn,
            EngineArg::Ryser => EngineKind::Ryser,
            EngineArg::Auto => EngineKind::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Ascii,
    Svg,
}

#[derive(Args)]
struct RegionArgs {
    #[command(flatten)]
    builder: BuilderFlags,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// Region JSON file; alternative to the builder flags
    #[arg(long)]
    region: Option<PathBuf>,
    #[command(flatten)]
    builder: BuilderFlags,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Run a second engine and fail on disagreement
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// macmahon | semihex | theorem21 | kuo | base-case | g-identity |
    /// remark4 | remark5 | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 2)]
    max_xyz: u32,
    #[arg(long, default_value_t = 2)]
    max_lobe: u32,
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
    engine: EngineArg,
}

#[derive(Args)]
struct BenchArgs {
    /// hexagons | fc
    #[arg(long, default_value = "hexagons")]
    family: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
    engine: EngineArg,
    /// Largest instance parameter
    #[arg(long, default_value_t = 4)]
    max_size: u32,
    /// Output file for the CSV; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

fn engine_caps() -> Result<EngineCaps, String> {
    let mut caps = EngineCaps::default();
    if let Ok(raw) = std::env::var("FERNHEX_DP_WIDTH_CAP") {
        caps.dp_frontier = raw
            .parse()
            .map_err(|_| format!("FERNHEX_DP_WIDTH_CAP must be an integer, got {raw:?}"))?;
    }
    Ok(caps)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_region(args: &RegionArgs) -> Result<(), String> {
    let (region, hole) = args.builder.build()?;
    let text = match args.format {
        FormatArg::Json => {
            let mut json = serde_json::to_string_pretty(&region).expect("serializable");
            json.push('\n');
            json
        }
        FormatArg::Ascii => render::ascii(&region),
        FormatArg::Svg => render::svg(&region, Some(&hole)),
    };
    emit(&args.out, &text)
}

fn cmd_count(args: &CountArgs) -> Result<ExitCode, String> {
    let region = match &args.region {
        Some(path) => {
            let raw =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str::<TriRegion>(&raw).map_err(|e| format!("bad region JSON: {e}"))?
        }
        None => args.builder.build()?.0,
    };
    let caps = engine_caps()?;
    let engine: EngineKind = args.engine.into();
    let count = count_tilings_with(&region, engine, &caps).map_err(|e| e.to_string())?;
    if args.cross_check {
        let other = match engine {
            EngineKind::FrontierDp => EngineKind::Kasteleyn,
            _ => EngineKind::FrontierDp,
        };
        let second = count_tilings_with(&region, other, &caps).map_err(|e| e.to_string())?;
        if second != count {
            eprintln!("cross-check failed: {engine} = {count}, {other} = {second}");
            return Ok(ExitCode::from(1));
        }
    }
    println!("{count}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_formula(name: &str, args: &[u32]) -> Result<(), String> {
    let exact = |r: &BigRational| r.to_string();
    let want = |n: usize| -> Result<(), String> {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!(
                "{name} takes {n} integer arguments, got {}",
                args.len()
            ))
        }
    };
    let spec_tail = || -> Result<FernSpec, String> {
        if args.len() < 4 {
            return Err(format!("{name} takes x y z and at least one lobe"));
        }
        FernSpec::new(args[3..].to_vec()).map_err(|e| e.to_string())
    };
    let value = match name {
        "P" => {
            want(3)?;
            macmahon_count(args[0], args[1], args[2]).to_string()
        }
        "s" => semihex_count(args).to_string(),
        "trapezoid" => {
            if args.len() < 2 {
                return Err("trapezoid takes m n x1 ... xn".into());
            }
            trapezoid_count(args[0], args[1], &args[2..])
                .map_err(|e| e.to_string())?
                .to_string()
        }
        "cored" => {
            want(4)?;
            cored_count(args[0], args[1], args[2], args[3])
                .map_err(|e| e.to_string())?
                .to_string()
        }
        "two-lobe-ratio" => {
            want(5)?;
            exact(&two_lobe_ratio(args[0], args[1], args[2], args[3], args[4]))
        }
        "theorem21-ratio" | "g" => {
            let spec = spec_tail()?;
            exact(&fern_ratio(args[0], args[1], args[2], &spec))
        }
        "fc-count" => {
            let spec = spec_tail()?;
            fern_cored_count(args[0], args[1], args[2], &spec)
                .map_err(|e| e.to_string())?
                .to_string()
        }
        other => {
            return Err(format!(
                "unknown formula {other:?}; names: P, s, trapezoid, cored, two-lobe-ratio, \
                 theorem21-ratio, fc-count, g"
            ))
        }
    };
    println!("{value}");
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let suites = if args.suite == "all" {
        SuiteKind::ALL.to_vec()
    } else {
        vec![SuiteKind::from_name(&args.suite)
            .ok_or_else(|| format!("unknown suite {:?}", args.suite))?]
    };
    let cfg = GridConfig {
        max_xyz: args.max_xyz,
        max_lobe: args.max_lobe,
        max_k: args.max_k,
        caps: engine_caps()?,
        engine: args.engine.into(),
        jobs: args.jobs,
        suites,
    };
    let outcome = run_suite(&cfg);
    for r in outcome.reports.iter().filter(|r| !r.pass) {
        eprintln!("FAIL {} {}: {} != {}", r.identity, r.params, r.lhs, r.rhs);
    }
    let json = serde_json::json!({
        "reports": outcome.reports,
        "summary": outcome.summary,
    });
    let mut text = serde_json::to_string_pretty(&json).expect("serializable");
    text.push('\n');
    emit(&args.report, &text)?;
    let s = &outcome.summary;
    eprintln!(
        "verified {} instances: {} passed, {} failed, {} skipped",
        s.total, s.passed, s.failed, s.skipped
    );
    Ok(if s.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, String> {
    let caps = engine_caps()?;
    let engine: EngineKind = args.engine.into();
    let instances: Vec<(String, TriRegion)> = match args.family.as_str() {
        "hexagons" => (1..=args.max_size)
            .map(|a| (format!("hexagon-{a}"), hexagon([a; 6]).expect("closes")))
            .collect(),
        "fc" => {
            let spec = FernSpec::new(vec![1, 2, 1]).expect("three lobes");
            (1..=args.max_size)
                .map(|s| {
                    let region = fern_cored_hexagon(s, s, s, &spec).expect("fern fits");
                    (format!("fc-{s}-lobes-1.2.1"), region)
                })
                .collect()
        }
        other => return Err(format!("unknown family {other:?}; families: hexagons, fc")),
    };
    let mut csv = String::from("instance,engine,cells,ms,digits,status\n");
    let mut mismatch = false;
    for (label, region) in &instances {
        let started = std::time::Instant::now();
        let counted = count_tilings_with(region, engine, &caps);
        let ms = started.elapsed().as_millis();
        let (digits, status) = match &counted {
            Ok(n) => {
                let check = count_tilings_with(region, EngineKind::FrontierDp, &caps);
                let status = match check {
                    Ok(ref c) if c == n => "ok",
                    Ok(_) => {
                        mismatch = true;
                        "mismatch"
                    }
                    Err(_) => "ok",
                };
                (n.to_string().len().to_string(), status)
            }
            Err(_) => (String::from(""), "skipped"),
        };
        csv.push_str(&format!(
            "{label},{engine},{cells},{ms},{digits},{status}\n",
            cells = region.len()
        ));
    }
    emit(&args.out, &csv)?;
    Ok(if mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<ExitCode, String> = match &cli.cmd {
        Cmd::Region(args) => cmd_region(args).map(|()| ExitCode::SUCCESS),
        Cmd::Count(args) => cmd_count(args),
        Cmd::Formula { name, args } => cmd_formula(name, args).map(|()| ExitCode::SUCCESS),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
