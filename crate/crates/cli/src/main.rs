//! `symspace`: catalog inspection, verification, sampling and invariants.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use symspace_core::catalog::{
    self, entry_info, enumerate_params, verify_entry, EntryReport, Params, SeriesEntry, VerifyOptions, ALL_IDS,
};
use symspace_core::charts::{grassmannian_dim, ChartSampler};
use symspace_core::invariants::double_ratio;
use symspace_core::spaces::{component_index, random_orbit_point};
use symspace_core::wire::{from_json, PointWire};
use symspace_core::Error;

const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(name = "symspace", version, about = "Classical pseudo-Riemannian symmetric spaces as pairs of subspaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the registry of series
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the verification battery on one series or on all of them
    Verify(VerifyArgs),
    /// Emit a seeded random point of a space
    Sample(SampleArgs),
    /// Double ratio of two points read as JSON
    DoubleRatio(DoubleRatioArgs),
    /// Print dim G, dim H and the dimension of the space
    Dims(EntryArgs),
}

#[derive(Subcommand)]
enum CatalogAction {
    /// All 54 series, grouped by list
    List {
        #[arg(long)]
        json: bool,
    },
    /// One instantiated series
    Show(EntryArgs),
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl ParamArgs {
    fn any(&self) -> bool {
        [self.n, self.p, self.q, self.r, self.s, self.k, self.l, self.m].iter().any(Option::is_some)
    }

    /// The given parameters, or the smallest valid choice when none are given.
    fn resolve(&self, id: usize) -> Result<Params, Error> {
        if !self.any() {
            return enumerate_params(id, 6)?.first().copied().ok_or(Error::UnknownEntry(id));
        }
        Ok(Params {
            n: self.n.unwrap_or(0),
            p: self.p.unwrap_or(0),
            q: self.q.unwrap_or(0),
            r: self.r.unwrap_or(0),
            s: self.s.unwrap_or(0),
            k: self.k.unwrap_or(0),
            l: self.l.unwrap_or(0),
            m: self.m.unwrap_or(0),
        })
    }
}

#[derive(Args)]
struct EntryArgs {
    id: usize,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// a series id, or `all`
    target: String,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, env = "SYMM_SEED", default_value_t = 0)]
    seed: u64,
    /// largest dimension of V over its ring
    #[arg(long, default_value_t = 6)]
    max_dim: usize,
    #[arg(long)]
    json: bool,
    /// replace the stored U(D) column by a wrong group (negative control)
    #[arg(long, hide = true)]
    corrupt_ud: bool,
}

#[derive(Args)]
struct SampleArgs {
    id: usize,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, env = "SYMM_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// draw from the base chart instead of the orbit of the base point
    #[arg(long)]
    chart: bool,
}

#[derive(Args)]
struct DoubleRatioArgs {
    id: usize,
    #[command(flatten)]
    params: ParamArgs,
    /// JSON file with two points; standard input when omitted or `-`
    #[arg(long)]
    input: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = match e {
                Error::NotTransverse => EXIT_DEGENERATE,
                _ => EXIT_USAGE,
            };
            eprintln!("{}", json!({ "error": e.to_string(), "kind": format!("{e:?}"), "exit": code }));
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Catalog { action: CatalogAction::List { json } } => {
            if json {
                println!("{}", catalog_list_json());
            } else {
                print!("{}", catalog_list_text());
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Show(args) } => {
            let e = build(&args)?;
            if args.json {
                println!("{}", show_json(&e));
            } else {
                print!("{e}");
                println!("base point:");
                println!("  Q1 = {}", symspace_core::wire::to_json(&e.base.0));
                println!("  Q2 = {}", symspace_core::wire::to_json(&e.base.1));
            }
            Ok(0)
        }
        Command::Verify(args) => verify(args),
        Command::Sample(args) => sample(args),
        Command::DoubleRatio(args) => double_ratio_cmd(args),
        Command::Dims(args) => {
            let e = build(&args)?;
            let dims = [e.g.lie_algebra_dim(), e.h.lie_algebra_dim(), grassmannian_dim(&e)];
            if args.json {
                println!("{}", json!({ "dim_G": dims[0], "dim_H": dims[1], "dim_space": dims[2] }));
            } else {
                println!("({}, {}, {})", dims[0], dims[1], dims[2]);
            }
            Ok(0)
        }
    }
}

fn build(args: &EntryArgs) -> Result<SeriesEntry, Error> {
    catalog::build(args.id, args.params.resolve(args.id)?)
}

/// The registry grouped by list, one series per line.
fn catalog_list_text() -> String {
    let mut out = String::new();
    let mut current = 0;
    for id in ALL_IDS {
        let info = entry_info(id).expect("registry id");
        if info.list != current {
            current = info.list;
            if current > 1 {
                out.push('\n');
            }
            out.push_str(&format!("List {current}\n"));
        }
        let mark = if info.star { "*" } else { " " };
        out.push_str(&format!("{id:>3}{mark} {}  [{}]", info.template, info.schema.fields().join(", ")));
        if let Some(u) = info.union {
            out.push_str(&format!("  S = {u}"));
        }
        out.push('\n');
    }
    out
}

fn catalog_list_json() -> Value {
    let rows: Vec<Value> = ALL_IDS
        .iter()
        .map(|&id| {
            let info = entry_info(id).expect("registry id");
            json!({
                "id": id,
                "list": info.list,
                "star": info.star,
                "space": info.template,
                "params": info.schema.fields(),
                "union": info.union,
            })
        })
        .collect();
    Value::Array(rows)
}

fn show_json(e: &SeriesEntry) -> Value {
    json!({
        "id": e.id,
        "list": e.list,
        "star": e.star,
        "params": e.params,
        "space": e.title(),
        "ring": e.ring.symbol(),
        "dim": e.dim,
        "form_B": e.form_b,
        "semiinvolution": e.semiinv,
        "mu": e.listed_mu,
        "managing_form": e.managing,
        "G": e.g.name(),
        "H": e.h.name(),
        "G_star": e.g_star.name(),
        "GL_J": e.glj.as_ref().map(|g| g.name()),
        "U_D": e.ud.as_ref().map(|g| g.name()),
        "union": e.info().union,
        "base_point": { "q1": e.base.0, "q2": e.base.1 },
        "notes": e.notes,
    })
}

fn verify(args: VerifyArgs) -> Result<u8, Error> {
    let ids: Vec<usize> = if args.target == "all" {
        ALL_IDS.to_vec()
    } else {
        let id: usize = args
            .target
            .parse()
            .map_err(|_| Error::Parse(format!("expected a series id or `all`, got {:?}", args.target)))?;
        entry_info(id).ok_or(Error::UnknownEntry(id))?;
        vec![id]
    };
    let opts = VerifyOptions { trials: args.trials, seed: args.seed, ..VerifyOptions::default() };
    let mut reports: Vec<EntryReport> = Vec::new();
    for id in ids {
        let params = if args.params.any() {
            vec![args.params.resolve(id)?]
        } else {
            enumerate_params(id, args.max_dim)?
        };
        for p in params {
            let mut e = catalog::build(id, p)?;
            if args.corrupt_ud {
                e.corrupt_ud_tag();
            }
            let report = verify_entry(&e, &opts);
            if !args.json {
                if report.passed() {
                    let info = e.info();
                    println!("entry {:>2} [{}] {}: PASS", id, p.render(info.schema), report.title);
                } else {
                    print!("{report}");
                }
            }
            reports.push(report);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if args.json {
        let out = json!({
            "seed": args.seed,
            "trials": args.trials,
            "max_dim": args.max_dim,
            "instances": reports.len(),
            "failed": failed,
            "reports": reports,
        });
        println!("{out}");
    } else {
        println!("{} instances, {} failed", reports.len(), failed);
    }
    Ok(if failed == 0 { 0 } else { EXIT_CHECK })
}

fn sample(args: SampleArgs) -> Result<u8, Error> {
    let e = catalog::build(args.id, args.params.resolve(args.id)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let sampler = args.chart.then(|| ChartSampler::base(&e, 3));
    for _ in 0..args.count {
        let pt = match &sampler {
            Some(s) => s.point(&mut rng, 100)?.1,
            None => random_orbit_point(&e, &mut rng)?,
        };
        let mut out = serde_json::to_value(PointWire::new(e.id, &pt)).expect("points serialize");
        if e.star {
            out["label"] = serde_json::to_value(component_index(&e, &pt)?).expect("labels serialize");
        }
        println!("{out}");
    }
    Ok(0)
}

fn read_points(input: Option<&str>) -> Result<Vec<PointWire>, Error> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
            s
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?,
    };
    let value: Value = from_json(&text)?;
    let list = match value {
        Value::Object(mut o) if o.contains_key("points") => o.remove("points").expect("checked"),
        v => v,
    };
    serde_json::from_value(list).map_err(|e| Error::Parse(e.to_string()))
}

fn double_ratio_cmd(args: DoubleRatioArgs) -> Result<u8, Error> {
    let e = catalog::build(args.id, args.params.resolve(args.id)?)?;
    let points = read_points(args.input.as_deref())?;
    let [a, b] = points.as_slice() else {
        return Err(Error::Parse(format!("expected two points, found {}", points.len())));
    };
    for p in [a, b] {
        if p.entry != e.id {
            return Err(Error::Parse(format!("point of entry {} given for entry {}", p.entry, e.id)));
        }
    }
    let dr = double_ratio(&e, &a.point(), &b.point())?;
    println!("{}", serde_json::to_string(&dr.charpoly).expect("scalars serialize"));
    Ok(0)
}
