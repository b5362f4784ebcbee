//! Command-line front end: generate sequences, tabulate measures, inspect
//! SFTs and run intricacy/Markov analyses, emitting CSV or JSON.
//!
//! Exit codes: 0 ok, 2 usage, 3 resource budget exceeded, 4 precondition
//! failed (e.g. series mode on a matrix without M^2 > 0).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::coeffs::CoefficientSystem;
use crate::error::{Error, Result};
use crate::generate::{
    characteristic_word, mechanical, mechanical_cf, named_sequence, standard_sequence,
    DirectiveSequence, GeneratorSpec, MechanicalVariant, NamedSequence,
};
use crate::intricacy;
use crate::markov::MarkovMeasure;
use crate::measures::{complexity_report, complexity_report_adaptive, MeasureKind, MeasureOptions};
use crate::optimize::{self, OptimizeOptions, Target};
use crate::report::{complexity_csv, round_json};
use crate::subshift::{is_irreducible, CoordinateSet, Sft};
use crate::words::{read_sequences, write_sequences, Word};

#[derive(Debug, Parser)]
#[command(
    name = "symdyn",
    version,
    about = "Symbolic-dynamics complexity workbench",
    after_help = "Examples:\n  symdyn gen --name fibonacci --length 13\n  symdyn gen --mechanical --cf 0,2,1,1,1,1,1 --length 10 --lower\n  symdyn complexity --name morse --nmax 4\n  symdyn sft --sft golden --nmax 10 --pattern 0,2\n  symdyn intricacy --sft golden --mode series\n  symdyn markov eval --sft golden --order 1 --params p00=0.618\n  symdyn markov optimize --sft full2 --order 1 --target int"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output destination: a path, `-` for stdout, or `json`/`csv` as a
    /// shorthand for --format.
    #[arg(long, global = true)]
    out: Option<String>,

    /// Output format (defaults to text for gen, csv for complexity, json
    /// otherwise).
    #[arg(long, global = true)]
    format: Option<String>,

    /// Reserved; the numeric paths are deterministic and single-threaded.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Seed for the optimizer's multistart jitter.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a sequence prefix.
    Gen(GenArgs),
    /// Tabulate complexity measures of a sequence as CSV.
    Complexity(ComplexityArgs),
    /// Block counts, entropy and pattern counts of an SFT.
    Sft(SftArgs),
    /// Topological intricacy and average sample complexity of an SFT.
    Intricacy(IntricacyArgs),
    /// Markov measures on an SFT: evaluation and maximizer search.
    Markov(MarkovArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Named sequence: fibonacci | morse | chacon | kolakoski |
    /// champernowne_binary | periodic (with --block).
    #[arg(long)]
    name: Option<String>,
    /// Repeating block for --name periodic.
    #[arg(long)]
    block: Option<String>,
    /// Mechanical word; slope from --alpha or --cf.
    #[arg(long)]
    mechanical: bool,
    /// Characteristic word (left special sequence) of the slope in --cf.
    #[arg(long)]
    characteristic: bool,
    /// Standard sequence s_n of a directive, e.g. --directive 1,1,1,1.
    #[arg(long)]
    directive: Option<String>,
    /// Continued-fraction terms of the slope, e.g. 0,2,1,1,1.
    #[arg(long)]
    cf: Option<String>,
    /// Slope as a float (mechanical only; floors are float-based).
    #[arg(long)]
    alpha: Option<f64>,
    /// Intercept (mechanical only).
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
    /// Lower mechanical coding (floor differences).
    #[arg(long)]
    lower: bool,
    /// Upper mechanical coding (ceiling differences).
    #[arg(long)]
    upper: bool,
    /// Generator spec as JSON, e.g. {"kind":"named","name":"morse"}.
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    length: usize,
}

#[derive(Debug, Args)]
struct ComplexityArgs {
    /// Named generator input (see gen --name).
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    block: Option<String>,
    /// Generator spec as JSON.
    #[arg(long)]
    spec: Option<String>,
    /// Sequence file input (first sequence is used).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inline word input.
    #[arg(long)]
    word: Option<String>,
    /// Largest block length tabulated.
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    /// Step bound for the arithmetic complexity.
    #[arg(long, default_value_t = 10)]
    kmax: usize,
    /// Pattern window for the maximal-pattern lower bound.
    #[arg(long, default_value_t = 24)]
    window: usize,
    /// Comma-separated measures: p,pal,pn,window,arith,maxpat.
    #[arg(long)]
    measures: Option<String>,
    /// Fixed prefix length (generators default to the adaptive rule).
    #[arg(long)]
    length: Option<usize>,
}

#[derive(Debug, Args)]
struct SftArgs {
    /// Named SFT (golden, full2, full3, period2, figI, figII), inline JSON,
    /// or @path to a JSON spec.
    #[arg(long)]
    sft: String,
    /// Report |L_n| for n up to this bound.
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    /// Coordinate sets for pattern counts, e.g. --pattern 0,2 (repeatable).
    #[arg(long)]
    pattern: Vec<String>,
    /// Also report the de Bruijn graph of this order.
    #[arg(long)]
    debruijn: Option<usize>,
}

#[derive(Debug, Args)]
struct IntricacyArgs {
    #[arg(long)]
    sft: String,
    /// uniform | neural | psym:<p>
    #[arg(long, default_value = "uniform")]
    weights: String,
    /// series (limit, needs M^2 > 0 and uniform weights) | profile.
    #[arg(long, default_value = "series")]
    mode: String,
    /// Profile horizon.
    #[arg(long, default_value_t = 12)]
    nmax: usize,
}

#[derive(Debug, Args)]
struct MarkovArgs {
    #[command(subcommand)]
    action: MarkovAction,
}

#[derive(Debug, Subcommand)]
enum MarkovAction {
    /// Entropy rate, Asc and Int of one measure.
    Eval {
        #[arg(long)]
        sft: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Transition probabilities, e.g. --params p00=0.618 (repeatable or
        /// comma-separated).
        #[arg(long)]
        params: Vec<String>,
        /// Also report the brute-force finite-n oracle at this n.
        #[arg(long)]
        brute: Option<usize>,
    },
    /// Multistart maximizer search over an order-r family.
    Optimize {
        #[arg(long)]
        sft: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// entropy | asc | int
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 0.02)]
        grid: f64,
    },
}

/// Parse argv and run; returns the process exit code.
pub fn main_with_exit_code() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    // --out json/csv doubles as a format shorthand
    let (out_path, format_alias) = match cli.out.as_deref() {
        Some("json") | Some("csv") | Some("text") => (None, cli.out.clone()),
        Some("-") | None => (None, None),
        Some(path) => (Some(PathBuf::from(path)), None),
    };
    let format = cli.format.clone().or(format_alias);
    let seed = cli.seed;

    let output = match cli.command {
        Command::Gen(args) => run_gen(args, format.as_deref())?,
        Command::Complexity(args) => run_complexity(args)?,
        Command::Sft(args) => run_sft(args)?,
        Command::Intricacy(args) => run_intricacy(args)?,
        Command::Markov(args) => run_markov(args, seed)?,
    };
    match out_path {
        Some(path) => fs::write(path, output)?,
        None => print!("{output}"),
    }
    Ok(())
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad integer {t:?}")))
        })
        .collect()
}

fn run_gen(args: GenArgs, format: Option<&str>) -> Result<String> {
    let variant = match (args.lower, args.upper) {
        (true, true) => {
            return Err(Error::InvalidArgument("choose one of --lower/--upper".into()))
        }
        (_, true) => MechanicalVariant::Upper,
        _ => MechanicalVariant::Lower,
    };
    let word = if let Some(spec) = &args.spec {
        let spec: GeneratorSpec = serde_json::from_str(spec)?;
        spec.generate(args.length)?
    } else if let Some(name) = &args.name {
        let which = NamedSequence::parse(name, args.block.as_deref())?;
        named_sequence(&which, args.length)?
    } else if args.mechanical {
        match (&args.cf, args.alpha) {
            (Some(cf), _) => {
                if args.beta != 0.0 {
                    return Err(Error::InvalidArgument(
                        "--cf mechanical form supports --beta 0 only".into(),
                    ));
                }
                mechanical_cf(&parse_u64_list(cf)?, 0, 1, args.length, variant)?
            }
            (None, Some(alpha)) => mechanical(alpha, args.beta, args.length, variant)?,
            (None, None) => {
                return Err(Error::InvalidArgument("--mechanical needs --cf or --alpha".into()))
            }
        }
    } else if args.characteristic {
        let cf = args
            .cf
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("--characteristic needs --cf".into()))?;
        characteristic_word(&parse_u64_list(cf)?, args.length)?
    } else if let Some(d) = &args.directive {
        let terms: Vec<u32> = parse_u64_list(d)?.into_iter().map(|x| x as u32).collect();
        let s = standard_sequence(&DirectiveSequence::new(terms)?);
        if s.len() < args.length {
            return Err(Error::BadDirective(format!(
                "standard sequence has length {}, shorter than {}",
                s.len(),
                args.length
            )));
        }
        s.prefix(args.length)
    } else {
        return Err(Error::InvalidArgument(
            "choose a generator: --name, --mechanical, --characteristic, --directive or --spec"
                .into(),
        ));
    };
    Ok(match format {
        Some("seq") => write_sequences(std::slice::from_ref(&word)),
        _ => format!("{word}\n"),
    })
}

fn run_complexity(args: ComplexityArgs) -> Result<String> {
    let measures = match &args.measures {
        None => MeasureKind::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(|m| MeasureKind::parse(m.trim()))
            .collect::<Result<Vec<_>>>()?,
    };
    let opts = MeasureOptions {
        n_max: args.nmax,
        k_max: args.kmax,
        pattern_window: args.window,
        measures,
    };

    let sources = [
        args.name.is_some(),
        args.spec.is_some(),
        args.file.is_some(),
        args.word.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(Error::InvalidArgument(
            "choose exactly one input: --name, --spec, --file or --word".into(),
        ));
    }

    let report = if let Some(word) = &args.word {
        let words = read_sequences(word)?;
        let w = words
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty --word input".into()))?;
        complexity_report(&w, &opts)?
    } else if let Some(path) = &args.file {
        let text = fs::read_to_string(path)?;
        let w = read_sequences(&text)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidArgument("no sequence in file".into()))?;
        complexity_report(&w, &opts)?
    } else {
        let generate = |len: usize| -> Result<Word> {
            if let Some(spec) = &args.spec {
                let spec: GeneratorSpec = serde_json::from_str(spec)?;
                spec.generate(len)
            } else {
                let which =
                    NamedSequence::parse(args.name.as_deref().unwrap(), args.block.as_deref())?;
                named_sequence(&which, len)
            }
        };
        match args.length {
            Some(len) => complexity_report(&generate(len)?, &opts)?,
            None => complexity_report_adaptive(generate, &opts, 256, 1 << 16)?,
        }
    };
    Ok(complexity_csv(&report))
}

fn load_sft(text: &str) -> Result<Sft> {
    if let Some(path) = text.strip_prefix('@') {
        return Sft::parse(&fs::read_to_string(path)?);
    }
    Sft::parse(text)
}

fn run_sft(args: SftArgs) -> Result<String> {
    let sft = load_sft(&args.sft)?;
    let counts: Vec<u64> = (1..=args.nmax)
        .map(|n| {
            use num_traits::ToPrimitive;
            sft.count_blocks(n).to_u64().unwrap_or(u64::MAX)
        })
        .collect();
    let mut payload = json!({
        "alphabet": sft.alphabet().symbols().iter().collect::<String>(),
        "matrix": sft.matrix(),
        "entropy": sft.entropy(),
        "power_positive_2": sft.is_power_positive(2),
        "block_counts": counts,
    });
    if !args.pattern.is_empty() {
        let mut patterns = Vec::new();
        for spec in &args.pattern {
            let members: Vec<usize> = parse_u64_list(spec)?
                .into_iter()
                .map(|x| x as usize)
                .collect();
            let horizon = members.iter().max().map_or(1, |m| m + 1);
            let set = CoordinateSet::new(horizon, members.clone())?;
            use num_traits::ToPrimitive;
            let count = sft.pattern_count(&set)?.to_u64().unwrap_or(u64::MAX);
            patterns.push(json!({"set": members, "count": count}));
        }
        payload["patterns"] = json!(patterns);
    }
    if let Some(n) = args.debruijn {
        let g = sft.de_bruijn_graph(n)?;
        payload["debruijn"] = json!({
            "n": n,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "irreducible": is_irreducible(&g),
        });
    }
    round_json(&mut payload);
    Ok(format!("{}\n", serde_json::to_string_pretty(&payload)?))
}

fn run_intricacy(args: IntricacyArgs) -> Result<String> {
    let sft = load_sft(&args.sft)?;
    let weights = CoefficientSystem::parse(&args.weights)?;
    let mut payload = match args.mode.as_str() {
        "series" => {
            if weights != CoefficientSystem::Uniform {
                return Err(Error::Precondition(
                    "the series limit is available for uniform weights only".into(),
                ));
            }
            let s = intricacy::asc_sft_series(&sft)?;
            json!({
                "method": "series",
                "weights": weights.label(),
                "h": s.h,
                "asc": s.asc,
                "int": s.int,
                "terms": s.terms,
                "tail_bound": s.tail_bound,
            })
        }
        "profile" => {
            let points = intricacy::asc_profile(&sft, args.nmax, &weights)?;
            json!({
                "method": "profile",
                "weights": weights.label(),
                "h": sft.entropy(),
                "points": points
                    .iter()
                    .map(|p| json!({"n": p.n, "asc": p.asc, "int": p.int}))
                    .collect::<Vec<_>>(),
            })
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown mode {other:?}, expected series or profile"
            )))
        }
    };
    round_json(&mut payload);
    Ok(format!("{}\n", serde_json::to_string_pretty(&payload)?))
}

fn parse_markov_params(specs: &[String]) -> Result<Vec<(String, char, f64)>> {
    let mut out = Vec::new();
    for spec in specs.iter().flat_map(|s| s.split(',')) {
        let spec = spec.trim();
        if spec.is_empty() {
            continue;
        }
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("expected key=value, got {spec:?}")))?;
        let prob: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad probability {value:?}")))?;
        let key = key.trim();
        let body = key
            .strip_prefix('p')
            .ok_or_else(|| Error::InvalidArgument(format!("parameter {key:?} must look like p00")))?;
        let chars: Vec<char> = body.chars().collect();
        if chars.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "parameter {key:?} needs a context and a successor symbol"
            )));
        }
        let context: String = chars[..chars.len() - 1].iter().collect();
        out.push((context, chars[chars.len() - 1], prob));
    }
    Ok(out)
}

fn run_markov(args: MarkovArgs, seed: u64) -> Result<String> {
    let mut payload = match args.action {
        MarkovAction::Eval { sft, order, params, brute } => {
            let x = load_sft(&sft)?;
            let triples = parse_markov_params(&params)?;
            let m = MarkovMeasure::build_rstep(&x, order, &triples)?;
            let series = m.asc_mu(1e-12)?;
            let mut payload = json!({
                "sft": sft,
                "order": order,
                "params": triples
                    .iter()
                    .map(|(c, n, v)| (format!("p{c}{n}"), *v))
                    .collect::<std::collections::BTreeMap<_, _>>(),
                "stationary": m.stationary(),
                "h": m.entropy_rate(),
                "asc": series.value,
                "int": m.int_mu()?,
                "terms": series.terms,
                "tail_bound": series.tail_bound,
            });
            if let Some(n) = brute {
                payload["brute_asc"] = json!(m.brute_asc_mu(n, &CoefficientSystem::Uniform)?);
                payload["brute_n"] = json!(n);
            }
            payload
        }
        MarkovAction::Optimize { sft, order, target, grid } => {
            let x = load_sft(&sft)?;
            let target = Target::parse(&target)?;
            let opts = OptimizeOptions { grid, seed, ..OptimizeOptions::default() };
            let report = optimize::optimize(&x, order, target, &opts)?;
            serde_json::to_value(&report)?
        }
    };
    round_json(&mut payload);
    Ok(format!("{}\n", serde_json::to_string_pretty(&payload)?))
}
