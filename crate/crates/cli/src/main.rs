//! Command-line surface: list irreps, compute Laplacian spectra, run the
//! verification checks and the corpus, and generate hypergraphs.
//!
//! Exit codes: 0 when everything passes (or the command is informational),
//! 1 when at least one check fails, 2 on usage or input errors. Reports go
//! to stdout; diagnostics to stderr.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wreathgap_cli::report::{self, render, Format, IrrepRow, Report};
use wreathgap::combinatorics::{MultiPartition, Partition};
use wreathgap::error::Error;
use wreathgap::groups::load_group;
use wreathgap::hypergraph::{generate, parse_hypergraph, serialize_hypergraph, GeneratorSpec, WeightedHypergraph};
use wreathgap::spectral::{spectral_report, Rep, SpectralReport};
use wreathgap::verify::{
    brute_force_oracle, check_caputo_instances, check_main_theorem, check_prop_gap,
    check_prop_star, check_remark_tuples, check_structural, default_corpus, parse_corpus_spec,
    run_corpus, CaputoClass, CheckResult, Guards,
};
use wreathgap::{GroupTable, Real};

#[derive(Parser)]
#[command(
    name = "wreathgap",
    version,
    about = "Spectral-gap verification for hypergraph Laplacians on S_n and G wr S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Table,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible representations of S_n or G wr S_n.
    Irreps(IrrepsArgs),
    /// Laplacian spectrum of one or all irreps on a hypergraph.
    Spectrum(SpectrumArgs),
    /// Run one verification check.
    Verify(VerifyArgs),
    /// Run a verification corpus (the built-in one by default).
    Corpus(CorpusArgs),
    /// Generate a hypergraph from one of the corpus classes.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct IrrepsArgs {
    /// Base group: builtin name (C2, C3, C4, S3) or a group file path.
    #[arg(long, conflicts_with = "sn")]
    group: Option<String>,
    /// Work in S_n itself instead of a wreath product.
    #[arg(long)]
    sn: bool,
    #[arg(long)]
    n: usize,
    /// Lift the enumeration size guard.
    #[arg(long)]
    guard_override: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, conflicts_with = "sn")]
    group: Option<String>,
    #[arg(long)]
    sn: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    hypergraph: PathBuf,
    /// Irrep label: a partition like "(2,1)" for S_n, a multi-partition
    /// like "((2);(1))" for the wreath product.
    #[arg(long, conflicts_with = "all_irreps")]
    irrep: Option<String>,
    #[arg(long)]
    all_irreps: bool,
    #[arg(long)]
    guard_override: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    which: VerifyWhich,
}

#[derive(Subcommand)]
enum VerifyWhich {
    /// lambda*_min(Reg_W) = lambda*_min(Reg_S), strict off lifts.
    Main(CommonVerify),
    /// lambda_min(std) <= min-degree, strict without almost-isolated vertices.
    Star(CommonVerify),
    /// Every non-lift irrep has lambda_min >= min-degree.
    Gap(CommonVerify),
    /// Regular-representation eigenvalue multiset oracle.
    Oracle(CommonVerify),
    /// Three-way equality on a verified hypergraph class.
    Caputo(CaputoVerify),
    /// Flat spectra outside the distinguished family for |B| >= n-1.
    Tuples(CommonVerify),
    /// Projector, PSD, commutation, lift-equality and isotypic laws.
    Structural(CommonVerify),
}

#[derive(Args)]
struct CommonVerify {
    #[arg(long)]
    group: Option<String>,
    /// Restrict to S_n (only meaningful for star and oracle).
    #[arg(long)]
    sn: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    hypergraph: PathBuf,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    guard_override: bool,
}

#[derive(Args)]
struct CaputoVerify {
    #[command(flatten)]
    common: CommonVerify,
    /// Hypergraph class: pairs, tuples, mean_field or akp.
    #[arg(long)]
    class: String,
    /// Anchor for the akp class, e.g. "1,2".
    #[arg(long)]
    b0: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus spec file; the built-in corpus when absent.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    guard_override: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// complete_graph, mean_field, pairs, top_heavy, akp or random.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Anchor vertices for akp, e.g. "1,2".
    #[arg(long)]
    b0: Option<String>,
    /// Size-to-weight map for mean_field, e.g. "2=1.0,3=0.5".
    #[arg(long)]
    size_weights: Option<String>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    match run(cli.command, format) {
        Ok((output, code)) => {
            print!("{output}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn guards_for(guard_override: bool) -> Guards {
    if guard_override {
        Guards::unguarded()
    } else {
        Guards::from_env()
    }
}

fn load_hypergraph(path: &PathBuf, n_flag: Option<usize>) -> Result<WeightedHypergraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let gamma = parse_hypergraph(&text)?;
    if let Some(n) = n_flag {
        if n != gamma.n() {
            return Err(Error::mismatch(format!(
                "--n {n} but hypergraph has n = {}",
                gamma.n()
            )));
        }
    }
    Ok(gamma)
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(format!("bad vertex {v:?}")))
        })
        .collect()
}

fn base_inputs(format_tag: &str) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("format".into(), format_tag.into());
    m
}

fn run(command: Command, format: Format) -> Result<(String, i32), Error> {
    let format_tag = match format {
        Format::Json => "json",
        Format::Table => "table",
        Format::Csv => "csv",
    };
    match command {
        Command::Irreps(args) => {
            let mut inputs = base_inputs(format_tag);
            inputs.insert("n".into(), args.n.to_string());
            let rows: Vec<IrrepRow> = if args.sn {
                inputs.insert("group".into(), "S_n".into());
                wreathgap::sn_reps::all_sn_irreps::<Real>(args.n)
                    .iter()
                    .map(|r| IrrepRow {
                        label: r.label().to_string(),
                        dimension: r.dimension(),
                        is_lift: false,
                        is_trivial: r.is_trivial(),
                    })
                    .collect()
            } else {
                let name = args
                    .group
                    .ok_or_else(|| Error::invalid("need --group or --sn"))?;
                inputs.insert("group".into(), name.clone());
                let g: Arc<GroupTable> = Arc::new(load_group(&name)?);
                let guards = guards_for(args.guard_override);
                wreathgap::wreath_reps::enumerate_wn_irreps(
                    &g,
                    args.n,
                    Some(guards.max_enum_sum_dim_sq),
                )?
                .iter()
                .map(|r| IrrepRow {
                    label: r.label().to_string(),
                    dimension: r.dimension(),
                    is_lift: r.is_lift(),
                    is_trivial: r.is_trivial(),
                })
                .collect()
            };
            let mut report = Report::new("irreps", inputs);
            report.results.irreps = rows;
            Ok((render(&report, format), 0))
        }

        Command::Spectrum(args) => {
            let gamma = load_hypergraph(&args.hypergraph, args.n)?;
            let n = gamma.n();
            let mut inputs = base_inputs(format_tag);
            inputs.insert("n".into(), n.to_string());
            inputs.insert("hypergraph_file".into(), args.hypergraph.display().to_string());
            inputs.insert("hypergraph".into(), serialize_hypergraph(&gamma));

            let reps: Vec<Rep<Real>> = if args.sn {
                inputs.insert("group".into(), "S_n".into());
                let all = wreathgap::sn_reps::all_sn_irreps::<Real>(n);
                match &args.irrep {
                    Some(label) => {
                        inputs.insert("irrep".into(), label.clone());
                        let mu = Partition::parse(label)?;
                        if mu.size() != n {
                            return Err(Error::mismatch(format!(
                                "partition {mu} has size {}, hypergraph has n = {n}",
                                mu.size()
                            )));
                        }
                        vec![Rep::Sn(wreathgap::sn_reps::sn_irrep(&mu))]
                    }
                    None => all.into_iter().map(Rep::Sn).collect(),
                }
            } else {
                let name = args
                    .group
                    .ok_or_else(|| Error::invalid("need --group or --sn"))?;
                inputs.insert("group".into(), name.clone());
                let g: Arc<GroupTable> = Arc::new(load_group(&name)?);
                let guards = guards_for(args.guard_override);
                match &args.irrep {
                    Some(label) => {
                        inputs.insert("irrep".into(), label.clone());
                        let mv = MultiPartition::parse(label)?;
                        vec![Rep::Wn(wreathgap::wreath_reps::build_wreath_irrep(
                            &g, &mv,
                        )?)]
                    }
                    None => wreathgap::wreath_reps::enumerate_wn_irreps(
                        &g,
                        n,
                        Some(guards.max_enum_sum_dim_sq),
                    )?
                    .into_iter()
                    .map(Rep::Wn)
                    .collect(),
                }
            };

            let spectra: Vec<SpectralReport> = reps
                .iter()
                .map(|rep| spectral_report(rep, &gamma, rep.natural_flavor()))
                .collect::<Result<_, _>>()?;
            let report = Report::new("spectrum", inputs).with_spectra(&spectra);
            Ok((render(&report, format), 0))
        }

        Command::Verify(args) => {
            let (name, common, checks) = run_verify(args)?;
            let mut inputs = base_inputs(format_tag);
            inputs.insert("hypergraph_file".into(), common.0);
            inputs.insert("hypergraph".into(), common.1);
            if let Some(g) = common.2 {
                inputs.insert("group".into(), g);
            }
            inputs.insert("tol".into(), report::format_float(common.3));
            inputs.insert("seed".into(), common.4.to_string());
            let report = Report::new(name, inputs).with_checks(&checks);
            let code = report.exit_code();
            Ok((render(&report, format), code))
        }

        Command::Corpus(args) => {
            let mut inputs = base_inputs(format_tag);
            let spec = match &args.corpus {
                Some(path) => {
                    inputs.insert("corpus".into(), path.display().to_string());
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                    })?;
                    parse_corpus_spec(&text)?
                }
                None => {
                    inputs.insert("corpus".into(), "builtin".into());
                    default_corpus()
                }
            };
            inputs.insert("entries".into(), spec.entries.len().to_string());
            let guards = guards_for(args.guard_override);
            let results = run_corpus::<Real>(&spec, &guards);
            let mut checks: Vec<CheckResult> = Vec::new();
            for entry in &results {
                for r in &entry.results {
                    let mut r = r.clone();
                    r.check_name = format!("{} :: {}", entry.label, r.check_name);
                    checks.push(r);
                }
            }
            let report = Report::new("corpus", inputs).with_checks(&checks);
            let code = report.exit_code();
            Ok((render(&report, format), code))
        }

        Command::Generate(args) => {
            let spec = match args.kind.as_str() {
                "complete_graph" => GeneratorSpec::CompleteGraph { n: args.n },
                "mean_field" => {
                    let text = args
                        .size_weights
                        .ok_or_else(|| Error::invalid("mean_field needs --size-weights"))?;
                    let mut size_weights = BTreeMap::new();
                    for part in text.split(',') {
                        let (size, weight) = part
                            .split_once('=')
                            .ok_or_else(|| Error::parse(format!("bad size=weight pair {part:?}")))?;
                        size_weights.insert(
                            size.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::parse(format!("bad size {size:?}")))?,
                            weight
                                .trim()
                                .parse::<f64>()
                                .map_err(|_| Error::parse(format!("bad weight {weight:?}")))?,
                        );
                    }
                    GeneratorSpec::MeanField {
                        n: args.n,
                        size_weights,
                    }
                }
                "pairs" => GeneratorSpec::PairsRandom {
                    n: args.n,
                    seed: args.seed,
                },
                "top_heavy" => GeneratorSpec::TopHeavy {
                    n: args.n,
                    seed: args.seed,
                },
                "akp" => GeneratorSpec::Akp {
                    n: args.n,
                    b0: parse_vertex_list(
                        &args.b0.ok_or_else(|| Error::invalid("akp needs --b0"))?,
                    )?,
                    seed: args.seed,
                },
                "random" => GeneratorSpec::Random {
                    n: args.n,
                    seed: args.seed,
                },
                other => {
                    return Err(Error::Unknown {
                        kind: "generator",
                        name: other.into(),
                    })
                }
            };
            let gamma = generate(&spec)?;
            let text = format!("{}\n", serialize_hypergraph(&gamma));
            match &args.out {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    Ok((String::new(), 0))
                }
                None => Ok((text, 0)),
            }
        }
    }
}

type VerifyCommon = (String, String, Option<String>, f64, u64);

fn run_verify(args: VerifyArgs) -> Result<(String, VerifyCommon, Vec<CheckResult>), Error> {
    let common = match &args.which {
        VerifyWhich::Main(c)
        | VerifyWhich::Star(c)
        | VerifyWhich::Gap(c)
        | VerifyWhich::Oracle(c)
        | VerifyWhich::Tuples(c)
        | VerifyWhich::Structural(c) => c,
        VerifyWhich::Caputo(c) => &c.common,
    };
    let gamma = load_hypergraph(&common.hypergraph, common.n)?;
    let guards = guards_for(common.guard_override);
    let group: Option<Arc<GroupTable>> = match &common.group {
        Some(name) => Some(Arc::new(load_group(name)?)),
        None => None,
    };
    let need_group = || {
        group
            .clone()
            .ok_or_else(|| Error::invalid("this check needs --group"))
    };
    let echo: VerifyCommon = (
        common.hypergraph.display().to_string(),
        serialize_hypergraph(&gamma),
        common.group.clone(),
        common.tol,
        common.seed,
    );

    let (name, checks) = match &args.which {
        VerifyWhich::Main(c) => (
            "verify main",
            vec![check_main_theorem(&need_group()?, &gamma, c.tol, &guards)?],
        ),
        VerifyWhich::Star(c) => {
            let lift_groups: Vec<Arc<GroupTable>> = group.iter().cloned().collect();
            (
                "verify star",
                vec![check_prop_star(&gamma, &lift_groups, c.tol)?],
            )
        }
        VerifyWhich::Gap(c) => (
            "verify gap",
            vec![check_prop_gap(&need_group()?, &gamma, c.tol, &guards)?],
        ),
        VerifyWhich::Oracle(c) => {
            // Reg_{S_n} always; Reg_{W_n} when a base group is given.
            let mut checks = vec![brute_force_oracle::<Real>(None, &gamma, c.tol, &guards)?];
            if let Some(g) = &group {
                checks.push(brute_force_oracle(Some(g), &gamma, c.tol, &guards)?);
            }
            if group.is_none() && !c.sn {
                return Err(Error::invalid("oracle needs --group or --sn"));
            }
            ("verify oracle", checks)
        }
        VerifyWhich::Caputo(c) => {
            let class = match c.class.as_str() {
                "pairs" => CaputoClass::PairsAndSingletons,
                "tuples" => CaputoClass::TuplesNMinus1,
                "mean_field" => CaputoClass::MeanField,
                "akp" => CaputoClass::Akp {
                    b0: parse_vertex_list(
                        c.b0.as_deref()
                            .ok_or_else(|| Error::invalid("akp class needs --b0"))?,
                    )?,
                },
                other => {
                    return Err(Error::Unknown {
                        kind: "caputo class",
                        name: other.into(),
                    })
                }
            };
            (
                "verify caputo",
                vec![check_caputo_instances(
                    &need_group()?,
                    &gamma,
                    &class,
                    c.common.tol,
                    &guards,
                )?],
            )
        }
        VerifyWhich::Tuples(c) => (
            "verify tuples",
            vec![check_remark_tuples(&need_group()?, &gamma, c.tol, &guards)?],
        ),
        VerifyWhich::Structural(c) => (
            "verify structural",
            vec![check_structural(&need_group()?, &gamma, &guards, c.seed)?],
        ),
    };
    Ok((name.to_string(), echo, checks))
}
