use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use unicyclic::correlate::correlation_table;
use unicyclic::edgelist::{read_edge_list, read_edge_lists, write_edge_list};
use unicyclic::families::FamilySpec;
use unicyclic::verification::{
    admissible_params, check_lemma, check_theorem_with_workers, formula_audit, reproduce_counterexamples, Params, TheoremId, Verdict,
};
use unicyclic::{
    hosoya, merrifield_simmons, subtree_profile, trees, unicyclic as enumerate_unicyclic, wiener, ClassFilter, Graph, SegmentSequence,
};

#[derive(Parser)]
#[command(name = "unicyclic", version, about = "Exact subtree, Wiener, Merrifield-Simmons and Hosoya computations on trees and unicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices of graphs read from an edge list or built from a family.
    Compute(ComputeArgs),
    /// Print a family member as an edge list.
    Family {
        kind: FamilyKind,
        #[command(flatten)]
        opts: FamilyOpts,
    },
    /// Enumerate a class up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Run a theorem checker, a lemma suite or the counterexample reproduction.
    Verify(VerifyArgs),
    /// Index table and rank correlations over a class, as CSV.
    Correlate {
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Star,
    Us,
    Up,
    /// `U_i` over `--segments` with `--index i`.
    U,
    U1,
    U2,
    /// Two branching vertices joined by the arcs `--arcs`.
    Utwo,
    U1n,
    Starlike,
    /// Cycle of length `--girth` with pendant paths given by `--attach`.
    Pendants,
    /// `--graph` slid along `P_n` to position `--k`, glued at `--vertex`.
    Slide,
}

#[derive(Args, Default)]
struct FamilyOpts {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    segments: Vec<usize>,
    #[arg(long)]
    index: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    arcs: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    left: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    right: Vec<usize>,
    /// Pendant paths as `pos:len,len;pos:len`.
    #[arg(long)]
    attach: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    /// Edge-list file holding the slid graph.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    vertex: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file (`-` for stdin); may hold several graphs.
    #[arg(long, conflicts_with = "family")]
    input: Option<String>,
    #[arg(long, required_unless_present = "input")]
    family: Option<FamilyKind>,
    #[command(flatten)]
    opts: FamilyOpts,
    /// Subset of subtrees, profile, wiener, sigma, hosoya, segments, girth.
    #[arg(long, value_delimiter = ',')]
    indices: Vec<Index>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Index {
    Subtrees,
    Profile,
    Wiener,
    Sigma,
    Hosoya,
    Segments,
    Girth,
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    segments: Option<SegmentSequence>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    segment_count: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edgelist,
    Count,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    filter: FilterArgs,
    /// Enumerate trees of `--order` instead of unicyclic graphs.
    #[arg(long)]
    trees: bool,
    #[arg(long, value_enum, default_value_t = Emit::Edgelist)]
    emit: Emit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem or lemma identifier, e.g. T3 or L4_1.
    #[arg(long, required_unless_present_any = ["counterexamples", "formulas"])]
    theorem: Option<TheoremId>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    segments: Option<SegmentSequence>,
    #[arg(long)]
    segment_count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<usize>,
    /// Check every admissible parameter set up to this order instead.
    #[arg(long, conflicts_with_all = ["n", "girth", "segments", "segment_count"])]
    sweep: Option<usize>,
    /// Reproduce the two index counterexamples.
    #[arg(long, conflicts_with_all = ["theorem", "formulas"])]
    counterexamples: bool,
    /// Compare every closed form with exact computation up to this order.
    #[arg(long, conflicts_with = "theorem")]
    formulas: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Report::Json)]
    report: Report,
}

enum Failure {
    /// Bad input, unmet hypothesis or a bound exceeded.
    Input(String),
    Io(String),
}

impl From<unicyclic::Error> for Failure {
    fn from(e: unicyclic::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// What a successful command wants printed, and whether a counterexample
/// turned up.
struct Output {
    text: String,
    counterexample: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Output { text, counterexample: false }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    v.ok_or_else(|| input(format!("{kind} needs --{flag}")))
}

fn read_text(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(source).map_err(|e| Failure::Io(format!("{source}: {e}")))
    }
}

fn parse_attach(spec: &str) -> Result<BTreeMap<usize, Vec<usize>>, Failure> {
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (pos, lens) = part.split_once(':').ok_or_else(|| input(format!("attachment `{part}` is not pos:len,...")))?;
        let pos: usize = pos.trim().parse().map_err(|_| input(format!("bad position in `{part}`")))?;
        for l in lens.split(',') {
            let l = l.trim().parse().map_err(|_| input(format!("bad length in `{part}`")))?;
            out.entry(pos).or_default().push(l);
        }
    }
    Ok(out)
}

fn family_spec(kind: FamilyKind, o: &FamilyOpts) -> Result<FamilySpec, Failure> {
    let name = || match kind {
        FamilyKind::Path => "path",
        FamilyKind::Cycle => "cycle",
        FamilyKind::Star => "star",
        FamilyKind::Us => "us",
        FamilyKind::Up => "up",
        FamilyKind::U => "u",
        FamilyKind::U1 => "u1",
        FamilyKind::U2 => "u2",
        FamilyKind::Utwo => "utwo",
        FamilyKind::U1n => "u1n",
        FamilyKind::Starlike => "starlike",
        FamilyKind::Pendants => "pendants",
        FamilyKind::Slide => "slide",
    };
    let n = || need(o.n, "n", name());
    let segments = || -> Result<Vec<usize>, Failure> {
        if o.segments.is_empty() {
            return Err(input(format!("{} needs --segments", name())));
        }
        Ok(SegmentSequence::new(o.segments.clone()).lengths().to_vec())
    };
    let spec = match kind {
        FamilyKind::Path => FamilySpec::Path(n()?),
        FamilyKind::Cycle => FamilySpec::Cycle(n()?),
        FamilyKind::Star => FamilySpec::Star(n()?),
        FamilyKind::Us => FamilySpec::Us { n: n()?, girth: o.girth.unwrap_or(3) },
        FamilyKind::Up => FamilySpec::Up { n: n()?, girth: o.girth.unwrap_or(3) },
        FamilyKind::U => FamilySpec::CycleSegment { lengths: segments()?, index: need(o.index, "index", "u")? },
        FamilyKind::U1 => FamilySpec::CycleSegment { lengths: segments()?, index: 1 },
        FamilyKind::U2 => FamilySpec::CycleSegment { lengths: segments()?, index: 2 },
        FamilyKind::Utwo => {
            if o.arcs.len() != 2 {
                return Err(input("utwo needs --arcs li,lj"));
            }
            FamilySpec::TwoBranch { arcs: (o.arcs[0], o.arcs[1]), left: o.left.clone(), right: o.right.clone() }
        }
        FamilyKind::U1n => FamilySpec::U1n(n()?),
        FamilyKind::Starlike => FamilySpec::Starlike(segments()?),
        FamilyKind::Pendants => FamilySpec::CyclePendants {
            girth: need(o.girth, "girth", "pendants")?,
            attachments: parse_attach(o.attach.as_deref().unwrap_or(""))?,
        },
        FamilyKind::Slide => {
            let file = o.graph.as_deref().ok_or_else(|| input("slide needs --graph"))?;
            FamilySpec::Slide { n: n()?, k: need(o.k, "k", "slide")?, graph: read_edge_list(&read_text(file)?)?, vertex: o.vertex.unwrap_or(0) }
        }
    };
    Ok(spec)
}

fn build_family(kind: FamilyKind, o: &FamilyOpts) -> Result<Graph, Failure> {
    Ok(family_spec(kind, o)?.build()?)
}

fn compute_record(g: &Graph, requested: &[Index]) -> Result<Value, Failure> {
    let explicit = !requested.is_empty();
    let all = [Index::Subtrees, Index::Profile, Index::Wiener, Index::Sigma, Index::Hosoya, Index::Segments, Index::Girth];
    let wanted: Vec<Index> = if explicit { requested.to_vec() } else { all.to_vec() };
    let mut rec = Map::new();
    rec.insert("order".into(), json!(g.vertex_count().to_string()));
    let profile = if wanted.iter().any(|i| matches!(i, Index::Subtrees | Index::Profile)) { Some(subtree_profile(g)?) } else { None };
    for index in wanted {
        match index {
            Index::Subtrees => {
                rec.insert("n".into(), json!(profile.as_ref().expect("computed").total().to_string()));
            }
            Index::Profile => {
                let p = profile.as_ref().expect("computed");
                rec.insert("profile".into(), p.counts().iter().map(|c| json!(c.to_string())).collect());
            }
            Index::Wiener => {
                rec.insert("wiener".into(), json!(wiener(g)?.to_string()));
            }
            Index::Sigma => {
                rec.insert("sigma".into(), json!(merrifield_simmons(g).to_string()));
            }
            Index::Hosoya => {
                rec.insert("hosoya".into(), json!(hosoya(g).to_string()));
            }
            Index::Segments | Index::Girth if !explicit && !g.is_unicyclic() => {}
            Index::Segments => {
                let seq = g.segment_sequence()?;
                rec.insert("segments".into(), seq.lengths().iter().map(|l| json!(l.to_string())).collect());
            }
            Index::Girth => {
                rec.insert("girth".into(), json!(g.cycle_info()?.girth.to_string()));
            }
        }
    }
    Ok(Value::Object(rec))
}

fn compute(args: &ComputeArgs) -> Result<Output, Failure> {
    let graphs = match (&args.input, args.family) {
        (Some(source), _) => read_edge_lists(&read_text(source)?)?,
        (None, Some(kind)) => vec![build_family(kind, &args.opts)?],
        (None, None) => return Err(input("compute needs --input or --family")),
    };
    let mut text = String::new();
    for g in &graphs {
        text += &serde_json::to_string(&compute_record(g, &args.indices)?).expect("json");
        text.push('\n');
    }
    Ok(Output::plain(text))
}

fn class_filter(f: &FilterArgs) -> Result<ClassFilter, Failure> {
    let order = match (f.order, &f.segments) {
        (Some(n), _) => n,
        (None, Some(seq)) => seq.total(),
        (None, None) => return Err(input("give --order or --segments")),
    };
    let filter = ClassFilter { order, girth: f.girth, segment_sequence: f.segments.clone(), segment_count: f.segment_count };
    filter.validate()?;
    Ok(filter)
}

fn enumerate(args: &EnumerateArgs) -> Result<Output, Failure> {
    let members = if args.trees {
        let f = &args.filter;
        if f.segments.is_some() || f.girth.is_some() || f.segment_count.is_some() {
            return Err(input("--trees only takes --order"));
        }
        trees(need(f.order, "order", "tree enumeration")?)?
    } else {
        enumerate_unicyclic(&class_filter(&args.filter)?)?
    };
    let text = match args.emit {
        Emit::Count => format!("{}\n", members.len()),
        Emit::Edgelist => members.iter().map(|m| format!("# {}\n{}", m.key.to_hex(), write_edge_list(&m.graph))).collect(),
    };
    Ok(Output::plain(text))
}

fn render_verdicts(verdicts: &[Verdict], report: Report) -> String {
    match report {
        Report::Json if verdicts.len() == 1 => verdicts[0].to_json() + "\n",
        Report::Json => serde_json::to_string_pretty(verdicts).expect("json") + "\n",
        Report::Text => verdicts
            .iter()
            .map(|v| {
                let params = serde_json::to_string(&v.params).expect("json");
                let status = if v.holds { "holds" } else { "FAILS" };
                let mut line = format!("{} {params}: {status}; class size {}", v.theorem, v.class_size);
                if v.theorem.is_theorem() {
                    line += &format!("; extremal value {}; achieved by {} class(es)", v.extremal_value, v.achieved_by.len());
                }
                if let Some(c) = &v.counterexample {
                    line += &format!("; counterexample: {} (expected {}, got {})", c.detail, c.expected, c.actual);
                }
                for f in &v.findings {
                    line += &format!("\n  {}: {}", serde_json::to_value(f.kind).expect("json").as_str().unwrap_or(""), f.detail);
                }
                line + "\n"
            })
            .collect(),
    }
}

fn verify(args: &VerifyArgs) -> Result<Output, Failure> {
    if args.counterexamples {
        let r = reproduce_counterexamples()?;
        let text = match args.report {
            Report::Json => r.to_json() + "\n",
            Report::Text => r.checks.iter().map(|c| format!("{} {}: expected {}, got {}\n", if c.ok { "ok  " } else { "FAIL" }, c.name, c.expected, c.actual)).collect(),
        };
        return Ok(Output { text, counterexample: !r.all_hold() });
    }
    if let Some(max_n) = args.formulas {
        if max_n > 30 {
            return Err(input("--formulas supports orders up to 30"));
        }
        let checks = formula_audit(max_n);
        let text = match args.report {
            Report::Json => serde_json::to_string_pretty(&checks).expect("json") + "\n",
            Report::Text => checks
                .iter()
                .map(|c| format!("{} {}{:?}: formula {}, exact {}\n", if c.agrees { "ok  " } else { "DIFF" }, c.family, c.params, c.formula, c.computed))
                .collect(),
        };
        return Ok(Output::plain(text));
    }
    let id = args.theorem.ok_or_else(|| input("verify needs --theorem"))?;
    let run = |p: &Params| if id.is_theorem() { check_theorem_with_workers(id, p, args.workers) } else { check_lemma(id, p) };
    let verdicts = match args.sweep {
        Some(max_order) => {
            if !id.is_theorem() {
                return Err(input("--sweep applies to theorems only"));
            }
            admissible_params(id, max_order)?.iter().map(run).collect::<Result<Vec<_>, _>>()?
        }
        None => {
            let params = Params {
                n: args.n,
                girth: args.girth,
                segments: args.segments.clone(),
                segment_count: args.segment_count,
                seed: args.seed,
                count: args.count,
            };
            vec![run(&params)?]
        }
    };
    Ok(Output { text: render_verdicts(&verdicts, args.report), counterexample: verdicts.iter().any(|v| !v.holds) })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Family { kind, opts } => Ok(Output::plain(write_edge_list(&build_family(*kind, opts)?))),
        Command::Enumerate(args) => enumerate(args),
        Command::Verify(args) => verify(args),
        Command::Correlate { filter, workers } => Ok(Output::plain(correlation_table(&class_filter(filter)?, *workers)?.to_csv())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.counterexample { 3 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
