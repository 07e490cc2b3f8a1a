//! The `search` subcommand: build the word gauge group, run the clique
//! search, assemble the code, optionally verify, and write a certificate.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use eaocws::search::search_codewords;
use eaocws::{
    Budget, Certificate, CodeLayout, EaocwsCode, GaugeGroup, Graph, SearchMeta, SearchMode,
    SearchProblem,
};

use crate::verify::{route_verdicts, RouteArg};
use crate::{EXIT_NO_CODE, EXIT_VERIFY_FAILED};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    /// Forbid the effective word of every error up to weight d−1, with
    /// commutation constraints from every zero-reducing error in that range
    Detect,
    /// Forbid pairwise differences of effective words of errors up to
    /// weight (d−1)/2, with commutation constraints from single errors only
    #[value(alias = "correct-single")]
    Correct,
}

impl From<ModeArg> for SearchMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Detect => SearchMode::Detect,
            ModeArg::Correct => SearchMode::Correct,
        }
    }
}

#[derive(Args)]
pub struct SearchArgs {
    /// Alice register size (graph vertices)
    #[arg(long)]
    pub n: usize,
    /// Ebit pairs shared with Bob
    #[arg(long)]
    pub c: usize,
    /// Gauge qubits
    #[arg(long)]
    pub r: usize,
    /// Distance the code should reach
    #[arg(long)]
    pub d: usize,
    /// `ring`, or a path to an adjacency file: first line the vertex count,
    /// then one 1-based `i j` edge per line; `#` starts a comment
    #[arg(long, default_value = "ring")]
    pub graph: String,
    /// Which error sets constrain the search
    #[arg(long, value_enum, default_value_t = ModeArg::Detect)]
    pub mode: ModeArg,
    /// Permutes initial branching order; the result is canonical whenever
    /// the budget suffices to prove optimality
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Nominal seconds, converted to a deterministic node budget at
    /// 1,000,000 nodes per second; the wall clock is never consulted
    #[arg(long, default_value_t = 10.0)]
    pub budget: f64,
    /// Write the JSON certificate here
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Verify before writing; a failure exits 4 with the certificate still
    /// written
    #[arg(long, value_enum, value_name = "ROUTE")]
    pub verify: Option<RouteArg>,
    /// Exit 3 unless the search reaches this dimension
    #[arg(long, value_name = "K")]
    pub min_k: Option<usize>,
    /// Print the certificate JSON to stdout instead of the report
    #[arg(long)]
    pub json: bool,
}

pub fn load_graph(spec: &str, n: usize) -> Result<Graph> {
    if spec == "ring" {
        return Ok(Graph::ring(n)?);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading graph file {spec}"))?;
    parse_graph(&text, n).with_context(|| format!("parsing graph file {spec}"))
}

fn parse_graph(text: &str, n: usize) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty());
    let header = lines.next().context("no vertex-count line")?;
    let vertices: usize =
        header.parse().with_context(|| format!("vertex count {header:?}"))?;
    if vertices != n {
        bail!("file declares {vertices} vertices but --n is {n}");
    }
    let mut edges = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            bail!("edge line {line:?} is not of the form `i j`");
        };
        let a: usize = a.parse().with_context(|| format!("vertex {a:?}"))?;
        let b: usize = b.parse().with_context(|| format!("vertex {b:?}"))?;
        edges.push((a, b));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn run(args: &SearchArgs) -> Result<u8> {
    let layout = CodeLayout::new(args.n, args.c, args.r)?;
    let graph = load_graph(&args.graph, args.n)?;
    let group = GaugeGroup::build(layout, graph)?;
    let mode = SearchMode::from(args.mode);
    let problem = SearchProblem::build(&group, args.d, mode)?;
    let budget = Budget::from_seconds(args.budget);
    let outcome = search_codewords(&problem, args.seed, budget);
    let code = EaocwsCode::new(group, outcome.codewords.clone(), args.d)?;
    let meta = SearchMeta {
        mode,
        distance: args.d,
        seed: args.seed,
        budget_nodes: budget.nodes(),
        nodes_used: outcome.nodes_used,
        optimal: outcome.optimal,
        budget_exhausted: outcome.budget_exhausted,
    };
    let mut certificate = Certificate::new(&code, meta)?;

    let mut any_failed = false;
    let mut verify_lines = Vec::new();
    if let Some(route) = args.verify {
        for run in route_verdicts(&code, route)? {
            any_failed |= run.verdict == eaocws::Verdict::Fail;
            verify_lines.push(crate::verify::run_line(&run));
            certificate.attach_run(run);
        }
    }

    if let Some(path) = &args.out {
        certificate.save(path)?;
    }

    if args.json {
        print!("{}", certificate.to_json_string()?);
    } else {
        let graph_desc = if args.graph == "ring" {
            format!("ring ({} vertices)", args.n)
        } else {
            format!("{} ({} vertices)", args.graph, args.n)
        };
        println!("graph: {graph_desc}");
        println!(
            "layout: s={} ancilla, c={} ebit, r={} gauge; {:?} mode at d={}",
            code.layout().s(),
            args.c,
            args.r,
            mode,
            args.d
        );
        println!(
            "search: K={} — {}; {} candidate words, {} of {} nodes",
            outcome.dimension,
            if outcome.optimal {
                "proven maximal"
            } else if outcome.budget_exhausted {
                "budget exhausted, best found"
            } else {
                "stopped early"
            },
            problem.candidates().len(),
            outcome.nodes_used,
            budget.nodes()
        );
        let words: Vec<String> = code.codewords().iter().map(|w| w.to_text()).collect();
        println!("codewords: {}", words.join(" "));
        println!("parameters: {}", code.params());
        for line in &verify_lines {
            println!("verification: {line}");
        }
        if let Some(path) = &args.out {
            println!("certificate: {}", path.display());
        }
    }

    if let Some(min_k) = args.min_k {
        if outcome.dimension < min_k {
            return Ok(EXIT_NO_CODE);
        }
    }
    if any_failed {
        return Ok(EXIT_VERIFY_FAILED);
    }
    Ok(0)
}
