//! The `reproduce` subcommand: replay the bundled six-ring example and diff
//! every intermediate artifact against the recorded data, or re-run the
//! searches behind the bundled parameter tables cell by cell.

use anyhow::{bail, Context, Result};
use clap::Args;
use eaocws::builder::{
    alice_word_operator, ancilla_pattern, classify_by_pattern, initial_form,
    select_representatives, word_operator,
};
use eaocws::induce::EffectiveErrors;
use eaocws::reference::ring6_example;
use eaocws::search::search_codewords;
use eaocws::{
    Budget, EaocwsCode, GaugeGroup, Graph, CodeLayout, SearchMode, SearchProblem, Verdict,
};
use serde_json::json;

use crate::tables::{self, TableEntry};

#[derive(Args)]
#[command(group = clap::ArgGroup::new("what").required(true))]
pub struct ReproduceArgs {
    /// Replay the bundled six-ring pipeline and diff every intermediate
    #[arg(long, group = "what")]
    pub example: bool,
    /// Re-run searches for a bundled parameter table: 1 (d=3) or 2 (d=5)
    #[arg(long, group = "what", value_name = "TABLE")]
    pub table: Option<u8>,
    /// Cells to run, as `n,c,r` triples (default: a small subset)
    #[arg(long, value_name = "N,C,R", num_args = 1..)]
    pub cells: Vec<String>,
    /// Nominal per-cell seconds (deterministic node budget)
    #[arg(long, default_value_t = 10.0)]
    pub budget: f64,
    /// Machine-readable report
    #[arg(long)]
    pub json: bool,
}

pub fn run(args: &ReproduceArgs) -> Result<u8> {
    if args.example {
        run_example(args.json)
    } else {
        let table = args.table.expect("clap guarantees one of --example/--table");
        run_table(table, &args.cells, args.budget, args.json)
    }
}

struct Section {
    name: &'static str,
    entries: usize,
    mismatches: Vec<String>,
}

impl Section {
    fn new(name: &'static str, entries: usize) -> Self {
        Section { name, entries, mismatches: Vec::new() }
    }

    fn diff(&mut self, what: &str, got: impl AsRef<str>, want: impl AsRef<str>) {
        let (got, want) = (got.as_ref(), want.as_ref());
        if got != want {
            self.mismatches.push(format!("{what}: got {got}, want {want}"));
        }
    }
}

fn run_example(as_json: bool) -> Result<u8> {
    let ex = ring6_example();
    let group = ex.group();
    let mut sections = Vec::new();

    let mut generators = Section::new("generators", ex.generators.len());
    let produced = group.generators();
    generators.diff("count", produced.len().to_string(), ex.generators.len().to_string());
    for ((label, op), recorded) in produced.iter().zip(&ex.generators) {
        generators.diff(label, op.to_text(), &recorded.operator);
        generators.diff("label", label, &recorded.label);
    }
    sections.push(generators);

    let mut effective = Section::new("effective errors", ex.effective_error_words.len());
    let eff = EffectiveErrors::build(&group, 1)?;
    let mut recorded: Vec<String> =
        ex.effective_error_words.iter().map(|w| w.to_text()).collect();
    recorded.sort();
    let computed: Vec<String> = eff.nonzero_words().iter().map(|w| w.to_text()).collect();
    effective.diff("sorted word set", computed.join(" "), recorded.join(" "));
    sections.push(effective);

    let mut operators = Section::new("word operators", ex.codewords.len());
    for (i, word) in ex.codewords.iter().enumerate() {
        let raw = word_operator(&group, word);
        operators.diff(&format!("raw[{i}]"), raw.to_text(), &ex.raw_word_operators[i]);
        let alice = alice_word_operator(&group, word)?;
        operators.diff(
            &format!("bob-eliminated[{i}]"),
            alice.to_text(),
            &ex.alice_word_operators[i],
        );
        operators.diff(
            &format!("initial-form[{i}]"),
            initial_form(&group, &alice)?.to_text(),
            &ex.initial_forms[i],
        );
        operators.diff(
            &format!("pattern[{i}]"),
            ancilla_pattern(&group, &alice).to_string(),
            &ex.ancilla_patterns[i],
        );
    }
    sections.push(operators);

    let mut classes = Section::new("ancilla classes", ex.classes.len());
    let computed_classes = classify_by_pattern(&group, &ex.codewords)?;
    classes.diff("count", computed_classes.len().to_string(), ex.classes.len().to_string());
    for (computed, recorded) in computed_classes.iter().zip(&ex.classes) {
        classes.diff("pattern", computed.pattern.to_string(), &recorded.pattern);
        let members: Vec<String> = computed.members.iter().map(|w| w.to_text()).collect();
        let recorded_members: Vec<String> =
            recorded.members.iter().map(|w| w.to_text()).collect();
        classes.diff("members", members.join(" "), recorded_members.join(" "));
        classes.diff(
            "representative",
            computed.representative.to_text(),
            recorded.representative.to_text(),
        );
    }
    let selected: Vec<String> =
        select_representatives(&computed_classes).iter().map(|w| w.to_text()).collect();
    let recorded_selected: Vec<String> = ex.selected.iter().map(|w| w.to_text()).collect();
    classes.diff("selected", selected.join(" "), recorded_selected.join(" "));
    sections.push(classes);

    let mut parameters = Section::new("parameters", 1);
    let code = ex.code();
    parameters.diff("K", code.dimension().to_string(), ex.parameters.dimension.to_string());
    parameters.diff("display", code.params().to_string(), ex.parameters.to_string());
    sections.push(parameters);

    let all_match = sections.iter().all(|s| s.mismatches.is_empty());
    if as_json {
        let value = json!({
            "example": ex.name,
            "all_match": all_match,
            "sections": sections.iter().map(|s| json!({
                "name": s.name,
                "entries": s.entries,
                "mismatches": s.mismatches,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("replaying {}", ex.name);
        for section in &sections {
            if section.mismatches.is_empty() {
                println!("  {}: OK ({} entries)", section.name, section.entries);
            } else {
                println!("  {}: {} MISMATCHES", section.name, section.mismatches.len());
                for m in &section.mismatches {
                    println!("    {m}");
                }
            }
        }
        println!("{}", if all_match { "all intermediate lists match" } else { "MISMATCHES FOUND" });
    }
    Ok(0)
}

struct CellResult {
    entry: &'static TableEntry,
    modes: Vec<(SearchMode, usize, bool, Verdict)>,
    reached: bool,
}

fn run_table(table: u8, cells: &[String], budget_seconds: f64, as_json: bool) -> Result<u8> {
    let entries: &'static [TableEntry] = match table {
        1 => tables::TABLE_D3,
        2 => tables::TABLE_D5,
        other => bail!("no table {other}; available tables are 1 (d=3) and 2 (d=5)"),
    };
    let selected: Vec<&'static TableEntry> = if cells.is_empty() {
        match table {
            1 => tables::DEFAULT_D3_CELLS
                .iter()
                .map(|&(n, c, r)| tables::find(entries, n, c, r).expect("default cell exists"))
                .collect(),
            _ => entries.iter().collect(),
        }
    } else {
        cells.iter().map(|cell| lookup_cell(entries, cell)).collect::<Result<_>>()?
    };

    let budget = Budget::from_seconds(budget_seconds);
    let mut results = Vec::new();
    for entry in selected {
        let layout = CodeLayout::new(entry.n, entry.c, entry.r)?;
        let group = GaugeGroup::build(layout, Graph::ring(entry.n)?)?;
        let mut modes = Vec::new();
        let mut reached = false;
        for mode in [SearchMode::Detect, SearchMode::Correct] {
            let problem = SearchProblem::build(&group, entry.distance, mode)?;
            let outcome = search_codewords(&problem, 0, budget);
            let code = EaocwsCode::new(group.clone(), outcome.codewords, entry.distance)?;
            let verdict = eaocws::symplectic_verify(&code, entry.distance)?.verdict;
            if outcome.dimension >= entry.target_k && verdict == Verdict::Pass {
                reached = true;
            }
            modes.push((mode, outcome.dimension, outcome.optimal, verdict));
        }
        results.push(CellResult { entry, modes, reached });
    }

    let reached_count = results.iter().filter(|r| r.reached).count();
    if as_json {
        let value = json!({
            "table": table,
            "budget_nodes": budget.nodes(),
            "cells": results.iter().map(|r| json!({
                "label": r.entry.label,
                "n": r.entry.n, "c": r.entry.c, "r": r.entry.r,
                "distance": r.entry.distance,
                "target_k": r.entry.target_k,
                "reached": r.reached,
                "modes": r.modes.iter().map(|(mode, k, optimal, verdict)| json!({
                    "mode": mode,
                    "found_k": k,
                    "optimal": optimal,
                    "verified": verdict,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("table {table}: {} cells, {} nodes per search", results.len(), budget.nodes());
        for r in &results {
            let modes: Vec<String> = r
                .modes
                .iter()
                .map(|(mode, k, optimal, verdict)| {
                    format!(
                        "{mode:?} K={k}{} {}",
                        if *optimal { " (max)" } else { "" },
                        match verdict {
                            Verdict::Pass => "pass",
                            Verdict::Fail => "FAIL",
                        }
                    )
                })
                .collect();
            println!(
                "  {} target K={}: {} → {}",
                r.entry.label,
                r.entry.target_k,
                modes.join(", "),
                if r.reached { "reached" } else { "missed" }
            );
        }
        println!("{reached_count} of {} cells reached their recorded dimension", results.len());
    }
    Ok(0)
}

fn lookup_cell(entries: &'static [TableEntry], cell: &str) -> Result<&'static TableEntry> {
    let parts: Vec<&str> = cell.split(',').collect();
    let [n, c, r] = parts.as_slice() else {
        bail!("cell {cell:?} is not of the form n,c,r");
    };
    let n: usize = n.trim().parse().with_context(|| format!("cell {cell:?}"))?;
    let c: usize = c.trim().parse().with_context(|| format!("cell {cell:?}"))?;
    let r: usize = r.trim().parse().with_context(|| format!("cell {cell:?}"))?;
    tables::find(entries, n, c, r)
        .with_context(|| format!("no table entry with n={n} c={c} r={r}"))
}
