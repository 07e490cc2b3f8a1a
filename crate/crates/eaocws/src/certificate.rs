//! Self-contained JSON artifacts recording a constructed code, where it came
//! from, and every verification pass run against it.
//!
//! A certificate carries enough to rebuild the code from scratch — layout,
//! graph edges, codewords — plus derived material (word operators, ancilla
//! patterns, parameters) that [`Certificate::to_code`] recomputes and checks
//! on load, so a tampered or stale file is rejected rather than trusted.
//!
//! Serialization is deterministic: field order is fixed by the struct
//! definitions and collections are sorted vectors, so the same code and
//! search metadata produce byte-identical files. Attached verification runs
//! carry wall-clock timestamps and are the only varying part.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::builder::{
    ancilla_pattern, classify_by_pattern, word_operator, AncillaClass, CodeParams, EaocwsCode,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::GaugeGroup;
use crate::layout::CodeLayout;
use crate::search::SearchMode;
use crate::verify::{Verdict, VerifyRun};
use crate::word::BinaryWord;

/// Certificate format revision accepted by this build.
pub const SCHEMA_VERSION: u32 = 1;

/// The generating graph as an explicit edge list (1-based vertices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn from_graph(graph: &Graph) -> Self {
        GraphSpec { vertices: graph.vertex_count(), edges: graph.edges() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.vertices, &self.edges)
    }
}

/// How the codewords were found: the search configuration and the solver's
/// own account of the run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchMeta {
    pub mode: SearchMode,
    pub distance: usize,
    pub seed: u64,
    pub budget_nodes: u64,
    pub nodes_used: u64,
    pub optimal: bool,
    pub budget_exhausted: bool,
}

/// One codeword with its operator forms and commutation fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordOperatorEntry {
    pub codeword: BinaryWord,
    pub raw: String,
    pub alice_only: String,
    pub ancilla_pattern: String,
}

/// One ancilla-pattern class as recorded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub pattern: String,
    pub members: Vec<BinaryWord>,
    pub representative: BinaryWord,
}

impl ClassEntry {
    pub fn from_class(class: &AncillaClass) -> Self {
        ClassEntry {
            pattern: class.pattern.to_string(),
            members: class.members.clone(),
            representative: class.representative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationStatus {
    Unverified,
    Passed,
    Failed,
}

/// All verification evidence attached so far.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationBlock {
    pub status: VerificationStatus,
    pub runs: Vec<VerifyRun>,
}

/// A complete, revalidatable record of one constructed code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub layout: CodeLayout,
    pub graph: GraphSpec,
    pub search: SearchMeta,
    pub codewords: Vec<BinaryWord>,
    pub word_operators: Vec<WordOperatorEntry>,
    pub ancilla_classes: Vec<ClassEntry>,
    pub parameters: CodeParams,
    pub verification: VerificationBlock,
}

impl Certificate {
    /// Records `code` together with the search that produced it. The
    /// ancilla classes are recomputed from the codewords (one singleton
    /// class per codeword, since patterns are distinct by construction).
    pub fn new(code: &EaocwsCode, search: SearchMeta) -> Result<Self> {
        let classes = classify_by_pattern(code.group(), code.codewords())?;
        Self::with_classes(code, search, &classes)
    }

    /// Like [`Certificate::new`] but records a caller-supplied
    /// classification — e.g. the full codeword list a selection was drawn
    /// from, rather than the selected representatives alone.
    pub fn with_classes(
        code: &EaocwsCode,
        search: SearchMeta,
        classes: &[AncillaClass],
    ) -> Result<Self> {
        let group = code.group();
        let word_operators = code
            .codewords()
            .iter()
            .map(|w| {
                let alice_op = crate::builder::alice_word_operator(group, w)?;
                Ok(WordOperatorEntry {
                    codeword: *w,
                    raw: word_operator(group, w).to_text(),
                    alice_only: alice_op.to_text(),
                    ancilla_pattern: ancilla_pattern(group, &alice_op).to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            schema: SCHEMA_VERSION,
            layout: *code.layout(),
            graph: GraphSpec::from_graph(group.graph()),
            search,
            codewords: code.codewords().to_vec(),
            word_operators,
            ancilla_classes: classes.iter().map(ClassEntry::from_class).collect(),
            parameters: code.params(),
            verification: VerificationBlock { status: VerificationStatus::Unverified, runs: vec![] },
        })
    }

    /// Appends a verification run and refreshes the headline status: failed
    /// if any run failed, passed if runs exist and none failed.
    pub fn attach_run(&mut self, run: VerifyRun) {
        self.verification.runs.push(run);
        self.verification.status =
            if self.verification.runs.iter().any(|r| r.verdict == Verdict::Fail) {
                VerificationStatus::Failed
            } else {
                VerificationStatus::Passed
            };
    }

    /// Deterministic pretty JSON with a trailing newline.
    pub fn to_json_string(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string()?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cert: Certificate = serde_json::from_str(&text)?;
        if cert.schema != SCHEMA_VERSION {
            return Err(Error::Certificate(format!(
                "unsupported schema revision {} (this build reads {})",
                cert.schema, SCHEMA_VERSION
            )));
        }
        Ok(cert)
    }

    /// Rebuilds the code from the primary fields and cross-checks every
    /// derived field the certificate records, so stale or edited material
    /// cannot pass unnoticed.
    pub fn to_code(&self) -> Result<EaocwsCode> {
        let graph = self.graph.to_graph()?;
        let group = GaugeGroup::build(self.layout, graph)?;
        let code = EaocwsCode::new(group, self.codewords.clone(), self.search.distance)?;

        if self.word_operators.len() != self.codewords.len() {
            return Err(Error::Certificate(format!(
                "{} word-operator entries for {} codewords",
                self.word_operators.len(),
                self.codewords.len()
            )));
        }
        let group = code.group();
        for (word, entry) in self.codewords.iter().zip(&self.word_operators) {
            if entry.codeword != *word {
                return Err(Error::Certificate(format!(
                    "word-operator entry for {} out of step with codeword {}",
                    entry.codeword.to_text(),
                    word.to_text()
                )));
            }
            let raw = word_operator(group, word).to_text();
            let alice_op = crate::builder::alice_word_operator(group, word)?;
            let alice_only = alice_op.to_text();
            let pattern = ancilla_pattern(group, &alice_op).to_string();
            if entry.raw != raw || entry.alice_only != alice_only || entry.ancilla_pattern != pattern
            {
                return Err(Error::Certificate(format!(
                    "recorded operators for {} do not match recomputation (expected {} / {} / {})",
                    word.to_text(),
                    raw,
                    alice_only,
                    pattern
                )));
            }
        }
        let params = code.params();
        if self.parameters != params {
            return Err(Error::Certificate(format!(
                "recorded parameters {} do not match recomputed {}",
                self.parameters, params
            )));
        }
        Ok(code)
    }
}
