//! Bundled reference data: the six-ring construction with three ebit pairs
//! and one gauge qubit, worked through end to end — generators, effective
//! errors, all eight codewords with their operator forms, the pattern
//! classification, and the selected ((6,4,1,3;3)) code.
//!
//! The reproduction command and the acceptance suite recompute every stage
//! from the layout and graph alone and compare against this file, so the
//! data doubles as a regression oracle for the whole pipeline.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::builder::{CodeParams, EaocwsCode};
use crate::certificate::GraphSpec;
use crate::graph::Graph;
use crate::group::GaugeGroup;
use crate::layout::CodeLayout;
use crate::word::BinaryWord;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub label: String,
    pub operator: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReferenceClass {
    pub pattern: String,
    pub members: Vec<BinaryWord>,
    pub representative: BinaryWord,
}

/// One fully worked example: every intermediate artifact of the pipeline in
/// presentation order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReferenceExample {
    pub name: String,
    pub layout: CodeLayout,
    pub graph: GraphSpec,
    pub generators: Vec<GeneratorEntry>,
    pub effective_error_words: Vec<BinaryWord>,
    pub codewords: Vec<BinaryWord>,
    pub raw_word_operators: Vec<String>,
    pub alice_word_operators: Vec<String>,
    pub initial_forms: Vec<String>,
    pub ancilla_patterns: Vec<String>,
    pub classes: Vec<ReferenceClass>,
    pub selected: Vec<BinaryWord>,
    pub parameters: CodeParams,
    pub notes: Vec<String>,
}

impl ReferenceExample {
    pub fn graph(&self) -> Graph {
        self.graph.to_graph().expect("reference graph is well formed")
    }

    pub fn group(&self) -> GaugeGroup {
        GaugeGroup::build(self.layout, self.graph()).expect("reference group builds")
    }

    /// The selected code with its recorded distance claim.
    pub fn code(&self) -> EaocwsCode {
        EaocwsCode::new(self.group(), self.selected.clone(), self.parameters.distance)
            .expect("reference codewords assemble")
    }
}

/// The six-ring example, parsed once from the bundled JSON.
pub fn ring6_example() -> &'static ReferenceExample {
    static CELL: OnceLock<ReferenceExample> = OnceLock::new();
    CELL.get_or_init(|| {
        serde_json::from_str(include_str!("../data/ring6_c3_r1.json"))
            .expect("bundled reference data parses")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{
        alice_word_operator, ancilla_pattern, classify_by_pattern, initial_form,
        select_representatives, word_operator,
    };
    use crate::induce::EffectiveErrors;
    use crate::pauli::PauliOp;

    #[test]
    fn fixture_parses_and_is_self_consistent() {
        let ex = ring6_example();
        assert_eq!(ex.name, "ring6_c3_r1");
        assert_eq!((ex.layout.n(), ex.layout.c(), ex.layout.r()), (6, 3, 1));
        assert_eq!(ex.generators.len(), 10);
        assert_eq!(ex.effective_error_words.len(), 15);
        assert_eq!(ex.codewords.len(), 8);
        assert_eq!(ex.raw_word_operators.len(), 8);
        assert_eq!(ex.alice_word_operators.len(), 8);
        assert_eq!(ex.initial_forms.len(), 8);
        assert_eq!(ex.ancilla_patterns.len(), 8);
        assert_eq!(ex.selected.len(), 4);
        // Every recorded operator parses under the recorded layout.
        for entry in &ex.generators {
            PauliOp::parse(&entry.operator, &ex.layout).unwrap();
        }
        for text in ex.raw_word_operators.iter().chain(&ex.alice_word_operators) {
            PauliOp::parse(text, &ex.layout).unwrap();
        }
    }

    #[test]
    fn recorded_generators_match_recomputation() {
        let ex = ring6_example();
        let group = ex.group();
        let recomputed: Vec<(String, String)> =
            group.generators().into_iter().map(|(l, op)| (l, op.to_text())).collect();
        let recorded: Vec<(String, String)> =
            ex.generators.iter().map(|g| (g.label.clone(), g.operator.clone())).collect();
        assert_eq!(recomputed, recorded);
        assert!(group.validate().is_empty());
    }

    #[test]
    fn recorded_effective_errors_match_recomputation() {
        let ex = ring6_example();
        let eff = EffectiveErrors::build(&ex.group(), 1).unwrap();
        let mut recorded = ex.effective_error_words.clone();
        recorded.sort();
        assert_eq!(eff.nonzero_words(), recorded);
    }

    #[test]
    fn recorded_operator_forms_match_recomputation() {
        let ex = ring6_example();
        let group = ex.group();
        for (i, word) in ex.codewords.iter().enumerate() {
            assert_eq!(word_operator(&group, word).to_text(), ex.raw_word_operators[i]);
            let alice_op = alice_word_operator(&group, word).unwrap();
            assert_eq!(alice_op.to_text(), ex.alice_word_operators[i]);
            assert_eq!(initial_form(&group, &alice_op).unwrap().to_text(), ex.initial_forms[i]);
            assert_eq!(ancilla_pattern(&group, &alice_op).to_string(), ex.ancilla_patterns[i]);
        }
    }

    #[test]
    fn recorded_classes_match_recomputation() {
        let ex = ring6_example();
        let group = ex.group();
        let classes = classify_by_pattern(&group, &ex.codewords).unwrap();
        assert_eq!(classes.len(), ex.classes.len());
        for (computed, recorded) in classes.iter().zip(&ex.classes) {
            assert_eq!(computed.pattern.to_string(), recorded.pattern);
            assert_eq!(computed.members, recorded.members);
            assert_eq!(computed.representative, recorded.representative);
        }
        assert_eq!(select_representatives(&classes), ex.selected);
    }

    #[test]
    fn selected_code_reports_recorded_parameters() {
        let ex = ring6_example();
        let code = ex.code();
        assert_eq!(code.params(), ex.parameters);
        assert_eq!(code.params().to_string(), "((6,4,1,3;3))");
    }
}
