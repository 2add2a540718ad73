use super::InputDocument;
use crate::classifier::{analyze, descriptor_fundamental_group, ClassificationTrace, ClassifyError, GroupDescription, HomotopyType};
use crate::pi1::{SubgroupClass, Word};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Result of classifying one document. Timing is kept out of the structured
/// form so that it is byte-stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub input_hash: String,
    pub surface: SurfaceType,
    pub descriptor: HomotopyType,
    pub case: String,
    pub fundamental_group: GroupDescription,
    pub trace: ClassificationTrace,
}

/// Group-theoretic view of `(M, X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Report {
    pub surface: SurfaceType,
    pub strategy: String,
    pub presentation: String,
    pub generator_names: Vec<String>,
    pub edge_generators: usize,
    pub edge_relators: usize,
    pub induced_generators: Vec<Word>,
    pub subgroup: Option<SubgroupClass>,
}

pub fn report_for(doc: &InputDocument, s: &crate::surface::SimplicialSurface, x: &crate::geometry::Subcomplex) -> Result<(Report, Pi1Report), ClassifyError> {
    let a = analyze(s, x)?;
    let c = &a.classification;
    let group = crate::pi1::SurfaceGroup::for_surface(&c.surface);
    let pi1 = Pi1Report {
        surface: c.surface,
        strategy: group.strategy.to_string(),
        presentation: group.presentation_string(),
        generator_names: group.generator_names.clone(),
        edge_generators: a.presentation.as_ref().map_or(0, |p| p.generator_count()),
        edge_relators: a.presentation.as_ref().map_or(0, |p| p.relators.len()),
        induced_generators: a.generators.clone(),
        subgroup: a.subgroup.clone(),
    };
    let report = Report {
        name: doc.name.clone(),
        input_hash: doc.hash(),
        surface: c.surface,
        descriptor: c.descriptor,
        case: c.case.short(),
        fundamental_group: descriptor_fundamental_group(&c.descriptor),
        trace: c.trace.clone(),
    };
    Ok((report, pi1))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable text; the case is quoted in its long form.
    pub fn to_text(&self, explain: bool) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            writeln!(out, "input: {name}").unwrap();
        }
        writeln!(out, "input hash: {}", self.input_hash).unwrap();
        writeln!(out, "surface: {}", self.surface).unwrap();
        writeln!(out, "homotopy type: {}", self.descriptor).unwrap();
        let label = self.trace.case().map(|(l, _)| l.long()).unwrap_or_else(|| self.case.clone());
        writeln!(out, "case: {} [{}]", self.case, label).unwrap();
        writeln!(out, "fundamental group: {}", self.fundamental_group).unwrap();
        writeln!(out, "abelianization: {}", self.fundamental_group.abelianization()).unwrap();
        if explain {
            writeln!(out, "trace:").unwrap();
            for (i, step) in self.trace.steps.iter().enumerate() {
                writeln!(out, "  {:>2}. {step}", i + 1).unwrap();
            }
        }
        out
    }
}

impl Pi1Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "surface: {}", self.surface).unwrap();
        writeln!(out, "pi1: {} (word problem: {})", self.presentation, self.strategy).unwrap();
        writeln!(
            out,
            "edge-path presentation: {} generators, {} relators",
            self.edge_generators, self.edge_relators
        )
        .unwrap();
        if self.induced_generators.is_empty() {
            writeln!(out, "induced generators: none").unwrap();
        }
        for (i, w) in self.induced_generators.iter().enumerate() {
            writeln!(out, "induced generator {}: {}", i + 1, w.display_with(&self.generator_names)).unwrap();
        }
        match &self.subgroup {
            Some(class) => writeln!(out, "subgroup: {class}").unwrap(),
            None => writeln!(out, "subgroup: not computed (X is a point or a closed surface)").unwrap(),
        }
        out
    }
}
