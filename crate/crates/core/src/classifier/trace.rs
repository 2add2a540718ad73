use super::{decide, CaseLabel, Evidence, HomotopyType};
use crate::geometry::{ComplementClass, SubcomplexFlags};
use crate::pi1::{classify_subgroup, verify_class, SubgroupClass, SurfaceGroup, Word};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// One decision together with the evidence it was made from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step")]
pub enum TraceStep {
    SurfaceRecognition {
        surface: SurfaceType,
    },
    Subcomplex {
        flags: SubcomplexFlags,
    },
    Neighborhood {
        surface: SurfaceType,
        complement: Vec<ComplementClass>,
        collapse_steps: usize,
    },
    SpineLoop {
        chord: usize,
        word: Word,
        essential: bool,
        orientation_preserving: bool,
        separating: bool,
    },
    Subgroup {
        generators: Vec<Word>,
        class: SubgroupClass,
    },
    AnnulusTest {
        result: bool,
        consistent: bool,
    },
    CircleTest {
        orientation_preserving: bool,
        separating: bool,
        result: bool,
    },
    DiskAbsorption {
        absorbed: usize,
        triangles: usize,
    },
    Cover {
        surface: SurfaceType,
    },
    Case {
        label: CaseLabel,
        descriptor: HomotopyType,
    },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::SurfaceRecognition { surface } => {
                write!(f, "surface recognized as {surface} (chi = {})", surface.euler_characteristic)
            }
            TraceStep::Subcomplex { flags } => write!(
                f,
                "X flags: point={} arc={} circle={} closed_surface={}",
                flags.is_point, flags.is_arc, flags.is_circle, flags.is_closed_surface
            ),
            TraceStep::Neighborhood {
                surface,
                complement,
                collapse_steps,
            } => write!(
                f,
                "regular neighborhood is {surface}, collapses to X in {collapse_steps} steps; complement {complement:?}"
            ),
            TraceStep::SpineLoop {
                chord,
                word,
                essential,
                orientation_preserving,
                separating,
            } => write!(
                f,
                "spine loop via edge {chord}: word [{word}] essential={essential} o.p.={orientation_preserving} separating={separating}"
            ),
            TraceStep::Subgroup { generators, class } => {
                write!(f, "induced subgroup on {} generators is {class}", generators.len())?;
                if let Some(w) = class.witness() {
                    write!(f, " (witness {w:?})")?;
                }
                Ok(())
            }
            TraceStep::AnnulusTest { result, consistent } => write!(
                f,
                "essential spine loop o.p. and nonseparating: {result} (all essential loops agree: {consistent})"
            ),
            TraceStep::CircleTest {
                orientation_preserving,
                separating,
                result,
            } => write!(
                f,
                "circle test: o.p.={orientation_preserving} separating={separating} -> {result}"
            ),
            TraceStep::DiskAbsorption { absorbed, triangles } => write!(
                f,
                "disk neighborhood: absorbed {absorbed} disk components, {triangles} triangles"
            ),
            TraceStep::Cover { surface } => write!(f, "orientation double cover is {surface}"),
            TraceStep::Case { label, descriptor } => write!(f, "case {label}: {descriptor}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassificationTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("trace step {index} does not replay: {reason}")]
pub struct ReplayError {
    pub index: usize,
    pub reason: String,
}

impl ClassificationTrace {
    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn case(&self) -> Option<(CaseLabel, HomotopyType)> {
        self.steps.iter().find_map(|s| match s {
            TraceStep::Case { label, descriptor } => Some((*label, *descriptor)),
            _ => None,
        })
    }

    /// Re-derives every decision from the recorded evidence.
    pub fn replay(&self) -> Result<(), ReplayError> {
        let fail = |index: usize, reason: &str| ReplayError {
            index,
            reason: reason.to_string(),
        };
        let cases = self.steps.iter().filter(|s| matches!(s, TraceStep::Case { .. })).count();
        if cases != 1 {
            return Err(fail(self.steps.len(), "trace must carry exactly one case label"));
        }
        let mut ev = Evidence::default();
        let mut group: Option<SurfaceGroup> = None;
        let mut essential_words: Vec<Word> = Vec::new();
        let mut loops: Vec<(bool, bool)> = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                TraceStep::SurfaceRecognition { surface } => {
                    if !surface.is_consistent() {
                        return Err(fail(i, "surface type violates the Euler formula"));
                    }
                    ev.surface = Some(*surface);
                    group = Some(SurfaceGroup::for_surface(surface));
                }
                TraceStep::Subcomplex { flags } => ev.flags = *flags,
                TraceStep::Neighborhood { .. } | TraceStep::DiskAbsorption { .. } => {}
                TraceStep::SpineLoop {
                    word,
                    essential,
                    orientation_preserving,
                    separating,
                    ..
                } => {
                    let g = group.as_ref().ok_or_else(|| fail(i, "loop before surface"))?;
                    let trivial = g.is_trivial(word).map_err(|e| fail(i, &e.to_string()))?;
                    if trivial == *essential {
                        return Err(fail(i, "essentiality disagrees with the word problem"));
                    }
                    if *essential {
                        essential_words.push(word.clone());
                        loops.push((*orientation_preserving, *separating));
                    }
                }
                TraceStep::Subgroup { generators, class } => {
                    let g = group.as_ref().ok_or_else(|| fail(i, "subgroup before surface"))?;
                    if *generators != essential_words {
                        return Err(fail(i, "generators are not the essential loop words"));
                    }
                    let again = classify_subgroup(g, generators).map_err(|e| fail(i, &e.to_string()))?;
                    if again != *class {
                        return Err(fail(i, "subgroup class differs on replay"));
                    }
                    if !verify_class(g, generators, class).map_err(|e| fail(i, &e.to_string()))? {
                        return Err(fail(i, "witness does not verify"));
                    }
                    ev.subgroup = Some(class.clone());
                }
                TraceStep::AnnulusTest { result, consistent } => {
                    let good = |&(op, sep): &(bool, bool)| op && !sep;
                    if *result != loops.iter().any(good) || *consistent != (!*result || loops.iter().all(good)) {
                        return Err(fail(i, "annulus test differs from loop evidence"));
                    }
                    ev.annulus = Some(*result);
                }
                TraceStep::CircleTest {
                    orientation_preserving,
                    separating,
                    result,
                } => {
                    ev.circle = Some((*orientation_preserving, *separating));
                    if let Some(s) = ev.surface {
                        if s.is(crate::surface::NamedSurface::ProjectivePlane)
                            && *result != (ev.flags.is_circle && !orientation_preserving)
                        {
                            return Err(fail(i, "P2 circle test differs from evidence"));
                        }
                    }
                }
                TraceStep::Cover { surface } => {
                    let base = ev.surface.ok_or_else(|| fail(i, "cover before surface"))?;
                    if !surface.orientable || surface.euler_characteristic != 2 * base.euler_characteristic {
                        return Err(fail(i, "cover is not an orientable double cover"));
                    }
                    ev.cover = Some(*surface);
                }
                TraceStep::Case { label, descriptor } => {
                    let (l, d) = decide(&ev).map_err(|e| fail(i, &e))?;
                    if l != *label || d != *descriptor {
                        return Err(fail(i, "case label differs on replay"));
                    }
                }
            }
        }
        Ok(())
    }
}
