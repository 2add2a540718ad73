//! Which theorem case applies to `(M, X)`, and the resulting homotopy type.

mod descriptor;
mod trace;

pub use descriptor::{closed_manifold_descriptor, descriptor_fundamental_group, GroupDescription, HomotopyType};
pub use trace::{ClassificationTrace, ReplayError, TraceStep};

use crate::geometry::{
    absorb_disk_components, is_orientation_preserving, is_separating, regular_neighborhood, spine_with_loops,
    EdgePath, GeometryError, NeighborhoodDecomposition, Spine, Subcomplex, SubcomplexFlags,
};
use crate::pi1::{classify_subgroup, presentation, Pi1Error, Presentation, SubgroupClass, Word};
use crate::surface::{classify_surface, orientation_double_cover, NamedSurface, SimplicialSurface, SurfaceType};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Theorem case that produced a verdict.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `X` is a point.
    Intro,
    Prop2_2_1_i,
    Prop2_2_1_ii,
    Prop2_2_1_iii,
    Prop2_2_1_iv,
    Thm1_1_1,
    Thm1_1_2,
    Thm1_1_3,
    Thm1_2_1,
    Thm1_2_2,
    Thm1_2_3_i,
    Thm1_2_3_ii,
    Thm1_2_4_i,
    Thm1_2_4_ii,
    Thm1_3_1,
    Thm1_3_2,
    Thm5_1_1,
    Thm5_1_3_i,
    Thm5_1_3_ii,
    Thm5_1_3_iii,
}

impl CaseLabel {
    fn parts(&self) -> (&'static str, &'static str, &'static str) {
        use CaseLabel::*;
        match self {
            Intro => ("", "", ""),
            Prop2_2_1_i => ("Prop", "2.2", "(1)(i)"),
            Prop2_2_1_ii => ("Prop", "2.2", "(1)(ii)"),
            Prop2_2_1_iii => ("Prop", "2.2", "(1)(iii)"),
            Prop2_2_1_iv => ("Prop", "2.2", "(1)(iv)"),
            Thm1_1_1 => ("Thm", "1.1", "(1)"),
            Thm1_1_2 => ("Thm", "1.1", "(2)"),
            Thm1_1_3 => ("Thm", "1.1", "(3)"),
            Thm1_2_1 => ("Thm", "1.2", "(1)"),
            Thm1_2_2 => ("Thm", "1.2", "(2)"),
            Thm1_2_3_i => ("Thm", "1.2", "(3)(i)"),
            Thm1_2_3_ii => ("Thm", "1.2", "(3)(ii)"),
            Thm1_2_4_i => ("Thm", "1.2", "(4)(i)"),
            Thm1_2_4_ii => ("Thm", "1.2", "(4)(ii)"),
            Thm1_3_1 => ("Thm", "1.3", "(1)"),
            Thm1_3_2 => ("Thm", "1.3", "(2)"),
            Thm5_1_1 => ("Thm", "5.1", "(1)"),
            Thm5_1_3_i => ("Thm", "5.1", "(3)(i)"),
            Thm5_1_3_ii => ("Thm", "5.1", "(3)(ii)"),
            Thm5_1_3_iii => ("Thm", "5.1", "(3)(iii)"),
        }
    }

    /// Short form, e.g. `Thm 1.2 (3)(i)`.
    pub fn short(&self) -> String {
        match self.parts() {
            ("", _, _) => "Intro".into(),
            (kind, number, case) => format!("{kind} {number} {case}"),
        }
    }

    /// Long form, e.g. `Theorem 1.2 (3)(i)`.
    pub fn long(&self) -> String {
        match self.parts() {
            ("", _, _) => "Introduction".into(),
            ("Prop", number, case) => format!("Proposition {number} {case}"),
            (_, number, case) => format!("Theorem {number} {case}"),
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.short())
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Group(#[from] Pi1Error),
    /// A cross-check that the theory guarantees failed.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl ClassifyError {
    /// True when the error reflects bad input rather than a bug.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            ClassifyError::Geometry(
                GeometryError::UnknownSimplex(_)
                    | GeometryError::NotClosedUnderFaces(_)
                    | GeometryError::NotConnected
                    | GeometryError::Empty
            )
        )
    }
}

/// Everything the case decision depends on.
#[derive(Clone, Debug, Default)]
pub(crate) struct Evidence {
    surface: Option<SurfaceType>,
    flags: SubcomplexFlags,
    subgroup: Option<SubgroupClass>,
    annulus: Option<bool>,
    /// Orientation character and separation of `X` when it is a circle.
    circle: Option<(bool, bool)>,
    cover: Option<SurfaceType>,
}

/// The decision cascade as a pure function of the evidence.
pub(crate) fn decide(ev: &Evidence) -> Result<(CaseLabel, HomotopyType), String> {
    use CaseLabel::*;
    use HomotopyType as H;
    let m = ev.surface.ok_or("no surface recognition")?;
    let named = m.named();
    let is = |n: NamedSurface| named == Some(n);
    if ev.flags.is_point {
        return Ok((Intro, H::SurfaceItself(m)));
    }
    if ev.flags.is_closed_surface {
        let d = closed_manifold_descriptor(&m).ok_or("X is a closed surface but M has boundary")?;
        let label = match named {
            Some(NamedSurface::Sphere) | Some(NamedSurface::ProjectivePlane) => Prop2_2_1_i,
            Some(NamedSurface::Torus) => Prop2_2_1_ii,
            Some(NamedSurface::KleinBottle) => Prop2_2_1_iii,
            _ => Prop2_2_1_iv,
        };
        return Ok((label, d));
    }
    // Circles in closed surfaces other than T^2 and P^2 are reported under the
    // circle theorem's own cases.
    let circle_case = ev.flags.is_circle && m.is_closed() && !is(NamedSurface::Torus) && !is(NamedSurface::ProjectivePlane);
    match ev.subgroup.as_ref().ok_or("no subgroup class")? {
        SubgroupClass::NonCyclic(_) => Ok(if is(NamedSurface::Torus) {
            (Thm1_1_2, H::Torus)
        } else if is(NamedSurface::KleinBottle) {
            (Thm1_1_3, H::Circle)
        } else {
            (Thm1_1_1, H::Point)
        }),
        SubgroupClass::NontrivialCyclic(_) => {
            if is(NamedSurface::Torus) {
                return Ok((Thm1_2_2, H::Torus));
            }
            if is(NamedSurface::KleinBottle) {
                let annulus = ev.annulus.ok_or("no annulus test")?;
                if !circle_case {
                    return Ok(if annulus { (Thm1_2_3_i, H::Torus) } else { (Thm1_2_3_ii, H::Circle) });
                }
                let (op, sep) = ev.circle.ok_or("no circle properties")?;
                return match (annulus, op, sep) {
                    (true, true, false) => Ok((Thm5_1_3_i, H::Torus)),
                    (false, true, true) => Ok((Thm5_1_3_ii, H::Circle)),
                    (false, false, _) => Ok((Thm5_1_3_iii, H::Circle)),
                    _ => Err("circle properties disagree with the annulus test".into()),
                };
            }
            if is(NamedSurface::ProjectivePlane) {
                let (op, _) = ev.circle.unwrap_or((true, false));
                return Ok(if ev.flags.is_circle && !op {
                    (Thm1_2_4_i, H::SO3ModZ2)
                } else {
                    (Thm1_2_4_ii, H::SO3)
                });
            }
            Ok(if circle_case { (Thm5_1_1, H::Circle) } else { (Thm1_2_1, H::Circle) })
        }
        SubgroupClass::Trivial => {
            if ev.flags.is_arc || m.orientable {
                Ok((Thm1_3_1, H::UnitTangentBundle(m)))
            } else {
                let cover = ev.cover.ok_or("no orientation double cover")?;
                Ok((Thm1_3_2, H::UnitTangentBundleOfCover(cover)))
            }
        }
    }
}

/// Verdict, case and supporting evidence.
#[derive(Clone, Debug)]
pub struct Classification {
    pub surface: SurfaceType,
    pub descriptor: HomotopyType,
    pub case: CaseLabel,
    pub trace: ClassificationTrace,
}

/// Intermediate data kept for reporting.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub classification: Classification,
    pub presentation: Option<Presentation>,
    pub decomposition: Option<NeighborhoodDecomposition>,
    pub spine: Option<Spine>,
    /// Canonical words of the essential spine loops.
    pub generators: Vec<Word>,
    pub subgroup: Option<SubgroupClass>,
}

pub fn closed_manifold_case(ty: &SurfaceType) -> Result<HomotopyType, ClassifyError> {
    closed_manifold_descriptor(ty).ok_or_else(|| ClassifyError::Consistency("surface is not closed".into()))
}

/// Pushes a loop of the twice-subdivided host down to the original surface.
fn approximate_loop(decomp: &NeighborhoodDecomposition, s: &SimplicialSurface, path: &EdgePath) -> Result<EdgePath, ClassifyError> {
    let mut out: Vec<usize> = Vec::with_capacity(path.len());
    for &v in path.vertices() {
        let w = decomp.approximation[v];
        if out.last() != Some(&w) {
            if let Some(&last) = out.last() {
                if s.edge_between(last, w).is_none() {
                    return Err(ClassifyError::Consistency("simplicial approximation broke a path".into()));
                }
            }
            out.push(w);
        }
    }
    Ok(EdgePath(out))
}

pub fn classify_embedding_space(s: &SimplicialSurface, x: &Subcomplex) -> Result<Classification, ClassifyError> {
    analyze(s, x).map(|a| a.classification)
}

pub fn analyze(s: &SimplicialSurface, x: &Subcomplex) -> Result<Analysis, ClassifyError> {
    let m = classify_surface(s);
    let flags = x.flags();
    let mut trace = ClassificationTrace::default();
    trace.push(TraceStep::SurfaceRecognition { surface: m });
    trace.push(TraceStep::Subcomplex { flags });
    let mut ev = Evidence {
        surface: Some(m),
        flags,
        ..Evidence::default()
    };
    let finish = |ev: &Evidence, mut trace: ClassificationTrace| -> Result<Classification, ClassifyError> {
        let (case, descriptor) = decide(ev).map_err(ClassifyError::Consistency)?;
        trace.push(TraceStep::Case { label: case, descriptor });
        Ok(Classification {
            surface: m,
            descriptor,
            case,
            trace,
        })
    };
    if flags.is_point || flags.is_closed_surface {
        return Ok(Analysis {
            classification: finish(&ev, trace)?,
            presentation: None,
            decomposition: None,
            spine: None,
            generators: Vec::new(),
            subgroup: None,
        });
    }

    let decomp = regular_neighborhood(s, x)?;
    trace.push(TraceStep::Neighborhood {
        surface: decomp.neighborhood_type,
        complement: decomp.complement.iter().map(|c| c.class).collect(),
        collapse_steps: decomp.collapse.len(),
    });
    let mut spine = spine_with_loops(&decomp)?;
    let pres = presentation(s, x.basepoint())?;

    let mut generators = Vec::new();
    for l in &mut spine.loops {
        let base = approximate_loop(&decomp, s, &l.based)?;
        let word = pres.canonical_loop_word(s, &base)?;
        let essential = !pres.group().is_trivial(&word)?;
        l.properties.essential = Some(essential);
        trace.push(TraceStep::SpineLoop {
            chord: l.chord,
            word: word.clone(),
            essential,
            orientation_preserving: l.properties.orientation_preserving,
            separating: l.properties.separating,
        });
        if essential {
            generators.push(word);
        }
    }
    let class = classify_subgroup(pres.group(), &generators)?;
    trace.push(TraceStep::Subgroup {
        generators: generators.clone(),
        class: class.clone(),
    });
    ev.subgroup = Some(class.clone());

    if flags.is_circle {
        let path = x.circle_path(s).ok_or_else(|| ClassifyError::Consistency("circle has no path".into()))?;
        let op = is_orientation_preserving(s, &path)?;
        let sep = is_separating(s, &path)?;
        ev.circle = Some((op, sep));
        trace.push(TraceStep::CircleTest {
            orientation_preserving: op,
            separating: sep,
            result: m.is(NamedSurface::ProjectivePlane) && !op,
        });
    }

    match class {
        SubgroupClass::NontrivialCyclic(_) if m.is(NamedSurface::KleinBottle) => {
            let (result, consistent) = k2_nonseparating_annulus_test(&spine);
            trace.push(TraceStep::AnnulusTest { result, consistent });
            if !consistent {
                return Err(ClassifyError::Consistency(
                    "essential spine loops disagree on orientation or separation".into(),
                ));
            }
            ev.annulus = Some(result);
        }
        SubgroupClass::Trivial => {
            let disk = absorb_disk_components(&decomp).ok_or_else(|| {
                ClassifyError::Consistency("null-homotopic X has no disk neighborhood".into())
            })?;
            trace.push(TraceStep::DiskAbsorption {
                absorbed: disk.absorbed.len(),
                triangles: disk.triangles.len(),
            });
            if !flags.is_arc && !m.orientable {
                let cover = orientation_double_cover(s).map_err(|e| ClassifyError::Consistency(e.to_string()))?;
                let ct = classify_surface(&cover.total);
                trace.push(TraceStep::Cover { surface: ct });
                ev.cover = Some(ct);
            }
        }
        _ => {}
    }

    let classification = finish(&ev, trace)?;
    Ok(Analysis {
        classification,
        presentation: Some(pres),
        decomposition: Some(decomp),
        spine: Some(spine),
        generators,
        subgroup: Some(class),
    })
}

/// Some essential spine loop is o.p. and nonseparating; second value: every
/// essential loop then is too.
pub fn k2_nonseparating_annulus_test(spine: &Spine) -> (bool, bool) {
    let good = |l: &&crate::geometry::ChordLoop| l.properties.orientation_preserving && !l.properties.separating;
    let result = spine.essential_loops().any(|l| good(&l));
    let consistent = !result || spine.essential_loops().all(|l| good(&l));
    (result, consistent)
}

/// `X` is a circle whose loop reverses orientation.
pub fn p2_or_circle_test(s: &SimplicialSurface, x: &Subcomplex) -> Result<bool, ClassifyError> {
    if !x.flags().is_circle {
        return Ok(false);
    }
    let path = x.circle_path(s).ok_or_else(|| ClassifyError::Consistency("circle has no path".into()))?;
    Ok(!is_orientation_preserving(s, &path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(CaseLabel::Thm1_2_3_i.short(), "Thm 1.2 (3)(i)");
        assert_eq!(CaseLabel::Thm1_2_3_i.long(), "Theorem 1.2 (3)(i)");
        assert_eq!(CaseLabel::Prop2_2_1_iv.long(), "Proposition 2.2 (1)(iv)");
        assert_eq!(CaseLabel::Intro.short(), "Intro");
    }
}
