//! Built-in example surfaces and the catalog of `(M, X)` documents.

use super::document::{InputDocument, SubcomplexDocument};
use crate::classifier::{CaseLabel, HomotopyType};
use crate::surface::{barycentric_subdivision, SimplicialSurface, SurfaceType, VertexId};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("unknown example {0:?}")]
pub struct UnknownExample(pub String);

pub const CATALOG: [&str; 14] = [
    "sphere_arc",
    "torus_meridian",
    "torus_wedge",
    "genus2_wedge",
    "rp2_core_circle",
    "rp2_tree",
    "klein_meridian",
    "klein_op_longitude",
    "klein_or_longitude",
    "annulus_core",
    "disk_arc",
    "mobius_core",
    "genus2_circle",
    "klein_meridian_wedge_trivial",
];

fn build(n: usize, tris: &[[VertexId; 3]]) -> SimplicialSurface {
    SimplicialSurface::build(n, tris).expect("built-in triangulation is valid")
}

pub fn tetrahedron() -> SimplicialSurface {
    build(4, &[[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]])
}

fn torus7_triangles() -> Vec<[VertexId; 3]> {
    (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .collect()
}

/// Seven-vertex torus; lattice point `(x, y)` carries label `x + 3y mod 7`.
pub fn torus7() -> SimplicialSurface {
    build(7, &torus7_triangles())
}

fn rp2_6_triangles() -> Vec<[VertexId; 3]> {
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ]
    .iter()
    .map(|t| t.map(|v| v - 1))
    .collect()
}

/// Six-vertex projective plane.
pub fn rp2_6() -> SimplicialSurface {
    build(6, &rp2_6_triangles())
}

/// Triangulated grid of `w` columns whose last column is glued to column 0,
/// row `j` going to row `wrap(j)`.
fn grid(w: usize, h: usize, periodic_rows: bool, wrap: impl Fn(usize) -> usize) -> (usize, Vec<[VertexId; 3]>) {
    let rows = if periodic_rows { h } else { h + 1 };
    let v = |i: usize, j: usize| {
        let j = if periodic_rows { j % h } else { j };
        if i == w {
            wrap(j) % rows
        } else {
            i * rows + j
        }
    };
    let mut tris = Vec::new();
    for i in 0..w {
        for j in 0..h {
            tris.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push([v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    (w * rows, tris)
}

const KLEIN_W: usize = 8;
const KLEIN_H: usize = 4;

/// Vertex `(i, j)` of the Klein bottle grid.
pub fn klein_vertex(i: usize, j: usize) -> VertexId {
    let j = j % KLEIN_H;
    if i % KLEIN_W == 0 && i > 0 {
        (KLEIN_H - j) % KLEIN_H
    } else {
        i * KLEIN_H + j
    }
}

/// 8 x 4 grid with columns periodic and the last column glued back reversed.
pub fn klein8() -> SimplicialSurface {
    let (n, tris) = grid(KLEIN_W, KLEIN_H, true, |j| (KLEIN_H - j % KLEIN_H) % KLEIN_H);
    build(n, &tris)
}

const STRIP_W: usize = 6;

pub fn annulus() -> SimplicialSurface {
    let (n, tris) = grid(STRIP_W, 2, false, |j| j);
    build(n, &tris)
}

pub fn mobius_band() -> SimplicialSurface {
    let (n, tris) = grid(STRIP_W, 2, false, |j| 2 - j);
    build(n, &tris)
}

/// Copy of `tris` with some labels renamed, minus the listed faces.
fn relabeled_copy(
    tris: &[[VertexId; 3]],
    map: &dyn Fn(VertexId) -> VertexId,
    removed: &[[VertexId; 3]],
) -> Vec<[VertexId; 3]> {
    let key = |t: &[VertexId; 3]| {
        let mut k = *t;
        k.sort_unstable();
        k
    };
    let gone: BTreeSet<[VertexId; 3]> = removed.iter().map(key).collect();
    tris.iter()
        .filter(|t| !gone.contains(&key(t)))
        .map(|t| t.map(map))
        .collect()
}

/// Relabeling that applies `glue` and sends every other vertex to a new label from `next` on.
fn fresh_labels(n: usize, glue: &[(VertexId, VertexId)], next: usize) -> Vec<VertexId> {
    let mut out = vec![usize::MAX; n];
    for &(from, to) in glue {
        out[from] = to;
    }
    let mut k = next;
    for v in out.iter_mut() {
        if *v == usize::MAX {
            *v = k;
            k += 1;
        }
    }
    out
}

/// Two tori summed along the face `{0, 1, 3}`; the second copy's other
/// vertices `2, 4, 5, 6` become `7, 8, 9, 10`.
pub fn genus2() -> SimplicialSurface {
    let t = torus7_triangles();
    let face = [[0, 1, 3]];
    let mut tris = relabeled_copy(&t, &|v| v, &face);
    let map = fresh_labels(7, &[(0, 0), (1, 1), (3, 3)], 7);
    tris.extend(relabeled_copy(&t, &|v| map[v], &face));
    build(11, &tris)
}

pub fn genus3() -> SimplicialSurface {
    let t = torus7_triangles();
    let mut tris = relabeled_copy(&t, &|v| v, &[[0, 1, 3]]);
    let middle = fresh_labels(7, &[(0, 0), (1, 1), (3, 3)], 7);
    tris.extend(relabeled_copy(&t, &|v| middle[v], &[[0, 1, 3], [2, 4, 5]]));
    let last = fresh_labels(7, &[(0, middle[2]), (1, middle[4]), (3, middle[5])], 11);
    tris.extend(relabeled_copy(&t, &|v| last[v], &[[0, 1, 3]]));
    build(15, &tris)
}

/// Torus summed with a projective plane.
pub fn nonorientable_genus3() -> SimplicialSurface {
    let mut tris = relabeled_copy(&torus7_triangles(), &|v| v, &[[0, 1, 3]]);
    let map = fresh_labels(6, &[(0, 0), (1, 1), (2, 3)], 7);
    tris.extend(relabeled_copy(&rp2_6_triangles(), &|v| map[v], &[[0, 1, 2]]));
    build(10, &tris)
}

/// Closed surfaces of the closed-case table, with their expected types.
pub fn closed_surfaces() -> Vec<(&'static str, SimplicialSurface, SurfaceType)> {
    vec![
        ("sphere", tetrahedron(), SurfaceType::new(true, 0, 0)),
        ("projective_plane", rp2_6(), SurfaceType::new(false, 1, 0)),
        ("torus", torus7(), SurfaceType::new(true, 1, 0)),
        ("klein_bottle", klein8(), SurfaceType::new(false, 2, 0)),
        ("genus2", genus2(), SurfaceType::new(true, 2, 0)),
        ("genus3", genus3(), SurfaceType::new(true, 3, 0)),
        ("nonorientable_genus3", nonorientable_genus3(), SurfaceType::new(false, 3, 0)),
    ]
}

/// One triangle subdivided twice.
pub fn subdivided_triangle() -> SimplicialSurface {
    let once = barycentric_subdivision(&build(3, &[[0, 1, 2]])).surface;
    barycentric_subdivision(&once).surface
}

/// Subcomplex spanned by closed vertex cycles and extra edges.
fn curves(cycles: &[Vec<VertexId>], edges: &[[VertexId; 2]]) -> SubcomplexDocument {
    let mut es: BTreeSet<[VertexId; 2]> = BTreeSet::new();
    let mut add = |a: VertexId, b: VertexId| {
        es.insert([a.min(b), a.max(b)]);
    };
    for c in cycles {
        for k in 0..c.len() {
            add(c[k], c[(k + 1) % c.len()]);
        }
    }
    for &[a, b] in edges {
        add(a, b);
    }
    let vs: BTreeSet<VertexId> = es.iter().flatten().copied().collect();
    SubcomplexDocument {
        vertices: vs.into_iter().collect(),
        edges: es.into_iter().collect(),
        triangles: Vec::new(),
    }
}

fn document(name: &str, s: &SimplicialSurface, x: SubcomplexDocument) -> InputDocument {
    InputDocument::new(name, s.vertex_count(), s.triangles().to_vec(), x)
}

fn klein_column(i: usize) -> Vec<VertexId> {
    (0..KLEIN_H).map(|j| klein_vertex(i, j)).collect()
}

fn klein_row(j: usize) -> Vec<VertexId> {
    (0..KLEIN_W).map(|i| klein_vertex(i, j)).collect()
}

fn strip_core() -> Vec<VertexId> {
    (0..STRIP_W).map(|i| i * 3 + 1).collect()
}

pub fn generate_example(name: &str) -> Result<InputDocument, UnknownExample> {
    let doc = match name {
        "sphere_arc" => document(name, &tetrahedron(), curves(&[], &[[0, 1]])),
        "torus_meridian" => document(name, &torus7(), curves(&[vec![0, 3, 6]], &[])),
        "torus_wedge" => document(name, &torus7(), curves(&[vec![0, 3, 6], vec![0, 1, 2]], &[])),
        "genus2_circle" => document(name, &genus2(), curves(&[vec![0, 5, 6]], &[])),
        "genus2_wedge" => document(name, &genus2(), curves(&[vec![0, 5, 6], vec![0, 9, 10]], &[])),
        "rp2_core_circle" => document(name, &rp2_6(), curves(&[vec![0, 1, 3]], &[])),
        "rp2_tree" => document(name, &rp2_6(), curves(&[], &[[0, 1], [0, 2], [0, 3]])),
        "klein_meridian" => document(name, &klein8(), curves(&[klein_column(2)], &[])),
        "klein_or_longitude" => document(name, &klein8(), curves(&[klein_row(0)], &[])),
        "klein_op_longitude" => {
            // Rows 1 and 3 close up into one circle through the reversed gluing.
            let mut c = klein_row(1);
            c.extend(klein_row(3));
            document(name, &klein8(), curves(&[c], &[]))
        }
        "klein_meridian_wedge_trivial" => {
            let small = vec![klein_vertex(2, 0), klein_vertex(3, 0), klein_vertex(3, 1)];
            document(name, &klein8(), curves(&[klein_column(2), small], &[]))
        }
        "annulus_core" => document(name, &annulus(), curves(&[strip_core()], &[])),
        "mobius_core" => document(name, &mobius_band(), curves(&[strip_core()], &[])),
        "disk_arc" => {
            let s = subdivided_triangle();
            let centre = 6;
            let end = *s
                .neighbors(centre)
                .iter()
                .filter(|&&w| !s.is_boundary_vertex(w))
                .min()
                .expect("barycenter has interior neighbors");
            document(name, &s, curves(&[], &[[centre, end]]))
        }
        _ => return Err(UnknownExample(name.to_string())),
    };
    Ok(doc)
}

/// Pinned verdict of each catalog entry.
pub fn expected_verdict(name: &str) -> Option<(HomotopyType, CaseLabel)> {
    use CaseLabel::*;
    use HomotopyType as H;
    Some(match name {
        "torus_meridian" => (H::Torus, Thm1_2_2),
        "torus_wedge" => (H::Torus, Thm1_1_2),
        "genus2_wedge" => (H::Point, Thm1_1_1),
        "genus2_circle" => (H::Circle, Thm5_1_1),
        "rp2_core_circle" => (H::SO3ModZ2, Thm1_2_4_i),
        "rp2_tree" => (H::UnitTangentBundleOfCover(SurfaceType::new(true, 0, 0)), Thm1_3_2),
        "klein_meridian" => (H::Torus, Thm5_1_3_i),
        "klein_op_longitude" => (H::Circle, Thm5_1_3_ii),
        "klein_or_longitude" => (H::Circle, Thm5_1_3_iii),
        "klein_meridian_wedge_trivial" => (H::Torus, Thm1_2_3_i),
        "annulus_core" => (H::Circle, Thm1_2_1),
        "disk_arc" => (H::UnitTangentBundle(SurfaceType::new(true, 0, 1)), Thm1_3_1),
        "sphere_arc" => (H::UnitTangentBundle(SurfaceType::new(true, 0, 0)), Thm1_3_1),
        "mobius_core" => (H::Circle, Thm1_2_1),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{classify_surface, NamedSurface};

    #[test]
    fn simplex_counts() {
        let t = torus7();
        assert_eq!((t.vertex_count(), t.edge_count(), t.triangle_count()), (7, 21, 14));
        let p = rp2_6();
        assert_eq!(p.euler_characteristic(), 1);
        assert!(classify_surface(&klein8()).is(NamedSurface::KleinBottle));
        assert!(classify_surface(&annulus()).is(NamedSurface::Annulus));
        assert!(classify_surface(&mobius_band()).is(NamedSurface::MobiusBand));
        assert!(classify_surface(&subdivided_triangle()).is(NamedSurface::Disk));
        for (name, s, ty) in closed_surfaces() {
            assert_eq!(classify_surface(&s), ty, "{name}");
        }
    }

    #[test]
    fn every_entry_builds() {
        for name in CATALOG {
            let doc = generate_example(name).unwrap();
            doc.build().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(expected_verdict(name).is_some());
        }
        assert!(generate_example("nope").is_err());
    }

    #[test]
    fn pinned_verdicts() {
        for name in CATALOG {
            let (s, x) = generate_example(name).unwrap().build().unwrap();
            let c = crate::classifier::classify_embedding_space(&s, &x).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(Some((c.descriptor, c.case)), expected_verdict(name), "{name}");
            c.trace.replay().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
