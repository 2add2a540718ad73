use super::subcomplex::from_sets;
use super::{GeometryError, Subcomplex};
use crate::surface::{
    barycentric_subdivision, classify_surface, EdgeId, NamedSurface, SimplicialSurface, SurfaceType,
    TriangleId, VertexId,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComplementClass {
    Disk,
    Annulus,
    MobiusBand,
    Other(SurfaceType),
}

impl ComplementClass {
    fn of(ty: SurfaceType) -> ComplementClass {
        match ty.named() {
            Some(NamedSurface::Disk) => ComplementClass::Disk,
            Some(NamedSurface::Annulus) => ComplementClass::Annulus,
            Some(NamedSurface::MobiusBand) => ComplementClass::MobiusBand,
            _ => ComplementClass::Other(ty),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComplementComponent {
    /// Triangle ids of the twice-subdivided host.
    pub triangles: Vec<TriangleId>,
    pub surface: SurfaceType,
    pub class: ComplementClass,
}

/// One elementary collapse: a free face removed together with its unique coface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Collapse {
    /// Edge and the triangle it was free in.
    Triangle(EdgeId, TriangleId),
    /// Vertex and the edge it was free in.
    Edge(VertexId, EdgeId),
}

/// Regular neighborhood `N` of `X` as the closed star of `X` in the second
/// barycentric subdivision, together with its complement pieces.
#[derive(Clone, Debug)]
pub struct NeighborhoodDecomposition {
    /// The twice-subdivided host.
    pub fine: SimplicialSurface,
    /// Simplicial approximation of the identity from the fine host to the original.
    pub approximation: Vec<VertexId>,
    /// `X` carried into the fine host.
    pub carried: Subcomplex,
    pub neighborhood: Subcomplex,
    pub neighborhood_type: SurfaceType,
    pub complement: Vec<ComplementComponent>,
    /// Collapse sequence from `N` down to the carried `X`.
    pub collapse: Vec<Collapse>,
}

/// Triangles of `s` re-indexed as a standalone surface.
pub(crate) fn subsurface(
    s: &SimplicialSurface,
    triangles: &[TriangleId],
) -> Result<SimplicialSurface, GeometryError> {
    let mut ids: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &t in triangles {
        for v in s.triangle(t) {
            let next = ids.len();
            ids.entry(v).or_insert(next);
        }
    }
    let tris: Vec<[VertexId; 3]> = triangles
        .iter()
        .map(|&t| s.triangle(t).map(|v| ids[&v]))
        .collect();
    SimplicialSurface::build(ids.len(), &tris).map_err(GeometryError::InvalidPiece)
}

/// Edge-connected components of a triangle set.
pub(crate) fn triangle_components(s: &SimplicialSurface, set: &BTreeSet<TriangleId>) -> Vec<Vec<TriangleId>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &t0 in set {
        if !seen.insert(t0) {
            continue;
        }
        let mut list = vec![t0];
        let mut stack = vec![t0];
        while let Some(t) = stack.pop() {
            for e in s.triangle_edges(t) {
                if let Some(u) = s.across(t, e) {
                    if set.contains(&u) && seen.insert(u) {
                        list.push(u);
                        stack.push(u);
                    }
                }
            }
        }
        list.sort_unstable();
        out.push(list);
    }
    out
}

pub fn regular_neighborhood(s: &SimplicialSurface, x: &Subcomplex) -> Result<NeighborhoodDecomposition, GeometryError> {
    if x.flags().is_closed_surface && s.is_closed() {
        return Err(GeometryError::XIsWholeSurface);
    }
    let first = barycentric_subdivision(s);
    let (v1, e1, t1) = first.carry_simplices(
        s,
        x.vertices().iter().copied(),
        x.edges().iter().copied(),
        x.triangles().iter().copied(),
    );
    let x1 = embed_lists(&first.surface, &v1, &e1, &t1)?;
    let second = barycentric_subdivision(&first.surface);
    let (v2, e2, t2) = second.carry_simplices(
        &first.surface,
        x1.vertices().iter().copied(),
        x1.edges().iter().copied(),
        x1.triangles().iter().copied(),
    );
    let fine = second.surface.clone();
    let carried = embed_lists(&fine, &v2, &e2, &t2)?;
    let approximation: Vec<VertexId> = (0..fine.vertex_count())
        .map(|v| first.approximate(second.approximate(v)))
        .collect();

    let star: BTreeSet<TriangleId> = carried
        .vertices()
        .iter()
        .flat_map(|&v| fine.vertex_triangles(v).iter().copied())
        .collect();
    let neighborhood = closure(&fine, &star)?;
    let star_list: Vec<TriangleId> = star.iter().copied().collect();
    let neighborhood_type = classify_surface(&subsurface(&fine, &star_list)?);

    let rest: BTreeSet<TriangleId> = (0..fine.triangle_count()).filter(|t| !star.contains(t)).collect();
    let mut complement = Vec::new();
    for comp in triangle_components(&fine, &rest) {
        let ty = classify_surface(&subsurface(&fine, &comp)?);
        complement.push(ComplementComponent {
            triangles: comp,
            surface: ty,
            class: ComplementClass::of(ty),
        });
    }

    let protect_v: BTreeSet<VertexId> = carried.vertices().clone();
    let protect_e: BTreeSet<EdgeId> = carried.edges().clone();
    let protect_t: BTreeSet<TriangleId> = carried.triangles().clone();
    let result = greedy_collapse(&fine, &neighborhood, &protect_v, &protect_e, &protect_t);
    if result.triangles != protect_t || result.edges != protect_e || result.vertices != protect_v {
        return Err(GeometryError::CollapseFailed(result.triangles.len()));
    }

    Ok(NeighborhoodDecomposition {
        fine,
        approximation,
        carried,
        neighborhood,
        neighborhood_type,
        complement,
        collapse: result.steps,
    })
}

fn embed_lists(
    s: &SimplicialSurface,
    vs: &[VertexId],
    es: &[[VertexId; 2]],
    ts: &[[VertexId; 3]],
) -> Result<Subcomplex, GeometryError> {
    super::embed_subcomplex(s, vs, es, ts)
}

/// The subcomplex spanned by a triangle set.
pub(crate) fn closure(s: &SimplicialSurface, tris: &BTreeSet<TriangleId>) -> Result<Subcomplex, GeometryError> {
    let edges: BTreeSet<EdgeId> = tris.iter().flat_map(|&t| s.triangle_edges(t)).collect();
    let vertices: BTreeSet<VertexId> = tris.iter().flat_map(|&t| s.triangle(t)).collect();
    from_sets(s, vertices, edges, tris.clone())
}

pub(crate) struct CollapseResult {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub triangles: BTreeSet<TriangleId>,
    pub steps: Vec<Collapse>,
}

/// Greedy elementary collapses of a subcomplex, never removing protected
/// simplices. Free edges go first (lowest id first), then free vertices.
pub(crate) fn greedy_collapse(
    s: &SimplicialSurface,
    start: &Subcomplex,
    protect_v: &BTreeSet<VertexId>,
    protect_e: &BTreeSet<EdgeId>,
    protect_t: &BTreeSet<TriangleId>,
) -> CollapseResult {
    let mut triangles = start.triangles().clone();
    let mut edges = start.edges().clone();
    let mut vertices = start.vertices().clone();
    let mut steps = Vec::new();

    let mut cofaces: BTreeMap<EdgeId, usize> = edges
        .iter()
        .map(|&e| (e, s.edge_triangles(e).iter().filter(|t| triangles.contains(t)).count()))
        .collect();
    let mut free: BTreeSet<EdgeId> = cofaces
        .iter()
        .filter(|&(e, &c)| c == 1 && !protect_e.contains(e))
        .map(|(&e, _)| e)
        .collect();
    while let Some(e) = free.pop_first() {
        if cofaces[&e] != 1 {
            continue;
        }
        let t = *s
            .edge_triangles(e)
            .iter()
            .find(|t| triangles.contains(t))
            .unwrap();
        if protect_t.contains(&t) {
            continue;
        }
        triangles.remove(&t);
        edges.remove(&e);
        cofaces.remove(&e);
        steps.push(Collapse::Triangle(e, t));
        for f in s.triangle_edges(t) {
            if f == e {
                continue;
            }
            let c = cofaces.get_mut(&f).unwrap();
            *c -= 1;
            if *c == 1 && !protect_e.contains(&f) {
                free.insert(f);
            }
        }
    }

    let mut degree: BTreeMap<VertexId, usize> = vertices.iter().map(|&v| (v, 0)).collect();
    for &e in &edges {
        for v in s.edge(e) {
            *degree.get_mut(&v).unwrap() += 1;
        }
    }
    let loose = |e: &EdgeId, cofaces: &BTreeMap<EdgeId, usize>| cofaces[e] == 0 && !protect_e.contains(e);
    let mut leaves: BTreeSet<VertexId> = degree
        .iter()
        .filter(|&(v, &d)| d == 1 && !protect_v.contains(v))
        .map(|(&v, _)| v)
        .collect();
    while let Some(v) = leaves.pop_first() {
        if degree[&v] != 1 {
            continue;
        }
        let e = *edges
            .iter()
            .find(|&&e| s.edge(e).contains(&v))
            .unwrap();
        if !loose(&e, &cofaces) {
            continue;
        }
        let w = s.edge(e).into_iter().find(|&w| w != v).unwrap();
        edges.remove(&e);
        cofaces.remove(&e);
        vertices.remove(&v);
        degree.remove(&v);
        steps.push(Collapse::Edge(v, e));
        let d = degree.get_mut(&w).unwrap();
        *d -= 1;
        if *d == 1 && !protect_v.contains(&w) {
            leaves.insert(w);
        }
    }
    CollapseResult {
        vertices,
        edges,
        triangles,
        steps,
    }
}

/// A closed disk containing `N` formed by absorbing disk complement pieces.
#[derive(Clone, Debug)]
pub struct DiskNeighborhood {
    pub triangles: Vec<TriangleId>,
    /// Indices into the decomposition's complement list.
    pub absorbed: Vec<usize>,
}

/// Absorbs every disk complement component into `N`; if that closes the
/// surface up into a sphere, leaves the last one out. Returns the disk when
/// the result is one.
pub fn absorb_disk_components(decomp: &NeighborhoodDecomposition) -> Option<DiskNeighborhood> {
    let disks: Vec<usize> = decomp
        .complement
        .iter()
        .enumerate()
        .filter(|(_, c)| c.class == ComplementClass::Disk)
        .map(|(i, _)| i)
        .collect();
    let attempt = |chosen: &[usize]| -> Option<DiskNeighborhood> {
        let mut tris: BTreeSet<TriangleId> = decomp.neighborhood.triangles().clone();
        for &i in chosen {
            tris.extend(decomp.complement[i].triangles.iter().copied());
        }
        let list: Vec<TriangleId> = tris.into_iter().collect();
        let ty = classify_surface(&subsurface(&decomp.fine, &list).ok()?);
        ty.is(NamedSurface::Disk).then(|| DiskNeighborhood {
            triangles: list,
            absorbed: chosen.to_vec(),
        })
    };
    attempt(&disks).or_else(|| {
        if disks.is_empty() {
            return None;
        }
        attempt(&disks[..disks.len() - 1])
    })
}
