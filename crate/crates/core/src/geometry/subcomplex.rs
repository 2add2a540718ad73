use super::{EdgePath, GeometryError};
use crate::surface::{EdgeId, SimplicialSurface, TriangleId, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcomplexFlags {
    pub is_point: bool,
    pub is_arc: bool,
    pub is_circle: bool,
    pub is_closed_surface: bool,
}

/// A nonempty connected subcomplex of a surface, closed under faces.
/// Simplices are stored as ids of the host surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
    triangles: BTreeSet<TriangleId>,
    flags: SubcomplexFlags,
}

impl Subcomplex {
    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<TriangleId> {
        &self.triangles
    }

    pub fn flags(&self) -> SubcomplexFlags {
        self.flags
    }

    /// Least vertex id of the subcomplex.
    pub fn basepoint(&self) -> VertexId {
        *self.vertices.iter().next().unwrap()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertex-pair form of the edges.
    pub fn edge_pairs(&self, host: &SimplicialSurface) -> Vec<[VertexId; 2]> {
        self.edges.iter().map(|&e| host.edge(e)).collect()
    }

    pub fn triangle_triples(&self, host: &SimplicialSurface) -> Vec<[VertexId; 3]> {
        self.triangles.iter().map(|&t| host.triangle(t)).collect()
    }

    /// For a circle subcomplex, the closed edge path starting at the basepoint
    /// toward its smaller neighbor.
    pub fn circle_path(&self, host: &SimplicialSurface) -> Option<EdgePath> {
        if !self.flags.is_circle {
            return None;
        }
        let adjacency = adjacency(host, &self.edges);
        let start = self.basepoint();
        let mut path = vec![start];
        let mut prev = start;
        let mut cur = adjacency[&start][0];
        while cur != start {
            path.push(cur);
            let next = adjacency[&cur].iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        path.push(start);
        Some(EdgePath(path))
    }
}

fn adjacency(host: &SimplicialSurface, edges: &BTreeSet<EdgeId>) -> BTreeMap<VertexId, Vec<VertexId>> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &e in edges {
        let [a, b] = host.edge(e);
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    adj
}

/// Validates a subcomplex given by simplex lists and computes its flags.
pub fn embed_subcomplex(
    host: &SimplicialSurface,
    vertices: &[VertexId],
    edges: &[[VertexId; 2]],
    triangles: &[[VertexId; 3]],
) -> Result<Subcomplex, GeometryError> {
    if vertices.is_empty() && edges.is_empty() && triangles.is_empty() {
        return Err(GeometryError::Empty);
    }
    let mut vs = BTreeSet::new();
    for &v in vertices {
        if v >= host.vertex_count() {
            return Err(GeometryError::UnknownSimplex(vec![v]));
        }
        vs.insert(v);
    }
    let mut es = BTreeSet::new();
    for &[a, b] in edges {
        let e = host
            .edge_between(a, b)
            .ok_or_else(|| GeometryError::UnknownSimplex(vec![a, b]))?;
        if !vs.contains(&a) || !vs.contains(&b) {
            return Err(GeometryError::NotClosedUnderFaces(vec![a, b]));
        }
        es.insert(e);
    }
    let mut ts = BTreeSet::new();
    for &[a, b, c] in triangles {
        let t = host
            .triangle_containing(a, b, c)
            .ok_or_else(|| GeometryError::UnknownSimplex(vec![a, b, c]))?;
        if host.triangle_edges(t).iter().any(|e| !es.contains(e)) {
            return Err(GeometryError::NotClosedUnderFaces(vec![a, b, c]));
        }
        ts.insert(t);
    }
    from_sets(host, vs, es, ts)
}

pub(crate) fn from_sets(
    host: &SimplicialSurface,
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
    triangles: BTreeSet<TriangleId>,
) -> Result<Subcomplex, GeometryError> {
    if vertices.is_empty() {
        return Err(GeometryError::Empty);
    }
    let adj = adjacency(host, &edges);
    let start = *vertices.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        if let Some(ns) = adj.get(&v) {
            for &w in ns {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    if seen.len() != vertices.len() {
        return Err(GeometryError::NotConnected);
    }

    let degree = |v: VertexId| adj.get(&v).map_or(0, Vec::len);
    let one_dimensional = triangles.is_empty() && !edges.is_empty();
    let is_point = vertices.len() == 1 && edges.is_empty();
    let is_arc = one_dimensional
        && edges.len() + 1 == vertices.len()
        && vertices.iter().all(|&v| degree(v) <= 2);
    let is_circle =
        one_dimensional && vertices.len() >= 3 && vertices.iter().all(|&v| degree(v) == 2);
    let is_closed_surface = !triangles.is_empty()
        && edges.iter().all(|&e| {
            host.edge_triangles(e)
                .iter()
                .filter(|t| triangles.contains(t))
                .count()
                == 2
        });
    Ok(Subcomplex {
        vertices,
        edges,
        triangles,
        flags: SubcomplexFlags {
            is_point,
            is_arc,
            is_circle,
            is_closed_surface,
        },
    })
}
