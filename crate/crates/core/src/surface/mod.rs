//! Combinatorial triangulated surfaces.
//!
//! A [`SimplicialSurface`] is a pure 2-dimensional simplicial complex given by
//! a vertex count and a list of vertex triples. Construction validates the
//! manifold conditions (every edge lies in one or two triangles, every vertex
//! link is a single path or cycle) and connectivity, and derives sorted edge
//! and incidence tables so that every traversal in the crate is deterministic.
//!
//! Boundary is allowed. Downstream code treats a surface with boundary as its
//! open interior.

mod classify;
mod cover;
mod subdivision;

pub use classify::{classify_surface, coherent_orientation, NamedSurface, SurfaceType};
pub use cover::{orientation_double_cover, CoverError, CoveringMap, Sheet};
pub use subdivision::{barycentric_subdivision, Carrier, Subdivision};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type TriangleId = usize;

/// Which validation condition a simplex violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// The surface has no triangles.
    Empty,
    /// A triangle references a vertex `>= vertex_count`.
    VertexOutOfRange,
    /// A triangle repeats a vertex.
    DegenerateTriangle,
    /// Two triangles span the same vertex set.
    DuplicateTriangle,
    /// An edge lies in three or more triangles.
    NonManifoldEdge,
    /// A vertex link is not a single path or cycle (includes isolated vertices).
    NonManifoldVertexLink,
    /// The triangles do not form a single edge-connected piece.
    Disconnected,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Empty => "Empty",
            Condition::VertexOutOfRange => "VertexOutOfRange",
            Condition::DegenerateTriangle => "DegenerateTriangle",
            Condition::DuplicateTriangle => "DuplicateTriangle",
            Condition::NonManifoldEdge => "NonManifoldEdge",
            Condition::NonManifoldVertexLink => "NonManifoldVertexLink",
            Condition::Disconnected => "Disconnected",
        };
        f.write_str(s)
    }
}

/// One violated condition together with the offending simplex (vertex list).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationFailure {
    pub condition: Condition,
    pub simplex: Vec<VertexId>,
}

/// Every condition violated by a candidate triangle list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has(&self, condition: Condition) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }

    fn push(&mut self, condition: Condition, simplex: Vec<VertexId>) {
        self.failures.push(ValidationFailure { condition, simplex });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("ok");
        }
        for (i, failure) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} at {:?}", failure.condition, failure.simplex)?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

/// A validated, connected, triangulated 2-manifold (possibly with boundary).
#[derive(Clone, Debug)]
pub struct SimplicialSurface {
    vertex_count: usize,
    triangles: Vec<[VertexId; 3]>,
    edges: Vec<[VertexId; 2]>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
    edge_triangles: Vec<Vec<TriangleId>>,
    triangle_edges: Vec<[EdgeId; 3]>,
    vertex_triangles: Vec<Vec<TriangleId>>,
    neighbors: Vec<Vec<VertexId>>,
}

fn sorted_pair(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SimplicialSurface {
    /// Validates a triangle list and builds the surface, or reports every
    /// violated condition.
    pub fn build(
        vertex_count: usize,
        triangles: &[[VertexId; 3]],
    ) -> Result<SimplicialSurface, ValidationReport> {
        let mut report = ValidationReport::default();
        if triangles.is_empty() {
            report.push(Condition::Empty, vec![]);
            return Err(report);
        }

        let mut seen: BTreeMap<[VertexId; 3], usize> = BTreeMap::new();
        for tri in triangles {
            if tri.iter().any(|&v| v >= vertex_count) {
                report.push(Condition::VertexOutOfRange, tri.to_vec());
                continue;
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                report.push(Condition::DegenerateTriangle, tri.to_vec());
                continue;
            }
            let mut key = *tri;
            key.sort_unstable();
            let count = seen.entry(key).or_insert(0);
            *count += 1;
            if *count == 2 {
                report.push(Condition::DuplicateTriangle, key.to_vec());
            }
        }
        if !report.is_ok() {
            return Err(report);
        }

        let mut edge_set: BTreeMap<(VertexId, VertexId), Vec<TriangleId>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                let e = sorted_pair(tri[k], tri[(k + 1) % 3]);
                edge_set.entry(e).or_default().push(t);
            }
        }
        for (&(a, b), ts) in &edge_set {
            if ts.len() > 2 {
                report.push(Condition::NonManifoldEdge, vec![a, b]);
            }
        }

        let mut vertex_triangles = vec![Vec::new(); vertex_count];
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                vertex_triangles[v].push(t);
            }
        }
        for v in 0..vertex_count {
            if !link_is_path_or_cycle(v, &vertex_triangles[v], triangles) {
                report.push(Condition::NonManifoldVertexLink, vec![v]);
            }
        }

        if report.is_ok() && !triangles_connected(triangles, &edge_set) {
            report.push(Condition::Disconnected, vec![]);
        }
        if !report.is_ok() {
            return Err(report);
        }

        let mut edges = Vec::with_capacity(edge_set.len());
        let mut edge_lookup = HashMap::with_capacity(edge_set.len());
        let mut edge_triangles = Vec::with_capacity(edge_set.len());
        for (i, ((a, b), ts)) in edge_set.into_iter().enumerate() {
            edges.push([a, b]);
            edge_lookup.insert((a, b), i);
            edge_triangles.push(ts);
        }
        let triangle_edges = triangles
            .iter()
            .map(|tri| {
                let mut out = [0; 3];
                for k in 0..3 {
                    out[k] = edge_lookup[&sorted_pair(tri[k], tri[(k + 1) % 3])];
                }
                out
            })
            .collect();
        let mut neighbors: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); vertex_count];
        for &[a, b] in &edges {
            neighbors[a].insert(b);
            neighbors[b].insert(a);
        }

        Ok(SimplicialSurface {
            vertex_count,
            triangles: triangles.to_vec(),
            edges,
            edge_lookup,
            edge_triangles,
            triangle_edges,
            vertex_triangles,
            neighbors: neighbors.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self) -> &[[VertexId; 3]] {
        &self.triangles
    }

    pub fn triangle(&self, t: TriangleId) -> [VertexId; 3] {
        self.triangles[t]
    }

    /// Edges as sorted vertex pairs, in lexicographic order.
    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&sorted_pair(a, b)).copied()
    }

    /// Triangles containing the edge, in increasing order (one or two).
    pub fn edge_triangles(&self, e: EdgeId) -> &[TriangleId] {
        &self.edge_triangles[e]
    }

    pub fn triangle_edges(&self, t: TriangleId) -> [EdgeId; 3] {
        self.triangle_edges[t]
    }

    pub fn vertex_triangles(&self, v: VertexId) -> &[TriangleId] {
        &self.vertex_triangles[v]
    }

    /// Sorted neighbors of a vertex in the 1-skeleton.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    pub fn triangle_containing(&self, a: VertexId, b: VertexId, c: VertexId) -> Option<TriangleId> {
        let e = self.edge_between(a, b)?;
        self.edge_triangles[e]
            .iter()
            .copied()
            .find(|&t| self.triangles[t].contains(&c))
    }

    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        self.edge_triangles[e].len() == 1
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).filter(|&e| self.is_boundary_edge(e))
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_edges().next().is_none()
    }

    pub fn is_boundary_vertex(&self, v: VertexId) -> bool {
        self.neighbors[v].iter().any(|&w| {
            let e = self.edge_lookup[&sorted_pair(v, w)];
            self.is_boundary_edge(e)
        })
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// The triangle across edge `e` from `t`, if `e` is interior.
    pub fn across(&self, t: TriangleId, e: EdgeId) -> Option<TriangleId> {
        self.edge_triangles[e].iter().copied().find(|&u| u != t)
    }

    /// +1 if `a -> b` follows the stored cyclic order of triangle `t`, -1 if `b -> a` does.
    pub fn direction(&self, t: TriangleId, a: VertexId, b: VertexId) -> i8 {
        let tri = self.triangles[t];
        for k in 0..3 {
            if tri[k] == a && tri[(k + 1) % 3] == b {
                return 1;
            }
            if tri[k] == b && tri[(k + 1) % 3] == a {
                return -1;
            }
        }
        panic!("edge ({a}, {b}) is not a side of triangle {t}");
    }

    /// Sign relating the stored orientations of two triangles sharing edge `e`:
    /// +1 when they induce opposite directions on `e` (coherent), -1 otherwise.
    pub fn transport_sign(&self, from: TriangleId, to: TriangleId, e: EdgeId) -> i8 {
        let [a, b] = self.edges[e];
        -self.direction(from, a, b) * self.direction(to, a, b)
    }

    /// Applies a vertex relabeling `v -> perm[v]`; the result is isomorphic.
    pub fn relabeled(&self, perm: &[VertexId]) -> SimplicialSurface {
        let tris: Vec<[VertexId; 3]> = self
            .triangles
            .iter()
            .map(|t| [perm[t[0]], perm[t[1]], perm[t[2]]])
            .collect();
        SimplicialSurface::build(self.vertex_count, &tris)
            .expect("relabeling preserves validity")
    }
}

/// The link of `v` is built from the opposite edges of its triangles; it must be
/// a single connected path or cycle.
fn link_is_path_or_cycle(v: VertexId, star: &[TriangleId], triangles: &[[VertexId; 3]]) -> bool {
    if star.is_empty() {
        return false;
    }
    let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &t in star {
        let others: Vec<VertexId> = triangles[t].iter().copied().filter(|&w| w != v).collect();
        adjacency.entry(others[0]).or_default().push(others[1]);
        adjacency.entry(others[1]).or_default().push(others[0]);
    }
    if adjacency.values().any(|n| n.len() > 2) {
        return false;
    }
    let start = *adjacency.keys().next().unwrap();
    let mut visited = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(w) = stack.pop() {
        for &x in &adjacency[&w] {
            if visited.insert(x) {
                stack.push(x);
            }
        }
    }
    visited.len() == adjacency.len()
}

fn triangles_connected(
    triangles: &[[VertexId; 3]],
    edge_set: &BTreeMap<(VertexId, VertexId), Vec<TriangleId>>,
) -> bool {
    let mut visited = vec![false; triangles.len()];
    visited[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(t) = stack.pop() {
        let tri = triangles[t];
        for k in 0..3 {
            for &u in &edge_set[&sorted_pair(tri[k], tri[(k + 1) % 3])] {
                if !visited[u] {
                    visited[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
    }
    count == triangles.len()
}
