use super::{EdgeId, SimplicialSurface, TriangleId, VertexId};
use std::collections::BTreeSet;

/// The simplex of the coarse surface whose barycenter a fine vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    Vertex(VertexId),
    Edge(EdgeId),
    Triangle(TriangleId),
}

/// A barycentric subdivision together with its carry data.
///
/// Vertex numbering of the fine surface: coarse vertices keep their ids, the
/// midpoint of coarse edge `e` is `V + e`, and the barycenter of coarse
/// triangle `t` is `V + E + t`. Fine triangle `6t + k` lies in coarse triangle `t`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub surface: SimplicialSurface,
    carriers: Vec<Carrier>,
    approximation: Vec<VertexId>,
}

impl Subdivision {
    pub fn carrier(&self, fine: VertexId) -> Carrier {
        self.carriers[fine]
    }

    /// Simplicial approximation of the identity: every fine vertex goes to the
    /// least vertex of its carrier simplex, so fine edges map to coarse edges
    /// or collapse to a vertex.
    pub fn approximate(&self, fine: VertexId) -> VertexId {
        self.approximation[fine]
    }

    /// Image of a coarse edge: its two halves.
    pub fn carry_edge(&self, coarse: &SimplicialSurface, e: EdgeId) -> [[VertexId; 2]; 2] {
        let [a, b] = coarse.edge(e);
        let m = coarse.vertex_count() + e;
        [[a, m], [m, b]]
    }

    /// Image of a coarse triangle: six fine triangle ids.
    pub fn carry_triangle(&self, t: TriangleId) -> [TriangleId; 6] {
        std::array::from_fn(|k| 6 * t + k)
    }

    /// Carries a subcomplex given by simplex lists to the fine surface.
    /// Returns (vertices, edges as vertex pairs, triangles as vertex triples),
    /// closed under faces.
    pub fn carry_simplices(
        &self,
        coarse: &SimplicialSurface,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
        triangles: impl IntoIterator<Item = TriangleId>,
    ) -> (Vec<VertexId>, Vec<[VertexId; 2]>, Vec<[VertexId; 3]>) {
        let mut vs: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut es: BTreeSet<[VertexId; 2]> = BTreeSet::new();
        let mut ts: BTreeSet<[VertexId; 3]> = BTreeSet::new();
        for e in edges {
            for half in self.carry_edge(coarse, e) {
                es.insert(sort2(half));
            }
        }
        for t in triangles {
            for ft in self.carry_triangle(t) {
                ts.insert(sort3(self.surface.triangle(ft)));
            }
        }
        for t in &ts {
            es.insert(sort2([t[0], t[1]]));
            es.insert(sort2([t[1], t[2]]));
            es.insert(sort2([t[0], t[2]]));
        }
        for e in &es {
            vs.extend(e.iter().copied());
        }
        (
            vs.into_iter().collect(),
            es.into_iter().collect(),
            ts.into_iter().collect(),
        )
    }
}

fn sort2(mut e: [VertexId; 2]) -> [VertexId; 2] {
    e.sort_unstable();
    e
}

fn sort3(mut t: [VertexId; 3]) -> [VertexId; 3] {
    t.sort_unstable();
    t
}

/// Standard barycentric subdivision. Each coarse triangle `[a, b, c]` becomes
/// six triangles whose stored orientation agrees with the coarse one, so a
/// coherent orientation is carried along.
pub fn barycentric_subdivision(s: &SimplicialSurface) -> Subdivision {
    let v = s.vertex_count();
    let e_count = s.edge_count();
    let total = v + e_count + s.triangle_count();
    let mut carriers = Vec::with_capacity(total);
    let mut approximation = Vec::with_capacity(total);
    for i in 0..v {
        carriers.push(Carrier::Vertex(i));
        approximation.push(i);
    }
    for e in 0..e_count {
        carriers.push(Carrier::Edge(e));
        approximation.push(s.edge(e)[0]);
    }
    for t in 0..s.triangle_count() {
        carriers.push(Carrier::Triangle(t));
        approximation.push(*s.triangle(t).iter().min().unwrap());
    }

    let mut tris = Vec::with_capacity(6 * s.triangle_count());
    for t in 0..s.triangle_count() {
        let tri = s.triangle(t);
        let bary = v + e_count + t;
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            let mid = v + s.edge_between(a, b).unwrap();
            tris.push([a, mid, bary]);
            tris.push([mid, b, bary]);
        }
    }
    let surface = SimplicialSurface::build(total, &tris)
        .expect("barycentric subdivision of a valid surface is valid");
    Subdivision {
        surface,
        carriers,
        approximation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::classify_surface;

    #[test]
    fn tetrahedron_subdivision() {
        let s = SimplicialSurface::build(4, &[[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]]).unwrap();
        let sd = barycentric_subdivision(&s);
        assert_eq!(sd.surface.triangle_count(), 24);
        assert_eq!(sd.surface.euler_characteristic(), 2);
        assert_eq!(classify_surface(&sd.surface), classify_surface(&s));
    }

    #[test]
    fn single_triangle_becomes_hexagon() {
        let s = SimplicialSurface::build(3, &[[0, 1, 2]]).unwrap();
        let sd = barycentric_subdivision(&s);
        assert_eq!(sd.surface.triangle_count(), 6);
        assert_eq!(sd.surface.boundary_edges().count(), 6);
        let ty = classify_surface(&sd.surface);
        assert_eq!(ty.boundary_components, 1);
        assert!(ty.is(crate::surface::NamedSurface::Disk));
    }

    #[test]
    fn approximation_is_simplicial() {
        let s = SimplicialSurface::build(4, &[[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]]).unwrap();
        let sd = barycentric_subdivision(&s);
        for &[a, b] in sd.surface.edges() {
            let (x, y) = (sd.approximate(a), sd.approximate(b));
            assert!(x == y || s.edge_between(x, y).is_some());
        }
    }
}
