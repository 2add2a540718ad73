use super::{coherent_orientation, SimplicialSurface, TriangleId, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sheet {
    Plus,
    Minus,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    /// The orientation cover of an orientable surface is two disjoint copies.
    #[error("surface is orientable; its orientation double cover is disconnected")]
    OrientableInput,
}

/// The orientation double cover of a nonorientable surface.
///
/// Total triangle `2t` is `(t, Plus)` carrying the stored orientation of `t`,
/// and `2t + 1` is `(t, Minus)` carrying the reversed one.
#[derive(Clone, Debug)]
pub struct CoveringMap {
    pub total: SimplicialSurface,
    pub sheets: Vec<(TriangleId, Sheet)>,
    pub vertex_projection: Vec<VertexId>,
    /// Fixed-point-free involution on total vertices.
    pub deck: Vec<VertexId>,
}

impl CoveringMap {
    pub fn deck_triangle(&self, t: TriangleId) -> TriangleId {
        t ^ 1
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Builds the total space from (triangle, local orientation) pairs glued
/// across every interior edge where the orientations are compatible.
pub fn orientation_double_cover(s: &SimplicialSurface) -> Result<CoveringMap, CoverError> {
    if coherent_orientation(s).is_some() {
        return Err(CoverError::OrientableInput);
    }
    let n = s.triangle_count();
    // Corner (t, sheet, k) has index 6t + 3 sheet + k.
    let corner = |t: usize, sheet: usize, k: usize| 6 * t + 3 * sheet + k;
    let position = |t: TriangleId, v: VertexId| s.triangle(t).iter().position(|&w| w == v).unwrap();
    let mut uf = UnionFind((0..6 * n).collect());
    for e in 0..s.edge_count() {
        let ts = s.edge_triangles(e);
        if ts.len() != 2 {
            continue;
        }
        let (t, u) = (ts[0], ts[1]);
        let sign = s.transport_sign(t, u, e);
        for sheet in 0..2 {
            // Sheet of t with orientation (+1 for Plus) glues to the sheet of u
            // carrying the induced orientation.
            let other = if sign > 0 { sheet } else { 1 - sheet };
            for v in s.edge(e) {
                uf.union(corner(t, sheet, position(t, v)), corner(u, other, position(u, v)));
            }
        }
    }

    let mut class_id = vec![usize::MAX; 6 * n];
    let mut vertex_projection = Vec::new();
    let mut next = 0;
    let mut tris = Vec::with_capacity(2 * n);
    let mut sheets = Vec::with_capacity(2 * n);
    for t in 0..n {
        for sheet in 0..2 {
            let mut tri = [0; 3];
            for k in 0..3 {
                let root = uf.find(corner(t, sheet, k));
                if class_id[root] == usize::MAX {
                    class_id[root] = next;
                    vertex_projection.push(s.triangle(t)[k]);
                    next += 1;
                }
                tri[k] = class_id[root];
            }
            if sheet == 1 {
                tri.swap(1, 2);
            }
            tris.push(tri);
            sheets.push((t, if sheet == 0 { Sheet::Plus } else { Sheet::Minus }));
        }
    }
    let total = SimplicialSurface::build(next, &tris)
        .expect("orientation double cover of a valid surface is valid");
    let mut deck = vec![usize::MAX; next];
    for t in 0..n {
        let plus = total.triangle(2 * t);
        let minus = total.triangle(2 * t + 1);
        // Minus stores corners in order (0, 2, 1).
        deck[plus[0]] = minus[0];
        deck[plus[1]] = minus[2];
        deck[plus[2]] = minus[1];
        deck[minus[0]] = plus[0];
        deck[minus[2]] = plus[1];
        deck[minus[1]] = plus[2];
    }
    Ok(CoveringMap {
        total,
        sheets,
        vertex_projection,
        deck,
    })
}
