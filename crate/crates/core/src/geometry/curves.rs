//! Invariants of closed edge paths: orientation character and separation.

use super::{EdgePath, GeometryError};
use crate::surface::{EdgeId, SimplicialSurface, TriangleId, VertexId};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Transports a signed triangle through the star of `v` to `target`.
fn transport_in_star(
    s: &SimplicialSurface,
    v: VertexId,
    from: (TriangleId, i8),
    target: TriangleId,
) -> i8 {
    if from.0 == target {
        return from.1;
    }
    let mut sign: BTreeMap<TriangleId, i8> = BTreeMap::from([from]);
    let mut queue = VecDeque::from([from.0]);
    while let Some(t) = queue.pop_front() {
        for e in s.triangle_edges(t) {
            if !s.edge(e).contains(&v) {
                continue;
            }
            if let Some(u) = s.across(t, e) {
                if !sign.contains_key(&u) {
                    let su = sign[&t] * s.transport_sign(t, u, e);
                    if u == target {
                        return su;
                    }
                    sign.insert(u, su);
                    queue.push_back(u);
                }
            }
        }
    }
    panic!("triangle {target} is not in the star of vertex {v}");
}

/// Carries a local orientation along the loop through triangles flanking each
/// edge; true iff it comes back unflipped.
pub fn is_orientation_preserving(s: &SimplicialSurface, path: &EdgePath) -> Result<bool, GeometryError> {
    path.check_closed(s)?;
    let edges = path.edge_ids(s)?;
    if edges.is_empty() {
        return Ok(true);
    }
    let verts = path.vertices();
    let start = s.edge_triangles(edges[0])[0];
    let mut state = (start, 1i8);
    for (i, &e) in edges.iter().enumerate() {
        let target = s.edge_triangles(e)[0];
        state = (target, transport_in_star(s, verts[i], state, target));
    }
    let back = transport_in_star(s, verts[0], state, start);
    Ok(back == 1)
}

/// Splits every circle vertex by the sides of the circle in its star and
/// returns the resulting pieces, each with the circle as new boundary.
pub fn cut_along(s: &SimplicialSurface, circle: &EdgePath) -> Result<Vec<SimplicialSurface>, GeometryError> {
    let (pieces, _) = cut_pieces(s, circle)?;
    pieces
        .into_iter()
        .map(|(n, tris)| SimplicialSurface::build(n, &tris).map_err(GeometryError::InvalidPiece))
        .collect()
}

/// Cut data: pieces as (vertex count, triangles) plus, per piece, the host
/// triangle ids it came from.
pub(crate) fn cut_pieces(
    s: &SimplicialSurface,
    circle: &EdgePath,
) -> Result<(Vec<(usize, Vec<[VertexId; 3]>)>, Vec<Vec<TriangleId>>), GeometryError> {
    let cut: BTreeSet<EdgeId> = circle.check_embedded_circle(s)?.into_iter().collect();
    let on_circle: BTreeSet<VertexId> = circle.vertices().iter().copied().collect();

    // side[(v, t)] = class of t in star(v) after removing the circle edges.
    let mut side: BTreeMap<(VertexId, TriangleId), usize> = BTreeMap::new();
    for &v in &on_circle {
        let mut class = 0;
        for &t0 in s.vertex_triangles(v) {
            if side.contains_key(&(v, t0)) {
                continue;
            }
            side.insert((v, t0), class);
            let mut stack = vec![t0];
            while let Some(t) = stack.pop() {
                for e in s.triangle_edges(t) {
                    if !s.edge(e).contains(&v) || cut.contains(&e) {
                        continue;
                    }
                    if let Some(u) = s.across(t, e) {
                        if let std::collections::btree_map::Entry::Vacant(slot) = side.entry((v, u)) {
                            slot.insert(class);
                            stack.push(u);
                        }
                    }
                }
            }
            class += 1;
        }
    }

    let mut component = vec![usize::MAX; s.triangle_count()];
    let mut members: Vec<Vec<TriangleId>> = Vec::new();
    for t0 in 0..s.triangle_count() {
        if component[t0] != usize::MAX {
            continue;
        }
        let c = members.len();
        component[t0] = c;
        let mut list = vec![t0];
        let mut stack = vec![t0];
        while let Some(t) = stack.pop() {
            for e in s.triangle_edges(t) {
                if cut.contains(&e) {
                    continue;
                }
                if let Some(u) = s.across(t, e) {
                    if component[u] == usize::MAX {
                        component[u] = c;
                        list.push(u);
                        stack.push(u);
                    }
                }
            }
        }
        list.sort_unstable();
        members.push(list);
    }

    let mut pieces = Vec::with_capacity(members.len());
    for list in &members {
        let mut ids: BTreeMap<(VertexId, usize), usize> = BTreeMap::new();
        let mut tris = Vec::with_capacity(list.len());
        for &t in list {
            let tri = s.triangle(t);
            let mut out = [0; 3];
            for k in 0..3 {
                let v = tri[k];
                let key = if on_circle.contains(&v) { (v, side[&(v, t)] + 1) } else { (v, 0) };
                let next = ids.len();
                out[k] = *ids.entry(key).or_insert(next);
            }
            tris.push(out);
        }
        pieces.push((ids.len(), tris));
    }
    Ok((pieces, members))
}

/// Cut-and-count: true iff cutting along the circle leaves two pieces.
pub fn is_separating(s: &SimplicialSurface, circle: &EdgePath) -> Result<bool, GeometryError> {
    let (_, members) = cut_pieces(s, circle)?;
    Ok(members.len() == 2)
}

/// On a closed surface a simple closed curve separates iff it is a mod-2
/// boundary. Solves `d2 x = c` over GF(2) by elimination.
pub fn is_separating_by_homology(s: &SimplicialSurface, circle: &EdgePath) -> Result<bool, GeometryError> {
    let cut = circle.check_embedded_circle(s)?;
    let words = s.triangle_count().div_ceil(64) + 1;
    let rhs_bit = s.triangle_count();
    // One row per edge: the triangles containing it, plus the right-hand side.
    let mut rows: Vec<Vec<u64>> = (0..s.edge_count())
        .map(|e| {
            let mut row = vec![0u64; words];
            for &t in s.edge_triangles(e) {
                row[t / 64] |= 1 << (t % 64);
            }
            row
        })
        .collect();
    for e in cut {
        rows[e][rhs_bit / 64] ^= 1 << (rhs_bit % 64);
    }
    let mut rank = 0;
    for col in 0..s.triangle_count() {
        let bit = 1u64 << (col % 64);
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col / 64] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col / 64] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    let rhs = 1u64 << (rhs_bit % 64);
    let consistent = rows[rank..].iter().all(|row| row[rhs_bit / 64] & rhs == 0);
    Ok(consistent)
}
