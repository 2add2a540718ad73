use super::neighborhood::greedy_collapse;
use super::{is_orientation_preserving, is_separating, EdgePath, GeometryError, NeighborhoodDecomposition};
use crate::surface::{EdgeId, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopProperties {
    /// Filled in by the group engine; `None` until then.
    pub essential: Option<bool>,
    pub orientation_preserving: bool,
    pub separating: bool,
}

/// The loop closed by one non-tree edge of the spine.
#[derive(Clone, Debug)]
pub struct ChordLoop {
    pub chord: EdgeId,
    /// Loop at the spine root: tree path, chord, tree path back.
    pub based: EdgePath,
    /// The embedded circle: tree path between the chord ends plus the chord.
    pub cycle: EdgePath,
    pub properties: LoopProperties,
}

/// A graph onto which `N` collapses, with a spanning tree rooted at the
/// carried basepoint of `X`.
#[derive(Clone, Debug)]
pub struct Spine {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub root: VertexId,
    pub tree_edges: Vec<EdgeId>,
    pub loops: Vec<ChordLoop>,
}

impl Spine {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    pub fn essential_loops(&self) -> impl Iterator<Item = &ChordLoop> {
        self.loops.iter().filter(|l| l.properties.essential == Some(true))
    }
}

pub fn spine_with_loops(decomp: &NeighborhoodDecomposition) -> Result<Spine, GeometryError> {
    let s = &decomp.fine;
    let root = decomp.carried.basepoint();
    let collapsed = greedy_collapse(
        s,
        &decomp.neighborhood,
        &BTreeSet::from([root]),
        &BTreeSet::new(),
        &BTreeSet::new(),
    );
    if !collapsed.triangles.is_empty() {
        return Err(GeometryError::CollapseFailed(collapsed.triangles.len()));
    }

    let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> =
        collapsed.vertices.iter().map(|&v| (v, Vec::new())).collect();
    for &e in &collapsed.edges {
        let [a, b] = s.edge(e);
        adjacency.get_mut(&a).unwrap().push(b);
        adjacency.get_mut(&b).unwrap().push(a);
    }
    for list in adjacency.values_mut() {
        list.sort_unstable();
    }

    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut depth: BTreeMap<VertexId, usize> = BTreeMap::from([(root, 0)]);
    let mut tree_edges = BTreeSet::new();
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[&v] {
            if !depth.contains_key(&w) {
                depth.insert(w, depth[&v] + 1);
                parent.insert(w, v);
                tree_edges.insert(s.edge_between(v, w).unwrap());
                queue.push_back(w);
            }
        }
    }
    if depth.len() != collapsed.vertices.len() {
        return Err(GeometryError::CollapseFailed(0));
    }

    let to_root = |mut v: VertexId| {
        let mut path = vec![v];
        while let Some(&p) = parent.get(&v) {
            path.push(p);
            v = p;
        }
        path
    };

    let mut loops = Vec::new();
    for &e in &collapsed.edges {
        if tree_edges.contains(&e) {
            continue;
        }
        let [u, v] = s.edge(e);
        let mut based: Vec<VertexId> = to_root(u);
        based.reverse();
        based.extend(to_root(v));

        // Tree path u -> lca -> v.
        let (mut a, mut b) = (u, v);
        let mut left = vec![a];
        let mut right = vec![b];
        while a != b {
            if depth[&a] >= depth[&b] {
                a = parent[&a];
                left.push(a);
            } else {
                b = parent[&b];
                right.push(b);
            }
        }
        right.pop();
        right.reverse();
        let mut cycle = left;
        cycle.extend(right);
        cycle.push(u);
        let cycle = EdgePath(cycle);

        let properties = LoopProperties {
            essential: None,
            orientation_preserving: is_orientation_preserving(s, &cycle)?,
            separating: is_separating(s, &cycle)?,
        };
        loops.push(ChordLoop {
            chord: e,
            based: EdgePath(based),
            cycle,
            properties,
        });
    }

    Ok(Spine {
        vertices: collapsed.vertices.into_iter().collect(),
        edges: collapsed.edges.into_iter().collect(),
        root,
        tree_edges: tree_edges.into_iter().collect(),
        loops,
    })
}
