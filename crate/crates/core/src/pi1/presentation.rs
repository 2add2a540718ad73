use super::schema::{polygonal_schema, PolygonalSchema};
use super::{Pi1Error, SurfaceGroup, Word};
use crate::geometry::EdgePath;
use crate::surface::{EdgeId, SimplicialSurface, VertexId};
use std::collections::VecDeque;

/// Edge-path presentation of `pi1(S, basepoint)`: generators are the edges off
/// a spanning tree, relators are triangle boundaries. Carries the map to the
/// canonical surface group.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub basepoint: VertexId,
    pub tree_edges: Vec<EdgeId>,
    /// Generator `g` is the edge `generator_edges[g]`, oriented low to high.
    pub generator_edges: Vec<EdgeId>,
    pub relators: Vec<Word>,
    pub schema: PolygonalSchema,
    /// Image of each raw generator in the canonical group.
    pub to_canonical: Vec<Word>,
    generator_of_edge: Vec<Option<usize>>,
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.generator_edges.len()
    }

    pub fn group(&self) -> &SurfaceGroup {
        &self.schema.group
    }

    pub fn generator_for(&self, e: EdgeId) -> Option<usize> {
        self.generator_of_edge[e]
    }

    /// Raw word of a closed edge path; paths away from the basepoint are read
    /// as conjugated back along the tree.
    pub fn loop_word(&self, s: &SimplicialSurface, path: &EdgePath) -> Result<Word, Pi1Error> {
        if !path.is_closed() {
            return Err(Pi1Error::NotAClosedPath(path.vertices().to_vec()));
        }
        let mut out = Word::identity();
        for pair in path.vertices().windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let e = s
                .edge_between(a, b)
                .ok_or_else(|| Pi1Error::NotAClosedPath(path.vertices().to_vec()))?;
            if let Some(g) = self.generator_of_edge[e] {
                let w = Word::generator(g);
                out = &out * &if a < b { w } else { w.inverse() };
            }
        }
        Ok(out)
    }

    pub fn canonical(&self, raw: &Word) -> Word {
        raw.substitute(&self.to_canonical)
    }

    /// Word problem for a raw word.
    pub fn is_trivial_word(&self, raw: &Word) -> Result<bool, Pi1Error> {
        if let Some(&l) = raw.letters().iter().find(|&&l| l.unsigned_abs() as usize > self.generator_count()) {
            return Err(Pi1Error::UnknownGenerator(l));
        }
        self.group().is_trivial(&self.canonical(raw))
    }

    pub fn commutes(&self, u: &Word, v: &Word) -> Result<bool, Pi1Error> {
        self.is_trivial_word(&u.commutator(v))
    }

    pub fn canonical_loop_word(&self, s: &SimplicialSurface, path: &EdgePath) -> Result<Word, Pi1Error> {
        self.loop_word(s, path).map(|w| self.canonical(&w))
    }
}

pub fn presentation(s: &SimplicialSurface, basepoint: VertexId) -> Result<Presentation, Pi1Error> {
    if basepoint >= s.vertex_count() {
        return Err(Pi1Error::UnknownVertex(basepoint));
    }
    let schema = polygonal_schema(s)?;

    // BFS spanning tree of the 1-skeleton; path images from the basepoint.
    let mut reach: Vec<Option<Word>> = vec![None; s.vertex_count()];
    reach[basepoint] = Some(Word::identity());
    let mut in_tree = vec![false; s.edge_count()];
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        for &w in s.neighbors(v) {
            if reach[w].is_none() {
                let e = s.edge_between(v, w).unwrap();
                in_tree[e] = true;
                let img = &schema.edge_images[e];
                let step = if v < w { img.clone() } else { img.inverse() };
                reach[w] = Some(reach[v].as_ref().unwrap() * &step);
                queue.push_back(w);
            }
        }
    }

    let mut generator_edges = Vec::new();
    let mut generator_of_edge = vec![None; s.edge_count()];
    let mut to_canonical = Vec::new();
    for e in 0..s.edge_count() {
        if in_tree[e] {
            continue;
        }
        generator_of_edge[e] = Some(generator_edges.len());
        generator_edges.push(e);
        let [u, v] = s.edge(e);
        let pu = reach[u].as_ref().unwrap();
        let pv = reach[v].as_ref().unwrap();
        to_canonical.push(&(pu * &schema.edge_images[e]) * &pv.inverse());
    }

    let read = |a: VertexId, b: VertexId| -> Word {
        let e = s.edge_between(a, b).unwrap();
        match generator_of_edge[e] {
            Some(g) if a < b => Word::generator(g),
            Some(g) => Word::generator(g).inverse(),
            None => Word::identity(),
        }
    };
    let relators = s
        .triangles()
        .iter()
        .map(|&[a, b, c]| &(&read(a, b) * &read(b, c)) * &read(c, a))
        .collect();
    let tree_edges = (0..s.edge_count()).filter(|&e| in_tree[e]).collect();

    Ok(Presentation {
        basepoint,
        tree_edges,
        generator_edges,
        relators,
        schema,
        to_canonical,
        generator_of_edge,
    })
}
