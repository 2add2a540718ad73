//! Cut a surface open along a dual spanning tree, read off the polygon word and
//! bring it to canonical form by substitutions that keep track of every
//! original generator.

use super::group::{nonorientable_relator, orientable_relator};
use super::word::{cyclic_reduce, free_reduce, generator_of, letter};
use super::{Pi1Error, SurfaceGroup, Word};
use crate::surface::{classify_surface, EdgeId, SimplicialSurface};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

/// One recorded normalization step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// `x B x A` becomes `y y B^-1 A`.
    Crosscap,
    /// `x A y B x^-1 C y^-1 D` becomes `[s, v] D C B A`.
    Handle,
    /// A crosscap next to a handle becomes three crosscaps.
    HandleToCrosscaps,
    /// Signs, order and block position.
    Normalize,
    /// `x x y y` becomes `b a b^-1 a`.
    KleinBasis,
}

/// Polygon word of the cut-open surface, its canonical form, and how each
/// edge of the surface reads in canonical generators.
#[derive(Clone, Debug)]
pub struct PolygonalSchema {
    /// Edges of the cut graph not in its spanning tree; polygon letters.
    pub chord_edges: Vec<EdgeId>,
    /// Boundary of the polygon in the chord letters.
    pub polygon_word: Word,
    pub moves: Vec<Move>,
    pub group: SurfaceGroup,
    /// Per oriented edge `low -> high` of the surface, its canonical image.
    pub edge_images: Vec<Word>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

fn oriented(s: &SimplicialSurface, images: &[Word], a: usize, b: usize) -> Word {
    let e = s.edge_between(a, b).expect("triangle side is an edge");
    if a < b {
        images[e].clone()
    } else {
        images[e].inverse()
    }
}

/// Canonical schema of a closed surface.
pub fn canonicalize(s: &SimplicialSurface) -> Result<PolygonalSchema, Pi1Error> {
    if !s.is_closed() {
        return Err(Pi1Error::NotClosed);
    }
    polygonal_schema(s)
}

/// As [`canonicalize`], and for surfaces with boundary the free reduction.
pub fn polygonal_schema(s: &SimplicialSurface) -> Result<PolygonalSchema, Pi1Error> {
    let ty = classify_surface(s);

    // Dual spanning tree by BFS from triangle 0.
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; s.triangle_count()];
    let mut seen = vec![false; s.triangle_count()];
    let mut order = vec![0];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut dual_tree = vec![false; s.edge_count()];
    while let Some(t) = queue.pop_front() {
        for e in s.triangle_edges(t) {
            if let Some(u) = s.across(t, e) {
                if !seen[u] {
                    seen[u] = true;
                    parent_edge[u] = Some(e);
                    dual_tree[e] = true;
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
    }

    // Spanning tree of the cut graph; with boundary, the least boundary edge
    // stays out so that it can be eliminated.
    let b0 = s.boundary_edges().into_iter().min();
    let mut uf = UnionFind((0..s.vertex_count()).collect());
    let mut chord_edges = Vec::new();
    let mut images = vec![Word::identity(); s.edge_count()];
    for e in 0..s.edge_count() {
        if dual_tree[e] || Some(e) == b0 {
            continue;
        }
        let [a, b] = s.edge(e);
        if !uf.union(a, b) {
            images[e] = Word::generator(chord_edges.len());
            chord_edges.push(e);
        }
    }
    if let Some(e) = b0 {
        let [a, b] = s.edge(e);
        if uf.union(a, b) {
            return Err(Pi1Error::Internal("boundary edge is a bridge of the cut graph".into()));
        }
        images[e] = Word::generator(chord_edges.len());
        chord_edges.push(e);
    }

    // Interior dual edges from the leaves of the dual tree inward.
    for &t in order.iter().skip(1).rev() {
        let pe = parent_edge[t].unwrap();
        let tri = s.triangle(t);
        let k = (0..3)
            .find(|&k| s.edge_between(tri[k], tri[(k + 1) % 3]) == Some(pe))
            .unwrap();
        let w1 = oriented(s, &images, tri[(k + 1) % 3], tri[(k + 2) % 3]);
        let w2 = oriented(s, &images, tri[(k + 2) % 3], tri[k]);
        let wk = (&w1 * &w2).inverse();
        images[pe] = if tri[k] < tri[(k + 1) % 3] { wk } else { wk.inverse() };
    }
    let root = s.triangle(0);
    let polygon: Word = (0..3)
        .map(|k| oriented(s, &images, root[k], root[(k + 1) % 3]))
        .fold(Word::identity(), |acc, w| &acc * &w);
    let polygon_word = polygon.cyclically_reduced();

    let rank = chord_edges.len();
    if b0.is_some() {
        // The eliminated letter occurs once; solve for it.
        let last = rank - 1;
        let letters = polygon_word.letters();
        let hits: Vec<usize> = (0..letters.len()).filter(|&i| generator_of(letters[i]) == last).collect();
        if hits.len() != 1 {
            return Err(Pi1Error::Internal("boundary letter does not occur once".into()));
        }
        let i = hits[0];
        let mut rest: Vec<i32> = letters[i + 1..].to_vec();
        rest.extend_from_slice(&letters[..i]);
        let rest = Word::from_letters(rest);
        let solved = if letters[i] > 0 { rest.inverse() } else { rest };
        let mut subst: Vec<Word> = (0..rank).map(Word::generator).collect();
        subst[last] = solved;
        for img in &mut images {
            *img = img.substitute(&subst);
        }
        let group = SurfaceGroup::free(rank - 1);
        if (rank - 1) as i64 != 1 - ty.euler_characteristic {
            return Err(Pi1Error::Internal("free rank disagrees with Euler characteristic".into()));
        }
        return Ok(PolygonalSchema {
            chord_edges,
            polygon_word,
            moves: Vec::new(),
            group,
            edge_images: images,
        });
    }

    let mut state = Normalizer {
        rel: polygon_word.letters().to_vec(),
        images: (0..rank).map(Word::generator).collect(),
        moves: Vec::new(),
    };
    state.check_pairs()?;
    state.run()?;

    let group = SurfaceGroup::for_surface(&ty);
    let expected: Vec<i32> = if rank == 0 {
        Vec::new()
    } else if ty.orientable {
        orientable_relator(rank / 2).letters().to_vec()
    } else {
        nonorientable_relator(rank).letters().to_vec()
    };
    if state.rel != expected {
        return Err(Pi1Error::Internal(format!("normal form {:?} is not standard", state.rel)));
    }
    if !ty.orientable && rank == 2 {
        // x x y y with x = b, y = b^-1 a.
        let basis = vec![Word::from_letters(vec![2]), Word::from_letters(vec![-2, 1])];
        state.substitute_all(&basis);
        state.moves.push(Move::KleinBasis);
    }
    if let Some(r) = &group.relator {
        if state.rel != r.letters() {
            return Err(Pi1Error::Internal("canonical relator mismatch".into()));
        }
    }
    for img in &mut images {
        *img = img.substitute(&state.images);
    }
    Ok(PolygonalSchema {
        chord_edges,
        polygon_word,
        moves: state.moves,
        group,
        edge_images: images,
    })
}

/// Cyclic relator with every letter twice, plus images of the original letters.
struct Normalizer {
    rel: Vec<i32>,
    images: Vec<Word>,
    moves: Vec<Move>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    Free,
    Crosscap,
    Handle,
}

impl Normalizer {
    fn check_pairs(&self) -> Result<(), Pi1Error> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.rel {
            *count.entry(generator_of(l)).or_default() += 1;
        }
        if count.len() != self.images.len() || count.values().any(|&c| c != 2) {
            return Err(Pi1Error::Internal("polygon letters are not paired".into()));
        }
        Ok(())
    }

    /// Simultaneous substitution `g -> subst[g]` on the relator and images.
    fn substitute_all(&mut self, subst: &[Word]) {
        let rel = Word::from_letters(std::mem::take(&mut self.rel)).substitute(subst);
        self.rel = cyclic_reduce(free_reduce(rel.letters().iter().copied()));
        for img in &mut self.images {
            *img = img.substitute(subst);
        }
    }

    fn substitute(&mut self, changes: &[(usize, Word)]) -> Result<(), Pi1Error> {
        let mut subst: Vec<Word> = (0..self.images.len()).map(Word::generator).collect();
        for (g, w) in changes {
            subst[*g] = w.clone();
        }
        self.substitute_all(&subst);
        self.check_pairs()
    }

    fn rotated(&self, start: usize) -> Vec<i32> {
        let n = self.rel.len();
        (0..n).map(|i| self.rel[(start + i) % n]).collect()
    }

    fn positions(&self) -> BTreeMap<usize, [usize; 2]> {
        let mut pos: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &l) in self.rel.iter().enumerate() {
            pos.entry(generator_of(l)).or_default().push(i);
        }
        pos.into_iter().map(|(g, p)| (g, [p[0], p[1]])).collect()
    }

    /// Block type per position and the start positions of blocks.
    fn blocks(&self) -> (Vec<Block>, Vec<(usize, Block)>) {
        let n = self.rel.len();
        let r = &self.rel;
        let mut kind = vec![Block::Free; n];
        let mut starts = Vec::new();
        for i in 0..n {
            if kind[i] != Block::Free {
                continue;
            }
            let at = |k: usize| r[(i + k) % n];
            if n >= 2 && at(0) == at(1) && kind[(i + 1) % n] == Block::Free {
                kind[i] = Block::Crosscap;
                kind[(i + 1) % n] = Block::Crosscap;
                starts.push((i, Block::Crosscap));
            } else if n >= 4
                && generator_of(at(0)) != generator_of(at(1))
                && at(2) == -at(0)
                && at(3) == -at(1)
                && (0..4).all(|k| kind[(i + k) % n] == Block::Free)
            {
                for k in 0..4 {
                    kind[(i + k) % n] = Block::Handle;
                }
                starts.push((i, Block::Handle));
            }
        }
        (kind, starts)
    }

    fn run(&mut self) -> Result<(), Pi1Error> {
        let limit = 8 * self.rel.len() + 16;
        for _ in 0..limit {
            if self.rel.is_empty() {
                return Ok(());
            }
            if self.crosscap()? || self.handle()? {
                continue;
            }
            if self.convert()? {
                continue;
            }
            return self.normalize();
        }
        Err(Pi1Error::Internal("normalization did not terminate".into()))
    }

    /// A same-sign pair that is not adjacent.
    fn crosscap(&mut self) -> Result<bool, Pi1Error> {
        let n = self.rel.len();
        let found = self.positions().into_iter().find(|&(_, [p, q])| {
            self.rel[p] == self.rel[q] && q - p != 1 && !(p == 0 && q == n - 1)
        });
        match found {
            Some((g, _)) => self.crosscap_on(g).map(|_| true),
            None => Ok(false),
        }
    }

    fn crosscap_on(&mut self, g: usize) -> Result<(), Pi1Error> {
        let [p, q] = self.positions()[&g];
        let eps = self.rel[p] > 0;
        // rel from p: X B X A with X = x^eps.
        let rot = self.rotated(p);
        let b = Word::from_letters(rot[1..q - p].to_vec());
        let x = Word::from_letters(vec![letter(g, eps)]);
        let new_x = &x * &b.inverse();
        let image = if eps { new_x } else { new_x.inverse() };
        self.substitute(&[(g, image)])?;
        self.moves.push(Move::Crosscap);
        Ok(())
    }

    /// An interleaved opposite-sign pair outside existing blocks.
    fn handle(&mut self) -> Result<bool, Pi1Error> {
        let (kind, _) = self.blocks();
        let pos = self.positions();
        let free: Vec<(usize, [usize; 2])> = pos
            .iter()
            .filter(|(_, [p, _])| kind[*p] == Block::Free)
            .map(|(&g, &p)| (g, p))
            .collect();
        for &(x, [p, q]) in &free {
            for &(y, [r, t]) in &free {
                if x == y {
                    continue;
                }
                let inside = |i: usize| p < i && i < q;
                if inside(r) == inside(t) {
                    continue;
                }
                // Rotate to start at x: X A Y B X^-1 C Y^-1 D.
                let rot = self.rotated(p);
                let n = rot.len();
                let shift = |i: usize| (i + n - p) % n;
                let (y1, y2) = if inside(r) { (shift(r), shift(t)) } else { (shift(t), shift(r)) };
                let q1 = q - p;
                let seg = |lo: usize, hi: usize| Word::from_letters(rot[lo..hi].to_vec());
                let a = seg(1, y1);
                let b = seg(y1 + 1, q1);
                let c = seg(q1 + 1, y2);
                let eps = rot[0] > 0;
                let delta = rot[y1] > 0;
                let xs = Word::from_letters(vec![letter(x, eps)]);
                let ys = Word::from_letters(vec![letter(y, delta)]);
                let cba = &(&c * &b) * &a;
                let new_x = &(&cba * &xs) * &a.inverse();
                let new_y = &(&ys * &a.inverse()) * &b.inverse();
                let ix = if eps { new_x } else { new_x.inverse() };
                let iy = if delta { new_y } else { new_y.inverse() };
                self.substitute(&[(x, ix), (y, iy)])?;
                self.moves.push(Move::Handle);
                return Ok(true);
            }
        }
        if !free.is_empty() {
            return Err(Pi1Error::Internal("unpaired letters without interleaving".into()));
        }
        Ok(false)
    }

    /// An adjacent crosscap and handle become a triple of crosscaps.
    fn convert(&mut self) -> Result<bool, Pi1Error> {
        let (_, starts) = self.blocks();
        let has_cross = starts.iter().any(|&(_, b)| b == Block::Crosscap);
        let has_handle = starts.iter().any(|&(_, b)| b == Block::Handle);
        if !(has_cross && has_handle) {
            return Ok(false);
        }
        let n = self.rel.len();
        let idx = starts.iter().position(|&(_, b)| b == Block::Crosscap).unwrap();
        let m = starts.len();
        // Walk forward from a crosscap to the first crosscap/handle boundary.
        for k in 0..m {
            let (i, bi) = starts[(idx + k) % m];
            let (j, bj) = starts[(idx + k + 1) % m];
            if bi == bj {
                continue;
            }
            if bi == Block::Crosscap {
                // Y Y P Q P^-1 Q^-1: Y -> Y P^-1.
                let yl = self.rel[i];
                let pl = self.rel[j];
                let new_y = Word::from_letters(vec![yl, -pl]);
                let g = generator_of(yl);
                let image = if yl > 0 { new_y } else { new_y.inverse() };
                self.substitute(&[(g, image)])?;
                self.crosscap_on(generator_of(pl))?;
            } else {
                // P Q P^-1 Q^-1 Y Y: Y -> Q Y.
                let ql = self.rel[(i + 1) % n];
                let yl = self.rel[j];
                let new_y = Word::from_letters(vec![ql, yl]);
                let g = generator_of(yl);
                let image = if yl > 0 { new_y } else { new_y.inverse() };
                self.substitute(&[(g, image)])?;
                self.crosscap_on(generator_of(ql))?;
            }
            self.moves.push(Move::HandleToCrosscaps);
            return Ok(true);
        }
        Err(Pi1Error::Internal("no crosscap next to a handle".into()))
    }

    /// Positive letters, numbered in block order, relator starting at a block.
    fn normalize(&mut self) -> Result<(), Pi1Error> {
        let (kind, starts) = self.blocks();
        if kind.contains(&Block::Free) {
            return Err(Pi1Error::Internal("letters left outside blocks".into()));
        }
        let first = starts.iter().map(|&(i, _)| i).min().unwrap();
        self.rel = self.rotated(first);
        let (_, starts) = self.blocks();
        let mut subst: Vec<Word> = vec![Word::identity(); self.images.len()];
        let mut next = 0;
        for &(i, b) in &starts {
            let width = if b == Block::Crosscap { 1 } else { 2 };
            for k in 0..width {
                let l = self.rel[i + k];
                subst[generator_of(l)] = Word::from_letters(vec![letter(next, l > 0)]);
                next += 1;
            }
        }
        self.substitute_all(&subst);
        let (_, starts) = self.blocks();
        let first = starts.iter().map(|&(i, _)| i).min().unwrap_or(0);
        self.rel = self.rotated(first);
        self.moves.push(Move::Normalize);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Vertices of the polygon after gluing; every real schema has one.
    fn vertex_count(rel: &[i32]) -> usize {
        let n = rel.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let ends = |i: usize| if rel[i] > 0 { (i, (i + 1) % n) } else { ((i + 1) % n, i) };
        for g in 0..n {
            let occ: Vec<usize> = (0..n).filter(|&i| generator_of(rel[i]) == g).collect();
            if let [i, j] = occ[..] {
                let (a, b) = ends(i);
                let (c, d) = ends(j);
                let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
                parent[ra] = rc;
                let (rb, rd) = (find(&mut parent, b), find(&mut parent, d));
                parent[rb] = rd;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    fn normal_form(rel: Vec<i32>) -> Normalizer {
        assert_eq!(vertex_count(&rel), 1, "{rel:?} is not a one-vertex schema");
        let rank = rel.iter().map(|&l| generator_of(l)).max().unwrap() + 1;
        let mut n = Normalizer {
            rel: rel.clone(),
            images: (0..rank).map(Word::generator).collect(),
            moves: Vec::new(),
        };
        n.run().unwrap();
        // The original relator maps to a conjugate of the new one.
        let mapped = Word::from_letters(rel).substitute(&n.images).cyclically_reduced();
        let target = Word::from_letters(n.rel.clone());
        let len = mapped.len();
        assert_eq!(len, target.len());
        let rotations_match = (0..len).any(|k| {
            let mut rot = mapped.letters()[k..].to_vec();
            rot.extend_from_slice(&mapped.letters()[..k]);
            rot == target.letters()
        });
        assert!(rotations_match, "{mapped} vs {target}");
        n
    }

    #[test]
    fn torus_word() {
        let n = normal_form(vec![1, 2, -1, -2]);
        assert_eq!(n.rel, vec![1, 2, -1, -2]);
        let n = normal_form(vec![2, -1, -2, 1]);
        assert_eq!(n.rel, vec![1, 2, -1, -2]);
    }

    #[test]
    fn crosscaps() {
        assert_eq!(normal_form(vec![1, 2, -1, 2]).rel, vec![1, 1, 2, 2]);
        assert_eq!(normal_form(vec![-1, 2, -1, -2]).rel, vec![1, 1, 2, 2]);
        assert_eq!(normal_form(vec![1, 2, 3, -2, 1, 3]).rel, vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(normal_form(vec![1, 2, 1, 3, 2, 3]).rel, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn mixed_becomes_crosscaps() {
        assert_eq!(normal_form(vec![1, 1, 2, 3, -2, -3]).rel, vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(normal_form(vec![2, 3, -2, -3, 1, 1]).rel, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn genus_two_scrambled() {
        let n = normal_form(vec![1, 2, 3, 4, -1, -2, -3, -4]);
        assert_eq!(n.rel, vec![1, 2, -1, -2, 3, 4, -3, -4]);
    }

    #[test]
    fn klein_change_of_basis() {
        // x x y y under x = b, y = b^-1 a is b a b^-1 a, and back.
        let basis = [Word::from_letters(vec![2]), Word::from_letters(vec![-2, 1])];
        let r = Word::from_letters(vec![1, 1, 2, 2]).substitute(&basis);
        assert_eq!(r.letters(), &[2, 1, -2, 1]);
        let back = [Word::from_letters(vec![1, 2]), Word::from_letters(vec![1])];
        let r2 = r.substitute(&back).cyclically_reduced();
        assert_eq!(r2.letters(), &[1, 1, 2, 2]);
    }
}
