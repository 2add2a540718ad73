//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use emb2::geometry::{EdgePath, Subcomplex};
use emb2::io::{InputDocument, SubcomplexDocument};
use emb2::pi1::{KleinElement, Word};
use emb2::surface::{barycentric_subdivision, SimplicialSurface};
use std::collections::BTreeSet;

/// Abelian invariants `(free rank, torsion)` of `<n | relators>` by a plain
/// Smith normal form over `i128`.
pub fn smith_invariants(n: usize, relators: &[Word]) -> (usize, Vec<i128>) {
    let mut m: Vec<Vec<i128>> = relators
        .iter()
        .map(|r| {
            let mut row = vec![0i128; n];
            for &l in r.letters() {
                row[l.unsigned_abs() as usize - 1] += l.signum() as i128;
            }
            row
        })
        .collect();
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(n) {
        // Pivot: smallest nonzero entry of the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..n {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            for j in t..n {
                m[i][j] -= q * m[t][j];
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..n {
            let q = m[t][j] / m[t][t];
            for row in m.iter_mut().skip(t) {
                row[j] -= q * row[t];
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any entry the pivot does not divide into row t.
        let p = m[t][t];
        let bad = (t + 1..rows).find(|&i| (t + 1..n).any(|j| m[i][j] % p != 0));
        if let Some(i) = bad {
            for j in t..n {
                m[t][j] += m[i][j];
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    let rank = diag.len();
    let torsion = diag.into_iter().filter(|&d| d > 1).collect();
    (n - rank, torsion)
}

/// Is every element of `gens` a power of a single `h` with `|m|, |n| <= 25`,
/// using exponents `|k| <= 50`? Powers are built by repeated multiplication.
pub fn klein_cyclic_by_enumeration(gens: &[KleinElement]) -> bool {
    let mut powers = Vec::with_capacity(101);
    for hm in -25..=25 {
        for hn in -25..=25 {
            let h = KleinElement::new(hm, hn);
            let hinv = h.inverse();
            powers.clear();
            powers.push(KleinElement::IDENTITY);
            let (mut up, mut down) = (KleinElement::IDENTITY, KleinElement::IDENTITY);
            for _ in 0..50 {
                up = up * h;
                down = down * hinv;
                powers.push(up);
                powers.push(down);
            }
            if gens.iter().all(|g| powers.contains(g)) {
                return true;
            }
        }
    }
    false
}

/// Permutations of three points, composed left to right.
pub type Perm = [u8; 3];

pub const S3: [Perm; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];

fn compose(p: Perm, q: Perm) -> Perm {
    [q[p[0] as usize], q[p[1] as usize], q[p[2] as usize]]
}

fn invert(p: Perm) -> Perm {
    let mut out = [0; 3];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u8;
    }
    out
}

pub fn evaluate(w: &Word, images: &[Perm]) -> Perm {
    w.letters().iter().fold([0, 1, 2], |acc, &l| {
        let p = images[l.unsigned_abs() as usize - 1];
        compose(acc, if l > 0 { p } else { invert(p) })
    })
}

/// Homomorphisms `<n | relator>` -> S3.
pub fn s3_homomorphisms(n: usize, relator: &Word) -> Vec<Vec<Perm>> {
    let mut out = Vec::new();
    let total = 6usize.pow(n as u32);
    for code in 0..total {
        let images: Vec<Perm> = (0..n).map(|i| S3[(code / 6usize.pow(i as u32)) % 6]).collect();
        if evaluate(relator, &images) == [0, 1, 2] {
            out.push(images);
        }
    }
    out
}

/// Number of pieces left after deleting the circle's edges from the dual graph.
pub fn cut_and_count(s: &SimplicialSurface, circle: &EdgePath) -> usize {
    let cut: BTreeSet<usize> = circle
        .vertices()
        .windows(2)
        .map(|p| s.edge_between(p[0], p[1]).unwrap())
        .collect();
    let mut seen = vec![false; s.triangle_count()];
    let mut pieces = 0;
    for start in 0..s.triangle_count() {
        if seen[start] {
            continue;
        }
        pieces += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for e in s.triangle_edges(t) {
                if cut.contains(&e) {
                    continue;
                }
                for &u in s.edge_triangles(e) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
    }
    pieces
}

/// Random vertex permutation of a surface.
pub fn permutation(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// The pair `(S, X)` after one barycentric subdivision.
pub fn subdivided(doc: &InputDocument) -> InputDocument {
    let (s, x) = doc.build().unwrap();
    let sub = barycentric_subdivision(&s);
    let (vertices, edges, triangles) = sub.carry_simplices(
        &s,
        x.vertices().iter().copied(),
        x.edges().iter().copied(),
        x.triangles().iter().copied(),
    );
    let fine = &sub.surface;
    InputDocument::new(
        "subdivided",
        fine.vertex_count(),
        fine.triangles().to_vec(),
        SubcomplexDocument { vertices, edges, triangles },
    )
}

/// The pair `(S, X)` with vertex `v` renamed `perm[v]`.
pub fn relabeled(doc: &InputDocument, perm: &[usize]) -> InputDocument {
    let (s, x): (SimplicialSurface, Subcomplex) = doc.build().unwrap();
    let map2 = |e: [usize; 2]| e.map(|v| perm[v]);
    let map3 = |t: [usize; 3]| t.map(|v| perm[v]);
    InputDocument::new(
        "relabeled",
        s.vertex_count(),
        s.triangles().iter().map(|&t| map3(t)).collect(),
        SubcomplexDocument {
            vertices: x.vertices().iter().map(|&v| perm[v]).collect(),
            edges: x.edge_pairs(&s).into_iter().map(map2).collect(),
            triangles: x.triangle_triples(&s).into_iter().map(map3).collect(),
        },
    )
}
