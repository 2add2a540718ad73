mod common;

use common::cut_and_count;
use emb2::geometry::{
    is_orientation_preserving, is_separating, is_separating_by_homology, regular_neighborhood, spine_with_loops,
    EdgePath,
};
use emb2::io::catalog::{klein8, klein_vertex, torus7};
use emb2::io::generate_example;
use emb2::surface::{classify_surface, NamedSurface};

fn cycle(mut v: Vec<usize>) -> EdgePath {
    v.push(v[0]);
    EdgePath(v)
}

#[test]
fn klein_curves_against_cut_and_count() {
    let s = klein8();
    for i in 0..8 {
        let c = cycle((0..4).map(|j| klein_vertex(i, j)).collect());
        assert!(is_orientation_preserving(&s, &c).unwrap());
        assert_eq!(cut_and_count(&s, &c), 1);
        assert!(!is_separating(&s, &c).unwrap());
    }
    for j in [0, 2] {
        let c = cycle((0..8).map(|i| klein_vertex(i, j)).collect());
        assert!(!is_orientation_preserving(&s, &c).unwrap());
        assert_eq!(cut_and_count(&s, &c), 1);
        assert!(!is_separating_by_homology(&s, &c).unwrap());
    }
    let mut both: Vec<usize> = (0..8).map(|i| klein_vertex(i, 1)).collect();
    both.extend((0..8).map(|i| klein_vertex(i, 3)));
    let c = cycle(both);
    assert_eq!(cut_and_count(&s, &c), 2);
    assert!(is_separating(&s, &c).unwrap());
    assert!(is_separating_by_homology(&s, &c).unwrap());
}

#[test]
fn torus_triangles_all_agree() {
    // Every 3-cycle of K7 that is not a face is a simple closed curve in torus7.
    let s = torus7();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                if s.triangle_containing(a, b, c).is_some() {
                    continue;
                }
                let p = cycle(vec![a, b, c]);
                let oracle = cut_and_count(&s, &p) == 2;
                assert_eq!(is_separating(&s, &p).unwrap(), oracle);
                assert_eq!(is_separating_by_homology(&s, &p).unwrap(), oracle);
                assert!(is_orientation_preserving(&s, &p).unwrap());
            }
        }
    }
}

#[test]
fn neighborhood_type_matches_orientation_character() {
    for name in ["torus_meridian", "klein_meridian", "klein_or_longitude", "rp2_core_circle", "mobius_core"] {
        let (s, x) = generate_example(name).unwrap().build().unwrap();
        let c = x.circle_path(&s).unwrap();
        let n = regular_neighborhood(&s, &x).unwrap();
        let expected = if is_orientation_preserving(&s, &c).unwrap() {
            NamedSurface::Annulus
        } else {
            NamedSurface::MobiusBand
        };
        assert!(n.neighborhood_type.is(expected), "{name}: {}", n.neighborhood_type);
    }
}

#[test]
fn spine_rank_matches_neighborhood() {
    for name in ["torus_wedge", "genus2_wedge", "klein_meridian_wedge_trivial", "rp2_tree", "disk_arc"] {
        let (s, x) = generate_example(name).unwrap().build().unwrap();
        let n = regular_neighborhood(&s, &x).unwrap();
        let spine = spine_with_loops(&n).unwrap();
        assert_eq!(spine.loops.len() as i64, 1 - n.neighborhood_type.euler_characteristic, "{name}");
        assert_eq!(spine.loops.len() as i64, 1 - spine.euler_characteristic(), "{name}");
        assert_eq!(classify_surface(&n.fine), classify_surface(&s));
        let covered: usize = n.neighborhood.triangles().len() + n.complement.iter().map(|c| c.triangles.len()).sum::<usize>();
        assert_eq!(covered, n.fine.triangle_count(), "{name}");
    }
}
