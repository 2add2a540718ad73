mod common;

use common::{evaluate, s3_homomorphisms, smith_invariants};
use emb2::io::catalog::{genus2, klein8, nonorientable_genus3, rp2_6, tetrahedron, torus7};
use emb2::io::generate_example;
use emb2::pi1::{abelian_invariants, presentation, Word};
use emb2::surface::SimplicialSurface;

fn raw_smith(s: &SimplicialSurface) -> (usize, Vec<i128>) {
    let p = presentation(s, 0).unwrap();
    smith_invariants(p.generator_count(), &p.relators)
}

#[test]
fn edge_path_homology_matches_smith_form() {
    assert_eq!(raw_smith(&tetrahedron()), (0, vec![]));
    assert_eq!(raw_smith(&torus7()), (2, vec![]));
    assert_eq!(raw_smith(&klein8()), (1, vec![2]));
    assert_eq!(raw_smith(&rp2_6()), (0, vec![2]));
    assert_eq!(raw_smith(&genus2()), (4, vec![]));
    assert_eq!(raw_smith(&nonorientable_genus3()), (2, vec![2]));
}

#[test]
fn canonical_group_has_the_same_homology() {
    for s in [torus7(), klein8(), rp2_6(), genus2(), nonorientable_genus3()] {
        let p = presentation(&s, 0).unwrap();
        let g = p.group();
        let rels: Vec<Word> = g.relator.iter().cloned().collect();
        let (rank, torsion) = smith_invariants(g.generator_names.len(), &rels);
        let lib = abelian_invariants(g.generator_names.len(), &rels);
        assert_eq!(rank, lib.free_rank);
        assert_eq!(torsion, lib.torsion.iter().map(|&t| t as i128).collect::<Vec<_>>());
        assert_eq!((rank, torsion), raw_smith(&s));
    }
}

#[test]
fn raw_relators_map_to_trivial_words() {
    for s in [torus7(), klein8(), rp2_6(), genus2(), nonorientable_genus3()] {
        for base in [0, s.vertex_count() - 1] {
            let p = presentation(&s, base).unwrap();
            for r in &p.relators {
                assert!(p.is_trivial_word(r).unwrap(), "relator {r}");
            }
            // Images must also satisfy every finite quotient of the target.
            if let Some(rel) = &p.group().relator {
                let n = p.group().generator_names.len();
                if n <= 3 {
                    for phi in s3_homomorphisms(n, rel) {
                        for r in &p.relators {
                            assert_eq!(evaluate(&p.canonical(r), &phi), [0, 1, 2]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn genus2_wedge_commutator_survives_in_s3() {
    let (s, x) = generate_example("genus2_wedge").unwrap().build().unwrap();
    let a = emb2::classifier::analyze(&s, &x).unwrap();
    assert_eq!(a.generators.len(), 2);
    let g = a.presentation.as_ref().unwrap().group();
    let c = a.generators[0].commutator(&a.generators[1]);
    let homs = s3_homomorphisms(4, g.relator.as_ref().unwrap());
    assert!(!homs.is_empty());
    assert!(
        homs.iter().any(|phi| evaluate(&c, phi) != [0, 1, 2]),
        "no S3 quotient sees the commutator"
    );
    assert!(!g.is_trivial(&c).unwrap());
}

#[test]
fn torus_wedge_generators_are_independent() {
    let (s, x) = generate_example("torus_wedge").unwrap().build().unwrap();
    let a = emb2::classifier::analyze(&s, &x).unwrap();
    let e: Vec<Vec<i64>> = a.generators.iter().map(|w| w.exponent_sums(2)).collect();
    // The two circles cross once, so their classes form a basis of H1.
    let det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    assert_eq!(det.abs(), 1);
}
