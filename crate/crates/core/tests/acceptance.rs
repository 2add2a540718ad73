//! Acceptance gate: one pass/fail line per criterion.

mod common;

use common::{cut_and_count, klein_cyclic_by_enumeration, permutation, relabeled, smith_invariants, subdivided};
use emb2::classifier::{
    classify_embedding_space, descriptor_fundamental_group, CaseLabel, GroupDescription, HomotopyType,
};
use emb2::geometry::{
    absorb_disk_components, cut_along, embed_subcomplex, is_separating, is_separating_by_homology,
    regular_neighborhood,
};
use emb2::io::catalog::{closed_surfaces, klein8, mobius_band, nonorientable_genus3, rp2_6};
use emb2::io::{generate_example, InputDocument, CATALOG};
use emb2::pi1::{classify_klein, verify_class, KleinElement, SubgroupClass, SurfaceGroup, Word};
use emb2::surface::{classify_surface, orientation_double_cover, NamedSurface, SimplicialSurface, SurfaceType};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn verdict(doc: &InputDocument) -> (String, String) {
    let (s, x) = doc.build().expect("document builds");
    let c = classify_embedding_space(&s, &x).expect("classification succeeds");
    (c.descriptor.to_string(), c.case.short())
}

const TABLE: [(&str, &str, &str); 14] = [
    ("torus_meridian", "Torus", "Thm 1.2 (2)"),
    ("torus_wedge", "Torus", "Thm 1.1 (2)"),
    ("genus2_wedge", "Point", "Thm 1.1 (1)"),
    ("genus2_circle", "Circle", "Thm 5.1 (1)"),
    ("rp2_core_circle", "SO3ModZ2", "Thm 1.2 (4)(i)"),
    ("rp2_tree", "UnitTangentBundleOfCover(Sphere)", "Thm 1.3 (2)"),
    ("klein_meridian", "Torus", "Thm 5.1 (3)(i)"),
    ("klein_op_longitude", "Circle", "Thm 5.1 (3)(ii)"),
    ("klein_or_longitude", "Circle", "Thm 5.1 (3)(iii)"),
    ("klein_meridian_wedge_trivial", "Torus", "Thm 1.2 (3)(i)"),
    ("annulus_core", "Circle", "Thm 1.2 (1)"),
    ("disk_arc", "UnitTangentBundle(interior of Disk)", "Thm 1.3 (1)"),
    ("sphere_arc", "UnitTangentBundle(Sphere)", "Thm 1.3 (1)"),
    ("mobius_core", "Circle", "Thm 1.2 (1)"),
];

fn classification_table() -> Outcome {
    let start = Instant::now();
    for (name, tag, case) in TABLE {
        let got = verdict(&generate_example(name).map_err(|e| e.to_string())?);
        ensure(got == (tag.to_string(), case.to_string()), || {
            format!("{name}: expected {tag} ({case}), got {} ({})", got.0, got.1)
        })?;
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!("14/14 verdicts exact in {t:.2?}"))
}

fn whole_surface(s: &SimplicialSurface) -> emb2::geometry::Subcomplex {
    let vs: Vec<usize> = (0..s.vertex_count()).collect();
    embed_subcomplex(s, &vs, s.edges(), s.triangles()).expect("whole surface embeds")
}

fn closed_case_lookup() -> Outcome {
    let expected: BTreeMap<&str, (HomotopyType, CaseLabel)> = [
        ("sphere", (HomotopyType::SO3, CaseLabel::Prop2_2_1_i)),
        ("projective_plane", (HomotopyType::SO3, CaseLabel::Prop2_2_1_i)),
        ("torus", (HomotopyType::Torus, CaseLabel::Prop2_2_1_ii)),
        ("klein_bottle", (HomotopyType::Circle, CaseLabel::Prop2_2_1_iii)),
        ("genus2", (HomotopyType::Point, CaseLabel::Prop2_2_1_iv)),
        ("genus3", (HomotopyType::Point, CaseLabel::Prop2_2_1_iv)),
        ("nonorientable_genus3", (HomotopyType::Point, CaseLabel::Prop2_2_1_iv)),
    ]
    .into();
    let surfaces = closed_surfaces();
    for (name, s, ty) in &surfaces {
        ensure(classify_surface(s) == *ty, || format!("{name} recognized as {}", classify_surface(s)))?;
        let c = classify_embedding_space(s, &whole_surface(s)).map_err(|e| e.to_string())?;
        ensure((c.descriptor, c.case) == expected[name], || {
            format!("{name}: got {} ({})", c.descriptor, c.case)
        })?;
    }
    Ok(format!("{} closed surfaces with X = M", surfaces.len()))
}

fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<i32> {
    if n == 0 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

fn exponents(w: &[i32], n: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    for &l in w {
        e[l.unsigned_abs() as usize - 1] += l.signum() as i64;
    }
    e
}

/// Is `e` an integer multiple of `r` (the only relator's exponent vector)?
fn in_relator_span(e: &[i64], r: &[i64]) -> bool {
    if r.iter().all(|&x| x == 0) {
        return e.iter().all(|&x| x == 0);
    }
    let (i, &ri) = r.iter().enumerate().find(|&(_, &x)| x != 0).unwrap();
    if e[i] % ri != 0 {
        return false;
    }
    let t = e[i] / ri;
    e.iter().zip(r).all(|(&a, &b)| a == t * b)
}

fn word_problem_suite() -> Outcome {
    let start = Instant::now();
    let groups = [
        SurfaceGroup::trivial(),
        SurfaceGroup::order_two(),
        SurfaceGroup::free(2),
        SurfaceGroup::zxz(),
        SurfaceGroup::klein(),
        SurfaceGroup::orientable(2),
        SurfaceGroup::nonorientable(3),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checks = 0usize;
    for g in &groups {
        let n = g.generator_names.len();
        let triv = |w: Vec<i32>| g.is_trivial(&Word::from_letters(w)).map_err(|e| e.to_string());
        let rel = g.relator.as_ref().map(|r| r.letters().to_vec());
        let rvec = rel.as_ref().map_or(vec![0; n], |r| exponents(r, n));
        for _ in 0..1000 {
            let w = random_word(&mut rng, n, 40);
            let mut ww = w.clone();
            ww.extend(inverse(&w));
            ensure(triv(ww)?, || format!("{}: w w^-1 nontrivial for {w:?}", g.name()))?;

            if let Some(r) = &rel {
                let mut prod = Vec::new();
                for _ in 0..rng.gen_range(1..=3) {
                    let u = random_word(&mut rng, n, 10);
                    prod.extend(&u);
                    if rng.gen_bool(0.5) {
                        prod.extend(r);
                    } else {
                        prod.extend(inverse(r));
                    }
                    prod.extend(inverse(&u));
                }
                ensure(triv(prod.clone())?, || format!("{}: relator product {prod:?} nontrivial", g.name()))?;
            }

            let verdict = triv(w.clone())?;
            if !in_relator_span(&exponents(&w, n), &rvec) {
                ensure(!verdict, || format!("{}: {w:?} has nonzero abelianization but is trivial", g.name()))?;
            }
            if n > 0 {
                let u = random_word(&mut rng, n, 10);
                let mut conj = u.clone();
                conj.extend(&w);
                conj.extend(inverse(&u));
                ensure(triv(conj)? == verdict, || format!("{}: conjugation changed {w:?}", g.name()))?;
                let pos = rng.gen_range(0..=w.len());
                let x = rng.gen_range(1..=n as i32);
                let mut ins = w.clone();
                ins.splice(pos..pos, [x, -x]);
                ensure(triv(ins)? == verdict, || format!("{}: insertion changed {w:?}", g.name()))?;
            }
            checks += 1;
        }
    }
    let t = within(Duration::from_secs(10), start)?;
    Ok(format!("{checks} words over {} groups covering all strategies in {t:.2?}", groups.len()))
}

fn klein_subgroup_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let group = SurfaceGroup::klein();
    let mut counts = [0usize; 3];
    for case in 0..200 {
        let k = rng.gen_range(1..=3);
        let gens: Vec<KleinElement> = if case % 2 == 0 {
            let h = KleinElement::new(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
            (0..k).map(|_| h.pow(rng.gen_range(-2..=2))).collect()
        } else {
            (0..k)
                .map(|_| KleinElement::new(rng.gen_range(-10..=10), rng.gen_range(-10..=10)))
                .collect()
        };
        let class = classify_klein(&gens).map_err(|e| e.to_string())?;
        let trivial = gens.iter().all(|g| *g == KleinElement::IDENTITY);
        let oracle = if trivial {
            0
        } else if klein_cyclic_by_enumeration(&gens) {
            1
        } else {
            2
        };
        let got = match class {
            SubgroupClass::Trivial => 0,
            SubgroupClass::NontrivialCyclic(_) => 1,
            SubgroupClass::NonCyclic(_) => 2,
        };
        ensure(got == oracle, || format!("{gens:?}: classify_subgroup says {class}, oracle {oracle}"))?;
        let words: Vec<Word> = gens.iter().map(|g| g.to_word()).collect();
        ensure(verify_class(&group, &words, &class).map_err(|e| e.to_string())?, || {
            format!("{gens:?}: witness does not verify")
        })?;
        counts[got] += 1;
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "200 sets agree (trivial {}, cyclic {}, noncyclic {}) in {t:.2?}",
        counts[0], counts[1], counts[2]
    ))
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut runs = 0;
    for name in CATALOG {
        let doc = generate_example(name).unwrap();
        let base = verdict(&doc);
        let sub = verdict(&subdivided(&doc));
        ensure(sub == base, || format!("{name}: subdivision gives {sub:?}, expected {base:?}"))?;
        for _ in 0..20 {
            let perm = permutation(doc.vertices, &mut rng);
            let got = verdict(&relabeled(&doc, &perm));
            ensure(got == base, || format!("{name}: relabeling {perm:?} gives {got:?}"))?;
            runs += 1;
        }
    }
    Ok(format!("14 subdivisions and {runs} relabelings agree"))
}

fn topological_cross_checks() -> Outcome {
    let mut checked = 0;
    for (name, s) in [
        ("rp2_6", rp2_6()),
        ("klein8", klein8()),
        ("mobius", mobius_band()),
        ("nonorientable_genus3", nonorientable_genus3()),
    ] {
        let cover = orientation_double_cover(&s).map_err(|e| e.to_string())?;
        ensure(cover.total.euler_characteristic() == 2 * s.euler_characteristic(), || {
            format!("{name}: cover chi {}", cover.total.euler_characteristic())
        })?;
        ensure(classify_surface(&cover.total).orientable, || format!("{name}: cover not orientable"))?;
        checked += 1;
    }
    let circles = [
        "torus_meridian",
        "genus2_circle",
        "rp2_core_circle",
        "klein_meridian",
        "klein_op_longitude",
        "klein_or_longitude",
    ];
    for name in circles {
        let (s, x) = generate_example(name).unwrap().build().unwrap();
        let c = x.circle_path(&s).ok_or(format!("{name}: not a circle"))?;
        let pieces = cut_along(&s, &c).map_err(|e| e.to_string())?;
        let chi: i64 = pieces.iter().map(|p| p.euler_characteristic()).sum();
        ensure(chi == s.euler_characteristic(), || format!("{name}: pieces have chi {chi}"))?;
        let sep = is_separating(&s, &c).map_err(|e| e.to_string())?;
        let hom = is_separating_by_homology(&s, &c).map_err(|e| e.to_string())?;
        let oracle = cut_and_count(&s, &c) == 2;
        ensure(sep == hom && sep == oracle && pieces.len() == 1 + usize::from(sep), || {
            format!("{name}: separating {sep}, homology {hom}, cut-and-count {oracle}, {} pieces", pieces.len())
        })?;
        if name == "klein_op_longitude" {
            let mobius = pieces
                .iter()
                .filter(|p| classify_surface(p).is(NamedSurface::MobiusBand))
                .count();
            ensure(pieces.len() == 2 && mobius == 2, || format!("{name}: {mobius} Mobius bands"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} surfaces and circles checked"))
}

fn disk_neighborhoods() -> Outcome {
    let mut routed = 0;
    for name in CATALOG {
        let (s, x) = generate_example(name).unwrap().build().unwrap();
        let c = classify_embedding_space(&s, &x).map_err(|e| e.to_string())?;
        if !matches!(c.case, CaseLabel::Thm1_3_1 | CaseLabel::Thm1_3_2) {
            continue;
        }
        let decomp = regular_neighborhood(&s, &x).map_err(|e| e.to_string())?;
        let disk = absorb_disk_components(&decomp).ok_or(format!("{name}: no disk neighborhood"))?;
        // Recount the disk: connected manifold, chi 1, one boundary circle.
        let tris: Vec<[usize; 3]> = disk.triangles.iter().map(|&t| decomp.fine.triangle(t)).collect();
        let mut ids = BTreeMap::new();
        for v in tris.iter().flatten() {
            let next = ids.len();
            ids.entry(*v).or_insert(next);
        }
        let local: Vec<[usize; 3]> = tris.iter().map(|t| t.map(|v| ids[&v])).collect();
        let d = SimplicialSurface::build(ids.len(), &local).map_err(|e| format!("{name}: {e}"))?;
        ensure(d.euler_characteristic() == 1 && classify_surface(&d).boundary_components == 1, || {
            format!("{name}: absorbed region is not a disk")
        })?;
        ensure(decomp.carried.vertices().iter().all(|v| ids.contains_key(v)), || {
            format!("{name}: disk misses X")
        })?;
        routed += 1;
    }
    ensure(routed == 3, || format!("{routed} entries routed to the null-homotopic case"))?;
    Ok(format!("{routed} null-homotopic entries have disk neighborhoods"))
}

fn fundamental_groups() -> Outcome {
    let so3 = descriptor_fundamental_group(&HomotopyType::SO3);
    ensure(so3 == GroupDescription::Cyclic { order: 2 }, || format!("SO3: {so3}"))?;
    let q = descriptor_fundamental_group(&HomotopyType::SO3ModZ2);
    ensure(q == GroupDescription::Cyclic { order: 4 }, || format!("SO3ModZ2: {q}"))?;
    let sphere = SurfaceType::new(true, 0, 0);
    let utb = descriptor_fundamental_group(&HomotopyType::UnitTangentBundle(sphere));
    let (gens, rels) = utb.presentation();
    let snf = smith_invariants(gens.len(), &rels);
    ensure(snf == (0, vec![2]), || format!("ST(S2): Smith form {snf:?}"))?;
    ensure(utb.abelianization().to_string() == "Z/2", || format!("ST(S2): {}", utb.abelianization()))?;
    Ok("SO3 -> Z/2, SO3ModZ2 -> Z/4, ST(S2) abelianizes to Z/2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("classification table", classification_table),
        ("closed-case lookup", closed_case_lookup),
        ("word-problem properties", word_problem_suite),
        ("Klein subgroup oracle", klein_subgroup_oracle),
        ("subdivision and relabeling invariance", invariance),
        ("topological cross-checks", topological_cross_checks),
        ("trivial-image disk neighborhood", disk_neighborhoods),
        ("fundamental group reporting", fundamental_groups),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {} [PASS] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [FAIL] {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
