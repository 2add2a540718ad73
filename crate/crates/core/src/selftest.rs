//! Catalog verdict table and a seeded word-problem fuzz.

use crate::batch::{classify_all, BatchError};
use crate::classifier::{CaseLabel, HomotopyType};
use crate::io::{expected_verdict, generate_example, CATALOG};
use crate::pi1::{SurfaceGroup, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Debug)]
pub struct VerdictRow {
    pub name: &'static str,
    pub expected: (HomotopyType, CaseLabel),
    /// Verdict, or the error text.
    pub got: Result<(HomotopyType, CaseLabel), String>,
    pub replayed: bool,
}

impl VerdictRow {
    pub fn passed(&self) -> bool {
        self.replayed && self.got.as_ref().ok() == Some(&self.expected)
    }
}

pub fn verdict_table() -> Vec<VerdictRow> {
    let docs: Vec<_> = CATALOG
        .iter()
        .map(|n| generate_example(n).expect("catalog name"))
        .collect();
    classify_all(&docs)
        .into_iter()
        .zip(CATALOG)
        .map(|(r, name)| {
            let expected = expected_verdict(name).expect("pinned verdict");
            let replayed = r.as_ref().is_ok_and(|c| c.trace.replay().is_ok());
            VerdictRow {
                name,
                expected,
                got: r.map(|c| (c.descriptor, c.case)).map_err(|e: BatchError| e.to_string()),
                replayed,
            }
        })
        .collect()
}

/// Groups covering every word-problem strategy.
pub fn fuzz_groups() -> Vec<SurfaceGroup> {
    vec![
        SurfaceGroup::trivial(),
        SurfaceGroup::order_two(),
        SurfaceGroup::free(2),
        SurfaceGroup::zxz(),
        SurfaceGroup::klein(),
        SurfaceGroup::orientable(2),
        SurfaceGroup::nonorientable(3),
    ]
}

pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> Word {
    if generators == 0 {
        return Word::identity();
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=generators as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    Word::from_letters(letters)
}

#[derive(Clone, Debug, Default)]
pub struct FuzzSummary {
    pub checks: usize,
    pub failures: Vec<String>,
}

/// Identities the word problem must respect: `w w^-1 = 1`, conjugated
/// relators are trivial, and triviality is invariant under conjugation.
pub fn word_fuzz(seed: u64, words_per_group: usize) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = FuzzSummary::default();
    for group in fuzz_groups() {
        let n = group.generator_names.len();
        let mut check = |ok: Result<bool, crate::pi1::Pi1Error>, what: &str, w: &Word| {
            summary.checks += 1;
            if ok != Ok(true) {
                summary.failures.push(format!("{}: {what} failed on [{w}]", group.name()));
            }
        };
        for _ in 0..words_per_group {
            let w = random_word(&mut rng, n, 40);
            let u = random_word(&mut rng, n, 10);
            check(group.is_trivial(&(&w * &w.inverse())), "w w^-1", &w);
            if let Some(r) = &group.relator {
                let conj = &(&u * r) * &u.inverse();
                check(group.is_trivial(&conj), "conjugated relator", &u);
            }
            let conj = &(&u * &w) * &u.inverse();
            let same = group.is_trivial(&w).and_then(|a| group.is_trivial(&conj).map(|b| a == b));
            check(same, "conjugation invariance", &w);
        }
    }
    summary
}

/// Seed from `EMB2_SEED`, or the default.
pub fn seed_from_env() -> u64 {
    std::env::var("EMB2_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}
