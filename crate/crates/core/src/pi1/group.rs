//! Canonical one-relator surface groups and their word problems.

use super::klein::klein_normal_form;
use super::word::{cyclic_reduce, free_reduce, generator_of, letter};
use super::{Pi1Error, Word};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which decision procedure the word problem dispatches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    TrivialGroup,
    /// `<c | c c>`: exponent sum parity.
    OrderTwo,
    /// Free reduction.
    FreeGroup,
    /// Exponent vector.
    ZxZ,
    /// Normal form `a^m b^n`.
    KleinGroup,
    /// Dehn's algorithm against the symmetrized relator.
    HyperbolicClosed,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::TrivialGroup => "TrivialGroup",
            Strategy::OrderTwo => "OrderTwo",
            Strategy::FreeGroup => "FreeGroup",
            Strategy::ZxZ => "ZxZ",
            Strategy::KleinGroup => "KleinGroup",
            Strategy::HyperbolicClosed => "HyperbolicClosed",
        })
    }
}

/// A surface group in canonical generators, with at most one relator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceGroup {
    pub strategy: Strategy,
    pub generator_names: Vec<String>,
    pub relator: Option<Word>,
    #[serde(skip)]
    symmetrized: Vec<Vec<i32>>,
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

impl SurfaceGroup {
    fn make(strategy: Strategy, generator_names: Vec<String>, relator: Option<Word>) -> SurfaceGroup {
        let symmetrized = match (&relator, strategy) {
            (Some(r), Strategy::HyperbolicClosed) => symmetrize(r.letters()),
            _ => Vec::new(),
        };
        SurfaceGroup {
            strategy,
            generator_names,
            relator,
            symmetrized,
        }
    }

    pub fn trivial() -> SurfaceGroup {
        Self::make(Strategy::TrivialGroup, Vec::new(), None)
    }

    pub fn order_two() -> SurfaceGroup {
        Self::make(Strategy::OrderTwo, vec!["c".into()], Some(Word::from_letters(vec![1, 1])))
    }

    pub fn free(rank: usize) -> SurfaceGroup {
        if rank == 0 {
            return Self::trivial();
        }
        Self::make(Strategy::FreeGroup, names("x", rank), None)
    }

    pub fn zxz() -> SurfaceGroup {
        Self::make(
            Strategy::ZxZ,
            vec!["a".into(), "b".into()],
            Some(Word::from_letters(vec![1, 2, -1, -2])),
        )
    }

    /// `<a, b | b a b^-1 a>`.
    pub fn klein() -> SurfaceGroup {
        Self::make(
            Strategy::KleinGroup,
            vec!["a".into(), "b".into()],
            Some(Word::from_letters(vec![2, 1, -2, 1])),
        )
    }

    /// `<a1, b1, ... | [a1, b1] ... [ag, bg]>`.
    pub fn orientable(genus: usize) -> SurfaceGroup {
        match genus {
            0 => Self::trivial(),
            1 => Self::zxz(),
            g => {
                let names = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
                Self::make(Strategy::HyperbolicClosed, names, Some(orientable_relator(g)))
            }
        }
    }

    /// `<c1, ... | c1 c1 ... ck ck>`; genus 2 uses the Klein basis.
    pub fn nonorientable(genus: usize) -> SurfaceGroup {
        match genus {
            0 => panic!("nonorientable genus is at least one"),
            1 => Self::order_two(),
            2 => Self::klein(),
            k => Self::make(Strategy::HyperbolicClosed, names("c", k), Some(nonorientable_relator(k))),
        }
    }

    pub fn for_surface(ty: &SurfaceType) -> SurfaceGroup {
        if ty.is_closed() {
            if ty.orientable {
                Self::orientable(ty.genus as usize)
            } else {
                Self::nonorientable(ty.genus as usize)
            }
        } else {
            Self::free((1 - ty.euler_characteristic) as usize)
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    fn check(&self, w: &Word) -> Result<(), Pi1Error> {
        match w.letters().iter().find(|&&l| generator_of(l) >= self.generator_count()) {
            Some(&l) => Err(Pi1Error::UnknownGenerator(l)),
            None => Ok(()),
        }
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool, Pi1Error> {
        self.check(w)?;
        Ok(match self.strategy {
            Strategy::TrivialGroup => true,
            Strategy::OrderTwo => w.len() % 2 == 0,
            Strategy::FreeGroup => w.is_freely_trivial(),
            Strategy::ZxZ => w.exponent_sums(2).iter().all(|&x| x == 0),
            Strategy::KleinGroup => klein_normal_form(w)? == Default::default(),
            Strategy::HyperbolicClosed => self.dehn(w),
        })
    }

    pub fn commutes(&self, u: &Word, v: &Word) -> Result<bool, Pi1Error> {
        self.is_trivial(&u.commutator(v))
    }

    pub fn are_equal(&self, u: &Word, v: &Word) -> Result<bool, Pi1Error> {
        self.is_trivial(&(u * &v.inverse()))
    }

    /// Reduces `w` to a Dehn-reduced cyclic word; empty iff trivial.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let mut cur = cyclic_reduce(free_reduce(w.letters().iter().copied()));
        while let Some(next) = dehn_step(&cur, &self.symmetrized) {
            cur = next;
        }
        Word::from_letters(cur)
    }

    fn dehn(&self, w: &Word) -> bool {
        self.dehn_reduce(w).is_empty()
    }

    /// `x1 ... xr` and so on, for reports.
    pub fn presentation_string(&self) -> String {
        let gens = self.generator_names.join(", ");
        match &self.relator {
            Some(r) => format!("<{gens} | {}>", r.display_with(&self.generator_names)),
            None if gens.is_empty() => "<>".into(),
            None => format!("<{gens}>"),
        }
    }

    pub fn name(&self) -> String {
        match self.strategy {
            Strategy::TrivialGroup => "1".into(),
            Strategy::OrderTwo => "Z/2".into(),
            Strategy::FreeGroup if self.generator_count() == 1 => "Z".into(),
            Strategy::FreeGroup => format!("F{}", self.generator_count()),
            Strategy::ZxZ => "Z^2".into(),
            Strategy::KleinGroup => "Z x| Z".into(),
            Strategy::HyperbolicClosed => format!("surface group on {} generators", self.generator_count()),
        }
    }
}

pub(crate) fn orientable_relator(genus: usize) -> Word {
    let mut r = Vec::with_capacity(4 * genus);
    for i in 0..genus {
        let (a, b) = (letter(2 * i, true), letter(2 * i + 1, true));
        r.extend([a, b, -a, -b]);
    }
    Word::from_letters(r)
}

pub(crate) fn nonorientable_relator(genus: usize) -> Word {
    let mut r = Vec::with_capacity(2 * genus);
    for i in 0..genus {
        let c = letter(i, true);
        r.extend([c, c]);
    }
    Word::from_letters(r)
}

/// All cyclic permutations of `r` and of its inverse, deduplicated.
fn symmetrize(r: &[i32]) -> Vec<Vec<i32>> {
    let inv: Vec<i32> = r.iter().rev().map(|&l| -l).collect();
    let mut out: Vec<Vec<i32>> = Vec::new();
    for base in [r.to_vec(), inv] {
        for k in 0..base.len() {
            let mut rot = base[k..].to_vec();
            rot.extend_from_slice(&base[..k]);
            if !out.contains(&rot) {
                out.push(rot);
            }
        }
    }
    out
}

/// One Dehn replacement on the cyclic word `w`: a cyclic subword that is more
/// than half of a relator is replaced by the inverse of the rest of it.
fn dehn_step(w: &[i32], relators: &[Vec<i32>]) -> Option<Vec<i32>> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..n {
        for (ri, r) in relators.iter().enumerate() {
            let len = r.len();
            let max = len.min(n);
            let mut k = 0;
            while k < max && w[(i + k) % n] == r[k] {
                k += 1;
            }
            if 2 * k > len && best.is_none_or(|(_, _, bk)| k > bk) {
                best = Some((i, ri, k));
            }
        }
    }
    let (i, ri, k) = best?;
    let r = &relators[ri];
    let mut next: Vec<i32> = r[k..].iter().rev().map(|&l| -l).collect();
    next.extend((k..n).map(|j| w[(i + j) % n]));
    Some(cyclic_reduce(free_reduce(next)))
}
