//! Is the subgroup generated by finitely many elements trivial, cyclic, or neither?

use super::klein::{klein_normal_form, KleinElement};
use super::{Pi1Error, Strategy, SurfaceGroup, Word};
use crate::geometry::EdgePath;
use crate::surface::SimplicialSurface;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Certificate backing a verdict; indices refer to the generator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Two generators whose commutator is nontrivial.
    NonCommutingPair(usize, usize),
    /// Two generators with independent images in a rank-two abelian subgroup.
    IndependentPair(usize, usize),
    /// Every generator is a power of this element.
    CyclicGenerator(Word),
    /// A nontrivial generator commuting with all others, in a group whose
    /// centralizers are cyclic.
    AllCommuteWith(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgroupClass {
    Trivial,
    NontrivialCyclic(Witness),
    NonCyclic(Witness),
}

impl SubgroupClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self, SubgroupClass::Trivial)
    }

    pub fn is_cyclic(&self) -> bool {
        !matches!(self, SubgroupClass::NonCyclic(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SubgroupClass::Trivial => None,
            SubgroupClass::NontrivialCyclic(w) | SubgroupClass::NonCyclic(w) => Some(w),
        }
    }
}

impl fmt::Display for SubgroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgroupClass::Trivial => "trivial",
            SubgroupClass::NontrivialCyclic(_) => "nontrivial cyclic",
            SubgroupClass::NonCyclic(_) => "noncyclic",
        })
    }
}

/// Canonical words of closed paths in `s`.
pub fn induced_subgroup(
    s: &SimplicialSurface,
    presentation: &super::Presentation,
    loops: &[EdgePath],
) -> Result<Vec<Word>, Pi1Error> {
    loops
        .iter()
        .map(|p| presentation.canonical_loop_word(s, p))
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn klein_elements(gens: &[Word]) -> Result<Vec<KleinElement>, Pi1Error> {
    gens.iter().map(klein_normal_form).collect()
}

/// Generator of the subgroup of `Z^2` spanned by pairwise parallel vectors.
fn parallel_generator(vs: &[(i64, i64)]) -> (i64, i64) {
    let first = *vs.iter().find(|v| **v != (0, 0)).unwrap();
    let g = gcd(first.0, first.1);
    let prim = (first.0 / g, first.1 / g);
    let k = vs.iter().fold(0, |acc, &(x, y)| {
        let c = if prim.0 != 0 { x / prim.0 } else { y / prim.1 };
        gcd(acc, c)
    });
    (k * prim.0, k * prim.1)
}

fn independent_pair(vs: &[(i64, i64)]) -> Option<(usize, usize)> {
    (0..vs.len())
        .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
        .find(|&(i, j)| vs[i].0 * vs[j].1 - vs[i].1 * vs[j].0 != 0)
}

pub fn classify_subgroup(group: &SurfaceGroup, gens: &[Word]) -> Result<SubgroupClass, Pi1Error> {
    let mut nontrivial = Vec::new();
    for (i, w) in gens.iter().enumerate() {
        if !group.is_trivial(w)? {
            nontrivial.push(i);
        }
    }
    let Some(&first) = nontrivial.first() else {
        return Ok(SubgroupClass::Trivial);
    };
    match group.strategy {
        Strategy::TrivialGroup => Ok(SubgroupClass::Trivial),
        Strategy::OrderTwo => Ok(SubgroupClass::NontrivialCyclic(Witness::CyclicGenerator(
            Word::generator(0),
        ))),
        Strategy::FreeGroup | Strategy::HyperbolicClosed => {
            for (k, &i) in nontrivial.iter().enumerate() {
                for &j in &nontrivial[k + 1..] {
                    if !group.commutes(&gens[i], &gens[j])? {
                        return Ok(SubgroupClass::NonCyclic(Witness::NonCommutingPair(i, j)));
                    }
                }
            }
            Ok(SubgroupClass::NontrivialCyclic(Witness::AllCommuteWith(first)))
        }
        Strategy::ZxZ => {
            let vs: Vec<(i64, i64)> = gens
                .iter()
                .map(|w| {
                    let e = w.exponent_sums(2);
                    (e[0], e[1])
                })
                .collect();
            match independent_pair(&vs) {
                Some((i, j)) => Ok(SubgroupClass::NonCyclic(Witness::IndependentPair(i, j))),
                None => {
                    let (x, y) = parallel_generator(&vs);
                    let h = Word::generator(0).pow(x) * Word::generator(1).pow(y);
                    Ok(SubgroupClass::NontrivialCyclic(Witness::CyclicGenerator(h)))
                }
            }
        }
        Strategy::KleinGroup => classify_klein(&klein_elements(gens)?),
    }
}

/// Subgroups of the Klein bottle group from normal forms.
pub fn classify_klein(elems: &[KleinElement]) -> Result<SubgroupClass, Pi1Error> {
    if elems.iter().all(|e| *e == KleinElement::IDENTITY) {
        return Ok(SubgroupClass::Trivial);
    }
    let odd: Vec<usize> = (0..elems.len()).filter(|&i| elems[i].n.rem_euclid(2) == 1).collect();
    if odd.is_empty() {
        // Inside the abelian subgroup <a, b^2>.
        let vs: Vec<(i64, i64)> = elems.iter().map(|e| (e.m, e.n)).collect();
        return Ok(match independent_pair(&vs) {
            Some((i, j)) => SubgroupClass::NonCyclic(Witness::IndependentPair(i, j)),
            None => {
                let (m, n) = parallel_generator(&vs);
                SubgroupClass::NontrivialCyclic(Witness::CyclicGenerator(KleinElement::new(m, n).to_word()))
            }
        });
    }
    let m0 = elems[odd[0]].m;
    if let Some(&i) = odd.iter().find(|&&i| elems[i].m != m0) {
        return Ok(SubgroupClass::NonCyclic(Witness::NonCommutingPair(odd[0], i)));
    }
    if let Some(i) = (0..elems.len()).find(|&i| elems[i].n.rem_euclid(2) == 0 && elems[i].m != 0) {
        return Ok(SubgroupClass::NonCyclic(Witness::NonCommutingPair(odd[0], i)));
    }
    // Root (m0, n0) with n0 odd: odd powers keep m0, even powers kill it.
    let n0 = elems.iter().fold(0, |acc, e| gcd(acc, e.n));
    let h = KleinElement::new(m0, n0);
    debug_assert!(elems.iter().all(|e| h.pow(e.n / n0) == *e));
    Ok(SubgroupClass::NontrivialCyclic(Witness::CyclicGenerator(h.to_word())))
}

/// Checks a verdict's certificate against the group.
pub fn verify_class(group: &SurfaceGroup, gens: &[Word], class: &SubgroupClass) -> Result<bool, Pi1Error> {
    let nontrivial: Vec<bool> = gens
        .iter()
        .map(|w| group.is_trivial(w).map(|t| !t))
        .collect::<Result<_, _>>()?;
    let Some(witness) = class.witness() else {
        return Ok(!nontrivial.contains(&true));
    };
    if !nontrivial.contains(&true) {
        return Ok(false);
    }
    Ok(match witness {
        Witness::NonCommutingPair(i, j) => !group.commutes(&gens[*i], &gens[*j])?,
        Witness::IndependentPair(i, j) => {
            let v = |w: &Word| -> Result<(i64, i64), Pi1Error> {
                if group.strategy == Strategy::KleinGroup {
                    let e = klein_normal_form(w)?;
                    Ok((e.m, e.n))
                } else {
                    let e = w.exponent_sums(2);
                    Ok((e[0], e[1]))
                }
            };
            let (a, b) = (v(&gens[*i])?, v(&gens[*j])?);
            group.commutes(&gens[*i], &gens[*j])? && a.0 * b.1 - a.1 * b.0 != 0
        }
        Witness::CyclicGenerator(h) => {
            let mut ok = true;
            for w in gens {
                ok &= is_power_of(group, w, h)?;
            }
            ok
        }
        Witness::AllCommuteWith(i) => {
            let mut ok = nontrivial[*i];
            for w in gens {
                ok &= group.commutes(&gens[*i], w)?;
            }
            ok
        }
    })
}

/// Searches `h^k = w` for `|k|` up to the word length bound.
fn is_power_of(group: &SurfaceGroup, w: &Word, h: &Word) -> Result<bool, Pi1Error> {
    if group.strategy == Strategy::KleinGroup {
        let (we, he) = (klein_normal_form(w)?, klein_normal_form(h)?);
        if he == KleinElement::IDENTITY {
            return Ok(we == he);
        }
        let bound = we.m.abs().max(we.n.abs()) + 1;
        return Ok((-bound..=bound).any(|k| he.pow(k) == we));
    }
    let bound = (w.len() + 2) as i64;
    for k in -bound..=bound {
        if group.are_equal(w, &h.pow(k))? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_cases() {
        let k = |m, n| KleinElement::new(m, n);
        assert!(classify_klein(&[k(0, 0)]).unwrap().is_trivial());
        assert_eq!(classify_klein(&[k(2, 0), k(3, 0)]).unwrap().is_cyclic(), true);
        assert!(!classify_klein(&[k(1, 0), k(0, 2)]).unwrap().is_cyclic());
        assert!(classify_klein(&[k(2, 4), k(1, 2)]).unwrap().is_cyclic());
        assert!(classify_klein(&[k(5, 3), k(5, 1), k(0, 2)]).unwrap().is_cyclic());
        assert!(!classify_klein(&[k(5, 3), k(4, 1)]).unwrap().is_cyclic());
        assert!(!classify_klein(&[k(5, 3), k(2, 2)]).unwrap().is_cyclic());
        assert!(classify_klein(&[k(3, 1), k(3, -1)]).unwrap().is_cyclic());
    }

    #[test]
    fn witnesses_verify() {
        let kg = SurfaceGroup::klein();
        let cases: Vec<Vec<Word>> = vec![
            vec![Word::generator(0)],
            vec![Word::generator(0), Word::generator(1)],
            vec![KleinElement::new(5, 3).to_word(), KleinElement::new(0, 2).to_word()],
            vec![KleinElement::new(1, 0).to_word(), KleinElement::new(0, 2).to_word()],
        ];
        for gens in cases {
            let c = classify_subgroup(&kg, &gens).unwrap();
            assert!(verify_class(&kg, &gens, &c).unwrap(), "{gens:?}");
        }
        let g2 = SurfaceGroup::orientable(2);
        let gens = vec![Word::generator(0).pow(2), Word::generator(0).pow(3)];
        let c = classify_subgroup(&g2, &gens).unwrap();
        assert!(c.is_cyclic() && verify_class(&g2, &gens, &c).unwrap());
        let gens = vec![Word::generator(0), Word::generator(2)];
        let c = classify_subgroup(&g2, &gens).unwrap();
        assert!(!c.is_cyclic() && verify_class(&g2, &gens, &c).unwrap());
        let t = SurfaceGroup::zxz();
        let gens = vec![Word::from_letters(vec![1, 1, 2, 2]), Word::from_letters(vec![1, 2, 1, 1])];
        let c = classify_subgroup(&t, &gens).unwrap();
        assert_eq!(c, SubgroupClass::NonCyclic(Witness::IndependentPair(0, 1)));
        let gens = vec![Word::from_letters(vec![1, 1, 2, 2]), Word::from_letters(vec![1, 2, 1, 2, 1, 2])];
        let c = classify_subgroup(&t, &gens).unwrap();
        assert!(c.is_cyclic() && verify_class(&t, &gens, &c).unwrap());
    }
}
