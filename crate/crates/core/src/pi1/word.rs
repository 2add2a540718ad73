use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

/// A word in a free group: letter `g + 1` is generator `g`, `-(g + 1)` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<i32>);

#[inline]
pub(crate) fn generator_of(letter: i32) -> usize {
    (letter.unsigned_abs() - 1) as usize
}

#[inline]
pub(crate) fn letter(generator: usize, positive: bool) -> i32 {
    let l = generator as i32 + 1;
    if positive {
        l
    } else {
        -l
    }
}

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Panics on a zero letter.
    pub fn from_letters(letters: Vec<i32>) -> Word {
        assert!(letters.iter().all(|&l| l != 0), "zero is not a letter");
        Word(letters)
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![letter(g, true)])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out).reduced()
    }

    pub fn commutator(&self, other: &Word) -> Word {
        (&(&(self * other) * &self.inverse()) * &other.inverse()).reduced()
    }

    /// Stack-based free reduction.
    pub fn reduced(&self) -> Word {
        Word(free_reduce(self.0.iter().copied()))
    }

    pub fn is_freely_trivial(&self) -> bool {
        self.reduced().is_empty()
    }

    /// Free reduction followed by cancellation of inverse end letters.
    pub fn cyclically_reduced(&self) -> Word {
        Word(cyclic_reduce(free_reduce(self.0.iter().copied())))
    }

    /// Replaces generator `g` with `images[g]` and freely reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = &images[generator_of(l)];
            if l > 0 {
                push_reduced(&mut out, img.0.iter().copied());
            } else {
                push_reduced(&mut out, img.0.iter().rev().map(|&x| -x));
            }
        }
        Word(out)
    }

    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; generators];
        for &l in &self.0 {
            sums[generator_of(l)] += l.signum() as i64;
        }
        sums
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&l| generator_of(l)).max()
    }

    /// Renders the word with the given generator names, `1` for the identity.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { word: self, names }
    }
}

struct Named<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let g = generator_of(l);
            match self.names.get(g) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", g + 1)?,
            }
            if l < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.0.clone();
        push_reduced(&mut out, rhs.0.iter().copied());
        Word(out)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub(crate) fn push_reduced(out: &mut Vec<i32>, letters: impl IntoIterator<Item = i32>) {
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

pub(crate) fn free_reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out = Vec::new();
    push_reduced(&mut out, letters);
    out
}

pub(crate) fn cyclic_reduce(mut w: Vec<i32>) -> Vec<i32> {
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start] == -w[end - 1] {
        start += 1;
        end -= 1;
    }
    w.truncate(end);
    w.drain(..start);
    w
}
