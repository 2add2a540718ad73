//! The Klein bottle group `<a, b | b a b^-1 = a^-1>` in normal form `a^m b^n`.

use super::word::generator_of;
use super::{Pi1Error, Word};
use serde::{Deserialize, Serialize};
use std::ops::Mul;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KleinElement {
    pub m: i64,
    pub n: i64,
}

fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl KleinElement {
    pub const IDENTITY: KleinElement = KleinElement { m: 0, n: 0 };
    pub const A: KleinElement = KleinElement { m: 1, n: 0 };
    pub const B: KleinElement = KleinElement { m: 0, n: 1 };

    pub fn new(m: i64, n: i64) -> KleinElement {
        KleinElement { m, n }
    }

    pub fn inverse(self) -> KleinElement {
        KleinElement {
            m: -parity_sign(self.n) * self.m,
            n: -self.n,
        }
    }

    /// `self^k` in closed form: even powers of `(m, n)` are `(0, kn)` when `n`
    /// is odd, and every power of `(m, n)` with `n` even is `(km, kn)`.
    pub fn pow(self, k: i64) -> KleinElement {
        if self.n.rem_euclid(2) == 0 {
            KleinElement { m: k * self.m, n: k * self.n }
        } else if k.rem_euclid(2) == 0 {
            KleinElement { m: 0, n: k * self.n }
        } else {
            KleinElement { m: self.m, n: k * self.n }
        }
    }

    pub fn commutes_with(self, other: KleinElement) -> bool {
        self * other == other * self
    }

    /// The word `a^m b^n`.
    pub fn to_word(self) -> Word {
        Word::generator(0).pow(self.m) * Word::generator(1).pow(self.n)
    }
}

impl Mul for KleinElement {
    type Output = KleinElement;
    fn mul(self, rhs: KleinElement) -> KleinElement {
        KleinElement {
            m: self.m + parity_sign(self.n) * rhs.m,
            n: self.n + rhs.n,
        }
    }
}

/// Left-to-right fold of a word over `{a, b}` with the multiplication law.
pub fn klein_normal_form(w: &Word) -> Result<KleinElement, Pi1Error> {
    let mut acc = KleinElement::IDENTITY;
    for &l in w.letters() {
        let g = match generator_of(l) {
            0 => KleinElement::A,
            1 => KleinElement::B,
            _ => return Err(Pi1Error::UnknownGenerator(l)),
        };
        acc = acc * if l > 0 { g } else { g.inverse() };
    }
    Ok(acc)
}
