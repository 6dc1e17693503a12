//! The five-dimensional nilpotent Malcev algebra `M`.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// A basis letter of `M`, ordered `a < b < c < d < e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
}

impl Letter {
    pub const ALL: [Letter; 5] = [Letter::A, Letter::B, Letter::C, Letter::D, Letter::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Letter> {
        Self::ALL.get(i).copied()
    }

    pub fn as_char(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a'..='e' => Letter::from_index(c as usize - 'a' as usize),
            _ => None,
        }
    }

    /// Bracket of two basis letters: `Some((sign, letter))` or `None` when zero.
    pub fn bracket(self, other: Letter) -> Option<(i8, Letter)> {
        use Letter::*;
        match (self, other) {
            (A, B) => Some((1, C)),
            (B, A) => Some((-1, C)),
            (C, D) => Some((1, E)),
            (D, C) => Some((-1, E)),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An element of `M` with exact coordinates in the basis `a..e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MalcevVector {
    coords: [Rational; 5],
}

impl MalcevVector {
    pub fn new(coords: [Rational; 5]) -> Self {
        MalcevVector { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(letter: Letter) -> Self {
        let mut v = Self::zero();
        v.coords[letter.index()] = Rational::one();
        v
    }

    pub fn coords(&self) -> &[Rational; 5] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MalcevVector {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    /// Nonzero coordinates as `(letter, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (Letter, &Rational)> {
        Letter::ALL
            .into_iter()
            .zip(self.coords.iter())
            .filter(|(_, c)| !c.is_zero())
    }
}

impl From<Letter> for MalcevVector {
    fn from(letter: Letter) -> Self {
        MalcevVector::basis(letter)
    }
}

impl Index<Letter> for MalcevVector {
    type Output = Rational;
    fn index(&self, letter: Letter) -> &Rational {
        &self.coords[letter.index()]
    }
}

impl Add for &MalcevVector {
    type Output = MalcevVector;
    fn add(self, rhs: &MalcevVector) -> MalcevVector {
        MalcevVector {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl Sub for &MalcevVector {
    type Output = MalcevVector;
    fn sub(self, rhs: &MalcevVector) -> MalcevVector {
        MalcevVector {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl Neg for &MalcevVector {
    type Output = MalcevVector;
    fn neg(self) -> MalcevVector {
        MalcevVector {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

/// The bracket of `M`: bilinear extension of `[a,b] = c`, `[c,d] = e`.
pub fn bracket_m(x: &MalcevVector, y: &MalcevVector) -> MalcevVector {
    let mut out = MalcevVector::zero();
    for (f, cf) in x.terms() {
        for (g, cg) in y.terms() {
            if let Some((sign, h)) = f.bracket(g) {
                let c = cf * cg;
                if sign > 0 {
                    out.coords[h.index()] += c;
                } else {
                    out.coords[h.index()] -= c;
                }
            }
        }
    }
    out
}

/// `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]` in `M`.
pub fn jacobian_m(x: &MalcevVector, y: &MalcevVector, z: &MalcevVector) -> MalcevVector {
    let t1 = bracket_m(&bracket_m(x, y), z);
    let t2 = bracket_m(&bracket_m(y, z), x);
    let t3 = bracket_m(&bracket_m(z, x), y);
    &(&t1 + &t2) + &t3
}
