//! PBW basis monomials `a^i b^j c^k d^l e^m`.

use std::cmp::Ordering;
use std::fmt;

use crate::malcev::Letter;

/// Exponent tuple `(i, j, k, l, m)` of the left-tapped basis monomial
/// `a^i b^j c^k d^l e^m`. The all-zero tuple is the unit.
///
/// Ordering is graded lexicographic: first by degree, then by the exponent
/// tuple compared left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PBWMonomial([u32; 5]);

impl PBWMonomial {
    pub const fn new(exps: [u32; 5]) -> Self {
        PBWMonomial(exps)
    }

    pub const fn unit() -> Self {
        PBWMonomial([0; 5])
    }

    pub fn letter(letter: Letter) -> Self {
        Self::unit().with_increment(letter, 1)
    }

    pub fn exps(&self) -> [u32; 5] {
        self.0
    }

    pub fn exp(&self, letter: Letter) -> u32 {
        self.0[letter.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [0; 5]
    }

    /// Smallest letter with a nonzero exponent: the outermost factor of the
    /// left-tapped product.
    pub fn leading_letter(&self) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| self.exp(*l) > 0)
    }

    /// Split `x = g y` with `g` the leading letter.
    pub fn split_leading(&self) -> Option<(Letter, PBWMonomial)> {
        let g = self.leading_letter()?;
        Some((g, self.with_decrement(g)))
    }

    pub fn with_increment(&self, letter: Letter, by: u32) -> Self {
        let mut e = self.0;
        e[letter.index()] += by;
        PBWMonomial(e)
    }

    /// Panics if the exponent of `letter` is zero.
    pub fn with_decrement(&self, letter: Letter) -> Self {
        let mut e = self.0;
        e[letter.index()] = e[letter.index()]
            .checked_sub(1)
            .expect("decrementing a zero exponent");
        PBWMonomial(e)
    }

    /// Exponent-wise sum, i.e. the product in `P(M)`.
    pub fn concat(&self, other: &PBWMonomial) -> Self {
        PBWMonomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// Only letters drawn from `letters` occur.
    pub fn supported_in(&self, letters: &[Letter]) -> bool {
        Letter::ALL
            .into_iter()
            .all(|l| self.exp(l) == 0 || letters.contains(&l))
    }

    /// All monomials of degree at most `max_degree`, in ascending graded-lex order.
    pub fn up_to_degree(max_degree: u32) -> Vec<PBWMonomial> {
        let mut out = Vec::new();
        for deg in 0..=max_degree {
            let mut layer = Vec::new();
            compositions(deg, 5, &mut Vec::new(), &mut layer);
            layer.sort();
            out.extend(layer);
        }
        out
    }
}

fn compositions(total: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<PBWMonomial>) {
    if slots == 1 {
        prefix.push(total);
        out.push(PBWMonomial(prefix[..].try_into().unwrap()));
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, slots - 1, prefix, out);
        prefix.pop();
    }
}

impl Ord for PBWMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Letter> for PBWMonomial {
    fn from(letter: Letter) -> Self {
        PBWMonomial::letter(letter)
    }
}

/// Writes `abcd^2e`; the unit is written `1`.
impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for l in Letter::ALL {
            match self.exp(l) {
                0 => {}
                1 => write!(f, "{l}")?,
                n => write!(f, "{l}^{n}")?,
            }
        }
        Ok(())
    }
}
