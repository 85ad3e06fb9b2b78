//! Free-group words and their coordinates in the rational completion.
//!
//! The Magnus expansion `x_i ↦ 1 + X_i` embeds the free group in the
//! group-like series of the truncated associative algebra; its logarithm is a
//! Lie element, which gives the isomorphism `F/F_{n+1} ⊗ Q ≅ (L/L_{n+1}, *)`
//! stage by stage. The completion itself is only ever seen through these
//! finite stages.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freelie::{default_generator_index, default_name, LieElement};
use crate::malcev::MalcevElement;
use crate::rational::Rational;

pub use crate::assoc::TruncatedSeries;

/// One letter `x_g^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u8, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the free group.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeGroupWord {
    letters: Vec<Letter>,
}

impl fmt::Debug for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGroupWord({self})")
    }
}

/// `x1 x2^-1 x1`; the identity is `1`.
impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&default_name(l.generator))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeGroupWord {
    type Err = Error;

    /// Whitespace-separated factors `name` or `name^k` (`k` any nonzero
    /// integer); `1` denotes the identity. Free reduction is applied.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let pos = s[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad exponent in {token:?}")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let g = default_generator_index(name)
                .ok_or_else(|| Error::parse(pos, format!("unknown generator {name:?}")))?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(g, exp < 0));
            }
        }
        Ok(FreeGroupWord::from_letters(letters))
    }
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: u8) -> Self {
        FreeGroupWord {
            letters: alloc::vec![Letter::new(g, false)],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeGroupWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inv(&self) -> Self {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `u v u^{-1} v^{-1}`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).mul(&self.inv()).mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }
}

/// Magnus expansion truncated at total degree `n`:
/// `x ↦ 1 + X`, `x^{-1} ↦ 1 - X + X^2 - …`.
pub fn magnus(w: &FreeGroupWord, n: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::Precondition("truncation degree must be at least 1".into()));
    }
    let mut acc = TruncatedSeries::one(n);
    for l in w.letters() {
        let factor = if l.inverse {
            let mut s = TruncatedSeries::zero(n);
            for k in 0..=n {
                let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                s.add_term(alloc::vec![l.generator; k], sign);
            }
            s
        } else {
            TruncatedSeries::one(n).add(&TruncatedSeries::generator(n, l.generator))
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Applies the algebra automorphism `X_i ↦ exp(X_i) - 1`, which carries the
/// Magnus image of a word to the group-like series `∏ exp(±X_i)`.
pub fn to_group_like(series: &TruncatedSeries) -> TruncatedSeries {
    let n = series.class_bound();
    let mut shifted: BTreeMap<u8, TruncatedSeries> = BTreeMap::new();
    let mut out = TruncatedSeries::zero(n);
    for (word, c) in series.coeffs() {
        let mut term = TruncatedSeries::monomial(n, Vec::new(), c.clone());
        for &g in word {
            let e = shifted.entry(g).or_insert_with(|| {
                TruncatedSeries::generator(n, g)
                    .exp()
                    .sub(&TruncatedSeries::one(n))
            });
            term = term.mul(e);
        }
        out = out.add(&term);
    }
    out
}

/// Lyndon coordinates of `w` in the class-`n` stage `(L/L_{n+1}, *)` of the
/// rational completion: the logarithm of the Magnus image after
/// [`to_group_like`]. The result is checked to be a Lie element.
pub fn log_coordinates(w: &FreeGroupWord, n: usize) -> Result<MalcevElement> {
    let series = to_group_like(&magnus(w, n)?);
    Ok(LieElement::from_assoc(&series.log())?.into())
}

/// Position of a word in the rational lower central series as seen at
/// precision `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcsWeight {
    /// `w ∈ F_i^Q \ F_{i+1}^Q`.
    Exactly(usize),
    /// `w ∈ F_{n+1}^Q`: the word is invisible at this precision.
    ExceedsBound(usize),
}

impl fmt::Display for LcsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsWeight::Exactly(i) => write!(f, "{i}"),
            LcsWeight::ExceedsBound(n) => write!(f, "exceeds {n}"),
        }
    }
}

/// Smallest weight with a nonzero log coordinate.
pub fn lcs_weight(w: &FreeGroupWord, n: usize) -> Result<LcsWeight> {
    let coords = log_coordinates(w, n)?;
    Ok(match coords.value().lowest_weight() {
        Some(i) => LcsWeight::Exactly(i),
        None => LcsWeight::ExceedsBound(n),
    })
}

/// Product in the class-`n` stage of the completion (the BCH product).
pub fn completion_mul(a: &MalcevElement, b: &MalcevElement) -> Result<MalcevElement> {
    a.mul(b)
}

/// Nonzero coordinates as `(hall word, "p/q")` pairs, in basis order.
pub fn coordinate_pairs(e: &MalcevElement) -> Vec<(String, String)> {
    e.value()
        .coeffs()
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (w.to_string(), crate::rational::format_rational(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn w(s: &str) -> FreeGroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_reduces_and_renders() {
        assert_eq!(w("x1 x2 x2^-1 x1^-1"), FreeGroupWord::identity());
        assert_eq!(w("x^2 y^-1").to_string(), "x1 x1 x2^-1");
        assert_eq!(w("1").to_string(), "1");
        assert!("x1 q".parse::<FreeGroupWord>().is_err());
        assert!("x1^a".parse::<FreeGroupWord>().is_err());
    }

    #[test]
    fn magnus_examples() {
        assert_eq!(magnus(&FreeGroupWord::identity(), 2).unwrap(), TruncatedSeries::one(2));
        let x = TruncatedSeries::generator(2, 0);
        let y = TruncatedSeries::generator(2, 1);
        assert_eq!(magnus(&w("x"), 2).unwrap(), TruncatedSeries::one(2).add(&x));
        let expected = TruncatedSeries::one(2).add(&x.mul(&y)).sub(&y.mul(&x));
        assert_eq!(magnus(&w("x y x^-1 y^-1"), 2).unwrap(), expected);
    }

    #[test]
    fn log_coordinate_examples() {
        for n in 1..=4 {
            assert_eq!(log_coordinates(&w("x"), n).unwrap().value(), &LieElement::generator(n, 0));
            assert_eq!(
                log_coordinates(&w("x^2"), n).unwrap().value(),
                &LieElement::generator(n, 0).scale(&int(2))
            );
        }
        assert_eq!(
            log_coordinates(&w("x y x^-1 y^-1"), 2).unwrap().value(),
            &LieElement::parse("[x,y]", 2).unwrap()
        );
        assert!(log_coordinates(&FreeGroupWord::identity(), 3).unwrap().is_identity());
    }

    #[test]
    fn lcs_weight_examples() {
        let x = FreeGroupWord::generator(0);
        let y = FreeGroupWord::generator(1);
        assert_eq!(lcs_weight(&x, 4).unwrap(), LcsWeight::Exactly(1));
        assert_eq!(lcs_weight(&x.commutator(&y), 4).unwrap(), LcsWeight::Exactly(2));
        assert_eq!(lcs_weight(&x.commutator(&y).commutator(&y), 4).unwrap(), LcsWeight::Exactly(3));
        assert_eq!(lcs_weight(&x.commutator(&y).commutator(&y), 2).unwrap(), LcsWeight::ExceedsBound(2));
    }

    fn word(k: u8, max_len: usize) -> impl Strategy<Value = FreeGroupWord> {
        proptest::collection::vec((0..k, any::<bool>()), 0..=max_len)
            .prop_map(|ls| FreeGroupWord::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn inversion_negates(u in word(2, 6), n in 1usize..5) {
            prop_assert_eq!(log_coordinates(&u.inv(), n).unwrap(), log_coordinates(&u, n).unwrap().inv());
        }

        #[test]
        fn tower_coherence(u in word(2, 5), v in word(2, 5)) {
            let (a, b) = (log_coordinates(&u, 4).unwrap(), log_coordinates(&v, 4).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().project(3), a.project(3).mul(&b.project(3)).unwrap());
            prop_assert_eq!(a.project(3), log_coordinates(&u, 3).unwrap());
        }

        #[test]
        fn word_text_round_trip(u in word(3, 8)) {
            prop_assert_eq!(u.to_string().parse::<FreeGroupWord>().unwrap(), u);
        }
    }
}
