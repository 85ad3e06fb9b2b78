//! Truncated free associative algebra `Q<X_1..X_k> / (words of length > n)`.
//!
//! This is where `exp`, `log` and the Magnus expansion live; Lie elements are
//! embedded here via `[a,b] ↦ ab − ba`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rational, int, Rational};

/// An associative word, as a sequence of generator indices.
pub type Word = Vec<u8>;

/// A noncommutative polynomial in which all words longer than
/// `class_bound` have been discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    class_bound: usize,
    coeffs: BTreeMap<Word, Rational>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(n={}; ", self.class_bound)?;
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", format_rational(c), word_text(w))?;
        }
        write!(f, ")")
    }
}

fn word_text(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&g| alloc::format!("X{}", g + 1)).collect()
}

impl TruncatedSeries {
    pub fn zero(class_bound: usize) -> Self {
        TruncatedSeries {
            class_bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(class_bound: usize) -> Self {
        Self::monomial(class_bound, Word::new(), Rational::one())
    }

    /// `coeff · word`, or zero if the word is too long.
    pub fn monomial(class_bound: usize, word: Word, coeff: Rational) -> Self {
        let mut s = Self::zero(class_bound);
        s.add_term(word, coeff);
        s
    }

    pub fn generator(class_bound: usize, g: u8) -> Self {
        Self::monomial(class_bound, alloc::vec![g], Rational::one())
    }

    pub fn class_bound(&self) -> usize {
        self.class_bound
    }

    pub fn coeffs(&self) -> &BTreeMap<Word, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &[u8]) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if word.len() > self.class_bound || coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.class_bound);
        }
        TruncatedSeries {
            class_bound: self.class_bound,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| (w.clone(), c * q))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.class_bound.min(other.class_bound);
        let mut out = Self::zero(n);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.len() + v.len() <= n {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    out.add_term(w, a * b);
                }
            }
        }
        out
    }

    /// Commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The part of word length exactly `len`.
    pub fn homogeneous_part(&self, len: usize) -> Self {
        TruncatedSeries {
            class_bound: self.class_bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all words longer than `class_bound`.
    pub fn truncate(&self, class_bound: usize) -> Self {
        TruncatedSeries {
            class_bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.len() <= class_bound)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// `exp(self)`; `self` must have zero constant term.
    pub fn exp(&self) -> Self {
        debug_assert!(self.constant_term().is_zero());
        let mut out = Self::one(self.class_bound);
        let mut power = Self::one(self.class_bound);
        for k in 1..=self.class_bound {
            power = power.mul(self).scale(&int(k as i64).recip());
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// `log(self)`; `self` must have constant term 1.
    pub fn log(&self) -> Self {
        debug_assert!(self.constant_term().is_one());
        let y = self.sub(&Self::one(self.class_bound));
        let mut out = Self::zero(self.class_bound);
        let mut power = Self::one(self.class_bound);
        for k in 1..=self.class_bound {
            power = power.mul(&y);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&crate::rational::ratio(sign, k as i64)));
        }
        out
    }
}
