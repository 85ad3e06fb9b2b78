//! The Malcev correspondence for free nilpotent groups.
//!
//! `L / L_{n+1}` becomes a group under `a * b = log(exp(a) exp(b))`, a finite
//! Lie series because the algebra is nilpotent. The universal series on two
//! symbols is computed once per class bound in the truncated associative
//! algebra and rewritten into the Lyndon basis ([`BchTable`]); products of
//! concrete elements substitute into it.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::assoc::TruncatedSeries;
use crate::error::{Error, Result};
use crate::freelie::{graded_dims, substitute_word, HallWord, LieElement};
use crate::rational::Rational;

/// The universal Baker–Campbell–Hausdorff polynomial in two symbols `a`, `b`
/// (generators 0 and 1), through weight `class_bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct BchTable {
    class_bound: usize,
    series: LieElement,
}

impl fmt::Debug for BchTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BchTable(n={}; {})", self.class_bound, self.render())
    }
}

/// Names for the two BCH symbols.
pub fn symbol_name(g: u8) -> String {
    match g {
        0 => "a".into(),
        1 => "b".into(),
        _ => crate::freelie::default_name(g),
    }
}

/// Resolves `a`, `b` for parsing BCH expressions.
pub fn symbol_index(name: &str) -> Option<u8> {
    match name {
        "a" => Some(0),
        "b" => Some(1),
        _ => None,
    }
}

impl BchTable {
    /// Computes `log(exp(a) exp(b))` through weight `class_bound` and writes it
    /// in the Lyndon basis.
    pub fn compute(class_bound: usize) -> Result<Self> {
        if class_bound == 0 {
            return Err(Error::Precondition("class bound must be at least 1".into()));
        }
        let a = TruncatedSeries::generator(class_bound, 0);
        let b = TruncatedSeries::generator(class_bound, 1);
        let log = a.exp().mul(&b.exp()).log();
        let series = LieElement::from_assoc(&log)?;
        Ok(BchTable {
            class_bound,
            series,
        })
    }

    pub fn class_bound(&self) -> usize {
        self.class_bound
    }

    /// The whole polynomial as a Lie element on two generators.
    pub fn series(&self) -> &LieElement {
        &self.series
    }

    /// Terms of one weight: `(Lyndon word over {a,b}, coefficient)`.
    pub fn terms(&self, weight: usize) -> Vec<(HallWord, Rational)> {
        self.series
            .coeffs()
            .iter()
            .filter(|(w, _)| w.weight() == weight)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    /// E.g. `a + b + 1/2·[a,b]`.
    pub fn render(&self) -> String {
        self.series.render(&symbol_name)
    }

    /// Substitutes `g`, `h` for `a`, `b`.
    pub fn apply(&self, g: &LieElement, h: &LieElement) -> Result<LieElement> {
        if g.class_bound() != h.class_bound() {
            return Err(Error::ClassBoundMismatch {
                left: g.class_bound(),
                right: h.class_bound(),
            });
        }
        let n = g.class_bound();
        if n > self.class_bound {
            return Err(Error::Precondition(alloc::format!(
                "BCH table of class {} used at class {n}",
                self.class_bound
            )));
        }
        let values = [g.clone(), h.clone()];
        let mut cache = BTreeMap::new();
        let mut acc = LieElement::zero(n);
        for (word, coeff) in self.series.coeffs() {
            if word.weight() > n {
                break;
            }
            let term = substitute_word(word, &values, &mut cache)?;
            acc = acc.add(&term.scale(coeff));
        }
        Ok(acc)
    }
}

const CACHED_CLASSES: usize = 16;

static TABLES: [OnceBox<BchTable>; CACHED_CLASSES] = [const { OnceBox::new() }; CACHED_CLASSES];

/// The BCH table for `class_bound`, computed at most once per class for
/// classes up to 16 (concurrent first callers may both compute it; one
/// result wins and they are equal).
pub fn bch_table(class_bound: usize) -> Result<&'static BchTable> {
    if class_bound == 0 || class_bound > CACHED_CLASSES {
        return Err(Error::Precondition(alloc::format!(
            "class bound {class_bound} outside 1..={CACHED_CLASSES}"
        )));
    }
    let slot = &TABLES[class_bound - 1];
    if let Some(t) = slot.get() {
        return Ok(t);
    }
    let table = BchTable::compute(class_bound)?;
    Ok(slot.get_or_init(|| Box::new(table)))
}

/// An element of the Malcev group `(L / L_{n+1}, *)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MalcevElement {
    value: LieElement,
}

impl fmt::Debug for MalcevElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MalcevElement({:?})", self.value)
    }
}

impl fmt::Display for MalcevElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl From<LieElement> for MalcevElement {
    fn from(value: LieElement) -> Self {
        MalcevElement { value }
    }
}

impl MalcevElement {
    pub fn identity(class_bound: usize) -> Self {
        LieElement::zero(class_bound).into()
    }

    pub fn value(&self) -> &LieElement {
        &self.value
    }

    pub fn into_value(self) -> LieElement {
        self.value
    }

    pub fn class_bound(&self) -> usize {
        self.value.class_bound()
    }

    pub fn is_identity(&self) -> bool {
        self.value.is_zero()
    }

    /// `self * other` by the BCH formula.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.class_bound() != other.class_bound() {
            return Err(Error::ClassBoundMismatch {
                left: self.class_bound(),
                right: other.class_bound(),
            });
        }
        let table = bch_table(self.class_bound())?;
        Ok(table.apply(&self.value, &other.value)?.into())
    }

    /// The inverse is the negative, since `exp(-a) = exp(a)^{-1}`.
    pub fn inv(&self) -> Self {
        self.value.neg().into()
    }

    /// `g^q = exp(q log g)`; agrees with iterated products for integers.
    pub fn rational_power(&self, q: &Rational) -> Self {
        self.value.scale(q).into()
    }

    /// Group commutator `g h g^{-1} h^{-1}`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }

    /// Image in the previous stage of the tower `… → L/L_{n+1} → L/L_n`.
    pub fn project(&self, class_bound: usize) -> Self {
        self.value.project(class_bound).into()
    }
}

/// `dim gr_i` of the free nilpotent group (equivalently of the free Lie
/// algebra) on `num_generators` generators, for `i = 1..=class_bound`.
pub fn associated_graded_dims(class_bound: usize, num_generators: usize) -> Vec<usize> {
    graded_dims(num_generators, class_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn gen(n: usize, g: u8) -> MalcevElement {
        LieElement::generator(n, g).into()
    }

    fn parse_ab(s: &str, n: usize) -> LieElement {
        LieElement::parse_with(s, n, &symbol_index).unwrap()
    }

    #[test]
    fn low_class_tables() {
        assert_eq!(bch_table(1).unwrap().series(), &parse_ab("a + b", 1));
        assert_eq!(bch_table(2).unwrap().series(), &parse_ab("a + b + 1/2*[a,b]", 2));
        assert_eq!(bch_table(2).unwrap().render(), "a + b + 1/2·[a,b]");
        let t3 = bch_table(3).unwrap();
        let weight3 = t3.series().weight_component(3).unwrap();
        assert_eq!(weight3, parse_ab("1/12*([a,[a,b]] - [b,[a,b]])", 3));
        assert!(bch_table(0).is_err());
    }

    #[test]
    fn mul_examples() {
        let n = 2;
        assert_eq!(MalcevElement::identity(n).mul(&gen(n, 1)).unwrap(), gen(n, 1));
        let xy = gen(n, 0).mul(&gen(n, 1)).unwrap();
        assert_eq!(xy.value(), &LieElement::parse("x1 + x2 + 1/2*[x1,x2]", n).unwrap());
        let yx = gen(n, 1).mul(&gen(n, 0)).unwrap();
        let c = xy.mul(&yx.inv()).unwrap();
        assert_eq!(c.value(), &LieElement::parse("[x1,x2]", n).unwrap());
        assert!(gen(2, 0).mul(&gen(3, 0)).is_err());
    }

    #[test]
    fn inverse_and_powers() {
        assert!(MalcevElement::identity(3).inv().is_identity());
        assert_eq!(gen(3, 0).inv().value(), &LieElement::generator(3, 0).neg());
        assert!(gen(3, 0).mul(&gen(3, 0).inv()).unwrap().is_identity());
        let g: MalcevElement = LieElement::parse("x + y", 3).unwrap().into();
        assert_eq!(g.rational_power(&int(1)), g);
        assert!(g.rational_power(&int(0)).is_identity());
        assert_eq!(g.rational_power(&int(2)), g.mul(&g).unwrap());
    }

    #[test]
    fn graded_dims() {
        assert_eq!(associated_graded_dims(1, 5), vec![5]);
        assert_eq!(associated_graded_dims(2, 2), vec![2, 1]);
        assert_eq!(associated_graded_dims(4, 2), vec![2, 1, 2, 3]);
    }

    fn element(n: usize) -> impl Strategy<Value = MalcevElement> {
        let basis: Vec<HallWord> = crate::freelie::hall_basis(2, n).into_iter().flatten().collect();
        proptest::collection::vec(-2i64..3, basis.len()).prop_map(move |cs| {
            LieElement::from_terms(n, basis.iter().cloned().zip(cs.into_iter().map(int))).into()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn associativity_class4(a in element(4), b in element(4), c in element(4)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn roots_are_unique(h in element(3), m in 1i64..5) {
            let g = h.rational_power(&ratio(1, m));
            let mut acc = MalcevElement::identity(3);
            for _ in 0..m {
                acc = acc.mul(&g).unwrap();
            }
            prop_assert_eq!(acc, h);
        }

        #[test]
        fn nilpotency(a in element(3), b in element(3), c in element(3), d in element(3)) {
            let c3 = a.commutator(&b).unwrap().commutator(&c).unwrap().commutator(&d).unwrap();
            prop_assert!(c3.is_identity());
        }
    }
}
