//! The free Lie algebra `L(x_1, …, x_k)` over `Q`, truncated at a class bound.
//!
//! The basis is the Lyndon basis: a Lyndon word `w` of length ≥ 2 has the
//! standard factorization `w = uv` with `v` its longest proper Lyndon suffix,
//! and the basis element is `P(w) = [P(u), P(v)]`. Brackets of basis
//! elements are rewritten into the basis combinatorially (Jacobi on the left
//! factor); the associative embedding `[a,b] ↦ ab − ba` is kept separate and
//! used for the inverse map [`LieElement::from_assoc`].
//!
//! A [`LieElement`] with class bound `n` lives in `L / L_{n+1}`: every
//! operation discards components of weight above `n`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Zero};

use crate::assoc::{TruncatedSeries, Word};
use crate::error::{Error, Result};
use crate::exactalg::{solve, RationalMatrix};
use crate::rational::{join_terms, parse_rational, signed_term, Rational};

/// A Lyndon word, standing for its standard bracketing.
///
/// Ordered by weight first, then lexicographically, which is the order in
/// which coordinates are listed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HallWord {
    letters: Vec<u8>,
}

impl Ord for HallWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for HallWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&default_name))
    }
}

impl fmt::Display for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl HallWord {
    pub fn letter(g: u8) -> Self {
        HallWord { letters: vec![g] }
    }

    /// Wraps `letters` if it is a Lyndon word.
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        is_lyndon(&letters).then_some(HallWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    pub fn is_letter(&self) -> bool {
        self.letters.len() == 1
    }

    /// `(u, v)` with `v` the longest proper Lyndon suffix; `None` for letters.
    pub fn standard_factorization(&self) -> Option<(HallWord, HallWord)> {
        if self.is_letter() {
            return None;
        }
        let split = (1..self.letters.len())
            .find(|&i| is_lyndon(&self.letters[i..]))
            .expect("the last letter is a Lyndon suffix");
        Some((
            HallWord {
                letters: self.letters[..split].to_vec(),
            },
            HallWord {
                letters: self.letters[split..].to_vec(),
            },
        ))
    }

    /// Nested-bracket text, e.g. `[x1,[x1,x2]]`.
    pub fn render(&self, name: &dyn Fn(u8) -> String) -> String {
        match self.standard_factorization() {
            None => name(self.letters[0]),
            Some((u, v)) => format!("[{},{}]", u.render(name), v.render(name)),
        }
    }

    /// Image of the bracketing in the free associative algebra.
    pub fn to_assoc(&self, class_bound: usize) -> TruncatedSeries {
        match self.standard_factorization() {
            None => TruncatedSeries::generator(class_bound, self.letters[0]),
            Some((u, v)) => u
                .to_assoc(class_bound)
                .commutator(&v.to_assoc(class_bound)),
        }
    }
}

/// Default generator names `x1, x2, …`.
pub fn default_name(g: u8) -> String {
    format!("x{}", g as usize + 1)
}

/// Resolves `x1, x2, …` (and the aliases `x, y, z` for the first three).
pub fn default_generator_index(name: &str) -> Option<u8> {
    match name {
        "x" => Some(0),
        "y" => Some(1),
        "z" => Some(2),
        _ => {
            let digits = name.strip_prefix('x')?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let i: usize = digits.parse().ok()?;
            (1..=256).contains(&i).then(|| (i - 1) as u8)
        }
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length `1..=max_len` over `k` letters, in
/// lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(k: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let last = (k - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&last) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(c) => *c += 1,
        }
    }
    out
}

/// The Lyndon basis of `L^1, …, L^n`, grouped by weight (index `i` holds
/// weight `i + 1`), lexicographic within each weight.
pub fn hall_basis(num_generators: usize, class_bound: usize) -> Vec<Vec<HallWord>> {
    let mut by_weight = vec![Vec::new(); class_bound];
    for letters in lyndon_words(num_generators, class_bound) {
        by_weight[letters.len() - 1].push(HallWord { letters });
    }
    by_weight
}

type Lin = BTreeMap<HallWord, Rational>;

fn lin_add(acc: &mut Lin, word: HallWord, c: Rational) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match acc.entry(word) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

type Memo = BTreeMap<(Vec<u8>, Vec<u8>), Lin>;

/// `[P(u), P(v)]` in the Lyndon basis, truncated at weight `n`.
fn bracket_words(u: &HallWord, v: &HallWord, n: usize, memo: &mut Memo) -> Lin {
    if u == v || u.weight() + v.weight() > n {
        return Lin::new();
    }
    if u.letters > v.letters {
        let mut out = bracket_words(v, u, n, memo);
        for c in out.values_mut() {
            *c = -c.clone();
        }
        return out;
    }
    let key = (u.letters.clone(), v.letters.clone());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let out = match u.standard_factorization() {
        Some((u1, u2)) if u2.letters < v.letters => {
            // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
            let mut acc = Lin::new();
            let inner = bracket_words(&u2, v, n, memo);
            for (w, c) in inner {
                for (w2, c2) in bracket_words(&u1, &w, n, memo) {
                    lin_add(&mut acc, w2, &c * c2);
                }
            }
            let inner = bracket_words(&u1, v, n, memo);
            for (w, c) in inner {
                for (w2, c2) in bracket_words(&u2, &w, n, memo) {
                    lin_add(&mut acc, w2, -(&c * c2));
                }
            }
            acc
        }
        _ => {
            let mut letters = u.letters.clone();
            letters.extend_from_slice(&v.letters);
            let mut acc = Lin::new();
            acc.insert(HallWord { letters }, Rational::one());
            acc
        }
    };
    memo.insert(key, out.clone());
    out
}

/// An element of `L / L_{n+1}` in Lyndon coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    class_bound: usize,
    coeffs: Lin,
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement(n={}; {})", self.class_bound, self)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl LieElement {
    pub fn zero(class_bound: usize) -> Self {
        LieElement {
            class_bound,
            coeffs: Lin::new(),
        }
    }

    pub fn generator(class_bound: usize, g: u8) -> Self {
        Self::basis(class_bound, HallWord::letter(g))
    }

    pub fn basis(class_bound: usize, word: HallWord) -> Self {
        Self::from_terms(class_bound, [(word, Rational::one())])
    }

    /// Sums the given terms, dropping weights above the class bound.
    pub fn from_terms<I: IntoIterator<Item = (HallWord, Rational)>>(class_bound: usize, terms: I) -> Self {
        let mut coeffs = Lin::new();
        for (w, c) in terms {
            if w.weight() <= class_bound {
                lin_add(&mut coeffs, w, c);
            }
        }
        LieElement { class_bound, coeffs }
    }

    pub fn class_bound(&self) -> usize {
        self.class_bound
    }

    pub fn coeffs(&self) -> &BTreeMap<HallWord, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &HallWord) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum; mismatched class bounds are reconciled by projecting to the
    /// smaller one.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.class_bound.min(other.class_bound);
        Self::from_terms(
            n,
            self.coeffs
                .iter()
                .chain(&other.coeffs)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_terms(
            self.class_bound,
            self.coeffs.iter().map(|(w, c)| (w.clone(), c * q)),
        )
    }

    /// `[self, other]` in normal form, weights above the class bound dropped.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let mut memo = Memo::new();
        self.bracket_with(other, &mut memo)
    }

    fn bracket_with(&self, other: &Self, memo: &mut Memo) -> Result<Self> {
        if self.class_bound != other.class_bound {
            return Err(Error::ClassBoundMismatch {
                left: self.class_bound,
                right: other.class_bound,
            });
        }
        let n = self.class_bound;
        let mut acc = Lin::new();
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.weight() + v.weight() > n {
                    continue;
                }
                let ab = a * b;
                for (w, c) in bracket_words(u, v, n, memo) {
                    lin_add(&mut acc, w, &ab * c);
                }
            }
        }
        Ok(LieElement {
            class_bound: n,
            coeffs: acc,
        })
    }

    /// Projection onto `L^i`.
    pub fn weight_component(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.class_bound {
            return Err(Error::WeightOutOfRange {
                weight: i,
                class_bound: self.class_bound,
            });
        }
        Ok(LieElement {
            class_bound: self.class_bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.weight() == i)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    /// Smallest weight with a nonzero component.
    pub fn lowest_weight(&self) -> Option<usize> {
        self.coeffs.keys().map(HallWord::weight).min()
    }

    /// Image under `L/L_{n+1} → L/L_{m+1}` for `m ≤ n`.
    pub fn project(&self, class_bound: usize) -> Self {
        Self::from_terms(
            class_bound.min(self.class_bound),
            self.coeffs.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Largest generator index that occurs, if any.
    pub fn max_generator(&self) -> Option<u8> {
        self.coeffs.keys().flat_map(|w| w.letters.iter().copied()).max()
    }

    pub fn to_assoc(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.class_bound);
        for (w, c) in &self.coeffs {
            s = s.add(&w.to_assoc(self.class_bound).scale(c));
        }
        s
    }

    /// Writes a Lie polynomial given in the associative algebra in Lyndon
    /// coordinates by solving, weight by weight, against the associative
    /// expansions of the basis. Fails with [`Error::NotPrimitive`] if some
    /// homogeneous part is not in their span.
    pub fn from_assoc(series: &TruncatedSeries) -> Result<Self> {
        let n = series.class_bound();
        if !series.constant_term().is_zero() {
            return Err(Error::NotPrimitive { weight: 0 });
        }
        let k = series
            .coeffs()
            .keys()
            .flat_map(|w| w.iter().copied())
            .max()
            .map_or(0, |g| g as usize + 1);
        let basis = hall_basis(k, n);
        let mut terms = Vec::new();
        for weight in 1..=n {
            let part = series.homogeneous_part(weight);
            if part.is_zero() {
                continue;
            }
            let words = &basis[weight - 1];
            let columns: Vec<TruncatedSeries> = words.iter().map(|w| w.to_assoc(n)).collect();
            let mut index: BTreeMap<Word, usize> = BTreeMap::new();
            for s in columns.iter().chain(core::iter::once(&part)) {
                for w in s.coeffs().keys() {
                    let next = index.len();
                    index.entry(w.clone()).or_insert(next);
                }
            }
            let mut m = RationalMatrix::zeros(index.len(), words.len());
            for (j, col) in columns.iter().enumerate() {
                for (w, c) in col.coeffs() {
                    m[(index[w], j)] = c.clone();
                }
            }
            let mut rhs = vec![Rational::zero(); index.len()];
            for (w, c) in part.coeffs() {
                rhs[index[w]] = c.clone();
            }
            let x = solve(&m, &rhs)?.ok_or(Error::NotPrimitive { weight })?;
            terms.extend(words.iter().cloned().zip(x));
        }
        Ok(Self::from_terms(n, terms))
    }

    /// Text form such as `x1 + 1/2·[x1,x2]`, terms ordered by weight.
    pub fn render(&self, name: &dyn Fn(u8) -> String) -> String {
        join_terms(
            self.coeffs
                .iter()
                .map(|(w, c)| signed_term(c, &w.render(name), "·")),
        )
    }

    /// Parses sums of rational multiples of bracket expressions, e.g.
    /// `x1 - 1/2*[x1,[x1,x2]]`, with `x1, x2, …` (or `x, y, z`) as generators.
    pub fn parse(text: &str, class_bound: usize) -> Result<Self> {
        Self::parse_with(text, class_bound, &default_generator_index)
    }

    pub fn parse_with(
        text: &str,
        class_bound: usize,
        resolve: &dyn Fn(&str) -> Option<u8>,
    ) -> Result<Self> {
        let mut p = Parser {
            src: text,
            pos: 0,
            class_bound,
            resolve,
            memo: Memo::new(),
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    class_bound: usize,
    resolve: &'a dyn Fn(&str) -> Option<u8>,
    memo: Memo,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LieElement> {
        let mut acc = LieElement::zero(self.class_bound);
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign));
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LieElement> {
        self.skip_ws();
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            while self
                .peek()
                .is_some_and(|c| c.is_ascii_digit() || c == '/' || c == ' ')
            {
                self.bump();
            }
            let coeff = parse_rational(&self.src[start..self.pos])
                .map_err(|_| Error::parse(start, "invalid coefficient"))?;
            self.skip_ws();
            if self.eat('*') || self.eat('·') {
                let atom = self.atom()?;
                return Ok(atom.scale(&coeff));
            }
            if coeff.is_zero() {
                return Ok(LieElement::zero(self.class_bound));
            }
            return Err(Error::parse(self.pos, "a Lie element has no constant term"));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<LieElement> {
        self.skip_ws();
        if self.eat('[') {
            let a = self.expr()?;
            if !self.eat(',') {
                return Err(Error::parse(self.pos, "expected ','"));
            }
            let b = self.expr()?;
            if !self.eat(']') {
                return Err(Error::parse(self.pos, "expected ']'"));
            }
            return a.bracket_with(&b, &mut self.memo);
        }
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(Error::parse(self.pos, "expected ')'"));
            }
            return Ok(e);
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        let name = &self.src[start..self.pos];
        if name.is_empty() {
            return Err(Error::parse(start, "expected a generator, '[' or '('"));
        }
        let g = (self.resolve)(name)
            .ok_or_else(|| Error::parse(start, format!("unknown generator {name:?}")))?;
        Ok(LieElement::generator(self.class_bound, g))
    }
}

/// Evaluates the standard bracketing of a Lyndon word over symbols
/// `0..values.len()` with each symbol replaced by the given element.
/// Subtrees are shared through `cache`.
pub(crate) fn substitute_word(
    word: &HallWord,
    values: &[LieElement],
    cache: &mut BTreeMap<Vec<u8>, LieElement>,
) -> Result<LieElement> {
    if let Some(hit) = cache.get(&word.letters) {
        return Ok(hit.clone());
    }
    let out = match word.standard_factorization() {
        None => values[word.letters[0] as usize].clone(),
        Some((u, v)) => {
            let a = substitute_word(&u, values, cache)?;
            let b = substitute_word(&v, values, cache)?;
            a.bracket(&b)?
        }
    };
    cache.insert(word.letters.clone(), out.clone());
    Ok(out)
}

/// Dimensions `dim L^1, …, dim L^n`.
pub fn graded_dims(num_generators: usize, class_bound: usize) -> Vec<usize> {
    hall_basis(num_generators, class_bound)
        .iter()
        .map(Vec::len)
        .collect()
}

impl HallWord {
    /// Parses one bracketed Lyndon word such as `[x1,[x1,x2]]`, requiring
    /// that it be a basis element verbatim.
    pub fn parse(text: &str) -> Result<Self> {
        let e = LieElement::parse(text, text.matches(|c: char| c.is_ascii_alphabetic()).count().max(1))?;
        let mut it = e.coeffs.iter();
        match (it.next(), it.next()) {
            (Some((w, c)), None) if c.is_one() && w.render(&default_name) == normalize_ws(text) => Ok(w.clone()),
            _ => Err(Error::parse(0, format!("{text:?} is not a Hall basis word"))),
        }
    }
}

fn normalize_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    /// Witt's necklace count `(1/i) Σ_{d | i} μ(d) k^{i/d}`.
    fn witt(k: i64, i: u32) -> i64 {
        fn mobius(mut n: u32) -> i64 {
            let mut sign = 1;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    n /= p;
                    if n % p == 0 {
                        return 0;
                    }
                    sign = -sign;
                }
                p += 1;
            }
            if n > 1 {
                sign = -sign;
            }
            sign
        }
        let total: i64 = (1..=i).filter(|d| i % d == 0).map(|d| mobius(d) * k.pow(i / d)).sum();
        total / i as i64
    }

    fn x(n: usize) -> LieElement {
        LieElement::generator(n, 0)
    }
    fn y(n: usize) -> LieElement {
        LieElement::generator(n, 1)
    }

    #[test]
    fn hall_basis_small_cases() {
        let b = hall_basis(2, 1);
        assert_eq!(b, vec![vec![HallWord::letter(0), HallWord::letter(1)]]);
        let b = hall_basis(2, 2);
        assert_eq!(b[1].len(), 1);
        assert_eq!(b[1][0].to_string(), "[x1,x2]");
        assert_eq!(graded_dims(2, 4), vec![2, 1, 2, 3]);
    }

    #[test]
    fn dims_match_witt_formula() {
        for k in 1..=3 {
            for i in 1..=6u32 {
                assert_eq!(graded_dims(k, 6)[i as usize - 1] as i64, witt(k as i64, i), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn standard_bracketing_renders() {
        let words: Vec<String> = hall_basis(2, 3)[2].iter().map(ToString::to_string).collect();
        assert_eq!(words, ["[x1,[x1,x2]]", "[[x1,x2],x2]"]);
    }

    #[test]
    fn bracket_examples() {
        assert!(x(3).bracket(&x(3)).unwrap().is_zero());
        let xy = x(3).bracket(&y(3)).unwrap();
        assert_eq!(xy, LieElement::basis(3, HallWord::new(vec![0, 1]).unwrap()));
        // [y,[x,y]] = -[[x,y],y] = -P(xyy)
        let yxy = y(3).bracket(&xy).unwrap();
        assert_eq!(yxy, LieElement::basis(3, HallWord::new(vec![0, 1, 1]).unwrap()).neg());
        let oracle = TruncatedSeries::generator(3, 1).commutator(&xy.to_assoc());
        assert_eq!(yxy.to_assoc(), oracle);
        assert!(x(2).bracket(&x(3)).is_err());
    }

    #[test]
    fn truncation_discards_high_weight() {
        let xy = x(2).bracket(&y(2)).unwrap();
        assert!(x(2).bracket(&xy).unwrap().is_zero());
    }

    #[test]
    fn linear_structure() {
        assert!(x(2).scale(&int(0)).is_zero());
        assert_eq!(x(2).add(&x(2)), x(2).scale(&int(2)));
        let xy = x(2).bracket(&y(2)).unwrap();
        assert_eq!(xy.scale(&ratio(1, 2)).coeff(&HallWord::new(vec![0, 1]).unwrap()), ratio(1, 2));
    }

    #[test]
    fn weight_components() {
        let xy = x(3).bracket(&y(3)).unwrap();
        let a = x(3).add(&xy);
        assert_eq!(a.weight_component(2).unwrap(), xy);
        assert!(x(3).weight_component(3).unwrap().is_zero());
        assert!(a.weight_component(4).is_err());
        assert!(a.weight_component(0).is_err());
        let sum = (1..=3).fold(LieElement::zero(3), |s, i| s.add(&a.weight_component(i).unwrap()));
        assert_eq!(sum, a);
    }

    #[test]
    fn text_round_trip_and_parse_errors() {
        let e = LieElement::parse("x1 - 1/2*[x1,[x1,x2]] + 3·[x2,x1]", 3).unwrap();
        assert_eq!(e.to_string(), "x1 - 3·[x1,x2] - 1/2·[x1,[x1,x2]]");
        assert_eq!(LieElement::parse(&e.to_string(), 3).unwrap(), e);
        assert_eq!(LieElement::parse("0", 2).unwrap(), LieElement::zero(2));
        assert!(LieElement::parse("[x1,", 2).is_err());
        assert!(LieElement::parse("q7", 2).is_err());
        assert!(LieElement::parse("2", 2).is_err());
        assert_eq!(HallWord::parse("[x1,[x1,x2]]").unwrap().letters(), &[0, 0, 1]);
        assert!(HallWord::parse("[x2,x1]").is_err());
    }

    #[test]
    fn lyndon_words_are_lyndon_and_complete() {
        let ws = lyndon_words(3, 5);
        assert!(ws.iter().all(|w| is_lyndon(w)));
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        // brute force over all words
        let mut count = 0;
        for len in 1..=5u32 {
            for code in 0..3usize.pow(len) {
                let w: Vec<u8> = (0..len).map(|i| ((code / 3usize.pow(i)) % 3) as u8).collect();
                if is_lyndon(&w) {
                    count += 1;
                }
            }
        }
        assert_eq!(ws.len(), count);
    }

    #[test]
    fn from_assoc_rejects_non_lie() {
        let xx = TruncatedSeries::generator(3, 0).mul(&TruncatedSeries::generator(3, 1));
        assert_eq!(LieElement::from_assoc(&xx), Err(Error::NotPrimitive { weight: 2 }));
    }

    fn lie_element(k: u8, n: usize) -> impl Strategy<Value = LieElement> {
        let basis: Vec<HallWord> = hall_basis(k as usize, n).into_iter().flatten().collect();
        proptest::collection::vec(-3i64..4, basis.len()).prop_map(move |cs| {
            LieElement::from_terms(n, basis.iter().cloned().zip(cs.into_iter().map(int)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn antisymmetry(a in lie_element(3, 4), b in lie_element(3, 4)) {
            prop_assert_eq!(a.bracket(&b).unwrap(), b.bracket(&a).unwrap().neg());
        }

        #[test]
        fn jacobi(a in lie_element(2, 5), b in lie_element(2, 5), c in lie_element(2, 5)) {
            let t1 = a.bracket(&b.bracket(&c).unwrap()).unwrap();
            let t2 = b.bracket(&c.bracket(&a).unwrap()).unwrap();
            let t3 = c.bracket(&a.bracket(&b).unwrap()).unwrap();
            prop_assert!(t1.add(&t2).add(&t3).is_zero());
        }

        #[test]
        fn bracket_matches_associative_commutator(a in lie_element(3, 5), b in lie_element(3, 5)) {
            let lie = a.bracket(&b).unwrap();
            prop_assert_eq!(lie.to_assoc(), a.to_assoc().commutator(&b.to_assoc()));
            prop_assert_eq!(LieElement::from_assoc(&lie.to_assoc()).unwrap(), lie);
        }

        #[test]
        fn render_parse_round_trip(a in lie_element(3, 4)) {
            prop_assert_eq!(LieElement::parse(&a.to_string(), 4).unwrap(), a);
        }
    }
}
