//! Free commutative differential graded algebras over Q.
//!
//! A presentation is a finite list of generators of degree at least one
//! together with the differential of each generator. Elements are stored in
//! a canonical normal form: monomials are exponent vectors over the
//! generators sorted by `(degree, name)`, odd generators appear at most once,
//! and a monomial stands for the ordered product of its generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{extend_independent, kernel_basis, solve, RationalMatrix, SubspaceBasis};
use crate::expr::{parse_expr, ExprAlgebra};
use crate::rational::{join_terms, signed_term, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: usize) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }

    fn sort_key(&self) -> (usize, &str) {
        (self.degree, &self.name)
    }
}

/// Exponents of the generators in presentation order, trailing zeros
/// trimmed so that the unit is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of generator factors, counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// A linear combination of normal-form monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(q: Rational) -> Self {
        Polynomial::term(Monomial::one(), q)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Every monomial is a product of at least two generators.
    pub fn is_decomposable(&self) -> bool {
        self.terms.keys().all(|m| m.length() >= 2)
    }

    fn reindex(&self, map: &[usize], width: usize) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; width];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] = x;
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }
}

/// A free graded-commutative algebra `Λ(generators)` with a differential
/// given on generators and extended by the Leibniz rule.
#[derive(Clone, PartialEq, Eq)]
pub struct CdgaPresentation {
    generators: Vec<Generator>,
    differential: Vec<Polynomial>,
}

impl fmt::Debug for CdgaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", g.name, g.degree)?;
        }
        write!(f, ")")?;
        for (i, g) in self.generators.iter().enumerate() {
            if !self.differential[i].is_zero() {
                write!(f, " d{} = {};", g.name, self.render(&self.differential[i]))?;
            }
        }
        Ok(())
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl CdgaPresentation {
    /// The ground field `Q` (no generators).
    pub fn trivial() -> Self {
        CdgaPresentation {
            generators: Vec::new(),
            differential: Vec::new(),
        }
    }

    /// Builds `Λ(generators)` with `d(name) = expression` for the listed
    /// generators and `d = 0` on the others. Differentials must be
    /// homogeneous of degree one more than their generator.
    pub fn new(mut generators: Vec<Generator>, differential: &[(&str, &str)]) -> Result<Self> {
        for g in &generators {
            if !valid_name(&g.name) {
                return Err(Error::Cdga(format!("invalid generator name {:?}", g.name)));
            }
            if g.degree == 0 {
                return Err(Error::Degree(format!("generator {} has degree 0", g.name)));
            }
        }
        generators.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut names = BTreeSet::new();
        for g in &generators {
            if !names.insert(g.name.as_str()) {
                return Err(Error::Cdga(format!("duplicate generator {}", g.name)));
            }
        }
        let mut alg = CdgaPresentation {
            differential: vec![Polynomial::zero(); generators.len()],
            generators,
        };
        let mut seen = vec![false; alg.generators.len()];
        let mut diff = alg.differential.clone();
        for (name, src) in differential {
            let i = alg
                .index_of(name)
                .ok_or_else(|| Error::Cdga(format!("differential given for unknown generator {name}")))?;
            if seen[i] {
                return Err(Error::Cdga(format!("differential of {name} given twice")));
            }
            seen[i] = true;
            diff[i] = alg.parse(src)?;
        }
        alg.differential = diff;
        alg.check_degrees()?;
        Ok(alg)
    }

    /// Like [`new`](Self::new) but with differentials already written over
    /// `generators`, which must be sorted by `(degree, name)`.
    pub fn from_polynomials(generators: Vec<Generator>, differential: Vec<Polynomial>) -> Result<Self> {
        if generators.len() != differential.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} generators but {} differentials",
                generators.len(),
                differential.len()
            )));
        }
        for w in generators.windows(2) {
            if w[0].sort_key() >= w[1].sort_key() {
                return Err(Error::Cdga(format!(
                    "generators {} and {} are not strictly sorted by (degree, name)",
                    w[0].name, w[1].name
                )));
            }
        }
        let mut names = BTreeSet::new();
        for g in &generators {
            if !names.insert(g.name.as_str()) {
                return Err(Error::Cdga(format!("duplicate generator {}", g.name)));
            }
            if !valid_name(&g.name) || g.degree == 0 {
                return Err(Error::Cdga(format!("invalid generator {}:{}", g.name, g.degree)));
            }
        }
        let alg = CdgaPresentation {
            generators,
            differential,
        };
        for p in &alg.differential {
            if p.terms.keys().any(|m| m.exponents().len() > alg.generators.len()) {
                return Err(Error::Cdga("differential mentions an unknown generator".into()));
            }
        }
        alg.check_degrees()?;
        Ok(alg)
    }

    fn check_degrees(&self) -> Result<()> {
        for (g, p) in self.generators.iter().zip(&self.differential) {
            if p.terms.keys().any(|m| self.degree_of(m) != g.degree + 1) {
                return Err(Error::Degree(format!(
                    "d{} = {} is not homogeneous of degree {}",
                    g.name,
                    self.render(p),
                    g.degree + 1
                )));
            }
        }
        Ok(())
    }

    /// Adds generators with differentials written over the current
    /// generators. Returns the new presentation and where each generator
    /// went, old ones first and then the new ones in the order given.
    pub fn with_generators(&self, new: Vec<(Generator, Polynomial)>) -> Result<(Self, Vec<usize>)> {
        let k = self.generators.len();
        let mut all: Vec<(Generator, Polynomial, usize)> = self
            .generators
            .iter()
            .cloned()
            .zip(self.differential.iter().cloned())
            .enumerate()
            .map(|(i, (g, p))| (g, p, i))
            .collect();
        all.extend(new.into_iter().enumerate().map(|(j, (g, p))| (g, p, k + j)));
        all.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        let mut map = vec![0; all.len()];
        for (pos, (_, _, i)) in all.iter().enumerate() {
            map[*i] = pos;
        }
        let width = all.len();
        let (gens, diffs) = all
            .into_iter()
            .map(|(g, p, _)| (g, p.reindex(&map, width)))
            .unzip();
        let alg = CdgaPresentation::from_polynomials(gens, diffs)?;
        Ok((alg, map))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &[Polynomial] {
        &self.differential
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The generator with index `i` as an element.
    pub fn generator(&self, i: usize) -> Polynomial {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Polynomial::term(Monomial::from_exponents(e), Rational::one())
    }

    pub fn degree_of(&self, m: &Monomial) -> usize {
        m.exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| e as usize * self.generators[i].degree)
            .sum()
    }

    /// The common degree of the terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<usize> {
        let mut it = p.terms.keys().map(|m| self.degree_of(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn is_odd(&self, i: usize) -> bool {
        self.generators[i].degree % 2 == 1
    }

    /// `a·b` as a signed normal-form monomial, or `None` when an odd
    /// generator would appear twice.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let n = a.0.len().max(b.0.len());
        let mut negative = false;
        let mut odd_in_b_below = 0usize;
        let mut e = Vec::with_capacity(n);
        for i in 0..n {
            let (ea, eb) = (a.exponent(i), b.exponent(i));
            if self.is_odd(i) {
                if ea > 0 && eb > 0 {
                    return None;
                }
                if ea > 0 && odd_in_b_below % 2 == 1 {
                    negative = !negative;
                }
                if eb > 0 {
                    odd_in_b_below += 1;
                }
            }
            e.push(ea + eb);
        }
        Some((negative, Monomial::from_exponents(e)))
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &p.terms {
            for (b, cb) in &q.terms {
                if let Some((neg, m)) = self.mul_monomials(a, b) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Normal form of the product of generators in the order given, e.g.
    /// `b·a = -a·b` for odd `a`, `b`.
    pub fn monomial_normal_form(&self, word: &[usize]) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(Rational::one());
        for &i in word {
            if i >= self.generators.len() {
                return Err(Error::Cdga(format!("generator index {i} out of range")));
            }
            acc = self.mul(&acc, &self.generator(i));
        }
        Ok(acc)
    }

    fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero();
        let mut prefix_degree = 0usize;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 && !self.differential[i].is_zero() {
                let mut pre = m.0[..i].to_vec();
                pre.push(0);
                let mut rest = vec![0; m.0.len()];
                rest[i] = e - 1;
                rest[i + 1..].copy_from_slice(&m.0[i + 1..]);
                let left = Polynomial::term(Monomial::from_exponents(pre), Rational::from_integer(e.into()));
                let right = Polynomial::term(Monomial::from_exponents(rest), Rational::one());
                let t = self.mul(&self.mul(&left, &self.differential[i]), &right);
                out = if prefix_degree % 2 == 1 { out.sub(&t) } else { out.add(&t) };
            }
            prefix_degree += e as usize * self.generators[i].degree;
        }
        out
    }

    pub fn d(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &p.terms {
            out = out.add(&self.d_monomial(m).scale(c));
        }
        out
    }

    /// Verifies `d(d(g)) = 0` for every generator; reports the first
    /// failure with its residue.
    pub fn check_differential(&self) -> Result<()> {
        for (i, g) in self.generators.iter().enumerate() {
            let dd = self.d(&self.differential[i]);
            if !dd.is_zero() {
                return Err(Error::Cdga(format!("d(d{}) = {} is not zero", g.name, self.render(&dd))));
            }
        }
        Ok(())
    }

    /// All normal-form monomials of total degree `n`, sorted.
    pub fn degree_basis(&self, n: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = vec![0u32; self.generators.len()];
        self.enumerate(0, n, &mut e, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, i: usize, remaining: usize, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial::from_exponents(e.clone()));
            return;
        }
        if i == self.generators.len() {
            return;
        }
        let deg = self.generators[i].degree;
        let max = if self.is_odd(i) { 1 } else { remaining / deg };
        for k in 0..=max.min(remaining / deg) {
            e[i] = k as u32;
            self.enumerate(i + 1, remaining - k * deg, e, out);
        }
        e[i] = 0;
    }

    /// Coordinates of a homogeneous element in [`degree_basis`](Self::degree_basis).
    pub fn to_vector(&self, p: &Polynomial, basis: &[Monomial]) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in &p.terms {
            let i = basis
                .binary_search(m)
                .map_err(|_| Error::Degree(format!("{} is not in the requested degree", self.render_monomial(m))))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &[Rational], basis: &[Monomial]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in basis.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    /// Matrix of `d: A^n → A^{n+1}` in the degree bases.
    pub fn differential_matrix(&self, n: usize) -> RationalMatrix {
        let src = self.degree_basis(n);
        let dst = self.degree_basis(n + 1);
        let cols: Vec<Vec<Rational>> = src
            .iter()
            .map(|m| {
                self.to_vector(&self.d_monomial(m), &dst)
                    .expect("differential is homogeneous")
            })
            .collect();
        RationalMatrix::from_columns(dst.len(), &cols).expect("column lengths agree")
    }

    /// `H^n` with representative cocycles.
    pub fn cohomology(&self, n: usize) -> Cohomology {
        let basis = self.degree_basis(n);
        let d_out = self.differential_matrix(n);
        let d_in = if n == 0 {
            RationalMatrix::zeros(basis.len(), 0)
        } else {
            self.differential_matrix(n - 1)
        };
        let lower_basis = if n == 0 { Vec::new() } else { self.degree_basis(n - 1) };
        let cocycles = kernel_basis(&d_out);
        let boundaries: Vec<Vec<Rational>> = (0..d_in.cols()).map(|c| d_in.column(c)).collect();
        let keep = extend_independent(basis.len(), &boundaries, cocycles.vectors());
        let rep_vectors: Vec<Vec<Rational>> = keep.iter().map(|&i| cocycles.vectors()[i].clone()).collect();
        let representatives = rep_vectors.iter().map(|v| self.from_vector(v, &basis)).collect();
        Cohomology {
            degree: n,
            basis,
            lower_basis,
            d_out,
            d_in,
            rep_vectors,
            representatives,
        }
    }

    /// Minimality test for algebras without degree-one generators: every
    /// differential is decomposable.
    pub fn is_minimal_simply_connected(&self) -> Result<bool> {
        if let Some(g) = self.generators.iter().find(|g| g.degree == 1) {
            return Err(Error::Precondition(format!(
                "generator {} has degree 1; use the A(n,m) filtration check instead",
                g.name
            )));
        }
        Ok(self.differential.iter().all(Polynomial::is_decomposable))
    }

    fn graded_closure(&self, gens: &[Vec<Vec<Rational>>], bases: &[Vec<Monomial>]) -> GradedSubspace {
        let bound = bases.len() - 1;
        let mut spaces: Vec<SubspaceBasis> = Vec::with_capacity(bound + 1);
        spaces.push(SubspaceBasis::new(1, vec![vec![Rational::one()]]).expect("nonzero"));
        for k in 1..=bound {
            let mut vectors = gens[k].clone();
            for i in 1..k {
                for a in spaces[i].vectors() {
                    let pa = self.from_vector(a, &bases[i]);
                    for b in spaces[k - i].vectors() {
                        let pb = self.from_vector(b, &bases[k - i]);
                        let prod = self.mul(&pa, &pb);
                        vectors.push(self.to_vector(&prod, &bases[k]).expect("degrees add"));
                    }
                }
            }
            spaces.push(SubspaceBasis::span_of(bases[k].len(), &vectors).expect("lengths agree"));
        }
        GradedSubspace { spaces }
    }

    fn bases_through(&self, bound: usize) -> Vec<Vec<Monomial>> {
        (0..=bound).map(|k| self.degree_basis(k)).collect()
    }

    fn full_space(dim: usize) -> Vec<Vec<Rational>> {
        (0..dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = Rational::one();
                v
            })
            .collect()
    }

    /// `A(n)`: generated by `A^0, …, A^n` and `d(A^n)`; `A(-1) = Q·1`.
    /// Computed degreewise through `degree_bound`.
    pub fn filtered_subalgebra(&self, n: isize, degree_bound: usize) -> GradedSubspace {
        let bases = self.bases_through(degree_bound);
        self.filtered_with(n, &bases)
    }

    fn filtered_with(&self, n: isize, bases: &[Vec<Monomial>]) -> GradedSubspace {
        let bound = bases.len() - 1;
        let mut gens: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); bound + 1];
        if n >= 0 {
            let n = n as usize;
            for (k, g) in gens.iter_mut().enumerate().take(n.min(bound) + 1) {
                *g = Self::full_space(bases[k].len());
            }
            if n < bound {
                let d = self.differential_matrix(n);
                gens[n + 1].extend((0..d.cols()).map(|c| d.column(c)));
            }
        }
        self.graded_closure(&gens, bases)
    }

    /// `A(n,m)` through `degree_bound`: `A(n,0) = A(n-1)`, and `A(n,m+1)` is
    /// generated by `A(n,m)` and `{a ∈ A^n : da ∈ A(n,m)}`.
    pub fn filtration_stage(&self, n: usize, m: usize, degree_bound: usize) -> GradedSubspace {
        let inner = degree_bound.max(n + 1);
        let bases = self.bases_through(inner);
        let mut stage = self.filtered_with(n as isize - 1, &bases);
        for _ in 0..m {
            stage = self.next_stage(n, &stage, &bases);
        }
        stage.truncate(degree_bound);
        stage
    }

    fn next_stage(&self, n: usize, stage: &GradedSubspace, bases: &[Vec<Monomial>]) -> GradedSubspace {
        let d = self.differential_matrix(n);
        let target: Vec<Vec<Rational>> = stage.spaces[n + 1].vectors().to_vec();
        let t = RationalMatrix::from_columns(d.rows(), &target).expect("lengths agree");
        let stacked = d.hstack(&t).expect("rows agree");
        let preimage: Vec<Vec<Rational>> = kernel_basis(&stacked)
            .into_vectors()
            .into_iter()
            .map(|v| v[..d.cols()].to_vec())
            .collect();
        let mut gens: Vec<Vec<Vec<Rational>>> = stage.spaces.iter().map(|s| s.vectors().to_vec()).collect();
        gens[n].extend(preimage);
        self.graded_closure(&gens, bases)
    }

    /// Checks `A(n) = ⋃_m A(n,m)` for `1 ≤ n ≤ degree_bound`, in degrees up
    /// to `degree_bound`.
    pub fn satisfies_filtration_condition(&self, degree_bound: usize) -> bool {
        for n in 1..=degree_bound {
            let bases = self.bases_through(degree_bound.max(n + 1));
            let full = self.filtered_with(n as isize, &bases);
            let mut stage = self.filtered_with(n as isize - 1, &bases);
            loop {
                let next = self.next_stage(n, &stage, &bases);
                if next.dims() == stage.dims() {
                    break;
                }
                stage = next;
            }
            if stage.dims()[..=degree_bound] != full.dims()[..=degree_bound] {
                return false;
            }
        }
        true
    }

    /// Parses a polynomial such as `2*x^2*y - 1/3 z` in the generators.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        parse_expr(self, src)
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.generators[i].name.clone()),
                _ => parts.push(format!("{}^{}", self.generators[i].name, e)),
            }
        }
        parts.join("*")
    }

    /// E.g. `x^2*y - 1/2*z`; the empty sum is `0`.
    pub fn render(&self, p: &Polynomial) -> String {
        join_terms(
            p.terms
                .iter()
                .map(|(m, c)| signed_term(c, &self.render_monomial(m), "*")),
        )
    }
}

impl ExprAlgebra for CdgaPresentation {
    type Elem = Polynomial;

    fn scalar(&self, q: Rational) -> Polynomial {
        Polynomial::constant(q)
    }

    fn atom(&self, name: &str) -> Option<Polynomial> {
        self.index_of(name).map(|i| self.generator(i))
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }

    fn scale(&self, a: &Polynomial, q: &Rational) -> Polynomial {
        a.scale(q)
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        Ok(CdgaPresentation::mul(self, a, b))
    }
}

/// One cohomology group `H^n` together with the data needed to find the
/// class of a cocycle.
#[derive(Clone, Debug)]
pub struct Cohomology {
    degree: usize,
    basis: Vec<Monomial>,
    lower_basis: Vec<Monomial>,
    d_out: RationalMatrix,
    d_in: RationalMatrix,
    rep_vectors: Vec<Vec<Rational>>,
    representatives: Vec<Polynomial>,
}

impl Cohomology {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Cocycles whose classes form a basis, chosen from the echelon basis of
    /// the cocycles.
    pub fn representatives(&self) -> &[Polynomial] {
        &self.representatives
    }

    /// Coordinates of the class of `p` in the representative basis.
    pub fn class_coords(&self, alg: &CdgaPresentation, p: &Polynomial) -> Result<Vec<Rational>> {
        let v = alg.to_vector(p, &self.basis)?;
        if self.d_out.mul_vec(&v)?.iter().any(|x| !x.is_zero()) {
            return Err(Error::Cdga(format!("{} is not a cocycle", alg.render(p))));
        }
        let reps = RationalMatrix::from_columns(self.basis.len(), &self.rep_vectors)?;
        let m = reps.hstack(&self.d_in)?;
        let x = solve(&m, &v)?.ok_or_else(|| Error::Cdga("cocycle outside representative span".into()))?;
        Ok(x[..self.dim()].to_vec())
    }

    /// Some `q` with `dq = p`, or `None` if `p` is not exact.
    pub fn primitive(&self, alg: &CdgaPresentation, p: &Polynomial) -> Result<Option<Polynomial>> {
        let v = alg.to_vector(p, &self.basis)?;
        Ok(solve(&self.d_in, &v)?.map(|x| alg.from_vector(&x, &self.lower_basis)))
    }
}

/// A subspace of each degree `0..=bound`, in the coordinates of
/// [`CdgaPresentation::degree_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    spaces: Vec<SubspaceBasis>,
}

impl GradedSubspace {
    pub fn spaces(&self) -> &[SubspaceBasis] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(SubspaceBasis::dim).collect()
    }

    pub fn contains(&self, alg: &CdgaPresentation, p: &Polynomial) -> Result<bool> {
        let Some(n) = alg.homogeneous_degree(p) else {
            return Ok(p.is_zero());
        };
        let Some(space) = self.spaces.get(n) else {
            return Err(Error::Degree(format!("degree {n} beyond the computed bound")));
        };
        Ok(space.contains(&alg.to_vector(p, &alg.degree_basis(n))?))
    }

    fn truncate(&mut self, bound: usize) {
        self.spaces.truncate(bound + 1);
    }
}

/// What the minimal-model construction needs from the algebra it maps into.
/// Elements may be inhomogeneous; the degree is passed where it matters.
pub trait CochainAlgebra {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn d(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Cocycles whose classes form a basis of `H^n`.
    fn cohomology_basis(&self, n: usize) -> Result<Vec<Self::Elem>>;
    /// Coordinates of the classes of degree-`n` cocycles in that basis.
    fn class_coords(&self, n: usize, cocycles: &[Self::Elem]) -> Result<Vec<Vec<Rational>>>;
    /// A primitive of an exact degree-`n` element; an error if none exists.
    fn primitive(&self, n: usize, a: &Self::Elem) -> Result<Self::Elem>;
}

impl CochainAlgebra for CdgaPresentation {
    type Elem = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    fn unit(&self) -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }

    fn scale(&self, a: &Polynomial, q: &Rational) -> Polynomial {
        a.scale(q)
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        Ok(CdgaPresentation::mul(self, a, b))
    }

    fn d(&self, a: &Polynomial) -> Result<Polynomial> {
        Ok(CdgaPresentation::d(self, a))
    }

    fn is_zero(&self, a: &Polynomial) -> bool {
        a.is_zero()
    }

    fn cohomology_basis(&self, n: usize) -> Result<Vec<Polynomial>> {
        Ok(self.cohomology(n).representatives)
    }

    fn class_coords(&self, n: usize, cocycles: &[Polynomial]) -> Result<Vec<Vec<Rational>>> {
        let h = self.cohomology(n);
        cocycles.iter().map(|p| h.class_coords(self, p)).collect()
    }

    fn primitive(&self, n: usize, a: &Polynomial) -> Result<Polynomial> {
        self.cohomology(n)
            .primitive(self, a)?
            .ok_or_else(|| Error::Cdga(format!("{} is not exact", self.render(a))))
    }
}

/// Evaluates `p` under the algebra map sending generator `i` to `images[i]`.
pub fn evaluate<T: CochainAlgebra>(target: &T, p: &Polynomial, images: &[T::Elem]) -> Result<T::Elem> {
    let mut acc = target.zero();
    for (m, c) in p.terms() {
        let mut prod = target.unit();
        for (i, &e) in m.exponents().iter().enumerate() {
            let img = images
                .get(i)
                .ok_or_else(|| Error::Cdga(format!("no image for generator {i}")))?;
            for _ in 0..e {
                prod = target.mul(&prod, img)?;
            }
        }
        acc = target.add(&acc, &target.scale(&prod, c));
    }
    Ok(acc)
}

/// Rank of the map `H^n(source) → H^n(target)` induced by `images`, and the
/// dimensions of both sides.
pub fn induced_rank<T: CochainAlgebra>(
    source: &CdgaPresentation,
    target: &T,
    images: &[T::Elem],
    n: usize,
) -> Result<(usize, usize, usize)> {
    let hs = source.cohomology(n);
    let mapped = hs
        .representatives()
        .iter()
        .map(|r| evaluate(target, r, images))
        .collect::<Result<Vec<_>>>()?;
    let dim_t = target.cohomology_basis(n)?.len();
    let coords = target.class_coords(n, &mapped)?;
    let rank = RationalMatrix::from_columns(dim_t, &coords)?.rank();
    Ok((rank, hs.dim(), dim_t))
}

/// Checks `f(dg) = d f(g)` on every generator, reporting the first failure.
pub fn check_chain_map<T: CochainAlgebra>(source: &CdgaPresentation, target: &T, images: &[T::Elem]) -> Result<()> {
    if images.len() != source.generators().len() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            images.len(),
            source.generators().len()
        )));
    }
    for (i, g) in source.generators().iter().enumerate() {
        let lhs = evaluate(target, &source.differential()[i], images)?;
        let rhs = target.d(&images[i])?;
        let diff = target.add(&lhs, &target.scale(&rhs, &-Rational::one()));
        if !target.is_zero(&diff) {
            return Err(Error::Cdga(format!("f(d{0}) differs from d(f({0}))", g.name)));
        }
    }
    Ok(())
}

/// Whether `images` define a chain map inducing isomorphisms on `H^n` for
/// every `n ≤ up_to`.
pub fn is_quasi_iso_into<T: CochainAlgebra>(
    source: &CdgaPresentation,
    target: &T,
    images: &[T::Elem],
    up_to: usize,
) -> Result<bool> {
    if check_chain_map(source, target, images).is_err() {
        return Ok(false);
    }
    for n in 0..=up_to {
        let (rank, ds, dt) = induced_rank(source, target, images, n)?;
        if rank != ds || rank != dt {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A map of free cdgas given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaMorphism {
    source: CdgaPresentation,
    target: CdgaPresentation,
    images: Vec<Polynomial>,
}

impl CdgaMorphism {
    /// Generators not listed go to zero. Images must have the degree of
    /// their generator.
    pub fn new(source: CdgaPresentation, target: CdgaPresentation, assignment: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![Polynomial::zero(); source.generators().len()];
        for (name, src) in assignment {
            let i = source
                .index_of(name)
                .ok_or_else(|| Error::Cdga(format!("unknown source generator {name}")))?;
            images[i] = target.parse(src)?;
        }
        Self::from_images(source, target, images)
    }

    pub fn from_images(source: CdgaPresentation, target: CdgaPresentation, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        for (g, p) in source.generators().iter().zip(&images) {
            if p.terms().keys().any(|m| target.degree_of(m) != g.degree) {
                return Err(Error::Degree(format!(
                    "image {} of {} is not of degree {}",
                    target.render(p),
                    g.name,
                    g.degree
                )));
            }
        }
        Ok(CdgaMorphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(alg: &CdgaPresentation) -> Self {
        let images = (0..alg.generators().len()).map(|i| alg.generator(i)).collect();
        CdgaMorphism {
            source: alg.clone(),
            target: alg.clone(),
            images,
        }
    }

    pub fn source(&self) -> &CdgaPresentation {
        &self.source
    }

    pub fn target(&self) -> &CdgaPresentation {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        evaluate(&self.target, p, &self.images)
    }

    pub fn check_chain_map(&self) -> Result<()> {
        check_chain_map(&self.source, &self.target, &self.images)
    }

    /// `H^n(f)` bijective for all `n ≤ up_to` (and `f` a chain map).
    pub fn is_quasi_iso(&self, up_to: usize) -> Result<bool> {
        is_quasi_iso_into(&self.source, &self.target, &self.images, up_to)
    }
}

impl fmt::Display for CdgaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `T(n)`: free on `a` of degree `n` and `b = da` of degree `n + 1`.
pub fn contractible(n: usize) -> Result<CdgaPresentation> {
    CdgaPresentation::new(vec![Generator::new("a", n), Generator::new("b", n + 1)], &[("a", "b")])
}
