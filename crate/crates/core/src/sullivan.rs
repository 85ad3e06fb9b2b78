//! Polynomial de Rham forms and Sullivan models.
//!
//! `∇_n = Q[t_1..t_n] ⊗ Λ(dt_1..dt_n)` with `t_0 = 1 - Σ t_i` eliminated,
//! `t_i` in degree 0 and `dt_i` in degree 1. A form on a simplicial set `X`
//! is a compatible choice of forms on its simplices; it is stored through
//! its values on nondegenerate simplices. The infinite-dimensional complex
//! `A_PL(X)` is studied through its subcomplexes `F_D` of forms of
//! polynomial degree at most `D` (t-exponents plus one per `dt`).

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::{One, Zero};

use crate::cdga::{
    evaluate, is_quasi_iso_into, CdgaMorphism, CdgaPresentation, CochainAlgebra, Generator, Polynomial,
};
use crate::error::{Error, Result};
use crate::exactalg::{extend_independent, kernel_basis, solve, RationalMatrix};
use crate::expr::{parse_expr, ExprAlgebra};
use crate::rational::{join_terms, signed_term, Rational};
use crate::simplicial::FiniteSimplicialSet;

const MAX_SIMPLEX_DIM: usize = 63;

/// `t^a · dt_{i1} ⋯ dt_{ik}` with `i1 < … < ik`; bit `i - 1` of `dt` marks
/// `dt_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormMonomial {
    t: Vec<u32>,
    dt: u64,
}

impl FormMonomial {
    pub fn t_exponents(&self) -> &[u32] {
        &self.t
    }

    pub fn dt_mask(&self) -> u64 {
        self.dt
    }

    pub fn form_degree(&self) -> usize {
        self.dt.count_ones() as usize
    }

    pub fn poly_degree(&self) -> usize {
        self.t.iter().map(|&e| e as usize).sum::<usize>() + self.form_degree()
    }
}

/// An element of `∇_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialForm {
    dim: usize,
    terms: BTreeMap<FormMonomial, Rational>,
}

impl fmt::Debug for PolynomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolynomialForm(Δ{}; {})", self.dim, self.render())
    }
}

impl fmt::Display for PolynomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n > MAX_SIMPLEX_DIM {
        return Err(Error::Precondition(format!("simplex dimension {n} exceeds {MAX_SIMPLEX_DIM}")));
    }
    Ok(())
}

/// Sign and union of `dt^a · dt^b`, `None` if they share a factor.
fn wedge_masks(a: u64, b: u64) -> Option<(bool, u64)> {
    if a & b != 0 {
        return None;
    }
    let mut negative = false;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        // dt_i moves left past the factors of a above it
        if (a >> i).count_ones() % 2 == 1 {
            negative = !negative;
        }
        rest &= rest - 1;
    }
    Some((negative, a | b))
}

impl PolynomialForm {
    pub fn zero(dim: usize) -> Self {
        PolynomialForm {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, q: Rational) -> Self {
        let mut f = Self::zero(dim);
        f.add_term(
            FormMonomial {
                t: vec![0; dim],
                dt: 0,
            },
            q,
        );
        f
    }

    pub fn monomial(dim: usize, m: FormMonomial, c: Rational) -> Result<Self> {
        if m.t.len() != dim || (dim < 64 && m.dt >> dim != 0) {
            return Err(Error::DimensionMismatch(format!("monomial does not live on Δ{dim}")));
        }
        let mut f = Self::zero(dim);
        f.add_term(m, c);
        Ok(f)
    }

    /// `t_i` for `0 ≤ i ≤ dim`, with `t_0 = 1 - t_1 - … - t_n`.
    pub fn t(dim: usize, i: usize) -> Result<Self> {
        check_dim(dim)?;
        if i > dim {
            return Err(Error::Precondition(format!("t{i} does not exist on Δ{dim}")));
        }
        if i == 0 {
            let mut f = Self::constant(dim, Rational::one());
            for k in 1..=dim {
                f = f.sub(&Self::t(dim, k)?);
            }
            return Ok(f);
        }
        let mut t = vec![0; dim];
        t[i - 1] = 1;
        Self::monomial(dim, FormMonomial { t, dt: 0 }, Rational::one())
    }

    /// `dt_i`, with `dt_0 = -dt_1 - … - dt_n`.
    pub fn dt(dim: usize, i: usize) -> Result<Self> {
        Ok(Self::t(dim, i)?.d())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<FormMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: FormMonomial, c: Rational) {
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

    /// Common form degree of the terms; `None` for zero or mixed forms.
    pub fn form_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(FormMonomial::form_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Largest polynomial degree of a term (0 for the zero form).
    pub fn poly_degree(&self) -> usize {
        self.terms.keys().map(FormMonomial::poly_degree).max().unwrap_or(0)
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "forms on Δ{} and Δ{}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Sum; both forms must live on the same simplex (the zero form on any
    /// simplex is accepted).
    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        debug_assert_eq!(self.dim, other.dim);
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
            return Self::zero(self.dim);
        }
        PolynomialForm {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let Some((neg, dt)) = wedge_masks(a.dt, b.dt) else {
                    continue;
                };
                let t = a.t.iter().zip(&b.t).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                out.add_term(FormMonomial { t, dt }, if neg { -c } else { c });
            }
        }
        Ok(out)
    }

    /// `d(t^a dt^S) = Σ a_i t^{a - e_i} dt_i dt^S`.
    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            for i in 0..self.dim {
                if m.t[i] == 0 {
                    continue;
                }
                let Some((neg, dt)) = wedge_masks(1 << i, m.dt) else {
                    continue;
                };
                let mut t = m.t.clone();
                t[i] -= 1;
                let coeff = c * Rational::from_integer(m.t[i].into());
                out.add_term(FormMonomial { t, dt }, if neg { -coeff } else { coeff });
            }
        }
        out
    }

    /// The image under the algebra map `∇_n → ∇_m` sending `t_i` to
    /// `images[i - 1]` (0-forms on `Δ^m`) and `dt_i` to their differentials.
    pub fn substitute(&self, target_dim: usize, images: &[PolynomialForm]) -> Result<Self> {
        if images.len() != self.dim || images.iter().any(|f| !f.is_zero() && f.dim != target_dim) {
            return Err(Error::DimensionMismatch("substitution does not match the simplices".into()));
        }
        let diffs: Vec<PolynomialForm> = images.iter().map(PolynomialForm::d).collect();
        let one = Self::constant(target_dim, Rational::one());
        let mut powers: BTreeMap<(usize, u32), PolynomialForm> = BTreeMap::new();
        let mut out = Self::zero(target_dim);
        for (m, c) in &self.terms {
            let mut acc = one.clone();
            for (i, &e) in m.t.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match powers.entry((i, e)) {
                    Entry::Occupied(p) => p.into_mut(),
                    Entry::Vacant(slot) => {
                        let mut p = one.clone();
                        for _ in 0..e {
                            p = p.mul(&lift(&images[i], target_dim))?;
                        }
                        slot.insert(p)
                    }
                };
                acc = acc.mul(p)?;
            }
            for (i, diff) in diffs.iter().enumerate() {
                if m.dt & (1 << i) != 0 {
                    acc = acc.mul(&lift(diff, target_dim))?;
                }
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// Pullback along the face map `d_j: ∇_n → ∇_{n-1}`:
    /// `t_i ↦ t_i (i < j), 0 (i = j), t_{i-1} (i > j)`.
    pub fn face_pullback(&self, j: usize) -> Result<Self> {
        let n = self.dim;
        if n == 0 || j > n {
            return Err(Error::Precondition(format!("face d_{j} of Δ{n}")));
        }
        let images = (1..=n)
            .map(|i| match i.cmp(&j) {
                core::cmp::Ordering::Less => Self::t(n - 1, i),
                core::cmp::Ordering::Equal => Ok(Self::zero(n - 1)),
                core::cmp::Ordering::Greater => Self::t(n - 1, i - 1),
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute(n - 1, &images)
    }

    /// Pullback along the degeneracy `s_j: ∇_n → ∇_{n+1}`:
    /// `t_i ↦ t_i (i < j), t_i + t_{i+1} (i = j), t_{i+1} (i > j)`.
    pub fn degeneracy_pullback(&self, j: usize) -> Result<Self> {
        let n = self.dim;
        check_dim(n + 1)?;
        if j > n {
            return Err(Error::Precondition(format!("degeneracy s_{j} of Δ{n}")));
        }
        let images = (1..=n)
            .map(|i| match i.cmp(&j) {
                core::cmp::Ordering::Less => Self::t(n + 1, i),
                core::cmp::Ordering::Equal => Ok(Self::t(n + 1, i)?.add(&Self::t(n + 1, i + 1)?)),
                core::cmp::Ordering::Greater => Self::t(n + 1, i + 1),
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute(n + 1, &images)
    }

    /// Parses e.g. `t1^2*dt1 - 1/2 t0 dt2` on `Δ^dim`.
    pub fn parse(dim: usize, src: &str) -> Result<Self> {
        check_dim(dim)?;
        parse_expr(&FormAlgebra { dim }, src)
    }

    /// E.g. `t1^2*dt1 + 3*dt1*dt2`; the zero form is `0`.
    pub fn render(&self) -> String {
        join_terms(self.terms.iter().map(|(m, c)| {
            let mut parts = Vec::new();
            for (i, &e) in m.t.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("t{}", i + 1)),
                    _ => parts.push(format!("t{}^{}", i + 1, e)),
                }
            }
            for i in 0..self.dim {
                if m.dt & (1 << i) != 0 {
                    parts.push(format!("dt{}", i + 1));
                }
            }
            signed_term(c, &parts.join("*"), "*")
        }))
    }
}

fn lift(f: &PolynomialForm, dim: usize) -> PolynomialForm {
    if f.is_zero() {
        PolynomialForm::zero(dim)
    } else {
        f.clone()
    }
}

struct FormAlgebra {
    dim: usize,
}

impl ExprAlgebra for FormAlgebra {
    type Elem = PolynomialForm;

    fn scalar(&self, q: Rational) -> PolynomialForm {
        PolynomialForm::constant(self.dim, q)
    }

    fn atom(&self, name: &str) -> Option<PolynomialForm> {
        let (d, rest) = match name.strip_prefix("dt") {
            Some(rest) => (true, rest),
            None => (false, name.strip_prefix('t')?),
        };
        if rest.is_empty() || (rest.len() > 1 && rest.starts_with('0')) {
            return None;
        }
        let i: usize = rest.parse().ok()?;
        let t = PolynomialForm::t(self.dim, i).ok()?;
        Some(if d { t.d() } else { t })
    }

    fn add(&self, a: &PolynomialForm, b: &PolynomialForm) -> PolynomialForm {
        a.add(b)
    }

    fn scale(&self, a: &PolynomialForm, q: &Rational) -> PolynomialForm {
        a.scale(q)
    }

    fn mul(&self, a: &PolynomialForm, b: &PolynomialForm) -> Result<PolynomialForm> {
        a.mul(b)
    }
}

/// The algebra `∇_n` of polynomial forms on `Δ^n`, degreewise filtered by
/// polynomial degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nabla {
    dim: usize,
}

/// `∇_n`; `∇_0 = Q`.
pub fn nabla(n: usize) -> Result<Nabla> {
    check_dim(n)?;
    Ok(Nabla { dim: n })
}

impl Nabla {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Monomials of form degree `m` and polynomial degree at most `d_max`,
    /// sorted.
    pub fn basis(&self, m: usize, d_max: usize) -> Vec<FormMonomial> {
        let n = self.dim;
        if m > n || m > d_max {
            return Vec::new();
        }
        let mut ts = Vec::new();
        let mut cur = vec![0u32; n];
        t_exponents(0, d_max - m, &mut cur, &mut ts);
        let masks: Vec<u64> = (0u64..(1u64 << n)).filter(|x| x.count_ones() as usize == m).collect();
        let mut out = Vec::with_capacity(ts.len() * masks.len());
        for t in &ts {
            for &dt in &masks {
                out.push(FormMonomial { t: t.clone(), dt });
            }
        }
        out.sort();
        out
    }

    /// `dim H^m` of the subcomplex of polynomial degree at most `d_max`.
    pub fn cohomology_dim(&self, m: usize, d_max: usize) -> usize {
        let rank_out = self.d_rank(m, d_max);
        let rank_in = if m == 0 { 0 } else { self.d_rank(m - 1, d_max) };
        self.basis(m, d_max).len() - rank_out - rank_in
    }

    fn d_rank(&self, m: usize, d_max: usize) -> usize {
        let src = self.basis(m, d_max);
        let dst = self.basis(m + 1, d_max);
        let cols: Vec<Vec<Rational>> = src
            .iter()
            .map(|mono| {
                let f = PolynomialForm::monomial(self.dim, mono.clone(), Rational::one()).expect("basis monomial");
                let mut v = vec![Rational::zero(); dst.len()];
                for (k, c) in f.d().terms {
                    v[dst.binary_search(&k).expect("d preserves the filtration")] = c;
                }
                v
            })
            .collect();
        RationalMatrix::from_columns(dst.len(), &cols).expect("lengths agree").rank()
    }
}

fn t_exponents(i: usize, budget: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == cur.len() {
        out.push(cur.clone());
        return;
    }
    for e in 0..=budget {
        cur[i] = e as u32;
        t_exponents(i + 1, budget - e, cur, out);
    }
    cur[i] = 0;
}

/// A form on `X`: one polynomial form per nondegenerate simplex, in the
/// order of [`AplComplex::cells`]. Values on degenerate simplices are the
/// degeneracy pullbacks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlobalForm {
    forms: Vec<PolynomialForm>,
}

impl GlobalForm {
    pub fn forms(&self) -> &[PolynomialForm] {
        &self.forms
    }

    pub fn is_zero(&self) -> bool {
        self.forms.iter().all(PolynomialForm::is_zero)
    }

    pub fn poly_degree(&self) -> usize {
        self.forms.iter().map(PolynomialForm::poly_degree).max().unwrap_or(0)
    }

    pub fn d(&self) -> Self {
        GlobalForm {
            forms: self.forms.iter().map(PolynomialForm::d).collect(),
        }
    }
}

type Vectors = Vec<Vec<Rational>>;

struct Layout {
    offsets: Vec<usize>,
    monomials: Vec<Vec<FormMonomial>>,
    len: usize,
}

/// A basis of `F_D A_PL(X)^m` together with its coordinates.
struct Piece {
    layout: Layout,
    basis: Vec<Vec<Rational>>,
}

/// `A_PL(X)` for a validated finite simplicial set, with the polynomial
/// degree filtration and the bound `d_max` used for cohomology.
#[derive(Debug)]
pub struct AplComplex {
    cells: Vec<(usize, usize)>,
    /// For each cell and face `j`: the cell of the nondegenerate root of
    /// `d_j σ` and the degeneracies leading back to `d_j σ`.
    faces: Vec<Vec<(usize, Vec<usize>)>>,
    simplicial_betti: Vec<usize>,
    d_max: usize,
    stable: RefCell<BTreeMap<usize, AplCohomology>>,
}

/// Outcome of `H^n(F_D A_PL(X))` for `D = n, n+1, …, D_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AplCohomology {
    pub degree: usize,
    /// `(D, dim H^n(F_D))` for every `D` computed.
    pub values: Vec<(usize, usize)>,
    /// First `D` such that `D` and `D + 1` agree, with the common value.
    pub stabilized: Option<(usize, usize)>,
    /// `dim H^n(X; Q)` from the simplicial chain complex.
    pub simplicial: usize,
}

impl AplCohomology {
    /// The stabilized value, or an inconclusive error.
    pub fn value(&self) -> Result<usize> {
        self.stabilized.map(|(_, v)| v).ok_or_else(|| {
            Error::Inconclusive(format!(
                "H^{} of A_PL did not stabilize for D ≤ {}",
                self.degree,
                self.values.last().map_or(0, |v| v.0)
            ))
        })
    }

    /// Stabilized and equal to simplicial cohomology.
    pub fn matches_simplicial(&self) -> bool {
        self.stabilized.is_some_and(|(_, v)| v == self.simplicial)
    }
}

impl AplComplex {
    pub fn new(x: &FiniteSimplicialSet, d_max: usize) -> Result<Self> {
        x.validate()?;
        let mut cells = Vec::new();
        let mut index = BTreeMap::new();
        for k in 0..=x.dimension_bound() {
            check_dim(k)?;
            for id in x.nondegenerate(k) {
                index.insert((k, id), cells.len());
                cells.push((k, id));
            }
        }
        let mut faces = Vec::with_capacity(cells.len());
        for &(k, id) in &cells {
            let mut row = Vec::new();
            if k > 0 {
                for j in 0..=k {
                    let root = x.root(k - 1, x.face(k, id, j))?;
                    row.push((index[&(root.base_dim, root.base)], root.ops));
                }
            }
            faces.push(row);
        }
        let betti = x.cohomology();
        let simplicial_betti = (0..=x.dimension_bound()).map(|k| betti.get(k)).collect();
        Ok(AplComplex {
            cells,
            faces,
            simplicial_betti,
            d_max,
            stable: RefCell::new(BTreeMap::new()),
        })
    }

    /// Nondegenerate simplices `(dimension, id)` in the order used by
    /// [`GlobalForm`].
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn zero_form(&self) -> GlobalForm {
        GlobalForm {
            forms: self.cells.iter().map(|&(k, _)| PolynomialForm::zero(k)).collect(),
        }
    }

    /// Builds a global form from its values on nondegenerate simplices,
    /// checking compatibility with faces.
    pub fn global_form(&self, forms: Vec<PolynomialForm>) -> Result<GlobalForm> {
        if forms.len() != self.cells.len() || forms.iter().zip(&self.cells).any(|(f, c)| f.dim != c.0) {
            return Err(Error::DimensionMismatch("one form per nondegenerate simplex".into()));
        }
        let g = GlobalForm { forms };
        self.check_compatible(&g)?;
        Ok(g)
    }

    fn check_compatible(&self, g: &GlobalForm) -> Result<()> {
        for (c, &(k, id)) in self.cells.iter().enumerate() {
            for (j, (base, ops)) in self.faces[c].iter().enumerate() {
                let mut expected = g.forms[*base].clone();
                for &op in ops {
                    expected = expected.degeneracy_pullback(op)?;
                }
                if g.forms[c].face_pullback(j)? != lift(&expected, k - 1) {
                    return Err(Error::Simplicial(format!(
                        "form on {k}-simplex {id} does not restrict along d_{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn layout(&self, m: usize, d: usize) -> Layout {
        let mut offsets = Vec::with_capacity(self.cells.len());
        let mut monomials = Vec::with_capacity(self.cells.len());
        let mut len = 0;
        for &(k, _) in &self.cells {
            offsets.push(len);
            let b = Nabla { dim: k }.basis(m, d);
            len += b.len();
            monomials.push(b);
        }
        Layout {
            offsets,
            monomials,
            len,
        }
    }

    fn flatten(&self, g: &GlobalForm, l: &Layout) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); l.len];
        for (c, f) in g.forms.iter().enumerate() {
            for (m, q) in &f.terms {
                let i = l.monomials[c]
                    .binary_search(m)
                    .map_err(|_| Error::Degree("form outside the requested degree and filtration".into()))?;
                v[l.offsets[c] + i] = q.clone();
            }
        }
        Ok(v)
    }

    fn unflatten(&self, v: &[Rational], l: &Layout) -> GlobalForm {
        let forms = self
            .cells
            .iter()
            .enumerate()
            .map(|(c, &(k, _))| {
                let mut f = PolynomialForm::zero(k);
                for (i, m) in l.monomials[c].iter().enumerate() {
                    f.add_term(m.clone(), v[l.offsets[c] + i].clone());
                }
                f
            })
            .collect();
        GlobalForm { forms }
    }

    fn piece(&self, m: usize, d: usize) -> Result<Piece> {
        let layout = self.layout(m, d);
        let mut rows: BTreeMap<(usize, usize, FormMonomial), usize> = BTreeMap::new();
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (c, &(k, _)) in self.cells.iter().enumerate() {
            for (j, (base, ops)) in self.faces[c].iter().enumerate() {
                let mut push = |col: usize, f: PolynomialForm, sign: bool| {
                    for (mono, q) in f.terms {
                        let next = rows.len();
                        let r = *rows.entry((c, j, mono)).or_insert(next);
                        entries.push((r, col, if sign { -q } else { q }));
                    }
                };
                for (i, mono) in layout.monomials[c].iter().enumerate() {
                    let f = PolynomialForm::monomial(k, mono.clone(), Rational::one())?.face_pullback(j)?;
                    push(layout.offsets[c] + i, f, false);
                }
                let base_dim = self.cells[*base].0;
                for (i, mono) in layout.monomials[*base].iter().enumerate() {
                    let mut f = PolynomialForm::monomial(base_dim, mono.clone(), Rational::one())?;
                    for &op in ops {
                        f = f.degeneracy_pullback(op)?;
                    }
                    push(layout.offsets[*base] + i, f, true);
                }
            }
        }
        let mut mat = RationalMatrix::zeros(rows.len(), layout.len);
        for (r, c, q) in entries {
            mat[(r, c)] += q;
        }
        let basis = kernel_basis(&mat).into_vectors();
        Ok(Piece { layout, basis })
    }

    /// Images under `d` of the basis of a piece, in the coordinates of
    /// degree `m + 1` at the same filtration level.
    fn d_columns(&self, piece: &Piece, m: usize, d: usize) -> Result<(Layout, Vec<Vec<Rational>>)> {
        let target = self.layout(m + 1, d);
        let cols = piece
            .basis
            .iter()
            .map(|v| self.flatten(&self.unflatten(v, &piece.layout).d(), &target))
            .collect::<Result<Vec<_>>>()?;
        Ok((target, cols))
    }

    /// A basis of the degree-`m` part of `F_D A_PL(X)`.
    pub fn basis(&self, m: usize, d: usize) -> Result<Vec<GlobalForm>> {
        let p = self.piece(m, d)?;
        Ok(p.basis.iter().map(|v| self.unflatten(v, &p.layout)).collect())
    }

    /// `dim H^n(F_D A_PL(X))`.
    pub fn filtered_cohomology_dim(&self, n: usize, d: usize) -> Result<usize> {
        let top = self.piece(n, d)?;
        let (l, out) = self.d_columns(&top, n, d)?;
        let rank_out = RationalMatrix::from_columns(l.len, &out)?.rank();
        let rank_in = if n == 0 {
            0
        } else {
            let low = self.piece(n - 1, d)?;
            let (l, cols) = self.d_columns(&low, n - 1, d)?;
            RationalMatrix::from_columns(l.len, &cols)?.rank()
        };
        Ok(top.basis.len() - rank_out - rank_in)
    }

    /// `H^n(F_D)` for `D = n, n+1, …` up to `d_max`, stopping at the first
    /// two consecutive equal values.
    pub fn cohomology(&self, n: usize) -> Result<AplCohomology> {
        if let Some(c) = self.stable.borrow().get(&n) {
            return Ok(c.clone());
        }
        let mut values: Vec<(usize, usize)> = Vec::new();
        let mut stabilized = None;
        for d in n..=self.d_max.max(n) {
            let h = self.filtered_cohomology_dim(n, d)?;
            if let Some(&(prev_d, prev)) = values.last() {
                if prev == h {
                    stabilized = Some((prev_d, h));
                    values.push((d, h));
                    break;
                }
            }
            values.push((d, h));
        }
        let result = AplCohomology {
            degree: n,
            values,
            stabilized,
            simplicial: self.simplicial_betti.get(n).copied().unwrap_or(0),
        };
        self.stable.borrow_mut().insert(n, result.clone());
        Ok(result)
    }

    fn stable_level(&self, n: usize) -> Result<usize> {
        let c = self.cohomology(n)?;
        c.value()?;
        Ok(c.stabilized.expect("checked").0)
    }

    /// Layout of `F_D A^n`, a cocycle basis and a boundary spanning set.
    fn cohomology_data(&self, n: usize, d: usize) -> Result<(Layout, Vectors, Vectors)> {
        let top = self.piece(n, d)?;
        let (l_out, out) = self.d_columns(&top, n, d)?;
        let dmat = RationalMatrix::from_columns(l_out.len, &out)?;
        let cocycles: Vec<Vec<Rational>> = kernel_basis(&dmat)
            .into_vectors()
            .into_iter()
            .map(|k| combine(&top.basis, &k, top.layout.len))
            .collect();
        let boundaries = if n == 0 {
            Vec::new()
        } else {
            let low = self.piece(n - 1, d)?;
            self.d_columns(&low, n - 1, d)?.1
        };
        Ok((top.layout, cocycles, boundaries))
    }
}

fn combine(basis: &[Vec<Rational>], coeffs: &[Rational], len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    v
}

/// `H^n(A_PL(X))` by the polynomial-degree filtration, for `D ≤ D_max`.
pub fn apl_cohomology(x: &FiniteSimplicialSet, n: usize, d_max: usize) -> Result<AplCohomology> {
    AplComplex::new(x, d_max)?.cohomology(n)
}

/// A basis of the degree-`m` part of `F_D A_PL(X)`.
pub fn apl_basis(x: &FiniteSimplicialSet, m: usize, d: usize) -> Result<Vec<GlobalForm>> {
    AplComplex::new(x, d)?.basis(m, d)
}

impl CochainAlgebra for AplComplex {
    type Elem = GlobalForm;

    fn zero(&self) -> GlobalForm {
        self.zero_form()
    }

    fn unit(&self) -> GlobalForm {
        GlobalForm {
            forms: self
                .cells
                .iter()
                .map(|&(k, _)| PolynomialForm::constant(k, Rational::one()))
                .collect(),
        }
    }

    fn add(&self, a: &GlobalForm, b: &GlobalForm) -> GlobalForm {
        GlobalForm {
            forms: a.forms.iter().zip(&b.forms).map(|(x, y)| x.add(y)).collect(),
        }
    }

    fn scale(&self, a: &GlobalForm, q: &Rational) -> GlobalForm {
        GlobalForm {
            forms: a.forms.iter().map(|x| x.scale(q)).collect(),
        }
    }

    fn mul(&self, a: &GlobalForm, b: &GlobalForm) -> Result<GlobalForm> {
        let forms = a
            .forms
            .iter()
            .zip(&b.forms)
            .map(|(x, y)| x.mul(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(GlobalForm { forms })
    }

    fn d(&self, a: &GlobalForm) -> Result<GlobalForm> {
        Ok(a.d())
    }

    fn is_zero(&self, a: &GlobalForm) -> bool {
        a.is_zero()
    }

    fn cohomology_basis(&self, n: usize) -> Result<Vec<GlobalForm>> {
        if self.layout(n, n).len == 0 {
            return Ok(Vec::new());
        }
        let d = self.stable_level(n)?;
        let (layout, cocycles, boundaries) = self.cohomology_data(n, d)?;
        let keep = extend_independent(layout.len, &boundaries, &cocycles);
        Ok(keep.iter().map(|&i| self.unflatten(&cocycles[i], &layout)).collect())
    }

    fn class_coords(&self, n: usize, cocycles: &[GlobalForm]) -> Result<Vec<Vec<Rational>>> {
        if self.layout(n, n).len == 0 {
            if cocycles.iter().any(|c| !c.is_zero()) {
                return Err(Error::Degree(format!("nonzero {n}-form above the dimension")));
            }
            return Ok(vec![Vec::new(); cocycles.len()]);
        }
        for c in cocycles {
            if !c.d().is_zero() {
                return Err(Error::Precondition(format!("degree-{n} form is not closed")));
            }
        }
        let reps = self.cohomology_basis(n)?;
        let level = cocycles
            .iter()
            .chain(&reps)
            .map(GlobalForm::poly_degree)
            .max()
            .unwrap_or(0)
            .max(self.stable_level(n)?);
        let layout = self.layout(n, level);
        let boundaries = if n == 0 {
            Vec::new()
        } else {
            let low = self.piece(n - 1, level)?;
            self.d_columns(&low, n - 1, level)?.1
        };
        let mut cols = reps
            .iter()
            .map(|r| self.flatten(r, &layout))
            .collect::<Result<Vec<_>>>()?;
        cols.extend(boundaries);
        let m = RationalMatrix::from_columns(layout.len, &cols)?;
        cocycles
            .iter()
            .map(|c| {
                let x = solve(&m, &self.flatten(c, &layout)?)?.ok_or_else(|| {
                    Error::Inconclusive(format!("class of a degree-{n} form not resolved at D = {level}"))
                })?;
                Ok(x[..reps.len()].to_vec())
            })
            .collect()
    }

    fn primitive(&self, n: usize, a: &GlobalForm) -> Result<GlobalForm> {
        if a.is_zero() {
            return Ok(self.zero_form());
        }
        if n == 0 {
            return Err(Error::Precondition("a nonzero 0-form is not exact".into()));
        }
        let start = a.poly_degree().max(n);
        for d in start..=start + self.d_max {
            let low = self.piece(n - 1, d)?;
            let (layout, cols) = self.d_columns(&low, n - 1, d)?;
            let m = RationalMatrix::from_columns(layout.len, &cols)?;
            if let Some(x) = solve(&m, &self.flatten(a, &layout)?)? {
                return Ok(self.unflatten(&combine(&low.basis, &x, low.layout.len), &low.layout));
            }
        }
        Err(Error::Inconclusive(format!(
            "no primitive of a degree-{n} form found within the filtration bound"
        )))
    }
}

/// A minimal algebra `model` with the images of its generators in some
/// target, built through degree `built_up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModel<E> {
    pub model: CdgaPresentation,
    pub images: Vec<E>,
    pub built_up_to: usize,
}

impl<E: Clone> MinimalModel<E> {
    /// Number of generators in each degree `0..=built_up_to`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.built_up_to + 1];
        for g in self.model.generators() {
            if g.degree <= self.built_up_to {
                counts[g.degree] += 1;
            }
        }
        counts
    }

    /// Re-checks minimality and that the map is a quasi-isomorphism
    /// through `built_up_to`.
    pub fn verify<T: CochainAlgebra<Elem = E>>(&self, target: &T) -> Result<bool> {
        Ok(self.model.is_minimal_simply_connected()?
            && is_quasi_iso_into(&self.model, target, &self.images, self.built_up_to)?)
    }
}

impl MinimalModel<Polynomial> {
    pub fn morphism(&self, target: &CdgaPresentation) -> Result<CdgaMorphism> {
        CdgaMorphism::from_images(self.model.clone(), target.clone(), self.images.clone())
    }
}

fn generator_name(model: &CdgaPresentation, degree: usize, extra: usize) -> String {
    let k = model.generators().iter().filter(|g| g.degree == degree).count() + extra;
    if k == 0 {
        format!("e{degree}")
    } else {
        format!("e{degree}_{}", k + 1)
    }
}

fn add_generators<E: Clone>(
    model: &CdgaPresentation,
    images: &[E],
    new: Vec<(Generator, Polynomial, E)>,
) -> Result<(CdgaPresentation, Vec<E>)> {
    let (gens, new_images): (Vec<_>, Vec<_>) = new.into_iter().map(|(g, p, e)| ((g, p), e)).unzip();
    let (next, map) = model.with_generators(gens)?;
    let mut slots: Vec<Option<E>> = vec![None; next.generators().len()];
    for (img, &pos) in images.iter().cloned().chain(new_images).zip(&map) {
        slots[pos] = Some(img);
    }
    Ok((next, slots.into_iter().map(|s| s.expect("every slot filled")).collect()))
}

/// Builds a minimal model of a simply connected target through degree
/// `up_to`. In each degree `n` it adds closed generators for the cokernel of
/// `H^n(M) → H^n(A)` and then generators `w` with `dw = z` for a basis `z`
/// of the kernel of `H^{n+1}(M) → H^{n+1}(A)`.
pub fn minimal_model<T: CochainAlgebra>(target: &T, up_to: usize) -> Result<MinimalModel<T::Elem>> {
    let h0 = target.cohomology_basis(0)?.len();
    if h0 != 1 {
        return Err(Error::Precondition(format!("degree 0: H^0 has dimension {h0}, expected 1")));
    }
    let h1 = target.cohomology_basis(1)?.len();
    if h1 != 0 {
        return Err(Error::Precondition(format!(
            "degree 1: H^1 has dimension {h1}; only simply connected targets are supported"
        )));
    }
    let mut model = CdgaPresentation::trivial();
    let mut images: Vec<T::Elem> = Vec::new();
    for n in 2..=up_to {
        let hm = model.cohomology(n);
        let mapped = hm
            .representatives()
            .iter()
            .map(|r| evaluate(target, r, &images))
            .collect::<Result<Vec<_>>>()?;
        let basis_a = target.cohomology_basis(n)?;
        let coords = target.class_coords(n, &mapped)?;
        let units: Vec<Vec<Rational>> = (0..basis_a.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); basis_a.len()];
                v[i] = Rational::one();
                v
            })
            .collect();
        let keep = extend_independent(basis_a.len(), &coords, &units);
        let new = keep
            .iter()
            .enumerate()
            .map(|(j, &i)| {
                (
                    Generator::new(generator_name(&model, n, j), n),
                    Polynomial::zero(),
                    basis_a[i].clone(),
                )
            })
            .collect();
        (model, images) = add_generators(&model, &images, new)?;

        let hm = model.cohomology(n + 1);
        let mapped = hm
            .representatives()
            .iter()
            .map(|r| evaluate(target, r, &images))
            .collect::<Result<Vec<_>>>()?;
        let dim_a = target.cohomology_basis(n + 1)?.len();
        let coords = target.class_coords(n + 1, &mapped)?;
        let kernel = kernel_basis(&RationalMatrix::from_columns(dim_a, &coords)?);
        let mut new = Vec::new();
        for (j, k) in kernel.vectors().iter().enumerate() {
            let mut z = Polynomial::zero();
            for (r, c) in hm.representatives().iter().zip(k) {
                z = z.add(&r.scale(c));
            }
            let fz = evaluate(target, &z, &images)?;
            let w = target
                .primitive(n + 1, &fz)
                .map_err(|e| Error::Precondition(format!("degree {}: {e}", n + 1)))?;
            new.push((Generator::new(generator_name(&model, n, j), n), z, w));
        }
        (model, images) = add_generators(&model, &images, new)?;
    }
    Ok(MinimalModel {
        model,
        images,
        built_up_to: up_to,
    })
}

/// Minimal model of a free cdga, after checking `d² = 0`.
pub fn minimal_model_of_cdga(a: &CdgaPresentation, up_to: usize) -> Result<MinimalModel<Polynomial>> {
    a.check_differential()?;
    minimal_model(a, up_to)
}

fn require_simply_connected(x: &FiniteSimplicialSet) -> Result<()> {
    let vertices = x.nondegenerate(0).len();
    let edges = x.nondegenerate(1).len();
    if vertices != 1 || edges != 0 {
        return Err(Error::Precondition(format!(
            "expected one vertex and no nondegenerate edges, found {vertices} and {edges}"
        )));
    }
    Ok(())
}

/// Minimal model of `A_PL(X)` through degree `up_to`.
pub fn minimal_model_of_space(
    x: &FiniteSimplicialSet,
    up_to: usize,
    d_max: usize,
) -> Result<(AplComplex, MinimalModel<GlobalForm>)> {
    require_simply_connected(x)?;
    let apl = AplComplex::new(x, d_max)?;
    let model = minimal_model(&apl, up_to)?;
    Ok((apl, model))
}

/// `(n, dim V^n)` for `2 ≤ n ≤ up_to`, where `V` is the generating space of
/// the minimal model of `A_PL(X)`; these are the ranks of `π_n(X) ⊗ Q`.
pub fn rational_homotopy_dims(x: &FiniteSimplicialSet, up_to: usize, d_max: usize) -> Result<Vec<(usize, usize)>> {
    let (_, m) = minimal_model_of_space(x, up_to, d_max)?;
    Ok(homotopy_table(&m.generator_counts()))
}

/// The same table from a cdga quasi-isomorphic to `A_PL(X)`.
pub fn rational_homotopy_dims_of_cdga(a: &CdgaPresentation, up_to: usize) -> Result<Vec<(usize, usize)>> {
    let m = minimal_model_of_cdga(a, up_to)?;
    Ok(homotopy_table(&m.generator_counts()))
}

fn homotopy_table(counts: &[usize]) -> Vec<(usize, usize)> {
    counts.iter().enumerate().skip(2).map(|(n, &c)| (n, c)).collect()
}

/// Whether sending each generator of `a` to the given form on `Δ^n`
/// defines a cdga map `a → ∇_n`, i.e. a point of `F(a)_n`. Generators not
/// listed go to zero.
pub fn is_realization_point(a: &CdgaPresentation, assignment: &[(&str, PolynomialForm)], n: usize) -> Result<bool> {
    check_dim(n)?;
    let mut images = vec![PolynomialForm::zero(n); a.generators().len()];
    for (name, form) in assignment {
        let i = a
            .index_of(name)
            .ok_or_else(|| Error::Cdga(format!("unknown generator {name}")))?;
        let g = &a.generators()[i];
        if form.is_zero() {
            continue;
        }
        if form.dim != n {
            return Err(Error::DimensionMismatch(format!("form for {name} lives on Δ{}", form.dim)));
        }
        if form.form_degree() != Some(g.degree) {
            return Err(Error::Degree(format!(
                "{name} has degree {} but is sent to {}",
                g.degree,
                form.render()
            )));
        }
        images[i] = form.clone();
    }
    for (i, dg) in a.differential().iter().enumerate() {
        let mut lhs = PolynomialForm::zero(n);
        for (m, c) in dg.terms() {
            let mut acc = PolynomialForm::constant(n, Rational::one());
            for (k, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    acc = acc.mul(&images[k])?;
                }
            }
            lhs = lhs.add(&acc.scale(c));
        }
        if lhs != images[i].d() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::simplicial::{simplex, sphere, torus, wedge};
    use proptest::prelude::*;

    fn form(n: usize, s: &str) -> PolynomialForm {
        PolynomialForm::parse(n, s).unwrap()
    }

    #[test]
    fn form_arithmetic() {
        assert_eq!(form(1, "t1^2").d(), form(1, "2 t1 dt1"));
        assert_eq!(form(2, "dt2 dt1"), form(2, "-dt1*dt2"));
        assert!(form(2, "dt1 dt1").is_zero());
        assert_eq!(form(2, "t0"), form(2, "1 - t1 - t2"));
        assert_eq!(form(2, "dt0"), form(2, "-dt1 - dt2"));
        assert_eq!(form(2, "t1^2*dt1 - 1/2*dt1*dt2").render(), "-1/2*dt1*dt2 + t1^2*dt1");
        assert!(PolynomialForm::parse(1, "t2").is_err());
        assert!(PolynomialForm::parse(2, "x").is_err());
    }

    #[test]
    fn pullback_examples() {
        assert!(form(1, "t1").face_pullback(1).unwrap().is_zero());
        assert_eq!(form(1, "t1").face_pullback(0).unwrap(), form(0, "1"));
        assert_eq!(form(1, "t1").degeneracy_pullback(1).unwrap(), form(2, "t1 + t2"));
        assert_eq!(form(1, "t1").degeneracy_pullback(0).unwrap(), form(2, "t2"));
        assert_eq!(form(1, "dt1").face_pullback(0).unwrap(), PolynomialForm::zero(0));
    }

    #[test]
    fn nabla_is_acyclic() {
        let n0 = nabla(0).unwrap();
        assert_eq!(n0.basis(0, 5).len(), 1);
        let n1 = nabla(1).unwrap();
        assert_eq!(n1.cohomology_dim(0, 6), 1);
        assert_eq!(n1.cohomology_dim(1, 6), 0);
        let n2 = nabla(2).unwrap();
        assert_eq!((0..=2).map(|m| n2.cohomology_dim(m, 5)).collect::<Vec<_>>(), [1, 0, 0]);
    }

    #[test]
    fn apl_bases() {
        assert_eq!(apl_basis(&simplex(0), 0, 4).unwrap().len(), 1);
        assert_eq!(apl_basis(&simplex(1), 0, 1).unwrap().len(), 2);
        let circle = AplComplex::new(&sphere(1), 4).unwrap();
        assert_eq!(circle.filtered_cohomology_dim(1, 2).unwrap(), 1);
        for g in circle.basis(1, 2).unwrap() {
            assert!(circle.global_form(g.forms().to_vec()).is_ok());
        }
        let bad = circle.global_form(vec![form(0, "1"), form(1, "t1")]);
        assert!(bad.is_err());
    }

    #[test]
    fn apl_matches_simplicial() {
        let spaces = [
            simplex(0),
            sphere(1),
            sphere(2),
            torus(),
            wedge(&sphere(1), &sphere(1)).unwrap(),
        ];
        for x in &spaces {
            let apl = AplComplex::new(x, 6).unwrap();
            for n in 0..=2 {
                let c = apl.cohomology(n).unwrap();
                assert!(c.matches_simplicial(), "{x:?} H^{n}: {c:?}");
            }
        }
    }

    #[test]
    fn inconclusive_when_bound_too_small() {
        let c = apl_cohomology(&sphere(2), 2, 2).unwrap();
        assert_eq!(c.stabilized, None);
        assert!(matches!(c.value(), Err(Error::Inconclusive(_))));
    }

    fn gens(list: &[(&str, usize)], d: &[(&str, &str)]) -> CdgaPresentation {
        CdgaPresentation::new(list.iter().map(|(n, k)| Generator::new(*n, *k)).collect(), d).unwrap()
    }

    #[test]
    fn minimal_model_of_s3_cohomology() {
        let a = gens(&[("x", 3)], &[]);
        let m = minimal_model_of_cdga(&a, 7).unwrap();
        assert_eq!(m.generator_counts(), [0, 0, 0, 1, 0, 0, 0, 0]);
        assert!(m.verify(&a).unwrap());
        assert!(m.morphism(&a).unwrap().is_quasi_iso(7).unwrap());
    }

    #[test]
    fn minimal_model_of_s2_cohomology() {
        // S^2 model tensored with a contractible T(4)
        let a = gens(&[("x", 2), ("y", 3), ("u", 4), ("w", 5)], &[("y", "x^2"), ("u", "w")]);
        let m = minimal_model_of_cdga(&a, 8).unwrap();
        assert_eq!(m.generator_counts(), [0, 0, 1, 1, 0, 0, 0, 0, 0]);
        assert!(m.verify(&a).unwrap());
        assert!(m.morphism(&a).unwrap().is_quasi_iso(8).unwrap());
        let d3 = &m.model.differential()[1];
        assert_eq!(m.model.render(d3), "e2^2");
    }

    #[test]
    fn minimal_model_of_truncated_polynomial() {
        let a = gens(&[("x", 2), ("z", 5)], &[("z", "x^3")]);
        let m = minimal_model_of_cdga(&a, 7).unwrap();
        assert_eq!(m.generator_counts(), [0, 0, 1, 0, 0, 1, 0, 0]);
        assert!(m.morphism(&a).unwrap().is_quasi_iso(7).unwrap());
        assert!(minimal_model_of_cdga(&gens(&[("x", 1)], &[]), 3).is_err());
    }

    #[test]
    fn spheres_via_apl() {
        assert_eq!(rational_homotopy_dims(&sphere(2), 4, 6).unwrap(), [(2, 1), (3, 1), (4, 0)]);
        assert_eq!(
            rational_homotopy_dims(&sphere(3), 6, 6).unwrap(),
            [(2, 0), (3, 1), (4, 0), (5, 0), (6, 0)]
        );
        assert!(rational_homotopy_dims(&simplex(0), 4, 4).unwrap().iter().all(|&(_, d)| d == 0));
        assert!(rational_homotopy_dims(&sphere(1), 3, 4).is_err());
    }

    #[test]
    fn realization_points() {
        let x2 = gens(&[("x", 2)], &[]);
        assert!(is_realization_point(&x2, &[("x", PolynomialForm::zero(1))], 1).unwrap());
        let x1 = gens(&[("x", 1)], &[]);
        for c in [-3, 0, 7] {
            let f = form(1, "dt1").scale(&int(c));
            assert!(is_realization_point(&x1, &[("x", f)], 1).unwrap());
        }
        assert!(is_realization_point(&x1, &[("x", form(1, "t1"))], 1).is_err());
        let s2 = gens(&[("x", 2), ("y", 3)], &[("y", "x^2")]);
        let xf = form(2, "dt1 dt2");
        assert!(is_realization_point(&s2, &[("x", xf.clone())], 2).unwrap());
        let y = gens(&[("a", 1), ("b", 2)], &[("a", "b")]);
        assert!(is_realization_point(&y, &[("a", form(1, "t1 dt1"))], 1).unwrap());
        assert!(!is_realization_point(&y, &[("a", form(2, "t2 dt1"))], 2).unwrap());
        assert!(is_realization_point(&y, &[("a", form(1, "dt1")), ("b", PolynomialForm::zero(1))], 1).unwrap());
    }

    fn random_form(n: usize) -> impl Strategy<Value = PolynomialForm> {
        let basis: Vec<FormMonomial> = (0..=n).flat_map(|m| nabla(n).unwrap().basis(m, 3)).collect();
        proptest::collection::vec(-3i64..4, basis.len()).prop_map(move |cs| {
            let mut f = PolynomialForm::zero(n);
            for (m, c) in basis.iter().zip(cs) {
                f.add_term(m.clone(), int(c));
            }
            f
        })
    }

    fn dim_and_form() -> impl Strategy<Value = (usize, PolynomialForm)> {
        (1usize..=3).prop_flat_map(|n| (Just(n), random_form(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn pullbacks_commute_with_d((n, f) in dim_and_form()) {
            for j in 0..=n {
                prop_assert_eq!(f.face_pullback(j).unwrap().d(), f.d().face_pullback(j).unwrap());
                prop_assert_eq!(f.degeneracy_pullback(j).unwrap().d(), f.d().degeneracy_pullback(j).unwrap());
            }
        }

        #[test]
        fn pullbacks_are_multiplicative((n, f) in dim_and_form(), seed in 0usize..4) {
            let g = f.d().add(&PolynomialForm::t(n, seed.min(n)).unwrap());
            let fg = f.mul(&g).unwrap();
            for j in 0..=n {
                let lhs = fg.face_pullback(j).unwrap();
                let rhs = f.face_pullback(j).unwrap().mul(&g.face_pullback(j).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn simplicial_identities((n, f) in dim_and_form()) {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = f.face_pullback(j).unwrap();
                    if n >= 2 {
                        prop_assert_eq!(
                            lhs.face_pullback(i).unwrap(),
                            f.face_pullback(i).unwrap().face_pullback(j - 1).unwrap()
                        );
                    }
                }
                for i in 0..=n + 1 {
                    let sj = f.degeneracy_pullback(j).unwrap();
                    let lhs = sj.face_pullback(i).unwrap();
                    let rhs = if i < j {
                        f.face_pullback(i).unwrap().degeneracy_pullback(j - 1).unwrap()
                    } else if i == j || i == j + 1 {
                        f.clone()
                    } else {
                        f.face_pullback(i - 1).unwrap().degeneracy_pullback(j).unwrap()
                    };
                    prop_assert_eq!(lhs, rhs);
                }
                for i in 0..=j {
                    prop_assert_eq!(
                        f.degeneracy_pullback(j).unwrap().degeneracy_pullback(i).unwrap(),
                        f.degeneracy_pullback(i).unwrap().degeneracy_pullback(j + 1).unwrap()
                    );
                }
            }
        }

        #[test]
        fn filtration_is_respected((n, f) in dim_and_form()) {
            prop_assert!(f.d().poly_degree() <= f.poly_degree());
            for j in 0..=n {
                prop_assert!(f.face_pullback(j).unwrap().poly_degree() <= f.poly_degree());
                prop_assert!(f.degeneracy_pullback(j).unwrap().poly_degree() <= f.poly_degree());
            }
        }
    }
}
