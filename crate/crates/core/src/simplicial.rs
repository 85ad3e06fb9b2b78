//! Finite simplicial sets, stored as explicit face and degeneracy tables up to
//! a dimension bound, with rational homology from normalized chains.
//!
//! Builders go through the Eilenberg–Zilber description: every simplex is a
//! degeneracy (a monotone surjection `[k] → [p]`) of a unique nondegenerate
//! `p`-simplex, so a simplicial set is determined by its nondegenerate
//! simplices and their faces.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::RationalMatrix;
use crate::rational::int;

/// One simplex of a fixed dimension `k`. Indices refer to the simplices of
/// dimension `k - 1` (faces) and `k + 1` (degeneracies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    /// `d_0, …, d_k`; empty for vertices.
    pub faces: Vec<usize>,
    /// `s_0, …, s_k`; empty at the dimension bound.
    pub degeneracies: Vec<usize>,
    pub degenerate: bool,
}

/// A simplex in Eilenberg–Zilber form: `map: [k] → [base_dim]` is a monotone
/// surjection (as its list of values) applied to nondegenerate `base`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EzSimplex {
    pub base_dim: usize,
    pub base: usize,
    pub map: Vec<usize>,
}

impl EzSimplex {
    /// A nondegenerate simplex, as itself.
    pub fn nondegenerate(dim: usize, base: usize) -> Self {
        EzSimplex {
            base_dim: dim,
            base,
            map: (0..=dim).collect(),
        }
    }

    /// The iterated degeneracy of a vertex in dimension `dim`.
    pub fn degenerate_vertex(dim: usize, vertex: usize) -> Self {
        EzSimplex {
            base_dim: 0,
            base: vertex,
            map: vec![0; dim + 1],
        }
    }

    pub fn dim(&self) -> usize {
        self.map.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.base_dim < self.dim()
    }

    fn degeneracy(&self, j: usize) -> Self {
        let mut map = self.map.clone();
        map.insert(j, self.map[j]);
        EzSimplex {
            base_dim: self.base_dim,
            base: self.base,
            map,
        }
    }

    /// `d_j` of this simplex, given the faces of every nondegenerate simplex.
    fn face(&self, j: usize, cells: &[Vec<Vec<EzSimplex>>]) -> Self {
        let removed = self.map[j];
        let mut rest = self.map.clone();
        rest.remove(j);
        if rest.contains(&removed) {
            return EzSimplex {
                base_dim: self.base_dim,
                base: self.base,
                map: rest,
            };
        }
        let f = &cells[self.base_dim][self.base][removed];
        let map = rest
            .into_iter()
            .map(|v| f.map[if v > removed { v - 1 } else { v }])
            .collect();
        EzSimplex {
            base_dim: f.base_dim,
            base: f.base,
            map,
        }
    }
}

/// All monotone surjections `[k] → [p]`, as value lists, in lexicographic
/// order.
fn surjections(k: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, k: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos > k {
            if cur.last() == Some(&p) {
                out.push(cur.clone());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for v in [last, last + 1] {
            // remaining positions must still be able to reach p
            if v <= p && p - v <= k - pos {
                cur.push(v);
                go(pos + 1, k, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if p <= k {
        go(1, k, p, &mut vec![0], &mut out);
    }
    out
}

/// Where a simplex comes from: `σ = s_{ops[r-1]} ⋯ s_{ops[0]} (base)` with
/// `base` nondegenerate of dimension `base_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyRoot {
    pub base_dim: usize,
    pub base: usize,
    pub ops: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    dimension_bound: usize,
    levels: Vec<Vec<Simplex>>,
}

impl fmt::Debug for FiniteSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<_> = (0..=self.dimension_bound)
            .map(|k| (self.levels[k].len(), self.nondegenerate(k).len()))
            .collect();
        write!(
            f,
            "FiniteSimplicialSet(bound={}, (all, nondegenerate) per dim = {:?})",
            self.dimension_bound, counts
        )
    }
}

impl FiniteSimplicialSet {
    /// Wraps raw tables (one list per dimension `0..=dimension_bound`)
    /// after checking index ranges and table shapes. The simplicial
    /// identities are checked separately by [`validate`](Self::validate).
    pub fn from_levels(dimension_bound: usize, levels: Vec<Vec<Simplex>>) -> Result<Self> {
        if levels.len() != dimension_bound + 1 {
            return Err(Error::Simplicial(format!(
                "expected {} levels, got {}",
                dimension_bound + 1,
                levels.len()
            )));
        }
        for (k, level) in levels.iter().enumerate() {
            for (id, s) in level.iter().enumerate() {
                let want_faces = if k == 0 { 0 } else { k + 1 };
                if s.faces.len() != want_faces {
                    return Err(Error::Simplicial(format!(
                        "simplex {id} of dim {k} has {} faces, expected {want_faces}",
                        s.faces.len()
                    )));
                }
                let want_degs = if k == dimension_bound { 0 } else { k + 1 };
                if s.degeneracies.len() != want_degs {
                    return Err(Error::Simplicial(format!(
                        "simplex {id} of dim {k} has {} degeneracies, expected {want_degs}",
                        s.degeneracies.len()
                    )));
                }
                if let Some(&f) = s.faces.iter().find(|&&f| f >= levels[k - usize::from(k > 0)].len()) {
                    return Err(Error::Simplicial(format!("simplex {id} of dim {k} has face {f} out of range")));
                }
                if let Some(&d) = s.degeneracies.iter().find(|&&d| d >= levels[k + 1].len()) {
                    return Err(Error::Simplicial(format!(
                        "simplex {id} of dim {k} has degeneracy {d} out of range"
                    )));
                }
            }
        }
        Ok(FiniteSimplicialSet {
            dimension_bound,
            levels,
        })
    }

    /// Materializes all simplices up to `dimension_bound` from the
    /// nondegenerate ones. `cells[p][i]` lists the faces `d_0..d_p` of the
    /// `i`-th nondegenerate `p`-simplex in Eilenberg–Zilber form (empty for
    /// vertices).
    pub fn from_nondegenerate(dimension_bound: usize, cells: Vec<Vec<Vec<EzSimplex>>>) -> Result<Self> {
        if cells.len() > dimension_bound + 1 {
            return Err(Error::Simplicial("nondegenerate simplices above the dimension bound".into()));
        }
        for (p, level) in cells.iter().enumerate() {
            for (i, faces) in level.iter().enumerate() {
                let want = if p == 0 { 0 } else { p + 1 };
                if faces.len() != want {
                    return Err(Error::Simplicial(format!(
                        "nondegenerate {p}-simplex {i} has {} faces, expected {want}",
                        faces.len()
                    )));
                }
                for f in faces {
                    let ok = f.dim() + 1 == p
                        && f.base_dim < cells.len()
                        && f.base < cells[f.base_dim].len()
                        && surjections(f.dim(), f.base_dim).contains(&f.map);
                    if !ok {
                        return Err(Error::Simplicial(format!("bad face {f:?} of nondegenerate {p}-simplex {i}")));
                    }
                }
            }
        }
        let mut ez: Vec<Vec<EzSimplex>> = Vec::new();
        let mut index: Vec<BTreeMap<EzSimplex, usize>> = Vec::new();
        for k in 0..=dimension_bound {
            let mut level = Vec::new();
            for p in (0..=k.min(cells.len().saturating_sub(1))).rev() {
                for base in 0..cells[p].len() {
                    for map in surjections(k, p) {
                        level.push(EzSimplex { base_dim: p, base, map });
                    }
                }
            }
            index.push(level.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect());
            ez.push(level);
        }
        let mut levels = Vec::new();
        for k in 0..=dimension_bound {
            let level = ez[k]
                .iter()
                .map(|s| Simplex {
                    faces: if k == 0 {
                        Vec::new()
                    } else {
                        (0..=k).map(|j| index[k - 1][&s.face(j, &cells)]).collect()
                    },
                    degeneracies: if k == dimension_bound {
                        Vec::new()
                    } else {
                        (0..=k).map(|j| index[k + 1][&s.degeneracy(j)]).collect()
                    },
                    degenerate: s.is_degenerate(),
                })
                .collect();
            levels.push(level);
        }
        Self::from_levels(dimension_bound, levels)
    }

    pub fn dimension_bound(&self) -> usize {
        self.dimension_bound
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    pub fn simplex(&self, k: usize, id: usize) -> &Simplex {
        &self.levels[k][id]
    }

    pub fn face(&self, k: usize, id: usize, j: usize) -> usize {
        self.levels[k][id].faces[j]
    }

    pub fn degeneracy(&self, k: usize, id: usize, j: usize) -> usize {
        self.levels[k][id].degeneracies[j]
    }

    /// Ids of the nondegenerate `k`-simplices, in table order.
    pub fn nondegenerate(&self, k: usize) -> Vec<usize> {
        match self.levels.get(k) {
            None => Vec::new(),
            Some(level) => (0..level.len()).filter(|&i| !level[i].degenerate).collect(),
        }
    }

    /// Highest dimension with a nondegenerate simplex.
    pub fn dimension(&self) -> usize {
        (0..=self.dimension_bound)
            .rev()
            .find(|&k| !self.nondegenerate(k).is_empty())
            .unwrap_or(0)
    }

    /// Writes a degenerate simplex as iterated degeneracies of a
    /// nondegenerate one, using the degeneracy tables.
    pub fn root(&self, k: usize, id: usize) -> Result<DegeneracyRoot> {
        let mut ops = Vec::new();
        let (mut dim, mut cur) = (k, id);
        while self.levels[dim][cur].degenerate {
            if dim == 0 {
                return Err(Error::Simplicial(format!("vertex {cur} is flagged degenerate")));
            }
            let (src, j) = (0..self.levels[dim - 1].len())
                .find_map(|t| {
                    self.levels[dim - 1][t]
                        .degeneracies
                        .iter()
                        .position(|&d| d == cur)
                        .map(|j| (t, j))
                })
                .ok_or_else(|| {
                    Error::Simplicial(format!("degenerate simplex {cur} of dim {dim} is not s_j of any simplex"))
                })?;
            ops.push(j);
            dim -= 1;
            cur = src;
        }
        ops.reverse();
        Ok(DegeneracyRoot {
            base_dim: dim,
            base: cur,
            ops,
        })
    }

    /// Checks every simplicial identity that the stored tables can express,
    /// and the consistency of the degenerate flags. Reports the first
    /// violation.
    pub fn validate(&self) -> Result<()> {
        let bound = self.dimension_bound;
        let fail = |msg: String| Err(Error::Simplicial(msg));
        for k in 0..=bound {
            for x in 0..self.levels[k].len() {
                // d_i d_j = d_{j-1} d_i, i < j
                if k >= 2 {
                    for j in 0..=k {
                        for i in 0..j {
                            let lhs = self.face(k - 1, self.face(k, x, j), i);
                            let rhs = self.face(k - 1, self.face(k, x, i), j - 1);
                            if lhs != rhs {
                                return fail(format!(
                                    "d_{i} d_{j} != d_{} d_{i} on {k}-simplex {x} ({lhs} vs {rhs})",
                                    j - 1
                                ));
                            }
                        }
                    }
                }
                if k < bound {
                    for j in 0..=k {
                        let y = self.degeneracy(k, x, j);
                        for i in 0..=k + 1 {
                            let lhs = self.face(k + 1, y, i);
                            let rhs = if i == j || i == j + 1 {
                                x
                            } else if i < j {
                                self.degeneracy(k - 1, self.face(k, x, i), j - 1)
                            } else {
                                self.degeneracy(k - 1, self.face(k, x, i - 1), j)
                            };
                            if lhs != rhs {
                                return fail(format!(
                                    "d_{i} s_{j} on {k}-simplex {x} gives {lhs}, expected {rhs}"
                                ));
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i, i <= j
                if k + 2 <= bound {
                    for j in 0..=k {
                        for i in 0..=j {
                            let lhs = self.degeneracy(k + 1, self.degeneracy(k, x, j), i);
                            let rhs = self.degeneracy(k + 1, self.degeneracy(k, x, i), j + 1);
                            if lhs != rhs {
                                return fail(format!(
                                    "s_{i} s_{j} != s_{} s_{i} on {k}-simplex {x}",
                                    j + 1
                                ));
                            }
                        }
                    }
                }
            }
        }
        for k in 0..=bound {
            let mut hit = vec![false; self.levels[k].len()];
            if k > 0 {
                for s in &self.levels[k - 1] {
                    for &d in &s.degeneracies {
                        hit[d] = true;
                    }
                }
            }
            for (x, s) in self.levels[k].iter().enumerate() {
                if s.degenerate != hit[x] {
                    return fail(format!(
                        "{k}-simplex {x} is flagged degenerate={} but is {}in the image of a degeneracy",
                        s.degenerate,
                        if hit[x] { "" } else { "not " }
                    ));
                }
            }
        }
        Ok(())
    }

    /// Faces of each nondegenerate simplex in Eilenberg–Zilber form, indexed
    /// by position in [`nondegenerate`](Self::nondegenerate).
    pub fn nondegenerate_cells(&self) -> Result<Vec<Vec<Vec<EzSimplex>>>> {
        let top = self.dimension();
        let position: Vec<BTreeMap<usize, usize>> = (0..=top)
            .map(|k| self.nondegenerate(k).into_iter().enumerate().map(|(i, id)| (id, i)).collect())
            .collect();
        let mut cells = Vec::new();
        for p in 0..=top {
            let mut level = Vec::new();
            for id in self.nondegenerate(p) {
                let mut faces = Vec::new();
                if p > 0 {
                    for j in 0..=p {
                        let root = self.root(p - 1, self.face(p, id, j))?;
                        let mut e = EzSimplex::nondegenerate(root.base_dim, position[root.base_dim][&root.base]);
                        for &op in &root.ops {
                            e = e.degeneracy(op);
                        }
                        faces.push(e);
                    }
                }
                level.push(faces);
            }
            cells.push(level);
        }
        Ok(cells)
    }

    /// Normalized boundary maps `∂_k : N_k → N_{k-1}` for `k = 1..=bound`
    /// (entry `k - 1`), with rows and columns indexed by nondegenerate
    /// simplices in table order.
    pub fn chain_complex(&self) -> Vec<RationalMatrix> {
        (1..=self.dimension_bound)
            .map(|k| {
                let rows = self.nondegenerate(k - 1);
                let cols = self.nondegenerate(k);
                let row_of: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(i, &id)| (id, i)).collect();
                let mut m = RationalMatrix::zeros(rows.len(), cols.len());
                for (c, &id) in cols.iter().enumerate() {
                    for j in 0..=k {
                        if let Some(&r) = row_of.get(&self.face(k, id, j)) {
                            m[(r, c)] += int(if j % 2 == 0 { 1 } else { -1 });
                        }
                    }
                }
                m
            })
            .collect()
    }

    /// Rational Betti numbers `dim H_k(X; Q)`, `k = 0..=bound`.
    pub fn homology(&self) -> BettiTable {
        let boundaries = self.chain_complex();
        let ranks: Vec<usize> = boundaries.iter().map(RationalMatrix::rank).collect();
        let dims = (0..=self.dimension_bound)
            .map(|k| {
                let chains = self.nondegenerate(k).len();
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                let inc = ranks.get(k).copied().unwrap_or(0);
                chains - out - inc
            })
            .collect();
        BettiTable { dims }
    }

    /// `dim H^k(X; Q)` from the normalized cochain complex (transposed
    /// boundaries).
    pub fn cohomology(&self) -> BettiTable {
        let coboundaries: Vec<RationalMatrix> = self.chain_complex().iter().map(RationalMatrix::transpose).collect();
        let ranks: Vec<usize> = coboundaries.iter().map(RationalMatrix::rank).collect();
        let dims = (0..=self.dimension_bound)
            .map(|k| {
                let cochains = self.nondegenerate(k).len();
                let out = ranks.get(k).copied().unwrap_or(0);
                let inc = if k == 0 { 0 } else { ranks[k - 1] };
                cochains - out - inc
            })
            .collect();
        BettiTable { dims }
    }

    /// Alternating count of nondegenerate simplices.
    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dimension_bound)
            .map(|k| {
                let n = self.nondegenerate(k).len() as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }
}

/// Rational Betti numbers by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub dims: Vec<usize>,
}

impl BettiTable {
    pub fn get(&self, degree: usize) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// `H0=1 H1=0 H2=1`
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.dims.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "H{k}={d}")?;
        }
        Ok(())
    }
}

/// The standard simplex `Δ^n`.
pub fn simplex(n: usize) -> FiniteSimplicialSet {
    // nondegenerate p-simplices are the (p+1)-subsets of {0..n}
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 1u32..(1 << (n + 1)) {
        let s: Vec<usize> = (0..=n).filter(|i| mask & (1 << i) != 0).collect();
        subsets[s.len() - 1].push(s);
    }
    for level in &mut subsets {
        level.sort();
    }
    let cells = (0..=n)
        .map(|p| {
            subsets[p]
                .iter()
                .map(|s| {
                    if p == 0 {
                        return Vec::new();
                    }
                    (0..=p)
                        .map(|j| {
                            let mut f = s.clone();
                            f.remove(j);
                            let idx = subsets[p - 1].binary_search(&f).unwrap();
                            EzSimplex::nondegenerate(p - 1, idx)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FiniteSimplicialSet::from_nondegenerate(n, cells).expect("Δ^n is well formed")
}

/// `S^n` as one vertex and one nondegenerate `n`-simplex with all faces
/// degenerate; `S^0` is two points.
pub fn sphere(n: usize) -> FiniteSimplicialSet {
    if n == 0 {
        return FiniteSimplicialSet::from_nondegenerate(0, vec![vec![Vec::new(), Vec::new()]])
            .expect("S^0 is well formed");
    }
    let mut cells: Vec<Vec<Vec<EzSimplex>>> = vec![Vec::new(); n + 1];
    cells[0].push(Vec::new());
    cells[n].push(vec![EzSimplex::degenerate_vertex(n - 1, 0); n + 1]);
    FiniteSimplicialSet::from_nondegenerate(n, cells).expect("S^n is well formed")
}

/// The torus with one vertex, three edges `a, b, c` and two triangles with
/// faces `(b, c, a)` and `(a, c, b)`.
pub fn torus() -> FiniteSimplicialSet {
    let e = |i| EzSimplex::nondegenerate(1, i);
    let v = EzSimplex::nondegenerate(0, 0);
    let cells = vec![
        vec![Vec::new()],
        vec![vec![v.clone(), v.clone()], vec![v.clone(), v.clone()], vec![v.clone(), v]],
        vec![vec![e(1), e(2), e(0)], vec![e(0), e(2), e(1)]],
    ];
    FiniteSimplicialSet::from_nondegenerate(2, cells).expect("torus is well formed")
}

/// One-point union, gluing vertex 0 of `y` to vertex 0 of `x`.
pub fn wedge(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet) -> Result<FiniteSimplicialSet> {
    let cx = x.nondegenerate_cells()?;
    let cy = y.nondegenerate_cells()?;
    if cx[0].is_empty() || cy[0].is_empty() {
        return Err(Error::Precondition("wedge needs a vertex in each summand".into()));
    }
    let top = cx.len().max(cy.len());
    let offsets: Vec<usize> = (0..top).map(|p| cx.get(p).map_or(0, Vec::len)).collect();
    let relabel = |f: &EzSimplex| {
        let base = if f.base_dim == 0 {
            if f.base == 0 {
                0
            } else {
                offsets[0] + f.base - 1
            }
        } else {
            offsets[f.base_dim] + f.base
        };
        EzSimplex {
            base_dim: f.base_dim,
            base,
            map: f.map.clone(),
        }
    };
    let mut cells: Vec<Vec<Vec<EzSimplex>>> = vec![Vec::new(); top];
    for (p, level) in cx.into_iter().enumerate() {
        cells[p].extend(level);
    }
    for (p, level) in cy.iter().enumerate() {
        for (i, faces) in level.iter().enumerate() {
            if p == 0 && i == 0 {
                continue;
            }
            cells[p].push(faces.iter().map(relabel).collect());
        }
    }
    FiniteSimplicialSet::from_nondegenerate(x.dimension_bound.max(y.dimension_bound), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn fixtures() -> Vec<(&'static str, FiniteSimplicialSet)> {
        vec![
            ("point", simplex(0)),
            ("Δ1", simplex(1)),
            ("Δ2", simplex(2)),
            ("Δ3", simplex(3)),
            ("S0", sphere(0)),
            ("S1", sphere(1)),
            ("S2", sphere(2)),
            ("S3", sphere(3)),
            ("T", torus()),
            ("S1vS1", wedge(&sphere(1), &sphere(1)).unwrap()),
            ("S1vS2", wedge(&sphere(1), &sphere(2)).unwrap()),
        ]
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 1).len(), 3);
        assert_eq!(surjections(4, 2).len(), 6);
        assert_eq!(surjections(2, 2), vec![vec![0, 1, 2]]);
        assert_eq!(surjections(2, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn fixtures_validate() {
        for (name, x) in fixtures() {
            assert_eq!(x.validate(), Ok(()), "{name}");
        }
    }

    #[test]
    fn broken_face_table_is_reported() {
        let x = simplex(2);
        let mut levels = x.levels().to_vec();
        let top = x.nondegenerate(2)[0];
        // d_1 := d_2 = [0,1], so d_0 d_1 = 1 while d_0 d_0 = d_0 [1,2] = 2
        levels[2][top].faces[1] = levels[2][top].faces[2];
        let y = FiniteSimplicialSet::from_levels(2, levels).unwrap();
        let err = y.validate().unwrap_err();
        assert!(matches!(err, Error::Simplicial(ref m) if m.contains("d_0 d_1")), "{err}");
    }

    #[test]
    fn boundary_examples() {
        assert!(simplex(0).chain_complex().is_empty());
        assert!(sphere(1).chain_complex()[0].is_zero());
        let d = simplex(2).chain_complex();
        assert_eq!(d[1].cols(), 1);
        let col = d[1].column(0);
        // faces of [0,1,2]: d0 = [1,2], d1 = [0,2], d2 = [0,1]
        let edges = simplex(2).nondegenerate(1).len();
        assert_eq!(edges, 3);
        assert_eq!(col.iter().filter(|c| **c == int(1)).count(), 2);
        assert_eq!(col.iter().filter(|c| **c == int(-1)).count(), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for (name, x) in fixtures() {
            let d = x.chain_complex();
            for k in 1..d.len() {
                assert!(d[k - 1].mul(&d[k]).unwrap().is_zero(), "{name} ∂∂ at {k}");
            }
        }
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(simplex(0).homology().dims, vec![1]);
        assert_eq!(sphere(1).homology().dims, vec![1, 1]);
        assert_eq!(sphere(2).homology().dims, vec![1, 0, 1]);
        assert_eq!(sphere(2).homology().to_string(), "H0=1 H1=0 H2=1");
        assert_eq!(torus().homology().dims, vec![1, 2, 1]);
        assert_eq!(simplex(3).homology().dims, vec![1, 0, 0, 0]);
        assert_eq!(wedge(&sphere(1), &sphere(1)).unwrap().homology().dims, vec![1, 2]);
        assert_eq!(sphere(0).homology().dims, vec![2]);
    }

    #[test]
    fn euler_characteristic_and_cohomology() {
        for (name, x) in fixtures() {
            let h = x.homology();
            assert_eq!(h.euler_characteristic(), x.euler_characteristic(), "{name}");
            assert_eq!(x.cohomology(), h, "{name}");
        }
    }

    #[test]
    fn wedge_adds_positive_degrees() {
        for (a, b) in [(sphere(1), sphere(2)), (torus(), sphere(1)), (sphere(2), sphere(2))] {
            let w = wedge(&a, &b).unwrap().homology();
            for k in 1..=2 {
                assert_eq!(w.get(k), a.homology().get(k) + b.homology().get(k));
            }
            assert_eq!(w.get(0), 1);
        }
    }

    #[test]
    fn roots_of_degenerate_simplices() {
        let x = sphere(3);
        for k in 0..=3 {
            for id in 0..x.levels()[k].len() {
                let r = x.root(k, id).unwrap();
                let mut cur = (r.base_dim, r.base);
                for &op in &r.ops {
                    cur = (cur.0 + 1, x.degeneracy(cur.0, cur.1, op));
                }
                assert_eq!(cur, (k, id));
            }
        }
    }

    #[test]
    fn cells_round_trip() {
        for (name, x) in fixtures() {
            let y = FiniteSimplicialSet::from_nondegenerate(x.dimension_bound(), x.nondegenerate_cells().unwrap()).unwrap();
            assert_eq!(y.homology(), x.homology(), "{name}");
        }
    }
}
