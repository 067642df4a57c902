//! Coordinate vectors, linear maps and the two structure-tensor shapes
//! (bilinear maps and "split" maps into a tensor square).
//!
//! Storage is sparse: vectors keep sorted (index, nonzero scalar) pairs. Structure
//! tensors of group algebras and crossed coproducts are mostly zeros, and every
//! identity check compares canonical sparse vectors directly.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("singular map; kernel witness {witness}")]
    Singular { witness: Vector },
    #[error("map is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of bounds for dimension {dim}")]
    OutOfBounds { index: usize, dim: usize },
}

fn same_dim(expected: usize, got: usize) -> Result<(), TensorError> {
    if expected == got {
        Ok(())
    } else {
        Err(TensorError::DimMismatch { expected, got })
    }
}

fn same_field(a: Field, b: Field) -> Result<(), TensorError> {
    if a == b {
        Ok(())
    } else {
        Err(TensorError::FieldMismatch(a, b))
    }
}

/// Sparse coordinate vector. Entries are sorted by index and never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zero(field: Field, dim: usize) -> Self {
        Vector { field, dim, entries: Vec::new() }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range {dim}");
        Vector { field, dim, entries: vec![(i, field.one())] }
    }

    pub fn from_dense(field: Field, coords: Vec<Scalar>) -> Self {
        let dim = coords.len();
        let entries = coords
            .into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .inspect(|(_, s)| assert_eq!(s.field(), field, "scalar field mismatch"))
            .collect();
        Vector { field, dim, entries }
    }

    /// Sums arbitrary (index, coefficient) terms, merging repeats.
    pub fn from_terms(field: Field, dim: usize, terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut t: Vec<(usize, Scalar)> = terms.into_iter().collect();
        t.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(t.len());
        for (i, s) in t {
            assert!(i < dim, "index {i} out of range {dim}");
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &s,
                _ => entries.push((i, s)),
            }
        }
        entries.retain(|(_, s)| !s.is_zero());
        Vector { field, dim, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, s)| (*i, s))
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, s) in &self.entries {
            out[*i] = s.clone();
        }
        out
    }

    pub fn add(&self, o: &Vector) -> Vector {
        assert_eq!(self.dim, o.dim, "vector dimension mismatch");
        let mut out = Vec::with_capacity(self.entries.len() + o.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), o.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.clone()));
                        b.next();
                    } else {
                        let s = x + y;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector { field: self.field, dim: self.dim, entries: out }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().map(|(i, s)| (*i, -s)).collect(),
        }
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero(self.field, self.dim);
        }
        Vector {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().map(|(i, s)| (*i, s * c)).collect(),
        }
    }

    /// Coordinates of self ⊗ other, index i * other.dim + j.
    pub fn kron(&self, o: &Vector) -> Vector {
        let mut entries = Vec::with_capacity(self.entries.len() * o.entries.len());
        for (i, x) in &self.entries {
            for (j, y) in &o.entries {
                entries.push((i * o.dim + j, x * y));
            }
        }
        Vector { field: self.field, dim: self.dim * o.dim, entries }
    }

    /// Direct sum: coordinates of self followed by those of other.
    pub fn concat(&self, o: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(o.entries.iter().map(|(i, s)| (i + self.dim, s.clone())));
        Vector { field: self.field, dim: self.dim + o.dim, entries }
    }

    /// Σ self_i · f_i: evaluates a functional given in coordinates.
    pub fn dot(&self, f: &Vector) -> Scalar {
        assert_eq!(self.dim, f.dim, "vector dimension mismatch");
        let mut acc = self.field.zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), f.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// "[i:c, ...]" listing of the nonzero coordinates.
    pub fn coords_string(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|(i, s)| format!("{i}:{s}")).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords_string())
    }
}

/// Accumulates scaled vectors and basis terms before a single sort/merge.
pub struct Accumulator {
    field: Field,
    dim: usize,
    terms: Vec<(usize, Scalar)>,
}

impl Accumulator {
    pub fn new(field: Field, dim: usize) -> Self {
        Accumulator { field, dim, terms: Vec::new() }
    }

    pub fn push(&mut self, i: usize, c: Scalar) {
        if !c.is_zero() {
            self.terms.push((i, c));
        }
    }

    pub fn add_scaled(&mut self, v: &Vector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, s) in v.iter() {
            self.terms.push((i, if c.is_one() { s.clone() } else { s * c }));
        }
    }

    pub fn finish(self) -> Vector {
        Vector::from_terms(self.field, self.dim, self.terms)
    }
}

/// Linear map stored by columns: column j is the image of the j-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    src: usize,
    dst: usize,
    cols: Vec<Vector>,
}

impl LinMap {
    pub fn from_columns(field: Field, dst: usize, cols: Vec<Vector>) -> Result<Self, TensorError> {
        for c in &cols {
            same_dim(dst, c.dim)?;
            same_field(field, c.field)?;
        }
        Ok(LinMap { field, src: cols.len(), dst, cols })
    }

    /// Builds from row-major entries m[r][c] (coefficient of e_r in the image of e_c).
    pub fn from_rows(field: Field, rows: &[Vec<Scalar>], src: usize) -> Result<Self, TensorError> {
        let dst = rows.len();
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); src];
        for (r, row) in rows.iter().enumerate() {
            same_dim(src, row.len())?;
            for (c, s) in row.iter().enumerate() {
                same_field(field, s.field())?;
                if !s.is_zero() {
                    cols[c].push((r, s.clone()));
                }
            }
        }
        let cols = cols.into_iter().map(|t| Vector::from_terms(field, dst, t)).collect();
        Ok(LinMap { field, src, dst, cols })
    }

    pub fn from_fn(field: Field, src: usize, dst: usize, f: impl Fn(usize) -> Vector) -> Self {
        let cols: Vec<Vector> = (0..src).map(f).collect();
        for c in &cols {
            assert_eq!(c.dim, dst, "column dimension mismatch");
        }
        LinMap { field, src, dst, cols }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinMap::from_fn(field, n, n, |i| Vector::basis(field, n, i))
    }

    pub fn zero(field: Field, src: usize, dst: usize) -> Self {
        LinMap::from_fn(field, src, dst, |_| Vector::zero(field, dst))
    }

    /// Permutation matrix sending e_i to e_{perm[i]}.
    pub fn permutation(field: Field, perm: &[usize]) -> Self {
        let n = perm.len();
        LinMap::from_fn(field, n, n, |i| Vector::basis(field, n, perm[i]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn dst_dim(&self) -> usize {
        self.dst
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].get(r)
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.src]; self.dst];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, s) in col.iter() {
                out[r][c] = s.clone();
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim, self.src, "linear map input dimension mismatch");
        let mut acc = Accumulator::new(self.field, self.dst);
        for (j, s) in v.iter() {
            acc.add_scaled(&self.cols[j], s);
        }
        acc.finish()
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector, TensorError> {
        same_dim(self.src, v.dim)?;
        same_field(self.field, v.field)?;
        Ok(self.apply(v))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(other.dst, self.src, "composition dimension mismatch");
        LinMap {
            field: self.field,
            src: other.src,
            dst: self.dst,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn try_compose(&self, other: &LinMap) -> Result<LinMap, TensorError> {
        same_dim(self.src, other.dst)?;
        same_field(self.field, other.field)?;
        Ok(self.compose(other))
    }

    /// Kronecker product f ⊗ g acting on (i, j) ↦ index i * g.src + j.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        let mut cols = Vec::with_capacity(self.src * g.src);
        for a in &self.cols {
            for b in &g.cols {
                cols.push(a.kron(b));
            }
        }
        LinMap { field: self.field, src: self.src * g.src, dst: self.dst * g.dst, cols }
    }

    /// Transpose. On functionals in coordinates, transpose(f) applied to p is p∘f.
    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.dst];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, s) in col.iter() {
                cols[r].push((c, s.clone()));
            }
        }
        LinMap {
            field: self.field,
            src: self.dst,
            dst: self.src,
            cols: cols.into_iter().map(|t| Vector { field: self.field, dim: self.src, entries: t }).collect(),
        }
    }

    pub fn add(&self, o: &LinMap) -> LinMap {
        assert!(self.src == o.src && self.dst == o.dst, "linear map shape mismatch");
        LinMap {
            field: self.field,
            src: self.src,
            dst: self.dst,
            cols: self.cols.iter().zip(&o.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            field: self.field,
            src: self.src,
            dst: self.dst,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
            && self.cols.iter().enumerate().all(|(j, c)| c.nnz() == 1 && c.entries[0].0 == j && c.entries[0].1.is_one())
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.field, self.cols.clone(), self.dst).len()
    }

    pub fn invert(&self) -> Result<LinMap, TensorError> {
        if self.src != self.dst {
            return Err(TensorError::NotSquare { rows: self.dst, cols: self.src });
        }
        let n = self.src;
        let rows = self.transpose().cols;
        let mut inv_cols = Vec::with_capacity(n);
        let solver = Solver::new(self.field, rows, n).map_err(|w| TensorError::Singular { witness: w })?;
        for i in 0..n {
            inv_cols.push(solver.solve(&Vector::basis(self.field, n, i)).expect("square nonsingular system"));
        }
        Ok(LinMap { field: self.field, src: n, dst: n, cols: inv_cols })
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns().iter().map(|c| c.coords_string()).collect();
        write!(f, "cols {}", cols.join(" "))
    }
}

/// Bilinear map V ⊗ W → U with table t(i, j) = image of e_i ⊗ e_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2to1 {
    field: Field,
    left: usize,
    right: usize,
    out: usize,
    table: Vec<Vector>,
}

impl Tensor2to1 {
    pub fn from_fn(field: Field, left: usize, right: usize, out: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(left * right);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.dim, out, "bilinear table entry dimension mismatch");
                table.push(v);
            }
        }
        Tensor2to1 { field, left, right, out, table }
    }

    pub fn from_table(field: Field, left: usize, right: usize, out: usize, table: Vec<Vector>) -> Result<Self, TensorError> {
        same_dim(left * right, table.len())?;
        for v in &table {
            same_dim(out, v.dim)?;
            same_field(field, v.field)?;
        }
        Ok(Tensor2to1 { field, left, right, out, table })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn at(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.right + j]
    }

    pub fn apply(&self, u: &Vector, v: &Vector) -> Vector {
        assert!(u.dim == self.left && v.dim == self.right, "bilinear input dimension mismatch");
        let mut acc = Accumulator::new(self.field, self.out);
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                acc.add_scaled(self.at(i, j), &(a * b));
            }
        }
        acc.finish()
    }

    /// Applies to a vector of the tensor product (index i * right + j).
    pub fn apply_flat(&self, w: &Vector) -> Vector {
        assert_eq!(w.dim, self.left * self.right, "bilinear input dimension mismatch");
        let mut acc = Accumulator::new(self.field, self.out);
        for (k, s) in w.iter() {
            acc.add_scaled(&self.table[k], s);
        }
        acc.finish()
    }

    /// t(e_i, v) for a basis index on the left and a vector on the right.
    pub fn apply_flat_left(&self, i: usize, v: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.field(), self.out_dim());
        for (j, s) in v.iter() {
            acc.add_scaled(self.at(i, j), s);
        }
        acc.finish()
    }

    /// t(v, e_j) for a vector on the left and a basis index on the right.
    pub fn apply_flat_right(&self, v: &Vector, j: usize) -> Vector {
        let mut acc = Accumulator::new(self.field(), self.out_dim());
        for (i, s) in v.iter() {
            acc.add_scaled(self.at(i, j), s);
        }
        acc.finish()
    }

    /// Same map with its inputs swapped: (j, i) ↦ t(i, j).
    pub fn swap_inputs(&self) -> Tensor2to1 {
        Tensor2to1::from_fn(self.field, self.right, self.left, self.out, |j, i| self.at(i, j).clone())
    }

    /// Linear map of left multiplication by e_i, i.e. v ↦ t(e_i, v).
    pub fn left_map(&self, i: usize) -> LinMap {
        LinMap::from_fn(self.field, self.right, self.out, |j| self.at(i, j).clone())
    }

    /// The map as a LinMap on the tensor product.
    pub fn as_linmap(&self) -> LinMap {
        LinMap { field: self.field, src: self.left * self.right, dst: self.out, cols: self.table.clone() }
    }

    /// Dense t[i][j][k].
    pub fn to_dense(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.left).map(|i| (0..self.right).map(|j| self.at(i, j).to_dense()).collect()).collect()
    }
}

/// Linear map V → W ⊗ U given per basis vector as (j, k, c) triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor1to2 {
    field: Field,
    src: usize,
    left: usize,
    right: usize,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Tensor1to2 {
    pub fn from_terms(
        field: Field,
        left: usize,
        right: usize,
        terms: Vec<Vec<(usize, usize, Scalar)>>,
    ) -> Result<Self, TensorError> {
        let mut clean = Vec::with_capacity(terms.len());
        for t in terms {
            let mut flat = Vec::with_capacity(t.len());
            for (j, k, c) in t {
                if j >= left {
                    return Err(TensorError::OutOfBounds { index: j, dim: left });
                }
                if k >= right {
                    return Err(TensorError::OutOfBounds { index: k, dim: right });
                }
                same_field(field, c.field())?;
                flat.push((j * right + k, c));
            }
            clean.push(Self::unflatten(Vector::from_terms(field, left * right, flat), right));
        }
        Ok(Tensor1to2 { field, src: clean.len(), left, right, terms: clean })
    }

    fn unflatten(v: Vector, right: usize) -> Vec<(usize, usize, Scalar)> {
        v.entries.into_iter().map(|(x, c)| (x / right, x % right, c)).collect()
    }

    /// Builds from the flattened image of each basis vector.
    pub fn from_fn(field: Field, src: usize, left: usize, right: usize, f: impl Fn(usize) -> Vector) -> Self {
        let terms = (0..src)
            .map(|i| {
                let v = f(i);
                assert_eq!(v.dim, left * right, "split map entry dimension mismatch");
                Self::unflatten(v, right)
            })
            .collect();
        Tensor1to2 { field, src, left, right, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[i]
    }

    /// Flattened image of e_i in W ⊗ U.
    pub fn at(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            dim: self.left * self.right,
            entries: self.terms[i].iter().map(|(j, k, c)| (j * self.right + k, c.clone())).collect(),
        }
    }

    pub fn apply(&self, u: &Vector) -> Vector {
        assert_eq!(u.dim, self.src, "split map input dimension mismatch");
        let mut acc = Accumulator::new(self.field, self.left * self.right);
        for (i, a) in u.iter() {
            for (j, k, c) in &self.terms[i] {
                acc.push(j * self.right + k, a * c);
            }
        }
        acc.finish()
    }

    pub fn as_linmap(&self) -> LinMap {
        LinMap::from_fn(self.field, self.src, self.left * self.right, |i| self.at(i))
    }

    /// Dense d[i][j][k].
    pub fn to_dense(&self) -> Vec<Vec<Vec<Scalar>>> {
        let mut out = vec![vec![vec![self.field.zero(); self.right]; self.left]; self.src];
        for (i, t) in self.terms.iter().enumerate() {
            for (j, k, c) in t {
                out[i][*j][*k] = c.clone();
            }
        }
        out
    }
}

/// Evaluates t(u, v).
pub fn contract(t: &Tensor2to1, u: &Vector, v: &Vector) -> Result<Vector, TensorError> {
    same_dim(t.left, u.dim)?;
    same_dim(t.right, v.dim)?;
    same_field(t.field, u.field)?;
    same_field(t.field, v.field)?;
    Ok(t.apply(u, v))
}

/// Evaluates d(u) as (j, k, coefficient) triples.
pub fn cocontract(d: &Tensor1to2, u: &Vector) -> Result<Vec<(usize, usize, Scalar)>, TensorError> {
    same_dim(d.src, u.dim)?;
    same_field(d.field, u.field)?;
    Ok(Tensor1to2::unflatten(d.apply(u), d.right))
}

/// Kronecker product of linear maps.
pub fn map_tensor(f: &LinMap, g: &LinMap) -> LinMap {
    f.kron(g)
}

/// Reduced echelon basis of the span of `vectors` (each of dimension `dim`).
pub fn row_reduce(field: Field, vectors: Vec<Vector>, dim: usize) -> Vec<Vector> {
    let mut basis: Vec<(usize, Vector)> = Vec::new();
    for v in vectors {
        let mut w = v;
        for (p, b) in &basis {
            let c = w.get(*p);
            if !c.is_zero() {
                w = w.sub(&b.scale(&c));
            }
        }
        let first = w.iter().next().map(|(i, s)| (i, s.clone()));
        if let Some((p, lead)) = first {
            let w = w.scale(&lead.inv().expect("nonzero pivot"));
            for (_, b) in basis.iter_mut() {
                let c = b.get(p);
                if !c.is_zero() {
                    *b = b.sub(&w.scale(&c));
                }
            }
            basis.push((p, w));
        }
    }
    let _ = (field, dim);
    basis.into_iter().map(|(_, b)| b).collect()
}

/// Sparse Gaussian elimination for a square system given by its rows.
/// Construction fails with a kernel witness when the rows are dependent.
pub struct Solver {
    field: Field,
    n: usize,
    // Pivot rows in elimination order: (pivot column, row normalized to 1 at the
    // pivot, combination of original rows that produced it).
    pivots: Vec<(usize, Vector, Vector)>,
}

impl Solver {
    pub fn new(field: Field, rows: Vec<Vector>, n: usize) -> Result<Solver, Vector> {
        let m = rows.len();
        let mut pivots: Vec<(usize, Vector, Vector)> = Vec::with_capacity(m);
        let mut pivot_of: Vec<Option<usize>> = vec![None; n];
        for (r, row) in rows.into_iter().enumerate() {
            let mut w = row;
            let mut comb = Vector::basis(field, m, r);
            loop {
                // Eliminate the earliest-created pivot first; later pivot rows
                // vanish on earlier pivot columns, so this terminates.
                let hit = w.iter().filter_map(|(i, s)| pivot_of[i].map(|t| (t, s.clone()))).min_by_key(|(t, _)| *t);
                match hit {
                    Some((t, c)) => {
                        let (_, pr, pc) = &pivots[t];
                        w = w.sub(&pr.scale(&c));
                        comb = comb.sub(&pc.scale(&c));
                    }
                    None => break,
                }
            }
            let first = w.iter().next().map(|(i, s)| (i, s.clone()));
            if let Some((p, lead)) = first {
                let inv = lead.inv().expect("nonzero pivot");
                pivot_of[p] = Some(pivots.len());
                pivots.push((p, w.scale(&inv), comb.scale(&inv)));
            }
        }
        if pivots.len() < n {
            // Rows are dependent, so the map (rows = rows of the matrix) has a
            // nontrivial kernel; recover one from the free columns.
            let free = (0..n).find(|c| pivot_of[*c].is_none()).unwrap();
            return Err(kernel_vector(field, &pivots, free, n));
        }
        Ok(Solver { field, n, pivots })
    }

    /// Solves A x = b where A has the rows given at construction.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        // Each pivot row is Σ comb_r row_r with value 1 at its pivot and zeros at
        // pivots created before it. Back substitution in reverse order.
        let mut x: Vec<Option<Scalar>> = vec![None; self.n];
        for (p, row, comb) in self.pivots.iter().rev() {
            let mut rhs = b.dot(comb);
            for (i, s) in row.iter() {
                if i != *p {
                    let xi = x[i].as_ref().expect("back substitution order");
                    rhs -= &(s * xi);
                }
            }
            x[*p] = Some(rhs);
        }
        let coords: Vec<Scalar> = x.into_iter().map(|s| s.unwrap_or_else(|| self.field.zero())).collect();
        Some(Vector::from_dense(self.field, coords))
    }
}

fn kernel_vector(field: Field, pivots: &[(usize, Vector, Vector)], free: usize, n: usize) -> Vector {
    // Fully reduce pivot rows, then set the free variable to 1.
    let mut reduced: Vec<(usize, Vector)> = Vec::new();
    for (p, row, _) in pivots {
        let mut w = row.clone();
        for (q, b) in &reduced {
            let c = w.get(*q);
            if !c.is_zero() {
                w = w.sub(&b.scale(&c));
            }
        }
        let lead = w.get(*p);
        let w = w.scale(&lead.inv().expect("pivot survives reduction"));
        for (_, b) in reduced.iter_mut() {
            let c = b.get(*p);
            if !c.is_zero() {
                *b = b.sub(&w.scale(&c));
            }
        }
        reduced.push((*p, w));
    }
    let mut terms = vec![(free, field.one())];
    for (p, row) in &reduced {
        let c = row.get(free);
        if !c.is_zero() {
            terms.push((*p, -&c));
        }
    }
    Vector::from_terms(field, n, terms)
}

/// Solves A x = b for a possibly singular square A given by rows; on failure
/// returns the dimension of the kernel.
pub fn solve_square(field: Field, rows: Vec<Vector>, n: usize, b: &Vector) -> Result<Vector, usize> {
    let rank = row_reduce(field, rows.clone(), n).len();
    match Solver::new(field, rows, n) {
        Ok(s) => Ok(s.solve(b).expect("nonsingular")),
        Err(_) => Err(n - rank),
    }
}

/// Rank of a list of vectors.
pub fn rank_of(field: Field, vectors: Vec<Vector>, dim: usize) -> usize {
    row_reduce(field, vectors, dim).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> LinMap {
        let r: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|v| q(*v)).collect()).collect();
        LinMap::from_rows(Field::Rational, &r, rows[0].len()).unwrap()
    }

    #[test]
    fn invert_identity() {
        let id = LinMap::identity(Field::Rational, 4);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn kron_of_identities() {
        let f = Field::Rational;
        assert_eq!(map_tensor(&LinMap::identity(f, 2), &LinMap::identity(f, 3)), LinMap::identity(f, 6));
    }

    #[test]
    fn invert_general() {
        let a = mat(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let b = a.invert().unwrap();
        assert!(a.compose(&b).is_identity());
        assert!(b.compose(&a).is_identity());
    }

    #[test]
    fn singular_gives_kernel_witness() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        match a.invert() {
            Err(TensorError::Singular { witness }) => {
                assert!(!witness.is_zero());
                assert!(a.apply(&witness).is_zero());
            }
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn transpose_is_precomposition() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let p = Vector::from_dense(Field::Rational, vec![q(5), q(7)]);
        let v = Vector::basis(Field::Rational, 2, 1);
        assert_eq!(a.transpose().apply(&p).dot(&v), p.dot(&a.apply(&v)));
    }

    #[test]
    fn contract_and_cocontract_z2() {
        let f = Field::Rational;
        let t = Tensor2to1::from_fn(f, 2, 2, 2, |i, j| Vector::basis(f, 2, (i + j) % 2));
        let g = Vector::basis(f, 2, 1);
        assert_eq!(contract(&t, &g, &g).unwrap(), Vector::basis(f, 2, 0));
        assert!(contract(&t, &g, &Vector::zero(f, 2)).unwrap().is_zero());
        let d = Tensor1to2::from_fn(f, 2, 2, 2, |i| Vector::basis(f, 4, i * 2 + i));
        assert_eq!(cocontract(&d, &g).unwrap(), vec![(1, 1, q(1))]);
        assert!(matches!(contract(&t, &Vector::zero(f, 3), &g), Err(TensorError::DimMismatch { .. })));
    }

    #[test]
    fn solve_square_reports_defect() {
        let f = Field::Rational;
        let rows = mat(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]).transpose().columns().to_vec();
        assert_eq!(solve_square(f, rows, 3, &Vector::zero(f, 3)), Err(2));
    }
}
