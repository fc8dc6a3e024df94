use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(index: usize, field: Field) -> SparseVec {
        SparseVec { entries: vec![(index, field.one())] }
    }

    pub fn single(index: usize, value: Scalar) -> SparseVec {
        if value.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(index, value)] }
        }
    }

    /// Combines duplicate indices and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            accumulate(&mut acc, i, v);
        }
        Self::from_map(acc)
    }

    pub(crate) fn from_map(acc: BTreeMap<usize, Scalar>) -> SparseVec {
        SparseVec { entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
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
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.leading() {
            None => self.clone(),
            Some((_, v)) => self.axpy(&v.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.leading() {
            None => self.clone(),
            Some((_, v)) => self.axpy(&-v.field().one(), other),
        }
    }

    /// Keeps only entries whose index satisfies `keep`, reindexed through `map`.
    pub fn filter_map_index(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, v)| f(*i).map(|j| (j, v.clone()))))
    }
}

pub(crate) fn accumulate(acc: &mut BTreeMap<usize, Scalar>, i: usize, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&i) {
        Some(slot) => *slot = &*slot + &v,
        None => {
            acc.insert(i, v);
        }
    }
}

/// Row space kept in reduced row-echelon form, grown one vector at a time.
///
/// Each stored row has a leading one at its pivot and zeros in every other
/// pivot column, so the stored rows are exactly the rref of the span and two
/// spaces are equal iff their row maps are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    field: Field,
    len: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowSpace {
    pub fn new(field: Field, len: usize) -> RowSpace {
        RowSpace { field, len, rows: BTreeMap::new() }
    }

    pub fn spanned_by<'a>(field: Field, len: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> RowSpace {
        let mut s = RowSpace::new(field, len);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, column: usize) -> bool {
        self.rows.contains_key(&column)
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Normal form of `v` modulo the space: the unique representative with
    /// zeros in every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> =
            v.iter().filter(|(i, _)| self.rows.contains_key(i)).map(|(i, c)| (*i, c.clone())).collect();
        if hits.is_empty() {
            return v.clone();
        }
        // Subtracting a reduced row leaves other pivot coordinates untouched,
        // so the coefficients can all be read off the input.
        let mut acc: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        for (p, c) in hits {
            for (j, r) in self.rows[&p].iter() {
                accumulate(&mut acc, *j, -(&c * r));
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((q, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("leading entry is nonzero"));
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(q) {
                let c = -c;
                *row = row.axpy(&c, &r);
            }
        }
        self.rows.insert(q, r);
        true
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        let mut s = self.clone();
        for r in other.rows.values() {
            s.insert(r);
        }
        s
    }

    /// Dense rref matrix of the basis, rows in pivot order.
    pub fn to_matrix(&self) -> Matrix {
        let rows = self.rows.values().map(|r| r.to_dense(self.len, self.field)).collect::<Vec<_>>();
        if rows.is_empty() {
            return Matrix::zero(self.field, 0, self.len);
        }
        Matrix::from_rows(self.field, rows).expect("rows share the ambient length")
    }
}

/// Linear map stored by sparse columns: column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> LinearMap {
        LinearMap { field, rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(field: Field, n: usize) -> LinearMap {
        LinearMap { field, rows: n, cols: n, columns: (0..n).map(|j| SparseVec::unit(j, field)).collect() }
    }

    pub fn from_columns(field: Field, rows: usize, columns: Vec<SparseVec>) -> LinearMap {
        debug_assert!(columns.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        LinearMap { field, rows, cols: columns.len(), columns }
    }

    pub fn from_matrix(m: &Matrix) -> LinearMap {
        let columns = (0..m.cols()).map(|j| SparseVec::from_dense(&m.column(j))).collect();
        LinearMap { field: m.field(), rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col.iter() {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, c) in v.iter() {
            for (i, a) in self.columns[*j].iter() {
                accumulate(&mut acc, *i, a * c);
            }
        }
        SparseVec::from_map(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "composition dimension mismatch");
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.combine(other, |a, b| a.sub(b))
    }

    fn combine(&self, other: &LinearMap, f: impl Fn(&SparseVec, &SparseVec) -> SparseVec) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "linear map shape mismatch");
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Row-major flattening: entry (i, j) lands at index `i * cols + j`.
    pub fn flatten(&self) -> SparseVec {
        SparseVec::from_pairs(
            self.columns
                .iter()
                .enumerate()
                .flat_map(|(j, col)| col.iter().map(move |(i, v)| (i * self.cols + j, v.clone()))),
        )
    }

    pub fn unflatten(field: Field, rows: usize, cols: usize, flat: &SparseVec) -> LinearMap {
        let mut columns = vec![Vec::new(); cols];
        for (idx, v) in flat.iter() {
            columns[idx % cols].push((idx / cols, v.clone()));
        }
        let columns = columns.into_iter().map(SparseVec::from_pairs).collect();
        LinearMap { field, rows, cols, columns }
    }

    /// `self^k` for square maps.
    pub fn power(&self, k: usize) -> LinearMap {
        let mut acc = LinearMap::identity(self.field, self.cols);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Smallest `k ≥ 1` with `self^k = 0`, if any (checked up to the dimension).
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=self.cols.max(1) {
            if acc.is_zero() {
                return Some(k);
            }
            acc = self.compose(&acc);
        }
        None
    }

    /// Column span as a row space over the codomain.
    pub fn image(&self) -> RowSpace {
        RowSpace::spanned_by(self.field, self.rows, self.columns.iter())
    }
}
