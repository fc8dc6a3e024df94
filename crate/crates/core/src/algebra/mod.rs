//! Structure-constant algebras and the subspace computations built on them.

mod checks;
mod ideal;
mod series;
mod subspace;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{accumulate_into, Field, Scalar, SparseVec};

pub use checks::StructureChecks;
pub use ideal::{IdealClosure, Quotient};
pub use series::{SeriesKind, SeriesReport};
pub use subspace::Subspace;

static EMPTY: LazyLock<SparseVec> = LazyLock::new(SparseVec::new);

/// A finite-dimensional algebra given by structure constants
/// `e_i e_j = Σ_k c[i][j][k] e_k`, stored sparsely per basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    products: BTreeMap<(usize, usize), SparseVec>,
}

/// Element of an algebra in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    field: Field,
    dim: usize,
    coords: SparseVec,
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `e_i e_j ∋ c e_k`.
    /// Unlisted products are zero. An empty label list yields `e0, e1, …`.
    pub fn new(
        field: Field,
        dim: usize,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Algebra> {
        let labels = Self::check_labels(dim, labels)?;
        let mut seen = BTreeSet::new();
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch { left: field.to_string(), right: c.field().to_string() });
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry(i, j, k));
            }
            accumulate_into(table.entry((i, j)).or_default(), k, c);
        }
        let products = table
            .into_iter()
            .map(|(key, row)| (key, SparseVec::from_pairs(row)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(Algebra { field, dim, labels, products })
    }

    /// Convenience constructor with small-integer constants.
    pub fn from_i64(field: Field, labels: &[&str], entries: &[(usize, usize, usize, i64)]) -> Result<Algebra> {
        Algebra::new(
            field,
            labels.len(),
            labels.iter().map(|s| s.to_string()).collect(),
            entries.iter().map(|&(i, j, k, c)| (i, j, k, field.from_i64(c))),
        )
    }

    pub(crate) fn from_products(
        field: Field,
        dim: usize,
        labels: Vec<String>,
        products: BTreeMap<(usize, usize), SparseVec>,
    ) -> Algebra {
        let labels = Self::check_labels(dim, labels).expect("label count matches dimension");
        let products = products.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Algebra { field, dim, labels, products }
    }

    fn check_labels(dim: usize, labels: Vec<String>) -> Result<Vec<String>> {
        if labels.is_empty() {
            return Ok((0..dim).map(|i| format!("e{i}")).collect());
        }
        if labels.len() != dim {
            return Err(Error::LabelCount { expected: dim, found: labels.len() });
        }
        Ok(labels)
    }

    pub fn zero_algebra(field: Field) -> Algebra {
        Algebra { field, dim: 0, labels: Vec::new(), products: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `e_i e_j` as a sparse coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        self.products.get(&(i, j)).unwrap_or(&EMPTY)
    }

    /// Nonzero structure constants as `(i, j, k, c)`, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.products.iter().flat_map(|(&(i, j), v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    #[cfg(test)]
    pub(crate) fn products(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.products
    }

    pub(crate) fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let prod = self.basis_product(*i, *j);
                if prod.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in prod.iter() {
                    accumulate_into(&mut acc, *k, &xy * c);
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_vec(&a.coords, &b.coords)))
    }

    pub(crate) fn check(&self, e: &Element) -> Result<()> {
        if e.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: e.dim });
        }
        if e.field != self.field {
            return Err(Error::FieldMismatch { left: self.field.to_string(), right: e.field.to_string() });
        }
        Ok(())
    }

    pub(crate) fn wrap(&self, coords: SparseVec) -> Element {
        debug_assert!(coords.max_index().is_none_or(|m| m < self.dim));
        Element { field: self.field, dim: self.dim, coords }
    }

    pub fn zero_element(&self) -> Element {
        self.wrap(SparseVec::new())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim, "basis index {i} out of range for dimension {}", self.dim);
        self.wrap(SparseVec::unit(i, self.field))
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    /// The basis element with the given label.
    pub fn named(&self, label: &str) -> Option<Element> {
        self.index_of(label).map(|i| self.basis_element(i))
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: coords.len() });
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch { left: self.field.to_string(), right: bad.field().to_string() });
        }
        Ok(self.wrap(SparseVec::from_dense(&coords)))
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<Element> {
        self.element(coords.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    /// Human-readable linear combination of basis labels.
    pub fn format(&self, e: &Element) -> String {
        if e.coords.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (i, c)) in e.coords.iter().enumerate() {
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", s),
            };
            if n == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            if mag != "1" {
                let _ = write!(out, "{mag}*");
            }
            out.push_str(&self.labels[*i]);
        }
        out
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            field: self.field,
            dim: self.dim,
            labels: self.labels.clone(),
            products: self.entries().map(|(i, j, k, c)| (i, j, k, ScalarText::Text(c.to_string()))).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra file serializes")
    }

    pub fn from_json(text: &str) -> Result<Algebra> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.into_algebra()
    }
}

/// On-disk algebra description:
/// `{"field": "Q" | {"p": N}, "dim": n, "labels": [...], "products": [[i, j, k, "c"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    #[serde(default)]
    pub products: Vec<(usize, usize, usize, ScalarText)>,
}

/// A structure constant as written in a file: a string such as `"-3/2"`, or a bare integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Integer(i64),
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<Algebra> {
        let field = self.field;
        let mut entries = Vec::with_capacity(self.products.len());
        for (n, (i, j, k, c)) in self.products.into_iter().enumerate() {
            let value = match c {
                ScalarText::Text(t) => field
                    .parse(&t)
                    .map_err(|_| Error::Parse(format!("products[{n}]: cannot parse scalar {t:?} in {field}")))?,
                ScalarText::Integer(v) => field.from_i64(v),
            };
            entries.push((i, j, k, value));
        }
        Algebra::new(field, self.dim, self.labels, entries).map_err(|e| match e {
            Error::IndexOutOfRange { .. } | Error::DuplicateEntry(..) | Error::LabelCount { .. } => {
                Error::Parse(format!("products: {e}"))
            }
            other => other,
        })
    }
}

impl Element {
    pub(crate) fn from_parts(field: Field, dim: usize, coords: SparseVec) -> Element {
        debug_assert!(coords.max_index().is_none_or(|m| m < dim));
        Element { field, dim, coords }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Scalar {
        self.coords.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        self.coords.to_dense(self.dim, self.field)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    fn same_shape(&self, other: &Element) {
        assert!(self.dim == other.dim && self.field == other.field, "elements of different algebras");
    }

    pub fn add(&self, other: &Element) -> Element {
        self.same_shape(other);
        Element { coords: self.coords.add(&other.coords), ..self.clone() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.same_shape(other);
        Element { coords: self.coords.sub(&other.coords), ..self.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { coords: self.coords.scale(c), ..self.clone() }
    }

    pub fn neg(&self) -> Element {
        Element { coords: self.coords.neg(), ..self.clone() }
    }
}
