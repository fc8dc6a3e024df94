use crate::exactmath::{Field, Matrix, RowSpace, SparseVec};

use super::{Algebra, Element};

/// Linear subspace of an algebra, held as the rref of a spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    space: RowSpace,
}

impl Subspace {
    pub(crate) fn from_space(space: RowSpace) -> Subspace {
        Subspace { space }
    }

    pub(crate) fn space(&self) -> &RowSpace {
        &self.space
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { space: RowSpace::new(field, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let units: Vec<SparseVec> = (0..ambient).map(|i| SparseVec::unit(i, field)).collect();
        Subspace { space: RowSpace::spanned_by(field, ambient, units.iter()) }
    }

    pub fn spanned_by<'a>(field: Field, ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Subspace {
        Subspace { space: RowSpace::spanned_by(field, ambient, vectors) }
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_len()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, e: &Element) -> bool {
        assert_eq!(e.dim(), self.ambient_dim(), "element and subspace live in different algebras");
        self.space.contains(e.coords())
    }

    pub(crate) fn contains_vec(&self, v: &SparseVec) -> bool {
        self.space.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace { space: self.space.sum(&other.space) }
    }

    /// Rref basis rows, in pivot order.
    pub(crate) fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.space.rows()
    }

    pub fn basis(&self) -> Vec<Element> {
        let (field, dim) = (self.field(), self.ambient_dim());
        self.rows().map(|r| Element { field, dim, coords: r.clone() }).collect()
    }

    pub fn basis_matrix(&self) -> Matrix {
        self.space.to_matrix()
    }

    /// Pivot columns of the rref basis.
    pub fn pivots(&self) -> Vec<usize> {
        self.space.pivots().collect()
    }

    /// Normal form of `e` modulo this subspace.
    pub(crate) fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.space.reduce(v)
    }
}

impl Algebra {
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn span(&self, elements: &[Element]) -> Subspace {
        Subspace::spanned_by(self.field, self.dim, elements.iter().map(|e| &e.coords))
    }

    /// `UV`: the span of all products `uv`, `u ∈ U`, `v ∈ V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        assert_eq!(u.ambient_dim(), self.dim, "subspace does not belong to this algebra");
        assert_eq!(v.ambient_dim(), self.dim, "subspace does not belong to this algebra");
        let mut out = RowSpace::new(self.field, self.dim);
        for a in u.rows() {
            for b in v.rows() {
                out.insert(&self.mul_vec(a, b));
            }
        }
        Subspace { space: out }
    }
}
