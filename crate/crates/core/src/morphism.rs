//! Checked algebra homomorphisms and the induced maps `M(h): M(A) → M(B)`
//! on multiplication algebras of surjections.

use std::sync::Arc;

use crate::algebra::{Algebra, Element, Subspace};
use crate::error::{Error, Result};
use crate::exactmath::{LinearMap, Matrix, SparseVec};
use crate::multiplication::{LinearOperator, OperatorAlgebra};

/// A linear map between algebras that is multiplicative on basis pairs.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    domain: Arc<Algebra>,
    codomain: Arc<Algebra>,
    map: LinearMap,
}

impl Homomorphism {
    /// Validates shape, field and multiplicativity `h(e_i e_j) = h(e_i) h(e_j)`.
    pub fn new(
        domain: impl Into<Arc<Algebra>>,
        codomain: impl Into<Arc<Algebra>>,
        matrix: &Matrix,
    ) -> Result<Homomorphism> {
        Self::from_map(domain, codomain, LinearMap::from_matrix(matrix))
    }

    pub fn from_map(
        domain: impl Into<Arc<Algebra>>,
        codomain: impl Into<Arc<Algebra>>,
        map: LinearMap,
    ) -> Result<Homomorphism> {
        let (domain, codomain) = (domain.into(), codomain.into());
        if map.cols() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), found: map.cols() });
        }
        if map.rows() != codomain.dim() {
            return Err(Error::DimensionMismatch { expected: codomain.dim(), found: map.rows() });
        }
        for f in [domain.field(), codomain.field()] {
            if f != map.field() {
                return Err(Error::FieldMismatch { left: f.to_string(), right: map.field().to_string() });
            }
        }
        let h = Homomorphism { domain, codomain, map };
        if let Some((i, j)) = h.multiplicativity_witness() {
            return Err(Error::NotMultiplicative(i, j));
        }
        Ok(h)
    }

    /// For maps that are multiplicative by construction (quotient projections).
    pub(crate) fn unchecked(domain: Arc<Algebra>, codomain: Arc<Algebra>, map: LinearMap) -> Homomorphism {
        let h = Homomorphism { domain, codomain, map };
        debug_assert!(h.multiplicativity_witness().is_none());
        h
    }

    fn multiplicativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.domain.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.map.apply(self.domain.basis_product(i, j));
                let rhs = self.codomain.mul_vec(self.map.column(i), self.map.column(j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn identity(a: impl Into<Arc<Algebra>>) -> Homomorphism {
        let a = a.into();
        let map = LinearMap::identity(a.field(), a.dim());
        Homomorphism { domain: a.clone(), codomain: a, map }
    }

    pub fn zero(domain: impl Into<Arc<Algebra>>, codomain: impl Into<Arc<Algebra>>) -> Homomorphism {
        let (domain, codomain) = (domain.into(), codomain.into());
        let map = LinearMap::zero(domain.field(), codomain.dim(), domain.dim());
        Homomorphism { domain, codomain, map }
    }

    pub fn domain(&self) -> &Arc<Algebra> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Algebra> {
        &self.codomain
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> Matrix {
        self.map.to_matrix()
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        self.domain.check(e)?;
        Ok(self.codomain.wrap(self.map.apply(e.coords())))
    }

    pub fn kernel(&self) -> Subspace {
        let vectors: Vec<SparseVec> = self.matrix().null_space().iter().map(|v| SparseVec::from_dense(v)).collect();
        let ker = Subspace::spanned_by(self.domain.field(), self.domain.dim(), vectors.iter());
        assert!(self.domain.is_ideal(&ker), "kernel of a homomorphism must be an ideal");
        ker
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_space(self.map.image())
    }

    pub fn is_surjective(&self) -> bool {
        self.map.image().rank() == self.codomain.dim()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Homomorphism) -> Result<Homomorphism> {
        if first.codomain.dim() != self.domain.dim() || *first.codomain != *self.domain {
            return Err(Error::InvalidArgument("codomain of the first map is not the domain of the second".into()));
        }
        Ok(Homomorphism {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            map: self.map.compose(&first.map),
        })
    }

    /// A right inverse `s` with `h ∘ s = id`, chosen by zeroing free variables
    /// in each column solve.
    pub fn section(&self) -> Result<LinearMap> {
        if !self.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let m = self.matrix();
        let field = self.domain.field();
        let columns = (0..self.codomain.dim())
            .map(|t| {
                let target = SparseVec::unit(t, field).to_dense(self.codomain.dim(), field);
                let x = m.solve(&target)?.ok_or(Error::NotSurjective)?;
                Ok(SparseVec::from_dense(&x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap::from_columns(field, self.domain.dim(), columns))
    }
}

/// The induced homomorphism `M(h): M(A) → M(B)` of a surjection `h: A → B`,
/// characterised by `M(h)(u) ∘ h = h ∘ u`.
#[derive(Clone, Debug)]
pub struct InducedMultHom {
    hom: Homomorphism,
    domain_mult: OperatorAlgebra,
    section: LinearMap,
    kernel: Subspace,
}

impl InducedMultHom {
    pub fn new(hom: &Homomorphism) -> Result<InducedMultHom> {
        let section = hom.section()?;
        Ok(InducedMultHom {
            domain_mult: OperatorAlgebra::mult_algebra(hom.domain()),
            kernel: hom.kernel(),
            section,
            hom: hom.clone(),
        })
    }

    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    pub fn domain_mult(&self) -> &OperatorAlgebra {
        &self.domain_mult
    }

    /// `M(h)(u) = h ∘ u ∘ s`; the intertwining identity is verified exactly,
    /// which makes the result independent of the section chosen.
    pub fn apply(&self, u: &LinearOperator) -> Result<LinearOperator> {
        if u.dim() != self.hom.domain().dim() {
            return Err(Error::DimensionMismatch { expected: self.hom.domain().dim(), found: u.dim() });
        }
        if !self.domain_mult.contains(u) {
            return Err(Error::NotInMultiplicationAlgebra);
        }
        if self.kernel.rows().any(|k| !self.kernel.contains_vec(&u.map().apply(k))) {
            return Err(Error::Invariant("operator in M(A) does not preserve the kernel".into()));
        }
        let h = self.hom.map();
        let v = h.compose(u.map()).compose(&self.section);
        if v.compose(h) != h.compose(u.map()) {
            return Err(Error::Invariant("induced operator fails v∘h = h∘u".into()));
        }
        Ok(LinearOperator::from_map(v))
    }

    /// Whether the images of a basis of `M(A)` span `M(B)`.
    pub fn is_surjective(&self) -> Result<bool> {
        let images = self.domain_mult.basis().iter().map(|u| self.apply(u)).collect::<Result<Vec<_>>>()?;
        Ok(OperatorAlgebra::mult_algebra(self.hom.codomain()).is_spanned_by(&images))
    }

    /// Images of the generators of `M(A)`.
    pub fn generator_images(&self) -> Result<Vec<LinearOperator>> {
        self.domain_mult.generators().iter().map(|g| self.apply(g)).collect()
    }
}

/// One-shot `M(h)(u)`.
pub fn induced_mult_hom(h: &Homomorphism, u: &LinearOperator) -> Result<LinearOperator> {
    InducedMultHom::new(h)?.apply(u)
}
