use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{LinearMap, RowSpace, SparseVec};
use crate::morphism::Homomorphism;

use super::{Algebra, Element, Subspace};

/// Two-sided ideal together with its generation filtration
/// `V_0 = span(generators) ⊆ V_1 ⊆ …`, `V_{t+1} = V_t + A·V_t + V_t·A`.
#[derive(Clone, Debug)]
pub struct IdealClosure {
    pub ideal: Subspace,
    pub layers: Vec<Subspace>,
}

impl IdealClosure {
    /// First filtration step containing `e`, if `e` lies in the ideal.
    pub fn depth_of(&self, e: &Element) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(e))
    }

    /// Number of multiplication rounds needed to saturate.
    pub fn depth(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }
}

/// Quotient algebra `A/I` on the complement spanned by non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<Algebra>,
    pub projection: Homomorphism,
    /// Coordinates of `A` whose images form the quotient basis, in order.
    pub complement: Vec<usize>,
}

impl Algebra {
    pub fn ideal_closure(&self, generators: &[Element]) -> IdealClosure {
        let mut current = RowSpace::new(self.field, self.dim);
        let mut frontier: Vec<SparseVec> = Vec::new();
        for g in generators {
            if current.insert(g.coords()) {
                frontier.push(g.coords().clone());
            }
        }
        let mut layers = vec![Subspace::from_space(current.clone())];
        // A·V_t ⊆ V_t + A·(vectors new at step t), so only the frontier needs multiplying.
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for i in 0..self.dim {
                    let e = SparseVec::unit(i, self.field);
                    for p in [self.mul_vec(&e, f), self.mul_vec(f, &e)] {
                        if current.insert(&p) {
                            next.push(p);
                        }
                    }
                }
            }
            if !next.is_empty() {
                layers.push(Subspace::from_space(current.clone()));
            }
            frontier = next;
        }
        IdealClosure { ideal: Subspace::from_space(current), layers }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.rows().all(|r| {
            (0..self.dim).all(|i| {
                let e = SparseVec::unit(i, self.field);
                s.contains_vec(&self.mul_vec(&e, r)) && s.contains_vec(&self.mul_vec(r, &e))
            })
        })
    }

    /// The subspace with the restricted product, in its reduced basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Algebra> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        let pivots = s.pivots();
        let rows: Vec<&SparseVec> = s.rows().collect();
        let position: BTreeMap<usize, usize> = pivots.iter().enumerate().map(|(n, &c)| (c, n)).collect();
        let mut products = BTreeMap::new();
        for (a, ra) in rows.iter().enumerate() {
            for (b, rb) in rows.iter().enumerate() {
                let p = self.mul_vec(ra, rb);
                if !s.contains_vec(&p) {
                    return Err(Error::InvalidArgument("subspace is not closed under the product".into()));
                }
                // rows are fully reduced, so coordinates are the entries at pivot columns
                let coords = p.filter_map_index(|i| position.get(&i).copied());
                if !coords.is_zero() {
                    products.insert((a, b), coords);
                }
            }
        }
        let labels = pivots.iter().map(|&c| self.labels[c].clone()).collect();
        Ok(Algebra::from_products(self.field, pivots.len(), labels, products))
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: ideal.ambient_dim() });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let complement: Vec<usize> = (0..self.dim).filter(|c| !ideal.space().is_pivot(*c)).collect();
        let position: BTreeMap<usize, usize> = complement.iter().enumerate().map(|(n, &c)| (c, n)).collect();
        let project = |v: &SparseVec| ideal.reduce(v).filter_map_index(|i| position.get(&i).copied());

        let mut products = BTreeMap::new();
        for (s, &a) in complement.iter().enumerate() {
            for (t, &b) in complement.iter().enumerate() {
                let v = project(self.basis_product(a, b));
                if !v.is_zero() {
                    products.insert((s, t), v);
                }
            }
        }
        let labels = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let quotient = Arc::new(Algebra::from_products(self.field, complement.len(), labels, products));
        let columns = (0..self.dim).map(|j| project(&SparseVec::unit(j, self.field))).collect();
        let map = LinearMap::from_columns(self.field, complement.len(), columns);
        // Multiplicative by construction: the projection is the quotient map in these coordinates.
        let projection = Homomorphism::unchecked(Arc::new(self.clone()), quotient.clone(), map);
        Ok(Quotient { algebra: quotient, projection, complement })
    }
}
