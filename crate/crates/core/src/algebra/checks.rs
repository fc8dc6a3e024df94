use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Scalar, SparseVec};

use super::Algebra;

/// Identities checked exhaustively on basis triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureChecks {
    pub associative: bool,
    /// `e_i e_j = -e_j e_i` and `e_i e_i = 0`; the second clause matters in characteristic 2.
    pub anticommutative: bool,
    pub jacobi: bool,
    pub lie: bool,
}

impl Algebra {
    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// First basis triple with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_vec(self.basis_product(i, j), &SparseVec::unit(k, self.field));
                    let right = self.mul_vec(&SparseVec::unit(i, self.field), self.basis_product(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_anticommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            self.basis_product(i, i).is_zero()
                && (i + 1..self.dim).all(|j| self.basis_product(i, j) == &self.basis_product(j, i).neg())
        })
    }

    /// First basis triple on which `(e_i e_j) e_k + (e_j e_k) e_i + (e_k e_i) e_j ≠ 0`.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let unit = |i| SparseVec::unit(i, self.field);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = self
                        .mul_vec(self.basis_product(i, j), &unit(k))
                        .add(&self.mul_vec(self.basis_product(j, k), &unit(i)))
                        .add(&self.mul_vec(self.basis_product(k, i), &unit(j)));
                    if !s.is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn structure_checks(&self) -> StructureChecks {
        let anticommutative = self.is_anticommutative();
        let jacobi = self.jacobi_witness().is_none();
        StructureChecks { associative: self.is_associative(), anticommutative, jacobi, lie: anticommutative && jacobi }
    }

    /// Errors with a witness triple unless the algebra is a Lie algebra.
    pub fn require_lie(&self) -> Result<()> {
        if !self.is_anticommutative() {
            return Err(Error::Invariant("bracket is not anticommutative".into()));
        }
        match self.jacobi_witness() {
            Some((i, j, k)) => Err(Error::JacobiFailure(i, j, k)),
            None => Ok(()),
        }
    }

    /// The algebra with multiplication `x * y = α xy + β yx`.
    pub fn twist(&self, alpha: &Scalar, beta: &Scalar) -> Result<Algebra> {
        for s in [alpha, beta] {
            if s.field() != self.field {
                return Err(Error::FieldMismatch { left: self.field.to_string(), right: s.field().to_string() });
            }
        }
        let mut products = BTreeMap::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.basis_product(i, j).scale(alpha).axpy(beta, self.basis_product(j, i));
                if !v.is_zero() {
                    products.insert((i, j), v);
                }
            }
        }
        Ok(Algebra::from_products(self.field, self.dim, self.labels.clone(), products))
    }

    /// Commutator algebra `[x, y] = xy - yx`.
    pub fn commutator_algebra(&self) -> Algebra {
        let one = self.field.one();
        self.twist(&one, &-&one).expect("scalars come from the algebra's field")
    }

    pub fn opposite(&self) -> Algebra {
        self.twist(&self.field.zero(), &self.field.one()).expect("scalars come from the algebra's field")
    }
}
