use serde::{Deserialize, Serialize};

use super::{Algebra, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// `A_[1] = A`, `A_[n+1] = A·A_[n] + A_[n]·A`.
    Weak,
    /// `A_(1) = A`, `A_(n+1) = Σ_{0<m<n+1} A_(m)·A_(n+1-m)`.
    Strong,
    /// `A^(0) = A`, `A^(n+1) = A^(n)·A^(n)`.
    Derived,
}

impl SeriesKind {
    /// Index carried by the first term: 1 for the weak and strong series, 0 for the derived one.
    pub fn first_index(self) -> usize {
        match self {
            SeriesKind::Weak | SeriesKind::Strong => 1,
            SeriesKind::Derived => 0,
        }
    }
}

/// A computed descending series.
///
/// `terms[k]` is the term with index `kind.first_index() + k`. Computation
/// stops at the first zero term (whose index is `vanishing_index`) or once the
/// series is certified constant, in which case the last two terms are equal.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    pub vanishing_index: Option<usize>,
}

impl SeriesReport {
    /// Term with the series' own index. Indices past the computed range
    /// return the final term, which the series keeps from then on.
    pub fn term(&self, index: usize) -> &Subspace {
        let first = self.kind.first_index();
        assert!(index >= first, "series index {index} below first index {first}");
        let k = (index - first).min(self.terms.len() - 1);
        &self.terms[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("a series has at least one term")
    }

    fn finish_zero(kind: SeriesKind, terms: Vec<Subspace>) -> SeriesReport {
        let vanishing_index = Some(kind.first_index() + terms.len() - 1);
        SeriesReport { kind, terms, stabilized: false, vanishing_index }
    }

    fn finish_stable(kind: SeriesKind, terms: Vec<Subspace>) -> SeriesReport {
        SeriesReport { kind, terms, stabilized: true, vanishing_index: None }
    }
}

impl Algebra {
    /// Iterates a one-step recursion `t ↦ step(t)` from the full space. Such a
    /// series is constant as soon as two consecutive terms agree.
    fn iterate_series(&self, kind: SeriesKind, step: impl Fn(&Subspace) -> Subspace) -> SeriesReport {
        let mut terms = vec![self.full_space()];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                return SeriesReport::finish_zero(kind, terms);
            }
            let next = step(last);
            let stable = next == *last;
            terms.push(next);
            if stable {
                return SeriesReport::finish_stable(kind, terms);
            }
        }
    }

    pub fn weak_series(&self) -> SeriesReport {
        let full = self.full_space();
        self.iterate_series(SeriesKind::Weak, |t| self.subspace_product(&full, t).sum(&self.subspace_product(t, &full)))
    }

    pub fn derived_series(&self) -> SeriesReport {
        self.iterate_series(SeriesKind::Derived, |t| self.subspace_product(t, t))
    }

    /// The strong series can plateau and then drop again (the squares-chain
    /// algebra does exactly that), so equal neighbours prove nothing. If
    /// `A_(s) = … = A_(2s)`, every summand of `A_(n)` for `n > 2s` has an index
    /// pair with the larger member inside the plateau, which forces
    /// `A_(n) = A_(s)` by induction; that is the stopping rule used here.
    pub fn strong_series(&self) -> SeriesReport {
        let kind = SeriesKind::Strong;
        // terms[k] = A_(k+1)
        let mut terms: Vec<Subspace> = vec![self.full_space()];
        let mut plateau_start = 1;
        loop {
            let n = terms.len();
            if terms[n - 1].is_zero() {
                return SeriesReport::finish_zero(kind, terms);
            }
            if n >= 2 * plateau_start {
                terms.truncate(plateau_start + 1);
                return SeriesReport::finish_stable(kind, terms);
            }
            let mut next = self.zero_space();
            for m in 1..=n {
                let (p, q) = (&terms[m - 1], &terms[n - m]);
                next = next.sum(&self.subspace_product(p, q));
            }
            if next != terms[n - 1] {
                plateau_start = n + 1;
            }
            terms.push(next);
        }
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        match kind {
            SeriesKind::Weak => self.weak_series(),
            SeriesKind::Strong => self.strong_series(),
            SeriesKind::Derived => self.derived_series(),
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.weak_series().vanishing_index.is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().vanishing_index.is_some()
    }
}
