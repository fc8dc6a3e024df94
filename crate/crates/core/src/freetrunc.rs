//! Truncated free associative algebras `k⟨X⟩/(T ∪ X^d)` with monomial
//! relations `T`, their truncation maps, and coefficient extraction.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element, Subspace};
use crate::error::{Error, Result};
use crate::exactmath::{Field, LinearMap, Matrix, RowSpace, Scalar, SparseVec};
use crate::morphism::Homomorphism;
use crate::multiplication::LinearOperator;

/// Default cap on the number of basis words of a built stage.
pub const DEFAULT_MAX_DIM: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Word {
        Word(letters.into_iter().collect())
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `letter^n`.
    pub fn power(letter: char, n: usize) -> Word {
        Word(vec![letter; n])
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Word {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Forbids every subword of shape `left m_1 … m_r right` with all `m_i ∈ middle`, `r ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sandwich {
    pub left: char,
    pub middle: BTreeSet<char>,
    pub right: char,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbiddenSet {
    pub literals: BTreeSet<Word>,
    pub sandwiches: Vec<Sandwich>,
}

impl ForbiddenSet {
    pub fn forbids(&self, w: &Word) -> bool {
        let s = w.letters();
        let literal = self
            .literals
            .iter()
            .any(|lit| lit.len() <= s.len() && s.windows(lit.len()).any(|win| win == lit.letters()));
        literal || self.sandwiches.iter().any(|rule| sandwich_hit(rule, s))
    }
}

fn sandwich_hit(rule: &Sandwich, s: &[char]) -> bool {
    (0..s.len()).filter(|&i| s[i] == rule.left).any(|i| {
        for &c in &s[i + 1..] {
            if c == rule.right {
                return true;
            }
            if !rule.middle.contains(&c) {
                return false;
            }
        }
        false
    })
}

/// Alphabet, monomial relations and truncation degree, over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub alphabet: Vec<char>,
    pub forbidden: ForbiddenSet,
    pub degree: usize,
}

/// JSON form: `{"alphabet": ["x","w","z"], "literals": ["xz"], "sandwich": [["w","x","w"]], "degree": 8}`.
/// The middle entry of a sandwich rule lists its letters as one string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationConfig {
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub literals: Vec<String>,
    #[serde(default)]
    pub sandwich: Vec<[String; 3]>,
    pub degree: usize,
    #[serde(default)]
    pub field: Option<Field>,
}

fn single_letter(s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::InvalidPresentation(format!("'{s}' is not a single letter"))),
    }
}

impl PresentationConfig {
    pub fn into_presentation(self) -> Result<Presentation> {
        let alphabet = self.alphabet.iter().map(|s| single_letter(s)).collect::<Result<Vec<_>>>()?;
        let literals = self.literals.iter().map(|s| Word::from(s.as_str())).collect();
        let sandwiches = self
            .sandwich
            .iter()
            .map(|[l, m, r]| {
                Ok(Sandwich { left: single_letter(l)?, middle: m.chars().collect(), right: single_letter(r)? })
            })
            .collect::<Result<Vec<_>>>()?;
        let field = self.field.unwrap_or(Field::RATIONALS);
        Presentation::new(field, alphabet, ForbiddenSet { literals, sandwiches }, self.degree)
    }
}

impl From<&Presentation> for PresentationConfig {
    fn from(p: &Presentation) -> PresentationConfig {
        PresentationConfig {
            alphabet: p.alphabet.iter().map(|c| c.to_string()).collect(),
            literals: p.forbidden.literals.iter().map(Word::to_string).collect(),
            sandwich: p
                .forbidden
                .sandwiches
                .iter()
                .map(|s| [s.left.to_string(), s.middle.iter().collect(), s.right.to_string()])
                .collect(),
            degree: p.degree,
            field: Some(p.field),
        }
    }
}

impl Presentation {
    pub fn new(field: Field, alphabet: Vec<char>, forbidden: ForbiddenSet, degree: usize) -> Result<Presentation> {
        let invalid = |m: String| Err(Error::InvalidPresentation(m));
        if alphabet.is_empty() {
            return invalid("alphabet is empty".into());
        }
        let letters: BTreeSet<char> = alphabet.iter().copied().collect();
        if letters.len() != alphabet.len() {
            return invalid("alphabet repeats a letter".into());
        }
        if degree < 1 {
            return invalid("degree must be at least 1".into());
        }
        for lit in &forbidden.literals {
            if lit.len() < 2 {
                return invalid(format!("literal '{lit}' has length below 2"));
            }
            if let Some(c) = lit.letters().iter().find(|c| !letters.contains(c)) {
                return invalid(format!("literal '{lit}' uses '{c}' outside the alphabet"));
            }
        }
        for s in &forbidden.sandwiches {
            let used = [s.left, s.right].into_iter().chain(s.middle.iter().copied());
            if let Some(c) = used.into_iter().find(|c| !letters.contains(c)) {
                return invalid(format!("sandwich rule uses '{c}' outside the alphabet"));
            }
        }
        Ok(Presentation { field, alphabet, forbidden, degree })
    }

    pub fn from_json(text: &str) -> Result<Presentation> {
        let config: PresentationConfig = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        config.into_presentation()
    }

    pub fn with_degree(&self, degree: usize) -> Result<Presentation> {
        Presentation::new(self.field, self.alphabet.clone(), self.forbidden.clone(), degree)
    }

    /// Same alphabet, relations and field; degrees may differ.
    pub fn same_relations(&self, other: &Presentation) -> bool {
        self.field == other.field && self.alphabet == other.alphabet && self.forbidden == other.forbidden
    }
}

/// A finite stage: nonempty allowed words of length `< d` with truncated concatenation.
#[derive(Clone, Debug)]
pub struct TruncatedFreeAlgebra {
    presentation: Presentation,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    algebra: Arc<Algebra>,
}

/// Builds a stage with the default dimension cap.
pub fn build_truncated(presentation: &Presentation) -> Result<TruncatedFreeAlgebra> {
    TruncatedFreeAlgebra::build(presentation, DEFAULT_MAX_DIM)
}

impl TruncatedFreeAlgebra {
    /// Enumerates words in graded-lex order (by alphabet position). Since the
    /// allowed set is closed under subwords, extending allowed words of length
    /// `L` by one letter reaches every allowed word of length `L + 1`.
    pub fn build(presentation: &Presentation, max_dim: usize) -> Result<TruncatedFreeAlgebra> {
        let d = presentation.degree;
        let mut words: Vec<Word> = Vec::new();
        let mut level = vec![Word::empty()];
        for _ in 1..d {
            let mut next = Vec::new();
            for w in &level {
                for &c in &presentation.alphabet {
                    let candidate = w.concat(&Word(vec![c]));
                    if !presentation.forbidden.forbids(&candidate) {
                        next.push(candidate);
                    }
                }
            }
            if words.len() + next.len() > max_dim {
                return Err(Error::DimensionLimit { dim: words.len() + next.len(), limit: max_dim });
            }
            words.extend(next.iter().cloned());
            level = next;
        }
        let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let field = presentation.field;
        let mut entries = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if u.len() + v.len() < d {
                    if let Some(&k) = index.get(&u.concat(v)) {
                        entries.push((i, j, k, field.one()));
                    }
                }
            }
        }
        let labels = words.iter().map(Word::to_string).collect();
        let algebra = Arc::new(Algebra::new(field, words.len(), labels, entries)?);
        Ok(TruncatedFreeAlgebra { presentation: presentation.clone(), words, index, algebra })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree(&self) -> usize {
        self.presentation.degree
    }

    pub fn field(&self) -> Field {
        self.presentation.field
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn check_letters(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|c| !self.presentation.alphabet.contains(c)) {
            Some(c) => Err(Error::InvalidArgument(format!("letter '{c}' is not in the alphabet"))),
            None => Ok(()),
        }
    }

    /// Image of a word; zero if it is forbidden or too long. The empty word has no image.
    pub fn word(&self, w: &str) -> Result<Element> {
        let w = Word::from(w);
        self.check_letters(&w)?;
        if w.is_empty() {
            return Err(Error::InvalidArgument("the empty word is not in the nonunital algebra".into()));
        }
        Ok(match self.index_of(&w) {
            Some(i) => self.algebra.basis_element(i),
            None => self.algebra.zero_element(),
        })
    }

    /// `Σ c_i w_i` from `(word, coefficient)` pairs.
    pub fn combination(&self, terms: &[(&str, Scalar)]) -> Result<Element> {
        let mut out = self.algebra.zero_element();
        for (w, c) in terms {
            out = out.add(&self.word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Coefficient of a given word.
    pub fn coefficient(&self, e: &Element, w: &Word) -> Scalar {
        match self.index_of(w) {
            Some(i) => e.coord(i),
            None => self.field().zero(),
        }
    }

    /// `(word, coefficient)` pairs of the nonzero terms, in basis order.
    pub fn terms(&self, e: &Element) -> Vec<(Word, Scalar)> {
        e.coords().iter().map(|(i, c)| (self.words[*i].clone(), c.clone())).collect()
    }

    /// Projection onto the stage of degree `target_degree ≤ d`.
    pub fn truncate_map(&self, target_degree: usize) -> Result<Homomorphism> {
        let target = TruncatedFreeAlgebra::build(&self.presentation.with_degree(target_degree)?, self.dim().max(1))?;
        self.map_onto(&target)
    }

    /// The truncation `self → target`; words of length `≥ target.degree()` go to zero.
    pub fn map_onto(&self, target: &TruncatedFreeAlgebra) -> Result<Homomorphism> {
        if !self.presentation.same_relations(&target.presentation) {
            return Err(Error::InvalidPresentation("truncation between different presentations".into()));
        }
        if target.degree() > self.degree() {
            return Err(Error::InvalidArgument(format!(
                "cannot truncate degree {} to larger degree {}",
                self.degree(),
                target.degree()
            )));
        }
        let field = self.field();
        let columns = self
            .words
            .iter()
            .map(|w| match target.index_of(w) {
                Some(t) => SparseVec::unit(t, field),
                None => SparseVec::new(),
            })
            .collect();
        let map = LinearMap::from_columns(field, target.dim(), columns);
        Homomorphism::from_map(self.algebra.clone(), target.algebra.clone(), map)
    }

    /// `span{a r b : a, b allowed words or the empty word}`, using the unital hull only as multipliers.
    pub fn truncated_ideal(&self, r: &Element) -> Result<Subspace> {
        self.algebra.check(r)?;
        let mut multipliers = vec![Word::empty()];
        multipliers.extend(self.words.iter().cloned());
        let terms = self.terms(r);
        let mut span = RowSpace::new(self.field(), self.dim());
        for a in &multipliers {
            for b in &multipliers {
                let mut v = std::collections::BTreeMap::new();
                for (w, c) in &terms {
                    let full = a.concat(w).concat(b);
                    if full.len() < self.degree() {
                        if let Some(k) = self.index_of(&full) {
                            crate::exactmath::accumulate_into(&mut v, k, c.clone());
                        }
                    }
                }
                span.insert(&SparseVec::from_map(v));
            }
        }
        Ok(Subspace::from_space(span))
    }

    /// For each `j` with `prefix^j marker` a basis word, the coefficients of
    /// `prefix^j marker tail^k` (`k = 0..d-2`) in `e`. Row `j` is the right
    /// coefficient of `prefix^j marker`, read as a truncated power series in `tail`.
    pub fn right_coefficient_profile(
        &self,
        e: &Element,
        prefix: char,
        marker: char,
        tail: char,
    ) -> Result<CoefficientProfile> {
        let letters = [prefix, marker, tail];
        for c in letters {
            self.check_letters(&Word(vec![c]))?;
        }
        if prefix == marker || marker == tail {
            return Err(Error::InvalidArgument("marker must differ from prefix and tail letters".into()));
        }
        let d = self.degree();
        let cols = d.saturating_sub(1);
        let mut rows = Vec::new();
        for j in 0..cols {
            let head = Word::power(prefix, j).concat(&Word(vec![marker]));
            if self.index_of(&head).is_none() {
                continue;
            }
            let row = (0..cols).map(|k| self.coefficient(e, &head.concat(&Word::power(tail, k)))).collect();
            rows.push(row);
        }
        let field = self.field();
        let matrix = if rows.is_empty() { Matrix::zero(field, 0, cols) } else { Matrix::from_rows(field, rows)? };
        let rank = matrix.rank();
        Ok(CoefficientProfile { matrix, rank })
    }

    /// `(1 + x)^exponent` truncated below degree `d`, split as the unit
    /// coefficient and the remaining element of the nonunital algebra.
    pub fn power_series_unit_inverse(&self, letter: char, exponent: i64) -> Result<(Scalar, Element)> {
        self.check_letters(&Word(vec![letter]))?;
        let coeffs = unit_power_coefficients(self.field(), exponent, self.degree())?;
        let mut tail = self.algebra.zero_element();
        for (k, c) in coeffs.iter().enumerate().skip(1) {
            if let Some(i) = self.index_of(&Word::power(letter, k)) {
                tail = tail.add(&self.algebra.basis_element(i).scale(c));
            }
        }
        Ok((coeffs[0].clone(), tail))
    }
}

/// Right-coefficient matrix and its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientProfile {
    pub matrix: Matrix,
    pub rank: usize,
}

/// Coefficients `C(e, k)` of `x^k` in `(1 + x)^e` for `k < len`, with `e ≤ -1`:
/// `C(-n, k) = (-1)^k C(n + k - 1, k)`.
pub fn unit_power_coefficients(field: Field, exponent: i64, len: usize) -> Result<Vec<Scalar>> {
    if exponent > -1 {
        return Err(Error::InvalidArgument(format!("exponent {exponent} is not negative")));
    }
    let n = BigInt::from(-exponent);
    let mut c = BigInt::one();
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        if k > 0 {
            // C(n+k-1, k) = C(n+k-2, k-1) (n+k-1) / k
            c = c * (&n + BigInt::from(k - 1)) / BigInt::from(k);
        }
        let signed = if k % 2 == 1 { -c.clone() } else { c.clone() };
        out.push(field.from_bigint(&signed));
    }
    Ok(out)
}

/// Solves `(1 - u)(y) = target` for nilpotent `u` as `Σ_{k ≥ 0} u^k(target)`,
/// then checks the result by substitution.
pub fn solve_unipotent(u: &LinearOperator, target: &Element) -> Result<Element> {
    if u.dim() != target.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: target.dim() });
    }
    if u.nilpotency_index().is_none() {
        return Err(Error::NotNilpotent);
    }
    let mut y = target.clone();
    let mut term = target.clone();
    loop {
        term = u.apply(&term);
        if term.is_zero() {
            break;
        }
        y = y.add(&term);
    }
    if y.sub(&u.apply(&y)) != *target {
        return Err(Error::Invariant("(1 - u)(y) differs from the target".into()));
    }
    Ok(y)
}
