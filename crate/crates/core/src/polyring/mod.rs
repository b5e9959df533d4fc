//! Exact sparse multivariate polynomials over the rationals.
//!
//! Polynomials carry an explicit [`VarSet`] tag so that auxiliary variables
//! (for instance the `t` used by elimination) can be adjoined without a
//! global ring definition. Terms are kept in a sorted map keyed by
//! [`Monomial`], whose ordering is graded reverse lexicographic with the
//! first variable largest.

mod monomial;
mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{Homogeneity, Polynomial};

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by polynomial construction, parsing and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at column {}: {msg}", pos + 1)]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at column {}", pos + 1)]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent at column {} is not a nonnegative integer", pos + 1)]
    NonIntegerExponent { pos: usize },
    #[error("division at column {} is not supported (only integer/integer coefficients)", pos + 1)]
    Division { pos: usize },
    #[error("variable sets differ: {left} vs {right}")]
    VarSetMismatch { left: VarSet, right: VarSet },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("form does not vanish at [0:0:1] (it has a pure power of the last variable)")]
    NotVanishingAtVertex,
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("{0}")]
    Unsupported(String),
}

/// An ordered list of variable names. Two polynomials can only be combined
/// when their variable sets are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// The homogeneous coordinate ring variables `x, y, z`.
    pub fn xyz() -> Self {
        Self::new(&["x", "y", "z"])
    }

    /// Affine variables `x, y`.
    pub fn xy() -> Self {
        Self::new(&["x", "y"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new variable set with `name` appended as the last (smallest) variable.
    pub fn with_extra(&self, name: &str) -> Self {
        let mut names: Vec<String> = self.0.to_vec();
        names.push(name.to_string());
        VarSet(names.into())
    }

    /// A fresh variable name that does not clash with existing ones.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        let mut k = 0;
        while self.index_of(&candidate).is_some() {
            k += 1;
            candidate = format!("{base}{k}");
        }
        candidate
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

/// Integer weights on the variables, used for initial forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, m: &Monomial) -> i64 {
        self.0
            .iter()
            .zip(m.exponents())
            .map(|(w, &e)| w * e as i64)
            .sum()
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
