//! Single-vertex cell complexes with algebraic edges, the smoothness
//! criterion, and the two spline-dimension oracles.
//!
//! Faces and edges are indexed cyclically: edge `i` separates faces `i-1`
//! and `i`, so face `i` is bounded by edges `i` and `i+1`. The vertex sits
//! at `[0:0:1]`.

mod classify;
mod formula;
mod kernel;

use std::fmt;

use thiserror::Error;

pub use classify::{classify_configuration, Configuration, Diagnostic};
pub use formula::{dim_formula, FormulaOracle};
pub use kernel::{dim_kernel, generator_degrees, is_spline, spline_basis, KernelSystem};

use crate::groebner::Ideal;
use crate::polyring::{parse_polynomial, PolyError, Polynomial, Rational, VarSet};

/// A problem with a proposed complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewEdges(usize),
    ZeroForm { edge: usize },
    WrongVariables { edge: usize },
    NotHomogeneous { edge: usize },
    NotVanishingAtVertex { edge: usize },
    AdjacentProportional { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewEdges(n) => write!(f, "a star needs at least 2 edges, got {n}"),
            Violation::ZeroForm { edge } => write!(f, "edge {} has the zero form", edge + 1),
            Violation::WrongVariables { edge } => {
                write!(f, "edge {} is not a form in x, y, z", edge + 1)
            }
            Violation::NotHomogeneous { edge } => write!(f, "edge {} is not homogeneous", edge + 1),
            Violation::NotVanishingAtVertex { edge } => {
                write!(f, "edge {} does not pass through the vertex", edge + 1)
            }
            Violation::AdjacentProportional { first, second } => write!(
                f,
                "adjacent edges {} and {} are the same curve",
                first + 1,
                second + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplineError {
    #[error("invalid complex: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the dimension formula needs uniform smoothness {expected}, but edge {} has {found}", edge + 1)]
    MixedSmoothness { expected: u32, edge: usize, found: u32 },
    #[error("expected {expected} parts, one per face, got {got}")]
    WrongPartCount { expected: usize, got: usize },
    #[error("spline parts must be forms of one common degree")]
    DegreeMismatch,
    #[error(transparent)]
    Hilbert(#[from] crate::hilbert::HilbertError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// An edge: a form through the vertex and an optional smoothness override.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub form: Polynomial,
    pub smoothness: Option<u32>,
}

/// A star complex with cyclically ordered edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarComplex {
    edges: Vec<Edge>,
    default_smoothness: u32,
    warnings: Vec<String>,
}

pub(crate) fn proportional(f: &Polynomial, g: &Polynomial) -> bool {
    match (f.leading_term(), g.leading_term()) {
        (Some((_, cf)), Some((_, cg))) => (f.scale(cg) - g.scale(cf)).is_zero(),
        _ => f.is_zero() && g.is_zero(),
    }
}

/// Checks the star conditions and builds the complex.
pub fn validate_star(edges: Vec<Edge>, default_smoothness: u32) -> Result<StarComplex, SplineError> {
    let n = edges.len();
    let mut bad = Vec::new();
    if n < 2 {
        bad.push(Violation::TooFewEdges(n));
    }
    let mut warnings = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let f = &e.form;
        if f.is_zero() {
            bad.push(Violation::ZeroForm { edge: i });
            continue;
        }
        if f.vars() != &VarSet::xyz() {
            bad.push(Violation::WrongVariables { edge: i });
            continue;
        }
        let Ok(deg) = f.form_degree() else {
            bad.push(Violation::NotHomogeneous { edge: i });
            continue;
        };
        if f.terms().any(|(m, _)| m.exponents()[2] == deg) {
            bad.push(Violation::NotVanishingAtVertex { edge: i });
        }
        if f.terms().all(|(m, _)| m.exponents()[2] > 0) {
            warnings.push(format!(
                "edge {} is divisible by z (it contains the line at infinity)",
                i + 1
            ));
        }
    }
    if n >= 2 && bad.is_empty() {
        // a 2-star has one adjacent pair, seen from both sides
        let pairs = if n == 2 { 1 } else { n };
        for i in 0..pairs {
            let j = (i + 1) % n;
            if proportional(&edges[i].form, &edges[j].form) {
                bad.push(Violation::AdjacentProportional { first: i, second: j });
            }
        }
    }
    if !bad.is_empty() {
        return Err(SplineError::Invalid(bad));
    }
    Ok(StarComplex {
        edges,
        default_smoothness,
        warnings,
    })
}

impl StarComplex {
    /// Builds a complex from homogeneous forms with uniform smoothness `r`.
    pub fn from_forms(forms: Vec<Polynomial>, r: u32) -> Result<Self, SplineError> {
        validate_star(
            forms
                .into_iter()
                .map(|form| Edge {
                    form,
                    smoothness: None,
                })
                .collect(),
            r,
        )
    }

    /// Parses homogeneous forms in `x, y, z`.
    pub fn parse_forms(forms: &[&str], r: u32) -> Result<Self, SplineError> {
        let v = VarSet::xyz();
        let forms = forms
            .iter()
            .map(|s| parse_polynomial(s, &v))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_forms(forms, r)
    }

    /// Parses affine curves in `x, y` through `vertex`, translates the
    /// vertex to the origin and homogenizes.
    pub fn from_affine(
        curves: &[(&str, Option<u32>)],
        vertex: (Rational, Rational),
        r: u32,
    ) -> Result<Self, SplineError> {
        let xy = VarSet::xy();
        let shift = [
            &Polynomial::var(&xy, 0) + &Polynomial::constant(&xy, vertex.0.clone()),
            &Polynomial::var(&xy, 1) + &Polynomial::constant(&xy, vertex.1.clone()),
        ];
        let mut edges = Vec::with_capacity(curves.len());
        for (src, smoothness) in curves {
            let f = parse_polynomial(src, &xy)?;
            let moved = f.substitute(&shift)?;
            edges.push(Edge {
                form: moved.homogenize()?,
                smoothness: *smoothness,
            });
        }
        validate_star(edges, r)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Also the number of faces.
    pub fn num_faces(&self) -> usize {
        self.edges.len()
    }

    pub fn form(&self, i: usize) -> &Polynomial {
        &self.edges[i].form
    }

    pub fn forms(&self) -> Vec<Polynomial> {
        self.edges.iter().map(|e| e.form.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.edges
            .iter()
            .map(|e| e.form.form_degree().expect("validated form"))
            .collect()
    }

    pub fn default_smoothness(&self) -> u32 {
        self.default_smoothness
    }

    pub fn smoothness(&self, i: usize) -> u32 {
        self.edges[i].smoothness.unwrap_or(self.default_smoothness)
    }

    /// The common smoothness, if all edges share one.
    pub fn uniform_smoothness(&self) -> Option<u32> {
        let r = self.smoothness(0);
        (0..self.edges.len()).all(|i| self.smoothness(i) == r).then_some(r)
    }

    /// Same curves with smoothness `r` on every edge.
    pub fn with_smoothness(&self, r: u32) -> StarComplex {
        StarComplex {
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    form: e.form.clone(),
                    smoothness: None,
                })
                .collect(),
            default_smoothness: r,
            warnings: self.warnings.clone(),
        }
    }

    /// `G_i^(r_i + 1)` for edge `i`.
    pub fn smoothing_power(&self, i: usize) -> Polynomial {
        self.form(i).pow(self.smoothness(i) + 1)
    }

    /// `J = ⟨G_i^(r_i + 1)⟩`.
    pub fn j_ideal(&self) -> Ideal {
        let gens = (0..self.edges.len()).map(|i| self.smoothing_power(i)).collect();
        Ideal::new(&VarSet::xyz(), gens).expect("forms in x, y, z")
    }

    /// Tangent lines at the vertex (zero for edges singular there).
    pub fn linear_parts(&self) -> Vec<Polynomial> {
        self.edges
            .iter()
            .map(|e| e.form.linear_part_at_vertex().expect("validated form"))
            .collect()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// One polynomial per face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spline {
    pub parts: Vec<Polynomial>,
}

impl fmt::Display for Spline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests;
