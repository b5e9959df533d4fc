//! JSON description of a complex: affine edge curves in `x, y` through a
//! vertex, with a default smoothness and optional per-edge overrides.
//!
//! ```json
//! {
//!   "version": 1,
//!   "name": "line_two_circles",
//!   "edges": [
//!     { "curve": "x" },
//!     { "curve": "x^2 + y^2 - 2*y" },
//!     { "curve": "x^2 + y^2 - 2*x + 2*y", "smoothness": 1 }
//!   ],
//!   "default_smoothness": 0
//! }
//! ```

use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{parse_polynomial, Monomial, PolyError, Rational, VarSet};
use crate::spline_complex::{SplineError, StarComplex};

pub const FORMAT_VERSION: u32 = 1;

/// A rational constant written in the polynomial grammar, e.g. `-3/2`.
fn parse_constant(text: &str) -> Result<Rational, PolyError> {
    let p = parse_polynomial(text, &VarSet::xy())?;
    if p.total_degree().unwrap_or(0) > 0 {
        return Err(PolyError::Unsupported("expected a rational number".into()));
    }
    Ok(p.coefficient(&Monomial::new(&[0, 0])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub curve: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smoothness: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    /// Affine coordinates of the vertex as rational strings; the origin if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<[String; 2]>,
    pub edges: Vec<EdgeDocument>,
    #[serde(default)]
    pub default_smoothness: u32,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("unsupported document version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("edge {edge}: {source}")]
    Curve { edge: usize, source: PolyError },
    #[error("vertex coordinate `{text}`: {source}")]
    Vertex { text: String, source: PolyError },
    #[error(transparent)]
    Complex(#[from] SplineError),
}

impl ComplexDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if doc.version != FORMAT_VERSION {
            return Err(DocumentError::Version(doc.version));
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self, DocumentError> {
        let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds a document from homogeneous forms with the vertex at the origin.
    pub fn from_complex(c: &StarComplex, name: Option<&str>) -> Self {
        ComplexDocument {
            version: FORMAT_VERSION,
            name: name.map(str::to_string),
            description: None,
            vertex: None,
            edges: c
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    curve: e.form.dehomogenize().expect("form in x, y, z").to_string(),
                    smoothness: e.smoothness,
                })
                .collect(),
            default_smoothness: c.default_smoothness(),
        }
    }

    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("complex")
    }

    fn vertex(&self) -> Result<(Rational, Rational), DocumentError> {
        let Some([a, b]) = &self.vertex else {
            return Ok((Rational::zero(), Rational::zero()));
        };
        let coord = |text: &String| {
            parse_constant(text).map_err(|source| DocumentError::Vertex {
                text: text.clone(),
                source,
            })
        };
        Ok((coord(a)?, coord(b)?))
    }

    /// The complex with default smoothness `r` (per-edge overrides kept).
    pub fn complex(&self, r: u32) -> Result<StarComplex, DocumentError> {
        let curves: Vec<(&str, Option<u32>)> =
            self.edges.iter().map(|e| (e.curve.as_str(), e.smoothness)).collect();
        // report the failing edge by number
        for (i, e) in self.edges.iter().enumerate() {
            parse_polynomial(&e.curve, &VarSet::xy())
                .map_err(|source| DocumentError::Curve { edge: i + 1, source })?;
        }
        Ok(StarComplex::from_affine(&curves, self.vertex()?, r)?)
    }

    /// The complex at the document's own default smoothness.
    pub fn default_complex(&self) -> Result<StarComplex, DocumentError> {
        self.complex(self.default_smoothness)
    }

    /// Whether any edge overrides the default smoothness.
    pub fn has_overrides(&self) -> bool {
        self.edges.iter().any(|e| e.smoothness.is_some())
    }
}

impl fmt::Display for ComplexDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
