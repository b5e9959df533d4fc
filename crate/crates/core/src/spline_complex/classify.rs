//! Sorting complexes into the regimes where closed forms are available.

use std::fmt;

use super::{proportional, StarComplex};
use crate::groebner::{saturate, Ideal};
use crate::hilbert::{multiplicity, Multiplicity};
use crate::linalg::rank_rational;
use crate::polyring::{Monomial, Polynomial, VarSet};

/// Why a complex is neither a pencil nor has distinct tangents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// Several edges share the tangent line `line` at the vertex.
    RepeatedTangent { line: Polynomial, edges: Vec<usize> },
    /// The edge curve is singular at the vertex (no linear part).
    SingularAtVertex { edge: usize },
    /// The edge curves meet somewhere besides the vertex.
    ExtraCommonZeros,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::RepeatedTangent { line, edges } => {
                let list: Vec<String> = edges.iter().map(|e| (e + 1).to_string()).collect();
                write!(f, "repeated tangent {line} (edges {})", list.join(","))
            }
            Diagnostic::SingularAtVertex { edge } => {
                write!(f, "edge {} is singular at the vertex", edge + 1)
            }
            Diagnostic::ExtraCommonZeros => write!(f, "curves share zeros besides the vertex"),
        }
    }
}

/// The regime a complex falls into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Configuration {
    /// All forms have degree `n` and lie in the pencil spanned by two coprime
    /// members; `s` counts the distinct curves among them.
    Pencil {
        edges: usize,
        s: usize,
        n: u32,
        span: [Polynomial; 2],
    },
    /// Nonzero, pairwise distinct tangents and no common zero but the vertex.
    DistinctTangent {
        degrees: Vec<u32>,
        tangents: Vec<Polynomial>,
    },
    Other {
        degrees: Vec<u32>,
        diagnostics: Vec<Diagnostic>,
    },
}

impl Configuration {
    /// The number `t` of independent powers at smoothness `r`: `min(s, r+2)`
    /// for a pencil, `min(N, r+2)` with distinct tangents.
    pub fn t(&self, r: u32) -> Option<u32> {
        match self {
            Configuration::Pencil { s, .. } => Some((*s as u32).min(r + 2)),
            Configuration::DistinctTangent { degrees, .. } => Some((degrees.len() as u32).min(r + 2)),
            Configuration::Other { .. } => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Configuration::Pencil { .. } => "Pencil",
            Configuration::DistinctTangent { .. } => "DistinctTangent",
            Configuration::Other { .. } => "Other",
        }
    }
}

fn list(v: &[u32]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Configuration::Pencil { edges, s, n, .. } => write!(f, "Pencil N={edges} s={s} n={n}"),
            Configuration::DistinctTangent { degrees, .. } => {
                write!(f, "DistinctTangent, degrees {}", list(degrees))
            }
            Configuration::Other { diagnostics, .. } => {
                let d: Vec<String> = diagnostics.iter().map(|x| x.to_string()).collect();
                write!(f, "Other: {}", d.join("; "))
            }
        }
    }
}

/// Pencil test: equal degrees, coefficient rank two, coprime spanning pair.
fn pencil(c: &StarComplex) -> Option<Configuration> {
    let degrees = c.degrees();
    let n = degrees[0];
    if degrees.iter().any(|&d| d != n) {
        return None;
    }
    let monos = Monomial::all_of_degree(3, n);
    let rows: Vec<_> = c
        .edges()
        .iter()
        .map(|e| monos.iter().map(|m| e.form.coefficient(m)).collect())
        .collect();
    if rank_rational(&rows) != 2 {
        return None;
    }
    let a = c.form(0).clone();
    let b = c.forms().into_iter().find(|g| !proportional(&a, g))?;
    let pair = Ideal::new(&VarSet::xyz(), vec![a.clone(), b.clone()]).ok()?;
    if !matches!(multiplicity(&pair).ok()?, Multiplicity::Finite(_)) {
        return None;
    }
    let mut classes: Vec<Polynomial> = Vec::new();
    for g in c.forms() {
        if !classes.iter().any(|h| proportional(h, &g)) {
            classes.push(g);
        }
    }
    Some(Configuration::Pencil {
        edges: c.num_edges(),
        s: classes.len(),
        n,
        span: [a, b],
    })
}

/// Whether `[0:0:1]` is the only common zero of the forms.
pub(crate) fn vertex_only_common_zero(forms: &[Polynomial]) -> bool {
    let v = VarSet::xyz();
    let j0 = Ideal::new(&v, forms.to_vec()).expect("forms in x, y, z");
    let z = Polynomial::var(&v, 2);
    // nothing on the line z = 0
    let at_infinity = j0.sum(&Ideal::new(&v, vec![z.clone()]).expect("z")).expect("same ring");
    if multiplicity(&at_infinity).ok() != Some(Multiplicity::Finite(0)) {
        return false;
    }
    // in the chart z = 1 only the origin
    let Ok(sat) = saturate(&j0, &z) else {
        return false;
    };
    let Ok(Multiplicity::Finite(m)) = multiplicity(&sat) else {
        return false;
    };
    if m == 0 {
        return false;
    }
    let gb = sat.grevlex();
    let m = m as u32;
    gb.contains(&Polynomial::var(&v, 0).pow(m)) && gb.contains(&Polynomial::var(&v, 1).pow(m))
}

/// Classifies the complex; pencils take precedence over distinct tangents.
pub fn classify_configuration(c: &StarComplex) -> Configuration {
    if let Some(p) = pencil(c) {
        return p;
    }
    let degrees = c.degrees();
    let tangents = c.linear_parts();
    let mut diagnostics = Vec::new();
    for (i, l) in tangents.iter().enumerate() {
        if l.is_zero() {
            diagnostics.push(Diagnostic::SingularAtVertex { edge: i });
        }
    }
    let mut seen = vec![false; tangents.len()];
    for i in 0..tangents.len() {
        if seen[i] || tangents[i].is_zero() {
            continue;
        }
        let group: Vec<usize> = (i..tangents.len())
            .filter(|&j| !tangents[j].is_zero() && proportional(&tangents[i], &tangents[j]))
            .collect();
        for &j in &group {
            seen[j] = true;
        }
        if group.len() > 1 {
            diagnostics.push(Diagnostic::RepeatedTangent {
                line: tangents[i].monic(),
                edges: group,
            });
        }
    }
    if !vertex_only_common_zero(&c.forms()) {
        diagnostics.push(Diagnostic::ExtraCommonZeros);
    }
    if diagnostics.is_empty() {
        Configuration::DistinctTangent { degrees, tangents }
    } else {
        Configuration::Other {
            degrees,
            diagnostics,
        }
    }
}
