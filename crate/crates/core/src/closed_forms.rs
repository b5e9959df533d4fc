//! Closed forms for spline dimensions around a single vertex: resolutions of
//! ideals of powers of linear forms, the pencil case (full Hilbert function),
//! the distinct-tangent case (Hilbert polynomial), validity thresholds from
//! regularity bounds, and Hilbert functions from linkage.
//!
//! Everything except [`cayley_bacharach_dim`], [`tangent_cone_comparison`]
//! and [`applicability`] is plain integer arithmetic.

use thiserror::Error;

use crate::groebner::{colon_ideal, colon_ideal_ideal, GroebnerError, Ideal};
use crate::hilbert::{
    binomial_truncated, hilbert_burch_degrees, hilbert_data, multiplicity, HilbertBurchDegrees,
    HilbertError, Multiplicity, QPoly,
};
use crate::polyring::{Polynomial, Rational, VarSet};
use crate::spline_complex::{classify_configuration, Configuration, SplineError, StarComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("need at least two independent powers, got t = {0}")]
    TooFewPowers(u32),
    #[error("at most r + 2 = {max} powers of degree r + 1 are independent, got t = {t}")]
    TooManyPowers { t: u32, max: u32 },
    #[error("a pencil needs at least two distinct curves, got s = {0}")]
    TooFewCurves(usize),
    #[error("the pencil has N = {edges} edges but s = {s} distinct curves")]
    MoreCurvesThanEdges { edges: usize, s: usize },
    #[error("need at least two edges, got {0}")]
    TooFewEdges(usize),
    #[error("edge degrees must be positive")]
    ZeroDegree,
    #[error("linkage needs a complete intersection of two forms, got {0} generators")]
    NotTwoGenerators(usize),
    #[error("the linking form already lies in K")]
    LinkingFormInIdeal,
    #[error("linkage duality failed in degree {d}: {linked} from K'' but {direct} directly")]
    LinkageMismatch { d: u32, linked: u64, direct: u64 },
    #[error("the ideal is not supported at a single point")]
    NotZeroDimensional,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Spline(#[from] SplineError),
}

fn shifted(d: u32, shift: u64) -> u64 {
    binomial_truncated(d as i64 - shift as i64 + 2, 2) as u64
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Resolution data of `k[x,y]/⟨L_1^(r+1), …, L_t^(r+1)⟩` for distinct
/// linear forms: generators in degree `r+1`, `s1` syzygies in degree
/// `r+1+a` and `s2` in degree `r+2+a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerResolutionData {
    pub t: u32,
    pub r: u32,
    pub a: u32,
    pub s1: u32,
    pub s2: u32,
    /// Castelnuovo–Mumford regularity of the quotient.
    pub regularity: u32,
}

pub fn power_resolution(t: u32, r: u32) -> Result<PowerResolutionData, ClosedFormError> {
    if t < 2 {
        return Err(ClosedFormError::TooFewPowers(t));
    }
    if t > r + 2 {
        return Err(ClosedFormError::TooManyPowers { t, max: r + 2 });
    }
    let a = (r + 1) / (t - 1);
    let m = (r + 1) % (t - 1);
    Ok(PowerResolutionData {
        t,
        r,
        a,
        s1: t - 1 - m,
        s2: m,
        regularity: r + (r + 1).div_ceil(t - 1) - 1,
    })
}

impl PowerResolutionData {
    /// `C(a+r+2, 2) - t·C(a+1, 2)`.
    pub fn multiplicity(&self) -> u64 {
        let (a, r, t) = (self.a as u64, self.r as u64, self.t as u64);
        binom2(a + r + 2) - t * binom2(a + 1)
    }

    /// Hilbert function of `S/⟨G_i^(r+1)⟩` when the variables of `k[x,y]`
    /// are replaced by two coprime forms of degree `n` (`n = 1` gives the
    /// ideal of powers of linear forms itself), read off the resolution.
    pub fn quotient_hilbert_function(&self, n: u32, d: u32) -> u64 {
        let n = n as u64;
        let (r, a) = (self.r as u64, self.a as u64);
        let pos = shifted(d, 0) + self.s1 as u64 * shifted(d, (r + 1 + a) * n)
            + self.s2 as u64 * shifted(d, (r + 2 + a) * n);
        pos - self.t as u64 * shifted(d, (r + 1) * n)
    }
}

/// Multiplicity of the scheme defined by `t` independent `(r+1)`-st powers
/// of linear forms.
pub fn multiplicity_linear_powers(t: u32, r: u32) -> Result<u64, ClosedFormError> {
    Ok(power_resolution(t, r)?.multiplicity())
}

/// The free spline module of a pencil complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilStructure {
    pub edges: usize,
    pub s: usize,
    pub n: u32,
    pub r: u32,
    pub t: u32,
    pub resolution: PowerResolutionData,
    /// Degrees of the free summands, ascending.
    pub summand_degrees: Vec<u64>,
}

pub fn pencil_structure(edges: usize, s: usize, n: u32, r: u32) -> Result<PencilStructure, ClosedFormError> {
    if s < 2 {
        return Err(ClosedFormError::TooFewCurves(s));
    }
    if edges < s {
        return Err(ClosedFormError::MoreCurvesThanEdges { edges, s });
    }
    if n == 0 {
        return Err(ClosedFormError::ZeroDegree);
    }
    let t = (s as u32).min(r + 2);
    let res = power_resolution(t, r)?;
    let (n64, r64, a) = (n as u64, r as u64, res.a as u64);
    let mut summand_degrees = vec![0];
    summand_degrees.extend(std::iter::repeat_n((r64 + 1) * n64, edges - t as usize));
    summand_degrees.extend(std::iter::repeat_n((r64 + 1 + a) * n64, res.s1 as usize));
    summand_degrees.extend(std::iter::repeat_n((r64 + 2 + a) * n64, res.s2 as usize));
    Ok(PencilStructure {
        edges,
        s,
        n,
        r,
        t,
        resolution: res,
        summand_degrees,
    })
}

impl PencilStructure {
    /// `dim C^r_d`, summing the free summands.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.summand_degrees.iter().map(|&e| shifted(d, e)).sum()
    }

    /// `HF(S/J, d)` for the ideal of powers of the pencil forms.
    pub fn quotient_hilbert_function(&self, d: u32) -> u64 {
        self.resolution.quotient_hilbert_function(self.n, d)
    }

    pub fn hilbert_polynomial(&self) -> QPoly {
        self.summand_degrees
            .iter()
            .fold(QPoly::zero(), |acc, &e| acc.add(&QPoly::binomial(2 - e as i64, 2)))
    }

    /// `n²(C(a+r+2, 2) - t·C(a+1, 2))`.
    pub fn multiplicity(&self) -> u64 {
        let n = self.n as u64;
        n * n * self.resolution.multiplicity()
    }

    /// `(r + 1 + ⌈(r+1)/(t-1)⌉)·n - 3`.
    pub fn postulation(&self) -> i64 {
        let r = self.r as i64;
        let up = (self.r + 1).div_ceil(self.t - 1) as i64;
        (r + 1 + up) * self.n as i64 - 3
    }
}

/// Hilbert polynomial of a complex with distinct tangents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctTangentHp {
    pub t: u32,
    pub a: u32,
    /// The constant contributed by `S/J`: `C(r+a+2, 2) - t·C(a+1, 2)`.
    pub multiplicity: u64,
    pub hp: QPoly,
}

pub fn distinct_tangent_hp(degrees: &[u32], r: u32) -> Result<DistinctTangentHp, ClosedFormError> {
    if degrees.len() < 2 {
        return Err(ClosedFormError::TooFewEdges(degrees.len()));
    }
    if degrees.contains(&0) {
        return Err(ClosedFormError::ZeroDegree);
    }
    let t = (degrees.len() as u32).min(r + 2);
    let res = power_resolution(t, r)?;
    let m = res.multiplicity();
    let hp = degrees.iter().fold(QPoly::constant(Rational::from_integer(m.into())), |acc, &n| {
        acc.add(&QPoly::binomial(2 - ((r + 1) * n) as i64, 2))
    });
    Ok(DistinctTangentHp {
        t,
        a: res.a,
        multiplicity: m,
        hp,
    })
}

/// Degrees from which the distinct-tangent Hilbert polynomial is
/// guaranteed to give `dim C^r_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityThresholds {
    /// `3·max(n_i)·(r+1) - 2`.
    pub general: u64,
    /// `(n_1 + n_2 + n_3 - 1)(r+1) - 2`, three edges only.
    pub three_curve: Option<u64>,
}

impl ValidityThresholds {
    /// The smaller of the available thresholds.
    pub fn best(&self) -> u64 {
        self.three_curve.map_or(self.general, |t| t.min(self.general))
    }
}

pub fn validity_thresholds(degrees: &[u32], r: u32) -> ValidityThresholds {
    let r1 = r as u64 + 1;
    let n = degrees.iter().copied().max().unwrap_or(0) as u64;
    let three_curve = (degrees.len() == 3).then(|| {
        let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
        (sum.saturating_sub(1) * r1).saturating_sub(2)
    });
    ValidityThresholds {
        general: (3 * n * r1).saturating_sub(2),
        three_curve,
    }
}

/// `HF(S/K, d)` for a complete intersection of forms of degrees `n1, n2`.
fn complete_intersection_hf(n1: u32, n2: u32, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let c = |m: i64| binomial_truncated(m + 2, 2);
    let (n1, n2) = (n1 as i64, n2 as i64);
    (c(d) - c(d - n1) - c(d - n2) + c(d - n1 - n2)) as u64
}

/// `dim (S/J)_d` at `r = 0` when `⟨G_1, G_2⟩` cuts out `n1·n2` distinct points
/// of which `G_3` vanishes only at the vertex.
pub fn linked_hilbert_function(n1: u32, n2: u32, n3: u32, d: u32) -> Result<u64, ClosedFormError> {
    if n1 == 0 || n2 == 0 || n3 == 0 {
        return Err(ClosedFormError::ZeroDegree);
    }
    let d = d as i64;
    if d <= (n1 + n2 + n3) as i64 - 3 {
        Ok(complete_intersection_hf(n1, n2, d) - complete_intersection_hf(n1, n2, d - n3 as i64))
    } else {
        Ok(1)
    }
}

/// `dim (K'/K)_d` for `K' = (K : γ)`, computed on the linked side as
/// `mult(S/K'') - HF(S/K'', s - d)` with `K'' = (K : K')` and `s` the sum of
/// the generator degrees of `K` minus 3. The value is checked against
/// `HF(S/K, d) - HF(S/K', d)`.
pub fn cayley_bacharach_dim(k: &Ideal, gamma: &Polynomial, d: u32) -> Result<u64, ClosedFormError> {
    let gens = k.generators();
    if gens.len() != 2 {
        return Err(ClosedFormError::NotTwoGenerators(gens.len()));
    }
    if k.contains(gamma) {
        return Err(ClosedFormError::LinkingFormInIdeal);
    }
    let s: i64 = gens.iter().map(|g| g.total_degree().unwrap_or(0) as i64).sum::<i64>() - 3;
    let k1 = colon_ideal(k, gamma)?;
    let k2 = colon_ideal_ideal(k, &k1)?;
    let data2 = hilbert_data(&k2)?;
    let Multiplicity::Finite(m) = data2.multiplicity else {
        return Err(ClosedFormError::NotZeroDimensional);
    };
    let tail = if s - (d as i64) < 0 { 0 } else { data2.value((s - d as i64) as u32) };
    let linked = m - tail;
    let direct = hilbert_data(k)?.value(d) - hilbert_data(&k1)?.value(d);
    if linked != direct {
        return Err(ClosedFormError::LinkageMismatch { d, linked, direct });
    }
    Ok(linked)
}

/// The ideal `I = ⟨F_i⟩` where `z^(c_i)·F_i` collects the terms of `G_i`
/// with the highest power of `z`. For forms smooth at the vertex this is
/// the ideal of powers of tangent lines.
pub fn tangent_cone_ideal(j: &Ideal) -> Result<Ideal, ClosedFormError> {
    let gens = j
        .generators()
        .iter()
        .map(|g| g.coefficient_of_last_power(g.max_last_power().unwrap_or(0)))
        .collect();
    Ok(Ideal::new(j.vars(), gens)?)
}

/// `J` against its tangent-cone ideal `I`: when the Hilbert–Burch relation
/// degrees of `I` spread by at most two, both schemes have the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConeComparison {
    pub tangent_cone: Ideal,
    pub resolution: HilbertBurchDegrees,
    pub syzygy_condition: bool,
    pub multiplicity_j: Multiplicity,
    pub multiplicity_tangent_cone: Multiplicity,
}

impl TangentConeComparison {
    pub fn agrees(&self) -> bool {
        self.multiplicity_j == self.multiplicity_tangent_cone
    }
}

/// Compares `J`, whose only zero should be `[0:0:1]`, with its tangent cone.
pub fn tangent_cone_comparison(j: &Ideal) -> Result<TangentConeComparison, ClosedFormError> {
    let tangent_cone = tangent_cone_ideal(j)?;
    let multiplicity_tangent_cone = multiplicity(&tangent_cone)?;
    if multiplicity_tangent_cone.finite().is_none_or(|m| m == 0) {
        return Err(ClosedFormError::NotZeroDimensional);
    }
    let resolution = hilbert_burch_degrees(&tangent_cone)?;
    Ok(TangentConeComparison {
        syzygy_condition: resolution.relation_spread() <= 2,
        multiplicity_j: multiplicity(j)?,
        tangent_cone,
        resolution,
        multiplicity_tangent_cone,
    })
}

/// What the closed forms promise for a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Guarantee {
    /// Pencil: the free-module closed form is the whole Hilbert function.
    HilbertFunction(PencilStructure),
    /// Distinct tangents: the Hilbert polynomial is exact, and agrees with
    /// `dim C^r_d` from `threshold` on.
    HilbertPolynomial { hp: DistinctTangentHp, threshold: u64 },
    /// No closed form applies.
    None,
}

/// Hypothesis checks for a complex at uniform smoothness `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Applicability {
    pub configuration: Configuration,
    pub r: u32,
    pub t: Option<u32>,
    /// `2t ≥ r + 3`: the saturation of `J` is the ideal of tangent powers.
    pub low_power: Option<bool>,
    /// Relation-degree spread of the tangent-cone ideal, when it is
    /// supported at the vertex.
    pub relation_spread: Option<u32>,
    pub guarantee: Guarantee,
}

impl Applicability {
    pub fn applies(&self) -> bool {
        !matches!(self.guarantee, Guarantee::None)
    }
}

pub fn applicability(c: &StarComplex, r: u32) -> Result<Applicability, ClosedFormError> {
    let c = c.with_smoothness(r);
    let configuration = classify_configuration(&c);
    let t = configuration.t(r);
    let low_power = t.map(|t| 2 * t >= r + 3);
    let relation_spread = match tangent_cone_comparison(&c.j_ideal()) {
        Ok(cmp) => Some(cmp.resolution.relation_spread()),
        Err(ClosedFormError::NotZeroDimensional) => None,
        Err(e) => return Err(e),
    };
    let guarantee = match &configuration {
        Configuration::Pencil { edges, s, n, .. } => Guarantee::HilbertFunction(pencil_structure(*edges, *s, *n, r)?),
        Configuration::DistinctTangent { degrees, .. } => Guarantee::HilbertPolynomial {
            hp: distinct_tangent_hp(degrees, r)?,
            threshold: validity_thresholds(degrees, r).best(),
        },
        Configuration::Other { .. } => Guarantee::None,
    };
    Ok(Applicability {
        configuration,
        r,
        t,
        low_power,
        relation_spread,
        guarantee,
    })
}

/// Ideal of `(r+1)`-st powers of the tangent lines of a complex.
pub fn tangent_power_ideal(c: &StarComplex, r: u32) -> Ideal {
    let gens = c.linear_parts().into_iter().map(|l| l.pow(r + 1)).collect();
    Ideal::new(&VarSet::xyz(), gens).expect("forms in x, y, z")
}
