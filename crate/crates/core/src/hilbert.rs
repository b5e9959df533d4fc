//! Hilbert functions, series, polynomials, multiplicities and postulation
//! numbers of graded quotients `S/I`, computed from leading monomials.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::groebner::{buchberger_truncated, GroebnerBasis, GroebnerError, Ideal, MonomialOrder};
use crate::polyring::{format_rational, Monomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("Hilbert functions are only defined here for homogeneous ideals")]
    NotHomogeneous,
    #[error("generator `{0}` is not a monomial")]
    NotMonomial(String),
    #[error("basis was truncated at degree {0}; the requested data needs a full basis")]
    Truncated(u32),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// `C(m, k)` with the Hilbert-function convention: zero whenever `m < k`.
pub fn binomial_truncated(m: i64, k: u32) -> i128 {
    if m < k as i64 {
        return 0;
    }
    let mut acc: i128 = 1;
    for j in 0..k as i128 {
        acc = acc * (m as i128 - j) / (j + 1);
    }
    acc
}

/// A polynomial in `d` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// Builds from coefficients, lowest degree first.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `C(d + a, k)` as a polynomial in `d` (no truncation).
    pub fn binomial(a: i64, k: u32) -> Self {
        let mut acc = QPoly::constant(Rational::one());
        for j in 0..k as i64 {
            // times (d + a - j) / (j + 1)
            let lin = QPoly::new(vec![
                Rational::from_integer((a - j).into()),
                Rational::one(),
            ]);
            acc = acc.mul(&lin).scale(&Rational::new(1.into(), (j + 1).into()));
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `d^k`.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn eval(&self, d: i64) -> Rational {
        let x = Rational::from_integer(d.into());
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

impl fmt::Display for QPoly {
    /// Prints like `3/2*d^2 - 1/2*d + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{k}"),
            };
            if k == 0 {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `S/M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesNumerator {
    /// Coefficients of `N(t)`, lowest degree first.
    pub coefficients: Vec<i64>,
    /// Number of variables `n` of the ambient ring.
    pub nvars: usize,
}

impl HilbertSeriesNumerator {
    /// `(Q, k)` with `N(t) = (1-t)^(n-k) Q(t)` and `Q(1) != 0` (or `Q = 0`).
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut q = self.coefficients.clone();
        let mut k = self.nvars;
        while k > 0 && !q.is_empty() && q.iter().sum::<i64>() == 0 {
            // divide by (1 - t): running prefix sums
            let mut out = Vec::with_capacity(q.len() - 1);
            let mut acc = 0i64;
            for &c in &q[..q.len() - 1] {
                acc += c;
                out.push(acc);
            }
            q = out;
            trim_i64(&mut q);
            k -= 1;
        }
        (q, k)
    }

    /// Coefficient of `t^d` in the series.
    pub fn series_coefficient(&self, d: u32) -> u64 {
        let n = self.nvars as u32;
        if n == 0 {
            return self.coefficients.get(d as usize).copied().unwrap_or(0).max(0) as u64;
        }
        let mut acc: i128 = 0;
        for (j, &c) in self.coefficients.iter().enumerate() {
            if j as u32 > d || c == 0 {
                continue;
            }
            let m = (d - j as u32) as i64;
            acc += c as i128 * binomial_truncated(m + n as i64 - 1, n - 1);
        }
        u64::try_from(acc).expect("Hilbert function values are nonnegative")
    }
}

fn trim_i64(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of the projective scheme defined by a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    /// Zero-dimensional (or empty) scheme: the constant Hilbert polynomial.
    Finite(u64),
    PositiveDimensional { dimension: usize, degree: u64 },
}

impl Multiplicity {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Multiplicity::Finite(m) => Some(*m),
            Multiplicity::PositiveDimensional { .. } => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::PositiveDimensional { dimension, degree } => {
                write!(f, "positive-dimensional (dimension {dimension}, degree {degree})")
            }
        }
    }
}

/// Hilbert data of a graded quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: HilbertSeriesNumerator,
    /// `hf[d]` for `d = 0 ..= postulation + 1` at least.
    pub hf: Vec<u64>,
    pub hp: QPoly,
    /// Largest `d ≥ 0` with `HF(d) != HP(d)`, or `-1` if there is none.
    pub postulation: i64,
    pub multiplicity: Multiplicity,
}

impl HilbertData {
    pub fn from_numerator(numerator: HilbertSeriesNumerator) -> Self {
        let (q, k) = numerator.reduced();
        let mut hp = QPoly::zero();
        if k > 0 {
            for (j, &c) in q.iter().enumerate() {
                // HF contribution c * C(d - j + k - 1, k - 1)
                let term = QPoly::binomial(k as i64 - 1 - j as i64, (k - 1) as u32);
                hp = hp.add(&term.scale(&Rational::from_integer(c.into())));
            }
        }
        let qsum: i64 = q.iter().sum();
        let multiplicity = match k {
            0 => Multiplicity::Finite(0),
            1 => Multiplicity::Finite(qsum as u64),
            _ => Multiplicity::PositiveDimensional {
                dimension: k - 1,
                degree: qsum as u64,
            },
        };
        // Beyond deg N the series coefficients follow the polynomial exactly.
        let span = numerator.coefficients.len() as u32;
        let hf: Vec<u64> = (0..=span).map(|d| numerator.series_coefficient(d)).collect();
        let postulation = (0..=span as i64)
            .rev()
            .find(|&d| Rational::from_integer(hf[d as usize].into()) != hp.eval(d))
            .unwrap_or(-1);
        HilbertData {
            numerator,
            hf,
            hp,
            postulation,
            multiplicity,
        }
    }

    /// `HF(S/I, d)` for any `d`.
    pub fn value(&self, d: u32) -> u64 {
        match self.hf.get(d as usize) {
            Some(&v) => v,
            None => self.numerator.series_coefficient(d),
        }
    }
}

/// Removes duplicates and monomials divisible by others.
pub(crate) fn minimize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &c) in b.iter().enumerate() {
        a[j + shift] += c;
    }
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimize_monomials(gens);
    if gens.is_empty() {
        return vec![1];
    }
    // Count, per variable, how many generators involve it.
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[v] += 1;
            }
        }
    }
    let (pivot_var, &most) = count
        .iter()
        .enumerate()
        .max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v)))
        .expect("at least one variable");
    if most <= 1 {
        // Pairwise coprime generators: a complete intersection.
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (j, &c) in acc.iter().enumerate() {
                next[j + d] -= c;
            }
            acc = next;
        }
        trim_i64(&mut acc);
        return acc;
    }
    let mut exps: Vec<u32> = gens
        .iter()
        .map(|g| g.exponents()[pivot_var])
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2];
    // keep the pivot outside the ideal
    let pure_power = gens
        .iter()
        .filter(|g| g.degree() == g.exponents()[pivot_var])
        .map(|g| g.degree())
        .min();
    if let Some(k) = pure_power {
        e = e.min(k - 1);
    }
    let e = e.max(1);
    let pivot = {
        let mut m = Monomial::one(nvars);
        m.exps_mut()[pivot_var] = e;
        m
    };
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut m = g.clone();
            let x = &mut m.exps_mut()[pivot_var];
            *x = x.saturating_sub(e);
            m
        })
        .collect();
    let mut acc = numerator_rec(with_pivot, nvars);
    let b = numerator_rec(colon, nvars);
    poly_add(&mut acc, &b, e as usize);
    trim_i64(&mut acc);
    acc
}

/// Hilbert series numerator of `S/M` for monomials `M` in `nvars` variables.
pub fn numerator_of_monomials(gens: &[Monomial], nvars: usize) -> HilbertSeriesNumerator {
    HilbertSeriesNumerator {
        coefficients: numerator_rec(gens.to_vec(), nvars),
        nvars,
    }
}

/// Hilbert series numerator of `S/M` for a monomial ideal `M`.
pub fn hilbert_series_numerator(m: &Ideal) -> Result<HilbertSeriesNumerator, HilbertError> {
    let mut monos = Vec::with_capacity(m.generators().len());
    for g in m.generators() {
        if g.num_terms() != 1 {
            return Err(HilbertError::NotMonomial(g.to_string()));
        }
        monos.push(g.leading_term().expect("nonzero").0.clone());
    }
    Ok(numerator_of_monomials(&monos, m.vars().len()))
}

/// Hilbert data of `S/I` read off a (full) Gröbner basis of `I`.
pub fn hilbert_data_of_basis(gb: &GroebnerBasis) -> Result<HilbertData, HilbertError> {
    if let Some(d) = gb.truncated_at() {
        return Err(HilbertError::Truncated(d));
    }
    if !gb.basis().iter().all(|g| g.is_homogeneous()) {
        return Err(HilbertError::NotHomogeneous);
    }
    let num = numerator_of_monomials(gb.leading_monomials(), gb.vars().len());
    Ok(HilbertData::from_numerator(num))
}

/// Hilbert data of `S/I` for a homogeneous ideal `I`.
pub fn hilbert_data(i: &Ideal) -> Result<HilbertData, HilbertError> {
    if !i.is_homogeneous() {
        return Err(HilbertError::NotHomogeneous);
    }
    hilbert_data_of_basis(&i.grevlex())
}

/// `HF(S/I, d)`: number of degree-`d` standard monomials of the grevlex basis.
pub fn hilbert_function(i: &Ideal, d: u32) -> Result<u64, HilbertError> {
    Ok(hilbert_function_upto(i, d)?[d as usize])
}

/// `HF(S/I, 0..=dmax)` using a basis truncated at `dmax`.
pub fn hilbert_function_upto(i: &Ideal, dmax: u32) -> Result<Vec<u64>, HilbertError> {
    if !i.is_homogeneous() {
        return Err(HilbertError::NotHomogeneous);
    }
    let gb = buchberger_truncated(i, &MonomialOrder::Grevlex, dmax)?;
    let num = numerator_of_monomials(gb.leading_monomials(), i.vars().len());
    Ok((0..=dmax).map(|d| num.series_coefficient(d)).collect())
}

pub fn hilbert_polynomial(i: &Ideal) -> Result<QPoly, HilbertError> {
    Ok(hilbert_data(i)?.hp)
}

pub fn postulation_number(i: &Ideal) -> Result<i64, HilbertError> {
    Ok(hilbert_data(i)?.postulation)
}

pub fn multiplicity(i: &Ideal) -> Result<Multiplicity, HilbertError> {
    Ok(hilbert_data(i)?.multiplicity)
}

/// Largest `d ≥ 0` in `0..=bound` with `values[d] != hp(d)`, or `-1`.
pub fn postulation_from_values(values: &[u64], hp: &QPoly) -> i64 {
    (0..values.len() as i64)
        .rev()
        .find(|&d| Rational::from_integer(values[d as usize].into()) != hp.eval(d))
        .unwrap_or(-1)
}

/// A minimal generating set of a homogeneous ideal, by degree.
pub fn minimal_generators(i: &Ideal) -> Result<Ideal, HilbertError> {
    if !i.is_homogeneous() {
        return Err(HilbertError::NotHomogeneous);
    }
    let mut gens = i.generators().to_vec();
    gens.sort_by_key(|g| g.total_degree());
    let mut kept: Vec<crate::polyring::Polynomial> = Vec::new();
    for g in gens {
        let current = Ideal::new(i.vars(), kept.clone())?;
        if current.is_zero() || !current.contains(&g) {
            kept.push(g);
        }
    }
    Ok(Ideal::new(i.vars(), kept)?)
}

/// Degrees of the first and second syzygy modules in a length-two
/// (Hilbert–Burch) resolution `0 → ⊕S(-a2) → ⊕S(-a1) → S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBurchDegrees {
    pub generators: Vec<u32>,
    pub relations: Vec<u32>,
}

impl HilbertBurchDegrees {
    /// `max |a2_s - a2_t|`.
    pub fn relation_spread(&self) -> u32 {
        match (self.relations.iter().min(), self.relations.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }
}

/// Generator and relation degrees of a codimension-two Cohen–Macaulay
/// ideal (for instance an ideal of `k[x,y]` primary to `⟨x,y⟩`, viewed in `S`).
///
/// The relation degrees follow from the series numerator
/// `1 - Σ t^a1 + Σ t^a2` once the generator degrees are known.
pub fn hilbert_burch_degrees(i: &Ideal) -> Result<HilbertBurchDegrees, HilbertError> {
    let min = minimal_generators(i)?;
    let mut generators: Vec<u32> = min
        .generators()
        .iter()
        .map(|g| g.total_degree().unwrap_or(0))
        .collect();
    generators.sort_unstable();
    let data = hilbert_data(&min)?;
    let mut k = data.numerator.coefficients.clone();
    k[0] -= 1;
    for &a in &generators {
        if k.len() <= a as usize {
            k.resize(a as usize + 1, 0);
        }
        k[a as usize] += 1;
    }
    let mut relations = Vec::new();
    for (deg, &c) in k.iter().enumerate() {
        assert!(c >= 0, "ideal is not codimension-two Cohen–Macaulay");
        for _ in 0..c {
            relations.push(deg as u32);
        }
    }
    Ok(HilbertBurchDegrees {
        generators,
        relations,
    })
}

/// Exact integer value of a polynomial at `d`, when it is an integer.
pub fn eval_integer(p: &QPoly, d: i64) -> Option<i64> {
    let v = p.eval(d);
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests;
