use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Monomial, PolyError, Rational, VarSet, WeightVector};

/// A sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

/// Result of [`Polynomial::homogeneity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Degree(u32),
    NotHomogeneous,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn term(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial length does not match variable set");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable with the given index, as a polynomial.
    pub fn var(vars: &VarSet, index: usize) -> Self {
        Self::term(vars, Monomial::variable(vars.len(), index), Rational::one())
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Option<Self> {
        vars.index_of(name).map(|i| Self::var(vars, i))
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term with respect to grevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.vars.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarSetMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneity(&self) -> Result<Homogeneity, PolyError> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next().ok_or(PolyError::ZeroPolynomial)?;
        if degs.all(|d| d == first) {
            Ok(Homogeneity::Degree(first))
        } else {
            Ok(Homogeneity::NotHomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.homogeneity(), Ok(Homogeneity::Degree(_)))
    }

    /// Degree of a nonzero homogeneous form.
    pub fn form_degree(&self) -> Result<u32, PolyError> {
        match self.homogeneity()? {
            Homogeneity::Degree(d) => Ok(d),
            Homogeneity::NotHomogeneous => Err(PolyError::NotHomogeneous),
        }
    }

    /// Homogenizes an affine polynomial in `x, y` into `x, y, z`.
    ///
    /// The input may live in `{x,y}` or in `{x,y,z}` without any `z`.
    pub fn homogenize(&self) -> Result<Polynomial, PolyError> {
        let target = VarSet::xyz();
        let n = self.vars.len();
        let ok_xy = self.vars == VarSet::xy();
        let ok_xyz = self.vars == target && self.terms.keys().all(|m| m.exponents()[2] == 0);
        if !ok_xy && !ok_xyz {
            return Err(PolyError::Unsupported(format!(
                "homogenize expects a polynomial in x, y; got variables {}",
                self.vars
            )));
        }
        let top = self.total_degree().unwrap_or(0);
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let e = m.exponents();
            let mut exps = [0u32; 3];
            exps[0] = e[0];
            exps[1] = if n > 1 { e[1] } else { 0 };
            exps[2] = top - m.degree();
            out.add_term(Monomial::new(&exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `z = 1` in a polynomial in `x, y, z`, giving one in `x, y`.
    pub fn dehomogenize(&self) -> Result<Polynomial, PolyError> {
        if self.vars != VarSet::xyz() {
            return Err(PolyError::Unsupported(format!(
                "dehomogenize expects a polynomial in x, y, z; got variables {}",
                self.vars
            )));
        }
        let target = VarSet::xy();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let e = m.exponents();
            out.add_term(Monomial::new(&[e[0], e[1]]), c.clone());
        }
        Ok(out)
    }

    /// The ω-initial form: the sum of the terms of maximal ω-weight.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Polynomial, PolyError> {
        if w.len() != self.vars.len() {
            return Err(PolyError::WeightLength {
                expected: self.vars.len(),
                got: w.len(),
            });
        }
        let top = self
            .terms
            .keys()
            .map(|m| w.weight(m))
            .max()
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| w.weight(m) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Coefficient of `z^k` when the polynomial is expanded in powers of the
    /// last variable; the result lives in the same variable set.
    pub fn coefficient_of_last_power(&self, k: u32) -> Polynomial {
        let last = self.vars.len() - 1;
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[last] == k)
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exps_mut()[last] = 0;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Highest power of the last variable occurring in the polynomial.
    pub fn max_last_power(&self) -> Option<u32> {
        let last = self.vars.len() - 1;
        self.terms.keys().map(|m| m.exponents()[last]).max()
    }

    /// For a form `G` of degree `n` in `x, y, z` vanishing at `[0:0:1]`,
    /// returns the coefficient of `z^(n-1)`: the tangent line at the vertex.
    /// A zero result means the curve is singular there.
    pub fn linear_part_at_vertex(&self) -> Result<Polynomial, PolyError> {
        let n = self.form_degree()?;
        if self.vars.len() != 3 {
            return Err(PolyError::Unsupported(
                "linear part at the vertex needs variables x, y, z".into(),
            ));
        }
        if self.terms.keys().any(|m| m.exponents()[2] == n) {
            return Err(PolyError::NotVanishingAtVertex);
        }
        if n == 0 {
            return Err(PolyError::NotVanishingAtVertex);
        }
        Ok(self.coefficient_of_last_power(n - 1))
    }

    /// Re-expresses the polynomial in a larger variable set whose first
    /// variables coincide with the current ones.
    pub fn embed(&self, target: &VarSet) -> Polynomial {
        assert!(target.len() >= self.vars.len());
        assert_eq!(&target.names()[..self.vars.len()], self.vars.names());
        Polynomial {
            vars: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_len(target.len()), c.clone()))
                .collect(),
        }
    }

    /// Drops trailing variables that do not occur; `None` if one does occur.
    pub fn restrict(&self, target: &VarSet) -> Option<Polynomial> {
        let n = target.len();
        if self
            .terms
            .keys()
            .any(|m| m.exponents()[n..].iter().any(|&e| e != 0))
        {
            return None;
        }
        Some(Polynomial {
            vars: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_len(n), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `images[i]` for the `i`-th variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for p in images {
            if p.vars != target {
                return Err(PolyError::VarSetMismatch {
                    left: target,
                    right: p.vars.clone(),
                });
            }
        }
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let (gm, gc) = g.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let q = gm.quotient_of(m)?;
            let qc = c / gc;
            let t = Polynomial::term(&self.vars, q, qc);
            rem = &rem - &(&t * g);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Integer coefficients with unit content and positive leading coefficient,
    /// as (monomial, coefficient) pairs in descending grevlex order.
    pub(crate) fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.clone(), (c * Rational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let mut g = BigInt::zero();
        for (_, c) in &ints {
            g = g.gcd(c);
        }
        let negate = ints.first().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if !g.is_zero() {
            for (_, c) in ints.iter_mut() {
                *c = &*c / &g;
                if negate {
                    *c = -&*c;
                }
            }
        }
        ints
    }

    /// True if some coefficient is not an integer.
    pub fn has_fractions(&self) -> bool {
        self.terms.values().any(|c| !c.is_integer())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (name, &e) in self.vars.names().iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &VarSet::xyz()).unwrap()
    }

    fn pxy(s: &str) -> Polynomial {
        parse_polynomial(s, &VarSet::xy()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x - y").pow(2), p("x^2 - 2*x*y + y^2"));
        assert!((&p("x^3 + 7*z") * &p("0")).is_zero());
        assert_eq!(
            p("y*z - x^2").pow(2),
            p("y^2*z^2 - 2*x^2*y*z + x^4")
        );
        assert_eq!(p("x").pow(0), p("1"));
    }

    #[test]
    fn var_set_mismatch_is_reported() {
        let a = p("x");
        let b = pxy("x");
        assert!(matches!(a.try_add(&b), Err(PolyError::VarSetMismatch { .. })));
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(p("x^2 + y*z").homogeneity(), Ok(Homogeneity::Degree(2)));
        assert_eq!(p("x + y*z").homogeneity(), Ok(Homogeneity::NotHomogeneous));
        assert_eq!(p("y*z^2 - x^3").homogeneity(), Ok(Homogeneity::Degree(3)));
        assert_eq!(p("0").homogeneity(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn homogenize_round_trip() {
        let f = pxy("x^2 + y^2 - 2*x");
        let h = f.homogenize().unwrap();
        assert_eq!(h, p("x^2 + y^2 - 2*x*z"));
        assert_eq!(h.dehomogenize().unwrap(), f);
        assert_eq!(pxy("5").homogenize().unwrap(), p("5"));
    }

    #[test]
    fn initial_forms() {
        let w = WeightVector::new(vec![0, 0, 1]);
        assert_eq!(p("y*z - x^2").initial_form(&w).unwrap(), p("y*z"));
        assert_eq!(
            p("x^2 + x*y + y^2").initial_form(&w).unwrap(),
            p("x^2 + x*y + y^2")
        );
        assert_eq!(p("y*z^2 - x^3").initial_form(&w).unwrap(), p("y*z^2"));
        assert_eq!(p("0").initial_form(&w), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn linear_parts() {
        assert_eq!(p("x^2 + y^2 - 2*y*z").linear_part_at_vertex().unwrap(), p("-2*y"));
        assert_eq!(p("y*z - x^2").linear_part_at_vertex().unwrap(), p("y"));
        assert!(p("x^3 + y^3").linear_part_at_vertex().unwrap().is_zero());
        assert_eq!(
            p("z^2 + x*z").linear_part_at_vertex(),
            Err(PolyError::NotVanishingAtVertex)
        );
    }

    #[test]
    fn exact_division() {
        let f = p("x^2 - y^2");
        assert_eq!(f.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert!(f.div_exact(&p("x - z")).is_none());
    }

    #[test]
    fn substitution_translates() {
        let f = pxy("x^2 + y");
        let vars = VarSet::xy();
        let img = [pxy("x + 1"), Polynomial::var(&vars, 1)];
        assert_eq!(f.substitute(&img).unwrap(), pxy("x^2 + 2*x + 1 + y"));
    }
}
