//! Gröbner bases over ℚ and the ideal operations built on them: membership,
//! colon ideals, intersections, saturations and weighted initial ideals.

mod engine;
mod order;

use std::fmt;

use num_traits::One;
use thiserror::Error;

pub use order::MonomialOrder;

use crate::polyring::{parse_polynomial, Monomial, PolyError, Polynomial, Rational, VarSet, WeightVector};

use engine::{from_exp, IPoly, Reducer, MAX_VARS};
use order::OrderCtx;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("operation requires homogeneous generators")]
    NotHomogeneous,
    #[error("cannot take the colon or saturation by zero")]
    ZeroDivisor,
    #[error("order is not global on inhomogeneous input")]
    NonGlobalOrder,
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVariables(usize),
}

/// An ideal given by generators. Zero generators and exact duplicates are
/// dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: VarSet,
    gens: Vec<Polynomial>,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl Ideal {
    pub fn new(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        if vars.len() > MAX_VARS {
            return Err(GroebnerError::TooManyVariables(vars.len()));
        }
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.vars() != vars {
                return Err(PolyError::VarSetMismatch {
                    left: vars.clone(),
                    right: g.vars().clone(),
                }
                .into());
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            vars: vars.clone(),
            gens: out,
        })
    }

    /// Parses every generator with [`parse_polynomial`].
    pub fn parse(vars: &VarSet, sources: &[&str]) -> Result<Self, GroebnerError> {
        let gens = sources
            .iter()
            .map(|s| parse_polynomial(s, vars))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, gens)
    }

    pub fn zero(vars: &VarSet) -> Self {
        Ideal {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: &VarSet) -> Self {
        Ideal {
            vars: vars.clone(),
            gens: vec![Polynomial::one(vars)],
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
        buchberger(self, order)
    }

    /// Reduced grevlex basis; the workhorse for membership and Hilbert functions.
    pub fn grevlex(&self) -> GroebnerBasis {
        buchberger(self, &MonomialOrder::Grevlex).expect("grevlex is global")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.grevlex().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex().is_unit()
    }

    /// Ideal equality, decided by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.vars == other.vars && self.grevlex().basis == other.grevlex().basis
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.vars, gens)
    }

    /// Ideal generated by the products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(g)?);
            }
        }
        Ideal::new(&self.vars, gens)
    }

    fn embed(&self, target: &VarSet) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.embed(target)).collect()
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: VarSet,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
    reduced: bool,
    truncated_at: Option<u32>,
    ipolys: Vec<IPoly>,
}

impl GroebnerBasis {
    /// Basis elements, monic, in ascending order of leading monomials.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `Some(D)` when only S-pairs of degree at most `D` were processed.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    /// Leading monomials with respect to the basis order.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            vars: self.vars.clone(),
            gens: self.basis.clone(),
        }
    }

    /// Remainder of `f` on division by the basis; zero exactly for members.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.vars(), &self.vars, "variable sets differ");
        if f.is_zero() {
            return f.clone();
        }
        let ctx = OrderCtx::new(&self.order, self.vars.len());
        let ip = IPoly::from_poly(f, &ctx);
        let n = self.vars.len();
        // ip = scale * f
        let (e0, c0) = &ip.terms[0];
        let scale = Rational::from_integer(c0.clone()) / f.coefficient(&from_exp(e0, n));
        let red = Reducer::new(&ctx, self.ipolys.iter().collect(), vec![0; self.ipolys.len()]);
        let r = red.reduce(ip, 0, true);
        if r.poly.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let denom = r.multiplier * scale;
        Polynomial::from_terms(
            &self.vars,
            r.poly.terms.iter().map(|(e, c)| {
                (from_exp(e, n), Rational::from_integer(c.clone()) / &denom)
            }),
        )
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Reduced Gröbner basis of `ideal` for `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    run(ideal, order, None)
}

/// Gröbner basis correct in all degrees `≤ max_degree`; requires homogeneous
/// generators. Enough for Hilbert function values up to `max_degree`.
pub fn buchberger_truncated(
    ideal: &Ideal,
    order: &MonomialOrder,
    max_degree: u32,
) -> Result<GroebnerBasis, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    run(ideal, order, Some(max_degree))
}

fn run(ideal: &Ideal, order: &MonomialOrder, max: Option<u32>) -> Result<GroebnerBasis, GroebnerError> {
    let n = ideal.vars.len();
    if let MonomialOrder::WeightRefined(w) = order {
        if w.len() != n {
            return Err(PolyError::WeightLength {
                expected: n,
                got: w.len(),
            }
            .into());
        }
    }
    if !order.is_global(n) && !ideal.is_homogeneous() {
        return Err(GroebnerError::NonGlobalOrder);
    }
    let ctx = OrderCtx::new(order, n);
    let gens: Vec<IPoly> = ideal.gens.iter().map(|g| IPoly::from_poly(g, &ctx)).collect();
    let (ipolys, _) = engine::buchberger(&ctx, gens, max);
    let basis: Vec<Polynomial> = ipolys.iter().map(|p| p.to_monic(&ideal.vars)).collect();
    let leads = ipolys.iter().map(|p| from_exp(p.lead(), n)).collect();
    Ok(GroebnerBasis {
        vars: ideal.vars.clone(),
        order: order.clone(),
        basis,
        leads,
        reduced: true,
        truncated_at: max,
        ipolys,
    })
}

/// Generators of `I ∩ k[remaining variables]`, where the eliminated
/// variables are the trailing `extra.len() - ideal vars` ones of `extended`.
fn eliminate_trailing(gens: Vec<Polynomial>, extended: &VarSet, target: &VarSet) -> Result<Ideal, GroebnerError> {
    let block: Vec<usize> = (target.len()..extended.len()).collect();
    let big = Ideal::new(extended, gens)?;
    let gb = buchberger(&big, &MonomialOrder::Elimination { block })?;
    let kept = gb.basis.iter().filter_map(|g| g.restrict(target)).collect();
    Ideal::new(target, kept)
}

fn with_t(vars: &VarSet) -> (VarSet, Polynomial) {
    let name = vars.fresh_name("t");
    let ext = vars.with_extra(&name);
    let t = Polynomial::var(&ext, ext.len() - 1);
    (ext, t)
}

/// `I ∩ J` via `t·I + (1 − t)·J` and elimination of `t`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    check_same(i, j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.vars));
    }
    let (ext, t) = with_t(&i.vars);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens: Vec<Polynomial> = i.embed(&ext).iter().map(|g| &t * g).collect();
    gens.extend(j.embed(&ext).iter().map(|g| &one_minus_t * g));
    eliminate_trailing(gens, &ext, &i.vars)
}

fn check_same(i: &Ideal, j: &Ideal) -> Result<(), GroebnerError> {
    if i.vars != j.vars {
        return Err(PolyError::VarSetMismatch {
            left: i.vars.clone(),
            right: j.vars.clone(),
        }
        .into());
    }
    Ok(())
}

/// `(I : f) = {g : g·f ∈ I}`, computed as `(I ∩ ⟨f⟩) / f`.
pub fn colon_ideal(i: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    let fi = Ideal::new(&i.vars, vec![f.clone()])?;
    let meet = intersect(i, &fi)?;
    let gens = meet
        .gens
        .iter()
        .map(|g| g.div_exact(f).expect("element of ⟨f⟩ is divisible by f"))
        .collect();
    Ok(Ideal::new(&i.vars, gens)?.minimized())
}

/// `(I : J) = ∩ (I : g)` over the generators `g` of `J`.
pub fn colon_ideal_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    check_same(i, j)?;
    if j.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let c = colon_ideal(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?.minimized(),
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// `(I : f^∞)` by adjoining `1 − t·f` and eliminating `t`. When `f` is a
/// variable and `I` is homogeneous the faster [`saturate_by_variable`] is used.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    if i.is_homogeneous() {
        if let Some(idx) = variable_index(f) {
            return saturate_by_variable(i, idx);
        }
    }
    saturate_by_elimination(i, f)
}

/// The elimination route of [`saturate`], without shortcuts.
pub fn saturate_by_elimination(i: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    let (ext, t) = with_t(&i.vars);
    let mut gens = i.embed(&ext);
    gens.push(&Polynomial::one(&ext) - &(&t * &f.embed(&ext)));
    Ok(eliminate_trailing(gens, &ext, &i.vars)?.minimized())
}

fn variable_index(f: &Polynomial) -> Option<usize> {
    let (m, c) = f.leading_term()?;
    if f.num_terms() != 1 || m.degree() != 1 || !c.is_one() {
        return None;
    }
    m.exponents().iter().position(|&e| e == 1)
}

/// `(I : x_k^∞)` for homogeneous `I`: with `x_k` last in grevlex, dividing
/// every basis element by its largest power of `x_k` gives a basis of the
/// saturation.
pub fn saturate_by_variable(i: &Ideal, k: usize) -> Result<Ideal, GroebnerError> {
    if !i.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let n = i.vars.len();
    let last = n - 1;
    let swap = |p: &Polynomial| -> Polynomial {
        let images: Vec<Polynomial> = (0..n)
            .map(|v| {
                let target = if v == k {
                    last
                } else if v == last {
                    k
                } else {
                    v
                };
                Polynomial::var(&i.vars, target)
            })
            .collect();
        p.substitute(&images).expect("same variable set")
    };
    let swapped = Ideal::new(&i.vars, i.gens.iter().map(swap).collect())?;
    let gb = swapped.grevlex();
    let vars = i.vars.clone();
    let divided: Vec<Polynomial> = gb
        .basis
        .iter()
        .map(|g| {
            let min_power = g
                .terms()
                .map(|(m, _)| m.exponents()[last])
                .min()
                .unwrap_or(0);
            let q = Polynomial::from_terms(
                &vars,
                g.terms().map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e[last] -= min_power;
                    (Monomial::new(&e), c.clone())
                }),
            );
            swap(&q)
        })
        .collect();
    Ok(Ideal::new(&i.vars, divided)?.minimized())
}

/// `(I : 𝔪^∞)` for the ideal `𝔪` generated by all variables, as the
/// intersection of the saturations at each variable.
pub fn saturate_irrelevant(i: &Ideal) -> Result<Ideal, GroebnerError> {
    let n = i.vars.len();
    let mut acc: Option<Ideal> = None;
    for k in 0..n {
        let var = Polynomial::var(&i.vars, k);
        let s = saturate(i, &var)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s)?.minimized(),
        });
    }
    Ok(acc.unwrap_or_else(|| i.clone()))
}

/// `(I : 𝔪^∞)` when the caller knows `I` is supported only at the point
/// where every variable but the last vanishes; then it equals `(I : z^∞)`.
pub fn saturate_irrelevant_at_vertex(i: &Ideal) -> Result<Ideal, GroebnerError> {
    let last = Polynomial::var(&i.vars, i.vars.len() - 1);
    saturate(i, &last)
}

/// `in_ω I`: the ideal of ω-initial forms of a Gröbner basis for the
/// ω-refined order. Negative weights are allowed on homogeneous ideals.
pub fn initial_ideal(i: &Ideal, w: &WeightVector) -> Result<Ideal, GroebnerError> {
    let n = i.vars.len();
    if w.len() != n {
        return Err(PolyError::WeightLength {
            expected: n,
            got: w.len(),
        }
        .into());
    }
    let min = w.0.iter().copied().min().unwrap_or(0);
    let effective = if min < 0 {
        if !i.is_homogeneous() {
            return Err(GroebnerError::NonGlobalOrder);
        }
        // On forms, shifting ω by a multiple of (1,…,1) does not change in_ω.
        WeightVector::new(w.0.iter().map(|x| x - min).collect())
    } else {
        w.clone()
    };
    let gb = buchberger(i, &MonomialOrder::WeightRefined(effective.clone()))?;
    let forms = gb
        .basis
        .iter()
        .map(|g| g.initial_form(&effective))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(&i.vars, forms)?.minimized())
}

impl Ideal {
    /// Same ideal, generated by its reduced grevlex basis.
    pub fn minimized(&self) -> Ideal {
        self.grevlex().to_ideal()
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.num_terms() == 1)
    }
}
