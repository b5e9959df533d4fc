//! Integer-coefficient polynomial kernel used by Buchberger's algorithm.
//!
//! Polynomials over ℚ are scaled to primitive integer polynomials; every
//! reduction step is fraction free and content is stripped periodically.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Monomial, Polynomial, Rational, VarSet};

use super::order::OrderCtx;

pub(crate) const MAX_VARS: usize = 8;
pub(crate) type Exp = [u16; MAX_VARS];

/// Content is stripped after this many reduction steps.
const CONTENT_PERIOD: usize = 12;

#[inline]
pub(crate) fn exp_degree(e: &Exp, n: usize) -> u32 {
    e[..n].iter().map(|&x| x as u32).sum()
}

#[inline]
pub(crate) fn exp_divides(a: &Exp, b: &Exp, n: usize) -> bool {
    (0..n).all(|i| a[i] <= b[i])
}

#[inline]
fn exp_mul(a: &Exp, b: &Exp, n: usize) -> Exp {
    let mut c = [0u16; MAX_VARS];
    for i in 0..n {
        c[i] = a[i].checked_add(b[i]).expect("exponent overflow");
    }
    c
}

#[inline]
fn exp_quot(a: &Exp, b: &Exp, n: usize) -> Exp {
    let mut c = [0u16; MAX_VARS];
    for i in 0..n {
        c[i] = b[i] - a[i];
    }
    c
}

#[inline]
fn exp_lcm(a: &Exp, b: &Exp, n: usize) -> Exp {
    let mut c = [0u16; MAX_VARS];
    for i in 0..n {
        c[i] = a[i].max(b[i]);
    }
    c
}

#[inline]
fn exp_coprime(a: &Exp, b: &Exp, n: usize) -> bool {
    (0..n).all(|i| a[i] == 0 || b[i] == 0)
}

/// Bit mask with bit `8i + k` set when the exponent of variable `i`
/// exceeds `k`; used to reject divisibility tests quickly.
#[inline]
fn divmask(e: &Exp, n: usize) -> u64 {
    let mut m = 0u64;
    for (i, &x) in e.iter().take(n.min(8)).enumerate() {
        let lvl = x.min(8) as u64;
        if lvl > 0 {
            m |= ((1u64 << lvl) - 1) << (8 * i);
        }
    }
    m
}

pub(crate) fn to_exp(m: &Monomial) -> Exp {
    let mut e = [0u16; MAX_VARS];
    for (slot, &x) in e.iter_mut().zip(m.exponents()) {
        *slot = u16::try_from(x).expect("exponent too large for Gröbner engine");
    }
    e
}

pub(crate) fn from_exp(e: &Exp, n: usize) -> Monomial {
    let v: Vec<u32> = e[..n].iter().map(|&x| x as u32).collect();
    Monomial::new(&v)
}

/// Polynomial with integer coefficients, terms sorted descending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub(crate) terms: Vec<(Exp, BigInt)>,
}

impl IPoly {
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> &Exp {
        &self.terms[0].0
    }

    pub(crate) fn from_poly(p: &Polynomial, ctx: &OrderCtx) -> IPoly {
        let mut terms: Vec<(Exp, BigInt)> = p
            .primitive_integer_terms()
            .into_iter()
            .map(|(m, c)| (to_exp(&m), c))
            .collect();
        terms.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
        let mut ip = IPoly { terms };
        ip.normalize_sign();
        ip
    }

    /// Rational polynomial scaled to leading coefficient one.
    pub(crate) fn to_monic(&self, vars: &VarSet) -> Polynomial {
        let n = vars.len();
        let Some((_, lc)) = self.terms.first() else {
            return Polynomial::zero(vars);
        };
        let lc = lc.clone();
        Polynomial::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(e, c)| (from_exp(e, n), Rational::new(c.clone(), lc.clone()))),
        )
    }

    fn normalize_sign(&mut self) {
        if self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false) {
            for t in &mut self.terms {
                t.1 = -&t.1;
            }
        }
    }

    /// Divides out the content; returns it (zero for the zero polynomial).
    pub(crate) fn make_primitive(&mut self) -> BigInt {
        let g = content(self.terms.iter().map(|t| &t.1));
        if !g.is_zero() && !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
        let neg = self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false);
        self.normalize_sign();
        if neg {
            -g
        } else {
            g
        }
    }

    pub(crate) fn max_degree(&self, n: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| exp_degree(&t.0, n))
            .max()
            .unwrap_or(0)
    }
}

fn content<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in coeffs {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a*f - b*q*g` with both inputs sorted descending; the output is sorted.
fn combine(
    ctx: &OrderCtx,
    f: &[(Exp, BigInt)],
    a: &BigInt,
    g: &[(Exp, BigInt)],
    q: &Exp,
    b: &BigInt,
) -> Vec<(Exp, BigInt)> {
    let n = ctx.nvars;
    let a_one = a.is_one();
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gq: Option<Exp> = g.first().map(|t| exp_mul(&t.0, q, n));
    while i < f.len() || j < g.len() {
        let ord = match (f.get(i), gq.as_ref()) {
            (Some(ft), Some(ge)) => ctx.cmp(&ft.0, ge),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => {
                let c = if a_one { f[i].1.clone() } else { &f[i].1 * a };
                out.push((f[i].0, c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gq.unwrap(), -(&g[j].1 * b)));
                j += 1;
                gq = g.get(j).map(|t| exp_mul(&t.0, q, n));
            }
            Ordering::Equal => {
                let c = if a_one {
                    &f[i].1 - &g[j].1 * b
                } else {
                    &f[i].1 * a - &g[j].1 * b
                };
                if !c.is_zero() {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
                gq = g.get(j).map(|t| exp_mul(&t.0, q, n));
            }
        }
    }
    out
}

/// A set of reducers with cached leading data.
pub(crate) struct Reducer<'a> {
    ctx: &'a OrderCtx,
    polys: Vec<&'a IPoly>,
    sugars: Vec<u32>,
    masks: Vec<u64>,
}

/// Outcome of a reduction: `remainder = multiplier * input` modulo the reducers.
pub(crate) struct Reduced {
    pub(crate) poly: IPoly,
    pub(crate) multiplier: Rational,
    pub(crate) sugar: u32,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(ctx: &'a OrderCtx, polys: Vec<&'a IPoly>, sugars: Vec<u32>) -> Self {
        let masks = polys.iter().map(|p| divmask(p.lead(), ctx.nvars)).collect();
        Reducer {
            ctx,
            polys,
            sugars,
            masks,
        }
    }

    fn find_divisor(&self, e: &Exp) -> Option<usize> {
        let n = self.ctx.nvars;
        let m = divmask(e, n);
        let mut best: Option<usize> = None;
        for (k, p) in self.polys.iter().enumerate() {
            if self.masks[k] & !m != 0 {
                continue;
            }
            if exp_divides(p.lead(), e, n) {
                match best {
                    Some(b) if self.polys[b].terms.len() <= p.terms.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    /// Reduces `f`; with `full` the tail is reduced too, otherwise only
    /// leading terms are eliminated.
    pub(crate) fn reduce(&self, f: IPoly, sugar: u32, full: bool) -> Reduced {
        let n = self.ctx.nvars;
        let mut f = f.terms;
        let mut head = 0usize;
        let mut rem: Vec<(Exp, BigInt)> = Vec::new();
        let mut mult = Rational::one();
        let mut sugar = sugar;
        let mut steps = 0usize;
        while head < f.len() {
            let lead = f[head].0;
            match self.find_divisor(&lead) {
                Some(k) => {
                    let g = self.polys[k];
                    let (gm, gc) = &g.terms[0];
                    let q = exp_quot(gm, &lead, n);
                    let lc = &f[head].1;
                    let d = lc.gcd(gc);
                    let mut a = gc / &d;
                    let mut b = lc / &d;
                    if a.is_negative() {
                        a = -a;
                        b = -b;
                    }
                    sugar = sugar.max(exp_degree(&q, n) + self.sugars[k]);
                    f = combine(self.ctx, &f[head + 1..], &a, &g.terms[1..], &q, &b);
                    head = 0;
                    if !a.is_one() {
                        for t in rem.iter_mut() {
                            t.1 *= &a;
                        }
                        mult *= Rational::from_integer(a);
                    }
                    steps += 1;
                    if steps.is_multiple_of(CONTENT_PERIOD) {
                        let c = content(f.iter().chain(rem.iter()).map(|t| &t.1));
                        if !c.is_zero() && !c.is_one() {
                            for t in f.iter_mut().chain(rem.iter_mut()) {
                                t.1 = &t.1 / &c;
                            }
                            mult /= Rational::from_integer(c);
                        }
                    }
                }
                None => {
                    if !full {
                        rem.extend(f.drain(head..));
                        break;
                    }
                    rem.push(f[head].clone());
                    head += 1;
                }
            }
        }
        let mut poly = IPoly { terms: rem };
        let c = poly.make_primitive();
        if !c.is_zero() {
            mult /= Rational::from_integer(c);
        }
        Reduced {
            poly,
            multiplier: mult,
            sugar,
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    sugar: u32,
}

/// Statistics from one run, used by benchmarks and debugging output.
#[derive(Clone, Debug, Default)]
pub(crate) struct GbStats {
    pub(crate) pairs_reduced: usize,
    pub(crate) zero_reductions: usize,
}

/// Buchberger's algorithm with the normal (sugar) selection strategy and the
/// Gebauer–Möller installation of the product and chain criteria.
///
/// Returns the reduced Gröbner basis as primitive integer polynomials, in
/// ascending order of leading monomials. With `max_sugar` set, pairs of
/// higher sugar are never processed: for homogeneous input this yields a
/// basis that is correct in all degrees up to `max_sugar`.
pub(crate) fn buchberger(
    ctx: &OrderCtx,
    gens: Vec<IPoly>,
    max_sugar: Option<u32>,
) -> (Vec<IPoly>, GbStats) {
    let n = ctx.nvars;
    let mut stats = GbStats::default();
    let mut polys: Vec<IPoly> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<IPoly> = gens.into_iter().filter(|p| !p.is_zero()).collect();
    inputs.sort_by(|a, b| ctx.cmp(a.lead(), b.lead()));
    for f in inputs {
        let s = f.max_degree(n);
        if max_sugar.is_some_and(|m| s > m) {
            continue;
        }
        let reduced = {
            let red = Reducer::new(
                ctx,
                active.iter().map(|&k| &polys[k]).collect(),
                active.iter().map(|&k| sugars[k]).collect(),
            );
            red.reduce(f, s, true)
        };
        if reduced.poly.is_zero() {
            continue;
        }
        polys.push(reduced.poly);
        sugars.push(reduced.sugar);
        let h = polys.len() - 1;
        update(ctx, &polys, &sugars, &mut active, &mut pairs, h);
    }

    loop {
        let pick = pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| max_sugar.is_none_or(|m| p.sugar <= m))
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| ctx.cmp(&a.lcm, &b.lcm)))
            .map(|(k, _)| k);
        let Some(k) = pick else { break };
        let pair = pairs.swap_remove(k);
        stats.pairs_reduced += 1;
        let sp = s_polynomial(ctx, &polys[pair.i], &polys[pair.j], &pair.lcm);
        if sp.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let reduced = {
            let red = Reducer::new(
                ctx,
                active.iter().map(|&k| &polys[k]).collect(),
                active.iter().map(|&k| sugars[k]).collect(),
            );
            red.reduce(sp, pair.sugar, true)
        };
        if reduced.poly.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        polys.push(reduced.poly);
        sugars.push(reduced.sugar.max(pair.sugar));
        let h = polys.len() - 1;
        update(ctx, &polys, &sugars, &mut active, &mut pairs, h);
    }

    // `active` has pairwise non-dividing leading monomials; reduce tails.
    let mut basis: Vec<IPoly> = Vec::with_capacity(active.len());
    for (pos, &k) in active.iter().enumerate() {
        let others: Vec<&IPoly> = active
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &j)| &polys[j])
            .collect();
        let red = Reducer::new(ctx, others, vec![0; active.len() - 1]);
        let g = polys[k].clone();
        let head = IPoly {
            terms: vec![g.terms[0].clone()],
        };
        let tail = IPoly {
            terms: g.terms[1..].to_vec(),
        };
        let r = red.reduce(tail, 0, true);
        // head + tail ≡ head + r/mult; rescale so everything is integral.
        let mult = r.multiplier;
        let mut terms = Vec::with_capacity(1 + r.poly.terms.len());
        let (hn, hd) = (mult.numer().clone(), mult.denom().clone());
        // mult * (head + tail) ≡ mult*head + r  ->  numer*head + denom*r
        terms.push((head.terms[0].0, &head.terms[0].1 * &hn));
        for (e, c) in r.poly.terms {
            terms.push((e, c * &hd));
        }
        let mut p = IPoly { terms };
        p.make_primitive();
        basis.push(p);
    }
    basis.sort_by(|a, b| ctx.cmp(a.lead(), b.lead()));
    (basis, stats)
}

fn s_polynomial(ctx: &OrderCtx, f: &IPoly, g: &IPoly, lcm: &Exp) -> IPoly {
    let n = ctx.nvars;
    let (fm, fc) = &f.terms[0];
    let (gm, gc) = &g.terms[0];
    let qf = exp_quot(fm, lcm, n);
    let qg = exp_quot(gm, lcm, n);
    let d = fc.gcd(gc);
    let a = gc / &d;
    let b = fc / &d;
    // a*qf*f - b*qg*g, leading terms cancel.
    let ftail: Vec<(Exp, BigInt)> = f.terms[1..]
        .iter()
        .map(|(e, c)| (exp_mul(e, &qf, n), c.clone()))
        .collect();
    let mut p = IPoly {
        terms: combine(ctx, &ftail, &a, &g.terms[1..], &qg, &b),
    };
    p.make_primitive();
    p
}

fn update(
    ctx: &OrderCtx,
    polys: &[IPoly],
    sugars: &[u32],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
) {
    let n = ctx.nvars;
    let hl = *polys[h].lead();
    let pair_sugar = |i: usize, lcm: &Exp| -> u32 {
        let li = polys[i].lead();
        let sh = sugars[h] + exp_degree(lcm, n) - exp_degree(&hl, n);
        let si = sugars[i] + exp_degree(lcm, n) - exp_degree(li, n);
        sh.max(si)
    };

    let mut cand: Vec<(usize, Exp)> = active
        .iter()
        .map(|&g| (g, exp_lcm(&hl, polys[g].lead(), n)))
        .collect();
    let mut kept: Vec<(usize, Exp)> = Vec::new();
    while let Some((g1, l1)) = cand.pop() {
        let coprime = exp_coprime(&hl, polys[g1].lead(), n);
        let dominated = cand
            .iter()
            .chain(kept.iter())
            .any(|(_, l2)| exp_divides(l2, &l1, n));
        if coprime || !dominated {
            kept.push((g1, l1));
        }
    }
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(g, _)| !exp_coprime(&hl, polys[*g].lead(), n))
        .map(|(g, l)| Pair {
            i: g,
            j: h,
            lcm: l,
            sugar: pair_sugar(g, &l),
        })
        .collect();

    pairs.retain(|p| {
        if !exp_divides(&hl, &p.lcm, n) {
            return true;
        }
        let l1 = exp_lcm(polys[p.i].lead(), &hl, n);
        let l2 = exp_lcm(polys[p.j].lead(), &hl, n);
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(new_pairs);

    active.retain(|&g| !exp_divides(&hl, polys[g].lead(), n));
    active.push(h);
}
