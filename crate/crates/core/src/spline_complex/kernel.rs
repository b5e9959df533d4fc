//! The linear-algebra oracle: splines of degree `d` as the kernel of the
//! map sending `(F_σ)` to the classes of adjacent differences modulo
//! `G_τ^(r_τ+1)`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{SplineError, Spline, StarComplex};
use crate::groebner::Ideal;
use crate::linalg::{integer_row, kernel_basis, Echelon};
use crate::polyring::{Monomial, Polynomial, Rational, VarSet};

/// Normal forms of all degree-`d` monomials modulo a principal ideal `⟨g⟩`.
struct PrincipalReduction {
    /// `nf[k]` is the normal form of monomial `k`, over monomial indices.
    nf: Vec<Vec<(usize, Rational)>>,
    /// Whether monomial `k` is a multiple of the leading monomial of `g`.
    reducible: Vec<bool>,
}

impl PrincipalReduction {
    fn new(g: &Polynomial, monos: &[Monomial], index: &HashMap<Monomial, usize>) -> Self {
        let (lead, lc) = g.leading_term().expect("nonzero form");
        let tail: Vec<(Monomial, Rational)> = g
            .terms()
            .skip(1)
            .map(|(m, c)| (m.clone(), -(c / lc)))
            .collect();
        let mut nf: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(monos.len());
        let mut reducible = Vec::with_capacity(monos.len());
        let mut acc: Vec<Rational> = vec![Rational::zero(); monos.len()];
        // monos are ascending, so every q*t below was handled already
        for (k, m) in monos.iter().enumerate() {
            match lead.quotient_of(m) {
                None => {
                    nf.push(vec![(k, Rational::one())]);
                    reducible.push(false);
                }
                Some(q) => {
                    let mut touched = Vec::new();
                    for (t, c) in &tail {
                        let j = index[&q.mul(t)];
                        for (s, v) in &nf[j] {
                            if acc[*s].is_zero() {
                                touched.push(*s);
                            }
                            acc[*s] += c * v;
                        }
                    }
                    touched.sort_unstable();
                    touched.dedup();
                    let mut row = Vec::new();
                    for s in touched {
                        let v = std::mem::replace(&mut acc[s], Rational::zero());
                        if !v.is_zero() {
                            row.push((s, v));
                        }
                    }
                    nf.push(row);
                    reducible.push(true);
                }
            }
        }
        PrincipalReduction { nf, reducible }
    }
}

/// The degree-`d` spline system of a complex, reduced to the constraint at
/// edge 0 after eliminating the other edges.
///
/// Writing `D_i = F_i - F_(i-1)`, the constraints at edges `1..N` say that
/// `D_i` lies in the span of `m - NF_i(m)` for monomials `m` reducible by
/// `G_i^(r_i+1)`; the constraint at edge 0 applies to `D_0 = -Σ D_i`.
pub struct KernelSystem {
    d: u32,
    nfaces: usize,
    monos: Vec<Monomial>,
    reductions: Vec<PrincipalReduction>,
    /// `(edge, monomial)` for every unknown coefficient.
    columns: Vec<(usize, usize)>,
}

impl KernelSystem {
    pub fn new(c: &StarComplex, d: u32) -> Self {
        let mut monos = Monomial::all_of_degree(3, d);
        monos.reverse();
        let index: HashMap<Monomial, usize> =
            monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let reductions: Vec<PrincipalReduction> = (0..c.num_edges())
            .map(|i| PrincipalReduction::new(&c.smoothing_power(i), &monos, &index))
            .collect();
        let mut columns = Vec::new();
        for (i, red) in reductions.iter().enumerate().skip(1) {
            for (k, &r) in red.reducible.iter().enumerate() {
                if r {
                    columns.push((i, k));
                }
            }
        }
        KernelSystem {
            d,
            nfaces: c.num_faces(),
            monos,
            reductions,
            columns,
        }
    }

    /// Image of the column `(i, m)` under the edge-0 normal form:
    /// `NF_0(m - NF_i(m))`.
    fn column(&self, i: usize, k: usize) -> Vec<(usize, Rational)> {
        let nf0 = &self.reductions[0].nf;
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (s, v) in &nf0[k] {
            *acc.entry(*s).or_insert_with(Rational::zero) += v;
        }
        for (mu, w) in &self.reductions[i].nf[k] {
            for (s, v) in &nf0[*mu] {
                *acc.entry(*s).or_insert_with(Rational::zero) -= w * v;
            }
        }
        let mut out: Vec<(usize, Rational)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|(s, _)| *s);
        out
    }

    fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for &(i, k) in &self.columns {
            e.insert(integer_row(self.column(i, k)));
        }
        e.rank()
    }

    /// `dim C_d`: the free choice of `F_0` plus the syzygy part.
    pub fn dimension(&self) -> u64 {
        (self.monos.len() + self.columns.len() - self.rank()) as u64
    }

    fn polynomial(&self, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Polynomial {
        Polynomial::from_terms(
            &VarSet::xyz(),
            coeffs.into_iter().map(|(k, c)| (self.monos[k].clone(), c)),
        )
    }

    /// A basis: the global monomials followed by splines vanishing on face 0.
    pub fn basis(&self) -> Vec<Spline> {
        let v = VarSet::xyz();
        let mut out: Vec<Spline> = self
            .monos
            .iter()
            .rev()
            .map(|m| {
                let p = Polynomial::term(&v, m.clone(), Rational::one());
                Spline {
                    parts: vec![p; self.nfaces],
                }
            })
            .collect();
        let nrows = self.monos.len();
        let ncols = self.columns.len();
        let mut dense = vec![vec![Rational::zero(); ncols]; nrows];
        for (j, &(i, k)) in self.columns.iter().enumerate() {
            for (s, val) in self.column(i, k) {
                dense[s][j] = val;
            }
        }
        for kv in kernel_basis(&dense, ncols) {
            let mut diffs = vec![Polynomial::zero(&v); self.nfaces];
            for (j, c) in kv.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, k) = self.columns[j];
                // c * (m - NF_i(m))
                let mut terms = vec![(k, c.clone())];
                terms.extend(self.reductions[i].nf[k].iter().map(|(s, w)| (*s, -(c * w))));
                diffs[i] = &diffs[i] + &self.polynomial(terms);
            }
            let mut parts = Vec::with_capacity(self.nfaces);
            let mut cur = Polynomial::zero(&v);
            parts.push(cur.clone());
            for diff in diffs.iter().skip(1) {
                cur = &cur + diff;
                parts.push(cur.clone());
            }
            out.push(Spline { parts });
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.d
    }
}

/// `dim C_d` by exact rank computation on the spline kernel.
pub fn dim_kernel(c: &StarComplex, d: u32) -> u64 {
    KernelSystem::new(c, d).dimension()
}

/// A basis of `C_d`; it has exactly [`dim_kernel`] elements.
pub fn spline_basis(c: &StarComplex, d: u32) -> Vec<Spline> {
    KernelSystem::new(c, d).basis()
}

/// Whether `parts` (one form per face) satisfy the smoothness conditions.
pub fn is_spline(c: &StarComplex, parts: &[Polynomial]) -> Result<bool, SplineError> {
    let n = c.num_faces();
    if parts.len() != n {
        return Err(SplineError::WrongPartCount {
            expected: n,
            got: parts.len(),
        });
    }
    let degs: Vec<Option<u32>> = parts
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.form_degree().ok())
        .collect();
    if degs.iter().any(|d| d.is_none()) || degs.windows(2).any(|w| w[0] != w[1]) {
        return Err(SplineError::DegreeMismatch);
    }
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let diff = &parts[i] - &parts[prev];
        let gb = Ideal::new(&VarSet::xyz(), vec![c.smoothing_power(i)])
            .expect("form in x, y, z")
            .grevlex();
        if !gb.normal_form(&diff).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn spline_row(s: &Spline, nmonos: usize, index: &HashMap<Monomial, usize>) -> crate::linalg::SparseRow {
    integer_row(s.parts.iter().enumerate().flat_map(|(face, p)| {
        p.terms()
            .map(move |(m, c)| (face * nmonos + index[m], c.clone()))
            .collect::<Vec<_>>()
    }))
}

/// Degrees of minimal generators of the spline module up to `d_max`, with
/// multiplicity: in each degree, the dimension of `C_d` minus the rank of
/// `x·C_(d-1) + y·C_(d-1) + z·C_(d-1)`.
pub fn generator_degrees(c: &StarComplex, d_max: u32) -> Vec<u32> {
    let v = VarSet::xyz();
    let vars: Vec<Polynomial> = (0..3).map(|k| Polynomial::var(&v, k)).collect();
    let mut out = Vec::new();
    let mut prev: Vec<Spline> = Vec::new();
    for d in 0..=d_max {
        let basis = spline_basis(c, d);
        let monos = Monomial::all_of_degree(3, d);
        let index: HashMap<Monomial, usize> =
            monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let mut e = Echelon::new();
        for s in &prev {
            for x in &vars {
                let lifted = Spline {
                    parts: s.parts.iter().map(|p| p * x).collect(),
                };
                e.insert(spline_row(&lifted, monos.len(), &index));
            }
        }
        let new = basis.len() - e.rank();
        out.extend(std::iter::repeat_n(d, new));
        prev = basis;
    }
    out
}
