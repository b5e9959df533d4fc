//! Exact linear algebra over ℚ: ranks by fraction-free sparse elimination and
//! kernel bases by reduced row echelon form.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Sparse integer row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut v: Vec<(usize, Rational)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|(c, _)| *c);
    let mut lcm = BigInt::one();
    for (_, q) in &v {
        lcm = lcm.lcm(q.denom());
    }
    let mut row: SparseRow = v
        .into_iter()
        .map(|(c, q)| (c, (q * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a*u - b*v` for sparse rows.
fn combine(u: &SparseRow, a: &BigInt, v: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let cu = u.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let cv = v.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        if cu < cv {
            out.push((cu, &u[i].1 * a));
            i += 1;
        } else if cv < cu {
            out.push((cv, -(&v[j].1 * b)));
            j += 1;
        } else {
            let c = &u[i].1 * a - &v[j].1 * b;
            if !c.is_zero() {
                out.push((cu, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form over ℤ (fraction free).
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        make_primitive(&mut row);
        loop {
            let Some((lead, _)) = row.first() else {
                return false;
            };
            let lead = *lead;
            match self.pivots.get(&lead) {
                None => {
                    if row[0].1.is_negative() {
                        for (_, c) in row.iter_mut() {
                            *c = -&*c;
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let g = p[0].1.gcd(&row[0].1);
                    let a = &p[0].1 / &g;
                    let b = &row[0].1 / &g;
                    let mut next = combine(&row[1..].to_vec(), &a, &p[1..].to_vec(), &b);
                    make_primitive(&mut next);
                    row = next;
                }
            }
        }
    }
}

/// Rank of a list of sparse integer rows.
pub fn rank_sparse(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense rational matrix given by rows.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    rank_sparse(
        rows.iter()
            .map(|r| integer_row(r.iter().cloned().enumerate())),
    )
}

/// Basis of the right kernel `{v : A v = 0}` of a rational matrix with
/// `ncols` columns, via reduced row echelon form. Each basis vector has a
/// single `1` in a distinct free column.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in m[row].iter_mut() {
            *c *= &inv;
        }
        let pivot = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (c, pv) in r.iter_mut().zip(&pivot) {
                    if !pv.is_zero() {
                        *c -= &f * pv;
                    }
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank_rational(&m), 2);
        let k = kernel_basis(&m, 3);
        assert_eq!(k.len(), 1);
        for r in &m {
            let dot: Rational = r.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(rank_rational(&[]), 0);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 1..6)) {
            let m: Vec<Vec<Rational>> = entries.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let r = rank_rational(&m);
            let k = kernel_basis(&m, 6);
            prop_assert_eq!(r + k.len(), 6);
            for v in &k {
                for row in &m {
                    let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
