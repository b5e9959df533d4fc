use std::cmp::Ordering;

use crate::polyring::WeightVector;

use super::engine::{Exp, MAX_VARS};

/// A global monomial order.
///
/// Every variant is realized as a matrix order: a list of integer weight
/// rows compared lexicographically, with graded reverse lexicographic order
/// (first variable largest) breaking the remaining ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Compare ω-weights first, break ties with grevlex.
    WeightRefined(WeightVector),
    /// Block order eliminating the listed variables (by index).
    Elimination { block: Vec<usize> },
}

impl MonomialOrder {
    pub(crate) fn rows(&self, nvars: usize) -> Vec<Vec<i64>> {
        match self {
            MonomialOrder::Grevlex => Vec::new(),
            MonomialOrder::Lex => (0..nvars)
                .map(|i| (0..nvars).map(|j| i64::from(i == j)).collect())
                .collect(),
            MonomialOrder::WeightRefined(w) => vec![w.0.clone()],
            MonomialOrder::Elimination { block } => {
                vec![(0..nvars).map(|j| i64::from(block.contains(&j))).collect()]
            }
        }
    }

    /// Whether the order is a well-order on all monomials (so Buchberger
    /// terminates on arbitrary, possibly inhomogeneous, input).
    pub(crate) fn is_global(&self, nvars: usize) -> bool {
        self.rows(nvars).iter().all(|r| r.iter().all(|&w| w >= 0))
    }
}

/// Precomputed comparison data for one order on a fixed number of variables.
#[derive(Clone, Debug)]
pub(crate) struct OrderCtx {
    pub(crate) nvars: usize,
    rows: Vec<[i64; MAX_VARS]>,
}

impl OrderCtx {
    pub(crate) fn new(order: &MonomialOrder, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let rows = order
            .rows(nvars)
            .into_iter()
            .map(|r| {
                let mut a = [0i64; MAX_VARS];
                a[..r.len()].copy_from_slice(&r);
                a
            })
            .collect();
        OrderCtx { nvars, rows }
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Exp, b: &Exp) -> Ordering {
        let n = self.nvars;
        for row in &self.rows {
            let mut wa = 0i64;
            let mut wb = 0i64;
            for i in 0..n {
                wa += row[i] * a[i] as i64;
                wb += row[i] * b[i] as i64;
            }
            if wa != wb {
                return wa.cmp(&wb);
            }
        }
        let da: u32 = a[..n].iter().map(|&e| e as u32).sum();
        let db: u32 = b[..n].iter().map(|&e| e as u32).sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..n).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }
}
