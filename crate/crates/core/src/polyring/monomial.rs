use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector. Its `Ord` implementation is graded reverse
/// lexicographic order with the first variable largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub(crate) fn with_len(&self, n: usize) -> Monomial {
        let mut exps: SmallVec<[u32; 4]> = self.exps.iter().copied().take(n).collect();
        exps.resize(n, 0);
        Monomial { exps }
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u32] {
        &mut self.exps
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// grevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill(&mut out, &mut cur, 0, d);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::new(&[]));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        out.push(Monomial::new(cur));
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let x = Monomial::new(&[1, 0, 0]);
        let y = Monomial::new(&[0, 1, 0]);
        let z = Monomial::new(&[0, 0, 1]);
        assert!(x > y && y > z);
        // x*z < y^2 in grevlex
        assert!(Monomial::new(&[1, 0, 1]) < Monomial::new(&[0, 2, 0]));
        assert!(Monomial::new(&[0, 0, 2]) > x);
    }

    #[test]
    fn degree_enumeration() {
        let ms = Monomial::all_of_degree(3, 4);
        assert_eq!(ms.len(), 15);
        assert_eq!(ms[0], Monomial::new(&[4, 0, 0]));
        assert_eq!(ms[14], Monomial::new(&[0, 0, 4]));
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}
