use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::ring::VariableId;

/// A power product stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
///
/// `Ord` is the canonical storage order: graded by total degree, ties broken
/// lexicographically with variable 0 largest. It is independent of whatever
/// monomial order a computation uses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VariableId) -> Self {
        Monomial { exps: alloc::vec![(v, 1)] }
    }

    pub fn pow(v: VariableId, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { exps: alloc::vec![(v, e)] }
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VariableId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        exps.sort_by_key(|p| p.0);
        let mut out: Vec<(VariableId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { exps: out }
    }

    /// Dense exponent vector of length `arity`.
    pub fn to_dense(&self, arity: usize) -> Vec<u32> {
        let mut d = alloc::vec![0; arity];
        for &(v, e) in &self.exps {
            d[v.index()] = e;
        }
        d
    }

    pub fn from_dense(d: &[u32]) -> Self {
        Monomial {
            exps: d
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (VariableId(i as u32), e))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(VariableId, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.exps.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|p| p.1).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    pub fn max_var(&self) -> Option<VariableId> {
        self.exps.last().map(|p| p.0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|p| p.1 == 1)
    }

    pub fn is_variable(&self) -> bool {
        self.exps.len() == 1 && self.exps[0].1 == 1
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let a = self.exps.get(i);
            let b = other.exps.get(j);
            let (v, e) = match (a, b) {
                (None, None) => break,
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, f(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, f(0, eb))
                }
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, f(ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, f(0, eb))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, f(ea, eb))
                    }
                },
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, core::cmp::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, core::cmp::min)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge(other, |a, b| a - b))
    }

    /// The monomial with every exponent set to one.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect() }
    }

    /// Drops every occurrence of `v`.
    pub fn without(&self, v: VariableId) -> Monomial {
        Monomial { exps: self.exps.iter().copied().filter(|p| p.0 != v).collect() }
    }

    /// Renames variables through `map`; `None` if some variable is unmapped.
    pub fn remap(&self, map: &[Option<VariableId>]) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            pairs.push((*map.get(v.index())?.as_ref()?, e));
        }
        Some(Monomial::from_pairs(pairs))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a.0 != b.0 {
                // the side holding the smaller index has a positive exponent where the other has zero
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.exps.len().cmp(&other.exps.len())
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

    fn m(d: &[u32]) -> Monomial {
        Monomial::from_dense(d)
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert_eq!(a.gcd(&m(&[0, 3, 1])), m(&[0, 2, 0]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 4])));
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        assert!(m(&[1, 0, 1]) > m(&[0, 2, 0]));
        assert!(m(&[1, 1, 0]) > m(&[1, 0, 1]));
        assert_eq!(m(&[1, 1]).cmp(&m(&[1, 1])), Ordering::Equal);
    }
}
