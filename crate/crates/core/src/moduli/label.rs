use std::cmp::Ordering;
use std::fmt;

use super::{ModuliError, SpaceId};
use crate::Rational;

/// `D^i_T`: `i` marked points on one component, `T ⊆ {1..m}` the
/// distinguished ones among them. Always stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryLabel {
    i: usize,
    t: Vec<usize>,
}

// Canonical order: smaller i, then smaller |T|, then lexicographic T.
impl Ord for BoundaryLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.i, self.t.len(), &self.t).cmp(&(other.i, other.t.len(), &other.t))
    }
}

impl PartialOrd for BoundaryLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BoundaryLabel {
    /// Validates `(i, T)` on `s` and returns the canonical representative of
    /// `{(i, T), (n − i, {1..m} ∖ T)}`.
    pub fn new(s: SpaceId, i: usize, t: &[usize]) -> Result<Self, ModuliError> {
        let mut t: Vec<usize> = t.to_vec();
        t.sort_unstable();
        t.dedup();
        let bad = || ModuliError::BadLabel { n: s.n(), m: s.m(), i, t: t.clone() };
        if i < 2 || i + 2 > s.n() || t.iter().any(|&p| p == 0 || p > s.m()) || t.len() > i {
            return Err(bad());
        }
        if i - t.len() > s.free_points() {
            return Err(bad());
        }
        let tc: Vec<usize> = (1..=s.m()).filter(|p| !t.contains(p)).collect();
        let a = BoundaryLabel { i, t };
        let b = BoundaryLabel { i: s.n() - a.i, t: tc };
        Ok(a.min(b))
    }

    /// Label of the divisor `D_S` (`S ⊆ {1..n}`) after the quotient.
    pub fn of_subset(s: SpaceId, subset: &[usize]) -> Result<Self, ModuliError> {
        let t: Vec<usize> = subset.iter().copied().filter(|&p| p <= s.m()).collect();
        Self::new(s, subset.len(), &t)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// A subset `S ⊆ {1..n}` whose divisor maps onto this label: `T` plus the
    /// first `i − |T|` interchangeable points.
    pub fn representative(&self, s: SpaceId) -> Vec<usize> {
        let mut v = self.t.clone();
        v.extend(s.m() + 1..=s.m() + self.i - self.t.len());
        v
    }

    /// Only `(2, ∅)` (two interchangeable points bubbling off) is ramified.
    pub fn is_ramified(&self, s: SpaceId) -> bool {
        s.n() >= 5 && self.i == 2 && self.t.is_empty()
    }

    /// Order of the stabiliser in `S_{n−m}` of the partition `{S, Sᶜ}`, for
    /// any `S` in this label's orbit.
    pub fn stabilizer_order(&self, s: SpaceId) -> Rational {
        stabilizer_of_subset(s, &self.representative(s))
    }

    pub fn name(&self) -> String {
        if self.t.is_empty() {
            format!("D^{}", self.i)
        } else {
            format!("D^{}_{}", self.i, join_points(&self.t))
        }
    }
}

pub(crate) fn join_points(t: &[usize]) -> String {
    if t.iter().all(|&p| p < 10) {
        t.iter().map(ToString::to_string).collect()
    } else {
        format!("{{{}}}", t.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(crate::q(1, 1), |acc, j| acc * crate::q(j as i64, 1))
}

pub(crate) fn stabilizer_of_subset(s: SpaceId, subset: &[usize]) -> Rational {
    let a = subset.iter().filter(|&&p| p > s.m()).count();
    let b = s.free_points() - a;
    let mut st = factorial(a) * factorial(b);
    if s.m() == 0 && 2 * subset.len() == s.n() {
        st *= crate::q(2, 1);
    }
    st
}

/// All boundary labels of `s`, sorted canonically.
pub fn enumerate_boundaries(s: SpaceId) -> Vec<BoundaryLabel> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << s.m()) {
        let t: Vec<usize> = (1..=s.m()).filter(|p| mask >> (p - 1) & 1 == 1).collect();
        for i in t.len().max(2)..=(s.n() - 2).min(t.len() + s.free_points()) {
            if let Ok(l) = BoundaryLabel::new(s, i, &t) {
                out.push(l);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
