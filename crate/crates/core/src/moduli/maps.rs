use std::fmt;

use num_traits::Zero;

use super::basis::{relations_and_basis, BasisSpec, FormalSum};
use super::label::{stabilizer_of_subset, BoundaryLabel};
use super::{ModuliError, SpaceId};
use crate::linalg::{LinalgError, Matrix};
use crate::{q, RatMatrix, RatVector, Rational};

/// Exact matrix between coordinate spaces; columns are images of source
/// basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source: String,
    pub target: String,
    pub matrix: RatMatrix,
}

impl LinearMap {
    /// Builds from the images of the source basis vectors.
    pub fn from_images(source: impl Into<String>, target: impl Into<String>, images: &[RatVector], target_dim: usize) -> Self {
        LinearMap { source: source.into(), target: target.into(), matrix: Matrix::from_cols(images, target_dim) }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, v: &[Rational]) -> Result<RatVector, LinalgError> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `k`-th source basis vector.
    pub fn image(&self, k: usize) -> RatVector {
        self.matrix.column(k)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinearMap) -> Result<LinearMap, LinalgError> {
        Ok(LinearMap { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix)? })
    }

    /// The dual map (on functionals).
    pub fn transpose(&self) -> LinearMap {
        LinearMap { source: self.target.clone(), target: self.source.clone(), matrix: self.matrix.transpose() }
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.source, self.target)?;
        write!(f, "{}", self.matrix)
    }
}

fn add_term(sum: &mut FormalSum, l: BoundaryLabel, c: Rational) {
    let e = sum.entry(l).or_insert_with(Rational::zero);
    *e += c;
}

fn prune(mut sum: FormalSum) -> FormalSum {
    sum.retain(|_, c| !c.is_zero());
    sum
}

/// Pushes a formal sum along `X_{n,m'} → X_{n,m}` (`m ≤ m'`), which makes
/// the distinguished points `m+1..m'` interchangeable. A label goes to
/// `|Stab_m(S)| / |Stab_{m'}(S)|` times its image label.
pub fn quotient_pushforward(src: SpaceId, sum: &FormalSum, dst: SpaceId) -> Result<FormalSum, ModuliError> {
    if src.n() != dst.n() || dst.m() > src.m() {
        return Err(ModuliError::Incompatible { from: src, to: dst, why: "target must be a further quotient" });
    }
    let mut out = FormalSum::new();
    for (l, c) in sum {
        let rep = l.representative(src);
        let tgt = BoundaryLabel::of_subset(dst, &rep)?;
        let deg = stabilizer_of_subset(dst, &rep) / stabilizer_of_subset(src, &rep);
        add_term(&mut out, tgt, c * deg);
    }
    Ok(prune(out))
}

/// Pulls back along the map forgetting distinguished points, one at a time:
/// `X_{n+1,m+1} → X_{n,m}` forgets point `m + 1` (for `M̄_{0,n}` the new
/// point is `n + 1`). Each label pulls back to the union of its two lifts.
pub fn forgetful_pullback(src: SpaceId, sum: &FormalSum, dst: SpaceId) -> Result<FormalSum, ModuliError> {
    let steps = dst.n().checked_sub(src.n()).filter(|&k| dst.m() >= src.m() && dst.m() - src.m() == k);
    let Some(steps) = steps else {
        return Err(ModuliError::Incompatible { from: src, to: dst, why: "target must add distinguished points" });
    };
    let mut cur = sum.clone();
    let mut here = src;
    for _ in 0..steps {
        let next = SpaceId::new(here.n() + 1, here.m() + 1)?;
        let p = here.m() + 1;
        let mut out = FormalSum::new();
        for (l, c) in &cur {
            let a = BoundaryLabel::new(next, l.i(), l.t())?;
            let mut t = l.t().to_vec();
            t.push(p);
            let b = BoundaryLabel::new(next, l.i() + 1, &t)?;
            if a == b {
                add_term(&mut out, a, c.clone());
            } else {
                add_term(&mut out, a, c.clone());
                add_term(&mut out, b, c.clone());
            }
        }
        cur = prune(out);
        here = next;
    }
    debug_assert_eq!(here, dst);
    Ok(cur)
}

/// Matrix of the quotient pushforward in the two bases.
pub fn pushforward_map(src: &BasisSpec, dst: &BasisSpec) -> Result<LinearMap, ModuliError> {
    let images = (0..src.picard_number())
        .map(|k| dst.express(&quotient_pushforward(src.space(), &src.basis_sum(k), dst.space())?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::from_images(format!("N1({})", src.space()), format!("N1({})", dst.space()), &images, dst.picard_number()))
}

/// Matrix of the forgetful pullback in the two bases.
pub fn pullback_map(src: &BasisSpec, dst: &BasisSpec) -> Result<LinearMap, ModuliError> {
    let images = (0..src.picard_number())
        .map(|k| dst.express(&forgetful_pullback(src.space(), &src.basis_sum(k), dst.space())?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::from_images(format!("N1({})", src.space()), format!("N1({})", dst.space()), &images, dst.picard_number()))
}

/// Convenience wrapper building both bases.
pub fn pushforward_between(src: SpaceId, dst: SpaceId) -> Result<LinearMap, ModuliError> {
    pushforward_map(&relations_and_basis(src)?, &relations_and_basis(dst)?)
}

fn rescale_ramified(spec: &BasisSpec, coords: &[Rational], factor: Rational) -> Result<RatVector, ModuliError> {
    if coords.len() != spec.picard_number() {
        return Err(ModuliError::Length { expected: spec.picard_number(), found: coords.len() });
    }
    Ok(spec
        .basis()
        .iter()
        .zip(coords)
        .map(|(l, c)| if l.is_ramified(spec.space()) { c * &factor } else { c.clone() })
        .collect())
}

/// Coordinates w.r.t. reduced boundary divisors `B` → b-normalised.
pub fn b_normalize(spec: &BasisSpec, coords: &[Rational]) -> Result<RatVector, ModuliError> {
    rescale_ramified(spec, coords, q(2, 1))
}

/// b-normalised coordinates → coordinates w.r.t. reduced divisors `B`.
pub fn b_denormalize(spec: &BasisSpec, coords: &[Rational]) -> Result<RatVector, ModuliError> {
    rescale_ramified(spec, coords, q(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::moduli::enumerate_boundaries;
    use crate::qv;

    fn sp(n: usize, m: usize) -> SpaceId {
        SpaceId::new(n, m).unwrap()
    }

    fn subset(s: SpaceId, set: &[usize]) -> FormalSum {
        FormalSum::from([(BoundaryLabel::of_subset(s, set).unwrap(), q(1, 1))])
    }

    #[test]
    fn degree_rule() {
        let x6 = SpaceId::full(6).unwrap();
        let push = |set: &[usize]| quotient_pushforward(x6, &subset(x6, set), sp(6, 3)).unwrap();
        let l = |i, t: &[usize]| BoundaryLabel::new(sp(6, 3), i, t).unwrap();
        assert_eq!(push(&[3, 6]), FormalSum::from([(l(2, &[3]), q(2, 1))]));
        assert_eq!(push(&[1, 2]), FormalSum::from([(l(2, &[1, 2]), q(6, 1))]));
        // Two interchangeable points: stabiliser 2 in b-normalised units.
        assert_eq!(push(&[4, 6]), FormalSum::from([(l(2, &[]), q(2, 1))]));
    }

    #[test]
    fn pushforward_composes() {
        let x7 = SpaceId::full(7).unwrap();
        for l in enumerate_boundaries(x7).into_iter().step_by(5) {
            let one = FormalSum::from([(l, q(1, 1))]);
            let direct = quotient_pushforward(x7, &one, sp(7, 1)).unwrap();
            let mid = quotient_pushforward(x7, &one, sp(7, 3)).unwrap();
            assert_eq!(quotient_pushforward(sp(7, 3), &mid, sp(7, 1)).unwrap(), direct);
        }
    }

    #[test]
    fn total_degree() {
        // Every orbit pushes with total multiplicity (n−m)! in b-normalised units.
        let x6 = SpaceId::full(6).unwrap();
        let all: FormalSum = enumerate_boundaries(x6).into_iter().map(|l| (l, q(1, 1))).collect();
        for m in [0, 1, 3] {
            let fact = (1..=6 - m as i64).product::<i64>();
            for (_, c) in quotient_pushforward(x6, &all, sp(6, m)).unwrap() {
                assert_eq!(c, q(fact, 1));
            }
        }
    }

    #[test]
    fn one_point_forgetful() {
        let x5 = SpaceId::full(5).unwrap();
        let x6 = SpaceId::full(6).unwrap();
        let up = forgetful_pullback(x5, &subset(x5, &[1, 2]), x6).unwrap();
        let expect: FormalSum = [subset(x6, &[1, 2]), subset(x6, &[1, 2, 6])].into_iter().flatten().collect();
        assert_eq!(up, expect);
    }

    #[test]
    fn pulled_relations_stay_relations() {
        for (src, dst) in [(sp(6, 2), sp(7, 3)), (sp(6, 0), sp(7, 1)), (SpaceId::full(5).unwrap(), SpaceId::full(6).unwrap())] {
            let a = relations_and_basis(src).unwrap();
            let b = relations_and_basis(dst).unwrap();
            for r in a.relations() {
                let sum: FormalSum =
                    a.labels().iter().cloned().zip(r.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect();
                let up = forgetful_pullback(src, &sum, dst).unwrap();
                assert!(b.express(&up).unwrap().iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn middle_lift_has_coefficient_one() {
        // X_{7,1} ← X_{6,0}: b_l ↦ b_{l+1} + b_{7−l}, single term in the middle.
        let a = relations_and_basis(sp(6, 0)).unwrap();
        let b = relations_and_basis(sp(7, 1)).unwrap();
        let m = pullback_map(&a, &b).unwrap();
        assert_eq!(m.image(0), qv(&[0, 1, 0, 1]));
        assert_eq!(m.image(1), qv(&[0, 0, 1, 0]));
        assert_eq!(rank(&m.matrix), 2);
    }

    #[test]
    fn normalisation_round_trip() {
        let spec = relations_and_basis(sp(7, 1)).unwrap();
        let v = qv(&[3, 1, 4, 1]);
        let b = b_normalize(&spec, &v).unwrap();
        assert_eq!(b, qv(&[3, 1, 4, 2]));
        assert_eq!(b_denormalize(&spec, &b).unwrap(), v);
        let spec = relations_and_basis(sp(8, 0)).unwrap();
        assert_eq!(b_normalize(&spec, &qv(&[1, 1, 1])).unwrap(), qv(&[2, 1, 1]));
    }
}
