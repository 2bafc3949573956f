use super::eff::boundary_rays;
use crate::cone::certify_membership;
use super::{range, CurveError};
use crate::fixtures::Fixtures;
use crate::linalg::primitive;
use crate::moduli::{forgetful_pullback, quotient_pushforward, relations_and_basis, DivisorClass, FormalSum, SpaceId};
use crate::{RatCertificate, RatVector};

/// A named boundary sum on `M̄_{0,n}` (point 1 distinguished after
/// relabelling).
#[derive(Clone, Debug)]
pub struct NamedClass {
    pub name: String,
    pub space: SpaceId,
    pub sum: FormalSum,
}

impl NamedClass {
    pub fn from_fixtures(f: &Fixtures, name: &str) -> Result<Self, CurveError> {
        let (space, sum) = f.class(name)?.formal()?;
        Ok(NamedClass { name: name.to_string(), space, sum })
    }

    pub fn terms(&self) -> usize {
        self.sum.len()
    }
}

/// Pulls `class` back to `M̄_{0,n}` (adding points) and pushes it to `target`.
pub fn fixture_class_on(class: &NamedClass, target: SpaceId) -> Result<DivisorClass, CurveError> {
    let up = SpaceId::full(target.n())?;
    let sum = if up == class.space { class.sum.clone() } else { forgetful_pullback(class.space, &class.sum, up)? };
    let down = quotient_pushforward(up, &sum, target)?;
    Ok(DivisorClass::from_formal(&relations_and_basis(target)?, &down)?)
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub n: usize,
    pub class: DivisorClass,
    pub boundary: Vec<RatVector>,
    pub certificate: RatCertificate,
}

impl Counterexample {
    /// Non-membership certificate that checks against every boundary class.
    pub fn verified(&self) -> bool {
        self.certificate.is_non_membership() && self.certificate.verify(&self.boundary, &[], &self.class.coords)
    }
}

/// Transports `F_τ` from `M̄_{0,6}` to `X_{n,3}` and tests it against the
/// boundary cone.
pub fn counterexample_ftau(f: &Fixtures, n: usize) -> Result<Counterexample, CurveError> {
    if n < 6 {
        return Err(range(format!("the F_τ transport needs n ≥ 6 (got n = {n})")));
    }
    let s = SpaceId::new(n, 3)?;
    let ftau = NamedClass::from_fixtures(f, "F_tau")?;
    let class = fixture_class_on(&ftau, s)?;
    let boundary = boundary_rays(s)?;
    let certificate = certify_membership(&boundary, &[], &class.coords);
    Ok(Counterexample { n, class, boundary, certificate })
}

/// `L₇` and the primitive generator of its pushforward to `X_{7,1}`.
pub fn class_l7(f: &Fixtures) -> Result<(NamedClass, RatVector), CurveError> {
    let l7 = NamedClass::from_fixtures(f, "L_7")?;
    let pushed = fixture_class_on(&l7, SpaceId::new(7, 1)?)?;
    let ray = primitive(&pushed.coords).map_err(|_| range("L_7 pushes forward to zero"))?;
    Ok((l7, ray))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qv};
    use num_traits::Zero;

    #[test]
    fn l7() {
        let (l, ray) = class_l7(Fixtures::builtin()).unwrap();
        assert_eq!(l.terms(), 15);
        assert_eq!(ray, qv(&[10, 6, 3, 1]));
        let c = fixture_class_on(&l, SpaceId::new(7, 1).unwrap()).unwrap();
        assert_eq!(c.coords, qv(&[480, 288, 144, 48]));
    }

    #[test]
    fn ftau_is_outside_the_boundary_cone() {
        for n in 6..=8 {
            let c = counterexample_ftau(Fixtures::builtin(), n).unwrap();
            assert!(c.verified(), "n = {n}");
        }
        let c = counterexample_ftau(Fixtures::builtin(), 6).unwrap();
        assert_eq!(c.class.coords, qv(&[2, 0, 0, 2, -6, -2, -2, 2]));
        assert!(!c.class.coords[..4].iter().all(Zero::is_zero));
        assert_eq!(c.class.coords[3], q(2, 1));
        assert!(counterexample_ftau(Fixtures::builtin(), 5).is_err());
    }
}
