//! Exact polyhedral cones with both representations, certificates, and
//! PORTA / JSON interchange.
//!
//! Inequalities mean `⟨a, x⟩ ≥ 0`, equations `⟨e, x⟩ = 0`. Every V-rep held by
//! a [`Cone`] is canonical: extreme rays only, projected orthogonally to the
//! lineality space, primitive, lexicographically sorted.

pub mod cert;
mod dd;
pub mod json;
pub mod latex;
mod lp;
pub mod porta;

use thiserror::Error;

pub use cert::Certificate;

use crate::linalg::{dot, fmt_vec, is_zero_vec, primitive, primitive_unoriented, LinalgError, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone has no {0} representation")]
    Missing(&'static str),
    #[error("functional is negative on ray {0}")]
    NegativeOnRay(String),
    #[error("functional does not vanish on lineality direction {0}")]
    NonzeroOnLineality(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HRep<T> {
    pub inequalities: Vec<Vec<T>>,
    pub equations: Vec<Vec<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VRep<T> {
    pub rays: Vec<Vec<T>>,
    pub lineality: Vec<Vec<T>>,
}

/// A generator together with the certificate placing it outside a cone.
pub type Witness<T> = (Vec<T>, Certificate<T>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone<T> {
    dim: usize,
    hrep: Option<HRep<T>>,
    vrep: Option<VRep<T>>,
}

/// Outcome of [`Cone::equals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison<T> {
    Equal,
    /// `generator` belongs to one cone (the first if `from_first`) but not
    /// the other; `certificate` separates it from the other cone.
    Differs { generator: Vec<T>, from_first: bool, certificate: Certificate<T> },
}

impl<T> Comparison<T> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Result of [`minimal_hrep`]: indices of kept inequalities and one
/// redundancy certificate per removed inequality (in terms of kept ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalHrep<T> {
    pub kept: Vec<usize>,
    pub removed: Vec<Certificate<T>>,
}

fn check_dims<T>(dim: usize, vs: &[Vec<T>]) -> Result<(), ConeError> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(ConeError::DimensionMismatch { expected: dim, found: v.len() }),
        None => Ok(()),
    }
}

fn dedup_preserving<T: Scalar>(vs: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::with_capacity(vs.len());
    for v in vs {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

impl<T: Scalar> Cone<T> {
    /// Cone cut out by `inequalities` and `equations`. Rows are scaled to
    /// primitive form; zero rows and exact duplicates are dropped.
    pub fn from_hrep(dim: usize, inequalities: Vec<Vec<T>>, equations: Vec<Vec<T>>) -> Result<Self, ConeError> {
        check_dims(dim, &inequalities)?;
        check_dims(dim, &equations)?;
        let inequalities = dedup_preserving(
            inequalities.iter().filter(|a| !is_zero_vec(a)).map(|a| primitive(a)).collect::<Result<_, _>>()?,
        );
        let equations = dedup_preserving(
            equations
                .iter()
                .filter(|a| !is_zero_vec(a))
                .map(|a| primitive_unoriented(a))
                .collect::<Result<_, _>>()?,
        );
        Ok(Cone { dim, hrep: Some(HRep { inequalities, equations }), vrep: None })
    }

    /// Cone generated by `rays` and the subspace spanned by `lineality`,
    /// returned with both representations in canonical form.
    pub fn from_generators(dim: usize, rays: Vec<Vec<T>>, lineality: Vec<Vec<T>>) -> Result<Self, ConeError> {
        check_dims(dim, &rays)?;
        check_dims(dim, &lineality)?;
        let (facets, eqs) = dd::extreme_rays(dim, &rays, &lineality);
        let (rays, lineality) = dd::extreme_rays(dim, &facets, &eqs);
        Ok(Cone {
            dim,
            hrep: Some(HRep { inequalities: facets, equations: eqs }),
            vrep: Some(VRep { rays, lineality }),
        })
    }

    pub fn orthant(dim: usize) -> Self {
        let unit = |i: usize| (0..dim).map(|j| if i == j { T::one() } else { T::zero() }).collect();
        Cone::from_generators(dim, (0..dim).map(unit).collect(), Vec::new()).expect("orthant")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> Option<&HRep<T>> {
        self.hrep.as_ref()
    }

    pub fn vrep(&self) -> Option<&VRep<T>> {
        self.vrep.as_ref()
    }

    pub fn rays(&self) -> Result<&[Vec<T>], ConeError> {
        self.vrep.as_ref().map(|v| v.rays.as_slice()).ok_or(ConeError::Missing("V"))
    }

    pub fn lineality(&self) -> Result<&[Vec<T>], ConeError> {
        self.vrep.as_ref().map(|v| v.lineality.as_slice()).ok_or(ConeError::Missing("V"))
    }

    pub fn inequalities(&self) -> Result<&[Vec<T>], ConeError> {
        self.hrep.as_ref().map(|h| h.inequalities.as_slice()).ok_or(ConeError::Missing("H"))
    }

    pub fn equations(&self) -> Result<&[Vec<T>], ConeError> {
        self.hrep.as_ref().map(|h| h.equations.as_slice()).ok_or(ConeError::Missing("H"))
    }

    /// Adds the canonical V-representation (double description). The
    /// H-representation is kept as given.
    pub fn hrep_to_vrep(&self) -> Result<Self, ConeError> {
        let h = self.hrep.as_ref().ok_or(ConeError::Missing("H"))?;
        let (rays, lineality) = dd::extreme_rays(self.dim, &h.inequalities, &h.equations);
        Ok(Cone { dim: self.dim, hrep: self.hrep.clone(), vrep: Some(VRep { rays, lineality }) })
    }

    /// Replaces the H-representation by the minimal one derived from the
    /// V-representation: facet normals and a canonical equation basis.
    pub fn vrep_to_hrep(&self) -> Result<Self, ConeError> {
        let v = self.vrep.as_ref().ok_or(ConeError::Missing("V"))?;
        let (inequalities, equations) = dd::extreme_rays(self.dim, &v.rays, &v.lineality);
        Ok(Cone { dim: self.dim, hrep: Some(HRep { inequalities, equations }), vrep: self.vrep.clone() })
    }

    fn with_vrep(&self) -> Result<Self, ConeError> {
        if self.vrep.is_some() {
            Ok(self.clone())
        } else {
            self.hrep_to_vrep()
        }
    }

    /// Both representations in canonical form.
    pub fn canonical(&self) -> Result<Self, ConeError> {
        self.with_vrep()?.vrep_to_hrep()
    }

    /// `{y : ⟨y, x⟩ ≥ 0 for all x in the cone}`, canonical.
    pub fn dual(&self) -> Result<Self, ConeError> {
        if let Some(v) = &self.vrep {
            Cone::from_hrep(self.dim, v.rays.clone(), v.lineality.clone())?.canonical()
        } else {
            let h = self.hrep.as_ref().ok_or(ConeError::Missing("H"))?;
            Cone::from_generators(self.dim, h.inequalities.clone(), h.equations.clone())
        }
    }

    /// Membership certificate (combination of the canonical rays) or a
    /// separating functional.
    pub fn contains(&self, v: &[T]) -> Result<Certificate<T>, ConeError> {
        if v.len() != self.dim {
            return Err(ConeError::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        if self.vrep.is_none() {
            let h = self.hrep.as_ref().ok_or(ConeError::Missing("H"))?;
            if let Some(a) = h.inequalities.iter().find(|a| dot(a, v).is_negative()) {
                return Ok(Certificate::NonMembership { functional: a.clone() });
            }
            for e in &h.equations {
                let s = dot(e, v);
                if !s.is_zero() {
                    let functional = if s.is_positive() { e.iter().map(|x| -x.clone()).collect() } else { e.clone() };
                    return Ok(Certificate::NonMembership { functional });
                }
            }
        }
        let c = self.with_vrep()?;
        let vr = c.vrep.as_ref().expect("vrep");
        Ok(certify_membership(&vr.rays, &vr.lineality, v))
    }

    pub fn is_member(&self, v: &[T]) -> Result<bool, ConeError> {
        Ok(self.contains(v)?.is_membership())
    }

    /// First generator of `other` (rays, then ± lineality) outside `self`.
    pub fn find_outside(&self, other: &Cone<T>) -> Result<Option<Witness<T>>, ConeError> {
        if other.dim != self.dim {
            return Err(ConeError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let o = other.with_vrep()?;
        let vr = o.vrep.as_ref().expect("vrep");
        let neg = |l: &Vec<T>| l.iter().map(|x| -x.clone()).collect::<Vec<T>>();
        let candidates = vr
            .rays
            .iter()
            .cloned()
            .chain(vr.lineality.iter().flat_map(|l| [l.clone(), neg(l)]));
        let me = self.with_vrep()?;
        for g in candidates {
            let cert = me.contains(&g)?;
            if cert.is_non_membership() {
                return Ok(Some((g, cert)));
            }
        }
        Ok(None)
    }

    pub fn includes(&self, other: &Cone<T>) -> Result<bool, ConeError> {
        Ok(self.find_outside(other)?.is_none())
    }

    /// Mutual containment of generators, with a witness on failure.
    pub fn equals(&self, other: &Cone<T>) -> Result<Comparison<T>, ConeError> {
        if let Some((generator, certificate)) = self.find_outside(other)? {
            return Ok(Comparison::Differs { generator, from_first: false, certificate });
        }
        if let Some((generator, certificate)) = other.find_outside(self)? {
            return Ok(Comparison::Differs { generator, from_first: true, certificate });
        }
        Ok(Comparison::Equal)
    }

    /// The face where the nonnegative functional `f` vanishes.
    pub fn face(&self, f: &[T]) -> Result<Self, ConeError> {
        if f.len() != self.dim {
            return Err(ConeError::DimensionMismatch { expected: self.dim, found: f.len() });
        }
        let c = self.with_vrep()?;
        let vr = c.vrep.as_ref().expect("vrep");
        if let Some(l) = vr.lineality.iter().find(|l| !dot(f, l).is_zero()) {
            return Err(ConeError::NonzeroOnLineality(fmt_vec(l)));
        }
        if let Some(r) = vr.rays.iter().find(|r| dot(f, r).is_negative()) {
            return Err(ConeError::NegativeOnRay(fmt_vec(r)));
        }
        let rays = vr.rays.iter().filter(|r| dot(f, r).is_zero()).cloned().collect();
        Cone::from_generators(self.dim, rays, vr.lineality.clone())
    }

    /// Ray count equals the dimension of the span (and no lineality).
    pub fn is_simplicial(&self) -> Result<bool, ConeError> {
        let v = self.vrep.as_ref().ok_or(ConeError::Missing("V"))?;
        let rank = Matrix::from_rows(v.rays.clone(), self.dim)?.rank();
        Ok(v.lineality.is_empty() && rank == v.rays.len())
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> Result<usize, ConeError> {
        let c = self.with_vrep()?;
        let v = c.vrep.as_ref().expect("vrep");
        let mut all = v.rays.clone();
        all.extend(v.lineality.iter().cloned());
        Ok(Matrix::from_rows(all, self.dim)?.rank())
    }
}

/// Certificate for `target` against arbitrary (possibly redundant)
/// generators and free directions.
pub fn certify_membership<T: Scalar>(rays: &[Vec<T>], lineality: &[Vec<T>], target: &[T]) -> Certificate<T> {
    let cert = match lp::combination(rays, lineality, target) {
        lp::Feasibility::Feasible { lambda, mu } => Certificate::Membership {
            combination: lambda.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect(),
            lineality: mu.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect(),
        },
        lp::Feasibility::Infeasible { functional } => {
            let functional = primitive(&functional).expect("Farkas functional is nonzero");
            Certificate::NonMembership { functional }
        }
    };
    assert!(cert.verify(rays, lineality, target), "internal error: certificate failed to verify");
    cert
}

/// Drops redundant inequalities. Later rows are tested first, so among
/// duplicates the earliest copy survives.
pub fn minimal_hrep<T: Scalar>(
    dim: usize,
    inequalities: &[Vec<T>],
    equations: &[Vec<T>],
) -> Result<MinimalHrep<T>, ConeError> {
    check_dims(dim, inequalities)?;
    check_dims(dim, equations)?;
    let mut alive = vec![true; inequalities.len()];
    for i in (0..inequalities.len()).rev() {
        let others: Vec<usize> = (0..inequalities.len()).filter(|&j| j != i && alive[j]).collect();
        let gens: Vec<Vec<T>> = others.iter().map(|&j| inequalities[j].clone()).collect();
        if lp_member(&gens, equations, &inequalities[i]) {
            alive[i] = false;
        }
    }
    let kept: Vec<usize> = (0..inequalities.len()).filter(|&j| alive[j]).collect();
    let gens: Vec<Vec<T>> = kept.iter().map(|&j| inequalities[j].clone()).collect();
    let mut removed = Vec::new();
    for i in (0..inequalities.len()).filter(|&j| !alive[j]) {
        let Certificate::Membership { combination, lineality } = certify_membership(&gens, equations, &inequalities[i])
        else {
            unreachable!("removed inequality is implied by the kept ones");
        };
        let cert = Certificate::Redundancy {
            target: i,
            combination: combination.into_iter().map(|(k, c)| (kept[k], c)).collect(),
            equations: lineality,
        };
        debug_assert!(cert.verify_redundancy(inequalities, equations));
        removed.push(cert);
    }
    Ok(MinimalHrep { kept, removed })
}

fn lp_member<T: Scalar>(gens: &[Vec<T>], free: &[Vec<T>], target: &[T]) -> bool {
    matches!(lp::combination(gens, free, target), lp::Feasibility::Feasible { .. })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qv, RatCone, Rational};

    fn cone_h(dim: usize, rows: &[&[i64]]) -> RatCone {
        RatCone::from_hrep(dim, rows.iter().map(|r| qv(r)).collect(), vec![]).unwrap()
    }

    #[test]
    fn orthant_roundtrip() {
        let c = cone_h(2, &[&[1, 0], &[0, 1]]).hrep_to_vrep().unwrap();
        assert_eq!(c.rays().unwrap(), &[qv(&[0, 1]), qv(&[1, 0])]);
        let back = RatCone::from_generators(2, vec![qv(&[1, 0]), qv(&[0, 1])], vec![]).unwrap();
        assert_eq!(back.inequalities().unwrap(), &[qv(&[0, 1]), qv(&[1, 0])]);
    }

    #[test]
    fn nem_x60_example() {
        // (1/2) a2 <= a3 <= 3 a2
        let c = RatCone::from_hrep(2, vec![vec![q(-1, 2), q(1, 1)], qv(&[3, -1])], vec![])
            .unwrap()
            .hrep_to_vrep()
            .unwrap();
        assert_eq!(c.rays().unwrap(), &[qv(&[1, 3]), qv(&[2, 1])]);
    }

    #[test]
    fn membership_and_separation() {
        let c = RatCone::from_generators(3, vec![qv(&[1, 1, 0]), qv(&[1, 6, 0]), qv(&[1, 6, 20])], vec![]).unwrap();
        let cert = c.contains(&qv(&[1, 6, 5])).unwrap();
        assert!(cert.verify(c.rays().unwrap(), &[], &qv(&[1, 6, 5])));
        let out = c.contains(&qv(&[0, 0, 1])).unwrap();
        assert!(out.is_non_membership());
        assert!(out.verify(c.rays().unwrap(), &[], &qv(&[0, 0, 1])));
        for r in c.rays().unwrap() {
            let cert = c.contains(r).unwrap();
            let Certificate::Membership { combination, .. } = cert else { panic!() };
            assert_eq!(combination.len(), 1);
            assert_eq!(combination[0].1, q(1, 1));
        }
        assert!(c.contains(&qv(&[1, 1])).is_err());
    }

    #[test]
    fn equality_with_witness() {
        let a = RatCone::from_generators(2, vec![qv(&[5, 3]), qv(&[1, 3])], vec![]).unwrap();
        let b = RatCone::from_generators(2, vec![qv(&[1, 3]), qv(&[1, 1])], vec![]).unwrap();
        assert!(a.equals(&a).unwrap().is_equal());
        match a.equals(&b).unwrap() {
            Comparison::Differs { generator, from_first, .. } => {
                assert_eq!(generator, qv(&[5, 3]));
                assert!(from_first);
            }
            Comparison::Equal => panic!(),
        }
    }

    #[test]
    fn faces() {
        let o = RatCone::orthant(3);
        assert_eq!(o.face(&qv(&[0, 0, 0])).unwrap().rays().unwrap(), o.rays().unwrap());
        let f = o.face(&qv(&[0, 0, 1])).unwrap();
        assert_eq!(f.rays().unwrap(), &[qv(&[0, 1, 0]), qv(&[1, 0, 0])]);
        assert!(matches!(o.face(&qv(&[1, -1, 0])), Err(ConeError::NegativeOnRay(_))));
    }

    #[test]
    fn simplicial() {
        assert!(RatCone::orthant(3).is_simplicial().unwrap());
        let square =
            RatCone::from_generators(3, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1]), qv(&[1, 1, -1])], vec![])
                .unwrap();
        assert!(!square.is_simplicial().unwrap());
    }

    #[test]
    fn minimal_hrep_duplicates() {
        let rows = vec![qv(&[1, 0]), qv(&[0, 1]), qv(&[1, 0]), qv(&[1, 1])];
        let m = minimal_hrep::<Rational>(2, &rows, &[]).unwrap();
        assert_eq!(m.kept, vec![0, 1]);
        assert_eq!(m.removed.len(), 2);
        for c in &m.removed {
            assert!(c.verify_redundancy(&rows, &[]));
        }
        assert!(m.removed.contains(&Certificate::Redundancy {
            target: 2,
            combination: vec![(0, q(1, 1))],
            equations: vec![]
        }));
    }

    #[test]
    fn lineality_cones() {
        // x >= 0 in R^3: one ray, two lineality directions
        let c = cone_h(3, &[&[1, 0, 0]]).canonical().unwrap();
        assert_eq!(c.rays().unwrap(), &[qv(&[1, 0, 0])]);
        assert_eq!(c.lineality().unwrap().len(), 2);
        assert!(c.is_member(&qv(&[3, -7, 2])).unwrap());
        assert!(!c.is_member(&qv(&[-1, 0, 0])).unwrap());
        let d = c.dual().unwrap();
        assert_eq!(d.rays().unwrap(), &[qv(&[1, 0, 0])]);
        assert!(d.lineality().unwrap().is_empty());
        assert!(d.dual().unwrap().equals(&c).unwrap().is_equal());
    }

    #[test]
    fn machine_ratio_instantiation() {
        use num_rational::Ratio;
        let one = Ratio::<i64>::from_integer(1);
        let zero = Ratio::<i64>::from_integer(0);
        let c = Cone::from_hrep(2, vec![vec![one, zero], vec![zero, one]], vec![]).unwrap().hrep_to_vrep().unwrap();
        assert_eq!(c.rays().unwrap().len(), 2);
    }
}
