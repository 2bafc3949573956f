use num_traits::Zero;

use super::{range, CurveError};
use crate::cone::cert::Certificate;
use crate::moduli::{relations_and_basis, BoundaryLabel, CurveClass, Dual, SpaceId};
use crate::{q, RatCertificate, RatCone, RatMatrix, RatVector, Rational};

/// Every boundary class of `s`, in canonical label order.
pub fn boundary_rays(s: SpaceId) -> Result<Vec<RatVector>, CurveError> {
    let spec = relations_and_basis(s)?;
    Ok(spec.labels().iter().map(|l| spec.label_coords(l).cloned()).collect::<Result<_, _>>()?)
}

/// The cone spanned by the boundary classes (any `m`).
pub fn boundary_cone(s: SpaceId) -> Result<RatCone, CurveError> {
    let spec = relations_and_basis(s)?;
    Ok(RatCone::from_generators(spec.picard_number(), boundary_rays(s)?, vec![])?)
}

/// `Eff(X_{n,m})` for `m ≤ 2`, where it is spanned by the boundary. For
/// `m ≥ 3` the boundary cone is a proper subcone, so the request is refused.
pub fn eff_cone(s: SpaceId) -> Result<RatCone, CurveError> {
    if s.m() >= 3 {
        return Err(CurveError::Refused(format!(
            "Eff({s}) is not spanned by boundary divisors for m ≥ 3 (the boundary cone is a proper subcone); \
             use the boundary cone explicitly"
        )));
    }
    boundary_cone(s)
}

/// The four inequality families on `X_{n,2}` and the combinations showing
/// `b̌*_j ≥ 0`.
#[derive(Clone, Debug)]
pub struct Xn2Derivation {
    pub n: usize,
    /// Indexed by `j − 2` for `2 ≤ j ≤ n − 2`.
    pub ineq1: Vec<RatVector>,
    pub ineq2: Vec<RatVector>,
    pub ineq3: Vec<RatVector>,
    pub ineq4: RatVector,
    /// Per `j`: rows `[ineq1_j, ineq3_j, ineq4, b̌*_j]` and a redundancy
    /// certificate for the last row.
    pub combinations: Vec<(Vec<RatVector>, RatCertificate)>,
}

impl Xn2Derivation {
    pub fn verify(&self) -> bool {
        self.combinations.iter().all(|(rows, c)| c.verify_redundancy(rows, &[]))
    }
}

pub fn eff_xn2_derivation(n: usize) -> Result<Xn2Derivation, CurveError> {
    if n < 5 {
        return Err(range(format!("the X_{{n,2}} derivation needs n ≥ 5 (got {n})")));
    }
    let spec = relations_and_basis(SpaceId::new(n, 2)?)?;
    let d = |t: &[(Dual, i64)]| -> Result<RatVector, CurveError> {
        let t: Vec<(Dual, Rational)> = t.iter().map(|(s, c)| (*s, q(*c, 1))).collect();
        Ok(CurveClass::from_duals(&spec, &t)?.coords)
    };
    let ni = n as i64;
    let (mut ineq1, mut ineq2, mut ineq3) = (Vec::new(), Vec::new(), Vec::new());
    let ineq4 = d(&[(Dual::BStar(2), 1), (Dual::BStar(n - 2), 1), (Dual::B(3), -1)])?;
    let mut combinations = Vec::new();
    for j in 2..=n - 2 {
        let ji = j as i64;
        let i1 = d(&[
            (Dual::BStar(j), (ni - 4) * (ni - 3)),
            (Dual::B(3), (ji - 1) * (ni - ji - 2)),
            (Dual::BStar(n - 2), -(ni - 4) * (ji - 1)),
        ])?;
        let i2 = d(&[
            (Dual::BStar(n - j), (ni - 4) * (ni - 3)),
            (Dual::B(3), (ji - 1) * (ni - ji - 2)),
            (Dual::BStar(2), -(ni - 4) * (ji - 1)),
        ])?;
        let i3 = d(&[
            (Dual::BStar(j), (ni - 4) * (ni - 3)),
            (Dual::B(3), (ni - ji - 1) * (ji - 2)),
            (Dual::BStar(2), -(ni - 4) * (ni - ji - 1)),
        ])?;
        let target = d(&[(Dual::BStar(j), 1)])?;
        let k = q((ni - 4) * (ni - 3) * (ni - 2), 1);
        let cert = Certificate::Redundancy {
            target: 3,
            combination: vec![
                (0, q(ni - ji - 1, 1) / &k),
                (1, q(ji - 1, 1) / &k),
                (2, q((ni - ji - 1) * (ji - 1) * (ni - 4), 1) / &k),
            ],
            equations: vec![],
        };
        combinations.push((vec![i1.clone(), i3.clone(), ineq4.clone(), target], cert));
        ineq1.push(i1);
        ineq2.push(i2);
        ineq3.push(i3);
    }
    Ok(Xn2Derivation { n, ineq1, ineq2, ineq3, ineq4, combinations })
}

// Surfaces: X_{5,m}. On M̄_{0,5} the boundary curves D_ij (indexed by the
// 2-element side) satisfy D² = −1, D_ij·D_kl = 1 if disjoint, 0 otherwise.

fn pairs5() -> Vec<[usize; 2]> {
    let mut v = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            v.push([a, b]);
        }
    }
    v
}

fn meet5(a: &[usize; 2], b: &[usize; 2]) -> i64 {
    let common = a.iter().filter(|p| b.contains(p)).count();
    match common {
        2 => -1,
        1 => 0,
        _ => 1,
    }
}

fn surface_check(s: SpaceId) -> Result<(), CurveError> {
    if s.n() != 5 {
        return Err(range(format!("surface intersection forms need n = 5 (got {s})")));
    }
    Ok(())
}

/// Upstairs orbit of each basis label: `π*β_L = Σ_{S ∈ orbit} D_S`.
fn orbits(s: SpaceId) -> Result<Vec<Vec<[usize; 2]>>, CurveError> {
    let spec = relations_and_basis(s)?;
    let mut out = vec![Vec::new(); spec.picard_number()];
    for p in pairs5() {
        let l = BoundaryLabel::of_subset(s, &p)?;
        if let Some(k) = spec.basis().iter().position(|b| *b == l) {
            out[k].push(p);
        }
    }
    Ok(out)
}

/// Intersection form on `N¹(X_{5,m})`: `(π*A·π*B)/deg π`.
pub fn surface_gram(s: SpaceId) -> Result<RatMatrix, CurveError> {
    surface_check(s)?;
    let orb = orbits(s)?;
    let deg: i64 = (1..=s.free_points() as i64).product();
    let rows = orb
        .iter()
        .map(|a| {
            orb.iter()
                .map(|b| q(a.iter().flat_map(|x| b.iter().map(move |y| meet5(x, y))).sum::<i64>(), deg))
                .collect()
        })
        .collect();
    Ok(RatMatrix::new(rows))
}

/// `D` is nef iff `π*D` meets every boundary curve of `M̄_{0,5}`
/// nonnegatively (those curves span its effective cone).
pub fn surface_nef_from_cover(s: SpaceId) -> Result<RatCone, CurveError> {
    surface_check(s)?;
    let orb = orbits(s)?;
    let rows: Vec<RatVector> = pairs5()
        .iter()
        .map(|t| orb.iter().map(|o| q(o.iter().map(|x| meet5(x, t)).sum(), 1)).collect())
        .collect();
    Ok(RatCone::from_hrep(orb.len(), rows, vec![])?.canonical()?)
}

/// The dual of `Eff(X_{5,m})` under the intersection form.
pub fn surface_nef_via_gram(s: SpaceId) -> Result<RatCone, CurveError> {
    let g = surface_gram(s)?;
    let eff = eff_cone(s)?.canonical()?;
    let rows: Vec<RatVector> = eff.rays()?.iter().map(|r| g.mul_vec(r).expect("dims")).collect();
    if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
        return Err(range("degenerate intersection form"));
    }
    Ok(RatCone::from_hrep(g.nrows(), rows, vec![])?.canonical()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{attach_pushforward, AttachKind, AttachMapSpec};
    use crate::linalg::{primitive, scale};
    use crate::qv;

    fn sp(n: usize, m: usize) -> SpaceId {
        SpaceId::new(n, m).unwrap()
    }

    #[test]
    fn simplicial_for_m_le_1() {
        for n in 5..=12 {
            let c = eff_cone(sp(n, 1)).unwrap().canonical().unwrap();
            assert!(c.is_simplicial().unwrap());
            assert_eq!(c.rays().unwrap().len(), n - 3);
        }
        let c = eff_cone(sp(4, 1)).unwrap().canonical().unwrap();
        assert_eq!(c.rays().unwrap().len(), 1);
        let c = eff_cone(sp(6, 0)).unwrap().canonical().unwrap();
        assert_eq!(c.rays().unwrap(), &[qv(&[0, 1]), qv(&[1, 0])]);
    }

    #[test]
    fn x52() {
        let c = eff_cone(sp(5, 2)).unwrap().canonical().unwrap();
        assert_eq!(c.rays().unwrap().len(), 4);
        assert!(!c.is_simplicial().unwrap());
        assert!(eff_cone(sp(6, 3)).is_err());
    }

    #[test]
    fn xn2_combination() {
        for n in 5..=10 {
            let d = eff_xn2_derivation(n).unwrap();
            assert!(d.verify(), "n = {n}");
            assert_eq!(d.ineq1.len(), n - 3);
            // ineq1 is (n−4)(n−3)·r_*b̌*_j for l = n − 2.
            let r = attach_pushforward(&AttachMapSpec { kind: AttachKind::R, l: n - 2, n, m: 2 }).unwrap();
            for j in 2..=n - 3 {
                let img = r.image(j - 2);
                let k = q(((n - 4) * (n - 3)) as i64, 1);
                assert_eq!(scale(&img, &k), d.ineq1[j - 2]);
            }
            // j = n−2 still holds (it degenerates to 0 ≥ 0).
            assert!(d.ineq1[n - 4].iter().all(Zero::is_zero));
        }
        let d = eff_xn2_derivation(6).unwrap();
        // basis (b3, b4, b*2, b*3, b*4)
        assert_eq!(d.ineq4, qv(&[-1, 0, 1, 0, 1]));
        assert_eq!(primitive(&d.combinations[1].0[3]).unwrap(), qv(&[0, 0, 0, 1, 0]));
    }

    #[test]
    fn surface_nef_agrees() {
        for m in [0, 1, 2] {
            let a = surface_nef_from_cover(sp(5, m)).unwrap();
            let b = surface_nef_via_gram(sp(5, m)).unwrap();
            assert!(a.equals(&b).unwrap().is_equal(), "m = {m}");
        }
        // X_{5,2} Gram matrix is symmetric and nondegenerate.
        let g = surface_gram(sp(5, 2)).unwrap();
        assert_eq!(g, g.transpose());
        assert_eq!(g.rank(), 3);
    }
}
