use num_traits::{Signed, Zero};

use super::eff::eff_cone;
use super::{range, CurveError};
use crate::cone::cert::Certificate;
use crate::linalg::primitive;
use crate::moduli::{pullback_map, relations_and_basis, BasisSpec, CurveClass, Dual, SpaceId};
use crate::{q, RatCertificate, RatCone, RatVector, Rational};

fn duals(spec: &BasisSpec, t: &[(usize, i64)]) -> Result<RatVector, CurveError> {
    let t: Vec<(Dual, Rational)> = t.iter().map(|&(j, c)| (Dual::B(j), q(c, 1))).collect();
    Ok(CurveClass::from_duals(spec, &t)?.coords)
}

/// `J_l: l·b̌_{n−l+1} − (l−2)·b̌_{n−l} ≥ 0` (from attaching `X_{l+1,1}`).
pub fn j_ineq(spec: &BasisSpec, l: usize) -> Result<RatVector, CurveError> {
    let n = spec.space().n();
    if l < 3 || l + 2 > n {
        return Err(range(format!("J_l needs 3 ≤ l ≤ n−2 (got l = {l}, n = {n})")));
    }
    let li = l as i64;
    duals(spec, &[(n - l + 1, li), (n - l, -(li - 2))])
}

/// `(j−1)(l−j)·b̌_{n−l+1} + (l−1)(l−2)·b̌_j − (j−1)(l−2)·b̌_l ≥ 0`.
pub fn i_reduced(spec: &BasisSpec, j: usize, l: usize) -> Result<RatVector, CurveError> {
    let n = spec.space().n();
    if l < 3 || l + 2 > n || j < 2 || j >= l {
        return Err(range(format!("I_{{2,j,l}} needs 2 ≤ j < l ≤ n−2 (got j = {j}, l = {l})")));
    }
    let (ji, li) = (j as i64, l as i64);
    duals(spec, &[(n - l + 1, (ji - 1) * (li - j as i64)), (j, (li - 1) * (li - 2)), (l, -(ji - 1) * (li - 2))])
}

/// `I_{i,j,l}: (l−1)(j−1)(l−j)·b̌_{n−l+i−1} + (l−1)(l−i)(l−i+1)·b̌_j
/// − (j−1)(l−i)(l−i+1)·b̌_l ≥ 0`, pushed from `X_{l+1,2}` along `s`.
pub fn i_first_try(spec: &BasisSpec, i: usize, j: usize, l: usize) -> Result<RatVector, CurveError> {
    let n = spec.space().n();
    if l < 3 || l + 2 > n || j < 2 || j >= l || i < 2 || i >= l {
        return Err(range(format!("I_{{i,j,l}} needs 2 ≤ i, j < l ≤ n−2 (got {i}, {j}, {l})")));
    }
    let (ii, ji, li) = (i as i64, j as i64, l as i64);
    duals(
        spec,
        &[
            (n - l + i - 1, (li - 1) * (ji - 1) * (li - ji)),
            (j, (li - 1) * (li - ii) * (li - ii + 1)),
            (l, -(ji - 1) * (li - ii) * (li - ii + 1)),
        ],
    )
}

fn prim(v: RatVector) -> RatVector {
    if v.iter().all(Zero::is_zero) {
        v
    } else {
        primitive(&v).expect("nonzero")
    }
}

/// The inequality description of `Nem(X_{n,m})`, `m ∈ {0, 1}`, rows in
/// primitive integer form.
///
/// * `m = 0` (`n ≥ 6`): for `2 ≤ i ≤ ⌊n/2⌋−1`, `(n−i)a_{i+1} ≥ (n−i−2)a_i`
///   and `(i+1)a_i ≥ (i−1)a_{i+1}`.
/// * `m = 1` (`n ≥ 5`): `J_l` for `3 ≤ l ≤ n−2`, then `I_{2,j,l}`.
pub fn nem_hrep(s: SpaceId) -> Result<RatCone, CurveError> {
    let n = s.n();
    let rows = match s.m() {
        0 if n >= 6 => {
            let h = n / 2;
            let mut rows = Vec::new();
            for i in 2..h {
                let mut a = vec![Rational::zero(); h - 1];
                a[i - 1] = q((n - i) as i64, 1);
                a[i - 2] = q(-((n - i - 2) as i64), 1);
                let mut b = vec![Rational::zero(); h - 1];
                b[i - 2] = q((i + 1) as i64, 1);
                b[i - 1] = q(-((i - 1) as i64), 1);
                rows.push(prim(a));
                rows.push(prim(b));
            }
            rows
        }
        1 if n >= 5 => {
            let spec = relations_and_basis(s)?;
            let mut rows = Vec::new();
            for l in 3..=n - 2 {
                rows.push(prim(j_ineq(&spec, l)?));
            }
            for l in 3..=n - 2 {
                for j in 2..l {
                    rows.push(prim(i_reduced(&spec, j, l)?));
                }
            }
            rows
        }
        0 | 1 => return Err(range(format!("nem inequalities need n ≥ 6 for m = 0 and n ≥ 5 for m = 1 (got {s})"))),
        _ => return Err(nem_refusal(s)),
    };
    let dim = relations_and_basis(s)?.picard_number();
    Ok(RatCone::from_hrep(dim, rows, vec![])?)
}

fn nem_refusal(s: SpaceId) -> CurveError {
    if s.m() >= 3 {
        CurveError::Refused(format!(
            "Nem({s}) is not available: for m ≥ 3 the effective cone is not spanned by boundary divisors \
             (the boundary cone is a proper subcone)"
        ))
    } else {
        CurveError::Refused(format!("Nem({s}) is only computed for m ≤ 1"))
    }
}

/// `Nem(X_{n,m})` for `m ≤ 1`, including the Picard-number-one spaces
/// (`X_{4,·}`, `X_{5,0}`) where it is the effective ray.
pub fn nem_cone(s: SpaceId) -> Result<RatCone, CurveError> {
    match (s.m(), s.n()) {
        (0, 4 | 5) | (1, 4) => Ok(eff_cone(s)?.canonical()?),
        (0 | 1, _) => Ok(nem_hrep(s)?.canonical()?),
        _ => Err(nem_refusal(s)),
    }
}

/// Named inequality rows with redundancy certificates among them.
#[derive(Clone, Debug)]
pub struct InequalitySystem {
    pub rows: Vec<RatVector>,
    pub names: Vec<String>,
    pub certificates: Vec<RatCertificate>,
}

impl InequalitySystem {
    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn verify(&self) -> bool {
        self.certificates.iter().all(|c| c.verify_redundancy(&self.rows, &[]))
    }

    /// Both systems cut out the same cone: every row of `other` is a
    /// positive multiple of one of ours, and each of our rows is either such
    /// a multiple or follows, through verified certificates, from rows that
    /// are.
    pub fn same_cone_as(&self, other: &[RatVector]) -> bool {
        let key = |r: &RatVector| primitive(r).ok();
        let theirs: std::collections::BTreeSet<_> = other.iter().filter_map(key).collect();
        let ours: std::collections::BTreeSet<_> = self.rows.iter().filter_map(key).collect();
        if !theirs.is_subset(&ours) {
            return false;
        }
        let mut implied: Vec<bool> = self.rows.iter().map(|r| key(r).is_some_and(|k| theirs.contains(&k))).collect();
        loop {
            let mut changed = false;
            for c in &self.certificates {
                let Certificate::Redundancy { target, combination, .. } = c else { continue };
                if !implied[*target] && combination.iter().all(|(i, _)| implied[*i]) && c.verify_redundancy(&self.rows, &[]) {
                    implied[*target] = true;
                    changed = true;
                }
            }
            if !changed {
                return implied.iter().all(|&b| b);
            }
        }
    }

    fn push(&mut self, name: String, row: RatVector) -> usize {
        self.rows.push(row);
        self.names.push(name);
        self.rows.len() - 1
    }
}

/// All `J_l` and all `I_{i,j,l}` on `X_{n,1}` (unscaled), a final row
/// `b̌₂`, and certificates: `I_{i,j,l} = a·J_{l−i+2} + b·I_{i−1,j,l}` with
/// `a = (l−1)(j−1)(l−j)/(l−i+2)`, `b = (l−i)/(l−i+2)`, and `b̌₂ ≥ 0` from
/// `I_{2,2,(n+1)/2}` (n odd) or `(n/2)·I_{2,2,n/2} + (n/2−2)·I_{2,2,n/2+1}`
/// (n even).
pub fn nem_full_system(n: usize) -> Result<InequalitySystem, CurveError> {
    if n < 5 {
        return Err(range(format!("the X_{{n,1}} system needs n ≥ 5 (got {n})")));
    }
    let spec = relations_and_basis(SpaceId::new(n, 1)?)?;
    let mut sys = InequalitySystem { rows: Vec::new(), names: Vec::new(), certificates: Vec::new() };
    for l in 3..=n - 2 {
        sys.push(format!("J_{l}"), j_ineq(&spec, l)?);
    }
    for l in 3..=n - 2 {
        for i in 2..l {
            for j in 2..l {
                sys.push(format!("I_{i},{j},{l}"), i_first_try(&spec, i, j, l)?);
            }
        }
    }
    let mut e2 = vec![Rational::zero(); spec.picard_number()];
    e2[0] = q(1, 1);
    let b2 = sys.push("b2".into(), e2);
    let idx = |sys: &InequalitySystem, name: String| sys.index(&name).expect("row exists");
    for l in 3..=n - 2 {
        for i in 3..l {
            for j in 2..l {
                let (li, ii, ji) = (l as i64, i as i64, j as i64);
                let a = q((li - 1) * (ji - 1) * (li - ji), li - ii + 2);
                let b = q(li - ii, li - ii + 2);
                sys.certificates.push(Certificate::Redundancy {
                    target: idx(&sys, format!("I_{i},{j},{l}")),
                    combination: vec![(idx(&sys, format!("J_{}", l - i + 2)), a), (idx(&sys, format!("I_{},{j},{l}", i - 1)), b)],
                    equations: vec![],
                });
            }
        }
    }
    let combination = if n % 2 == 1 {
        let l = n.div_ceil(2);
        vec![(idx(&sys, format!("I_2,2,{l}")), q(1, 1))]
    } else {
        let h = n / 2;
        vec![(idx(&sys, format!("I_2,2,{h}")), q(h as i64, 1)), (idx(&sys, format!("I_2,2,{}", h + 1)), q(h as i64 - 2, 1))]
    };
    // Rescale so the combination is exactly b̌₂.
    let sum: RatVector = (0..spec.picard_number())
        .map(|k| combination.iter().fold(Rational::zero(), |acc, (r, c)| acc + c * &sys.rows[*r][k]))
        .collect();
    let k = sum[0].clone();
    if k.is_positive() && sum[1..].iter().all(Zero::is_zero) {
        sys.certificates.push(Certificate::Redundancy {
            target: b2,
            combination: combination.into_iter().map(|(r, c)| (r, c / &k)).collect(),
            equations: vec![],
        });
    } else {
        // Recorded as a certificate that fails to verify.
        sys.certificates.push(Certificate::Redundancy { target: b2, combination, equations: vec![] });
    }
    Ok(sys)
}

/// The `2^{⌊n/2⌋−2}` rays of `Nem(X_{n,0})`: start at `1`, then each entry
/// `a` (position `i`) is followed by `a(n−i−2)/(n−i)` or `a(i+1)/(i−1)`.
pub fn nem_rays_inductive(n: usize) -> Result<Vec<RatVector>, CurveError> {
    if n < 6 {
        return Err(range(format!("n ≥ 6 required (got n = {n})")));
    }
    let mut rays = vec![vec![q(1, 1)]];
    for i in 2..n / 2 {
        let (ni, ii) = (n as i64, i as i64);
        rays = rays
            .into_iter()
            .flat_map(|r| {
                let a = r.last().expect("nonempty").clone();
                let mut x = r.clone();
                x.push(&a * q(ni - ii - 2, ni - ii));
                let mut y = r;
                y.push(a * q(ii + 1, ii - 1));
                [x, y]
            })
            .collect();
    }
    let mut out: Vec<RatVector> = rays.into_iter().map(prim).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The extremal ray of `Nem(X_{n,0})` with Type-A equalities right of `i`
/// and Type-B equalities left of it.
pub fn extremal_ray_ri(n: usize, i: usize) -> Result<RatVector, CurveError> {
    let h = n / 2;
    if n < 6 || i < 2 || i > h {
        return Err(range(format!("R_i needs n ≥ 6 and 2 ≤ i ≤ ⌊n/2⌋ (got n = {n}, i = {i})")));
    }
    let ni = n as i64;
    let mut a = vec![Rational::zero(); h + 1];
    a[i] = q(1, 1);
    for k in i..h {
        let ki = k as i64;
        a[k + 1] = &a[k] * q(ni - ki - 2, ni - ki);
    }
    for k in (2..i).rev() {
        let ki = k as i64;
        a[k] = &a[k + 1] * q(ki - 1, ki + 1);
    }
    Ok(prim(a[2..].to_vec()))
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub n: usize,
    /// Rays of `Nem(X_{n,1}) ∩ {a₂ = 0}`.
    pub face_rays: Vec<RatVector>,
    /// Canonical rays of `π*Nem(X_{n−1,0})`.
    pub pulled_rays: Vec<RatVector>,
    pub face_matches: bool,
    /// Every ray off the face has all coordinates positive.
    pub off_face_positive: bool,
    /// `a_{n−l+1} = a_l` on the face, `3 ≤ l ≤ n−2`.
    pub face_symmetric: bool,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.face_matches && self.off_face_positive && self.face_symmetric
    }
}

pub fn nem_xn1_decomposition(n: usize) -> Result<Decomposition, CurveError> {
    if n < 6 {
        return Err(range(format!("n ≥ 6 required (got n = {n})")));
    }
    let s = SpaceId::new(n, 1)?;
    let nem = nem_cone(s)?;
    let dim = nem.ambient_dim();
    let mut f = vec![Rational::zero(); dim];
    f[0] = q(1, 1);
    let face = nem.face(&f)?.canonical()?;
    let below = SpaceId::new(n - 1, 0)?;
    let pb = pullback_map(&relations_and_basis(below)?, &relations_and_basis(s)?)?;
    let pulled: Vec<RatVector> =
        nem_cone(below)?.rays()?.iter().map(|r| pb.apply(r).expect("dims")).collect();
    let pulled = RatCone::from_generators(dim, pulled, vec![])?.canonical()?;
    let face_matches = face.equals(&pulled)?.is_equal();
    let off_face_positive =
        nem.rays()?.iter().filter(|r| !r[0].is_zero()).all(|r| r.iter().all(Signed::is_positive));
    // coordinate of b_j sits at j − 2
    let face_symmetric = face.rays()?.iter().all(|r| (3..=n - 2).all(|l| r[n - l + 1 - 2] == r[l - 2]));
    Ok(Decomposition {
        n,
        face_rays: face.rays()?.to_vec(),
        pulled_rays: pulled.rays()?.to_vec(),
        face_matches,
        off_face_positive,
        face_symmetric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dot, primitive};
    use crate::qv;

    fn sp(n: usize, m: usize) -> SpaceId {
        SpaceId::new(n, m).unwrap()
    }

    fn rays(c: &RatCone) -> Vec<RatVector> {
        let mut r = c.canonical().unwrap().rays().unwrap().to_vec();
        r.sort();
        r
    }

    fn sorted(mut v: Vec<RatVector>) -> Vec<RatVector> {
        v.sort();
        v
    }

    #[test]
    fn counts() {
        for n in 6..=12 {
            assert_eq!(nem_hrep(sp(n, 0)).unwrap().inequalities().unwrap().len(), 2 * (n / 2 - 2));
        }
        for n in 5..=12 {
            assert_eq!(nem_hrep(sp(n, 1)).unwrap().inequalities().unwrap().len(), (n - 1) * (n - 4) / 2);
        }
        assert!(nem_hrep(sp(5, 0)).is_err());
        assert!(matches!(nem_hrep(sp(6, 3)), Err(CurveError::Refused(_))));
    }

    #[test]
    fn small_m0() {
        assert_eq!(rays(&nem_hrep(sp(7, 0)).unwrap()), sorted(vec![qv(&[5, 3]), qv(&[1, 3])]));
        assert_eq!(rays(&nem_hrep(sp(6, 0)).unwrap()), sorted(vec![qv(&[2, 1]), qv(&[1, 3])]));
    }

    #[test]
    fn m0_is_the_folded_attaching_system() {
        // J_l read on X_{n,0} with folded indices gives the same cone.
        for n in 6..=12 {
            let spec = relations_and_basis(sp(n, 0)).unwrap();
            let rows: Vec<RatVector> = (3..=n - 2).map(|l| j_ineq(&spec, l).unwrap()).collect();
            let folded = RatCone::from_hrep(spec.picard_number(), rows, vec![]).unwrap();
            assert!(folded.equals(&nem_hrep(sp(n, 0)).unwrap()).unwrap().is_equal(), "n = {n}");
        }
    }

    #[test]
    fn inductive_rays_match_dd() {
        for n in 6..=14 {
            let ind = nem_rays_inductive(n).unwrap();
            assert_eq!(ind.len(), 1 << (n / 2 - 2));
            assert_eq!(ind, rays(&nem_hrep(sp(n, 0)).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn ri() {
        assert_eq!(extremal_ray_ri(8, 2).unwrap(), qv(&[15, 10, 6]));
        assert_eq!(extremal_ray_ri(6, 2).unwrap(), qv(&[2, 1]));
        for n in 6..=12 {
            let all = nem_rays_inductive(n).unwrap();
            for i in 2..=n / 2 {
                assert!(all.contains(&extremal_ray_ri(n, i).unwrap()), "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn x51_x61() {
        let c = nem_hrep(sp(5, 1)).unwrap();
        let want = RatCone::from_hrep(2, vec![qv(&[-1, 3]), qv(&[1, 0])], vec![]).unwrap();
        assert!(c.equals(&want).unwrap().is_equal());
        let got = rays(&nem_hrep(sp(6, 1)).unwrap());
        let want = sorted(vec![qv(&[6, 3, 1]), qv(&[1, 3, 1]), qv(&[0, 1, 1]), qv(&[1, 3, 6]), qv(&[2, 1, 2])]);
        assert_eq!(got, want);
        // The five displayed rows, up to positive scaling: (b̌2, b̌3, b̌4).
        let shown = [qv(&[0, -1, 3]), qv(&[-2, 4, 0]), qv(&[4, -2, 2]), qv(&[18, 6, -6]), qv(&[0, 24, -12])];
        let ours: Vec<RatVector> = nem_hrep(sp(6, 1)).unwrap().inequalities().unwrap().to_vec();
        for r in shown {
            assert!(ours.contains(&primitive(&r).unwrap()));
        }
    }

    #[test]
    fn full_system_small_dd() {
        // direct DD cross-check where it is cheap
        for n in 5..=8 {
            let sys = nem_full_system(n).unwrap();
            let full = RatCone::from_hrep(n - 3, sys.rows.clone(), vec![]).unwrap();
            assert!(full.equals(&nem_hrep(sp(n, 1)).unwrap()).unwrap().is_equal(), "n = {n}");
        }
    }

    #[test]
    fn full_system() {
        for n in 5..=12 {
            let sys = nem_full_system(n).unwrap();
            assert!(sys.verify(), "n = {n}");
            assert!(sys.same_cone_as(nem_hrep(sp(n, 1)).unwrap().inequalities().unwrap()), "n = {n}");
        }
    }

    #[test]
    fn decomposition() {
        for n in 6..=10 {
            let d = nem_xn1_decomposition(n).unwrap();
            assert!(d.holds(), "n = {n}: {d:?}");
        }
        let d = nem_xn1_decomposition(6).unwrap();
        assert_eq!(d.face_rays, vec![qv(&[0, 1, 1])]);
        let d = nem_xn1_decomposition(7).unwrap();
        assert_eq!(sorted(d.face_rays), sorted(vec![qv(&[0, 1, 3, 1]), qv(&[0, 2, 1, 2])]));
    }

    #[test]
    fn nem_inside_eff() {
        for n in 5..=10 {
            for m in [0, 1] {
                let s = sp(n, m);
                let nem = nem_cone(s).unwrap();
                let eff = eff_cone(s).unwrap();
                assert!(eff.includes(&nem).unwrap());
                // each generated inequality is nonnegative on its own cone's rays
                for r in nem.rays().unwrap() {
                    for a in nem_hrep(s).map(|c| c.inequalities().unwrap().to_vec()).unwrap_or_default() {
                        assert!(!dot(&a, r).is_negative());
                    }
                }
            }
        }
    }
}
