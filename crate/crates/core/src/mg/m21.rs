use super::{pointed_pushforward, MgError, Target};
use crate::cone::cert::Certificate;
use crate::cone::certify_membership;
use crate::curves::nem_hrep;
use crate::fixtures::Fixtures;
use crate::linalg::{dot, primitive};
use crate::moduli::{LinearMap, SpaceId};
use crate::{q, qv, RatCertificate, RatCone, RatVector, Rational};

/// Divisor pushforward `X_{7,1} → M̄_{2,1}` into `(Δ_irr, Δ_1, W)`:
/// `b_2 ↦ W`, `b_3 ↦ 0`, `b_4 ↦ Δ_1`, `b_5 ↦ ½Δ_irr`.
pub fn m21_pushforward_map() -> LinearMap {
    let images = [qv(&[0, 0, 1]), qv(&[0, 0, 0]), qv(&[0, 1, 0]), vec![q(1, 2), q(0, 1), q(0, 1)]];
    LinearMap::from_images("N1(X_{7,1})", "N1(M_{2,1})", &images, 3)
}

pub fn m21_pushforward(v: &[Rational]) -> Result<RatVector, MgError> {
    m21_pushforward_map()
        .apply(v)
        .map_err(|_| MgError::Range(format!("a class on X_{{7,1}} has 4 coordinates (got {})", v.len())))
}

/// `(λ, δ_irr, δ_1, ω) ↦ (Δ_irr, Δ_1, W)` with `δ_irr = Δ_irr`,
/// `δ_1 = ½Δ_1`, `λ = (Δ_irr + Δ_1)/10`, `ω = Δ_irr/30 + Δ_1/5 + W/6`.
pub fn m21_from_lambda_basis(v: &[Rational]) -> Result<RatVector, MgError> {
    let [l, irr, d1, w] = v else {
        return Err(MgError::Range(format!("expected (λ, δ_irr, δ_1, ω), got {} entries", v.len())));
    };
    Ok(vec![
        l * q(1, 10) + irr + w * q(1, 30),
        l * q(1, 10) + d1 * q(1, 2) + w * q(1, 5),
        w * q(1, 6),
    ])
}

/// The four cones on `M̄_{2,1}` in `(Δ_irr, Δ_1, W)`.
#[derive(Clone, Debug)]
pub struct M21Cones {
    pub eff: RatCone,
    /// Hull of the pushed printed `Nem(X_{7,1})` generators.
    pub push_nem: RatCone,
    /// Each pushed generator with its membership certificate.
    pub push_nem_images: Vec<(RatVector, RatCertificate)>,
    pub push_nef: RatCone,
    pub nef: RatCone,
    /// `C = ¾B + ¼D`, certified in `push_nef`.
    pub c_in_push_nef: RatCertificate,
}

pub fn m21_cones(f: &Fixtures) -> Result<M21Cones, MgError> {
    let push_all = |rays: Vec<RatVector>| -> Result<(RatCone, Vec<RatVector>), MgError> {
        let imgs: Vec<RatVector> = rays.iter().map(|r| m21_pushforward(r)).collect::<Result<_, _>>()?;
        Ok((RatCone::from_generators(3, imgs.clone(), vec![])?, imgs))
    };
    let (push_nem, imgs) = push_all(f.claim("nem_X7_1")?.ray_vectors())?;
    let push_nem_images = imgs
        .into_iter()
        .map(|v| {
            let c = certify_membership(push_nem.rays().expect("vrep"), &[], &v);
            (v, c)
        })
        .collect();
    let (push_nef, _) = push_all(f.nef("X7_1")?.ray_vectors())?;
    let nef = f.nef("M2_1")?.cone("M2_1")?;
    let c_in_push_nef = certify_membership(push_nef.rays()?, &[], &qv(&[1, 6, 5]));
    Ok(M21Cones { eff: RatCone::orthant(3), push_nem, push_nem_images, push_nef, nef, c_in_push_nef })
}

/// Divisors on `M̄_{2,1}` pulling back into `Nem(X_{7,1})`: the pushed
/// inequalities (`λ̌` dropped), as a cone in `(Δ_irr, Δ_1, W)`.
pub fn corollary_cone_m21() -> Result<RatCone, MgError> {
    let p = pointed_pushforward(2, 2, Target::Mg1)?;
    let nem = nem_hrep(SpaceId::new(7, 1)?)?;
    let rows: Vec<RatVector> = nem.inequalities()?.iter().map(|r| p.apply(r).expect("dims")).collect();
    // rays in (δ_irr, δ_1, ω)
    let cone = RatCone::from_hrep(3, rows, vec![])?.hrep_to_vrep()?;
    let rays: Vec<RatVector> = cone
        .rays()?
        .iter()
        .map(|r| {
            let full = [q(0, 1), r[0].clone(), r[1].clone(), r[2].clone()];
            m21_from_lambda_basis(&full).map(|v| primitive(&v).expect("nonzero"))
        })
        .collect::<Result<_, _>>()?;
    Ok(RatCone::from_generators(3, rays, vec![])?)
}

/// Canonical class, contracted curves and the face `C_2^⊥` of the nef
/// fixture of `X_{7,1}`.
#[derive(Clone, Debug)]
pub struct MoriData {
    pub k: RatVector,
    pub c1: RatVector,
    pub c2: RatVector,
    pub k_dot_c2: Rational,
    pub c1_dot_b3: Rational,
    pub face: RatCone,
    /// `(5,12,6,2)` (= 30·p*ω) lies on the face.
    pub omega_on_face: Certificate<Rational>,
}

pub fn x71_mori_data(f: &Fixtures) -> Result<MoriData, MgError> {
    let k = vec![q(-1, 3), q(0, 1), q(0, 1), q(-4, 3)];
    let c1 = qv(&[2, -1, 0, 1]);
    let c2 = qv(&[0, -2, 4, 0]);
    let nef = f.nef("X7_1")?.cone("X7_1")?;
    let face = nef.face(&c2)?;
    let omega_on_face = certify_membership(face.rays()?, &[], &qv(&[5, 12, 6, 2]));
    Ok(MoriData {
        k_dot_c2: dot(&k, &c2),
        c1_dot_b3: c1[1].clone(),
        k,
        c1,
        c2,
        face,
        omega_on_face,
    })
}
