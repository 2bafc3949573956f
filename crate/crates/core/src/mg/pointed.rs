use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{dual, DualBuilder, MgDual, MgError, Sym, Target};
use crate::cone::cert::Certificate;
use crate::curves::nem_hrep;
use crate::linalg::primitive;
use crate::moduli::{LinearMap, SpaceId};
use crate::{q, RatCertificate, RatCone, RatVector, Rational};

fn check(g: usize, n: usize, target: Target) -> Result<(), MgError> {
    let top = match target {
        Target::Mg => g.saturating_sub(1),
        Target::Mg1 => g,
    };
    if g < 2 || n < 1 || n > top || 2 * n + 3 > crate::moduli::MAX_N {
        return Err(MgError::Range(format!("pointed map needs g ≥ 2 and 1 ≤ n ≤ {top} (got g = {g}, n = {n})")));
    }
    Ok(())
}

/// `p_*` on dual coordinates, `X_{2n+3,1} → M̄_g` or `M̄_{g,1}`:
/// `b̌_{2j+2} ↦ ½δ̌_{g−n+j} + j(n−j)/(2(2n+1))·λ̌ − (n−j)(2n+1−2j)/((2n+1)(n+1))·δ̌_{g−n}`,
/// `b̌_{2j+1} ↦ 2δ̌_irr + j(n+1−j)/(2(2n+1))·λ̌ − (2n+1−2j)(n+1−j)/((2n+1)(n+1))·δ̌_{g−n}`.
pub fn pointed_pushforward(g: usize, n: usize, target: Target) -> Result<LinearMap, MgError> {
    check(g, n, target)?;
    let ni = n as i64;
    let mut images: Vec<RatVector> = Vec::new();
    for k in 2..=2 * n + 1 {
        let d = if k % 2 == 0 {
            let j = (k - 2) / 2;
            let ji = j as i64;
            dual(
                target,
                g,
                &[
                    (Sym::Delta(g - n + j), q(1, 2)),
                    (Sym::Lambda, q(ji * (ni - ji), 2 * (2 * ni + 1))),
                    (Sym::Delta(g - n), -q((ni - ji) * (2 * ni + 1 - 2 * ji), (2 * ni + 1) * (ni + 1))),
                ],
            )?
        } else {
            let ji = ((k - 1) / 2) as i64;
            dual(
                target,
                g,
                &[
                    (Sym::Irr, q(2, 1)),
                    (Sym::Lambda, q(ji * (ni + 1 - ji), 2 * (2 * ni + 1))),
                    (Sym::Delta(g - n), -q((2 * ni + 1 - 2 * ji) * (ni + 1 - ji), (2 * ni + 1) * (ni + 1))),
                ],
            )?
        };
        images.push(d.coords);
    }
    let dim = images[0].len();
    let tgt = match target {
        Target::Mg => format!("N1(M_{g})*"),
        Target::Mg1 => format!("N1(M_{{{g},1}})*"),
    };
    Ok(LinearMap::from_images(format!("N1(X_{{{},1}})*", 2 * n + 3), tgt, &images, dim))
}

/// The curve-level formulas for `p_*C_k`, `1 ≤ k ≤ 2n`.
pub fn pointed_curve_image(g: usize, n: usize, target: Target, k: usize) -> Result<MgDual, MgError> {
    check(g, n, target)?;
    if k < 1 || k > 2 * n {
        return Err(MgError::Range(format!("p_*C_k needs 1 ≤ k ≤ 2n (got k = {k})")));
    }
    let ni = n as i64;
    let j = k / 2;
    let ji = j as i64;
    if k == 1 {
        dual(target, g, &[(Sym::Delta(g - n), q(-(ni - 1), 1))])
    } else if k % 2 == 1 {
        dual(target, g, &[(Sym::Irr, q(-4 * (ni - ji), 1)), (Sym::Delta(g - n + j), q(ni + 1 - ji, 1))])
    } else {
        dual(
            target,
            g,
            &[
                (Sym::Irr, q(2 * (2 * ni + 3 - 2 * ji), 1)),
                (Sym::Delta(g - n + j - 1), q(-(2 * ni + 1 - 2 * ji), 2)),
                (Sym::Lambda, q(ni + 1 - ji, 2)),
            ],
        )
    }
}

/// A row of the inequality families, tagged `(family, k, m)`.
#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub family: &'static str,
    pub k: usize,
    pub m: usize,
    pub row: MgDual,
}

#[derive(Clone, Debug)]
pub struct Mg1Family {
    pub g: usize,
    pub n: usize,
    pub target: Target,
    /// Families (i), (ii), (I)–(IV) from pushing `Nem(X_{2n+3,1})` forward.
    pub proof_rows: Vec<FamilyRow>,
    /// The five summary families.
    pub summary_rows: Vec<FamilyRow>,
    /// `p_*` of the inequalities of `Nem(X_{2n+3,1})`.
    pub pushed: Vec<RatVector>,
    pub reductions: Vec<Reduction>,
}

fn prim_set(rows: impl IntoIterator<Item = RatVector>) -> BTreeSet<RatVector> {
    rows.into_iter().filter(|r| !r.iter().all(Zero::is_zero)).map(|r| primitive(&r).expect("nonzero")).collect()
}

impl Mg1Family {
    /// Proof families agree with the pushed inequalities as sets of rays.
    pub fn families_match(&self) -> bool {
        prim_set(self.proof_rows.iter().map(|r| r.row.coords.clone())) == prim_set(self.pushed.iter().cloned())
    }

    pub fn summary_cone(&self) -> Result<RatCone, MgError> {
        let rows: Vec<RatVector> = self.summary_rows.iter().map(|r| r.row.coords.clone()).collect();
        Ok(RatCone::from_hrep(rows[0].len(), rows, vec![])?)
    }

    pub fn pushed_cone(&self) -> Result<RatCone, MgError> {
        Ok(RatCone::from_hrep(self.pushed[0].len(), self.pushed.clone(), vec![])?)
    }

    pub fn reductions_verify(&self) -> bool {
        self.reductions.iter().all(Reduction::verifies)
    }
}

/// `(c₁, c₂)`: `(1, 2)` for `n = 2`; otherwise
/// `c₁ = 2n(n−1)(2(k+m)+3) − 2(4n−3)(k+1)(m+1)`,
/// `c₂ = 10(k+1)(m+1) − 4(2(k+m)+3)`.
pub fn c_coefficients(n: i64, k: i64, m: i64) -> (i64, i64) {
    if n == 2 {
        return (1, 2);
    }
    let s = 2 * (k + m) + 3;
    let p = (k + 1) * (m + 1);
    (2 * n * (n - 1) * s - 2 * (4 * n - 3) * p, 10 * p - 4 * s)
}

/// `c₁[(i)(1) + 2(ii)(1)] + c₂[(2n−3)(i)(n−1) + n(ii)(n−1)]
/// = 2(5n²−13n+6)·[4(2(k+m)+3)δ̌_irr + (k+1)(m+1)λ̌]` as a polynomial
/// identity in `(n, k, m)` (degree ≤ 2 in each, so a 5×5×5 grid decides it).
/// Only the `δ̌_irr`, `λ̌` parts survive; the `δ̌_{g−1}` / `δ̌_{g−n+1}` parts
/// cancel by construction of the weights.
pub fn reduction_identity_holds() -> bool {
    for n in 0..5i64 {
        for k in 0..5i64 {
            for m in 0..5i64 {
                let s = 2 * (k + m) + 3;
                let p = (k + 1) * (m + 1);
                let c1 = 2 * n * (n - 1) * s - 2 * (4 * n - 3) * p;
                let c2 = 10 * p - 4 * s;
                // (i)(1) + 2(ii)(1) = 20δ̌_irr + 2λ̌; (2n−3)(i)(n−1) + n(ii)(n−1) = 4(4n−3)δ̌_irr + n(n−1)λ̌
                let irr = c1 * 20 + c2 * 4 * (4 * n - 3);
                let lam = c1 * 2 + c2 * n * (n - 1);
                let mult = 2 * (5 * n * n - 13 * n + 6);
                if irr != mult * 4 * s || lam != mult * p {
                    return false;
                }
            }
        }
    }
    true
}

fn family_range(g: usize, n: usize, target: Target) -> Result<(), MgError> {
    let ok = match target {
        Target::Mg => g >= 3 && (2..g).contains(&n),
        Target::Mg1 => g >= 2 && (2..=g).contains(&n),
    };
    if ok {
        Ok(())
    } else {
        Err(MgError::Range(format!(
            "inequality families need g ≥ 3, 2 ≤ n ≤ g−1 (M̄_g) or g ≥ 2, 2 ≤ n ≤ g (M̄_{{g,1}}); got g = {g}, n = {n}"
        )))
    }
}

fn d(target: Target, g: usize, t: &[(Sym, i64)]) -> Result<MgDual, MgError> {
    let t: Vec<(Sym, Rational)> = t.iter().map(|(s, c)| (*s, q(*c, 1))).collect();
    dual(target, g, &t)
}

fn fam_i(t: Target, g: usize, k: usize) -> Result<MgDual, MgError> {
    d(t, g, &[(Sym::Delta(g - k), k as i64 + 1), (Sym::Irr, -4 * k as i64)])
}

fn fam_ii(t: Target, g: usize, k: usize) -> Result<MgDual, MgError> {
    let ki = k as i64;
    d(t, g, &[(Sym::Irr, 4 * (2 * ki + 1)), (Sym::Lambda, ki), (Sym::Delta(g - k), -(2 * ki - 1))])
}

/// Per `(k, m)` with `1 ≤ k ≤ n−1`, `0 ≤ m ≤ k−1`: rows
/// `[(i)(1), (ii)(1), (i)(n−1), (ii)(n−1), target]` and the certificate
/// deriving `4(2(k+m)+3)δ̌_irr + (k+1)(m+1)λ̌ ≥ 0` with weights
/// `c₁, 2c₁, (2n−3)c₂, n·c₂` (rescaled by the resulting multiple).
pub fn family_reductions(g: usize, n: usize, target: Target) -> Result<Vec<Reduction>, MgError> {
    family_range(g, n, target)?;
    let ni = n as i64;
    let mut out = Vec::new();
    for k in 1..n {
        for m in 0..k {
            let (c1, c2) = c_coefficients(ni, k as i64, m as i64);
            if c1 < 0 || c2 < 0 {
                return Err(MgError::Inconsistent(format!("negative weight c = ({c1}, {c2}) at k = {k}, m = {m}")));
            }
            let target_row = DualBuilder::new(target, g)?
                .terms(&[(Sym::Irr, q(4 * (2 * (k + m) as i64 + 3), 1)), (Sym::Lambda, q(((k + 1) * (m + 1)) as i64, 1))])?
                .finish_unchecked()
                .coords;
            let rows = vec![
                fam_i(target, g, 1)?.coords,
                fam_ii(target, g, 1)?.coords,
                fam_i(target, g, n - 1)?.coords,
                fam_ii(target, g, n - 1)?.coords,
                target_row,
            ];
            let weights = [q(c1, 1), q(2 * c1, 1), q((2 * ni - 3) * c2, 1), q(ni * c2, 1)];
            let sum: RatVector = (0..rows[4].len())
                .map(|t| weights.iter().zip(&rows).fold(Rational::zero(), |a, (w, r)| a + w * &r[t]))
                .collect();
            // An unrescaled certificate simply fails to verify.
            let mult = multiple_of(&sum, &rows[4]).unwrap_or_else(|| q(1, 1));
            let cert = Certificate::Redundancy {
                target: 4,
                combination: weights.iter().enumerate().filter(|(_, w)| !w.is_zero()).map(|(i, w)| (i, w / &mult)).collect(),
                equations: vec![],
            };
            out.push(Reduction { k, m, multiple: mult, rows, certificate: cert });
        }
    }
    Ok(out)
}

/// One step of the proof's reduction of family (II).
#[derive(Clone, Debug)]
pub struct Reduction {
    pub k: usize,
    pub m: usize,
    /// `2(5n²−13n+6)` for `n ≥ 3`, `3` for `n = 2`.
    pub multiple: Rational,
    pub rows: Vec<RatVector>,
    pub certificate: RatCertificate,
}

impl Reduction {
    pub fn verifies(&self) -> bool {
        self.certificate.verify_redundancy(&self.rows, &[])
    }
}

pub fn mg1_inequality_family(g: usize, n: usize, target: Target) -> Result<Mg1Family, MgError> {
    family_range(g, n, target)?;
    check(g, n, target)?;
    let t = target;
    let dd = |x: &[(Sym, i64)]| d(t, g, x);
    let f_big_i = |k: usize, m: usize| {
        let (ki, mi) = (k as i64, m as i64);
        dd(&[
            (Sym::Delta(g - k), (2 * mi + 1) * (ki - mi)),
            (Sym::Lambda, ki * mi * (ki - mi)),
            (Sym::Delta(g - n + m), ki * (2 * ki + 1)),
            (Sym::Delta(g - n + k), -ki * (2 * mi + 1)),
            (Sym::Delta(g - n), -4 * ki * (ki - mi)),
        ])
    };
    let f_ii = |k: usize, m: usize| {
        let (ki, mi) = (k as i64, m as i64);
        dd(&[(Sym::Irr, 4 * (2 * (ki + mi) + 3)), (Sym::Lambda, (ki + 1) * (mi + 1)), (Sym::Delta(g - n), -2 * (2 * ki + 1))])
    };
    let f_iii = |k: usize, m: usize| {
        let (ki, mi) = (k as i64, m as i64);
        dd(&[
            (Sym::Lambda, mi * (ki + 1) * (ki - mi)),
            (Sym::Delta(g - n + m), (ki + 1) * (2 * ki + 1)),
            (Sym::Irr, -4 * mi * (2 * mi + 1)),
            (Sym::Delta(g - n), -(2 * ki + 1) * (2 * (ki - mi) + 1)),
        ])
    };
    let f_iv = |k: usize, m: usize| {
        let (ki, mi) = (k as i64, m as i64);
        dd(&[
            (Sym::Delta(g - k), (mi + 1) * (2 * (ki - mi) - 1)),
            (Sym::Lambda, ki * (mi + 1) * (ki - mi)),
            (Sym::Irr, 4 * ki * (2 * ki + 1)),
            (Sym::Delta(g - n), -2 * ki * (2 * (ki - mi) - 1)),
            (Sym::Delta(g - n + k), -2 * ki * (mi + 1)),
        ])
    };
    let row = |family, k, m, row| FamilyRow { family, k, m, row };
    let mut proof_rows = Vec::new();
    let mut summary_rows = Vec::new();
    for k in 1..n {
        proof_rows.push(row("i", k, 0, fam_i(t, g, k)?));
        summary_rows.push(row("i", k, 0, fam_i(t, g, k)?));
        summary_rows.push(row("ii", k, 0, fam_ii(t, g, k)?));
    }
    for k in 1..=n {
        proof_rows.push(row("ii", k, 0, fam_ii(t, g, k)?));
    }
    for k in 1..n {
        for m in 0..k {
            proof_rows.push(row("I", k, m, f_big_i(k, m)?));
            summary_rows.push(row("I", k, m, f_big_i(k, m)?));
            proof_rows.push(row("II", k, m, f_ii(k, m)?));
            proof_rows.push(row("IV", k, m, f_iv(k, m)?));
            summary_rows.push(row("IV", k, m, f_iv(k, m)?));
        }
    }
    for k in 0..n {
        for m in 0..=k {
            proof_rows.push(row("III", k, m, f_iii(k, m)?));
            if k >= 1 {
                summary_rows.push(row("III", k, m, f_iii(k, m)?));
            }
        }
    }

    let map = pointed_pushforward(g, n, target)?;
    let nem = nem_hrep(SpaceId::new(2 * n + 3, 1)?)?;
    let pushed: Vec<RatVector> = nem.inequalities()?.iter().map(|r| map.apply(r).expect("dims")).collect();
    let reductions = family_reductions(g, n, target)?;
    Ok(Mg1Family { g, n, target, proof_rows, summary_rows, pushed, reductions })
}

/// `λ` with `a = λ·b`, `λ > 0`, if any.
fn multiple_of(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let lam = &a[k] / &b[k];
    (lam.is_positive() && a.iter().zip(b).all(|(x, y)| *x == &lam * y)).then_some(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::curve_ck;

    #[test]
    fn two_routes() {
        for (target, gs) in [(Target::Mg, 3..=5), (Target::Mg1, 2..=4)] {
            for g in gs {
                let top = if target == Target::Mg { g - 1 } else { g };
                for n in 1..=top {
                    let m = pointed_pushforward(g, n, target).unwrap();
                    let s = SpaceId::new(2 * n + 3, 1).unwrap();
                    for k in 1..=2 * n {
                        let c = curve_ck(s, k).unwrap();
                        assert_eq!(
                            m.apply(&c.coords).unwrap(),
                            pointed_curve_image(g, n, target, k).unwrap().coords,
                            "{target:?} g = {g}, n = {n}, k = {k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn omega_pullback_on_m21() {
        // rows: (δ̌_irr, δ̌_1, ω̌); the ω̌ column of p_* is p*ω.
        let m = pointed_pushforward(2, 2, Target::Mg1).unwrap();
        let w: Vec<Rational> = (0..4).map(|k| m.image(k)[2].clone() * q(30, 1)).collect();
        assert_eq!(w, vec![q(5, 1), q(12, 1), q(6, 1), q(2, 1)]);
    }

    #[test]
    fn families() {
        for (target, g, n) in [(Target::Mg, 3, 2), (Target::Mg, 5, 4), (Target::Mg, 6, 3), (Target::Mg1, 2, 2), (Target::Mg1, 4, 4)] {
            let f = mg1_inequality_family(g, n, target).unwrap();
            assert!(f.families_match(), "{target:?} g = {g}, n = {n}");
            assert!(f.reductions_verify());
            assert!(f.summary_cone().unwrap().equals(&f.pushed_cone().unwrap()).unwrap().is_equal());
        }
        assert!(mg1_inequality_family(3, 3, Target::Mg).is_err());
    }

    #[test]
    fn c_weights() {
        assert_eq!(c_coefficients(2, 1, 0), (1, 2));
        for n in 3..=20i64 {
            assert!(5 * n * n - 13 * n + 6 > 0);
            for k in 1..n {
                for m in 0..k {
                    let (c1, c2) = c_coefficients(n, k, m);
                    assert!(c1 >= 0 && c2 >= 0, "n = {n}, k = {k}, m = {m}");
                }
            }
        }
        assert!(reduction_identity_holds());
    }

    #[test]
    fn reductions_up_to_20() {
        for n in 2..=20 {
            let r = family_reductions(n + 1, n, Target::Mg).unwrap();
            assert!(r.iter().all(Reduction::verifies), "n = {n}");
            let ni = n as i64;
            let want = if n == 2 { q(3, 1) } else { q(2 * (5 * ni * ni - 13 * ni + 6), 1) };
            assert!(r.iter().all(|x| x.multiple == want), "n = {n}");
        }
        assert!(family_reductions(2, 2, Target::Mg1).unwrap()[0].verifies());
    }
}
