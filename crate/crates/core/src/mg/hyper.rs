use super::{dual, MgDual, MgError, Sym, Target};
use crate::moduli::LinearMap;
use crate::{q, RatCone, RatVector};

fn check_g(g: usize) -> Result<(), MgError> {
    if g < 2 {
        return Err(MgError::Range(format!("g ≥ 2 required (got g = {g})")));
    }
    if 2 * g + 2 > crate::moduli::MAX_N {
        return Err(MgError::Range(format!("g ≤ {} supported (got g = {g})", (crate::moduli::MAX_N - 2) / 2)));
    }
    Ok(())
}

/// `i_*` on dual coordinates, `X_{2g+2,0} → M̄_g`:
/// `b̌_{2j} ↦ 2δ̌_irr + j(g+1−j)/(4g+2)·λ̌`,
/// `b̌_{2j+1} ↦ ½δ̌_j + j(g−j)/(4g+2)·λ̌`.
pub fn hyperelliptic_pushforward(g: usize) -> Result<LinearMap, MgError> {
    check_g(g)?;
    let gi = g as i64;
    let mut images: Vec<RatVector> = Vec::new();
    for k in 2..=g + 1 {
        let j = (k / 2) as i64;
        let d = if k % 2 == 0 {
            dual(Target::Mg, g, &[(Sym::Irr, q(2, 1)), (Sym::Lambda, q(j * (gi + 1 - j), 4 * gi + 2))])?
        } else {
            dual(Target::Mg, g, &[(Sym::Delta(k / 2), q(1, 2)), (Sym::Lambda, q(j * (gi - j), 4 * gi + 2))])?
        };
        images.push(d.coords);
    }
    let dim = images[0].len();
    Ok(LinearMap::from_images(format!("N1(X_{{{},0}})*", 2 * g + 2), format!("N1(M_{g})*"), &images, dim))
}

/// The curve-level formulas for `i_*C_k` (`1 ≤ k ≤ 2g−1`), with `δ̌_0 = 0`.
pub fn hyperelliptic_curve_image(g: usize, k: usize) -> Result<MgDual, MgError> {
    check_g(g)?;
    if k < 1 || k + 1 > 2 * g {
        return Err(MgError::Range(format!("i_*C_k needs 1 ≤ k ≤ 2g−1 (got k = {k})")));
    }
    let (gi, j) = (g as i64, (k / 2) as i64);
    if k % 2 == 1 {
        dual(
            Target::Mg,
            g,
            &[
                (Sym::Irr, q(2 * (2 * gi + 1 - 2 * j), 1)),
                (Sym::Delta(k / 2), q(2 * j + 1 - 2 * gi, 2)),
                (Sym::Lambda, q(gi - j, 2)),
            ],
        )
    } else {
        dual(Target::Mg, g, &[(Sym::Irr, q(4 * (j - gi), 1)), (Sym::Delta(k / 2), q(gi + 1 - j, 1))])
    }
}

/// For `1 ≤ i ≤ g−1`: `4(2i+1)δ̌_irr + iλ̌ − (2i−1)δ̌_i ≥ 0` and
/// `(i+1)δ̌_i − 4iδ̌_irr ≥ 0`.
pub fn hyperelliptic_rows(g: usize) -> Result<Vec<MgDual>, MgError> {
    check_g(g)?;
    let mut rows = Vec::new();
    for i in 1..g {
        let ii = i as i64;
        rows.push(dual(
            Target::Mg,
            g,
            &[(Sym::Irr, q(4 * (2 * ii + 1), 1)), (Sym::Lambda, q(ii, 1)), (Sym::Delta(i), q(-(2 * ii - 1), 1))],
        )?);
        rows.push(dual(Target::Mg, g, &[(Sym::Delta(i), q(ii + 1, 1)), (Sym::Irr, q(-4 * ii, 1))])?);
    }
    Ok(rows)
}

/// Divisors on `M̄_g` whose pullback lies in `Nem(X_{2g+2,0})`.
pub fn hyperelliptic_pullback_cone(g: usize) -> Result<RatCone, MgError> {
    let rows: Vec<RatVector> = hyperelliptic_rows(g)?.into_iter().map(|r| r.coords).collect();
    let dim = rows[0].len();
    Ok(RatCone::from_hrep(dim, rows, vec![])?)
}
