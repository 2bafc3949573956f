use super::{range, CurveError};
use crate::moduli::{relations_and_basis, CurveClass, Dual, SpaceId};
use crate::q;

/// `C_k ≡ (n−k)·b̌_{k+1} + (2−n+k)·b̌_k` on `X_{n,1}` (and folded on
/// `X_{n,0}`); `C_1` is the fibre of `X_{n,1} → X_{n−1,0}`.
pub fn curve_ck(s: SpaceId, k: usize) -> Result<CurveClass, CurveError> {
    let n = s.n();
    if s.m() > 1 {
        return Err(range(format!("C_k lives on X_{{n,0}} or X_{{n,1}}, not {s}")));
    }
    if k < 1 || k + 3 > n {
        return Err(range(format!("C_k needs 1 ≤ k ≤ n−3 (got k = {k}, n = {n})")));
    }
    let spec = relations_and_basis(s)?;
    let (n, k) = (n as i64, k as i64);
    Ok(CurveClass::from_duals(&spec, &[(Dual::B(k as usize + 1), q(n - k, 1)), (Dual::B(k as usize), q(2 - n + k, 1))])?)
}

/// `C*_i ≡ b̌_{i+1} + (l−i)·b̌*_{i+1} + (1−l+i)·b̌*_i` on `X_{l+1,2}`.
pub fn curve_ck_star(l: usize, i: usize) -> Result<CurveClass, CurveError> {
    if l < 3 {
        return Err(range(format!("C*_i needs l ≥ 3 (got l = {l})")));
    }
    if i < 1 || i + 2 > l {
        return Err(range(format!("C*_i needs 1 ≤ i ≤ l−2 (got i = {i}, l = {l})")));
    }
    let spec = relations_and_basis(SpaceId::new(l + 1, 2)?)?;
    let (li, ii) = (l as i64, i as i64);
    Ok(CurveClass::from_duals(
        &spec,
        &[(Dual::B(i + 1), q(1, 1)), (Dual::BStar(i + 1), q(li - ii, 1)), (Dual::BStar(i), q(1 - li + ii, 1))],
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qv, Rational};

    fn sp(n: usize, m: usize) -> SpaceId {
        SpaceId::new(n, m).unwrap()
    }

    #[test]
    fn ck_examples() {
        // (b̌2, b̌3, b̌4, b̌5)
        assert_eq!(curve_ck(sp(7, 1), 2).unwrap().coords, qv(&[-3, 5, 0, 0]));
        for n in 5..=10 {
            let c1 = curve_ck(sp(n, 1), 1).unwrap();
            assert_eq!(c1.coords[0], Rational::from_integer((n as i64 - 1).into()));
            assert!(c1.coords[1..].iter().all(|x| *x == q(0, 1)));
        }
        // Folding on X_{8,0}: C_5 = 3b̌6 − b̌5 = 3b̌2 − b̌3.
        assert_eq!(curve_ck(sp(8, 0), 5).unwrap().coords, qv(&[3, -1, 0]));
        assert!(curve_ck(sp(7, 1), 5).is_err());
        assert!(curve_ck(sp(7, 1), 0).is_err());
        assert!(curve_ck(sp(7, 2), 2).is_err());
    }

    #[test]
    fn ck_star_examples() {
        // X_{5,2}: basis (b3, b*2, b*3)
        assert_eq!(curve_ck_star(4, 1).unwrap().coords, qv(&[0, 3, 0]));
        assert_eq!(curve_ck_star(4, 2).unwrap().coords, qv(&[1, -1, 2]));
        assert!(curve_ck_star(4, 3).is_err());
        // b̌*_{i+1} = (C*_i − b̌_{i+1} + (l−i−1)·b̌*_i)/(l−i)
        for l in 4..=9usize {
            let spec = relations_and_basis(sp(l + 1, 2)).unwrap();
            for i in 1..=l - 2 {
                let c = curve_ck_star(l, i).unwrap();
                let rhs = CurveClass::from_duals(
                    &spec,
                    &[(Dual::B(i + 1), q(-1, 1)), (Dual::BStar(i), q(l as i64 - i as i64 - 1, 1))],
                )
                .unwrap();
                let lhs = CurveClass::from_duals(&spec, &[(Dual::BStar(i + 1), q(1, 1))]).unwrap();
                let k = q(1, l as i64 - i as i64);
                let got: Vec<Rational> = c.coords.iter().zip(&rhs.coords).map(|(a, b)| (a + b) * &k).collect();
                assert_eq!(got, lhs.coords);
            }
        }
    }
}
