use super::{range, CurveError};
use crate::moduli::{pullback_map, relations_and_basis, CurveClass, Dual, LinearMap, SpaceId};
use crate::{q, RatVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttachKind {
    /// Attach a fixed curve at the `l+1`-st point: `X_{l+1,1} → X_{n,m}`.
    Q,
    /// `X_{l+1,2} → X_{n,2}`; only the starred duals have closed forms.
    R,
    /// `X_{l+1,2} → X_{n,1}`.
    S,
    /// Forgetful pullback `X_{n,1} ← X_{n−1,0}` (on divisors).
    PiStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttachMapSpec {
    pub kind: AttachKind,
    pub l: usize,
    pub n: usize,
    pub m: usize,
}

impl AttachMapSpec {
    pub fn validate(&self) -> Result<(), CurveError> {
        let AttachMapSpec { kind, l, n, m } = *self;
        let ok = match kind {
            AttachKind::Q => m <= 2 && (3..=n.saturating_sub(2)).contains(&l) && l + m <= n,
            AttachKind::R => m == 2 && (3..=n.saturating_sub(2)).contains(&l),
            AttachKind::S => m == 1 && (3..=n.saturating_sub(2)).contains(&l),
            AttachKind::PiStar => m == 1 && n >= 5,
        };
        if ok {
            Ok(())
        } else {
            Err(range(format!("invalid attaching map {kind:?} with l = {l}, n = {n}, m = {m}")))
        }
    }
}

fn ratio(num: i64, den: i64) -> Rational {
    q(num, den)
}

/// Parses a basis name `b{j}` / `b*{j}`.
fn symbol(name: &str) -> Dual {
    match name.strip_prefix("b*") {
        Some(j) => Dual::BStar(j.parse().expect("basis index")),
        None => Dual::B(name[1..].parse().expect("basis index")),
    }
}

/// Matrix of the attaching map on dual coordinates (columns: images of the
/// source duals in the source basis order). For [`AttachKind::PiStar`] the
/// matrix acts on divisor coordinates instead.
pub fn attach_pushforward(spec: &AttachMapSpec) -> Result<LinearMap, CurveError> {
    spec.validate()?;
    let AttachMapSpec { kind, l, n, m } = *spec;
    let target = SpaceId::new(n, m)?;
    if kind == AttachKind::PiStar {
        let a = relations_and_basis(SpaceId::new(n - 1, 0)?)?;
        return Ok(pullback_map(&a, &relations_and_basis(target)?)?);
    }
    let src = SpaceId::new(l + 1, if kind == AttachKind::Q { 1 } else { 2 })?;
    let src_spec = relations_and_basis(src)?;
    let tgt = relations_and_basis(target)?;
    let li = l as i64;
    let mut images: Vec<RatVector> = Vec::new();
    let mut source_names = Vec::new();
    for name in src_spec.names() {
        let terms: Vec<(Dual, Rational)> = match (kind, symbol(name)) {
            (AttachKind::Q, Dual::B(j)) => {
                let k = j as i64 - 1;
                vec![
                    (Dual::B(n - l + k as usize), q(1, 1)),
                    (Dual::B(n - l), -ratio((li - k - 1) * (li - k), li * (li - 1))),
                ]
            }
            (AttachKind::R, Dual::BStar(j)) | (AttachKind::S, Dual::BStar(j)) => {
                let i = j as i64 - 1;
                let first = if kind == AttachKind::R { Dual::BStar(j) } else { Dual::B(j) };
                let last = if kind == AttachKind::R { Dual::BStar(l) } else { Dual::B(l) };
                vec![
                    (first, q(1, 1)),
                    (Dual::B(n - l + 1), ratio(i * (li - i - 1), (li - 2) * (li - 1))),
                    (last, -ratio(i, li - 1)),
                ]
            }
            (AttachKind::S, Dual::B(j)) => {
                let i = j as i64 - 1;
                vec![
                    (Dual::B(n - l + i as usize), q(1, 1)),
                    (Dual::B(n - l + 1), -ratio((li - i - 1) * (li - i), (li - 2) * (li - 1))),
                ]
            }
            (AttachKind::R, Dual::B(_)) => continue,
            _ => unreachable!("source basis of a one-point space has no starred elements"),
        };
        images.push(CurveClass::from_duals(&tgt, &terms)?.coords);
        source_names.push(format!("b̌{}", &name[1..]));
    }
    Ok(LinearMap::from_images(
        format!("N1({src})* [{}]", source_names.join(",")),
        format!("N1({target})*"),
        &images,
        tgt.picard_number(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::curve_ck;
    use num_traits::Zero;

    /// Formal combination over symbols `b̌_0..b̌_{N}` (no folding, no zeros).
    fn sym(len: usize, terms: &[(usize, Rational)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); len];
        for (j, c) in terms {
            v[*j] += c;
        }
        v
    }

    #[test]
    fn q_closed_form_is_the_telescoped_recursion() {
        for l in 3..=10i64 {
            let n = l as usize + 3;
            // q_*b̌_{k+1} = (q_*C_k + (l−k−1)·q_*b̌_k)/(l−k+1), q_*b̌_1 = 0.
            let mut prev = sym(n + 1, &[]);
            for k in 1..=l - 2 {
                let ck = sym(
                    n + 1,
                    &[(n - l as usize + k as usize, q(l - k + 1, 1)), (n - l as usize + k as usize - 1, q(-(l - k - 1), 1))],
                );
                let next: Vec<Rational> =
                    ck.iter().zip(&prev).map(|(c, p)| (c + p * q(l - k - 1, 1)) / q(l - k + 1, 1)).collect();
                let closed = sym(
                    n + 1,
                    &[(n - l as usize + k as usize, q(1, 1)), (n - l as usize, -q((l - k - 1) * (l - k), l * (l - 1)))],
                );
                assert_eq!(next, closed, "l = {l}, k = {k}");
                prev = next;
            }
        }
    }

    #[test]
    fn q_instances() {
        // X_{7,1}, l = 5: b̌_2 ↦ b̌_3 − (12/20)·b̌_2.
        let m = attach_pushforward(&AttachMapSpec { kind: AttachKind::Q, l: 5, n: 7, m: 1 }).unwrap();
        assert_eq!(m.image(0), vec![q(-3, 5), q(1, 1), q(0, 1), q(0, 1)]);
        // Source C_k goes to the recursion's right-hand side.
        for l in 3..=6usize {
            let n = 8;
            let mp = attach_pushforward(&AttachMapSpec { kind: AttachKind::Q, l, n, m: 1 }).unwrap();
            for k in 1..=l - 2 {
                let ck = curve_ck(SpaceId::new(l + 1, 1).unwrap(), k).unwrap();
                let got = mp.apply(&ck.coords).unwrap();
                let tgt = relations_and_basis(SpaceId::new(n, 1).unwrap()).unwrap();
                let (li, ki) = (l as i64, k as i64);
                let want = CurveClass::from_duals(
                    &tgt,
                    &[(Dual::B(n - l + k), q(li - ki + 1, 1)), (Dual::B(n - l + k - 1), q(-(li - ki - 1), 1))],
                )
                .unwrap();
                assert_eq!(got, want.coords);
            }
        }
    }

    #[test]
    fn s_at_shared_index_matches_vanishing_dual() {
        // s_*b̌_{i+1} at i = 1 would be b̌_{n−l+1} − b̌_{n−l+1} = 0 = s_*b̌_2.
        for l in 3..=8i64 {
            assert!(q(1, 1) - q((l - 2) * (l - 1), (l - 2) * (l - 1)) == Rational::zero());
        }
        let m = attach_pushforward(&AttachMapSpec { kind: AttachKind::S, l: 4, n: 7, m: 1 }).unwrap();
        assert_eq!(m.source_dim(), 3);
        assert_eq!(m.target_dim(), 4);
    }

    #[test]
    fn invalid_specs() {
        let bad = |kind, l, n, m| attach_pushforward(&AttachMapSpec { kind, l, n, m }).is_err();
        assert!(bad(AttachKind::Q, 2, 7, 1));
        assert!(bad(AttachKind::Q, 6, 7, 1));
        assert!(bad(AttachKind::Q, 5, 7, 3));
        assert!(bad(AttachKind::R, 4, 7, 1));
        assert!(bad(AttachKind::S, 4, 7, 2));
        assert!(!bad(AttachKind::PiStar, 0, 7, 1));
    }
}
