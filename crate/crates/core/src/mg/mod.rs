//! Maps from the symmetric quotients into `M̄_g` and `M̄_{g,1}` (hyperelliptic
//! and pointed-hyperelliptic loci), the inequality families they induce,
//! and the cone analysis of `M̄_{2,1}`.
//!
//! Curve classes on the target are dual vectors in the ordered basis
//! `(λ, δ_irr, δ_1, …)` — `δ_1..δ_{⌊g/2⌋}` on `M̄_g`, `δ_1..δ_{g−1}, ω` on
//! `M̄_{g,1}`. For `g = 2` the class `λ = δ_irr/10 + δ_1/5` is dependent,
//! so `λ` is removed from the basis; a dual vector keeps its values on the
//! remaining basis classes (and its `λ̌` entry must agree with the relation,
//! which [`DualBuilder::finish`] checks).

mod hyper;
mod m21;
mod pointed;

use thiserror::Error;

use crate::cone::ConeError;
use crate::curves::CurveError;
use crate::fixtures::FixtureError;
use crate::moduli::ModuliError;
use crate::{q, RatVector, Rational};

pub use hyper::{hyperelliptic_curve_image, hyperelliptic_pullback_cone, hyperelliptic_pushforward, hyperelliptic_rows};
pub use m21::{
    corollary_cone_m21, m21_cones, m21_from_lambda_basis, m21_pushforward, m21_pushforward_map, x71_mori_data, M21Cones,
    MoriData,
};
pub use pointed::{
    c_coefficients, mg1_inequality_family, pointed_curve_image, pointed_pushforward, reduction_identity_holds,
    family_reductions, FamilyRow, Mg1Family, Reduction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MgError {
    #[error("{0}")]
    Range(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Mg,
    Mg1,
}

/// Ordered basis names of `N¹(M̄_g)` / `N¹(M̄_{g,1})`.
pub fn basis_names(target: Target, g: usize) -> Vec<String> {
    let mut v = Vec::new();
    if g >= 3 {
        v.push("lambda".to_string());
    }
    v.push("delta_irr".to_string());
    let top = match target {
        Target::Mg => g / 2,
        Target::Mg1 => g - 1,
    };
    v.extend((1..=top).map(|i| format!("delta_{i}")));
    if target == Target::Mg1 {
        v.push("omega".to_string());
    }
    v
}

/// A dual vector on `M̄_g` or `M̄_{g,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MgDual {
    pub target: Target,
    pub g: usize,
    pub coords: RatVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    Lambda,
    Irr,
    /// `δ̌_i`; folded `i ↦ g − i` on `M̄_g`; `δ̌_0 = 0` on `M̄_g` and
    /// `−ω̌` on `M̄_{g,1}`.
    Delta(usize),
    Omega,
}

/// Accumulates `Σ c·(symbol)` in the full basis `(λ, δ_irr, δ_1.., ω)`.
#[derive(Clone, Debug)]
pub struct DualBuilder {
    target: Target,
    g: usize,
    full: RatVector,
}

impl DualBuilder {
    pub fn new(target: Target, g: usize) -> Result<Self, MgError> {
        if g < 2 {
            return Err(MgError::Range(format!("g ≥ 2 required (got g = {g})")));
        }
        let len = basis_names(target, g).len() + usize::from(g == 2);
        Ok(DualBuilder { target, g, full: vec![q(0, 1); len] })
    }

    fn slot(&self, s: Sym) -> Result<Option<(usize, Rational)>, MgError> {
        let g = self.g;
        let one = q(1, 1);
        Ok(match s {
            Sym::Lambda => Some((0, one)),
            Sym::Irr => Some((1, one)),
            Sym::Delta(0) => match self.target {
                Target::Mg => None,
                Target::Mg1 => Some((self.full.len() - 1, -one)),
            },
            Sym::Delta(i) if i < g => {
                let i = if self.target == Target::Mg { i.min(g - i) } else { i };
                Some((1 + i, one))
            }
            Sym::Delta(i) => return Err(MgError::Range(format!("δ_{i} does not exist in genus {g}"))),
            Sym::Omega => match self.target {
                Target::Mg => return Err(MgError::Range("ω̌ is not defined on M̄_g".into())),
                Target::Mg1 => Some((self.full.len() - 1, one)),
            },
        })
    }

    pub fn add(mut self, s: Sym, c: Rational) -> Result<Self, MgError> {
        if let Some((k, sign)) = self.slot(s)? {
            self.full[k] += c * sign;
        }
        Ok(self)
    }

    pub fn terms(mut self, t: &[(Sym, Rational)]) -> Result<Self, MgError> {
        for (s, c) in t {
            self = self.add(*s, c.clone())?;
        }
        Ok(self)
    }

    /// Coordinates in the full basis, `λ̌` first even for `g = 2`.
    pub fn full(&self) -> &[Rational] {
        &self.full
    }

    /// For `g = 2` the `λ̌` entry must equal the value on
    /// `δ_irr/10 + δ_1/5`; it is then dropped.
    pub fn finish(self) -> Result<MgDual, MgError> {
        let DualBuilder { target, g, full } = self;
        let coords = if g == 2 {
            let implied = &full[1] * q(1, 10) + &full[2] * q(1, 5);
            if implied != full[0] {
                return Err(MgError::Inconsistent(format!(
                    "λ̌ entry {} disagrees with λ = δ_irr/10 + δ_1/5 (which gives {implied})",
                    full[0]
                )));
            }
            full[1..].to_vec()
        } else {
            full
        };
        Ok(MgDual { target, g, coords })
    }

    /// Drops `λ̌` for `g = 2` without the consistency check (for rows that
    /// are only meaningful up to the relation).
    pub fn finish_unchecked(self) -> MgDual {
        let DualBuilder { target, g, full } = self;
        let coords = if g == 2 { full[1..].to_vec() } else { full };
        MgDual { target, g, coords }
    }
}

pub(crate) fn dual(target: Target, g: usize, t: &[(Sym, Rational)]) -> Result<MgDual, MgError> {
    DualBuilder::new(target, g)?.terms(t)?.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(basis_names(Target::Mg, 5), ["lambda", "delta_irr", "delta_1", "delta_2"]);
        assert_eq!(basis_names(Target::Mg1, 2), ["delta_irr", "delta_1", "omega"]);
    }

    #[test]
    fn conventions() {
        let d = dual(Target::Mg, 5, &[(Sym::Delta(4), q(1, 1)), (Sym::Delta(0), q(7, 1))]).unwrap();
        assert_eq!(d.coords, vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)]);
        let d = dual(Target::Mg1, 3, &[(Sym::Delta(0), q(2, 1))]).unwrap();
        assert_eq!(d.coords.last().unwrap(), &q(-2, 1));
        assert!(dual(Target::Mg, 3, &[(Sym::Omega, q(1, 1))]).is_err());
        // g = 2: λ̌ must match δ̌_irr/10 + δ̌_1/5.
        assert!(dual(Target::Mg, 2, &[(Sym::Irr, q(2, 1)), (Sym::Lambda, q(1, 5))]).is_ok());
        assert!(dual(Target::Mg, 2, &[(Sym::Irr, q(2, 1)), (Sym::Lambda, q(1, 7))]).is_err());
    }
}
