use serde::{Deserialize, Serialize};

use super::basis::{relations_and_basis, BasisSpec, FormalSum};
use super::{ModuliError, SpaceId};
use crate::linalg::dot;
use crate::scalar::Scalar;
use crate::{RatVector, Rational};

/// Divisor class in the ordered b-normalised basis of its space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub space: SpaceId,
    pub coords: RatVector,
}

/// Curve class, recorded by its intersection numbers with the basis
/// (i.e. coordinates in the dual basis `b̌`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub space: SpaceId,
    pub coords: RatVector,
}

/// A dual-basis symbol `b̌_k` or `b̌*_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dual {
    B(usize),
    BStar(usize),
}

#[derive(Serialize, Deserialize)]
struct SpaceJson {
    n: usize,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    space: SpaceJson,
    basis: Vec<String>,
    coords: Vec<String>,
}

fn to_json(space: SpaceId, spec: &BasisSpec, coords: &[Rational]) -> String {
    let j = ClassJson {
        space: SpaceJson { n: space.n(), m: space.m() },
        basis: spec.names().to_vec(),
        coords: coords.iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string(&j).expect("serialisable")
}

fn from_json(text: &str) -> Result<(SpaceId, RatVector), ModuliError> {
    let j: ClassJson = serde_json::from_str(text).map_err(|e| ModuliError::Json(e.to_string()))?;
    let space = SpaceId::new(j.space.n, j.space.m)?;
    let spec = relations_and_basis(space)?;
    if j.basis != spec.names() {
        return Err(ModuliError::Json(format!("basis {:?} does not match {:?}", j.basis, spec.names())));
    }
    let coords = j
        .coords
        .iter()
        .map(|s| Rational::parse_exact(s).ok_or_else(|| ModuliError::Json(format!("bad rational '{s}'"))))
        .collect::<Result<RatVector, _>>()?;
    if coords.len() != spec.picard_number() {
        return Err(ModuliError::Length { expected: spec.picard_number(), found: coords.len() });
    }
    Ok((space, coords))
}

impl DivisorClass {
    pub fn new(spec: &BasisSpec, coords: RatVector) -> Result<Self, ModuliError> {
        if coords.len() != spec.picard_number() {
            return Err(ModuliError::Length { expected: spec.picard_number(), found: coords.len() });
        }
        Ok(DivisorClass { space: spec.space(), coords })
    }

    /// Reduces a formal boundary sum modulo the relations.
    pub fn from_formal(spec: &BasisSpec, sum: &FormalSum) -> Result<Self, ModuliError> {
        Ok(DivisorClass { space: spec.space(), coords: spec.express(sum)? })
    }

    pub fn to_json(&self, spec: &BasisSpec) -> String {
        to_json(self.space, spec, &self.coords)
    }

    pub fn from_json(text: &str) -> Result<Self, ModuliError> {
        let (space, coords) = from_json(text)?;
        Ok(DivisorClass { space, coords })
    }
}

impl CurveClass {
    pub fn new(spec: &BasisSpec, coords: RatVector) -> Result<Self, ModuliError> {
        if coords.len() != spec.picard_number() {
            return Err(ModuliError::Length { expected: spec.picard_number(), found: coords.len() });
        }
        Ok(CurveClass { space: spec.space(), coords })
    }

    /// Builds `Σ c·(symbol)` applying the space's conventions: for `m = 0`
    /// indices fold (`b̌_j = b̌_{n−j}`); `b̌₁ = 0`; for `m = 2` also
    /// `b̌₂ = b̌*₁ = 0`.
    pub fn from_duals(spec: &BasisSpec, terms: &[(Dual, Rational)]) -> Result<Self, ModuliError> {
        let s = spec.space();
        let mut coords = vec![Rational::from_int(0); spec.picard_number()];
        for (sym, c) in terms {
            let name = match (*sym, s.m()) {
                (Dual::B(j), 0) if j < s.n() => {
                    let j = j.min(s.n() - j);
                    (j >= 2).then(|| format!("b{j}"))
                }
                (Dual::B(j), 1) => (j >= 2).then(|| format!("b{j}")),
                (Dual::B(j), 2) => (j >= 3).then(|| format!("b{j}")),
                (Dual::BStar(j), 2) => (j >= 2).then(|| format!("b*{j}")),
                _ => return Err(ModuliError::Json(format!("symbol {sym:?} has no meaning on {s}"))),
            };
            let Some(name) = name else { continue };
            let k = spec
                .names()
                .iter()
                .position(|x| *x == name)
                .ok_or_else(|| ModuliError::Json(format!("{name} is not a basis element of {s}")))?;
            coords[k] += c;
        }
        Ok(CurveClass { space: s, coords })
    }

    /// Intersection number with a divisor on the same space.
    pub fn dot(&self, d: &DivisorClass) -> Result<Rational, ModuliError> {
        if self.space != d.space {
            return Err(ModuliError::Incompatible { from: self.space, to: d.space, why: "pairing across spaces" });
        }
        Ok(dot(&self.coords, &d.coords))
    }

    pub fn to_json(&self, spec: &BasisSpec) -> String {
        to_json(self.space, spec, &self.coords)
    }

    pub fn from_json(text: &str) -> Result<Self, ModuliError> {
        let (space, coords) = from_json(text)?;
        Ok(CurveClass { space, coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qv};

    #[test]
    fn json_shape() {
        let spec = relations_and_basis(SpaceId::new(7, 1).unwrap()).unwrap();
        let d = DivisorClass::new(&spec, qv(&[5, 12, 6, 2])).unwrap();
        let text = d.to_json(&spec);
        assert_eq!(text, r#"{"space":{"n":7,"m":1},"basis":["b2","b3","b4","b5"],"coords":["5","12","6","2"]}"#);
        assert_eq!(DivisorClass::from_json(&text).unwrap(), d);
        assert!(DivisorClass::from_json(r#"{"space":{"n":7,"m":1},"basis":["b2"],"coords":["1"]}"#).is_err());
    }

    #[test]
    fn dual_conventions() {
        let spec = relations_and_basis(SpaceId::new(8, 0).unwrap()).unwrap();
        let c = CurveClass::from_duals(&spec, &[(Dual::B(6), q(1, 1)), (Dual::B(1), q(5, 1)), (Dual::B(7), q(9, 1))]).unwrap();
        assert_eq!(c.coords, qv(&[1, 0, 0]));
        let spec = relations_and_basis(SpaceId::new(6, 2).unwrap()).unwrap();
        let c = CurveClass::from_duals(&spec, &[(Dual::B(2), q(1, 1)), (Dual::BStar(3), q(2, 1)), (Dual::BStar(1), q(1, 1))]).unwrap();
        assert_eq!(c.coords, qv(&[0, 0, 0, 2, 0]));
        assert!(CurveClass::from_duals(&spec, &[(Dual::B(9), q(1, 1))]).is_err());
    }
}
