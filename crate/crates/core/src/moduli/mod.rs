//! Boundary combinatorics of `X_{n,m} = M̄_{0,n}/S_{n−m}`: labels, relations,
//! bases of `N¹`, and the quotient / forgetful maps between the spaces.
//!
//! Divisor coordinates are always *b-normalised*: the class attached to the
//! ramified label `(2, ∅)` is half the reduced boundary divisor, every other
//! label is the reduced divisor itself. In these coordinates the quotient
//! map pushes `D_S` to `|Stab(S)|·(label of S)` with no special cases.

mod basis;
mod class;
mod label;
mod maps;

use std::fmt;

use thiserror::Error;

pub use basis::{keel_relations, relations_and_basis, stated_relations, BasisSpec, FormalSum};
pub use class::{CurveClass, Dual, DivisorClass};
pub use label::{enumerate_boundaries, BoundaryLabel};
pub use maps::{
    b_denormalize, b_normalize, forgetful_pullback, pullback_map, pushforward_between, pushforward_map, quotient_pushforward,
    LinearMap,
};

/// Largest `n` accepted; labels are stored as point lists but stabiliser
/// orders and subset enumeration grow quickly past this.
pub const MAX_N: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("n ≥ 4 required (got n = {0})")]
    SmallN(usize),
    #[error("n ≤ {MAX_N} supported (got n = {0})")]
    LargeN(usize),
    #[error("m must satisfy 0 ≤ m ≤ n (got n = {n}, m = {m})")]
    BadM { n: usize, m: usize },
    #[error("invalid boundary label D^{i}_{t:?} on X_{{{n},{m}}}")]
    BadLabel { n: usize, m: usize, i: usize, t: Vec<usize> },
    #[error("label {0} does not belong to this space")]
    ForeignLabel(String),
    #[error("cannot map {from} to {to}: {why}")]
    Incompatible { from: SpaceId, to: SpaceId, why: &'static str },
    #[error("coordinate vector has length {found}, basis has {expected}")]
    Length { expected: usize, found: usize },
    #[error("{0}")]
    Json(String),
}

/// `X_{n,m}`. `m = n − 1` is stored as `m = n` (both are `M̄_{0,n}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId {
    n: usize,
    m: usize,
}

impl SpaceId {
    pub fn new(n: usize, m: usize) -> Result<Self, ModuliError> {
        if n < 4 {
            return Err(ModuliError::SmallN(n));
        }
        if n > MAX_N {
            return Err(ModuliError::LargeN(n));
        }
        if m > n {
            return Err(ModuliError::BadM { n, m });
        }
        Ok(SpaceId { n, m: if m + 1 == n { n } else { m } })
    }

    /// `M̄_{0,n}` itself.
    pub fn full(n: usize) -> Result<Self, ModuliError> {
        Self::new(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of interchangeable points.
    pub fn free_points(&self) -> usize {
        self.n - self.m
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == self.n {
            write!(f, "X_{}", self.n)
        } else {
            write!(f, "X_{{{},{}}}", self.n, self.m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_ids() {
        assert_eq!(SpaceId::new(3, 0).unwrap_err().to_string(), "n ≥ 4 required (got n = 3)");
        assert_eq!(SpaceId::new(7, 6).unwrap(), SpaceId::new(7, 7).unwrap());
        assert!(SpaceId::new(7, 8).is_err());
        assert_eq!(SpaceId::new(7, 1).unwrap().to_string(), "X_{7,1}");
        assert_eq!(SpaceId::full(6).unwrap().to_string(), "X_6");
    }
}
