//! Quoted input data (nef cones from the literature, named boundary sums),
//! shipped as `data/fixtures.toml`. A different file can be loaded with
//! [`Fixtures::parse`] to audit how the checks react to altered data.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

use crate::moduli::{BoundaryLabel, FormalSum, ModuliError, SpaceId};
use crate::{qv, RatCone, Rational};

pub const FIXTURE_VERSION: u32 = 1;

const BUILTIN: &str = include_str!("../data/fixtures.toml");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("fixture file: {0}")]
    Toml(String),
    #[error("fixture version {found} not supported (expected {FIXTURE_VERSION})")]
    Version { found: u32 },
    #[error("no fixture named '{0}'")]
    Missing(String),
    #[error("fixture '{name}': {why}")]
    Invalid { name: String, why: String },
    #[error(transparent)]
    Moduli(#[from] ModuliError),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixtures {
    pub version: u32,
    #[serde(default)]
    pub nef: BTreeMap<String, FixtureCone>,
    #[serde(default)]
    pub claim: BTreeMap<String, FixtureCone>,
    #[serde(default)]
    pub class: BTreeMap<String, FixtureClass>,
}

/// Rays in the ordered basis of the space; `n`/`m` absent for `M̄_{2,1}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCone {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub rays: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureClass {
    pub n: usize,
    /// Marked point that plays the role of point 1 after relabelling.
    pub distinguished: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub c: i64,
    pub s: Vec<usize>,
}

impl Fixtures {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let f: Fixtures = toml::from_str(text).map_err(|e| FixtureError::Toml(e.to_string()))?;
        if f.version != FIXTURE_VERSION {
            return Err(FixtureError::Version { found: f.version });
        }
        Ok(f)
    }

    /// The fixtures compiled into the library.
    pub fn builtin() -> &'static Fixtures {
        static F: OnceLock<Fixtures> = OnceLock::new();
        F.get_or_init(|| Fixtures::parse(BUILTIN).expect("built-in fixture file is valid"))
    }

    pub fn nef(&self, name: &str) -> Result<&FixtureCone, FixtureError> {
        self.nef.get(name).ok_or_else(|| FixtureError::Missing(format!("nef.{name}")))
    }

    pub fn claim(&self, name: &str) -> Result<&FixtureCone, FixtureError> {
        self.claim.get(name).ok_or_else(|| FixtureError::Missing(format!("claim.{name}")))
    }

    pub fn class(&self, name: &str) -> Result<&FixtureClass, FixtureError> {
        self.class.get(name).ok_or_else(|| FixtureError::Missing(format!("class.{name}")))
    }

    /// Nef fixture of `X_{n,m}`, keyed `X{n}_{m}`.
    pub fn nef_of(&self, s: SpaceId) -> Option<&FixtureCone> {
        self.nef.get(&format!("X{}_{}", s.n(), s.m()))
    }
}

impl FixtureCone {
    pub fn space(&self) -> Result<Option<SpaceId>, FixtureError> {
        match (self.n, self.m) {
            (Some(n), Some(m)) => Ok(Some(SpaceId::new(n, m)?)),
            _ => Ok(None),
        }
    }

    pub fn ray_vectors(&self) -> Vec<Vec<Rational>> {
        self.rays.iter().map(|r| qv(r)).collect()
    }

    pub fn cone(&self, name: &str) -> Result<RatCone, FixtureError> {
        let dim = self.rays.first().map_or(0, Vec::len);
        if dim == 0 || self.rays.iter().any(|r| r.len() != dim) {
            return Err(FixtureError::Invalid { name: name.into(), why: "rays must be nonempty and of equal length".into() });
        }
        RatCone::from_generators(dim, self.ray_vectors(), vec![])
            .map_err(|e| FixtureError::Invalid { name: name.into(), why: e.to_string() })
    }
}

impl FixtureClass {
    /// The boundary sum on `M̄_{0,n}`, with the distinguished point swapped
    /// to position 1.
    pub fn formal(&self) -> Result<(SpaceId, FormalSum), FixtureError> {
        let s = SpaceId::full(self.n)?;
        let d = self.distinguished;
        let swap = |p: usize| if p == d { 1 } else if p == 1 { d } else { p };
        let mut sum = FormalSum::new();
        for t in &self.terms {
            let set: Vec<usize> = t.s.iter().map(|&p| swap(p)).collect();
            let l = BoundaryLabel::of_subset(s, &set)?;
            *sum.entry(l).or_insert_with(|| crate::q(0, 1)) += crate::q(t.c, 1);
        }
        Ok((s, sum))
    }
}
