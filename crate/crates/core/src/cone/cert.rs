//! Certificates: witnesses that check by plain arithmetic.

use serde::Serialize;

use crate::linalg::{axpy, dot, fmt_vec};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case", bound(serialize = "T: Scalar"))]
pub enum Certificate<T> {
    /// `target = Σ c·ray[idx] + Σ c'·lineality[idx]`, all `c ≥ 0`.
    Membership {
        #[serde(serialize_with = "ser_pairs")]
        combination: Vec<(usize, T)>,
        #[serde(serialize_with = "ser_pairs")]
        lineality: Vec<(usize, T)>,
    },
    /// `functional ≥ 0` on every generator, `= 0` on lineality, `< 0` on target.
    NonMembership {
        #[serde(serialize_with = "ser_vec")]
        functional: Vec<T>,
    },
    /// `ineq[target] = Σ c·ineq[idx] + Σ c'·eq[idx]` with `c ≥ 0`.
    Redundancy {
        target: usize,
        #[serde(serialize_with = "ser_pairs")]
        combination: Vec<(usize, T)>,
        #[serde(serialize_with = "ser_pairs")]
        equations: Vec<(usize, T)>,
    },
}

fn ser_pairs<T: Scalar, S: serde::Serializer>(v: &[(usize, T)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (i, c) in v {
        seq.serialize_element(&(i, c.to_string()))?;
    }
    seq.end()
}

fn ser_vec<T: Scalar, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<String> = v.iter().map(ToString::to_string).collect();
    serde::Serialize::serialize(&strs, s)
}

impl<T: Scalar> Certificate<T> {
    pub fn is_membership(&self) -> bool {
        matches!(self, Certificate::Membership { .. })
    }

    pub fn is_non_membership(&self) -> bool {
        matches!(self, Certificate::NonMembership { .. })
    }

    /// Checks a membership or non-membership certificate against explicit
    /// generators.
    pub fn verify(&self, rays: &[Vec<T>], lineality: &[Vec<T>], target: &[T]) -> bool {
        match self {
            Certificate::Membership { combination, lineality: lin } => {
                let mut acc = vec![T::zero(); target.len()];
                for (i, c) in combination {
                    if c.is_negative() || *i >= rays.len() {
                        return false;
                    }
                    axpy(&mut acc, c, &rays[*i]);
                }
                for (i, c) in lin {
                    if *i >= lineality.len() {
                        return false;
                    }
                    axpy(&mut acc, c, &lineality[*i]);
                }
                acc == target
            }
            Certificate::NonMembership { functional } => {
                functional.len() == target.len()
                    && rays.iter().all(|r| !dot(functional, r).is_negative())
                    && lineality.iter().all(|l| dot(functional, l).is_zero())
                    && dot(functional, target).is_negative()
            }
            Certificate::Redundancy { .. } => false,
        }
    }

    /// Checks a redundancy certificate against an inequality system.
    pub fn verify_redundancy(&self, inequalities: &[Vec<T>], equations: &[Vec<T>]) -> bool {
        let Certificate::Redundancy { target, combination, equations: eqc } = self else {
            return false;
        };
        let Some(goal) = inequalities.get(*target) else {
            return false;
        };
        let mut acc = vec![T::zero(); goal.len()];
        for (i, c) in combination {
            if c.is_negative() || *i == *target || *i >= inequalities.len() {
                return false;
            }
            axpy(&mut acc, c, &inequalities[*i]);
        }
        for (i, c) in eqc {
            if *i >= equations.len() {
                return false;
            }
            axpy(&mut acc, c, &equations[*i]);
        }
        acc == *goal
    }

    pub fn describe(&self) -> String {
        let pairs = |v: &[(usize, T)]| {
            v.iter().map(|(i, c)| format!("{c}·[{i}]")).collect::<Vec<_>>().join(" + ")
        };
        match self {
            Certificate::Membership { combination, lineality } => {
                let mut s = format!("member: {}", pairs(combination));
                if !lineality.is_empty() {
                    s.push_str(&format!(" + lineality {}", pairs(lineality)));
                }
                s
            }
            Certificate::NonMembership { functional } => {
                format!("not a member: separating functional {}", fmt_vec(functional))
            }
            Certificate::Redundancy { target, combination, equations } => {
                let mut s = format!("[{target}] = {}", pairs(combination));
                if !equations.is_empty() {
                    s.push_str(&format!(" + equations {}", pairs(equations)));
                }
                s
            }
        }
    }
}
