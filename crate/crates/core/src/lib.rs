//! Exact cones of divisors and curves on symmetric quotients of `M̄_{0,n}`,
//! and their images in `M̄_g` / `M̄_{g,1}` under the hyperelliptic map.
//!
//! All arithmetic is exact. The engine is generic over [`Scalar`]; the
//! aliases below fix it to arbitrary-precision rationals.

pub mod cone;
pub mod curves;
pub mod fixtures;
pub mod linalg;
pub mod mg;
pub mod moduli;
pub mod scalar;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use cone::cert::Certificate;
pub use cone::{Cone, ConeError};
pub use linalg::Matrix;
pub use scalar::Scalar;

pub type Rational = BigRational;
pub type RatVector = Vec<Rational>;
pub type RatMatrix = Matrix<Rational>;
pub type RatCone = Cone<Rational>;
pub type RatCertificate = Certificate<Rational>;

/// `n/d` as a [`Rational`].
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer vector as a [`RatVector`].
pub fn qv(v: &[i64]) -> RatVector {
    v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
}
