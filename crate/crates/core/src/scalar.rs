//! The exact scalar abstraction the linear algebra and cone code is generic over.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact, totally ordered field element.
///
/// Only exact types qualify: every certificate in this crate is checked by
/// equality, so rounding arithmetic would silently break verification.
pub trait Scalar:
    Num + Signed + Clone + Ord + Debug + Display + Send + Sync + 'static
{
    fn from_int(x: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_integer(&self) -> bool;

    /// Parses `"a"` or `"a/b"`.
    fn parse_exact(s: &str) -> Option<Self>;

    /// The positive factor that turns `v` into a coprime integer vector, or
    /// `None` for the zero vector. Direction is preserved.
    fn primitive_factor(v: &[Self]) -> Option<Self>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + FromPrimitive + FromStr + Send + Sync + 'static,
{
    fn from_int(x: i64) -> Self {
        Ratio::from_integer(I::from_i64(x).expect("integer out of range for scalar type"))
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<I>().ok().map(Ratio::from_integer),
            Some((n, d)) => {
                let n = n.trim().parse::<I>().ok()?;
                let d = d.trim().parse::<I>().ok()?;
                if d.is_zero() {
                    None
                } else {
                    Some(Ratio::new(n, d))
                }
            }
        }
    }

    fn primitive_factor(v: &[Self]) -> Option<Self> {
        let lcm = v.iter().fold(I::one(), |acc, x| acc.lcm(x.denom()));
        let mut g = I::zero();
        for x in v {
            let scaled = x.numer().clone() * (lcm.clone() / x.denom().clone());
            g = g.gcd(&scaled);
        }
        if g.is_zero() {
            return None;
        }
        Some(Ratio::new(lcm, g))
    }
}

/// Convenience: an integer as a scalar.
pub fn int<T: Scalar>(x: i64) -> T {
    T::from_int(x)
}

/// Convenience: `num/den` as a scalar.
pub fn frac<T: Scalar>(num: i64, den: i64) -> T {
    T::from_frac(num, den)
}
