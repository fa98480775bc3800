//! Exact scalar traits.
//!
//! [`ExactDomain`] is what fraction-free elimination needs: a commutative ring
//! whose divisions are only ever requested when they are exact.
//! [`Coefficient`] is a field that polynomials and matrices are built over; it
//! knows how to clear denominators from a row so that elimination can run in
//! the associated integral domain.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{GaussianInteger, GaussianRational, Integer, Rational};

pub trait ExactDomain: Clone + PartialEq + Debug + Zero + One + Send + Sync {
    /// `(a * b - c * d) / divisor`, where the caller guarantees the division is exact.
    fn det2_div(a: &Self, b: &Self, c: &Self, d: &Self, divisor: &Self) -> Self;
}

macro_rules! impl_exact_domain {
    ($($t:ty),*) => {$(
        impl ExactDomain for $t {
            #[inline]
            fn det2_div(a: &Self, b: &Self, c: &Self, d: &Self, divisor: &Self) -> Self {
                let num = a * b - c * d;
                if divisor.is_one() {
                    num
                } else {
                    num / divisor
                }
            }
        }
    )*};
}

impl_exact_domain!(Integer, GaussianInteger, Rational, GaussianRational);

/// Exact coefficient field.
pub trait Coefficient:
    ExactDomain + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    /// Integral domain reached by clearing denominators.
    type Cleared: ExactDomain;

    /// Scales `row` by a common nonzero factor so every entry is integral.
    fn clear_denominators(row: &[Self]) -> Vec<Self::Cleared>;

    fn conj(&self) -> Self;

    fn from_rational(r: Rational) -> Self;
}

fn denominator_lcm<'a>(dens: impl Iterator<Item = &'a Integer>) -> Integer {
    dens.fold(Integer::one(), |acc, d| acc.lcm(d))
}

fn scale_to_integer(r: &Rational, lcm: &Integer) -> Integer {
    r.numer() * (lcm / r.denom())
}

impl Coefficient for Rational {
    type Cleared = Integer;

    fn clear_denominators(row: &[Self]) -> Vec<Integer> {
        let lcm = denominator_lcm(row.iter().map(|r| r.denom()));
        row.iter().map(|r| scale_to_integer(r, &lcm)).collect()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Coefficient for GaussianRational {
    type Cleared = GaussianInteger;

    fn clear_denominators(row: &[Self]) -> Vec<GaussianInteger> {
        let lcm = denominator_lcm(row.iter().flat_map(|z| [z.re.denom(), z.im.denom()]));
        row.iter()
            .map(|z| Complex::new(scale_to_integer(&z.re, &lcm), scale_to_integer(&z.im, &lcm)))
            .collect()
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }
}

/// Sign of a real rational, as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// Gaussian rational with integer real part and zero imaginary part.
pub fn gaussian_int(re: i64) -> GaussianRational {
    Complex::new(Rational::from_integer(re.into()), Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clearing_rational_row() {
        let row = vec![rational(1, 2), rational(-2, 3), rational(0, 1)];
        assert_eq!(
            Rational::clear_denominators(&row),
            vec![Integer::from(3), Integer::from(-4), Integer::from(0)]
        );
    }

    #[test]
    fn clearing_gaussian_row() {
        let row = vec![gaussian(rational(1, 2), rational(1, 3)), gaussian_int(2)];
        let cleared = GaussianRational::clear_denominators(&row);
        assert_eq!(cleared[0], Complex::new(Integer::from(3), Integer::from(2)));
        assert_eq!(cleared[1], Complex::new(Integer::from(12), Integer::from(0)));
    }

    #[test]
    fn gaussian_exact_division() {
        // (3 + 4i)(1 - 2i) = 11 - 2i
        let a = GaussianInteger::new(3.into(), 4.into());
        let b = GaussianInteger::new(1.into(), (-2).into());
        let prod = &a * &b;
        let q = GaussianInteger::det2_div(&prod, &GaussianInteger::one(), &GaussianInteger::zero(), &a, &b);
        assert_eq!(q, a);
    }
}
