//! Gaussian rationals: complex numbers with rational real and imaginary
//! parts, stored in lowest terms. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// An exact complex rational `re + im*I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn minus_i() -> Self {
        GaussRat::new(BigRational::zero(), -BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real rational. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// A real Gaussian rational.
    pub fn from_re(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    /// `re + im*I` from integer parts.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussRat::new(
            BigRational::from(BigInt::from(re)),
            BigRational::from(BigInt::from(im)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// Exact reciprocal; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRat::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// True iff the leading sign is negative (real part negative, or zero
    /// real part with negative imaginary part). Used for canonical printing.
    pub fn is_sign_negative(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, other: Self) -> GaussRat {
        GaussRat::new(&self.re + &other.re, &self.im + &other.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, other: Self) -> GaussRat {
        GaussRat::new(&self.re - &other.re, &self.im - &other.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, other: Self) -> GaussRat {
        GaussRat::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussRat {
    /// Renders in the expression grammar: `3/2`, `-I`, `1/2*I`, `1 + 2*I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
            if im.is_one() {
                write!(f, "I")
            } else if (-im).is_one() {
                write!(f, "-I")
            } else {
                write!(f, "{im}*I")
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            imag(f, &self.im)
        } else if self.im.is_negative() {
            write!(f, "{} - ", self.re)?;
            imag(f, &-self.im.clone())
        } else {
            write!(f, "{} + ", self.re)?;
            imag(f, &self.im)
        }
    }
}
