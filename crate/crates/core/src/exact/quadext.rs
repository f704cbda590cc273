use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_rational, rat, Rational};

/// An element `a + b*sqrt(-3)` of the imaginary quadratic field Q(sqrt(-3)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `sqrt(-3)`.
    pub fn sqrt_m3() -> Self {
        QuadExt { a: Rational::zero(), b: Rational::one() }
    }

    /// The primitive sixth root of unity `exp(2*pi*i/6) = (1 + sqrt(-3))/2`.
    pub fn zeta6() -> Self {
        QuadExt { a: rat(1, 2), b: rat(1, 2) }
    }

    /// The primitive cube root of unity `exp(2*pi*i/3) = (-1 + sqrt(-3))/2`.
    pub fn zeta3() -> Self {
        QuadExt { a: rat(-1, 2), b: rat(1, 2) }
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 + 3 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + rat(3, 1) * &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadExt { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("zero has no negative powers").pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let sign = if self.b < Rational::zero() { "-" } else { "+" };
        let abs_b = if self.b < Rational::zero() { -self.b.clone() } else { self.b.clone() };
        if self.a.is_zero() {
            write!(f, "{}{}*sqrt(-3)", if sign == "-" { "-" } else { "" }, fmt_rational(&abs_b))
        } else {
            write!(f, "{} {} {}*sqrt(-3)", fmt_rational(&self.a), sign, fmt_rational(&abs_b))
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        // (a + b s)(c + d s) with s^2 = -3
        QuadExt {
            a: &self.a * &o.a - rat(3, 1) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, o: &QuadExt) -> QuadExt {
        self * &o.inv().expect("division by zero in Q(sqrt(-3))")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Mul<Rational> for QuadExt {
    type Output = QuadExt;
    fn mul(self, k: Rational) -> QuadExt {
        QuadExt { a: self.a * &k, b: self.b * k }
    }
}

impl std::iter::Sum for QuadExt {
    fn sum<I: Iterator<Item = QuadExt>>(iter: I) -> QuadExt {
        iter.fold(QuadExt::zero(), |acc, x| acc + x)
    }
}
