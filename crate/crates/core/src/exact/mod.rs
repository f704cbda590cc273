//! Exact arithmetic: big rationals, the field Q(sqrt(-3)) and integer matrix
//! algorithms (determinant, Smith and Hermite forms, kernels, linear solving).
//!
//! Nothing in here touches floating point.

mod matrix;
mod quadext;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use quadext::QuadExt;
pub use snf::{hermite_row_basis, integer_kernel, smith_normal_form, SmithForm};
pub use solve::{rational_signature, solve_exact, Signature, Solution};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number (always reduced, positive denominator).
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Reduce `x` into `[0, m)`.
pub fn rat_mod(x: &Rational, m: &Rational) -> Rational {
    let q = (x / m).floor();
    x - q * m
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn is_even_integer(x: &Rational) -> bool {
    is_integer(x) && x.numer().is_even()
}

/// Least common multiple of the denominators of `v`.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Render a rational as `"num/den"`, or `"num"` for integers.
pub fn fmt_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render a rational combination `sum c_i * label_i` compactly, e.g. `1/2(C1 + C3) - E2`.
pub fn fmt_combination(coeffs: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            out.push_str(&fmt_rational(&a));
            out.push('*');
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_and_frac() {
        assert_eq!(rat_mod(&rat(-1, 2), &rat(2, 1)), rat(3, 2));
        assert_eq!(rat_mod(&rat(7, 3), &rat(2, 1)), rat(1, 3));
        assert_eq!(frac(&rat(-1, 4)), rat(3, 4));
        assert!(is_even_integer(&rat(-4, 1)));
        assert!(!is_even_integer(&rat(3, 1)));
        assert!(!is_even_integer(&rat(1, 2)));
    }

    #[test]
    fn combination_rendering() {
        let labels: Vec<String> = ["C1", "C2", "E1"].iter().map(|s| s.to_string()).collect();
        let c = vec![rat(1, 2), rat(0, 1), rat(-3, 4)];
        assert_eq!(fmt_combination(&c, &labels), "1/2*C1 - 3/4*E1");
        assert_eq!(fmt_combination(&vec![rat(0, 1); 3], &labels), "0");
    }
}
