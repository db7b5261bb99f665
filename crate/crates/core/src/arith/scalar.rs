use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Gaussian rational `re + i*im`.
pub type CRat = Complex<Rat>;

/// Commutative ring with unit containing the rationals.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;

    /// Multiplicative inverse, if the element is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn from_int(k: i64) -> Self {
        Self::from_rat(&int(k))
    }
}

/// Coefficients that know how to print themselves in front of a monomial.
pub trait Coeff: Ring {
    /// Returns `(negative, |self| as text)`. The text must be safe to place
    /// directly before `*monomial`.
    fn sign_and_abs(&self) -> (bool, String);
}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for Rat {
    fn sign_and_abs(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl Ring for CRat {
    fn from_rat(r: &Rat) -> Self {
        Complex::new(r.clone(), Rat::zero())
    }

    fn try_inv(&self) -> Option<Self> {
        let norm = self.norm_sqr();
        if norm.is_zero() {
            None
        } else {
            Some(Complex::new(&self.re / &norm, -&self.im / &norm))
        }
    }
}

impl Coeff for CRat {
    fn sign_and_abs(&self) -> (bool, String) {
        if self.im.is_zero() {
            return self.re.sign_and_abs();
        }
        if self.re.is_zero() {
            let (neg, body) = self.im.sign_and_abs();
            let body = if body == "1" { "i".to_string() } else { format!("{body}*i") };
            return (neg, body);
        }
        (false, format!("({})", fmt_crat(self)))
    }
}

pub fn int(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// `num/den` reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn crat(re: Rat, im: Rat) -> CRat {
    Complex::new(re, im)
}

pub fn i_unit() -> CRat {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn real(r: Rat) -> CRat {
    Complex::new(r, Rat::zero())
}

pub fn factorial(k: u32) -> Rat {
    Rat::from_integer((1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j)))
}

pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `a + b*i`, `a`, `b*i`, or `a - b*i`.
pub fn fmt_crat(z: &CRat) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}*i", z.im),
        (false, false) => {
            if z.im.is_negative() {
                format!("{} - {}*i", z.re, -&z.im)
            } else {
                format!("{} + {}*i", z.re, z.im)
            }
        }
    }
}

/// Joins signed terms as `a - b + c`, printing `0` for an empty sum.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, body) in terms {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders `coeff*monomial`, dropping a unit coefficient.
pub(crate) fn coeff_times<K: Coeff>(c: &K, monomial: &str) -> (bool, String) {
    let (neg, body) = c.sign_and_abs();
    if monomial.is_empty() {
        (neg, body)
    } else if body == "1" {
        (neg, monomial.to_string())
    } else {
        (neg, format!("{body}*{monomial}"))
    }
}

/// Formats `name^e`, or `name` for `e == 1`.
pub(crate) fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(*r.denom(), BigInt::from(2));
        assert_eq!(rat(0, 7), Rat::zero());
        assert_eq!(*rat(0, 7).denom(), BigInt::one());
    }

    #[test]
    fn gaussian_inverse_and_norm() {
        let z = crat(rat(1, 2), rat(-3, 1));
        let inv = z.try_inv().unwrap();
        assert_eq!(&z * &inv, CRat::one());
        let norm = &z * z.conj();
        assert!(norm.im.is_zero());
        assert_eq!(z.conj().conj(), z);
        assert!(CRat::zero().try_inv().is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(6, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_crat(&crat(int(1), int(-2))), "1 - 2*i");
        assert_eq!(fmt_crat(&i_unit()), "1*i");
        assert_eq!(fmt_crat(&real(rat(1, 3))), "1/3");
    }
}
