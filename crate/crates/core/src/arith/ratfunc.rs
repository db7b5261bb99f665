use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{int, join_signed, power, Coeff, Rat, Ring};

/// Dense univariate polynomial over `Rat` in the symbolic dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    /// Ascending coefficients, no trailing zeros.
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable `n`.
    pub fn n() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    /// `n + a`
    pub fn n_plus(a: i64) -> Self {
        Self::new(vec![int(a), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg_ref(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Splits off a positive rational content so that the remaining
    /// polynomial has coprime integer coefficients and positive leading term.
    fn primitive_part(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let lcm_den = self.coeffs.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd_num = self
            .coeffs
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm_den / c.denom()))));
        let mut content = Rat::new(gcd_num, lcm_den);
        if self.leading().is_negative() {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    /// Detects `(n + a)^k` for monic polynomials of degree `k >= 1`.
    fn as_linear_power(&self) -> Option<(Rat, usize)> {
        let k = self.degree()?;
        if k == 0 || !self.leading().is_one() {
            return None;
        }
        let a = &self.coeffs[k - 1] / int(k as i64);
        let base = Self::new(vec![a.clone(), Rat::one()]);
        let mut p = Self::constant(Rat::one());
        for _ in 0..k {
            p = p.mul_ref(&base);
        }
        (p == *self).then_some((a, k))
    }

    fn fmt_sum(&self) -> String {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                _ => power("n", i as u32),
            };
            super::scalar::coeff_times(c, &mono)
        });
        join_signed(terms)
    }

    fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_sum())
    }
}

/// Rational function of `n`: coprime numerator and monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::constant(Rat::one()) }
    }

    pub fn n() -> Self {
        Self::poly(UniPoly::n())
    }

    pub fn n_plus(a: i64) -> Self {
        Self::poly(UniPoly::n_plus(a))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    /// The value as a rational, if `self` does not depend on `n`.
    pub fn as_rat(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.eval(&Rat::zero()))
    }

    /// Value at a numeric `n`; `None` at a pole.
    pub fn eval(&self, n: &Rat) -> Option<Rat> {
        let d = self.den.eval(n);
        (!d.is_zero()).then(|| self.num.eval(n) / d)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add_ref(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul_ref(&other.den).add_ref(&other.num.mul_ref(&self.den)),
            self.den.mul_ref(&other.den),
        )
    }

    pub fn neg_ref(&self) -> Self {
        Self { num: self.num.neg_ref(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        Self::new(self.num.mul_ref(&other.num), self.den.mul_ref(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul_ref(&base))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self { num: UniPoly::new(Vec::new()), den: UniPoly::constant(Rat::one()) }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::poly(UniPoly::constant(Rat::one()))
    }
}

impl Ring for RatFunc {
    fn from_rat(r: &Rat) -> Self {
        Self::poly(UniPoly::constant(r.clone()))
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

crate::impl_ring_ops!([] RatFunc);

impl Coeff for RatFunc {
    fn sign_and_abs(&self) -> (bool, String) {
        if let Some(r) = self.as_rat() {
            return r.sign_and_abs();
        }
        let (num_content, num_prim) = self.num.primitive_part();
        let (den_content, den_prim) = self.den.primitive_part();
        let scalar = num_content / den_content;
        let neg = scalar.is_negative();
        let scalar = scalar.abs();
        let (top_k, bottom_k) = (Rat::from_integer(scalar.numer().clone()), Rat::from_integer(scalar.denom().clone()));

        let mut top = if num_prim.is_monomial() {
            num_prim.fmt_sum()
        } else {
            format!("({})", num_prim.fmt_sum())
        };
        if !top_k.is_one() {
            top = if num_prim.degree() == Some(0) {
                top_k.to_string()
            } else {
                format!("{top_k}*{top}")
            };
        }
        let den_text = if den_prim.degree() == Some(0) {
            String::new()
        } else if let Some((a, k)) = den_prim.as_linear_power() {
            let base = if a.is_zero() {
                "n".to_string()
            } else if a.is_negative() {
                format!("(n - {})", -&a)
            } else {
                format!("(n + {a})")
            };
            power(&base, k as u32)
        } else {
            format!("({})", den_prim.fmt_sum())
        };
        let bottom = match (bottom_k.is_one(), den_text.is_empty()) {
            (true, true) => String::new(),
            (false, true) => bottom_k.to_string(),
            (true, false) => den_text.clone(),
            (false, false) => format!("({bottom_k}*{den_text})"),
        };
        let bottom = if !bottom_k.is_one() || den_text.is_empty() || !den_text.contains('^') {
            bottom
        } else {
            format!("({bottom})")
        };
        let body = if bottom.is_empty() { top } else { format!("{top}/{bottom}") };
        (neg, body)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.sign_and_abs();
        if neg {
            write!(f, "-{body}")
        } else {
            f.write_str(&body)
        }
    }
}
