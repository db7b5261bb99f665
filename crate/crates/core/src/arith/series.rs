use std::fmt;

use num_traits::Zero;

use super::scalar::{coeff_times, join_signed, power, Coeff, Ring};
use super::ArithError;

/// Element of `K[x] / (x^(order+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<K> {
    var: String,
    order: usize,
    coeffs: Vec<K>,
}

impl<K: Ring> TruncatedSeries<K> {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(var: &str, order: usize, coeffs: impl IntoIterator<Item = K>) -> Self {
        let mut coeffs: Vec<K> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, K::zero());
        Self { var: var.to_string(), order, coeffs }
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::new(var, order, [K::one()])
    }

    /// `1 + a*x`
    pub fn linear(var: &str, order: usize, a: K) -> Self {
        Self::new(var, order, [K::one(), a])
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.var == other.var && self.order == other.order,
            "series over different truncated rings"
        );
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone());
        Self::new(&self.var, self.order, coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        Self::new(&self.var, self.order, self.coeffs.iter().map(|c| -c.clone()))
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = vec![K::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(&self.var, self.order, out)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(&self.var, self.order, self.coeffs.iter().map(|c| c.clone() * k.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.var, self.order);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse in the truncated ring; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let a0_inv = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| ArithError::NonUnitConstantTerm(format!("{:?}", self.coeffs[0])))?;
        let mut inv: Vec<K> = Vec::with_capacity(self.order + 1);
        inv.push(a0_inv.clone());
        for k in 1..=self.order {
            let mut acc = K::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-(acc * a0_inv.clone()));
        }
        Ok(Self::new(&self.var, self.order, inv))
    }
}

impl<K: Coeff> fmt::Display for TruncatedSeries<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mono = if i == 0 { String::new() } else { power(&self.var, i as u32) };
            coeff_times(c, &mono)
        });
        f.write_str(&join_signed(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, MultiPoly, Rat};
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn geometric_inverse_with_symbolic_coefficient() {
        let d = MultiPoly::<Rat>::var("d");
        let s = TruncatedSeries::linear("x", 2, d.clone());
        let inv = s.inverse().unwrap();
        let expected = TruncatedSeries::new("x", 2, [MultiPoly::one(), -d.clone(), d.pow(2)]);
        assert_eq!(inv, expected);
        assert!(s.mul_ref(&inv).is_one());
    }

    #[test]
    fn inverse_of_one_and_of_two_plus_x() {
        for order in 0..5 {
            let one = TruncatedSeries::<Rat>::one("x", order);
            assert_eq!(one.inverse().unwrap(), one);
        }
        let s = TruncatedSeries::new("x", 1, [int(2), int(1)]);
        assert_eq!(s.inverse().unwrap(), TruncatedSeries::new("x", 1, [rat(1, 2), rat(-1, 4)]));
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let s = TruncatedSeries::new("x", 3, [int(0), int(1)]);
        assert!(matches!(s.inverse(), Err(ArithError::NonUnitConstantTerm(_))));
        let d = MultiPoly::<Rat>::var("d");
        let s = TruncatedSeries::new("x", 2, [d, MultiPoly::one()]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn binomial_powers() {
        let s = TruncatedSeries::linear("x", 2, int(1));
        assert_eq!(s.pow(6), TruncatedSeries::new("x", 2, [int(1), int(6), int(15)]));
        assert!(s.pow(0).is_one());
        let s = TruncatedSeries::linear("x", 1, int(1));
        assert_eq!(s.pow(2), TruncatedSeries::new("x", 1, [int(1), int(2)]));
        assert_eq!(TruncatedSeries::linear("x", 2, int(1)).pow(6).to_string(), "1 + 6*x + 15*x^2");
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rat>> {
        (
            (1i64..=7, prop::bool::ANY, 1i64..=4),
            prop::collection::vec((-6i64..=6, 1i64..=4), order),
        )
            .prop_map(move |((a, neg, b), rest)| {
                let a0 = rat(if neg { -a } else { a }, b);
                let coeffs = std::iter::once(a0).chain(rest.into_iter().map(|(n, d)| rat(n, d)));
                TruncatedSeries::new("x", order, coeffs)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn inverse_round_trip(s in (0usize..=8).prop_flat_map(arb_unit_series)) {
            let inv = s.inverse().unwrap();
            prop_assert!(s.mul_ref(&inv).is_one());
            prop_assert!(inv.mul_ref(&s).is_one());
        }
    }
}
