use super::{omega, AltForm, HermitianForm};

/// `a + theta ^ b` where `theta` is an extra odd generator with
/// `d theta = omega`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedForm {
    pub even: AltForm,
    pub theta: AltForm,
}

impl ExtendedForm {
    pub fn new(even: AltForm, theta: AltForm) -> Self {
        assert_eq!(even.n(), theta.n());
        Self { even, theta }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(AltForm::zero(n), AltForm::zero(n))
    }

    pub fn from_form(a: AltForm) -> Self {
        let n = a.n();
        Self::new(a, AltForm::zero(n))
    }

    /// `theta` itself.
    pub fn theta_gen(n: usize) -> Self {
        Self::new(AltForm::zero(n), AltForm::one(n))
    }

    /// `d theta = omega`.
    pub fn d_theta(h: &HermitianForm) -> Self {
        Self::from_form(omega(h))
    }

    pub fn n(&self) -> usize {
        self.even.n()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.theta.is_zero()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        Self::new(self.even.add_ref(&other.even), self.theta.add_ref(&other.theta))
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        Self::new(self.even.sub_ref(&other.even), self.theta.sub_ref(&other.theta))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.even.conj(), self.theta.conj())
    }

    pub fn scale(&self, k: &crate::arith::CRat) -> Self {
        Self::new(self.even.scale(k), self.theta.scale(k))
    }

    /// `(a + th b)(a' + th b') = a a' + th (inv(a) b' + b a')`, since
    /// `a th = th inv(a)` for the grade involution `inv`.
    pub fn wedge(&self, other: &Self) -> Self {
        Self::new(
            self.even.wedge(&other.even),
            self.even.grade_involution().wedge(&other.theta).add_ref(&self.theta.wedge(&other.even)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sample::random_form, Slot};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn theta_squares_to_zero_and_anticommutes() {
        let n = 2;
        let th = ExtendedForm::theta_gen(n);
        assert!(th.wedge(&th).is_zero());
        let x = ExtendedForm::from_form(AltForm::theta(n, Slot::Holo(0)));
        assert_eq!(x.wedge(&th), th.wedge(&x).scale(&-crate::arith::real(crate::arith::int(1))));
    }

    #[test]
    fn associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let n = 2;
        let mk = |rng: &mut ChaCha8Rng, p, q| ExtendedForm::new(random_form(rng, n, p, q), random_form(rng, n, q, p));
        let (a, b, c) = (mk(&mut rng, 1, 0), mk(&mut rng, 1, 1), mk(&mut rng, 0, 1));
        assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }
}
