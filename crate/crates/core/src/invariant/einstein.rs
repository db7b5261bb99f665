//! Rewriting characteristic forms of the renormalized curvature in terms of
//! the ordinary curvature under an Einstein normalization.
//!
//! Each power sum is replaced by
//!
//! ```text
//! T~_m = sum_{l=0}^{m-2} (-1)^l C(m,l) k^-l c1^l T_{m-l} + (-1)^(m-1) (m-1) k^-(m-1) c1^m
//! ```
//!
//! with `k = n + 2` on a domain and `k = n + 1` on the base of a circle bundle.
//! The base constant comes from the Bochner relation: the curvature term
//! `-(1/(n+1)) (h g + g h)` plays the role of the `(n+2)`-dimensional identity
//! block, and `Ric = -g` turns its trace form into `-c1`.

use serde::{Deserialize, Serialize};

use crate::arith::{binomial, Rat, RatFunc, Ring};

use super::{to_chern_basis, to_power_basis, Basis, InvariantError, InvariantPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Kähler-Einstein metric on a domain, `Ric = -(n+2) g`.
    Domain,
    /// Kähler-Einstein base of a circle bundle, `Ric = -g`.
    Base,
}

impl Mode {
    /// The constant `k` of the transform as an offset from `n`.
    pub fn offset(self) -> i64 {
        match self {
            Mode::Domain => 2,
            Mode::Base => 1,
        }
    }
}

/// `T~_m` in the power-sum basis (`c1 = T1`).
pub fn t_tilde<K: Ring>(m: u32, kappa: &K, maxgen: u32) -> InvariantPoly<K> {
    let maxgen = maxgen.max(m);
    let t = |k: u32| InvariantPoly::<K>::generator(Basis::PowerSum, maxgen, k);
    let kinv = kappa.try_inv().expect("transform constant must be invertible");
    let kinv_pow = |l: u32| (0..l).fold(K::one(), |acc, _| acc * kinv.clone());
    let sign = |l: u32| if l % 2 == 0 { K::one() } else { -K::one() };
    let mut out = InvariantPoly::zero(Basis::PowerSum, maxgen);
    for l in 0..m.saturating_sub(1) {
        let c = sign(l) * K::from_rat(&binomial(m, l)) * kinv_pow(l);
        out = out.add_ref(&t(1).pow(l).mul_ref(&t(m - l)).scale(&c));
    }
    if m >= 1 {
        let c = sign(m - 1) * K::from_int(m as i64 - 1) * kinv_pow(m - 1);
        out = out.add_ref(&t(1).pow(m).scale(&c));
    }
    out
}

/// Applies `T_m -> T~_m` multiplicatively with the given constant and
/// returns the result in the Chern basis.
pub fn einstein_transform_with<K: Ring>(phi: &InvariantPoly<K>, kappa: &K) -> InvariantPoly<K> {
    let p = to_power_basis(phi);
    let maxgen = p.maxgen().max(1);
    let images: Vec<_> = (1..=maxgen).map(|m| t_tilde(m, kappa, maxgen)).collect();
    to_chern_basis(&p.substitute_generators(&images))
}

/// Numeric-dimension transform.
pub fn einstein_transform(phi: &InvariantPoly, n: i64, mode: Mode) -> Result<InvariantPoly, InvariantError> {
    if n < 1 {
        return Err(InvariantError::InvalidDimension(n));
    }
    Ok(einstein_transform_with(phi, &Rat::from_int(n + mode.offset())))
}

/// Transform with coefficients rational in a symbolic dimension `n`.
pub fn einstein_transform_symbolic(phi: &InvariantPoly, mode: Mode) -> InvariantPoly<RatFunc> {
    let lifted = phi.map_coeffs(RatFunc::from_rat);
    einstein_transform_with(&lifted, &RatFunc::n_plus(mode.offset()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::invariant::parse_phi;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Expands `tr(i(Psi + s K))^m` word by word, where `iK` acts as `w` times
    /// the identity of a `trace`-dimensional space, then sets `w` from `c1`.
    /// Returns the power-sum polynomial in `T_j = T_j(Psi)`.
    fn word_oracle<K: Ring>(m: u32, scale: &K, trace: &K, w_from_c1: &K, maxgen: u32) -> InvariantPoly<K> {
        let t = |k: u32| InvariantPoly::<K>::generator(Basis::PowerSum, maxgen, k);
        let w = t(1).scale(w_from_c1);
        let mut out = InvariantPoly::zero(Basis::PowerSum, maxgen);
        for word in 0u32..(1 << m) {
            let ks = word.count_ones();
            let psis = m - ks;
            let sw = (0..ks).fold(InvariantPoly::constant(Basis::PowerSum, maxgen, K::one()), |acc, _| {
                acc.mul_ref(&w.scale(scale))
            });
            let term = if psis == 0 {
                sw.scale(trace)
            } else {
                sw.mul_ref(&t(psis))
            };
            out = out.add_ref(&term);
        }
        out
    }

    #[test]
    fn t1_vanishes() {
        for mode in [Mode::Domain, Mode::Base] {
            for n in 1..=6 {
                let t1 = parse_phi("T1", 1).unwrap();
                assert!(einstein_transform(&t1, n, mode).unwrap().is_zero());
            }
            assert!(einstein_transform_symbolic(&parse_phi("T1", 1).unwrap(), mode).is_zero());
        }
    }

    #[test]
    fn c3_domain_symbolic() {
        let c3 = parse_phi("c3", 3).unwrap();
        let got = einstein_transform_symbolic(&c3, Mode::Domain);
        assert_eq!(got.to_string(), "c3 - n/(n + 2)*c1*c2 + (n^2 + n)/(3*(n + 2)^2)*c1^3");
        for n in 1..=8 {
            let numeric = einstein_transform(&c3, n, Mode::Domain).unwrap();
            let k = int(n + 2);
            let expected = parse_phi("c3", 3)
                .unwrap()
                .sub_ref(&parse_phi("c1*c2", 3).unwrap().scale(&(int(n) / &k)))
                .add_ref(&parse_phi("c1^3", 3).unwrap().scale(&(int(n * (n + 1)) / (int(3) * &k * &k))));
            assert_eq!(numeric, expected);
        }
    }

    #[test]
    fn base_mode_values() {
        let t2 = parse_phi("T2", 2).unwrap();
        let got = einstein_transform_symbolic(&t2, Mode::Base);
        assert_eq!(got.to_string(), "-2*c2 + n/(n + 1)*c1^2");
        let c2 = einstein_transform_symbolic(&parse_phi("c2", 2).unwrap(), Mode::Base);
        assert_eq!(c2.to_string(), "c2 - n/(2*(n + 1))*c1^2");
        let numeric = einstein_transform(&parse_phi("c2", 2).unwrap(), 2, Mode::Base).unwrap();
        assert_eq!(numeric.to_string(), "c2 - 1/3*c1^2");
    }

    #[test]
    fn closed_form_matches_word_oracle() {
        for n in 1..=8i64 {
            for m in 1..=8u32 {
                // domain: identity block of size n+2, w = -c1/(n+2)
                let k = int(n + 2);
                let oracle = word_oracle(m, &int(1), &k, &(int(-1) / &k), 8);
                assert_eq!(t_tilde(m, &k, 8), oracle, "domain n={n} m={m}");
                // base: block scaled by 1/(n+1) of size n+1, w = -c1
                let k = int(n + 1);
                let oracle = word_oracle(m, &(int(1) / &k), &k, &int(-1), 8);
                assert_eq!(t_tilde(m, &k, 8), oracle, "base n={n} m={m}");
            }
        }
        for m in 1..=6u32 {
            let k = RatFunc::n_plus(1);
            let oracle = word_oracle(m, &k.inv().unwrap(), &k, &RatFunc::from_int(-1), 6);
            assert_eq!(t_tilde(m, &k, 6), oracle);
        }
    }

    fn random_phi(rng: &mut ChaCha8Rng, deg: u32, maxgen: u32) -> InvariantPoly {
        let mut out = InvariantPoly::zero(Basis::Chern, maxgen);
        for _ in 0..3 {
            let mut left = deg;
            let mut mono = InvariantPoly::constant(Basis::Chern, maxgen, rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
            while left > 0 {
                let k = rng.gen_range(1..=left.min(maxgen));
                mono = mono.mul_ref(&InvariantPoly::generator(Basis::Chern, maxgen, k));
                left -= k;
            }
            out = out.add_ref(&mono);
        }
        out
    }

    #[test]
    fn multiplicative_and_kills_t1_multiples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..30 {
            let n = rng.gen_range(1..=5);
            let mode = if trial % 2 == 0 { Mode::Domain } else { Mode::Base };
            let (da, db) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            let a = random_phi(&mut rng, da, 4);
            let b = random_phi(&mut rng, db, 4);
            let ta = einstein_transform(&a, n, mode).unwrap();
            let tb = einstein_transform(&b, n, mode).unwrap();
            assert_eq!(einstein_transform(&a.mul_ref(&b), n, mode).unwrap(), ta.mul_ref(&tb));
            let c1 = InvariantPoly::generator(Basis::Chern, 4, 1);
            assert!(einstein_transform(&c1.mul_ref(&a), n, mode).unwrap().is_zero());
            // difference is a multiple of c1
            assert_eq!(ta.sub_ref(&to_chern_basis(&a)).drop_first_generator(), InvariantPoly::zero(Basis::Chern, 4));
        }
    }

    #[test]
    fn constants_are_fixed() {
        let k = InvariantPoly::constant(Basis::Chern, 2, rat(7, 3));
        assert_eq!(einstein_transform(&k, 3, Mode::Base).unwrap(), k);
        assert_eq!(einstein_transform(&k, 0, Mode::Base), Err(InvariantError::InvalidDimension(0)));
    }
}
