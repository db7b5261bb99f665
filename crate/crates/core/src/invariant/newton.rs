//! Newton's identities between elementary symmetric functions `c_k` and
//! power sums `T_k`.

use crate::arith::{rat, Ring};

use super::{Basis, InvariantPoly};

/// `T_1, ..., T_k` written in Chern classes.
fn power_sums<K: Ring>(k: u32, maxgen: u32) -> Vec<InvariantPoly<K>> {
    let maxgen = maxgen.max(k);
    let c = |i: u32| InvariantPoly::<K>::generator(Basis::Chern, maxgen, i);
    let mut p: Vec<InvariantPoly<K>> = Vec::with_capacity(k as usize);
    for j in 1..=k {
        // p_j = sum_{i<j} (-1)^(i-1) e_i p_{j-i} + (-1)^(j-1) j e_j
        let mut pj = c(j).scale(&K::from_int(if j % 2 == 1 { j as i64 } else { -(j as i64) }));
        for i in 1..j {
            let term = c(i).mul_ref(&p[(j - i - 1) as usize]);
            pj = if i % 2 == 1 { pj.add_ref(&term) } else { pj.sub_ref(&term) };
        }
        p.push(pj);
    }
    p
}

/// `c_1, ..., c_k` written in power sums.
fn elementaries<K: Ring>(k: u32, maxgen: u32) -> Vec<InvariantPoly<K>> {
    let maxgen = maxgen.max(k);
    let t = |i: u32| InvariantPoly::<K>::generator(Basis::PowerSum, maxgen, i);
    let mut e = vec![InvariantPoly::<K>::constant(Basis::PowerSum, maxgen, K::one())];
    for j in 1..=k {
        // e_j = (1/j) sum_{i=1}^j (-1)^(i-1) e_{j-i} p_i
        let mut ej = InvariantPoly::zero(Basis::PowerSum, maxgen);
        for i in 1..=j {
            let term = e[(j - i) as usize].mul_ref(&t(i));
            ej = if i % 2 == 1 { ej.add_ref(&term) } else { ej.sub_ref(&term) };
        }
        e.push(ej.scale(&K::from_rat(&rat(1, j as i64))));
    }
    e.remove(0);
    e
}

/// `T_k` in the Chern basis.
pub fn power_sum_in_cherns<K: Ring>(k: u32, maxgen: u32) -> InvariantPoly<K> {
    power_sums::<K>(k, maxgen).pop().expect("k >= 1")
}

/// `c_k` in the power-sum basis.
pub fn chern_in_power_sums<K: Ring>(k: u32, maxgen: u32) -> InvariantPoly<K> {
    elementaries::<K>(k, maxgen).pop().expect("k >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rat};
    use crate::invariant::{parse_phi, to_chern_basis, to_power_basis};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn elementary_of(xs: &[Rat], k: usize) -> Rat {
        // coefficient extraction from prod (1 + x_i t)
        let mut e = vec![int(0); xs.len() + 1];
        e[0] = int(1);
        for x in xs {
            for j in (1..e.len()).rev() {
                let prev = e[j - 1].clone();
                e[j] += prev * x;
            }
        }
        e.get(k).cloned().unwrap_or_else(|| int(0))
    }

    fn power_of(xs: &[Rat], k: u32) -> Rat {
        xs.iter().fold(int(0), |acc, x| acc + num_traits::pow(x.clone(), k as usize))
    }

    #[test]
    fn small_cases() {
        assert_eq!(power_sum_in_cherns::<Rat>(1, 1), parse_phi("c1", 1).unwrap());
        assert_eq!(power_sum_in_cherns::<Rat>(2, 2), parse_phi("c1^2 - 2*c2", 2).unwrap());
        assert_eq!(power_sum_in_cherns::<Rat>(3, 3), parse_phi("c1^3 - 3*c1*c2 + 3*c3", 3).unwrap());
        let c2 = chern_in_power_sums::<Rat>(2, 2);
        assert_eq!(c2.to_string(), "-1/2*T2 + 1/2*T1^2");
    }

    #[test]
    fn numeric_newton_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let k = rng.gen_range(1..=6usize);
            let xs: Vec<Rat> = (0..k).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
            for j in 1..=6u32 {
                let via_e = power_sum_in_cherns::<Rat>(j, 6).eval_with(|c| c.clone(), |i| elementary_of(&xs, i as usize));
                assert_eq!(via_e, power_of(&xs, j));
                let via_p = chern_in_power_sums::<Rat>(j, 6).eval_with(|c| c.clone(), |i| power_of(&xs, i));
                assert_eq!(via_p, elementary_of(&xs, j as usize));
            }
        }
    }

    #[test]
    fn round_trips() {
        for k in 1..=8 {
            let c = InvariantPoly::<Rat>::generator(Basis::Chern, 8, k);
            assert_eq!(to_chern_basis(&to_power_basis(&c)), c);
            let t = InvariantPoly::<Rat>::generator(Basis::PowerSum, 8, k);
            assert_eq!(to_power_basis(&to_chern_basis(&t)), t);
        }
    }
}
