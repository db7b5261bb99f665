use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, rat, MultiPoly, Rat, TruncatedSeries};
use crate::invariant::{chern_in_power_sums, power_sum_in_cherns, to_chern_basis, to_power_basis, weighted_degree, Basis, InvariantPoly};
use crate::symmetric::{sigma_decompose, SigmaPoly};

use super::{SuiteReport, Tally};

const MAXGEN: u32 = 6;

fn small_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let q = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if !q.is_zero() {
            return q;
        }
    }
}

fn random_invariant<R: Rng>(rng: &mut R, basis: Basis) -> InvariantPoly {
    let terms: Vec<(Vec<u32>, Rat)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let mut e = vec![0u32; MAXGEN as usize];
            let target = rng.gen_range(1..=MAXGEN);
            while weighted_degree(&e) < target {
                let k = rng.gen_range(1..=target - weighted_degree(&e));
                e[k as usize - 1] += 1;
            }
            (e, small_rat(rng))
        })
        .collect();
    InvariantPoly::from_terms(basis, MAXGEN, terms)
}

fn random_sigma<R: Rng>(rng: &mut R) -> SigmaPoly {
    let r = rng.gen_range(1..=4usize);
    let terms: Vec<(Vec<u32>, Rat)> = (0..rng.gen_range(1..=4))
        .map(|_| ((0..r).map(|_| rng.gen_range(0..=2)).collect(), small_rat(rng)))
        .collect();
    SigmaPoly::from_terms(r, terms)
}

fn random_poly<R: Rng>(rng: &mut R) -> MultiPoly {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let terms: Vec<(Vec<u32>, Rat)> = (0..rng.gen_range(1..=4))
        .map(|_| ((0..3).map(|_| rng.gen_range(0..=2)).collect(), small_rat(rng)))
        .collect();
    MultiPoly::from_terms(vars, terms)
}

/// `(e_0, ..., e_k)` of the given roots.
fn elementary(roots: &[Rat]) -> Vec<Rat> {
    let mut e = vec![Rat::one()];
    for x in roots {
        let mut next = e.clone();
        next.push(Rat::zero());
        for j in 1..next.len() {
            next[j] += x * &e[j - 1];
        }
        e = next;
    }
    e
}

pub fn ring_suite(trials: u64, seed: u64) -> SuiteReport {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x71a6);
    for trial in 0..trials {
        let p = random_invariant(&mut rng, Basis::Chern);
        t.check("chern_power_roundtrip", to_chern_basis(&to_power_basis(&p)) == p, || format!("trial {trial}: {p}"));
        let q = random_invariant(&mut rng, Basis::PowerSum);
        t.check("power_chern_roundtrip", to_power_basis(&to_chern_basis(&q)) == q, || format!("trial {trial}: {q}"));

        let roots: Vec<Rat> = (0..rng.gen_range(1..=MAXGEN as usize)).map(|_| small_rat(&mut rng)).collect();
        let mut e = elementary(&roots);
        e.resize(MAXGEN as usize + 1, Rat::zero());
        let p_k = |k: u32| roots.iter().fold(Rat::zero(), |acc, x| acc + x.pow(k as i32));
        for k in 1..=MAXGEN {
            let via_e = power_sum_in_cherns::<Rat>(k, MAXGEN).eval_with(Clone::clone, |j| e[j as usize].clone());
            t.check("newton_power_sums", via_e == p_k(k), || format!("roots {roots:?}, k = {k}"));
            let via_p = chern_in_power_sums::<Rat>(k, MAXGEN).eval_with(Clone::clone, p_k);
            t.check("newton_elementary", via_p == e[k as usize], || format!("roots {roots:?}, k = {k}"));
        }

        let s = random_sigma(&mut rng);
        let back = sigma_decompose(&s.expand(), s.r());
        t.check("sigma_roundtrip", back.as_ref() == Ok(&s), || format!("trial {trial}: {s}"));
        let degrees: Vec<i64> = (0..s.r()).map(|_| rng.gen_range(1..=6)).collect();
        let direct = s.expand().eval_with(Clone::clone, |v| int(degrees[v[1..].parse::<usize>().unwrap() - 1]));
        t.check("sigma_evaluation", s.evaluate(&degrees) == Ok(direct), || format!("{s} at {degrees:?}"));

        let order = rng.gen_range(1..=8usize);
        let coeffs: Vec<Rat> = (0..=order).map(|_| small_rat(&mut rng)).collect();
        let series = TruncatedSeries::new("x", order, coeffs);
        let ok = series.inverse().map(|inv| inv.mul_ref(&series).is_one()).unwrap_or(false);
        t.check("series_inverse", ok, || format!("order {order}: {series}"));

        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let ring_ok = a.mul_ref(&b).mul_ref(&c) == a.mul_ref(&b.mul_ref(&c))
            && a.mul_ref(&b.add_ref(&c)) == a.mul_ref(&b).add_ref(&a.mul_ref(&c))
            && a.mul_ref(&b) == b.mul_ref(&a)
            && a.add_ref(&b).sub_ref(&b) == a;
        t.check("poly_ring_axioms", ring_ok, || format!("a = {a}, b = {b}, c = {c}"));

        let bindings: HashMap<String, MultiPoly> = [("x".to_string(), random_poly(&mut rng)), ("y".to_string(), random_poly(&mut rng))].into();
        let sub = |p: &MultiPoly| p.substitute(&bindings);
        let hom = sub(&a.mul_ref(&b)) == sub(&a).mul_ref(&sub(&b)) && sub(&a.add_ref(&b)) == sub(&a).add_ref(&sub(&b));
        t.check("substitution_homomorphism", hom, || format!("a = {a}, b = {b}"));
    }
    t.finish("ring", vec![], seed, trials)
}
