use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, rat, Rat};
use crate::ci::{total_iprime, leading_term, CIData, CharValue};
use crate::invariant::{weighted_degree, Basis, InvariantPoly};
use crate::symmetric::SigmaPoly;

use super::{SuiteReport, Tally};

fn random_homogeneous<R: Rng>(rng: &mut R, deg: u32, maxgen: u32) -> InvariantPoly {
    let terms: Vec<(Vec<u32>, Rat)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let mut e = vec![0u32; maxgen as usize];
            while weighted_degree(&e) < deg {
                let k = rng.gen_range(1..=(deg - weighted_degree(&e)).min(maxgen));
                e[k as usize - 1] += 1;
            }
            (e, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
        })
        .collect();
    InvariantPoly::from_terms(Basis::Chern, maxgen, terms)
}

/// Partitions of `n` into parts `>= 2`, as Chern exponent vectors.
fn c2_monomials(n: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (2..=left.min(max)).rev() {
            cur.push(k);
            go(left - k, k, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    go(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|p| {
            let mut e = vec![0u32; n as usize];
            for k in p {
                e[k as usize - 1] += 1;
            }
            e
        })
        .collect()
}

/// `(-1)^k s_{i1} ... s_{ik} s_r`
fn expected_leading(exps: &[u32], r: usize) -> SigmaPoly {
    let mut out = SigmaPoly::sigma(r, r);
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            out = out.mul_ref(&SigmaPoly::sigma(r, i + 1)).scale(&int(-1));
        }
    }
    out
}

pub fn ci_suite(ns: &[u32], trials: u64, seed: u64) -> SuiteReport {
    let mut t = Tally::default();
    let c2 = InvariantPoly::generator(Basis::Chern, 2, 2);
    let golden = CIData::numeric(2, &[3, 3, 3]).ok().and_then(|ci| total_iprime(&c2, &ci).ok());
    t.check(
        "golden_value",
        matches!(&golden, Some(v) if v.coefficient == CharValue::Numeric(int(-108))),
        || format!("n=2, degrees 3,3,3, phi=c2 gave {}", golden.as_ref().map(|v| v.to_string()).unwrap_or_default()),
    );
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0xc1 + n as u64));
        let r = n + 1;
        let sym = CIData::symbolic(n, r).expect("valid");
        for trial in 0..trials {
            let psi = random_homogeneous(&mut rng, n - 1, n);
            let phi = InvariantPoly::generator(Basis::Chern, n, 1).mul_ref(&psi);
            let degrees: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=6)).collect();
            let num = CIData::numeric(n, &degrees).expect("valid");
            let zero_sym = total_iprime(&phi, &sym).map(|v| v.coefficient.is_zero());
            let zero_num = total_iprime(&phi, &num).map(|v| v.coefficient.is_zero());
            t.check("mod_c1_annihilation", zero_sym == Ok(true) && zero_num == Ok(true), || {
                format!("n={n} trial={trial} phi={phi} degrees={degrees:?}")
            });

            let phi = random_homogeneous(&mut rng, n, n);
            let agree = match (total_iprime(&phi, &sym), total_iprime(&phi, &num)) {
                (Ok(s), Ok(v)) => match (s.coefficient, v.coefficient) {
                    (CharValue::Symbolic(s), CharValue::Numeric(q)) => s.evaluate(&degrees) == Ok(q),
                    _ => false,
                },
                _ => false,
            };
            t.check("symbolic_matches_numeric", agree, || format!("n={n} trial={trial} phi={phi} degrees={degrees:?}"));
        }

        let monomials = c2_monomials(n);
        let mut totals = Vec::new();
        for e in &monomials {
            let phi = InvariantPoly::from_terms(Basis::Chern, n, [(e.clone(), int(1))]);
            let lead = leading_term(&phi, &sym);
            let want = expected_leading(e, r as usize);
            t.check("leading_term", lead.as_ref() == Ok(&want), || {
                format!("n={n} phi={phi}: got {}, want {want}", lead.as_ref().map(|s| s.to_string()).unwrap_or_else(|e| e.to_string()))
            });
            totals.push((phi.clone(), total_iprime(&phi, &sym).map(|v| v.coefficient)));
        }
        for i in 0..totals.len() {
            for j in i + 1..totals.len() {
                let distinct = matches!((&totals[i].1, &totals[j].1), (Ok(a), Ok(b)) if a != b && !a.is_zero());
                t.check("pairwise_distinct", distinct, || format!("n={n}: {} vs {}", totals[i].0, totals[j].0));
            }
        }
    }
    t.finish("ci", ns.to_vec(), seed, trials)
}
