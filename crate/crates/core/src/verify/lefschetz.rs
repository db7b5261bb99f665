use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorial, i_unit, int, permutations, real, CRat, Rat};
use crate::lefschetz::sample::{random_form, random_hermitian, HermitianKind};
use crate::lefschetz::{h_op, lambda, lefschetz_l, primitive_basis, AltForm, HermitianForm};

use super::{fmt_matrix, SuiteReport, Tally};

/// Number of metrics drawn per dimension; trials cycle through them.
const METRICS: usize = 4;

fn r(k: i64) -> CRat {
    real(int(k))
}

fn rq(q: Rat) -> CRat {
    real(q)
}

fn falling(m: i64, k: i64) -> Rat {
    (0..k).fold(Rat::one(), |acc, j| acc * int(m - j))
}

struct Ctx<'a> {
    h: &'a HermitianForm,
    n: i64,
}

impl Ctx<'_> {
    fn l(&self, f: &AltForm) -> AltForm {
        lefschetz_l(self.h, f)
    }

    fn lam(&self, f: &AltForm) -> AltForm {
        lambda(self.h, f)
    }

    /// `[f, L f, L^2 f, ..., L^k f]`
    fn l_chain(&self, f: &AltForm, k: usize) -> Vec<AltForm> {
        let mut v = vec![f.clone()];
        for _ in 0..k {
            let next = self.l(v.last().unwrap());
            v.push(next);
        }
        v
    }

    fn lam_chain(&self, f: &AltForm, k: usize) -> Vec<AltForm> {
        let mut v = vec![f.clone()];
        for _ in 0..k {
            let next = self.lam(v.last().unwrap());
            v.push(next);
        }
        v
    }
}

fn minus_i_pow(k: usize) -> CRat {
    (0..k).fold(CRat::one(), |acc, _| acc * -i_unit())
}

/// `(-i)^n h^{a1 b1bar} ... h^{an bnbar} phi_{a1 b1bar ... an bnbar}`
fn lambda_n_formula(h: &HermitianForm, phi: &AltForm) -> CRat {
    let n = h.n();
    let interleave_odd = (n * (n - 1) / 2) % 2 == 1;
    let perms = permutations(n);
    let mut total = CRat::zero();
    for (a, _) in &perms {
        for (b, _) in &perms {
            let mut t = phi.component(a, b);
            if t.is_zero() {
                continue;
            }
            for k in 0..n {
                t = t * h.raised(a[k], b[k]);
            }
            total += if interleave_odd { -t } else { t };
        }
    }
    total * minus_i_pow(n)
}

/// `(-i)^(n-1) h^{a1 b1bar} ... phi_{a a1 b1bar ... a_{n-1} b_{n-1}bar} theta^a`
fn lambda_n1_formula(h: &HermitianForm, phi: &AltForm) -> AltForm {
    let n = h.n();
    let interleave_odd = ((n - 1) * (n.saturating_sub(2)) / 2) % 2 == 1;
    let mut out = AltForm::zero(n);
    let perms_b = permutations(n);
    for a in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&x| x != a).collect();
        let mut total = CRat::zero();
        for (pa, _) in permutations(n - 1) {
            let alphas: Vec<usize> = pa.iter().map(|&k| rest[k]).collect();
            let holo: Vec<usize> = std::iter::once(a).chain(alphas.iter().copied()).collect();
            // each injective (n-1)-tuple is the prefix of exactly one permutation of 0..n
            for (pb, _) in &perms_b {
                let betas = &pb[..n - 1];
                let mut t = phi.component(&holo, betas);
                if t.is_zero() {
                    continue;
                }
                for k in 0..n - 1 {
                    t = t * h.raised(alphas[k], betas[k]);
                }
                total += if interleave_odd { -t } else { t };
            }
        }
        out.add_term(1 << a, total * minus_i_pow(n - 1));
    }
    out
}

fn check_forms(t: &mut Tally, name: &str, lhs: &AltForm, rhs: &AltForm, ctx: &str) {
    t.check(name, lhs == rhs, || format!("{ctx}: lhs = {}, rhs = {}", lhs.describe(), rhs.describe()));
}

pub fn lefschetz_suite(ns: &[u32], trials: u64, seed: u64) -> SuiteReport {
    let mut t = Tally::default();
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x1ef5 + n as u64));
        let nu = n as usize;
        let metrics: Vec<HermitianForm> = (0..METRICS)
            .map(|k| random_hermitian(&mut rng, nu, if k % 2 == 0 { HermitianKind::Positive } else { HermitianKind::Indefinite }))
            .collect();
        let mut primitives: HashMap<(usize, u32, u32), Vec<AltForm>> = HashMap::new();
        for trial in 0..trials {
            let which = trial as usize % METRICS;
            let h = &metrics[which];
            let c = Ctx { h, n: n as i64 };
            for p in 0..=n {
                for q in 0..=n {
                    let where_ = format!("n={n} (p,q)=({p},{q}) trial={trial} h={}", fmt_matrix(h.matrix()));
                    let phi = random_form(&mut rng, nu, p, q);
                    let (pi, qi) = (p as i64, q as i64);
                    let npq = c.n - pi - qi;
                    run_commutators(&mut t, &c, &phi, npq, &where_);

                    let basis = primitives.entry((which, p, q)).or_insert_with(|| primitive_basis(h, p, q));
                    if !basis.is_empty() {
                        let mut prim = AltForm::zero(nu);
                        for b in basis.iter() {
                            prim = prim.add_ref(&b.scale(&crate::lefschetz::sample::random_crat(&mut rng)));
                        }
                        let chain = c.l_chain(&prim, nu);
                        for m in 0..=nu {
                            let lam = c.lam_chain(&chain[m], m);
                            for k in 0..=m {
                                let coeff = rq(falling(m as i64, k as i64))
                                    * rq((1..=k as i64).fold(Rat::one(), |acc, j| acc * int(npq - m as i64 + j)));
                                check_forms(&mut t, "Lambda_k_L_m", &lam[k], &chain[m - k].scale(&coeff), &format!("{where_} m={m} k={k} primitive"));
                            }
                        }
                    }
                    diff_form_identities(&mut t, &c, &phi, p, q, &where_);
                }
            }
        }
    }
    t.finish("lefschetz", ns.to_vec(), seed, trials)
}

fn run_commutators(t: &mut Tally, c: &Ctx<'_>, phi: &AltForm, npq: i64, where_: &str) {
    let nu = c.n as usize;
    let l_phi = c.l_chain(phi, nu);
    let lam_phi = c.lam(phi);
    let l_lam_phi = c.l_chain(&lam_phi, nu);
    for m in 1..=nu {
        let lhs = c.lam(&l_phi[m]).sub_ref(&l_lam_phi[m]);
        let rhs = l_phi[m - 1].scale(&r(m as i64 * (npq - m as i64 + 1)));
        check_forms(t, "Lambda_L_m", &lhs, &rhs, &format!("{where_} m={m}"));
    }
    let lam_of_l = c.lam_chain(&l_phi[1], nu);
    let lam_chain = c.lam_chain(phi, nu);
    for m in 1..=nu {
        let lhs = lam_of_l[m].sub_ref(&c.l(&lam_chain[m]));
        let rhs = lam_chain[m - 1].scale(&r(m as i64 * (npq + m as i64 - 1)));
        check_forms(t, "Lambda_m_L", &lhs, &rhs, &format!("{where_} m={m}"));
    }
    // sl(2) relations
    let hl = h_op(&l_phi[1]).sub_ref(&c.l(&h_op(phi)));
    check_forms(t, "sl2_H_L", &hl, &l_phi[1].scale(&r(-2)), where_);
    let hlam = h_op(&lam_phi).sub_ref(&c.lam(&h_op(phi)));
    check_forms(t, "sl2_H_Lambda", &hlam, &lam_phi.scale(&r(2)), where_);
    let lam_l = c.lam(&l_phi[1]).sub_ref(&l_lam_phi[1]);
    check_forms(t, "sl2_Lambda_L", &lam_l, &h_op(phi), where_);
}

fn diff_form_identities(t: &mut Tally, c: &Ctx<'_>, phi: &AltForm, p: u32, q: u32, where_: &str) {
    let n = c.n as u32;
    let nu = n as usize;
    let fact = |k: u32| factorial(k);
    if (p, q) == (n, n) {
        let lam = c.lam_chain(phi, nu);
        let back = c.l_chain(&lam[nu], nu)[nu].scale(&rq(Rat::one() / (fact(n) * fact(n))));
        check_forms(t, "diff_form_i", &back, phi, where_);
        let formula = AltForm::constant(nu, lambda_n_formula(c.h, phi));
        check_forms(t, "Lambda_n_formula", &lam[nu], &formula, where_);
    }
    if (p, q) == (n, n - 1) {
        let lam = c.lam_chain(phi, nu - 1);
        let back = c.l_chain(&lam[nu - 1], nu - 1)[nu - 1].scale(&rq(Rat::one() / (fact(n - 1) * fact(n - 1))));
        check_forms(t, "diff_form_ii", &back, phi, where_);
        check_forms(t, "Lambda_n1_formula", &lam[nu - 1], &lambda_n1_formula(c.h, phi), where_);
    }
    if n >= 1 && (p, q) == (n - 1, n - 1) {
        let lhs = c.l(phi);
        let lam = c.lam_chain(phi, nu - 1);
        let rhs = c.l_chain(&lam[nu - 1], nu)[nu].scale(&rq(Rat::one() / (fact(n) * fact(n - 1))));
        check_forms(t, "diff_form_iii", &lhs, &rhs, where_);
    }
    if n >= 2 && p == q && p < n {
        let m = p;
        let lhs = c.lam_chain(&c.l_chain(phi, (n - m - 1) as usize)[(n - m - 1) as usize], nu - 2)[nu - 2].clone();
        let lam = c.lam_chain(phi, m as usize);
        let mut rhs = c.l(&lam[m as usize]).scale(&r((n - m - 1) as i64));
        if m >= 1 {
            rhs = rhs.add_ref(&lam[m as usize - 1].scale(&r(m as i64)));
        }
        let k = fact(n - 2) * fact(n - m - 1) / fact(m);
        check_forms(t, "diff_form_iv", &lhs, &rhs.scale(&rq(k)), where_);
    }
    if n >= 3 && q + 1 == p && (2..=n - 1).contains(&p) {
        let m = p;
        let lhs = c.lam_chain(&c.l_chain(phi, (n - m - 1) as usize)[(n - m - 1) as usize], nu - 3)[nu - 3].clone();
        let lam = c.lam_chain(phi, m as usize - 1);
        let rhs = lam[m as usize - 2]
            .scale(&r(m as i64 - 1))
            .add_ref(&c.l(&lam[m as usize - 1]).scale(&r((n - m - 1) as i64)));
        let k = fact(n - 3) * fact(n - m - 1) / fact(m - 1);
        check_forms(t, "diff_form_v", &lhs, &rhs.scale(&rq(k)), where_);
    }
}
