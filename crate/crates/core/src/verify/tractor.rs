use num_traits::Zero;

use crate::arith::{fmt_crat, i_unit, int, real, CRat};
use crate::tractor::{
    explicit, infty_contraction, phi_omega_decomposition, random_curvature, s_phi, s_phi_matrix, s_prime, CurvatureData,
    CurvatureFlags, ExtCurvature, PhiPartition,
};

use super::{fmt_matrix, SuiteReport, Tally};

fn describe(d: &CurvatureData, seed: u64) -> String {
    format!("n={} seed={seed} h={}", d.n(), fmt_matrix(d.h.matrix()))
}

fn fmt_vec(v: &[CRat]) -> String {
    format!("[{}]", v.iter().map(fmt_crat).collect::<Vec<_>>().join(", "))
}

pub fn tractor_suite(ns: &[u32], trials: u64, seed: u64) -> SuiteReport {
    let mut t = Tally::default();
    for &n in ns {
        let nu = n as usize;
        for trial in 0..trials {
            let s = seed.wrapping_mul(0x9e37_79b9).wrapping_add(trial * 131 + n as u64);
            let generic = random_curvature(s, nu, CurvatureFlags::default());
            let cm = random_curvature(s ^ 0x5eed, nu, CurvatureFlags { chern_moser_tracefree: true, ..Default::default() });
            let ext = ExtCurvature::new(&generic);
            let ext_cm = ExtCurvature::new(&cm);
            let where_g = describe(&generic, s);
            let where_c = describe(&cm, s ^ 0x5eed);

            for part in PhiPartition::all_of(n) {
                let m = s_phi_matrix(&ext, &part).expect("degree n");
                let total = s_phi(&m, &generic.h);
                let nn = real(int(n as i64));
                let tracefree = (0..nu).all(|a| (0..nu).all(|b| &m[a][b] * &nn == &total * generic.h.lower(a, b)));
                t.check("S_phi_tracefree", tracefree, || format!("{part} {where_g} S^Phi={}", fmt_matrix(&m)));
                let herm = (0..=nu).all(|a| (0..=nu).all(|b| m[a][b].conj() == m[b][a]));
                t.check("S_phi_hermitian", herm, || format!("{part} {where_g} S^Phi={}", fmt_matrix(&m)));

                let mut reversed = part.parts().to_vec();
                reversed.reverse();
                if reversed != part.parts() {
                    let other = s_phi_matrix(&ext, &PhiPartition::new(reversed).expect("valid")).expect("degree n");
                    t.check("reorder_invariance", other == m, || format!("{part} {where_g}"));
                }

                let primes = s_prime(&ext, &part).expect("degree n");
                let coef = i_unit() / real(int(n as i64));
                let rhs: Vec<CRat> = (0..nu)
                    .map(|a| {
                        let sum = primes
                            .iter()
                            .zip(part.parts())
                            .fold(CRat::zero(), |acc, (row, &mp)| acc + &row[a] * real(int(mp as i64)));
                        &coef * sum
                    })
                    .collect();
                let lhs: Vec<CRat> = (0..nu).map(|a| m[a][nu].clone()).collect();
                t.check("X_identity", lhs == rhs, || format!("{part} {where_g}: S^Phi_(a,inf)={} vs {}", fmt_vec(&lhs), fmt_vec(&rhs)));

                let dec = phi_omega_decomposition(&ext_cm, &part).expect("degree n");
                t.check("phi_decomposition", dec.holds(), || format!("{part} {where_c}: residual {}", dec.residual().even.describe()));

                let (l, r) = infty_contraction(&ext, &part).expect("degree n");
                t.check("infty_contraction", l == r, || format!("{part} {where_g}: {} vs {}", fmt_crat(&l), fmt_crat(&r)));
            }

            let t2 = PhiPartition::new(vec![2]).expect("valid");
            let m2 = s_phi_matrix(&ext_cm, &t2).expect("n >= 2");
            let total = s_phi(&m2, &cm.h);
            let want = explicit::s_t2(&cm);
            t.check("S_T2_norm", total == want, || format!("{where_c}: {} vs {}", fmt_crat(&total), fmt_crat(&want)));
            let mixed: Vec<CRat> = (0..nu).map(|a| m2[a][nu].clone()).collect();
            let want = explicit::x_t2(&cm);
            t.check("S_T2_mixed", mixed == want, || format!("{where_c}: {} vs {}", fmt_vec(&mixed), fmt_vec(&want)));
            let want = explicit::i_t2(&cm);
            t.check("S_T2_infty", m2[nu][nu] == want, || format!("{where_c}: {} vs {}", fmt_crat(&m2[nu][nu]), fmt_crat(&want)));

            if n >= 3 {
                let t3 = PhiPartition::new(vec![3]).expect("valid");
                let m3 = s_phi_matrix(&ext_cm, &t3).expect("n >= 3");
                let total = s_phi(&m3, &cm.h);
                let want = explicit::s_t3(&cm);
                t.check("S_T3_display", total == want, || format!("{where_c}: {} vs {}", fmt_crat(&total), fmt_crat(&want)));
                let mixed: Vec<CRat> = (0..nu).map(|a| m3[a][nu].clone()).collect();
                let want = explicit::x_t3(&cm);
                t.check("X_T3_display", mixed == want, || format!("{where_c}: {} vs {}", fmt_vec(&mixed), fmt_vec(&want)));
                let want = explicit::i_t3(&cm);
                t.check("I_T3_display", m3[nu][nu] == want, || format!("{where_c}: {} vs {}", fmt_crat(&m3[nu][nu]), fmt_crat(&want)));
            }
        }
    }
    t.finish("tractor", ns.to_vec(), seed, trials)
}
