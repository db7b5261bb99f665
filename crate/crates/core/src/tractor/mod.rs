//! Tractor curvature blocks `(S, V, U)`, the chains `R~^(p)`, the
//! antisymmetrized contractions `S^Phi_{AB}` and `S'^(p)_a`, and their
//! exterior-algebra counterparts.
//!
//! Direction indices run over `0..n` for tangential directions and `n` for
//! `infinity`; the `0`-direction is omitted because every curvature
//! component with a `0` slot vanishes.
//!
//! The blocks of `Omega_g^m_{A Bbar}` are
//!
//! ```text
//! (a, bbar)       h^{m vbar} S_{g vbar a bbar}
//! (a, inf bar)    i h^{m vbar} V_{g vbar a}
//! (inf, bbar)     -i h^{m vbar} conj(V_{v gbar b})
//! (inf, inf bar)  C_U h^{m vbar} U_{g vbar}
//! ```
//!
//! The third block is forced by hermiticity of the assembled tensor, which
//! also forces `C_U` to be real. The value `C_U = 1` is not stated
//! explicitly in the source formulas; it is inferred from the explicit
//! cubic formula, whose `-U S S` term is matched only by `C_U = 1` among
//! `{1, -1, i, -i}` (see the tests).

mod chains;
mod data;
pub mod explicit;
mod forms;

pub use chains::{r_chain, s_phi, s_phi_matrix, s_prime, vs_chain, DenseTensor};
pub use data::{random_curvature, CurvatureData, CurvatureFlags, ExtCurvature, C_U};
pub use forms::{curvature_forms, infty_contraction, phi_of_forms, phi_omega_decomposition, PhiDecomposition};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TractorError {
    #[error("degree {m} of the invariant polynomial exceeds n = {n}")]
    DegreeTooLarge { m: u32, n: usize },
    #[error("degree {m} of the invariant polynomial must equal n = {n}")]
    DegreeMismatch { m: u32, n: usize },
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),
}

/// `Phi = T_{m_1} ... T_{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiPartition(Vec<u32>);

impl PhiPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, TractorError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(TractorError::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `m` as non-increasing sequences.
    pub fn all_of(m: u32) -> Vec<PhiPartition> {
        fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PhiPartition>) {
            if left == 0 {
                out.push(PhiPartition(cur.clone()));
                return;
            }
            for k in (1..=left.min(max)).rev() {
                cur.push(k);
                go(left - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for PhiPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self.0.iter().map(|m| format!("T{m}")).collect();
        f.write_str(&names.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::arith::{i_unit, int, real, CRat};

    fn cm() -> CurvatureFlags {
        CurvatureFlags { chern_moser_tracefree: true, ..Default::default() }
    }

    fn part(xs: &[u32]) -> PhiPartition {
        PhiPartition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn partitions_enumerate() {
        let p3: Vec<String> = PhiPartition::all_of(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, ["T3", "T2*T1", "T1*T1*T1"]);
        assert_eq!(PhiPartition::all_of(4).len(), 5);
        assert!(PhiPartition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn r_chain_basic_slots() {
        let d = random_curvature(3, 2, CurvatureFlags::default());
        let ext = ExtCurvature::new(&d);
        let r1 = r_chain(&ext, 1);
        let ric = d.ricci();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(r1.get(&[a, b]), &ric[a][b]);
            }
        }
        let r2 = r_chain(&ext, 2);
        let vs = vs_chain(&ext, 1);
        for idx in [[0, 1, 1, 0], [1, 0, 0, 1], [1, 1, 1, 1]] {
            let (a1, a2, b2) = (idx[0], idx[1], idx[2]);
            assert_eq!(*r2.get(&[a1, 2, a2, b2]), i_unit() * vs.get(&[a1, a2, b2]));
            // hermiticity: swap roles within every pair and conjugate
            assert_eq!(r2.get(&[idx[0], idx[1], idx[2], idx[3]]).conj(), *r2.get(&[idx[1], idx[0], idx[3], idx[2]]));
        }
        let flat = random_curvature(3, 2, CurvatureFlags { zero_v: true, zero_u: true, ..Default::default() });
        assert!(r_chain(&ExtCurvature::new(&flat), 1).get(&[0, 2]).is_zero());
    }

    #[test]
    fn s_phi_is_hermitian_and_order_independent() {
        for seed in 0..3 {
            let d = random_curvature(seed, 3, CurvatureFlags::default());
            let ext = ExtCurvature::new(&d);
            let a = s_phi_matrix(&ext, &part(&[2, 1])).unwrap();
            let b = s_phi_matrix(&ext, &part(&[1, 2])).unwrap();
            assert_eq!(a, b);
            for x in 0..4 {
                for y in 0..4 {
                    assert_eq!(a[x][y].conj(), a[y][x]);
                }
            }
        }
        let d = random_curvature(0, 2, CurvatureFlags::default());
        assert_eq!(
            s_phi_matrix(&ExtCurvature::new(&d), &part(&[3])),
            Err(TractorError::DegreeTooLarge { m: 3, n: 2 })
        );
    }

    #[test]
    fn top_degree_middle_block_is_pure_trace() {
        for n in 2..=3usize {
            for p in PhiPartition::all_of(n as u32) {
                let d = random_curvature(11, n, CurvatureFlags::default());
                let ext = ExtCurvature::new(&d);
                let m = s_phi_matrix(&ext, &p).unwrap();
                let s = s_phi(&m, &d.h);
                let nn = real(int(n as i64));
                for a in 0..n {
                    for b in 0..n {
                        assert_eq!(&m[a][b] * &nn, &s * d.h.lower(a, b), "{p} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn t2_closed_forms() {
        for n in 2..=3 {
            let d = random_curvature(5, n, cm());
            let ext = ExtCurvature::new(&d);
            let m = s_phi_matrix(&ext, &part(&[2])).unwrap();
            assert_eq!(s_phi(&m, &d.h), explicit::s_t2(&d));
            let x = explicit::x_t2(&d);
            for a in 0..n {
                assert_eq!(m[a][n], x[a]);
            }
            assert_eq!(m[n][n], explicit::i_t2(&d));
        }
    }

    #[test]
    fn t3_closed_forms() {
        let d = random_curvature(8, 3, cm());
        let ext = ExtCurvature::new(&d);
        let m = s_phi_matrix(&ext, &part(&[3])).unwrap();
        assert_eq!(s_phi(&m, &d.h), explicit::s_t3(&d));
        let x = explicit::x_t3(&d);
        for a in 0..3 {
            assert_eq!(m[a][3], x[a]);
        }
        assert_eq!(m[3][3], explicit::i_t3(&d));
    }

    #[test]
    fn u_block_scale_is_pinned_by_cubic_formula() {
        let d = random_curvature(21, 3, cm());
        let oracle = explicit::i_t3(&d);
        let candidates = [real(int(1)), real(int(-1)), i_unit(), -i_unit()];
        let matching: Vec<CRat> = candidates
            .into_iter()
            .filter(|c| s_phi_matrix(&ExtCurvature::with_u_scale(&d, c), &part(&[3])).unwrap()[3][3] == oracle)
            .collect();
        assert_eq!(matching, vec![real(int(C_U))]);
    }

    #[test]
    fn x_identity_with_s_prime() {
        for n in 2..=3usize {
            for p in PhiPartition::all_of(n as u32) {
                let d = random_curvature(2, n, CurvatureFlags::default());
                let ext = ExtCurvature::new(&d);
                let m = s_phi_matrix(&ext, &p).unwrap();
                let primes = s_prime(&ext, &p).unwrap();
                let coef = i_unit() / real(int(n as i64));
                for a in 0..n {
                    let mut rhs = CRat::zero();
                    for (q, row) in primes.iter().enumerate() {
                        rhs += &row[a] * real(int(p.parts()[q] as i64));
                    }
                    assert_eq!(m[a][n], &coef * rhs, "{p} n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn s_prime_vanishes_without_v() {
        let d = random_curvature(4, 2, CurvatureFlags { zero_v: true, ..Default::default() });
        let ext = ExtCurvature::new(&d);
        for row in s_prime(&ext, &part(&[1, 1])).unwrap() {
            assert!(row.iter().all(Zero::is_zero));
        }
        let m = s_phi_matrix(&ext, &part(&[2])).unwrap();
        assert!(m[0][2].is_zero() && m[1][2].is_zero());
    }

    #[test]
    fn phi_decomposes_into_theta_degrees() {
        for n in 2..=3usize {
            for p in PhiPartition::all_of(n as u32) {
                let d = random_curvature(6, n, cm());
                let dec = phi_omega_decomposition(&ExtCurvature::new(&d), &p).unwrap();
                assert!(dec.holds(), "{p} n={n}");
                // every S' term keeps all but one chain, and a T1 chain is
                // the Ricci trace of S, which vanishes here
                let ones = p.parts().iter().filter(|&&m| m == 1).count();
                assert_eq!(dec.phi1.is_zero(), ones >= 2, "{p} n={n}");
            }
        }
        let d = random_curvature(6, 2, CurvatureFlags { zero_v: true, ..Default::default() });
        let dec = phi_omega_decomposition(&ExtCurvature::new(&d), &part(&[2])).unwrap();
        assert!(dec.phi1.is_zero() && dec.holds());
        assert!(phi_omega_decomposition(&ExtCurvature::new(&d), &part(&[1])).is_err());
    }

    #[test]
    fn infinity_contraction_matches() {
        for n in 2..=3usize {
            for p in PhiPartition::all_of(n as u32) {
                let d = random_curvature(9, n, CurvatureFlags::default());
                let (lhs, rhs) = infty_contraction(&ExtCurvature::new(&d), &p).unwrap();
                assert_eq!(lhs, rhs, "{p} n={n}");
                assert!(!rhs.is_zero());
            }
        }
        let d = random_curvature(9, 2, CurvatureFlags { zero_v: true, zero_u: true, ..Default::default() });
        let (lhs, rhs) = infty_contraction(&ExtCurvature::new(&d), &part(&[2])).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
    }
}
