use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{i_unit, int, real, CRat};
use crate::lefschetz::sample::{random_crat, random_unitriangular_hermitian};
use crate::lefschetz::HermitianForm;

use super::chains::DenseTensor;

/// Scale of the `(inf, inf bar)` block.
pub const C_U: i64 = 1;

/// `S[a][b][c][d] = S_{a bbar c dbar}`, `V[a][b][c] = V_{a bbar c}`,
/// `U[a][b] = U_{a bbar}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureData {
    pub h: HermitianForm,
    pub s: DenseTensor,
    pub v: DenseTensor,
    pub u: DenseTensor,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureFlags {
    pub chern_moser_tracefree: bool,
    pub zero_v: bool,
    pub zero_u: bool,
}

impl CurvatureData {
    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// `h^{a bbar} S_{a bbar c dbar}`
    pub fn ricci(&self) -> Vec<Vec<CRat>> {
        let n = self.n();
        (0..n)
            .map(|c| {
                (0..n)
                    .map(|d| {
                        let mut acc = CRat::zero();
                        for a in 0..n {
                            for b in 0..n {
                                acc += self.h.raised(a, b) * self.s.get(&[a, b, c, d]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks the hermitian and pair symmetries (and trace-freeness if asked).
    pub fn symmetries_hold(&self, tracefree: bool) -> bool {
        let n = self.n();
        let s = &self.s;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let x = s.get(&[a, b, c, d]);
                        if x.conj() != *s.get(&[b, a, d, c]) || x != s.get(&[c, b, a, d]) || x != s.get(&[a, d, c, b]) {
                            return false;
                        }
                    }
                    if self.v.get(&[a, b, c]) != self.v.get(&[c, b, a]) {
                        return false;
                    }
                }
                if self.u.get(&[a, b]).conj() != *self.u.get(&[b, a]) {
                    return false;
                }
            }
        }
        !tracefree || self.ricci().iter().flatten().all(Zero::is_zero)
    }
}

/// Removes the traces of `S` so that `h^{a bbar} S_{a bbar c dbar} = 0`.
fn chern_moser_projection(h: &HermitianForm, s: &DenseTensor) -> DenseTensor {
    let n = h.n();
    let data = CurvatureData { h: h.clone(), s: s.clone(), v: DenseTensor::zeros(n, 3), u: DenseTensor::zeros(n, 2) };
    let ric = data.ricci();
    let mut scalar = CRat::zero();
    for c in 0..n {
        for d in 0..n {
            scalar += h.raised(c, d) * &ric[c][d];
        }
    }
    let nn = n as i64;
    let p: Vec<Vec<CRat>> = (0..n)
        .map(|c| {
            (0..n)
                .map(|d| (&ric[c][d] - &scalar * h.lower(c, d) / real(int(2 * (nn + 1)))) / real(int(nn + 2)))
                .collect()
        })
        .collect();
    let hl = |a: usize, b: usize| h.lower(a, b).clone();
    DenseTensor::from_fn(n, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        s.get(i) - &p[a][b] * hl(c, d) - &p[c][b] * hl(a, d) - &p[c][d] * hl(a, b) - &p[a][d] * hl(c, b)
    })
}

/// Seeded random curvature data with the required symmetries.
pub fn random_curvature(seed: u64, n: usize, flags: CurvatureFlags) -> CurvatureData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_curvature_with(&mut rng, n, flags)
}

pub fn random_curvature_with<R: Rng>(rng: &mut R, n: usize, flags: CurvatureFlags) -> CurvatureData {
    let h = random_unitriangular_hermitian(rng, n);
    let t = DenseTensor::from_fn(n, 4, |_| random_crat(rng));
    let quarter = real(crate::arith::rat(1, 4));
    let half = real(crate::arith::rat(1, 2));
    let paired = DenseTensor::from_fn(n, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        (t.get(&[a, b, c, d]) + t.get(&[c, b, a, d]) + t.get(&[a, d, c, b]) + t.get(&[c, d, a, b])) * &quarter
    });
    let mut s = DenseTensor::from_fn(n, 4, |i| {
        (paired.get(i) + paired.get(&[i[1], i[0], i[3], i[2]]).conj()) * &half
    });
    if flags.chern_moser_tracefree {
        s = chern_moser_projection(&h, &s);
    }
    let v = if flags.zero_v {
        DenseTensor::zeros(n, 3)
    } else {
        let raw = DenseTensor::from_fn(n, 3, |_| random_crat(rng));
        DenseTensor::from_fn(n, 3, |i| (raw.get(i) + raw.get(&[i[2], i[1], i[0]])) * &half)
    };
    let u = if flags.zero_u {
        DenseTensor::zeros(n, 2)
    } else {
        let raw = DenseTensor::from_fn(n, 2, |_| random_crat(rng));
        DenseTensor::from_fn(n, 2, |i| (raw.get(i) + raw.get(&[i[1], i[0]]).conj()) * &half)
    };
    CurvatureData { h, s, v, u }
}

/// `Omega_g^m_{A Bbar}` with `g, m < n` and `A, B <= n` (`n` is infinity).
#[derive(Debug, Clone, PartialEq)]
pub struct ExtCurvature {
    n: usize,
    h: HermitianForm,
    /// index `((g * n + m) * (n+1) + A) * (n+1) + B`
    data: Vec<CRat>,
}

impl ExtCurvature {
    pub fn new(d: &CurvatureData) -> Self {
        Self::with_u_scale(d, &real(int(C_U)))
    }

    /// Assembles the blocks with an arbitrary scale on the `U` block.
    pub fn with_u_scale(d: &CurvatureData, c_u: &CRat) -> Self {
        let n = d.n();
        let inf = n;
        let i = i_unit();
        let h = &d.h;
        let mut data = vec![CRat::zero(); n * n * (n + 1) * (n + 1)];
        for g in 0..n {
            for m in 0..n {
                for a in 0..=n {
                    for b in 0..=n {
                        let mut acc = CRat::zero();
                        for v in 0..n {
                            let up = h.raised(m, v);
                            if up.is_zero() {
                                continue;
                            }
                            let lower = match (a == inf, b == inf) {
                                (false, false) => d.s.get(&[g, v, a, b]).clone(),
                                (false, true) => &i * d.v.get(&[g, v, a]),
                                (true, false) => -&i * d.v.get(&[v, g, b]).conj(),
                                (true, true) => c_u * d.u.get(&[g, v]),
                            };
                            acc += up * lower;
                        }
                        data[((g * n + m) * (n + 1) + a) * (n + 1) + b] = acc;
                    }
                }
            }
        }
        Self { n, h: h.clone(), data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &HermitianForm {
        &self.h
    }

    pub fn get(&self, g: usize, m: usize, a: usize, b: usize) -> &CRat {
        let n = self.n;
        &self.data[((g * n + m) * (n + 1) + a) * (n + 1) + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_data_has_symmetries() {
        for n in 2..=3 {
            let plain = random_curvature(1, n, CurvatureFlags::default());
            assert!(plain.symmetries_hold(false));
            let cm = random_curvature(1, n, CurvatureFlags { chern_moser_tracefree: true, ..Default::default() });
            assert!(cm.symmetries_hold(true));
            assert_eq!(random_curvature(1, n, CurvatureFlags::default()), plain);
            let flat = random_curvature(2, n, CurvatureFlags { zero_v: true, zero_u: true, ..Default::default() });
            assert!(flat.v.is_zero() && flat.u.is_zero());
        }
    }
}
