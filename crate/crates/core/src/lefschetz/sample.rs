//! Seeded random inputs for the identity checks.

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::linalg::determinant;
use crate::arith::{crat, int, rat, CRat};

use super::ops::{masks_of_bidegree, primitive_basis};
use super::{AltForm, HermitianForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HermitianKind {
    /// `A A* + I`
    Positive,
    /// `A D A*` with `D = diag(+-1)` of mixed signature.
    Indefinite,
}

pub fn random_crat<R: Rng>(rng: &mut R) -> CRat {
    crat(rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)), rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
}

fn small_gaussian<R: Rng>(rng: &mut R) -> CRat {
    crat(int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)))
}

/// Dense random form of bidegree `(p, q)`.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, p: u32, q: u32) -> AltForm {
    AltForm::from_terms(n, masks_of_bidegree(n, p, q).into_iter().map(|m| (m, random_crat(rng))))
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize, kind: HermitianKind) -> HermitianForm {
    loop {
        let a: Vec<Vec<CRat>> = (0..n).map(|_| (0..n).map(|_| small_gaussian(rng)).collect()).collect();
        let signs: Vec<i64> = match kind {
            HermitianKind::Positive => vec![1; n],
            HermitianKind::Indefinite => (0..n).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect(),
        };
        let h: Vec<Vec<CRat>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let s = (0..n).fold(CRat::zero(), |acc, k| acc + &a[r][k] * a[c][k].conj() * crat(int(signs[k]), int(0)));
                        if kind == HermitianKind::Positive && r == c {
                            s + crat(int(1), int(0))
                        } else {
                            s
                        }
                    })
                    .collect()
            })
            .collect();
        // n = 1 indefinite is just a negative number
        let h = if kind == HermitianKind::Indefinite && n == 1 { vec![vec![-h[0][0].clone()]] } else { h };
        if !determinant(&h).is_zero() {
            return HermitianForm::new(h).expect("constructed hermitian");
        }
    }
}

/// Positive definite `P D P*` with `P` unitriangular over the Gaussian
/// integers and `D` diagonal in `{1, 2}`, so `h^{-1}` stays small.
pub fn random_unitriangular_hermitian<R: Rng>(rng: &mut R, n: usize) -> HermitianForm {
    let p: Vec<Vec<CRat>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| match r.cmp(&c) {
                    std::cmp::Ordering::Less => crat(int(rng.gen_range(-1..=1)), int(rng.gen_range(-1..=1))),
                    std::cmp::Ordering::Equal => crat(int(1), int(0)),
                    std::cmp::Ordering::Greater => CRat::zero(),
                })
                .collect()
        })
        .collect();
    let d: Vec<CRat> = (0..n).map(|_| crat(int(rng.gen_range(1..=2)), int(0))).collect();
    let h = (0..n)
        .map(|r| (0..n).map(|c| (0..n).fold(CRat::zero(), |acc, k| acc + &p[r][k] * &d[k] * p[c][k].conj())).collect())
        .collect();
    HermitianForm::new(h).expect("positive definite")
}

/// Random element of `ker Lambda` in bidegree `(p, q)`.
pub fn random_primitive<R: Rng>(rng: &mut R, h: &HermitianForm, p: u32, q: u32) -> AltForm {
    primitive_basis(h, p, q)
        .iter()
        .fold(AltForm::zero(h.n()), |acc, b| acc.add_ref(&b.scale(&small_gaussian(rng))))
}
