use num_traits::Zero;

use crate::arith::linalg::{determinant, inverse, Matrix};
use crate::arith::CRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HermitianError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("hermitian form is degenerate")]
    Degenerate,
}

/// `h[a][b] = h_{a bbar}`, with its inverse stored so that
/// `raised(a, b) = h^{a bbar}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm {
    h: Matrix<CRat>,
    hinv: Matrix<CRat>,
}

impl HermitianForm {
    pub fn new(h: Matrix<CRat>) -> Result<Self, HermitianError> {
        let n = h.len();
        if h.iter().any(|row| row.len() != n) {
            return Err(HermitianError::NotSquare);
        }
        for a in 0..n {
            for b in 0..n {
                if h[a][b] != h[b][a].conj() {
                    return Err(HermitianError::NotHermitian);
                }
            }
        }
        if determinant(&h).is_zero() {
            return Err(HermitianError::Degenerate);
        }
        let hinv = inverse(&h).ok_or(HermitianError::Degenerate)?;
        Ok(Self { h, hinv })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(crate::arith::linalg::identity(n)).expect("identity is hermitian")
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// `h_{a bbar}`
    pub fn lower(&self, a: usize, b: usize) -> &CRat {
        &self.h[a][b]
    }

    /// `h^{a bbar}`, characterized by `h^{a bbar} h_{c bbar} = delta^a_c`.
    pub fn raised(&self, a: usize, b: usize) -> &CRat {
        &self.hinv[b][a]
    }

    pub fn matrix(&self) -> &Matrix<CRat> {
        &self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{crat, int, CRat};
    use num_traits::One;

    #[test]
    fn raising_inverts_lowering() {
        let h = vec![
            vec![crat(int(2), int(0)), crat(int(1), int(1))],
            vec![crat(int(1), int(-1)), crat(int(3), int(0))],
        ];
        let f = HermitianForm::new(h).unwrap();
        for a in 0..2 {
            for c in 0..2 {
                let s = (0..2).fold(CRat::zero(), |acc, b| acc + f.raised(a, b) * f.lower(c, b));
                assert_eq!(s, if a == c { CRat::one() } else { CRat::zero() });
            }
        }
        let bad = vec![vec![crat(int(1), int(1))]];
        assert_eq!(HermitianForm::new(bad), Err(HermitianError::NotHermitian));
        let singular = vec![vec![crat(int(1), int(0)), crat(int(1), int(0))], vec![crat(int(1), int(0)), crat(int(1), int(0))]];
        assert_eq!(HermitianForm::new(singular), Err(HermitianError::Degenerate));
    }
}
