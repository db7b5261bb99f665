//! Exact scalars, polynomials, truncated series and small dense linear algebra.

pub mod linalg;
mod poly;
mod ratfunc;
mod scalar;
mod series;

pub use poly::{Monomial, MultiPoly};
pub use ratfunc::{RatFunc, UniPoly};
pub use scalar::{binomial, crat, factorial, fmt_crat, i_unit, int, rat, real, CRat, Coeff, Rat, Ring};
pub(crate) use scalar::{coeff_times, join_signed, power};
pub use series::TruncatedSeries;

/// All permutations of `0..k` with their signs (`true` for odd).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = vec![(Vec::new(), false)];
    for len in 0..k {
        let mut next = Vec::with_capacity(out.len() * (len + 1));
        for (perm, odd) in &out {
            // insert `len` at position j, moving it past len - j entries
            for j in 0..=len {
                let mut p = perm.clone();
                p.insert(j, len);
                next.push((p, odd ^ ((len - j) % 2 == 1)));
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("series has non-invertible constant term {0}")]
    NonUnitConstantTerm(String),
}
