//! Symmetric polynomials in the degrees `d1..dr`, written in the elementary
//! symmetric polynomials `s1..sr`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{int, MultiPoly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetricError {
    #[error("polynomial is not symmetric under d{0} <-> d{1}")]
    NotSymmetric(usize, usize),
    #[error("expected {expected} values, got {got}")]
    WrongArity { expected: usize, got: usize },
}

pub fn d_vars(r: usize) -> Vec<String> {
    (1..=r).map(|j| format!("d{j}")).collect()
}

pub fn s_vars(r: usize) -> Vec<String> {
    (1..=r).map(|j| format!("s{j}")).collect()
}

/// Polynomial in `s1..sr`. A monomial `s^e` has d-degree `sum j e_j` and
/// sigma-count `sum e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaPoly {
    r: usize,
    poly: MultiPoly,
}

impl SigmaPoly {
    pub fn zero(r: usize) -> Self {
        Self { r, poly: MultiPoly::zero_in(&s_vars(r).iter().map(String::as_str).collect::<Vec<_>>()) }
    }

    pub fn constant(r: usize, c: Rat) -> Self {
        Self::from_terms(r, [(vec![0; r], c)])
    }

    /// The elementary symmetric polynomial `s_j`.
    pub fn sigma(r: usize, j: usize) -> Self {
        let mut e = vec![0; r];
        e[j - 1] = 1;
        Self::from_terms(r, [(e, int(1))])
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        Self { r, poly: MultiPoly::from_terms(s_vars(r), terms) }
    }

    fn wrap(r: usize, poly: MultiPoly) -> Self {
        Self { r, poly: poly.over_vars(&s_vars(r)).expect("only s-variables") }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.poly.terms()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        Self::wrap(self.r, self.poly.add_ref(&other.poly))
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        Self::wrap(self.r, self.poly.sub_ref(&other.poly))
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        Self::wrap(self.r, self.poly.mul_ref(&other.poly))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::wrap(self.r, self.poly.scale(k))
    }

    fn filtered(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        Self::from_terms(self.r, self.terms().filter(|(e, _)| keep(e)).map(|(e, c)| (e.to_vec(), c.clone())))
    }

    /// Expands into a polynomial in `d1..dr`.
    pub fn expand(&self) -> MultiPoly {
        let sigmas = elementary_polys(self.r);
        let vars = d_vars(self.r);
        self.poly
            .eval_with(|c| MultiPoly::constant(c.clone()), |v| {
                let j: usize = v[1..].parse().expect("s-variable");
                sigmas[j - 1].clone()
            })
            .over_vars(&vars)
            .expect("d-variables only")
    }

    /// Value at numeric degrees.
    pub fn evaluate(&self, degrees: &[i64]) -> Result<Rat, SymmetricError> {
        if degrees.len() != self.r {
            return Err(SymmetricError::WrongArity { expected: self.r, got: degrees.len() });
        }
        let values = elementary_values(degrees);
        Ok(self.poly.eval_with(|c| c.clone(), |v| {
            let j: usize = v[1..].parse().expect("s-variable");
            values[j].clone()
        }))
    }
}

pub fn d_degree(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(i, x)| (i as u32 + 1) * x).sum()
}

pub fn sigma_count(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `s_1..s_r` as polynomials in `d1..dr`.
fn elementary_polys(r: usize) -> Vec<MultiPoly> {
    let vars = d_vars(r);
    let mut e = vec![MultiPoly::constant(int(1)).over_vars(&vars).unwrap()];
    e.extend((0..r).map(|_| MultiPoly::zero_in(&vars.iter().map(String::as_str).collect::<Vec<_>>())));
    for v in &vars {
        let x = MultiPoly::var(v);
        for j in (1..=r).rev() {
            e[j] = e[j].add_ref(&e[j - 1].mul_ref(&x));
        }
    }
    e.remove(0);
    e.into_iter().map(|p| p.over_vars(&vars).unwrap()).collect()
}

/// `[1, s_1, ..., s_r]` at numeric values.
pub fn elementary_values(degrees: &[i64]) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); degrees.len() + 1];
    e[0] = Rat::one();
    for &d in degrees {
        for j in (1..e.len()).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * int(d);
        }
    }
    e
}

/// Writes a symmetric polynomial in `d1..dr` in terms of `s1..sr` by
/// repeatedly cancelling the lexicographically leading monomial.
pub fn sigma_decompose(p: &MultiPoly, r: usize) -> Result<SigmaPoly, SymmetricError> {
    let vars = d_vars(r);
    let p = p.over_vars(&vars).expect("polynomial must be in d1..dr");
    for i in 0..r.saturating_sub(1) {
        if p.swap_vars(i, i + 1) != p {
            return Err(SymmetricError::NotSymmetric(i + 1, i + 2));
        }
    }
    let sigmas = elementary_polys(r);
    let mut rest = p;
    let mut out = SigmaPoly::zero(r);
    while !rest.is_zero() {
        let (lead, c) = rest.terms().max_by(|(a, _), (b, _)| a.cmp(b)).map(|(e, c)| (e.to_vec(), c.clone())).unwrap();
        let e: Vec<u32> = (0..r).map(|j| lead[j] - lead.get(j + 1).copied().unwrap_or(0)).collect();
        let mut prod = MultiPoly::constant(c.clone());
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                prod = prod.mul_ref(&sigmas[j].pow(k));
            }
        }
        rest = rest.sub_ref(&prod).over_vars(&vars).unwrap();
        out = out.add_ref(&SigmaPoly::from_terms(r, [(e, c)]));
    }
    Ok(out)
}

/// Terms of d-degree exactly `target` with the fewest sigma factors.
pub fn leading_sigma_part(s: &SigmaPoly, target: u32) -> SigmaPoly {
    let at_degree = s.filtered(|e| d_degree(e) == target);
    match at_degree.terms().map(|(e, _)| sigma_count(e)).min() {
        None => at_degree,
        Some(k) => at_degree.filtered(|e| sigma_count(e) == k),
    }
}
