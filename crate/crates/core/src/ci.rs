//! Chern classes and characteristic numbers of complete intersections
//! `Y = {f_1 = ... = f_r = 0}` in `CP^{n+r}`, and the total I'-curvature of
//! the circle bundle over `Y`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, MultiPoly, Rat, TruncatedSeries};
use crate::invariant::{einstein_transform, to_chern_basis, InvariantPoly, Mode};
use crate::symmetric::{d_vars, sigma_decompose, SigmaPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CiError {
    #[error("degree {got} \u{2260} n = {n}")]
    WrongDegree { got: String, n: u32 },
    #[error("expected a single monomial in c2..cn, got {0}")]
    NotMonomial(String),
    #[error("invalid complete intersection: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Degrees {
    Symbolic,
    Numeric(Vec<i64>),
}

/// `n`-dimensional complete intersection of codimension `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CIData {
    pub n: u32,
    pub r: u32,
    pub degrees: Degrees,
}

impl CIData {
    pub fn new(n: u32, r: u32, degrees: Degrees) -> Result<Self, CiError> {
        if n < 1 || r < 1 {
            return Err(CiError::Invalid(format!("need n >= 1 and r >= 1, got n = {n}, r = {r}")));
        }
        if let Degrees::Numeric(d) = &degrees {
            if d.len() != r as usize {
                return Err(CiError::Invalid(format!("{} degrees given for r = {r}", d.len())));
            }
            if let Some(bad) = d.iter().find(|&&x| x < 1) {
                return Err(CiError::Invalid(format!("degree {bad} is not positive")));
            }
        }
        Ok(Self { n, r, degrees })
    }

    pub fn numeric(n: u32, degrees: &[i64]) -> Result<Self, CiError> {
        Self::new(n, degrees.len() as u32, Degrees::Numeric(degrees.to_vec()))
    }

    pub fn symbolic(n: u32, r: u32) -> Result<Self, CiError> {
        Self::new(n, r, Degrees::Symbolic)
    }

    /// `d_j` as a coefficient polynomial.
    fn degree_coeff(&self, j: usize) -> MultiPoly {
        match &self.degrees {
            Degrees::Symbolic => MultiPoly::var(&format!("d{}", j + 1)),
            Degrees::Numeric(d) => MultiPoly::constant(int(d[j])),
        }
    }
}

/// Cohomology class: polynomial in `x` with `x^{n+1} = 0`.
pub type CohomClass = TruncatedSeries<MultiPoly>;

/// `c(TY) = (1+x)^{n+r+1} prod_j (1 + d_j x)^{-1}`.
pub fn total_chern_class(ci: &CIData) -> CohomClass {
    let order = ci.n as usize;
    let mut c = CohomClass::linear("x", order, MultiPoly::one()).pow(ci.n + ci.r + 1);
    for j in 0..ci.r as usize {
        let factor = CohomClass::linear("x", order, ci.degree_coeff(j));
        c = c.mul_ref(&factor.inverse().expect("constant term is 1"));
    }
    c
}

/// `[a_1, ..., a_n]` with `c_i(TY) = a_i x^i`.
pub fn total_chern(ci: &CIData) -> Vec<MultiPoly> {
    let c = total_chern_class(ci);
    (1..=ci.n as usize).map(|i| c.coeff(i)).collect()
}

/// Characteristic number, symbolic or numeric in the degrees.
#[derive(Debug, Clone, PartialEq)]
pub enum CharValue {
    Numeric(Rat),
    Symbolic(SigmaPoly),
}

impl CharValue {
    pub fn is_zero(&self) -> bool {
        match self {
            CharValue::Numeric(q) => q.is_zero(),
            CharValue::Symbolic(s) => s.is_zero(),
        }
    }

    fn scale(&self, k: &Rat) -> Self {
        match self {
            CharValue::Numeric(q) => CharValue::Numeric(q * k),
            CharValue::Symbolic(s) => CharValue::Symbolic(s.scale(k)),
        }
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharValue::Numeric(q) => write!(f, "{q}"),
            CharValue::Symbolic(s) => write!(f, "{s}"),
        }
    }
}

/// An exact multiple of `pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiValue {
    pub coefficient: CharValue,
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coefficient {
            c if c.is_zero() => f.write_str("0"),
            CharValue::Numeric(q) if q.is_one() => f.write_str("pi"),
            CharValue::Numeric(q) if (-q).is_one() => f.write_str("-pi"),
            CharValue::Numeric(q) => write!(f, "{q}*pi"),
            CharValue::Symbolic(s) => write!(f, "({s})*pi"),
        }
    }
}

fn check_degree(phi: &InvariantPoly, n: u32) -> Result<(), CiError> {
    if phi.is_zero() || (phi.is_homogeneous() && phi.degree() == Some(n)) {
        return Ok(());
    }
    let got = if phi.is_homogeneous() {
        phi.degree().unwrap_or(0).to_string()
    } else {
        format!("{} (inhomogeneous)", phi.degree().unwrap_or(0))
    };
    Err(CiError::WrongDegree { got, n })
}

/// `<phi(TY), [Y]>`, using `<x^n, [Y]> = d_1 ... d_r`.
pub fn chern_number(phi: &InvariantPoly, ci: &CIData) -> Result<CharValue, CiError> {
    check_degree(phi, ci.n)?;
    let classes = total_chern(ci);
    let order = ci.n as usize;
    let phi = to_chern_basis(phi);
    let gens: Vec<CohomClass> = (1..=order)
        .map(|i| {
            let mut coeffs = vec![MultiPoly::zero(); order + 1];
            coeffs[i] = classes[i - 1].clone();
            CohomClass::new("x", order, coeffs)
        })
        .collect();
    let mut value = CohomClass::new("x", order, [MultiPoly::zero()]);
    for (exps, c) in phi.terms() {
        let mut term = CohomClass::new("x", order, [MultiPoly::constant(c.clone())]);
        for (i, &e) in exps.iter().enumerate() {
            // generators beyond c_n vanish on Y
            let Some(g) = gens.get(i) else {
                term = CohomClass::new("x", order, [MultiPoly::zero()]);
                break;
            };
            term = term.mul_ref(&g.pow(e));
        }
        value = value.add_ref(&term);
    }
    let top = (0..ci.r as usize).fold(value.coeff(order), |acc, j| acc.mul_ref(&ci.degree_coeff(j)));
    Ok(match ci.degrees {
        Degrees::Numeric(_) => CharValue::Numeric(top.constant_term()),
        Degrees::Symbolic => {
            let top = top.over_vars(&d_vars(ci.r as usize)).expect("only degree variables");
            CharValue::Symbolic(sigma_decompose(&top, ci.r as usize).expect("Chern numbers are symmetric in the degrees"))
        }
    })
}

/// `-(2 pi / (n(n+1))) <phi~(TY), [Y]>` with `phi~` the base-mode transform.
pub fn total_iprime(phi: &InvariantPoly, ci: &CIData) -> Result<PiValue, CiError> {
    check_degree(phi, ci.n)?;
    let n = ci.n as i64;
    let tilde = einstein_transform(phi, n, Mode::Base).expect("n >= 1");
    let value = chern_number(&tilde, ci)?;
    Ok(PiValue { coefficient: value.scale(&(int(-2) / int(n * (n + 1)))) })
}

/// Lowest sigma-order part of degree `n + r` of `<phi~, [Y]>` for a
/// monomial `phi` in `c2..cn`.
pub fn leading_term(phi: &InvariantPoly, ci: &CIData) -> Result<SigmaPoly, CiError> {
    let phi = to_chern_basis(phi);
    let single = phi.num_terms() == 1 && phi.terms().all(|(e, _)| e.first().copied().unwrap_or(0) == 0 && !e.is_empty());
    if !single {
        return Err(CiError::NotMonomial(phi.to_string()));
    }
    if ci.degrees != Degrees::Symbolic {
        return Err(CiError::Invalid("leading term needs symbolic degrees".into()));
    }
    let tilde = einstein_transform(&phi, ci.n as i64, Mode::Base).expect("n >= 1");
    match chern_number(&tilde, ci)? {
        CharValue::Symbolic(s) => Ok(crate::symmetric::leading_sigma_part(&s, ci.n + ci.r)),
        CharValue::Numeric(_) => unreachable!("symbolic degrees"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    /// Whether the canonical-bundle condition could be checked (numeric degrees).
    pub positivity_checked: bool,
    pub warnings: Vec<String>,
}

/// Flags violations of `sum d_j > n + r + 1` and `r > n`.
pub fn validate_positivity(ci: &CIData) -> PositivityReport {
    let mut warnings = Vec::new();
    let positivity_checked = match &ci.degrees {
        Degrees::Numeric(d) => {
            let sum: i64 = d.iter().sum();
            let bound = (ci.n + ci.r + 1) as i64;
            if sum <= bound {
                warnings.push(format!("canonical bundle not positive: sum of degrees {sum} <= n + r + 1 = {bound}"));
            }
            true
        }
        Degrees::Symbolic => false,
    };
    if ci.r <= ci.n {
        warnings.push(format!("\u{3c3}-independence hypothesis r > n fails: r = {} <= n = {}", ci.r, ci.n));
    }
    PositivityReport { positivity_checked, warnings }
}
