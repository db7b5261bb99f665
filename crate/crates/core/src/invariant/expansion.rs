//! Formal expansions in `w` (the trace form of the identity block),
//! `tpsiJ = T_J(Psi)` and `twJ = T_J(W')`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::arith::{binomial, MultiPoly, Rat, RatFunc, Ring};

use super::{chern_in_power_sums, to_chern_basis, Basis, InvariantError, InvariantPoly};

/// Element of the commutative ring generated by `w`, `tpsiJ`, `twJ`.
pub type ExpansionElement = MultiPoly<RatFunc>;

const W: &str = "w";

fn tpsi(j: u32) -> String {
    format!("tpsi{j}")
}

fn tw(j: u32) -> String {
    format!("tw{j}")
}

/// `sum_{l<m} (+-1)^l C(m,l) w^l t_{m-l} + (+-1)^m (n+2) w^m`.
fn expand(m: u32, n: &RatFunc, t: fn(u32) -> String, alternate: bool) -> ExpansionElement {
    assert!(m >= 1, "expansions start at m = 1");
    let w = ExpansionElement::var(W);
    let sign = |l: u32| if alternate && l % 2 == 1 { RatFunc::from_int(-1) } else { RatFunc::from_int(1) };
    let mut out = ExpansionElement::zero();
    for l in 0..m {
        let c = sign(l) * RatFunc::from_rat(&binomial(m, l));
        out = out.add_ref(&w.pow(l).mul_ref(&ExpansionElement::var(&t(m - l))).scale(&c));
    }
    let top = sign(m) * n.add_ref(&RatFunc::from_int(2));
    out.add_ref(&w.pow(m).scale(&top))
}

/// `T_m(W')` in terms of `w` and `T_j(Psi)`.
pub fn expand_tw(m: u32, n: &RatFunc) -> ExpansionElement {
    expand(m, n, tpsi, false)
}

/// `T_m(Psi)` in terms of `w` and `T_j(W')`.
pub fn expand_tpsi(m: u32, n: &RatFunc) -> ExpansionElement {
    expand(m, n, tw, true)
}

/// `c_{n+1}(W') = c_{n+1}(Psi) + sum_m w^(n+1-m) Phi_m(W')`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernExpansion {
    /// The `w`-free part, read back as a polynomial in the `Psi` generators.
    pub omega_free: InvariantPoly,
    /// `Phi_0, ..., Phi_n` in the Chern basis of `W'`.
    pub phi: Vec<InvariantPoly>,
}

/// Coefficient of `w^k` restricted to variables `prefix<j>`, as a
/// power-sum polynomial. Panics if another variable occurs.
fn coefficient_of_w(e: &ExpansionElement, k: u32, prefix: &str, maxgen: u32) -> InvariantPoly<RatFunc> {
    let vars = e.vars();
    let mut out = InvariantPoly::zero(Basis::PowerSum, maxgen);
    for (exps, c) in e.terms() {
        let mut gens = vec![0u32; maxgen as usize];
        let mut wpow = 0;
        for (v, &x) in vars.iter().zip(exps) {
            if x == 0 {
                continue;
            }
            if v == W {
                wpow = x;
            } else {
                let j: usize = v.strip_prefix(prefix).and_then(|s| s.parse().ok()).unwrap_or_else(|| panic!("unexpected variable {v}"));
                gens[j - 1] += x;
            }
        }
        if wpow == k {
            out = out.add_ref(&InvariantPoly::from_terms(Basis::PowerSum, maxgen, [(gens, c.clone())]));
        }
    }
    out
}

fn to_rational(p: &InvariantPoly<RatFunc>) -> InvariantPoly<Rat> {
    p.map_coeffs(|c| c.as_rat().expect("numeric dimension gives rational coefficients"))
}

pub fn chern_expansion(n: i64) -> Result<ChernExpansion, InvariantError> {
    if n < 1 {
        return Err(InvariantError::InvalidDimension(n));
    }
    let top = n as u32 + 1;
    let nn = RatFunc::from_int(n);
    let cn1 = chern_in_power_sums::<RatFunc>(top, top);
    let in_psi = cn1.eval_with(|c| ExpansionElement::constant(c.clone()), |j| expand_tw(j, &nn));

    let omega_free = coefficient_of_w(&in_psi, 0, "tpsi", top);
    let rest = in_psi.sub_ref(&in_psi.eval_with(
        |c| ExpansionElement::constant(c.clone()),
        |v| if v == W { ExpansionElement::zero() } else { ExpansionElement::var(v) },
    ));
    let bindings: HashMap<String, ExpansionElement> = (1..=top).map(|j| (tpsi(j), expand_tpsi(j, &nn))).collect();
    let in_w = rest.substitute(&bindings);

    let phi = (0..=top - 1)
        .map(|m| to_rational(&to_chern_basis(&coefficient_of_w(&in_w, top - m, "tw", top))))
        .collect();
    Ok(ChernExpansion { omega_free: to_rational(&to_chern_basis(&omega_free)), phi })
}
