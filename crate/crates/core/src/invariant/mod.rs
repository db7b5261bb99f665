//! The graded ring of invariant polynomials in Chern classes `c_k` or power
//! sums `T_k = tr(iA)^k`, with `deg c_k = deg T_k = k`.

mod einstein;
mod expansion;
mod newton;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{coeff_times, join_signed, power, Coeff, Rat, Ring};

pub use einstein::{einstein_transform, einstein_transform_symbolic, einstein_transform_with, t_tilde, Mode};
pub use expansion::{chern_expansion, expand_tpsi, expand_tw, ChernExpansion, ExpansionElement};
pub use newton::{chern_in_power_sums, power_sum_in_cherns};
pub use parse::parse_phi;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator {name} out of range 1..={maxgen}")]
    GeneratorOutOfRange { name: String, maxgen: u32 },
    #[error("dimension n = {0} must be at least 1")]
    InvalidDimension(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    Chern,
    PowerSum,
}

impl Basis {
    pub fn prefix(self) -> &'static str {
        match self {
            Basis::Chern => "c",
            Basis::PowerSum => "T",
        }
    }
}

/// Polynomial in the generators of one basis. Exponent vectors are stored
/// with trailing zeros trimmed; entry `k-1` is the exponent of generator `k`.
#[derive(Debug, Clone)]
pub struct InvariantPoly<K = Rat> {
    basis: Basis,
    maxgen: u32,
    terms: BTreeMap<Vec<u32>, K>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// Weighted degree `sum k * e_k`.
pub fn weighted_degree(exps: &[u32]) -> u32 {
    exps.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
}

impl<K: Ring> InvariantPoly<K> {
    pub fn zero(basis: Basis, maxgen: u32) -> Self {
        Self { basis, maxgen, terms: BTreeMap::new() }
    }

    pub fn constant(basis: Basis, maxgen: u32, c: K) -> Self {
        Self::from_terms(basis, maxgen, [(Vec::new(), c)])
    }

    /// The generator `c_k` or `T_k`.
    pub fn generator(basis: Basis, maxgen: u32, k: u32) -> Self {
        assert!(k >= 1, "generators are numbered from 1");
        let mut e = vec![0; k as usize];
        e[k as usize - 1] = 1;
        Self::from_terms(basis, maxgen.max(k), [(e, K::one())])
    }

    pub fn from_terms(basis: Basis, maxgen: u32, terms: impl IntoIterator<Item = (Vec<u32>, K)>) -> Self {
        let mut out = Self::zero(basis, maxgen);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exps: Vec<u32>, c: K) {
        if c.is_zero() {
            return;
        }
        let exps = trim(exps);
        self.maxgen = self.maxgen.max(exps.len() as u32);
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn maxgen(&self) -> u32 {
        self.maxgen
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &K)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> K {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_else(K::zero)
    }

    /// Largest weighted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| weighted_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| weighted_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            basis: self.basis,
            maxgen: self.maxgen,
            terms: self.terms.iter().filter(|(e, _)| weighted_degree(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    fn check_basis(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "invariant polynomials in different bases");
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_basis(other);
        let mut out = self.clone();
        out.maxgen = out.maxgen.max(other.maxgen);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_basis(other);
        let mut out = Self::zero(self.basis, self.maxgen.max(other.maxgen));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let len = a.len().max(b.len());
                let e = (0..len).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero(self.basis, self.maxgen);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.basis, self.maxgen, K::one()), |acc, _| acc.mul_ref(self))
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> InvariantPoly<L> {
        InvariantPoly::from_terms(self.basis, self.maxgen, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Evaluates in a ring `R`, given the image of each generator.
    pub fn eval_with<R: Ring>(&self, coeff: impl Fn(&K) -> R, gen: impl Fn(u32) -> R) -> R {
        let mut cache: BTreeMap<(usize, u32), R> = BTreeMap::new();
        let mut pow_of = |i: usize, e: u32| -> R {
            if let Some(v) = cache.get(&(i, e)) {
                return v.clone();
            }
            let g = gen(i as u32 + 1);
            let v = (0..e).fold(R::one(), |acc, _| acc * g.clone());
            cache.insert((i, e), v.clone());
            v
        };
        let mut total = R::zero();
        for (exps, c) in &self.terms {
            let mut term = coeff(c);
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term * pow_of(i, e);
                }
            }
            total = total + term;
        }
        total
    }

    /// Replaces generator `k` by `images[k - 1]`, all in a common target basis.
    pub fn substitute_generators(&self, images: &[InvariantPoly<K>]) -> InvariantPoly<K> {
        let target = images.first().map_or(self.basis, |p| p.basis);
        let maxgen = images.iter().map(|p| p.maxgen).fold(self.maxgen, u32::max);
        let mut out = InvariantPoly::zero(target, maxgen);
        for (exps, c) in &self.terms {
            let mut term = InvariantPoly::constant(target, maxgen, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                let img = images.get(i).unwrap_or_else(|| panic!("no image for generator {}", i + 1));
                for _ in 0..e {
                    term = term.mul_ref(img);
                }
            }
            out = out.add_ref(&term);
        }
        out
    }

    /// Deletes every monomial containing the first generator.
    pub fn drop_first_generator(&self) -> Self {
        Self {
            basis: self.basis,
            maxgen: self.maxgen,
            terms: self.terms.iter().filter(|(e, _)| e.first().copied().unwrap_or(0) == 0).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }
}

impl<K: Ring> PartialEq for InvariantPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.terms == other.terms
    }
}

impl<K: Ring> Zero for InvariantPoly<K> {
    fn zero() -> Self {
        Self::zero(Basis::Chern, 0)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ring> One for InvariantPoly<K> {
    fn one() -> Self {
        Self::constant(Basis::Chern, 0, K::one())
    }
}

// Zero and one above default to the Chern basis, so a sum or product with a
// power-sum polynomial is only meaningful through the basis-aware constructors.
impl<K: Ring> Ring for InvariantPoly<K> {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(Basis::Chern, 0, K::from_rat(r))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next()?;
            if e.is_empty() {
                return Some(Self::constant(self.basis, self.maxgen, c.try_inv()?));
            }
        }
        None
    }
}

crate::impl_ring_ops!([K: Ring] InvariantPoly<K>);

impl<K: Coeff> InvariantPoly<K> {
    /// Terms in printing order: weighted degree descending, then exponent
    /// vectors ascending.
    fn print_order(&self) -> Vec<(&Vec<u32>, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| weighted_degree(b).cmp(&weighted_degree(a)).then_with(|| a.cmp(b)));
        v
    }
}

impl<K: Coeff> fmt::Display for InvariantPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = self.basis.prefix();
        let terms = self.print_order().into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| power(&format!("{prefix}{}", i + 1), x))
                .collect();
            coeff_times(c, &mono.join("*"))
        });
        f.write_str(&join_signed(terms))
    }
}

/// Converts to the Chern basis.
pub fn to_chern_basis<K: Ring>(phi: &InvariantPoly<K>) -> InvariantPoly<K> {
    match phi.basis {
        Basis::Chern => phi.clone(),
        Basis::PowerSum => {
            let images: Vec<_> = (1..=phi.maxgen.max(1)).map(|k| power_sum_in_cherns::<K>(k, phi.maxgen)).collect();
            phi.substitute_generators(&images)
        }
    }
}

/// Converts to the power-sum basis.
pub fn to_power_basis<K: Ring>(phi: &InvariantPoly<K>) -> InvariantPoly<K> {
    match phi.basis {
        Basis::PowerSum => phi.clone(),
        Basis::Chern => {
            let images: Vec<_> = (1..=phi.maxgen.max(1)).map(|k| chern_in_power_sums::<K>(k, phi.maxgen)).collect();
            phi.substitute_generators(&images)
        }
    }
}

/// Chern-basis image with every monomial containing `c_1` deleted.
pub fn reduce_mod_c1<K: Ring>(phi: &InvariantPoly<K>) -> InvariantPoly<K> {
    to_chern_basis(phi).drop_first_generator()
}
