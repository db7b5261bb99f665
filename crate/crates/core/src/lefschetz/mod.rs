//! Exterior algebra of `(p,q)`-forms on an `n`-dimensional complex vector
//! space with a nondegenerate hermitian form, and the Lefschetz operators.
//!
//! A basis element `theta^{a_1} ^ ... ^ theta^{a_p} ^ theta^{b_1 bar} ^ ...`
//! with increasing `a`'s and `b`'s is stored as a bitmask: bits `0..n` for the
//! unbarred generators, bits `n..2n` for the barred ones. Its coefficient is
//! the component `phi_{a_1 .. a_p b_1bar .. b_qbar}` of the fully
//! antisymmetric tensor.

mod extended;
mod hermitian;
mod ops;
pub mod sample;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_crat, CRat};

pub use extended::ExtendedForm;
pub use hermitian::{HermitianError, HermitianForm};
pub use ops::{inner_product, lambda, lambda_pow, lefschetz_l, lefschetz_l_pow, omega, h_op, primitive_basis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("bidegree mismatch: {0:?} vs {1:?}")]
    BidegreeMismatch(Option<(u32, u32)>, Option<(u32, u32)>),
}

/// A generator `theta^a` or `theta^{a bar}`, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    Holo(usize),
    Anti(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AltForm {
    n: usize,
    terms: BTreeMap<u32, CRat>,
}

/// Sign of `theta^a ^ theta^b` relative to the sorted product, for disjoint masks.
pub(crate) fn merge_sign(a: u32, b: u32) -> bool {
    // count pairs (i in a, j in b) with i > j
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(j)
    })
}

impl AltForm {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 16, "dimension {n} too large");
        Self { n, terms: BTreeMap::new() }
    }

    /// The constant form `c`.
    pub fn constant(n: usize, c: CRat) -> Self {
        Self::zero(n).with_term(0, c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, CRat::one())
    }

    pub fn theta(n: usize, slot: Slot) -> Self {
        Self::zero(n).with_term(1 << Self::bit_of(n, slot), CRat::one())
    }

    fn bit_of(n: usize, slot: Slot) -> usize {
        match slot {
            Slot::Holo(a) => {
                assert!(a < n);
                a
            }
            Slot::Anti(b) => {
                assert!(b < n);
                n + b
            }
        }
    }

    /// Form with a single basis element given by sorted index sets.
    pub fn basis(n: usize, holo: &[usize], anti: &[usize]) -> Self {
        Self::zero(n).with_term(Self::mask_of(n, holo, anti), CRat::one())
    }

    pub fn mask_of(n: usize, holo: &[usize], anti: &[usize]) -> u32 {
        holo.iter().map(|&a| 1u32 << a).chain(anti.iter().map(|&b| 1u32 << (n + b))).fold(0, |m, x| {
            assert!(m & x == 0, "repeated index");
            m | x
        })
    }

    fn with_term(mut self, mask: u32, c: CRat) -> Self {
        self.add_term(mask, c);
        self
    }

    pub(crate) fn add_term(&mut self, mask: u32, c: CRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u32, CRat)>) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in terms {
            assert!(m >> (2 * n) == 0, "mask out of range");
            out.add_term(m, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &CRat)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> CRat {
        self.terms.get(&mask).cloned().unwrap_or_else(CRat::zero)
    }

    /// `(p, q)` of a basis mask.
    pub fn mask_bidegree(&self, mask: u32) -> (u32, u32) {
        let low = (1u32 << self.n) - 1;
        ((mask & low).count_ones(), (mask >> self.n).count_ones())
    }

    /// The common bidegree of all terms; `None` for zero or mixed forms.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|&m| self.mask_bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn bidegree_part(&self, p: u32, q: u32) -> Self {
        Self::from_terms(self.n, self.terms().filter(|(m, _)| self.mask_bidegree(*m) == (p, q)).map(|(m, c)| (m, c.clone())))
    }

    /// Component for arbitrary index tuples, with the permutation sign.
    pub fn component(&self, holo: &[usize], anti: &[usize]) -> CRat {
        let mut seq: Vec<usize> = holo.iter().copied().chain(anti.iter().map(|&b| self.n + b)).collect();
        // sort by insertion counting transpositions
        let mut odd = false;
        for i in 1..seq.len() {
            let mut j = i;
            while j > 0 && seq[j - 1] > seq[j] {
                seq.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if seq.windows(2).any(|w| w[0] == w[1]) {
            return CRat::zero();
        }
        let mask = seq.iter().fold(0u32, |m, &b| m | (1 << b));
        let c = self.coeff(mask);
        if odd {
            -c
        } else {
            c
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn scale(&self, k: &CRat) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(&m, c)| (m, c * k)).collect() }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = x * y;
                out.add_term(a | b, if merge_sign(a, b) { -c } else { c });
            }
        }
        out
    }

    /// `(-1)^deg` on each homogeneous piece.
    pub fn grade_involution(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(&m, c)| (m, if m.count_ones() % 2 == 1 { -c } else { c.clone() })).collect(),
        }
    }

    /// Complex conjugate: swaps `theta^a` and `theta^{a bar}`.
    pub fn conj(&self) -> Self {
        let low = (1u32 << self.n) - 1;
        let mut out = Self::zero(self.n);
        for (&m, c) in &self.terms {
            let (holo, anti) = (m & low, m >> self.n);
            let swapped = anti | (holo << self.n);
            let sign = holo.count_ones() * anti.count_ones() % 2 == 1;
            let c = c.conj();
            out.add_term(swapped, if sign { -c } else { c });
        }
        out
    }

    /// Interior product with the dual basis vector of `slot`.
    pub fn contract(&self, slot: Slot) -> Self {
        let bit = Self::bit_of(self.n, slot);
        let below = (1u32 << bit) - 1;
        let mut out = Self::zero(self.n);
        for (&m, c) in &self.terms {
            if m & (1 << bit) == 0 {
                continue;
            }
            let sign = (m & below).count_ones() % 2 == 1;
            out.add_term(m & !(1 << bit), if sign { -c } else { c.clone() });
        }
        out
    }

    /// Human-readable listing, e.g. `(1/2 + i)*th1^thb2`.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(&m, c)| {
                let gens: Vec<String> = bits(m)
                    .map(|b| if b < self.n { format!("th{}", b + 1) } else { format!("thb{}", b - self.n + 1) })
                    .collect();
                let basis = if gens.is_empty() { "1".to_string() } else { gens.join("^") };
                format!("({})*{basis}", fmt_crat(c))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
