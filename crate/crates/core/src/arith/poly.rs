use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{coeff_times, join_signed, power, Coeff, Rat, Ring};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over named variables.
///
/// Operands with different variable lists are aligned by name; the union
/// keeps the left operand's order and appends new names.
#[derive(Debug, Clone)]
pub struct MultiPoly<K = Rat> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Ring> MultiPoly<K> {
    pub fn zero_in(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        Self::from_terms(vec![name.to_string()], [(vec![1], K::one())])
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeats and dropping zeros.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, K)>) -> Self {
        let mut out = Self { vars, terms: BTreeMap::new() };
        for (exps, c) in terms {
            assert_eq!(exps.len(), out.vars.len(), "exponent vector length mismatch");
            out.add_term(Monomial(exps), c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &K)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> K {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(K::zero)
    }

    /// Coefficient of the monomial given by `(name, exponent)` pairs.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> K {
        let mut exps = vec![0; self.vars.len()];
        for (name, e) in powers {
            match self.index_of(name) {
                Some(i) => exps[i] += e,
                None if *e == 0 => {}
                None => return K::zero(),
            }
        }
        self.terms.get(&Monomial(exps)).cloned().unwrap_or_else(K::zero)
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-expresses `self` over `vars`, which must contain every variable
    /// actually occurring in `self`.
    pub fn over_vars(&self, vars: &[String]) -> Option<Self> {
        if vars == self.vars.as_slice() {
            return Some(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = Self { vars: vars.to_vec(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                exps[map[i]?] = e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Some(out)
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (
            self.over_vars(&vars).expect("union contains all variables"),
            other.over_vars(&vars).expect("union contains all variables"),
        )
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = Self { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(exps), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.swap(i, j);
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Evaluates under the ring homomorphism fixed by `coeff` on
    /// coefficients and `var` on variables.
    pub fn eval_with<R: Ring>(&self, coeff: impl Fn(&K) -> R, var: impl Fn(&str) -> R) -> R {
        let values: Vec<R> = self.vars.iter().map(|v| var(v)).collect();
        let mut powers: Vec<Vec<R>> = values.iter().map(|v| vec![R::one(), v.clone()]).collect();
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().clone() * values[i].clone();
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t * powers[i][e].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces bound variables by polynomials; unbound variables pass through.
    pub fn substitute(&self, bindings: &HashMap<String, MultiPoly<K>>) -> Self {
        self.eval_with(
            |c| Self::constant(c.clone()),
            |v| bindings.get(v).cloned().unwrap_or_else(|| Self::var(v)),
        )
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        MultiPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.0.clone(), f(c))),
        )
    }
}

impl<K: Ring> PartialEq for MultiPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<K: Ring> Zero for MultiPoly<K> {
    fn zero() -> Self {
        Self { vars: Vec::new(), terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ring> One for MultiPoly<K> {
    fn one() -> Self {
        Self::constant(K::one())
    }
}

impl<K: Ring> Ring for MultiPoly<K> {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(K::from_rat(r))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_constant() {
            self.constant_term().try_inv().map(Self::constant)
        } else {
            None
        }
    }
}

crate::impl_ring_ops!([K: Ring] MultiPoly<K>);

impl<K: Coeff> MultiPoly<K> {
    fn monomial_text(&self, exps: &[u32]) -> String {
        exps.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| power(&self.vars[i], e))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Descending graded-lex order, e.g. `-3*x^2 + 5*x + 2`.
impl<K: Coeff> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| coeff_times(c, &self.monomial_text(&m.0)));
        f.write_str(&join_signed(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn c(k: i64) -> MultiPoly {
        MultiPoly::constant(int(k))
    }

    #[test]
    fn difference_of_squares() {
        let p = (v("d1") + v("d2")) * (v("d1") - v("d2"));
        assert_eq!(p, v("d1").pow(2) - v("d2").pow(2));
        assert_eq!(p.to_string(), "d1^2 - d2^2");
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn zero_annihilates() {
        let p = v("a") * v("b") + c(3);
        assert!((MultiPoly::zero() * p).is_zero());
    }

    #[test]
    fn hand_expansion_checked_by_evaluation() {
        let p = (c(1) + v("x").scale(&int(3))) * (c(2) - v("x"));
        assert_eq!(p.to_string(), "-3*x^2 + 5*x + 2");
        // (1+3x)(2-x) at x = 1 is 4*1 = 4, at x = 2 is 7*0 = 0
        for (x, expected) in [(1, 4), (2, 0)] {
            let val: Rat = p.eval_with(|k| k.clone(), |_| int(x));
            assert_eq!(val, int(expected));
        }
    }

    #[test]
    fn substitution_examples() {
        let p = v("a") * v("b");
        let mut b = HashMap::new();
        b.insert("a".to_string(), v("c") + c(1));
        b.insert("b".to_string(), v("c") - c(1));
        assert_eq!(p.substitute(&b), v("c").pow(2) - c(1));

        let mut id = HashMap::new();
        id.insert("a".to_string(), v("a"));
        assert_eq!(p.substitute(&id), p);

        let q = v("T2") - v("c1").pow(2).scale(&rat(1, 3));
        let mut b = HashMap::new();
        b.insert("T2".to_string(), v("c1").pow(2) - v("c2").scale(&int(2)));
        let expected = v("c1").pow(2).scale(&rat(2, 3)) - v("c2").scale(&int(2));
        assert_eq!(q.substitute(&b), expected);
    }

    #[test]
    fn variable_alignment_ignores_order() {
        let p = v("y") * v("x");
        let q = v("x") * v("y");
        assert_eq!(p, q);
        assert_eq!(p.coeff_of(&[("x", 1), ("y", 1)]), int(1));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5, 1i64..=3), 0..6).prop_map(
            |terms| {
                MultiPoly::from_terms(
                    vec!["x".into(), "y".into(), "z".into()],
                    terms.into_iter().map(|((a, b, c), n, d)| (vec![a, b, c], rat(n, d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!((&p * &q).total_degree().unwrap(),
                    p.total_degree().unwrap() + q.total_degree().unwrap());
            }
        }

        #[test]
        fn substitution_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(),
                                               a in arb_poly(), b in arb_poly()) {
            let mut bind = HashMap::new();
            bind.insert("x".to_string(), a);
            bind.insert("z".to_string(), b);
            let lhs = (&p * &q).substitute(&bind);
            let rhs = &p.substitute(&bind) * &q.substitute(&bind);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!((&p + &q).substitute(&bind), &p.substitute(&bind) + &q.substitute(&bind));
        }
    }
}
