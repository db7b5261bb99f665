use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use crate::arith::{factorial, i_unit, permutations, real, CRat};

use super::{ExtCurvature, PhiPartition, TractorError};

/// Dense tensor with `rank` slots, each ranging over `0..d`; row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor {
    d: usize,
    rank: usize,
    data: Vec<CRat>,
}

impl DenseTensor {
    pub fn zeros(d: usize, rank: usize) -> Self {
        Self { d, rank, data: vec![CRat::zero(); d.pow(rank as u32)] }
    }

    pub fn from_fn(d: usize, rank: usize, mut f: impl FnMut(&[usize]) -> CRat) -> Self {
        let mut idx = vec![0; rank];
        let mut data = Vec::with_capacity(d.pow(rank as u32));
        for flat in 0..d.pow(rank as u32) {
            let mut r = flat;
            for slot in (0..rank).rev() {
                idx[slot] = r % d;
                r /= d;
            }
            data.push(f(&idx));
        }
        Self { d, rank, data }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, idx: &[usize]) -> &CRat {
        debug_assert_eq!(idx.len(), self.rank);
        &self.data[idx.iter().fold(0, |acc, &i| acc * self.d + i)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Memoized entries of `R~^(p)` and `(V S^(p))`, each computed as the
/// trace of a product of `n x n` blocks.
pub(crate) struct Chains<'a> {
    ext: &'a ExtCurvature,
    r: RefCell<HashMap<Vec<(usize, usize)>, CRat>>,
    vs: RefCell<HashMap<(usize, Vec<(usize, usize)>), CRat>>,
}

impl<'a> Chains<'a> {
    pub(crate) fn new(ext: &'a ExtCurvature) -> Self {
        Self { ext, r: RefCell::default(), vs: RefCell::default() }
    }

    /// `tr(first * Omega_{pairs[0]} * ... )`, starting from the row vectors of `first`.
    fn trace_product(&self, first: impl Fn(usize, usize) -> CRat, pairs: &[(usize, usize)]) -> CRat {
        let n = self.ext.n();
        let mut acc = CRat::zero();
        for g in 0..n {
            let mut row: Vec<CRat> = (0..n).map(|m| first(g, m)).collect();
            for &(a, b) in pairs {
                let mut next = vec![CRat::zero(); n];
                for (r, x) in row.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (m, out) in next.iter_mut().enumerate() {
                        let y = self.ext.get(r, m, a, b);
                        if !y.is_zero() {
                            *out += x * y;
                        }
                    }
                }
                row = next;
            }
            acc += &row[g];
        }
        acc
    }

    /// `R~^(p)` at the direction pairs `(A_j, B_j)`.
    pub(crate) fn r(&self, pairs: &[(usize, usize)]) -> CRat {
        // the trace is invariant under cyclic rotation
        let key = (0..pairs.len())
            .map(|k| [&pairs[k..], &pairs[..k]].concat())
            .min()
            .unwrap_or_default();
        if let Some(v) = self.r.borrow().get(&key) {
            return v.clone();
        }
        let (a, b) = key[0];
        let v = self.trace_product(|g, m| self.ext.get(g, m, a, b).clone(), &key[1..]);
        self.r.borrow_mut().insert(key, v.clone());
        v
    }

    /// `(V S^(p))` with form index `a` on `V` and tangential pairs after it.
    pub(crate) fn vs(&self, a: usize, pairs: &[(usize, usize)]) -> CRat {
        let key = (a, pairs.to_vec());
        if let Some(v) = self.vs.borrow().get(&key) {
            return v.clone();
        }
        let inf = self.ext.n();
        let minus_i = -i_unit();
        let v = self.trace_product(|g, m| self.ext.get(g, m, a, inf) * &minus_i, pairs);
        self.vs.borrow_mut().insert(key, v.clone());
        v
    }
}

fn pairs_of(idx: &[usize]) -> Vec<(usize, usize)> {
    idx.chunks(2).map(|c| (c[0], c[1])).collect()
}

/// `R~^(p)_{A1 B1bar ... Ap Bpbar}`, slots interleaved, over `0..=n`.
pub fn r_chain(ext: &ExtCurvature, p: u32) -> DenseTensor {
    assert!(p >= 1);
    let chains = Chains::new(ext);
    DenseTensor::from_fn(ext.n() + 1, 2 * p as usize, |idx| chains.r(&pairs_of(idx)))
}

/// `(V S^(p))_{a a1 b1bar ... ap bpbar}` over tangential indices.
pub fn vs_chain(ext: &ExtCurvature, p: u32) -> DenseTensor {
    let chains = Chains::new(ext);
    DenseTensor::from_fn(ext.n(), 1 + 2 * p as usize, |idx| chains.vs(idx[0], &pairs_of(&idx[1..])))
}

fn is_injective(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

/// Parity of the permutation sorting `xs` (entries distinct).
fn sort_parity(xs: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            odd ^= xs[i] > xs[j];
        }
    }
    odd
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

/// All tuples of length `len` over `0..d`.
fn tuples(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// `(1/(|a|! |b|!)) sum sgn(s) sgn(t) f(a o s, b o t)`.
fn alternate(a: &[usize], b: &[usize], f: &dyn Fn(&[usize], &[usize]) -> CRat) -> CRat {
    let pa = permutations(a.len());
    let pb = permutations(b.len());
    let mut acc = CRat::zero();
    let mut aa = vec![0; a.len()];
    let mut bb = vec![0; b.len()];
    for (s, odd_s) in &pa {
        for (k, &j) in s.iter().enumerate() {
            aa[k] = a[j];
        }
        for (t, odd_t) in &pb {
            for (k, &j) in t.iter().enumerate() {
                bb[k] = b[j];
            }
            let term = f(&aa, &bb);
            if odd_s ^ odd_t {
                acc -= term;
            } else {
                acc += term;
            }
        }
    }
    acc / real(factorial(a.len() as u32) * factorial(b.len() as u32))
}

/// `Alt(f)` at an injective pair of tuples, via the sorted representatives.
struct AltCache<'a> {
    f: &'a dyn Fn(&[usize], &[usize]) -> CRat,
    seen: HashMap<(Vec<usize>, Vec<usize>), CRat>,
}

impl<'a> AltCache<'a> {
    fn new(f: &'a dyn Fn(&[usize], &[usize]) -> CRat) -> Self {
        Self { f, seen: HashMap::new() }
    }

    fn get(&mut self, a: &[usize], b: &[usize]) -> CRat {
        let key = (sorted(a), sorted(b));
        let f = self.f;
        let v = self.seen.entry(key).or_insert_with_key(|(sa, sb)| alternate(sa, sb, f));
        if sort_parity(a) ^ sort_parity(b) {
            -v.clone()
        } else {
            v.clone()
        }
    }
}

/// Product of `R~^(m)` factors placed at `(start, m)` along the slots.
fn product_of_chains(chains: &Chains, placed: &[(usize, usize)], a: &[usize], b: &[usize]) -> CRat {
    let mut acc = crate::arith::real(crate::arith::int(1));
    for &(start, m) in placed {
        let pairs: Vec<(usize, usize)> = (start..start + m).map(|k| (a[k], b[k])).collect();
        let x = chains.r(&pairs);
        if x.is_zero() {
            return CRat::zero();
        }
        acc *= x;
    }
    acc
}

fn chain_starts(parts: &[u32]) -> Vec<usize> {
    parts
        .iter()
        .scan(0usize, |pos, &m| {
            let s = *pos;
            *pos += m as usize;
            Some(s)
        })
        .collect()
}

/// `S^Phi_{A Bbar}` for `A, B` in `0..=n`, with `n` standing for infinity.
pub fn s_phi_matrix(ext: &ExtCurvature, part: &PhiPartition) -> Result<Vec<Vec<CRat>>, TractorError> {
    let n = ext.n();
    let h = ext.h();
    let m = part.degree() as usize;
    if m > n {
        return Err(TractorError::DegreeTooLarge { m: m as u32, n });
    }
    let chains = Chains::new(ext);
    let placed: Vec<(usize, usize)> = chain_starts(part.parts()).into_iter().zip(part.parts().iter().map(|&p| p as usize)).collect();
    let f = |a: &[usize], b: &[usize]| product_of_chains(&chains, &placed, a, b);
    let mut alt = AltCache::new(&f);
    let rest = tuples(n, m - 1);
    let mut out = vec![vec![CRat::zero(); n + 1]; n + 1];
    for (a0, row) in out.iter_mut().enumerate() {
        for (b0, entry) in row.iter_mut().enumerate() {
            let mut acc = CRat::zero();
            for ar in &rest {
                let mut a = vec![a0];
                a.extend_from_slice(ar);
                if !is_injective(&a) {
                    continue;
                }
                for br in &rest {
                    let mut b = vec![b0];
                    b.extend_from_slice(br);
                    if !is_injective(&b) {
                        continue;
                    }
                    let mut weight = crate::arith::real(crate::arith::int(1));
                    for k in 1..m {
                        weight *= h.raised(a[k], b[k]);
                    }
                    if !weight.is_zero() {
                        acc += weight * alt.get(&a, &b);
                    }
                }
            }
            *entry = acc;
        }
    }
    Ok(out)
}

/// `S^Phi = h^{a bbar} S^Phi_{a bbar}`.
pub fn s_phi(matrix: &[Vec<CRat>], h: &crate::lefschetz::HermitianForm) -> CRat {
    let mut acc = CRat::zero();
    for a in 0..h.n() {
        for b in 0..h.n() {
            acc += h.raised(a, b) * &matrix[a][b];
        }
    }
    acc
}

/// `S'^(p)_a` for each factor `p` of a degree-`n` partition: the `p`-th
/// chain is replaced by `V S^(m_p - 1)` and its first barred slot is left
/// uncontracted.
pub fn s_prime(ext: &ExtCurvature, part: &PhiPartition) -> Result<Vec<Vec<CRat>>, TractorError> {
    let n = ext.n();
    let h = ext.h();
    let m = part.degree();
    if m as usize != n {
        return Err(TractorError::DegreeMismatch { m, n });
    }
    let chains = Chains::new(ext);
    let starts = chain_starts(part.parts());
    let mut out = Vec::new();
    for (p, &skip) in starts.iter().enumerate() {
        let mp = part.parts()[p];
        let others: Vec<(usize, usize)> = starts
            .iter()
            .zip(part.parts())
            .enumerate()
            .filter(|&(q, _)| q != p)
            .map(|(_, (&s, &m))| (s, m as usize))
            .collect();
        // barred tuples have length n - 1; reinsert a placeholder at `skip`
        let f = |a: &[usize], b: &[usize]| {
            let mut full_b = b.to_vec();
            full_b.insert(skip, usize::MAX);
            let pairs: Vec<(usize, usize)> = (skip + 1..skip + mp as usize).map(|k| (a[k], full_b[k])).collect();
            let head = chains.vs(a[skip], &pairs);
            if head.is_zero() {
                return CRat::zero();
            }
            head * product_of_chains(&chains, &others, a, &full_b)
        };
        let mut alt = AltCache::new(&f);
        let a_rest = tuples(n, n - 1);
        let b_all = tuples(n, n - 1);
        let mut row = Vec::with_capacity(n);
        for free in 0..n {
            let mut acc = CRat::zero();
            for ar in &a_rest {
                let mut a = ar.clone();
                a.insert(skip, free);
                if !is_injective(&a) {
                    continue;
                }
                for b in &b_all {
                    if !is_injective(b) {
                        continue;
                    }
                    let mut weight = crate::arith::real(crate::arith::int(1));
                    for (k, &bk) in b.iter().enumerate() {
                        let pos = if k >= skip { k + 1 } else { k };
                        weight *= h.raised(a[pos], bk);
                    }
                    if !weight.is_zero() {
                        acc += weight * alt.get(&a, b);
                    }
                }
            }
            row.push(acc);
        }
        out.push(row);
    }
    Ok(out)
}
