//! Closed-form contractions for `Phi = T2, T3`, written directly in terms
//! of `(S, V, U)` with no antisymmetrization. Valid for trace-free `S`.

use num_traits::Zero;

use crate::arith::{i_unit, rat, real, CRat};

use super::{CurvatureData, DenseTensor};

fn sum<F: FnMut(&[usize]) -> CRat>(n: usize, k: usize, mut f: F) -> CRat {
    let mut acc = CRat::zero();
    let mut idx = vec![0; k];
    for flat in 0..n.pow(k as u32) {
        let mut r = flat;
        for slot in idx.iter_mut() {
            *slot = r % n;
            r /= n;
        }
        acc += f(&idx);
    }
    acc
}

struct Mixed {
    n: usize,
    /// `S_g^m_a^v`
    s: Vec<CRat>,
    /// `V_g^m_a`
    v: Vec<CRat>,
    /// `V^a_g^m`, built from `conj(V)`
    vb: Vec<CRat>,
    /// `U_g^m`
    u: Vec<CRat>,
}

impl Mixed {
    fn new(d: &CurvatureData) -> Self {
        let n = d.n();
        let h = |a: usize, b: usize| d.h.raised(a, b).clone();
        let mut s = Vec::new();
        let mut v = Vec::new();
        let mut vb = Vec::new();
        for g in 0..n {
            for m in 0..n {
                for a in 0..n {
                    for x in 0..n {
                        s.push(sum(n, 2, |r| h(m, r[0]) * h(x, r[1]) * d.s.get(&[g, r[0], a, r[1]])));
                    }
                    v.push(sum(n, 1, |r| h(m, r[0]) * d.v.get(&[g, r[0], a])));
                    // here `a` is the raised form index
                    vb.push(sum(n, 2, |r| h(a, r[0]) * h(m, r[1]) * d.v.get(&[r[1], g, r[0]]).conj()));
                }
            }
        }
        let u = (0..n * n).map(|gm| sum(n, 1, |r| h(gm % n, r[0]) * d.u.get(&[gm / n, r[0]]))).collect();
        Self { n, s, v, vb, u }
    }

    fn s(&self, g: usize, m: usize, a: usize, x: usize) -> &CRat {
        let n = self.n;
        &self.s[((g * n + m) * n + a) * n + x]
    }

    fn v(&self, g: usize, m: usize, a: usize) -> &CRat {
        let n = self.n;
        &self.v[(g * n + m) * n + a]
    }

    fn vb(&self, g: usize, m: usize, a: usize) -> &CRat {
        let n = self.n;
        &self.vb[(g * n + m) * n + a]
    }

    fn u(&self, g: usize, m: usize) -> &CRat {
        &self.u[g * self.n + m]
    }
}

/// `|S|^2 = S_{a bbar c dbar} conj(S_{r sbar t kbar}) h^{a rbar} h^{s bbar} h^{c tbar} h^{k dbar}`
pub fn norm_sq_s(d: &CurvatureData) -> CRat {
    let n = d.n();
    let h = |a: usize, b: usize| d.h.raised(a, b).clone();
    // raise one slot of conj(S) at a time
    let mut t = DenseTensor::from_fn(n, 4, |i| d.s.get(i).conj());
    t = DenseTensor::from_fn(n, 4, |i| sum(n, 1, |r| h(i[0], r[0]) * t.get(&[r[0], i[1], i[2], i[3]])));
    t = DenseTensor::from_fn(n, 4, |i| sum(n, 1, |r| h(r[0], i[1]) * t.get(&[i[0], r[0], i[2], i[3]])));
    t = DenseTensor::from_fn(n, 4, |i| sum(n, 1, |r| h(i[2], r[0]) * t.get(&[i[0], i[1], r[0], i[3]])));
    t = DenseTensor::from_fn(n, 4, |i| sum(n, 1, |r| h(r[0], i[3]) * t.get(&[i[0], i[1], i[2], r[0]])));
    sum(n, 4, |i| d.s.get(i) * t.get(i))
}

/// `|V|^2 = V_{a bbar c} conj(V_{r sbar t}) h^{a rbar} h^{s bbar} h^{c tbar}`
pub fn norm_sq_v(d: &CurvatureData) -> CRat {
    let n = d.n();
    let h = |a: usize, b: usize| d.h.raised(a, b).clone();
    let mut t = DenseTensor::from_fn(n, 3, |i| d.v.get(i).conj());
    t = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(i[0], r[0]) * t.get(&[r[0], i[1], i[2]])));
    t = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(r[0], i[1]) * t.get(&[i[0], r[0], i[2]])));
    t = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(i[2], r[0]) * t.get(&[i[0], i[1], r[0]])));
    sum(n, 3, |i| d.v.get(i) * t.get(i))
}

/// `S^{T2} = -|S|^2 / 2`
pub fn s_t2(d: &CurvatureData) -> CRat {
    -norm_sq_s(d) * real(rat(1, 2))
}

/// `-(i/2) S_{a bbar c mbar} V^{bbar c mbar}`
pub fn x_t2(d: &CurvatureData) -> Vec<CRat> {
    let n = d.n();
    let h = |a: usize, b: usize| d.h.raised(a, b).clone();
    let coef = -i_unit() * real(rat(1, 2));
    // V^{bbar c mbar} = h^{r bbar} h^{c sbar} h^{t mbar} V_{r sbar t}
    let mut up = d.v.clone();
    up = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(r[0], i[0]) * up.get(&[r[0], i[1], i[2]])));
    up = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(i[1], r[0]) * up.get(&[i[0], r[0], i[2]])));
    up = DenseTensor::from_fn(n, 3, |i| sum(n, 1, |r| h(r[0], i[2]) * up.get(&[i[0], i[1], r[0]])));
    (0..n).map(|a| &coef * sum(n, 3, |i| d.s.get(&[a, i[0], i[1], i[2]]) * up.get(i))).collect()
}

/// `I'_{T2}` without derivative and `P` terms: `-|V|^2 / 2`
pub fn i_t2(d: &CurvatureData) -> CRat {
    -norm_sq_v(d) * real(rat(1, 2))
}

pub fn s_t3(d: &CurvatureData) -> CRat {
    let m = Mixed::new(d);
    let acc = sum(d.n(), 6, |i| {
        let (g1, g2, g3, a, v, mu) = (i[0], i[1], i[2], i[3], i[4], i[5]);
        m.s(g1, g2, a, v) * (m.s(g2, g3, v, mu) * m.s(g3, g1, mu, a) + m.s(g2, g3, mu, a) * m.s(g3, g1, v, mu))
    });
    acc * real(rat(1, 6))
}

pub fn x_t3(d: &CurvatureData) -> Vec<CRat> {
    let m = Mixed::new(d);
    let i = i_unit();
    (0..d.n())
        .map(|a| {
            let acc = sum(d.n(), 5, |x| {
                let (g1, g2, g3, mu, nu) = (x[0], x[1], x[2], x[3], x[4]);
                -m.v(g1, g2, a) * m.s(g2, g3, mu, nu) * m.s(g3, g1, nu, mu)
                    + m.s(g1, g2, a, nu) * m.v(g2, g3, mu) * m.s(g3, g1, nu, mu)
                    + m.s(g1, g2, a, nu) * m.s(g2, g3, nu, mu) * m.v(g3, g1, mu)
            });
            &i * acc * real(rat(1, 6))
        })
        .collect()
}

/// `I'_{T3}` without derivative and `P` terms.
pub fn i_t3(d: &CurvatureData) -> CRat {
    let m = Mixed::new(d);
    let acc = sum(d.n(), 5, |x| {
        let (g1, g2, g3, mu, nu) = (x[0], x[1], x[2], x[3], x[4]);
        -m.u(g1, g2) * m.s(g2, g3, mu, nu) * m.s(g3, g1, nu, mu)
            + m.vb(g1, g2, mu) * m.v(g2, g3, nu) * m.s(g3, g1, mu, nu)
            + m.vb(g1, g2, mu) * m.s(g2, g3, mu, nu) * m.v(g3, g1, nu)
    });
    acc * real(rat(1, 6))
}
