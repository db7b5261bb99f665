//! `L`, `Lambda`, `H` and the hermitian inner product.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::linalg::{determinant, nullspace};
use crate::arith::{i_unit, int, real, CRat};

use super::{bits, AltForm, FormError, HermitianForm};

/// `omega = i h_{a bbar} theta^a ^ theta^{b bar}`
pub fn omega(h: &HermitianForm) -> AltForm {
    let n = h.n();
    let i = i_unit();
    let mut out = AltForm::zero(n);
    for a in 0..n {
        for b in 0..n {
            out.add_term((1 << a) | (1 << (n + b)), &i * h.lower(a, b));
        }
    }
    out
}

/// `L phi = omega ^ phi`
pub fn lefschetz_l(h: &HermitianForm, phi: &AltForm) -> AltForm {
    omega(h).wedge(phi)
}

pub fn lefschetz_l_pow(h: &HermitianForm, phi: &AltForm, k: u32) -> AltForm {
    let w = omega(h);
    (0..k).fold(phi.clone(), |acc, _| w.wedge(&acc))
}

/// The adjoint of `L`:
/// `(Lambda phi)_{I' J'bar} = -i (-1)^(p-1) h^{a bbar} phi_{a I' bbar J'bar}`.
pub fn lambda(h: &HermitianForm, phi: &AltForm) -> AltForm {
    let n = phi.n();
    assert_eq!(n, h.n());
    let low = (1u32 << n) - 1;
    let minus_i = -i_unit();
    let mut out = AltForm::zero(n);
    for (m, c) in phi.terms() {
        let (holo, anti) = (m & low, m >> n);
        let p = holo.count_ones();
        if p == 0 || anti == 0 {
            continue;
        }
        let base = if p % 2 == 1 { minus_i.clone() } else { -&minus_i } * c;
        for (pa, a) in bits(holo).enumerate() {
            for (pb, b) in bits(anti).enumerate() {
                let hab = h.raised(a, b);
                if hab.is_zero() {
                    continue;
                }
                let t = &base * hab;
                let t = if (pa + pb) % 2 == 1 { -t } else { t };
                out.add_term(m & !(1 << a) & !(1 << (n + b)), t);
            }
        }
    }
    out
}

pub fn lambda_pow(h: &HermitianForm, phi: &AltForm, k: u32) -> AltForm {
    (0..k).fold(phi.clone(), |acc, _| lambda(h, &acc))
}

/// `H phi = (n - p - q) phi` on each bidegree component.
pub fn h_op(phi: &AltForm) -> AltForm {
    let n = phi.n() as i64;
    AltForm::from_terms(
        phi.n(),
        phi.terms().map(|(m, c)| (m, c * real(int(n - m.count_ones() as i64)))),
    )
}

/// `<phi, psi> = (1/p!q!) phi_{I Jbar} conj(psi)^{I Jbar}`, indices raised by `h`.
pub fn inner_product(h: &HermitianForm, phi: &AltForm, psi: &AltForm) -> Result<CRat, FormError> {
    let (bp, bq) = (phi.bidegree(), psi.bidegree());
    let homogeneous = |f: &AltForm, b: Option<(u32, u32)>| f.is_zero() || b.is_some();
    if !homogeneous(phi, bp) || !homogeneous(psi, bq) || (bp.is_some() && bq.is_some() && bp != bq) {
        return Err(FormError::BidegreeMismatch(bp, bq));
    }
    let n = phi.n();
    let low = (1u32 << n) - 1;
    // det [h^{A_a Bbar_b}] for unbarred set A and barred set B
    let mut minors: HashMap<(u32, u32), CRat> = HashMap::new();
    let mut minor = |rows: u32, cols: u32| -> CRat {
        minors
            .entry((rows, cols))
            .or_insert_with(|| {
                let r: Vec<usize> = bits(rows).collect();
                let c: Vec<usize> = bits(cols).collect();
                if r.is_empty() {
                    return CRat::one();
                }
                let m: Vec<Vec<CRat>> = r.iter().map(|&a| c.iter().map(|&b| h.raised(a, b).clone()).collect()).collect();
                determinant(&m)
            })
            .clone()
    };
    let mut total = CRat::zero();
    for (m1, x) in phi.terms() {
        let (i, j) = (m1 & low, m1 >> n);
        for (m2, y) in psi.terms() {
            let (k, l) = (m2 & low, m2 >> n);
            let d1 = minor(i, k);
            if d1.is_zero() {
                continue;
            }
            let d2 = minor(l, j);
            total += x * y.conj() * d1 * d2;
        }
    }
    Ok(total)
}

/// Basis masks of bidegree `(p, q)`.
pub fn masks_of_bidegree(n: usize, p: u32, q: u32) -> Vec<u32> {
    let low = (1u32 << n) - 1;
    (0u32..(1 << (2 * n))).filter(|m| (m & low).count_ones() == p && (m >> n).count_ones() == q).collect()
}

/// A basis of the primitive forms `ker Lambda` in bidegree `(p, q)`.
pub fn primitive_basis(h: &HermitianForm, p: u32, q: u32) -> Vec<AltForm> {
    let n = h.n();
    let cols = masks_of_bidegree(n, p, q);
    if p == 0 || q == 0 {
        return cols.iter().map(|&m| AltForm::from_terms(n, [(m, CRat::one())])).collect();
    }
    let rows = masks_of_bidegree(n, p - 1, q - 1);
    let images: Vec<AltForm> = cols.iter().map(|&m| lambda(h, &AltForm::from_terms(n, [(m, CRat::one())]))).collect();
    let matrix: Vec<Vec<CRat>> = rows.iter().map(|&r| images.iter().map(|f| f.coeff(r)).collect()).collect();
    nullspace(&matrix, cols.len())
        .into_iter()
        .map(|v| AltForm::from_terms(n, cols.iter().copied().zip(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::sample::{random_form, random_hermitian, HermitianKind};
    use super::super::Slot;
    use super::*;
    use crate::arith::{factorial, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// All index tuples of length k in 0..n.
    fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0..k).fold(vec![vec![]], |acc, _| {
            acc.into_iter().flat_map(|t| (0..n).map(move |a| [t.clone(), vec![a]].concat())).collect()
        })
    }

    /// Inner product by summing over all index tuples.
    fn inner_brute(h: &HermitianForm, phi: &AltForm, psi: &AltForm, p: usize, q: usize) -> CRat {
        let n = h.n();
        let mut total = CRat::zero();
        for a in tuples(n, p) {
            for b in tuples(n, q) {
                let x = phi.component(&a, &b);
                if x.is_zero() {
                    continue;
                }
                for g in tuples(n, p) {
                    for d in tuples(n, q) {
                        let y = psi.component(&g, &d).conj();
                        let mut w = x.clone() * y;
                        for t in 0..p {
                            w = w * h.raised(a[t], g[t]);
                        }
                        for t in 0..q {
                            w = w * h.raised(d[t], b[t]);
                        }
                        total += w;
                    }
                }
            }
        }
        total / real(factorial(p as u32) * factorial(q as u32))
    }

    #[test]
    fn basics() {
        let h = HermitianForm::identity(3);
        assert_eq!(lefschetz_l(&h, &AltForm::one(3)), omega(&h));
        assert_eq!(lambda(&h, &omega(&h)), AltForm::constant(3, real(int(3))));
        let th = AltForm::theta(3, Slot::Holo(0));
        assert!(lambda(&h, &th).is_zero());
        assert_eq!(inner_product(&h, &th, &th).unwrap(), CRat::one());
        assert!(matches!(
            inner_product(&h, &th, &AltForm::theta(3, Slot::Anti(0))),
            Err(FormError::BidegreeMismatch(..))
        ));
        // omega^2 for n = 2, h = 1: i^2 * 2 * th1 thb1 th2 thb2 = 2 th1 th2 thb1 thb2
        let h2 = HermitianForm::identity(2);
        let w2 = omega(&h2).wedge(&omega(&h2));
        assert_eq!(w2, AltForm::basis(2, &[0, 1], &[0, 1]).scale(&real(int(2))));
    }

    #[test]
    fn inner_product_matches_brute_force_and_adjointness() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=3usize {
            for kind in [HermitianKind::Positive, HermitianKind::Indefinite] {
                let h = random_hermitian(&mut rng, n, kind);
                for p in 0..=n as u32 {
                    for q in 0..=n as u32 {
                        let phi = random_form(&mut rng, n, p, q);
                        let psi = random_form(&mut rng, n, p, q);
                        let fast = inner_product(&h, &phi, &psi).unwrap();
                        assert_eq!(fast, inner_brute(&h, &phi, &psi, p as usize, q as usize));
                        assert_eq!(inner_product(&h, &psi, &phi).unwrap(), fast.conj());
                        if p < n as u32 && q < n as u32 {
                            let big = random_form(&mut rng, n, p + 1, q + 1);
                            let lhs = inner_product(&h, &lefschetz_l(&h, &phi), &big).unwrap();
                            let rhs = inner_product(&h, &phi, &lambda(&h, &big)).unwrap();
                            assert_eq!(lhs, rhs, "n={n} p={p} q={q}");
                        }
                        if kind == HermitianKind::Positive && !phi.is_zero() {
                            let norm = inner_product(&h, &phi, &phi).unwrap();
                            assert!(norm.im.is_zero() && norm.re > rat(0, 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_forms_are_killed() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = random_hermitian(&mut rng, 3, HermitianKind::Indefinite);
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let basis = primitive_basis(&h, p, q);
            assert!(!basis.is_empty() || (p + q) > 3);
            for f in &basis {
                assert!(lambda(&h, f).is_zero());
            }
        }
        // dim P^{1,1} = n^2 - 1
        assert_eq!(primitive_basis(&h, 1, 1).len(), 8);
    }
}
