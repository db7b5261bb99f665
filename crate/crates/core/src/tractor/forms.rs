use num_traits::Zero;

use crate::arith::{factorial, i_unit, int, real, CRat};
use crate::lefschetz::{lambda_pow, lefschetz_l_pow, AltForm, ExtendedForm, Slot};

use super::{s_phi, s_phi_matrix, s_prime, ExtCurvature, PhiPartition, TractorError};

/// The curvature 2-forms `Omega_g^m` on the tangential algebra with the
/// extra generator `theta`, using `theta^inf = i theta`.
pub fn curvature_forms(ext: &ExtCurvature) -> Vec<Vec<ExtendedForm>> {
    let n = ext.n();
    let i = i_unit();
    (0..n)
        .map(|g| {
            (0..n)
                .map(|m| {
                    let mut even = AltForm::zero(n);
                    let mut th = AltForm::zero(n);
                    for a in 0..n {
                        for b in 0..n {
                            let c = ext.get(g, m, a, b);
                            if !c.is_zero() {
                                even = even.add_ref(&AltForm::basis(n, &[a], &[b]).scale(c));
                            }
                        }
                        // theta^a ^ (-i theta) = i theta ^ theta^a
                        th = th.add_ref(&AltForm::theta(n, Slot::Holo(a)).scale(&(&i * ext.get(g, m, a, n))));
                        // (i theta) ^ theta^bbar
                        th = th.add_ref(&AltForm::theta(n, Slot::Anti(a)).scale(&(&i * ext.get(g, m, n, a))));
                    }
                    ExtendedForm::new(even, th)
                })
                .collect()
        })
        .collect()
}

trait FormAlgebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, k: &CRat) -> Self;
}

impl FormAlgebra for ExtendedForm {
    fn zero_like(&self) -> Self {
        ExtendedForm::zero(self.n())
    }
    fn one_like(&self) -> Self {
        ExtendedForm::from_form(AltForm::one(self.n()))
    }
    fn add(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.wedge(o)
    }
    fn scale(&self, k: &CRat) -> Self {
        ExtendedForm::scale(self, k)
    }
}

impl FormAlgebra for AltForm {
    fn zero_like(&self) -> Self {
        AltForm::zero(self.n())
    }
    fn one_like(&self) -> Self {
        AltForm::one(self.n())
    }
    fn add(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.wedge(o)
    }
    fn scale(&self, k: &CRat) -> Self {
        AltForm::scale(self, k)
    }
}

/// `prod_j tr((i Omega)^{m_j})` for a matrix of even forms.
fn phi_generic<F: FormAlgebra>(forms: &[Vec<F>], part: &PhiPartition) -> F {
    let n = forms.len();
    let seed = &forms[0][0];
    let i = i_unit();
    let io: Vec<Vec<F>> = forms.iter().map(|row| row.iter().map(|x| x.scale(&i)).collect()).collect();
    let matmul = |a: &Vec<Vec<F>>, b: &Vec<Vec<F>>| -> Vec<Vec<F>> {
        (0..n)
            .map(|g| {
                (0..n)
                    .map(|m| (0..n).fold(seed.zero_like(), |acc, r| acc.add(&a[g][r].mul(&b[r][m]))))
                    .collect()
            })
            .collect()
    };
    let mut out = seed.one_like();
    for &mj in part.parts() {
        let mut pow = io.clone();
        for _ in 1..mj {
            pow = matmul(&pow, &io);
        }
        let tr = (0..n).fold(seed.zero_like(), |acc, g| acc.add(&pow[g][g]));
        out = out.mul(&tr);
    }
    out
}

/// `Phi(Omega)` evaluated in the extended exterior algebra.
pub fn phi_of_forms(forms: &[Vec<ExtendedForm>], part: &PhiPartition) -> ExtendedForm {
    phi_generic(forms, part)
}

/// Both sides of `Phi(Omega) = Phi_0 + Phi_1 + conj(Phi_1)` with
/// `Phi_0 = S^Phi omega^n` and
/// `Phi_1 = i n sum_p m_p S'^(p)_a theta^a ^ theta ^ omega^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiDecomposition {
    pub phi_omega: ExtendedForm,
    pub phi0: ExtendedForm,
    pub phi1: ExtendedForm,
    pub phi1_bar: ExtendedForm,
}

impl PhiDecomposition {
    pub fn residual(&self) -> ExtendedForm {
        self.phi_omega.sub_ref(&self.phi0).sub_ref(&self.phi1).sub_ref(&self.phi1_bar)
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }
}

pub fn phi_omega_decomposition(ext: &ExtCurvature, part: &PhiPartition) -> Result<PhiDecomposition, TractorError> {
    let n = ext.n();
    let h = ext.h();
    if part.degree() as usize != n {
        return Err(TractorError::DegreeMismatch { m: part.degree(), n });
    }
    let phi_omega = phi_of_forms(&curvature_forms(ext), part);
    let sphi = s_phi(&s_phi_matrix(ext, part)?, h);
    let w_n = lefschetz_l_pow(h, &AltForm::one(n), n as u32);
    let phi0 = ExtendedForm::from_form(w_n.scale(&sphi));
    let primes = s_prime(ext, part)?;
    let mut one_form = AltForm::zero(n);
    for (p, row) in primes.iter().enumerate() {
        let mp = real(int(part.parts()[p] as i64));
        for (a, x) in row.iter().enumerate() {
            one_form = one_form.add_ref(&AltForm::theta(n, Slot::Holo(a)).scale(&(x * &mp)));
        }
    }
    let coef = i_unit() * real(int(n as i64));
    let w_n1 = ExtendedForm::from_form(lefschetz_l_pow(h, &AltForm::one(n), n as u32 - 1));
    let phi1 = ExtendedForm::from_form(one_form)
        .wedge(&ExtendedForm::theta_gen(n))
        .wedge(&w_n1)
        .scale(&coef);
    let phi1_bar = phi1.conj();
    Ok(PhiDecomposition { phi_omega, phi0, phi1, phi1_bar })
}

/// Both sides of
/// `(i / (n! (n-1)!)) Lambda^{n-1}(Z_infbar -| Z_inf -| Phi(Omega~)) = -n S^Phi_{inf infbar}`
/// where `Omega~` lives on the tangential directions plus infinity.
pub fn infty_contraction(ext: &ExtCurvature, part: &PhiPartition) -> Result<(CRat, CRat), TractorError> {
    let n = ext.n();
    let h = ext.h();
    if part.degree() as usize != n {
        return Err(TractorError::DegreeMismatch { m: part.degree(), n });
    }
    let big = n + 1;
    let forms: Vec<Vec<AltForm>> = (0..n)
        .map(|g| {
            (0..n)
                .map(|m| {
                    let mut f = AltForm::zero(big);
                    for a in 0..big {
                        for b in 0..big {
                            let c = ext.get(g, m, a, b);
                            if !c.is_zero() {
                                f = f.add_ref(&AltForm::basis(big, &[a], &[b]).scale(c));
                            }
                        }
                    }
                    f
                })
                .collect()
        })
        .collect();
    let phi = phi_generic(&forms, part);
    let contracted = phi.contract(Slot::Holo(n)).contract(Slot::Anti(n));
    // drop everything still involving infinity and reindex the barred bits
    let holo_mask = (1u32 << n) - 1;
    let tangential = AltForm::from_terms(
        n,
        contracted.terms().filter_map(|(mask, c)| {
            let holo = mask & ((1u32 << big) - 1);
            let anti = mask >> big;
            if holo >> n != 0 || anti >> n != 0 {
                return None;
            }
            Some(((holo & holo_mask) | (anti << n), c.clone()))
        }),
    );
    let scalar = lambda_pow(h, &tangential, n as u32 - 1).coeff(0);
    let norm = real(factorial(n as u32) * factorial(n as u32 - 1));
    let lhs = i_unit() * scalar / norm;
    let rhs = -s_phi_matrix(ext, part)?[n][n].clone() * real(int(n as i64));
    Ok((lhs, rhs))
}
