//! Dense exact linear algebra over a field-like [`Ring`].

use super::Ring;

pub type Matrix<K> = Vec<Vec<K>>;

pub fn identity<K: Ring>(n: usize) -> Matrix<K> {
    (0..n).map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect()).collect()
}

pub fn mat_mul<K: Ring>(a: &Matrix<K>, b: &Matrix<K>) -> Matrix<K> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(K::zero(), |acc, k| {
                        if row[k].is_zero() {
                            acc
                        } else {
                            acc + row[k].clone() * b[k][j].clone()
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref<K: Ring>(m: &mut Matrix<K>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].try_inv().expect("nonzero pivot must be invertible");
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    if !m[row][c].is_zero() {
                        m[r][c] = m[r][c].clone() - f.clone() * m[row][c].clone();
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn determinant<K: Ring>(a: &Matrix<K>) -> K {
    let n = a.len();
    let mut m = a.clone();
    let mut det = K::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else { return K::zero() };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det = det * m[col][col].clone();
        let inv = m[col][col].try_inv().expect("nonzero pivot must be invertible");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * inv.clone();
            for c in col..n {
                m[r][c] = m[r][c].clone() - f.clone() * m[col][c].clone();
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse<K: Ring>(a: &Matrix<K>) -> Option<Matrix<K>> {
    let n = a.len();
    let mut m: Matrix<K> = a
        .iter()
        .zip(identity::<K>(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of `{x : a x = 0}` for an `rows x cols` matrix.
pub fn nullspace<K: Ring>(a: &Matrix<K>, cols: usize) -> Vec<Vec<K>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, cols);
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![K::zero(); cols];
        v[f] = K::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        v
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{crat, int, rat, CRat, Rat};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&a), int(18));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
    }

    #[test]
    fn complex_inverse() {
        let a: Matrix<CRat> = vec![
            vec![crat(int(1), int(0)), crat(int(0), int(1))],
            vec![crat(int(0), int(-1)), crat(int(3), int(0))],
        ];
        assert_eq!(determinant(&a), crat(int(2), int(0)));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&inv, &a), identity(2));
        assert_eq!(inv[0][0], crat(rat(3, 2), int(0)));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot = row.iter().zip(v).fold(Rat::zero(), |acc, (x, y)| acc + x * y);
                assert!(dot.is_zero());
            }
        }
    }
}
