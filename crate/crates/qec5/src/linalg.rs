//! Dense complex matrices and vectors, sized for a five-qubit Hilbert space.
//!
//! Row-major storage over `Complex64`. Shapes are tiny (at most 32×32 for
//! operators, 64×64 for the real embedding used by the eigenvalue routine),
//! so every operation is a plain loop; no sparsity, no blocking.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![C_ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C_ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from row slices; all rows must have equal length.
    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = CMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    /// Outer product `a · b†` (entry `[i][j] = a[i] * conj(b[j])`).
    pub fn outer(a: &[Complex64], b: &[Complex64]) -> Self {
        CMatrix::from_fn(a.len(), b.len(), |i, j| a[i] * b[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o += *r;
        }
        out
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o -= *r;
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v *= c;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Kronecker product with `self`'s indices most significant.
    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == C_ZERO {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        out[(i * rhs.rows + p, j * rhs.cols + q)] = a * rhs[(p, q)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Hilbert–Schmidt inner product `Tr(self† · rhs)`.
    pub fn hs_inner(&self, rhs: &CMatrix) -> Complex64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&CMatrix::identity(self.rows)) <= tol
    }

    /// Max-abs deviation from Hermiticity, `max |a_ij − conj(a_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Max-abs deviation of `U·U†` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        assert!(self.is_square());
        self.mul(&self.adjoint())
            .max_abs_diff(&CMatrix::identity(self.rows))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product of coefficient vectors, `a`'s indices most significant.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![C_ZERO; a.len() * b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i * b.len() + j] = x * y;
        }
    }
    out
}

/// Inner product `⟨a|b⟩ = Σ conj(a_i) b_i`.
pub fn inner_vec(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Euclidean norm.
pub fn norm_vec(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Solve the square system `A x = b` by Gaussian elimination with partial
/// pivoting. The systems solved here (16×16 process-matrix inversions) are
/// well conditioned; a vanishing pivot signals a corrupted input.
pub fn solve(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.len());
    let n = a.rows();
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let scale = m.max_abs().max(1.0);

    for col in 0..n {
        let (pivot_row, pivot_mag) =
            (col..n)
                .map(|r| (r, m[(r, col)].norm()))
                .fold(
                    (col, -1.0),
                    |best, cand| if cand.1 > best.1 { cand } else { best },
                );
        if pivot_mag <= 1e-13 * scale {
            return Err(Error::SingularSystem);
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = m[(col, j)];
                m[(col, j)] = m[(pivot_row, j)];
                m[(pivot_row, j)] = tmp;
            }
            rhs.swap(col, pivot_row);
        }
        let pivot = m[(col, col)];
        for r in (col + 1)..n {
            let factor = m[(r, col)] / pivot;
            if factor == C_ZERO {
                continue;
            }
            for j in col..n {
                let v = m[(col, j)];
                m[(r, j)] -= factor * v;
            }
            let v = rhs[col];
            rhs[r] -= factor * v;
        }
    }

    let mut x = vec![C_ZERO; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for j in (row + 1)..n {
            acc -= m[(row, j)] * x[j];
        }
        x[row] = acc / m[(row, row)];
    }
    Ok(x)
}

/// Smallest eigenvalue of a Hermitian matrix.
///
/// The Hermitian matrix `A = B + iC` is embedded as the real symmetric
/// matrix `[[B, −C], [C, B]]`, whose spectrum is that of `A` with every
/// eigenvalue doubled; a cyclic Jacobi iteration then diagonalizes it.
pub fn min_hermitian_eigenvalue(a: &CMatrix) -> f64 {
    assert!(a.is_square());
    let n = a.rows();
    let m = 2 * n;
    let mut s = vec![0.0f64; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            s[i * m + j] = z.re;
            s[(i + n) * m + (j + n)] = z.re;
            s[i * m + (j + n)] = -z.im;
            s[(i + n) * m + j] = z.im;
        }
    }

    let frob: f64 = s.iter().map(|v| v * v).sum::<f64>().sqrt();
    let stop = 1e-14 * (1.0 + frob);

    for _sweep in 0..60 {
        let mut off: f64 = 0.0;
        for p in 0..m {
            for q in (p + 1)..m {
                off += s[p * m + q] * s[p * m + q];
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = s[p * m + q];
                if apq.abs() <= stop / (m as f64) {
                    continue;
                }
                let theta = (s[q * m + q] - s[p * m + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    1.0 / (theta - (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                // rows p,q
                for k in 0..m {
                    let akp = s[p * m + k];
                    let akq = s[q * m + k];
                    s[p * m + k] = c * akp - sn * akq;
                    s[q * m + k] = sn * akp + c * akq;
                }
                // columns p,q
                for k in 0..m {
                    let akp = s[k * m + p];
                    let akq = s[k * m + q];
                    s[k * m + p] = c * akp - sn * akq;
                    s[k * m + q] = sn * akp + c * akq;
                }
            }
        }
    }

    (0..m).map(|i| s[i * m + i]).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ry_pi() -> CMatrix {
        // exp(−iπY/2) = [[0, −1], [1, 0]]
        CMatrix::from_rows(&[&[C_ZERO, -C_ONE], &[C_ONE, C_ZERO]])
    }

    fn pauli_y() -> CMatrix {
        CMatrix::from_rows(&[&[C_ZERO, -C_I], &[C_I, C_ZERO]])
    }

    #[test]
    fn kron_identity_case() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.kron(&i2), CMatrix::identity(4));
    }

    #[test]
    fn kron_basis_vector_case() {
        let ket0 = [C_ONE, C_ZERO];
        let v = kron_vec(&ket0, &ket0);
        assert_eq!(v, vec![C_ONE, C_ZERO, C_ZERO, C_ZERO]);
    }

    #[test]
    fn kron_ry_pi_hand_expansion() {
        // Direct 2×2 Kronecker expansion of Ry(π) ⊗ Ry(π), all 16 entries.
        let r = ry_pi();
        let expect = CMatrix::from_rows(&[
            &[C_ZERO, C_ZERO, C_ZERO, C_ONE],
            &[C_ZERO, C_ZERO, -C_ONE, C_ZERO],
            &[C_ZERO, -C_ONE, C_ZERO, C_ZERO],
            &[C_ONE, C_ZERO, C_ZERO, C_ZERO],
        ]);
        let got = r.kron(&r);
        assert!(got.max_abs_diff(&expect) < 1e-15);
        assert_eq!(got[(3, 0)], C_ONE);
        // The same entry for Y ⊗ Y carries the opposite sign (Y = i·Ry(π)).
        let yy = pauli_y().kron(&pauli_y());
        assert_eq!(yy[(3, 0)], -C_ONE);
        assert!(yy.max_abs_diff(&r.kron(&r).scale(-C_ONE)) < 1e-15);
    }

    #[test]
    fn kron_associativity() {
        let a = CMatrix::from_fn(2, 2, |i, j| c64((i + 2 * j) as f64, (i * j) as f64 - 0.5));
        let b = ry_pi();
        let c = pauli_y();
        let left = a.kron(&b).kron(&c);
        let right = a.kron(&b.kron(&c));
        assert!(left.max_abs_diff(&right) < 1e-12);
    }

    #[test]
    fn adjoint_and_hs_inner() {
        let y = pauli_y();
        assert!(y.adjoint().max_abs_diff(&y) < 1e-15); // Hermitian
        assert_eq!(y.hs_inner(&y), c64(2.0, 0.0));
        let x = CMatrix::from_rows(&[&[C_ZERO, C_ONE], &[C_ONE, C_ZERO]]);
        assert_eq!(x.hs_inner(&y).norm(), 0.0);
    }

    #[test]
    fn solve_roundtrip() {
        // Deterministic well-conditioned 16×16 system.
        let n = 16;
        let a = CMatrix::from_fn(n, n, |i, j| {
            let base = if i == j { 4.0 } else { 0.0 };
            c64(
                base + ((i * 7 + j * 3) % 5) as f64 * 0.3,
                ((i + 2 * j) % 7) as f64 * 0.2 - 0.6,
            )
        });
        let x: Vec<Complex64> = (0..n)
            .map(|i| c64(i as f64 * 0.5 - 3.0, (i % 3) as f64))
            .collect();
        let b = a.mul_vec(&x);
        let got = solve(&a, &b).unwrap();
        let err = got
            .iter()
            .zip(x.iter())
            .map(|(g, e)| (g - e).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-9, "err = {err}");
    }

    #[test]
    fn solve_singular_detected() {
        let mut a = CMatrix::zeros(3, 3);
        a[(0, 0)] = C_ONE;
        a[(1, 1)] = C_ONE;
        // third row all zero
        let b = [C_ONE, C_ONE, C_ZERO];
        assert_eq!(solve(&a, &b), Err(Error::SingularSystem));
    }

    #[test]
    fn min_eigenvalue_paulis_and_projectors() {
        let y = pauli_y();
        assert!((min_hermitian_eigenvalue(&y) + 1.0).abs() < 1e-12);
        let mut p0 = CMatrix::zeros(2, 2);
        p0[(0, 0)] = C_ONE;
        assert!(min_hermitian_eigenvalue(&p0).abs() < 1e-12);
        let mut d = CMatrix::zeros(4, 4);
        for (i, v) in [0.1, 0.2, 0.3, 0.4].iter().enumerate() {
            d[(i, i)] = c64(*v, 0.0);
        }
        assert!((min_hermitian_eigenvalue(&d) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn min_eigenvalue_dense_hermitian() {
        // A = V D V† with V unitary; the minimum of D must come back.
        let hu = CMatrix::from_rows(&[
            &[c64(1.0 / 2f64.sqrt(), 0.0), c64(1.0 / 2f64.sqrt(), 0.0)],
            &[c64(1.0 / 2f64.sqrt(), 0.0), c64(-1.0 / 2f64.sqrt(), 0.0)],
        ]);
        let v = hu.kron(&pauli_y());
        let mut d = CMatrix::zeros(4, 4);
        for (i, ev) in [-0.7, 0.1, 0.4, 2.2].iter().enumerate() {
            d[(i, i)] = c64(*ev, 0.0);
        }
        let a = v.mul(&d).mul(&v.adjoint());
        assert!(a.is_hermitian(1e-12));
        assert!((min_hermitian_eigenvalue(&a) + 0.7).abs() < 1e-10);
    }
}
