//! Dense complex linear algebra: matrix helpers and Hermitian eigensolvers.
//!
//! Two eigensolvers are provided. [`jacobi_hermitian`] is a cyclic Jacobi
//! sweep acting directly on the Hermitian matrix with complex plane
//! rotations; it optionally accumulates eigenvectors and is used for all
//! representation-side spectra (dimensions up to a few hundred).
//! [`sym_eigenvalues`] is a Householder tridiagonalization followed by
//! implicit-shift QL, values only, for the large real symmetric matrices of
//! the regular-representation oracle (dimensions up to a few thousand).

use ndarray::Array2;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense complex matrix over the real scalar `F`.
pub type CMat<F> = Array2<Complex<F>>;

pub fn identity<F: Scalar>(n: usize) -> CMat<F> {
    Array2::from_diag_elem(n, Complex::new(F::one(), F::zero()))
}

pub fn zeros<F: Scalar>(rows: usize, cols: usize) -> CMat<F> {
    Array2::from_elem((rows, cols), Complex::new(F::zero(), F::zero()))
}

/// Conjugate transpose.
pub fn adjoint<F: Scalar>(a: &CMat<F>) -> CMat<F> {
    a.t().map(|z| z.conj())
}

/// Largest entry modulus.
pub fn max_abs<F: Scalar>(a: &CMat<F>) -> F {
    a.iter().fold(F::zero(), |m, z| m.max(z.norm()))
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff<F: Scalar>(a: &CMat<F>, b: &CMat<F>) -> F {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .fold(F::zero(), |m, (x, y)| m.max((*x - *y).norm()))
}

/// Largest entry modulus of `a - a†`.
pub fn hermitian_deviation<F: Scalar>(a: &CMat<F>) -> F {
    let n = a.nrows();
    let mut dev = F::zero();
    for i in 0..n {
        for j in i..n {
            dev = dev.max((a[[i, j]] - a[[j, i]].conj()).norm());
        }
    }
    dev
}

/// Kronecker product `a ⊗ b`.
pub fn kron<F: Scalar>(a: &CMat<F>, b: &CMat<F>) -> CMat<F> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij.norm_sqr() == F::zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Commutator norm `max |AB - BA|`.
pub fn commutator_norm<F: Scalar>(a: &CMat<F>, b: &CMat<F>) -> F {
    max_abs_diff(&a.dot(b), &b.dot(a))
}

fn off_diagonal_l1<F: Scalar>(a: &CMat<F>) -> F {
    let n = a.nrows();
    let mut s = F::zero();
    for p in 0..n {
        for q in (p + 1)..n {
            s = s + a[[p, q]].norm();
        }
    }
    s
}

fn total_l1<F: Scalar>(a: &CMat<F>) -> F {
    let n = a.nrows();
    let mut s = F::zero();
    for p in 0..n {
        for q in p..n {
            s = s + a[[p, q]].norm();
        }
    }
    s
}

const MAX_JACOBI_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and optionally eigenvectors of a Hermitian
/// matrix, by cyclic Jacobi sweeps with complex plane rotations.
///
/// The input is trusted to be Hermitian; only the upper triangle and the
/// real parts of the diagonal are read initially. Returned eigenvectors are
/// the columns of the second component, orthonormal, with `A v = λ v`.
pub fn jacobi_hermitian<F: Scalar>(
    a: &CMat<F>,
    want_vectors: bool,
) -> Result<(Vec<F>, Option<CMat<F>>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::mismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            n,
            a.ncols()
        )));
    }
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(|| zeros(0, 0))));
    }

    // Work on the Hermitian part: entries below the diagonal mirror above.
    let mut m = a.clone();
    for p in 0..n {
        m[[p, p]] = Complex::new(m[[p, p]].re, F::zero());
        for q in (p + 1)..n {
            let h = (m[[p, q]] + m[[q, p]].conj()) * Complex::new(F::from_f64_lossy(0.5), F::zero());
            m[[p, q]] = h;
            m[[q, p]] = h.conj();
        }
    }
    let mut vecs = want_vectors.then(|| identity::<F>(n));

    let eps = F::epsilon();
    let half = F::from_f64_lossy(0.5);
    for sweep in 0..MAX_JACOBI_SWEEPS {
        let sm = off_diagonal_l1(&m);
        let scale = total_l1(&m);
        if sm <= eps * scale || scale == F::zero() {
            let mut evals: Vec<F> = (0..n).map(|i| m[[i, i]].re).collect();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());
            evals = order.iter().map(|&i| evals[i]).collect();
            let sorted_vecs = vecs.map(|v| {
                let mut out = zeros(n, n);
                for (new_col, &old_col) in order.iter().enumerate() {
                    for r in 0..n {
                        out[[r, new_col]] = v[[r, old_col]];
                    }
                }
                out
            });
            return Ok((evals, sorted_vecs));
        }

        // NR-style threshold: skim small pivots during the first sweeps.
        let tresh = if sweep < 3 {
            F::from_f64_lossy(0.2) * sm / F::from_usize(n * n).unwrap()
        } else {
            F::zero()
        };

        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                let rho = apq.norm();
                let dp = m[[p, p]].re;
                let dq = m[[q, q]].re;
                // Entries drowned by the diagonal can be zeroed outright.
                if sweep > 3
                    && F::from_f64_lossy(100.0) * rho <= eps * dp.abs()
                    && F::from_f64_lossy(100.0) * rho <= eps * dq.abs()
                {
                    m[[p, q]] = Complex::new(F::zero(), F::zero());
                    m[[q, p]] = Complex::new(F::zero(), F::zero());
                    continue;
                }
                if rho <= tresh || rho == F::zero() {
                    continue;
                }

                // Phase that makes the (p,q) pivot real, then a real
                // Jacobi rotation on the reduced 2x2 block.
                let phase = apq / Complex::new(rho, F::zero());
                let h = dq - dp;
                let t = if rho <= eps * h.abs() {
                    rho / h
                } else {
                    let theta = half * h / rho;
                    let tt = F::one() / (theta.abs() + (F::one() + theta * theta).sqrt());
                    if theta < F::zero() {
                        -tt
                    } else {
                        tt
                    }
                };
                let c = F::one() / (F::one() + t * t).sqrt();
                let s = t * c;
                let cc = Complex::new(c, F::zero());
                let sc = Complex::new(s, F::zero());
                let sphase = sc * phase;
                let sphase_conj = sc * phase.conj();

                // A <- A·U with U = [[c, s],[-s·e^{-iφ}, c·e^{-iφ}]] on (p,q).
                for j in 0..n {
                    let ajp = m[[j, p]];
                    let ajq = m[[j, q]];
                    m[[j, p]] = cc * ajp - sphase_conj * ajq;
                    m[[j, q]] = sc * ajp + cc * phase.conj() * ajq;
                }
                // A <- U†·A.
                for j in 0..n {
                    let apj = m[[p, j]];
                    let aqj = m[[q, j]];
                    m[[p, j]] = cc * apj - sphase * aqj;
                    m[[q, j]] = sc * apj + cc * phase * aqj;
                }
                m[[p, q]] = Complex::new(F::zero(), F::zero());
                m[[q, p]] = Complex::new(F::zero(), F::zero());
                m[[p, p]] = Complex::new(m[[p, p]].re, F::zero());
                m[[q, q]] = Complex::new(m[[q, q]].re, F::zero());

                if let Some(v) = vecs.as_mut() {
                    for j in 0..n {
                        let vjp = v[[j, p]];
                        let vjq = v[[j, q]];
                        v[[j, p]] = cc * vjp - sphase_conj * vjq;
                        v[[j, q]] = sc * vjp + cc * phase.conj() * vjq;
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_JACOBI_SWEEPS))
}

fn pythag<F: Scalar>(a: F, b: F) -> F {
    let (a, b) = (a.abs(), b.abs());
    if a > b {
        let r = b / a;
        a * (F::one() + r * r).sqrt()
    } else if b == F::zero() {
        F::zero()
    } else {
        let r = a / b;
        b * (F::one() + r * r).sqrt()
    }
}

/// Householder reduction of a real symmetric matrix to tridiagonal form,
/// values only: returns (diagonal, subdiagonal with leading zero slot).
///
/// Operates on a flat row-major buffer; the contiguous inner loops carry
/// the n^3 cost and are written to vectorize.
fn tridiagonalize<F: Scalar>(a: &mut [F], n: usize) -> (Vec<F>, Vec<F>) {
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = F::zero();
        if l > 0 {
            let mut scale = F::zero();
            for k in 0..=l {
                scale = scale + a[i * n + k].abs();
            }
            if scale == F::zero() {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    let v = a[i * n + k] / scale;
                    a[i * n + k] = v;
                    h = h + v * v;
                }
                let f = a[i * n + l];
                let g = if f >= F::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i * n + l] = f - g;
                let mut fsum = F::zero();
                for j in 0..=l {
                    let mut g2 = F::zero();
                    let (row_j, row_i) = (&a[j * n..j * n + j + 1], &a[i * n..i * n + j + 1]);
                    for k in 0..=j {
                        g2 = g2 + row_j[k] * row_i[k];
                    }
                    for k in (j + 1)..=l {
                        g2 = g2 + a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g2 / h;
                    fsum = fsum + e[j] * a[i * n + j];
                }
                let hh = fsum / (h + h);
                for j in 0..=l {
                    let f2 = a[i * n + j];
                    let g2 = e[j] - hh * f2;
                    e[j] = g2;
                    for k in 0..=j {
                        let delta = f2 * e[k] + g2 * a[i * n + k];
                        a[j * n + k] = a[j * n + k] - delta;
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i * n + i];
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix, values only.
fn tql_values<F: Scalar>(d: &mut [F], e: &mut [F]) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = F::zero();
    let eps = F::epsilon();

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::NoConvergence(64));
            }
            let mut g = (d[l + 1] - d[l]) / (e[l] + e[l]);
            let mut r = pythag(g, F::one());
            let sign_r = if g >= F::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = F::one();
            let mut c = F::one();
            let mut p = F::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = pythag(f, g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + (c + c) * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
    Ok(())
}

/// All eigenvalues, ascending, of a real symmetric matrix.
///
/// Householder tridiagonalization plus implicit-shift QL; the input is
/// consumed as workspace.
pub fn sym_eigenvalues<F: Scalar>(a: Array2<F>) -> Result<Vec<F>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::mismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            n,
            a.ncols()
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut flat, _) = a.into_raw_vec_and_offset();
    let (mut d, mut e) = tridiagonalize(&mut flat, n);
    tql_values(&mut d, &mut e)?;
    d.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type M = CMat<f64>;

    fn random_hermitian(n: usize, seed: u64) -> M {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = zeros::<f64>(n, n);
        for i in 0..n {
            a[[i, i]] = Complex::new(rng.gen_range(-2.0..2.0), 0.0);
            for j in (i + 1)..n {
                let z = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                a[[i, j]] = z;
                a[[j, i]] = z.conj();
            }
        }
        a
    }

    fn random_symmetric(n: usize, seed: u64) -> Array2<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = Array2::zeros((n, n));
        for i in 0..n {
            a[[i, i]] = rng.gen_range(-2.0..2.0);
            for j in (i + 1)..n {
                let v = rng.gen_range(-1.0..1.0);
                a[[i, j]] = v;
                a[[j, i]] = v;
            }
        }
        a
    }

    #[test]
    fn jacobi_diagonal_input() {
        let mut a = zeros::<f64>(3, 3);
        a[[0, 0]] = Complex::new(3.0, 0.0);
        a[[1, 1]] = Complex::new(1.0, 0.0);
        a[[2, 2]] = Complex::new(2.0, 0.0);
        let (evals, _) = jacobi_hermitian(&a, false).unwrap();
        assert_eq!(evals, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn jacobi_pauli_x() {
        let mut a = zeros::<f64>(2, 2);
        a[[0, 1]] = Complex::new(1.0, 0.0);
        a[[1, 0]] = Complex::new(1.0, 0.0);
        let (evals, _) = jacobi_hermitian(&a, false).unwrap();
        assert!((evals[0] + 1.0).abs() < 1e-14);
        assert!((evals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_trace_identity() {
        let a = random_hermitian(8, 7);
        let (evals, _) = jacobi_hermitian(&a, false).unwrap();
        let trace: f64 = (0..8).map(|i| a[[i, i]].re).sum();
        let sum: f64 = evals.iter().sum();
        assert!((trace - sum).abs() < 1e-9, "trace {trace} vs sum {sum}");
    }

    #[test]
    fn jacobi_eigenvector_residuals() {
        let a = random_hermitian(12, 3);
        let (evals, vecs) = jacobi_hermitian(&a, true).unwrap();
        let v = vecs.unwrap();
        let av = a.dot(&v);
        for (k, &lam) in evals.iter().enumerate() {
            for r in 0..12 {
                let resid = av[[r, k]] - v[[r, k]] * Complex::new(lam, 0.0);
                assert!(resid.norm() < 1e-11, "residual {}", resid.norm());
            }
        }
        // Orthonormality of eigenvectors.
        let vtv = adjoint(&v).dot(&v);
        assert!(max_abs_diff(&vtv, &identity(12)) < 1e-12);
    }

    #[test]
    fn ql_matches_jacobi_on_real_symmetric() {
        for seed in [1u64, 2, 3] {
            let s = random_symmetric(24, seed);
            let c = s.map(|&x| Complex::new(x, 0.0));
            let (jac, _) = jacobi_hermitian(&c, false).unwrap();
            let ql = sym_eigenvalues(s).unwrap();
            for (a, b) in jac.iter().zip(ql.iter()) {
                assert!((a - b).abs() < 1e-10, "jacobi {a} vs ql {b}");
            }
        }
    }

    #[test]
    fn ql_handles_small_and_degenerate() {
        let a: Array2<f64> = Array2::from_diag_elem(5, 2.0);
        let evals = sym_eigenvalues(a).unwrap();
        assert!(evals.iter().all(|&x| (x - 2.0).abs() < 1e-14));
        let empty: Array2<f64> = Array2::zeros((0, 0));
        assert!(sym_eigenvalues(empty).unwrap().is_empty());
        let one = Array2::from_diag_elem(1, -3.5);
        assert_eq!(sym_eigenvalues(one).unwrap(), vec![-3.5]);
    }

    #[test]
    fn kron_dimensions_and_values() {
        let mut a = zeros::<f64>(2, 2);
        a[[0, 0]] = Complex::new(1.0, 0.0);
        a[[1, 1]] = Complex::new(2.0, 0.0);
        let b = identity::<f64>(3);
        let k = kron(&a, &b);
        assert_eq!(k.dim(), (6, 6));
        assert_eq!(k[[0, 0]].re, 1.0);
        assert_eq!(k[[5, 5]].re, 2.0);
        assert_eq!(k[[0, 3]].re, 0.0);
    }
}
