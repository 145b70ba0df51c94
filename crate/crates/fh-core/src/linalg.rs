//! Small dense linear-algebra kernels: cyclic Jacobi eigensolver and the
//! spectral norms built on it.
//!
//! These back the exact identity checks and serve as the dense reference
//! route against which the matrix-free power iterations are validated, so
//! they intentionally share no code with the iterative paths. Sizes stay
//! in the hundreds; O(n³) with machine-precision eigenvalues is the right
//! trade-off here.

use num_complex::Complex64;

/// Eigenvalues of a real symmetric matrix (row-major, `n x n`), sorted
/// ascending. Cyclic Jacobi rotations; accurate to ~n·ε·‖A‖.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    let (vals, _) = jacobi(a, n, false);
    vals
}

/// Eigen-decomposition of a real symmetric matrix. Returns `(values,
/// vectors)` with eigenvalues ascending and `vectors` row-major with the
/// k-th eigenvector in column k.
pub fn symmetric_eigen(a: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let (vals, vecs) = jacobi(a, n, true);
    (vals, vecs.expect("vectors requested"))
}

fn jacobi(a: &[f64], n: usize, want_vectors: bool) -> (Vec<f64>, Option<Vec<f64>>) {
    assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    if n <= 1 {
        let vals = if n == 1 { vec![m[0]] } else { vec![] };
        return (vals, v);
    }

    let off = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += m[p * n + q] * m[p * n + q];
            }
        }
        s
    };
    let fro: f64 = m.iter().map(|x| x * x).sum();
    let tol = f64::EPSILON * f64::EPSILON * fro.max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        if off(&m) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // tan of the rotation angle, smaller root for stability
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let vals: Vec<f64> = idx.iter().map(|&i| diag[i]).collect();
    let vecs = v.map(|v| {
        let mut sorted = vec![0.0; n * n];
        for (new_col, &old_col) in idx.iter().enumerate() {
            for row in 0..n {
                sorted[row * n + new_col] = v[row * n + old_col];
            }
        }
        sorted
    });
    (vals, vecs)
}

/// Eigenvalues of a complex Hermitian matrix (row-major), ascending.
///
/// Uses the real embedding H = B + iC ↦ [[B, -C], [C, B]], whose spectrum
/// is that of H with every eigenvalue doubled; adjacent pairs of the
/// sorted 2n values are averaged back together.
pub fn hermitian_eigenvalues(a: &[Complex64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let m = 2 * n;
    let mut e = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = a[i * n + j];
            e[i * m + j] = z.re;
            e[i * m + (n + j)] = -z.im;
            e[(n + i) * m + j] = z.im;
            e[(n + i) * m + (n + j)] = z.re;
        }
    }
    let doubled = symmetric_eigenvalues(&e, m);
    (0..n).map(|k| 0.5 * (doubled[2 * k] + doubled[2 * k + 1])).collect()
}

/// Largest singular value of a real matrix (row-major, `n x n`) via the
/// eigenvalues of AᵀA.
pub fn spectral_norm_real(a: &[f64], n: usize) -> f64 {
    assert_eq!(a.len(), n * n);
    let mut ata = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += a[k * n + i] * a[k * n + j];
            }
            ata[i * n + j] = s;
        }
    }
    let vals = symmetric_eigenvalues(&ata, n);
    vals.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Largest singular value of a complex matrix via the eigenvalues of A*A.
pub fn spectral_norm_complex(a: &[Complex64], n: usize) -> f64 {
    assert_eq!(a.len(), n * n);
    let mut ata = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += a[k * n + i].conj() * a[k * n + j];
            }
            ata[i * n + j] = s;
        }
    }
    let vals = hermitian_eigenvalues(&ata, n);
    vals.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Eigenvalues (ascending) of the similarity-symmetrized product
/// T₂^{1/2} T₁ T₂^{1/2} of two real symmetric matrices with T₂ positive
/// semidefinite. These are the eigenvalues of T₁T₂.
pub fn product_eigenvalues_sym(t1: &[f64], t2: &[f64], n: usize) -> Vec<f64> {
    let (vals, vecs) = symmetric_eigen(t2, n);
    // T₂^{1/2} = Q Λ^{1/2} Qᵀ
    let mut root = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += vecs[i * n + k] * vals[k].max(0.0).sqrt() * vecs[j * n + k];
            }
            root[i * n + j] = s;
        }
    }
    let prod = matmul(&matmul(&root, t1, n), &root, n);
    symmetric_eigenvalues(&prod, n)
}

fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}
