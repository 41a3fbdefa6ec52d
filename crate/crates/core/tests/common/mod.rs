//! Shared test helpers: an independent Jacobi eigensolver used as the SVD
//! oracle, seeded matrix generators, and small assertion utilities.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use sketchstep::linalg::{qr_reduced, DenseMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Independent of the library's SVD path.
pub fn jacobi_eigenvalues(a: &DenseMatrix) -> Vec<f64> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| a.row(i).to_vec()).collect();

    for _sweep in 0..200 {
        let mut off: f64 = 0.0;
        let mut diag: f64 = 0.0;
        for p in 0..n {
            diag = diag.max(m[p][p].abs());
            for q in p + 1..n {
                off = off.max(m[p][q].abs());
            }
        }
        if off <= 1e-14 * diag.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let app = m[p][p];
                let aqq = m[q][q];
                m[p][p] = app - t * apq;
                m[q][q] = aqq + t * apq;
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m[k][p];
                    let akq = m[k][q];
                    m[k][p] = akp - s * (akq + tau * akp);
                    m[p][k] = m[k][p];
                    m[k][q] = akq + s * (akp - tau * akq);
                    m[q][k] = m[k][q];
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(|a, b| b.partial_cmp(a).unwrap());
    eig
}

/// Singular values of A via Jacobi on the smaller of A^T A and A A^T.
pub fn singular_values_oracle(a: &DenseMatrix) -> Vec<f64> {
    let g = if a.rows() >= a.cols() {
        a.gram()
    } else {
        a.transpose().gram()
    };
    jacobi_eigenvalues(&g)
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect()
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

pub fn random_vector(len: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..len).map(|_| rng.sample(StandardNormal)).collect()
}

/// Random orthonormal-columns matrix from QR of a Gaussian draw.
pub fn random_orthonormal(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let g = random_matrix(rows, cols, rng);
    let f = qr_reduced(&g).expect("qr of gaussian");
    assert!(!f.rank_deficient);
    f.q
}

/// A = U diag(sigma) V^T with Haar-like orthogonal factors.
pub fn matrix_with_spectrum(
    rows: usize,
    cols: usize,
    sigma: &[f64],
    rng: &mut ChaCha8Rng,
) -> DenseMatrix {
    let k = rows.min(cols).min(sigma.len());
    let u = random_orthonormal(rows, k, rng);
    let v = random_orthonormal(cols, k, rng);
    let mut us = u;
    for i in 0..us.rows() {
        for j in 0..k {
            let val = us.get(i, j) * sigma[j];
            us.set(i, j, val);
        }
    }
    us.matmul(&v.transpose())
}

pub fn power_law_sigma(k: usize, omega: f64) -> Vec<f64> {
    (1..=k).map(|i| (i as f64).powf(-omega)).collect()
}

pub fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    assert_eq!(a.rows(), b.rows());
    assert_eq!(a.cols(), b.cols());
    a.data()
        .iter()
        .zip(b.data())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

pub fn vec_max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

pub fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Max-norm deviation of M^T M from the identity.
pub fn orthonormality_defect(m: &DenseMatrix) -> f64 {
    let g = m.gram();
    let mut worst: f64 = 0.0;
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g.get(i, j) - target).abs());
        }
    }
    worst
}
