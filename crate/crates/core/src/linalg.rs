//! Dense real linear algebra on row-major matrices: Householder QR, a
//! bidiagonalization-based SVD, minimum-norm least squares, ridge and
//! truncated-SVD solves, condition number, and numerical rank.
//!
//! Everything here is pure and deterministic; there is no internal
//! parallelism and no global state.

use crate::error::LinalgError;

/// Relative threshold below which a singular value or pivot counts as zero.
pub const RANK_TOL: f64 = 1e-14;

const SVD_EPS: f64 = f64::EPSILON;

/// Row-major dense real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data, validating shape and finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(LinalgError::NonFinite { index });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::ShapeMismatch {
                    rows: r,
                    cols: c,
                    len: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_vec(r, c, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// `self * other`; inner loops run over contiguous rows of `other`.
    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let n = other.cols;
        let mut out = DenseMatrix::zeros(self.rows, n);
        for i in 0..self.rows {
            let arow = self.row(i);
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (k, &aik) in arow.iter().enumerate() {
                let brow = &other.data[k * n..(k + 1) * n];
                for j in 0..n {
                    orow[j] += aik * brow[j];
                }
            }
        }
        out
    }

    /// `self^T * self`, accumulated row by row and mirrored.
    pub fn gram(&self) -> DenseMatrix {
        let p = self.cols;
        let mut out = DenseMatrix::zeros(p, p);
        for i in 0..self.rows {
            let row = self.row(i);
            for a in 0..p {
                let v = row[a];
                let orow = &mut out.data[a * p..(a + 1) * p];
                for b in a..p {
                    orow[b] += v * row[b];
                }
            }
        }
        for a in 0..p {
            for b in 0..a {
                out.data[a * p + b] = out.data[b * p + a];
            }
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len(), "matvec length mismatch");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += row[j] * x[j];
            }
            out[i] = acc;
        }
        out
    }

    /// `self^T * x`, accumulated without forming the transpose.
    pub fn matvec_t(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.rows, x.len(), "matvec_t length mismatch");
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            let row = self.row(i);
            let xi = x[i];
            for j in 0..self.cols {
                out[j] += xi * row[j];
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, c: f64) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| c * v).collect(),
        }
    }

    /// Copies rows `[0, k)` into a new matrix.
    pub fn top_rows(&self, k: usize) -> DenseMatrix {
        assert!(k <= self.rows);
        DenseMatrix {
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }
}

/// Reduced QR factorization with a nonnegative R diagonal.
#[derive(Debug, Clone)]
pub struct QrFactors {
    pub q: DenseMatrix,
    pub r: DenseMatrix,
    /// True when some |R_ii| <= RANK_TOL * ||A||_F. The factors are still
    /// returned; callers decide whether degeneracy is fatal.
    pub rank_deficient: bool,
}

/// Householder QR of a tall matrix (rows >= cols), A = Q R with Q
/// orthonormal columns and R upper triangular with nonnegative diagonal.
pub fn qr_reduced(a: &DenseMatrix) -> Result<QrFactors, LinalgError> {
    let n = a.rows();
    let m = a.cols();
    if n < m {
        return Err(LinalgError::DimensionMismatch {
            context: format!("qr_reduced requires rows >= cols, got {}x{}", n, m),
        });
    }
    let scale = a.frobenius_norm();
    let mut w = a.clone();
    // Essential parts of the Householder vectors, one per column.
    let mut reflectors: Vec<(Vec<f64>, f64)> = Vec::with_capacity(m);

    for k in 0..m {
        let mut v: Vec<f64> = (k..n).map(|i| w.get(i, k)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let beta = if norm == 0.0 {
            0.0
        } else {
            let sign = if v[0] >= 0.0 { 1.0 } else { -1.0 };
            v[0] += sign * norm;
            let vsq = v.iter().map(|x| x * x).sum::<f64>();
            2.0 / vsq
        };
        if beta != 0.0 {
            for j in k..m {
                let mut s = 0.0;
                for (off, vi) in v.iter().enumerate() {
                    s += vi * w.get(k + off, j);
                }
                s *= beta;
                for (off, vi) in v.iter().enumerate() {
                    let cur = w.get(k + off, j);
                    w.set(k + off, j, cur - s * vi);
                }
            }
        }
        reflectors.push((v, beta));
    }

    let mut r = DenseMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            r.set(i, j, w.get(i, j));
        }
    }

    // Q = H_0 ... H_{m-1} applied to the first m columns of the identity.
    let mut q = DenseMatrix::zeros(n, m);
    for j in 0..m {
        q.set(j, j, 1.0);
    }
    for k in (0..m).rev() {
        let (v, beta) = &reflectors[k];
        if *beta == 0.0 {
            continue;
        }
        for j in 0..m {
            let mut s = 0.0;
            for (off, vi) in v.iter().enumerate() {
                s += vi * q.get(k + off, j);
            }
            s *= beta;
            for (off, vi) in v.iter().enumerate() {
                let cur = q.get(k + off, j);
                q.set(k + off, j, cur - s * vi);
            }
        }
    }

    // Sign gauge: flip so that diag(R) >= 0.
    for k in 0..m {
        if r.get(k, k) < 0.0 {
            for j in k..m {
                let val = r.get(k, j);
                r.set(k, j, -val);
            }
            for i in 0..n {
                let val = q.get(i, k);
                q.set(i, k, -val);
            }
        }
    }

    let threshold = RANK_TOL * scale;
    let rank_deficient = (0..m).any(|k| r.get(k, k).abs() <= threshold);
    Ok(QrFactors {
        q,
        r,
        rank_deficient,
    })
}

/// Thin SVD, A = U diag(sigma) V^T with k = min(rows, cols) columns.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub u: DenseMatrix,
    /// Nonincreasing, nonnegative.
    pub singular_values: Vec<f64>,
    pub v: DenseMatrix,
}

/// Full thin SVD via Householder bidiagonalization and implicit-shift QR.
pub fn svd(a: &DenseMatrix) -> Result<SvdFactors, LinalgError> {
    if a.rows() >= a.cols() {
        svd_tall(a, true).map(|(d, u, v)| SvdFactors {
            u: u.unwrap(),
            singular_values: d,
            v: v.unwrap(),
        })
    } else {
        let (d, u, v) = svd_tall(&a.transpose(), true)?;
        Ok(SvdFactors {
            u: v.unwrap(),
            singular_values: d,
            v: u.unwrap(),
        })
    }
}

/// Singular values only; skips accumulating U and V.
pub fn singular_values(a: &DenseMatrix) -> Result<Vec<f64>, LinalgError> {
    if a.rows() >= a.cols() {
        svd_tall(a, false).map(|(d, _, _)| d)
    } else {
        svd_tall(&a.transpose(), false).map(|(d, _, _)| d)
    }
}

type SvdParts = (Vec<f64>, Option<DenseMatrix>, Option<DenseMatrix>);

fn svd_tall(a: &DenseMatrix, want_uv: bool) -> Result<SvdParts, LinalgError> {
    let n = a.rows();
    let m = a.cols();
    debug_assert!(n >= m);
    if m == 0 {
        return Ok((
            Vec::new(),
            want_uv.then(|| DenseMatrix::zeros(n, 0)),
            want_uv.then(|| DenseMatrix::zeros(0, 0)),
        ));
    }

    let mut w = a.clone();
    // d holds the diagonal, e[i] the superdiagonal coupling d[i] and d[i+1];
    // e has length m with the last slot unused.
    let mut d = vec![0.0; m];
    let mut e = vec![0.0; m];
    let mut left: Vec<(Vec<f64>, f64)> = Vec::with_capacity(m);
    let mut right: Vec<(Vec<f64>, f64)> = Vec::new();

    for k in 0..m {
        // Left reflector: zero W[k+1.., k].
        let (v, beta) = if k + 1 < n {
            let mut v: Vec<f64> = (k..n).map(|i| w.get(i, k)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                (v, 0.0)
            } else {
                let sign = if v[0] >= 0.0 { 1.0 } else { -1.0 };
                v[0] += sign * norm;
                let beta = 2.0 / v.iter().map(|x| x * x).sum::<f64>();
                (v, beta)
            }
        } else {
            (vec![w.get(k, k)], 0.0)
        };
        if beta != 0.0 {
            for j in k..m {
                let mut s = 0.0;
                for (off, vi) in v.iter().enumerate() {
                    s += vi * w.get(k + off, j);
                }
                s *= beta;
                for (off, vi) in v.iter().enumerate() {
                    let cur = w.get(k + off, j);
                    w.set(k + off, j, cur - s * vi);
                }
            }
        }
        d[k] = w.get(k, k);
        left.push((v, beta));

        if k + 2 < m {
            // Right reflector: zero W[k, k+2..].
            let mut v: Vec<f64> = (k + 1..m).map(|j| w.get(k, j)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let beta = if norm == 0.0 {
                0.0
            } else {
                let sign = if v[0] >= 0.0 { 1.0 } else { -1.0 };
                v[0] += sign * norm;
                2.0 / v.iter().map(|x| x * x).sum::<f64>()
            };
            if beta != 0.0 {
                for i in k..n {
                    let mut s = 0.0;
                    for (off, vj) in v.iter().enumerate() {
                        s += vj * w.get(i, k + 1 + off);
                    }
                    s *= beta;
                    for (off, vj) in v.iter().enumerate() {
                        let cur = w.get(i, k + 1 + off);
                        w.set(i, k + 1 + off, cur - s * vj);
                    }
                }
            }
            right.push((v, beta));
            e[k] = w.get(k, k + 1);
        } else if k + 1 < m {
            e[k] = w.get(k, k + 1);
        }
    }

    let mut u = if want_uv {
        let mut u = DenseMatrix::zeros(n, m);
        for j in 0..m {
            u.set(j, j, 1.0);
        }
        for k in (0..m).rev() {
            let (v, beta) = &left[k];
            if *beta == 0.0 {
                continue;
            }
            for j in 0..m {
                let mut s = 0.0;
                for (off, vi) in v.iter().enumerate() {
                    s += vi * u.get(k + off, j);
                }
                s *= beta;
                for (off, vi) in v.iter().enumerate() {
                    let cur = u.get(k + off, j);
                    u.set(k + off, j, cur - s * vi);
                }
            }
        }
        Some(u)
    } else {
        None
    };

    let mut v = if want_uv {
        let mut v = DenseMatrix::identity(m);
        for k in (0..right.len()).rev() {
            let (h, beta) = &right[k];
            if *beta == 0.0 {
                continue;
            }
            for j in 0..m {
                let mut s = 0.0;
                for (off, hi) in h.iter().enumerate() {
                    s += hi * v.get(k + 1 + off, j);
                }
                s *= beta;
                for (off, hi) in h.iter().enumerate() {
                    let cur = v.get(k + 1 + off, j);
                    v.set(k + 1 + off, j, cur - s * hi);
                }
            }
        }
        Some(v)
    } else {
        None
    };

    bidiagonal_qr(&mut d, &mut e, u.as_mut(), v.as_mut())?;
    Ok((d, u, v))
}

#[inline]
fn rot(f: f64, g: f64) -> (f64, f64, f64) {
    let r = f.hypot(g);
    if r == 0.0 {
        (1.0, 0.0, 0.0)
    } else {
        (f / r, g / r, r)
    }
}

#[inline]
fn col_rotate(m: &mut DenseMatrix, c1: usize, c2: usize, cs: f64, sn: f64) {
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        let a = row[c1];
        let b = row[c2];
        row[c1] = cs * a + sn * b;
        row[c2] = -sn * a + cs * b;
    }
}

#[inline]
fn col_swap(m: &mut DenseMatrix, c1: usize, c2: usize) {
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        row.swap(c1, c2);
    }
}

#[inline]
fn col_negate(m: &mut DenseMatrix, c: usize) {
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        row[c] = -row[c];
    }
}

/// Implicit-shift QR iteration on an upper bidiagonal matrix. On return d
/// holds the singular values, nonincreasing and nonnegative; rotations are
/// accumulated into the optional U and V factors.
fn bidiagonal_qr(
    d: &mut [f64],
    e: &mut [f64],
    mut u: Option<&mut DenseMatrix>,
    mut v: Option<&mut DenseMatrix>,
) -> Result<(), LinalgError> {
    let m = d.len();
    if m == 0 {
        return Ok(());
    }
    let tiny = 2f64.powi(-966);
    let max_qr_steps = 40 * m * m + 200;
    let mut qr_steps = 0usize;
    let mut p = m;

    while p > 0 {
        // Find the largest k with negligible e[k], splitting the problem.
        let mut k_split: isize = -1;
        for k in (0..p.saturating_sub(1)).rev() {
            if e[k].abs() <= tiny + SVD_EPS * (d[k].abs() + d[k + 1].abs()) {
                e[k] = 0.0;
                k_split = k as isize;
                break;
            }
        }

        enum Case {
            DeflateLast,
            SplitAtZeroDiag(usize),
            QrStep(usize),
            Converged,
        }

        let case = if k_split == (p as isize) - 2 {
            Case::Converged
        } else {
            let k = k_split; // block is (k, p-1]
            let mut ks: isize = (p as isize) - 1;
            let mut found_zero_diag = false;
            while ks > k {
                let i = ks as usize;
                let t = if i < p - 1 { e[i].abs() } else { 0.0 }
                    + if i as isize != k + 1 { e[i - 1].abs() } else { 0.0 };
                if d[i].abs() <= tiny + SVD_EPS * t {
                    d[i] = 0.0;
                    found_zero_diag = true;
                    break;
                }
                ks -= 1;
            }
            if !found_zero_diag {
                Case::QrStep((k + 1) as usize)
            } else if ks == (p as isize) - 1 {
                Case::DeflateLast
            } else {
                Case::SplitAtZeroDiag(ks as usize)
            }
        };

        match case {
            Case::DeflateLast => {
                // d[p-1] is zero: rotate e[p-2] away from the right.
                let start = (k_split + 1) as usize;
                let mut f = e[p - 2];
                e[p - 2] = 0.0;
                for j in (start..p - 1).rev() {
                    let (cs, sn, t) = rot(d[j], f);
                    d[j] = t;
                    if j != start {
                        f = -sn * e[j - 1];
                        e[j - 1] *= cs;
                    }
                    if let Some(v) = v.as_deref_mut() {
                        col_rotate(v, j, p - 1, cs, sn);
                    }
                }
            }
            Case::SplitAtZeroDiag(kz) => {
                // d[kz] is zero inside the block: chase e[kz] downward.
                let mut f = e[kz];
                e[kz] = 0.0;
                for j in kz + 1..p {
                    let (cs, sn, t) = rot(d[j], f);
                    d[j] = t;
                    f = -sn * e[j];
                    e[j] *= cs;
                    if let Some(u) = u.as_deref_mut() {
                        col_rotate(u, j, kz, cs, sn);
                    }
                }
            }
            Case::QrStep(lo) => {
                qr_steps += 1;
                if qr_steps > max_qr_steps {
                    return Err(LinalgError::SvdNoConvergence {
                        iterations: qr_steps,
                    });
                }
                let scale = d[p - 1]
                    .abs()
                    .max(d[p - 2].abs())
                    .max(e[p - 2].abs())
                    .max(d[lo].abs())
                    .max(e[lo].abs());
                let sp = d[p - 1] / scale;
                let spm1 = d[p - 2] / scale;
                let epm1 = e[p - 2] / scale;
                let sk = d[lo] / scale;
                let ek = e[lo] / scale;
                let b = ((spm1 + sp) * (spm1 - sp) + epm1 * epm1) / 2.0;
                let c = (sp * epm1) * (sp * epm1);
                let mut shift = 0.0;
                if b != 0.0 || c != 0.0 {
                    shift = (b * b + c).sqrt();
                    if b < 0.0 {
                        shift = -shift;
                    }
                    shift = c / (b + shift);
                }
                let mut f = (sk + sp) * (sk - sp) + shift;
                let mut g = sk * ek;
                for j in lo..p - 1 {
                    let (cs, sn, t) = rot(f, g);
                    if j != lo {
                        e[j - 1] = t;
                    }
                    f = cs * d[j] + sn * e[j];
                    e[j] = cs * e[j] - sn * d[j];
                    g = sn * d[j + 1];
                    d[j + 1] *= cs;
                    if let Some(v) = v.as_deref_mut() {
                        col_rotate(v, j, j + 1, cs, sn);
                    }
                    let (cs, sn, t) = rot(f, g);
                    d[j] = t;
                    f = cs * e[j] + sn * d[j + 1];
                    d[j + 1] = -sn * e[j] + cs * d[j + 1];
                    if j + 1 < p - 1 {
                        g = sn * e[j + 1];
                        e[j + 1] *= cs;
                    }
                    if let Some(u) = u.as_deref_mut() {
                        col_rotate(u, j, j + 1, cs, sn);
                    }
                }
                e[p - 2] = f;
            }
            Case::Converged => {
                let mut k = (k_split + 1) as usize;
                if d[k] <= 0.0 {
                    d[k] = -d[k];
                    if let Some(v) = v.as_deref_mut() {
                        col_negate(v, k);
                    }
                }
                while k + 1 < m && d[k] < d[k + 1] {
                    d.swap(k, k + 1);
                    if let Some(v) = v.as_deref_mut() {
                        col_swap(v, k, k + 1);
                    }
                    if let Some(u) = u.as_deref_mut() {
                        col_swap(u, k, k + 1);
                    }
                    k += 1;
                }
                p -= 1;
            }
        }
    }
    Ok(())
}

/// Minimum-norm least-squares solution A^+ b through the SVD. Singular
/// values at or below RANK_TOL * sigma_1 are treated as zero.
pub fn lstsq_minnorm(a: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            context: format!("rhs length {} vs {} rows", b.len(), a.rows()),
        });
    }
    let f = svd(a)?;
    Ok(apply_pinv(&f, b))
}

/// Applies the pseudo-inverse encoded by SVD factors to a vector.
pub fn apply_pinv(f: &SvdFactors, b: &[f64]) -> Vec<f64> {
    let sigma_1 = f.singular_values.first().copied().unwrap_or(0.0);
    let cutoff = RANK_TOL * sigma_1;
    let mut x = vec![0.0; f.v.rows()];
    for (i, &s) in f.singular_values.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        let mut ub = 0.0;
        for r in 0..f.u.rows() {
            ub += f.u.get(r, i) * b[r];
        }
        let coef = ub / s;
        for r in 0..f.v.rows() {
            x[r] += coef * f.v.get(r, i);
        }
    }
    x
}

/// Cholesky factorization of a symmetric positive definite matrix.
pub struct Cholesky {
    l: DenseMatrix,
}

impl Cholesky {
    pub fn factor(a: &DenseMatrix) -> Result<Self, LinalgError> {
        assert_eq!(a.rows(), a.cols(), "cholesky requires a square matrix");
        let n = a.rows();
        // Pivots at roundoff scale mean the matrix is numerically singular,
        // even when rounding happens to leave them barely positive.
        let scale = (0..n).fold(0.0f64, |m, i| m.max(a.get(i, i).abs()));
        let threshold = scale * n as f64 * f64::EPSILON;
        let mut l = DenseMatrix::zeros(n, n);
        for j in 0..n {
            let mut diag = a.get(j, j);
            for k in 0..j {
                diag -= l.get(j, k) * l.get(j, k);
            }
            if diag <= threshold || !diag.is_finite() {
                return Err(LinalgError::NotPositiveDefinite {
                    column: j,
                    pivot: diag,
                });
            }
            let ljj = diag.sqrt();
            l.set(j, j, ljj);
            for i in j + 1..n {
                let mut s = a.get(i, j);
                let lrow_i = i * n;
                let lrow_j = j * n;
                for k in 0..j {
                    s -= l.data[lrow_i + k] * l.data[lrow_j + k];
                }
                l.set(i, j, s / ljj);
            }
        }
        Ok(Self { l })
    }

    /// Solves A x = b given A = L L^T.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.l.rows();
        assert_eq!(b.len(), n);
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for k in 0..i {
                s -= self.l.get(i, k) * y[k];
            }
            y[i] = s / self.l.get(i, i);
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n {
                s -= self.l.get(k, i) * y[k];
            }
            y[i] = s / self.l.get(i, i);
        }
        y
    }
}

/// Ridge solution (A^T A + alpha I)^{-1} A^T b via a Cholesky solve of the
/// regularized normal equations.
pub fn tikhonov_solve(a: &DenseMatrix, b: &[f64], alpha: f64) -> Result<Vec<f64>, LinalgError> {
    if alpha < 0.0 || !alpha.is_finite() {
        return Err(LinalgError::InvalidArgument {
            context: format!("alpha must be finite and >= 0, got {alpha}"),
        });
    }
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            context: format!("rhs length {} vs {} rows", b.len(), a.rows()),
        });
    }
    let mut g = a.gram();
    let p = a.cols();
    for i in 0..p {
        let cur = g.get(i, i);
        g.set(i, i, cur + alpha);
    }
    let chol = Cholesky::factor(&g)?;
    Ok(chol.solve(&a.matvec_t(b)))
}

/// Truncated-SVD solution: sum over the top r singular triplets of
/// (u_i^T b / sigma_i) v_i.
pub fn tsvd_solve(a: &DenseMatrix, b: &[f64], r: usize) -> Result<Vec<f64>, LinalgError> {
    let k = a.rows().min(a.cols());
    if r == 0 || r > k {
        return Err(LinalgError::InvalidArgument {
            context: format!("truncation rank {} outside [1, {}]", r, k),
        });
    }
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            context: format!("rhs length {} vs {} rows", b.len(), a.rows()),
        });
    }
    let f = svd(a)?;
    let sigma_1 = f.singular_values[0];
    let sigma_r = f.singular_values[r - 1];
    if sigma_r <= RANK_TOL * sigma_1 {
        return Err(LinalgError::TruncationBeyondRank {
            r,
            sigma_r,
            sigma_1,
        });
    }
    let mut x = vec![0.0; a.cols()];
    for i in 0..r {
        let s = f.singular_values[i];
        let mut ub = 0.0;
        for row in 0..f.u.rows() {
            ub += f.u.get(row, i) * b[row];
        }
        let coef = ub / s;
        for row in 0..f.v.rows() {
            x[row] += coef * f.v.get(row, i);
        }
    }
    Ok(x)
}

/// Condition number sigma_1 / sigma_p of a tall matrix; infinite when the
/// smallest singular value underflows to zero.
pub fn cond(a: &DenseMatrix) -> Result<f64, LinalgError> {
    if a.rows() < a.cols() {
        return Err(LinalgError::DimensionMismatch {
            context: format!("cond requires rows >= cols, got {}x{}", a.rows(), a.cols()),
        });
    }
    let s = singular_values(a)?;
    let first = s.first().copied().unwrap_or(0.0);
    let last = s.last().copied().unwrap_or(0.0);
    if last == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(first / last)
}

/// Smallest m with sigma_{m+1} < tau * sigma_1, taking sigma past the last
/// singular value as zero; equals min{m : ||A - [A]_m||_2 < tau ||A||_2}.
pub fn numerical_rank(a: &DenseMatrix, tau: f64) -> Result<usize, LinalgError> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(LinalgError::InvalidTau { tau });
    }
    let s = singular_values(a)?;
    let sigma_1 = s.first().copied().unwrap_or(0.0);
    if sigma_1 == 0.0 {
        return Ok(0);
    }
    let threshold = tau * sigma_1;
    for m in 0..s.len() {
        let next = s.get(m).copied().unwrap_or(0.0);
        if next < threshold {
            return Ok(m);
        }
    }
    Ok(s.len())
}
