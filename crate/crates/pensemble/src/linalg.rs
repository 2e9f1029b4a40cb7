//! Small dense-matrix helpers for the low-dimensional rule geometry.

use ndarray::{Array1, Array2};

/// Determinant by LU decomposition with partial pivoting. The premise
/// matrices here are tiny (feature dimension by feature dimension), so no
/// external solver is warranted.
pub fn det(m: &Array2<f64>) -> f64 {
    let n = m.nrows();
    debug_assert_eq!(n, m.ncols());
    let mut a = m.clone();
    let mut sign = 1.0;
    for k in 0..n {
        let mut pivot = k;
        for i in k + 1..n {
            if a[[i, k]].abs() > a[[pivot, k]].abs() {
                pivot = i;
            }
        }
        if a[[pivot, k]] == 0.0 {
            return 0.0;
        }
        if pivot != k {
            for j in 0..n {
                a.swap([k, j], [pivot, j]);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            let f = a[[i, k]] / a[[k, k]];
            for j in k..n {
                let s = a[[k, j]];
                a[[i, j]] -= f * s;
            }
        }
    }
    let mut d = sign;
    for k in 0..n {
        d *= a[[k, k]];
    }
    d
}

/// Quadratic form `v^T M v`.
pub fn quad_form(m: &Array2<f64>, v: &Array1<f64>) -> f64 {
    v.dot(&m.dot(v))
}

/// Rank-one outer product `a b^T`.
pub fn outer(a: &Array1<f64>, b: &Array1<f64>) -> Array2<f64> {
    let mut out = Array2::zeros((a.len(), b.len()));
    for i in 0..a.len() {
        for j in 0..b.len() {
            out[[i, j]] = a[i] * b[j];
        }
    }
    out
}
