use alloc::vec::Vec;

use super::Matrix;

/// Householder QR with column pivoting: `M P = Q R`.
#[derive(Debug, Clone)]
pub struct PivotedQr {
    /// Full orthogonal factor, `rows x rows`.
    pub q: Matrix,
    /// Upper trapezoidal factor, `rows x cols`.
    pub r: Matrix,
    /// `perm[k]` is the original column placed at position `k`.
    pub perm: Vec<usize>,
}

/// Column-pivoted Householder QR. At each step the remaining column with the
/// largest norm is moved forward (lowest index on ties).
pub fn pivoted_qr(m: &Matrix) -> PivotedQr {
    let (rows, cols) = m.shape();
    let mut r = m.clone();
    let mut q = Matrix::identity(rows);
    let mut perm: Vec<usize> = (0..cols).collect();
    let steps = rows.min(cols);

    for k in 0..steps {
        let mut best = k;
        let mut best_norm = -1.0;
        for j in k..cols {
            let nrm: f64 = (k..rows).map(|i| r[(i, j)] * r[(i, j)]).sum();
            if nrm > best_norm {
                best_norm = nrm;
                best = j;
            }
        }
        r.swap_cols(k, best);
        perm.swap(k, best);

        let alpha = libm::sqrt(best_norm.max(0.0));
        if alpha == 0.0 {
            break;
        }
        let x0 = r[(k, k)];
        let beta = if x0 >= 0.0 { -alpha } else { alpha };
        let mut v: Vec<f64> = (k..rows).map(|i| r[(i, k)]).collect();
        v[0] -= beta;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm2;
        // R <- H R
        for j in k..cols {
            let dot: f64 = (k..rows).map(|i| v[i - k] * r[(i, j)]).sum();
            let f = tau * dot;
            for i in k..rows {
                r[(i, j)] -= f * v[i - k];
            }
        }
        for i in k + 1..rows {
            r[(i, k)] = 0.0;
        }
        // Q <- Q H
        for i in 0..rows {
            let dot: f64 = (k..rows).map(|c| q[(i, c)] * v[c - k]).sum();
            let f = tau * dot;
            for c in k..rows {
                q[(i, c)] -= f * v[c - k];
            }
        }
    }
    PivotedQr { q, r, perm }
}
