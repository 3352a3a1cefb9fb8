use super::SpectralError;

const MAX_SWEEPS: usize = 60;

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal
/// `diag` and sub-diagonal `off` (`off[i]` couples rows i and i + 1) by
/// implicit QL iterations with Wilkinson shifts.
///
/// Returns the eigenvalues (unsorted) and the orthonormal eigenvectors as the
/// columns of a row-major matrix.
pub fn symmetric_tridiagonal_eigen(
    diag: &[f64],
    off: &[f64],
) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectralError> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n.max(1), "off-diagonal must have n - 1 entries");
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(SpectralError::NoConvergence);
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    let f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok((d, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{DMatrix, SymmetricEigen};
    use proptest::prelude::*;

    fn dense(diag: &[f64], off: &[f64]) -> DMatrix<f64> {
        let n = diag.len();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = diag[i];
        }
        for (i, &o) in off.iter().enumerate() {
            m[(i, i + 1)] = o;
            m[(i + 1, i)] = o;
        }
        m
    }

    fn check(diag: &[f64], off: &[f64]) {
        let (vals, vecs) = symmetric_tridiagonal_eigen(diag, off).unwrap();
        let n = diag.len();
        let m = dense(diag, off);
        let scale = m.norm().max(1.0);
        // Residual and orthonormality of our vectors.
        for k in 0..n {
            let v = DMatrix::from_fn(n, 1, |i, _| vecs[i][k]);
            let resid = (&m * &v - &v * vals[k]).norm();
            assert!(resid < 1e-12 * scale, "residual {resid}");
            for j in 0..n {
                let dot: f64 = (0..n).map(|i| vecs[i][k] * vecs[i][j]).sum();
                let expect = if j == k { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-12);
            }
        }
        // Eigenvalues agree with an independent dense solver.
        let mut ours = vals.clone();
        ours.sort_by(f64::total_cmp);
        let mut reference: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        reference.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&reference) {
            assert!((a - b).abs() < 1e-11 * scale);
        }
    }

    #[test]
    fn c4_jacobi_matrix() {
        let (mut vals, _) =
            symmetric_tridiagonal_eigen(&[0.0, 0.0, 0.0], &[2f64.sqrt(), 2f64.sqrt()]).unwrap();
        vals.sort_by(f64::total_cmp);
        for (v, e) in vals.iter().zip([-2.0, 0.0, 2.0]) {
            assert!((v - e).abs() < 1e-14);
        }
    }

    #[test]
    fn one_by_one() {
        let (vals, vecs) = symmetric_tridiagonal_eigen(&[3.5], &[]).unwrap();
        assert_eq!(vals, vec![3.5]);
        assert_eq!(vecs, vec![vec![1.0]]);
    }

    #[test]
    fn decoupled_block() {
        check(&[1.0, 2.0, 3.0, 4.0], &[0.5, 0.0, 0.25]);
    }

    proptest! {
        #[test]
        fn matches_dense_solver(
            diag in proptest::collection::vec(-5.0f64..5.0, 1..14),
            seed in proptest::collection::vec(0.05f64..4.0, 13),
        ) {
            let off = &seed[..diag.len() - 1];
            check(&diag, off);
        }
    }
}
