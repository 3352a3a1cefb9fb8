use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{DenseOperator, OracleError};

/// Generators of SU(d) in the level basis |0⟩..|d−1⟩.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub d: usize,
    /// λ⁺_pq = e_pq + e_qp for p < q (0-based levels).
    pub lambda_plus: Vec<((usize, usize), DenseOperator)>,
    /// λ⁻_pq = −i(e_pq − e_qp) for p < q.
    pub lambda_minus: Vec<((usize, usize), DenseOperator)>,
    /// H_m = 2/√(2m(m+1)) (Σ_{k<m} e_kk − m e_mm), m = 1..d−1.
    pub diagonal: Vec<DenseOperator>,
}

fn unit(d: usize, p: usize, q: usize) -> DenseOperator {
    let mut m = DMatrix::zeros(d, d);
    m[(p, q)] = Complex64::new(1.0, 0.0);
    m
}

pub fn su_generators(d: usize) -> Result<GeneratorSet, OracleError> {
    if !(2..=6).contains(&d) {
        return Err(OracleError::LevelCount(d));
    }
    let mut lambda_plus = Vec::new();
    let mut lambda_minus = Vec::new();
    for p in 0..d {
        for q in p + 1..d {
            lambda_plus.push(((p, q), unit(d, p, q) + unit(d, q, p)));
            lambda_minus.push(((p, q), (unit(d, p, q) - unit(d, q, p)) * Complex64::new(0.0, -1.0)));
        }
    }
    let diagonal = (1..d)
        .map(|m| {
            let s = 2.0 / ((2 * m * (m + 1)) as f64).sqrt();
            let mut h = DMatrix::zeros(d, d);
            for k in 0..m {
                h[(k, k)] = Complex64::new(s, 0.0);
            }
            h[(m, m)] = Complex64::new(-s * m as f64, 0.0);
            h
        })
        .collect();
    Ok(GeneratorSet {
        d,
        lambda_plus,
        lambda_minus,
        diagonal,
    })
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.lambda_plus.len() + self.lambda_minus.len() + self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn all(&self) -> impl Iterator<Item = &DenseOperator> {
        self.lambda_plus
            .iter()
            .chain(&self.lambda_minus)
            .map(|(_, m)| m)
            .chain(&self.diagonal)
    }

    /// Σ_a λ_a ⊗ λ_a on two sites.
    pub fn two_site_casimir(&self) -> DenseOperator {
        let n = self.d * self.d;
        self.all()
            .fold(DMatrix::zeros(n, n), |acc, g| acc + g.kronecker(g))
    }
}

/// max |Σ_m H_m⊗H_m − (2 Σ_p |pp⟩⟨pp| − (2/d) I)|.
pub fn appendix_identity_residual(d: usize) -> Result<f64, OracleError> {
    let set = su_generators(d)?;
    let n = d * d;
    let lhs = set
        .diagonal
        .iter()
        .fold(DMatrix::<Complex64>::zeros(n, n), |acc, h| acc + h.kronecker(h));
    let mut rhs = DMatrix::<Complex64>::identity(n, n) * Complex64::new(-2.0 / d as f64, 0.0);
    for p in 0..d {
        rhs[(p * d + p, p * d + p)] += Complex64::new(2.0, 0.0);
    }
    Ok((lhs - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max))
}

pub fn appendix_identity_check(d: usize) -> Result<bool, OracleError> {
    Ok(appendix_identity_residual(d)? < 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_abs(m: &DenseOperator) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn qubit_generators_are_pauli_matrices() {
        let g = su_generators(2).unwrap();
        let sx = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]);
        let sy = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
        let sz = DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
        assert_eq!(g.lambda_plus[0].1, sx);
        assert_eq!(g.lambda_minus[0].1, sy);
        assert_eq!(g.diagonal[0], sz);
    }

    #[test]
    fn qutrit_diagonal_generators() {
        let g = su_generators(3).unwrap();
        let h1: Vec<f64> = (0..3).map(|k| g.diagonal[0][(k, k)].re).collect();
        assert_eq!(h1, vec![1.0, -1.0, 0.0]);
        let s = 1.0 / 3f64.sqrt();
        let h2: Vec<f64> = (0..3).map(|k| g.diagonal[1][(k, k)].re).collect();
        for (a, b) in h2.iter().zip([s, s, -2.0 * s]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn generators_are_traceless_hermitian_and_orthogonal() {
        for d in 2..=6 {
            let g = su_generators(d).unwrap();
            assert_eq!(g.len(), d * d - 1);
            let all: Vec<_> = g.all().collect();
            for (a, x) in all.iter().enumerate() {
                assert!(x.trace().norm() < 1e-14);
                assert!(max_abs(&(*x - x.adjoint())) < 1e-15);
                for (b, y) in all.iter().enumerate() {
                    let tr = (*x * *y).trace();
                    let expect = if a == b { 2.0 } else { 0.0 };
                    assert!((tr - c(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn matrix_units_commute_as_stated() {
        // [e_pq, e_rs] = δ_sp e_rq − δ_qr e_ps holds for e_pq = |q⟩⟨p|; the
        // generators are symmetric in that choice.
        for d in 2..=4 {
            let e = |p, q| unit(d, q, p);
            for p in 0..d {
                for q in 0..d {
                    for r in 0..d {
                        for s in 0..d {
                            let lhs = e(p, q) * e(r, s) - e(r, s) * e(p, q);
                            let mut rhs = DMatrix::zeros(d, d);
                            if s == p {
                                rhs += e(r, q);
                            }
                            if q == r {
                                rhs -= e(p, s);
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn appendix_identity_small_cases() {
        for d in 2..=6 {
            assert!(appendix_identity_check(d).unwrap(), "d = {d}");
        }
        assert_eq!(appendix_identity_check(7), Err(OracleError::LevelCount(7)));
    }

    #[test]
    fn casimir_is_twice_the_swap_minus_shift() {
        for d in 2..=4 {
            let cas = su_generators(d).unwrap().two_site_casimir();
            for r in 0..d * d {
                for col in 0..d * d {
                    let swap = if col == (r % d) * d + r / d { 2.0 } else { 0.0 };
                    let shift = if r == col { 2.0 / d as f64 } else { 0.0 };
                    assert!((cas[(r, col)] - c(swap - shift, 0.0)).norm() < 1e-12);
                }
            }
        }
    }
}
