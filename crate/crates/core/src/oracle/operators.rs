use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{checked_dim, su_generators, DenseOperator, OracleError, OPERATOR_CAP};
use crate::graph::Graph;

/// Σ_i levels[i] d^(N−1−i).
pub fn basis_index(d: usize, levels: &[usize]) -> usize {
    levels.iter().fold(0, |acc, &l| acc * d + l)
}

fn check_sites(n: usize, i: usize, j: usize) -> Result<(), OracleError> {
    if i == j || i >= n || j >= n {
        return Err(OracleError::Sites(i, j, n));
    }
    Ok(())
}

/// Places a d²×d² operator on sites (i, j) of an N-site register; the first
/// tensor factor of `op` acts on site i.
pub fn embed_two_site(
    op: &DenseOperator,
    d: usize,
    n: usize,
    i: usize,
    j: usize,
) -> Result<DenseOperator, OracleError> {
    check_sites(n, i, j)?;
    let dim = checked_dim(d, n, OPERATOR_CAP)?;
    let wi = d.pow((n - 1 - i) as u32);
    let wj = d.pow((n - 1 - j) as u32);
    let mut out = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        let (ri, rj) = ((r / wi) % d, (r / wj) % d);
        let rest = r - ri * wi - rj * wj;
        for ci in 0..d {
            for cj in 0..d {
                let v = op[(ri * d + rj, ci * d + cj)];
                if v != Complex64::new(0.0, 0.0) {
                    out[(r, rest + ci * wi + cj * wj)] = v;
                }
            }
        }
    }
    Ok(out)
}

/// The permutation exchanging the states of sites i and j.
pub fn swap_operator(d: usize, n: usize, i: usize, j: usize) -> Result<DenseOperator, OracleError> {
    check_sites(n, i, j)?;
    let dim = checked_dim(d, n, OPERATOR_CAP)?;
    let wi = d.pow((n - 1 - i) as u32);
    let wj = d.pow((n - 1 - j) as u32);
    let mut out = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        let (ri, rj) = ((r / wi) % d, (r / wj) % d);
        let c = r - ri * wi - rj * wj + rj * wi + ri * wj;
        out[(r, c)] = Complex64::new(1.0, 0.0);
    }
    Ok(out)
}

/// λ⃗_i·λ⃗_j = Σ_{p<q}(λ⁺⊗λ⁺ + λ⁻⊗λ⁻) + Σ_m H_m⊗H_m on sites i, j.
pub fn heisenberg_term(d: usize, n: usize, i: usize, j: usize) -> Result<DenseOperator, OracleError> {
    let casimir = su_generators(d)?.two_site_casimir();
    embed_two_site(&casimir, d, n, i, j)
}

/// The one-site operator weighting each vertex by κ_max − κ(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionTerm {
    /// |l⟩⟨l| on the site.
    LevelProjector,
    /// The traceless diagonal generator H_l.
    TracelessGenerator,
    None,
}

impl CorrectionTerm {
    fn diagonal(self, d: usize, level: usize) -> Vec<f64> {
        match self {
            CorrectionTerm::LevelProjector => (0..d).map(|k| f64::from(u8::from(k == level))).collect(),
            CorrectionTerm::TracelessGenerator => {
                let s = 2.0 / ((2 * level * (level + 1)) as f64).sqrt();
                (0..d)
                    .map(|k| match k.cmp(&level) {
                        std::cmp::Ordering::Less => s,
                        std::cmp::Ordering::Equal => -s * level as f64,
                        std::cmp::Ordering::Greater => 0.0,
                    })
                    .collect()
            }
            CorrectionTerm::None => vec![0.0; d],
        }
    }
}

#[derive(Debug, Clone)]
pub struct RestrictionReport {
    /// ⟨l_a| Σ_{i~j} P_ij − Σ_i [κ_max − κ(i)] C^(i) |l_b⟩.
    pub restricted: DMatrix<f64>,
    /// A + (|E| − κ_max) I.
    pub expected: DMatrix<f64>,
    pub deviation: f64,
    /// For regular graphs: max |Σ P_ij|_S − (A + κ(N−2)/2 I)|.
    pub regular_form_deviation: Option<f64>,
    /// Largest leakage of the operator out of the one-particle span.
    pub leakage: f64,
}

/// Builds Σ_{i~j} P_ij and the degree correction densely and projects them
/// onto span{|l_i⟩}.
pub fn one_particle_restriction(
    g: &Graph,
    d: usize,
    level: usize,
    correction: CorrectionTerm,
) -> Result<RestrictionReport, OracleError> {
    if !(1..d).contains(&level) {
        return Err(OracleError::Level(level, d));
    }
    let n = g.n_vertices();
    let dim = checked_dim(d, n, OPERATOR_CAP)?;
    let mut swaps = DMatrix::<Complex64>::zeros(dim, dim);
    for &(i, j) in g.edges() {
        swaps += swap_operator(d, n, i, j)?;
    }
    let kmax = g.max_degree();
    let diag = correction.diagonal(d, level);
    let mut op = swaps.clone();
    for r in 0..dim {
        let mut corr = 0.0;
        for i in 0..n {
            let level_i = (r / d.pow((n - 1 - i) as u32)) % d;
            corr += (kmax - g.degree(i)) as f64 * diag[level_i];
        }
        op[(r, r)] -= Complex64::new(corr, 0.0);
    }

    let states: Vec<usize> = (0..n).map(|i| level * d.pow((n - 1 - i) as u32)).collect();
    let restricted = DMatrix::from_fn(n, n, |a, b| op[(states[a], states[b])].re);
    let mut leakage = 0.0f64;
    for &s in &states {
        for r in 0..dim {
            if !states.contains(&r) {
                leakage = leakage.max(op[(r, s)].norm());
            }
        }
    }
    let adjacency = DMatrix::from_fn(n, n, |a, b| f64::from(u8::from(g.is_adjacent(a, b))));
    let shift = g.n_edges() as f64 - kmax as f64;
    let expected = &adjacency + DMatrix::identity(n, n) * shift;
    let deviation = (&restricted - &expected).amax();
    let regular_form_deviation = g.regular_degree().map(|k| {
        let plain = DMatrix::from_fn(n, n, |a, b| swaps[(states[a], states[b])].re);
        let form = &adjacency + DMatrix::identity(n, n) * (k as f64 * (n as f64 - 2.0) / 2.0);
        (plain - form).amax()
    });
    Ok(RestrictionReport {
        restricted,
        expected,
        deviation,
        regular_form_deviation,
        leakage,
    })
}

pub fn one_particle_restriction_check(
    g: &Graph,
    d: usize,
    level: usize,
    correction: CorrectionTerm,
) -> Result<bool, OracleError> {
    let r = one_particle_restriction(g, d, level, correction)?;
    Ok(r.deviation < 1e-12
        && r.leakage < 1e-12
        && r.regular_form_deviation.is_none_or(|x| x < 1e-12))
}
