use super::QdParams;

/// Real polynomial with ascending coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Σ |c_i| |x|^i, the natural scale for rounding error at `x`.
    pub fn abs_scale(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x.abs() + c.abs())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    fn scaled(&self, s: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

/// (x − a)·p − w·q, the step shared by every three-term recurrence here.
fn recur_f64(p: &[f64], q: &[f64], a: f64, w: f64) -> Vec<f64> {
    let mut out = vec![0.0; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= a * c;
    }
    for (i, &c) in q.iter().enumerate() {
        out[i] -= w * c;
    }
    out
}

fn recur_exact(p: &[i128], q: &[i128], a: i128, w: i128) -> Option<Vec<i128>> {
    let mut out = vec![0i128; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].checked_add(c)?;
        out[i] = out[i].checked_sub(a.checked_mul(c)?)?;
    }
    for (i, &c) in q.iter().enumerate() {
        out[i] = out[i].checked_sub(w.checked_mul(c)?)?;
    }
    Some(out)
}

/// Monic family Q_0..Q_{D+1}, orthonormal family P_0..P_D and first-associated
/// family Q^(1)_0..Q^(1)_D of a set of QD parameters.
#[derive(Debug, Clone)]
pub struct OrthoPolySet {
    alpha: Vec<f64>,
    omega: Vec<f64>,
    q: Vec<Poly>,
    p: Vec<Poly>,
    assoc: Vec<Poly>,
    norms: Vec<f64>,
    q_exact: Option<Vec<Vec<i128>>>,
    assoc_exact: Option<Vec<Vec<i128>>>,
}

/// Builds the polynomial tables from xQ_k = Q_{k+1} + α_k Q_k + ω_k Q_{k−1}
/// (Q_0 = 1, Q_1 = x − α_0) and the associated recurrence shifted by one
/// index. Exact integer tables are produced when the parameters are integral
/// and the coefficients fit in i128.
pub fn build_polynomials(qd: &QdParams) -> OrthoPolySet {
    let d = qd.diameter();
    let alpha = qd.alpha_f64();
    let omega = qd.omega_f64();

    let mut q: Vec<Vec<f64>> = vec![vec![1.0], vec![-alpha[0], 1.0]];
    for k in 1..=d {
        let next = recur_f64(&q[k], &q[k - 1], alpha[k], omega[k - 1]);
        q.push(next);
    }

    let mut assoc: Vec<Vec<f64>> = vec![vec![1.0]];
    if d >= 1 {
        assoc.push(vec![-alpha[1], 1.0]);
    }
    for k in 1..d {
        let next = recur_f64(&assoc[k], &assoc[k - 1], alpha[k + 1], omega[k]);
        assoc.push(next);
    }

    let mut norms = vec![1.0];
    for k in 1..=d {
        norms.push(norms[k - 1] * omega[k - 1].sqrt());
    }

    let (q_exact, assoc_exact) = match qd.integral() {
        Some((a, w)) => {
            let a: Vec<i128> = a.into_iter().map(i128::from).collect();
            let w: Vec<i128> = w.into_iter().map(i128::from).collect();
            let qe = (|| {
                let mut t: Vec<Vec<i128>> = vec![vec![1], vec![-a[0], 1]];
                for k in 1..=d {
                    let next = recur_exact(&t[k], &t[k - 1], a[k], w[k - 1])?;
                    t.push(next);
                }
                Some(t)
            })();
            let ae = (|| {
                let mut t: Vec<Vec<i128>> = vec![vec![1]];
                if d >= 1 {
                    t.push(vec![-a[1], 1]);
                }
                for k in 1..d {
                    let next = recur_exact(&t[k], &t[k - 1], a[k + 1], w[k])?;
                    t.push(next);
                }
                Some(t)
            })();
            (qe, ae)
        }
        None => (None, None),
    };

    let q: Vec<Poly> = q.into_iter().map(Poly::new).collect();
    let p = (0..=d).map(|k| q[k].scaled(1.0 / norms[k])).collect();
    OrthoPolySet {
        alpha,
        omega,
        q,
        p,
        assoc: assoc.into_iter().map(Poly::new).collect(),
        norms,
        q_exact,
        assoc_exact,
    }
}

impl OrthoPolySet {
    pub fn diameter(&self) -> usize {
        self.p.len() - 1
    }

    /// Q_0..Q_{D+1}.
    pub fn q(&self) -> &[Poly] {
        &self.q
    }

    /// P_0..P_D.
    pub fn p(&self) -> &[Poly] {
        &self.p
    }

    /// Q^(1)_0..Q^(1)_D.
    pub fn assoc(&self) -> &[Poly] {
        &self.assoc
    }

    /// √(ω_1···ω_k) for k = 0..D.
    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    pub fn q_exact(&self) -> Option<&[Vec<i128>]> {
        self.q_exact.as_deref()
    }

    pub fn assoc_exact(&self) -> Option<&[Vec<i128>]> {
        self.assoc_exact.as_deref()
    }

    /// Q_k(x) by running the monic recurrence.
    pub fn eval_q_recurrence(&self, k: usize, x: f64) -> f64 {
        let (mut prev, mut cur) = (1.0, x - self.alpha[0]);
        if k == 0 {
            return prev;
        }
        for j in 1..k {
            let next = (x - self.alpha[j]) * cur - self.omega[j - 1] * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// P_0(x)..P_D(x) from the orthonormal recurrence
    /// √ω_{k+1} P_{k+1} = (x − α_k) P_k − √ω_k P_{k−1}.
    pub fn p_values(&self, x: f64) -> Vec<f64> {
        let d = self.diameter();
        let mut out = Vec::with_capacity(d + 1);
        out.push(1.0);
        if d == 0 {
            return out;
        }
        out.push((x - self.alpha[0]) / self.omega[0].sqrt());
        for k in 1..d {
            let next = ((x - self.alpha[k]) * out[k] - self.omega[k - 1].sqrt() * out[k - 1])
                / self.omega[k].sqrt();
            out.push(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qd(alpha: &[i64], omega: &[i64]) -> QdParams {
        QdParams::from_integers(alpha, omega).unwrap()
    }

    fn as_i128(v: &[i64]) -> Vec<i128> {
        v.iter().map(|&x| x as i128).collect()
    }

    #[test]
    fn icosahedron_polynomials() {
        let set = build_polynomials(&qd(&[0, 2, 2, 0], &[5, 4, 5]));
        let q = set.q_exact().unwrap();
        assert_eq!(q[1], as_i128(&[0, 1]));
        assert_eq!(q[2], as_i128(&[-5, -2, 1]));
        assert_eq!(q[3], as_i128(&[10, -5, -4, 1]));
        assert_eq!(q[4], as_i128(&[25, 20, -10, -4, 1]));
    }

    #[test]
    fn hypercube_polynomials() {
        let set = build_polynomials(&qd(&[0, 0, 0, 0, 0], &[4, 6, 6, 4]));
        let q = set.q_exact().unwrap();
        assert_eq!(q[2], as_i128(&[-4, 0, 1]));
        assert_eq!(q[3], as_i128(&[0, -10, 0, 1]));
        assert_eq!(q[4], as_i128(&[24, 0, -16, 0, 1]));
        assert_eq!(q[5], as_i128(&[0, 64, 0, -20, 0, 1]));
    }

    #[test]
    fn modified_glued_tree_polynomials() {
        let set = build_polynomials(&qd(&[0, 0, 0, 1, 0], &[3, 2, 2, 3]));
        let q = set.q_exact().unwrap();
        assert_eq!(q[2], as_i128(&[-3, 0, 1]));
        assert_eq!(q[3], as_i128(&[0, -5, 0, 1]));
        assert_eq!(q[4], as_i128(&[6, 5, -7, -1, 1]));
        // x(x⁴ − x³ − 10x² + 5x + 21)
        assert_eq!(q[5], as_i128(&[0, 21, 5, -10, -1, 1]));
        // Numerator of the Stieltjes transform.
        assert_eq!(set.assoc_exact().unwrap()[4], as_i128(&[6, 2, -7, -1, 1]));
    }

    #[test]
    fn octahedron_polynomials() {
        let set = build_polynomials(&qd(&[0, 2, 0], &[4, 4]));
        let q = set.q_exact().unwrap();
        assert_eq!(q[2], as_i128(&[-4, -2, 1]));
        assert_eq!(q[3], as_i128(&[0, -8, -2, 1]));
    }

    #[test]
    fn float_and_exact_tables_agree() {
        let set = build_polynomials(&qd(&[0, 2, 2, 0], &[5, 4, 5]));
        for (fl, ex) in set.q().iter().zip(set.q_exact().unwrap()) {
            let ex: Vec<f64> = ex.iter().map(|&c| c as f64).collect();
            assert_eq!(fl.coeffs(), ex.as_slice());
        }
    }

    #[test]
    fn normalization_and_horner_vs_recurrence() {
        let set = build_polynomials(&qd(&[0, 0, 0, 1, 0], &[3, 2, 2, 3]));
        for &x in &[-2.7, -1.0, 0.0, 0.3, 1.9354, 3.0, 4.5] {
            let pv = set.p_values(x);
            for k in 0..=set.diameter() {
                let horner = set.p()[k].eval(x);
                let scale = set.p()[k].abs_scale(x).max(1.0);
                assert!((horner - pv[k]).abs() <= 1e-12 * scale);
                let q_rec = set.eval_q_recurrence(k, x);
                assert!((q_rec / set.norms()[k] - pv[k]).abs() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn rational_parameters_fall_back_to_float() {
        use num_rational::Rational64;
        let qd = QdParams::new(
            vec![0.into(), Rational64::new(1, 2)],
            vec![Rational64::new(3, 2)],
        )
        .unwrap();
        let set = build_polynomials(&qd);
        assert!(set.q_exact().is_none());
        assert_eq!(set.q()[2].coeffs(), &[-1.5, -0.5, 1.0]);
    }
}
