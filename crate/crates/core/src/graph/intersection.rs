use num_rational::Rational64;
use num_traits::{One, Zero};

use super::{Graph, GraphError, Stratification, Vertex};

/// Vertex degrees behind a set of intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degree {
    /// Every vertex has this degree; numbers are plain neighbour counts.
    Regular(u64),
    /// Per-vertex degrees; numbers are degree-weighted averages.
    Irregular(Vec<u64>),
}

/// Intersection numbers c_k, a_k, b_k indexed by stratum.
///
/// `b` holds b_0..b_{D-1} and `c` holds c_1..c_D; b_D = c_0 = 0 are implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    b: Vec<Rational64>,
    c: Vec<Rational64>,
    a: Vec<Rational64>,
    degree: Degree,
}

impl IntersectionNumbers {
    /// Builds the numbers of a regular graph from an intersection array
    /// `{b_0..b_{D-1}; c_1..c_D}`. The degree defaults to b_0.
    pub fn from_array(b: &[i64], c: &[i64], kappa: Option<i64>) -> Result<Self, GraphError> {
        if b.is_empty() {
            return Err(GraphError::InvalidArray("array must have diameter >= 1".into()));
        }
        if b.len() != c.len() {
            return Err(GraphError::InvalidArray(format!(
                "b has {} entries but c has {}",
                b.len(),
                c.len()
            )));
        }
        if b.iter().chain(c).any(|&x| x <= 0) {
            return Err(GraphError::InvalidArray("entries must be positive".into()));
        }
        let kappa = kappa.unwrap_or(b[0]);
        if kappa <= 0 {
            return Err(GraphError::InvalidArray("degree must be positive".into()));
        }
        let d = b.len();
        let b: Vec<Rational64> = b.iter().map(|&x| x.into()).collect();
        let c: Vec<Rational64> = c.iter().map(|&x| x.into()).collect();
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let bi = b.get(i).copied().unwrap_or_else(Rational64::zero);
            let ci = if i == 0 { Rational64::zero() } else { c[i - 1] };
            let ai = Rational64::from(kappa) - bi - ci;
            if ai < Rational64::zero() {
                return Err(GraphError::InvalidArray(format!(
                    "a_{i} = {ai} is negative"
                )));
            }
            a.push(ai);
        }
        Ok(Self {
            b,
            c,
            a,
            degree: Degree::Regular(kappa as u64),
        })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// b_i for 0 <= i <= D (b_D = 0).
    pub fn b(&self, i: usize) -> Rational64 {
        self.b.get(i).copied().unwrap_or_else(Rational64::zero)
    }

    /// c_i for 0 <= i <= D (c_0 = 0).
    pub fn c(&self, i: usize) -> Rational64 {
        if i == 0 {
            Rational64::zero()
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> Rational64 {
        self.a[i]
    }

    pub fn b_array(&self) -> &[Rational64] {
        &self.b
    }

    pub fn c_array(&self) -> &[Rational64] {
        &self.c
    }

    pub fn a_array(&self) -> &[Rational64] {
        &self.a
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    /// The common degree for regular numbers.
    pub fn regular_degree(&self) -> Option<u64> {
        match self.degree {
            Degree::Regular(k) => Some(k),
            Degree::Irregular(_) => None,
        }
    }

    /// Same numbers with one b entry replaced. Intended for negative tests.
    pub fn with_b(mut self, i: usize, value: i64) -> Self {
        self.b[i] = value.into();
        self
    }
}

/// Local numbers (c_k(β), a_k(β), b_k(β)) of one vertex.
pub type LocalNumbers = (Rational64, Rational64, Rational64);

/// Two vertices of the same stratum whose local numbers differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdrWitness {
    pub stratum: usize,
    pub first: Vertex,
    pub second: Vertex,
    pub first_numbers: LocalNumbers,
    pub second_numbers: LocalNumbers,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PdrReport {
    PseudoDistanceRegular(IntersectionNumbers),
    NotPseudoDistanceRegular(PdrWitness),
}

impl PdrReport {
    pub fn is_pseudo_distance_regular(&self) -> bool {
        matches!(self, Self::PseudoDistanceRegular(_))
    }

    pub fn numbers(&self) -> Option<&IntersectionNumbers> {
        match self {
            Self::PseudoDistanceRegular(n) => Some(n),
            Self::NotPseudoDistanceRegular(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&PdrWitness> {
        match self {
            Self::PseudoDistanceRegular(_) => None,
            Self::NotPseudoDistanceRegular(w) => Some(w),
        }
    }
}

fn local_numbers(g: &Graph, s: &Stratification, beta: Vertex, regular: bool) -> LocalNumbers {
    let k = s.level_of(beta);
    let (mut c, mut a, mut b) = (0i64, 0i64, 0i64);
    for &gamma in g.neighbors(beta) {
        let w = if regular { 1 } else { g.degree(gamma) as i64 };
        let lg = s.level_of(gamma);
        if lg + 1 == k {
            c += w;
        } else if lg == k {
            a += w;
        } else {
            b += w;
        }
    }
    let denom = if regular { 1 } else { g.degree(beta) as i64 };
    (
        Rational64::new(c, denom),
        Rational64::new(a, denom),
        Rational64::new(b, denom),
    )
}

/// Evaluates the local intersection numbers of every vertex and reports
/// whether they depend only on the stratum index.
///
/// Regular graphs use plain neighbour counts; otherwise each neighbour is
/// weighted by its degree and the sum divided by the degree of the vertex.
/// All comparisons are exact.
pub fn intersection_numbers(g: &Graph, s: &Stratification) -> PdrReport {
    let regular = g.regular_degree();
    let d = s.diameter();
    let mut per_stratum: Vec<LocalNumbers> = Vec::with_capacity(d + 1);
    for (k, stratum) in s.strata().iter().enumerate() {
        let first = stratum[0];
        let reference = local_numbers(g, s, first, regular.is_some());
        for &beta in &stratum[1..] {
            let here = local_numbers(g, s, beta, regular.is_some());
            if here != reference {
                return PdrReport::NotPseudoDistanceRegular(PdrWitness {
                    stratum: k,
                    first,
                    second: beta,
                    first_numbers: reference,
                    second_numbers: here,
                });
            }
        }
        per_stratum.push(reference);
    }
    let b = per_stratum[..d].iter().map(|n| n.2).collect();
    let c = per_stratum[1..].iter().map(|n| n.0).collect();
    let a = per_stratum.iter().map(|n| n.1).collect();
    let degree = match regular {
        Some(k) => Degree::Regular(k as u64),
        None => Degree::Irregular(g.degrees().into_iter().map(|k| k as u64).collect()),
    };
    let numbers = IntersectionNumbers { b, c, a, degree };
    debug_assert!(
        regular.is_none() || check_consistency(&numbers, &s.valencies(), Some(s)),
        "counting identities must hold for a pseudo-distance-regular regular graph"
    );
    PdrReport::PseudoDistanceRegular(numbers)
}

/// Valencies κ_0..κ_D implied by an intersection array via κ_i c_i = κ_{i-1} b_{i-1}.
pub fn valencies_from_array(num: &IntersectionNumbers) -> Result<Vec<u64>, GraphError> {
    let mut kappa = vec![Rational64::one()];
    for i in 1..=num.diameter() {
        let next = kappa[i - 1] * num.b(i - 1) / num.c(i);
        if !next.is_integer() {
            return Err(GraphError::InvalidArray(format!(
                "valency kappa_{i} = {next} is not an integer"
            )));
        }
        kappa.push(next);
    }
    Ok(kappa.into_iter().map(|k| k.to_integer() as u64).collect())
}

/// Checks the counting identities between intersection numbers and valencies.
///
/// For regular numbers these are κ_0 = c_1 = 1, b_0 = κ, a_i + b_i + c_i = κ
/// and κ_{i-1} b_{i-1} = κ_i c_i. For degree-weighted numbers the edge-count
/// identity becomes κ_{i-1} δ_{i-1}² b_{i-1} = κ_i δ_i² c_i where δ_i is the
/// (necessarily common) degree inside stratum i, which needs `strata`.
pub fn check_consistency(
    num: &IntersectionNumbers,
    valencies: &[u64],
    strata: Option<&Stratification>,
) -> bool {
    let d = num.diameter();
    if valencies.len() != d + 1 || valencies[0] != 1 {
        return false;
    }
    let kappa_at = |i: usize| Rational64::from(valencies[i] as i64);
    match num.degree() {
        Degree::Regular(k) => {
            let k = Rational64::from(*k as i64);
            if num.c(1) != Rational64::one() || num.b(0) != k {
                return false;
            }
            (0..=d).all(|i| num.a(i) + num.b(i) + num.c(i) == k)
                && (1..=d).all(|i| kappa_at(i - 1) * num.b(i - 1) == kappa_at(i) * num.c(i))
        }
        Degree::Irregular(degrees) => {
            let Some(s) = strata else {
                return false;
            };
            if s.diameter() != d {
                return false;
            }
            let mut stratum_degree = Vec::with_capacity(d + 1);
            for stratum in s.strata() {
                let first = degrees[stratum[0]];
                if stratum.iter().any(|&v| degrees[v] != first) {
                    return false;
                }
                stratum_degree.push(Rational64::from(first as i64));
            }
            (1..=d).all(|i| {
                let (dp, dc) = (stratum_degree[i - 1], stratum_degree[i]);
                kappa_at(i - 1) * dp * dp * num.b(i - 1) == kappa_at(i) * dc * dc * num.c(i)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::stratify;
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from(n)
    }

    fn octahedron() -> Graph {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(None, 6, edges).unwrap()
    }

    #[test]
    fn octahedron_numbers() {
        let g = octahedron();
        let s = stratify(&g, 0).unwrap();
        let report = intersection_numbers(&g, &s);
        let num = report.numbers().unwrap();
        assert_eq!(num.b_array(), &[r(4), r(1)]);
        assert_eq!(num.c_array(), &[r(1), r(4)]);
        assert_eq!(num.a_array(), &[r(0), r(2), r(0)]);
        assert!(check_consistency(num, &s.valencies(), Some(&s)));
    }

    #[test]
    fn array_rejects_surplus_entry() {
        assert!(matches!(
            IntersectionNumbers::from_array(&[4, 1], &[1, 1, 4], None),
            Err(GraphError::InvalidArray(_))
        ));
    }

    #[test]
    fn array_valencies() {
        let num = IntersectionNumbers::from_array(&[5, 2, 1], &[1, 2, 5], None).unwrap();
        assert_eq!(valencies_from_array(&num).unwrap(), vec![1, 5, 5, 1]);
        assert_eq!(num.a_array(), &[r(0), r(2), r(2), r(0)]);
        let tampered = num.clone().with_b(1, 3);
        assert!(!check_consistency(&tampered, &[1, 5, 5, 1], None));
        assert!(valencies_from_array(&tampered).is_err());
    }

    #[test]
    fn path_from_middle_fails_with_witness() {
        // P_4 from vertex 1: stratum 1 holds {0, 2} with different local numbers.
        let g = Graph::new(None, 4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = stratify(&g, 1).unwrap();
        let report = intersection_numbers(&g, &s);
        assert!(!report.is_pseudo_distance_regular());
        let w = report.witness().unwrap();
        assert_eq!(w.stratum, 1);
        assert_ne!(w.first_numbers, w.second_numbers);
        assert!(report.numbers().is_none());
    }

    /// Brute-force evaluation of the degree-weighted numbers for one vertex.
    fn weighted_oracle(g: &Graph, dist: &[usize], beta: usize) -> LocalNumbers {
        let k = dist[beta];
        let mut sums = [0i64; 3];
        for gamma in 0..g.n_vertices() {
            if !g.is_adjacent(beta, gamma) {
                continue;
            }
            let slot = if dist[gamma] + 1 == k {
                0
            } else if dist[gamma] == k {
                1
            } else {
                2
            };
            sums[slot] += g.degree(gamma) as i64;
        }
        let db = g.degree(beta) as i64;
        (
            Rational64::new(sums[0], db),
            Rational64::new(sums[1], db),
            Rational64::new(sums[2], db),
        )
    }

    #[test]
    fn star_report_is_self_consistent() {
        let g = Graph::new(None, 4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        for o in 0..4 {
            let s = stratify(&g, o).unwrap();
            let dist = super::super::distances(&g, o).unwrap();
            let report = intersection_numbers(&g, &s);
            let uniform = s.strata().iter().all(|stratum| {
                stratum
                    .iter()
                    .all(|&v| weighted_oracle(&g, &dist, v) == weighted_oracle(&g, &dist, stratum[0]))
            });
            assert_eq!(report.is_pseudo_distance_regular(), uniform);
            assert_eq!(report.witness().is_some(), !uniform);
        }
    }
}
