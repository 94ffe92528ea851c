//! Integrality certificates `NᵀN = s(A + tI)` and the row constraints any
//! such `N` must satisfy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::{
    is_equitable, max_coclique, vertex_partition, Graph, Partition, QuotientMatrix,
};

/// Claims `NᵀN = s(A + tI)`; columns of `n` are indexed by vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub s: i64,
    pub t: i64,
    pub n: Vec<Vec<i64>>,
}

impl Certificate {
    pub fn new(s: i64, t: i64, n: Vec<Vec<i64>>) -> Result<Self> {
        if s <= 0 || t <= 0 {
            return Err(Error::Precondition(
                "scale and shift must be positive".into(),
            ));
        }
        let cols = n.first().map_or(0, Vec::len);
        if n.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged certificate rows".into()));
        }
        Ok(Certificate { s, t, n })
    }

    pub fn rows(&self) -> usize {
        self.n.len()
    }

    pub fn cols(&self) -> usize {
        self.n.first().map_or(0, Vec::len)
    }

    pub fn column(&self, x: usize) -> Vec<i64> {
        self.n.iter().map(|r| r[x]).collect()
    }

    /// `NᵀN`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let c = self.cols();
        let cols: Vec<Vec<i64>> = (0..c).map(|x| self.column(x)).collect();
        (0..c)
            .map(|u| (0..c).map(|v| dot(&cols[u], &cols[v])).collect())
            .collect()
    }

    /// Header `s t rows cols`, then the entries row by row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.s, self.t, self.rows(), self.cols());
        for row in &self.n {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Certificate> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(i, l)| l.split_whitespace().map(move |w| (i + 1, w)));
        let mut next = |what: &str| -> Result<(usize, i64)> {
            let (line, w) = tokens.next().ok_or_else(|| Error::Parse {
                line: text.lines().count().max(1),
                message: format!("missing {what}"),
            })?;
            let v = w.parse().map_err(|_| Error::Parse {
                line,
                message: format!("{what} is not an integer: {w:?}"),
            })?;
            Ok((line, v))
        };
        let (_, s) = next("s")?;
        let (_, t) = next("t")?;
        let (_, rows) = next("row count")?;
        let (hl, cols) = next("column count")?;
        if rows < 0 || cols < 0 {
            return Err(Error::Parse {
                line: hl,
                message: "negative dimension".into(),
            });
        }
        let mut n = vec![vec![0; cols as usize]; rows as usize];
        for row in n.iter_mut() {
            for cell in row.iter_mut() {
                *cell = next("entry")?.1;
            }
        }
        if let Some((line, w)) = tokens.next() {
            return Err(Error::Parse {
                line,
                message: format!("trailing token {w:?}"),
            });
        }
        Certificate::new(s, t, n)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    /// First `(u, v)` with `u ≤ v` where the Gram entry is wrong.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<i64>,
}

/// Checks `NᵀN = s(A + tI)` entry by entry.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> Result<Verdict> {
    let n = g.order();
    if c.cols() != n && !(n == 0 && c.rows() == 0) {
        return Err(Error::DimensionMismatch(format!(
            "certificate has {} columns, graph has {n} vertices",
            c.cols()
        )));
    }
    let cols: Vec<Vec<i64>> = (0..n).map(|x| c.column(x)).collect();
    for u in 0..n {
        for v in u..n {
            let expected = c.s * if u == v { c.t } else { g.adjacent(u, v) as i64 };
            let found = dot(&cols[u], &cols[v]);
            if found != expected {
                return Ok(Verdict {
                    accepted: false,
                    mismatch: Some([u, v]),
                    expected: Some(expected),
                    found: Some(found),
                });
            }
        }
    }
    Ok(Verdict {
        accepted: true,
        mismatch: None,
        expected: None,
        found: None,
    })
}

/// `⌊s·t·|V| / rank⌋`: some row of any certificate has at most this many
/// nonzero entries, since the entries sum of squares is `s·t·|V|` and `N`
/// has at least `rank(A + tI)` nonzero rows.
pub fn row_support_bound(g: &Graph, s: u64, t: u64, rank: usize) -> Result<u64> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(s * t * g.order() as u64 / rank as u64)
}

/// `Σᵢ uᵢ Σ_{x ∈ Vᵢ} r_x`, which vanishes for every certificate row when `u`
/// is an eigenvector of the quotient matrix for the eigenvalue `−t`.
pub fn eigenvector_row_constraint(
    q: &QuotientMatrix,
    u: &[i64],
    theta: i64,
    p: &Partition,
    r: &[i64],
) -> Result<i64> {
    if u.len() != q.dim() || p.len() != q.dim() {
        return Err(Error::DimensionMismatch(
            "eigenvector, partition and quotient disagree".into(),
        ));
    }
    let ur: Vec<Rational> = u.iter().map(|&x| Rational::from_integer(x)).collect();
    let qu = q.apply(&ur);
    if qu
        .iter()
        .zip(&ur)
        .any(|(a, b)| *a != *b * Rational::from_integer(theta))
    {
        return Err(Error::NotEigenvector);
    }
    Ok(p.cells()
        .iter()
        .zip(u)
        .map(|(cell, &ui)| ui * cell.iter().map(|&x| r[x]).sum::<i64>())
        .sum())
}

/// Primitive integer basis of the null space of `Q + tI`: the quotient
/// eigenvectors for the eigenvalue `−t`.
pub fn quotient_null_vectors(q: &QuotientMatrix, t: i64) -> Vec<Vec<i64>> {
    let d = q.dim();
    let mut m: Vec<Vec<Rational>> = q.entries.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += Rational::from_integer(t);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..d).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..d {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); d];
            v[f] = Rational::from_integer(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f];
            }
            let den = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
            let ints: Vec<i64> = v
                .iter()
                .map(|x| (x * Rational::from_integer(den)).to_integer())
                .collect();
            let g = ints.iter().fold(0i64, |acc, x| acc.gcd(&x.abs()));
            ints.into_iter().map(|x| x / g.max(1)).collect()
        })
        .collect()
}

/// First failure among the row constraints every certificate satisfies:
/// the norm inequality, a zero eigenvector residual for each vertex
/// partition, and for scale 2 shift 3 the coclique bound on supports.
pub fn row_constraint_violation(g: &Graph, c: &Certificate) -> Option<String> {
    let (s, t) = (c.s, c.t);
    for (i, r) in c.n.iter().enumerate() {
        if norm_inequality_slack(g, s, -t, r) < 0 {
            return Some(format!("row {i} violates the norm inequality"));
        }
        if (s, t) == (2, 3) {
            let support: Vec<usize> = (0..g.order()).filter(|&x| r[x] != 0).collect();
            let bound = coclique_bound_for_row(r.iter().any(|v| v.abs() == 2));
            if max_coclique(&g.induced(&support), u64::MAX).size() > bound {
                return Some(format!(
                    "row {i} has a coclique above {bound} on its support"
                ));
            }
        }
    }
    for x in 0..g.order() {
        let Ok(part) = vertex_partition(g, x) else {
            break;
        };
        let Some(q) = is_equitable(g, &part) else {
            continue;
        };
        for u in quotient_null_vectors(&q, t) {
            for (i, r) in c.n.iter().enumerate() {
                if !matches!(eigenvector_row_constraint(&q, &u, -t, &part, r), Ok(0)) {
                    return Some(format!("row {i} has nonzero residual at vertex {x}"));
                }
            }
        }
    }
    None
}

/// Value at `x`, sum over neighbours, sum over the other non-neighbours, and
/// total, with `sigma = gamma + delta + zeta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Profile {
    pub gamma: i64,
    pub delta: i64,
    pub zeta: i64,
    pub sigma: i64,
}

impl Profile {
    pub fn new(gamma: i64, delta: i64, zeta: i64) -> Self {
        Profile {
            gamma,
            delta,
            zeta,
            sigma: gamma + delta + zeta,
        }
    }

    pub fn of(g: &Graph, x: usize, r: &[i64]) -> Self {
        let sigma: i64 = r.iter().sum();
        let gamma = r[x];
        let delta: i64 = g.neighbors(x).iter().map(|y| r[y]).sum();
        Profile {
            gamma,
            delta,
            zeta: sigma - gamma - delta,
            sigma,
        }
    }

    pub fn as_tuple(&self) -> (i64, i64, i64, i64) {
        (self.gamma, self.delta, self.zeta, self.sigma)
    }
}

/// `s·Σ_x γ_x δ_x − (r·r)² − s·⌊θ_min⌋·(r·r)`, which is non-negative for every
/// row of a certificate with shift `−⌊θ_min⌋`. It is zero exactly when the
/// row is orthogonal to every other row of the certificate.
pub fn norm_inequality_slack(g: &Graph, s: i64, floor_theta: i64, r: &[i64]) -> i64 {
    let rr: i64 = r.iter().map(|x| x * x).sum();
    let rar: i64 = (0..g.order())
        .filter(|&x| r[x] != 0)
        .map(|x| r[x] * g.neighbors(x).iter().map(|y| r[y]).sum::<i64>())
        .sum();
    s * rar - rr * rr - s * floor_theta * rr
}

/// `Σ_x γ_x δ_x ≥ (r·r)²/s + ⌊θ_min⌋(r·r)`.
pub fn norm_inequality_check(g: &Graph, s: i64, floor_theta: i64, r: &[i64]) -> bool {
    norm_inequality_slack(g, s, floor_theta, r) >= 0
}

/// Largest coclique on the support of a row of a scale-2 certificate with
/// shift 3: 3 if some entry is ±2, otherwise 6.
pub fn coclique_bound_for_row(has_abs2_entry: bool) -> usize {
    if has_abs2_entry {
        3
    } else {
        6
    }
}

/// Constraints for [`profile_solutions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileQuery {
    pub u: [i64; 3],
    pub gamma_domain: Vec<i64>,
    /// Bound on the support, counted as `|γ| + |δ| + |ζ|`, or
    /// `|γ| − 1 + |δ| + |ζ|` when `|γ| = 2`.
    pub support_cap: i64,
    pub zeta_cap: Option<i64>,
    pub sigma_modulus: Option<i64>,
    pub sigma_nonneg: bool,
}

/// All integer profiles with `u₁γ + u₂δ + u₃ζ = 0` meeting the caps.
pub fn profile_solutions(q: &ProfileQuery) -> BTreeSet<Profile> {
    let [u1, u2, u3] = q.u;
    let mut out = BTreeSet::new();
    for &gamma in &q.gamma_domain {
        let gamma_weight = if gamma.abs() == 2 { 1 } else { gamma.abs() };
        let rest = q.support_cap - gamma_weight;
        for delta in -rest..=rest {
            // solve for ζ, or scan it when u₃ vanishes
            let zetas: Vec<i64> = if u3 != 0 {
                let num = -(u1 * gamma + u2 * delta);
                if num % u3 != 0 {
                    continue;
                }
                vec![num / u3]
            } else if u1 * gamma + u2 * delta == 0 {
                (-rest..=rest).collect()
            } else {
                continue;
            };
            for zeta in zetas {
                let p = Profile::new(gamma, delta, zeta);
                let fits = gamma_weight + delta.abs() + zeta.abs() <= q.support_cap
                    && q.zeta_cap.is_none_or(|c| zeta.abs() <= c)
                    && q.sigma_modulus.is_none_or(|m| p.sigma.mod_floor(&m) == 0)
                    && (!q.sigma_nonneg || p.sigma >= 0);
                if fits {
                    out.insert(p);
                }
            }
        }
    }
    out
}

/// Divisibility forced on the row sum `σ` by an equitable split
/// `{C, V∖C}` whose quotient has eigenvalue `−t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityConstraint {
    pub quotient: [[i64; 2]; 2],
    /// Primitive eigenvector with positive first entry.
    pub eigenvector: [i64; 2],
    /// `σ ≡ 0` modulo this.
    pub modulus: i64,
}

/// From `u₁·Σ_C r + u₂·Σ_{V∖C} r = 0` one gets `(u₁ − u₂)·Σ_C r = −u₂·σ`, so
/// `σ` is divisible by `(u₁ − u₂) / gcd(u₁ − u₂, u₂)`.
pub fn coclique_divisibility_constraint(
    g: &Graph,
    cell: &[usize],
    t: i64,
) -> Result<DivisibilityConstraint> {
    let p = Partition::split(g.order(), cell)?;
    let q = is_equitable(g, &p).ok_or(Error::NotEquitable)?;
    let m = q.as_integers().ok_or(Error::NotEquitable)?;
    let (a, b, c, d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
    // (Q + tI)u = 0 from the first row
    let (mut u1, mut u2) = (b, -(a + t));
    if u1 == 0 && u2 == 0 {
        (u1, u2) = (-(d + t), c);
    }
    let g0 = u1.gcd(&u2);
    if g0 == 0 {
        return Err(Error::NotEigenvector);
    }
    (u1, u2) = (u1 / g0, u2 / g0);
    if u1 < 0 || (u1 == 0 && u2 < 0) {
        (u1, u2) = (-u1, -u2);
    }
    if a * u1 + b * u2 != -t * u1 || c * u1 + d * u2 != -t * u2 {
        return Err(Error::NotEigenvector);
    }
    let diff = u1 - u2;
    let modulus = (diff / diff.gcd(&u2)).abs();
    Ok(DivisibilityConstraint {
        quotient: [[a, b], [c, d]],
        eigenvector: [u1, u2],
        modulus,
    })
}

/// Known exact Ramsey numbers `R(a, b)` for small arguments.
#[derive(Clone, Debug)]
pub struct RamseyTable {
    values: BTreeMap<(u32, u32), u32>,
}

impl Default for RamseyTable {
    fn default() -> Self {
        let mut values = BTreeMap::new();
        for (b, r) in [
            (1, 1),
            (2, 3),
            (3, 6),
            (4, 9),
            (5, 14),
            (6, 18),
            (7, 23),
            (8, 28),
            (9, 36),
        ] {
            values.insert((3, b), r);
        }
        for b in 1..=9 {
            values.insert((2, b), b);
            values.insert((1, b), 1);
        }
        values.insert((4, 4), 18);
        values.insert((4, 5), 25);
        RamseyTable { values }
    }
}

impl RamseyTable {
    pub fn get(&self, a: u32, b: u32) -> Option<u32> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.values.get(&key).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_psd;

    fn hosi_query() -> ProfileQuery {
        let ramsey = RamseyTable::default();
        ProfileQuery {
            u: [21, -9, 1],
            gamma_domain: vec![-1, 1],
            support_cap: ramsey.get(3, 7).unwrap() as i64 - 1,
            zeta_cap: Some(ramsey.get(3, 6).unwrap() as i64 - 1),
            sigma_modulus: None,
            sigma_nonneg: true,
        }
    }

    fn set(items: &[(i64, i64, i64)]) -> BTreeSet<Profile> {
        items
            .iter()
            .map(|&(g, d, z)| Profile::new(g, d, z))
            .collect()
    }

    #[test]
    fn profile_sets() {
        assert_eq!(
            profile_solutions(&hosi_query()),
            set(&[(-1, -1, 12), (1, 3, 6), (1, 4, 15), (1, 2, -3), (-1, -2, 3)])
        );
        let two = ProfileQuery {
            gamma_domain: vec![-2, 2],
            support_cap: RamseyTable::default().get(3, 4).unwrap() as i64 - 1,
            zeta_cap: None,
            ..hosi_query()
        };
        assert!(profile_solutions(&two).is_empty());
        // one more unit of support admits (2,5,3)
        let loose = ProfileQuery {
            support_cap: 9,
            ..two
        };
        assert!(profile_solutions(&loose).contains(&Profile::new(2, 5, 3)));
        let gq = ProfileQuery {
            u: [135, -5, 9],
            gamma_domain: vec![-1, 1],
            support_cap: 30,
            zeta_cap: None,
            sigma_modulus: Some(28),
            sigma_nonneg: true,
        };
        assert_eq!(
            profile_solutions(&gq),
            set(&[(1, 27, 0), (-1, 9, 20), (1, 9, -10), (-1, -9, 10)])
        );
    }

    #[test]
    fn coclique_bound_matrices() {
        assert_eq!(coclique_bound_for_row(false), 6);
        assert_eq!(coclique_bound_for_row(true), 3);
        let m = |n: usize| -> Vec<Vec<i64>> {
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { 5 } else { -1 }).collect())
                .collect()
        };
        assert!(is_psd(&m(6)));
        assert!(!is_psd(&m(7)));
    }

    #[test]
    fn ramsey_values() {
        let r = RamseyTable::default();
        assert_eq!(r.get(3, 3), Some(6));
        assert_eq!(r.get(4, 3), Some(9));
        assert_eq!(r.get(3, 7), Some(23));
        assert_eq!(r.get(5, 5), None);
    }

    #[test]
    fn certificate_text_round_trip() {
        let c = Certificate::new(1, 2, vec![vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        let text = c.to_text();
        assert_eq!(text, "1 2 2 3\n1 0 -1\n0 1 1\n");
        assert_eq!(Certificate::from_text(&text).unwrap(), c);
        assert!(Certificate::from_text("1 2 2 3\n1 0 -1\n0 1\n").is_err());
        assert!(Certificate::from_text("1 2 1 1\n1 7\n").is_err());
        assert!(matches!(
            Certificate::from_text("1 2 1 1\nx\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn verdicts() {
        // path 0-1-2 with columns e0+e1, e1+e2, e2+e3: NᵀN = A + 2I
        let g = Graph::path(3);
        let n = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]];
        let c = Certificate::new(1, 2, n).unwrap();
        assert!(verify_certificate(&g, &c).unwrap().accepted);
        let bad = Certificate::new(1, 2, vec![vec![1, 1, 1], vec![1, 0, 0]]).unwrap();
        let v = verify_certificate(&g, &bad).unwrap();
        assert_eq!(v.mismatch, Some([0, 2]));
        assert_eq!((v.expected, v.found), (Some(0), Some(1)));
        assert!(verify_certificate(&Graph::path(4), &c).is_err());
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with("{\"accepted\":false,\"mismatch\":["));
    }

    #[test]
    fn support_bounds() {
        let g = Graph::empty(112);
        assert_eq!(row_support_bound(&g, 2, 3, 22).unwrap(), 30);
        assert_eq!(row_support_bound(&Graph::empty(50), 2, 3, 29).unwrap(), 10);
        assert_eq!(row_support_bound(&Graph::empty(5), 1, 2, 10).unwrap(), 1);
        assert!(row_support_bound(&g, 2, 3, 0).is_err());
    }

    #[test]
    fn null_vectors() {
        let q = crate::graph::QuotientMatrix::from_integers(&[
            vec![0, 7, 0],
            vec![1, 0, 6],
            vec![0, 1, 6],
        ]);
        assert_eq!(quotient_null_vectors(&q, 3), vec![vec![21, -9, 1]]);
        assert!(quotient_null_vectors(&q, 4).is_empty());
    }

    #[test]
    fn zero_row() {
        let g = Graph::cycle(5);
        assert_eq!(norm_inequality_slack(&g, 1, -2, &[0; 5]), 0);
        let p = crate::graph::vertex_partition(&g, 0).unwrap();
        let q = is_equitable(&g, &p).unwrap();
        assert!(matches!(
            eigenvector_row_constraint(&q, &[1, 1, 1], -2, &p, &[0; 5]),
            Err(Error::NotEigenvector)
        ));
    }
}
