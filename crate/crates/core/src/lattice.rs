//! Leech-lattice vectors in `√8`-scaled integer coordinates, the 275-vector
//! system realising the McLaughlin complement, and Gram certificates for
//! other graphs.
//!
//! Coordinates are ordered `(∞, 0, 1, …, 22)`; a stored array `c` stands for
//! the real vector `c/√8`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{verify_certificate, Certificate};
use crate::constructions::{mclaughlin_complement, McLaughlinVertex};
use crate::design::{design_2_21_6_4, golay_s_5_8_24};
use crate::error::{Error, Result};
use crate::exact::{gram_determinant, integer_row_basis};
use crate::graph::{delsarte_bound, is_srg, srg_spectrum, Graph};

pub const DIM: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LVec(pub [i64; DIM]);

impl LVec {
    pub fn zero() -> Self {
        LVec([0; DIM])
    }

    pub fn dot(&self, other: &LVec) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `dot / 8` when integral.
    pub fn ip(&self, other: &LVec) -> Option<i64> {
        let d = self.dot(other);
        (d % 8 == 0).then_some(d / 8)
    }

    pub fn norm(&self) -> Option<i64> {
        self.ip(self)
    }

    fn sub(&self, other: &LVec) -> LVec {
        let mut out = self.0;
        for (x, y) in out.iter_mut().zip(&other.0) {
            *x -= y;
        }
        LVec(out)
    }
}

/// Ordered vectors, optionally tied to vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VectorSystem {
    pub vectors: Vec<LVec>,
    pub labels: Option<Vec<String>>,
}

impl VectorSystem {
    pub fn new(vectors: Vec<LVec>) -> Self {
        VectorSystem {
            vectors,
            labels: None,
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// One line of 24 integers per vector.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            let cells: Vec<String> = v.0.iter().map(i64::to_string).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut vectors = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let cells: std::result::Result<Vec<i64>, _> =
                line.split_whitespace().map(str::parse).collect();
            let cells = cells.map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            let arr: [i64; DIM] = cells.try_into().map_err(|c: Vec<i64>| Error::Parse {
                line: i + 1,
                message: format!("expected {DIM} integers, found {}", c.len()),
            })?;
            vectors.push(LVec(arr));
        }
        Ok(VectorSystem::new(vectors))
    }
}

/// `(−3, 1²³)` followed by `2` on each octad of `S(5,8,24)`.
pub fn leech_generators() -> VectorSystem {
    let mut first = [1; DIM];
    first[0] = -3;
    let mut vectors = vec![LVec(first)];
    let d = golay_s_5_8_24();
    for b in 0..d.block_count() {
        let mut c = [0; DIM];
        for p in d.block_points(b) {
            c[p] = 2;
        }
        vectors.push(LVec(c));
    }
    VectorSystem::new(vectors)
}

/// `(4, 4, 0²²)`: 4 at `∞` and at point 0.
pub fn a0() -> LVec {
    let mut c = [0; DIM];
    c[0] = 4;
    c[1] = 4;
    LVec(c)
}

/// `v − (ip(v, a₀)/4)·a₀`, orthogonal to `a₀`.
pub fn shorter_leech_project(v: &LVec) -> Result<LVec> {
    let d = v.dot(&a0());
    if d % 16 != 0 {
        return Err(Error::OddInnerProduct(0));
    }
    let ip = d / 8;
    // (ip/4)·a₀ has entries ip at ∞ and at point 0
    let mut shift = [0; DIM];
    shift[0] = ip;
    shift[1] = ip;
    Ok(v.sub(&LVec(shift)))
}

fn point_coord(i: usize) -> usize {
    1 + i
}

/// The 275 norm-4 vectors, one per vertex of the McLaughlin complement in
/// its vertex order: `4` at `∞` and at point `i` for a point; `2` at `∞` and
/// on `B` for a block through 0; `3` at `∞`, `−1` on `B` and `1` elsewhere for
/// a block missing 0.
pub fn delta_275(mcl: &Graph) -> Result<VectorSystem> {
    let labels = mcl.labels().ok_or_else(|| Error::LabelMismatch {
        vertex: 0,
        label: String::new(),
    })?;
    let vectors = labels
        .iter()
        .enumerate()
        .map(|(x, l)| {
            let mut c = [0; DIM];
            match McLaughlinVertex::parse(l) {
                Some(McLaughlinVertex::Point(i)) => {
                    c[0] = 4;
                    c[point_coord(i)] = 4;
                }
                Some(McLaughlinVertex::BlockThroughZero(b)) => {
                    c[0] = 2;
                    for p in b {
                        c[point_coord(p)] = 2;
                    }
                }
                Some(McLaughlinVertex::BlockAvoidingZero(b)) => {
                    c = [1; DIM];
                    c[0] = 3;
                    for p in b {
                        c[point_coord(p)] = -1;
                    }
                }
                None => {
                    return Err(Error::LabelMismatch {
                        vertex: x,
                        label: l.clone(),
                    })
                }
            }
            Ok(LVec(c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VectorSystem {
        vectors,
        labels: Some(labels.to_vec()),
    })
}

/// `u − ½a₀` for each member; requires `ip(u, a₀) = 2` throughout.
pub fn delta_tilde(sys: &VectorSystem) -> Result<VectorSystem> {
    let half = {
        let mut c = [0; DIM];
        c[0] = 2;
        c[1] = 2;
        LVec(c)
    };
    let a = a0();
    let vectors = sys
        .vectors
        .iter()
        .enumerate()
        .map(|(i, u)| {
            if u.ip(&a) != Some(2) {
                return Err(Error::Precondition(format!(
                    "vector {i} does not have inner product 2 with a0"
                )));
            }
            Ok(u.sub(&half))
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(vectors.iter().all(|v| v.dot(&a) == 0));
    Ok(VectorSystem {
        vectors,
        labels: sys.labels.clone(),
    })
}

/// Exact Gram matrix; fails on the first (row-major) non-integral pair.
pub fn gram(sys: &VectorSystem) -> Result<Vec<Vec<i64>>> {
    let v = &sys.vectors;
    v.par_iter()
        .enumerate()
        .map(|(i, a)| {
            v.iter()
                .enumerate()
                .map(|(j, b)| a.ip(b).ok_or(Error::NonIntegral(i, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// Rank and Gram determinant of a basis of the lattice a system generates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeDeterminant {
    pub rank: usize,
    /// Decimal, since it may not fit a machine word in general.
    pub determinant: String,
}

pub fn lattice_determinant(sys: &VectorSystem) -> Result<LatticeDeterminant> {
    let rows: Vec<Vec<i64>> = sys.vectors.iter().map(|v| v.0.to_vec()).collect();
    let basis = integer_row_basis(&rows)?;
    let raw = gram_determinant(&basis);
    let scale: BigInt = Pow::pow(BigInt::from(8), basis.len() as u32);
    if &raw % &scale != BigInt::from(0) {
        return Err(Error::NonIntegral(0, 0));
    }
    let det = raw / scale;
    debug_assert!(basis.is_empty() || det >= BigInt::one());
    Ok(LatticeDeterminant {
        rank: basis.len(),
        determinant: det.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramMclReport {
    pub check: &'static str,
    pub vertices: usize,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<[usize; 2]>,
    pub norms_delta: Vec<i64>,
    pub norms_delta_tilde: Vec<i64>,
    pub ip_with_a0_delta: Vec<i64>,
    pub ip_with_a0_delta_tilde: Vec<i64>,
    pub lattice: LatticeDeterminant,
}

/// Builds the McLaughlin complement and compares `gram(Δ̃)` with `A + 3I`.
pub fn gram_mcl_report() -> Result<GramMclReport> {
    let g = mclaughlin_complement();
    let delta = delta_275(&g)?;
    let tilde = delta_tilde(&delta)?;
    let m = gram(&tilde)?;
    let target = g.shifted_adjacency(3);
    let first_mismatch = (0..g.order())
        .flat_map(|u| (0..g.order()).map(move |v| (u, v)))
        .find(|&(u, v)| m[u][v] != target[u][v])
        .map(|(u, v)| [u, v]);
    let a = a0();
    let distinct = |it: &mut dyn Iterator<Item = i64>| {
        let mut v: Vec<i64> = it.collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let ip_or_zero = |x: &LVec, y: &LVec| x.ip(y).ok_or(Error::NonIntegral(0, 0));
    let norms_delta = distinct(
        &mut delta
            .vectors
            .iter()
            .map(|v| ip_or_zero(v, v).unwrap_or(i64::MIN)),
    );
    let norms_delta_tilde = distinct(
        &mut tilde
            .vectors
            .iter()
            .map(|v| ip_or_zero(v, v).unwrap_or(i64::MIN)),
    );
    let ip_with_a0_delta = distinct(
        &mut delta
            .vectors
            .iter()
            .map(|v| ip_or_zero(v, &a).unwrap_or(i64::MIN)),
    );
    let ip_with_a0_delta_tilde = distinct(
        &mut tilde
            .vectors
            .iter()
            .map(|v| ip_or_zero(v, &a).unwrap_or(i64::MIN)),
    );
    Ok(GramMclReport {
        check: "gram of projected 275-vector system equals A + 3I of the McLaughlin complement",
        vertices: g.order(),
        matches: first_mismatch.is_none(),
        first_mismatch,
        norms_delta,
        norms_delta_tilde,
        ip_with_a0_delta,
        ip_with_a0_delta_tilde,
        lattice: lattice_determinant(&tilde)?,
    })
}

/// Certificate for `K_{n×t}` with scale 1 and shift `t`. Coordinate 0 is
/// shared by every vertex; then, for each part `i`, one coordinate per pair
/// `l < j` of positions in the part. Vertex `i·t + j` (position `j` of part
/// `i`) is `e₀ − Σ_{l<j} e_{i,l,j} + Σ_{l>j} e_{i,j,l}`.
pub fn knt_certificate(n: usize, t: usize) -> Result<Certificate> {
    if n < 2 || t < 1 {
        return Err(Error::Precondition("need n ≥ 2 and t ≥ 1".into()));
    }
    let pairs = t * (t - 1) / 2;
    let dim = 1 + n * pairs;
    let pair_index = |l: usize, j: usize| {
        // position of (l, j), l < j, in colex order
        j * (j - 1) / 2 + l
    };
    let mut m = vec![vec![0i64; n * t]; dim];
    for i in 0..n {
        for j in 0..t {
            let col = i * t + j;
            m[0][col] = 1;
            for l in 0..t {
                if l < j {
                    m[1 + i * pairs + pair_index(l, j)][col] = -1;
                } else if l > j {
                    m[1 + i * pairs + pair_index(j, l)][col] = 1;
                }
            }
        }
    }
    Certificate::new(1, t as i64, m)
}

/// Clique-vertex incidence matrix of a family of Delsarte cliques that
/// partitions the edges: `NᵀN = A − θ_min I`.
pub fn geometric_certificate(g: &Graph, cliques: &[Vec<usize>]) -> Result<Certificate> {
    let p = is_srg(g).ok_or_else(|| Error::Precondition("graph is not strongly regular".into()))?;
    let size = delsarte_bound(&p)?;
    if !size.is_integer() {
        return Err(Error::Precondition(format!(
            "Delsarte bound {size} is not an integer"
        )));
    }
    let size = size.to_integer() as usize;
    let theta = srg_spectrum(&p)?
        .theta_min()
        .as_integer()
        .ok_or_else(|| Error::Precondition("smallest eigenvalue is not an integer".into()))?;
    let n = g.order();
    let mut cover = vec![vec![0usize; n]; n];
    for (c, clique) in cliques.iter().enumerate() {
        if let Some(&v) = clique.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        if clique.len() != size {
            return Err(Error::BadClique(
                c,
                format!("size {} is not {size}", clique.len()),
            ));
        }
        if !g.is_clique(clique) {
            return Err(Error::BadClique(c, "not a clique".into()));
        }
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                cover[u.min(v)][u.max(v)] += 1;
            }
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| cover[u][v] != 1) {
        return Err(Error::EdgeCover(u, v, cover[u][v]));
    }
    let m = cliques
        .iter()
        .map(|c| {
            let mut row = vec![0; n];
            for &v in c {
                row[v] = 1;
            }
            row
        })
        .collect();
    let cert = Certificate::new(1, -theta, m)?;
    debug_assert!(verify_certificate(g, &cert).is_ok_and(|v| v.accepted));
    Ok(cert)
}

/// Block-point incidence of the `2-(21,6,4)` design: scale 2, shift 3 for
/// the Sims–Gewirtz complement.
pub fn sims_gewirtz_certificate() -> Certificate {
    Certificate::new(2, 3, design_2_21_6_4().incidence_matrix()).expect("rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete_multipartite;

    #[test]
    fn a0_inner_products() {
        let a = a0();
        assert_eq!(a.norm(), Some(4));
        let gens = leech_generators();
        assert_eq!(gens.len(), 760);
        assert_eq!(gens.vectors[0].ip(&a), Some(-1));
        assert!(gens.vectors.iter().all(|v| v.norm() == Some(4)));
        assert!(matches!(
            shorter_leech_project(&gens.vectors[0]),
            Err(Error::OddInnerProduct(_))
        ));
        assert_eq!(shorter_leech_project(&a).unwrap(), LVec::zero());
        let mut a1 = [0; DIM];
        a1[0] = 4;
        a1[2] = 4;
        let p = shorter_leech_project(&LVec(a1)).unwrap();
        let mut expect = [0; DIM];
        expect[0] = 2;
        expect[1] = -2;
        expect[2] = 4;
        assert_eq!(p, LVec(expect));
        assert_eq!(p.norm(), Some(3));
        assert_eq!(p.ip(&a), Some(0));
    }

    #[test]
    fn gram_edge_cases() {
        assert!(gram(&VectorSystem::default()).unwrap().is_empty());
        assert_eq!(gram(&VectorSystem::new(vec![a0()])).unwrap(), vec![vec![4]]);
        let mut odd = [0; DIM];
        odd[0] = 1;
        assert!(matches!(
            gram(&VectorSystem::new(vec![a0(), LVec(odd)])),
            Err(Error::NonIntegral(0, 1))
        ));
    }

    #[test]
    fn text_round_trip() {
        let s = VectorSystem::new(vec![a0(), LVec::zero()]);
        assert_eq!(VectorSystem::from_text(&s.to_text()).unwrap(), s);
        assert!(VectorSystem::from_text("1 2 3\n").is_err());
    }

    #[test]
    fn knt_certificates_verify() {
        for n in 2..=4 {
            for t in 1..=4 {
                let c = knt_certificate(n, t).unwrap();
                assert_eq!(c.rows(), 1 + n * t * (t - 1) / 2);
                let g = complete_multipartite(n, t).unwrap();
                assert!(verify_certificate(&g, &c).unwrap().accepted, "{n} {t}");
            }
        }
        assert!(knt_certificate(1, 3).is_err());
    }

    #[test]
    fn geometric_on_complete_graph() {
        let k4 = Graph::complete(4);
        // K₄ is not strongly regular here, so the lemma's precondition fails
        assert!(geometric_certificate(&k4, &[vec![0, 1, 2, 3]]).is_err());
        let g = crate::design::sts15().block_graph(1).unwrap();
        // drop one point-clique: edges go uncovered
        let cliques = point_cliques_of_sts();
        assert!(geometric_certificate(&g, &cliques).is_ok());
        assert!(matches!(
            geometric_certificate(&g, &cliques[1..]),
            Err(Error::EdgeCover(_, _, 0))
        ));
    }

    fn point_cliques_of_sts() -> Vec<Vec<usize>> {
        let d = crate::design::sts15();
        (0..15)
            .map(|p| {
                (0..d.block_count())
                    .filter(|&b| d.blocks()[b].contains(p))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn sims_gewirtz_gram() {
        let c = sims_gewirtz_certificate();
        assert_eq!((c.rows(), c.cols()), (21, 56));
        let m = c.gram();
        assert!((0..56).all(|i| m[i][i] == 6));
        assert!(m.iter().flatten().all(|&x| x == 0 || x == 2 || x == 6));
    }
}
