//! Simple undirected graphs stored as per-vertex adjacency bit sets.

mod clique;
mod graph6;
mod json;
mod partition;
mod srg;

use std::collections::VecDeque;
use std::fmt;

pub use clique::{max_clique, max_coclique, CliqueOutcome};
pub use graph6::{graph6_decode, graph6_encode};
pub use json::GraphJson;
pub use partition::{
    is_equitable, quotient_eigencheck, quotient_matrix, subconstituent, vertex_partition,
    Partition, QuotientMatrix,
};
pub use srg::{
    complement_params, delsarte_bound, floor_theta_min, is_srg, psd_shift_check, rank_of_shift,
    srg_identity_holds, srg_spectrum, Spectrum, SrgParams,
};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

/// Equality compares adjacency only; labels are provenance, not structure.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|u| self.degree(u)).min()
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.rows.first()?.count();
        (0..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[v])
    }

    /// `|W_{x,y}|`: vertices other than `x`, `y` adjacent to neither.
    pub fn common_nonneighbors(&self, x: usize, y: usize) -> usize {
        let mut covered = self.rows[x].or(&self.rows[y]);
        covered.insert(x);
        covered.insert(y);
        self.n - covered.count()
    }

    /// Integer adjacency matrix with `shift` added on the diagonal.
    pub fn shifted_adjacency(&self, shift: i64) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| {
                        if u == v {
                            shift
                        } else {
                            self.adjacent(u, v) as i64
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        self.shifted_adjacency(0)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = BitSet::full(self.n).and_not(&self.rows[u]);
            row.remove(u);
            g.rows[u] = row;
        }
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `vertices`, in the given order; labels are carried over.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let m = vertices.len();
        let mut g = Graph::from_fn(m, |a, b| self.adjacent(vertices[a], vertices[b]));
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    pub fn induced_set(&self, vertices: &BitSet) -> Graph {
        self.induced(&vertices.to_vec())
    }

    /// Breadth-first distances from `x` (`None` for unreachable vertices).
    pub fn distances_from(&self, x: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[x] = Some(0);
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.rows[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Vertex sets of the connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.rows[u].is_disjoint(&self.rows[v]))
    }

    /// Number of common neighbours never exceeds one (no 4-cycles).
    pub fn is_quadrilateral_free(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.common_neighbors(u, v) <= 1))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_coclique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && !self.adjacent(u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }
}
