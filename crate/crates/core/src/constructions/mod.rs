//! Named graph constructions with frozen vertex orders.

mod mclaughlin;
mod pentagons;

pub use mclaughlin::{
    extend_by_dominating_clique, gq39, gq39_complement, mclaughlin_complement,
    sims_gewirtz_complement, McLaughlinVertex,
};
pub use pentagons::{
    compatible_pentagons, count_pentagons, enumerate_petersen_subgraphs, hoffman_singleton,
    hosi_label, is_petersen, pentagon_classes, pentagon_covers, pentagon_partitions, pentagons,
    petersen_meeting_each_in, verify_pentagon_structure, PentagonPartitions, PentagonReport,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K_{n×t}`: vertex `t·i + j` is member `j` of part `i`.
pub fn complete_multipartite(n: usize, t: usize) -> Result<Graph> {
    if n < 2 || t < 1 {
        return Err(Error::Precondition(format!(
            "K_(n x t) needs n ≥ 2 and t ≥ 1, got ({n}, {t})"
        )));
    }
    Ok(Graph::from_fn(n * t, |a, b| a / t != b / t))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn pair_labels(p: &[(usize, usize)]) -> Vec<String> {
    p.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect()
}

/// Kneser graph on the 2-subsets of `{0,…,4}` in lexicographic order.
pub fn petersen() -> Graph {
    let p = pairs(5);
    Graph::from_fn(p.len(), |x, y| {
        let (a, b) = p[x];
        let (c, d) = p[y];
        a != c && a != d && b != c && b != d
    })
    .with_labels(pair_labels(&p))
}

/// `T(n)`: 2-subsets of `{0,…,n−1}` (lexicographic), adjacent when they meet.
pub fn triangular(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "triangular graph needs n ≥ 4, got {n}"
        )));
    }
    let p = pairs(n);
    Ok(Graph::from_fn(p.len(), |x, y| {
        let (a, b) = p[x];
        let (c, d) = p[y];
        a == c || a == d || b == c || b == d
    })
    .with_labels(pair_labels(&p)))
}

/// Rook's graph `L₂(n)`: cell `(i, j)` is vertex `n·i + j`.
pub fn lattice_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "lattice graph needs n ≥ 2, got {n}"
        )));
    }
    Ok(Graph::from_fn(n * n, |x, y| {
        x / n == y / n || x % n == y % n
    }))
}

/// Halved 5-cube: even-weight words of length 5 (increasing as integers),
/// adjacent at Hamming distance 2. Parameters `(16,10,6,6)`.
pub fn clebsch() -> Graph {
    let words: Vec<u32> = (0u32..32).filter(|w| w.count_ones() % 2 == 0).collect();
    Graph::from_fn(words.len(), |a, b| (words[a] ^ words[b]).count_ones() == 2)
        .with_labels(words.iter().map(|w| format!("{w:05b}")).collect())
}

/// Cayley graph on `Z₄²` with connection set `±(1,0), ±(0,1), ±(1,1)`;
/// vertex `4a + b` is `(a, b)`.
pub fn shrikhande() -> Graph {
    let diff = |x: usize, y: usize| (((x / 4 + 4 - y / 4) % 4), ((x % 4 + 4 - y % 4) % 4));
    Graph::from_fn(16, |x, y| {
        matches!(
            diff(x, y),
            (1, 0) | (3, 0) | (0, 1) | (0, 3) | (1, 1) | (3, 3)
        )
    })
}

/// Cliques `{u, v} ∪ (N(u) ∩ N(v))` over all edges, deduplicated and sorted.
/// Fails if one of these sets is not a clique (the graph is not a union of
/// edge-disjoint cliques determined by their edges).
pub fn lines_through_edges(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let mut out = std::collections::BTreeSet::new();
    for (u, v) in g.edges() {
        let mut line = g.neighbors(u).and(g.neighbors(v));
        line.insert(u);
        line.insert(v);
        let line = line.to_vec();
        if !g.is_clique(&line) {
            return Err(Error::Precondition(format!(
                "common neighbours of edge {u}-{v} are not a clique"
            )));
        }
        out.insert(line);
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_srg, psd_shift_check, SrgParams};

    #[test]
    fn classical_parameters() {
        assert_eq!(is_srg(&petersen()), Some(SrgParams::new(10, 3, 0, 1)));
        assert_eq!(
            is_srg(&triangular(5).unwrap()),
            Some(SrgParams::new(10, 6, 3, 4))
        );
        assert_eq!(
            is_srg(&lattice_graph(3).unwrap()),
            Some(SrgParams::new(9, 4, 1, 2))
        );
        assert_eq!(is_srg(&clebsch()), Some(SrgParams::new(16, 10, 6, 6)));
        assert_eq!(is_srg(&shrikhande()), Some(SrgParams::new(16, 6, 2, 2)));
        assert_eq!(
            is_srg(&complete_multipartite(2, 3).unwrap()),
            Some(SrgParams::new(6, 3, 0, 3))
        );
    }

    #[test]
    fn triangular_five_is_petersen_complement() {
        // same lexicographic pair order, so the identity map is an isomorphism
        assert_eq!(triangular(5).unwrap().complement(), petersen());
    }

    #[test]
    fn multipartite_edge_cases() {
        assert_eq!(complete_multipartite(4, 1).unwrap(), Graph::complete(4));
        assert_eq!(is_srg(&complete_multipartite(4, 1).unwrap()), None);
        let k33 = complete_multipartite(3, 3).unwrap();
        assert!(psd_shift_check(&k33, 3));
        assert!(!psd_shift_check(&k33, 2));
        assert!(complete_multipartite(1, 3).is_err());
        assert!(triangular(3).is_err());
        assert!(lattice_graph(1).is_err());
    }

    #[test]
    fn lines_of_a_rook_graph() {
        let lines = lines_through_edges(&lattice_graph(3).unwrap()).unwrap();
        assert_eq!(lines.len(), 6);
        assert!(lines_through_edges(&Graph::cycle(4)).is_ok());
        assert!(lines_through_edges(&shrikhande()).is_err());
    }
}
