//! The McLaughlin complement from `S(4,7,23)`, the generalized quadrangle
//! graphs inside it, and the Sims–Gewirtz complement.

use crate::design::{design_2_21_6_4, s_4_7_23};
use crate::error::{Error, Result};
use crate::graph::{subconstituent, Graph};

/// Identity of a McLaughlin-complement vertex, as encoded in its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum McLaughlinVertex {
    /// Point `i ∈ {1,…,22}`; label `p{i}`.
    Point(usize),
    /// Block of `S(4,7,23)` through 0, all seven points kept; label `B1:{…}`.
    BlockThroughZero(Vec<usize>),
    /// Block missing 0; label `B2:{…}`.
    BlockAvoidingZero(Vec<usize>),
}

impl McLaughlinVertex {
    pub fn label(&self) -> String {
        let join = |b: &[usize]| b.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            McLaughlinVertex::Point(i) => format!("p{i}"),
            McLaughlinVertex::BlockThroughZero(b) => format!("B1:{{{}}}", join(b)),
            McLaughlinVertex::BlockAvoidingZero(b) => format!("B2:{{{}}}", join(b)),
        }
    }

    pub fn parse(label: &str) -> Option<Self> {
        let block = |body: &str| -> Option<Vec<usize>> {
            let inner = body.strip_prefix('{')?.strip_suffix('}')?;
            let pts: Option<Vec<usize>> = inner.split(',').map(|x| x.parse().ok()).collect();
            pts.filter(|p| {
                p.len() == 7 && p.iter().all(|&x| x < 23) && p.windows(2).all(|w| w[0] < w[1])
            })
        };
        if let Some(i) = label.strip_prefix('p') {
            let i: usize = i.parse().ok()?;
            return (1..=22).contains(&i).then_some(McLaughlinVertex::Point(i));
        }
        if let Some(b) = label.strip_prefix("B1:") {
            return block(b)
                .filter(|b| b[0] == 0)
                .map(McLaughlinVertex::BlockThroughZero);
        }
        if let Some(b) = label.strip_prefix("B2:") {
            return block(b)
                .filter(|b| b[0] != 0)
                .map(McLaughlinVertex::BlockAvoidingZero);
        }
        None
    }
}

fn meet(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Vertices: points `1..=22`, then the 77 blocks through 0, then the 176
/// blocks missing 0 (both in the block order of `S(4,7,23)`). Points are
/// pairwise adjacent; a point is adjacent to a block through 0 containing it
/// and to a block missing 0 not containing it; two blocks of the same kind
/// are adjacent when they share 3 points, blocks of different kinds when
/// they share 1.
pub fn mclaughlin_complement() -> Graph {
    let d = s_4_7_23();
    let blocks: Vec<Vec<usize>> = (0..d.block_count()).map(|b| d.block_points(b)).collect();
    let mut verts: Vec<McLaughlinVertex> = (1..=22).map(McLaughlinVertex::Point).collect();
    verts.extend(
        blocks
            .iter()
            .filter(|b| b.contains(&0))
            .cloned()
            .map(McLaughlinVertex::BlockThroughZero),
    );
    verts.extend(
        blocks
            .iter()
            .filter(|b| !b.contains(&0))
            .cloned()
            .map(McLaughlinVertex::BlockAvoidingZero),
    );
    use McLaughlinVertex::*;
    let adjacent = |x: &McLaughlinVertex, y: &McLaughlinVertex| match (x, y) {
        (Point(_), Point(_)) => true,
        (Point(i), BlockThroughZero(b)) | (BlockThroughZero(b), Point(i)) => b.contains(i),
        (Point(i), BlockAvoidingZero(b)) | (BlockAvoidingZero(b), Point(i)) => !b.contains(i),
        (BlockThroughZero(a), BlockThroughZero(b))
        | (BlockAvoidingZero(a), BlockAvoidingZero(b)) => meet(a, b) == 3,
        (BlockThroughZero(a), BlockAvoidingZero(b))
        | (BlockAvoidingZero(b), BlockThroughZero(a)) => meet(a, b) == 1,
    };
    Graph::from_fn(verts.len(), |a, b| adjacent(&verts[a], &verts[b]))
        .with_labels(verts.iter().map(McLaughlinVertex::label).collect())
}

/// Second subconstituent of the McLaughlin complement at vertex 0 (point 1):
/// the complement of the collinearity graph of `GQ(3,9)`.
pub fn gq39_complement() -> Graph {
    subconstituent(&mclaughlin_complement(), 0, 2).expect("vertex 0 has eccentricity 2")
}

/// Collinearity graph of `GQ(3,9)`.
pub fn gq39() -> Graph {
    gq39_complement().complement()
}

/// Block graph of the `2-(21,6,4)` design at intersection size 2.
pub fn sims_gewirtz_complement() -> Graph {
    design_2_21_6_4()
        .block_graph(2)
        .expect("the design is quasi-symmetric")
}

/// Adds `m` new pairwise adjacent vertices joined to every old vertex.
pub fn extend_by_dominating_clique(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::Precondition("need at least one new vertex".into()));
    }
    let n = g.order();
    let h = Graph::from_fn(n + m, |a, b| if b < n { g.adjacent(a, b) } else { true });
    Ok(match g.labels() {
        Some(labels) => {
            let mut l = labels.to_vec();
            l.extend((0..m).map(|i| format!("x{i}")));
            h.with_labels(l)
        }
        None => h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for v in [
            McLaughlinVertex::Point(5),
            McLaughlinVertex::BlockThroughZero(vec![0, 1, 2, 3, 4, 5, 6]),
            McLaughlinVertex::BlockAvoidingZero(vec![1, 2, 3, 4, 5, 6, 22]),
        ] {
            assert_eq!(McLaughlinVertex::parse(&v.label()), Some(v));
        }
        assert_eq!(McLaughlinVertex::parse("p0"), None);
        assert_eq!(McLaughlinVertex::parse("B1:{1,2,3,4,5,6,7}"), None);
        assert_eq!(McLaughlinVertex::parse("B2:{1,2,3}"), None);
        assert_eq!(McLaughlinVertex::parse("x"), None);
    }

    #[test]
    fn dominating_clique_on_a_point() {
        assert_eq!(
            extend_by_dominating_clique(&Graph::empty(1), 1).unwrap(),
            Graph::complete(2)
        );
        assert!(extend_by_dominating_clique(&Graph::empty(1), 0).is_err());
        let h = extend_by_dominating_clique(&Graph::cycle(5), 2).unwrap();
        assert_eq!(h.min_degree(), Some(4));
        assert_eq!(h.degree(6), 6);
    }
}
