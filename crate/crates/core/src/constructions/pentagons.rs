//! The Hoffman–Singleton graph built from five pentagons and five
//! pentagrams, and the pentagon and Petersen-subgraph combinatorics inside it.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::{is_srg, Graph, SrgParams};

/// Label of Hoffman–Singleton vertex `id`: `(i,j)` for the pentagon vertices
/// `5i + j` and `iRl` for the pentagram vertices `25 + 5i + l`.
pub fn hosi_label(id: usize) -> String {
    assert!(id < 50);
    if id < 25 {
        format!("({},{})", id / 5, id % 5)
    } else {
        format!("{}R{}", (id - 25) / 5, (id - 25) % 5)
    }
}

/// Pentagons `P^i` on `(i,j)` with `(i,j) ∼ (i,j±1)`, pentagrams `Q^i` on
/// `iRl` with `iRl ∼ iR(l±2)`, and `iRl ∼ (j, ij + l)`.
pub fn hoffman_singleton() -> Graph {
    let p = |i: usize, j: usize| 5 * i + j % 5;
    let q = |i: usize, l: usize| 25 + 5 * i + l % 5;
    let mut edges = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            edges.push((p(i, j), p(i, j + 1)));
            edges.push((q(i, j), q(i, j + 2)));
            for l in 0..5 {
                // iRl joins (j, i·j + l) in every pentagon P^j
                edges.push((q(i, l), p(j, i * j + l)));
            }
        }
    }
    Graph::from_edges(50, edges)
        .expect("indices in range")
        .with_labels((0..50).map(hosi_label).collect())
}

/// Induced 5-cycles, each listed in cyclic order from its least vertex with
/// the smaller neighbour second; sorted.
pub fn pentagons(g: &Graph) -> Vec<[usize; 5]> {
    let n = g.order();
    let mut out: Vec<[usize; 5]> =
        (0..n)
            .into_par_iter()
            .flat_map_iter(|v0| {
                let mut found = Vec::new();
                let later = |x: usize| x > v0;
                for a in g.neighbors(v0).iter().filter(|&a| later(a)) {
                    for b in g
                        .neighbors(a)
                        .iter()
                        .filter(|&b| later(b) && !g.adjacent(v0, b))
                    {
                        for c in g.neighbors(b).iter().filter(|&c| {
                            later(c) && c != a && !g.adjacent(v0, c) && !g.adjacent(a, c)
                        }) {
                            for d in g.neighbors(c).iter().filter(|&d| {
                                d > a
                                    && d != b
                                    && g.adjacent(v0, d)
                                    && !g.adjacent(a, d)
                                    && !g.adjacent(b, d)
                            }) {
                                found.push([v0, a, b, c, d]);
                            }
                        }
                    }
                }
                found
            })
            .collect();
    out.sort_unstable();
    out
}

pub fn count_pentagons(g: &Graph) -> usize {
    pentagons(g).len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PentagonPartitions {
    /// All partitions, each a sorted list of indices into the pentagon list.
    Complete { partitions: Vec<Vec<usize>> },
    /// Budget ran out; the count is a lower bound only.
    BudgetExhausted { partial_count: usize },
}

impl PentagonPartitions {
    pub fn count(&self) -> Option<usize> {
        match self {
            PentagonPartitions::Complete { partitions } => Some(partitions.len()),
            PentagonPartitions::BudgetExhausted { .. } => None,
        }
    }
}

/// Two disjoint pentagons are compatible when no edge joins them or when
/// their union induces a Petersen graph.
pub fn compatible_pentagons(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let n = g.order();
    let sa = BitSet::from_indices(n, a.iter().copied());
    let sb = BitSet::from_indices(n, b.iter().copied());
    if !sa.is_disjoint(&sb) {
        return false;
    }
    let cross: Vec<usize> = a
        .iter()
        .map(|&x| g.neighbors(x).intersection_count(&sb))
        .collect();
    if cross.iter().all(|&c| c == 0) {
        return true;
    }
    cross.iter().all(|&c| c == 1) && is_petersen(&g.induced(&sa.or(&sb).to_vec()))
}

/// Partitions of the vertex set into pairwise compatible pentagons, by exact
/// cover (branch on the uncovered vertex with fewest admissible pentagons).
///
/// With `pairwise_compatible` false every partition into disjoint induced
/// pentagons is counted; in the Hoffman–Singleton graph there are far more of
/// those than compatible ones.
pub fn pentagon_covers(g: &Graph, budget: u64, pairwise_compatible: bool) -> PentagonPartitions {
    let pents = pentagons(g);
    let n = g.order();
    let m = pents.len();
    let sets: Vec<BitSet> = pents
        .iter()
        .map(|p| BitSet::from_indices(n, p.iter().copied()))
        .collect();
    let allowed_with: Vec<BitSet> = (0..m)
        .into_par_iter()
        .map(|i| {
            BitSet::from_indices(
                m,
                (0..m).filter(|&j| {
                    if pairwise_compatible {
                        j != i && compatible_pentagons(g, &pents[i], &pents[j])
                    } else {
                        sets[i].is_disjoint(&sets[j])
                    }
                }),
            )
        })
        .collect();
    let mut by_vertex: Vec<BitSet> = vec![BitSet::new(m); n];
    for (i, p) in pents.iter().enumerate() {
        for &v in p {
            by_vertex[v].insert(i);
        }
    }
    struct Cover<'a> {
        sets: &'a [BitSet],
        allowed_with: &'a [BitSet],
        by_vertex: &'a [BitSet],
        chosen: Vec<usize>,
        found: Vec<Vec<usize>>,
        nodes: u64,
        budget: u64,
    }
    impl Cover<'_> {
        fn run(&mut self, covered: &BitSet, allowed: &BitSet) -> bool {
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            let uncovered = BitSet::full(covered.capacity()).and_not(covered);
            let mut best: Option<BitSet> = None;
            for v in uncovered.iter() {
                let fits = self.by_vertex[v].and(allowed);
                let c = fits.count();
                if best.as_ref().is_none_or(|b| c < b.count()) {
                    best = Some(fits);
                    if c == 0 {
                        break;
                    }
                }
            }
            let Some(options) = best else {
                let mut sol = self.chosen.clone();
                sol.sort_unstable();
                self.found.push(sol);
                return true;
            };
            for i in options.iter() {
                self.chosen.push(i);
                let ok = self.run(
                    &covered.or(&self.sets[i]),
                    &allowed.and(&self.allowed_with[i]),
                );
                self.chosen.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
    }
    let mut cover = Cover {
        sets: &sets,
        allowed_with: &allowed_with,
        by_vertex: &by_vertex,
        chosen: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        budget,
    };
    if cover.run(&BitSet::new(n), &BitSet::full(m)) {
        let mut partitions = cover.found;
        partitions.sort();
        PentagonPartitions::Complete { partitions }
    } else {
        PentagonPartitions::BudgetExhausted {
            partial_count: cover.found.len(),
        }
    }
}

/// Partitions into pairwise compatible pentagons (see [`pentagon_covers`]).
pub fn pentagon_partitions(g: &Graph, budget: u64) -> PentagonPartitions {
    pentagon_covers(g, budget, true)
}

pub fn is_petersen(g: &Graph) -> bool {
    g.order() == 10 && is_srg(g) == Some(SrgParams::new(10, 3, 0, 1))
}

fn induces_pentagon(g: &Graph, vs: &[usize]) -> bool {
    vs.len() == 5 && {
        let h = g.induced(vs);
        h.regular_degree() == Some(2) && h.is_connected()
    }
}

/// Splits a family of vertex-disjoint pentagons into groups, two pentagons
/// sharing a group when there is no edge between them.
pub fn pentagon_classes(g: &Graph, family: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let no_edges =
        |a: &[usize], b: &[usize]| a.iter().all(|&x| b.iter().all(|&y| !g.adjacent(x, y)));
    let aux = Graph::from_fn(family.len(), |i, j| no_edges(&family[i], &family[j]));
    aux.components()
}

/// Outcome of the neighbourhood check around a pentagon `H₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PentagonReport {
    pub confirmed: bool,
    /// Number of components of the first neighbourhood, all of them pentagons.
    pub first_neighbourhood_pentagons: usize,
    pub second_neighbourhood_pentagons: usize,
    /// Number of unions `H_i ∪ H^j` inducing a Petersen graph (out of 25).
    pub petersen_unions: usize,
    pub problems: Vec<String>,
}

/// Checks that the vertices at distance one from `h0` induce five disjoint
/// pentagons `H^j`, those at distance two induce four more (which together
/// with `h0` form `H_i`), and that every `H_i ∪ H^j` induces a Petersen graph.
pub fn verify_pentagon_structure(g: &Graph, h0: &[usize]) -> PentagonReport {
    let mut problems = Vec::new();
    if !induces_pentagon(g, h0) {
        problems.push(format!("{h0:?} does not induce a pentagon"));
        return PentagonReport {
            confirmed: false,
            first_neighbourhood_pentagons: 0,
            second_neighbourhood_pentagons: 0,
            petersen_unions: 0,
            problems,
        };
    }
    let h = BitSet::from_indices(g.order(), h0.iter().copied());
    let mut n1 = BitSet::new(g.order());
    for &x in h0 {
        n1.union_with(g.neighbors(x));
    }
    n1.difference_with(&h);
    let n2 = BitSet::full(g.order()).and_not(&n1).and_not(&h);

    let pentagon_components = |set: &BitSet, name: &str, problems: &mut Vec<String>| {
        let vs = set.to_vec();
        let sub = g.induced(&vs);
        let mut pents = Vec::new();
        for comp in sub.components() {
            let orig: Vec<usize> = comp.iter().map(|&i| vs[i]).collect();
            if induces_pentagon(g, &orig) {
                pents.push(orig);
            } else {
                problems.push(format!("{name} component {orig:?} is not a pentagon"));
            }
        }
        pents
    };
    let upper = pentagon_components(&n1, "first neighbourhood", &mut problems);
    let lower_rest = pentagon_components(&n2, "second neighbourhood", &mut problems);
    if upper.len() != 5 {
        problems.push(format!(
            "first neighbourhood has {} pentagons, expected 5",
            upper.len()
        ));
    }
    if lower_rest.len() != 4 {
        problems.push(format!(
            "second neighbourhood has {} pentagons, expected 4",
            lower_rest.len()
        ));
    }
    let mut lower = vec![h0.to_vec()];
    lower.extend(lower_rest.iter().cloned());
    let mut petersen_unions = 0;
    for a in &lower {
        for b in &upper {
            let union: Vec<usize> = a.iter().chain(b).copied().collect();
            if is_petersen(&g.induced(&union)) {
                petersen_unions += 1;
            } else {
                problems.push(format!("{a:?} ∪ {b:?} is not a Petersen graph"));
            }
        }
    }
    PentagonReport {
        confirmed: problems.is_empty() && petersen_unions == 25,
        first_neighbourhood_pentagons: upper.len(),
        second_neighbourhood_pentagons: lower_rest.len(),
        petersen_unions,
        problems,
    }
}

/// Vertex sets (sorted, deduplicated, sorted lexicographically) of induced
/// Petersen subgraphs, found as unions of two disjoint induced pentagons.
/// Every induced Petersen subgraph arises this way.
pub fn enumerate_petersen_subgraphs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let pents = pentagons(g);
    let sets: Vec<BitSet> = pents
        .iter()
        .map(|p| BitSet::from_indices(n, p.iter().copied()))
        .collect();
    let mut out: Vec<Vec<usize>> = (0..pents.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let sets = &sets;
            let pents = &pents;
            (i + 1..pents.len()).filter_map(move |j| {
                if !sets[i].is_disjoint(&sets[j]) {
                    return None;
                }
                // a Petersen graph joins its two pentagons by a perfect matching
                let matched = pents[i]
                    .iter()
                    .all(|&x| g.neighbors(x).intersection_count(&sets[j]) == 1);
                if !matched {
                    return None;
                }
                let union = sets[i].or(&sets[j]).to_vec();
                is_petersen(&g.induced(&union)).then_some(union)
            })
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Members of `family` meeting every set of `parts` in exactly `size` vertices.
pub fn petersen_meeting_each_in(
    family: &[Vec<usize>],
    parts: &[Vec<usize>],
    size: usize,
) -> Vec<Vec<usize>> {
    family
        .iter()
        .filter(|f| {
            parts
                .iter()
                .all(|p| p.iter().filter(|x| f.contains(x)).count() == size)
        })
        .cloned()
        .collect()
}
