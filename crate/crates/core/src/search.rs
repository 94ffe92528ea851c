//! Backtracking search for integer `N` with `NᵀN = s(A + tI)`.
//!
//! Vertices receive columns one at a time. A column is split into its values
//! on the coordinates already in use and a block of fresh coordinates. Fresh
//! coordinates are interchangeable and sign-symmetric, so the fresh block is
//! a nonincreasing list of positive entries. Used coordinates whose values
//! agree on every assigned column are interchangeable too; their new values
//! are taken nonincreasing. Both reductions keep at least one representative
//! of every solution orbit, so exhausting the tree proves there is none.

use serde::Serialize;

use crate::certify::{row_constraint_violation, verify_certificate, Certificate};
use crate::error::{Error, Result};
use crate::graph::{is_srg, max_clique, psd_shift_check, Graph};

/// A column as values on the `active.len()` used coordinates followed by
/// fresh entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnCandidate {
    pub active: Vec<i64>,
    pub fresh: Vec<i64>,
}

impl ColumnCandidate {
    pub fn norm(&self) -> i64 {
        self.active.iter().chain(&self.fresh).map(|x| x * x).sum()
    }
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Nonincreasing lists of positive integers, each at most `max`, whose
/// squares sum to `rest`.
fn fresh_shapes(rest: i64, max: i64) -> Vec<Vec<i64>> {
    fn go(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=max.min(isqrt(rest))).rev() {
            cur.push(v);
            go(rest - v * v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rest, max, &mut Vec::new(), &mut out);
    out
}

/// All columns of norm `s·t` on `active` used coordinates (with no other
/// columns placed, so no coordinate symmetry is assumed among them) plus a
/// canonical fresh block.
pub fn canonical_column_enumerator(
    s: i64,
    t: i64,
    active: usize,
) -> impl Iterator<Item = ColumnCandidate> {
    let st = s * t;
    let b = isqrt(st);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(active);
    fn go(
        c: usize,
        active: usize,
        st: i64,
        b: i64,
        used: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<ColumnCandidate>,
    ) {
        if c == active {
            for fresh in fresh_shapes(st - used, b) {
                out.push(ColumnCandidate {
                    active: cur.clone(),
                    fresh,
                });
            }
            return;
        }
        for v in -b..=b {
            if used + v * v <= st {
                cur.push(v);
                go(c + 1, active, st, b, used + v * v, cur, out);
                cur.pop();
            }
        }
    }
    go(0, active, st, b, 0, &mut cur, &mut out);
    out.into_iter()
}

/// Columns placed so far, in search order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SearchState {
    /// Vertex placed at each position.
    pub order: Vec<usize>,
    /// `columns[p]` belongs to `order[p]`; missing trailing entries are 0.
    pub columns: Vec<Vec<i64>>,
    pub active: usize,
}

impl SearchState {
    fn entry(&self, p: usize, c: usize) -> i64 {
        self.columns[p].get(c).copied().unwrap_or(0)
    }

    fn dot(&self, p: usize, q: usize) -> i64 {
        self.columns[p]
            .iter()
            .zip(&self.columns[q])
            .map(|(a, b)| a * b)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prune {
    Keep,
    Cut(String),
}

/// Local support rules for scale 1 and shift 3 (all entries `0, ±1`).
#[derive(Clone, Debug, Default)]
struct SupportRules {
    active: bool,
    /// `closed_twin[u][v]`: adjacent with equal closed neighbourhoods.
    closed_twin: Vec<Vec<bool>>,
    /// Non-adjacent columns must overlap (an SRG with `μ ≥ 10` and no
    /// closed twins).
    nonadjacent_overlap: bool,
}

impl SupportRules {
    fn new(g: &Graph, s: i64, t: i64) -> Self {
        if (s, t) != (1, 3) {
            return SupportRules::default();
        }
        let n = g.order();
        let closed_twin: Vec<Vec<bool>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        u != v
                            && g.adjacent(u, v)
                            && (0..n)
                                .all(|w| w == u || w == v || g.adjacent(u, w) == g.adjacent(v, w))
                    })
                    .collect()
            })
            .collect();
        let no_twins = closed_twin.iter().flatten().all(|&x| !x);
        let nonadjacent_overlap = no_twins && is_srg(g).is_some_and(|p| p.mu >= 10);
        SupportRules {
            active: true,
            closed_twin,
            nonadjacent_overlap,
        }
    }

    fn check(&self, g: &Graph, x: usize, cx: &[i64], y: usize, cy: &[i64]) -> Option<String> {
        if !self.active {
            return None;
        }
        let shared = cx
            .iter()
            .zip(cy)
            .filter(|(a, b)| **a != 0 && **b != 0)
            .count();
        if g.adjacent(x, y) && shared == 3 && !self.closed_twin[x][y] {
            return Some(format!("adjacent columns {x} and {y} share 3 positions"));
        }
        if !g.adjacent(x, y) && shared == 0 && self.nonadjacent_overlap {
            return Some(format!(
                "non-adjacent columns {x} and {y} share no position while mu >= 10"
            ));
        }
        None
    }
}

/// Checks a partial assignment: Gram entries among placed columns, the
/// scale-1 shift-3 support rules, and, once every vertex is placed, the row
/// constraints (eigenvector residuals on vertex partitions, the norm
/// inequality, and for scale 2 shift 3 the coclique bound on supports).
pub fn prune(state: &SearchState, g: &Graph, s: i64, t: i64) -> Prune {
    let p = state.columns.len();
    for a in 0..p {
        for b in a..p {
            let (x, y) = (state.order[a], state.order[b]);
            let want = s * if a == b { t } else { g.adjacent(x, y) as i64 };
            if state.dot(a, b) != want {
                return Prune::Cut(format!(
                    "columns {x} and {y} have inner product {} not {want}",
                    state.dot(a, b)
                ));
            }
        }
    }
    let rules = SupportRules::new(g, s, t);
    for a in 0..p {
        for b in a + 1..p {
            let (x, y) = (state.order[a], state.order[b]);
            let (cx, cy) = (
                pad(&state.columns[a], state.active),
                pad(&state.columns[b], state.active),
            );
            if let Some(reason) = rules.check(g, x, &cx, y, &cy) {
                return Prune::Cut(reason);
            }
        }
    }
    if p < g.order() || g.order() == 0 {
        return Prune::Keep;
    }
    let mut rows = vec![vec![0i64; g.order()]; state.active];
    for (pos, &x) in state.order.iter().enumerate() {
        for (c, row) in rows.iter_mut().enumerate() {
            row[x] = state.entry(pos, c);
        }
    }
    match Certificate::new(s, t, rows).map(|c| row_constraint_violation(g, &c)) {
        Ok(None) => Prune::Keep,
        Ok(Some(reason)) => Prune::Cut(reason),
        Err(e) => Prune::Cut(e.to_string()),
    }
}

fn pad(col: &[i64], len: usize) -> Vec<i64> {
    let mut v = col.to_vec();
    v.resize(len.max(col.len()), 0);
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Verified certificate.
    Found(Certificate),
    /// The whole reduced tree was explored without a solution.
    Unsat,
    /// The node budget ran out first.
    Unknown,
}

impl SearchOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Unsat => "unsat",
            SearchOutcome::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    /// Nodes (placed columns) per search depth.
    pub depth_histogram: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub verdict: &'static str,
    pub nodes: u64,
    pub depth_histogram: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_path: Option<String>,
}

impl SearchResult {
    pub fn report(&self, certificate_path: Option<String>) -> SearchReport {
        SearchReport {
            verdict: self.outcome.name(),
            nodes: self.nodes,
            depth_histogram: self.depth_histogram.clone(),
            certificate_path,
        }
    }
}

/// A maximum clique first, then repeatedly the vertex with most placed
/// neighbours (ties to the smaller index).
pub fn default_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let clique = max_clique(g, 1_000_000);
    let mut order: Vec<usize> = clique.witness().to_vec();
    let mut placed = vec![false; n];
    for &v in &order {
        placed[v] = true;
    }
    let mut seen = vec![0usize; n];
    for &v in &order {
        for w in g.neighbors(v).iter() {
            seen[w] += 1;
        }
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (seen[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in g.neighbors(next).iter() {
            seen[w] += 1;
        }
    }
    order
}

enum Flow {
    Found,
    Exhausted,
    Budget,
}

struct Searcher<'a> {
    g: &'a Graph,
    s: i64,
    st: i64,
    bound: i64,
    order: Vec<usize>,
    state: SearchState,
    rules: SupportRules,
    nodes: u64,
    budget: u64,
    histogram: Vec<u64>,
}

impl Searcher<'_> {
    fn place(&mut self, p: usize) -> Flow {
        if p == self.order.len() {
            return Flow::Found;
        }
        let mut budget_hit = false;
        for cand in self.candidates(p) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Flow::Budget;
            }
            self.histogram[p] += 1;
            let x = self.order[p];
            let mut col = cand.active;
            col.extend(&cand.fresh);
            let width = col.len();
            let bad = (0..p).any(|q| {
                let y = self.order[q];
                self.rules
                    .check(self.g, x, &col, y, &pad(&self.state.columns[q], width))
                    .is_some()
            });
            if bad {
                continue;
            }
            let prev_active = self.state.active;
            self.state.active = width;
            self.state.columns.push(col);
            self.state.order.push(x);
            match self.place(p + 1) {
                Flow::Found => return Flow::Found,
                Flow::Budget => budget_hit = true,
                Flow::Exhausted => {}
            }
            self.state.columns.pop();
            self.state.order.pop();
            self.state.active = prev_active;
            if budget_hit {
                return Flow::Budget;
            }
        }
        Flow::Exhausted
    }

    fn candidates(&self, p: usize) -> Vec<ColumnCandidate> {
        let m = self.state.active;
        let x = self.order[p];
        let targets: Vec<i64> = (0..p)
            .map(|q| self.s * self.g.adjacent(x, self.order[q]) as i64)
            .collect();
        // tail[q][c]: squared norm of column q on coordinates c..m
        let tail: Vec<Vec<i64>> = (0..p)
            .map(|q| {
                let mut t = vec![0; m + 1];
                for c in (0..m).rev() {
                    let v = self.state.entry(q, c);
                    t[c] = t[c + 1] + v * v;
                }
                t
            })
            .collect();
        // previous coordinate with the same values on every placed column
        let prev_twin: Vec<Option<usize>> = (0..m)
            .map(|c| {
                (0..c)
                    .rev()
                    .find(|&d| (0..p).all(|q| self.state.entry(q, c) == self.state.entry(q, d)))
            })
            .collect();
        let mut out = Vec::new();
        let mut w = Vec::with_capacity(m);
        let mut ips = vec![0i64; p];
        self.extend(
            0, &targets, &tail, &prev_twin, &mut w, &mut ips, 0, &mut out,
        );
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        c: usize,
        targets: &[i64],
        tail: &[Vec<i64>],
        prev_twin: &[Option<usize>],
        w: &mut Vec<i64>,
        ips: &mut [i64],
        used: i64,
        out: &mut Vec<ColumnCandidate>,
    ) {
        let room = self.st - used;
        // Cauchy–Schwarz on the remaining coordinates
        for (q, &target) in targets.iter().enumerate() {
            let gap = target - ips[q];
            if gap * gap > room * tail[q][c] {
                return;
            }
        }
        if c == self.state.active {
            for fresh in fresh_shapes(room, self.bound) {
                out.push(ColumnCandidate {
                    active: w.clone(),
                    fresh,
                });
            }
            return;
        }
        let cap = prev_twin[c].map_or(self.bound, |d| w[d]);
        let reach = isqrt(room).min(self.bound);
        for v in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6] {
            if v.abs() > reach || v > cap {
                continue;
            }
            if v != 0 {
                for (q, ip) in ips.iter_mut().enumerate() {
                    *ip += v * self.state.entry(q, c);
                }
            }
            w.push(v);
            self.extend(c + 1, targets, tail, prev_twin, w, ips, used + v * v, out);
            w.pop();
            if v != 0 {
                for (q, ip) in ips.iter_mut().enumerate() {
                    *ip -= v * self.state.entry(q, c);
                }
            }
        }
    }
}

/// Searches for `N` with `NᵀN = s(A + tI)`, placing vertices in `order`
/// (default: [`default_order`]). `budget` caps the number of placed columns.
pub fn find_representation(
    g: &Graph,
    s: i64,
    t: i64,
    order: Option<&[usize]>,
    budget: u64,
) -> Result<SearchResult> {
    if s < 1 || t < 1 {
        return Err(Error::Precondition(
            "scale and shift must be positive".into(),
        ));
    }
    if s * t > 36 {
        return Err(Error::Precondition(
            "column norm above 36 is not supported".into(),
        ));
    }
    if !psd_shift_check(g, t) {
        return Err(Error::Precondition(format!(
            "A + {t}I is not positive semidefinite"
        )));
    }
    let n = g.order();
    let order = match order {
        Some(o) => {
            let mut seen = vec![false; n];
            if o.len() != n
                || o.iter()
                    .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
            {
                return Err(Error::Precondition(
                    "order is not a permutation of the vertices".into(),
                ));
            }
            o.to_vec()
        }
        None => default_order(g),
    };
    let mut searcher = Searcher {
        g,
        s,
        st: s * t,
        bound: isqrt(s * t),
        order: order.clone(),
        state: SearchState::default(),
        rules: SupportRules::new(g, s, t),
        nodes: 0,
        budget,
        histogram: vec![0; n],
    };
    let flow = searcher.place(0);
    let outcome = match flow {
        Flow::Found => {
            let st = &searcher.state;
            let mut rows = vec![vec![0i64; n]; st.active];
            for (p, &x) in order.iter().enumerate() {
                for (c, row) in rows.iter_mut().enumerate() {
                    row[x] = st.entry(p, c);
                }
            }
            let cert = Certificate::new(s, t, rows)?;
            if !verify_certificate(g, &cert)?.accepted {
                return Err(Error::Precondition(
                    "internal error: search produced a bad certificate".into(),
                ));
            }
            debug_assert_eq!(prune(st, g, s, t), Prune::Keep);
            SearchOutcome::Found(cert)
        }
        Flow::Exhausted => SearchOutcome::Unsat,
        Flow::Budget => SearchOutcome::Unknown,
    };
    Ok(SearchResult {
        outcome,
        nodes: searcher.nodes.min(budget),
        depth_histogram: searcher.histogram,
    })
}
