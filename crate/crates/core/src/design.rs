//! Block designs: the Steiner systems coming from the extended binary Golay
//! code, their derived and residual designs, and block graphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::graph::Graph;

/// Reduced echelon generator matrix of the extended Golay code. Bit 0 is the
/// coordinate `∞`, bit `1 + i` is point `i` of `Z/23`; the code is spanned by
/// the cyclic shifts of the quadratic-residue indicator, extended by parity.
const GOLAY_GENERATOR: [u32; 12] = [
    0x800ae3, 0x400f92, 0x200d2b, 0x100c76, 0x080cd9, 0x04066d, 0x020337, 0x010b78, 0x0085bc,
    0x0042de, 0x002b8d, 0x0015c7,
];

/// Points with names and a list of equal-size blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    points: Vec<String>,
    k: usize,
    blocks: Vec<BitSet>,
}

/// `t-(v, k, λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub t: u64,
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
}

impl Design {
    /// Points are named `0..v`.
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_names((0..v).map(|i| i.to_string()).collect(), blocks)
    }

    pub fn with_names(points: Vec<String>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let v = points.len();
        let Some(k) = blocks.first().map(Vec::len) else {
            return Err(Error::EmptyDesign);
        };
        let mut seen = HashSet::new();
        let mut sets = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            if let Some(&p) = b.iter().find(|&&p| p >= v) {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    order: v,
                });
            }
            let set = BitSet::from_indices(v, b.iter().copied());
            if set.count() != k || b.len() != k {
                return Err(Error::Precondition(format!(
                    "block {i} does not have size {k}"
                )));
            }
            if !seen.insert(set.clone()) {
                return Err(Error::Precondition(format!("block {i} is repeated")));
            }
            sets.push(set);
        }
        Ok(Design {
            points,
            k,
            blocks: sets,
        })
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[BitSet] {
        &self.blocks
    }

    pub fn block_points(&self, b: usize) -> Vec<usize> {
        self.blocks[b].to_vec()
    }

    pub fn point_names(&self) -> &[String] {
        &self.points
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    /// Blocks through `p` with `p` deleted; remaining points keep their names.
    pub fn derive(&self, p: usize) -> Result<Design> {
        self.restrict(p, true)
    }

    /// Blocks missing `p`, on the points other than `p`.
    pub fn residual(&self, p: usize) -> Result<Design> {
        self.restrict(p, false)
    }

    fn restrict(&self, p: usize, through: bool) -> Result<Design> {
        let v = self.point_count();
        if p >= v {
            return Err(Error::VertexOutOfRange {
                vertex: p,
                order: v,
            });
        }
        if !self.blocks.iter().any(|b| b.contains(p)) {
            return Err(Error::PointInNoBlock(p));
        }
        let relabel = |x: usize| if x > p { x - 1 } else { x };
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .filter(|b| b.contains(p) == through)
            .map(|b| b.iter().filter(|&x| x != p).map(relabel).collect())
            .collect();
        let mut points = self.points.clone();
        points.remove(p);
        Self::with_names(points, blocks)
    }

    /// `λ` if every `t`-subset of points lies in exactly `λ` blocks.
    pub fn t_design_lambda(&self, t: usize) -> Option<u64> {
        let v = self.point_count();
        if t == 0 || t > self.k {
            return None;
        }
        let mut counts = vec![0u32; binomial(v as u64, t as u64) as usize];
        let mut subset = vec![0; t];
        for b in &self.blocks {
            let pts = b.to_vec();
            for_each_subset(&pts, t, &mut subset, &mut |s| counts[colex_rank(s)] += 1);
        }
        let first = counts[0];
        counts.iter().all(|&c| c == first).then_some(first as u64)
    }

    pub fn params(&self, t: usize) -> Option<DesignParams> {
        self.t_design_lambda(t).map(|lambda| DesignParams {
            t: t as u64,
            v: self.point_count() as u64,
            k: self.k as u64,
            lambda,
        })
    }

    /// Sizes of pairwise block intersections.
    pub fn intersection_numbers(&self) -> Result<BTreeSet<usize>> {
        if self.blocks.len() < 2 {
            return Err(Error::Precondition("need at least two blocks".into()));
        }
        let mut out = BTreeSet::new();
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                out.insert(a.intersection_count(b));
            }
        }
        Ok(out)
    }

    /// Blocks as vertices, adjacent when they meet in `l2` points, where `l2`
    /// is the larger of at most two intersection sizes.
    pub fn block_graph(&self, l2: usize) -> Result<Graph> {
        let sizes = self.intersection_numbers()?;
        if sizes.len() > 2 || sizes.last() != Some(&l2) {
            return Err(Error::NotQuasiSymmetric(sizes.into_iter().collect()));
        }
        let g = Graph::from_fn(self.blocks.len(), |a, b| {
            self.blocks[a].intersection_count(&self.blocks[b]) == l2
        });
        let labels = self.blocks.iter().map(|b| self.block_label(b)).collect();
        Ok(g.with_labels(labels))
    }

    fn block_label(&self, b: &BitSet) -> String {
        let names: Vec<&str> = b.iter().map(|x| self.points[x].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Points by blocks 0/1 matrix.
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.point_count())
            .map(|x| self.blocks.iter().map(|b| b.contains(x) as i64).collect())
            .collect()
    }

    /// `v b k` header, then one sorted block per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.point_count(), self.block_count(), self.k);
        for b in &self.blocks {
            let pts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", pts.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Design> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?;
        let nums = parse_usizes(header).map_err(|m| parse_err(hl, m))?;
        let [v, b, k] = nums[..] else {
            return Err(parse_err(hl, "header must be \"v b k\"".into()));
        };
        let mut blocks = Vec::with_capacity(b);
        for (ln, line) in lines {
            let block = parse_usizes(line).map_err(|m| parse_err(ln, m))?;
            if block.len() != k {
                return Err(parse_err(
                    ln,
                    format!("block has {} points, expected {k}", block.len()),
                ));
            }
            if block.windows(2).any(|w| w[0] >= w[1]) {
                return Err(parse_err(
                    ln,
                    "block points must be strictly increasing".into(),
                ));
            }
            blocks.push(block);
        }
        if blocks.len() != b {
            return Err(parse_err(
                hl,
                format!("header promises {b} blocks, found {}", blocks.len()),
            ));
        }
        Design::new(v, blocks)
    }
}

fn parse_usizes(line: &str) -> std::result::Result<Vec<usize>, String> {
    line.split_whitespace()
        .map(|w| {
            w.parse()
                .map_err(|_| format!("not a non-negative integer: {w:?}"))
        })
        .collect()
}

fn for_each_subset(items: &[usize], t: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        start: usize,
        depth: usize,
        buf: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if depth == buf.len() {
            f(buf);
            return;
        }
        for i in start..=items.len() - (buf.len() - depth) {
            buf[depth] = items[i];
            rec(items, i + 1, depth + 1, buf, f);
        }
    }
    debug_assert_eq!(buf.len(), t);
    if t <= items.len() {
        rec(items, 0, 0, buf, f);
    }
}

/// Colexicographic rank of an increasing subset.
fn colex_rank(s: &[usize]) -> usize {
    s.iter()
        .enumerate()
        .map(|(i, &x)| binomial(x as u64, i as u64 + 1) as usize)
        .sum()
}

/// `λ·C(v−s, t−s) / C(k−s, t−s)`: the number of blocks through any `s` points.
pub fn lambda_s(p: &DesignParams, s: u64) -> Result<Ratio<i128>> {
    if s == 0 || s > p.t {
        return Err(Error::Precondition(format!("need 1 ≤ s ≤ {}", p.t)));
    }
    let num = p.lambda as i128 * binomial(p.v - s, p.t - s) as i128;
    let den = binomial(p.k - s, p.t - s) as i128;
    Ok(Ratio::new(num, den))
}

/// All codewords of the extended Golay code, as 24-bit masks.
pub fn golay_codewords() -> Vec<u32> {
    (0u32..1 << 12)
        .map(|m| {
            GOLAY_GENERATOR
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold(0, |acc, (_, row)| acc ^ row)
        })
        .collect()
}

fn golay_point_names() -> Vec<String> {
    std::iter::once("inf".to_string())
        .chain((0..23).map(|i| i.to_string()))
        .collect()
}

/// The Steiner system `S(5,8,24)` of weight-8 Golay codewords. Point 0 is
/// `∞` and point `1 + i` is `i`; blocks are sorted.
pub fn golay_s_5_8_24() -> Design {
    let mut blocks: Vec<Vec<usize>> = golay_codewords()
        .into_iter()
        .filter(|w| w.count_ones() == 8)
        .map(|w| (0..24).filter(|i| w >> i & 1 == 1).collect())
        .collect();
    blocks.sort();
    Design::with_names(golay_point_names(), blocks).expect("octads are distinct")
}

/// `S(4,7,23)`: derived at `∞`, so point index `i` is `i` in `Z/23`.
pub fn s_4_7_23() -> Design {
    golay_s_5_8_24().derive(0).expect("∞ lies on octads")
}

/// `S(3,6,22)`: derived from `S(4,7,23)` at point 0.
pub fn s_3_6_22() -> Design {
    s_4_7_23().derive(0).expect("0 lies on blocks")
}

/// The quasi-symmetric `2-(21,6,4)` design: residual of `S(3,6,22)` at point 1.
pub fn design_2_21_6_4() -> Design {
    let s = s_3_6_22();
    let q = s.point_index("1").expect("point 1 present");
    s.residual(q).expect("point 1 lies on blocks")
}

/// Points and lines of the projective space of dimension 3 over `F₂`: a
/// Steiner triple system on 15 points. Point `i` is the nonzero vector `i + 1`.
pub fn sts15() -> Design {
    let mut blocks = Vec::new();
    for a in 1usize..16 {
        for b in a + 1..16 {
            let c = a ^ b;
            if c > b {
                blocks.push(vec![a - 1, b - 1, c - 1]);
            }
        }
    }
    blocks.sort();
    Design::new(15, blocks).expect("lines are distinct")
}
