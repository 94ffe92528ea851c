use std::fmt;

use num_traits::Zero;

use super::{is_srg, Graph, SrgParams};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Disjoint nonempty cells covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut cell_of = vec![usize::MAX; n];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {c} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two cells")));
                }
                cell_of[v] = c;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { cells, cell_of })
    }

    /// The two-cell partition `{cell, rest}`.
    pub fn split(n: usize, cell: &[usize]) -> Result<Self> {
        let mut inside = vec![false; n];
        for &v in cell {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            inside[v] = true;
        }
        let rest = (0..n).filter(|&v| !inside[v]).collect();
        Self::new(n, vec![cell.to_vec(), rest])
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<Rational>>,
}

impl QuotientMatrix {
    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        QuotientMatrix {
            entries: rows
                .iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_integers(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.is_integer().then(|| x.to_integer()))
                    .collect()
            })
            .collect()
    }

    pub fn apply(&self, u: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(u).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn mul(&self, other: &QuotientMatrix) -> QuotientMatrix {
        let p = self.dim();
        let entries = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        (0..p)
                            .map(|l| self.entries[i][l] * other.entries[l][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        QuotientMatrix { entries }
    }

    fn add_diagonal(&self, c: Rational) -> QuotientMatrix {
        let mut m = self.clone();
        for (i, row) in m.entries.iter_mut().enumerate() {
            row[i] += c;
        }
        m
    }

    fn scaled_sum(&self, a: Rational, other: &QuotientMatrix, b: Rational) -> QuotientMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| a * x + b * y).collect())
            .collect();
        QuotientMatrix { entries }
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Average number of neighbours a vertex of cell `i` has in cell `j`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> QuotientMatrix {
    let counts = neighbour_counts(g, p);
    let entries = p
        .cells()
        .iter()
        .map(|cell| {
            (0..p.len())
                .map(|j| {
                    let total: i64 = cell.iter().map(|&x| counts[x][j] as i64).sum();
                    Rational::new(total, cell.len() as i64)
                })
                .collect()
        })
        .collect();
    QuotientMatrix { entries }
}

fn neighbour_counts(g: &Graph, p: &Partition) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|x| {
            let mut row = vec![0; p.len()];
            for y in g.neighbors(x) {
                row[p.cell_of(y)] += 1;
            }
            row
        })
        .collect()
}

/// The quotient matrix if every vertex of a cell sees the same number of
/// neighbours in each cell.
pub fn is_equitable(g: &Graph, p: &Partition) -> Option<QuotientMatrix> {
    let counts = neighbour_counts(g, p);
    let equitable = p
        .cells()
        .iter()
        .all(|cell| cell.iter().all(|&x| counts[x] == counts[cell[0]]));
    if !equitable {
        return None;
    }
    let q = QuotientMatrix {
        entries: p
            .cells()
            .iter()
            .map(|cell| {
                counts[cell[0]]
                    .iter()
                    .map(|&c| Rational::from_integer(c as i64))
                    .collect()
            })
            .collect(),
    };
    debug_assert!(is_srg(g).is_none_or(|params| quotient_eigencheck(&params, &q)));
    Some(q)
}

/// Every eigenvalue of `q` lies in the spectrum of an SRG with parameters
/// `params`: `(Q − kI)(Q² − (λ−μ)Q − (k−μ)I) = 0`.
///
/// A quotient matrix of an equitable partition is similar to a symmetric
/// matrix, so the vanishing of this polynomial is equivalent to the claim.
pub fn quotient_eigencheck(params: &SrgParams, q: &QuotientMatrix) -> bool {
    let k = Rational::from_integer(params.k as i64);
    let b = Rational::from_integer(params.lambda as i64 - params.mu as i64);
    let c = Rational::from_integer(params.k as i64 - params.mu as i64);
    let quad = q
        .mul(q)
        .scaled_sum(Rational::from_integer(1), q, -b)
        .add_diagonal(-c);
    let prod = q.add_diagonal(-k).mul(&quad);
    prod.entries.iter().flatten().all(Zero::is_zero)
}

/// `{{x}, N₁(x), N₂(x)}`; requires `x` to have eccentricity 2.
pub fn vertex_partition(g: &Graph, x: usize) -> Result<Partition> {
    g.check_vertex(x)?;
    let dist = g.distances_from(x);
    if dist.iter().any(Option::is_none) {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let ecc = dist.iter().map(|d| d.unwrap()).max().unwrap_or(0);
    if ecc != 2 {
        return Err(Error::Eccentricity {
            vertex: x,
            eccentricity: ecc,
        });
    }
    let layer = |i: usize| {
        (0..g.order())
            .filter(|&v| dist[v] == Some(i))
            .collect::<Vec<_>>()
    };
    Partition::new(g.order(), vec![vec![x], layer(1), layer(2)])
}

/// Induced subgraph on the vertices at distance exactly `i` from `x`.
pub fn subconstituent(g: &Graph, x: usize, i: usize) -> Result<Graph> {
    g.check_vertex(x)?;
    let dist = g.distances_from(x);
    let layer: Vec<usize> = (0..g.order()).filter(|&v| dist[v] == Some(i)).collect();
    if layer.is_empty() {
        return Err(Error::EmptySubconstituent {
            vertex: x,
            distance: i,
        });
    }
    Ok(g.induced(&layer))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0], vec![1, 2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0], vec![1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
    }

    #[test]
    fn pentagon_distance_partition() {
        let c5 = Graph::cycle(5);
        let p = vertex_partition(&c5, 0).unwrap();
        let q = is_equitable(&c5, &p).unwrap();
        assert_eq!(
            q.as_integers().unwrap(),
            vec![vec![0, 2, 0], vec![1, 0, 1], vec![0, 1, 1]]
        );
        assert!(quotient_eigencheck(&SrgParams::new(5, 2, 0, 1), &q));
        // the same matrix is not consistent with (5,2,1,0)-style spectra
        assert!(!quotient_eigencheck(&SrgParams::new(6, 2, 1, 0), &q));
    }

    #[test]
    fn single_cell_is_valency() {
        let g = Graph::cycle(6);
        let p = Partition::new(6, vec![(0..6).collect()]).unwrap();
        assert_eq!(
            is_equitable(&g, &p).unwrap().as_integers().unwrap(),
            vec![vec![2]]
        );
    }

    #[test]
    fn unequal_counts_are_not_equitable() {
        let g = Graph::path(4);
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(is_equitable(&g, &p).is_none());
        let q = quotient_matrix(&g, &p);
        assert_eq!(q.entries[0][0], Rational::from_integer(1));
        assert_eq!(q.entries[0][1], Rational::new(1, 2));
    }

    #[test]
    fn subconstituents_and_eccentricity() {
        let k4 = Graph::complete(4);
        assert_eq!(subconstituent(&k4, 0, 1).unwrap(), Graph::complete(3));
        assert!(matches!(
            subconstituent(&k4, 0, 2),
            Err(Error::EmptySubconstituent { .. })
        ));
        assert!(matches!(
            vertex_partition(&Graph::path(5), 0),
            Err(Error::Eccentricity {
                eccentricity: 4,
                ..
            })
        ));
    }
}
