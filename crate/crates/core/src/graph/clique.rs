//! Maximum clique by branch and bound with greedy colouring bounds.
//!
//! Two passes: the first finds the clique number, the second walks candidates
//! in increasing vertex order to return the lexicographically least witness.

use serde::Serialize;

use super::Graph;
use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CliqueOutcome {
    Complete {
        size: usize,
        witness: Vec<usize>,
    },
    /// Search stopped early; `witness` is the best clique seen.
    BudgetExhausted {
        lower_bound: usize,
        witness: Vec<usize>,
    },
}

impl CliqueOutcome {
    pub fn size(&self) -> usize {
        match self {
            CliqueOutcome::Complete { size, .. } => *size,
            CliqueOutcome::BudgetExhausted { lower_bound, .. } => *lower_bound,
        }
    }

    pub fn witness(&self) -> &[usize] {
        match self {
            CliqueOutcome::Complete { witness, .. }
            | CliqueOutcome::BudgetExhausted { witness, .. } => witness,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, CliqueOutcome::Complete { .. })
    }
}

struct Search<'a> {
    g: &'a Graph,
    nodes: u64,
    budget: u64,
    best: Vec<usize>,
    current: Vec<usize>,
}

struct OutOfBudget;

impl Search<'_> {
    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    /// Greedy sequential colouring; returns vertices in colour order with
    /// the running colour count, an upper bound on the clique number of
    /// each prefix.
    fn colour_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.clone();
        let mut order = Vec::with_capacity(p.count());
        let mut colours = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.difference_with(self.g.neighbors(v));
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut p: BitSet) -> Result<(), OutOfBudget> {
        self.tick()?;
        let (order, colours) = self.colour_sort(&p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            let next = p.and(self.g.neighbors(v));
            self.current.push(v);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            p.remove(v);
        }
        Ok(())
    }

    fn lex_first(&mut self, mut p: BitSet, target: usize) -> Result<bool, OutOfBudget> {
        self.tick()?;
        if self.current.len() == target {
            return Ok(true);
        }
        while let Some(v) = p.first() {
            if self.current.len() + p.count() < target {
                return Ok(false);
            }
            let (_, colours) = self.colour_sort(&p);
            if self.current.len() + colours.last().copied().unwrap_or(0) < target {
                return Ok(false);
            }
            self.current.push(v);
            if self.lex_first(p.and(self.g.neighbors(v)), target)? {
                return Ok(true);
            }
            self.current.pop();
            p.remove(v);
        }
        Ok(false)
    }
}

/// Maximum clique within a node budget; the witness is the lexicographically
/// least maximum clique when the search completes.
pub fn max_clique(g: &Graph, budget: u64) -> CliqueOutcome {
    let n = g.order();
    let mut s = Search {
        g,
        nodes: 0,
        budget,
        best: Vec::new(),
        current: Vec::new(),
    };
    if s.expand(BitSet::full(n)).is_err() {
        let mut witness = s.best;
        witness.sort_unstable();
        return CliqueOutcome::BudgetExhausted {
            lower_bound: witness.len(),
            witness,
        };
    }
    let omega = s.best.len();
    let mut fallback = s.best.clone();
    fallback.sort_unstable();
    s.current.clear();
    match s.lex_first(BitSet::full(n), omega) {
        Ok(true) => CliqueOutcome::Complete {
            size: omega,
            witness: s.current,
        },
        Ok(false) => unreachable!("a clique of size {omega} was already found"),
        Err(OutOfBudget) => CliqueOutcome::BudgetExhausted {
            lower_bound: omega,
            witness: fallback,
        },
    }
}

pub fn max_coclique(g: &Graph, budget: u64) -> CliqueOutcome {
    max_clique(&g.complement(), budget)
}
