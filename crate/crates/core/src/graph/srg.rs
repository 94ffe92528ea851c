use std::fmt;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::exact::{exact_sqrt, is_psd, rank, Rational, Surd};

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = self.signed();
        v > k && k * (k - l - 1) == (v - k - 1) * m
    }

    fn signed(&self) -> (i64, i64, i64, i64) {
        (
            self.v as i64,
            self.k as i64,
            self.lambda as i64,
            self.mu as i64,
        )
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Recognises a strongly regular graph. Complete and edgeless graphs are
/// rejected; disconnected graphs with constant counts (such as `2K₃`) are not.
pub fn is_srg(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    let k = g.regular_degree()?;
    if n < 2 || k == 0 || k == n - 1 {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbors(u, v);
            let slot = if g.adjacent(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    let p = SrgParams::new(n, k, lambda?, mu?);
    debug_assert!(p.is_feasible());
    Some(p)
}

/// Checks `A² = kI + λA + μ(J − I − A)` entry by entry.
pub fn srg_identity_holds(g: &Graph, p: &SrgParams) -> bool {
    let n = g.order();
    if n != p.v {
        return false;
    }
    (0..n).all(|u| {
        g.degree(u) == p.k
            && (u + 1..n).all(|v| {
                let expected = if g.adjacent(u, v) { p.lambda } else { p.mu };
                g.common_neighbors(u, v) == expected
            })
    })
}

/// `(v, v−1−k, v−2−2k+μ, v−2k+λ)`.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    let (v, k, l, m) = p.signed();
    let out = [v, v - 1 - k, v - 2 - 2 * k + m, v - 2 * k + l];
    if out.iter().any(|&x| x < 0) {
        return Err(Error::NegativeParameter(format!("complement of {p}")));
    }
    Ok(SrgParams::new(
        out[0] as usize,
        out[1] as usize,
        out[2] as usize,
        out[3] as usize,
    ))
}

/// Eigenvalues with multiplicities, in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub eigenvalues: Vec<(Surd, usize)>,
}

impl Spectrum {
    pub fn theta_min(&self) -> Surd {
        self.eigenvalues.last().expect("non-empty spectrum").0
    }

    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.1).sum()
    }

    pub fn multiplicity_of(&self, value: Surd) -> usize {
        self.eigenvalues
            .iter()
            .find(|e| e.0 == value)
            .map_or(0, |e| e.1)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (val, m)) in self.eigenvalues.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{val}^{m}")?;
        }
        write!(f, "}}")
    }
}

/// Spectrum from the parameters: `k` and the roots of `x² − (λ−μ)x − (k−μ)`.
pub fn srg_spectrum(p: &SrgParams) -> Result<Spectrum> {
    if !p.is_feasible() {
        return Err(Error::Precondition(format!("{p} is not feasible")));
    }
    let (v, k, l, m) = p.signed();
    let b = l - m;
    let disc = b * b + 4 * (k - m);
    let num = 2 * k + (v - 1) * b;
    let mut eig: Vec<(Surd, i64)> = Vec::new();
    match exact_sqrt(disc) {
        Some(root) => {
            if root == 0 || num % root != 0 || (v - 1 - num / root) % 2 != 0 {
                return Err(Error::BadMultiplicity(p.to_string()));
            }
            let f = (v - 1 - num / root) / 2;
            let g = (v - 1 + num / root) / 2;
            eig.push((Surd::new(b + root, 0, 1, 2), f));
            eig.push((Surd::new(b - root, 0, 1, 2), g));
        }
        None => {
            // irrational roots are algebraic conjugates, so they share a multiplicity
            if num != 0 || (v - 1) % 2 != 0 {
                return Err(Error::BadMultiplicity(p.to_string()));
            }
            let f = (v - 1) / 2;
            eig.push((Surd::new(b, 1, disc, 2), f));
            eig.push((Surd::new(b, -1, disc, 2), f));
        }
    }
    if eig.iter().any(|e| e.1 < 0) {
        return Err(Error::BadMultiplicity(p.to_string()));
    }
    let mut out: Vec<(Surd, usize)> = vec![(Surd::integer(k), 1)];
    for (val, mult) in eig {
        if mult == 0 {
            continue;
        }
        match out.iter_mut().find(|e| e.0 == val) {
            Some(e) => e.1 += mult as usize,
            None => out.push((val, mult as usize)),
        }
    }
    out.sort_by_key(|b| std::cmp::Reverse(b.0));
    Ok(Spectrum { eigenvalues: out })
}

/// Whether `A + tI` is positive semidefinite, decided exactly.
pub fn psd_shift_check(g: &Graph, t: i64) -> bool {
    is_psd(&g.shifted_adjacency(t))
}

/// Rank of `A + tI`.
pub fn rank_of_shift(g: &Graph, t: i64) -> usize {
    rank(&g.shifted_adjacency(t))
}

/// `⌊θ_min⌋`, as minus the least integer shift making `A + tI` PSD.
pub fn floor_theta_min(g: &Graph) -> i64 {
    let mut lo = 0i64;
    let mut hi = (0..g.order()).map(|u| g.degree(u)).max().unwrap_or(0) as i64;
    if psd_shift_check(g, lo) {
        return 0;
    }
    // invariant: lo fails, hi passes (θ_min ≥ −Δ)
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if psd_shift_check(g, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    -hi
}

/// `1 − k/θ_min`, defined when `θ_min` is a negative rational.
pub fn delsarte_bound(p: &SrgParams) -> Result<Rational> {
    let theta = srg_spectrum(p)?.theta_min();
    let Some(theta) = theta.as_rational() else {
        return Err(Error::Precondition(format!(
            "smallest eigenvalue {theta} is irrational"
        )));
    };
    if theta >= Rational::from_integer(0) {
        return Err(Error::Precondition(
            "smallest eigenvalue is not negative".into(),
        ));
    }
    Ok(Rational::from_integer(1) - Rational::from_integer(p.k as i64) / theta)
}
