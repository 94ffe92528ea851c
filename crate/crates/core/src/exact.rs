//! Exact arithmetic helpers: quadratic surds, fraction-free elimination
//! (PSD test, rank, determinant) and integer lattice bases.
//!
//! Everything here is integer or rational; there is no floating point on any
//! path that decides a result.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A real number `(p + q·√d) / r` with `d` square-free (or `q == 0`) and `r > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub p: i64,
    pub q: i64,
    pub d: i64,
    pub r: i64,
}

impl Surd {
    pub fn rational(value: Rational) -> Self {
        Surd {
            p: *value.numer(),
            q: 0,
            d: 1,
            r: *value.denom(),
        }
    }

    pub fn integer(v: i64) -> Self {
        Surd {
            p: v,
            q: 0,
            d: 1,
            r: 1,
        }
    }

    /// Builds `(p + q√d)/r`, extracting square factors of `d` and reducing.
    pub fn new(p: i64, q: i64, d: i64, r: i64) -> Self {
        assert!(r != 0 && d >= 0);
        let (mut p, mut q, mut r) = if r < 0 { (-p, -q, -r) } else { (p, q, r) };
        let (outside, inside) = square_part(d);
        q *= outside;
        match inside {
            0 => q = 0,
            1 => {
                p += q;
                q = 0;
            }
            _ => {}
        }
        let d = if q == 0 { 1 } else { inside };
        let g = p.gcd(&q).gcd(&r);
        if g > 1 {
            p /= g;
            q /= g;
            r /= g;
        }
        Surd { p, q, d, r }
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.p, self.r))
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|v| v.is_integer())
            .map(|v| v.to_integer())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> i64 {
        // floor((p + q√d)/r) with r > 0: find m with m·r - p <= q√d < (m+1)·r - p.
        let approx = (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64;
        let mut m = approx.floor() as i64;
        while self.cmp_integer(m) == Ordering::Less {
            m -= 1;
        }
        while self.cmp_integer(m + 1) != Ordering::Less {
            m += 1;
        }
        m
    }

    fn cmp_integer(&self, m: i64) -> Ordering {
        // sign of (p + q√d) - m r  ==  sign of q√d - (m r - p)
        let rhs = (m as i128) * (self.r as i128) - self.p as i128;
        cmp_sqrt_term(self.q as i128, self.d as i128, rhs)
    }
}

/// Compares `q·√d` with `rhs` exactly.
fn cmp_sqrt_term(q: i128, d: i128, rhs: i128) -> Ordering {
    let lhs_sign = q.signum() * if d == 0 { 0 } else { 1 };
    match (lhs_sign.cmp(&0), rhs.cmp(&0)) {
        (Ordering::Equal, _) => 0.cmp(&rhs),
        (Ordering::Greater, Ordering::Less | Ordering::Equal) => Ordering::Greater,
        (Ordering::Less, Ordering::Greater | Ordering::Equal) => Ordering::Less,
        (Ordering::Greater, Ordering::Greater) => (q * q * d).cmp(&(rhs * rhs)),
        (Ordering::Less, Ordering::Less) => (rhs * rhs).cmp(&(q * q * d)),
    }
}

fn square_part(d: i64) -> (i64, i64) {
    let mut outside = 1;
    let mut inside = d;
    let mut f = 2;
    while f * f <= inside {
        while inside % (f * f) == 0 {
            inside /= f * f;
            outside *= f;
        }
        f += 1;
    }
    (outside, inside)
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        // self - other = (A + B√d1 + C√d2) / (r1 r2)
        let (r1, r2) = (self.r as i128, other.r as i128);
        let a = self.p as i128 * r2 - other.p as i128 * r1;
        let b = self.q as i128 * r2;
        let c = -(other.q as i128) * r1;
        sign_of_sum(a, b, self.d as i128, c, other.d as i128)
    }
}

/// Sign of `a + b√d1 + c√d2` (compared against zero).
fn sign_of_sum(a: i128, b: i128, d1: i128, c: i128, d2: i128) -> Ordering {
    if c == 0 || d1 == d2 {
        return cmp_sqrt_term(b + if d1 == d2 { c } else { 0 }, d1, -a);
    }
    if b == 0 {
        return cmp_sqrt_term(c, d2, -a);
    }
    // s = b√d1 + c√d2, compare s with -a.
    let s_sign = if b.signum() == c.signum() {
        b.signum().cmp(&0)
    } else {
        let (pos, neg) = if b > 0 {
            (b * b * d1, c * c * d2)
        } else {
            (c * c * d2, b * b * d1)
        };
        pos.cmp(&neg)
    };
    let target = (-a).cmp(&0);
    if s_sign != target || s_sign == Ordering::Equal {
        return s_sign.cmp(&target);
    }
    // same strict sign: compare s^2 with a^2, where
    // s^2 - a^2 = (b^2 d1 + c^2 d2 - a^2) + 2bc√(d1 d2)
    let sq = cmp_sqrt_term(2 * b * c, d1 * d2, -(b * b * d1 + c * c * d2 - a * a));
    if s_sign == Ordering::Greater {
        sq
    } else {
        sq.reverse()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            return if self.r == 1 {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            };
        }
        let sign = if self.q < 0 { '-' } else { '+' };
        let qa = self.q.abs();
        let rad = if qa == 1 {
            format!("√{}", self.d)
        } else {
            format!("{qa}√{}", self.d)
        };
        let num = if self.p == 0 {
            if self.q < 0 {
                format!("-{rad}")
            } else {
                rad
            }
        } else {
            format!("{}{sign}{rad}", self.p)
        };
        if self.r == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/{}", self.r)
        }
    }
}

/// Exact integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Decides positive semidefiniteness of a symmetric integer matrix by
/// fraction-free symmetric elimination with diagonal pivots.
///
/// Invariant: after each step the working entries equal the Schur complement
/// scaled by the (positive) leading principal minor, so signs are preserved.
pub fn is_psd(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a = to_big(m);
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    loop {
        let mut pivot = None;
        for &i in &remaining {
            match a[i][i].sign() {
                num_bigint::Sign::Minus => return false,
                num_bigint::Sign::NoSign => {
                    if remaining.iter().any(|&j| !a[i][j].is_zero()) {
                        return false;
                    }
                }
                num_bigint::Sign::Plus => {
                    if pivot.is_none() {
                        pivot = Some(i);
                    }
                }
            }
        }
        let Some(p) = pivot else {
            return true;
        };
        remaining.retain(|&i| i != p);
        let app = a[p][p].clone();
        for (x, &i) in remaining.iter().enumerate() {
            for &j in &remaining[x..] {
                let v = (&app * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[j][i] = v.clone();
                a[i][j] = v;
            }
        }
        prev = app;
    }
}

/// Rank of an integer matrix (any shape) by Bareiss elimination.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a = to_big(m);
    bareiss_rank(&mut a)
}

fn bareiss_rank(a: &mut [Vec<BigInt>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Determinant of a square big-integer matrix (Bareiss).
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// A basis (in row echelon form) of the integer lattice spanned by `rows`,
/// computed with unimodular row operations only.
pub fn integer_row_basis(rows: &[Vec<i64>]) -> Result<Vec<Vec<i128>>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    let mut pool: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let mut basis = Vec::new();
    for c in 0..width {
        let (mut with, mut without): (Vec<_>, Vec<_>) = pool.into_iter().partition(|r| r[c] != 0);
        while with.len() > 1 {
            with.sort_by_key(|r| r[c].abs());
            let pivot = with[0].clone();
            let mut next = vec![pivot.clone()];
            for mut r in with.into_iter().skip(1) {
                let q = Integer::div_floor(&r[c], &pivot[c]);
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x = x
                        .checked_sub(q.checked_mul(*y).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
                if r[c] != 0 {
                    next.push(r);
                } else if r.iter().any(|&x| x != 0) {
                    without.push(r);
                }
            }
            with = next;
        }
        if let Some(p) = with.pop() {
            basis.push(p);
        }
        pool = without;
    }
    Ok(basis)
}

/// Gram determinant of an integer basis, as a big integer.
pub fn gram_determinant(basis: &[Vec<i128>]) -> BigInt {
    let g: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| BigInt::from(x * y)).sum())
                .collect()
        })
        .collect();
    determinant(&g)
}

/// `binomial(n, k)` as a u128 (zero when k > n).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
