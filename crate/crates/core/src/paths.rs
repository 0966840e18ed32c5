//! Lattice paths: Delannoy, Schröder, modified Delannoy and Motzkin.
//!
//! Each family has a brute-force enumerator, which serves as ground truth,
//! and a dynamic program or closed form used for the real computations.
//! Steps are oriented with east = (1,0), north = (0,1) and
//! northeast = (1,1); a weight triple `(u, v, w)` attaches `u` to east,
//! `v` to north and `w` to northeast steps, so that
//! `d(i,j) = u d(i-1,j) + v d(i,j-1) + w d(i-1,j-1)`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binom_general, rat, ratio, Integer, Rational};
use crate::poly::Polynomial;

/// Limits that keep the exponential enumerators from running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCaps {
    /// Largest number of steps (or unit displacements) an enumerated path
    /// may have.
    pub total_steps: usize,
    /// Largest ground set for the factorial enumeration of bijections in
    /// [`valid_pair_signed_sum`].
    pub pair_elements: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            total_steps: 16,
            pair_elements: 9,
        }
    }
}

impl EnumerationCaps {
    fn check_steps(&self, requested: usize) -> Result<()> {
        if requested > self.total_steps {
            return Err(Error::CapExceeded {
                requested,
                cap: self.total_steps,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// (1, 0)
    East,
    /// (0, 1)
    North,
    /// (1, 1)
    Northeast,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::East, Step::North, Step::Northeast];

    pub fn displacement(self) -> (usize, usize) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
            Step::Northeast => (1, 1),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::East => "E",
            Step::North => "N",
            Step::Northeast => "D",
        })
    }
}

pub type Path = Vec<Step>;

/// Step weights `(u, v, w)` for east, north and northeast steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTriple {
    pub u: Polynomial,
    pub v: Polynomial,
    pub w: Polynomial,
}

impl WeightTriple {
    pub fn new(u: Polynomial, v: Polynomial, w: Polynomial) -> Self {
        Self { u, v, w }
    }

    pub fn constants(u: Rational, v: Rational, w: Rational) -> Self {
        Self::new(u.into(), v.into(), w.into())
    }

    pub fn ints(u: i64, v: i64, w: i64) -> Self {
        Self::constants(rat(u), rat(v), rat(w))
    }

    /// All weights 1: plain path counting.
    pub fn ones() -> Self {
        Self::ints(1, 1, 1)
    }

    /// `(1, x, -1)`: east 1, north `x`, northeast `-1`. Delannoy sums under
    /// this weighting are shifted Jacobi polynomials.
    pub fn jacobi_model() -> Self {
        Self::new(Polynomial::one(), Polynomial::x(), Polynomial::from_int(-1))
    }

    /// Exchanges the east and north weights.
    pub fn swapped(&self) -> Self {
        Self::new(self.v.clone(), self.u.clone(), self.w.clone())
    }

    pub fn of(&self, step: Step) -> &Polynomial {
        match step {
            Step::East => &self.u,
            Step::North => &self.v,
            Step::Northeast => &self.w,
        }
    }

    pub fn path_weight(&self, path: &[Step]) -> Polynomial {
        path.iter()
            .fold(Polynomial::one(), |acc, &s| &acc * self.of(s))
    }
}

/// Sum of path weights over an explicit list of paths.
pub fn enumeration_weight(paths: &[Path], wt: &WeightTriple) -> Polynomial {
    paths
        .iter()
        .fold(Polynomial::zero(), |acc, p| &acc + &wt.path_weight(p))
}

fn enumerate_into(
    m: usize,
    n: usize,
    x: usize,
    y: usize,
    below_diagonal: bool,
    prefix: &mut Path,
    out: &mut Vec<Path>,
) {
    if (x, y) == (m, n) {
        out.push(prefix.clone());
        return;
    }
    for step in Step::ALL {
        let (dx, dy) = step.displacement();
        let (nx, ny) = (x + dx, y + dy);
        if nx > m || ny > n || (below_diagonal && ny > nx) {
            continue;
        }
        prefix.push(step);
        enumerate_into(m, n, nx, ny, below_diagonal, prefix, out);
        prefix.pop();
    }
}

/// Every Delannoy path from (0,0) to (m,n), each exactly once.
pub fn delannoy_enumerate(m: usize, n: usize, caps: &EnumerationCaps) -> Result<Vec<Path>> {
    caps.check_steps(m + n)?;
    let mut out = Vec::new();
    enumerate_into(m, n, 0, 0, false, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Every Schröder path from (0,0) to (n,n): Delannoy paths never rising
/// above the diagonal `y = x`.
pub fn schroder_enumerate(n: usize, caps: &EnumerationCaps) -> Result<Vec<Path>> {
    caps.check_steps(2 * n)?;
    let mut out = Vec::new();
    enumerate_into(n, n, 0, 0, true, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Total path weights to every lattice point of an `(m+1) x (n+1)`
/// rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWeightTable {
    m: usize,
    n: usize,
    entries: Vec<Polynomial>,
}

impl PathWeightTable {
    pub fn dimensions(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Weight at `(i, j)`; zero outside the table (and outside the
    /// quadrant).
    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        if i > self.m || j > self.n {
            return Polynomial::zero();
        }
        self.entries[i * (self.n + 1) + j].clone()
    }

    fn at(&self, i: Option<usize>, j: Option<usize>) -> Option<&Polynomial> {
        let (i, j) = (i?, j?);
        Some(&self.entries[i * (self.n + 1) + j])
    }

    fn build(m: usize, n: usize, wt: &WeightTriple, below_diagonal: bool) -> Self {
        let mut table = Self {
            m,
            n,
            entries: Vec::with_capacity((m + 1) * (n + 1)),
        };
        for i in 0..=m {
            for j in 0..=n {
                let value = if (i, j) == (0, 0) {
                    Polynomial::one()
                } else if below_diagonal && j > i {
                    Polynomial::zero()
                } else {
                    let mut acc = Polynomial::zero();
                    let neighbours = [
                        (table.at(i.checked_sub(1), Some(j)), &wt.u),
                        (table.at(Some(i), j.checked_sub(1)), &wt.v),
                        (table.at(i.checked_sub(1), j.checked_sub(1)), &wt.w),
                    ];
                    for (prev, weight) in neighbours {
                        if let Some(prev) = prev.filter(|p| !p.is_zero()) {
                            acc = &acc + &(prev * weight);
                        }
                    }
                    acc
                };
                table.entries.push(value);
            }
        }
        table
    }
}

/// Delannoy weight table filled by `d(i,j) = u d(i-1,j) + v d(i,j-1) +
/// w d(i-1,j-1)`, `d(0,0) = 1`.
pub fn delannoy_table(m: usize, n: usize, wt: &WeightTriple) -> PathWeightTable {
    PathWeightTable::build(m, n, wt, false)
}

/// The weighted Delannoy number `d(m,n; u,v,w)` by dynamic programming.
pub fn delannoy_weighted(m: usize, n: usize, wt: &WeightTriple) -> Polynomial {
    delannoy_table(m, n, wt).get(m, n)
}

/// The weighted Delannoy number from the closed binomial sum
/// `sum_k C(m+n-k, k) C(m+n-2k, n-k) u^(m-k) v^(n-k) w^k`.
pub fn delannoy_closed(m: usize, n: usize, wt: &WeightTriple) -> Polynomial {
    let mut acc = Polynomial::zero();
    for k in 0..=m.min(n) {
        let c = binom_general((m + n - k) as i64, k as u64)
            * binom_general((m + n - 2 * k) as i64, (n - k) as u64);
        let term = &(&wt.u.pow(m - k) * &wt.v.pow(n - k)) * &wt.w.pow(k);
        acc = &acc + &term.scale(&Rational::from_integer(c));
    }
    acc
}

/// Schröder weight table; cells above the diagonal hold zero.
pub fn schroder_table(n: usize, wt: &WeightTriple) -> PathWeightTable {
    PathWeightTable::build(n, n, wt, true)
}

/// The weighted Schröder number `s(n; u,v,w)` by dynamic programming
/// restricted to cells with `j <= i`.
pub fn schroder_weighted(n: usize, wt: &WeightTriple) -> Polynomial {
    schroder_table(n, wt).get(n, n)
}

/// Number of lattice paths from (0,0) to (m, n+1) whose steps `(a, b)`
/// have `a >= 0` and `b >= 1`.
///
/// Dynamic program over the landing point of the last step.
pub fn modified_delannoy(m: usize, n: usize, caps: &EnumerationCaps) -> Result<Integer> {
    caps.check_steps(n + 1)?;
    let rows = n + 2;
    let mut table = vec![Integer::zero(); (m + 1) * rows];
    table[0] = Integer::one();
    for i in 0..=m {
        for j in 1..rows {
            let mut acc = Integer::zero();
            for a in 0..=i {
                for b in 1..=j {
                    acc += &table[(i - a) * rows + (j - b)];
                }
            }
            table[i * rows + j] = acc;
        }
    }
    Ok(table[m * rows + n + 1].clone())
}

/// Brute-force list of the step sequences counted by
/// [`modified_delannoy`].
pub fn modified_delannoy_enumerate(
    m: usize,
    n: usize,
    caps: &EnumerationCaps,
) -> Result<Vec<Vec<(usize, usize)>>> {
    fn walk(
        left: (usize, usize),
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == (0, 0) {
            out.push(prefix.clone());
            return;
        }
        for a in 0..=left.0 {
            for b in 1..=left.1 {
                prefix.push((a, b));
                walk((left.0 - a, left.1 - b), prefix, out);
                prefix.pop();
            }
        }
    }
    caps.check_steps(n + 1)?;
    let mut out = Vec::new();
    walk((m, n + 1), &mut Vec::new(), &mut out);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MotzkinStep {
    Up,
    Down,
    Level,
}

/// All Motzkin paths of length `n` from height 0 back to height 0.
pub fn motzkin_enumerate(n: usize, caps: &EnumerationCaps) -> Result<Vec<Vec<MotzkinStep>>> {
    fn walk(
        remaining: usize,
        height: usize,
        prefix: &mut Vec<MotzkinStep>,
        out: &mut Vec<Vec<MotzkinStep>>,
    ) {
        if remaining == 0 {
            if height == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if height > remaining {
            return;
        }
        for step in [MotzkinStep::Up, MotzkinStep::Level, MotzkinStep::Down] {
            let next = match step {
                MotzkinStep::Up => height + 1,
                MotzkinStep::Level => height,
                MotzkinStep::Down if height == 0 => continue,
                MotzkinStep::Down => height - 1,
            };
            prefix.push(step);
            walk(remaining - 1, next, prefix, out);
            prefix.pop();
        }
    }
    caps.check_steps(n)?;
    let mut out = Vec::new();
    walk(n, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Weight of a down step that starts at height `k` in the Motzkin-path
/// model of the monic Legendre moments: `k^2 / (4k^2 - 1)`.
pub fn legendre_down_weight(k: usize) -> Rational {
    let k = k as i64;
    ratio(k * k, 4 * k * k - 1)
}

/// Total weight of all Motzkin paths of length `n` with level steps
/// weighted 0, up steps 1 and down steps from height `k` weighted
/// `k^2/(4k^2-1)`, by explicit enumeration.
pub fn motzkin_legendre_moment(n: usize, caps: &EnumerationCaps) -> Result<Rational> {
    let mut total = Rational::zero();
    for path in motzkin_enumerate(n, caps)? {
        let mut height = 0usize;
        let mut weight = Rational::one();
        for step in path {
            match step {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Level => {
                    weight = Rational::zero();
                    break;
                }
                MotzkinStep::Down => {
                    weight *= legendre_down_weight(height);
                    height -= 1;
                }
            }
        }
        total += weight;
    }
    Ok(total)
}

/// Signed count of valid pairs `(L, sigma)`, by brute force.
///
/// `L` ranges over Delannoy paths from (0,0) to `(n+beta, n)`, `sigma`
/// over bijections from `{r, a_1..a_{n+beta}, b_1..b_m}` onto
/// `{1..n+m+beta+1}`, subject to `sigma(r) < sigma(a_i)` whenever `L` has
/// an east step ending in column `i`, and `sigma(r) < sigma(b_j)` for all
/// `j`. Each pair is weighted `(-1)^(northeast steps of L)`.
pub fn valid_pair_signed_sum(
    n: usize,
    m: usize,
    beta: usize,
    caps: &EnumerationCaps,
) -> Result<Integer> {
    let size = n + m + beta + 1;
    if size > caps.pair_elements {
        return Err(Error::CapExceeded {
            requested: size,
            cap: caps.pair_elements,
        });
    }
    let columns = n + beta;
    let unbounded = EnumerationCaps {
        total_steps: usize::MAX,
        ..*caps
    };
    // Group paths by the set of columns entered by an east step.
    let mut by_mask: HashMap<u32, i64> = HashMap::new();
    for path in delannoy_enumerate(columns, n, &unbounded)? {
        let (mut x, mut mask, mut diagonals) = (0usize, 0u32, 0u32);
        for step in &path {
            match step {
                Step::East => {
                    x += 1;
                    mask |= 1 << (x - 1);
                }
                Step::Northeast => {
                    x += 1;
                    diagonals += 1;
                }
                Step::North => {}
            }
        }
        *by_mask.entry(mask).or_default() += if diagonals % 2 == 0 { 1 } else { -1 };
    }
    let groups: Vec<(u32, i64)> = by_mask.into_iter().collect();

    // Element 0 is r, 1..=columns are a_i, the rest are b_j.
    let mut sigma: Vec<usize> = (0..size).collect();
    let mut total: i64 = 0;
    let mut tally = |sigma: &[usize]| {
        let root = sigma[0];
        if sigma[columns + 1..].iter().any(|&b| b < root) {
            return;
        }
        let above: u32 = (0..columns)
            .filter(|&i| sigma[i + 1] > root)
            .fold(0, |acc, i| acc | (1 << i));
        total += groups
            .iter()
            .filter(|(mask, _)| mask & !above == 0)
            .map(|(_, c)| c)
            .sum::<i64>();
    };
    // Heap's algorithm visits every permutation once.
    let mut counters = vec![0usize; size];
    tally(&sigma);
    let mut i = 1;
    while i < size {
        if counters[i] < i {
            if i % 2 == 0 {
                sigma.swap(0, i);
            } else {
                sigma.swap(counters[i], i);
            }
            tally(&sigma);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(Integer::from(total))
}
