//! Hirzebruch–Jung continued fractions and the Newton-polygon boundary of the
//! cyclic lattice `Z² + (1/k)(1, a)·Z`.
//!
//! Boundary points are stored scaled by `k`, so the lattice becomes
//! `{ (x, y) ∈ Z² : y ≡ a·x (mod k) }`.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("need 0 < a < k with gcd(a, k) = 1, got k = {modulus}, a = {a}")]
    Domain { modulus: u64, a: u64 },
}

fn check_domain(modulus: u64, a: u64) -> Result<(), LatticeError> {
    if a == 0 || a >= modulus || modulus.gcd(&a) != 1 {
        return Err(LatticeError::Domain { modulus, a });
    }
    Ok(())
}

/// `numerator / denominator = [b_1, …, b_r] = b_1 − 1/(b_2 − 1/(… − 1/b_r))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    numerator: u64,
    denominator: u64,
    entries: Vec<u64>,
}

impl ContinuedFraction {
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_palindromic(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    /// 1-based middle index `m = (r + 1) / 2` for odd length `r`.
    pub fn middle_index(&self) -> Option<usize> {
        (self.entries.len() % 2 == 1).then(|| self.entries.len().div_ceil(2))
    }

    /// `b_m` for odd length.
    pub fn middle_entry(&self) -> Option<u64> {
        self.middle_index().map(|m| self.entries[m - 1])
    }

    /// Evaluates the expansion back to a reduced fraction `(p, q)`.
    pub fn evaluate(&self) -> (u128, u128) {
        let mut iter = self.entries.iter().rev();
        let Some(&last) = iter.next() else {
            return (0, 1);
        };
        let (mut p, mut q) = (u128::from(last), 1u128);
        for &b in iter {
            // b − q/p = (b·p − q)/p
            let next = u128::from(b) * p - q;
            q = p;
            p = next;
        }
        let g = p.gcd(&q);
        (p / g, q / g)
    }
}

/// Ceiling-division expansion: `b = ⌈k/a⌉`, `(k, a) ← (a, b·a − k)`.
pub fn hj_expand(k: u64, a: u64) -> Result<ContinuedFraction, LatticeError> {
    check_domain(k, a)?;
    let mut entries = Vec::new();
    let (mut num, mut den) = (k, a);
    while den > 0 {
        let b = num.div_ceil(den);
        entries.push(b);
        (num, den) = (den, b * den - num);
    }
    Ok(ContinuedFraction { numerator: k, denominator: a, entries })
}

pub fn is_palindromic(cf: &ContinuedFraction) -> bool {
    cf.is_palindromic()
}

/// A boundary lattice point, scaled by the lattice modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonPoint {
    pub x: u64,
    pub y: u64,
}

impl NewtonPoint {
    pub const fn new(x: u64, y: u64) -> Self {
        Self { x, y }
    }

    pub fn swapped(self) -> Self {
        Self::new(self.y, self.x)
    }

    pub fn is_diagonal(self) -> bool {
        self.x == self.y
    }
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The compact boundary of the Newton polygon from `(0, k)` to `(k, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySequence {
    modulus: u64,
    points: Vec<NewtonPoint>,
    middle: Option<usize>,
}

impl BoundarySequence {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn points(&self) -> &[NewtonPoint] {
        &self.points
    }

    /// Index of the diagonal point `(q, q)`, if the boundary passes through one.
    pub fn middle_index(&self) -> Option<usize> {
        self.middle
    }

    /// The prefix `e_0 … e_m` ending at the diagonal point.
    pub fn half(&self) -> Option<&[NewtonPoint]> {
        self.middle.map(|m| &self.points[..=m])
    }

    /// Consecutive pairs `(e_i, e_{i+1})`.
    pub fn transitions(&self) -> impl Iterator<Item = (NewtonPoint, NewtonPoint)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn is_swap_symmetric(&self) -> bool {
        self.points.iter().zip(self.points.iter().rev()).all(|(p, q)| *p == q.swapped())
    }

    /// `e_{i−1} + e_{i+1} = b_i·e_i` for every interior point.
    pub fn satisfies_recurrence(&self, cf: &ContinuedFraction) -> bool {
        self.points.len() == cf.len() + 2
            && self.points.windows(3).zip(cf.entries()).all(|(w, &b)| w[0].x + w[2].x == b * w[1].x && w[0].y + w[2].y == b * w[1].y)
    }
}

/// `(o→p) × (o→q)`; negative means a clockwise turn.
fn cross(o: NewtonPoint, p: NewtonPoint, q: NewtonPoint) -> i128 {
    let (ox, oy) = (i128::from(o.x), i128::from(o.y));
    (i128::from(p.x) - ox) * (i128::from(q.y) - oy) - (i128::from(p.y) - oy) * (i128::from(q.x) - ox)
}

/// Boundary points by an exact lower convex hull of the lattice points in
/// `[0, k]²`, collinear boundary points kept.
pub fn newton_boundary(modulus: u64, a: u64) -> Result<BoundarySequence, LatticeError> {
    check_domain(modulus, a)?;
    // For each column only the lowest lattice point can lie on the boundary.
    let lowest = (0..=modulus).map(|x| {
        let y = match x {
            0 => modulus,
            _ => ((u128::from(a) * u128::from(x)) % u128::from(modulus)) as u64,
        };
        NewtonPoint::new(x, y)
    });
    let mut hull: Vec<NewtonPoint> = Vec::new();
    for p in lowest {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) < 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let middle = hull.iter().position(|p| p.is_diagonal());
    Ok(BoundarySequence { modulus, points: hull, middle })
}
