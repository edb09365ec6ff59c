use std::cmp::Ordering;
use std::fmt;

/// The monomial `x^x · y^y`.
///
/// `Ord` is graded-lexicographic with `x > y`: total degree first, then the
/// exponent of `x`. It is a well-order compatible with multiplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.x.min(other.x) == 0 && self.y.min(other.y) == 0
    }

    /// `self / divisor` when `divisor | self`.
    pub fn checked_div(self, divisor: Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| Monomial::new(self.x - divisor.x, self.y - divisor.y))
    }

    /// The swapped monomial `x^y · y^x`.
    pub fn mirror(self) -> Monomial {
        Monomial::new(self.y, self.x)
    }

    /// Weight under `(x, y) ↦ (εx, ε^a y)` with `ε` a primitive `modulus`-th root of unity.
    pub fn alpha_weight(self, modulus: u64, a: u64) -> u64 {
        let x = u128::from(self.x);
        let y = u128::from(self.y);
        ((x + u128::from(a) * y) % u128::from(modulus)) as u64
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `1`, `x`, `y^3`, `x^7*y^3`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |f: &mut fmt::Formatter<'_>, name: char, e: u32| -> fmt::Result {
            match e {
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        };
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (x, 0) => var(f, 'x', x),
            (0, y) => var(f, 'y', y),
            (x, y) => {
                var(f, 'x', x)?;
                write!(f, "*")?;
                var(f, 'y', y)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_prefers_degree_then_x() {
        assert!(Monomial::new(0, 3) > Monomial::new(2, 0));
        assert!(Monomial::new(2, 1) > Monomial::new(1, 2));
        assert!(Monomial::new(1, 0) > Monomial::new(0, 1));
    }

    #[test]
    fn weights() {
        assert_eq!(Monomial::new(5, 1).alpha_weight(12, 7), 0);
        assert_eq!(Monomial::ONE.alpha_weight(12, 7), 0);
        assert_eq!(Monomial::new(6, 6).alpha_weight(42, 13), 0);
    }
}
