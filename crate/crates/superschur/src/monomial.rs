use std::cmp::Ordering;

use crate::context::{Sector, Var};

/// Exponent vectors for both sectors. Exponents may be negative; the
/// ambient context decides whether that is legal for membership purposes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl Monomial {
    pub fn unit(m: usize, n: usize) -> Self {
        Monomial {
            x: vec![0; m],
            y: vec![0; n],
        }
    }

    pub fn var(m: usize, n: usize, v: Var) -> Self {
        let mut mono = Monomial::unit(m, n);
        match v {
            Var::X(i) => mono.x[i] = 1,
            Var::Y(j) => mono.y[j] = 1,
        }
        mono
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x.len(), self.y.len())
    }

    pub fn exponent(&self, v: Var) -> i64 {
        match v {
            Var::X(i) => self.x[i],
            Var::Y(j) => self.y[j],
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.x.iter().sum::<i64>() + self.y.iter().sum::<i64>()
    }

    pub fn is_unit(&self) -> bool {
        self.x.iter().all(|&e| e == 0) && self.y.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise difference; the quotient monomial always exists in
    /// the Laurent setting.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a - b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            x: self.x.iter().map(|&e| -e).collect(),
            y: self.y.iter().map(|&e| -e).collect(),
        }
    }

    /// True when every exponent of `other` is covered, i.e. `self / other`
    /// stays in the polynomial (nonnegative) range.
    pub fn divisible_in_poly_range(&self, other: &Monomial) -> bool {
        self.x.iter().zip(&other.x).all(|(a, b)| a >= b)
            && self.y.iter().zip(&other.y).all(|(a, b)| a >= b)
    }

    /// Relabels the variables of `self` into a possibly larger context,
    /// shifting sector indices by the given offsets.
    pub fn relabel(&self, m: usize, n: usize, x_shift: usize, y_shift: usize) -> Monomial {
        let mut mono = Monomial::unit(m, n);
        for (i, &e) in self.x.iter().enumerate() {
            mono.x[i + x_shift] = e;
        }
        for (j, &e) in self.y.iter().enumerate() {
            mono.y[j + y_shift] = e;
        }
        mono
    }

    /// Applies a permutation to one sector: entry `i` of the result is the
    /// exponent previously at `perm[i]`.
    pub fn permuted(&self, sector: Sector, perm: &[usize]) -> Monomial {
        let mut mono = self.clone();
        match sector {
            Sector::X => {
                for (i, &p) in perm.iter().enumerate() {
                    mono.x[i] = self.x[p];
                }
            }
            Sector::Y => {
                for (j, &p) in perm.iter().enumerate() {
                    mono.y[j] = self.y[p];
                }
            }
        }
        mono
    }

    pub fn swapped(&self, sector: Sector, a: usize, b: usize) -> Monomial {
        let mut mono = self.clone();
        match sector {
            Sector::X => mono.x.swap(a, b),
            Sector::Y => mono.y.swap(a, b),
        }
        mono
    }
}

/// Graded lexicographic order: total degree first, then the x-sector
/// exponents, then the y-sector. Canonical printing walks it downwards.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
