use serde::Serialize;

/// One of the two variable groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sector {
    X,
    Y,
}

/// A single variable, 0-indexed within its sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// Ambient ring data: variable counts and which sectors admit negative
/// exponents. The flags only constrain membership tests and basis
/// enumeration; the representation always permits negative exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingContext {
    pub m: usize,
    pub n: usize,
    pub x_laurent: bool,
    pub y_laurent: bool,
}

impl RingContext {
    /// Both sectors polynomial.
    pub fn polynomial(m: usize, n: usize) -> Self {
        RingContext {
            m,
            n,
            x_laurent: false,
            y_laurent: false,
        }
    }

    /// Laurent in x, polynomial in y.
    pub fn partial(m: usize, n: usize) -> Self {
        RingContext {
            m,
            n,
            x_laurent: true,
            y_laurent: false,
        }
    }

    /// Laurent in both sectors.
    pub fn laurent(m: usize, n: usize) -> Self {
        RingContext {
            m,
            n,
            x_laurent: true,
            y_laurent: true,
        }
    }

    pub fn sector_size(&self, sector: Sector) -> usize {
        match sector {
            Sector::X => self.m,
            Sector::Y => self.n,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Super-dimension `n - m`, the pivot index of the expansion at infinity.
    pub fn superdim(&self) -> i64 {
        self.n as i64 - self.m as i64
    }
}
