use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::context::{Sector, Var};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Sparse Laurent polynomial over arbitrary-precision integers; the value
/// type of the whole crate. Stored coefficients are never zero, so
/// structural equality is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// One term in the wire representation of a polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        LaurentPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize) -> Self {
        LaurentPoly::constant(m, n, BigInt::one())
    }

    pub fn constant(m: usize, n: usize, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero(m, n);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(m, n), c);
        }
        p
    }

    pub fn var(m: usize, n: usize, v: Var) -> Self {
        LaurentPoly::from_monomial(Monomial::var(m, n, v), BigInt::one())
    }

    pub fn from_monomial(mono: Monomial, coeff: impl Into<BigInt>) -> Self {
        let (m, n) = mono.dims();
        let mut p = LaurentPoly::zero(m, n);
        let coeff = coeff.into();
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(mono, c)| mono.is_unit() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// A single invertible monomial `+-1 * x^a y^b`?
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn check_same_context(&self, other: &LaurentPoly) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::ContextMismatch {
                left: self.dims(),
                right: other.dims(),
            });
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_context(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_context(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_context(other)?;
        let mut out = LaurentPoly::zero(self.m, self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.m, self.n);
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff *= c;
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial, coeff: &BigInt) -> LaurentPoly {
        if coeff.is_zero() {
            return LaurentPoly::zero(self.m, self.n);
        }
        let mut out = LaurentPoly::zero(self.m, self.n);
        for (ma, ca) in &self.terms {
            out.terms.insert(ma.mul(mono), ca * coeff);
        }
        out
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.m, self.n);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same context");
        }
        out
    }

    /// Negates every exponent vector; an involutive ring homomorphism.
    pub fn star(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.terms.insert(mono.inverse(), c.clone());
        }
        out
    }

    pub fn total_degree_of_leading(&self) -> Option<i64> {
        self.leading().map(|(mono, _)| mono.total_degree())
    }

    /// `Some(d)` when nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|mono| mono.total_degree());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Splits into homogeneous components keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (mono, c) in &self.terms {
            out.entry(mono.total_degree())
                .or_insert_with(|| LaurentPoly::zero(self.m, self.n))
                .add_term(mono.clone(), c.clone());
        }
        out
    }

    /// Lowest exponent of each variable over all terms (zero vector for 0).
    fn min_exponents(&self) -> Monomial {
        let mut mins = Monomial::unit(self.m, self.n);
        let mut first = true;
        for mono in self.terms.keys() {
            if first {
                mins = mono.clone();
                first = false;
            } else {
                for (a, b) in mins.x.iter_mut().zip(&mono.x) {
                    *a = (*a).min(*b);
                }
                for (a, b) in mins.y.iter_mut().zip(&mono.y) {
                    *a = (*a).min(*b);
                }
            }
        }
        mins
    }

    /// Exact division: returns `q` with `q * divisor == self`, or
    /// `NotDivisible`. Both operands are first shifted by monomial units
    /// into the polynomial range, where greedy leading-term reduction
    /// under the graded-lex order terminates.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_context(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.m, self.n));
        }

        let shift_a = self.min_exponents().inverse();
        let shift_b = divisor.min_exponents().inverse();
        let a = self.mul_monomial(&shift_a, &BigInt::one());
        let b = divisor.mul_monomial(&shift_b, &BigInt::one());

        let (lt_mono, lt_coeff) = {
            let (mono, c) = b.leading().expect("nonzero divisor");
            (mono.clone(), c.clone())
        };

        let mut remainder = a;
        let mut quotient = LaurentPoly::zero(self.m, self.n);
        while let Some((r_mono, r_coeff)) = remainder.leading() {
            if !r_mono.divisible_in_poly_range(&lt_mono) {
                return Err(Error::NotDivisible);
            }
            let (q_coeff, rem) = num_integer::div_rem(r_coeff.clone(), lt_coeff.clone());
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            let q_mono = r_mono.div(&lt_mono);
            remainder = remainder.checked_sub(&b.mul_monomial(&q_mono, &q_coeff))?;
            quotient.add_term(q_mono, q_coeff);
        }

        // Undo the normalisation: self/divisor = (a/b) * shift_b / shift_a.
        let back = shift_b.div(&shift_a);
        Ok(quotient.mul_monomial(&back, &BigInt::one()))
    }

    /// Exact division by the binomial `v_a - v_b` of one sector, one pass
    /// of synthetic division per call. This is the hot path when dividing
    /// alternants by Vandermonde products.
    pub fn div_binomial(&self, sector: Sector, a: usize, b: usize) -> Result<LaurentPoly> {
        assert_ne!(a, b);
        if self.is_zero() {
            return Ok(self.clone());
        }
        let va = match sector {
            Sector::X => Var::X(a),
            Sector::Y => Var::Y(a),
        };
        let vb = match sector {
            Sector::X => Var::X(b),
            Sector::Y => Var::Y(b),
        };
        let min_a = self
            .terms
            .keys()
            .map(|mono| mono.exponent(va))
            .min()
            .unwrap();

        // Order terms by exponent of v_a first so the leading term of the
        // binomial is v_a itself.
        let mut remainder: BTreeMap<(i64, Monomial), BigInt> = self
            .terms
            .iter()
            .map(|(mono, c)| ((mono.exponent(va), mono.clone()), c.clone()))
            .collect();
        let mut quotient = LaurentPoly::zero(self.m, self.n);
        let unit_a = Monomial::var(self.m, self.n, va);
        let unit_b = Monomial::var(self.m, self.n, vb);

        while let Some(((e_a, mono), coeff)) = remainder.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            // A quotient term below the dividend's own floor in v_a can
            // only arise from a non-divisible input.
            if e_a <= min_a {
                return Err(Error::NotDivisible);
            }
            let q_mono = mono.div(&unit_a);
            // subtract coeff * q_mono * (v_a - v_b): the v_a part cancels
            // the extracted term, the v_b part flows back into the heap.
            let back_mono = q_mono.mul(&unit_b);
            let back_key = (back_mono.exponent(va), back_mono);
            match remainder.entry(back_key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &coeff;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
            quotient.add_term(q_mono, coeff);
        }
        Ok(quotient)
    }

    /// Invariance under every adjacent transposition in each sector.
    pub fn is_symmetric(&self) -> bool {
        for s in 0..self.m.saturating_sub(1) {
            if !self.invariant_under_swap(Sector::X, s, s + 1) {
                return false;
            }
        }
        for s in 0..self.n.saturating_sub(1) {
            if !self.invariant_under_swap(Sector::Y, s, s + 1) {
                return false;
            }
        }
        true
    }

    fn invariant_under_swap(&self, sector: Sector, a: usize, b: usize) -> bool {
        self.terms
            .iter()
            .all(|(mono, c)| self.coefficient(&mono.swapped(sector, a, b)) == *c)
    }

    pub fn swap_vars(&self, sector: Sector, a: usize, b: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.terms.insert(mono.swapped(sector, a, b), c.clone());
        }
        out
    }

    /// Ring-homomorphic substitution of `image` for one variable. When the
    /// variable occurs with negative exponents the image must be a unit
    /// monomial so its inverse powers exist.
    pub fn substitute(&self, target: Var, image: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_context(image)?;
        let has_negative = self.terms.keys().any(|mono| mono.exponent(target) < 0);
        if has_negative && !image.is_unit_monomial() {
            return Err(Error::NonInvertibleSubstitution);
        }

        let mut power_cache: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        power_cache.insert(0, LaurentPoly::one(self.m, self.n));

        let image_inverse = if has_negative {
            let (mono, c) = image.leading().expect("unit monomial");
            Some(LaurentPoly::from_monomial(mono.inverse(), c.clone()))
        } else {
            None
        };

        let mut out = LaurentPoly::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            let e = mono.exponent(target);
            power_cache.entry(e).or_insert_with(|| {
                let base = if e >= 0 {
                    image.clone()
                } else {
                    image_inverse.clone().expect("inverse present")
                };
                base.pow(e.unsigned_abs() as u32)
            });
            let mut rest = mono.clone();
            match target {
                Var::X(i) => rest.x[i] = 0,
                Var::Y(j) => rest.y[j] = 0,
            }
            let contribution = power_cache[&e].mul_monomial(&rest, c);
            out = out.checked_add(&contribution)?;
        }
        Ok(out)
    }

    /// Embeds into a context with at least as many variables in each
    /// sector, shifting sector indices by the given offsets.
    pub fn relabel(&self, m: usize, n: usize, x_shift: usize, y_shift: usize) -> LaurentPoly {
        assert!(self.m + x_shift <= m && self.n + y_shift <= n);
        let mut out = LaurentPoly::zero(m, n);
        for (mono, c) in &self.terms {
            out.terms
                .insert(mono.relabel(m, n, x_shift, y_shift), c.clone());
        }
        out
    }

    /// Negative exponents present in the given sector?
    pub fn has_negative_exponents(&self, sector: Sector) -> bool {
        self.terms.keys().any(|mono| match sector {
            Sector::X => mono.x.iter().any(|&e| e < 0),
            Sector::Y => mono.y.iter().any(|&e| e < 0),
        })
    }

    /// Terms in canonical (descending) order for printing and JSON output.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn json_terms(&self) -> Vec<TermJson> {
        self.canonical_terms()
            .map(|(mono, c)| TermJson {
                coeff: c.to_string(),
                x: mono.x.clone(),
                y: mono.y.clone(),
            })
            .collect()
    }

    /// Parses the canonical text grammar, e.g. `x1^2 + 2*x1*y2 - 3`.
    pub fn parse(input: &str, m: usize, n: usize) -> Result<LaurentPoly> {
        parse::poly(input, m, n)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.canonical_terms().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in mono.x.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if e != 0 {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            for (j, &e) in mono.y.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("y{}", j + 1));
                } else if e != 0 {
                    factors.push(format!("y{}^{}", j + 1, e));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl std::ops::AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        assert_eq!(self.dims(), rhs.dims(), "context mismatch in +=");
        for (mono, c) in rhs.terms {
            self.add_term(mono, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("context mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

mod parse {
    use super::*;

    struct Scanner<'a> {
        chars: std::iter::Peekable<std::str::Chars<'a>>,
    }

    impl<'a> Scanner<'a> {
        fn new(s: &'a str) -> Self {
            Scanner {
                chars: s.chars().peekable(),
            }
        }

        fn skip_ws(&mut self) {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.chars.next();
            }
        }

        fn peek(&mut self) -> Option<char> {
            self.skip_ws();
            self.chars.peek().copied()
        }

        fn bump(&mut self) -> Option<char> {
            self.skip_ws();
            self.chars.next()
        }

        fn integer(&mut self) -> Result<BigInt> {
            self.skip_ws();
            let mut digits = String::new();
            if matches!(self.chars.peek(), Some('-' | '+')) {
                digits.push(self.chars.next().unwrap());
            }
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(self.chars.next().unwrap());
            }
            digits
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("expected integer, got {:?}", digits)))
        }

        fn index(&mut self) -> Result<usize> {
            self.skip_ws();
            let mut digits = String::new();
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(self.chars.next().unwrap());
            }
            digits
                .parse::<usize>()
                .map_err(|_| Error::Parse("expected variable index".into()))
        }
    }

    pub fn poly(input: &str, m: usize, n: usize) -> Result<LaurentPoly> {
        let mut scanner = Scanner::new(input);
        let mut out = LaurentPoly::zero(m, n);
        if scanner.peek().is_none() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut sign = BigInt::one();
        if let Some(c) = scanner.peek() {
            if c == '-' {
                scanner.bump();
                sign = -sign;
            } else if c == '+' {
                scanner.bump();
            }
        }
        loop {
            let (mono, coeff) = term(&mut scanner, m, n)?;
            out.add_term(mono, coeff * &sign);
            match scanner.peek() {
                None => break,
                Some('+') => {
                    scanner.bump();
                    sign = BigInt::one();
                }
                Some('-') => {
                    scanner.bump();
                    sign = -BigInt::one();
                }
                Some(c) => return Err(Error::Parse(format!("unexpected character {:?}", c))),
            }
        }
        Ok(out)
    }

    fn term(scanner: &mut Scanner, m: usize, n: usize) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::unit(m, n);
        loop {
            match scanner.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= scanner.integer()?;
                }
                Some('x') | Some('y') => {
                    let sector = scanner.bump().unwrap();
                    let idx = scanner.index()?;
                    let limit = if sector == 'x' { m } else { n };
                    if idx == 0 || idx > limit {
                        return Err(Error::Parse(format!(
                            "variable {}{} outside context ({},{})",
                            sector, idx, m, n
                        )));
                    }
                    let exp = if scanner.peek() == Some('^') {
                        scanner.bump();
                        let e = scanner.integer()?;
                        i64::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?
                    } else {
                        1
                    };
                    if sector == 'x' {
                        mono.x[idx - 1] += exp;
                    } else {
                        mono.y[idx - 1] += exp;
                    }
                }
                _ => return Err(Error::Parse("expected term".into())),
            }
            if scanner.peek() == Some('*') {
                scanner.bump();
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }
}
