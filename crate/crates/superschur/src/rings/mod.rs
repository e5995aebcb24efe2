//! The four rings as verifiable structures: supersymmetry membership,
//! windowed basis index sets and basis elements, expansion in a basis by
//! exact linear algebra, and semantic verification of the presentations
//! and tensor-decomposition statements.

pub mod linalg;
mod reports;

pub use reports::{
    check_tensor_iso, delta_with_inverse, verify_euler_basis, verify_kac_basis,
    verify_presentation, verify_vanishing_relations, PresentationKind, Report,
};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::context::{RingContext, Sector, Var};
use crate::dets;
use crate::error::{Error, Result};
use crate::genfun;
use crate::parallel;
use crate::poly::LaurentPoly;
use crate::series::{MemoSeq, SeqProvider};
use linalg::Rat;

/// Bounded probe region: indices range over `[-W, W]`, elements are kept
/// when their total degree lies in `[-D, D]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub index_bound: i64,
    pub degree_bound: i64,
}

impl Window {
    pub fn new(index_bound: i64, degree_bound: i64) -> Self {
        Window {
            index_bound,
            degree_bound,
        }
    }
}

impl Default for Window {
    fn default() -> Self {
        Window {
            index_bound: 4,
            degree_bound: 6,
        }
    }
}

/// Which basis family indexes the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BasisKind {
    /// `R_I(H) h_1^{j_1} ... h_q^{j_q}`, all `j` nonnegative.
    XPlus,
    /// `R_I(H) h_1^{j_1} ... h_{q-1}^{j_{q-1}} D^{j_q}` with the unit
    /// monomial `D = (y_1...y_n)/(x_1...x_m)`; the last power may be any
    /// integer.
    XPm,
}

/// Index pair of a basis element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasisIndex {
    pub i: Vec<i64>,
    pub j: Vec<i64>,
}

impl BasisIndex {
    pub fn new(i: Vec<i64>, j: Vec<i64>) -> Self {
        BasisIndex { i, j }
    }
}

/// Supersymmetry test: the polynomial must respect the context's sector
/// flags, be symmetric in each sector, and for every variable pair the
/// image of `x_i d/dx_i f + y_j d/dy_j f` under `x_i -> y_j` must vanish
/// (substitution by the quotient map decides membership in the ideal
/// `(x_i - y_j)` exactly).
pub fn is_supersymmetric(f: &LaurentPoly, ctx: &RingContext) -> Result<bool> {
    if f.dims() != ctx.dims() {
        return Err(Error::ContextMismatch {
            left: f.dims(),
            right: ctx.dims(),
        });
    }
    if !ctx.x_laurent && f.has_negative_exponents(Sector::X) {
        return Err(Error::SectorViolation(
            "negative x-exponents in a polynomial x-sector".into(),
        ));
    }
    if !ctx.y_laurent && f.has_negative_exponents(Sector::Y) {
        return Err(Error::SectorViolation(
            "negative y-exponents in a polynomial y-sector".into(),
        ));
    }
    if !f.is_symmetric() {
        return Ok(false);
    }
    for i in 0..ctx.m {
        for j in 0..ctx.n {
            let weighted = euler_weighted(f, i, j);
            let image =
                weighted.substitute(Var::X(i), &LaurentPoly::var(ctx.m, ctx.n, Var::Y(j)))?;
            if !image.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x_i df/dx_i + y_j df/dy_j`, term by term.
fn euler_weighted(f: &LaurentPoly, i: usize, j: usize) -> LaurentPoly {
    let (m, n) = f.dims();
    let mut out = LaurentPoly::zero(m, n);
    for (mono, c) in f.terms() {
        let weight = mono.x[i] + mono.y[j];
        out.add_term(mono.clone(), c * BigInt::from(weight));
    }
    out
}

/// Total degree of the basis element with the given index.
pub fn basis_degree(idx: &BasisIndex, kind: BasisKind, ctx: &RingContext) -> i64 {
    let p = idx.i.len() as i64;
    let mut degree: i64 = idx.i.iter().sum::<i64>() + p * (p - 1) / 2;
    match kind {
        BasisKind::XPlus => {
            for (t, &e) in idx.j.iter().enumerate() {
                degree += (t as i64 + 1) * e;
            }
        }
        BasisKind::XPm => {
            let q = idx.j.len();
            for (t, &e) in idx.j.iter().enumerate() {
                if t + 1 == q {
                    degree += ctx.superdim() * e;
                } else {
                    degree += (t as i64 + 1) * e;
                }
            }
        }
    }
    degree
}

fn validate_index(idx: &BasisIndex, kind: BasisKind, ctx: &RingContext) -> Result<()> {
    let p = idx.i.len();
    let q = idx.j.len();
    if !idx.i.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::InvalidIndex(format!(
            "{:?} is not strictly decreasing",
            idx.i
        )));
    }
    if p > ctx.m || q > ctx.n {
        return Err(Error::InvalidIndex(format!(
            "index lengths ({},{}) exceed context ({},{})",
            p, q, ctx.m, ctx.n
        )));
    }
    if p as i64 - q as i64 != ctx.m as i64 - ctx.n as i64 {
        return Err(Error::InvalidIndex(format!(
            "length difference {} - {} must equal m - n = {}",
            p,
            q,
            ctx.m as i64 - ctx.n as i64
        )));
    }
    let nonneg_prefix = match kind {
        BasisKind::XPlus => q,
        BasisKind::XPm => q.saturating_sub(1),
    };
    if idx.j.iter().take(nonneg_prefix).any(|&e| e < 0) {
        return Err(Error::InvalidIndex(format!(
            "exponents {:?} must be nonnegative",
            idx.j
        )));
    }
    Ok(())
}

/// All index pairs of the kind's set with entries inside the window and
/// element degree within the degree bound.
pub fn enumerate_basis(kind: BasisKind, ctx: &RingContext, window: &Window) -> Vec<BasisIndex> {
    let w = window.index_bound;
    let mut out = Vec::new();
    for p in 0..=ctx.m {
        let q_signed = p as i64 - (ctx.m as i64 - ctx.n as i64);
        if q_signed < 0 || q_signed > ctx.n as i64 {
            continue;
        }
        let q = q_signed as usize;
        for i_seq in strictly_decreasing_tuples(p, -w, w) {
            for j_seq in exponent_tuples(kind, q, w) {
                let idx = BasisIndex::new(i_seq.clone(), j_seq);
                if basis_degree(&idx, kind, ctx).abs() <= window.degree_bound {
                    out.push(idx);
                }
            }
        }
    }
    out
}

/// Strictly decreasing `len`-tuples with entries in `lo..=hi`.
pub(crate) fn strictly_decreasing_tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, lo: i64, hi: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let remaining = (len - current.len()) as i64;
        let upper = current.last().map_or(hi, |&last| last - 1);
        // leave room for the remaining strictly smaller entries
        for v in (lo + remaining - 1..=upper).rev() {
            current.push(v);
            rec(len, lo, hi, current, out);
            current.pop();
        }
    }
    rec(len, lo, hi, &mut current, &mut out);
    out
}

/// Non-increasing `len`-tuples (repetitions allowed) with entries in
/// `lo..=hi`.
pub(crate) fn non_increasing_tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, lo: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let upper = *current.last().expect("seeded");
        for v in (lo..=upper).rev() {
            current.push(v);
            rec(len, lo, current, out);
            current.pop();
        }
    }
    if len == 0 {
        return vec![Vec::new()];
    }
    for first in (lo..=hi).rev() {
        current.push(first);
        rec(len, lo, &mut current, &mut out);
        current.pop();
    }
    out
}

fn exponent_tuples(kind: BasisKind, q: usize, w: i64) -> Vec<Vec<i64>> {
    if q == 0 {
        return vec![Vec::new()];
    }
    let mut out = vec![Vec::new()];
    for slot in 0..q {
        let lo = match kind {
            BasisKind::XPlus => 0,
            BasisKind::XPm => {
                if slot + 1 == q {
                    -w
                } else {
                    0
                }
            }
        };
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=w {
                let mut t = prefix.clone();
                t.push(v);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// `(lambda, mu)` pairs of the Kac index set with entries inside the
/// window and weight within the degree bound.
pub fn enumerate_kac_indices(ctx: &RingContext, window: &Window) -> Vec<(Vec<i64>, Vec<i64>)> {
    let w = window.index_bound;
    let mut out = Vec::new();
    for p in 0..=ctx.m {
        let q_signed = p as i64 - (ctx.m as i64 - ctx.n as i64);
        if q_signed < 0 || q_signed > ctx.n as i64 {
            continue;
        }
        let q = q_signed as usize;
        for lambda in non_increasing_tuples(p, -w, w) {
            for mu in non_increasing_tuples(q, -w, w) {
                let weight: i64 = lambda.iter().sum::<i64>() + mu.iter().sum::<i64>();
                if weight.abs() <= window.degree_bound {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}

pub(crate) struct BasisBuilder {
    ctx: RingContext,
    kind: BasisKind,
    big_h: MemoSeq,
    complete_h: MemoSeq,
}

impl BasisBuilder {
    pub(crate) fn new(kind: BasisKind, ctx: &RingContext) -> Self {
        BasisBuilder {
            ctx: *ctx,
            kind,
            big_h: genfun::big_h_seq(ctx),
            complete_h: genfun::complete_h_seq(ctx),
        }
    }

    pub(crate) fn element(&self, idx: &BasisIndex) -> Result<LaurentPoly> {
        validate_index(idx, self.kind, &self.ctx)?;
        let (m, n) = self.ctx.dims();
        let mut out = dets::r_det(&idx.i, &self.big_h)?;
        let q = idx.j.len();
        for (t, &e) in idx.j.iter().enumerate() {
            let is_delta_slot = matches!(self.kind, BasisKind::XPm) && t + 1 == q;
            if is_delta_slot {
                let mut mono = crate::monomial::Monomial::unit(m, n);
                for x in mono.x.iter_mut() {
                    *x = -e;
                }
                for y in mono.y.iter_mut() {
                    *y = e;
                }
                out = out.mul_monomial(&mono, &BigInt::one());
            } else if e > 0 {
                let h_t = self.complete_h.at(t as i64 + 1);
                out = &out * &h_t.pow(e as u32);
            } else if e < 0 {
                return Err(Error::InvalidIndex(format!(
                    "negative exponent {} in a nonnegative slot",
                    e
                )));
            }
        }
        Ok(out)
    }
}

/// The basis element for an index pair.
pub fn basis_element(idx: &BasisIndex, kind: BasisKind, ctx: &RingContext) -> Result<LaurentPoly> {
    BasisBuilder::new(kind, ctx).element(idx)
}

/// Enumerates the windowed index set and builds every element, fanning
/// out across threads when the `parallel` feature is on.
pub fn basis_family(
    kind: BasisKind,
    ctx: &RingContext,
    window: &Window,
) -> Result<Vec<(BasisIndex, LaurentPoly)>> {
    let indices = enumerate_basis(kind, ctx, window);
    let builder = BasisBuilder::new(kind, ctx);
    let built = parallel::map_collect(indices, |idx| {
        let element = builder.element(&idx);
        (idx, element)
    });
    built
        .into_iter()
        .map(|(idx, element)| element.map(|e| (idx, e)))
        .collect()
}

/// Rank of a family of polynomials viewed as vectors over their monomial
/// coordinates, by sparse integer row reduction.
pub fn family_rank(polys: &[&LaurentPoly]) -> usize {
    use std::collections::BTreeMap;
    let mut monomials: BTreeMap<&crate::monomial::Monomial, usize> = BTreeMap::new();
    for poly in polys {
        for (mono, _) in poly.terms() {
            let next = monomials.len();
            monomials.entry(mono).or_insert(next);
        }
    }
    let rows: Vec<BTreeMap<usize, BigInt>> = polys
        .iter()
        .map(|poly| {
            poly.terms()
                .map(|(mono, c)| (monomials[mono], c.clone()))
                .collect()
        })
        .collect();
    linalg::sparse_rank(rows)
}

/// Exact coefficients with `target = sum c_i * polys[i]`, or `None` when
/// the target is outside the span.
pub(crate) fn solve_in_family(polys: &[&LaurentPoly], target: &LaurentPoly) -> Option<Vec<Rat>> {
    use std::collections::BTreeMap;
    let mut monomials: BTreeMap<&crate::monomial::Monomial, usize> = BTreeMap::new();
    for poly in polys.iter().copied().chain(std::iter::once(target)) {
        for (mono, _) in poly.terms() {
            let next = monomials.len();
            monomials.entry(mono).or_insert(next);
        }
    }
    let to_row = |poly: &LaurentPoly| -> BTreeMap<usize, BigInt> {
        poly.terms()
            .map(|(mono, c)| (monomials[mono], c.clone()))
            .collect()
    };
    let rows: Vec<BTreeMap<usize, BigInt>> = polys.iter().map(|p| to_row(p)).collect();
    linalg::sparse_solve(rows, to_row(target))
}

/// Expands a polynomial in the windowed basis: the result is a list of
/// `(index, rational coefficient)` pairs whose combination reproduces the
/// input exactly. Inhomogeneous input is split into homogeneous
/// components first. `NotInSpan` signals a window too small or an element
/// outside the ring.
pub fn expand_in_basis(
    f: &LaurentPoly,
    kind: BasisKind,
    ctx: &RingContext,
    window: &Window,
) -> Result<Vec<(BasisIndex, Rat)>> {
    if f.dims() != ctx.dims() {
        return Err(Error::ContextMismatch {
            left: f.dims(),
            right: ctx.dims(),
        });
    }
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let components = f.homogeneous_components();
    // only the degree slices present in the input are built
    let indices: Vec<BasisIndex> = enumerate_basis(kind, ctx, window)
        .into_iter()
        .filter(|idx| components.contains_key(&basis_degree(idx, kind, ctx)))
        .collect();
    let builder = BasisBuilder::new(kind, ctx);
    let built: Vec<(BasisIndex, LaurentPoly)> = parallel::map_collect(indices, |idx| {
        let element = builder.element(&idx).expect("enumerated index is valid");
        (idx, element)
    });
    let mut out = Vec::new();
    for (degree, component) in components {
        let slice: Vec<&(BasisIndex, LaurentPoly)> = built
            .iter()
            .filter(|(idx, _)| basis_degree(idx, kind, ctx) == degree)
            .collect();
        if slice.is_empty() {
            return Err(Error::NotInSpan(format!(
                "no basis elements of degree {}",
                degree
            )));
        }
        let polys: Vec<&LaurentPoly> = slice.iter().map(|(_, element)| element).collect();
        let solution = solve_in_family(&polys, &component)
            .ok_or_else(|| Error::NotInSpan(format!("degree {} solve failed", degree)))?;
        for ((idx, _), coeff) in slice.iter().zip(solution) {
            if !num_traits::Zero::is_zero(&coeff) {
                out.push(((*idx).clone(), coeff));
            }
        }
    }
    Ok(out)
}

/// Re-synthesises a coefficient list produced by [`expand_in_basis`];
/// the round trip is exact whenever the coefficients are integers scaled
/// by a common denominator.
pub fn synthesize(
    coeffs: &[(BasisIndex, Rat)],
    kind: BasisKind,
    ctx: &RingContext,
) -> Result<LaurentPoly> {
    use num_traits::Zero;
    let builder = BasisBuilder::new(kind, ctx);
    let mut out = LaurentPoly::zero(ctx.m, ctx.n);
    for (idx, coeff) in coeffs {
        let element = builder.element(idx)?;
        // exact only for integer coefficients; rational input is scaled by
        // the caller before synthesis
        if !coeff.is_integer() {
            return Err(Error::NotInSpan(format!(
                "non-integer coefficient {} in synthesis",
                coeff
            )));
        }
        let c = coeff.to_integer();
        if !Zero::is_zero(&c) {
            out = &out + &element.scale(&c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{big_h, delta_unit};

    fn parse(s: &str, m: usize, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, m, n).unwrap()
    }

    #[test]
    fn supersymmetry_examples() {
        let ctx = RingContext::laurent(2, 2);
        for k in -3..=3i64 {
            let h = big_h(k, &ctx);
            assert!(
                is_supersymmetric(&h, &ctx).unwrap(),
                "H_{} not supersymmetric",
                k
            );
        }

        let ctx11 = RingContext::laurent(1, 1);
        assert!(!is_supersymmetric(&parse("x1 + y1", 1, 1), &ctx11).unwrap());

        // vacuous when n = 0: any symmetric polynomial passes
        let ctx20 = RingContext::laurent(2, 0);
        assert!(is_supersymmetric(&parse("x1*x2 + x1 + x2", 2, 0), &ctx20).unwrap());
        assert!(!is_supersymmetric(&parse("x1", 2, 0), &ctx20).unwrap());
    }

    #[test]
    fn sector_flags_are_enforced() {
        let ctx = RingContext::partial(1, 1);
        let f = parse("y1^-1", 1, 1);
        assert!(matches!(
            is_supersymmetric(&f, &ctx),
            Err(Error::SectorViolation(_))
        ));
        let g = parse("x1^-1", 1, 1);
        assert!(is_supersymmetric(&g, &ctx).is_ok());
    }

    #[test]
    fn enumerate_x_plus_one_zero() {
        // X+(1,0) with W=1: only I of length 1, J empty
        let ctx = RingContext::partial(1, 0);
        let window = Window::new(1, 6);
        let got = enumerate_basis(BasisKind::XPlus, &ctx, &window);
        assert_eq!(got.len(), 3);
        for idx in &got {
            assert_eq!(idx.i.len(), 1);
            assert!(idx.j.is_empty());
            assert!(idx.i[0].abs() <= 1);
        }
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        // independent oracle: filter the full cartesian product
        let ctx = RingContext::partial(1, 1);
        let window = Window::new(2, 2);
        let got = enumerate_basis(BasisKind::XPlus, &ctx, &window);

        let mut expected = 0usize;
        // p = q = 0
        expected += 1; // the empty pair, degree 0
                       // p = q = 1
        for i in -2..=2i64 {
            for j in 0..=2i64 {
                if (i + j).abs() <= 2 {
                    expected += 1;
                }
            }
        }
        assert_eq!(got.len(), expected);
        // golden count for this window
        assert_eq!(got.len(), 13);
    }

    #[test]
    fn basis_elements_frozen_values() {
        // (1,0): H(I=(k), J=()) = x1^k
        let ctx = RingContext::partial(1, 0);
        for k in -2..=2i64 {
            let idx = BasisIndex::new(vec![k], vec![]);
            let element = basis_element(&idx, BasisKind::XPlus, &ctx).unwrap();
            assert_eq!(element, big_h(k, &ctx));
        }

        // empty index pair gives 1
        let ctx22 = RingContext::laurent(2, 2);
        let empty = BasisIndex::new(vec![], vec![]);
        assert!(basis_element(&empty, BasisKind::XPlus, &ctx22)
            .unwrap()
            .is_one());

        // X+-(1,1): I=(0), J=(1) multiplies H_0 by the unit monomial
        let ctx11 = RingContext::laurent(1, 1);
        let idx = BasisIndex::new(vec![0], vec![1]);
        let element = basis_element(&idx, BasisKind::XPm, &ctx11).unwrap();
        let expected = &big_h(0, &ctx11) * &delta_unit(&ctx11);
        assert_eq!(element, expected);
        assert_eq!(element, parse("x1^-1*y1 - x1^-2*y1^2", 1, 1));
    }

    #[test]
    fn basis_elements_are_supersymmetric() {
        let ctx = RingContext::laurent(1, 1);
        let window = Window::new(2, 3);
        for kind in [BasisKind::XPlus, BasisKind::XPm] {
            for (idx, element) in basis_family(kind, &ctx, &window).unwrap() {
                assert!(
                    is_supersymmetric(&element, &ctx).unwrap(),
                    "{:?} {:?} fails membership",
                    kind,
                    idx
                );
            }
        }
        // spot-check a larger family
        let ctx = RingContext::laurent(2, 2);
        let family = basis_family(BasisKind::XPm, &ctx, &Window::new(3, 4)).unwrap();
        for (idx, element) in family.iter().step_by(17) {
            assert!(
                is_supersymmetric(element, &ctx).unwrap(),
                "{:?} fails membership",
                idx
            );
        }
    }

    #[test]
    fn invalid_indices_are_rejected() {
        let ctx = RingContext::laurent(1, 1);
        // not strictly decreasing
        assert!(
            basis_element(&BasisIndex::new(vec![1, 1], vec![]), BasisKind::XPlus, &ctx).is_err()
        );
        // length mismatch with m - n
        assert!(basis_element(&BasisIndex::new(vec![1], vec![]), BasisKind::XPlus, &ctx).is_err());
        // negative exponent in a nonnegative slot
        assert!(
            basis_element(&BasisIndex::new(vec![1], vec![-1]), BasisKind::XPlus, &ctx).is_err()
        );
        // but the last slot of the Laurent family may be negative
        assert!(basis_element(&BasisIndex::new(vec![1], vec![-1]), BasisKind::XPm, &ctx).is_ok());
    }

    #[test]
    fn degrees_match_formulas() {
        let ctx = RingContext::laurent(2, 2);
        let window = Window::new(2, 4);
        for kind in [BasisKind::XPlus, BasisKind::XPm] {
            for (idx, element) in basis_family(kind, &ctx, &window).unwrap() {
                if element.is_zero() {
                    continue;
                }
                assert_eq!(
                    element.homogeneous_degree(),
                    Some(basis_degree(&idx, kind, &ctx)),
                    "{:?} {:?}",
                    kind,
                    idx
                );
            }
        }
    }

    #[test]
    fn expansion_round_trips() {
        let ctx = RingContext::laurent(1, 1);
        let window = Window::new(3, 4);

        // a basis element expands to a unit coordinate vector
        let idx = BasisIndex::new(vec![2], vec![1]);
        let element = basis_element(&idx, BasisKind::XPm, &ctx).unwrap();
        let coeffs = expand_in_basis(&element, BasisKind::XPm, &ctx, &window).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs[0].0, idx);
        assert!(num_traits::One::is_one(&coeffs[0].1));

        // zero expands to the empty list
        assert!(
            expand_in_basis(&LaurentPoly::zero(1, 1), BasisKind::XPm, &ctx, &window)
                .unwrap()
                .is_empty()
        );

        // H_2 * H_1 lies in the span; frozen golden coordinates
        let product = &big_h(2, &ctx) * &big_h(1, &ctx);
        let coeffs = expand_in_basis(&product, BasisKind::XPm, &ctx, &window).unwrap();
        let printable: Vec<(Vec<i64>, Vec<i64>, String)> = coeffs
            .iter()
            .map(|(idx, c)| (idx.i.clone(), idx.j.clone(), c.to_string()))
            .collect();
        assert_eq!(
            printable,
            vec![
                (vec![3], vec![0], "1".to_string()),
                (vec![3], vec![1], "-1".to_string()),
            ]
        );
        assert_eq!(synthesize(&coeffs, BasisKind::XPm, &ctx).unwrap(), product);
    }

    #[test]
    fn expansion_outside_window_fails() {
        let ctx = RingContext::laurent(1, 1);
        let tiny = Window::new(0, 0);
        let h = big_h(2, &ctx);
        assert!(matches!(
            expand_in_basis(&h, BasisKind::XPm, &ctx, &tiny),
            Err(Error::NotInSpan(_))
        ));
    }

    #[test]
    fn kac_index_enumeration() {
        let ctx = RingContext::laurent(1, 1);
        let window = Window::new(1, 4);
        let pairs = enumerate_kac_indices(&ctx, &window);
        // (empty, empty) plus all ((a),(b)) with |a|,|b| <= 1
        assert!(pairs.contains(&(vec![], vec![])));
        assert!(pairs.contains(&(vec![0], vec![0])));
        assert_eq!(pairs.len(), 1 + 9);
    }

    #[test]
    fn tuple_generators() {
        assert_eq!(strictly_decreasing_tuples(2, -1, 1).len(), 3);
        assert_eq!(
            strictly_decreasing_tuples(0, -1, 1),
            vec![Vec::<i64>::new()]
        );
        let tuples = non_increasing_tuples(3, -1, 1);
        assert_eq!(tuples.len(), 10); // multisets of size 3 from 3 values
        assert!(tuples.iter().all(|t| t.windows(2).all(|w| w[0] >= w[1])));
    }
}
