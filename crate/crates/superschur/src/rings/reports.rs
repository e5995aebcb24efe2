//! Windowed verification of the ring presentations: vanishing of the
//! defining determinantal relations in the concrete ring, linear
//! independence of the designated generators per degree slice, spanning
//! of bounded-degree slices in the polynomial case, and the tensor
//! decomposition bookkeeping for `n >= m`.

use serde::Serialize;

use crate::context::RingContext;
use crate::dets;
use crate::error::Result;
use crate::genfun;
use crate::parallel;
use crate::poly::LaurentPoly;

use super::{
    basis_degree, enumerate_basis, non_increasing_tuples, BasisBuilder, BasisIndex, BasisKind,
    Window,
};

/// Outcome of one verification sweep. A report is an order-independent
/// aggregate: instances may be checked concurrently.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub ring: RingContext,
    pub kind: String,
    pub window: Window,
    pub instances_checked: u64,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(ring: RingContext, kind: impl Into<String>, window: Window) -> Self {
        Report {
            ring,
            kind: kind.into(),
            window,
            instances_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.instances_checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn absorb(&mut self, outcomes: Vec<Option<String>>) {
        for outcome in outcomes {
            self.instances_checked += 1;
            if let Some(msg) = outcome {
                self.failures.push(msg);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `det(H_{lambda_i - i + j}) = 0` for every non-increasing
/// integer sequence of length `m + 1` with entries inside the window.
pub fn verify_vanishing_relations(ctx: &RingContext, window: &Window) -> Result<Report> {
    let mut report = Report::new(*ctx, "vanishing", *window);
    let w = window.index_bound;
    let tuples = non_increasing_tuples(ctx.m + 1, -w, w);
    let big_h = genfun::big_h_seq(ctx);
    let outcomes = parallel::map_collect(tuples, |lambda| {
        match dets::jacobi_trudi_with(&lambda, lambda.len(), &big_h) {
            Ok(det) if det.is_zero() => None,
            Ok(det) => Some(format!("lambda {:?}: det = {}", lambda, det)),
            Err(e) => Some(format!("lambda {:?}: {}", lambda, e)),
        }
    });
    report.absorb(outcomes);
    Ok(report)
}

/// Which abstract presentation is being verified against the concrete
/// ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentationKind {
    /// Generators map to `h_i` and to the unit multiple of `h*_i`; all
    /// window relations `R_I(w) = 0` with `w_i -> H_i`.
    UPlus,
    /// The polynomial subring: relations only over index tuples with all
    /// entries above the superdimension, generators map to `h_i`.
    U,
    /// The Laurent variant with the invertible element mapping to the
    /// unit monomial.
    UPm,
}

impl PresentationKind {
    pub fn label(&self) -> &'static str {
        match self {
            PresentationKind::UPlus => "Uplus",
            PresentationKind::U => "U",
            PresentationKind::UPm => "Upm",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Uplus" | "uplus" | "U+" => Some(PresentationKind::UPlus),
            "U" | "u" => Some(PresentationKind::U),
            "Upm" | "upm" | "U+-" => Some(PresentationKind::UPm),
            _ => None,
        }
    }
}

/// Semantic presentation check: (a) the defining relations vanish in the
/// concrete ring, (b) the designated generator images are linearly
/// independent per degree slice, (c) for the Laurent kind the invertible
/// generator's image is exhibited as a unit, (d) for the polynomial kind
/// bounded-degree monomials in the `h_i` lie in the span of the
/// admissible generator images.
pub fn verify_presentation(
    ctx: &RingContext,
    kind: PresentationKind,
    window: &Window,
) -> Result<Report> {
    let mut report = Report::new(*ctx, format!("presentation:{}", kind.label()), *window);
    let w = window.index_bound;

    // (a) relations
    let lo = match kind {
        PresentationKind::U => ctx.superdim() + 1,
        _ => -w,
    };
    if lo <= w {
        let tuples = non_increasing_tuples(ctx.m + 1, lo, w);
        let seq = match kind {
            PresentationKind::U => genfun::complete_h_seq(ctx),
            _ => genfun::big_h_seq(ctx),
        };
        let outcomes = parallel::map_collect(tuples, |index| match dets::r_det(&index, &seq) {
            Ok(det) if det.is_zero() => None,
            Ok(_) => Some(format!("relation I = {:?} does not vanish", index)),
            Err(e) => Some(format!("relation I = {:?}: {}", index, e)),
        });
        report.absorb(outcomes);
    }

    // (b) independence of designated generators per degree slice
    let basis_kind = match kind {
        PresentationKind::UPm => BasisKind::XPm,
        _ => BasisKind::XPlus,
    };
    let mut indices = enumerate_basis(basis_kind, ctx, window);
    if kind == PresentationKind::U {
        let floor = ctx.superdim();
        indices.retain(|idx| idx.i.iter().all(|&v| v > floor));
    }
    check_independence(&mut report, ctx, basis_kind, indices)?;

    // (c) the invertible element of the Laurent presentation
    if kind == PresentationKind::UPm {
        let delta = genfun::delta_unit(ctx);
        let inverse = delta.star();
        let ok = (&delta * &inverse).is_one();
        report.record(ok, || "unit monomial times its inverse is not 1".into());
    }

    // (d) spanning of bounded-degree slices for the polynomial ring
    if kind == PresentationKind::U {
        check_spanning(&mut report, ctx, window)?;
    }

    Ok(report)
}

fn check_independence(
    report: &mut Report,
    ctx: &RingContext,
    kind: BasisKind,
    indices: Vec<BasisIndex>,
) -> Result<()> {
    let builder = BasisBuilder::new(kind, ctx);
    let built: Vec<(BasisIndex, Result<LaurentPoly>)> = parallel::map_collect(indices, |idx| {
        let element = builder.element(&idx);
        (idx, element)
    });
    let mut by_degree: std::collections::BTreeMap<i64, Vec<LaurentPoly>> = Default::default();
    for (idx, element) in built {
        let element = element?;
        by_degree
            .entry(basis_degree(&idx, kind, ctx))
            .or_default()
            .push(element);
    }
    for (degree, elements) in by_degree {
        let refs: Vec<&LaurentPoly> = elements.iter().collect();
        let rank = super::family_rank(&refs);
        report.record(rank == elements.len(), || {
            format!(
                "degree {}: rank {} < {} generators",
                degree,
                rank,
                elements.len()
            )
        });
    }
    Ok(())
}

/// Every monomial in the `h_i` of total degree up to the desk-scale bound
/// must expand over the admissible generator images of exactly that
/// degree.
fn check_spanning(report: &mut Report, ctx: &RingContext, window: &Window) -> Result<()> {
    let bound = window.degree_bound.min(4);
    let builder = BasisBuilder::new(BasisKind::XPlus, ctx);
    for degree in 1..=bound {
        let indices = admissible_indices_of_degree(ctx, degree);
        let elements: Vec<LaurentPoly> = indices
            .iter()
            .map(|idx| builder.element(idx))
            .collect::<Result<_>>()?;
        for exponents in h_monomials_of_degree(degree) {
            let mut product = LaurentPoly::one(ctx.m, ctx.n);
            for (t, &e) in exponents.iter().enumerate() {
                if e > 0 {
                    product = &product * &genfun::complete_h(t as i64 + 1, ctx).pow(e as u32);
                }
            }
            let ok = if product.is_zero() {
                true
            } else {
                let polys: Vec<&LaurentPoly> = elements.iter().collect();
                super::solve_in_family(&polys, &product).is_some()
            };
            report.record(ok, || {
                format!(
                    "h-monomial {:?} of degree {} is not in the admissible span",
                    exponents, degree
                )
            });
        }
    }
    Ok(())
}

/// Exponent vectors `(a_1, ..., a_d)` with `sum t * a_t = d`.
fn h_monomials_of_degree(degree: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; degree as usize];
    fn rec(slot: usize, remaining: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if slot >= current.len() {
            return;
        }
        let t = slot as i64 + 1;
        for e in (0..=remaining / t).rev() {
            current[slot] = e;
            rec(slot + 1, remaining - e * t, current, out);
            current[slot] = 0;
        }
    }
    rec(0, degree, &mut current, &mut out);
    out
}

/// Complete enumeration of the admissible index pairs of one exact
/// degree: `I` strictly decreasing with entries above the superdimension,
/// `J` nonnegative, lengths tied by `p - q = m - n`. Finite because the
/// entry floor bounds the index sums from below.
fn admissible_indices_of_degree(ctx: &RingContext, degree: i64) -> Vec<BasisIndex> {
    let floor = ctx.superdim() + 1;
    let mut out = Vec::new();
    for p in 0..=ctx.m {
        let q_signed = p as i64 - (ctx.m as i64 - ctx.n as i64);
        if q_signed < 0 || q_signed > ctx.n as i64 {
            continue;
        }
        let q = q_signed as usize;
        let base = p as i64 * (p as i64 - 1) / 2;
        let min_i_sum = min_strict_sum(p as i64, floor);
        for (j_seq, j_weight) in j_vectors_with_weight_at_most(q, degree - base - min_i_sum) {
            let i_sum = degree - base - j_weight;
            for i_seq in strictly_decreasing_with_sum(p, floor, i_sum) {
                out.push(BasisIndex::new(i_seq, j_seq.clone()));
            }
        }
    }
    out
}

fn min_strict_sum(count: i64, floor: i64) -> i64 {
    count * floor + count * (count - 1) / 2
}

fn j_vectors_with_weight_at_most(q: usize, cap: i64) -> Vec<(Vec<i64>, i64)> {
    let mut out = Vec::new();
    if cap < 0 {
        return out;
    }
    let mut current = vec![0i64; q];
    fn rec(
        slot: usize,
        q: usize,
        used: i64,
        cap: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        if slot == q {
            out.push((current.clone(), used));
            return;
        }
        let t = slot as i64 + 1;
        for e in 0..=(cap - used) / t {
            current[slot] = e;
            rec(slot + 1, q, used + e * t, cap, current, out);
            current[slot] = 0;
        }
    }
    rec(0, q, 0, cap, &mut current, &mut out);
    out
}

/// Strictly decreasing `count`-tuples with entries `>= floor` summing to
/// `sum`.
fn strictly_decreasing_with_sum(count: usize, floor: i64, sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(count);
    fn rec(
        remaining: usize,
        floor: i64,
        max_val: i64,
        sum: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if remaining == 0 {
            if sum == 0 {
                out.push(current.clone());
            }
            return;
        }
        let r = remaining as i64;
        // the largest entry must leave a feasible strictly smaller tail
        let lower = (floor + r - 1).max(div_ceil(sum, r));
        let upper = max_val.min(sum - min_strict_sum(r - 1, floor));
        for v in (lower..=upper).rev() {
            current.push(v);
            rec(remaining - 1, floor, v - 1, sum - v, current, out);
            current.pop();
        }
    }
    if count == 0 {
        if sum == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(count, floor, i64::MAX, sum, &mut current, &mut out);
    out
}

fn div_ceil(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// Windowed verification of the tensor decomposition for `n >= m`: the
/// index map `(I, J, a) -> (I + (n-m), a ++ (J shifted))` lands
/// injectively in the larger index set, the image elements are linearly
/// independent per degree slice, the unshifted map changes degree by
/// exactly `(n-m) * (|I| + sum j)`, and composing with the downward index
/// shift removes the `|I|` part (so the shift vanishes on pure
/// determinant elements).
pub fn check_tensor_iso(m: usize, n: usize, window: &Window) -> Result<Report> {
    use crate::error::Error;
    if n < m {
        return Err(Error::InvalidIndex(format!(
            "need n >= m, got ({},{})",
            m, n
        )));
    }
    let source_ctx = RingContext::partial(m, m);
    let target_ctx = RingContext::partial(m, n);
    let mut report = Report::new(target_ctx, "tensor", *window);
    let gap = (n - m) as i64;

    let source_indices = enumerate_basis(BasisKind::XPlus, &source_ctx, window);
    let extra_vectors = super::exponent_tuples(BasisKind::XPlus, n - m, window.index_bound);

    let source_builder = BasisBuilder::new(BasisKind::XPlus, &source_ctx);
    let target_builder = BasisBuilder::new(BasisKind::XPlus, &target_ctx);

    let mut tasks: Vec<(BasisIndex, Vec<i64>)> = Vec::new();
    for idx in &source_indices {
        for extra in &extra_vectors {
            let extra_weight: i64 = extra
                .iter()
                .enumerate()
                .map(|(s, &a)| (s as i64 + 1) * a)
                .sum();
            let source_degree = basis_degree(idx, BasisKind::XPlus, &source_ctx) + extra_weight;
            if source_degree.abs() <= window.degree_bound {
                tasks.push((idx.clone(), extra.clone()));
            }
        }
    }

    struct Outcome {
        image: BasisIndex,
        element: Option<LaurentPoly>,
        shift: i64,
        failure: Option<String>,
    }

    let outcomes: Vec<Outcome> = parallel::map_collect(tasks, |(idx, extra)| {
        let p = idx.i.len() as i64;
        let j_weight: i64 = idx.j.iter().sum();
        let extra_weight: i64 = extra
            .iter()
            .enumerate()
            .map(|(s, &a)| (s as i64 + 1) * a)
            .sum();

        let image_i: Vec<i64> = idx.i.iter().map(|&v| v + gap).collect();
        let mut image_j: Vec<i64> = extra.clone();
        image_j.extend(idx.j.iter().copied());
        let image = BasisIndex::new(image_i, image_j);
        let expected_shift = gap * (p + j_weight);

        let source_degree = match source_builder.element(&idx) {
            Ok(element) => element.homogeneous_degree().unwrap_or(0) + extra_weight,
            Err(e) => {
                return Outcome {
                    image,
                    element: None,
                    shift: expected_shift,
                    failure: Some(format!("source {:?}: {}", idx, e)),
                }
            }
        };
        let image_degree = basis_degree(&image, BasisKind::XPlus, &target_ctx);
        let mut failure = None;
        let mut element = None;
        match target_builder.element(&image) {
            Ok(built) => {
                if built.homogeneous_degree().unwrap_or(0) != image_degree {
                    failure = Some(format!("image {:?} degree mismatch", image));
                } else if image_degree - source_degree != expected_shift {
                    // unshifted map: degree must move by gap * (p + sum j)
                    failure = Some(format!(
                        "index {:?} + {:?}: degree shift {} != {}",
                        idx,
                        extra,
                        image_degree - source_degree,
                        expected_shift
                    ));
                } else {
                    // composing with the downward index shift removes the
                    // determinant part of the shift
                    let delta_index = BasisIndex::new(idx.i.clone(), image.j.clone());
                    let delta_degree = basis_degree(&delta_index, BasisKind::XPlus, &target_ctx);
                    if delta_degree - source_degree != gap * j_weight {
                        failure = Some(format!(
                            "index {:?} + {:?}: shifted composition moves degree by {}",
                            idx,
                            extra,
                            delta_degree - source_degree
                        ));
                    } else {
                        element = Some(built);
                    }
                }
            }
            Err(e) => failure = Some(format!("image {:?}: {}", image, e)),
        }
        Outcome {
            image,
            element,
            shift: expected_shift,
            failure,
        }
    });

    let mut seen = std::collections::BTreeSet::new();
    let mut by_degree: std::collections::BTreeMap<i64, Vec<LaurentPoly>> = Default::default();
    let mut nonpreserving_witnessed = gap == 0;
    for outcome in outcomes {
        report.record(outcome.failure.is_none(), || {
            outcome.failure.clone().unwrap()
        });
        if !seen.insert(outcome.image.clone()) {
            report.record(false, || {
                format!("image index {:?} collides", outcome.image)
            });
        }
        if outcome.shift != 0 {
            nonpreserving_witnessed = true;
        }
        if let Some(element) = outcome.element {
            by_degree
                .entry(basis_degree(&outcome.image, BasisKind::XPlus, &target_ctx))
                .or_default()
                .push(element);
        }
    }

    for (degree, elements) in by_degree {
        let refs: Vec<&LaurentPoly> = elements.iter().collect();
        let rank = super::family_rank(&refs);
        report.record(rank == elements.len(), || {
            format!("image slice {}: rank {} < {}", degree, rank, elements.len())
        });
    }

    report.record(nonpreserving_witnessed, || {
        "no element witnesses the degree shift of the unshifted map".into()
    });
    Ok(report)
}

/// Euler-character family for the purely symmetric case: rank of the
/// alternant quotients per degree slice over a window of non-increasing
/// sequences.
pub fn verify_euler_basis(ctx: &RingContext, window: &Window) -> Result<Report> {
    use crate::error::Error;
    if ctx.n != 0 {
        return Err(Error::InvalidIndex("euler basis check needs n = 0".into()));
    }
    let mut report = Report::new(*ctx, "euler-basis", *window);
    let w = window.index_bound;
    let sequences: Vec<Vec<i64>> = non_increasing_tuples(ctx.m, -w, w)
        .into_iter()
        .filter(|seq| seq.iter().sum::<i64>().abs() <= window.degree_bound)
        .collect();
    let elements: Vec<(Vec<i64>, LaurentPoly)> = parallel::map_collect(sequences, |seq| {
        let e = crate::alternant::euler_e(&seq, ctx).expect("valid sequence");
        (seq, e)
    });
    let mut by_degree: std::collections::BTreeMap<i64, Vec<LaurentPoly>> = Default::default();
    for (seq, element) in elements {
        // non-increasing sequences give strictly separated staircases, so
        // a vanishing character is itself a failure
        report.record(!element.is_zero(), || {
            format!("character of {:?} vanished", seq)
        });
        if element.is_zero() {
            continue;
        }
        let degree = element
            .homogeneous_degree()
            .expect("euler characters are homogeneous");
        by_degree.entry(degree).or_default().push(element);
    }
    for (degree, elements) in by_degree {
        let refs: Vec<&LaurentPoly> = elements.iter().collect();
        let rank = super::family_rank(&refs);
        report.record(rank == elements.len(), || {
            format!("degree {}: rank {} < {}", degree, rank, elements.len())
        });
    }
    Ok(report)
}

/// Rank check for the Kac character family over the windowed index set.
pub fn verify_kac_basis(ctx: &RingContext, window: &Window) -> Result<Report> {
    let mut report = Report::new(*ctx, "kac-basis", *window);
    let pairs = super::enumerate_kac_indices(ctx, window);
    let hstar = genfun::h_star_seq(ctx);
    let big = genfun::big_h_seq(ctx);
    let h = genfun::complete_h_seq(ctx);
    let built: Vec<Result<LaurentPoly>> = parallel::map_collect(pairs, |(lambda, mu)| {
        dets::kac_k_with(&lambda, &mu, ctx, &hstar, &big, &h)
    });
    let mut by_degree: std::collections::BTreeMap<i64, Vec<LaurentPoly>> = Default::default();
    for element in built {
        let element = element?;
        report.record(!element.is_zero(), || "kac character vanished".into());
        if element.is_zero() {
            continue;
        }
        let degree = element
            .homogeneous_degree()
            .expect("kac characters are homogeneous");
        by_degree.entry(degree).or_default().push(element);
    }
    for (degree, elements) in by_degree {
        let refs: Vec<&LaurentPoly> = elements.iter().collect();
        let rank = super::family_rank(&refs);
        report.record(rank == elements.len(), || {
            format!("degree {}: rank {} < {}", degree, rank, elements.len())
        });
    }
    Ok(report)
}

/// The unit monomial and its explicit inverse, kept public for the CLI's
/// presentation output.
pub fn delta_with_inverse(ctx: &RingContext) -> (LaurentPoly, LaurentPoly) {
    let delta = genfun::delta_unit(ctx);
    let inverse = delta.star();
    debug_assert!((&delta * &inverse).is_one());
    (delta, inverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_holds_on_small_windows() {
        for (m, n) in [(1usize, 0usize), (2, 0), (1, 1)] {
            let ctx = RingContext::laurent(m, n);
            let report = verify_vanishing_relations(&ctx, &Window::new(2, 6)).unwrap();
            assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);
            assert!(report.instances_checked > 0);
        }
    }

    #[test]
    fn degenerate_row_of_zeros() {
        // m = 0: every generator H_k collapses, so all 1x1 relations hold
        let ctx = RingContext::laurent(0, 1);
        let report = verify_vanishing_relations(&ctx, &Window::new(3, 6)).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn presentations_pass_at_desk_scale() {
        let ctx = RingContext::partial(1, 1);
        for kind in [PresentationKind::UPlus, PresentationKind::U] {
            let report = verify_presentation(&ctx, kind, &Window::new(2, 4)).unwrap();
            assert!(report.passed(), "{:?}: {:?}", kind, report.failures);
        }
        let ctx = RingContext::laurent(1, 1);
        let report = verify_presentation(&ctx, PresentationKind::UPm, &Window::new(2, 4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn relation_window_respects_the_floor() {
        // for the polynomial kind with n - m >= W there is nothing to check
        let ctx = RingContext::polynomial(0, 2);
        let report = verify_presentation(&ctx, PresentationKind::U, &Window::new(1, 3)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn tensor_decomposition_examples() {
        // m = n: the identity map
        let report = check_tensor_iso(1, 1, &Window::new(2, 3)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);

        // one extra variable: indices shift by 1
        let report = check_tensor_iso(1, 2, &Window::new(2, 3)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);

        assert!(check_tensor_iso(2, 1, &Window::new(2, 3)).is_err());
    }

    #[test]
    fn euler_family_is_independent() {
        let ctx = RingContext::laurent(2, 0);
        let report = verify_euler_basis(&ctx, &Window::new(2, 4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn kac_family_is_independent() {
        let ctx = RingContext::laurent(1, 1);
        let report = verify_kac_basis(&ctx, &Window::new(2, 4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn helper_enumerations() {
        assert_eq!(min_strict_sum(3, 1), 6);
        let tuples = strictly_decreasing_with_sum(2, 1, 5);
        assert_eq!(tuples, vec![vec![4, 1], vec![3, 2]]);
        assert_eq!(
            strictly_decreasing_with_sum(0, 1, 0),
            vec![Vec::<i64>::new()]
        );
        assert!(strictly_decreasing_with_sum(2, 1, 2).is_empty());

        let monomials = h_monomials_of_degree(3);
        // 3 = 3, 2+1, 1+1+1
        assert_eq!(monomials.len(), 3);
    }
}
