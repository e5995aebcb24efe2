//! Named verification suites behind the CLI: each one sweeps a windowed
//! family of identities and returns a structured [`Report`].

use num_bigint::BigInt;
use num_traits::One;

use crate::alternant::{
    alternate, euler_d, euler_e, euler_sector, kac_product, staircase, vandermonde,
};
use crate::context::{RingContext, Sector, Var};
use crate::dets;
use crate::error::Result;
use crate::genfun;
use crate::monomial::Monomial;
use crate::parallel;
use crate::poly::LaurentPoly;
use crate::rings::{self, BasisKind, Report, Window};
use crate::rng::SplitMix64;
use crate::series::FiniteSeq;

fn merge(into: &mut Report, from: Report) {
    into.instances_checked += from.instances_checked;
    into.failures.extend(from.failures);
}

/// Generator-family consistency: the three-case collapse of `H_k`, the
/// expansion over the x-only generators, the variable-stripping
/// recurrence, and homogeneity, for all `|k|` up to the index bound.
pub fn generators(ctx: &RingContext, window: &Window) -> Result<Report> {
    let mut report = Report::new(*ctx, "generators", *window);
    let (m, n) = ctx.dims();
    let pivot = ctx.superdim();
    let x_ctx = RingContext { m, n: 0, ..*ctx };
    let stripped_ctx = if m >= 1 {
        Some(RingContext {
            m: m - 1,
            n,
            ..*ctx
        })
    } else {
        None
    };

    for k in -window.index_bound..=window.index_bound {
        let h = genfun::complete_h(k, ctx);
        let h_inf = genfun::h_infinity(k, ctx);
        let big = genfun::big_h(k, ctx);

        // case collapse around the superdimension
        let expected = if k > pivot {
            h.clone()
        } else if k < 0 {
            -&h_inf
        } else {
            &h - &h_inf
        };
        report.record(big == expected, || format!("k={}: case split fails", k));

        // homogeneity of degree k
        report.record(big.is_zero() || big.homogeneous_degree() == Some(k), || {
            format!("k={}: generator is not homogeneous of the right degree", k)
        });

        // expansion over the x-sector generators
        let mut acc = LaurentPoly::zero(m, n);
        for j in 0..=n as i64 {
            let sign = if j % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let e_j = genfun::elementary_e(j, Sector::Y, ctx).scale(&sign);
            let h_x = genfun::big_h(k - j, &x_ctx).relabel(m, n, 0, 0);
            acc = &acc + &(&e_j * &h_x);
        }
        report.record(big == acc, || {
            format!("k={}: expansion over x-generators fails", k)
        });

        if let Some(sub) = stripped_ctx {
            // H_k - x1 H_{k-1} = H_k with the first variable removed
            let lhs = &big - &(&LaurentPoly::var(m, n, Var::X(0)) * &genfun::big_h(k - 1, ctx));
            let rhs = genfun::big_h(k, &sub).relabel(m, n, 1, 0);
            report.record(lhs == rhs, || {
                format!("k={}: stripping recurrence fails", k)
            });
            if m == 1 {
                report.record(lhs.is_zero(), || format!("k={}: m=1 collapse fails", k));
            }
        }

        // alternant identity: H_k Dx Dy = { prod_j (1 - y_j/x_1) x_1^k
        // times both staircases }
        if m >= 1 {
            let mut payload = LaurentPoly::from_monomial(
                staircase(Sector::X, ctx).mul(&staircase(Sector::Y, ctx)),
                BigInt::one(),
            );
            let mut shift = Monomial::unit(m, n);
            shift.x[0] = k;
            payload = payload.mul_monomial(&shift, &BigInt::one());
            let one = LaurentPoly::one(m, n);
            for j in 0..n {
                let mut mono = Monomial::unit(m, n);
                mono.x[0] = -1;
                mono.y[j] = 1;
                payload = &payload * &(&one - &LaurentPoly::from_monomial(mono, BigInt::one()));
            }
            let lhs = &(&big * &vandermonde(Sector::X, ctx)) * &vandermonde(Sector::Y, ctx);
            let rhs = alternate(&payload, ctx)?;
            report.record(lhs == rhs, || format!("k={}: alternant identity fails", k));
        }
    }
    Ok(report)
}

/// Jacobi-Trudi sweeps: in a purely symmetric context the determinant
/// equals the alternant quotient; with a y-sector it equals the product
/// of `(1 - y_j/x_i)` factors times the sector character.
pub fn jacobi_trudi(ctx: &RingContext, window: &Window, trials: u64, seed: u64) -> Result<Report> {
    let mut report = Report::new(*ctx, "jacobi-trudi", *window);
    let (m, n) = ctx.dims();
    let mut rng = SplitMix64::new(seed);
    let w = window.index_bound;

    let sequences: Vec<Vec<i64>> = (0..trials).map(|_| rng.non_increasing(m, -w, w)).collect();
    let big_h = genfun::big_h_seq(ctx);
    let product = {
        let one = LaurentPoly::one(m, n);
        let mut acc = one.clone();
        for i in 0..m {
            for j in 0..n {
                let mut mono = Monomial::unit(m, n);
                mono.x[i] = -1;
                mono.y[j] = 1;
                acc = &acc * &(&one - &LaurentPoly::from_monomial(mono, BigInt::one()));
            }
        }
        acc
    };

    let outcomes = parallel::map_collect(sequences, |lambda| {
        let det = match dets::jacobi_trudi_with(&lambda, m, &big_h) {
            Ok(d) => d,
            Err(e) => return Some(format!("lambda {:?}: {}", lambda, e)),
        };
        let expected = if n == 0 {
            euler_e(&lambda, ctx)
        } else {
            euler_sector(&lambda, Sector::X, ctx).map(|s| &product * &s)
        };
        match expected {
            Ok(rhs) if det == rhs => None,
            Ok(_) => Some(format!("lambda {:?}: determinant mismatch", lambda)),
            Err(e) => Some(format!("lambda {:?}: {}", lambda, e)),
        }
    });
    report.absorb(outcomes);
    Ok(report)
}

/// Vanishing of every windowed determinant one size past the number of
/// x-variables.
pub fn vanishing(ctx: &RingContext, window: &Window) -> Result<Report> {
    rings::verify_vanishing_relations(ctx, window)
}

/// Composite determinants against the alternant quotient and their dual
/// form, for all partition pairs of weight up to 3 that fit.
pub fn composite(ctx: &RingContext, window: &Window) -> Result<Report> {
    let mut report = Report::new(*ctx, "composite", *window);
    let m = ctx.m;
    let partitions = partitions_up_to_weight(3);
    let mut tasks = Vec::new();
    for tau in &partitions {
        for nu in &partitions {
            if tau.len() + nu.len() <= m {
                tasks.push((tau.clone(), nu.clone()));
            }
        }
    }
    let outcomes = parallel::map_collect(tasks, |(tau, nu)| {
        let composite = match dets::composite_schur(&tau, &nu, ctx) {
            Ok(c) => c,
            Err(e) => return Some(format!("tau {:?} nu {:?}: {}", tau, nu, e)),
        };
        let mut lambda = tau.clone();
        lambda.extend(std::iter::repeat_n(0, m - tau.len() - nu.len()));
        lambda.extend(nu.iter().rev().map(|&v| -v));
        match euler_e(&lambda, ctx) {
            Ok(e) if e == composite => {}
            Ok(_) => return Some(format!("tau {:?} nu {:?}: alternant mismatch", tau, nu)),
            Err(e) => return Some(format!("tau {:?} nu {:?}: {}", tau, nu, e)),
        }
        match dets::dual_composite(&tau, &nu, ctx) {
            Ok(d) if d == composite => None,
            Ok(_) => Some(format!("tau {:?} nu {:?}: dual mismatch", tau, nu)),
            Err(e) => Some(format!("tau {:?} nu {:?}: {}", tau, nu, e)),
        }
    });
    report.absorb(outcomes);
    Ok(report)
}

/// Duality of inverse series pairs: the classical pair of complete and
/// signed elementary polynomials, plus random integer series inverted to
/// window depth, over all conjugate partition pairs of weight up to 4.
pub fn duality(trials: u64, seed: u64) -> Result<Report> {
    let ctx = RingContext::laurent(3, 0);
    let mut report = Report::new(ctx, "duality", Window::default());
    let pairs: Vec<(Vec<i64>, Vec<i64>)> = {
        let partitions = partitions_up_to_weight(4);
        let mut out = Vec::new();
        for nu in &partitions {
            for mu in &partitions {
                out.push((nu.clone(), mu.clone()));
            }
        }
        out
    };

    // classical pair in three variables
    let sign = |k: i64| {
        if k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let a = genfun::complete_h_seq(&ctx);
    let a_star = genfun::h_star_seq(&ctx);
    let b = crate::series::MemoSeq::new(3, 0, move |k| {
        genfun::elementary_e(k, Sector::X, &ctx).scale(&sign(k))
    });
    let b_star = crate::series::MemoSeq::new(3, 0, move |k| {
        genfun::elementary_e_star(k, Sector::X, &ctx).scale(&sign(k))
    });
    for (nu, mu) in &pairs {
        match dets::conj_duality_check(&a, &a_star, &b, &b_star, nu, mu, 64) {
            Ok(ok) => report.record(ok, || format!("classical pair, nu {:?} mu {:?}", nu, mu)),
            Err(e) => report.record(false, || {
                format!("classical pair, nu {:?} mu {:?}: {}", nu, mu, e)
            }),
        }
    }

    // random integer series pairs, inverted exactly
    let mut rng = SplitMix64::new(seed);
    let depth = 16i64;
    for trial in 0..trials {
        let values: Vec<LaurentPoly> = (0..depth)
            .map(|_| LaurentPoly::constant(0, 0, rng.range_i64(-5, 5)))
            .collect();
        let star_values: Vec<LaurentPoly> = (0..depth)
            .map(|_| LaurentPoly::constant(0, 0, rng.range_i64(-5, 5)))
            .collect();
        let f = FiniteSeq::new(0, 0, values);
        let f_star = FiniteSeq::new(0, 0, star_values);
        let g = f.inverse_series();
        let g_star = f_star.inverse_series();
        for (nu, mu) in &pairs {
            match dets::conj_duality_check(&f, &f_star, &g, &g_star, nu, mu, depth) {
                Ok(ok) => report.record(ok, || format!("trial {}, nu {:?} mu {:?}", trial, nu, mu)),
                Err(e) => report.record(false, || {
                    format!("trial {}, nu {:?} mu {:?}: {}", trial, nu, mu, e)
                }),
            }
        }
    }
    Ok(report)
}

/// Minor-sum expansion over random integer matrices up to 5 x 6, checked
/// for every deletable column.
pub fn minor_sum(trials: u64, seed: u64) -> Result<Report> {
    let mut report = Report::new(
        RingContext::polynomial(0, 0),
        "minor-sum",
        Window::default(),
    );
    let mut rng = SplitMix64::new(seed);
    let mut tasks = Vec::new();
    for trial in 0..trials {
        let n = rng.range_usize(1, 5);
        let matrix: Vec<Vec<BigInt>> = (0..n)
            .map(|_| {
                (0..n + 1)
                    .map(|_| BigInt::from(rng.range_i64(-9, 9)))
                    .collect()
            })
            .collect();
        tasks.push((trial, matrix));
    }
    let outcomes = parallel::map_collect(tasks, |(trial, matrix)| {
        let n = matrix.len();
        let mut failures = Vec::new();
        for l in 1..=n + 1 {
            match dets::minor_sum_check(&matrix, l) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("trial {}: l = {} fails", trial, l)),
                Err(e) => failures.push(format!("trial {}: {}", trial, e)),
            }
        }
        (n + 1, failures)
    });
    for (count, failures) in outcomes {
        report.instances_checked += count as u64;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Kac characters over the windowed index set: the determinant form, the
/// weighted alternant and (at full length) the product form must agree,
/// and every output must be supersymmetric.
pub fn kac(ctx: &RingContext, window: &Window) -> Result<Report> {
    let mut report = Report::new(*ctx, "kac", *window);
    let pairs = rings::enumerate_kac_indices(ctx, window);
    let hstar = genfun::h_star_seq(ctx);
    let big = genfun::big_h_seq(ctx);
    let h = genfun::complete_h_seq(ctx);
    let outcomes = parallel::map_collect(pairs, |(lambda, mu)| {
        let mut failures: Vec<String> = Vec::new();
        let det = match dets::kac_k_with(&lambda, &mu, ctx, &hstar, &big, &h) {
            Ok(d) => d,
            Err(e) => return (1usize, vec![format!("({:?},{:?}): {}", lambda, mu, e)]),
        };
        let mut checked = 1usize;

        // the weighted alternant and the product form match the
        // determinant at full index length
        if lambda.len() == ctx.m && mu.len() == ctx.n {
            checked += 2;
            match euler_d(&lambda, &mu, ctx) {
                Ok(d) if d == det => {}
                Ok(_) => failures.push(format!(
                    "({:?},{:?}): weighted alternant mismatch",
                    lambda, mu
                )),
                Err(e) => failures.push(format!("({:?},{:?}): {}", lambda, mu, e)),
            }
            match kac_product(&lambda, &mu, ctx) {
                Ok(p) if p == det => {}
                Ok(_) => failures.push(format!("({:?},{:?}): product form mismatch", lambda, mu)),
                Err(e) => failures.push(format!("({:?},{:?}): {}", lambda, mu, e)),
            }
        } else if mu.iter().all(|&v| v >= 0) {
            // shorter pairs with polynomial mu still satisfy the weighted
            // alternant identity
            checked += 1;
            match euler_d(&lambda, &mu, ctx) {
                Ok(d) if d == det => {}
                Ok(_) => failures.push(format!(
                    "({:?},{:?}): weighted alternant mismatch",
                    lambda, mu
                )),
                Err(e) => failures.push(format!("({:?},{:?}): {}", lambda, mu, e)),
            }
        }

        checked += 1;
        match rings::is_supersymmetric(&det, ctx) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("({:?},{:?}): not supersymmetric", lambda, mu)),
            Err(e) => failures.push(format!("({:?},{:?}): {}", lambda, mu, e)),
        }
        (checked, failures)
    });
    for (count, failures) in outcomes {
        report.instances_checked += count as u64;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Basis checks for every family that lives at the given `(m, n)`: rank
/// per degree slice, plus expansion round trips on random span elements.
pub fn basis(ctx: &RingContext, window: &Window, trials: u64, seed: u64) -> Result<Report> {
    let mut report = Report::new(*ctx, "basis", *window);
    if ctx.n == 0 {
        merge(&mut report, rings::verify_euler_basis(ctx, window)?);
    }
    for kind in [BasisKind::XPlus, BasisKind::XPm] {
        let family_ctx = match kind {
            BasisKind::XPlus => RingContext::partial(ctx.m, ctx.n),
            BasisKind::XPm => RingContext::laurent(ctx.m, ctx.n),
        };
        let family = rings::basis_family(kind, &family_ctx, window)?;
        // rank per degree slice
        let mut by_degree: std::collections::BTreeMap<i64, Vec<&LaurentPoly>> = Default::default();
        for (idx, element) in &family {
            by_degree
                .entry(rings::basis_degree(idx, kind, &family_ctx))
                .or_default()
                .push(element);
        }
        for (degree, elements) in by_degree {
            let rank = rings::family_rank(&elements);
            report.record(rank == elements.len(), || {
                format!(
                    "{:?} degree {}: rank {} < {}",
                    kind,
                    degree,
                    rank,
                    elements.len()
                )
            });
        }
        // random span elements round-trip
        let mut rng = SplitMix64::new(seed ^ kind_salt(kind));
        for trial in 0..trials {
            if family.is_empty() {
                break;
            }
            let picks = rng.range_usize(1, 4.min(family.len()));
            let mut f = LaurentPoly::zero(family_ctx.m, family_ctx.n);
            for _ in 0..picks {
                let (_, element) = &family[rng.range_usize(0, family.len() - 1)];
                let c = BigInt::from(rng.range_i64(-5, 5));
                f = &f + &element.scale(&c);
            }
            let coeffs = match rings::expand_in_basis(&f, kind, &family_ctx, window) {
                Ok(c) => c,
                Err(e) => {
                    report.record(false, || format!("{:?} trial {}: {}", kind, trial, e));
                    continue;
                }
            };
            match rings::synthesize(&coeffs, kind, &family_ctx) {
                Ok(back) => report.record(back == f, || {
                    format!("{:?} trial {}: round trip mismatch", kind, trial)
                }),
                Err(e) => report.record(false, || format!("{:?} trial {}: {}", kind, trial, e)),
            }
        }
    }
    merge(
        &mut report,
        rings::verify_kac_basis(&RingContext::laurent(ctx.m, ctx.n), window)?,
    );
    Ok(report)
}

fn kind_salt(kind: BasisKind) -> u64 {
    match kind {
        BasisKind::XPlus => 0x517c_c1b7_2722_0a95,
        BasisKind::XPm => 0x2545_f491_4f6c_dd1d,
    }
}

/// All partitions of weight at most `w` (including the empty one).
pub fn partitions_up_to_weight(w: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    fn rec(remaining: i64, max_part: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            out.push(current.clone());
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut current = Vec::new();
    for weight in 1..=w {
        let mut exact = Vec::new();
        rec(weight, weight, &mut current, &mut exact);
        out.extend(
            exact
                .into_iter()
                .filter(|p| p.iter().sum::<i64>() == weight),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_enumeration() {
        let parts = partitions_up_to_weight(3);
        // {}, (1), (2), (1,1), (3), (2,1), (1,1,1)
        assert_eq!(parts.len(), 7);
        assert!(parts.contains(&vec![2, 1]));
    }

    #[test]
    fn generator_suite_passes() {
        for ctx in [
            RingContext::laurent(2, 0),
            RingContext::laurent(2, 1),
            RingContext::laurent(3, 3),
            RingContext::laurent(0, 2),
        ] {
            let report = generators(&ctx, &Window::new(3, 6)).unwrap();
            assert!(report.passed(), "{:?}: {:?}", ctx, report.failures);
        }
    }

    #[test]
    fn jacobi_trudi_suite_passes() {
        let report = jacobi_trudi(&RingContext::laurent(2, 1), &Window::new(3, 6), 10, 1).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let report = jacobi_trudi(&RingContext::laurent(2, 0), &Window::new(3, 6), 10, 2).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn minor_sum_suite_passes() {
        let report = minor_sum(20, 7).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.instances_checked >= 40);
    }

    #[test]
    fn kac_suite_passes_small() {
        let report = kac(&RingContext::laurent(1, 1), &Window::new(2, 4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn basis_suite_passes_small() {
        let report = basis(&RingContext::laurent(1, 1), &Window::new(2, 3), 5, 3).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }
}
