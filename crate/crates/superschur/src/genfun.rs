//! Generator families of the rings: the coefficients `h_k` of
//! `prod(1 - y_j t) / prod(1 - x_i t)` expanded at zero, their star images
//! `h*_k`, the coefficients `h_k^(inf)` of the expansion at infinity, the
//! universal family `H_k = h_k - h_k^(inf)`, elementary symmetric
//! polynomials and classical Schur polynomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::context::{RingContext, Sector, Var};
use crate::monomial::Monomial;
use crate::poly::LaurentPoly;
use crate::series::{MemoSeq, SeriesWindow};

/// The unit monomial `(y1...yn) / (x1...xm)`.
pub fn delta_unit(ctx: &RingContext) -> LaurentPoly {
    let mut mono = Monomial::unit(ctx.m, ctx.n);
    for e in mono.x.iter_mut() {
        *e = -1;
    }
    for e in mono.y.iter_mut() {
        *e = 1;
    }
    LaurentPoly::from_monomial(mono, BigInt::one())
}

/// Coefficients `h_0..h_upto` of the expansion at `t = 0`, by truncated
/// series multiplication: the numerator polynomial times the product of
/// geometric series of the denominator factors.
pub fn h_prefix(ctx: &RingContext, upto: usize) -> Vec<LaurentPoly> {
    let (m, n) = ctx.dims();
    // product of 1/(1 - x_i t) up to order `upto`
    let mut den: Vec<LaurentPoly> = Vec::with_capacity(upto + 1);
    den.push(LaurentPoly::one(m, n));
    for d in 1..=upto {
        let _ = d;
        den.push(LaurentPoly::zero(m, n));
    }
    for i in 0..m {
        let xi = Monomial::var(m, n, Var::X(i));
        for d in 1..=upto {
            let carried = den[d - 1].mul_monomial(&xi, &BigInt::one());
            den[d] = &den[d] + &carried;
        }
    }
    // numerator prod (1 - y_j t) has coefficient (-1)^j e_j(y) at t^j
    let num: Vec<LaurentPoly> = (0..=n.min(upto))
        .map(|j| {
            let sign = if j % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            elementary_e(j as i64, Sector::Y, ctx).scale(&sign)
        })
        .collect();
    (0..=upto)
        .map(|k| {
            let mut acc = LaurentPoly::zero(m, n);
            for (j, numer) in num.iter().enumerate() {
                if j > k {
                    break;
                }
                acc = &acc + &(numer * &den[k - j]);
            }
            acc
        })
        .collect()
}

/// `h_k`; zero for negative `k`.
pub fn complete_h(k: i64, ctx: &RingContext) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero(ctx.m, ctx.n);
    }
    h_prefix(ctx, k as usize).pop().expect("nonempty prefix")
}

/// `h*_k = h_k(x^-1, y^-1)`; zero for negative `k`.
pub fn h_star(k: i64, ctx: &RingContext) -> LaurentPoly {
    complete_h(k, ctx).star()
}

/// Coefficient of `t^k` in the expansion at infinity, via the closed star
/// formula; nonzero only for `k <= n - m`.
pub fn h_infinity(k: i64, ctx: &RingContext) -> LaurentPoly {
    let pivot = ctx.superdim();
    if k > pivot {
        return LaurentPoly::zero(ctx.m, ctx.n);
    }
    let sign = if (ctx.n as i64 - ctx.m as i64).rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    delta_unit(ctx)
        .scale(&sign)
        .checked_mul(&h_star(pivot - k, ctx))
        .expect("same context")
}

/// The universal generator `H_k = h_k - h_k^(inf)`.
pub fn big_h(k: i64, ctx: &RingContext) -> LaurentPoly {
    &complete_h(k, ctx) - &h_infinity(k, ctx)
}

/// Elementary symmetric polynomial of one sector; zero outside
/// `0 <= k <= sector size`.
pub fn elementary_e(k: i64, sector: Sector, ctx: &RingContext) -> LaurentPoly {
    let size = ctx.sector_size(sector);
    let (m, n) = ctx.dims();
    if k < 0 || k as usize > size {
        return LaurentPoly::zero(m, n);
    }
    let k = k as usize;
    let mut out = LaurentPoly::zero(m, n);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut mono = Monomial::unit(m, n);
        for &i in &subset {
            match sector {
                Sector::X => mono.x[i] = 1,
                Sector::Y => mono.y[i] = 1,
            }
        }
        out.add_term(mono, BigInt::one());
        // next k-combination of 0..size in lexicographic order
        if k == 0 {
            break;
        }
        let mut idx = k;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if subset[idx] < size - (k - idx) {
                subset[idx] += 1;
                for j in idx + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

pub fn elementary_e_star(k: i64, sector: Sector, ctx: &RingContext) -> LaurentPoly {
    elementary_e(k, sector, ctx).star()
}

/// Complete homogeneous polynomial of a single sector (the other sector's
/// variables do not appear).
pub fn one_sector_h(k: i64, sector: Sector, ctx: &RingContext) -> LaurentPoly {
    let sub = match sector {
        Sector::X => RingContext {
            m: ctx.m,
            n: 0,
            ..*ctx
        },
        Sector::Y => RingContext {
            m: ctx.n,
            n: 0,
            ..*ctx
        },
    };
    let h = complete_h(k, &sub);
    match sector {
        Sector::X => h.relabel(ctx.m, ctx.n, 0, 0),
        Sector::Y => swap_sectors(&h, ctx),
    }
}

/// Reinterprets a polynomial in x-variables only as the same polynomial in
/// the y-sector of `ctx`.
fn swap_sectors(f: &LaurentPoly, ctx: &RingContext) -> LaurentPoly {
    let mut out = LaurentPoly::zero(ctx.m, ctx.n);
    for (mono, c) in f.terms() {
        let mut target = Monomial::unit(ctx.m, ctx.n);
        target.y[..mono.x.len()].copy_from_slice(&mono.x);
        out.add_term(target, c.clone());
    }
    out
}

/// Classical Schur polynomial of one sector as the determinant
/// `det(h_{lambda_i - i + j})` over that sector's complete homogeneous
/// polynomials.
pub fn schur_s(
    lambda: &[i64],
    sector: Sector,
    ctx: &RingContext,
) -> crate::error::Result<LaurentPoly> {
    let size = ctx.sector_size(sector);
    if lambda.len() > size {
        return Err(crate::error::Error::InvalidIndex(format!(
            "partition length {} exceeds sector size {}",
            lambda.len(),
            size
        )));
    }
    if !lambda.windows(2).all(|w| w[0] >= w[1]) || lambda.iter().any(|&p| p < 0) {
        return Err(crate::error::Error::InvalidIndex(
            "expected a partition (non-increasing, nonnegative)".into(),
        ));
    }
    let l = lambda.len();
    if l == 0 {
        return Ok(LaurentPoly::one(ctx.m, ctx.n));
    }
    let matrix: Vec<Vec<LaurentPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| one_sector_h(lambda[i] - i as i64 + j as i64, sector, ctx))
                .collect()
        })
        .collect();
    crate::dets::det_poly(&matrix)
}

pub fn h_window(ctx: &RingContext, lo: i64, hi: i64) -> SeriesWindow {
    SeriesWindow::build(ctx.m, ctx.n, lo, hi, |k| complete_h(k, ctx))
}

pub fn h_infinity_window(ctx: &RingContext, lo: i64, hi: i64) -> SeriesWindow {
    SeriesWindow::build(ctx.m, ctx.n, lo, hi, |k| h_infinity(k, ctx))
}

pub fn big_h_window(ctx: &RingContext, lo: i64, hi: i64) -> SeriesWindow {
    SeriesWindow::build(ctx.m, ctx.n, lo, hi, |k| big_h(k, ctx))
}

/// Memoizing providers for the determinant machinery.
pub fn big_h_seq(ctx: &RingContext) -> MemoSeq {
    let ctx = *ctx;
    MemoSeq::new(ctx.m, ctx.n, move |k| big_h(k, &ctx))
}

pub fn complete_h_seq(ctx: &RingContext) -> MemoSeq {
    let ctx = *ctx;
    MemoSeq::new(ctx.m, ctx.n, move |k| complete_h(k, &ctx))
}

pub fn h_star_seq(ctx: &RingContext) -> MemoSeq {
    let ctx = *ctx;
    MemoSeq::new(ctx.m, ctx.n, move |k| h_star(k, &ctx))
}

pub fn elementary_seq(ctx: &RingContext, sector: Sector) -> MemoSeq {
    let ctx = *ctx;
    MemoSeq::new(ctx.m, ctx.n, move |k| elementary_e(k, sector, &ctx))
}

pub fn elementary_star_seq(ctx: &RingContext, sector: Sector) -> MemoSeq {
    let ctx = *ctx;
    MemoSeq::new(ctx.m, ctx.n, move |k| elementary_e_star(k, sector, &ctx))
}
