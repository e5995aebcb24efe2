//! Determinants over the polynomial ring: `R_I` determinants of
//! integer-indexed sequences, Jacobi-Trudi forms, composite Schur
//! determinants and their duals in elementary polynomials, the duality of
//! mutually inverse series pairs, a minor-sum expansion identity for
//! integer matrices, and the mixed-row Kac determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alternant::split_signed;
use crate::context::{RingContext, Sector};
use crate::error::{Error, Result};
use crate::genfun;
use crate::poly::LaurentPoly;
use crate::series::SeqProvider;

/// Cofactor expansion stays exact and cheap only for small matrices.
pub const MAX_DET_SIZE: usize = 8;

/// Exact determinant by cofactor expansion along the sparsest row.
pub fn det_poly(matrix: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let size = matrix.len();
    if size == 0 {
        return Err(Error::InvalidIndex("empty matrix".into()));
    }
    if size > MAX_DET_SIZE {
        return Err(Error::SizeExceeded {
            size,
            max: MAX_DET_SIZE,
        });
    }
    for row in matrix {
        if row.len() != size {
            return Err(Error::InvalidIndex("matrix is not square".into()));
        }
    }
    let (m, n) = matrix[0][0].dims();
    let live_rows: Vec<usize> = (0..size).collect();
    let live_cols: Vec<usize> = (0..size).collect();
    Ok(det_recursive(matrix, &live_rows, &live_cols, m, n))
}

fn det_recursive(
    matrix: &[Vec<LaurentPoly>],
    rows: &[usize],
    cols: &[usize],
    m: usize,
    n: usize,
) -> LaurentPoly {
    if rows.is_empty() {
        return LaurentPoly::one(m, n);
    }
    if rows.len() == 1 {
        return matrix[rows[0]][cols[0]].clone();
    }
    // pick the sparsest live row
    let (pivot_pos, _) = rows
        .iter()
        .enumerate()
        .map(|(pos, &r)| {
            (
                pos,
                cols.iter()
                    .map(|&c| matrix[r][c].num_terms())
                    .sum::<usize>(),
            )
        })
        .min_by_key(|&(_, weight)| weight)
        .expect("nonempty");
    let pivot_row = rows[pivot_pos];
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != pivot_row).collect();

    let mut acc = LaurentPoly::zero(m, n);
    for (col_pos, &c) in cols.iter().enumerate() {
        let entry = &matrix[pivot_row][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let minor = det_recursive(matrix, &sub_rows, &sub_cols, m, n);
        let signed = if (pivot_pos + col_pos) % 2 == 0 {
            &acc + &(entry * &minor)
        } else {
            &acc - &(entry * &minor)
        };
        acc = signed;
    }
    acc
}

/// `R_I(z) = det(z_{i_a + b - 1})` for `I` of length `p`; the empty index
/// gives 1.
pub fn r_det(index: &[i64], z: &dyn SeqProvider) -> Result<LaurentPoly> {
    let p = index.len();
    let (m, n) = z.dims();
    if p == 0 {
        return Ok(LaurentPoly::one(m, n));
    }
    if p > MAX_DET_SIZE {
        return Err(Error::SizeExceeded {
            size: p,
            max: MAX_DET_SIZE,
        });
    }
    let matrix: Vec<Vec<LaurentPoly>> = index
        .iter()
        .map(|&i| (0..p as i64).map(|b| z.at(i + b)).collect())
        .collect();
    det_poly(&matrix)
}

/// `det(H_{lambda_i - i + j})` of the given size over a caller-supplied
/// sequence; `lambda` is padded with trailing zeros up to `size`.
pub fn jacobi_trudi_with(lambda: &[i64], size: usize, z: &dyn SeqProvider) -> Result<LaurentPoly> {
    if lambda.len() > size {
        return Err(Error::InvalidIndex(format!(
            "sequence of length {} does not fit size {}",
            lambda.len(),
            size
        )));
    }
    let mut padded = lambda.to_vec();
    padded.resize(size, 0);
    let index: Vec<i64> = padded
        .iter()
        .enumerate()
        .map(|(i, &l)| l - i as i64)
        .collect();
    r_det(&index, z)
}

/// Jacobi-Trudi determinant over the universal generators `H_k`.
pub fn jacobi_trudi_e(lambda: &[i64], size: usize, ctx: &RingContext) -> Result<LaurentPoly> {
    jacobi_trudi_with(lambda, size, &genfun::big_h_seq(ctx))
}

/// Row recipe for the block determinants below: `Star` rows read the
/// sequence at `sigma_i + i - j`, `Plain` rows at `sigma_i - i + j`.
#[derive(Clone, Copy)]
enum RowKind {
    Star,
    Plain,
}

fn block_det(
    rows: &[(RowKind, i64, usize)],
    providers: &[&dyn SeqProvider],
) -> Result<LaurentPoly> {
    let size = rows.len();
    let (m, n) = providers[0].dims();
    if size == 0 {
        return Ok(LaurentPoly::one(m, n));
    }
    if size > MAX_DET_SIZE {
        return Err(Error::SizeExceeded {
            size,
            max: MAX_DET_SIZE,
        });
    }
    let matrix: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .enumerate()
        .map(|(i, &(kind, sigma, which))| {
            let provider = providers[which];
            (0..size)
                .map(|j| match kind {
                    RowKind::Star => provider.at(sigma + i as i64 - j as i64),
                    RowKind::Plain => provider.at(sigma - i as i64 + j as i64),
                })
                .collect()
        })
        .collect();
    det_poly(&matrix)
}

fn check_partition(p: &[i64]) -> Result<()> {
    if !p.windows(2).all(|w| w[0] >= w[1]) || p.iter().any(|&v| v < 1) {
        return Err(Error::InvalidIndex(format!(
            "expected a partition with positive parts, got {:?}",
            p
        )));
    }
    Ok(())
}

/// Conjugate (transposed) partition.
pub fn conjugate(p: &[i64]) -> Vec<i64> {
    if p.is_empty() {
        return Vec::new();
    }
    (1..=p[0])
        .map(|c| p.iter().filter(|&&v| v >= c).count() as i64)
        .collect()
}

/// The composite Schur determinant: `l(nu)` rows of `h*` indexed by the
/// reversed `nu` with entries decreasing along the row, then `l(tau)` rows
/// of `h`. Equals the Euler character of `(tau, 0...0, -nu reversed)`.
pub fn composite_schur(tau: &[i64], nu: &[i64], ctx: &RingContext) -> Result<LaurentPoly> {
    if ctx.n != 0 {
        return Err(Error::InvalidIndex(
            "composite determinants live in an n = 0 context".into(),
        ));
    }
    check_partition(tau)?;
    check_partition(nu)?;
    if tau.len() + nu.len() > ctx.m {
        return Err(Error::InvalidIndex(format!(
            "l(tau) + l(nu) = {} exceeds m = {}",
            tau.len() + nu.len(),
            ctx.m
        )));
    }
    let h = genfun::complete_h_seq(ctx);
    let hstar = genfun::h_star_seq(ctx);
    let rows = mixed_rows(nu, tau);
    block_det(&rows, &[&hstar, &h])
}

/// Same determinant in elementary polynomials and conjugate partitions.
pub fn dual_composite(tau: &[i64], nu: &[i64], ctx: &RingContext) -> Result<LaurentPoly> {
    if ctx.n != 0 {
        return Err(Error::InvalidIndex(
            "composite determinants live in an n = 0 context".into(),
        ));
    }
    check_partition(tau)?;
    check_partition(nu)?;
    if tau.len() + nu.len() > ctx.m {
        return Err(Error::InvalidIndex(format!(
            "l(tau) + l(nu) = {} exceeds m = {}",
            tau.len() + nu.len(),
            ctx.m
        )));
    }
    let e = genfun::elementary_seq(ctx, Sector::X);
    let estar = genfun::elementary_star_seq(ctx, Sector::X);
    let rows = mixed_rows(&conjugate(nu), &conjugate(tau));
    block_det(&rows, &[&estar, &e])
}

/// Rows of a `(star from nu, plain from tau)` block determinant: the star
/// block walks `nu` from its last part up.
fn mixed_rows(nu: &[i64], tau: &[i64]) -> Vec<(RowKind, i64, usize)> {
    let mut rows: Vec<(RowKind, i64, usize)> = Vec::with_capacity(nu.len() + tau.len());
    for &part in nu.iter().rev() {
        rows.push((RowKind::Star, part, 0));
    }
    for &part in tau.iter() {
        rows.push((RowKind::Plain, part, 1));
    }
    rows
}

fn max_probed_index(rows: &[(RowKind, i64, usize)], which: usize) -> i64 {
    let size = rows.len() as i64;
    rows.iter()
        .enumerate()
        .filter(|(_, &(_, _, w))| w == which)
        .map(|(i, &(kind, sigma, _))| match kind {
            // Star rows peak at column 1, plain rows at the last column.
            RowKind::Star => sigma + i as i64,
            RowKind::Plain => sigma - i as i64 + size - 1,
        })
        .max()
        .unwrap_or(i64::MIN)
}

/// Verifies the duality of two mutually inverse series pairs: the
/// `(a*, a)` block determinant in `(nu, mu)` equals
/// `(-1)^(|nu| + |mu|)` times the `(b*, b)` determinant in the conjugate
/// partitions. Conventions (`at(0) = 1`, zero below) are checked on all
/// four providers; window depth must cover every probed index.
pub fn conj_duality_check(
    a: &dyn SeqProvider,
    a_star: &dyn SeqProvider,
    b: &dyn SeqProvider,
    b_star: &dyn SeqProvider,
    nu: &[i64],
    mu: &[i64],
    depth: i64,
) -> Result<bool> {
    check_partition(nu).and(check_partition(mu)).map_err(|_| {
        Error::InvalidIndex(format!("expected partitions, got nu {:?}, mu {:?}", nu, mu))
    })?;
    let (m, n) = a.dims();
    for (name, seq) in [("a", a), ("a*", a_star), ("b", b), ("b*", b_star)] {
        if !seq.at(0).is_one() {
            return Err(Error::ConventionViolated(format!("{}_0 != 1", name)));
        }
        if !seq.at(-1).is_zero() || !seq.at(-3).is_zero() {
            return Err(Error::ConventionViolated(format!(
                "{}_k != 0 below zero",
                name
            )));
        }
        if seq.dims() != (m, n) {
            return Err(Error::ContextMismatch {
                left: (m, n),
                right: seq.dims(),
            });
        }
    }

    let lhs_rows = mixed_rows(nu, mu);
    let rhs_rows = mixed_rows(&conjugate(nu), &conjugate(mu));
    let needed = max_probed_index(&lhs_rows, 0)
        .max(max_probed_index(&lhs_rows, 1))
        .max(max_probed_index(&rhs_rows, 0))
        .max(max_probed_index(&rhs_rows, 1));
    if needed > depth {
        return Err(Error::ConventionViolated(format!(
            "window depth {} too small for probed index {}",
            depth, needed
        )));
    }

    let lhs = block_det(&lhs_rows, &[a_star, a])?;
    let rhs = block_det(&rhs_rows, &[b_star, b])?;
    let weight: i64 = nu.iter().sum::<i64>() + mu.iter().sum::<i64>();
    let signed_rhs = if weight % 2 == 0 { rhs } else { -&rhs };
    Ok(lhs == signed_rhs)
}

/// Integer determinant by cofactor expansion (matrices stay tiny here).
pub fn det_int(matrix: &[Vec<BigInt>]) -> BigInt {
    let size = matrix.len();
    if size == 0 {
        return BigInt::one();
    }
    if size == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (col, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * det_int(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Checks the minor-sum expansion of an `n x (n+1)` integer matrix: the
/// determinant with column `l` deleted equals the sum, over all row
/// subsets `I` of size `l - 1`, of the determinant whose rows come from
/// the last-column-deleted matrix on `I` and from the
/// first-column-deleted matrix elsewhere.
pub fn minor_sum_check(a: &[Vec<BigInt>], l: usize) -> Result<bool> {
    let rows = a.len();
    if rows == 0 || a.iter().any(|r| r.len() != rows + 1) {
        return Err(Error::InvalidIndex("expected an n x (n+1) matrix".into()));
    }
    if l < 1 || l > rows + 1 {
        return Err(Error::InvalidIndex(format!(
            "column index {} out of 1..={}",
            l,
            rows + 1
        )));
    }

    let delete_col = |col: usize| -> Vec<Vec<BigInt>> {
        a.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect()
    };
    let lhs = det_int(&delete_col(l - 1));

    let first_deleted = delete_col(0);
    let last_deleted = delete_col(rows);
    let mut rhs = BigInt::zero();
    // all subsets of {0..rows-1} of size l-1
    for mask in 0u32..(1 << rows) {
        if mask.count_ones() as usize != l - 1 {
            continue;
        }
        let mixed: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    last_deleted[i].clone()
                } else {
                    first_deleted[i].clone()
                }
            })
            .collect();
        rhs += det_int(&mixed);
    }
    Ok(lhs == rhs)
}

/// The mixed-row Kac determinant: with `mu` split as
/// `(tau, 0...0, -nu reversed)`, the row sequence is the conjugate of `nu`
/// (as `h*` rows), then `lambda` (as `H` rows), then the conjugate of
/// `tau` (as `h` rows). Supersymmetric and equal to the product form for
/// full-length index pairs.
pub fn kac_k(lambda: &[i64], mu: &[i64], ctx: &RingContext) -> Result<LaurentPoly> {
    let hstar = genfun::h_star_seq(ctx);
    let big = genfun::big_h_seq(ctx);
    let h = genfun::complete_h_seq(ctx);
    kac_k_with(lambda, mu, ctx, &hstar, &big, &h)
}

/// Same determinant over caller-supplied (typically shared, memoizing)
/// sequence providers; the fast path for windowed sweeps.
pub fn kac_k_with(
    lambda: &[i64],
    mu: &[i64],
    ctx: &RingContext,
    hstar: &dyn SeqProvider,
    big: &dyn SeqProvider,
    h: &dyn SeqProvider,
) -> Result<LaurentPoly> {
    validate_kac_index(lambda, mu, ctx)?;
    let (tau, nu) = split_signed(mu)?;
    let nu_conj = conjugate(&nu);
    let tau_conj = conjugate(&tau);

    // Star rows walk the conjugate of nu from its last part up, exactly as
    // in the composite determinant; the H and h blocks keep natural order.
    let mut rows: Vec<(RowKind, i64, usize)> = Vec::new();
    for &part in nu_conj.iter().rev() {
        rows.push((RowKind::Star, part, 0));
    }
    for &part in lambda {
        rows.push((RowKind::Plain, part, 1));
    }
    for &part in &tau_conj {
        rows.push((RowKind::Plain, part, 2));
    }

    block_det(&rows, &[hstar, big, h])
}

/// Membership in `X(m, n)`: non-increasing integer sequences with
/// `|lambda| <= m`, `|mu| <= n` and `|lambda| - |mu| = m - n`.
pub fn validate_kac_index(lambda: &[i64], mu: &[i64], ctx: &RingContext) -> Result<()> {
    if !lambda.windows(2).all(|w| w[0] >= w[1]) || !mu.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndex(format!(
            "expected non-increasing sequences, got {:?}, {:?}",
            lambda, mu
        )));
    }
    if lambda.len() > ctx.m || mu.len() > ctx.n {
        return Err(Error::InvalidIndex(format!(
            "lengths ({},{}) exceed context ({},{})",
            lambda.len(),
            mu.len(),
            ctx.m,
            ctx.n
        )));
    }
    if lambda.len() as i64 - mu.len() as i64 != ctx.m as i64 - ctx.n as i64 {
        return Err(Error::InvalidIndex(format!(
            "length difference {} - {} must equal m - n = {}",
            lambda.len(),
            mu.len(),
            ctx.m as i64 - ctx.n as i64
        )));
    }
    Ok(())
}
