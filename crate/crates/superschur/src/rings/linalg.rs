//! Exact linear algebra for the rank and expansion checks: sparse
//! fraction-free row reduction over the integers for ranks (coordinate
//! matrices of polynomial families are sparse), dense `BigRational`
//! elimination for the small expansion solves.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

pub type Rat = BigRational;

pub fn rat(value: &BigInt) -> Rat {
    Rat::from_integer(value.clone())
}

/// Divides a sparse row by the gcd of its entries.
fn strip_content(row: &mut BTreeMap<usize, BigInt>) {
    let mut content = BigInt::zero();
    for value in row.values() {
        content = content.gcd(value);
    }
    if !content.is_zero() && content != BigInt::from(1) {
        for value in row.values_mut() {
            *value = &*value / &content;
        }
    }
}

/// Solves `sum_k c_k * rows[k] = target` over the rationals by sparse
/// integer row reduction, tracking each pivot row's expression in the
/// original rows. Free coefficients come out zero; `None` when the
/// target is outside the span.
pub fn sparse_solve(
    rows: Vec<BTreeMap<usize, BigInt>>,
    target: BTreeMap<usize, BigInt>,
) -> Option<Vec<Rat>> {
    let k = rows.len();
    // pivot rows keyed by their leading column, each carrying its exact
    // expression over the original rows
    let mut pivots: BTreeMap<usize, (BTreeMap<usize, BigInt>, Vec<Rat>)> = BTreeMap::new();

    let reduce_step = |row: &mut BTreeMap<usize, BigInt>,
                       combo: &mut [Rat],
                       pivot: &BTreeMap<usize, BigInt>,
                       pivot_combo: &[Rat],
                       lead: usize| {
        let p = pivot[&lead].clone();
        let r = row[&lead].clone();
        for value in row.values_mut() {
            *value = &*value * &p;
        }
        for (col, value) in pivot {
            let delta = value * &r;
            match row.entry(*col) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        let p_rat = rat(&p);
        let r_rat = rat(&r);
        for (c, pc) in combo.iter_mut().zip(pivot_combo) {
            *c = &(&*c * &p_rat) - &(pc * &r_rat);
        }
    };

    let normalize = |row: &mut BTreeMap<usize, BigInt>, combo: &mut [Rat]| {
        let mut content = BigInt::zero();
        for value in row.values() {
            content = content.gcd(value);
        }
        if !content.is_zero() && content != BigInt::from(1) {
            for value in row.values_mut() {
                *value = &*value / &content;
            }
            let c = rat(&content);
            for value in combo.iter_mut() {
                *value = &*value / &c;
            }
        }
    };

    for (index, mut row) in rows.into_iter().enumerate() {
        let mut combo = vec![Rat::zero(); k];
        combo[index] = Rat::from_integer(BigInt::from(1));
        while let Some((&lead, _)) = row.iter().next() {
            match pivots.get(&lead) {
                None => {
                    normalize(&mut row, &mut combo);
                    pivots.insert(lead, (row, combo));
                    break;
                }
                Some((pivot, pivot_combo)) => {
                    let pivot_combo = pivot_combo.clone();
                    let pivot = pivot.clone();
                    reduce_step(&mut row, &mut combo, &pivot, &pivot_combo, lead);
                    normalize(&mut row, &mut combo);
                }
            }
        }
    }

    // reduce the target, tracking t = scale * target + sum gamma_j rows_j
    let mut t = target;
    let mut scale = Rat::from_integer(BigInt::from(1));
    let mut gamma = vec![Rat::zero(); k];
    while let Some((&lead, _)) = t.iter().next() {
        let (pivot, pivot_combo) = pivots.get(&lead)?;
        let p = pivot[&lead].clone();
        let r = t[&lead].clone();
        for value in t.values_mut() {
            *value = &*value * &p;
        }
        for (col, value) in pivot {
            let delta = value * &r;
            match t.entry(*col) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        let p_rat = rat(&p);
        let r_rat = rat(&r);
        scale = &scale * &p_rat;
        for (g, pc) in gamma.iter_mut().zip(pivot_combo) {
            *g = &(&*g * &p_rat) - &(pc * &r_rat);
        }
        // strip integer content of t, rescaling the bookkeeping
        let mut content = BigInt::zero();
        for value in t.values() {
            content = content.gcd(value);
        }
        if !content.is_zero() && content != BigInt::from(1) {
            for value in t.values_mut() {
                *value = &*value / &content;
            }
            let c = rat(&content);
            scale = &scale / &c;
            for g in gamma.iter_mut() {
                *g = &*g / &c;
            }
        }
    }
    // 0 = scale * target + sum gamma_j rows_j  =>  target = sum (-gamma/scale) rows
    Some(gamma.into_iter().map(|g| -&(&g / &scale)).collect())
}

/// Rank of a family of sparse integer vectors by row reduction with
/// cross-multiplication; row contents are stripped to keep entries small.
pub fn sparse_rank(rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        strip_content(&mut row);
        while let Some((&lead, _)) = row.iter().next() {
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(pivot) => {
                    let p = pivot[&lead].clone();
                    let r = row[&lead].clone();
                    // row <- p * row - r * pivot, eliminating `lead`
                    for value in row.values_mut() {
                        *value = &*value * &p;
                    }
                    for (col, value) in pivot {
                        let delta = value * &r;
                        match row.entry(*col) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(-delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() -= delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                    strip_content(&mut row);
                }
            }
        }
    }
    pivots.len()
}

/// Rank of a row-major matrix.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for r in pivot_row + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            for c in col..ncols {
                let delta = &rows[pivot_row][c] * &factor;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    pivot_row
}

/// Solves `sum_k x_k * columns[k] = target` exactly; free variables are
/// set to zero. `None` when the system is inconsistent.
pub fn solve(columns: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let dim = target.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == dim));

    let mut aug: Vec<Vec<Rat>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rat> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pivot_row = 0;
    for col in 0..k {
        let Some(found) = (pivot_row..dim).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, found);
        let pivot = aug[pivot_row][col].clone();
        for r in 0..dim {
            if r == pivot_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &pivot;
            for c in col..=k {
                let delta = &aug[pivot_row][c] * &factor;
                aug[r][c] = &aug[r][c] - &delta;
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
        if pivot_row == dim {
            break;
        }
    }

    for row in aug.iter().skip(pivot_row) {
        if !row[k].is_zero() {
            return None;
        }
    }

    let mut solution = vec![Rat::zero(); k];
    for &(r, c) in &pivots {
        solution[c] = &aug[r][k] / &aug[r][c];
    }
    Some(solution)
}
