use super::{IntegerMatrix, LatticeError};

/// Row-style Hermite normal form: returns `(H, U)` with `U · M = H`, `U`
/// unimodular, pivots positive, entries above each pivot in `0..pivot`, and
/// zero rows last.
///
/// Each column is cleared below the pivot by repeatedly moving the entry of
/// least absolute value into pivot position.
pub fn hermite_normal_form(
    m: &IntegerMatrix,
) -> Result<(IntegerMatrix, IntegerMatrix), LatticeError> {
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(m.rows());
    let mut pivot_row = 0;
    for col in 0..m.cols() {
        if pivot_row == m.rows() {
            break;
        }
        let mut has_pivot = false;
        while let Some(best) = (pivot_row..m.rows())
            .filter(|&r| h.get(r, col) != 0)
            .min_by_key(|&r| h.get(r, col).unsigned_abs())
        {
            has_pivot = true;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let p = h.get(pivot_row, col);
            let mut cleared = true;
            for r in pivot_row + 1..m.rows() {
                let q = h.get(r, col) / p;
                h.sub_row_multiple(r, pivot_row, q)?;
                u.sub_row_multiple(r, pivot_row, q)?;
                cleared &= h.get(r, col) == 0;
            }
            if cleared {
                break;
            }
        }
        if !has_pivot {
            continue;
        }
        if h.get(pivot_row, col) < 0 {
            h.negate_row(pivot_row)?;
            u.negate_row(pivot_row)?;
        }
        let p = h.get(pivot_row, col);
        for r in 0..pivot_row {
            let q = h.get(r, col).div_euclid(p);
            h.sub_row_multiple(r, pivot_row, q)?;
            u.sub_row_multiple(r, pivot_row, q)?;
        }
        pivot_row += 1;
    }
    Ok((h, u))
}

/// Rank over the rationals.
pub fn rank(m: &IntegerMatrix) -> Result<usize, LatticeError> {
    let (h, _) = hermite_normal_form(m)?;
    Ok((0..h.rows())
        .filter(|&r| h.row(r).iter().any(|&x| x != 0))
        .count())
}

/// Nonzero elementary divisors `d_1 | d_2 | ...` of the Smith normal form.
/// Only the diagonal is computed; no transforms are kept.
pub fn elementary_divisors(m: &IntegerMatrix) -> Result<Vec<i64>, LatticeError> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let p = a.get(t, t);
            for r in t + 1..rows {
                let q = a.get(r, t) / p;
                a.sub_row_multiple(r, t, q)?;
            }
            for c in t + 1..cols {
                let q = a.get(t, c) / p;
                a.sub_col_multiple(c, t, q)?;
            }
            let row_left = (t + 1..rows).find(|&r| a.get(r, t) != 0);
            let col_left = (t + 1..cols).find(|&c| a.get(t, c) != 0);
            if row_left.is_some() || col_left.is_some() {
                // A remainder smaller than the pivot exists; move the least one in.
                let (pr, pc) = min_abs_entry_cross(&a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                continue;
            }
            let p = a.get(t, t);
            let bad = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| a.get(r, c) % p != 0);
            match bad {
                Some((r, _)) => {
                    // row_t += row_r, then re-clear.
                    a.sub_row_multiple(t, r, -1)?;
                }
                None => break,
            }
        }
        diag.push(a.get(t, t).checked_abs().ok_or(LatticeError::Overflow)?);
    }
    Ok(diag)
}

fn min_abs_entry(
    a: &IntegerMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    rows.flat_map(|r| cols.clone().map(move |c| (r, c)))
        .filter(|&(r, c)| a.get(r, c) != 0)
        .min_by_key(|&(r, c)| a.get(r, c).unsigned_abs())
}

fn min_abs_entry_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let column = (t..a.rows()).map(|r| (r, t));
    let row = (t + 1..a.cols()).map(|c| (t, c));
    column
        .chain(row)
        .filter(|&(r, c)| a.get(r, c) != 0)
        .min_by_key(|&(r, c)| a.get(r, c).unsigned_abs())
        .expect("pivot cross has a nonzero entry")
}
