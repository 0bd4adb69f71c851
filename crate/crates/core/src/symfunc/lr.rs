//! Littlewood–Richardson coefficients by explicit skew-tableau enumeration.

use std::collections::BTreeMap;

use super::partition::Partition;

/// Optional bound on the shapes produced: at most `rows` rows and `cols` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShapeBound {
    pub rows: usize,
    pub cols: u32,
}

/// `{ν : c^ν_{λμ}}` with zero coefficients omitted.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    lr_coefficients_bounded(lambda, mu, None)
}

/// As [`lr_coefficients`], keeping only shapes inside `bound`.
pub fn lr_coefficients_bounded(
    lambda: &Partition,
    mu: &Partition,
    bound: Option<ShapeBound>,
) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if mu.is_empty() {
        if bound.is_none_or(|b| lambda.fits_box(b.rows, b.cols)) {
            out.insert(lambda.clone(), 1);
        }
        return out;
    }
    for nu in candidate_shapes(lambda, mu, bound) {
        let c = count_lr_tableaux(&nu, lambda, mu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Shapes `ν ⊇ λ` with `|ν| = |λ|+|μ|`, each row growing by at most `μ₁`.
fn candidate_shapes(lambda: &Partition, mu: &Partition, bound: Option<ShapeBound>) -> Vec<Partition> {
    let target = lambda.size() + mu.size();
    let mut max_rows = lambda.len() + mu.len();
    let mut max_cols = lambda.part(0) + mu.part(0);
    if let Some(b) = bound {
        max_rows = max_rows.min(b.rows);
        max_cols = max_cols.min(b.cols);
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        remaining: u32,
        lambda: &Partition,
        mu1: u32,
        max_rows: usize,
        max_cols: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let mut parts = cur.clone();
            parts.extend((i..lambda.len()).map(|j| lambda.part(j)));
            out.push(Partition::from_slice(&parts));
            return;
        }
        if i == max_rows {
            return;
        }
        let lo = lambda.part(i);
        let prev = if i == 0 { max_cols } else { cur[i - 1] };
        let hi = prev.min(lo + mu1).min(max_cols);
        if hi < lo {
            return;
        }
        for v in (lo..=hi).rev() {
            let added = v - lo;
            if added > remaining {
                continue;
            }
            cur.push(v);
            rec(i + 1, remaining - added, lambda, mu1, max_rows, max_cols, cur, out);
            cur.pop();
        }
    }
    let extra = target - lambda.size();
    if lambda.len() > max_rows || lambda.part(0) > max_cols {
        return out;
    }
    rec(0, extra, lambda, mu.part(0), max_rows, max_cols, &mut cur, &mut out);
    out.retain(|nu| nu.contains(lambda) && nu.size() == target);
    out
}

/// Number of LR tableaux of skew shape `ν/λ` and content `μ`: semistandard
/// fillings whose reverse reading word (right to left, top to bottom) is a
/// lattice word.
pub fn count_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    // Cells in reading order.
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filling: Vec<Vec<u32>> = (0..nu.len()).map(|r| vec![0; nu.part(r) as usize]).collect();
    let mut counts = vec![0u32; mu.len() + 1];
    let mut total = 0;
    fill(0, &cells, lambda, mu, &mut filling, &mut counts, &mut total);
    total
}

fn fill(
    idx: usize,
    cells: &[(usize, u32)],
    lambda: &Partition,
    mu: &Partition,
    filling: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    let c_us = c as usize;
    let mut max_v = mu.len() as u32;
    // Weakly increasing along rows: the cell to the right is already filled.
    if c_us + 1 < filling[r].len() {
        max_v = max_v.min(filling[r][c_us + 1]);
    }
    // Strictly increasing down columns.
    let min_v = if r > 0 && c >= lambda.part(r - 1) {
        filling[r - 1][c_us] + 1
    } else {
        1
    };
    for v in min_v..=max_v {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        filling[r][c_us] = v;
        fill(idx + 1, cells, lambda, mu, filling, counts, total);
        filling[r][c_us] = 0;
        counts[vi] -= 1;
    }
}
