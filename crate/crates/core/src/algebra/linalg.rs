//! Exact Gaussian elimination over a field.

use super::ring::Field;

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).unwrap();
        for j in c..cols {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                let t = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// A basis of the right kernel `{x : m x = 0}`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(field, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&work[row][f]);
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).unwrap();
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..n {
                let t = field.mul(&factor, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
    }
    det
}

pub fn mat_vec<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
        })
        .collect()
}
