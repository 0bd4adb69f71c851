//! Exhaustive point counts over prime fields.

use std::thread;

use super::{Pencil, PencilError, PlaneData};
use crate::algebra::linalg::rank;
use crate::algebra::ring::is_prime;
use crate::algebra::PrimeField;

fn reduce_matrices(p: &Pencil, f: &PrimeField) -> Result<Vec<Vec<Vec<u64>>>, PencilError> {
    p.matrices()
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|q| f.reduce_rational(q).ok_or(PencilError::BadPrime(f.modulus())))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn field_for(q: u64) -> Result<PrimeField, PencilError> {
    if !is_prime(q) {
        return Err(PencilError::BadPrime(q));
    }
    PrimeField::new(q).ok_or(PencilError::BadPrime(q))
}

/// Normalized representative number `idx` of `P^{dim}(F_q)`: points with
/// leading 1 in position `i` come in blocks of `q^{dim-i}`.
fn projective_point(mut idx: u64, dim: usize, q: u64, out: &mut [u64]) {
    let mut lead = 0;
    loop {
        let block = q.pow((dim - lead) as u32);
        if idx < block {
            break;
        }
        idx -= block;
        lead += 1;
    }
    for x in out.iter_mut().take(lead) {
        *x = 0;
    }
    out[lead] = 1;
    for j in (lead + 1..=dim).rev() {
        out[j] = idx % q;
        idx /= q;
    }
}

fn projective_size(dim: usize, q: u64) -> u64 {
    (0..=dim as u32).map(|i| q.pow(i)).sum()
}

/// Counts indices in `0..total` satisfying `pred`, split across threads.
fn parallel_count(total: u64, pred: impl Fn(u64) -> bool + Sync) -> u64 {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(16) as u64;
    let chunk = total.div_ceil(workers).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let pred = &pred;
                s.spawn(move || {
                    let lo = (w * chunk).min(total);
                    let hi = ((w + 1) * chunk).min(total);
                    (lo..hi).filter(|&i| pred(i)).count() as u64
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).sum()
    })
}

/// Number of `F_q`-points of `P^{n-1}` on all quadrics `ᵗx A_k x`.
pub fn base_locus_count(p: &Pencil, q: u64) -> Result<u64, PencilError> {
    let f = field_for(q)?;
    let mats = reduce_matrices(p, &f)?;
    let n = p.n();
    let total = projective_size(n - 1, q);
    Ok(parallel_count(total, |idx| {
        let mut x = vec![0u64; n];
        projective_point(idx, n - 1, q, &mut x);
        mats.iter().all(|m| {
            let mut acc = 0u64;
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                let mut row = 0u64;
                for j in 0..n {
                    row = (row + m[i][j] * x[j]) % q;
                }
                acc = (acc + x[i] * row) % q;
            }
            acc == 0
        })
    }))
}

/// Number of `F_q`-points of the parameter plane where `A_λ` has rank at most 3.
pub fn rank3_on_plane_count(p: &Pencil, plane: &PlaneData, q: u64) -> Result<u64, PencilError> {
    let f = field_for(q)?;
    let mats = reduce_matrices(p, &f)?;
    let basis: Vec<Vec<u64>> = plane
        .basis
        .iter()
        .map(|b| {
            b.iter()
                .map(|x| f.reduce_rational(x).ok_or(PencilError::BadPrime(q)))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let dim = basis.len() - 1;
    let n = p.n();
    let total = projective_size(dim, q);
    Ok(parallel_count(total, |idx| {
        let mut x = vec![0u64; dim + 1];
        projective_point(idx, dim, q, &mut x);
        let lambda: Vec<u64> = (0..n)
            .map(|k| basis.iter().zip(&x).fold(0, |acc, (b, xi)| (acc + b[k] * xi) % q))
            .collect();
        let a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| mats.iter().zip(&lambda).fold(0, |acc, (m, l)| (acc + m[i][j] * l) % q))
                    .collect()
            })
            .collect();
        rank(&f, &a) <= 3
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{rat, ratio};
    use crate::pencil::{plane_px, rational_vector};

    #[test]
    fn enumerates_projective_space() {
        let q = 5;
        let total = projective_size(2, q);
        assert_eq!(total, 31);
        let mut seen = std::collections::HashSet::new();
        let mut x = [0u64; 3];
        for i in 0..total {
            projective_point(i, 2, q, &mut x);
            let lead = x.iter().position(|&v| v != 0).unwrap();
            assert_eq!(x[lead], 1);
            assert!(seen.insert(x));
        }
    }

    #[test]
    fn shared_zero_row_gives_base_point() {
        let mut mats = Pencil::example().matrices().to_vec();
        for m in &mut mats {
            for i in 0..5 {
                m[0][i] = rat(0);
                m[i][0] = rat(0);
            }
        }
        let p = Pencil::new(mats).unwrap();
        assert!(base_locus_count(&p, 7).unwrap() >= 1);
    }

    #[test]
    fn repeated_quadric_counts_its_points() {
        // x0² + x1² + x2² + x3² + x4² repeated; over F_3 the count is that quadric's.
        let id: Vec<Vec<_>> = (0..5).map(|i| (0..5).map(|j| rat((i == j) as i64)).collect()).collect();
        let p = Pencil::new(vec![id; 5]).unwrap();
        let q = 3u64;
        let mut brute = 0;
        let mut x = [0u64; 5];
        for i in 0..projective_size(4, q) {
            projective_point(i, 4, q, &mut x);
            if x.iter().map(|v| v * v).sum::<u64>() % q == 0 {
                brute += 1;
            }
        }
        assert!(brute > 0);
        assert_eq!(base_locus_count(&p, q).unwrap(), brute);
    }

    #[test]
    fn diagonal_plane_is_all_low_rank() {
        let mats = (0..5)
            .map(|k| {
                (0..5)
                    .map(|i| (0..5).map(|j| rat((i == j && j == k) as i64)).collect())
                    .collect()
            })
            .collect();
        let p = Pencil::new(mats).unwrap();
        let plane = PlaneData {
            forms: [rational_vector(&[0, 0, 0, 1, 0]), rational_vector(&[0, 0, 0, 0, 1])],
            basis: vec![
                rational_vector(&[1, 0, 0, 0, 0]),
                rational_vector(&[0, 1, 0, 0, 0]),
                rational_vector(&[0, 0, 1, 0, 0]),
            ],
        };
        assert_eq!(rank3_on_plane_count(&p, &plane, 7).unwrap(), 57);
    }

    #[test]
    fn bad_primes() {
        let p = Pencil::example();
        assert_eq!(base_locus_count(&p, 30), Err(PencilError::BadPrime(30)));
        let mut mats = p.matrices().to_vec();
        mats[0][0][0] = ratio(1, 7);
        let p = Pencil::new(mats).unwrap();
        let z = rational_vector(&[1, 0, 0, 0, 0]);
        let w = rational_vector(&[0, 1, 0, 0, 0]);
        let plane = plane_px(&p, &z, &w).unwrap();
        assert_eq!(rank3_on_plane_count(&p, &plane, 7), Err(PencilError::BadPrime(7)));
    }
}
