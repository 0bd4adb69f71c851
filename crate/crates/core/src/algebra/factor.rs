//! Factorization of univariate polynomials over the rationals.
//!
//! Squarefree decomposition over ℚ, then Zassenhaus on each squarefree part:
//! Berlekamp factorization modulo a small good prime, linear Hensel lifting
//! past a coefficient bound, and exhaustive recombination of the lifted
//! factors with exact trial division. Every step is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::kernel;
use super::ring::{PrimeField, Rationals, Ring};
use super::upoly::UPoly;

type ZPoly = Vec<BigInt>;

const CANDIDATE_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Irreducible monic factors with multiplicities, sorted by degree then
/// coefficients. Constants are dropped.
pub fn factor_rational(f: &UPoly<Rationals>) -> Vec<(UPoly<Rationals>, u32)> {
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree_integer(&to_primitive_integer(&part)) {
            out.push((from_integer(&g).monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| cmp_coeffs(a.0.coeffs(), b.0.coeffs()))
    });
    out
}

fn cmp_coeffs(a: &[BigRational], b: &[BigRational]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// True iff `f` has positive degree and no nontrivial factorization over ℚ.
pub fn is_irreducible(f: &UPoly<Rationals>) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let factors = factor_rational(f);
            factors.len() == 1 && factors[0].1 == 1
        }
    }
}

/// Clears denominators and content; the leading coefficient is made positive.
pub fn to_primitive_integer(f: &UPoly<Rationals>) -> ZPoly {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = f.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut p = primitive_part(&ints);
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter_mut().for_each(|c| *c = -c.clone());
    }
    p
}

pub fn from_integer(f: &[BigInt]) -> UPoly<Rationals> {
    UPoly::new(
        &Rationals,
        f.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    )
}

fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(f: &[BigInt]) -> ZPoly {
    let c = content(f);
    if c.is_zero() {
        return f.to_vec();
    }
    let mut p: ZPoly = f.iter().map(|x| x / &c).collect();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn reduce_mod(field: &PrimeField, f: &[BigInt]) -> UPoly<PrimeField> {
    UPoly::new(field, f.iter().map(|c| field.reduce_int(c)).collect())
}

fn lift_to_int(f: &UPoly<PrimeField>) -> ZPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect()
}

fn zadd_scaled(a: &[BigInt], b: &[BigInt], s: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero) * s)
        .collect()
}

fn zmod(f: &[BigInt], m: &BigInt) -> ZPoly {
    f.iter().map(|c| c.mod_floor(m)).collect()
}

fn symmetric_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Distinct monic irreducible factors of a monic squarefree polynomial over 𝔽_p.
pub fn berlekamp(f: &UPoly<PrimeField>) -> Vec<UPoly<PrimeField>> {
    let field = *f.field();
    let n = match f.degree() {
        None | Some(0) => return vec![],
        Some(1) => return vec![f.monic()],
        Some(n) => n,
    };
    let f = f.monic();
    let p = field.modulus();
    let xp = UPoly::x(&field).pow_mod(p as u128, &f);
    let mut rows = Vec::with_capacity(n);
    let mut r = UPoly::one(&field);
    for _ in 0..n {
        rows.push(r.clone());
        r = r.mul(&xp).rem(&f);
    }
    // Solve v·(Q - I) = 0 as (Q - I)^T v = 0.
    let m: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let q = rows[i].coeff(j);
                    if i == j {
                        field.sub(&q, &1)
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    let basis = kernel(&field, &m, n);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis {
        if factors.len() == k {
            break;
        }
        let v = UPoly::new(&field, v);
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors {
            if g.degree() == Some(1) {
                next.push(g);
                continue;
            }
            let mut rest = g;
            for s in 0..p {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let h = rest.gcd(&v.sub(&UPoly::constant(&field, s)));
                match h.degree() {
                    Some(d) if d > 0 && d < rest.degree().unwrap() => {
                        rest = rest.div_exact(&h).unwrap();
                        next.push(h);
                    }
                    Some(d) if d > 0 => break,
                    _ => {}
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                next.push(rest.monic());
            }
        }
        factors = next;
    }
    factors
}

/// Lifts `f ≡ g·h (mod p)` with `g` monic to the same congruence modulo `p^e`.
fn hensel_two(f: &[BigInt], g: &UPoly<PrimeField>, h: &UPoly<PrimeField>, e: u32) -> (ZPoly, ZPoly) {
    let field = *g.field();
    let p = BigInt::from(field.modulus());
    let (one, _, t) = g.ext_gcd(h);
    debug_assert_eq!(one.degree(), Some(0));
    let mut gz = lift_to_int(g);
    let mut hz = lift_to_int(h);
    let mut pj = p.clone();
    for _ in 1..e {
        let diff = zsub(f, &zmul(&gz, &hz));
        let err: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let err = reduce_mod(&field, &err);
        // err = dg·h + dh·g with deg dg < deg g.
        let dg = err.mul(&t).rem(g);
        let dh = err.sub(&dg.mul(h)).div_exact(g).expect("hensel step");
        let next = &pj * &p;
        gz = zmod(&zadd_scaled(&gz, &lift_to_int(&dg), &pj), &next);
        hz = zmod(&zadd_scaled(&hz, &lift_to_int(&dh), &pj), &next);
        pj = next;
    }
    (gz, hz)
}

/// Lifts a complete modular factorization of `f` (factors monic, lc(f) kept
/// apart) to monic factors modulo `p^e`.
fn hensel_multi(f: &[BigInt], factors: &[UPoly<PrimeField>], e: u32) -> Vec<ZPoly> {
    let field = *factors[0].field();
    let p = BigInt::from(field.modulus());
    let pe = p.pow(e);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(&pe).expect("leading coefficient is a unit");
        return vec![zmod(&f.iter().map(|c| c * &inv).collect::<ZPoly>(), &pe)];
    }
    let g = &factors[0];
    let lc_mod = field.reduce_int(f.last().unwrap());
    let h = factors[1..]
        .iter()
        .fold(UPoly::constant(&field, lc_mod), |acc, x| acc.mul(x));
    let (gz, hz) = hensel_two(f, g, &h, e);
    let mut out = vec![gz];
    out.extend(hensel_multi(&hz, &factors[1..], e));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn divides_exactly(g: &[BigInt], f: &[BigInt]) -> Option<ZPoly> {
    let (q, r) = from_integer(f).div_rem(&from_integer(g));
    if !r.is_zero() {
        return None;
    }
    if q.coeffs().iter().any(|c| !c.denom().is_one()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial.
pub fn factor_squarefree_integer(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len().saturating_sub(1);
    if n <= 1 {
        return if n == 1 { vec![f.to_vec()] } else { vec![] };
    }
    let lc = f.last().unwrap().clone();

    // Pick the good prime with the fewest modular factors among the first few.
    let mut best: Option<(PrimeField, Vec<UPoly<PrimeField>>)> = None;
    let mut tried = 0;
    for &p in CANDIDATE_PRIMES.iter() {
        let field = PrimeField::new(p).unwrap();
        if field.reduce_int(&lc) == 0 {
            continue;
        }
        let fp = reduce_mod(&field, f);
        if !fp.is_squarefree() {
            continue;
        }
        let facs = berlekamp(&fp);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((field, facs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (field, modular) = best.expect("no good prime below 100");

    let norm2 = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm2;
    let p = BigInt::from(field.modulus());
    let mut e = 1u32;
    while p.pow(e) <= bound {
        e += 1;
    }
    let pe = p.pow(e);
    let mut lifted = hensel_multi(f, &modular, e);

    let mut remaining = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let lcr = remaining.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lcr], |acc, &i| zmod(&zmul(&acc, &lifted[i]), &pe));
            let candidate = primitive_part(&symmetric_mod(&prod, &pe));
            if candidate.len() < 2 {
                continue;
            }
            if let Some(q) = divides_exactly(&candidate, &remaining) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, candidate, q)) => {
                found.push(candidate);
                remaining = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if remaining.len() > 1 {
        found.push(primitive_part(&remaining));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::rat;

    fn q(c: &[i64]) -> UPoly<Rationals> {
        UPoly::new(&Rationals, c.iter().map(|&v| rat(v)).collect())
    }

    fn product(factors: &[(UPoly<Rationals>, u32)]) -> UPoly<Rationals> {
        factors
            .iter()
            .fold(UPoly::one(&Rationals), |acc, (g, m)| acc.mul(&g.pow(*m)))
    }

    #[test]
    fn berlekamp_splits_mod_p() {
        let field = PrimeField::new(7).unwrap();
        // x^4 - 1 = (x-1)(x+1)(x^2+1) over F_7 (x^2+1 irreducible since 7 ≡ 3 mod 4).
        let f = UPoly::new(&field, vec![6, 0, 0, 0, 1]);
        let facs = berlekamp(&f);
        assert_eq!(facs.len(), 3);
        let prod = facs.iter().fold(UPoly::one(&field), |a, g| a.mul(g));
        assert_eq!(prod, f);
    }

    #[test]
    fn factors_swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        let f = q(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn factors_products() {
        let a = q(&[-26, -13, -1, 4]);
        let b = q(&[1, 0, 1]);
        let c = q(&[3, -2]);
        let f = a.mul(&b).mul(&c.pow(2));
        let facs = factor_rational(&f);
        assert_eq!(facs.len(), 3);
        assert_eq!(product(&facs), f.monic());
        assert!(facs.iter().any(|(g, m)| *m == 2 && g.degree() == Some(1)));
        assert!(is_irreducible(&a));
    }

    #[test]
    fn cyclotomic_split() {
        // x^12 - 1 splits into 6 cyclotomic factors.
        let mut c = vec![0; 13];
        c[0] = -1;
        c[12] = 1;
        let f = q(&c);
        let facs = factor_rational(&f);
        assert_eq!(facs.len(), 6);
        assert_eq!(product(&facs), f);
        assert!(facs.iter().all(|(g, _)| is_irreducible(g)));
    }
}
