//! Oracles shared by the integration tests. Nothing here calls into the
//! Schubert-calculus or projective-bundle code: integrals are computed by
//! torus localization, ranks by plain elimination.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use symmetroid_core::algebra::ring::rat;
use symmetroid_core::algebra::{Field, MPoly, Rationals};
use symmetroid_core::bott::{bott_cohomology, BottInput, BottOutcome};
use symmetroid_core::chow::{grassmann_ring, integrate, RingClass};
use symmetroid_core::pencil::{singular_points, singular_points_with_order, symmetroid, Pencil};
use symmetroid_core::symfunc::{lr_coefficients, segre_from_chern, ChernSeries, Partition};

pub type Q = BigRational;

/// Generic torus weights on `V`.
pub const WEIGHTS: [i64; 7] = [0, 3, 7, 12, 20, 33, 51];

/// Gaussian elimination; returns the row echelon form and its rank.
pub fn echelon<F: Field>(f: &F, mut m: Vec<Vec<F::Elem>>) -> (Vec<Vec<F::Elem>>, usize, F::Elem) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = f.one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            det = f.zero();
            continue;
        };
        if p != r {
            m.swap(p, r);
            det = f.neg(&det);
        }
        det = f.mul(&det, &m[r][c]);
        let inv = f.inv(&m[r][c]).unwrap();
        for i in r + 1..rows {
            if f.is_zero(&m[i][c]) {
                continue;
            }
            let factor = f.mul(&m[i][c], &inv);
            for j in c..cols {
                let t = f.mul(&factor, &m[r][j]);
                m[i][j] = f.sub(&m[i][j], &t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    (m, r, det)
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    echelon(f, m.to_vec()).1
}

pub fn det<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let (_, r, d) = echelon(f, m.to_vec());
    if r < m.len() {
        f.zero()
    } else {
        d
    }
}

/// `e_d` of a list of numbers.
pub fn elementary(roots: &[Q], d: usize) -> Q {
    let mut e = vec![Q::zero(); d + 1];
    e[0] = Q::one();
    for x in roots {
        for i in (1..=d).rev() {
            let t = &e[i - 1] * x;
            e[i] += t;
        }
    }
    e[d].clone()
}

/// Schur polynomial `s_λ(x)` by the bialternant formula; the `x` must be distinct.
pub fn schur(lambda: &[u32], x: &[Q]) -> Q {
    let k = x.len();
    if lambda.iter().filter(|&&p| p > 0).count() > k {
        return Q::zero();
    }
    let part = |j: usize| lambda.get(j).copied().unwrap_or(0) as usize;
    let pow = |b: &Q, e: usize| (0..e).fold(Q::one(), |acc, _| acc * b);
    let num: Vec<Vec<Q>> = x
        .iter()
        .map(|xi| (0..k).map(|j| pow(xi, part(j) + k - 1 - j)).collect())
        .collect();
    let den: Vec<Vec<Q>> = x
        .iter()
        .map(|xi| (0..k).map(|j| pow(xi, k - 1 - j)).collect())
        .collect();
    det(&Rationals, &num) / det(&Rationals, &den)
}

/// A torus-fixed point of `G(k, n)`: the weights of the universal sub and
/// quotient bundles and the equivariant Euler class of the tangent space.
pub struct FixedPoint {
    pub sub: Vec<Q>,
    pub quot: Vec<Q>,
    pub tangent: Vec<Q>,
}

impl FixedPoint {
    /// Chern roots of the dual of the universal subbundle.
    pub fn sub_dual(&self) -> Vec<Q> {
        self.sub.iter().map(|t| -t).collect()
    }

    /// Schubert class `σ_λ = s_λ(S*)` at this point.
    pub fn sigma(&self, lambda: &[u32]) -> Q {
        schur(lambda, &self.sub_dual())
    }

    pub fn euler(&self) -> Q {
        self.tangent.iter().product()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

pub fn fixed_points(k: usize, n: usize) -> Vec<FixedPoint> {
    let t: Vec<Q> = WEIGHTS[..n].iter().map(|&w| rat(w)).collect();
    subsets(n, k)
        .into_iter()
        .map(|s| {
            let sub: Vec<Q> = s.iter().map(|&i| t[i].clone()).collect();
            let quot: Vec<Q> = (0..n).filter(|j| !s.contains(j)).map(|j| t[j].clone()).collect();
            let tangent = sub.iter().flat_map(|a| quot.iter().map(move |b| b - a)).collect();
            FixedPoint { sub, quot, tangent }
        })
        .collect()
}

/// `∫_{G(k,n)} f` for an equivariant lift `f` of a top-degree class.
pub fn grassmann_integral(k: usize, n: usize, f: impl Fn(&FixedPoint) -> Q) -> Q {
    fixed_points(k, n).iter().map(|p| f(p) / p.euler()).sum()
}

/// `∫_{P(E)} f(p, H, T_rel)` where `E` has weights `bundle(p)` at each fixed
/// point `p` of `G(k,n)` and `P(E)` parametrizes lines; `H = c₁(O(1))`.
pub fn proj_bundle_integral(
    k: usize,
    n: usize,
    bundle: impl Fn(&FixedPoint) -> Vec<Q>,
    f: impl Fn(&FixedPoint, &Q, &[Q]) -> Q,
) -> Q {
    let mut total = Q::zero();
    for p in fixed_points(k, n) {
        let w = bundle(&p);
        for (l, wl) in w.iter().enumerate() {
            let rel: Vec<Q> = w
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != l)
                .map(|(_, wm)| wm - wl)
                .collect();
            let euler = p.euler() * rel.iter().product::<Q>();
            total += f(&p, &(-wl), &rel) / euler;
        }
    }
    total
}

/// `binom(-m, b)`, the coefficients of `(1+H)^{-m}`.
pub fn negative_binomial(m: i64, b: usize) -> Q {
    let mut c = Q::one();
    for i in 0..b as i64 {
        c = c * rat(-m - i) / rat(i + 1);
    }
    c
}

/// Weights of `E = (S²V* → S²S)` kernel dual on `G(3,5)`, `S` the dual of the sub.
pub fn kernel_bundle_roots(p: &FixedPoint) -> Vec<Q> {
    let all: Vec<Q> = p.sub.iter().chain(&p.quot).cloned().collect();
    let mut out = Vec::new();
    for a in 0..all.len() {
        for b in a..all.len() {
            if a < p.sub.len() && b < p.sub.len() {
                continue;
            }
            out.push(&all[a] + &all[b]);
        }
    }
    out
}

/// Coefficients of a class of degree `d` on `G(k,n)` in the Schubert basis,
/// via the duality pairing.
pub fn schubert_coefficients(k: usize, n: usize, d: u32, f: impl Fn(&FixedPoint) -> Q) -> BTreeMap<Vec<u32>, Q> {
    let cols = (n - k) as u32;
    let mut out = BTreeMap::new();
    for lam in Partition::all_in_box(k, cols) {
        if lam.size() != d {
            continue;
        }
        let dual = lam.box_complement(k, cols).unwrap();
        let c = grassmann_integral(k, n, |p| f(p) * p.sigma(dual.parts()));
        if !c.is_zero() {
            out.insert(lam.parts().to_vec(), c);
        }
    }
    out
}

// Property predicates, shared by the proptest suites and the acceptance run.

pub fn poincare_duality(k: usize, n: usize) -> bool {
    let g = grassmann_ring(k, n).unwrap();
    let cols = (n - k) as u32;
    let dim = k as u32 * cols;
    let basis = Partition::all_in_box(k, cols);
    for a in &basis {
        for b in &basis {
            if a.size() + b.size() != dim {
                continue;
            }
            let prod = RingClass::schubert(&g, a)
                .unwrap()
                .multiply(&RingClass::schubert(&g, b).unwrap())
                .unwrap();
            let want = if a.box_complement(k, cols).as_ref() == Some(b) {
                rat(1)
            } else {
                rat(0)
            };
            if integrate(&prod).unwrap() != want {
                return false;
            }
        }
    }
    true
}

pub fn lr_symmetric(a: &Partition, b: &Partition) -> bool {
    lr_coefficients(a, b) == lr_coefficients(b, a)
}

fn lr_times(x: &BTreeMap<Partition, u64>, c: &Partition, left: bool) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for (p, m) in x {
        let prod = if left {
            lr_coefficients(c, p)
        } else {
            lr_coefficients(p, c)
        };
        for (q, n) in prod {
            *out.entry(q).or_insert(0) += m * n;
        }
    }
    out
}

pub fn lr_associative(a: &Partition, b: &Partition, c: &Partition) -> bool {
    lr_times(&lr_coefficients(a, b), c, false) == lr_times(&lr_coefficients(b, c), a, true)
}

/// `c · s = 1` through degree `d` for a generic bundle of the given rank.
pub fn chern_times_segre_is_one(rank: usize, d: u32) -> bool {
    let c = ChernSeries::generic(rank, d);
    let s = segre_from_chern(&c, d).unwrap();
    let prod = c.mul(&s);
    prod.constant_term().is_one() && (1..=d).all(|k| prod.component(k).is_zero())
}

fn outcome_pair(o: &BottOutcome) -> Option<(usize, u64)> {
    match o {
        BottOutcome::AllVanish => None,
        BottOutcome::Cohomology { degree, dimension, .. } => Some((*degree, *dimension)),
    }
}

/// `H^i(V) ≅ H^{N-i}(V* ⊗ ω)^*`.
pub fn serre_mirror(input: &BottInput) -> bool {
    let a = bott_cohomology(input).unwrap();
    let b = bott_cohomology(&input.serre_dual()).unwrap();
    let dim = input.grassmannian_dimension();
    match (outcome_pair(&a), outcome_pair(&b)) {
        (None, None) => true,
        (Some((i, d)), Some((j, e))) => i + j == dim && d == e,
        _ => false,
    }
}

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `O(d)` on `P^m` against the binomial counts.
pub fn line_bundle_cohomology(m: usize, d: i64) -> bool {
    let o = bott_cohomology(&BottInput::line_bundle(m, d).unwrap()).unwrap();
    let mi = m as i64;
    let want = if d >= 0 {
        Some((0, binomial(mi + d, mi)))
    } else if d < -mi {
        Some((m, binomial(-d - 1, mi)))
    } else {
        None
    };
    outcome_pair(&o) == want
}

/// `Ω^p(d)` on `P^m`: cohomology only in degree 0 for `d > p`, in degree `p`
/// for `d = 0`, in degree `m` for `d < p - m`, and nowhere else.
pub fn twisted_forms(m: usize, p: usize, d: i64) -> bool {
    let mut gamma = vec![0; m];
    for g in gamma.iter_mut().take(p) {
        *g = 1;
    }
    let input = BottInput::new(m + 1, 1, vec![d - p as i64], gamma).unwrap();
    let o = bott_cohomology(&input).unwrap();
    let (mi, pi) = (m as i64, p as i64);
    let want = if d > pi {
        Some((0, binomial(d + mi - pi, d) * binomial(d - 1, pi)))
    } else if d == 0 {
        Some((p, 1))
    } else if d < pi - mi {
        Some((m, binomial(-d + pi, -d) * binomial(-d - 1, mi - pi)))
    } else {
        None
    };
    outcome_pair(&o) == want
}

/// The expanded symmetroid agrees with a direct determinant at `point`.
pub fn det_matches_symmetroid(p: &Pencil, point: &[Q]) -> bool {
    let m = p.evaluate(&Rationals, point, |q| q.clone());
    symmetroid(p).unwrap().eval(point) == det(&Rationals, &m)
}

pub fn random_pencil(entries: &[i64], n: usize) -> Pencil {
    let mut it = entries.iter().cycle();
    let mut mats = Vec::new();
    for _ in 0..n {
        let mut m = vec![vec![rat(0); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rat(*it.next().unwrap());
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        mats.push(m);
    }
    Pencil::new(mats).unwrap()
}

/// Lines in general position (no two proportional, no three concurrent).
pub fn general_lines(lines: &[[i64; 3]]) -> bool {
    let q = |l: &[i64; 3]| l.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    for i in 0..lines.len() {
        if lines[i] == [0, 0, 0] {
            return false;
        }
        for j in i + 1..lines.len() {
            if rank(&Rationals, &[q(&lines[i]), q(&lines[j])]) < 2 {
                return false;
            }
            for k in j + 1..lines.len() {
                if rank(&Rationals, &[q(&lines[i]), q(&lines[j]), q(&lines[k])]) < 3 {
                    return false;
                }
            }
        }
    }
    true
}

pub fn product_of_lines(lines: &[[i64; 3]]) -> MPoly<Rationals> {
    lines.iter().fold(MPoly::one(&Rationals, 3), |acc, l| {
        acc.mul(&MPoly::linear(&Rationals, &l.map(rat)))
    })
}

/// For a union of general lines: `binom(d, 2)` geometric singular points, all
/// nodes, with `F` and its partials vanishing exactly; the count does not
/// depend on the variable order.
pub fn line_arrangement_singularities(lines: &[[i64; 3]]) -> bool {
    let c = product_of_lines(lines);
    let d = lines.len();
    let Ok(points) = singular_points(&c) else { return false };
    let count: usize = points.iter().map(|p| p.degree()).sum();
    let ok = count == d * (d - 1) / 2 && points.iter().all(|p| p.verify(&c) && p.classification.node);
    let Ok(other) = singular_points_with_order(&c, [2, 0, 1]) else {
        return false;
    };
    let other_count: usize = other.iter().map(|p| p.degree()).sum();
    ok && other_count == count
}
