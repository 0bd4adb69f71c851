//! Universal Chern-class polynomials via the splitting principle.
//!
//! A bundle construction is described by its formal Chern roots, written as
//! linear forms in the roots of the input bundles. The total Chern class is
//! the product `Π(1 + root)`, which is block-symmetric and is rewritten in
//! elementary symmetric polynomials, i.e. in the Chern classes of the inputs.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::SymFuncError;
use crate::algebra::ring::{rat, Rationals};
use crate::algebra::MPoly;

type QPoly = MPoly<Rationals>;

/// Elementary symmetric polynomial `e_k` in the variables `vars` of an
/// `nvars`-variable ring.
pub fn elementary(nvars: usize, vars: &[usize], k: usize) -> QPoly {
    let mut acc = QPoly::zero(&Rationals, nvars);
    if k > vars.len() {
        return acc;
    }
    fn rec(start: usize, k: usize, vars: &[usize], cur: &mut Vec<u32>, acc: &mut QPoly) {
        if k == 0 {
            acc.add_term(cur.clone(), rat(1));
            return;
        }
        for i in start..vars.len() {
            cur[vars[i]] += 1;
            rec(i + 1, k - 1, vars, cur, acc);
            cur[vars[i]] -= 1;
        }
    }
    rec(0, k, vars, &mut vec![0; nvars], &mut acc);
    acc
}

fn block_vars(blocks: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    blocks
        .iter()
        .map(|&r| {
            let v: Vec<usize> = (start..start + r).collect();
            start += r;
            v
        })
        .collect()
}

fn is_block_symmetric(expr: &QPoly, blocks: &[usize]) -> bool {
    let n = expr.nvars();
    for vars in block_vars(blocks) {
        if vars.len() < 2 {
            continue;
        }
        // A transposition and a full cycle generate the symmetric group.
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(vars[0], vars[1]);
        let mut cycle: Vec<usize> = (0..n).collect();
        for (j, &v) in vars.iter().enumerate() {
            cycle[v] = vars[(j + 1) % vars.len()];
        }
        if expr.permute_vars(&swap) != *expr || expr.permute_vars(&cycle) != *expr {
            return false;
        }
    }
    true
}

/// Rewrites a polynomial symmetric in each block of root variables as a
/// polynomial in the elementary symmetric polynomials of the blocks.
///
/// Variable `j` of the result, for `j` the `i`-th variable (0-based) of
/// block `b`, stands for `e_{i+1}` of block `b`.
pub fn roots_to_e_basis_blocks(expr: &QPoly, blocks: &[usize]) -> Result<QPoly, SymFuncError> {
    let n = expr.nvars();
    assert_eq!(blocks.iter().sum::<usize>(), n, "blocks must cover all variables");
    if !is_block_symmetric(expr, blocks) {
        return Err(SymFuncError::NotSymmetric);
    }
    let groups = block_vars(blocks);
    let elem: Vec<Vec<QPoly>> = groups
        .iter()
        .map(|vars| (1..=vars.len()).map(|k| elementary(n, vars, k)).collect())
        .collect();
    let mut rest = expr.clone();
    let mut out = QPoly::zero(&Rationals, n);
    while let Some((lead, c)) = rest.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
        let mut e_exp = vec![0u32; n];
        let mut expansion = QPoly::one(&Rationals, n);
        for (b, vars) in groups.iter().enumerate() {
            for (i, &v) in vars.iter().enumerate() {
                let next = vars.get(i + 1).map_or(0, |&w| lead[w]);
                if lead[v] < next {
                    return Err(SymFuncError::NotSymmetric);
                }
                let k = lead[v] - next;
                e_exp[v] = k;
                if k > 0 {
                    expansion = expansion.mul(&elem[b][i].pow(k));
                }
            }
        }
        out.add_term(e_exp, c.clone());
        rest = rest.sub(&expansion.scale(&c));
    }
    Ok(out)
}

/// Single-alphabet form of [`roots_to_e_basis_blocks`].
pub fn roots_to_e_basis(expr: &QPoly) -> Result<QPoly, SymFuncError> {
    roots_to_e_basis_blocks(expr, &[expr.nvars()])
}

/// Substitutes elementary symmetric polynomials of the root blocks for the
/// e-variables: the inverse of [`roots_to_e_basis_blocks`].
pub fn e_basis_to_roots(e_poly: &QPoly, blocks: &[usize]) -> QPoly {
    let n = e_poly.nvars();
    let mut images = Vec::with_capacity(n);
    for vars in block_vars(blocks) {
        for k in 1..=vars.len() {
            images.push(elementary(n, &vars, k));
        }
    }
    e_poly.substitute(&images)
}

/// A graded polynomial in abstract Chern classes `c_{a,1..r_a}` of one or more
/// bundles ("alphabets"), with `deg c_{a,i} = i`, truncated at a working degree.
#[derive(Clone, PartialEq)]
pub struct ChernSeries {
    ranks: Vec<usize>,
    names: Vec<String>,
    poly: QPoly,
    truncation: u32,
}

impl ChernSeries {
    /// Alphabet names default to `c`, `d`, `e`, …
    pub fn new(ranks: Vec<usize>, poly: QPoly, truncation: u32) -> Self {
        let names = (0..ranks.len())
            .map(|a| ((b'c' + a as u8) as char).to_string())
            .collect();
        Self::with_names(ranks, names, poly, truncation)
    }

    pub fn with_names(ranks: Vec<usize>, names: Vec<String>, poly: QPoly, truncation: u32) -> Self {
        assert_eq!(ranks.iter().sum::<usize>(), poly.nvars());
        assert_eq!(ranks.len(), names.len());
        let weights = weights_for(&ranks);
        let poly = poly.truncate(&weights, truncation);
        Self {
            ranks,
            names,
            poly,
            truncation,
        }
    }

    /// The total Chern class `1 + c_1 + … + c_r` of a generic bundle of rank `r`.
    pub fn generic(rank: usize, truncation: u32) -> Self {
        let mut p = QPoly::one(&Rationals, rank);
        for i in 0..rank {
            p = p.add(&QPoly::var(&Rationals, rank, i));
        }
        Self::new(vec![rank], p, truncation)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn weights(&self) -> Vec<u32> {
        weights_for(&self.ranks)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Index of the variable `c_{alphabet, i}` (`i ≥ 1`).
    pub fn var_index(&self, alphabet: usize, i: usize) -> usize {
        assert!(i >= 1 && i <= self.ranks[alphabet]);
        self.ranks[..alphabet].iter().sum::<usize>() + i - 1
    }

    /// The monomial `Π c_{a,i}^k` as a polynomial in this series' variables.
    pub fn monomial(&self, factors: &[(usize, usize, u32)]) -> QPoly {
        let mut e = vec![0; self.nvars()];
        for &(a, i, k) in factors {
            e[self.var_index(a, i)] += k;
        }
        QPoly::monomial(&Rationals, e, rat(1))
    }

    /// Coefficient of `Π c_{a,i}^k`.
    pub fn coefficient(&self, factors: &[(usize, usize, u32)]) -> BigRational {
        let m = self.monomial(factors);
        let (e, _) = m.leading_term().unwrap();
        self.poly.coeff(e)
    }

    /// Graded piece of degree `k`, as a polynomial.
    pub fn component(&self, k: u32) -> QPoly {
        self.poly.graded_part(&self.weights(), k)
    }

    pub fn constant_term(&self) -> BigRational {
        self.poly.coeff(&vec![0; self.nvars()])
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ranks, other.ranks);
        let t = self.truncation.min(other.truncation);
        let poly = self.poly.mul_truncated(&other.poly, &self.weights(), t);
        Self::with_names(self.ranks.clone(), self.names.clone(), poly, t)
    }

    /// Chern classes of the dual bundle: `c_i ↦ (-1)^i c_i` in every alphabet.
    pub fn dual(&self) -> Self {
        let w = self.weights();
        let mut out = QPoly::zero(&Rationals, self.nvars());
        for (e, c) in self.poly.terms() {
            let deg = QPoly::weighted_degree(e, &w);
            out.add_term(e.clone(), if deg.is_multiple_of(2) { c.clone() } else { -c.clone() });
        }
        Self::with_names(self.ranks.clone(), self.names.clone(), out, self.truncation)
    }

    fn var_names(&self) -> Vec<String> {
        let mut v = Vec::new();
        for (a, &r) in self.ranks.iter().enumerate() {
            for i in 1..=r {
                v.push(format!("{}{}", self.names[a], i));
            }
        }
        v
    }

    /// `k`-th graded component rendered with alphabet names, e.g. `5*c1^2 + 5*c2`.
    pub fn display_component(&self, k: u32) -> String {
        let names = self.var_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.component(k).display_with(&refs)
    }
}

fn weights_for(ranks: &[usize]) -> Vec<u32> {
    ranks.iter().flat_map(|&r| 1..=r as u32).collect()
}

impl fmt::Debug for ChernSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..=self.truncation)
            .map(|k| format!("[{k}] {}", self.display_component(k)))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Total Chern class of the bundle with the given formal roots, each a
/// linear form in the concatenated root variables of the input alphabets.
pub fn chern_from_roots(ranks: &[usize], roots: &[QPoly], truncation: u32) -> Result<ChernSeries, SymFuncError> {
    let n: usize = ranks.iter().sum();
    let ones = vec![1; n];
    let mut total = QPoly::one(&Rationals, n);
    for root in roots {
        let factor = QPoly::one(&Rationals, n).add(root);
        total = total.mul_truncated(&factor, &ones, truncation);
    }
    let e = roots_to_e_basis_blocks(&total, ranks)?;
    Ok(ChernSeries::new(ranks.to_vec(), e, truncation))
}

fn root_vars(n: usize) -> Vec<QPoly> {
    (0..n).map(|i| QPoly::var(&Rationals, n, i)).collect()
}

/// `c(Sym² E)` for `E` of rank `r`, from the roots `x_i + x_j`, `i ≤ j`.
pub fn chern_sym2(r: usize) -> ChernSeries {
    let x = root_vars(r);
    let mut roots = Vec::new();
    for i in 0..r {
        for j in i..r {
            roots.push(x[i].add(&x[j]));
        }
    }
    chern_from_roots(&[r], &roots, roots.len() as u32).expect("symmetric by construction")
}

/// `c(Λ² E)` from the roots `x_i + x_j`, `i < j`.
pub fn chern_wedge2(r: usize) -> ChernSeries {
    let x = root_vars(r);
    let mut roots = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            roots.push(x[i].add(&x[j]));
        }
    }
    chern_from_roots(&[r], &roots, roots.len() as u32).expect("symmetric by construction")
}

/// `c(E ⊗ F)` in the alphabets `c` (of `E`, rank `r1`) and `d` (of `F`, rank `r2`).
pub fn chern_tensor(r1: usize, r2: usize) -> ChernSeries {
    let x = root_vars(r1 + r2);
    let mut roots = Vec::new();
    for i in 0..r1 {
        for j in 0..r2 {
            roots.push(x[i].add(&x[r1 + j]));
        }
    }
    chern_from_roots(&[r1, r2], &roots, (r1 * r2) as u32).expect("symmetric by construction")
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `c(E ⊗ L)` for `E` of rank `r` and a line bundle with class `t`:
/// `c_k(E⊗L) = Σ_i binom(r-i, k-i) c_i(E) t^{k-i}`.
pub fn chern_twist(r: usize) -> ChernSeries {
    let n = r + 1;
    let t_idx = r;
    let mut poly = QPoly::zero(&Rationals, n);
    for k in 0..=r {
        for i in 0..=k {
            let b = binomial((r - i) as u64, (k - i) as u64);
            if b == 0 {
                continue;
            }
            let mut e = vec![0; n];
            if i > 0 {
                e[i - 1] = 1;
            }
            e[t_idx] = (k - i) as u32;
            poly.add_term(e, rat(b as i64));
        }
    }
    ChernSeries::with_names(vec![r, 1], vec!["c".into(), "t".into()], poly, r as u32)
}

/// Formal inverse `s = c^{-1}` truncated at degree `d`, so `s_1 = -c_1`,
/// `s_2 = c_1² - c_2`, …
pub fn segre_from_chern(c: &ChernSeries, d: u32) -> Result<ChernSeries, SymFuncError> {
    if !c.constant_term().is_one() {
        return Err(SymFuncError::NonUnitConstant);
    }
    let w = c.weights();
    let n = c.nvars();
    let mut s: Vec<QPoly> = vec![QPoly::one(&Rationals, n)];
    for k in 1..=d {
        let mut acc = QPoly::zero(&Rationals, n);
        for i in 1..=k {
            let ci = c.poly().graded_part(&w, i);
            if ci.is_zero() {
                continue;
            }
            acc = acc.sub(&ci.mul(&s[(k - i) as usize]));
        }
        s.push(acc);
    }
    let total = s.into_iter().fold(QPoly::zero(&Rationals, n), |a, b| a.add(&b));
    Ok(ChernSeries::with_names(c.ranks.clone(), c.names.clone(), total, d))
}

/// Whether the series is zero in every positive degree up to its truncation.
pub fn is_unit(c: &ChernSeries) -> bool {
    c.constant_term().is_one() && (1..=c.truncation()).all(|k| c.component(k).is_zero())
}
