//! Sparse multivariate polynomials over an arbitrary [`Ring`].

use std::collections::BTreeMap;
use std::fmt;

use super::ring::Ring;

pub type Exponent = Vec<u32>;

/// A sparse polynomial: exponent vector to nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct MPoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Exponent, R::Elem>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(ring: &R, nvars: usize) -> Self {
        Self {
            ring: ring.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(ring: &R, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn var(ring: &R, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(ring, e, ring.one())
    }

    pub fn monomial(ring: &R, exp: Exponent, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, exp.len());
        p.add_term(exp, c);
        p
    }

    /// `Σ coeffs[i] x_i`.
    pub fn linear(ring: &R, coeffs: &[R::Elem]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(ring, n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(ring: &R, nvars: usize, terms: impl IntoIterator<Item = (Exponent, R::Elem)>) -> Self {
        let mut p = Self::zero(ring, nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> R::Elem {
        self.terms.get(exp).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &R::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exp: Exponent, c: R::Elem) {
        debug_assert_eq!(exp.len(), self.nvars);
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn weighted_degree(exp: &[u32], weights: &[u32]) -> u32 {
        exp.iter().zip(weights).map(|(a, w)| a * w).sum()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|c| self.ring.neg(c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(c, s));
        }
        out
    }

    fn map_terms(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only monomials of weighted degree at most `max`.
    pub fn mul_truncated(&self, other: &Self, weights: &[u32], max: u32) -> Self {
        self.mul_filtered(other, |e| Self::weighted_degree(e, weights) <= max)
    }

    fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(&self.ring, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if keep(&e) {
                    out.add_term(e, self.ring.mul(ca, cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Part of weighted degree exactly `deg`.
    pub fn graded_part(&self, weights: &[u32], deg: u32) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            if Self::weighted_degree(e, weights) == deg {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn truncate(&self, weights: &[u32], max: u32) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            if Self::weighted_degree(e, weights) <= max {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, self.ring.mul(c, &self.ring.from_int(e[var] as i64)));
        }
        out
    }

    pub fn eval(&self, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.ring.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = self.ring.mul(&t, &self.ring.pow(x, k));
                }
            }
            acc = self.ring.add(&acc, &t);
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; images share a ring and variable count.
    pub fn substitute(&self, images: &[MPoly<R>]) -> MPoly<R> {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map_or(0, |p| p.nvars);
        let mut cache: Vec<Vec<MPoly<R>>> = images
            .iter()
            .map(|p| vec![MPoly::one(&self.ring, target_vars), p.clone()])
            .collect();
        let mut out = MPoly::zero(&self.ring, target_vars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(&self.ring, target_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][k as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Moves coefficients into another ring through `f`.
    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> MPoly<S> {
        let mut out = MPoly::zero(target, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Reorders variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                f[perm[i]] = k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Renders with the given variable names, highest degree first.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut items: Vec<(&Exponent, &R::Elem)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut s = String::new();
        for (idx, (e, c)) in items.into_iter().enumerate() {
            let mut coeff = self.ring.format_elem(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if idx == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&coeff);
            } else {
                if coeff != "1" {
                    let wrap = coeff.contains(['+', ' ']) || (coeff.contains('-') && !coeff.starts_with('-'));
                    if wrap {
                        s.push_str(&format!("({coeff})*"));
                    } else {
                        s.push_str(&coeff);
                        s.push('*');
                    }
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}
