//! Dense univariate polynomials over a field.

use std::fmt;

use super::ring::Field;

/// Coefficients stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct UPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, vec![])
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// The polynomial `x`.
    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(&self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.field.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(&self.field, c)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| self.field.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = self.field.add(&c[i + j], &self.field.mul(a, b));
            }
        }
        Self::new(&self.field, c)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
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

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = self.field.inv(d.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = self.field.mul(&rem[i + dd], &lead_inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = self.field.sub(&rem[i + j], &self.field.mul(&c, dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(&self.field, quot), Self::new(&self.field, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = f.inv(&l).unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_int(i as i64)))
            .collect();
        Self::new(&self.field, c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(&self.field, c.clone()));
        }
        acc
    }

    /// `base^e mod m` by repeated squaring.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Squarefree decomposition in characteristic zero: pairs `(g_i, i)` of
    /// monic, pairwise coprime factors with `self = lc · Π g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        // Yun's algorithm.
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = self.field.format_elem(c);
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<F: Field> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{rat, PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(c: &[i64]) -> UPoly<Rationals> {
        UPoly::new(&Rationals, c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = q(&[-1, 0, 1]); // x^2 - 1
        let b = q(&[1, 1]); // x + 1
        let (quot, r) = a.div_rem(&b);
        assert_eq!(quot, q(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&q(&[-1, 1]).mul(&q(&[2, 1]))), q(&[-1, 1]));
    }

    #[test]
    fn ext_gcd_identity() {
        let a = q(&[1, 0, 1]);
        let b = q(&[2, 3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, q(&[1]));
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2)^3 (x^2+1)
        let f = q(&[-1, 1]).pow(2).mul(&q(&[2, 1]).pow(3)).mul(&q(&[1, 0, 1]));
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(q(&[1, 0, 1]), 1), (q(&[-1, 1]), 2), (q(&[2, 1]), 3)]);
        assert!(!f.is_squarefree());
        let _: BigRational = f.eval(&rat(0));
    }

    #[test]
    fn pow_mod_fermat() {
        let f = PrimeField::new(7).unwrap();
        let m = UPoly::new(&f, vec![1, 0, 0, 1]);
        let x = UPoly::x(&f);
        let a = x.pow_mod(7, &m);
        let b = x.pow(7).rem(&m);
        assert_eq!(a, b);
    }
}
