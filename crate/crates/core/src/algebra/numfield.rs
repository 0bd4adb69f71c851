//! Simple algebraic extensions ℚ[α]/(m).

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::is_irreducible;
use super::linalg::kernel;
use super::ring::{Field, Rationals, Ring};
use super::upoly::UPoly;

#[derive(Debug, Error, PartialEq)]
pub enum NumberFieldError {
    #[error("defining polynomial {0} is not irreducible over Q")]
    Reducible(String),
}

/// The field ℚ[α]/(m) for an irreducible `m`; elements are coefficient
/// vectors in the power basis `1, α, …, α^{d-1}`.
#[derive(Clone)]
pub struct NumberField {
    modulus: Arc<UPoly<Rationals>>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[a]/({})", self.modulus.display_with("a"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NfElem(pub Vec<BigRational>);

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_nf(&self.0))
    }
}

fn format_nf(c: &[BigRational]) -> String {
    let p = UPoly::new(&Rationals, c.to_vec());
    if p.degree().unwrap_or(0) == 0 {
        return p.display_with("a");
    }
    format!("({})", p.display_with("a"))
}

impl NumberField {
    /// Certifies irreducibility by exact factorization.
    pub fn new(minpoly: &UPoly<Rationals>) -> Result<Self, NumberFieldError> {
        if !is_irreducible(minpoly) {
            return Err(NumberFieldError::Reducible(minpoly.display_with("x")));
        }
        Ok(Self {
            modulus: Arc::new(minpoly.monic()),
        })
    }

    /// The field ℚ itself, as a degree-one extension.
    pub fn rationals() -> Self {
        Self {
            modulus: Arc::new(UPoly::x(&Rationals)),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Monic defining polynomial.
    pub fn modulus(&self) -> &UPoly<Rationals> {
        &self.modulus
    }

    pub fn generator(&self) -> NfElem {
        self.reduce(&UPoly::x(&Rationals))
    }

    pub fn from_rational(&self, q: &BigRational) -> NfElem {
        self.reduce(&UPoly::constant(&Rationals, q.clone()))
    }

    pub fn reduce(&self, p: &UPoly<Rationals>) -> NfElem {
        let r = p.rem(&self.modulus);
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), BigRational::zero());
        NfElem(c)
    }

    pub fn to_poly(&self, a: &NfElem) -> UPoly<Rationals> {
        UPoly::new(&Rationals, a.0.clone())
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn as_rational(&self, a: &NfElem) -> Option<BigRational> {
        a.0.iter().skip(1).all(Zero::is_zero).then(|| a.0[0].clone())
    }

    /// Minimal polynomial over ℚ (monic), from the first linear relation
    /// among `1, a, a², …`.
    pub fn minimal_polynomial(&self, a: &NfElem) -> UPoly<Rationals> {
        let d = self.degree();
        let mut powers = vec![self.one()];
        for k in 1..=d {
            powers.push(self.mul(&powers[k - 1], a));
            let m: Vec<Vec<BigRational>> = (0..d)
                .map(|row| powers.iter().map(|p| p.0[row].clone()).collect())
                .collect();
            let ker = kernel(&Rationals, &m, k + 1);
            if let Some(v) = ker.first() {
                return UPoly::new(&Rationals, v.clone()).monic();
            }
        }
        unreachable!("degree bound for minimal polynomial")
    }
}

impl Ring for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem(vec![BigRational::zero(); self.degree()])
    }
    fn one(&self) -> NfElem {
        self.from_rational(&BigRational::one())
    }
    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(a.0.iter().map(|x| -x).collect())
    }
    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }
    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.reduce(&self.to_poly(a).mul(&self.to_poly(b)))
    }
    fn is_zero(&self, a: &NfElem) -> bool {
        a.0.iter().all(Zero::is_zero)
    }
    fn from_int(&self, n: i64) -> NfElem {
        self.from_rational(&Rationals.from_int(n))
    }
    fn format_elem(&self, a: &NfElem) -> String {
        format_nf(&a.0)
    }
}

impl Field for NumberField {
    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s, _) = self.to_poly(a).ext_gcd(&self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.reduce(&s))
    }
}
