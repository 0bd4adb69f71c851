//! Coefficient rings.
//!
//! Elements do not carry their ring; every operation goes through a ring
//! context value. This keeps number-field and prime-field elements small and
//! lets polynomial code stay generic over the coefficient domain.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Ring: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_int(&self, n: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// The prime field of `p` elements, `p < 2^31` so products fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Returns `None` unless `p` is a prime below 2^31.
    pub fn new(p: u64) -> Option<Self> {
        (p < (1 << 31) && is_prime(p)).then_some(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    /// Image of a rational number; `None` if `p` divides the denominator.
    pub fn reduce_rational(&self, q: &BigRational) -> Option<u64> {
        let den = self.reduce_int(q.denom());
        let den_inv = self.inv(&den)?;
        Some(self.mul(&self.reduce_int(q.numer()), &den_inv))
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if (*a).is_multiple_of(self.p) {
            return None;
        }
        Some(self.pow(a, (self.p - 2) as u32))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses `"p/q"` or `"p"` with optional sign; rejects decimals and zero denominators.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub fn rational_to_string(q: &BigRational) -> String {
    q.to_string()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(q: &BigRational) -> bool {
    q.denom().is_one()
}

pub fn abs_rational(q: &BigRational) -> BigRational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-2/9"), Some(ratio(-2, 9)));
        assert_eq!(parse_rational("4/2"), Some(rat(2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(rational_to_string(&ratio(6, -4)), "-3/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(31).unwrap();
        for a in 1..31 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(PrimeField::new(33).is_none());
        assert_eq!(f.reduce_rational(&ratio(1, 2)), Some(16));
        assert_eq!(f.reduce_rational(&ratio(1, 62)), None);
    }
}
