//! Integration, pushforward and Chern-class builders.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{RingClass, RingDescriptor, RingRef};
use super::ChowError;
use crate::symfunc::{chern_tensor, chern_twist, ChernSeries, Partition};

/// Degree of the zero-cycle part: the coefficient of the point class.
pub fn integrate(a: &RingClass) -> Result<BigRational, ChowError> {
    let dim = a.ring().dimension();
    if a.terms().any(|(m, _)| m.degree() != dim) {
        return Err(ChowError::NotTopDegree);
    }
    let top = a.ring().top_monomial();
    Ok(a.coeff(&top.partition, top.h))
}

/// As [`integrate`], insisting on an integer answer.
pub fn integrate_integer(a: &RingClass) -> Result<BigInt, ChowError> {
    let q = integrate(a)?;
    if !q.is_integer() {
        return Err(ChowError::NonIntegral(q.to_string()));
    }
    Ok(q.to_integer())
}

/// `π_*` from a projective bundle to its base: the coefficient of `H^{r-1}`
/// in normal form.
pub fn pushforward_to_base(a: &RingClass) -> Result<RingClass, ChowError> {
    let RingDescriptor::ProjBundle { base, rank, .. } = &**a.ring() else {
        return Err(ChowError::RingMismatch);
    };
    let top = *rank as u32 - 1;
    let terms: Vec<(Partition, u32, BigRational)> = a
        .terms()
        .filter(|(m, _)| m.h == top)
        .map(|(m, c)| (m.partition.clone(), 0, c.clone()))
        .collect();
    RingClass::from_terms(base, terms)
}

/// Bundles with tautological Chern classes on a Grassmannian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tautological {
    /// Dual of the universal subbundle, rank `k`: `c_i = σ_{1^i}`.
    SubDual,
    /// Universal quotient, rank `n-k`: `c_i = σ_i`.
    Quot,
}

fn grassmannian_of(ring: &RingRef) -> Result<(usize, usize), ChowError> {
    match &**ring {
        RingDescriptor::Grassmannian { k, n } => Ok((*k, *n)),
        RingDescriptor::ProjBundle { base, .. } => grassmannian_of(base),
        RingDescriptor::Point => Err(ChowError::RingMismatch),
    }
}

/// `c_i` of a tautological bundle (pulled back when `ring` is a bundle over
/// a Grassmannian).
pub fn taut_chern(ring: &RingRef, which: Tautological, i: usize) -> Result<RingClass, ChowError> {
    let (k, n) = grassmannian_of(ring)?;
    let rank = match which {
        Tautological::SubDual => k,
        Tautological::Quot => n - k,
    };
    if i > rank {
        return Err(ChowError::IndexOutOfRange);
    }
    let p = match which {
        Tautological::SubDual => Partition::column(i as u32),
        Tautological::Quot => Partition::row(i as u32),
    };
    RingClass::schubert(ring, &p)
}

/// `[c_0, …, c_rank]` of a tautological bundle.
pub fn taut_total(ring: &RingRef, which: Tautological) -> Result<Vec<RingClass>, ChowError> {
    let (k, n) = grassmannian_of(ring)?;
    let rank = match which {
        Tautological::SubDual => k,
        Tautological::Quot => n - k,
    };
    (0..=rank).map(|i| taut_chern(ring, which, i)).collect()
}

/// Evaluates a Chern series in a ring, substituting `assignments[j]` for the
/// series variable `j` (alphabets concatenated, `c_{a,1..r_a}` in order).
pub fn evaluate_series(
    series: &ChernSeries,
    ring: &RingRef,
    assignments: &[RingClass],
) -> Result<RingClass, ChowError> {
    assert_eq!(assignments.len(), series.nvars(), "one class per series variable");
    let mut out = RingClass::zero(ring);
    for (e, c) in series.poly().terms() {
        let mut t = RingClass::unit(ring).scale(c);
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.multiply(&assignments[j].pow(k)?)?;
            }
        }
        out = out.add(&t)?;
    }
    Ok(out)
}

/// Inverse of a total class with unit constant term, up to the ring dimension.
pub fn inverse_total(c: &RingClass) -> Result<RingClass, ChowError> {
    let ring = c.ring().clone();
    let parts = c.graded_parts();
    if parts[0] != RingClass::unit(&ring) {
        return Err(ChowError::BadChernClasses("degree-0 part must be 1".into()));
    }
    let dim = ring.dimension() as usize;
    let mut s = vec![RingClass::unit(&ring)];
    for k in 1..=dim {
        let mut acc = RingClass::zero(&ring);
        for i in 1..=k {
            if parts[i].is_zero() {
                continue;
            }
            acc = acc.sub(&parts[i].multiply(&s[k - i])?)?;
        }
        s.push(acc);
    }
    s.iter().try_fold(RingClass::zero(&ring), |a, b| a.add(b))
}

/// `c(E^*)` from `c(E)`: degree-`i` parts change sign for odd `i`.
pub fn dual_total(c: &RingClass) -> Result<RingClass, ChowError> {
    c.graded_parts()
        .iter()
        .enumerate()
        .try_fold(RingClass::zero(c.ring()), |acc, (i, part)| {
            acc.add(&if i % 2 == 1 { part.neg() } else { part.clone() })
        })
}

/// Sum of a list of classes.
pub fn total(classes: &[RingClass], ring: &RingRef) -> Result<RingClass, ChowError> {
    classes.iter().try_fold(RingClass::zero(ring), |a, b| a.add(b))
}

/// `c(T_G) = c(S^* ⊗ Q)` on a Grassmannian, as graded pieces `0..=dim`.
pub fn grassmann_tangent_chern(ring: &RingRef) -> Result<Vec<RingClass>, ChowError> {
    let (k, n) = match &**ring {
        RingDescriptor::Grassmannian { k, n } => (*k, *n),
        _ => return Err(ChowError::RingMismatch),
    };
    let series = chern_tensor(k, n - k);
    let mut vars = Vec::new();
    vars.extend(taut_total(ring, Tautological::SubDual)?.into_iter().skip(1));
    vars.extend(taut_total(ring, Tautological::Quot)?.into_iter().skip(1));
    Ok(evaluate_series(&series, ring, &vars)?.graded_parts())
}

/// `c(T_{P(E)/B})` from `0 → O → π^*E ⊗ O(H) → T → 0`, as pieces `0..=rank-1`.
pub fn relative_tangent_chern(ring: &RingRef) -> Result<Vec<RingClass>, ChowError> {
    let RingDescriptor::ProjBundle { rank, chern, .. } = &**ring else {
        return Err(ChowError::RingMismatch);
    };
    let series = chern_twist(*rank);
    let mut vars = Vec::new();
    for c in chern.iter().skip(1) {
        vars.push(RingClass::pullback(ring, c)?);
    }
    vars.push(RingClass::hyperplane(ring)?);
    let c = evaluate_series(&series, ring, &vars)?;
    Ok((0..*rank as u32).map(|d| c.graded_part(d)).collect())
}

/// Total Chern class of the whole space `P(E)`: relative part times the
/// pulled-back tangent class of a Grassmannian (or point) base.
pub fn bundle_tangent_total(ring: &RingRef) -> Result<RingClass, ChowError> {
    let RingDescriptor::ProjBundle { base, .. } = &**ring else {
        return Err(ChowError::RingMismatch);
    };
    let rel = total(&relative_tangent_chern(ring)?, ring)?;
    let base_total = match &**base {
        RingDescriptor::Point => RingClass::unit(base),
        _ => total(&grassmann_tangent_chern(base)?, base)?,
    };
    rel.multiply(&RingClass::pullback(ring, &base_total)?)
}
