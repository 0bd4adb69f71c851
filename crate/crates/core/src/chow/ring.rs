//! Ring descriptors and classes.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ChowError;
use crate::symfunc::{lr_coefficients_bounded, Partition, ShapeBound};

pub type RingRef = Arc<RingDescriptor>;

/// Which intersection ring a class lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum RingDescriptor {
    Point,
    /// `G(k, n)`: `k`-dimensional subspaces of an `n`-space. Schubert classes
    /// are indexed by partitions in the `k × (n-k)` box (at most `k` rows,
    /// parts at most `n-k`), with `σ_i = c_i(Q)`.
    Grassmannian {
        k: usize,
        n: usize,
    },
    /// `P(E)` = lines in `E` over `base`, generated by `H = c_1(O(1))` with
    /// `Σ_i c_i(E) H^{rank-i} = 0`. `chern[i]` is `c_i(E)` in the base ring.
    ProjBundle {
        base: RingRef,
        rank: usize,
        chern: Vec<RingClass>,
    },
}

impl RingDescriptor {
    pub fn dimension(&self) -> u32 {
        match self {
            RingDescriptor::Point => 0,
            RingDescriptor::Grassmannian { k, n } => (k * (n - k)) as u32,
            RingDescriptor::ProjBundle { base, rank, .. } => base.dimension() + *rank as u32 - 1,
        }
    }

    /// The Schubert box `(rows, cols)` of the Grassmannian part, `(0, 0)` for a point.
    pub fn schubert_box(&self) -> (usize, u32) {
        match self {
            RingDescriptor::Point => (0, 0),
            RingDescriptor::Grassmannian { k, n } => (*k, (n - k) as u32),
            RingDescriptor::ProjBundle { base, .. } => base.schubert_box(),
        }
    }

    pub fn bundle_rank(&self) -> Option<usize> {
        match self {
            RingDescriptor::ProjBundle { rank, .. } => Some(*rank),
            _ => None,
        }
    }

    pub fn base(&self) -> Option<&RingRef> {
        match self {
            RingDescriptor::ProjBundle { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Additive basis: Schubert partitions times `H`-powers below the rank.
    pub fn basis(&self) -> Vec<Monomial> {
        let (rows, cols) = self.schubert_box();
        let parts = Partition::all_in_box(rows, cols);
        let hmax = self.bundle_rank().unwrap_or(1) as u32;
        let mut out = Vec::new();
        for h in 0..hmax {
            for p in &parts {
                out.push(Monomial::new(p.clone(), h));
            }
        }
        out.sort_by_key(|m| m.degree());
        out
    }

    /// The point class monomial.
    pub fn top_monomial(&self) -> Monomial {
        let (rows, cols) = self.schubert_box();
        let h = self.bundle_rank().map_or(0, |r| r as u32 - 1);
        Monomial::new(Partition::rectangle(rows, cols), h)
    }
}

/// A basis element: a Schubert class (pulled back to the bundle) times `H^h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub partition: Partition,
    pub h: u32,
}

impl Monomial {
    pub fn new(partition: Partition, h: u32) -> Self {
        Self { partition, h }
    }

    pub fn degree(&self) -> u32 {
        self.partition.size() + self.h
    }
}

/// A rational linear combination of basis monomials of a fixed ring.
#[derive(Clone, Debug, PartialEq)]
pub struct RingClass {
    ring: RingRef,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn grassmann_ring(k: usize, n: usize) -> Result<RingRef, ChowError> {
    if k == 0 || k >= n || n > 12 {
        return Err(ChowError::BadDimensions { k, n });
    }
    Ok(Arc::new(RingDescriptor::Grassmannian { k, n }))
}

pub fn point_ring() -> RingRef {
    Arc::new(RingDescriptor::Point)
}

/// `P(E)` over `base` for a rank-`rank` bundle with total Chern class `total`.
pub fn proj_bundle_ring(base: &RingRef, total: &RingClass, rank: usize) -> Result<RingRef, ChowError> {
    if matches!(**base, RingDescriptor::ProjBundle { .. }) {
        return Err(ChowError::UnsupportedBase);
    }
    if rank == 0 {
        return Err(ChowError::BadChernClasses("rank must be positive".into()));
    }
    if !same_ring(total.ring(), base) {
        return Err(ChowError::RingMismatch);
    }
    let graded = total.graded_parts();
    let unit = RingClass::unit(base);
    if graded.first().is_none_or(|c0| *c0 != unit) {
        return Err(ChowError::BadChernClasses("degree-0 part must be 1".into()));
    }
    if graded.iter().skip(rank + 1).any(|c| !c.is_zero()) {
        return Err(ChowError::BadChernClasses(format!("classes above degree {rank}")));
    }
    let chern: Vec<RingClass> = (0..=rank)
        .map(|i| graded.get(i).cloned().unwrap_or_else(|| RingClass::zero(base)))
        .collect();
    Ok(Arc::new(RingDescriptor::ProjBundle {
        base: base.clone(),
        rank,
        chern,
    }))
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

type LrKey = (Partition, Partition, usize, u32);
type LrCache = Mutex<HashMap<LrKey, Arc<BTreeMap<Partition, u64>>>>;

fn lr_cache() -> &'static LrCache {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Box-truncated LR product, memoized across threads.
fn schubert_product(a: &Partition, b: &Partition, rows: usize, cols: u32) -> Arc<BTreeMap<Partition, u64>> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let key = (a.clone(), b.clone(), rows, cols);
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = Arc::new(lr_coefficients_bounded(a, b, Some(ShapeBound { rows, cols })));
    lr_cache().lock().unwrap().insert(key, value.clone());
    value
}

impl RingClass {
    pub fn zero(ring: &RingRef) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::monomial(ring, Monomial::new(Partition::empty(), 0), BigRational::one())
    }

    pub fn integer(ring: &RingRef, n: i64) -> Self {
        Self::unit(ring).scale(&BigRational::from_integer(BigInt::from(n)))
    }

    fn monomial(ring: &RingRef, m: Monomial, c: BigRational) -> Self {
        let mut out = Self::zero(ring);
        out.add_term(m, c);
        out
    }

    /// Builds a class from raw terms, reducing to normal form.
    pub fn from_terms(
        ring: &RingRef,
        terms: impl IntoIterator<Item = (Partition, u32, BigRational)>,
    ) -> Result<Self, ChowError> {
        let (rows, cols) = ring.schubert_box();
        let mut out = Self::zero(ring);
        for (p, h, c) in terms {
            if !p.fits_box(rows, cols) {
                return Err(ChowError::NotInBox(p));
            }
            if h > 0 && ring.bundle_rank().is_none() {
                return Err(ChowError::IndexOutOfRange);
            }
            out.add_term(Monomial::new(p, h), c);
        }
        Ok(out.normal_form())
    }

    /// `σ_λ`; zero is never returned silently: partitions outside the box error.
    pub fn schubert(ring: &RingRef, partition: &Partition) -> Result<Self, ChowError> {
        let (rows, cols) = ring.schubert_box();
        if !partition.fits_box(rows, cols) {
            return Err(ChowError::NotInBox(partition.clone()));
        }
        Ok(Self::monomial(
            ring,
            Monomial::new(partition.clone(), 0),
            BigRational::one(),
        ))
    }

    /// The tautological class `H` of a projective bundle.
    pub fn hyperplane(ring: &RingRef) -> Result<Self, ChowError> {
        match ring.bundle_rank() {
            None => Err(ChowError::RingMismatch),
            Some(r) => {
                let h = Self::monomial(ring, Monomial::new(Partition::empty(), 1), BigRational::one());
                Ok(if r == 1 { h.normal_form() } else { h })
            }
        }
    }

    /// Pullback of a base class to a projective bundle.
    pub fn pullback(ring: &RingRef, base_class: &RingClass) -> Result<Self, ChowError> {
        match ring.base() {
            Some(base) if same_ring(base, &base_class.ring) => {
                let mut out = Self::zero(ring);
                for (m, c) in &base_class.terms {
                    out.add_term(m.clone(), c.clone());
                }
                Ok(out)
            }
            _ => Err(ChowError::RingMismatch),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, partition: &Partition, h: u32) -> BigRational {
        self.terms
            .get(&Monomial::new(partition.clone(), h))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Codimension if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn graded_part(&self, d: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Graded pieces `0..=dim`.
    pub fn graded_parts(&self) -> Vec<Self> {
        (0..=self.ring.dimension()).map(|d| self.graded_part(d)).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChowError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ChowError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(s)))
    }

    fn check_ring(&self, other: &Self) -> Result<(), ChowError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(ChowError::RingMismatch)
        }
    }

    /// Ring product, reduced to normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self, ChowError> {
        self.check_ring(other)?;
        let (rows, cols) = self.ring.schubert_box();
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let h = ma.h + mb.h;
                let c = ca * cb;
                for (p, mult) in schubert_product(&ma.partition, &mb.partition, rows, cols).iter() {
                    out.add_term(
                        Monomial::new(p.clone(), h),
                        &c * BigRational::from_integer(BigInt::from(*mult)),
                    );
                }
            }
        }
        Ok(out.normal_form())
    }

    pub fn pow(&self, k: u32) -> Result<Self, ChowError> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Human-readable form such as `11*s2 + 6*s1_1 - 2*H`, highest degree first.
    pub fn to_expr(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            if !m.partition.is_empty() {
                let parts: Vec<String> = m.partition.parts().iter().map(u32::to_string).collect();
                factors.push(format!("s{}", parts.join("_")));
            }
            match m.h {
                0 => {}
                1 => factors.push("H".into()),
                h => factors.push(format!("H^{h}")),
            }
            let negative = c < &BigRational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if !mag.is_one() || factors.is_empty() {
                factors.insert(0, mag.to_string());
            }
            let body = factors.join("*");
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }

    /// Eliminates `H^h` for `h ≥ rank` using the bundle relation.
    pub(crate) fn normal_form(mut self) -> Self {
        let RingDescriptor::ProjBundle { rank, chern, .. } = &*self.ring.clone() else {
            return self;
        };
        let rank = *rank as u32;
        let (rows, cols) = self.ring.schubert_box();
        loop {
            let Some(top) = self.terms.keys().map(|m| m.h).max() else {
                return self;
            };
            if top < rank {
                return self;
            }
            let high: Vec<(Monomial, BigRational)> = self
                .terms
                .iter()
                .filter(|(m, _)| m.h == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (m, c) in high {
                self.terms.remove(&m);
                // H^top = -Σ_{i≥1} c_i H^{top-i}
                for (i, ci) in chern.iter().enumerate().skip(1) {
                    for (cm, cc) in &ci.terms {
                        for (p, mult) in schubert_product(&m.partition, &cm.partition, rows, cols).iter() {
                            let coeff = -(&c * cc) * BigRational::from_integer(BigInt::from(*mult));
                            self.add_term(Monomial::new(p.clone(), top - i as u32), coeff);
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn grassmannian_basis_sizes() {
        assert_eq!(grassmann_ring(3, 5).unwrap().basis().len(), 10);
        assert_eq!(grassmann_ring(2, 5).unwrap().basis().len(), 10);
        let p1 = grassmann_ring(1, 2).unwrap();
        let basis: Vec<Partition> = p1.basis().into_iter().map(|m| m.partition).collect();
        assert_eq!(basis, vec![Partition::empty(), p(&[1])]);
        assert!(matches!(grassmann_ring(0, 3), Err(ChowError::BadDimensions { .. })));
        assert!(matches!(grassmann_ring(3, 3), Err(ChowError::BadDimensions { .. })));
        assert!(matches!(grassmann_ring(2, 13), Err(ChowError::BadDimensions { .. })));
    }

    #[test]
    fn pieri_on_g35() {
        let g = grassmann_ring(3, 5).unwrap();
        let s1 = RingClass::schubert(&g, &p(&[1])).unwrap();
        let sq = s1.multiply(&s1).unwrap();
        let expected = RingClass::schubert(&g, &p(&[2]))
            .unwrap()
            .add(&RingClass::schubert(&g, &p(&[1, 1])).unwrap())
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = RingClass::unit(&grassmann_ring(2, 5).unwrap());
        let b = RingClass::unit(&grassmann_ring(3, 5).unwrap());
        assert_eq!(a.multiply(&b), Err(ChowError::RingMismatch));
    }

    #[test]
    fn relation_vanishes_in_bundle() {
        let base = grassmann_ring(1, 2).unwrap();
        let f = RingClass::schubert(&base, &p(&[1])).unwrap();
        let total = RingClass::unit(&base).sub(&f.scale_int(4)).unwrap();
        let ring = proj_bundle_ring(&base, &total, 3).unwrap();
        let h = RingClass::hyperplane(&ring).unwrap();
        let h3 = h.pow(3).unwrap();
        // H^3 = 4 f H^2
        let fh2 = RingClass::pullback(&ring, &f)
            .unwrap()
            .multiply(&h.pow(2).unwrap())
            .unwrap();
        assert_eq!(h3, fh2.scale_int(4));
    }

    #[test]
    fn bundle_validation() {
        let base = grassmann_ring(1, 2).unwrap();
        let f = RingClass::schubert(&base, &p(&[1])).unwrap();
        assert!(proj_bundle_ring(&base, &f, 2).is_err());
        let g = grassmann_ring(2, 4).unwrap();
        assert_eq!(
            proj_bundle_ring(&g, &RingClass::unit(&base), 2),
            Err(ChowError::RingMismatch)
        );
    }
}
