use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::SymFuncError;

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so `(2,1,0)` and `(2,1)` compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, SymFuncError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymFuncError::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    /// Panics if `parts` is not weakly decreasing.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("weakly decreasing parts")
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(i)`.
    pub fn row(i: u32) -> Self {
        Self::from_slice(&[i])
    }

    /// The one-column partition `(1^i)`.
    pub fn column(i: u32) -> Self {
        Self(vec![1; i as usize])
    }

    /// The full `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Self::from_slice(&vec![cols; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Complement in the `rows × cols` box, rotated by 180 degrees.
    pub fn box_complement(&self, rows: usize, cols: u32) -> Option<Partition> {
        if !self.fits_box(rows, cols) {
            return None;
        }
        Some(Self::from_slice(
            &(0..rows).rev().map(|i| cols - self.part(i)).collect::<Vec<_>>(),
        ))
    }

    /// All partitions inside the `rows × cols` box, by size then reverse lex.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_slice(cur));
            if cur.len() == rows {
                return;
            }
            for v in 1..=max {
                cur.push(v);
                rec(rows, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }

    /// All partitions of `n`.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        Self::all_in_box(n as usize, n)
            .into_iter()
            .filter(|p| p.size() == n)
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = SymFuncError;

    fn try_from(v: Vec<u32>) -> Result<Self, SymFuncError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An integer weight for `GL(n)`, e.g. the concatenation of two dominant blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        Self(entries.into())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Dimension of the irreducible `GL(n)` representation with highest weight
/// `w` (padded with zeros to length `n`), by the Weyl product formula.
///
/// For a non-dominant `w` the formula is still evaluated and may be zero or
/// negative.
pub fn weyl_dimension_signed(w: &Weight, n: usize) -> BigInt {
    assert!(w.0.len() <= n, "weight longer than n");
    let mut e = w.0.clone();
    e.resize(n, 0);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(e[i] - e[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = BigRational::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Dimension of `Σ^w ℂ^n` for a dominant weight `w`.
pub fn weyl_dimension(w: &Weight, n: usize) -> u64 {
    let d = weyl_dimension_signed(w, n);
    debug_assert!(!d.is_negative());
    d.to_u64().expect("dimension fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_rejects() {
        assert_eq!(
            Partition::new(vec![2, 1, 0, 0]).unwrap(),
            Partition::from_slice(&[2, 1])
        );
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(Vec::<u32>::new()).unwrap().is_empty());
    }

    #[test]
    fn box_enumeration_counts_binomials() {
        assert_eq!(Partition::all_in_box(3, 2).len(), 10);
        assert_eq!(Partition::all_in_box(2, 3).len(), 10);
        assert_eq!(Partition::all_in_box(1, 1), vec![Partition::empty(), Partition::row(1)]);
        assert_eq!(Partition::all_in_box(3, 3).len(), 20);
    }

    #[test]
    fn conjugate_and_complement() {
        let p = Partition::from_slice(&[3, 1]);
        assert_eq!(p.conjugate(), Partition::from_slice(&[2, 1, 1]));
        assert_eq!(p.box_complement(2, 3), Some(Partition::from_slice(&[2])));
        assert_eq!(
            Partition::from_slice(&[2, 1]).box_complement(3, 2),
            Some(Partition::from_slice(&[2, 1]))
        );
    }

    #[test]
    fn weyl_dimensions_of_small_representations() {
        assert_eq!(weyl_dimension(&Weight::new(vec![1]), 5), 5);
        assert_eq!(weyl_dimension(&Weight::new(vec![1, 1]), 5), 10);
        assert_eq!(weyl_dimension(&Weight::new(vec![2]), 5), 15);
        assert_eq!(weyl_dimension(&Weight::new(vec![0]), 4), 1);
        assert_eq!(weyl_dimension(&Weight::new(vec![-1, -2, -2]), 3), 3);
    }
}
